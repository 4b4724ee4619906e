from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_diagnose


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="bayesianity",
        commands=[
            CommandSpec(
                name="diagnose",
                help="x-Normierungsdiagnose: Belief- oder Decision-Posterior; optional Likelihood extrahieren",
                handler=run_diagnose,
            ),
        ],
    )
