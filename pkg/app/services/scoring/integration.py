from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_score


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="scoring",
        commands=[
            CommandSpec(
                name="score",
                help="Präquentielle Log-Scores und CRPS der induzierten Prädiktiven, ΔLPD",
                handler=run_score,
            ),
        ],
    )
