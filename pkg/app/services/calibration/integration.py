from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_calibrate


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="calibration",
        commands=[
            CommandSpec(
                name="calibrate",
                help="Lernrate η per Informationsabgleich (Ĵ/Î) oder SafeBayes-Gittersuche",
                handler=run_calibrate,
            ),
        ],
    )
