from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_quasi


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="quasiposterior",
        commands=[
            CommandSpec(
                name="quasi",
                help="EL-/ET-Quasi-Posteriors und Konventions-Offsets n·log n bzw. log n",
                handler=run_quasi,
            ),
        ],
    )
