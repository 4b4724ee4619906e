from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_additivity, run_variational, run_vnm


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="variational",
        commands=[
            CommandSpec(
                name="variational",
                help="Penalized objective über dem Simplex lösen und mit dem Gibbs-Posterior vergleichen",
                handler=run_variational,
            ),
            CommandSpec(
                name="additivity",
                help="Produkt-Additivität von f-Divergenzen prüfen",
                handler=run_additivity,
            ),
            CommandSpec(
                name="vnm",
                help="Lineare Erwartungsnutzen-Regeln: Punktmassen auf der Argmax-Menge",
                handler=run_vnm,
            ),
        ],
    )
