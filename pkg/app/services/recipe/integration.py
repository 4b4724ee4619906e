from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_recipe


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="recipe",
        commands=[
            CommandSpec(
                name="recipe",
                help="Entwurfsablauf: Verlust wählen, Separabilität prüfen, kalibriertes Update mit Checkliste",
                handler=run_recipe,
            ),
        ],
    )
