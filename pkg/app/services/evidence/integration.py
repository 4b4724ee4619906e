from app.core.core_extensions import CommandSpec, ServiceRegistration

from .application import run_evidence_demo, run_update


def register_service() -> ServiceRegistration:
    return ServiceRegistration(
        name="evidence",
        commands=[
            CommandSpec(
                name="update",
                help="Gibbs-Update mit Evidenz-Einträgen, Verschiebungs- und Batching-Prüfung",
                handler=run_update,
            ),
            CommandSpec(
                name="evidence-demo",
                help="Verallgemeinerte Bayes-Faktoren unter datenabhängigen Verschiebungen",
                handler=run_evidence_demo,
            ),
        ],
    )
