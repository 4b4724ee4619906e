from .commands import run_evidence_demo, run_update

__all__ = ["run_evidence_demo", "run_update"]
