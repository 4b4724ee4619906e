from .pipeline import (
    COHERENCE_TOL,
    CalibratedUpdate,
    ChecklistItem,
    LossChoice,
    RecipeOutcome,
    SeparabilityCheck,
    calibrated_update,
    check_separability,
    choose_loss,
    reporting_checklist,
    run_recipe_pipeline,
)

__all__ = [
    "COHERENCE_TOL",
    "CalibratedUpdate",
    "ChecklistItem",
    "LossChoice",
    "RecipeOutcome",
    "SeparabilityCheck",
    "calibrated_update",
    "check_separability",
    "choose_loss",
    "reporting_checklist",
    "run_recipe_pipeline",
]
