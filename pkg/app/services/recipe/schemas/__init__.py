from .reports import ChecklistRow, InterpretationStep, LossStep, RecipeReport, SeparabilityStep

__all__ = ["ChecklistRow", "InterpretationStep", "LossStep", "RecipeReport", "SeparabilityStep"]
