"""Central error code registry with German user-facing messages.

Every error code maps to an ErrorEntry with a user-friendly German message,
a severity type (error/warning/info), the process exit code the CLI returns,
and an optional developer-only hint (loesung).
"""

from dataclasses import dataclass
from typing import Literal


@dataclass(frozen=True, slots=True)
class ErrorEntry:
    code: str
    message: str
    type: Literal["error", "warning", "info"] = "error"
    exit_code: int = 1
    loesung: str | None = None


# ---------------------------------------------------------------------------
# Registry, keyed by error code
# ---------------------------------------------------------------------------

_REGISTRY: dict[str, ErrorEntry] = {}


def _r(entry: ErrorEntry) -> ErrorEntry:
    _REGISTRY[entry.code] = entry
    return entry


# -- Weights / grids ---------------------------------------------------------
DEGENERATE_WEIGHTS = _r(
    ErrorEntry(
        code="DEGENERATE_WEIGHTS",
        message="Alle Log-Gewichte sind −∞; es gibt keine Verteilung zum Normalisieren.",
        loesung="Mindestens ein Atom mit positivem Gewicht angeben.",
    )
)
INVALID_WEIGHT = _r(
    ErrorEntry(
        code="INVALID_WEIGHT",
        message="Ungültiges Gewicht (NaN oder keine Wahrscheinlichkeitsverteilung).",
        loesung="Gewichte auf NaN prüfen; exp(log_weights) muss sich zu 1 summieren.",
    )
)
GRID_MISMATCH = _r(
    ErrorEntry(
        code="GRID_MISMATCH",
        message="Die Verteilungen bzw. Vektoren beziehen sich auf unterschiedliche Gitter.",
        loesung="Dasselbe ParamGrid bzw. dieselbe Atomanzahl verwenden.",
    )
)
INVALID_GRID = _r(
    ErrorEntry(
        code="INVALID_GRID",
        message="Das Parametergitter ist ungültig.",
        loesung="Mindestens ein Atom, gleiche Dimension, keine doppelten Atome.",
    )
)

# -- Temperature / losses ----------------------------------------------------
INVALID_TEMPERATURE = _r(
    ErrorEntry(
        code="INVALID_TEMPERATURE",
        message="Die Lernrate η muss endlich und strikt positiv sein.",
    )
)
NONFINITE_LOSS = _r(
    ErrorEntry(
        code="NONFINITE_LOSS",
        message="Der Verlust ist an einem Atom mit positivem Priorgewicht nicht endlich.",
        loesung="Verlustfunktion und Parameterbereich prüfen (z. B. log(0) bei Bernoulli-Randatomen).",
    )
)
INVALID_SCALE = _r(
    ErrorEntry(
        code="INVALID_SCALE",
        message="Der Skalierungsfaktor des Verlusts muss strikt positiv sein.",
    )
)
INVALID_DIVERGENCE = _r(
    ErrorEntry(
        code="INVALID_DIVERGENCE",
        message="Die Divergenz ist ungültig (φ(1) ≠ 0 oder φ nicht konvex).",
    )
)

# -- Bayesianity diagnostic ---------------------------------------------------
EMPTY_SAMPLE_GRID = _r(
    ErrorEntry(
        code="EMPTY_SAMPLE_GRID",
        message="Das Stichprobengitter enthält keine Knoten.",
        loesung="Quadraturknoten mit positiven Gewichten angeben.",
    )
)
PARTITION_OVERFLOW = _r(
    ErrorEntry(
        code="PARTITION_OVERFLOW",
        message="Die Normierungsfunktion A(θ) ist nicht endlich (Über- oder Unterlauf).",
        loesung="Stichprobengitter verkleinern oder η reduzieren.",
    )
)
NOT_BELIEF_POSTERIOR = _r(
    ErrorEntry(
        code="NOT_BELIEF_POSTERIOR",
        message="Aus diesem Verlust lässt sich keine Likelihood ableiten; das Ergebnis ist ein Entscheidungs-Posterior.",
        type="warning",
    )
)

# -- Evidence -----------------------------------------------------------------
TEMPERATURE_MISMATCH = _r(
    ErrorEntry(
        code="TEMPERATURE_MISMATCH",
        message="Bayes-Faktoren zwischen Läufen mit unterschiedlichem η sind nicht definiert.",
        loesung="Beide Modelle mit derselben Lernrate auswerten.",
    )
)
INVALID_EVIDENCE = _r(
    ErrorEntry(
        code="INVALID_EVIDENCE",
        message="Das verankerte log Z muss ≤ 0 sein; der Evidenzdatensatz ist inkonsistent.",
        loesung="Verankerung über das Minimum aller endlichen Verluste berechnen.",
    )
)

# -- Scoring ------------------------------------------------------------------
OUTCOME_OFF_GRID = _r(
    ErrorEntry(
        code="OUTCOME_OFF_GRID",
        message="Die Beobachtung liegt außerhalb des Ergebnisgitters.",
        loesung="Ergebnisgitter erweitern oder verfeinern.",
    )
)
UNSORTED_OUTCOME_GRID = _r(
    ErrorEntry(
        code="UNSORTED_OUTCOME_GRID",
        message="Das Ergebnisgitter muss streng aufsteigend sortiert sein.",
    )
)
INVALID_PREDICTIVE = _r(
    ErrorEntry(
        code="INVALID_PREDICTIVE",
        message="Die prädiktive Familie ist ungültig (Zeilen normieren nicht auf 1).",
    )
)
TRACE_MISMATCH = _r(
    ErrorEntry(
        code="TRACE_MISMATCH",
        message="Die Score-Verläufe sind nicht vergleichbar (Länge oder Scoring-Regel verschieden).",
    )
)
EMPTY_DATASET = _r(
    ErrorEntry(
        code="EMPTY_DATASET",
        message="Der Datensatz ist leer.",
    )
)

# -- Calibration ----------------------------------------------------------------
MISSING_ORACLE = _r(
    ErrorEntry(
        code="MISSING_ORACLE",
        message="Für diese Kalibrierung fehlt ein Gradienten- oder Hesse-Orakel.",
        loesung="Verlust mit Gradient verwenden oder ein Parametergitter angeben.",
    )
)
SINGULAR_INFORMATION = _r(
    ErrorEntry(
        code="SINGULAR_INFORMATION",
        message="Die Informationsmatrix ist singulär; η kann nicht kalibriert werden.",
    )
)
INSUFFICIENT_DATA = _r(
    ErrorEntry(
        code="INSUFFICIENT_DATA",
        message="Zu wenige Daten für die Kalibrierung (n < d + 1).",
    )
)
MINIMIZER_DIVERGED = _r(
    ErrorEntry(
        code="MINIMIZER_DIVERGED",
        message="Die Minimierung des empirischen Verlusts ist nicht konvergiert.",
        loesung="Startwert anpassen oder Gitter-Fallback verwenden.",
    )
)

# -- Quasi-posteriors -----------------------------------------------------------
EL_INFEASIBLE = _r(
    ErrorEntry(
        code="EL_INFEASIBLE",
        message="Empirical Likelihood ist an diesem θ nicht zulässig (0 liegt nicht im Inneren der konvexen Hülle).",
        type="warning",
    )
)
ET_INFEASIBLE = _r(
    ErrorEntry(
        code="ET_INFEASIBLE",
        message="Exponential Tilting ist an diesem θ nicht zulässig (duales Problem unbeschränkt).",
        type="warning",
    )
)
ALL_ATOMS_INFEASIBLE = _r(
    ErrorEntry(
        code="ALL_ATOMS_INFEASIBLE",
        message="Kein Atom des Parametergitters ist zulässig; der Quasi-Posterior existiert nicht.",
        loesung="Parametergitter in den Bereich der Daten legen.",
    )
)

# -- Configuration / IO ---------------------------------------------------------
CONFIG_INVALID = _r(
    ErrorEntry(
        code="CONFIG_INVALID",
        message="Die Experiment-Konfiguration ist ungültig. Bitte überprüfen Sie Ihre Eingaben.",
        type="warning",
    )
)
CONFIG_NOT_FOUND = _r(
    ErrorEntry(
        code="CONFIG_NOT_FOUND",
        message="Die Konfigurationsdatei wurde nicht gefunden.",
    )
)
OUTPUT_NOT_WRITABLE = _r(
    ErrorEntry(
        code="OUTPUT_NOT_WRITABLE",
        message="Das Ausgabeverzeichnis ist nicht beschreibbar.",
    )
)

# ---------------------------------------------------------------------------
# Lookup helpers
# ---------------------------------------------------------------------------

_DEFAULT = ErrorEntry(
    code="UNKNOWN_ERROR",
    message="Ein unbekannter Fehler ist aufgetreten.",
)


def get_error(code: str) -> ErrorEntry | None:
    """Look up an error entry by code. Returns None if not found."""
    return _REGISTRY.get(code)


def get_error_or_default(code: str) -> ErrorEntry:
    """Look up an error entry by code; falls back to a generic error."""
    return _REGISTRY.get(code, _DEFAULT)


__all__ = [
    "ErrorEntry",
    "get_error",
    "get_error_or_default",
    # Module-level constants for convenient imports
    "ALL_ATOMS_INFEASIBLE",
    "CONFIG_INVALID",
    "CONFIG_NOT_FOUND",
    "DEGENERATE_WEIGHTS",
    "EL_INFEASIBLE",
    "EMPTY_DATASET",
    "EMPTY_SAMPLE_GRID",
    "ET_INFEASIBLE",
    "GRID_MISMATCH",
    "INSUFFICIENT_DATA",
    "INVALID_DIVERGENCE",
    "INVALID_EVIDENCE",
    "INVALID_GRID",
    "INVALID_PREDICTIVE",
    "INVALID_SCALE",
    "INVALID_TEMPERATURE",
    "INVALID_WEIGHT",
    "MINIMIZER_DIVERGED",
    "MISSING_ORACLE",
    "NONFINITE_LOSS",
    "NOT_BELIEF_POSTERIOR",
    "OUTCOME_OFF_GRID",
    "OUTPUT_NOT_WRITABLE",
    "PARTITION_OVERFLOW",
    "SINGULAR_INFORMATION",
    "TEMPERATURE_MISMATCH",
    "TRACE_MISMATCH",
    "UNSORTED_OUTCOME_GRID",
]
