from .reports import (
    AdditivityGap,
    AdditivityReport,
    BruteForceCheck,
    RandomGapSummary,
    RandomVnmSummary,
    UtilityCheck,
    VariationalReport,
    VnmReport,
)

__all__ = [
    "AdditivityGap",
    "AdditivityReport",
    "BruteForceCheck",
    "RandomGapSummary",
    "RandomVnmSummary",
    "UtilityCheck",
    "VariationalReport",
    "VnmReport",
]
