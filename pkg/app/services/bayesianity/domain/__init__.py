from .diagnostic import CAVEAT, DiagnosticReport, Verdict, log_partition, partition_function_curve
from .exceptions import NotBeliefPosteriorError, PartitionOverflowError
from .likelihood import LikelihoodTable, affine_loss, extract_likelihood, implied_log_loss

__all__ = [
    "CAVEAT",
    "DiagnosticReport",
    "LikelihoodTable",
    "NotBeliefPosteriorError",
    "PartitionOverflowError",
    "Verdict",
    "affine_loss",
    "extract_likelihood",
    "implied_log_loss",
    "log_partition",
    "partition_function_curve",
]
