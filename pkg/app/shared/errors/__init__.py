"""Error codes, the analysis exception hierarchy and the JSON envelope written on failure.

Every failing run maps its exception to a registry entry; the envelope text is German.
"""

from .builder import ErrorEnvelope, build_error_response
from .exceptions import AnalysisError
from .handlers import handle_exception
from .registry import ErrorEntry, get_error, get_error_or_default

__all__ = [
    "AnalysisError",
    "ErrorEntry",
    "ErrorEnvelope",
    "build_error_response",
    "get_error",
    "get_error_or_default",
    "handle_exception",
]
