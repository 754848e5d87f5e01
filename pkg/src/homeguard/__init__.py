"""HomeGuard: rule-based emergency triage for domestic-violence messages."""

from .errors import EmptyMessage, HomeGuardError, NotEmergency
from .text import RawMessage
from .triage import TriageResult, triage

__version__ = "0.1.0"

__all__ = ["EmptyMessage", "HomeGuardError", "NotEmergency", "RawMessage", "TriageResult", "triage", "__version__"]
