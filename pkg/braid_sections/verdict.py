"""Contains the machine-checkable certificate returned by every verifier."""
from dataclasses import dataclass, field
import time
from typing import Any, Dict, List, Optional

from . import utils
from .keys import *


@dataclass
class Verdict:
    """The outcome of checking one claim."""

    claim: str
    status: str
    """One of ``verified``, ``refuted``, ``inconclusive`` or ``error``."""
    witness: Dict[str, Any] = field(default_factory=dict)
    """JSON-compatible data supporting the status."""
    timing: float = 0.0
    """Seconds spent producing the verdict."""

    def __post_init__(self):
        if self.status not in [STATUS_VERIFIED, STATUS_REFUTED, STATUS_INCONCLUSIVE, STATUS_ERROR]:
            raise ValueError(f"Unknown verdict status: {self.status}")

    @classmethod
    def fromcheck(cls, claim: str, holds: bool, witness: Dict[str, Any], started: Optional[float] = None) -> "Verdict":
        """Construct a verified or refuted verdict.

        :param started: the ``time.perf_counter()`` value when the check began
        """
        elapsed = time.perf_counter() - started if started is not None else 0.0
        return cls(claim, STATUS_VERIFIED if holds else STATUS_REFUTED, witness, elapsed)

    @classmethod
    def fromerror(cls, claim: str, error: Exception) -> "Verdict":
        return cls(claim, STATUS_ERROR, {"error": str(error)})

    @property
    def verified(self) -> bool:
        return self.status == STATUS_VERIFIED

    def to_json(self) -> Dict[str, Any]:
        return {
            CLAIM: self.claim,
            STATUS: self.status,
            VERIFIED: self.verified,
            WITNESS: utils.jsonable(self.witness),
            TIMING: round(self.timing, 6),  # pragma: no mutate
        }


def to_pandas(verdicts: List[Verdict]):
    """Tabulate verdicts as a pandas.DataFrame.

    :return: a pandas.DataFrame if pandas is present, otherwise None
    """
    rows = [[v.claim, v.status, v.timing] for v in verdicts]
    return utils.list_to_pandas(rows, [CLAIM, STATUS, TIMING])
