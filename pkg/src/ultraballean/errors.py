"""Exception types shared by every module.

Domain errors carry a short machine-readable ``code`` and an optional
``witness`` (a JSON-friendly value pointing at the offending data).
"""

from __future__ import annotations

from typing import Any


class UltrametricError(ValueError):
    """Base class for domain errors."""

    code = "domain-error"

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> dict:
        doc = {"code": self.code, "message": self.message}
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


class InvalidSpaceError(UltrametricError):
    code = "invalid-space"


class NotUltrametricError(UltrametricError):
    code = "not-ultrametric"


class EmptySubsetError(UltrametricError):
    code = "empty-subset"


class UnknownPointError(UltrametricError):
    code = "unknown-point"


class PartitionUndefinedError(UltrametricError):
    code = "partition-undefined"


class MalformedTreeError(UltrametricError):
    code = "malformed-tree"


class NotRepresentableError(UltrametricError):
    code = "not-representable"


class UnlabeledTreeError(UltrametricError):
    code = "unlabeled-tree"


class EqualBallsError(UltrametricError):
    code = "equal-balls"


class NotABallError(UltrametricError):
    code = "not-a-ball"


class DepthLimitError(UltrametricError):
    code = "depth-limit"


class InvalidFamilyError(UltrametricError):
    code = "not-ballean"

    def __init__(self, message: str, report=None, witness: Any = None):
        super().__init__(message, witness)
        self.report = report


class SchemaError(ValueError):
    """Input document does not match the expected JSON layout."""
