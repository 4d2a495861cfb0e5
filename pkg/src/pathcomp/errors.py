"""Exception types raised by pathcomp.

Every domain error carries a short machine name (``code``) and an optional
JSON-ready ``payload`` that the CLI emits verbatim.
"""

from __future__ import annotations

from typing import Any


class PathCompError(Exception):
    code = "PathCompError"

    def __init__(self, message: str, payload: Any = None):
        super().__init__(message)
        self.payload = payload

    def to_json(self) -> dict:
        out: dict[str, Any] = {"error": self.code, "message": str(self)}
        if self.payload is not None:
            out["witness"] = self.payload
        return out


class OutOfRange(PathCompError, ValueError):
    code = "OutOfRange"


class InvalidOrder(PathCompError, ValueError):
    code = "InvalidOrder"


class NotInK(PathCompError, ValueError):
    code = "NotInK"


class SameComponent(PathCompError):
    code = "SameComponent"


class DifferentComponents(PathCompError):
    """Raised when a path is requested between distinct path components.

    ``witness`` is the separating ``(odd_gap, even_gap)`` pair; ``index`` is
    the failing coordinate for product spaces (``None`` in the plane).
    """

    code = "DifferentComponents"

    def __init__(self, message: str, witness, index: int | None = None):
        payload = {"odd": witness[0].to_json(), "even": witness[1].to_json()}
        if index is not None:
            payload["coordinate"] = index
        super().__init__(message, payload)
        self.witness = witness
        self.index = index


class ResolutionTooLarge(PathCompError, ValueError):
    code = "ResolutionTooLarge"


class DimensionMismatch(PathCompError, ValueError):
    code = "DimensionMismatch"


class EmptyRegion(PathCompError, ValueError):
    code = "EmptyRegion"


class LengthMismatch(PathCompError, ValueError):
    code = "LengthMismatch"


class InvalidPoint(PathCompError, ValueError):
    code = "InvalidPoint"


class IoFailure(PathCompError, OSError):
    code = "IoFailure"
