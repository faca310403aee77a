"""
Exception hierarchy shared by every lctopo module.

Each error carries a stable ``token`` that the CLI prints on exit code 2.
"""

from typing import Optional, Tuple


class LcTopoError(ValueError):
    """Base class for all input and domain errors."""

    token = "LcTopoError"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict:
        return {"error": self.token, "message": self.message}


class MissingEmpty(LcTopoError):
    token = "MissingEmpty"

    def __init__(self):
        super().__init__("family does not contain the empty set")


class MissingWhole(LcTopoError):
    token = "MissingWhole"

    def __init__(self):
        super().__init__("family does not contain the whole ground set")


class NotClosedUnderUnion(LcTopoError):
    token = "NotClosedUnderUnion"

    def __init__(self, witness: Tuple[list, list]):
        self.witness = witness
        left, right = witness
        super().__init__(f"union of {left} and {right} is not in the family")


class NotClosedUnderIntersection(LcTopoError):
    token = "NotClosedUnderIntersection"

    def __init__(self, witness: Tuple[list, list]):
        self.witness = witness
        left, right = witness
        super().__init__(f"intersection of {left} and {right} is not in the family")


class ForeignPoint(LcTopoError):
    token = "ForeignPoint"

    def __init__(self, label: Optional[str] = None, detail: str = None):
        self.label = label
        if detail is None:
            detail = f"point {label!r} is not in the ground set"
        super().__init__(detail)


class RelationNotReflexive(LcTopoError):
    token = "RelationNotReflexive"

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"relation is not reflexive at {label!r}")


class RelationNotTransitive(LcTopoError):
    token = "RelationNotTransitive"

    def __init__(self, witness: Tuple[str, str, str]):
        self.witness = witness
        x, y, z = witness
        super().__init__(f"{x} <= {y} and {y} <= {z} but not {x} <= {z}")


class SizeCapExceeded(LcTopoError):
    token = "SizeCapExceeded"

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} size {size} exceeds cap {cap}")


class UnknownProperty(LcTopoError):
    token = "UnknownProperty"

    def __init__(self, name: str):
        super().__init__(f"unknown property {name!r}")


class UnknownProposition(LcTopoError):
    token = "UnknownProposition"

    def __init__(self, name: str):
        super().__init__(f"unknown proposition {name!r}")


class UnknownKind(LcTopoError):
    token = "UnknownKind"

    def __init__(self, name: str):
        super().__init__(f"unknown phenomenon kind {name!r}")


class MalformedFile(LcTopoError):
    token = "MalformedFile"
