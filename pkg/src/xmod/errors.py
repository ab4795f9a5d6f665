"""Exception hierarchy.

Every verification failure carries the name of the violated axiom and a
witness tuple so callers (and the CLI reports) can point at the exact
elements that break it.
"""

from __future__ import annotations

from typing import Any


class VerificationError(Exception):
    """An algebraic axiom fails on concrete elements."""

    axiom = "axiom"

    def __init__(self, message: str = "", witness: Any = None, **info: Any):
        self.witness = witness
        self.info = info
        super().__init__(message or f"{self.axiom} fails at {witness!r}")

    def to_dict(self) -> dict:
        out = {"error": type(self).__name__, "axiom": self.axiom, "message": str(self)}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        for key, val in self.info.items():
            out[key] = _jsonable(val)
        return out


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "item"):
        return x.item()
    return x


# group_core
class NotLatinSquare(VerificationError):
    axiom = "latin square"


class NotAssociative(VerificationError):
    axiom = "associativity"


class NoIdentityAtZero(VerificationError):
    axiom = "identity at index 0"


class NotHomomorphism(VerificationError):
    axiom = "homomorphism"


class NotAutomorphism(VerificationError):
    axiom = "action by automorphisms"


class NotAction(VerificationError):
    axiom = "action composition"


class IdentityActsNontrivially(VerificationError):
    axiom = "identity acts trivially"


class NotNormal(VerificationError):
    axiom = "normal subgroup"


class MismatchedGroups(VerificationError):
    axiom = "matching source/target groups"


class BudgetExceeded(Exception):
    """An enumeration would examine more candidates than allowed."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"search needs {needed} candidates, budget is {budget}")


# crossed_module
class EquivarianceFails(VerificationError):
    axiom = "equivariance"


class PeifferFails(VerificationError):
    axiom = "Peiffer identity"


class SquareFails(VerificationError):
    axiom = "boundary square commutes"


class SourceTargetMismatch(VerificationError):
    axiom = "composable morphisms"


class CocycleFails(VerificationError):
    axiom = "crossed cocycle identity"


class ConditionOneFails(VerificationError):
    axiom = "PNT condition on M"


class ConditionTwoFails(VerificationError):
    axiom = "PNT condition on N"


class ParallelMismatch(VerificationError):
    axiom = "parallel morphisms"


class ChainMismatch(VerificationError):
    axiom = "composable 2-cells"


class InternalVerificationFailure(VerificationError):
    """A composite that must be valid failed re-verification."""

    axiom = "closure of composition"


# butterfly
class DiagramFails(VerificationError):
    axiom = "butterfly wings commute"


class ComplexFails(VerificationError):
    axiom = "diagonal is a complex"


class NotExtension(VerificationError):
    axiom = "NE-SW diagonal is an extension"


class ConjugationFails(VerificationError):
    axiom = "butterfly conjugation condition"


class NotReversible(VerificationError):
    axiom = "NW-SE diagonal is an extension"


class NotASection(VerificationError):
    axiom = "splitting homomorphism"


class NoSolution(VerificationError):
    axiom = "f2 solvable from the section"


class NotUnique(VerificationError):
    axiom = "f2 uniquely determined"


# graded_braided
class GradingMismatch(VerificationError):
    axiom = "same grading group"


class NotNormalized(VerificationError):
    axiom = "normalized 3-cocycle"
