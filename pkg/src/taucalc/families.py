"""Closed-form invariant values for special knot families.

Covered: torus knots T(p,q) with p,q >= 2 coprime; odd pretzel knots whose
twist parameters are pairwise negative-sum (the embeddability criterion);
and iterated untwisted positive Whitehead doubles of companions with a
certified nonnegative Thurston-Bennequin lower bound.

Criteria that do not apply return None rather than guessing a value: an
inapplicable criterion says nothing about the invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .braid import BraidWord
from .errors import TaucalcError


class FamilyParamError(TaucalcError):
    """Family parameters violate the family's invariants."""


@dataclass(frozen=True)
class TorusParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise FamilyParamError(f"need p, q >= 2, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise FamilyParamError(
                f"T({self.p},{self.q}) is a link, not a knot (gcd > 1)"
            )


@dataclass(frozen=True)
class PretzelParams:
    twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(self.twists))
        if not self.twists:
            raise FamilyParamError("pretzel needs at least one twist region")


@dataclass(frozen=True)
class DoubleSpec:
    """Untwisted positive-clasp Whitehead double, iterated.

    Only the positive clasp with zero twisting is modeled; anything else is
    outside the closed-form result and rejected here.
    """

    companion: str
    iterations: int = 1

    def __post_init__(self):
        if self.iterations < 1:
            raise FamilyParamError("iterations must be >= 1")


def torus_braid(t: TorusParams) -> BraidWord:
    """The standard p-strand positive word (sigma_1 ... sigma_{p-1})^q."""
    block = tuple(range(1, t.p))
    return BraidWord(t.p, block * t.q)


def tau_torus(t: TorusParams) -> int:
    """(p-1)(q-1)/2, the Seifert genus of the torus knot's fiber surface."""
    return (t.p - 1) * (t.q - 1) // 2


def pretzel_tau(p: PretzelParams) -> int | None:
    """(k-1)/2 when k and all twists are odd and every pairwise sum is
    negative; None when the criterion does not apply."""
    k = len(p.twists)
    if k % 2 == 0:
        return None
    if any(t % 2 == 0 for t in p.twists):
        return None
    if any(a + b >= 0 for a, b in combinations(p.twists, 2)):
        return None
    return (k - 1) // 2


def whitehead_double_tau(d: DoubleSpec, tb_lower: int) -> int | None:
    """1 for every iterate when the companion has a certified nonnegative
    Thurston-Bennequin lower bound; None otherwise.  The value is also the
    slice genus of the double.  Independent of the iteration count: the
    first double itself has Thurston-Bennequin number >= 1."""
    if tb_lower < 0:
        return None
    return 1
