"""Exact integer intervals with infinite endpoints.

Endpoints are Python ints or the float infinities, used purely as order
sentinels.  All finite arithmetic stays in int; the only float values that
ever appear are -inf and +inf.  Absorption rules: inf + finite = inf,
-inf + finite = -inf.  The combinations that would be indeterminate
(inf - inf in the same slot) cannot arise because lo = +inf and hi = -inf
are rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyIntervalError

NEG_INF = float("-inf")
POS_INF = float("inf")


def _check_endpoint(v):
    if isinstance(v, int):
        return v
    if v == NEG_INF or v == POS_INF:
        return v
    raise TypeError(f"interval endpoint must be int or +/-inf, got {v!r}")


@dataclass(frozen=True)
class Interval:
    """Closed integer interval [lo, hi], possibly unbounded on either side."""

    lo: object
    hi: object

    def __post_init__(self):
        lo = _check_endpoint(self.lo)
        hi = _check_endpoint(self.hi)
        if lo == POS_INF or hi == NEG_INF:
            raise EmptyIntervalError(f"degenerate endpoints [{lo}, {hi}]")
        if lo > hi:
            raise EmptyIntervalError(f"empty interval [{lo}, {hi}]")

    @staticmethod
    def top() -> "Interval":
        return Interval(NEG_INF, POS_INF)

    @staticmethod
    def exact(v: int) -> "Interval":
        return Interval(v, v)

    @staticmethod
    def at_least(v: int) -> "Interval":
        return Interval(v, POS_INF)

    @staticmethod
    def at_most(v: int) -> "Interval":
        return Interval(NEG_INF, v)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def meet(self, other: "Interval") -> "Interval":
        """Intersection; raises EmptyIntervalError if disjoint."""
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval") -> "Interval":
        # lo slots only ever add {-inf, finite}; hi slots {finite, +inf}.
        return Interval(_add(self.lo, other.lo), _add(self.hi, other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return self + (-other)

    def widen_by(self, g: int) -> "Interval":
        """[lo - g, hi + g]; used for genus-g cobordism bounds."""
        return Interval(_add(self.lo, -g), _add(self.hi, g))

    def __str__(self) -> str:
        return f"[{fmt_endpoint(self.lo)}, {fmt_endpoint(self.hi)}]"


def _add(a, b):
    if a in (NEG_INF, POS_INF):
        return a
    if b in (NEG_INF, POS_INF):
        return b
    return a + b


def fmt_endpoint(v) -> str:
    if v == NEG_INF:
        return "-inf"
    if v == POS_INF:
        return "inf"
    return str(v)


def parse_endpoint(s):
    if s in ("-inf", "-Infinity"):
        return NEG_INF
    if s in ("inf", "Infinity"):
        return POS_INF
    return int(s)
