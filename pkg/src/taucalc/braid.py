"""Braid words, their closures, and genus bounds from the Bennequin surface.

A word on n strands is a sequence of nonzero letters; letter +i is the
generator sigma_i (a positive crossing between strands i and i+1), -i its
inverse.  The closure of the word is a link; it is a knot exactly when the
underlying permutation is a single n-cycle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    BraidSyntaxError,
    LetterRangeError,
    NotAKnotError,
    NotPositiveError,
)


@dataclass(frozen=True)
class Permutation:
    """Permutation of 0..n-1 given by its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


@dataclass(frozen=True)
class BraidWord:
    """Word in the braid group B_n as signed generator indices."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.strands < 1:
            raise LetterRangeError(f"need at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for l in self.letters:
            if l == 0:
                raise LetterRangeError("letter 0 is not a generator")
            if abs(l) >= self.strands:
                raise LetterRangeError(
                    f"letter {l} out of range for {self.strands} strands"
                )

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def k_plus(self) -> int:
        return sum(1 for l in self.letters if l > 0)

    @property
    def k_minus(self) -> int:
        return sum(1 for l in self.letters if l < 0)

    @property
    def writhe(self) -> int:
        return self.k_plus - self.k_minus

    @property
    def is_positive(self) -> bool:
        return self.k_minus == 0

    def __str__(self) -> str:
        return f"{self.strands}: " + " ".join(str(l) for l in self.letters)


_HEAD = re.compile(r"^\s*(\d+)\s*:\s*(.*)$", re.S)


def parse_braid(text: str) -> BraidWord:
    """Parse `n: l1 l2 ... lk` into a BraidWord.

    >>> parse_braid("3: 1 -2 1 -2")
    BraidWord(strands=3, letters=(1, -2, 1, -2))
    """
    m = _HEAD.match(text)
    if m is None:
        raise BraidSyntaxError(f"expected 'n: letters', got {text!r}")
    n = int(m.group(1))
    letters = []
    for tok in m.group(2).split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise BraidSyntaxError(f"bad braid letter {tok!r}") from None
    return BraidWord(n, tuple(letters))


def closure_permutation(b: BraidWord) -> Permutation:
    """Strand permutation of the closure: transposition (i-1, i) per letter,
    composed in word order.  Letter sign is irrelevant here."""
    images = list(range(b.strands))
    for l in b.letters:
        i = abs(l) - 1
        for p in range(b.strands):
            if images[p] == i:
                images[p] = i + 1
            elif images[p] == i + 1:
                images[p] = i
    return Permutation(tuple(images))


def closure_components(b: BraidWord) -> int:
    """Number of link components of the braid closure."""
    return closure_permutation(b).cycle_count()


def _require_knot(b: BraidWord) -> None:
    c = closure_components(b)
    if c != 1:
        raise NotAKnotError(f"closure has {c} components, need 1")


def bennequin_genus(b: BraidWord) -> int:
    """Genus (k - n + 1) / 2 of the banded Seifert surface of the closure:
    n disks joined by k twisted bands, Euler characteristic n - k."""
    _require_knot(b)
    num = b.length - b.strands + 1
    if num % 2 != 0:
        raise NotAKnotError(f"parity violation: k - n + 1 = {num} is odd")
    return num // 2


def tau_positive_braid(b: BraidWord) -> int:
    """Exact concordance invariant (k - n + 1) / 2 for a positive braid word
    with knot closure; the same value is the slice genus and Seifert genus."""
    if not b.is_positive:
        raise NotPositiveError(f"word has {b.k_minus} negative letters")
    return bennequin_genus(b)


def slice_bennequin_lower(b: BraidWord) -> int:
    """Lower bound (k+ - k- - n + 1) / 2 for the invariant of the closure."""
    _require_knot(b)
    num = b.writhe - b.strands + 1
    if num % 2 != 0:
        raise NotAKnotError(f"parity violation: k+ - k- - n + 1 = {num} is odd")
    return num // 2


def mirror_braid(b: BraidWord) -> BraidWord:
    """Letter-wise negation; the closure becomes the mirror knot.

    The mirror's closure stands in for the concordance inverse: the invariant
    is insensitive to the orientation reversal separating the two, so every
    deduction using it is unaffected.
    """
    return BraidWord(b.strands, tuple(-l for l in b.letters))
