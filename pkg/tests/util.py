"""Shared random generators and independent oracles for the test suite."""

from __future__ import annotations

import random

from taucalc.braid import BraidWord, closure_components
from taucalc.grid import GridDiagram


def random_braid_word(rng: random.Random, max_strands: int = 5,
                      max_length: int = 14) -> BraidWord:
    n = rng.randint(2, max_strands)
    k = rng.randint(0, max_length)
    letters = tuple(
        rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(k)
    )
    return BraidWord(n, letters)


def random_knot_word(rng: random.Random, **kw) -> BraidWord:
    """Rejection-sample a braid word whose closure is a knot."""
    while True:
        b = random_braid_word(rng, **kw)
        if closure_components(b) == 1:
            return b


def random_grid(rng: random.Random, size: int) -> GridDiagram:
    while True:
        xs = list(range(size))
        os = list(range(size))
        rng.shuffle(xs)
        rng.shuffle(os)
        if all(x != o for x, o in zip(xs, os)):
            return GridDiagram(size, tuple(xs), tuple(os))


def strand_trace_cycles(b: BraidWord) -> int:
    """Closure component count by tracing each strand individually through
    the word; independent of the permutation-composition path."""
    ends = {}
    for start in range(b.strands):
        pos = start
        for l in b.letters:
            i = abs(l) - 1
            if pos == i:
                pos = i + 1
            elif pos == i + 1:
                pos = i
        ends[start] = pos
    seen = set()
    count = 0
    for start in range(b.strands):
        if start in seen:
            continue
        count += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = ends[j]
    return count


# Explicit orientation lookup: (horizontal direction, vertical direction)
# -> crossing sign, horizontal over vertical.  E = eastward, N = northward.
SIGN_TABLE = {
    ("E", "N"): 1,
    ("W", "S"): 1,
    ("E", "S"): -1,
    ("W", "N"): -1,
}


def brute_force_writhe(g: GridDiagram) -> int:
    """Writhe by scanning every (row, column) cell with only the span test
    and the orientation table."""
    total = 0
    for r in range(g.size):
        h1, h2 = g.xs[r], g.os[r]
        for c in range(g.size):
            if not (min(h1, h2) < c < max(h1, h2)):
                continue
            v1, v2 = g.xs.index(c), g.os.index(c)
            if not (min(v1, v2) < r < max(v1, v2)):
                continue
            h_dir = "E" if g.xs[r] > g.os[r] else "W"
            v_dir = "N" if g.os.index(c) > g.xs.index(c) else "S"
            total += SIGN_TABLE[(h_dir, v_dir)]
    return total
