"""Rectangular (grid) diagrams and their Thurston-Bennequin numbers.

A size-n grid has one X and one O marker in every row and every column.
Each row carries a horizontal segment joining its two markers; each column
a vertical segment.  At every crossing the horizontal strand passes over
the vertical one.

Coordinates: row 0 is the southernmost row, column 0 the westernmost
column; "north" means increasing row index.  Orientation: within a row the
strand runs O to X, within a column X to O.  The crossing sign convention
is pinned by the bundled positive-trefoil diagram having writhe +3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    GridSyntaxError,
    InvalidRowError,
    MarkerCollisionError,
    NotAKnotError,
    NotPermutationError,
)

CORNER_KINDS = ("NE", "NW", "SE", "SW")


@dataclass(frozen=True)
class GridDiagram:
    """xs[r] / os[r] give the column of the X / O marker in row r."""

    size: int
    xs: tuple[int, ...]
    os: tuple[int, ...]

    def __post_init__(self):
        n = self.size
        if n < 2:
            raise GridSyntaxError(f"grid size must be >= 2, got {n}")
        object.__setattr__(self, "xs", tuple(self.xs))
        object.__setattr__(self, "os", tuple(self.os))
        for name, perm in (("X", self.xs), ("O", self.os)):
            if sorted(perm) != list(range(n)):
                raise NotPermutationError(
                    f"{name} columns are not a permutation of 0..{n - 1}: {perm}"
                )
        for r in range(n):
            if self.xs[r] == self.os[r]:
                raise MarkerCollisionError(
                    f"X and O share cell (row {r}, column {self.xs[r]})"
                )

    def x_row(self, col: int) -> int:
        return self.xs.index(col)

    def o_row(self, col: int) -> int:
        return self.os.index(col)

    def __str__(self) -> str:
        return "{}\nX: {}\nO: {}".format(
            self.size,
            " ".join(str(c) for c in self.xs),
            " ".join(str(c) for c in self.os),
        )


def parse_grid(text: str) -> GridDiagram:
    """Parse the three-line format `n` / `X: cols` / `O: cols`.

    Lines may be separated by newlines or by `/`.
    """
    lines = [s.strip() for s in re.split(r"[/\n]", text) if s.strip()]
    if len(lines) != 3:
        raise GridSyntaxError(f"expected 3 lines (n, X:, O:), got {len(lines)}")
    try:
        n = int(lines[0])
    except ValueError:
        raise GridSyntaxError(f"bad grid size {lines[0]!r}") from None
    cols = {}
    for line in lines[1:]:
        m = re.match(r"^([XO])\s*:\s*(.*)$", line)
        if m is None:
            raise GridSyntaxError(f"expected 'X: ...' or 'O: ...', got {line!r}")
        try:
            cols[m.group(1)] = tuple(int(t) for t in m.group(2).split())
        except ValueError:
            raise GridSyntaxError(f"bad column index in {line!r}") from None
    if set(cols) != {"X", "O"}:
        raise GridSyntaxError("need exactly one X: line and one O: line")
    if len(cols["X"]) != n or len(cols["O"]) != n:
        raise GridSyntaxError("marker row count does not match grid size")
    return GridDiagram(n, cols["X"], cols["O"])


def components(g: GridDiagram) -> int:
    """Closed curves traced by alternating row (O to X) and column (X to O)
    segments.  Row r's successor is the row holding the O of column xs[r]."""
    nxt = [g.o_row(g.xs[r]) for r in range(g.size)]
    seen = [False] * g.size
    count = 0
    for r in range(g.size):
        if seen[r]:
            continue
        count += 1
        j = r
        while not seen[j]:
            seen[j] = True
            j = nxt[j]
    return count


def _h_span(g: GridDiagram, r: int) -> tuple[int, int]:
    a, b = g.xs[r], g.os[r]
    return (a, b) if a < b else (b, a)


def _v_span(g: GridDiagram, c: int) -> tuple[int, int]:
    a, b = g.x_row(c), g.o_row(c)
    return (a, b) if a < b else (b, a)


def crossings(g: GridDiagram) -> list[tuple[int, int, int]]:
    """All (row, column, sign) where row r's horizontal segment strictly
    spans column c and column c's vertical strictly spans row r.

    Sign: +1 when the horizontal (eastward = +1) and vertical (northward =
    +1) directions agree in sign, -1 otherwise.
    """
    out = []
    for r in range(g.size):
        lo, hi = _h_span(g, r)
        h_dir = 1 if g.xs[r] > g.os[r] else -1
        for c in range(lo + 1, hi):
            vlo, vhi = _v_span(g, c)
            if vlo < r < vhi:
                v_dir = 1 if g.o_row(c) > g.x_row(c) else -1
                out.append((r, c, h_dir * v_dir))
    return out


def writhe_grid(g: GridDiagram) -> int:
    return sum(s for _, _, s in crossings(g))


def corner_census(g: GridDiagram) -> dict[str, int]:
    """Classify all 2n markers by which compass extreme of their two
    incident segments they occupy."""
    census = dict.fromkeys(CORNER_KINDS, 0)
    for r in range(g.size):
        for c, other_col, other_row in (
            (g.xs[r], g.os[r], g.o_row(g.xs[r])),
            (g.os[r], g.xs[r], g.x_row(g.os[r])),
        ):
            east = "E" if other_col < c else "W"  # horizontal extends west -> marker east
            north = "N" if other_row < r else "S"  # vertical extends south -> marker north
            census[north + east] += 1
    return census


def ne_corners(g: GridDiagram) -> int:
    return corner_census(g)["NE"]


def tb(g: GridDiagram) -> int:
    """Writhe minus the number of northeast corners."""
    if components(g) != 1:
        raise NotAKnotError(f"diagram has {components(g)} components, need 1")
    return writhe_grid(g) - ne_corners(g)


def reflect_columns(g: GridDiagram) -> GridDiagram:
    """Mirror the diagram across a vertical axis; negates every crossing sign."""
    n = g.size
    return GridDiagram(
        n,
        tuple(n - 1 - c for c in g.xs),
        tuple(n - 1 - c for c in g.os),
    )


def stabilize_ne(g: GridDiagram, row: int) -> GridDiagram:
    """Split the X of `row` into an elbow, adding exactly one northeast
    corner and no crossings; the diagram's Thurston-Bennequin number drops
    by 1.

    The new row/column are inserted on the side of the X facing its
    horizontal segment, so no old segment ever lengthens across an old
    grid line; the postcondition is checked before returning.
    """
    n = g.size
    if not 0 <= row < n:
        raise InvalidRowError(f"row {row} out of range for size {n}")
    r, c, co = row, g.xs[row], g.os[row]

    if co < c:
        # Horizontal extends west: new column west of c, new row south of r.
        shiftc = lambda x: x + 1 if x >= c else x
        shiftr = lambda y: y + 1 if y >= r else y
        new_row, x_in_block, o_in_block = r, c + 1, c
        old_row_x = c
    else:
        # Horizontal extends east: new column east of c, new row north of r.
        shiftc = lambda x: x + 1 if x > c else x
        shiftr = lambda y: y + 1 if y > r else y
        new_row, x_in_block, o_in_block = r + 1, c, c + 1
        old_row_x = c + 1

    xs = [0] * (n + 1)
    os = [0] * (n + 1)
    for old_r in range(n):
        rr = shiftr(old_r)
        if old_r == r:
            xs[rr] = old_row_x
            os[rr] = shiftc(g.os[old_r])
        else:
            xs[rr] = shiftc(g.xs[old_r])
            os[rr] = shiftc(g.os[old_r])
    xs[new_row] = x_in_block
    os[new_row] = o_in_block
    out = GridDiagram(n + 1, tuple(xs), tuple(os))

    # The move is an isotopy adding one NE corner; anything else is a bug.
    if (
        components(out) != components(g)
        or sorted(s for _, _, s in crossings(out))
        != sorted(s for _, _, s in crossings(g))
        or ne_corners(out) != ne_corners(g) + 1
    ):
        raise AssertionError("stabilization postcondition violated")
    return out
