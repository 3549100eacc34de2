"""Generators for the box families used throughout the package.

Two four-parameter families matter most.  The CCD form parametrizes every
two-input two-output no-signaling box exhibiting common certainty of
disagreement, and the SD form does the same for singular disagreement.
Both are written in the conventional frame (observed event at x = y = 0
with outputs a = b = 0, reasoned-about events at output 1 of x = 1 and
y = 1).  The caption constraints under which the disagreement actually
occurs are checked separately by caption_violations(); the generators
substitute parameters blindly so that near-boundary and degenerate points
can be studied too.
"""

from fractions import Fraction
from itertools import product

from .boxes import Box, box_from_rows, make_box
from .rationals import rat

ZERO = Fraction(0)
ONE = Fraction(1)


def pr_box() -> Box:
    """Extremal no-signaling box, in the frame a xor b = (x xor 1) * y.

    Perfectly correlated except at (x, y) = (0, 1), where it perfectly
    anticorrelates.  This is the standard PR box with Alice's inputs
    swapped so its disagreement sits at the conventional labels.
    """
    half = Fraction(1, 2)
    entries = {}
    for a, b, x, y in product(range(2), repeat=4):
        hit = (a ^ b) == ((x ^ 1) * y)
        entries[(a, b, x, y)] = half if hit else ZERO
    return make_box(2, 2, 2, 2, entries)


def uniform_box(nA: int = 2, nB: int = 2, nX: int = 2, nY: int = 2) -> Box:
    w = Fraction(1, nA * nB)
    entries = {
        (a, b, x, y): w
        for a, b, x, y in product(range(nA), range(nB), range(nX), range(nY))
    }
    return make_box(nA, nB, nX, nY, entries)


def ccd_table_box(r, s, t, u) -> Box:
    """Instantiate the CCD form.  Rows are [p(00), p(01), p(10), p(11)].

    The free entries are r = p(00|00), s = p(01|01), t = p(00|11) and
    u = p(01|10); everything else is forced by normalization, no-signaling
    and the zero pattern of the form.  Out-of-range parameters produce a
    box that fails validate(), not an exception.
    """
    r, s, t, u = rat(r), rat(s), rat(t), rat(u)
    return box_from_rows(
        {
            (0, 0): [r, ZERO, ZERO, 1 - r],
            (0, 1): [r - s, s, t + s - r, 1 - t - s],
            (1, 0): [t - u, u, r - t + u, 1 - r - u],
            (1, 1): [t, ZERO, ZERO, 1 - t],
        }
    )


def sd_table_box(r, s, t, u) -> Box:
    """Instantiate the SD form.  Here s = p(00|00), t = p(01|00),
    u = p(11|00) and r = p(00|11)."""
    r, s, t, u = rat(r), rat(s), rat(t), rat(u)
    return box_from_rows(
        {
            (0, 0): [s, t, 1 - s - u - t, u],
            (0, 1): [ZERO, s + t, r, 1 - s - t - r],
            (1, 0): [1 - u - t, u + t + r - 1, ZERO, 1 - r],
            (1, 1): [r, ZERO, ZERO, 1 - r],
        }
    )


def caption_violations(kind: str, r, s, t, u) -> list:
    """Which of the family's disagreement constraints fail for these params.

    Empty list means the instantiated box is guaranteed the corresponding
    disagreement (given it validates as a box at all).
    """
    r, s, t, u = rat(r), rat(s), rat(t), rat(u)
    bad = []
    if kind == "ccd":
        if not r > 0:
            bad.append("r>0 violated")
        if s - u == r - t:
            bad.append("s-u!=r-t violated")
    elif kind == "sd":
        if not s > 0:
            bad.append("s>0 violated")
        if s + t == 0:
            bad.append("s+t!=0 violated")
        if u + t == 1:
            bad.append("u+t!=1 violated")
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    return bad


# ---------------------------------------------------------------------------
# deterministic strategies (the vertices of the local set for 2x2 shapes)

def strategy_box(a0: int, a1: int, b0: int, b1: int) -> Box:
    """The deterministic box answering a_x = (a0, a1)[x], b_y = (b0, b1)[y]."""
    entries = {}
    for a, b, x, y in product(range(2), repeat=4):
        hit = a == (a0, a1)[x] and b == (b0, b1)[y]
        entries[(a, b, x, y)] = ONE if hit else ZERO
    return make_box(2, 2, 2, 2, entries)


def deterministic_strategies():
    """All 16 deterministic response tuples (a0, a1, b0, b1), lexicographic."""
    return list(product(range(2), repeat=4))


def mix_strategies(weighted) -> Box:
    """Convex mixture of deterministic strategies given as ((a0,a1,b0,b1), w)."""
    entries = {k: ZERO for k in product(range(2), repeat=4)}
    for (a0, a1, b0, b1), w in weighted:
        w = rat(w)
        for x, y in product(range(2), repeat=2):
            entries[((a0, a1)[x], (b0, b1)[y], x, y)] += w
    return make_box(2, 2, 2, 2, entries)
