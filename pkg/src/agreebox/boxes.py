"""Bipartite no-signaling boxes with exact rational entries.

A box is a family of conditional distributions p(ab|xy) over output pairs
(a, b) given input pairs (x, y).  Outputs and inputs are 0-based contiguous
integers.  Validity means nonnegative entries, exact normalization per
input pair, and both no-signaling conditions:

    sum_a p(ab|xy) independent of x   (Alice cannot signal to Bob),
    sum_b p(ab|xy) independent of y   (Bob cannot signal to Alice).

All arithmetic is exact; there is no tolerance anywhere in this module.
The conventional frame used by the analysis modules puts the observed
event at inputs x = y = 0, outputs a = b = 0, and the events the parties
reason about at output 1 of inputs x = 1 and y = 1.  Boxes that arrive in
a different frame can be moved into this one with relabel().
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import ParseError, ShapeError, StructuralError
from .rationals import rat, rat_str

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Box:
    """Immutable box. table maps (a, b, x, y) to an exact probability."""

    nA: int
    nB: int
    nX: int
    nY: int
    table: dict = field(compare=True)

    def p(self, a: int, b: int, x: int, y: int) -> Fraction:
        return self.table[(a, b, x, y)]

    def outputs_a(self):
        return range(self.nA)

    def outputs_b(self):
        return range(self.nB)

    def marginal_a(self, a: int, x: int, y: int) -> Fraction:
        """p(a|x), evaluated on the (x, y) row."""
        return sum((self.table[(a, b, x, y)] for b in range(self.nB)), ZERO)

    def marginal_b(self, b: int, x: int, y: int) -> Fraction:
        """p(b|y), evaluated on the (x, y) row."""
        return sum((self.table[(a, b, x, y)] for a in range(self.nA)), ZERO)


def make_box(nA: int, nB: int, nX: int, nY: int, entries) -> Box:
    """Build a Box from any mapping (a,b,x,y) -> rational-like value.

    Raises StructuralError if an entry is missing or an index is out of range.
    """
    if min(nA, nB, nX, nY) < 1:
        raise ShapeError("cardinalities must be positive")
    table = {}
    for key, value in entries.items():
        a, b, x, y = key
        if not (0 <= a < nA and 0 <= b < nB and 0 <= x < nX and 0 <= y < nY):
            raise StructuralError(f"index out of range: {key}")
        table[(a, b, x, y)] = rat(value)
    missing = [
        k
        for k in product(range(nA), range(nB), range(nX), range(nY))
        if k not in table
    ]
    if missing:
        raise StructuralError(f"missing {len(missing)} entries, first: {missing[0]}")
    return Box(nA, nB, nX, nY, table)


def box_from_rows(rows, nA: int = None, nB: int = None) -> Box:
    """Build a box from {(x, y): flat row} with rows laid out by a then b.

    When output counts are not given they are inferred assuming nA = nB
    (square rows).  A 2x2 row reads [p(00), p(01), p(10), p(11)].
    """
    nX = 1 + max(x for x, _ in rows)
    nY = 1 + max(y for _, y in rows)
    n = len(next(iter(rows.values())))
    if nA is None and nB is None:
        nA = nB = int(round(n**0.5))
    elif nA is None:
        nA = n // nB
    elif nB is None:
        nB = n // nA
    if nA * nB != n:
        raise StructuralError(f"row length {n} does not factor as {nA}*{nB}")
    entries = {}
    for (x, y), row in rows.items():
        for a in range(nA):
            for b in range(nB):
                entries[(a, b, x, y)] = row[a * nB + b]
    return make_box(nA, nB, nX, nY, entries)


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    structural: tuple  # missing pieces; nonempty means not even checkable
    violations: tuple  # named constraint violations with indices


def validate(box: Box) -> ValidationResult:
    """Check every box invariant exactly and name each violated constraint."""
    structural = []
    violations = []
    for key in product(
        range(box.nA), range(box.nB), range(box.nX), range(box.nY)
    ):
        if key not in box.table:
            structural.append(f"missing entry (a,b,x,y)={key}")
    if structural:
        return ValidationResult(False, tuple(structural), ())

    for key in sorted(box.table):
        v = box.table[key]
        if v < 0 or v > 1:
            violations.append(f"entry out of [0,1] at (a,b,x,y)={key}: {rat_str(v)}")
    for x in range(box.nX):
        for y in range(box.nY):
            total = sum(
                (box.table[(a, b, x, y)] for a in range(box.nA) for b in range(box.nB)),
                ZERO,
            )
            if total != 1:
                violations.append(
                    f"normalization at (x,y)=({x},{y}): sum={rat_str(total)}"
                )
    # A -> B: Bob's marginal must not depend on Alice's input
    for b in range(box.nB):
        for y in range(box.nY):
            ref = box.marginal_b(b, 0, y)
            for x in range(1, box.nX):
                got = box.marginal_b(b, x, y)
                if got != ref:
                    violations.append(
                        f"no-signaling A->B at (b,y)=({b},{y}): "
                        f"x=0 gives {rat_str(ref)}, x={x} gives {rat_str(got)}"
                    )
    # B -> A: Alice's marginal must not depend on Bob's input
    for a in range(box.nA):
        for x in range(box.nX):
            ref = box.marginal_a(a, x, 0)
            for y in range(1, box.nY):
                got = box.marginal_a(a, x, y)
                if got != ref:
                    violations.append(
                        f"no-signaling B->A at (a,x)=({a},{x}): "
                        f"y=0 gives {rat_str(ref)}, y={y} gives {rat_str(got)}"
                    )
    return ValidationResult(not violations, (), tuple(violations))


# ---------------------------------------------------------------------------
# conditionals

@dataclass(frozen=True)
class Conditional:
    """An exact conditional probability, or a marker that it is undefined.

    defined is False exactly when the conditioning event has probability
    zero; the value field then carries no meaning and must not be compared.
    """

    value: Fraction
    defined: bool

    def equals(self, q) -> bool:
        return self.defined and self.value == q


UNDEFINED = Conditional(ZERO, False)


def conditional(box: Box, target, given) -> Conditional:
    """Conditional probability of one party's output given the other's.

    target is (party, output) with party "A" or "B"; given is
    (other party's output, x, y).  For target ("B", b) this is
    p(b | a, x, y) = p(ab|xy) / p(a|x); conditioning on a null event
    returns an undefined Conditional rather than raising.
    """
    party, out = target
    other, x, y = given
    if party == "B":
        if not (0 <= out < box.nB and 0 <= other < box.nA):
            raise ShapeError(f"output out of range: target={target} given={given}")
        joint = box.p(other, out, x, y)
        marg = box.marginal_a(other, x, y)
    elif party == "A":
        if not (0 <= out < box.nA and 0 <= other < box.nB):
            raise ShapeError(f"output out of range: target={target} given={given}")
        joint = box.p(out, other, x, y)
        marg = box.marginal_b(other, x, y)
    else:
        raise ShapeError(f"party must be 'A' or 'B', got {party!r}")
    if marg == 0:
        return UNDEFINED
    return Conditional(joint / marg, True)


def cond_event_b(box: Box, bs, a: int, x: int, y: int) -> Conditional:
    """p(b in bs | a, x, y), the certainty probe used by the hierarchy."""
    marg = box.marginal_a(a, x, y)
    if marg == 0:
        return UNDEFINED
    num = sum((box.p(a, b, x, y) for b in bs), ZERO)
    return Conditional(num / marg, True)


def cond_event_a(box: Box, as_, b: int, x: int, y: int) -> Conditional:
    """p(a in as_ | b, x, y)."""
    marg = box.marginal_b(b, x, y)
    if marg == 0:
        return UNDEFINED
    num = sum((box.p(a, b, x, y) for a in as_), ZERO)
    return Conditional(num / marg, True)


# ---------------------------------------------------------------------------
# correlators

def is_perfectly_correlated(box: Box, x: int, y: int) -> bool:
    """True iff p(a,b|x,y) = 0 whenever a != b."""
    return all(
        box.p(a, b, x, y) == 0
        for a in range(box.nA)
        for b in range(box.nB)
        if a != b
    )


@dataclass(frozen=True)
class CorrelatorVector:
    """c[x, y] = p(a=b|xy) - p(a!=b|xy) for a binary-output box."""

    c: dict


def correlators(box: Box) -> CorrelatorVector:
    if box.nA != 2 or box.nB != 2:
        raise ShapeError("correlators are defined for binary outputs only")
    c = {}
    for x in range(box.nX):
        for y in range(box.nY):
            agree = box.p(0, 0, x, y) + box.p(1, 1, x, y)
            differ = box.p(0, 1, x, y) + box.p(1, 0, x, y)
            c[(x, y)] = agree - differ
    return CorrelatorVector(c)


# ---------------------------------------------------------------------------
# relabeling

@dataclass(frozen=True)
class RelabelFrame:
    """A joint relabeling of inputs and (per-input) outputs.

    sigma_x, sigma_y permute inputs; pi_a[x] permutes Alice's outputs at
    original input x, pi_b[y] likewise for Bob.  The relabeled box q is
    defined by q(pi_a[x](a), pi_b[y](b) | sigma_x(x), sigma_y(y)) = p(a,b|x,y).
    """

    sigma_x: tuple
    sigma_y: tuple
    pi_a: tuple  # tuple of per-input output permutations, indexed by original x
    pi_b: tuple

    @staticmethod
    def identity(box: Box) -> "RelabelFrame":
        return RelabelFrame(
            tuple(range(box.nX)),
            tuple(range(box.nY)),
            tuple(tuple(range(box.nA)) for _ in range(box.nX)),
            tuple(tuple(range(box.nB)) for _ in range(box.nY)),
        )

    def is_identity(self) -> bool:
        return (
            list(self.sigma_x) == sorted(self.sigma_x)
            and all(list(p) == sorted(p) for p in self.pi_a)
            and list(self.sigma_y) == sorted(self.sigma_y)
            and all(list(p) == sorted(p) for p in self.pi_b)
        )


def relabel(box: Box, frame: RelabelFrame) -> Box:
    table = {}
    for (a, b, x, y), v in box.table.items():
        table[(frame.pi_a[x][a], frame.pi_b[y][b], frame.sigma_x[x], frame.sigma_y[y])] = v
    return Box(box.nA, box.nB, box.nX, box.nY, table)


def all_frames(box: Box):
    """Every distinct relabeling frame, identity first.

    For the 2x2x2x2 shape this yields 2*2*4*4 = 64 frames (per-input output
    permutations are chosen independently for each input).
    """
    from itertools import permutations

    xs = sorted(permutations(range(box.nX)))
    ys = sorted(permutations(range(box.nY)))
    pas = sorted(product(*(permutations(range(box.nA)) for _ in range(box.nX))))
    pbs = sorted(product(*(permutations(range(box.nB)) for _ in range(box.nY))))
    for sx in xs:
        for sy in ys:
            for pa in pas:
                for pb in pbs:
                    yield RelabelFrame(sx, sy, pa, pb)


# ---------------------------------------------------------------------------
# JSON round trip

def box_doc(box: Box) -> dict:
    rows = {}
    for x in range(box.nX):
        for y in range(box.nY):
            rows[f"{x},{y}"] = [
                [rat_str(box.p(a, b, x, y)) for b in range(box.nB)]
                for a in range(box.nA)
            ]
    return {"nA": box.nA, "nB": box.nB, "nX": box.nX, "nY": box.nY, "p": rows}


def box_to_json(box: Box) -> str:
    return json.dumps(box_doc(box), indent=2)


def box_from_json(text: str) -> Box:
    try:
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    try:
        nA, nB, nX, nY = (int(doc[k]) for k in ("nA", "nB", "nX", "nY"))
        rows = doc["p"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"box document missing field: {exc}") from exc
    entries = {}
    for key, grid in rows.items():
        try:
            xs, ys = key.split(",")
            x, y = int(xs), int(ys)
        except ValueError as exc:
            raise ParseError(f"bad input-pair key {key!r}") from exc
        if len(grid) != nA:
            raise StructuralError(f"row {key}: expected {nA} output rows")
        for a, row in enumerate(grid):
            if len(row) != nB:
                raise StructuralError(f"row {key}, a={a}: expected {nB} entries")
            for b, value in enumerate(row):
                entries[(a, b, x, y)] = rat(value)
    return make_box(nA, nB, nX, nY, entries)
