"""Conversion between boxes and ontological models, and the locality test.

An instruction set is a hidden state prescribing one output per input per
party: a pair (alpha, beta) with alpha in A^X and beta in B^Y.  Weights
P over instruction sets reproduce a box through

    p(ab|xy) = sum of P(alpha, beta) over alpha[x] = a, beta[y] = b,

a linear system M P = C whose 0/1 matrix M depends only on the shape.
Every valid no-signaling box admits a solution with sum P = 1, but the
weights may be negative; nonnegative solvability is exactly locality.
box_to_model returns the deterministic free-variables-zero solution,
is_local settles nonnegativity by exact LP and returns either the convex
decomposition or a separating (Bell-type) functional as certificate.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .boxes import Box, make_box
from .classical import OntologicalModel, make_model
from .errors import BudgetError, PreconditionError, ShapeError
from .rationals import rat_str
from .simplexq import LinearSolver, feasible_nonneg

ZERO = Fraction(0)
DEFAULT_BUDGET = 4096


@dataclass(frozen=True)
class InstructionSystem:
    """The linear system M P = C for one box.

    states[k] = (alpha, beta) in lexicographic order of the concatenated
    output tuple; rows of M are indexed by (x, y, a, b), lexicographically.
    """

    states: tuple
    M: tuple
    C: tuple


def instruction_states(nA, nB, nX, nY, budget=DEFAULT_BUDGET):
    count = nA**nX * nB**nY
    if count > budget:
        raise BudgetError(f"{count} instruction states exceed the budget {budget}")
    return tuple(
        (alpha, beta)
        for alpha in product(range(nA), repeat=nX)
        for beta in product(range(nB), repeat=nY)
    )


def row_labels(nA, nB, nX, nY):
    """Constraint rows in the fixed order used by M and certificates."""
    return tuple(
        (a, b, x, y)
        for x in range(nX)
        for y in range(nY)
        for a in range(nA)
        for b in range(nB)
    )


@lru_cache(maxsize=None)
def _shape_system(nA, nB, nX, nY, budget):
    states = instruction_states(nA, nB, nX, nY, budget)
    labels = row_labels(nA, nB, nX, nY)
    M = tuple(
        tuple(1 if (alpha[x] == a and beta[y] == b) else 0 for alpha, beta in states)
        for (a, b, x, y) in labels
    )
    return states, labels, M


@lru_cache(maxsize=None)
def _shape_solver(nA, nB, nX, nY, budget):
    _, _, M = _shape_system(nA, nB, nX, nY, budget)
    return LinearSolver(M)


def instruction_system(box: Box, budget=DEFAULT_BUDGET) -> InstructionSystem:
    states, labels, M = _shape_system(box.nA, box.nB, box.nX, box.nY, budget)
    C = tuple(box.p(a, b, x, y) for (a, b, x, y) in labels)
    return InstructionSystem(states, M, C)


def model_to_box(model: OntologicalModel) -> Box:
    """Read the box off the model: p(ab|xy) = mass of the cell intersection."""
    nX = len(model.partsA)
    nY = len(model.partsB)
    if set(model.partsA) != set(range(nX)) or set(model.partsB) != set(range(nY)):
        raise ShapeError("partitions must be indexed by contiguous inputs from 0")
    sizes_a = {len(cells) for cells in model.partsA.values()}
    sizes_b = {len(cells) for cells in model.partsB.values()}
    if len(sizes_a) != 1 or len(sizes_b) != 1:
        raise ShapeError("every input must have the same number of output cells")
    nA, nB = sizes_a.pop(), sizes_b.pop()
    entries = {}
    for x, y in product(range(nX), range(nY)):
        for a, b in product(range(nA), range(nB)):
            cell = model.partsA[x][a] & model.partsB[y][b]
            entries[(a, b, x, y)] = sum((model.measure[w] for w in cell), ZERO)
    return make_box(nA, nB, nX, nY, entries)


def box_to_model(box: Box, budget=DEFAULT_BUDGET) -> OntologicalModel:
    """Deterministic quasi-probability model over instruction sets.

    The solution of M P = C picks free variables zero under the fixed
    lexicographic pivot order, so equal boxes give equal models.  The
    measure is signed whenever the particular solution has a negative
    weight; is_local() decides whether some unsigned solution exists.
    """
    states, _, _ = _shape_system(box.nA, box.nB, box.nX, box.nY, budget)
    solver = _shape_solver(box.nA, box.nB, box.nX, box.nY, budget)
    sysm = instruction_system(box, budget)
    P = solver.solve(list(sysm.C))
    if P is None:
        raise PreconditionError(
            "instruction system inconsistent: the box is not no-signaling"
        )
    total = sum(P, ZERO)
    if total != 1:
        raise RuntimeError("solution mass is not 1; normalization row violated")
    partsA = {
        x: [frozenset(k for k, (alpha, _) in enumerate(states) if alpha[x] == a)
            for a in range(box.nA)]
        for x in range(box.nX)
    }
    partsB = {
        y: [frozenset(k for k, (_, beta) in enumerate(states) if beta[y] == b)
            for b in range(box.nB)]
        for y in range(box.nY)
    }
    return make_model(P, partsA, partsB)


# ---------------------------------------------------------------------------
# locality

@dataclass(frozen=True)
class BellCertificate:
    """A linear functional on box entries separating the box from the
    local set: every deterministic strategy scores <= local_bound, the
    box scores box_value > local_bound."""

    coeffs: dict  # (a, b, x, y) -> Fraction
    local_bound: Fraction
    box_value: Fraction


@dataclass(frozen=True)
class LocalityVerdict:
    local: bool
    weights: tuple  # ((state, weight), ...) over instruction states; None if nonlocal
    certificate: BellCertificate  # None if local


def is_local(box: Box, budget=DEFAULT_BUDGET) -> LocalityVerdict:
    """Exact LP feasibility of nonnegative M P = C, with certificate."""
    states, labels, M = _shape_system(box.nA, box.nB, box.nX, box.nY, budget)
    C = [box.p(a, b, x, y) for (a, b, x, y) in labels]
    ok, x, dual = feasible_nonneg(M, C)
    if ok:
        weights = tuple(
            (states[k], xk) for k, xk in enumerate(x) if xk != 0
        )
        return LocalityVerdict(True, weights, None)
    coeffs = {labels[i]: dual[i] for i in range(len(labels)) if dual[i] != 0}
    bound = max(
        sum((dual[i] * M[i][k] for i in range(len(labels))), ZERO)
        for k in range(len(states))
    )
    value = sum((dual[i] * C[i] for i in range(len(labels))), ZERO)
    return LocalityVerdict(False, None, BellCertificate(coeffs, bound, value))


# ---------------------------------------------------------------------------
# Bell functionals on boxes

def bell_value(box: Box, coeffs) -> Fraction:
    return sum((w * box.p(*key) for key, w in coeffs.items()), ZERO)


def bell_local_bound(coeffs, nA, nB, nX, nY) -> Fraction:
    """Maximum of the functional over all deterministic strategies."""
    best = None
    for alpha in product(range(nA), repeat=nX):
        for beta in product(range(nB), repeat=nY):
            v = sum(
                (coeffs.get((alpha[x], beta[y], x, y), ZERO)
                 for x in range(nX) for y in range(nY)),
                ZERO,
            )
            if best is None or v > best:
                best = v
    return best


def correlator_functional(weights) -> dict:
    """Functional sum_xy w_xy * c_xy as coefficients on binary box entries."""
    coeffs = {}
    for (x, y), w in weights.items():
        for a in range(2):
            for b in range(2):
                coeffs[(a, b, x, y)] = Fraction(w) * (1 if a == b else -1)
    return coeffs


def locality_to_json_doc(verdict: LocalityVerdict) -> dict:
    if verdict.local:
        return {
            "local": True,
            "weights": [
                {"alice": list(alpha), "bob": list(beta), "weight": rat_str(w)}
                for (alpha, beta), w in verdict.weights
            ],
        }
    cert = verdict.certificate
    return {
        "local": False,
        "dual": [
            {"a": a, "b": b, "x": x, "y": y, "coeff": rat_str(w)}
            for (a, b, x, y), w in sorted(cert.coeffs.items())
        ],
        "local_bound": rat_str(cert.local_bound),
        "box_value": rat_str(cert.box_value),
    }
