"""Partition models, certainty towers, and an exhaustive agreement check.

A (classical) ontological model is a finite state space with a rational
probability measure and, for each party and each input, a partition of the
states labeled by outputs.  Signed measures are representable (they arise
when converting nonlocal boxes) but every epistemic operation here demands
an honest unsigned measure.

The tower mirrors the box-side certainty hierarchy on the state space.
Alice's information is her input-0 partition; given an event pair
(E_A, E_B) and candidate values qA, qB,

    A_0 = { w : P(E_B | cell_A(w)) = qA },     B_0 symmetric,
    A_{n+1} = { w in A_n : P(B_n | cell_A(w)) = 1 },   B_{n+1} symmetric,

iterated simultaneously until both sides repeat.  Common certainty of
(qA, qB) holds at w* when w* survives in A_N and B_N.  The agreement
property asserts that for perfectly correlated events this forces qA = qB;
verify_agreement_theorem() checks that exhaustively over all small models.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import ParseError, PreconditionError, StructuralError
from .rationals import rat, rat_str

ZERO = Fraction(0)

# enumeration never runs beyond these, whatever the caller asks for
HARD_OMEGA_CAP = 6
HARD_DENOM_CAP = 4


@dataclass(frozen=True)
class OntologicalModel:
    """States 0..omega_count-1 with measure and per-input output partitions.

    partsA[x] is a tuple of frozensets, indexed by Alice's output label;
    partsB[y] likewise.  Cells may be empty (an output that never occurs).
    signed is True iff some state carries negative mass.
    """

    omega_count: int
    measure: tuple
    partsA: dict
    partsB: dict
    signed: bool


def make_model(measure, partsA, partsB) -> OntologicalModel:
    measure = tuple(rat(m) for m in measure)
    n = len(measure)
    if sum(measure, ZERO) != 1:
        raise StructuralError("measure does not sum to 1")
    norm_a = {x: tuple(frozenset(c) for c in cells) for x, cells in partsA.items()}
    norm_b = {y: tuple(frozenset(c) for c in cells) for y, cells in partsB.items()}
    for side, parts in (("A", norm_a), ("B", norm_b)):
        for inp, cells in parts.items():
            seen = set()
            for c in cells:
                if c & seen:
                    raise StructuralError(f"parts{side}[{inp}] cells overlap")
                seen |= c
            if seen != set(range(n)):
                raise StructuralError(f"parts{side}[{inp}] does not cover the states")
    signed = any(m < 0 for m in measure)
    return OntologicalModel(n, measure, norm_a, norm_b, signed)


@dataclass(frozen=True)
class EventPair:
    EA: frozenset
    EB: frozenset


def mass(model: OntologicalModel, states) -> Fraction:
    return sum((model.measure[w] for w in states), ZERO)


def conditional_mass(model: OntologicalModel, event, given) -> Fraction:
    """P(event | given); raises on a null conditioning set."""
    den = mass(model, given)
    if den == 0:
        raise PreconditionError("conditioning on a null state set")
    return mass(model, set(event) & set(given)) / den


def perfectly_correlated(model: OntologicalModel, events: EventPair) -> bool:
    """True iff the symmetric difference of the events carries no mass."""
    return mass(model, events.EA ^ events.EB) == 0


def _check_tower_preconditions(model: OntologicalModel):
    if model.signed:
        raise PreconditionError("tower requires an unsigned measure")
    if 0 not in model.partsA or 0 not in model.partsB:
        raise PreconditionError("tower requires input-0 partitions for both parties")
    for ia, ca in enumerate(model.partsA[0]):
        for ib, cb in enumerate(model.partsB[0]):
            joint = ca & cb
            if joint and mass(model, joint) == 0:
                raise PreconditionError(
                    f"null join cell: A cell {ia} with B cell {ib}, "
                    f"states {sorted(joint)}"
                )


@dataclass(frozen=True)
class TowerResult:
    """Levels (A_0, B_0) .. (A_{N+1}, B_{N+1}) as frozenset pairs."""

    levels: tuple
    N: int

    @property
    def A_N(self):
        return self.levels[self.N][0]

    @property
    def B_N(self):
        return self.levels[self.N][1]


def tower(model: OntologicalModel, events: EventPair, qA, qB) -> TowerResult:
    """Iterate the certainty tower to stabilization.

    Nonempty cells all have positive mass once the null-join precondition
    holds, so every conditional below is defined.
    """
    _check_tower_preconditions(model)
    qA, qB = Fraction(qA), Fraction(qB)

    def level0(cells, event, q):
        out = set()
        for cell in cells:
            if cell and conditional_mass(model, event, cell) == q:
                out |= cell
        return frozenset(out)

    def certain_of(cells, current, target):
        out = set()
        for cell in cells:
            if cell and cell <= current and mass(model, cell & target) == mass(model, cell):
                out |= cell
        return frozenset(out)

    A = level0(model.partsA[0], events.EB, qA)
    B = level0(model.partsB[0], events.EA, qB)
    levels = [(A, B)]
    while True:
        A_next = certain_of(model.partsA[0], A, B)
        B_next = certain_of(model.partsB[0], B, A)
        levels.append((A_next, B_next))
        if (A_next, B_next) == (A, B):
            return TowerResult(tuple(levels), len(levels) - 2)
        A, B = A_next, B_next


def common_certainty_at(model, events, qA, qB, omega_star: int) -> bool:
    result = tower(model, events, qA, qB)
    return omega_star in result.A_N and omega_star in result.B_N


# ---------------------------------------------------------------------------
# exhaustive verification over all small models
#
# The enumeration works on integer masses (numerators over a common
# denominator) and bitmask state sets, so the inner loop does no rational
# arithmetic at all; conditionals are compared by cross-multiplication.
# A deterministic subsample of instances is re-run through the public
# tower() above as a self-check of the fast path.

@dataclass(frozen=True)
class AgreementCheckReport:
    bound_omega: int
    denominator_bound: int
    instances: int
    certainty_instances: int
    violations: int
    complete: bool
    max_iterations: int


def _set_partitions(n):
    """Canonical partitions of range(n) as tuples of cell bitmasks."""

    def rec(i, max_label, labels):
        if i == n:
            yield labels[:]
            return
        for lab in range(max_label + 1):
            labels.append(lab)
            yield from rec(i + 1, max(max_label, lab + 1), labels)
            labels.pop()

    for labels in rec(0, 0, []):
        blocks = [0] * (max(labels) + 1)
        for w, lab in enumerate(labels):
            blocks[lab] |= 1 << w
        yield tuple(blocks)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _measures(n, dmax):
    """All rational measures on n states with denominator <= dmax, deduplicated."""
    for d in range(1, dmax + 1):
        for ks in _compositions(d, n):
            if gcd(*ks, d) == 1:
                yield ks, d


def _bit_tower(mass_of, blocksA, blocksB, EA, EB, qa_num, qa_den, qb_num, qb_den):
    def level0(blocks, E, num, den):
        out = 0
        for cell in blocks:
            cm = mass_of(cell)
            if cm and mass_of(E & cell) * den == num * cm:
                out |= cell
        return out

    A = level0(blocksA, EB, qa_num, qa_den)
    B = level0(blocksB, EA, qb_num, qb_den)
    iters = 0
    while True:
        A2 = 0
        for cell in blocksA:
            if cell & A == cell and mass_of(B & cell) == mass_of(cell):
                A2 |= cell
        B2 = 0
        for cell in blocksB:
            if cell & B == cell and mass_of(A & cell) == mass_of(cell):
                B2 |= cell
        iters += 1
        if (A2, B2) == (A, B):
            return A, B, iters
        A, B = A2, B2


def _bits_to_set(bits, n):
    return frozenset(w for w in range(n) if bits >> w & 1)


def _cross_check(n, masses, d, blocksA, blocksB, EA, EB, qa, qb, expect_A, expect_B):
    model = make_model(
        [Fraction(k, d) for k in masses],
        {0: [_bits_to_set(c, n) for c in blocksA]},
        {0: [_bits_to_set(c, n) for c in blocksB]},
    )
    events = EventPair(_bits_to_set(EA, n), _bits_to_set(EB, n))
    result = tower(model, events, qa, qb)
    if (result.A_N, result.B_N) != (_bits_to_set(expect_A, n), _bits_to_set(expect_B, n)):
        raise RuntimeError("fast enumeration disagrees with the reference tower")


def verify_agreement_theorem(
    bound_omega: int, denominator_bound: int, cross_check_stride: int = 97
) -> AgreementCheckReport:
    """Check the agreement property on every small model.

    Enumerates all models up to the bounds (clamped to the documented
    budget of |Omega| <= 6 and denominators <= 4), all pairs of canonical
    partitions with non-null join, and all perfectly correlated event
    pairs; for each join cell it computes the only candidate values
    qA = P(E_B | cell_A), qB = P(E_A | cell_B) and runs the tower.  Every
    instance with common certainty must have qA = qB; the count of
    violations is returned (and must be zero).
    """
    omega = min(bound_omega, HARD_OMEGA_CAP)
    dmax = min(denominator_bound, HARD_DENOM_CAP)
    complete = omega == bound_omega and dmax == denominator_bound

    instances = certainty = violations = 0
    max_iters = 0
    for n in range(1, omega + 1):
        partitions = list(_set_partitions(n))
        for masses, d in _measures(n, dmax):
            def mass_of(bits, masses=masses, n=n):
                return sum(masses[w] for w in range(n) if bits >> w & 1)

            zero = 0
            for w in range(n):
                if masses[w] == 0:
                    zero |= 1 << w
            # all subsets of the zero-mass states: the ways EB may differ
            # from EA while staying perfectly correlated
            zero_subsets = []
            sub = zero
            while True:
                zero_subsets.append(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & zero
            for blocksA in partitions:
                for blocksB in partitions:
                    if any(
                        ca & cb and mass_of(ca & cb) == 0
                        for ca in blocksA
                        for cb in blocksB
                    ):
                        continue  # null join, outside the framework
                    for EA in range(1 << n):
                        for T in zero_subsets:
                            EB = EA ^ T
                            seen = set()
                            for ca in blocksA:
                                for cb in blocksB:
                                    if not ca & cb or (ca, cb) in seen:
                                        continue
                                    seen.add((ca, cb))
                                    mA, mB = mass_of(ca), mass_of(cb)
                                    qa_num = mass_of(EB & ca)
                                    qb_num = mass_of(EA & cb)
                                    A, B, iters = _bit_tower(
                                        mass_of, blocksA, blocksB,
                                        EA, EB, qa_num, mA, qb_num, mB,
                                    )
                                    max_iters = max(max_iters, iters)
                                    instances += 1
                                    if instances % cross_check_stride == 0:
                                        _cross_check(
                                            n, masses, d, blocksA, blocksB, EA, EB,
                                            Fraction(qa_num, mA), Fraction(qb_num, mB),
                                            A, B,
                                        )
                                    if A & B & ca & cb:
                                        certainty += 1
                                        if qa_num * mB != qb_num * mA:
                                            violations += 1
    return AgreementCheckReport(
        omega, dmax, instances, certainty, violations, complete, max_iters
    )


# ---------------------------------------------------------------------------
# JSON round trip

def model_doc(model: OntologicalModel) -> dict:
    return {
        "omega": model.omega_count,
        "P": [rat_str(m) for m in model.measure],
        "partsA": {
            str(x): [sorted(c) for c in cells] for x, cells in model.partsA.items()
        },
        "partsB": {
            str(y): [sorted(c) for c in cells] for y, cells in model.partsB.items()
        },
        "signed": model.signed,
    }


def model_to_json(model: OntologicalModel) -> str:
    return json.dumps(model_doc(model), indent=2)


def model_from_json(text: str) -> OntologicalModel:
    try:
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    try:
        measure = [rat(m) for m in doc["P"]]
        partsA = {int(x): cells for x, cells in doc["partsA"].items()}
        partsB = {int(y): cells for y, cells in doc["partsB"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"model document missing field: {exc}") from exc
    model = make_model(measure, partsA, partsB)
    if len(measure) != int(doc.get("omega", len(measure))):
        raise StructuralError("omega does not match the measure length")
    return model
