"""Reduce many-output boxes to effective 2x2 boxes, preserving disagreement.

The reduction keeps inputs 0 and 1 on both sides and coarse-grains outputs
through indicator functions chi.  On input 0 the effective output 0 tells
whether the source output fell in a chosen group (the stabilized certainty
set alpha_N / beta_N for common certainty of disagreement, the level-0
sets for singular disagreement); on input 1 the effective output 1 is the
source output 1 itself and everything else maps to 0:

    p~(a~ b~ | x~ y~) = sum over a, b of
        chi(a~ | x~, a) * chi(b~ | y~, b) * p(a b | x~ y~).

This is local post-processing, so it cannot create nonlocality that was
not already present, and it provably preserves the detected disagreement.
classify_general() routes an arbitrary finite box through this reduction
and classifies the effective box with the 2x2 machinery.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .boxes import Box, make_box
from .bridge import DEFAULT_BUDGET, is_local
from .classify import ClassificationVerdict, Conclusion, classify
from .epistemic import detect_ccd
from .errors import ReductionRefused, ShapeError
from .rationals import rat

ZERO = Fraction(0)


@dataclass(frozen=True)
class ReductionPlan:
    kept_inputs: tuple  # ((alice inputs), (bob inputs)), always ((0,1),(0,1))
    alpha_group: tuple
    beta_group: tuple
    mode: str  # "ccd" or "sd"


def reduce_box(box: Box, mode: str):
    """Coarse-grain to a 2x2x2x2 box; returns (reduced box, plan).

    The corresponding disagreement must hold on the source: the groups are
    read off its certainty hierarchy, and the theorem being exercised has
    the detection as hypothesis.  Refusal carries the failed report.
    """
    if mode not in ("ccd", "sd"):
        raise ValueError(f"mode must be 'ccd' or 'sd', got {mode!r}")
    if box.nX < 2 or box.nY < 2:
        raise ShapeError("reduction needs at least two inputs per party")
    report = detect_ccd(box)
    if mode == "ccd" and not report.ccd:
        raise ReductionRefused("source box has no common certainty of disagreement", report)
    if mode == "sd" and not report.sd:
        raise ReductionRefused("source box has no singular disagreement", report)
    h = report.hierarchy
    if mode == "ccd":
        a_group, b_group = set(h.alpha_N), set(h.beta_N)
    else:
        a_group, b_group = set(h.alphas[0]), set(h.betas[0])

    def chi_a(eff, x, a):
        if x == 0:
            return (a in a_group) == (eff == 0)
        return (a == 1) == (eff == 1)

    def chi_b(eff, y, b):
        if y == 0:
            return (b in b_group) == (eff == 0)
        return (b == 1) == (eff == 1)

    entries = {}
    for ea, eb, x, y in product(range(2), repeat=4):
        entries[(ea, eb, x, y)] = sum(
            (
                box.p(a, b, x, y)
                for a in box.outputs_a()
                for b in box.outputs_b()
                if chi_a(ea, x, a) and chi_b(eb, y, b)
            ),
            ZERO,
        )
    reduced = make_box(2, 2, 2, 2, entries)
    plan = ReductionPlan(
        ((0, 1), (0, 1)), tuple(sorted(a_group)), tuple(sorted(b_group)), mode
    )
    return reduced, plan


def split_output(box: Box, output: int = 0, at_input: int = 0, ratio=Fraction(1, 2)) -> Box:
    """Split one Alice output into two at a single input (test scaffolding).

    A new output label nA is appended; at the chosen input it takes a
    (1 - ratio) share of the split output's mass on every row, elsewhere it
    occurs with probability zero.  The result is again no-signaling: Bob's
    marginals are untouched and Alice's new marginals are consistent in y.
    """
    ratio = rat(ratio)
    new_a = box.nA
    entries = {}
    for a, b, x, y in product(
        range(box.nA + 1), range(box.nB), range(box.nX), range(box.nY)
    ):
        if a == new_a:
            v = (1 - ratio) * box.p(output, b, x, y) if x == at_input else ZERO
        elif a == output and x == at_input:
            v = ratio * box.p(output, b, x, y)
        else:
            v = box.p(a, b, x, y)
        entries[(a, b, x, y)] = v
    return make_box(box.nA + 1, box.nB, box.nX, box.nY, entries)


def classify_general(
    box: Box, relabel_search: bool = False, budget: int = DEFAULT_BUDGET
) -> ClassificationVerdict:
    """Classify a box of any finite shape.

    2x2x2x2 boxes go straight to classify().  Larger boxes are reduced
    along whichever disagreement they carry and the effective box's
    verdict is returned; local post-processing preserves quantum
    realizability, so a POSTQUANTUM verdict transfers to the source.
    Without disagreement there is no obstruction to report, and the
    locality field is filled in informatively when the shape fits the
    budget (None otherwise).
    """
    if (box.nA, box.nB, box.nX, box.nY) == (2, 2, 2, 2):
        return classify(box, relabel_search=relabel_search, budget=budget)
    report = detect_ccd(box)
    if report.ccd:
        reduced, _ = reduce_box(box, "ccd")
        return classify(reduced, budget=budget)
    if report.sd:
        reduced, _ = reduce_box(box, "sd")
        return classify(reduced, budget=budget)
    local = None
    if box.nA**box.nX * box.nB**box.nY <= budget:
        local = is_local(box, budget).local
    return ClassificationVerdict(
        local, None, None, None, False, Conclusion.NO_OBSTRUCTION_FOUND
    )


def plan_doc(plan: ReductionPlan) -> dict:
    return {
        "kept_inputs": {"alice": list(plan.kept_inputs[0]), "bob": list(plan.kept_inputs[1])},
        "alpha_group": list(plan.alpha_group),
        "beta_group": list(plan.beta_group),
        "mode": plan.mode,
    }


def plan_to_json(plan: ReductionPlan) -> str:
    return json.dumps(plan_doc(plan), indent=2)
