"""Certainty hierarchies and disagreement detection for boxes.

The two parties observe outputs at inputs x = 0 and y = 0 and reason about
the events "Bob outputs 1 at y = 1" and "Alice outputs 1 at x = 1".  Their
respective probability assignments, conditioned on their own outputs, are

    qA = p(b=1 | a=0, x=0, y=1),
    qB = p(a=1 | b=0, x=1, y=0).

The certainty hierarchy captures iterated certainty about these values:

    alpha_0 = outputs a with p(a|x=0) > 0 and p(b=1|a, x=0, y=1) = qA,
    beta_0  symmetric for Bob,
    alpha_{n+1} = { a in alpha_n : p(b in beta_n | a, x=0, y=0) = 1 },
    beta_{n+1}  symmetric,

with both sides updated simultaneously.  The sequence stabilizes after at
most nA + nB proper shrinks; N is the first index where both sides repeat.

Common certainty of disagreement (CCD) holds when qA and qB are defined
and different, the box is perfectly correlated at (1, 1), the witness
event (a=0, b=0, x=0, y=0) has positive probability, and output 0 survives
to alpha_N and beta_N.  Singular disagreement (SD) is the extremal,
tower-free variant: qA = 1 and qB = 0 outright.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .boxes import (
    Box,
    Conditional,
    cond_event_a,
    cond_event_b,
    conditional,
    is_perfectly_correlated,
)
from .errors import ShapeError
from .rationals import rat_str

NULL_CONDITIONING = "null conditioning event"


@dataclass(frozen=True)
class CertaintyHierarchy:
    """Levels alpha_0 .. alpha_{N+1} (and beta likewise) as sorted tuples."""

    alphas: tuple
    betas: tuple
    N: int
    qA: Conditional
    qB: Conditional

    @property
    def alpha_N(self):
        return self.alphas[self.N]

    @property
    def beta_N(self):
        return self.betas[self.N]


@dataclass(frozen=True)
class DisagreementReport:
    hierarchy: CertaintyHierarchy
    ccd: bool
    sd: bool
    witness: tuple  # the event (a, b, x, y) the detection is anchored to
    perfectly_correlated: bool
    reason: str = ""


def hierarchy(box: Box, qA, qB) -> CertaintyHierarchy:
    """Compute the certainty hierarchy for externally supplied qA, qB.

    qA and qB may be rationals or Conditional values; an undefined
    Conditional yields empty level-0 sets (no output can be certain of an
    undefined value).  Outputs whose own marginal at the observation input
    is zero are excluded from level 0 rather than treated as vacuously
    certain.
    """
    qa = qA if isinstance(qA, Conditional) else Conditional(Fraction(qA), True)
    qb = qB if isinstance(qB, Conditional) else Conditional(Fraction(qB), True)

    alpha = []
    beta = []
    if qa.defined:
        for a in box.outputs_a():
            c = conditional(box, ("B", 1), (a, 0, 1))
            if c.defined and c.value == qa.value:
                alpha.append(a)
    if qb.defined:
        for b in box.outputs_b():
            c = conditional(box, ("A", 1), (b, 1, 0))
            if c.defined and c.value == qb.value:
                beta.append(b)

    alphas = [tuple(alpha)]
    betas = [tuple(beta)]
    while True:
        cur_a, cur_b = alphas[-1], betas[-1]
        next_a = tuple(
            a for a in cur_a if cond_event_b(box, cur_b, a, 0, 0).equals(1)
        )
        next_b = tuple(
            b for b in cur_b if cond_event_a(box, cur_a, b, 0, 0).equals(1)
        )
        alphas.append(next_a)
        betas.append(next_b)
        if next_a == cur_a and next_b == cur_b:
            break
    return CertaintyHierarchy(tuple(alphas), tuple(betas), len(alphas) - 2, qa, qb)


def _assess(box: Box) -> DisagreementReport:
    if min(box.nA, box.nB, box.nX, box.nY) < 2:
        raise ShapeError("disagreement analysis needs two outputs and inputs per party")
    qA = conditional(box, ("B", 1), (0, 0, 1))
    qB = conditional(box, ("A", 1), (0, 1, 0))
    h = hierarchy(box, qA, qB)
    corr = is_perfectly_correlated(box, 1, 1)
    witness_mass = box.p(0, 0, 0, 0)

    reason = ""
    if not (qA.defined and qB.defined):
        reason = NULL_CONDITIONING
        return DisagreementReport(h, False, False, (0, 0, 0, 0), corr, reason)

    ccd = (
        corr
        and qA.value != qB.value
        and witness_mass > 0
        and 0 in h.alpha_N
        and 0 in h.beta_N
    )
    sd = corr and qA.value == 1 and qB.value == 0 and witness_mass > 0
    return DisagreementReport(h, ccd, sd, (0, 0, 0, 0), corr, reason)


def detect_ccd(box: Box) -> DisagreementReport:
    """Full disagreement report; the ccd field answers the question."""
    return _assess(box)


def detect_sd(box: Box) -> DisagreementReport:
    """Same report as detect_ccd; the sd field answers the question."""
    return _assess(box)


def mutual_certainty_depth(box: Box) -> int:
    """Smallest N with alpha_N = alpha_{N+1} and beta_N = beta_{N+1}.

    Two-output boxes always stabilize by level 1.
    """
    return _assess(box).hierarchy.N


def report_doc(report: DisagreementReport) -> dict:
    h = report.hierarchy
    return {
        "qA": rat_str(h.qA.value) if h.qA.defined else None,
        "qB": rat_str(h.qB.value) if h.qB.defined else None,
        "ccd": report.ccd,
        "sd": report.sd,
        "depth": h.N,
        "alphaN": list(h.alpha_N),
        "betaN": list(h.beta_N),
        "reason": report.reason,
    }


def report_to_json(report: DisagreementReport) -> str:
    return json.dumps(report_doc(report), indent=2)
