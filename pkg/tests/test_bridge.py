"""Instruction-set models, box conversion in both directions, locality."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import agreebox as ab
from agreebox.bridge import (
    instruction_states,
    instruction_system,
    row_labels,
)


def rational_weights(n):
    return st.lists(
        st.integers(min_value=0, max_value=6), min_size=n, max_size=n
    ).filter(lambda ws: any(ws))


def local_mixture(ws):
    total = sum(ws)
    weighted = [
        (s, F(w, total))
        for s, w in zip(ab.deterministic_strategies(), ws)
        if w
    ]
    return ab.mix_strategies(weighted)


# ---------------------------------------------------------------------------
# the linear system

def test_state_enumeration_order_and_count():
    states = instruction_states(2, 2, 2, 2)
    assert len(states) == 16
    assert states[0] == ((0, 0), (0, 0))
    assert states[1] == ((0, 0), (0, 1))
    assert states[-1] == ((1, 1), (1, 1))


def test_state_budget():
    with pytest.raises(ab.BudgetError):
        instruction_states(4, 4, 4, 4)
    with pytest.raises(ab.BudgetError):
        instruction_states(2, 2, 2, 2, budget=10)


def test_each_constraint_row_touches_the_right_states():
    # a row (a, b, x, y) selects states free in the other nX - 1 and
    # nY - 1 coordinates
    sysm = instruction_system(ab.pr_box())
    labels = row_labels(2, 2, 2, 2)
    assert len(sysm.M) == 16
    for i, (a, b, x, y) in enumerate(labels):
        assert sum(sysm.M[i]) == 4
        for k, (alpha, beta) in enumerate(sysm.states):
            assert sysm.M[i][k] == (1 if alpha[x] == a and beta[y] == b else 0)


# ---------------------------------------------------------------------------
# model -> box

def test_point_mass_model_gives_deterministic_box():
    # the lone state answers 0 to every question
    m = ab.make_model(
        [F(1)],
        {0: [{0}, set()], 1: [{0}, set()]},
        {0: [{0}, set()], 1: [{0}, set()]},
    )
    assert ab.model_to_box(m) == ab.strategy_box(0, 0, 0, 0)


def test_crosswise_model_gives_uniform_box():
    m = ab.make_model(
        [F(1, 4)] * 4,
        {0: [{0, 1}, {2, 3}], 1: [{0, 1}, {2, 3}]},
        {0: [{0, 2}, {1, 3}], 1: [{0, 2}, {1, 3}]},
    )
    assert ab.model_to_box(m) == ab.uniform_box()


def test_model_to_box_matches_cell_intersections():
    measure = [F(1, 8), F(1, 8), F(1, 4), F(1, 2)]
    partsA = {0: [{0, 1}, {2, 3}], 1: [{0, 3}, {1, 2}]}
    partsB = {0: [{0, 2}, {1, 3}], 1: [{0}, {1, 2, 3}]}
    box = ab.model_to_box(ab.make_model(measure, partsA, partsB))
    for x in range(2):
        for y in range(2):
            for a in range(2):
                for b in range(2):
                    cell = partsA[x][a] & partsB[y][b]
                    assert box.p(a, b, x, y) == sum(
                        (measure[w] for w in cell), F(0)
                    )


def test_model_to_box_rejects_ragged_partitions():
    m = ab.make_model(
        [F(1, 2), F(1, 2)], {0: [{0}, {1}], 1: [{0, 1}]}, {0: [{0, 1}]}
    )
    with pytest.raises(ab.ShapeError):
        ab.model_to_box(m)


# ---------------------------------------------------------------------------
# box -> model

def test_deterministic_box_gives_point_mass():
    m = ab.box_to_model(ab.strategy_box(0, 0, 0, 0))
    assert not m.signed
    assert m.measure[0] == 1
    assert all(w == 0 for w in m.measure[1:])


def test_pr_box_needs_signed_weights():
    m = ab.box_to_model(ab.pr_box())
    assert m.signed
    assert sum(m.measure, F(0)) == 1


def test_roundtrip_is_exact():
    for box in (
        ab.pr_box(),
        ab.uniform_box(),
        ab.ccd_table_box(F(1, 2), F(1, 4), F(1, 2), F(0)),
        ab.sd_table_box(F(1, 2), F(1, 2), F(0), F(1, 2)),
    ):
        assert ab.model_to_box(ab.box_to_model(box)) == box


@settings(max_examples=40, deadline=None)
@given(rational_weights(16))
def test_roundtrip_on_local_mixtures(ws):
    box = local_mixture(ws)
    assert ab.model_to_box(ab.box_to_model(box)) == box


def test_signaling_box_is_rejected():
    # Bob echoes Alice's input: normalized but signaling
    rows = {
        (0, 0): [1, 0, 0, 0],
        (0, 1): [1, 0, 0, 0],
        (1, 0): [0, 1, 0, 0],
        (1, 1): [0, 1, 0, 0],
    }
    box = ab.box_from_rows({k: list(map(F, v)) for k, v in rows.items()})
    assert not ab.validate(box).ok
    with pytest.raises(ab.PreconditionError):
        ab.box_to_model(box)


# ---------------------------------------------------------------------------
# locality

def test_uniform_box_is_local_with_reproducing_weights():
    verdict = ab.is_local(ab.uniform_box())
    assert verdict.local
    assert verdict.certificate is None
    # the returned decomposition rebuilds the box
    total = {}
    for (alpha, beta), w in verdict.weights:
        assert w > 0
        for x in range(2):
            for y in range(2):
                key = (alpha[x], beta[y], x, y)
                total[key] = total.get(key, F(0)) + w
    for key, value in total.items():
        assert value == F(1, 4)


def test_pr_box_is_nonlocal_with_verified_certificate():
    verdict = ab.is_local(ab.pr_box())
    assert not verdict.local
    cert = verdict.certificate
    assert cert.box_value > cert.local_bound
    assert ab.bell_value(ab.pr_box(), cert.coeffs) == cert.box_value
    assert ab.bell_local_bound(cert.coeffs, 2, 2, 2, 2) <= cert.local_bound


@settings(max_examples=40, deadline=None)
@given(rational_weights(16))
def test_local_mixtures_are_certified_local(ws):
    verdict = ab.is_local(local_mixture(ws))
    assert verdict.local


def test_disagreement_form_boxes_are_nonlocal():
    for r, s, t, u in [
        (F(1, 2), F(1, 4), F(1, 2), F(0)),
        (F(3, 4), F(1, 2), F(1, 2), F(0)),
        (F(1, 2), F(1, 4), F(1, 2), F(1, 8)),
    ]:
        box = ab.ccd_table_box(r, s, t, u)
        assert not ab.caption_violations("ccd", r, s, t, u)
        assert not ab.is_local(box).local


# ---------------------------------------------------------------------------
# Bell functionals

def test_chsh_functional_on_pr():
    coeffs = ab.correlator_functional({(0, 0): 1, (1, 0): 1, (1, 1): 1, (0, 1): -1})
    assert ab.bell_value(ab.pr_box(), coeffs) == 4
    assert ab.bell_local_bound(coeffs, 2, 2, 2, 2) == 2


def test_locality_json_doc():
    doc = ab.locality_to_json_doc(ab.is_local(ab.uniform_box()))
    assert doc["local"] is True
    assert all(entry["weight"] != "0" for entry in doc["weights"])
    doc = ab.locality_to_json_doc(ab.is_local(ab.pr_box()))
    assert doc["local"] is False
    assert "weights" not in doc
    assert doc["box_value"] != doc["local_bound"]
