"""Form matchers, correlator gap, Hardy pattern, combined classification."""

import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import agreebox as ab


def mix(box_a, box_b, w):
    rows = {
        (x, y): [
            w * box_a.p(a, b, x, y) + (1 - w) * box_b.p(a, b, x, y)
            for a in range(2)
            for b in range(2)
        ]
        for x in range(2)
        for y in range(2)
    }
    return ab.box_from_rows(rows)


def params(denominator):
    values = [F(k, denominator) for k in range(denominator + 1)]
    return st.tuples(
        st.sampled_from(values),
        st.sampled_from(values),
        st.sampled_from(values),
        st.sampled_from(values),
    )


def valid_ccd(r, s, t, u):
    return s <= r and u <= t and t + s <= 1 and t + s >= r and r - t + u >= 0 and r + u <= 1


def valid_sd(r, s, t, u):
    return s + u + t <= 1 and s + t + r <= 1 and u + t + r >= 1


# ---------------------------------------------------------------------------
# form matching

def test_pr_box_matches_both_forms():
    box = ab.pr_box()
    ccd = ab.match_ccd_form(box)
    assert ccd.params == (F(1, 2), F(1, 2), F(1, 2), F(0))
    assert ccd.constraints_ok
    sd = ab.match_sd_form(box)
    assert sd.params == (F(1, 2), F(1, 2), F(0), F(1, 2))
    assert sd.constraints_ok


def test_ccd_form_present_but_constraints_fail():
    # s - u = r - t makes the two conditionals equal; the table shape is
    # still there but the disagreement constraint is not
    box = ab.ccd_table_box(F(1, 2), F(1, 4), F(1, 2), F(1, 4))
    form = ab.match_ccd_form(box)
    assert form is not None
    assert not form.constraints_ok


def test_sd_form_present_but_constraints_fail():
    box = ab.sd_table_box(F(1, 2), F(0), F(1, 2), F(0))
    form = ab.match_sd_form(box)
    assert form is not None
    assert not form.constraints_ok


def test_uniform_box_matches_neither_form():
    assert ab.match_ccd_form(ab.uniform_box()) is None
    assert ab.match_sd_form(ab.uniform_box()) is None


@settings(max_examples=150, deadline=None)
@given(params(8))
def test_ccd_matcher_inverts_the_generator(p):
    r, s, t, u = p
    if not valid_ccd(r, s, t, u):
        return
    form = ab.match_ccd_form(ab.ccd_table_box(r, s, t, u))
    assert form is not None
    assert form.params == (r, s, t, u)
    assert form.constraints_ok == (not ab.caption_violations("ccd", r, s, t, u))


@settings(max_examples=150, deadline=None)
@given(params(8))
def test_sd_matcher_inverts_the_generator(p):
    r, s, t, u = p
    if not valid_sd(r, s, t, u):
        return
    form = ab.match_sd_form(ab.sd_table_box(r, s, t, u))
    assert form is not None
    assert form.params == (r, s, t, u)


# ---------------------------------------------------------------------------
# correlator gap

def test_gap_on_pr_box():
    assert ab.tsirelson_obstruction(ab.pr_box()) == -2


def test_gap_vanishes_when_conditionals_agree():
    box = ab.ccd_table_box(F(1, 2), F(1, 4), F(1, 2), F(1, 4))
    assert ab.tsirelson_obstruction(box) == 0


def test_gap_inapplicable_without_perfect_correlation():
    assert ab.tsirelson_obstruction(ab.uniform_box()) is None


def test_gap_zero_on_perfectly_correlated_local_boxes():
    # agreeing strategies only: both perfect correlations hold, gap 0
    box = ab.mix_strategies(
        [((0, 0, 0, 0), F(1, 2)), ((1, 1, 1, 1), F(1, 2))]
    )
    assert ab.tsirelson_obstruction(box) == 0


def test_gap_formula_on_ccd_form():
    r, s, t, u = F(1, 2), F(1, 4), F(1, 2), F(0)
    box = ab.ccd_table_box(r, s, t, u)
    assert ab.tsirelson_obstruction(box) == 4 * ((r - t) - (s - u))


# ---------------------------------------------------------------------------
# Hardy pattern

def test_hardy_on_pr_box():
    assert ab.hardy_pattern(ab.pr_box())


def test_hardy_absent_on_uniform():
    assert not ab.hardy_pattern(ab.uniform_box())


# ---------------------------------------------------------------------------
# classify

def test_classify_pr_box():
    verdict = ab.classify(ab.pr_box())
    assert not verdict.local
    assert verdict.ccd_form.constraints_ok
    assert verdict.sd_form.constraints_ok
    assert verdict.tsirelson_gap == -2
    assert verdict.hardy
    assert verdict.conclusion is ab.Conclusion.POSTQUANTUM
    assert verdict.frame is None


def test_classify_uniform_box():
    verdict = ab.classify(ab.uniform_box())
    assert verdict.local
    assert verdict.conclusion is ab.Conclusion.LOCAL


def test_classify_half_pr_mix_is_local():
    # at one half the CHSH value sits exactly on the local bound
    verdict = ab.classify(mix(ab.pr_box(), ab.uniform_box(), F(1, 2)))
    assert verdict.local
    assert verdict.conclusion is ab.Conclusion.LOCAL


def test_classify_three_quarter_pr_mix_finds_no_obstruction():
    # nonlocal by LP, but no form, no applicable gap, no Hardy zeros
    verdict = ab.classify(mix(ab.pr_box(), ab.uniform_box(), F(3, 4)))
    assert not verdict.local
    assert verdict.ccd_form is None
    assert verdict.sd_form is None
    assert verdict.tsirelson_gap is None
    assert not verdict.hardy
    assert verdict.conclusion is ab.Conclusion.NO_OBSTRUCTION_FOUND


def test_classify_shape_guard():
    three = ab.split_output(ab.pr_box())
    with pytest.raises(ab.ShapeError):
        ab.classify(three)


def test_relabel_search_recovers_a_scrambled_box():
    frame = ab.RelabelFrame(
        (1, 0), (0, 1), ((1, 0), (0, 1)), ((0, 1), (1, 0))
    )
    scrambled = ab.relabel(ab.pr_box(), frame)
    plain = ab.classify(scrambled)
    assert plain.ccd_form is None and plain.sd_form is None
    searched = ab.classify(scrambled, relabel_search=True)
    assert searched.frame is not None
    assert searched.conclusion is ab.Conclusion.POSTQUANTUM
    assert not searched.local


def test_relabel_search_keeps_identity_frame_off_matching_boxes():
    verdict = ab.classify(ab.pr_box(), relabel_search=True)
    assert verdict.frame is None


@settings(max_examples=60, deadline=None)
@given(params(4))
def test_constraint_satisfying_ccd_boxes_are_never_local(p):
    r, s, t, u = p
    if not valid_ccd(r, s, t, u):
        return
    if ab.caption_violations("ccd", r, s, t, u):
        return
    verdict = ab.classify(ab.ccd_table_box(r, s, t, u))
    assert not verdict.local
    assert verdict.conclusion is ab.Conclusion.POSTQUANTUM


def test_verdict_json():
    doc = json.loads(ab.verdict_to_json(ab.classify(ab.pr_box())))
    assert doc["conclusion"] == "POSTQUANTUM"
    assert doc["ccd_form"]["params"] == {"r": "1/2", "s": "1/2", "t": "1/2", "u": "0"}
    assert doc["tsirelson_gap"] == "-2"
    assert "frame" not in doc
