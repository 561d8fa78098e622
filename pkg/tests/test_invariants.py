from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import convergent_fraction
from twobridge.braidkit import ConwayNotation, normalize_odd
from twobridge.errors import IdentityViolation, LinkNotKnotError
from twobridge.invariants import (
    check_mirror,
    check_sum,
    closed_form_R,
    knot_diagram,
    lens_label,
    r_invariant,
    reduced_R,
    report,
    shift,
)

knots = (
    st.tuples(st.sampled_from([1, -1]), st.lists(st.integers(1, 5), min_size=1, max_size=5))
    .map(lambda t: normalize_odd(ConwayNotation(tuple(t[0] * b for b in t[1]))))
    .filter(lambda c: convergent_fraction(list(c.entries)).numerator % 2)
)

REPORT_FIELDS = [
    "conway", "fraction", "det", "lens_space", "e", "w", "mu_I", "mu_II",
    "s_R", "r_tilde", "R", "sigma", "r", "generator_count",
]


@pytest.mark.parametrize("e, w, n, value", [
    (3, -3, 2, Fraction(1)),
    (0, 0, 1, Fraction(0)),
    (2, 0, 2, Fraction(0)),
    (1, 0, 1, Fraction(1, 4)),
])
def test_shift(e, w, n, value):
    assert shift(e, w, n) == value


def test_shift_rejects_no_strands():
    with pytest.raises(ValueError):
        shift(0, 0, 0)


def test_closed_form_R():
    assert closed_form_R(ConwayNotation((3,)), 3, -3) == 1


@pytest.mark.parametrize("entries, R", [((3,), 1), ((-3,), -1), ((2, 1, 1), 0), ((2, 2), 0), ((5,), 2)])
def test_reduced_R(entries, R):
    assert reduced_R(ConwayNotation(entries)) == R


@pytest.mark.parametrize("sigma, r", [(2, Fraction(3, 2)), (0, 0), (-2, Fraction(-3, 2)), (4, 3)])
def test_r_invariant(sigma, r):
    assert r_invariant(sigma) == r


def test_r_invariant_odd():
    with pytest.raises(ValueError):
        r_invariant(1)


@pytest.mark.parametrize("frac, label", [
    (Fraction(3), "L(3,1)"),
    (Fraction(5, 2), "L(5,2)"),
    (Fraction(-5, 2), "L(5,3)"),
])
def test_lens_label(frac, label):
    assert lens_label(frac) == label


def test_report_trefoil():
    rep = report(ConwayNotation((3,)))
    assert (rep.det, rep.lens_space, rep.generator_count) == (3, "L(3,1)", 3)
    assert (rep.e, rep.w, rep.mu_I, rep.mu_II) == (3, -3, 0, -3)
    assert (rep.r_tilde, rep.s_R, rep.R, rep.sigma, rep.r) == (0, 1, 1, 2, Fraction(3, 2))


def test_report_five_one():
    rep = report(ConwayNotation((5,)))
    assert (rep.det, rep.R, rep.sigma, rep.r) == (5, 2, 4, 3)


def test_report_normalizes():
    rep = report(ConwayNotation((2, 2)))
    assert rep.conway.entries == (2, 1, 1)
    assert rep.det == 5 and rep.sigma == 0


def test_report_rejects_link():
    with pytest.raises(LinkNotKnotError):
        report(ConwayNotation((2,)))
    with pytest.raises(LinkNotKnotError):
        report(ConwayNotation((2, 1, 1, 1)))


def test_report_trace():
    lines = []
    report(ConwayNotation((2, 1, 1)), trace=lines)
    assert len(lines) == 3


def test_report_json_fields():
    data = report(ConwayNotation((3,))).to_json()
    assert list(data) == REPORT_FIELDS
    assert data["conway"] == [3]
    assert data["R"] == {"num": 1, "den": 1}
    assert data["r"] == {"num": 3, "den": 2}


@settings(max_examples=60, deadline=None)
@given(knots)
def test_report_identities(c):
    rep = report(c)
    p = abs(convergent_fraction(list(c.entries)).numerator)
    assert rep.det == rep.generator_count == p
    assert rep.R == Fraction(rep.sigma, 2)
    assert rep.w == rep.mu_II - rep.mu_I
    assert rep.r == Fraction(3 * rep.sigma, 4)


def test_check_mirror():
    v = check_mirror(ConwayNotation((3,)))
    assert v.sigma == (2, -2)
    assert v.det == (3, 3)
    assert v.r == (Fraction(3, 2), Fraction(-3, 2))
    assert v.ok and v.to_json()["antisymmetric"] is True
    assert check_mirror(None).sigma == (0, 0)


def test_check_sum():
    v = check_sum(ConwayNotation((3,)), ConwayNotation((2, 1, 1)))
    assert v.sigma == (2, 0, 2)
    assert v.det == (3, 5, 15)
    assert v.crossings == 7
    data = v.to_json()
    assert data["r_total"] == {"num": 3, "den": 2}
    assert data["additive"] is True


def test_check_sum_cancels():
    v = check_sum(ConwayNotation((3,)), ConwayNotation((-3,)))
    assert v.sigma[2] == 0 and v.det[2] == 9


def test_check_sum_unknot():
    v = check_sum(None, ConwayNotation((5,)))
    assert v.sigma == (0, 4, 4)


def test_knot_diagram():
    assert knot_diagram(None).diagram.crossing_count == 0
    assert knot_diagram(ConwayNotation((2, 2))).diagram.crossing_count == 4


def test_identity_violation_message():
    err = IdentityViolation("a = b", 1, 2, "ctx")
    assert "a = b" in str(err)
