import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.fields import GF, QQ
from lefschetz.ideals import hilbert_profile, parse_ideal, restrict_modulo_linear
from lefschetz.rings import linear_form, poly_pow
from lefschetz.wlp import (cokernel_dimension, kernel_witness, mult_map_rank,
                           wlp_check)

XYZ = ["x", "y", "z"]


def ideal(text, field=QQ, variables=XYZ):
    return parse_ideal(text, variables, field)


def all_ones(n, field):
    return linear_form(n, [1] * n, field)


def test_ci_has_wlp_char_zero():
    v = wlp_check(ideal("x^2,y^2,z^2"), QQ)
    assert v.has_wlp and v.conclusive


def test_mult_map_rank_values():
    I = ideal("x^3,y^3,z^3,x*y*z")
    L = all_ones(3, QQ)
    data = mult_map_rank(I, L, 2, QQ)
    assert data["h_d"] == 6 and data["h_de"] == 6
    assert data["rank"] == 5  # the known maximal-rank failure


def test_quadratic_form_rank():
    I = ideal("x^3,y^3,z^3,x*y*z")
    F = poly_pow(all_ones(3, QQ), 2, QQ)
    data = mult_map_rank(I, F, 1, QQ)
    assert data["h_d"] == 3 and data["h_de"] == 6


def test_monomial_verdict_is_conclusive_both_ways():
    holds = wlp_check(ideal("x^4,y^4,z^4"), QQ)
    fails = wlp_check(ideal("x^3,y^3,z^3,x*y*z"), QQ)
    assert holds.has_wlp and holds.conclusive
    assert not fails.has_wlp and fails.conclusive
    assert fails.failure_degrees == [2]


def test_char2_square_failure():
    f = GF(2)
    v = wlp_check(ideal("x^2,y^2,z^2", f), f)
    assert not v.has_wlp
    assert v.failure_degrees == [1]


def test_explicit_form_strategy():
    f = GF(3)
    I = ideal("x^3,y^3,z^3", f)
    L = linear_form(3, [1, 1, 0], f)  # degenerate choice, not a Lefschetz element
    v = wlp_check(I, f, strategy="explicit", form=L)
    assert not v.has_wlp
    assert not v.conclusive  # a single bad form proves nothing


def test_explicit_rejects_nonlinear():
    I = ideal("x^2,y^2,z^2")
    with pytest.raises(ValueError):
        wlp_check(I, QQ, strategy="explicit",
                  form=poly_pow(all_ones(3, QQ), 2, QQ))


def test_random_strategy_is_seeded():
    I = ideal("x^3,y^3,z^3,x^2*y+y^2*z")
    a = wlp_check(I, QQ, strategy="random", seed=7)
    b = wlp_check(I, QQ, strategy="random", seed=7)
    assert a.has_wlp == b.has_wlp
    assert a.form_used == b.form_used


def test_full_scan_agrees_with_shortcut():
    for ch in (0, 3):
        f = QQ if ch == 0 else GF(ch)
        I = ideal("x^5,y^5,z^5,x^2*y^2*z", f)
        fast = wlp_check(I, f)
        slow = wlp_check(I, f, full_scan=True)
        assert fast.has_wlp == slow.has_wlp
        assert [r.rank for r in fast.reports] == [r.rank for r in slow.reports]


def test_kernel_witness_char_p_powers():
    for p in (2, 3, 5):
        f = GF(p)
        I = ideal(f"x^{p},y^{p},z^{p}", f)
        w = kernel_witness(I, f, p - 1)
        assert w == poly_pow(all_ones(3, f), p - 1, f).monic(f)


def test_kernel_witness_none_when_injective():
    I = ideal("x^2,y^2,z^2")
    assert kernel_witness(I, QQ, 1) is None


def test_kernel_witness_char_zero_failure():
    I = ideal("x^3,y^3,z^3,x*y*z")
    w = kernel_witness(I, QQ, 2)
    assert w is not None and w.degree == 2
    # leading coefficient normalized to one
    assert w.terms[max(w.terms)] == 1


def test_cokernel_matches_restriction():
    I = ideal("x^3,y^3,z^3,x*y*z")
    L = all_ones(3, QQ)
    hbar = hilbert_profile(restrict_modulo_linear(I, L, 2, QQ), QQ)
    for d in range(5):
        assert cokernel_dimension(I, L, d, QQ) == hbar[d + 1]


@given(st.integers(2, 4), st.integers(2, 4), st.integers(2, 4))
@settings(max_examples=20, deadline=None)
def test_rank_bounded_by_dimensions(a, b, c):
    I = ideal(f"x^{a},y^{b},z^{c}")
    L = all_ones(3, QQ)
    h = hilbert_profile(I)
    for d in range(h.socle_degree + 1):
        data = mult_map_rank(I, L, d, QQ)
        assert data["rank"] <= min(data["h_d"], data["h_de"])


@given(st.integers(2, 5))
@settings(max_examples=10, deadline=None)
def test_monomial_ci_wlp_char_zero(k):
    # monomial complete intersections have the WLP in characteristic zero
    v = wlp_check(ideal(f"x^{k},y^{k},z^{k}"), QQ)
    assert v.has_wlp and v.conclusive
