"""Point evaluation: frozen oracle values, closed forms, error-bound honesty."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselbounds.core import (
    AccuracyError,
    DomainError,
    EvalContext,
    ValueWithError,
    dual_path_checks,
    eval_I,
    eval_K,
    evaluation_path,
    ratio_I,
    ratio_K,
)

from frozen import FROZEN_I, FROZEN_K, FROZEN_MISC


@pytest.mark.parametrize("nu,x", sorted(FROZEN_I))
def test_eval_I_frozen(nu, x):
    got = eval_I(EvalContext(nu, x))
    want = FROZEN_I[(nu, x)]
    assert got.value == pytest.approx(want, rel=5e-13)
    # the claimed bound must cover the actual deviation
    assert abs(got.value - want) <= max(got.rel_error_bound, 1e-15) * abs(want)


@pytest.mark.parametrize("nu,x", sorted(FROZEN_K))
def test_eval_K_frozen(nu, x):
    got = eval_K(EvalContext(nu, x))
    want = FROZEN_K[(nu, x)]
    assert got.value == pytest.approx(want, rel=5e-13)
    assert abs(got.value - want) <= max(got.rel_error_bound, 1e-15) * abs(want)


def test_closed_forms_half_order():
    # I_{1/2}(x) = sqrt(2/(pi x)) sinh x, K_{1/2}(x) = sqrt(pi/(2x)) e^-x
    assert eval_I(EvalContext(0.5, 2.0)).value == pytest.approx(
        math.sqrt(1.0 / math.pi) * math.sinh(2.0), rel=1e-13)
    assert eval_K(EvalContext(0.5, 1.0)).value == pytest.approx(
        math.sqrt(0.5 * math.pi) * math.exp(-1.0), rel=1e-13)


def test_I_negative_integer_order_symmetry():
    # I_{-m} = I_m for integer m; the series remaps the order exactly
    assert eval_I(EvalContext(-10.0, 3.0)).value == eval_I(EvalContext(10.0, 3.0)).value
    assert eval_I(EvalContext(-1.0, 1.0)).value == eval_I(EvalContext(1.0, 1.0)).value


def test_K_symmetry_at_integer_and_noninteger():
    for nu in (1.0, 2.3, 7.5):
        a = eval_K(EvalContext(nu, 1.7)).value
        b = eval_K(EvalContext(-nu, 1.7)).value
        assert abs(a - b) <= 1e-12 * a


def test_eval_domain_errors():
    with pytest.raises(DomainError):
        EvalContext(0.0, 0.0)
    with pytest.raises(DomainError):
        EvalContext(0.0, -1.0)
    with pytest.raises(DomainError):
        EvalContext(25.0, 1.0)
    with pytest.raises(DomainError):
        EvalContext(0.0, 501.0)
    with pytest.raises(DomainError):
        eval_I(EvalContext(0.0, 1.0), target_rel_err=1e-15)


def test_mu_derived_field():
    ctx = EvalContext(1.5, 2.0)
    assert ctx.mu == 1.5 * 1.5 - 0.25


def test_unreachable_accuracy_raises():
    # deep in the series region the rounding bound alone exceeds 1e-14
    with pytest.raises(AccuracyError):
        eval_I(EvalContext(19.5, 400.0), target_rel_err=1.01e-14)


def test_quadrature_refuses_untruncatable_argument():
    # at absurdly small x the cosh integrand has not decayed by the scan cap;
    # a silent truncation would certify a wrong value, so evaluation refuses
    with pytest.raises(AccuracyError):
        eval_K(EvalContext(1.0, 1e-35))  # integer order: no reflection fallback
    # non-integer orders still work there through the reflection path
    v = eval_K(EvalContext(0.5, 1e-30))
    want = math.sqrt(0.5 * math.pi / 1e-30) * math.exp(-1e-30)
    assert v.value == pytest.approx(want, rel=1e-13)


def test_no_overflow_leak_at_box_edges():
    hi = eval_I(EvalContext(0.0, 500.0))
    assert math.isfinite(hi.value) and hi.value > 1e200
    lo = eval_K(EvalContext(0.0, 500.0))
    assert math.isfinite(lo.value) and lo.value > 0.0
    big = eval_K(EvalContext(19.5, 1e-3))
    assert math.isfinite(big.value)


def test_scaled_region_paths():
    assert evaluation_path("I", 0.0, 400.0) == "asymptotic"
    assert evaluation_path("I", 0.0, 20.0) == "series"
    assert evaluation_path("K", 0.0, 400.0) == "asymptotic"
    assert evaluation_path("K", 0.3, 0.5) == "reflection"
    assert evaluation_path("K", 1.0, 0.5) == "quadrature"  # integer order
    assert evaluation_path("K", 2.0, 10.0) == "quadrature"


def test_ratio_I_examples():
    r = ratio_I(EvalContext(0.0, 1.0))
    assert r.value == pytest.approx(FROZEN_MISC[("ratio_I", 0.0, 1.0)], rel=1e-12)
    # y_{1/2} = x coth x - 1/2 forces the ratio (y - nu)/x = coth 1 - 1 at x = 1
    assert ratio_I(EvalContext(0.5, 1.0)).value == pytest.approx(
        1.0 / math.tanh(1.0) - 1.0, rel=1e-13)
    # ratio ~ x/2 as x -> 0 at nu = 0
    assert ratio_I(EvalContext(0.0, 1e-6)).value == pytest.approx(5e-7, rel=1e-6)


def test_ratio_I_range_watson():
    # the ratio lives in (0, 1) for nu >= -1/2; at large x it approaches 1
    # within one ulp (1 - ratio ~ e^{-2x}), so strictness is asserted where
    # doubles can resolve it
    for nu in (-0.5, 0.0, 1.0, 5.0):
        for x in (0.01, 1.0, 10.0, 200.0):
            r = ratio_I(EvalContext(nu, x)).value
            assert 0.0 < r <= 1.0
            if x <= 10.0:
                assert r < 1.0


def test_ratio_I_needs_nu_ge_minus_one():
    with pytest.raises(DomainError):
        ratio_I(EvalContext(-1.5, 1.0))
    # nu = -1 itself works through the integer-order symmetry (ratio > 1)
    assert ratio_I(EvalContext(-1.0, 1.0)).value > 1.0


def test_ratio_K_examples():
    # z_{1/2} = -x-1/2 forces K_{3/2}/K_{1/2} = (nu - z)/x = 2 at x = 1
    assert ratio_K(EvalContext(0.5, 1.0)).value == pytest.approx(2.0, rel=1e-13)
    assert ratio_K(EvalContext(0.0, 1.0)).value == pytest.approx(
        FROZEN_MISC[("ratio_K", 0.0, 1.0)], rel=1e-12)
    assert ratio_K(EvalContext(1.0, 1.0)).value == pytest.approx(
        FROZEN_MISC[("ratio_K", 1.0, 1.0)], rel=1e-12)
    for nu in (0.0, 1.0, 4.0):
        assert ratio_K(EvalContext(nu, 2.0)).value > 1.0


def test_dual_paths_agree_in_overlap():
    for label, diff in dual_path_checks():
        assert diff < 1e-11, label


def test_value_with_error_interface():
    v = ValueWithError(2.0, 1e-13)
    assert float(v) == 2.0
    assert v.abs_error_bound == pytest.approx(2e-13)


@settings(max_examples=60, deadline=None)
@given(nu=st.floats(-0.99, 20.0), x=st.floats(1e-3, 500.0))
def test_I_positive_for_nu_above_minus_one(nu, x):
    assert eval_I(EvalContext(nu, x)).value > 0.0


@settings(max_examples=60, deadline=None)
@given(nu=st.floats(-10.0, 10.0), x=st.floats(1e-3, 500.0))
def test_K_positive_and_symmetric(nu, x):
    # |nu| <= 10 keeps the mirrored order inside the supported box
    a = eval_K(EvalContext(nu, x))
    assert a.value > 0.0
    b = eval_K(EvalContext(-nu, x))
    assert abs(a.value - b.value) <= 1e-12 * a.value


@settings(max_examples=40, deadline=None)
@given(nu=st.floats(-1.0, 19.0), x=st.floats(1e-3, 490.0))
def test_ratio_paths_cross_check_never_trips(nu, x):
    # both dual-route checks are hard errors; they must stay silent on
    # well-conditioned inputs across the whole box
    ratio_I(EvalContext(nu, x))
    ratio_K(EvalContext(nu, x))


@settings(max_examples=25, deadline=None)
@given(nu=st.floats(-9.5, 19.5), x=st.floats(1e-2, 450.0))
def test_eval_matches_mpmath(nu, x):
    from mpmath import besseli, besselk, mp, mpf

    mp.dps = 30
    ctx = EvalContext(nu, x)
    vk = eval_K(ctx)
    ref = besselk(mpf(nu), mpf(x))
    assert abs(vk.value - float(ref)) <= max(vk.rel_error_bound, 1e-14) * float(ref)
    try:
        vi = eval_I(ctx)
    except AccuracyError:
        return  # extreme corner (e.g. leading term underflow); allowed to refuse
    refi = float(besseli(mpf(nu), mpf(x)))
    assert abs(vi.value - refi) <= max(vi.rel_error_bound, 1e-14) * abs(refi)
