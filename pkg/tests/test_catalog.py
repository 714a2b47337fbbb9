"""Catalog integrity: coverage, guards, selection, and the master sweep."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselbounds.catalog import (
    CATALOG,
    UnknownBoundError,
    applicable,
    best_bounds,
    catalog_rows,
    evaluate_bound,
    get,
    ids,
)
from besselbounds.core import EvalContext, QuantityKind as QK, quantity

EXPECTED_IDS = {
    # phiI
    "turan1_lower", "turan1_upper", "turan8_lower", "turan8_upper",
    "turan9_lower", "turan9_upper", "turan10_upper", "turan11_upper",
    "turan16_lower", "turan16_upper", "turanconj_lower", "joshi_turan7",
    # y
    "turan3_upper", "turan13_lower", "turan14_lower", "turan15_lower",
    "tuseg_lower", "tuseg_upper", "ylog_lower", "ylog_upper", "gro_lower",
    "turanconj2_upper",
    # ratios
    "turan5_lower", "turan5p_upper",
    # phiK
    "turan2_lower", "turan2_upper", "turan18_lower", "turan18_upper",
    "turan19_lower", "turan19_upper", "turan20_lower", "turan20_upper",
    "turan21_lower", "turan21_upper", "turan23_lower", "turan24_upper",
    "turan25_upper",
    # z
    "turan4_upper", "turan22_lower", "paltsev_lower", "segura74_lower",
    "segura75_upper", "zint_upper", "zlog_lower", "zlog_upper",
    # phiP
    "turan26_lower", "turan26_upper",
    # applications
    "b2hat_upper", "b2hat_upper_strong", "veff_lower", "veff_upper", "ncns",
}


def test_catalog_coverage_one_entry_per_side():
    assert set(CATALOG) == EXPECTED_IDS
    assert len(ids(status="conjecture")) == 2
    assert ids(status="refuted") == ["joshi_turan7"]
    # no duplicated (quantity, side, formula) rows
    keys = [(b.quantity, b.side, b.formula_str) for b in CATALOG.values()]
    assert len(keys) == len(set(keys))


def test_catalog_is_immutable():
    with pytest.raises(TypeError):
        CATALOG["new"] = CATALOG["turan1_lower"]  # type: ignore[index]


def test_unknown_id():
    with pytest.raises(UnknownBoundError):
        get("nope")
    with pytest.raises(UnknownBoundError):
        evaluate_bound("nope", 1.0, 1.0)


def test_evaluate_bound_examples():
    assert evaluate_bound("turan16_upper", 1.0, 1.0).value == pytest.approx(
        1.0 / math.sqrt(1.75), rel=1e-15)
    assert evaluate_bound("turan20_lower", 2.0, 2.0).value == pytest.approx(-0.5, rel=1e-15)
    # arccos(0) = pi/2 collapses turan23 to -1/x at nu = 1/2
    assert evaluate_bound("turan23_lower", 0.5, 3.0).value == pytest.approx(-1.0 / 3.0, rel=1e-14)


def test_inapplicable_points_never_raise():
    ev = evaluate_bound("turan23_lower", 0.3, 0.3)  # needs x > sqrt(-mu) = 0.4
    assert not ev.applicable and math.isnan(ev.value)
    ev = evaluate_bound("turan20_lower", 0.3, 1.0)  # needs |nu| >= 1/2
    assert not ev.applicable
    ev = evaluate_bound("zlog_lower", 0.8, 1.0)  # guarded to |nu| > 1
    assert not ev.applicable


def test_applicable_examples():
    have = {e.id for e in applicable(QK.PHI_I, 1.0, 1.0)}
    assert {"turan1_upper", "turan8_lower", "turan8_upper", "turan9_lower",
            "turan9_upper", "turan10_upper", "turan11_upper",
            "turan16_lower", "turan16_upper"} <= have
    assert "turanconj_lower" not in have  # conjecture excluded by default
    have = {e.id for e in applicable(QK.PHI_K, 0.3, 1.0)}
    assert {"turan21_lower", "turan21_upper", "turan25_upper", "turan23_lower"} <= have
    assert not {"turan20_lower", "turan20_upper", "turan24_upper"} & have
    have = {e.id for e in applicable(QK.PHI_K, 0.3, 0.3)}
    assert "turan23_lower" not in have
    # statuses filter
    have = {e.id for e in applicable(QK.PHI_I, 1.0, 1.0, statuses=("conjecture",))}
    assert have == {"turanconj_lower"}


def test_best_bounds_phiI_example():
    lo, hi = best_bounds(QK.PHI_I, 1.0, 1.0)
    assert lo.id == "turan16_lower"
    assert lo.value == pytest.approx(0.41602514716892186, rel=1e-12)
    assert hi.id == "turan8_upper"
    assert hi.value == pytest.approx(0.47213595499957939, rel=1e-12)
    true = quantity(QK.PHI_I, EvalContext(1.0, 1.0)).value
    assert lo.value < true < hi.value


def test_best_bounds_equality_collapse_at_half():
    # every applicable phiK bound collapses onto -1/x at nu = 1/2; the
    # selector must report that common value on both sides
    lo, hi = best_bounds(QK.PHI_K, 0.5, 2.0)
    assert lo.value == pytest.approx(-0.5, abs=1e-15)
    assert hi.value == pytest.approx(-0.5, abs=1e-15)
    assert lo.id == "turan20_lower"  # lexicographic tie-break among equals
    true = quantity(QK.PHI_K, EvalContext(0.5, 2.0)).value
    assert true == pytest.approx(-0.5, rel=1e-13)


def test_best_bounds_y_large_x():
    lo, hi = best_bounds(QK.Y, 1.0, 100.0)
    assert hi.id == "tuseg_upper"
    assert hi.value == pytest.approx(math.sqrt(10002.25) - 0.5, rel=1e-15)
    assert lo is not None and lo.value < hi.value


def test_best_bounds_absent_side():
    lo, hi = best_bounds(QK.K_RATIO, 1.0, 1.0)
    assert lo is None  # only an upper bound is cataloged for K_nu/K_{nu-1}
    assert hi is not None and hi.id == "turan5p_upper"


def test_zlog_upper_continuity_at_half():
    for x in (0.5, 2.0, 10.0):
        assert evaluate_bound("zlog_upper", 0.5, x).value == pytest.approx(-x - 0.5, rel=1e-14)


def test_guard_notes_flagged():
    rows = {r["id"]: r for r in catalog_rows()}
    for bid in ("turan8_lower", "turan8_upper", "turan9_lower", "turan9_upper",
                "ylog_lower", "ylog_upper", "turan19_lower", "zlog_lower",
                "segura74_lower"):
        assert rows[bid]["guard_note"], bid
    assert rows["turan20_lower"]["strictness"] == "non-strict"
    assert rows["turan16_lower"]["sharp_at"] == ["x->0", "x->inf"]
    # export carries all schema columns
    assert set(rows["turan1_lower"]) == {"id", "quantity", "side", "status", "domain",
                                         "formula", "strictness", "sharp_at", "note",
                                         "guard_note"}


def test_conjecture_spot_value():
    # the conjectured phiI lower bound at (1,1) sits below the true value
    bv = evaluate_bound("turanconj_lower", 1.0, 1.0).value
    assert bv == pytest.approx(1.0 / math.sqrt(5.0), rel=1e-15)
    assert bv < quantity(QK.PHI_I, EvalContext(1.0, 1.0)).value


def test_dominance_spot_checks():
    xs = [10 ** (-2 + 4 * k / 39) for k in range(40)]
    for nu in (0.75, 1.0, 2.0, 5.0):
        for x in xs:
            assert evaluate_bound("turan16_upper", nu, x).value < 1.0 / x
    for nu in (1.5, 2.0, 3.0, 5.0):
        for x in xs:
            assert (evaluate_bound("turan24_upper", nu, x).value
                    <= evaluate_bound("turan18_upper", nu, x).value)
    for nu in (0.5, 1.0, 2.0, 5.0, -3.0):
        for x in xs:
            assert (evaluate_bound("turan22_lower", nu, x).value
                    >= evaluate_bound("paltsev_lower", nu, x).value)


@settings(max_examples=150, deadline=None)
@given(nu=st.floats(-10.0, 20.0), x=st.floats(1e-3, 500.0))
def test_domain_predicates_total_on_box(nu, x):
    # every formula must evaluate finitely wherever its guard admits the point
    for b in CATALOG.values():
        ev = evaluate_bound(b.id, nu, x)
        assert ev.applicable == b.domain(nu, x)
        if ev.applicable:
            assert math.isfinite(ev.value), (b.id, nu, x)


@settings(max_examples=50, deadline=None)
@given(nu=st.floats(-10.0, 20.0), x=st.floats(1e-3, 100.0))
def test_applicable_proved_bounds_enclose_truth(nu, x):
    # pointwise master property: every applicable proved bound brackets the
    # reference value within the sweep tolerance, at arbitrary box points
    for quant in (QK.PHI_I, QK.PHI_K, QK.Y, QK.Z, QK.PHI_P, QK.N_S, QK.B2HAT):
        evs = applicable(quant, nu, x)
        if not evs:
            continue
        try:
            tv = quantity(quant, EvalContext(nu, x))
        except Exception:
            continue  # outside the quantity's order domain
        tol = max(1e-9, 1e-9 * abs(tv.value)) + tv.abs_error_bound
        for ev in evs:
            if ev.side == "lower":
                assert ev.value <= tv.value + tol, (ev.id, nu, x)
            else:
                assert ev.value >= tv.value - tol, (ev.id, nu, x)


def test_master_sweep_60x60_zero_violations():
    nus = [-10.0 + 30.0 * k / 59 for k in range(60)]
    nus = sorted(set(round(n, 6) for n in nus) | {-0.75, -0.5, 0.0, 0.49, 0.5, 0.51, 1.0})
    xs = [10 ** (-3 + 5 * (k + 1) / 60) for k in range(60)]
    cache = {}
    for b in CATALOG.values():
        if b.status != "proved":
            continue
        for nu in nus:
            for x in xs:
                if not b.domain(nu, x):
                    continue
                key = (b.quantity, nu, x)
                tv = cache.get(key)
                if tv is None:
                    tv = cache[key] = quantity(b.quantity, EvalContext(nu, x))
                tol = max(1e-9, 1e-9 * abs(tv.value)) + tv.abs_error_bound
                bv = b.formula(nu, x)
                if b.side == "lower":
                    assert bv <= tv.value + tol, (b.id, nu, x, bv, tv.value)
                else:
                    assert bv >= tv.value - tol, (b.id, nu, x, bv, tv.value)
