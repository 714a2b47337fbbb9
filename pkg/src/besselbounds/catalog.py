r"""Immutable catalog of two-sided bounds for modified-Bessel quantities.

Each entry is one inequality for one derived quantity (normalised
Turanians phiI/phiK/phiP, log-derivatives y/z, consecutive-order ratios,
and the application quantities b2hat, veff, ns).  Entries carry:

* a closed-form formula in (nu, x, mu) with its printable string,
* a domain predicate (total on the supported box: singular denominators,
  logs and square roots are pre-rejected by the guard),
* a status flag: ``proved`` entries must never be violated by the
  reference evaluator anywhere in their domain (the master test),
  ``conjecture`` and ``refuted`` entries are probed but never trusted,
* strictness and sharpness metadata (equality orders, x->0 / x->inf).

Domains tightened relative to their classical statements are flagged via
``guard_note``; the headline cases are the phiI lower/upper families,
whose stated extension to -1 <= nu < 0 is numerically false near x = 0
(the x->0 limit of phiI is 1/(nu+1), which the bound formulas overshoot
for nu < 0), so those entries are guarded to nu >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable

from .core import QuantityKind

__all__ = [
    "Side",
    "Status",
    "BoundSpec",
    "BoundEvaluation",
    "UnknownBoundError",
    "CATALOG",
    "get",
    "ids",
    "evaluate_bound",
    "applicable",
    "best_bounds",
    "catalog_rows",
]

Side = str  # "lower" | "upper"
Status = str  # "proved" | "conjecture" | "refuted"


class UnknownBoundError(KeyError):
    """No catalog entry with the requested id."""


@dataclass(frozen=True)
class BoundSpec:
    """One cataloged inequality for a derived quantity."""

    id: str
    quantity: QuantityKind
    side: Side
    status: Status
    domain: Callable[[float, float], bool]
    domain_str: str
    formula: Callable[[float, float], float]
    formula_str: str
    strictness: str = "strict"
    sharp_at: tuple[str, ...] = ()
    note: str = ""
    guard_note: str | None = None


@dataclass(frozen=True)
class BoundEvaluation:
    """Formula value of one entry at one point (NaN when inapplicable)."""

    id: str
    value: float
    applicable: bool
    status: Status
    side: Side
    quantity: QuantityKind


def _hyp(x: float, a: float) -> float:
    return math.hypot(x, a)


def _entries() -> list[BoundSpec]:
    Q = QuantityKind
    e: list[BoundSpec] = []

    def add(id, quantity, side, status, domain, domain_str, formula, formula_str,
            strictness="strict", sharp_at=(), note="", guard_note=None):
        e.append(BoundSpec(id, quantity, side, status, domain, domain_str,
                           formula, formula_str, strictness, tuple(sharp_at), note, guard_note))

    # ---- normalised Turanian of I: phiI ------------------------------------
    add("turan1_lower", Q.PHI_I, "lower", "proved",
        lambda nu, x: nu > -1.0, "nu > -1",
        lambda nu, x: 0.0, "0",
        sharp_at=("x->inf",), note="constant 0 is best possible")
    add("turan1_upper", Q.PHI_I, "upper", "proved",
        lambda nu, x: nu > -1.0, "nu > -1",
        lambda nu, x: 1.0 / (nu + 1.0), "1/(nu+1)",
        sharp_at=("x->0",), note="constant 1/(nu+1) is best possible")
    add("turan8_lower", Q.PHI_I, "lower", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 1.0 / (nu + 0.5 + _hyp(x, nu + 0.5)),
        "1/(nu+1/2+sqrt(x^2+(nu+1/2)^2))",
        sharp_at=("x->inf",),
        guard_note="stated range nu >= -1 fails on -1 <= nu < 0 near x = 0 "
                   "(bound exceeds the x->0 limit 1/(nu+1)); guarded to nu >= 0")
    add("turan8_upper", Q.PHI_I, "upper", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 2.0 / (nu + 1.0 + _hyp(x, nu + 1.0)),
        "2/(nu+1+sqrt(x^2+(nu+1)^2))",
        sharp_at=("x->0", "x->inf"),
        guard_note="stated range nu > -1 fails on -1 < nu < 0 near x = 0; guarded to nu >= 0")
    add("turan9_lower", Q.PHI_I, "lower", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 1.0 / (x + 2.0 * nu + 1.0), "1/(x+2nu+1)",
        sharp_at=("x->inf",),
        guard_note="stated range nu >= -1 is singular at x = -(2nu+1) and fails "
                   "for nu < 0 near x = 0; guarded to nu >= 0")
    add("turan9_upper", Q.PHI_I, "upper", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 2.0 / (x + nu + 1.0), "2/(x+nu+1)",
        sharp_at=("x->inf",),
        guard_note="stated range nu >= -1 fails at e.g. nu = -3/4, x = 1/2; guarded to nu >= 0")
    add("turan10_upper", Q.PHI_I, "upper", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 2.0 / (x + nu), "2/(x+nu)",
        note="corrected form of the refuted joshi_turan7 (factor 2)")
    add("turan11_upper", Q.PHI_I, "upper", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: 1.0 / x, "1/x",
        sharp_at=("x->inf",), note="equivalent to b2hat < -1 for nu >= 1/2")
    add("turan16_lower", Q.PHI_I, "lower", "proved",
        lambda nu, x: nu >= -0.5, "nu >= -1/2",
        lambda nu, x: ((nu + 0.5) / (nu + 1.0)) / _hyp(x, nu + 0.5),
        "((nu+1/2)/(nu+1))/sqrt(x^2+(nu+1/2)^2)",
        sharp_at=("x->0", "x->inf"))
    add("turan16_upper", Q.PHI_I, "upper", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: 1.0 / math.sqrt(x * x + nu * nu - 0.25),
        "1/sqrt(x^2+nu^2-1/4)",
        sharp_at=("x->inf",), note="tighter than 1/x for nu > 1/2")
    add("turanconj_lower", Q.PHI_I, "lower", "conjecture",
        lambda nu, x: nu >= -0.5, "nu >= -1/2",
        lambda nu, x: 1.0 / _hyp(x, nu + 1.0), "1/sqrt(x^2+(nu+1)^2)",
        sharp_at=("x->0", "x->inf"),
        note="equivalent to lambda = y - sqrt(x^2+(nu+1)^2) being increasing")
    add("joshi_turan7", Q.PHI_I, "upper", "refuted",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 1.0 / (x + nu), "1/(x+nu)",
        note="reversed on roughly 1/2 <= x <= nu(nu+1); witness at nu=2, x=3")

    # ---- log-derivative of I: y --------------------------------------------
    add("turan3_upper", Q.Y, "upper", "proved",
        lambda nu, x: nu > -1.0, "nu > -1",
        lambda nu, x: _hyp(x, nu), "sqrt(x^2+nu^2)")
    add("turan13_lower", Q.Y, "lower", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: x - 0.5, "x-1/2",
        sharp_at=("x->inf",))
    add("turan14_lower", Q.Y, "lower", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: _hyp(x, nu - 0.5) - 0.5, "sqrt(x^2+(nu-1/2)^2)-1/2",
        sharp_at=("x->inf",))
    add("turan15_lower", Q.Y, "lower", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: math.sqrt(x * x + nu * nu - 0.25) - 0.5,
        "sqrt(x^2+nu^2-1/4)-1/2",
        sharp_at=("x->inf",))
    add("tuseg_lower", Q.Y, "lower", "proved",
        lambda nu, x: nu >= -1.0, "nu >= -1",
        lambda nu, x: _hyp(x, nu + 1.0) - 1.0, "sqrt(x^2+(nu+1)^2)-1",
        sharp_at=("x->0", "x->inf"))
    add("tuseg_upper", Q.Y, "upper", "proved",
        lambda nu, x: nu >= -0.5, "nu >= -1/2",
        lambda nu, x: _hyp(x, nu + 0.5) - 0.5, "sqrt(x^2+(nu+1/2)^2)-1/2",
        sharp_at=("x->0", "x->inf"))
    add("ylog_lower", Q.Y, "lower", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: x + nu + (2.0 * nu + 1.0) * math.log((2.0 * nu + 1.0) / (x + 2.0 * nu + 1.0)),
        "x+nu+(2nu+1)*log((2nu+1)/(x+2nu+1))",
        sharp_at=("x->0",),
        guard_note="integrated form of turan9_lower; inherits its nu >= 0 guard "
                   "(fails for nu < 0 near x = 0)")
    add("ylog_upper", Q.Y, "upper", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: 2.0 * x + nu + 2.0 * (nu + 1.0) * math.log((nu + 1.0) / (x + nu + 1.0)),
        "2x+nu+2(nu+1)*log((nu+1)/(x+nu+1))",
        sharp_at=("x->0",),
        guard_note="integrated form of turan9_upper; inherits its nu >= 0 guard "
                   "(fails near nu = -1, e.g. nu = -0.999, x = 0.18)")
    add("gro_lower", Q.Y, "lower", "proved",
        lambda nu, x: nu >= 0.5 and x * x <= 2.0 * nu ** 3 * (nu + math.hypot(nu, 1.0)),
        "nu >= 1/2 and x^2 <= 2 nu^3 (nu + sqrt(nu^2+1))",
        lambda nu, x: _hyp(x, nu) - (x * x + 2.0 * nu * nu) / (2.0 * x * x + 2.0 * nu * nu),
        "sqrt(x^2+nu^2)-(x^2+2nu^2)/(2x^2+2nu^2)",
        note="restricted domain: proved only inside the stated x-range")
    add("turanconj2_upper", Q.Y, "upper", "conjecture",
        lambda nu, x: nu >= -0.5, "nu >= -1/2",
        lambda nu, x: _hyp(x, nu + 1.0)
        - 0.5 * (x * x + 2.0 * (nu + 1.0) ** 2) / (x * x + (nu + 1.0) ** 2),
        "sqrt(x^2+(nu+1)^2)-(x^2+2(nu+1)^2)/(2(x^2+(nu+1)^2))",
        note="would imply turanconj_lower")

    # ---- consecutive-order ratios ------------------------------------------
    add("turan5_lower", Q.I_RATIO, "lower", "proved",
        lambda nu, x: nu >= 0.0, "nu >= 0",
        lambda nu, x: (-nu + _hyp(x, nu)) / x, "(-nu+sqrt(x^2+nu^2))/x",
        note="equivalent to turan3_upper")
    add("turan5p_upper", Q.K_RATIO, "upper", "proved",
        lambda nu, x: True, "all nu",
        lambda nu, x: (nu + _hyp(x, nu)) / x, "(nu+sqrt(x^2+nu^2))/x",
        note="equivalent to turan4_upper")

    # ---- normalised Turanian of K: phiK ------------------------------------
    add("turan2_lower", Q.PHI_K, "lower", "proved",
        lambda nu, x: abs(nu) > 1.0, "|nu| > 1",
        lambda nu, x: 1.0 / (1.0 - abs(nu)), "1/(1-|nu|)",
        sharp_at=("x->0",), note="constant 1/(1-|nu|) is the x->0 limit")
    add("turan2_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: abs(nu) > 1.0, "|nu| > 1",
        lambda nu, x: 0.0, "0")
    add("turan18_lower", Q.PHI_K, "lower", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -2.0 / (abs(nu) - 1.0 + _hyp(x, abs(nu) - 1.0)),
        "-2/(|nu|-1+sqrt(x^2+(|nu|-1)^2))",
        sharp_at=("x->inf",), note="also sharp as x->0 when |nu| > 1")
    add("turan18_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -1.0 / (abs(nu) - 0.5 + _hyp(x, abs(nu) - 0.5)),
        "-1/(|nu|-1/2+sqrt(x^2+(|nu|-1/2)^2))",
        sharp_at=("x->inf",))
    add("turan19_lower", Q.PHI_K, "lower", "proved",
        lambda nu, x: abs(nu) >= 0.5 and x + abs(nu) - 1.0 > 0.0,
        "|nu| >= 1/2 and x+|nu|-1 > 0",
        lambda nu, x: -2.0 / (x + abs(nu) - 1.0), "-2/(x+|nu|-1)",
        guard_note="x+|nu|-1 > 0 added: the formula is singular/sign-flipped "
                   "at x <= 1-|nu| for 1/2 <= |nu| < 1")
    add("turan19_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -1.0 / (x + 2.0 * abs(nu) - 1.0), "-1/(x+2|nu|-1)",
        sharp_at=("x->inf",))
    add("turan20_lower", Q.PHI_K, "lower", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -1.0 / x, "-1/x",
        strictness="non-strict", sharp_at=("x->inf", "nu=1/2"),
        note="equality at |nu| = 1/2; sharp as x->0 for 1/2 <= |nu| <= 1")
    add("turan20_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -(1.0 - (nu * nu - 0.25) / (x * x)) / x, "-(1-mu/x^2)/x",
        strictness="non-strict", sharp_at=("x->inf", "nu=1/2"),
        note="equality at |nu| = 1/2")
    add("turan21_lower", Q.PHI_K, "lower", "proved",
        lambda nu, x: abs(nu) < 0.5, "|nu| < 1/2",
        lambda nu, x: -(1.0 - (nu * nu - 0.25) / (x * x)) / x, "-(1-mu/x^2)/x",
        sharp_at=("x->0", "x->inf"), note="turan20_upper reversed for |nu| < 1/2")
    add("turan21_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: abs(nu) < 0.5, "|nu| < 1/2",
        lambda nu, x: -1.0 / x, "-1/x",
        sharp_at=("x->0", "x->inf"), note="turan20_lower reversed for |nu| < 1/2")
    add("turan23_lower", Q.PHI_K, "lower", "proved",
        lambda nu, x: abs(nu) <= 0.5 and x > math.sqrt(0.25 - nu * nu),
        "|nu| <= 1/2 and x > sqrt(-mu)",
        lambda nu, x: -(4.0 / math.pi) * (
            math.acos(math.sqrt(0.25 - nu * nu) / x) / (2.0 * math.sqrt(x * x + nu * nu - 0.25))
            + math.sqrt(0.25 - nu * nu) / (2.0 * x * x)),
        "-(4/pi)*[arccos(sqrt(-mu)/x)/(2*sqrt(x^2+mu)) + sqrt(-mu)/(2x^2)]",
        strictness="non-strict", sharp_at=("x->inf", "nu=1/2"),
        note="tightens turan21_lower; equality at |nu| = 1/2")
    add("turan24_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -1.0 / math.sqrt(x * x + nu * nu - 0.25), "-1/sqrt(x^2+mu)",
        strictness="non-strict", sharp_at=("x->inf", "nu=1/2"),
        note="tightens turan20_upper for |nu| > 1/2 and turan18_upper for |nu| >= 3/2")
    add("turan25_upper", Q.PHI_K, "upper", "proved",
        lambda nu, x: True, "all nu",
        lambda nu, x: -1.0 / _hyp(x, nu), "-1/sqrt(x^2+nu^2)",
        strictness="non-strict", sharp_at=("x->inf",),
        note="weaker than turan24_upper for |nu| >= 1/2 but valid for every order")

    # ---- log-derivative of K: z --------------------------------------------
    add("turan4_upper", Q.Z, "upper", "proved",
        lambda nu, x: True, "all nu",
        lambda nu, x: -_hyp(x, nu), "-sqrt(x^2+nu^2)")
    add("turan22_lower", Q.Z, "lower", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -math.sqrt(x * x + nu * nu - 0.25) - 0.5, "-sqrt(x^2+mu)-1/2",
        strictness="non-strict", sharp_at=("x->inf", "nu=1/2"),
        note="equality at |nu| = 1/2 where z = -x-1/2")
    add("paltsev_lower", Q.Z, "lower", "proved",
        lambda nu, x: True, "all nu",
        lambda nu, x: -_hyp(x, nu) - 0.5, "-sqrt(x^2+nu^2)-1/2",
        sharp_at=("x->inf",))
    add("segura74_lower", Q.Z, "lower", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: -_hyp(x, nu + 0.5) - 0.5, "-sqrt(x^2+(nu+1/2)^2)-1/2",
        note="order range not restated by the source; guarded conservatively to nu >= 1/2",
        guard_note="conservative order guard nu >= 1/2")
    add("segura75_upper", Q.Z, "upper", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: -_hyp(x, nu - 0.5) - 0.5, "-sqrt(x^2+(nu-1/2)^2)-1/2",
        strictness="non-strict", sharp_at=("nu=1/2",),
        note="equality at nu = 1/2")
    add("zint_upper", Q.Z, "upper", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: -math.sqrt(x * x + nu * nu - 0.25) + math.sqrt(nu * nu - 0.25) - nu,
        "-sqrt(x^2+mu)+sqrt(mu)-nu",
        strictness="non-strict", sharp_at=("x->0", "nu=1/2"),
        note="integrated form of turan24_upper; tighter than turan4_upper")
    add("zlog_lower", Q.Z, "lower", "proved",
        lambda nu, x: abs(nu) > 1.0, "|nu| > 1",
        lambda nu, x: -2.0 * x - abs(nu) + 2.0 * (abs(nu) - 1.0) * math.log1p(x / (abs(nu) - 1.0)),
        "-2x-|nu|+2(|nu|-1)*log(1+x/(|nu|-1))",
        sharp_at=("x->0",),
        guard_note="|nu| > 1 added: the log coefficient is undefined/sign-flipped "
                   "for |nu| <= 1")
    add("zlog_upper", Q.Z, "upper", "proved",
        lambda nu, x: abs(nu) >= 0.5, "|nu| >= 1/2",
        lambda nu, x: -x - abs(nu) + (
            (2.0 * abs(nu) - 1.0) * math.log1p(x / (2.0 * abs(nu) - 1.0))
            if 2.0 * abs(nu) - 1.0 > 1e-12 else 0.0),
        "-x-|nu|+(2|nu|-1)*log(1+x/(2|nu|-1))",
        strictness="non-strict", sharp_at=("x->0", "nu=1/2"),
        note="value at |nu| = 1/2 defined by continuity as -x-1/2 (equality there)")

    # ---- normalised Turanian of the product: phiP ---------------------------
    add("turan26_lower", Q.PHI_P, "lower", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: (
            ((x - (nu + 0.5) - _hyp(x, nu + 0.5)) * math.sqrt(x * x + nu * nu - 0.25) + x)
            / (x * math.sqrt(x * x + nu * nu - 0.25) * (nu + 0.5 + _hyp(x, nu + 0.5)))),
        "([x-(nu+1/2)-sqrt(x^2+(nu+1/2)^2)]*sqrt(x^2+mu)+x)"
        "/(x*sqrt(x^2+mu)*[nu+1/2+sqrt(x^2+(nu+1/2)^2)])",
        sharp_at=("x->inf",))
    add("turan26_upper", Q.PHI_P, "upper", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: 1.0 / (x * math.sqrt(x * x + nu * nu - 0.25)), "1/(x*sqrt(x^2+mu))",
        sharp_at=("x->inf",))

    # ---- application-level bounds -------------------------------------------
    add("b2hat_upper", Q.B2HAT, "upper", "proved",
        lambda nu, x: nu > 0.0, "nu > 0",
        lambda nu, x: -(x + nu) / (2.0 * x), "-(x+nu)/(2x)",
        note="corrected hyperplane-bias bound (from turan10_upper); implies b2hat < -1/2")
    add("b2hat_upper_strong", Q.B2HAT, "upper", "proved",
        lambda nu, x: nu >= 0.5, "nu >= 1/2",
        lambda nu, x: -1.0, "-1",
        note="equivalent to turan11_upper; false for 0 < nu < 1/2 at large x")
    add("veff_lower", Q.V_EFF, "lower", "proved",
        lambda nu, x: nu > 1.0, "mu_gig > 1  (nu plays mu_gig, x plays 1/w)",
        lambda nu, x: 0.0, "0",
        sharp_at=("x->inf",))
    add("veff_upper", Q.V_EFF, "upper", "proved",
        lambda nu, x: nu > 1.0, "mu_gig > 1  (nu plays mu_gig, x plays 1/w)",
        lambda nu, x: 1.0 / (nu - 1.0), "1/(mu_gig-1)",
        sharp_at=("x->0",), note="equivalent to turan2_lower at order mu_gig")
    add("ncns", Q.N_S, "lower", "proved",
        lambda nu, x: nu >= -1.0, "nu >= -1",
        lambda nu, x: 0.25 * x * x / (nu + 1.0 + _hyp(x, nu + 1.0)),
        "n_c = (x^2/4)/(nu+1+sqrt(x^2+(nu+1)^2))",
        note="classical mean molecule count n_c is a strict lower bound for "
             "the stochastic one n_s")

    return e


CATALOG: MappingProxyType[str, BoundSpec] = MappingProxyType({b.id: b for b in _entries()})


def ids(status: Status | None = None, quantity: QuantityKind | None = None) -> list[str]:
    """Catalog ids in declaration order, optionally filtered."""
    out = []
    for b in CATALOG.values():
        if status is not None and b.status != status:
            continue
        if quantity is not None and b.quantity is not QuantityKind(quantity):
            continue
        out.append(b.id)
    return out


def get(bound_id: str) -> BoundSpec:
    try:
        return CATALOG[bound_id]
    except KeyError:
        raise UnknownBoundError(bound_id) from None


def evaluate_bound(bound_id: str, nu: float, x: float) -> BoundEvaluation:
    """Evaluate one entry's formula at (nu, x); inapplicable points never raise."""
    b = get(bound_id)
    if not b.domain(nu, x):
        return BoundEvaluation(b.id, math.nan, False, b.status, b.side, b.quantity)
    return BoundEvaluation(b.id, b.formula(nu, x), True, b.status, b.side, b.quantity)


def applicable(quantity: QuantityKind, nu: float, x: float,
               statuses: tuple[Status, ...] = ("proved",)) -> list[BoundEvaluation]:
    """All evaluated entries for a quantity whose domain holds at (nu, x)."""
    quantity = QuantityKind(quantity)
    out = []
    for b in CATALOG.values():
        if b.quantity is not quantity or b.status not in statuses:
            continue
        ev = evaluate_bound(b.id, nu, x)
        if ev.applicable:
            out.append(ev)
    return out


def best_bounds(quantity: QuantityKind, nu: float, x: float
                ) -> tuple[BoundEvaluation | None, BoundEvaluation | None]:
    """Tightest applicable proved bounds: (max lower, min upper).

    Ties are broken by lexicographic id; an absent side returns None.
    """
    evs = applicable(quantity, nu, x)
    lowers = sorted((ev for ev in evs if ev.side == "lower"), key=lambda e: (-e.value, e.id))
    uppers = sorted((ev for ev in evs if ev.side == "upper"), key=lambda e: (e.value, e.id))
    return (lowers[0] if lowers else None, uppers[0] if uppers else None)


def catalog_rows() -> list[dict]:
    """JSON-ready catalog metadata (one row per entry, declaration order)."""
    rows = []
    for b in CATALOG.values():
        rows.append({
            "id": b.id,
            "quantity": b.quantity.value,
            "side": b.side,
            "status": b.status,
            "domain": b.domain_str,
            "formula": b.formula_str,
            "strictness": b.strictness,
            "sharp_at": list(b.sharp_at),
            "note": b.note,
            "guard_note": b.guard_note,
        })
    return rows
