r"""Reference evaluation of modified Bessel functions and derived quantities.

Everything in this package ultimately reduces to the modified Bessel
functions of the first and second kind,

    I_nu(x) = sum_{n>=0} (x/2)^(2n+nu) / (n! Gamma(n+nu+1)),
    K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt,

and to quantities built from them: the logarithmic derivatives
y = x I'/I and z = x K'/K, the normalised Turanians
phiI = 1 - I_{nu-1} I_{nu+1} / I_nu^2 (and phiK, phiP analogously), the
product P = I_nu K_nu, and a handful of shifted/compared forms (w, u,
lambda, q, t) used by the bounds catalog.

Evaluation strategy by region
-----------------------------
* I: power series everywhere below the asymptotic threshold
  x >= 30 + nu^2; large-argument expansion above it.
* K: large-argument expansion for x >= 30 + nu^2; the reflection formula
  K = (pi/2)(I_{-nu} - I_nu)/sin(nu pi) for small x when nu is at least
  0.05 away from an integer and cancellation is mild; otherwise
  trapezoidal quadrature of the cosh integral (the integrand decays
  doubly exponentially, so the trapezoid rule converges geometrically).

Every evaluation returns a ``ValueWithError`` carrying a claimed bound on
the relative error (truncation tail + rounding, with compensated
summation throughout).  Ratios are computed by two independent routes and
cross-checked; disagreement raises ``CrossCheckError`` since it signals
an evaluator bug, not an unlucky input.

Values are kept exponentially scaled (e^-x I, e^x K) internally once
x > 50 so that no intermediate overflows inside the supported box
nu in [-10, 20], x in (0, 500].

All functions are pure and cache only immutable results; they are safe to
call concurrently from any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

__all__ = [
    "SUPPORTED_NU",
    "SUPPORTED_X",
    "DEFAULT_TARGET_REL_ERR",
    "DomainError",
    "AccuracyError",
    "CrossCheckError",
    "EvalContext",
    "ValueWithError",
    "QuantityKind",
    "QUANTITY_EXPRESSIONS",
    "eval_I",
    "eval_K",
    "ratio_I",
    "ratio_K",
    "quantity",
    "numeric_derivative",
    "evaluation_path",
    "dual_path_checks",
]

SUPPORTED_NU = (-10.0, 20.0)
SUPPORTED_X = (0.0, 500.0)
DEFAULT_TARGET_REL_ERR = 1e-12

_EPS = 2.220446049250313e-16
# exponential scaling (e^-x I, e^x K) kicks in beyond this argument
_SCALE_X = 50.0
# large-argument expansions are used for x >= _ASYM_BASE + nu^2
_ASYM_BASE = 30.0
_LN2 = math.log(2.0)


class DomainError(ValueError):
    """Argument or order outside the supported evaluation box."""


class AccuracyError(ArithmeticError):
    """The requested relative-error target cannot be certified."""


class CrossCheckError(AccuracyError):
    """Two independent evaluation paths disagree: evaluator bug."""


@dataclass(frozen=True)
class EvalContext:
    """Point (nu, x) at which quantities are evaluated; mu = nu^2 - 1/4."""

    nu: float
    x: float
    mu: float = 0.0

    def __post_init__(self):
        nu = float(self.nu)
        x = float(self.x)
        if not (SUPPORTED_NU[0] <= nu <= SUPPORTED_NU[1]):
            raise DomainError(f"order nu={nu!r} outside supported [{SUPPORTED_NU[0]}, {SUPPORTED_NU[1]}]")
        if not (SUPPORTED_X[0] < x <= SUPPORTED_X[1]):
            raise DomainError(f"argument x={x!r} outside supported ({SUPPORTED_X[0]}, {SUPPORTED_X[1]}]")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "mu", nu * nu - 0.25)


@dataclass(frozen=True)
class ValueWithError:
    """A computed value together with a claimed relative-error bound."""

    value: float
    rel_error_bound: float

    def __float__(self) -> float:
        return self.value

    @property
    def abs_error_bound(self) -> float:
        return self.rel_error_bound * abs(self.value)


def _kahan_add(s: float, c: float, term: float) -> tuple[float, float]:
    # one compensated-summation step
    t = term - c
    u = s + t
    c = (u - s) - t
    return u, c


def _sinpi(nu: float) -> float:
    # sin(pi*nu) with argument reduction, accurate near integer nu
    r = nu - round(nu)
    s = math.sin(math.pi * r)
    return s if round(nu) % 2 == 0 else -s


# ---------------------------------------------------------------------------
# modified Bessel function of the first kind
# ---------------------------------------------------------------------------

def _i_series(nu: float, x: float) -> tuple[float, float]:
    """Power series for I_nu(x); returns (value, rel error bound).

    The value is exponentially scaled by e^-x when x > _SCALE_X.  Terms are
    generated by the ratio recurrence and accumulated with compensated
    summation; the error bound tracks the truncation tail (geometric once
    the term ratio drops below 1) plus rounding inflated by the observed
    cancellation sum|t|/|sum t| (cancellation only occurs for nu < -1).
    """
    if nu < 0 and nu == round(nu):
        nu = -nu  # integer-order symmetry; also dodges Gamma poles
    q = 0.25 * x * x
    try:
        t = math.pow(0.5 * x, nu) / math.gamma(nu + 1.0)
    except (OverflowError, ValueError) as exc:
        raise AccuracyError(f"I_{nu}({x}): leading series term not representable") from exc
    if t == 0.0 or not math.isfinite(t):
        raise AccuracyError(f"I_{nu}({x}): leading series term over/underflows")
    s, comp = t, 0.0
    s_abs = abs(t)
    n = 0
    tail = math.inf
    while n < 2000:
        n += 1
        t *= q / (n * (n + nu))
        s, comp = _kahan_add(s, comp, t)
        s_abs += abs(t)
        ratio = q / ((n + 1) * (n + 1 + nu))
        if 0.0 < ratio < 0.5 and abs(t) < 1e-18 * abs(s):
            tail = abs(t) * ratio / (1.0 - ratio)
            break
    if not math.isfinite(tail):
        raise AccuracyError(f"I_{nu}({x}): series did not converge within 2000 terms")
    if s == 0.0 or not math.isfinite(s):
        raise AccuracyError(f"I_{nu}({x}): series sum not representable")
    cancel = s_abs / abs(s)
    rel = tail / abs(s) + (3.0 * n + 4.0) * _EPS * cancel
    if x > _SCALE_X:
        s *= math.exp(-x)
        rel += 2.0 * _EPS
    return s, rel


def _asym_bracket(nu: float, x: float, sign: float) -> tuple[float, float]:
    # sum of the large-argument expansion bracket; sign=-1 for I, +1 for K
    four_nu2 = 4.0 * nu * nu
    c = 1.0
    s, comp = 1.0, 0.0
    err_term = math.inf
    prev = math.inf
    for k in range(1, 80):
        m = 2 * k - 1
        c *= sign * (four_nu2 - m * m) / (8.0 * k * x)
        if abs(c) >= prev:
            err_term = prev  # divergence onset: bound by last decreasing term
            break
        s, comp = _kahan_add(s, comp, c)
        prev = abs(c)
        if abs(c) < 1e-18:
            err_term = abs(c)
            break
    if not math.isfinite(err_term):
        err_term = prev
    rel = err_term / abs(s) + 30.0 * _EPS
    return s, rel


def _i_asym(nu: float, x: float) -> tuple[float, float]:
    """Large-argument expansion for I; scaled by e^-x when x > _SCALE_X."""
    s, rel = _asym_bracket(nu, x, -1.0)
    val = s / math.sqrt(2.0 * math.pi * x)
    # second exponential series contributes at relative size ~ e^(-2x)
    rel += 2.0 * math.exp(-2.0 * x)
    if x <= _SCALE_X:
        val *= math.exp(x)
    return val, rel


@lru_cache(maxsize=200_000)
def _besseli(nu: float, x: float) -> tuple[float, float, str]:
    """(value, rel error, path) for I_nu(x), e^-x-scaled when x > _SCALE_X."""
    if x >= _ASYM_BASE + nu * nu:
        val, rel = _i_asym(nu, x)
        return val, rel, "asymptotic"
    val, rel = _i_series(nu, x)
    return val, rel, "series"


# ---------------------------------------------------------------------------
# modified Bessel function of the second kind
# ---------------------------------------------------------------------------

def _k_asym(nu: float, x: float) -> tuple[float, float]:
    """Large-argument expansion for K; scaled by e^x when x > _SCALE_X."""
    s, rel = _asym_bracket(nu, x, +1.0)
    val = s * math.sqrt(0.5 * math.pi / x)
    if x <= _SCALE_X:
        val *= math.exp(-x)
    return val, rel


def _k_reflect(nu: float, x: float) -> tuple[float, float] | None:
    """K via (pi/2)(I_{-nu} - I_nu)/sin(pi nu); None if cancellation too hot."""
    a, ea = _i_series(-nu, x)
    b, eb = _i_series(nu, x)
    d = a - b
    if d == 0.0:
        return None
    amp = (abs(a) + abs(b)) / abs(d)
    if amp > 16.0:
        return None
    val = 0.5 * math.pi * d / _sinpi(nu)
    if val <= 0.0 or not math.isfinite(val):
        return None
    rel = amp * (ea + eb + 2.0 * _EPS) + 4.0 * _EPS
    return val, rel


def _lncosh(u: float) -> float:
    # log(cosh(u)) for u >= 0, stable for large u
    return u + math.log1p(math.exp(-2.0 * u)) - _LN2 if u > 0.0 else 0.0


def _k_quad(nu: float, x: float) -> tuple[float, float]:
    """Trapezoidal quadrature of the cosh integral for K_nu(x).

    The integrand exp(-x cosh t) cosh(nu t) decays doubly exponentially, so
    the trapezoid rule converges geometrically in 1/h; the step is halved
    (reusing samples) until two successive sums agree, with one extra
    halving as a safety margin.  The peak is factored out so nothing
    overflows even when K itself is astronomically large.
    """
    an = abs(nu)

    def g(t: float) -> float:
        return _lncosh(an * t) - x * math.cosh(t)

    # locate peak and truncation point by coarse scan (peak is flat at the
    # 0.5 scale, so the sampled max is within a few units of the true max)
    m = g(0.0)
    t = 0.0
    t_peak = math.asinh(an / x) if an * an > x else 0.0
    while True:
        t += 0.5
        gt = g(t)
        if gt > m:
            m = gt
        if t > t_peak and gt < m - 55.0:
            break
        if t > 80.0:
            # the integrand has not decayed (x astronomically small): a
            # truncated sum would be silently wrong, so refuse instead
            raise AccuracyError(f"K_{nu}({x}): cosh-integral support exceeds the "
                                "quadrature window; argument too extreme")
    big_t = t

    def trap_sum(h: float, prev: float | None) -> float:
        if prev is None:
            s, comp = 0.5 * math.exp(g(0.0) - m), 0.0
            k = 1
            while True:
                tk = k * h
                if tk > big_t:
                    break
                s, comp = _kahan_add(s, comp, math.exp(g(tk) - m))
                k += 1
            return h * s
        # refine: previous sum at 2h contributes the even nodes
        s, comp = prev / (2.0 * h), 0.0
        k = 1
        while True:
            tk = k * h
            if tk > big_t:
                break
            s, comp = _kahan_add(s, comp, math.exp(g(tk) - m))
            k += 2
        return h * s

    h = 1.0
    s_prev = trap_sum(h, None)
    diffs: list[float] = []
    s_cur = s_prev
    for _ in range(7):
        h *= 0.5
        s_cur = trap_sum(h, s_prev)
        diffs.append(abs(s_cur - s_prev) / abs(s_cur))
        s_prev = s_cur
        if len(diffs) >= 2 and diffs[-2] < 1e-13 and diffs[-1] < 1e-14:
            break
    rel = diffs[-1] + 1e-18 + 30.0 * _EPS
    shift = m + x if x > _SCALE_X else m
    val = s_cur * math.exp(shift)
    if not math.isfinite(val) or val <= 0.0:
        raise AccuracyError(f"K_{nu}({x}): quadrature value not representable")
    return val, rel


@lru_cache(maxsize=200_000)
def _besselk(nu: float, x: float) -> tuple[float, float, str]:
    """(value, rel error, path) for K_nu(x), e^x-scaled when x > _SCALE_X.

    Evaluated at |nu| throughout, which realises K_{-nu} = K_nu exactly.
    """
    an = abs(nu)
    if x >= _ASYM_BASE + an * an:
        val, rel = _k_asym(an, x)
        return val, rel, "asymptotic"
    if x <= 2.0 and abs(an - round(an)) > 0.05:
        out = _k_reflect(an, x)
        if out is not None:
            return out[0], out[1], "reflection"
    val, rel = _k_quad(an, x)
    return val, rel, "quadrature"


# ---------------------------------------------------------------------------
# public point evaluation
# ---------------------------------------------------------------------------

def _unscale_i(val: float, x: float) -> float:
    return val * math.exp(x) if x > _SCALE_X else val


def _unscale_k(val: float, x: float) -> float:
    return val * math.exp(-x) if x > _SCALE_X else val


def _check_target(rel: float, target: float, what: str) -> None:
    if target < 1e-14:
        raise DomainError(f"target_rel_err={target} below the 1e-14 floor")
    if rel > target:
        raise AccuracyError(f"{what}: certified error {rel:.3e} exceeds target {target:.3e}")


def eval_I(ctx: EvalContext, target_rel_err: float = DEFAULT_TARGET_REL_ERR) -> ValueWithError:
    """I_nu(x) with a certified relative-error bound."""
    val, rel, _ = _besseli(ctx.nu, ctx.x)
    _check_target(rel, target_rel_err, f"I_{ctx.nu}({ctx.x})")
    out = _unscale_i(val, ctx.x)
    if not math.isfinite(out):
        raise AccuracyError(f"I_{ctx.nu}({ctx.x}) overflows double precision")
    return ValueWithError(out, rel)


def eval_K(ctx: EvalContext, target_rel_err: float = DEFAULT_TARGET_REL_ERR) -> ValueWithError:
    """K_nu(x) with a certified relative-error bound; K_{-nu} = K_nu."""
    val, rel, _ = _besselk(ctx.nu, ctx.x)
    _check_target(rel, target_rel_err, f"K_{ctx.nu}({ctx.x})")
    out = _unscale_k(val, ctx.x)
    if not math.isfinite(out) or out <= 0.0:
        raise AccuracyError(f"K_{ctx.nu}({ctx.x}) not representable in double precision")
    return ValueWithError(out, rel)


def evaluation_path(fn: str, nu: float, x: float) -> str:
    """Name of the evaluation path ('series', 'asymptotic', ...) used for I or K."""
    if fn == "I":
        return _besseli(nu, x)[2]
    if fn == "K":
        return _besselk(nu, x)[2]
    raise DomainError(f"unknown function tag {fn!r}")


# ---------------------------------------------------------------------------
# ratios (dual-route, cross-checked)
# ---------------------------------------------------------------------------

def _ratio_i_cf(nu: float, x: float) -> float:
    # I_{nu+1}/I_nu as the continued fraction 1/(b1 + 1/(b2 + ...)),
    # b_k = 2(nu+k)/x, from the three-term recurrence (modified Lentz;
    # tiny must satisfy 1/tiny^2 < inf since b1 = 0 at nu = -1)
    tiny = 1e-30
    f = tiny
    c = f
    d = 0.0
    for k in range(1, 100_000):
        b = 2.0 * (nu + k) / x
        d = b + d
        if d == 0.0:
            d = tiny
        c = b + 1.0 / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 4.0 * _EPS:
            return f
    raise AccuracyError(f"ratio_I continued fraction failed to converge at nu={nu}, x={x}")


RATIO_AGREEMENT_REL = 1e-10


@lru_cache(maxsize=200_000)
def _ratio_i(nu: float, x: float) -> tuple[float, float]:
    num, e1 = _i_series(nu + 1.0, x)
    den, e0 = _i_series(nu, x)
    r_series = num / den
    r_cf = _ratio_i_cf(nu, x)
    diff = abs(r_cf - r_series)
    if diff > RATIO_AGREEMENT_REL * abs(r_cf):
        raise CrossCheckError(
            f"ratio_I paths disagree at nu={nu}, x={x}: "
            f"series {r_series!r} vs continued fraction {r_cf!r}"
        )
    rel = max(4.0 * _EPS, diff / abs(r_cf))
    if nu >= -0.5 and r_cf > 1.0:
        r_cf = 1.0  # provably < 1 there; rounding may land a few ulp above
    return r_cf, rel


def ratio_I(ctx: EvalContext) -> ValueWithError:
    """I_{nu+1}(x)/I_nu(x), computed by series quotient and continued fraction."""
    if ctx.nu < -1.0:
        raise DomainError(f"ratio_I needs nu >= -1 (I_nu > 0); got nu={ctx.nu}")
    r, rel = _ratio_i(ctx.nu, ctx.x)
    return ValueWithError(r, rel)


RATIO_K_CROSSCHECK_REL = 1e-9


@lru_cache(maxsize=200_000)
def _ratio_k(nu: float, x: float) -> tuple[float, float]:
    k0, e0, _ = _besselk(nu, x)
    k1, e1, _ = _besselk(nu + 1.0, x)
    km, em, _ = _besselk(nu - 1.0, x)
    r = k1 / k0
    # upward recurrence K_{nu+1} = K_{nu-1} + (2nu/x) K_nu; the residual is
    # compared against the dominant term since the recurrence may produce a
    # small K_{nu+1} from the difference of two huge terms (nu << 0, x small)
    rec = 2.0 * nu / x * k0
    scale = abs(km) + abs(rec) + abs(k1)
    resid = abs(k1 - (km + rec))
    if resid > max(RATIO_K_CROSSCHECK_REL, 50.0 * (e0 + e1 + em)) * scale:
        raise CrossCheckError(
            f"ratio_K recurrence cross-check failed at nu={nu}, x={x}: "
            f"quotient {k1!r} vs recurrence {km + rec!r}"
        )
    return r, e0 + e1 + 2.0 * _EPS


def ratio_K(ctx: EvalContext) -> ValueWithError:
    """K_{nu+1}(x)/K_nu(x) from two evaluations, recurrence cross-checked."""
    r, rel = _ratio_k(ctx.nu, ctx.x)
    return ValueWithError(r, rel)


# ---------------------------------------------------------------------------
# derived quantities
# ---------------------------------------------------------------------------

class QuantityKind(str, Enum):
    Y = "y"
    Z = "z"
    PHI_I = "phiI"
    PHI_K = "phiK"
    PHI_P = "phiP"
    P = "P"
    OMEGA = "omega"
    DELTA_I = "deltaI"
    DELTA_K = "deltaK"
    W = "w"
    U = "u"
    LAMBDA = "lambda"
    Q = "q"
    T = "t"
    B2HAT = "b2hat"
    V_EFF = "veff"
    N_C = "nc"
    N_S = "ns"
    I_RATIO = "iratio"
    K_RATIO = "kratio"


QUANTITY_EXPRESSIONS: dict[QuantityKind, str] = {
    QuantityKind.Y: "x*I'(nu,x)/I(nu,x)",
    QuantityKind.Z: "x*K'(nu,x)/K(nu,x)",
    QuantityKind.PHI_I: "1 - I(nu-1,x)*I(nu+1,x)/I(nu,x)^2",
    QuantityKind.PHI_K: "1 - K(nu-1,x)*K(nu+1,x)/K(nu,x)^2",
    QuantityKind.PHI_P: "1 - P(nu-1,x)*P(nu+1,x)/P(nu,x)^2 = phiI + phiK - phiI*phiK",
    QuantityKind.P: "I(nu,x)*K(nu,x)",
    QuantityKind.OMEGA: "x*I(nu,x)*K(nu,x)",
    QuantityKind.DELTA_I: "I(nu,x)^2 - I(nu-1,x)*I(nu+1,x) = I(nu,x)^2*phiI",
    QuantityKind.DELTA_K: "K(nu,x)^2 - K(nu-1,x)*K(nu+1,x) = K(nu,x)^2*phiK",
    QuantityKind.W: "sqrt(x^2+nu^2) - y",
    QuantityKind.U: "sqrt(x^2+mu) - y,  mu = nu^2 - 1/4",
    QuantityKind.LAMBDA: "y - sqrt(x^2+(nu+1)^2)",
    QuantityKind.Q: "z + sqrt(x^2+mu),  mu = nu^2 - 1/4",
    QuantityKind.T: "z + sqrt(x^2+nu^2)",
    QuantityKind.B2HAT: "-1/(x*phiI)",
    QuantityKind.V_EFF: "K(nu-1,x)*K(nu+1,x)/K(nu,x)^2 - 1 = -phiK  (nu=mu_gig, x=1/w_gig)",
    QuantityKind.N_C: "(x^2/4)/(nu+1+sqrt(x^2+(nu+1)^2))",
    QuantityKind.N_S: "(x/4)*I(nu+1,x)/I(nu,x)",
    QuantityKind.I_RATIO: "I(nu,x)/I(nu-1,x)",
    QuantityKind.K_RATIO: "K(nu,x)/K(nu-1,x)",
}

# minimal order for each kind (None = whole supported range); the I-side
# quantities need I_nu > 0, hence nu >= -1 via the integer-order symmetry
_MIN_NU: dict[QuantityKind, float | None] = {
    QuantityKind.Y: -1.0,
    QuantityKind.Z: None,
    QuantityKind.PHI_I: -1.0,
    QuantityKind.PHI_K: None,
    QuantityKind.PHI_P: -1.0,
    QuantityKind.P: -1.0,
    QuantityKind.OMEGA: -1.0,
    QuantityKind.DELTA_I: -1.0,
    QuantityKind.DELTA_K: None,
    QuantityKind.W: -1.0,
    QuantityKind.U: -1.0,
    QuantityKind.LAMBDA: -1.0,
    QuantityKind.Q: None,
    QuantityKind.T: None,
    QuantityKind.B2HAT: 0.0,
    QuantityKind.V_EFF: None,
    QuantityKind.N_C: -1.0,
    QuantityKind.N_S: -1.0,
    QuantityKind.I_RATIO: 0.0,
    QuantityKind.K_RATIO: None,
}


def _phi_i(ctx: EvalContext) -> ValueWithError:
    # phiI = 1 - (I_{nu-1}/I_nu)(I_{nu+1}/I_nu) with
    # I_{nu-1}/I_nu = 2 nu/x + r via the three-term recurrence; never forms
    # the Turanian by direct subtraction of function values
    r, er = _ratio_i(ctx.nu, ctx.x)
    a = 2.0 * ctx.nu / ctx.x + r
    val = 1.0 - a * r
    abs_err = (abs(a) + r) * r * er + 4.0 * _EPS * (1.0 + abs(a) * r)
    return ValueWithError(val, abs_err / abs(val) if val != 0.0 else math.inf)


def _phi_k(ctx: EvalContext) -> ValueWithError:
    # phiK = 1 - (K_{nu-1}/K_nu)(K_{nu+1}/K_nu); the first factor equals
    # ratio_K - 2 nu/x by the recurrence (which _ratio_k cross-checks) but is
    # computed as a direct quotient to dodge the small-x cancellation
    r, er = _ratio_k(ctx.nu, ctx.x)
    k0, e0, _ = _besselk(ctx.nu, ctx.x)
    km, em, _ = _besselk(ctx.nu - 1.0, ctx.x)
    a = km / k0
    val = 1.0 - a * r
    abs_err = a * r * (er + em + e0) + 4.0 * _EPS * (1.0 + a * r)
    return ValueWithError(val, abs_err / abs(val) if val != 0.0 else math.inf)


def _y(ctx: EvalContext) -> ValueWithError:
    r, er = _ratio_i(ctx.nu, ctx.x)
    val = ctx.nu + ctx.x * r
    abs_err = ctx.x * r * er + 2.0 * _EPS * (abs(ctx.nu) + ctx.x * r)
    return ValueWithError(val, abs_err / abs(val) if val != 0.0 else math.inf)


def _z(ctx: EvalContext) -> ValueWithError:
    r, er = _ratio_k(ctx.nu, ctx.x)
    val = ctx.nu - ctx.x * r
    abs_err = ctx.x * r * er + 2.0 * _EPS * (abs(ctx.nu) + ctx.x * r)
    return ValueWithError(val, abs_err / abs(val) if val != 0.0 else math.inf)


def _p(ctx: EvalContext) -> ValueWithError:
    # scaling factors e^-x and e^x cancel, so the product never overflows
    vi, ei, _ = _besseli(ctx.nu, ctx.x)
    vk, ek, _ = _besselk(ctx.nu, ctx.x)
    return ValueWithError(vi * vk, ei + ek + 2.0 * _EPS)


def _shifted(base: ValueWithError, shift: float, sign: float) -> ValueWithError:
    # sign * base.value + shift, propagating the absolute error
    val = sign * base.value + shift
    abs_err = base.abs_error_bound + 2.0 * _EPS * (abs(shift) + abs(base.value))
    return ValueWithError(val, abs_err / abs(val) if val != 0.0 else math.inf)


def quantity(kind: QuantityKind, ctx: EvalContext) -> ValueWithError:
    """Evaluate one derived quantity at (nu, x) with a propagated error bound."""
    kind = QuantityKind(kind)
    min_nu = _MIN_NU[kind]
    if min_nu is not None and ctx.nu < min_nu:
        raise DomainError(f"quantity {kind.value!r} needs nu >= {min_nu}; got nu={ctx.nu}")
    nu, x = ctx.nu, ctx.x

    if kind is QuantityKind.Y:
        return _y(ctx)
    if kind is QuantityKind.Z:
        return _z(ctx)
    if kind is QuantityKind.PHI_I:
        return _phi_i(ctx)
    if kind is QuantityKind.PHI_K:
        return _phi_k(ctx)
    if kind is QuantityKind.PHI_P:
        fi = _phi_i(ctx)
        fk = _phi_k(ctx)
        val = fi.value + fk.value - fi.value * fk.value
        abs_err = fi.abs_error_bound * (1.0 + abs(fk.value)) + fk.abs_error_bound * (1.0 + abs(fi.value))
        return ValueWithError(val, abs_err / abs(val) if val != 0.0 else math.inf)
    if kind is QuantityKind.P:
        return _p(ctx)
    if kind is QuantityKind.OMEGA:
        p = _p(ctx)
        return ValueWithError(x * p.value, p.rel_error_bound + _EPS)
    if kind is QuantityKind.DELTA_I:
        fi = _phi_i(ctx)
        vi, ei, _ = _besseli(nu, x)
        iv = _unscale_i(vi, x)
        val = iv * iv * fi.value  # inf (not OverflowError) when I^2 overflows
        if not math.isfinite(val):
            raise AccuracyError(f"deltaI overflows double precision at nu={nu}, x={x}")
        return ValueWithError(val, 2.0 * ei + fi.rel_error_bound + 2.0 * _EPS)
    if kind is QuantityKind.DELTA_K:
        fk = _phi_k(ctx)
        vk, ek, _ = _besselk(nu, x)
        kv = _unscale_k(vk, x)
        val = kv * kv * fk.value
        if val == 0.0 or not math.isfinite(val):
            raise AccuracyError(f"deltaK not representable at nu={nu}, x={x}")
        return ValueWithError(val, 2.0 * ek + fk.rel_error_bound + 2.0 * _EPS)
    if kind is QuantityKind.W:
        return _shifted(_y(ctx), math.hypot(x, nu), -1.0)
    if kind is QuantityKind.U:
        return _shifted(_y(ctx), math.sqrt(x * x + ctx.mu), -1.0)
    if kind is QuantityKind.LAMBDA:
        return _shifted(_y(ctx), -math.hypot(x, nu + 1.0), +1.0)
    if kind is QuantityKind.Q:
        if ctx.mu < 0.0:
            raise DomainError(f"quantity 'q' needs mu = nu^2 - 1/4 >= 0; got nu={nu}")
        return _shifted(_z(ctx), math.sqrt(x * x + ctx.mu), +1.0)
    if kind is QuantityKind.T:
        return _shifted(_z(ctx), math.hypot(x, nu), +1.0)
    if kind is QuantityKind.B2HAT:
        fi = _phi_i(ctx)
        val = -1.0 / (x * fi.value)
        return ValueWithError(val, fi.rel_error_bound + 2.0 * _EPS)
    if kind is QuantityKind.V_EFF:
        fk = _phi_k(ctx)
        return ValueWithError(-fk.value, fk.rel_error_bound)
    if kind is QuantityKind.N_C:
        b = nu + 1.0
        val = 0.25 * x * x / (b + math.hypot(x, b))
        return ValueWithError(val, 6.0 * _EPS)
    if kind is QuantityKind.N_S:
        r, er = _ratio_i(nu, x)
        return ValueWithError(0.25 * x * r, er + 2.0 * _EPS)
    if kind is QuantityKind.I_RATIO:
        # I_nu/I_{nu-1} = 1/(2 nu/x + r) with r = I_{nu+1}/I_nu
        r, er = _ratio_i(nu, x)
        a = 2.0 * nu / x + r
        val = 1.0 / a
        return ValueWithError(val, er * r / abs(a) + 4.0 * _EPS)
    if kind is QuantityKind.K_RATIO:
        _ratio_k(nu, x)  # runs the recurrence cross-check
        k0, e0, _ = _besselk(nu, x)
        km, em, _ = _besselk(nu - 1.0, x)
        return ValueWithError(k0 / km, e0 + em + 2.0 * _EPS)
    raise DomainError(f"unknown quantity kind {kind!r}")


def numeric_derivative(kind: QuantityKind, ctx: EvalContext, order: int = 1) -> float:
    """d/dx (order=1) or d^2/dx^2 (order=2) of a quantity at (nu, x).

    Central differences with one Richardson extrapolation level; the base
    step is h = max(1e-5, 1e-5*x).
    """
    if order not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2; got {order}")
    h = max(1e-5, 1e-5 * ctx.x)
    if ctx.x - 2.0 * h <= 0.0 or ctx.x + 2.0 * h > SUPPORTED_X[1]:
        raise DomainError(f"x={ctx.x} not interior to the domain by 2h={2*h}")

    def f(t: float) -> float:
        return quantity(kind, EvalContext(ctx.nu, t)).value

    if order == 1:
        def d1(step: float) -> float:
            return (f(ctx.x + step) - f(ctx.x - step)) / (2.0 * step)

        return (4.0 * d1(0.5 * h) - d1(h)) / 3.0

    f0 = f(ctx.x)

    def d2(step: float) -> float:
        return (f(ctx.x + step) - 2.0 * f0 + f(ctx.x - step)) / (step * step)

    return (4.0 * d2(0.5 * h) - d2(h)) / 3.0


# ---------------------------------------------------------------------------
# evaluator self-checks
# ---------------------------------------------------------------------------

OVERLAP_AGREEMENT_REL = 1e-11


def dual_path_checks() -> list[tuple[str, float]]:
    """Compare independent evaluation paths where their regions overlap.

    Returns (label, relative difference) pairs; any entry exceeding
    OVERLAP_AGREEMENT_REL indicates an evaluator bug.
    """
    out: list[tuple[str, float]] = []
    for nu in (0.0, 0.3, 1.0, 2.5, 4.0):
        x = _ASYM_BASE + nu * nu + 1.0
        vs, _ = _i_series(nu, x)
        va, _ = _i_asym(nu, x)
        out.append((f"I series/asymptotic nu={nu} x={x:g}", abs(vs - va) / abs(va)))
        vq, _ = _k_quad(nu, x)
        vk, _ = _k_asym(nu, x)
        out.append((f"K quadrature/asymptotic nu={nu} x={x:g}", abs(vq - vk) / vk))
    for nu in (0.3, 1.4, 2.5, 7.3):
        for x in (0.2, 1.0):
            ref = _k_reflect(nu, x)
            if ref is None:
                continue
            vq, _ = _k_quad(nu, x)
            out.append((f"K reflection/quadrature nu={nu} x={x:g}", abs(ref[0] - vq) / vq))
    return out
