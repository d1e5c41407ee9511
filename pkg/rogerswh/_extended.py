"""Extended Wiener-Hopf factors f_up(tau; xi), f_down(tau; xi) of f + tau and the normalised factors kappa.

For tau > 0 the extended factors are the Wiener-Hopf factors of the Rogers function f + tau. For a balanced f their
ratios and products extend holomorphically to tau off (-inf, 0] through integrals along the curve of real values;
the boundary values on (-inf, 0) come from the factors of the difference quotients f_[zeta].

The normalised factors satisfy kappa_dot(tau) kappa_up(tau; -i xi) kappa_down(tau; i xi) = f(xi) + tau, with
kappa_up(1; 1) = kappa_down(1; 1).
"""

import cmath
import math
from typing import List, Optional, Sequence, Union

import numpy as np

from . import _msgs as msgs
from ._core import add_constant, classify, difference_quotient, transform
from ._curve import curve_at, require_balanced, zeta as curve_point
from ._helpers import LOGGER, DomainViolation, NotOnCurve, OutOfRange, Side, TauOnCut
from ._quad import DEFAULT_OPTIONS, dilog, extrapolate_limit, integrate_halfline, settle
from ._wiener_hopf import (
    _axis_integral,
    _exp_value,
    _require_nonzero,
    _right,
    _scales,
    side_curve,
    wh_factor,
    wh_norm,
    wh_product,
    wh_ratio,
)
from .model import (
    CurveGrid,
    KappaValue,
    PathKind,
    QuadOptions,
    RogersFunction,
    StableParams,
    TransformKind,
    WHValue,
)

Tau = Union[complex, float]

KAPPA_LIMIT_LADDER = (1e3, 1e4, 1e5, 1e6)


def _check_tau(tau: Tau) -> complex:
    tau = complex(tau)
    if not (math.isfinite(tau.real) and math.isfinite(tau.imag)):
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("tau", tau, "C \\ (-inf, 0]"))
    if tau.imag == 0 and tau.real <= 0:
        raise TauOnCut(msgs.TAU_ON_CUT_MSG.format(tau))
    return tau


def _positive(tau: complex) -> bool:
    return tau.imag == 0 and tau.real > 0


def _check_xis(what: str, *xis: float) -> None:
    if not all(x > 0 for x in xis):
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(xis, f"{what} (positive reals)"))


def shifted(f: RogersFunction, tau: float) -> RogersFunction:
    """f + tau for tau > 0, cached on f so that the normalisation of its factors is computed once."""
    key = ("shifted", float(tau))
    if key not in f.memo:
        f.memo[key] = add_constant(f, float(tau))
    g: RogersFunction = f.memo[key]
    return g


def _tau_points(f: RogersFunction, tau: complex, grid: Optional[CurveGrid], xis: Sequence[float]) -> List[float]:
    """Break points of the curve integrals: the xi's and, for Re tau < 0, the radius where lambda = -Re tau."""
    points = list(_scales(*xis))
    if tau.real >= 0:
        return points
    if grid is not None:
        radii = np.array([s.r for s in grid.samples])
        lam = np.array([s.lam for s in grid.samples])
    else:
        radii = np.geomspace(1e-6, 1e6, 49)
        lam = np.asarray(curve_at(f, radii).lam, dtype=float)
    target = -tau.real
    if lam[0] < target < lam[-1] and np.all(np.diff(lam) > 0):
        points.append(float(np.exp(np.interp(target, lam, np.log(radii)))))
    return points


def xwh_ratio(
    f: RogersFunction,
    side: Union[Side, str],
    tau: Tau,
    xi1: float,
    xi2: float,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
    path: Optional[PathKind] = None,
) -> WHValue:
    """f_up(tau; xi1) / f_up(tau; xi2) (or the down ratio) for tau off (-inf, 0].

    Positive tau uses the real-axis factors of f + tau. Other tau need a balanced f and integrate
    Arg((zeta - i xi2) / (zeta - i xi1)) lambda' / (lambda + tau) along the curve (conj zeta for the down ratio).
    `path` forces one of the two ways for positive tau.
    """
    side, tau = Side.decode(side), _check_tau(tau)
    _check_xis("xwh_ratio", xi1, xi2)
    if _positive(tau) and path is not PathKind.CURVE:
        return wh_ratio(shifted(f, tau.real), side, xi1, xi2, opts)
    require_balanced(f, "xwh_ratio", grid)
    if xi1 == xi2:
        return WHValue(1 + 0j, 0.0, PathKind.CURVE)

    def integrand(r: np.ndarray) -> np.ndarray:
        z, _, lam, dlam = side_curve(f, side, r)
        return np.angle((z - 1j * xi2) / (z - 1j * xi1)) * dlam / (lam + tau)

    points = _tau_points(f, tau, grid, (xi1, xi2))
    result = settle(integrate_halfline(integrand, opts, points=points), "xwh_ratio")
    return _exp_value(result.scaled(1 / math.pi), PathKind.CURVE)


def xwh_product(
    f: RogersFunction,
    tau: Tau,
    xi1: float,
    xi2: float,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
    path: Optional[PathKind] = None,
) -> WHValue:
    """f_up(tau; xi1) f_down(tau; xi2), which does not depend on the normalisation of the factors."""
    tau = _check_tau(tau)
    _check_xis("xwh_product", xi1, xi2)
    if _positive(tau) and path is not PathKind.CURVE:
        return wh_product(shifted(f, tau.real), xi1, xi2, opts)
    require_balanced(f, "xwh_product", grid)

    def integrand(r: np.ndarray) -> np.ndarray:
        c = curve_at(f, r)
        return np.angle((c.zeta + 1j * xi2) / (c.zeta - 1j * xi1)) * c.lam_prime / (c.lam + tau)

    points = _tau_points(f, tau, grid, (xi1, xi2))
    result = settle(integrate_halfline(integrand, opts, points=points), "xwh_product")
    value = _exp_value(result.scaled(1 / math.pi), PathKind.CURVE)
    return WHValue(tau * value.value, abs(tau) * value.err, PathKind.CURVE)


def kappa_dot(f: RogersFunction, tau: Tau) -> complex:
    """kappa_dot(tau): 1 for unbounded f and (tau + a) / (1 + a) with a = f(inf-) for bounded f."""
    tau = _check_tau(tau)
    info = classify(f)
    if info.zero:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format("the zero function", "kappa_dot"))
    if not info.bounded:
        return 1 + 0j
    a = info.f_at_infinity
    return complex((tau + a) / (1 + a))


def _kappa_value(side: Side, tau: complex, xi: complex, dot: complex, value: complex, err: float) -> KappaValue:
    if side is Side.UP:
        return KappaValue(tau, xi, dot, kappa_up=value, err=err)
    return KappaValue(tau, xi, dot, kappa_down=value, err=err)


def _check_kappa_args(what: str, tau: Tau) -> float:
    tau = _check_tau(tau)
    if not _positive(tau):
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"tau = {tau}", f"{what} (positive reals)"))
    return tau.real


def kappa(
    f: RogersFunction, side: Union[Side, str], tau: float, xi: complex, opts: Optional[QuadOptions] = None
) -> KappaValue:
    """Normalised factor kappa_up(tau; xi) (or kappa_down) from one real-axis integral.

    sqrt(kappa_dot(tau)) kappa_up(tau; xi) / f_up(1; 1) is the exponential of
    (1/2pi) int_0^inf [L_tau/(xi + ir) + conj L_tau/(xi - ir) - L_1/(1 + ir) - conj L_1/(1 - ir)] dr with
    L_t = log(f(r) + t); the down factor swaps ir and -ir. Points of the closed right half-plane are accepted for xi.
    """
    side = Side.decode(side)
    tau_r = _check_kappa_args("kappa", tau)
    _require_nonzero(f)
    point = _right(complex(xi))
    if point.real < 0:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"xi = {xi}", "kappa"))
    dot = kappa_dot(f, tau_r)
    norm = wh_norm(shifted(f, 1.0), opts)
    s = 1 if side is Side.UP else -1

    def logs(r: np.ndarray) -> Sequence[np.ndarray]:
        values = np.asarray(f(r.astype(complex)))
        return np.log(values + tau_r), np.log(values + 1)

    terms = [(1, point, s, 0), (-1, 1 + 0j, s, 1)]
    result = settle(_axis_integral(logs, terms, opts, _scales(point, 1.0)), "kappa")
    value = norm * cmath.exp(result.value) / math.sqrt(dot.real)
    err = abs(value) * result.err_estimate
    return _kappa_value(side, complex(tau_r), complex(xi), dot, value, err)


def _log_form_admissible(f: RogersFunction, opts: Optional[QuadOptions]) -> bool:
    """Whether the integral of 1 / (r lambda(r)) over (1, inf) converges."""

    def integrand(r: np.ndarray) -> np.ndarray:
        return 1 / (r * np.asarray(curve_at(f, r).lam, dtype=float))

    result = integrate_halfline(integrand, opts, lower=1.0)
    return result.converged and math.isfinite(result.value.real)


def kappa_curve(
    f: RogersFunction,
    side: Union[Side, str],
    tau: float,
    xi: float,
    form: str = "arg",
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
) -> KappaValue:
    """kappa_up(tau; xi) (or kappa_down) of an unbounded balanced f from integrals along the curve of real values.

    The "log" form integrates Im(zeta' / (i xi - zeta)) log(lambda + tau) against the same term at tau = xi = 1 and
    needs the integral of 1 / (r lambda) over (1, inf) to converge. The "arg" form is its integrated-by-parts
    version, which picks up (1/2) log((f(0+) + tau) / (f(0+) + 1)) from the end point r = 0.
    """
    side = Side.decode(side)
    tau_r = _check_kappa_args("kappa_curve", tau)
    _check_xis("kappa_curve", xi)
    if form not in ("arg", "log"):
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"form '{form}'", "kappa_curve (arg, log)"))
    require_balanced(f, "kappa_curve", grid)
    info = classify(f)
    if info.bounded:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"bounded {f.label}", "kappa_curve"))
    if form == "log" and not _log_form_admissible(f, opts):
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"{f.label} (1/(r lambda) not integrable)", "log form"))
    norm = wh_norm(shifted(f, 1.0), opts)

    def log_form(r: np.ndarray) -> np.ndarray:
        z, dz, lam, _ = side_curve(f, side, r)
        first = (dz / (1j * xi - z)).imag * np.log(lam + tau_r)
        second = (dz / (1j - z)).imag * np.log(lam + 1)
        return -(first - second) / math.pi

    def arg_form(r: np.ndarray) -> np.ndarray:
        z, _, lam, dlam = side_curve(f, side, r)
        first = dlam * np.angle(z - 1j * xi) / (lam + tau_r)
        second = dlam * np.angle(z - 1j) / (lam + 1)
        return -(first - second) / math.pi

    integrand = log_form if form == "log" else arg_form
    result = settle(integrate_halfline(integrand, opts, points=_scales(xi, 1.0)), "kappa_curve")
    log_value = result.value.real
    if form == "arg":
        log_value += 0.5 * math.log((info.f_at_zero + tau_r) / (info.f_at_zero + 1))
    value = norm * math.exp(log_value)
    return _kappa_value(side, complex(tau_r), complex(xi), 1 + 0j, complex(value), value * result.err_estimate)


def kappa_limit(
    f: RogersFunction,
    side: Union[Side, str],
    tau: float,
    xi: float,
    ladder: Sequence[float] = KAPPA_LIMIT_LADDER,
    opts: Optional[QuadOptions] = None,
) -> KappaValue:
    """kappa from its definition: the limit as eta -> inf of f_up(1; eta) f_up(tau; xi) / f_up(tau; eta)."""
    side = Side.decode(side)
    tau_r = _check_kappa_args("kappa_limit", tau)
    _check_xis("kappa_limit", xi)
    one, at_tau = shifted(f, 1.0), shifted(f, tau_r)
    seq = []
    for eta in sorted(ladder):
        value = wh_factor(one, side, eta, opts).value * wh_ratio(at_tau, side, xi, eta, opts).value
        seq.append((1 / eta, value))
    limit = extrapolate_limit(seq)
    LOGGER.debug(f"kappa_limit at tau={tau_r}, xi={xi}: extrapolation error {limit.err_estimate:.3g}")
    return _kappa_value(side, complex(tau_r), complex(xi), kappa_dot(f, tau_r), limit.value, limit.err_estimate)


def _stable1_log_factor(a: complex, tau: float, xi: float) -> float:
    """(1/pi) Im(-E^2/2 + i pi E - Li(w) - log(tau) log(1 - w)), E = log(tau + i a xi), w = tau / (tau + i a xi)."""
    d = tau + 1j * a * xi
    e = cmath.log(d)
    w = tau / d
    h = -e * e / 2 + 1j * math.pi * e - complex(dilog(w)) - math.log(tau) * cmath.log(1j * a * xi / d)
    return h.imag / math.pi


def stable1_kappa(p: StableParams, side: Union[Side, str], tau: float, xi: float) -> KappaValue:
    """kappa for f(xi) = a xi (stability index 1) in closed form through the dilogarithm.

    The up and down factors of a xi + tau are exp of `_stable1_log_factor` at a and conj a; their product is
    a xi + tau at the boundary, and the two are rescaled so that kappa_up(1; 1) = kappa_down(1; 1).
    """
    side = Side.decode(side)
    if p.alpha != 1:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"alpha = {p.alpha}", "stable1_kappa"))
    if not p.a.real > 0:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"a = {p.a}", "stable1_kappa (Re a > 0)"))
    tau_r = _check_kappa_args("stable1_kappa", tau)
    _check_xis("stable1_kappa", xi)
    a = p.a if side is Side.UP else p.a.conjugate()
    own = _stable1_log_factor(a, 1.0, 1.0)
    other = _stable1_log_factor(a.conjugate(), 1.0, 1.0)
    value = math.exp(_stable1_log_factor(a, tau_r, xi) + (other - own) / 2)
    return _kappa_value(side, complex(tau_r), complex(xi), 1 + 0j, complex(value), 0.0)


def _boundary_point(f: RogersFunction, r: float, what: str) -> complex:
    if not r > 0:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("r", r, "(0, inf)"))
    require_balanced(f, what)
    sample = curve_point(f, r)
    if sample.on_axis or not sample.zeta.real > 0:
        raise NotOnCurve(msgs.NOT_ON_CURVE_MSG.format(r))
    return sample.zeta


def xwh_boundary(
    f: RogersFunction,
    side: Union[Side, str],
    r: float,
    xi1: float,
    xi2: float,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """Boundary value of f_up(tau; xi1) / f_up(tau; xi2) as tau -> -lambda(r) from the upper half-plane.

    With zeta = zeta_f(r) the value is (xi1 + i zeta) / (xi2 + i zeta) times g_up(xi2) / g_up(xi1) for the
    difference quotient g = f_[zeta]; the down ratio uses conj zeta and the down factors of g.
    """
    side = Side.decode(side)
    _check_xis("xwh_boundary", xi1, xi2)
    zeta = _boundary_point(f, r, "xwh_boundary")
    if xi1 == xi2:
        return 1 + 0j
    w = zeta if side is Side.UP else zeta.conjugate()
    ratio = wh_ratio(difference_quotient(f, zeta), side, xi1, xi2, opts).value
    return complex((xi1 + 1j * w) / (xi2 + 1j * w) / ratio)


def xwh_boundary_product(
    f: RogersFunction, r: float, xi1: float, xi2: float, opts: Optional[QuadOptions] = None
) -> complex:
    """Boundary value of f_up(tau; xi1) f_down(tau; xi2) as tau -> -lambda(r) from the upper half-plane."""
    _check_xis("xwh_boundary_product", xi1, xi2)
    zeta = _boundary_point(f, r, "xwh_boundary_product")
    product = wh_product(difference_quotient(f, zeta), xi1, xi2, opts).value
    return complex((xi1 + 1j * zeta) * (xi2 + 1j * zeta.conjugate()) / product)


def _check_beyond(f: RogersFunction, s: float, what: str) -> None:
    require_balanced(f, what)
    info = classify(f)
    if not info.bounded or not s > info.f_at_infinity:
        sup = info.f_at_infinity
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("s", s, f"({sup:.17g}, inf)"))


def xwh_boundary_beyond(
    f: RogersFunction,
    side: Union[Side, str],
    s: float,
    xi1: float,
    xi2: float,
    product: bool = False,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """Value at tau = -s, for s above the range of lambda, of the factor ratio (or of f_up(xi1) f_down(xi2)).

    The curve integrals take log(s - lambda) in place of log(lambda + tau); the product carries an extra minus sign.
    """
    side = Side.decode(side)
    _check_xis("xwh_boundary_beyond", xi1, xi2)
    _check_beyond(f, s, "xwh_boundary_beyond")
    if product:

        def integrand(r: np.ndarray) -> np.ndarray:
            c = curve_at(f, r)
            kernel = c.zeta_prime / (1j * xi1 - c.zeta) + c.zeta_prime / (1j * xi2 + c.zeta)
            return -kernel.imag * np.log(s - c.lam) / math.pi

    else:
        if xi1 == xi2:
            return 1 + 0j

        def integrand(r: np.ndarray) -> np.ndarray:
            z, dz, lam, _ = side_curve(f, side, r)
            kernel = dz / (1j * xi1 - z) - dz / (1j * xi2 - z)
            return -kernel.imag * np.log(s - lam) / math.pi

    result = settle(integrate_halfline(integrand, opts, points=_scales(xi1, xi2)), "xwh_boundary_beyond")
    value = cmath.exp(result.value.real)
    return -value if product else value


def xwh_duality(
    f: RogersFunction,
    side: Union[Side, str],
    s: float,
    xi1: float,
    xi2: float,
    product: bool = False,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """The values of `xwh_boundary_beyond` through the factors of h(xi) = s - f(1/xi).

    f_up(-s; xi1) / f_up(-s; xi2) = h_down(1/xi1) / h_down(1/xi2), with the sides exchanged for the down ratio,
    and f_up(-s; xi1) f_down(-s; xi2) = -h_down(1/xi1) h_up(1/xi2).
    """
    side = Side.decode(side)
    _check_xis("xwh_duality", xi1, xi2)
    _check_beyond(f, s, "xwh_duality")
    h = transform(f, TransformKind.BOUNDED_COMPLEMENT, c=s)
    if product:
        return -wh_product(h, 1 / xi2, 1 / xi1, opts).value
    return wh_ratio(h, side.opposite, 1 / xi1, 1 / xi2, opts).value


def xwh_integral_identity(
    f: RogersFunction,
    xi1: float,
    xi2: float,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
) -> float:
    """((xi1 + xi2) / pi) times the integral over r of g_up(xi1) g_down(xi2) lambda' Re zeta divided by
    (xi1 + i zeta)(xi1 - i conj zeta)(xi2 - i zeta)(xi2 + i conj zeta), g = f_[zeta(r)]. The value is 1.

    Every abscissa of the outer integral costs one real-axis product of a difference quotient; the outer
    tolerance is kept at 1e-8 or looser.
    """
    _check_xis("xwh_integral_identity", xi1, xi2)
    require_balanced(f, "xwh_integral_identity", grid)
    inner = opts or DEFAULT_OPTIONS
    outer = inner.with_rel_tol(max(inner.rel_tol, 1e-8))

    def integrand(r: np.ndarray) -> np.ndarray:
        c = curve_at(f, r)
        out = np.empty(len(r), dtype=complex)
        for i, (z, dlam) in enumerate(zip(c.zeta, c.lam_prime)):
            z = complex(z)
            g_product = wh_product(difference_quotient(f, z), xi1, xi2, inner).value
            zc = z.conjugate()
            denominator = (xi1 + 1j * z) * (xi1 - 1j * zc) * (xi2 - 1j * z) * (xi2 + 1j * zc)
            out[i] = g_product * dlam * z.real / denominator
        return out * (xi1 + xi2) / math.pi

    result = settle(integrate_halfline(integrand, outer, points=_scales(xi1, xi2)), "xwh_integral_identity")
    if abs(result.value.imag) > 1e-6:
        LOGGER.warning(f"integral identity has imaginary part {result.value.imag:.3g}")
    return float(result.value.real)
