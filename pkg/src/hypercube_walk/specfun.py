"""Special functions and closed-form bound expressions.

Chebyshev polynomials, Bessel J at integer order (split-regime recurrence
evaluator), the large-argument Hankel envelope with its explicit error term,
the uniform-regime error budget (variation bound, eta), and the auxiliary
analytic functions xi and g with the branch conventions the bound chains pin
down.  Everything here is a stateless pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np
from scipy import special

from ._quadrature import panel_quad, panel_quad_with_error

__all__ = [
    "MAX_ORDER",
    "MAX_ARGUMENT",
    "chebyshev_T",
    "bessel_J",
    "bessel_zero_mcmahon",
    "HankelEnvelope",
    "hankel_modulus_bound",
    "xi",
    "g_function",
    "u1",
    "variation_bound",
    "eta_bound",
    "beta_half_integrals",
    "cos_gaussian_bound_check",
    "chebyshev_from_bessel_integral",
    "half_period_sums",
]

MAX_ORDER = 250
MAX_ARGUMENT = 2.0e5

BETA_HALF_QUARTER = special.beta(0.5, 0.25)  # 5.24411...
BETA_HALF_3QUARTER = special.beta(0.5, 0.75)  # 2.39628...


# ---------------------------------------------------------------------------
# Chebyshev polynomials
# ---------------------------------------------------------------------------

def chebyshev_T(t: int, z: float) -> float:
    """T_t(z) = cos(t arccos z) on [-1, 1]; exactly +-1 at the endpoints.

    Arguments within 1e-15 outside [-1, 1] are clamped (roundoff slack);
    anything beyond raises.
    """
    if t < 0 or t != int(t):
        raise ValueError(f"degree must be a nonnegative integer, got {t}")
    if abs(z) > 1.0 + 1e-15:
        raise ValueError(f"argument {z} outside [-1, 1]")
    z = min(1.0, max(-1.0, z))
    if z == 1.0:
        return 1.0
    if z == -1.0:
        return 1.0 if t % 2 == 0 else -1.0
    return float(np.cos(t * np.arccos(z)))


# ---------------------------------------------------------------------------
# Bessel J at integer order
# ---------------------------------------------------------------------------
#
# J_0 and J_1 come from three kernels: the power series for x <= 8, the
# periodized integral (1/pi) int_0^pi cos(m theta - x sin theta) dtheta on
# 8 < x <= 26 (midpoint rule on a periodic analytic integrand converges
# geometrically), and the large-argument expansion beyond.  Higher orders use
# the three-term recurrence upward when x >= nu (stable there) and Miller's
# normalized backward recurrence when x < nu.


def _j01_series(x: np.ndarray, order: int) -> np.ndarray:
    q = -0.25 * x * x
    if order == 0:
        term = np.ones_like(x)
    else:
        term = 0.5 * x
    total = term.copy()
    for k in range(1, 40):
        term = term * q / (k * k if order == 0 else k * (k + 1))
        total += term
        if np.all(np.abs(term) < 1e-18):
            break
    return total


def _j01_periodized(x: np.ndarray, order: int, nodes: int = 400) -> np.ndarray:
    theta = (np.arange(nodes) + 0.5) * (pi / nodes)
    s = np.sin(theta)
    return np.cos(order * theta[None, :] - np.outer(x, s)).mean(axis=1)


def _j01_asymptotic(x: np.ndarray, order: int) -> np.ndarray:
    mu = 4.0 * order * order
    p_sum = np.ones_like(x)
    q_sum = np.zeros_like(x)
    term = np.ones_like(x)
    sign_q = 1.0
    sign_p = -1.0
    for j in range(1, 30):
        term = term * (mu - (2 * j - 1) ** 2) / (8.0 * j) / x
        if j % 2 == 1:
            q_sum += sign_q * term
            sign_q = -sign_q
        else:
            p_sum += sign_p * term
            sign_p = -sign_p
        if np.all(np.abs(term) < 1e-19):
            break
    w = x - 0.25 * pi - 0.5 * pi * order
    return np.sqrt(2.0 / (pi * x)) * (p_sum * np.cos(w) - q_sum * np.sin(w))


def _j01(x: np.ndarray, order: int) -> np.ndarray:
    out = np.empty_like(x)
    small = x <= 8.0
    mid = (x > 8.0) & (x <= 26.0)
    big = x > 26.0
    if small.any():
        out[small] = _j01_series(x[small], order)
    if mid.any():
        out[mid] = _j01_periodized(x[mid], order)
    if big.any():
        out[big] = _j01_asymptotic(x[big], order)
    return out


def _bessel_upward(nu: int, x: np.ndarray) -> np.ndarray:
    prev = _j01(x, 0)
    if nu == 0:
        return prev
    cur = _j01(x, 1)
    for k in range(1, nu):
        prev, cur = cur, (2.0 * k / x) * cur - prev
    return cur


def _bessel_miller(nu: int, x: np.ndarray) -> np.ndarray:
    # Start far enough above nu that the seed error has died off by order nu;
    # near the turning point the decay is only Airy-like, hence the sqrt pad.
    pad = max(30, int(np.sqrt(60.0 * max(nu, 1))) + 10)
    start = nu + pad
    if start % 2 == 1:
        start += 1
    above = np.zeros_like(x)
    cur = np.full_like(x, 1e-300)
    target = np.zeros_like(x)
    even_sum = np.zeros_like(x)
    for k in range(start, 0, -1):
        if k % 2 == 0:
            even_sum += 2.0 * cur
        above, cur = cur, (2.0 * k / x) * cur - above
        if k - 1 == nu:
            target = cur.copy()
        overflow = np.abs(cur) > 1e250
        if overflow.any():
            for arr in (cur, above, even_sum, target):
                arr[overflow] *= 1e-250
    even_sum += cur  # J_0 term closes the normalization sum
    return target / even_sum


def bessel_J(nu: int, x) -> np.ndarray | float:
    """Bessel function of the first kind at nonnegative integer order.

    Accepts scalars or arrays; orders up to 250 and arguments up to 2e5.
    """
    if nu < 0 or nu != int(nu):
        raise ValueError(f"order must be a nonnegative integer, got {nu}")
    if nu > MAX_ORDER:
        raise ValueError(f"order {nu} exceeds supported maximum {MAX_ORDER}")
    nu = int(nu)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if arr.size and (arr.min() < 0.0 or arr.max() > MAX_ARGUMENT):
        raise ValueError(f"arguments must lie in [0, {MAX_ARGUMENT:g}]")
    out = np.zeros_like(arr)
    zero = arr == 0.0
    if zero.any():
        out[zero] = 1.0 if nu == 0 else 0.0
    positive = ~zero
    if positive.any():
        xp = arr[positive]
        res = np.empty_like(xp)
        upward = xp >= nu
        if upward.any():
            res[upward] = _bessel_upward(nu, xp[upward])
        backward = ~upward
        if backward.any():
            res[backward] = _bessel_miller(nu, xp[backward])
        out[positive] = res
    return float(out[0]) if scalar else out


def bessel_zero_mcmahon(nu: int, s: int) -> float:
    """McMahon approximation of the s-th positive zero of J_nu."""
    if s < 1:
        raise ValueError("zero index starts at 1")
    beta = (s + 0.5 * nu - 0.25) * pi
    mu = 4.0 * nu * nu
    return beta - (mu - 1) / (8 * beta) - 4 * (mu - 1) * (7 * mu - 31) / (3 * (8 * beta) ** 3)


# ---------------------------------------------------------------------------
# Hankel envelopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HankelEnvelope:
    """Explicit bounds controlling H^(1)_nu(z) off the real axis.

    modulus_bound  bounds |H^(1)_nu(z)| (requires |z| >= dim^2, nu < dim);
    rho_bound      bounds the large-argument expansion error |rho(nu, z)|;
    eta_bound      bounds the uniform-regime error |eta| via the variation;
    variation_bound  the variational constant at c = Re(z)/nu.
    """

    modulus_bound: float
    rho_bound: float
    eta_bound: float
    variation_bound: float


def hankel_modulus_bound(nu: int, z: complex, dim: int) -> HankelEnvelope:
    """Evaluate the Hankel bound package at z, for order nu < dim.

    The 3 e^{-Im z} |z|^{-1/2} modulus bound is only valid once |z| >= dim^2
    (so that the expansion error stays below e); smaller |z| is refused
    rather than silently falling back to a wrong constant.
    """
    z = complex(z)
    if z.real <= 0.0:
        raise ValueError("bounds require Re z > 0")
    if not 0 < nu < dim:
        raise ValueError(f"order must satisfy 0 < nu < dim, got nu={nu}, dim={dim}")
    az = abs(z)
    if az < dim * dim:
        raise ValueError(
            f"|z|={az:.6g} < dim^2={dim * dim}; the large-argument modulus bound does not apply"
        )
    q = (nu * nu - 0.25) / az
    rho = q * np.exp(q)
    modulus = 3.0 * np.exp(-z.imag) / np.sqrt(az)
    c = z.real / nu
    if c <= 1.0:
        raise ValueError(f"uniform-regime bounds require Re(z)/nu > 1, got {c:.6g}")
    var = variation_bound(c)
    return HankelEnvelope(
        modulus_bound=float(modulus),
        rho_bound=float(rho),
        eta_bound=eta_bound(nu, c),
        variation_bound=var,
    )


# ---------------------------------------------------------------------------
# xi and g
# ---------------------------------------------------------------------------

def xi(z: complex) -> complex:
    """xi(z) = sqrt(1+z^2) + log(z / (1 + sqrt(1+z^2))), principal branches.

    Defined on Re z > 0, extended by continuity to the ray arg z = -pi/2 with
    |z| > 1 (where 1+z^2 is approached from below the negative real axis, so
    sqrt(1+z^2) = -i sqrt(|z|^2 - 1)).
    """
    z = complex(z)
    if z.real > 0.0:
        root = np.sqrt(1.0 + z * z)
    elif z.real == 0.0 and z.imag < 0.0 and abs(z) > 1.0:
        w = -z.imag
        root = -1j * np.sqrt(w * w - 1.0)
    else:
        raise ValueError(f"z={z} outside the domain (Re z > 0 or arg z = -pi/2, |z| > 1)")
    return complex(root + np.log(z / (1.0 + root)))


def g_function(z: complex) -> complex:
    """g(z) = z - sqrt(z^2 - 1) + arccos(1/z) on Re z >= 1, Im z >= 0.

    Principal branches throughout; real-valued on the real axis z >= 1.
    """
    z = complex(z)
    if z.real < 1.0 or z.imag < 0.0:
        raise ValueError(f"z={z} outside the domain Re z >= 1, Im z >= 0")
    root = np.sqrt(z * z - 1.0)
    ac = np.arccos(1.0 / z) if z != 1.0 else 0.0
    value = z - root + ac
    if z.imag == 0.0:
        return complex(value.real, 0.0)
    return complex(value)


# ---------------------------------------------------------------------------
# Uniform-regime error budget
# ---------------------------------------------------------------------------

def u1(p: float) -> float:
    """First correction term of the uniform expansion: (3p - 5p^3)/24."""
    return (3.0 * p - 5.0 * p**3) / 24.0


def variation_bound(c: float) -> float:
    """Bound on the total variation along the bent path, decreasing in c > 1.

    1/12 + 1/(6 sqrt 5) + (4/27)^(1/4) + c^2(c^2+2) / (sqrt 8 (c^2-1)^2.5).
    """
    if c <= 1.0:
        raise ValueError(f"variation bound requires c > 1, got {c}")
    c2 = c * c
    return (
        1.0 / 12.0
        + 1.0 / (6.0 * np.sqrt(5.0))
        + (4.0 / 27.0) ** 0.25
        + c2 * (c2 + 2.0) / (np.sqrt(8.0) * (c2 - 1.0) ** 2.5)
    )


def eta_bound(nu: float, c: float) -> float:
    """|eta| <= exp(2V/nu) * 2V/nu with V the variation bound at c."""
    if nu <= 0:
        raise ValueError("order must be positive")
    v = variation_bound(c)
    return float(np.exp(2.0 * v / nu) * (2.0 * v / nu))


# ---------------------------------------------------------------------------
# Beta-function ray integrals and the cosine-Gaussian bound
# ---------------------------------------------------------------------------

def beta_half_integrals(a: float) -> tuple[float, float]:
    """Closed forms of the two ray integrals controlling the contour pieces.

    int_0^inf (a^2+y^2)^(-3/4) dy = B(1/2, 1/4) / (2 sqrt a)  and
    int_0^inf (a^2+y^2)^(-5/4) dy = B(1/2, 3/4) / (2 sqrt a^3).
    """
    if a <= 0:
        raise ValueError(f"scale must be positive, got {a}")
    return (
        float(BETA_HALF_QUARTER / (2.0 * np.sqrt(a))),
        float(BETA_HALF_3QUARTER / (2.0 * np.sqrt(a**3))),
    )


def cos_gaussian_bound_check(grid) -> bool:
    """True iff cos t <= exp(-t^2/2) at every grid point in [0, pi/2).

    Near t = 0 the analytic margin is t^4/12, far below one ulp of either
    side, so the comparison allows four ulps of rounding; everywhere the
    margin is representable the check is effectively exact.
    """
    t = np.asarray(grid, dtype=float)
    if t.size and (t.min() < 0.0 or t.max() >= pi / 2):
        raise ValueError("grid must lie within [0, pi/2)")
    rhs = np.exp(-0.5 * t * t)
    return bool(np.all(np.cos(t) <= rhs + 4.0 * np.spacing(rhs)))


# ---------------------------------------------------------------------------
# The Chebyshev / Bessel integral identity
# ---------------------------------------------------------------------------
#
# T_t(z) = (-1)^(t/2) t int_0^inf x^-1 J_t(x) cos(xz) dx for even t and
# |z| <= 1.  The finite part integrates panel by panel between consecutive
# Bessel zeros; the infinite tail is evaluated from the large-argument
# expansion of J_t, whose product with cos(xz) splits into components at
# frequencies 1+z and 1-z.  Oscillatory components integrate by parts with a
# first-neglected-term remainder; at z = +-1 the zero-frequency component is
# a pure power law with a closed-form integral.  The certificate collects
# every remainder plus the quadrature error estimate.


def _hankel_series_coeffs(t: int, jmax: int) -> list[float]:
    mu = 4.0 * t * t
    coeffs = [1.0]
    for j in range(1, jmax + 1):
        coeffs.append(coeffs[-1] * (mu - (2 * j - 1) ** 2) / (8.0 * j))
    return coeffs


def _oscillatory_power_tail(p: float, freq: float, phase: float, x0: float,
                            levels: int = 14) -> tuple[complex, float]:
    """int_x0^inf x^-p e^{i(freq x + phase)} dx by repeated integration by parts."""
    value = 0.0 + 0.0j
    coef = 1.0 + 0.0j
    pp = p
    for _ in range(levels):
        value += -coef * x0**-pp * np.exp(1j * (freq * x0 + phase)) / (1j * freq)
        coef *= pp / (1j * freq)
        pp += 1.0
        if abs(coef) * x0 ** (1.0 - pp) / (pp - 1.0) < 1e-19:
            break
    remainder = abs(coef) * x0 ** (1.0 - pp) / (pp - 1.0)
    return value, remainder


def _integral_tail(t: int, z: float, x0: float) -> tuple[float, float]:
    """Asymptotic evaluation of int_x0^inf x^-1 J_t(x) cos(xz) dx."""
    theta = t * pi / 2 + pi / 4
    coeffs = _hankel_series_coeffs(t, 24)
    prefactor = np.sqrt(2.0 / pi) * 0.5
    value = 0.0
    certificate = 0.0
    for sigma in (+1.0, -1.0):
        freq = 1.0 + sigma * z
        truncated = False
        for j, a_j in enumerate(coeffs[:-1]):
            coef = a_j * (-1.0) ** (j // 2)
            p = 1.5 + j
            term_scale = abs(coef) * x0 ** (1.0 - p) / (p - 1.0)
            # the first-neglected-term remainder bound for the expansion
            # needs at least order/2 terms before truncating
            if term_scale < 1e-19 and 2 * j >= t and j > 2:
                certificate += 2.0 * prefactor * term_scale
                truncated = True
                break
            if freq <= 1e-12:
                # zero frequency: the component is a plain power law
                if j % 2 == 0:
                    value += prefactor * coef * np.cos(-theta) * x0 ** (1.0 - p) / (p - 1.0)
                else:
                    value += -prefactor * coef * np.sin(-theta) * x0 ** (1.0 - p) / (p - 1.0)
            else:
                cval, crem = _oscillatory_power_tail(p, freq, -theta, x0)
                if j % 2 == 0:
                    value += prefactor * coef * cval.real
                else:
                    value += -prefactor * coef * cval.imag
                certificate += prefactor * abs(coef) * crem
        if not truncated:
            # all retained terms used; the sentinel coefficient is the first
            # neglected one for both series
            j_next = len(coeffs) - 1
            p = 1.5 + j_next
            certificate += 2.0 * prefactor * abs(coeffs[-1]) * x0 ** (1.0 - p) / (p - 1.0)
    return float(value), float(certificate)


def _zero_partition(t: int, count: int) -> np.ndarray:
    zeros = np.array([bessel_zero_mcmahon(t, s) for s in range(1, count + 1)])
    head = np.linspace(0.0, zeros[0], max(3, int(zeros[0] / 2.5)) + 1)
    return np.concatenate([head, zeros[1:]])


def _identity_integrand(t: int, z: float):
    def f(x: np.ndarray) -> np.ndarray:
        out = np.zeros_like(x)
        mask = x > 0.0
        xp = x[mask]
        out[mask] = bessel_J(t, xp) * np.cos(xp * z) / xp
        return out

    return f


def chebyshev_from_bessel_integral(t: int, z: float,
                                   half_periods: int | None = None) -> tuple[float, float]:
    """Recover T_t(z) from the truncated Bessel integral, with a certificate.

    Returns (value, certificate): |value - T_t(z)| <= certificate, and the
    certificate accounts for quadrature error, the integration-by-parts
    remainders and the truncation of the large-argument expansion.
    """
    if t < 2 or t % 2 != 0:
        raise ValueError(f"the identity holds for positive even degree, got t={t}")
    if abs(z) > 1.0:
        raise ValueError(f"argument {z} outside [-1, 1]")
    if half_periods is None:
        # push the switchover point far enough out that the expansion of J_t
        # has already entered its fast-decaying regime
        half_periods = max(200, int(5 * t * t / pi) + 50)
    edges = _zero_partition(t, half_periods)
    x0 = float(edges[-1])
    finite, quad_err = panel_quad_with_error(_identity_integrand(t, z), edges, 16)
    tail, tail_cert = _integral_tail(t, z, x0)
    sign = -1.0 if (t // 2) % 2 else 1.0
    value = sign * t * (finite + tail)
    certificate = t * (quad_err + tail_cert)
    return float(value), float(certificate)


def half_period_sums(t: int, z: float, count: int) -> np.ndarray:
    """Integrals of x^-1 J_t(x) cos(xz) between consecutive Bessel zeros."""
    zeros = np.array([bessel_zero_mcmahon(t, s) for s in range(1, count + 2)])
    f = _identity_integrand(t, z)
    sums = np.empty(count)
    for i in range(count):
        sums[i] = panel_quad(f, np.linspace(zeros[i], zeros[i + 1], 4), 16)
    return sums
