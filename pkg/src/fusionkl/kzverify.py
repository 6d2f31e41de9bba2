"""Floating-point checks of the hypergeometric data behind rigidity of V_2.

The two second-order ODEs satisfied by the four-point functions, their
hypergeometric basis solutions for p >= 3, and the constant -1/cos(pi q/p)
obtained as the z -> 1 limit of the relevant solution combination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, InvalidArgument, NonConvergent, PoleAt, UnsupportedLogCase
from .level import Level

KZ_LEVELS = [(3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)]
SAMPLE_POINTS = [k / 10 for k in range(1, 10)]
RESIDUAL_TOL = 1e-8
GAMMA_TOL = 1e-8
SERIES_TOL = 1e-4


@dataclass(frozen=True)
class HypParams:
    a: float
    b: float
    c: float
    z: float
    tol: float = 1e-16
    maxTerms: int = 200_000


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def hyp2f1(params: HypParams) -> float:
    """Gauss series sum (a)_n (b)_n / ((c)_n n!) z^n for |z| < 1."""
    a, b, c, z = params.a, params.b, params.c, params.z
    if _is_nonpositive_int(c):
        raise BadParameter(f"c = {c} is a nonpositive integer")
    if abs(z) >= 1:
        raise BadParameter(f"|z| = {abs(z)} is outside the disc of convergence")
    term = 1.0
    total = 1.0
    for n in range(params.maxTerms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if term == 0.0 or abs(term) < params.tol * abs(total):
            return total
    raise NonConvergent(f"2F1({a}, {b}; {c}; {z}) did not converge in {params.maxTerms} terms")


def _f(a, b, c, z):
    return hyp2f1(HypParams(a, b, c, z))


_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(x: float) -> float:
    if _is_nonpositive_int(x):
        raise PoleAt(f"Gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1 - x))
    x -= 1
    acc = _LANCZOS[0]
    t = x + _LANCZOS_G + 0.5
    for i, coef in enumerate(_LANCZOS[1:], start=1):
        acc += coef / (x + i)
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def _kappa(lv: Level) -> float:
    return lv.p / lv.q


def basis_data(lv: Level, which: str, index: int) -> tuple[float, float, tuple[float, float, float]]:
    """(alpha, beta, (a, b, c)) with solution z^alpha (1-z)^beta 2F1(a, b; c; z)."""
    if lv.p == 2:
        raise UnsupportedLogCase("at p = 2 the equations have logarithmic solutions")
    if which not in ("phi1", "phi2") or index not in (1, 2):
        raise InvalidArgument(f"no basis solution {which}^({index})")
    kappa = _kappa(lv)
    h2, h3 = 3 / (4 * kappa), 2 / kappa
    beta = -2 * h2
    if which == "phi1" and index == 1:
        return -2 * h2 + 1, beta, (1 - 1 / kappa, 1 - 3 / kappa, 2 - 2 / kappa)
    if which == "phi1":
        return -2 * h2 + h3, beta, (1 / kappa, -1 / kappa, 2 / kappa)
    if index == 1:
        return -2 * h2, beta, (1 - 3 / kappa, -1 / kappa, 1 - 2 / kappa)
    return -2 * h2 + h3, beta, (1 - 1 / kappa, 1 / kappa, 1 + 2 / kappa)


def solution_jet(lv: Level, which: str, index: int, z: float) -> tuple[float, float, float]:
    """Value, first and second derivative of a basis solution, all analytic."""
    if not 0 < z < 1:
        raise InvalidArgument(f"z = {z} must lie in (0, 1)")
    alpha, beta, (a, b, c) = basis_data(lv, which, index)
    f0 = _f(a, b, c, z)
    f1 = a * b / c * _f(a + 1, b + 1, c + 1, z)
    f2 = a * (a + 1) * b * (b + 1) / (c * (c + 1)) * _f(a + 2, b + 2, c + 2, z)
    u = z**alpha * (1 - z) ** beta
    g = alpha / z - beta / (1 - z)
    g2 = g * g - alpha / z**2 - beta / (1 - z) ** 2
    return u * f0, u * (f1 + g * f0), u * (f2 + 2 * g * f1 + g2 * f0)


def ode_residual(which: str, lv: Level, index: int, z: float) -> float:
    phi, d1, d2 = solution_jet(lv, which, index, z)
    kappa = _kappa(lv)
    if which == "phi1":
        res = (
            kappa**2 * z * (1 - z) * d2
            - kappa * ((kappa + 2) * z - 1) * d1
            + (kappa / (2 * z) - 3 / (4 * z * (1 - z))) * phi
        )
    else:
        res = (
            kappa**2 * z * (1 - z) * d2
            + kappa * (kappa + 1) * (1 - 2 * z) * d1
            - (2 * kappa + 3 / (4 * z * (1 - z))) * phi
        )
    return abs(res)


def target_constant(lv: Level) -> float:
    return -1 / math.cos(math.pi * lv.q / lv.p)


def _check_connection_level(lv: Level) -> float:
    if lv.p == 2:
        raise UnsupportedLogCase("at p = 2 the equations have logarithmic solutions")
    kappa = _kappa(lv)
    if kappa == 2:
        raise BadParameter("kappa = 2 makes k = 0")
    return kappa


def connection_gamma(lv: Level) -> float:
    kappa = _check_connection_level(lv)
    k = kappa - 2
    first = gamma_fn(2 - 2 / kappa) * gamma_fn(2 / kappa) / (gamma_fn(1 - 1 / kappa) * gamma_fn(1 + 1 / kappa))
    second = gamma_fn(1 - 2 / kappa) * gamma_fn(2 / kappa) / (gamma_fn(1 / kappa) * gamma_fn(1 - 1 / kappa))
    return -first / k - second


def connection_combination(lv: Level, z: float) -> float:
    """-(1/k) 2F1(1-1/K, 1-3/K; 2-2/K; z) - 2F1(1-3/K, -1/K; 1-2/K; z)."""
    kappa = _check_connection_level(lv)
    k = kappa - 2
    f1 = _f(1 - 1 / kappa, 1 - 3 / kappa, 2 - 2 / kappa, z)
    f2 = _f(1 - 3 / kappa, -1 / kappa, 1 - 2 / kappa, z)
    return -f1 / k - f2


EXTRAPOLATION_STEPS = tuple(0.2 * 0.5**j for j in range(7))


def connection_series(lv: Level, steps=EXTRAPOLATION_STEPS) -> float:
    """z -> 1 limit of the combination by generalized Richardson extrapolation.

    Near z = 1 each series behaves like sum_j A_j e^j + e^s sum_j B_j e^j with
    e = 1 - z and s = c - a - b = 2/kappa.  Sampling at len(steps) values of e
    and solving for the coefficients of 1, e^s, e, e^{s+1}, ... isolates A_0.
    """
    kappa = _check_connection_level(lv)
    s = 2 / kappa
    exps = []
    j = 0
    while len(exps) < len(steps):
        for e in (j, j + s):
            if len(exps) < len(steps):
                exps.append(e)
        j += 1
    exps = sorted(exps)
    matrix = np.array([[eps**e for e in exps] for eps in steps])
    values = np.array([connection_combination(lv, 1 - eps) for eps in steps])
    coeffs = np.linalg.solve(matrix, values)
    return float(coeffs[exps.index(0)])


def connection_constant(lv: Level) -> tuple[float, float]:
    return connection_gamma(lv), connection_series(lv)


def _record(case, quantity, expected, computed, tol):
    return {
        "case": case,
        "quantity": quantity,
        "expected": expected,
        "computed": computed,
        "tolerance": tol,
        "pass": bool(abs(computed - expected) < tol),
    }


def residual_report(levels=None, points=None) -> list[dict]:
    out = []
    for p, q in levels or KZ_LEVELS:
        lv = Level(p, q)
        for which in ("phi1", "phi2"):
            for idx in (1, 2):
                for z in points or SAMPLE_POINTS:
                    out.append(
                        _record(f"{p}/{q} {which}^({idx}) z={z:g}", "ode_residual", 0.0, ode_residual(which, lv, idx, z), RESIDUAL_TOL)
                    )
    return out


def connection_report(levels=None) -> list[dict]:
    out = []
    for p, q in levels or KZ_LEVELS:
        lv = Level(p, q)
        target = target_constant(lv)
        g, s = connection_constant(lv)
        out.append(_record(f"{p}/{q}", "gammaValue", target, g, GAMMA_TOL))
        out.append(_record(f"{p}/{q}", "seriesValue", target, s, SERIES_TOL))
    return out
