"""Wigner positivity of phase-invariant states.

The Wigner function of a Fock mixture p is radial,

    W(r) = (1/pi) exp(-r**2) sum_k p_k (-1)**k L_k(2 r**2),

so positivity is a one-dimensional question.  This module evaluates the
radial profile, locates its global minimum, detects tangency with zero
(the signature of extremal states), and carries the exact closed-form
description of the positive region for mixtures of up to two photons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .mixtures import PhotonMixture
from .polynomials import laguerre_all, laguerre_derivative_all, laguerre_scaled_all

__all__ = [
    "EPS_POS",
    "PositivityReport",
    "radial_wigner",
    "radial_wigner_max",
    "scan_radius",
    "positivity_report",
    "curved_boundary_residual",
    "two_photon_mixture",
    "two_photon_region_contains",
    "extremal_arc_point",
    "extremal_arc_wigner",
]

#: absolute tolerance on Wigner values (scale 1/pi) separating "negative"
#: from roundoff noise
EPS_POS = 1e-12


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of the global minimum search over the radial Wigner function."""

    is_positive: bool
    min_value: float
    argmin_r: float
    touches_zero: bool


def _signed_coeffs(p: PhotonMixture) -> np.ndarray:
    return p.probs * ((-1.0) ** np.arange(len(p)))


def radial_wigner(p: PhotonMixture, r):
    """Wigner function of the mixture at radius r (scalar or array).

    Computed with Gaussian-damped Laguerre values, so it stays finite for
    any mixture length and radius.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("radius must be non-negative")
    scaled = laguerre_scaled_all(len(p) - 1, 2.0 * r * r)
    values = np.tensordot(_signed_coeffs(p), scaled, axes=1) / math.pi
    return float(values) if values.ndim == 0 else values


def scan_radius(p: PhotonMixture) -> float:
    """Upper end of the search range: classical radius plus buffer."""
    n = len(p)
    return math.sqrt(n + 6.0 * math.sqrt(n) + 20.0)


def _refine_minimum(func, lo: float, hi: float) -> tuple[float, float]:
    res = minimize_scalar(func, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-10})
    return float(res.x), float(res.fun)


def positivity_report(p: PhotonMixture, eps: float = EPS_POS,
                      samples: int = 4096) -> PositivityReport:
    """Global minimum of W(r) over [0, scan_radius] by dense scan + refinement.

    The scan grid is fixed, so the report is deterministic.  A mixture of
    length N has at most N local minima in r**2, far fewer than the sample
    count.  ``touches_zero`` is set only for minima attained strictly
    inside the range: the vacuum's infimum 0 at r -> infinity is a tail,
    not a touch.
    """
    r_max = scan_radius(p)
    rs = np.linspace(0.0, r_max, samples)
    ws = radial_wigner(p, rs)

    def func(r):
        return radial_wigner(p, float(r))

    # (value, radius, interior): the right endpoint is a candidate for the
    # minimum but a zero there is a decaying tail, not a touch
    candidates = [(float(ws[0]), 0.0, True), (float(ws[-1]), float(rs[-1]), False)]
    r0, w0 = _refine_minimum(func, 0.0, float(rs[1]))
    candidates.append((w0, r0, True))
    is_local_min = (ws[1:-1] <= ws[:-2]) & (ws[1:-1] <= ws[2:])
    for idx in np.nonzero(is_local_min)[0] + 1:
        candidates.append((float(ws[idx]), float(rs[idx]), True))
        rr, ww = _refine_minimum(func, float(rs[idx - 1]), float(rs[idx + 1]))
        candidates.append((ww, rr, True))

    best_w, best_r, interior = min(candidates, key=lambda c: (c[0], c[1]))
    positive = best_w >= -eps
    touches = bool(positive and abs(best_w) <= eps and interior)
    return PositivityReport(positive, best_w, best_r, touches)


def radial_wigner_max(p: PhotonMixture, samples: int = 4096) -> tuple[float, float]:
    """Global maximum of W(r) and its radius (same scan strategy as the minimum)."""
    r_max = scan_radius(p)
    rs = np.linspace(0.0, r_max, samples)
    ws = radial_wigner(p, rs)

    def neg(r):
        return -radial_wigner(p, float(r))

    best_r, best_w = float(rs[0]), float(ws[0])
    r0, w0 = _refine_minimum(neg, 0.0, float(rs[1]))
    if -w0 > best_w:
        best_r, best_w = r0, -w0
    is_local_max = (ws[1:-1] >= ws[:-2]) & (ws[1:-1] >= ws[2:])
    for idx in np.nonzero(is_local_max)[0] + 1:
        rr, ww = _refine_minimum(neg, float(rs[idx - 1]), float(rs[idx + 1]))
        if -ww > best_w:
            best_r, best_w = rr, -ww
    return best_w, best_r


def curved_boundary_residual(p: PhotonMixture, t: float) -> tuple[float, float]:
    """Value and t-derivative of the alternating Laguerre sum at t = 2 r**2.

    A mixture sits on the curved part of the positivity boundary when both
    components vanish for some t >= 0 (the radial Wigner function and its
    derivative share a root there).  At t = 0 the derivative uses the
    analytic limit dL_k/dt(0) = -k; a double root found there belongs to
    the flat facet of the region instead of the curved boundary.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    nmax = len(p) - 1
    signed = _signed_coeffs(p)
    value = float(signed @ laguerre_all(nmax, t))
    slope = float(signed @ laguerre_derivative_all(nmax, t))
    return value, slope


def two_photon_mixture(p1: float, p2: float) -> PhotonMixture:
    """Mixture (1-p1-p2, p1, p2) of the first three Fock states."""
    if p1 < 0 or p2 < 0 or p1 + p2 > 1:
        raise ValueError("(p1, p2) must lie in the physical triangle")
    return PhotonMixture([1.0 - p1 - p2, p1, p2])


def two_photon_region_contains(p1: float, p2: float) -> bool:
    """Exact membership test for the Wigner-positive region of two-photon mixtures.

    The closed region is p1 <= 1/2 together with
    p2 <= 1/4 + (1/4) sqrt(1 - 4 p1**2).
    """
    if p1 < 0 or p2 < 0 or p1 + p2 > 1:
        raise ValueError("(p1, p2) must lie in the physical triangle")
    if p1 > 0.5:
        return False
    return p2 <= 0.25 + 0.25 * math.sqrt(max(0.0, 1.0 - 4.0 * p1 * p1))


def extremal_arc_point(a: float) -> tuple[float, float]:
    """Point (p1, p2) on the curved boundary arc, parametrized by a in [0, 1].

    p1 = sqrt(1 - a**2)/2 and p2 = (a + 1)/4; the end a = 1 is the state
    (1/2)|0><0| + (1/2)|2><2| and a = 0 meets the flat facet at p1 = 1/2.
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError("arc parameter must lie in [0, 1]")
    return 0.5 * math.sqrt(1.0 - a * a), 0.25 * (a + 1.0)


def extremal_arc_wigner(a: float, r: float) -> float:
    """Closed-form radial Wigner function of the arc state with parameter a.

    W_a(r) = (1/pi) exp(-r**2) (a+1)/2 (r**2 - 1 + sqrt((1-a)/(1+a)))**2,
    a perfect square: non-negative with a double root where it touches zero.
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError("arc parameter must lie in [0, 1]")
    if r < 0:
        raise ValueError("radius must be non-negative")
    shift = math.sqrt((1.0 - a) / (1.0 + a))
    return (
        math.exp(-r * r) * 0.5 * (a + 1.0) * (r * r - 1.0 + shift) ** 2 / math.pi
    )
