"""Phase-invariant states as photon-number probability vectors.

A rotation-invariant state is a mixture of Fock states and is fully
described by its probability vector p.  This module covers physicality,
passivity, the decomposition of passive states into equiprobable
low-energy mixtures, and the Fock-diagonal coefficients of the states a
balanced beam splitter produces from a pair of number states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import NotPassiveError, TruncationError

__all__ = [
    "PhotonMixture",
    "PassiveDecomposition",
    "SigmaState",
    "NORMALIZATION_TOL",
    "SIGMA_MAX",
    "is_passive",
    "extremal_passive",
    "passive_decompose",
    "compose_passive",
    "sigma_coefficients",
    "extremal_passive_from_sigmas",
    "thermal_mixture",
]

#: rejection tolerance on sum(p) - 1; inputs beyond it are refused rather
#: than silently renormalized
NORMALIZATION_TOL = 1e-12

#: validated range for the beam-splitter coefficient build (total photons)
SIGMA_MAX = 128


@dataclass(frozen=True)
class PhotonMixture:
    """Photon-number probability vector of a phase-invariant state."""

    probs: np.ndarray

    def __init__(self, probs):
        arr = np.array(probs, dtype=float).reshape(-1)
        if arr.size == 0:
            raise ValueError("probability vector must not be empty")
        if np.any(arr < 0.0):
            raise ValueError("photon-number probabilities must be non-negative")
        total = math.fsum(arr.tolist())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(
                f"probabilities sum to {total!r}, more than {NORMALIZATION_TOL} away from 1"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "probs", arr)

    def __len__(self) -> int:
        return int(self.probs.size)

    def __getitem__(self, k: int) -> float:
        return float(self.probs[k])

    @property
    def purity(self) -> float:
        """Tr rho**2 = sum p_k**2 for a Fock-diagonal state."""
        return float(np.dot(self.probs, self.probs))

    @property
    def mean_photons(self) -> float:
        return float(np.dot(np.arange(len(self)), self.probs))

    def padded(self, length: int) -> np.ndarray:
        out = np.zeros(length)
        out[: len(self)] = self.probs
        return out


@dataclass(frozen=True)
class PassiveDecomposition:
    """Weights over the equiprobable low-energy mixtures."""

    weights: np.ndarray

    def __init__(self, weights):
        arr = np.array(weights, dtype=float).reshape(-1)
        if np.any(arr < 0.0):
            raise ValueError("decomposition weights must be non-negative")
        total = math.fsum(arr.tolist())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"decomposition weights sum to {total!r}, not 1")
        arr.flags.writeable = False
        object.__setattr__(self, "weights", arr)

    def __len__(self) -> int:
        return int(self.weights.size)


@dataclass(frozen=True)
class SigmaState:
    """Balanced beam-splitter output for Fock inputs m and n, in Fock form."""

    m: int
    n: int
    coeffs: PhotonMixture


def is_passive(p: PhotonMixture, tol: float = 1e-14) -> bool:
    """True when the probabilities are non-increasing (within tol)."""
    probs = p.probs
    return bool(np.all(probs[:-1] >= probs[1:] - tol))


def extremal_passive(n: int) -> PhotonMixture:
    """Equiprobable mixture of the Fock states 0..n."""
    if n < 0:
        raise ValueError("photon number must be non-negative")
    return PhotonMixture(np.full(n + 1, 1.0 / (n + 1)))


def passive_decompose(p: PhotonMixture, tol: float = 1e-14) -> PassiveDecomposition:
    """Weights e_k = (k+1)(p_k - p_{k+1}) over the equiprobable mixtures.

    Exact inverse of :func:`compose_passive`; raises NotPassiveError when
    any probability increases beyond ``tol``.
    """
    if not is_passive(p, tol):
        raise NotPassiveError("probabilities increase somewhere; state is not passive")
    probs = np.append(p.probs, 0.0)
    ks = np.arange(len(p), dtype=float)
    weights = np.clip((ks + 1.0) * (probs[:-1] - probs[1:]), 0.0, None)
    return PassiveDecomposition(weights)


def compose_passive(d: PassiveDecomposition) -> PhotonMixture:
    """Mixture sum_k e_k * (equiprobable mixture of 0..k)."""
    n = len(d)
    probs = np.zeros(n)
    for k, e in enumerate(d.weights):
        probs[: k + 1] += e / (k + 1)
    return PhotonMixture(probs)


def _sigma_fraction(m: int, n: int, z: int) -> Fraction:
    # alternating binomial sum, squared: always a non-negative integer
    s = sum(
        (-1) ** i * math.comb(m, i) * math.comb(n, z - i)
        for i in range(max(0, z - n), min(z, m) + 1)
    )
    num = math.factorial(z) * math.factorial(m + n - z) * s * s
    den = math.factorial(m) * math.factorial(n) * (1 << (m + n))
    return Fraction(num, den)


def sigma_coefficients(m: int, n: int) -> SigmaState:
    """Fock-diagonal coefficients of the balanced beam-splitter output.

    Feeding m and n photons into a 50:50 beam splitter and tracing one
    output leaves a mixture over total photon numbers z = 0..m+n whose
    coefficient is

        z! (m+n-z)! / (m! n! 2**(m+n)) * (sum_i (-1)**i C(m,i) C(n,z-i))**2.

    The combinatorics are carried out in exact integer arithmetic and each
    coefficient is rounded once to double precision, so the vector is
    correctly rounded at any m+n up to SIGMA_MAX.  Symmetric in (m, n) by
    construction.
    """
    if m < 0 or n < 0:
        raise ValueError("photon numbers must be non-negative")
    if m + n > SIGMA_MAX:
        raise TruncationError(
            f"total photon number {m + n} exceeds the validated range {SIGMA_MAX}"
        )
    lo, hi = (m, n) if m <= n else (n, m)
    coeffs = np.array(
        [float(_sigma_fraction(lo, hi, z)) for z in range(m + n + 1)]
    )
    return SigmaState(m, n, PhotonMixture(coeffs))


def extremal_passive_from_sigmas(n: int) -> PhotonMixture:
    """Uniform average of the beam-splitter states with total photon number n.

    Averaging sigma(k, n-k) over k = 0..n reproduces the equiprobable
    mixture of the Fock states 0..n.
    """
    if n < 0:
        raise ValueError("photon number must be non-negative")
    acc = np.zeros(n + 1)
    for k in range(n + 1):
        acc += sigma_coefficients(k, n - k).coeffs.probs
    return PhotonMixture(acc / (n + 1))


def thermal_mixture(mean_photons: float, tail_tol: float = 1e-13) -> PhotonMixture:
    """Truncated geometric photon distribution of a thermal state.

    The cutoff is chosen so the discarded tail mass is below ``tail_tol``,
    which keeps the truncated vector an acceptable probability vector
    without renormalization.
    """
    if mean_photons < 0:
        raise ValueError("mean photon number must be non-negative")
    if mean_photons == 0:
        return PhotonMixture([1.0])
    q = mean_photons / (mean_photons + 1.0)
    length = max(2, int(math.ceil(math.log(tail_tol) / math.log(q))) + 1)
    ks = np.arange(length)
    return PhotonMixture((1.0 - q) * q**ks)
