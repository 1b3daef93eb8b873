"""Named verification suites behind the ``verify`` command.

Each suite re-derives one family of identities or bounds numerically and
reports the worst residual or margin it saw.  Suites are deterministic:
random draws come from a seeded generator and quadrature uses fixed node
sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import qmc

from . import beamsplitter, entropy, mixtures, positivity
from .mixtures import PhotonMixture
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec

__all__ = ["SuiteResult", "SUITES", "run_suite", "available_suites"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)

    def report(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        body = "\n".join(f"  {line}" for line in self.lines)
        return f"[{status}] {self.name}\n{body}" if body else f"[{status}] {self.name}"


def _random_passive(rng: np.random.Generator, max_len: int) -> PhotonMixture:
    length = int(rng.integers(1, max_len + 1))
    raw = rng.dirichlet(np.ones(length))
    return PhotonMixture(np.sort(raw)[::-1].copy())


def _random_wigner_positive(rng: np.random.Generator, max_len: int,
                            count: int) -> list[PhotonMixture]:
    """Rejection-sample mixtures whose radial Wigner function stays positive."""
    found: list[PhotonMixture] = []
    while len(found) < count:
        length = int(rng.integers(1, max_len + 1))
        candidate = PhotonMixture(rng.dirichlet(np.ones(length)))
        if positivity.positivity_report(candidate).is_positive:
            found.append(candidate)
    return found


def _triangle_samples(count: int) -> np.ndarray:
    """Deterministic low-discrepancy points in the triangle p1 + p2 <= 1."""
    power = max(4, math.ceil(math.log2(max(count, 1))))
    points = qmc.Sobol(d=2, scramble=False).random_base2(power)[:count]
    flip = points.sum(axis=1) > 1.0
    points[flip] = 1.0 - points[flip]
    return points


def suite_fock_identity(rng, spec) -> SuiteResult:
    """Cumulative Fock Wigner sums equal the wave-function cross sums."""
    worst = 0.0
    for n in range(13):
        worst = max(worst, entropy.fock_sum_identity_residual(n))
    passed = worst <= 1e-10
    return SuiteResult(
        "fock-identity", passed,
        [f"max residual over n <= 12 on 41x41 grid: {worst:.3e} (tol 1e-10)"],
    )


def suite_passive_mix(rng, spec) -> SuiteResult:
    """Equiprobable mixtures decompose into averaged beam-splitter states."""
    worst = 0.0
    for n in range(21):
        direct = mixtures.extremal_passive(n).probs
        averaged = mixtures.extremal_passive_from_sigmas(n).probs
        worst = max(worst, float(np.max(np.abs(direct - averaged))))
    passed = worst <= 1e-12
    return SuiteResult(
        "passive-mix", passed,
        [f"max componentwise residual over n <= 20: {worst:.3e} (tol 1e-12)"],
    )


def suite_sigma_oracle(rng, spec) -> SuiteResult:
    """Closed-form coefficients match the two-mode Fock construction."""
    worst = 0.0
    for m in range(9):
        for n in range(9 - m):
            closed = mixtures.sigma_coefficients(m, n).coeffs.probs
            brute = beamsplitter.fock_oracle_sigma(m, n, 0.5).probs
            worst = max(worst, float(np.max(np.abs(closed - brute))))
    anchors = (
        np.allclose(mixtures.sigma_coefficients(1, 0).coeffs.probs, [0.5, 0.5],
                    rtol=0, atol=1e-15)
        and np.allclose(mixtures.sigma_coefficients(1, 1).coeffs.probs,
                        [0.5, 0.0, 0.5], rtol=0, atol=1e-15)
        and np.allclose(mixtures.sigma_coefficients(2, 0).coeffs.probs,
                        [0.25, 0.5, 0.25], rtol=0, atol=1e-15)
    )
    passed = worst <= 1e-12 and anchors
    return SuiteResult(
        "sigma-oracle", passed,
        [
            f"max |closed form - two-mode oracle| over m+n <= 8: {worst:.3e} (tol 1e-12)",
            f"exact low-order fractions reproduced: {anchors}",
        ],
    )


def suite_wehrl_bridge(rng, spec) -> SuiteResult:
    """Splitter-with-vacuum Wigner entropy equals the input Wehrl entropy."""
    worst = 0.0
    lowest = math.inf
    for n in range(7):
        probs = np.zeros(n + 1)
        probs[n] = 1.0
        left, right = beamsplitter.wehrl_bridge_check(PhotonMixture(probs), spec)
        worst = max(worst, abs(left - right))
        lowest = min(lowest, left, right)
    passed = worst <= 1e-8 and lowest >= entropy.MIN_WIGNER_ENTROPY - 1e-9
    return SuiteResult(
        "wehrl-bridge", passed,
        [
            f"max |Wigner route - Wehrl route| over Fock n <= 6: {worst:.3e} (tol 1e-8)",
            f"smallest entropy seen: {lowest:.9f} (bound {entropy.MIN_WIGNER_ENTROPY:.9f})",
        ],
    )


def suite_passive_bound(rng, spec) -> SuiteResult:
    """h(W) >= 2 sum p_k h(rho_k) over passive states."""
    worst_margin = math.inf
    for n in range(11):
        lhs, rhs = entropy.passive_bound_check(mixtures.extremal_passive(n), spec)
        worst_margin = min(worst_margin, lhs - rhs)
    for _ in range(100):
        lhs, rhs = entropy.passive_bound_check(_random_passive(rng, 20), spec)
        worst_margin = min(worst_margin, lhs - rhs)
    vac_lhs, vac_rhs = entropy.passive_bound_check(PhotonMixture([1.0]), spec)
    saturation = abs(vac_lhs - vac_rhs)
    passed = worst_margin >= -1e-9 and saturation <= 1e-8
    return SuiteResult(
        "passive-bound", passed,
        [
            f"worst margin lhs - rhs: {worst_margin:.3e} (must be >= -1e-9)",
            f"vacuum saturation gap: {saturation:.3e} (tol 1e-8)",
        ],
    )


def suite_epi(rng, spec) -> SuiteResult:
    """Entropy powers obey N_out >= eta N_A + (1-eta) N_B."""
    states = _random_wigner_positive(rng, 8, 40)
    pairs = [(states[2 * i], states[2 * i + 1]) for i in range(20)]
    worst = math.inf
    for pa, pb in pairs:
        for eta in (0.25, 0.5, 0.75):
            n_out, bound = entropy.check_epi(pa, pb, eta, spec)
            worst = min(worst, n_out - bound)
    thermal = mixtures.thermal_mixture(1.0)
    sat_gap = 0.0
    for eta in (0.25, 0.5, 0.75):
        n_out, bound = entropy.check_epi(thermal, thermal, eta, spec)
        sat_gap = max(sat_gap, abs(n_out - bound))
    passed = worst >= -1e-6 and sat_gap <= 1e-4
    return SuiteResult(
        "epi", passed,
        [
            f"worst slack N_out - bound over 20 pairs x 3 etas: {worst:.3e} (>= -1e-6)",
            f"thermal-input saturation gap: {sat_gap:.3e} (tol 1e-4)",
        ],
    )


def suite_region2(rng, spec) -> SuiteResult:
    """Closed-form two-photon region matches the numeric positivity scan."""
    samples = _triangle_samples(10_000)
    disagreements = 0
    band = 0
    for p1, p2 in samples:
        state = positivity.two_photon_mixture(float(p1), float(p2))
        report = positivity.positivity_report(state)
        # ambiguous only when an *interior* minimum sits within the band;
        # a tail minimum at the scan endpoint decays to zero for every
        # positive state and carries no boundary information
        interior = report.argmin_r < positivity.scan_radius(state) * (1.0 - 1e-9)
        if interior and abs(report.min_value) <= 1e-9:
            band += 1
            continue
        if positivity.two_photon_region_contains(float(p1), float(p2)) != report.is_positive:
            disagreements += 1
    arc_ok = True
    ellipse_worst = 0.0
    for a in np.linspace(0.0, 1.0, 11):
        p1, p2 = positivity.extremal_arc_point(float(a))
        report = positivity.positivity_report(positivity.two_photon_mixture(p1, p2))
        arc_ok = arc_ok and report.touches_zero and abs(report.min_value) <= 1e-9
        ellipse = (p1 / 0.5) ** 2 + ((p2 - 0.25) / 0.25) ** 2
        ellipse_worst = max(ellipse_worst, abs(ellipse - 1.0))
    passed = disagreements == 0 and arc_ok and ellipse_worst <= 1e-12
    return SuiteResult(
        "region2", passed,
        [
            f"membership disagreements outside 1e-9 band: {disagreements} "
            f"({band} boundary-band points excluded of {len(samples)})",
            f"arc states all touch zero: {arc_ok}",
            f"worst ellipse residual on the arc: {ellipse_worst:.3e} (tol 1e-12)",
        ],
    )


def suite_conjecture_scan(rng, spec) -> SuiteResult:
    """Every constructible Wigner-positive state satisfies h(W) >= ln(pi) + 1.

    A violation would be a counterexample to the conjectured bound and is
    reported loudly.
    """
    bound = entropy.MIN_WIGNER_ENTROPY
    violations: list[str] = []
    lowest = math.inf
    lowest_label = ""

    def record(label: str, value: float):
        nonlocal lowest, lowest_label
        if value < lowest:
            lowest, lowest_label = value, label
        if value < bound - 1e-7:
            violations.append(f"COUNTEREXAMPLE CANDIDATE {label}: h(W) = {value!r}")

    for m in range(11):
        for n in range(m, 11):
            h = entropy.wigner_entropy_radial(
                mixtures.sigma_coefficients(m, n).coeffs, spec
            )
            record(f"sigma({m},{n})", h)
    for k in range(30):
        state = _random_passive(rng, 20)
        record(f"passive#{k}", entropy.wigner_entropy_radial(state, spec))
    for a in np.linspace(0.0, 1.0, 11):
        p1, p2 = positivity.extremal_arc_point(float(a))
        state = positivity.two_photon_mixture(p1, p2)
        record(f"arc(a={a:.1f})", entropy.wigner_entropy_radial(state, spec))
    for k, (p1, p2) in enumerate(_triangle_samples(256)):
        if positivity.two_photon_region_contains(float(p1), float(p2)):
            state = positivity.two_photon_mixture(float(p1), float(p2))
            if positivity.positivity_report(state).is_positive:
                record(f"two-photon#{k}", entropy.wigner_entropy_radial(state, spec))
    for k, state in enumerate(_random_wigner_positive(rng, 6, 40)):
        record(f"rejection#{k}", entropy.wigner_entropy_radial(state, spec))

    passed = not violations
    lines = [
        f"states scanned, all with h(W) >= ln(pi) + 1 - 1e-7: {passed}",
        f"lowest entropy seen: {lowest:.9f} at {lowest_label} "
        f"(bound {bound:.9f})",
    ]
    lines.extend(violations)
    return SuiteResult("conjecture-scan", passed, lines)


SUITES = {
    "fock-identity": suite_fock_identity,
    "passive-mix": suite_passive_mix,
    "sigma-oracle": suite_sigma_oracle,
    "wehrl-bridge": suite_wehrl_bridge,
    "passive-bound": suite_passive_bound,
    "epi": suite_epi,
    "region2": suite_region2,
    "conjecture-scan": suite_conjecture_scan,
}


def available_suites() -> list[str]:
    return [*SUITES, "all"]


def run_suite(name: str, seed: int = 42,
              spec: QuadratureSpec = DEFAULT_QUADRATURE) -> list[SuiteResult]:
    """Run one named suite (or all of them) with a fresh seeded generator."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {available_suites()}")
    return [SUITES[n](np.random.default_rng(seed), spec) for n in names]
