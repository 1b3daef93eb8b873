"""Command-line front end: state files in, reports and plot-ready CSV out.

State files are JSON documents with exactly one of:

    {"fock_probs": [p0, p1, ...]}                      a Fock mixture
    {"gaussian": {"mean": [x, p], "cov": [[a, b], [b, c]]}}   a Gaussian state

All numeric CSV output uses 15 significant digits and a fixed row order,
so identical inputs and flags produce byte-identical files.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import click
import numpy as np

from . import __version__
from .entropy import (
    MIN_WIGNER_ENTROPY,
    wehrl_entropy,
    wigner_entropy_radial,
    wigner_renyi,
)
from .exceptions import NotWignerPositiveError, WigentropyError
from .gaussian import (
    GaussianState,
    gaussian_renyi_entropy,
    gaussian_wehrl_entropy,
    gaussian_wigner_entropy,
)
from .mixtures import PhotonMixture, sigma_coefficients
from .quadrature import QuadratureSpec
from .verification import available_suites, run_suite

EXIT_PARSE_ERROR = 2
EXIT_NOT_POSITIVE = 3
EXIT_BOUND_VIOLATION = 4


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def _header(seed: int, tol: float) -> str:
    return f"# seed={seed}, tol={_fmt(tol)}, version={__version__}"


def load_state(path: str):
    """Parse a state file into a PhotonMixture or GaussianState."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("state file must hold a JSON object")
    keys = {"fock_probs", "gaussian"} & set(doc)
    if len(keys) != 1:
        raise ValueError(
            "state file must contain exactly one of 'fock_probs' or 'gaussian'"
        )
    if "fock_probs" in doc:
        return PhotonMixture(doc["fock_probs"])
    spec = doc["gaussian"]
    return GaussianState(spec["mean"], spec["cov"])


@click.group()
@click.version_option(version=__version__)
def main():
    """Phase-space entropies of single-mode bosonic states."""


@main.command("entropy")
@click.argument("state_file", type=click.Path())
@click.option("--renyi", "renyi_orders", type=float, multiple=True,
              help="Also report the order-ALPHA entropy (repeatable).")
@click.option("--quad-tol", type=float, default=1e-10, show_default=True,
              help="Absolute quadrature tolerance.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Also write the report as a key,value CSV.")
def cmd_entropy(state_file, renyi_orders, quad_tol, out_path):
    """Entropy report for one state file.

    Exits 2 when the file cannot be parsed, 3 when the state is not
    Wigner positive (the message names the offending minimum).
    """
    try:
        state = load_state(state_file)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot parse state file: {exc}", err=True)
        sys.exit(EXIT_PARSE_ERROR)

    spec = QuadratureSpec(abs_tol=quad_tol, rel_tol=max(quad_tol, 1e-12))
    rows: list[tuple[str, float]] = []
    try:
        if isinstance(state, GaussianState):
            rows.append(("h_wigner", gaussian_wigner_entropy(state)))
            for alpha in renyi_orders:
                rows.append((f"h_renyi_{_fmt(alpha)}", gaussian_renyi_entropy(state, alpha)))
            rows.append(("h_wehrl", gaussian_wehrl_entropy(state)))
            rows.append(("purity", state.purity))
        else:
            rows.append(("h_wigner", wigner_entropy_radial(state, spec)))
            for alpha in renyi_orders:
                rows.append((f"h_renyi_{_fmt(alpha)}", wigner_renyi(state, alpha, spec)))
            rows.append(("h_wehrl", wehrl_entropy(state, spec)))
            rows.append(("purity", state.purity))
    except NotWignerPositiveError as exc:
        click.echo(
            "error: state is not Wigner positive: "
            f"min W = {_fmt(exc.min_value)} at r = {_fmt(exc.argmin_r)}",
            err=True,
        )
        sys.exit(EXIT_NOT_POSITIVE)
    except WigentropyError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    rows.append(("margin_above_ln_pi_plus_1", rows[0][1] - MIN_WIGNER_ENTROPY))
    for key, value in rows:
        click.echo(f"{key} = {_fmt(value)}")
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(_header(seed=42, tol=quad_tol) + "\n")
            fh.write("quantity,value\n")
            for key, value in rows:
                fh.write(f"{key},{_fmt(value)}\n")


def _sigma_cell(args: tuple[int, int, float]) -> tuple[int, int, float]:
    m, n, quad_tol = args
    spec = QuadratureSpec(abs_tol=quad_tol, rel_tol=max(quad_tol, 1e-12))
    value = wigner_entropy_radial(sigma_coefficients(m, n).coeffs, spec)
    return m, n, value


@main.command("sigma-table")
@click.option("--max", "max_photons", type=int, default=10, show_default=True,
              help="Largest photon number per input arm (guard: 30).")
@click.option("--jobs", type=int, default=None,
              help="Worker processes for the table cells (default: all cores).")
@click.option("--quad-tol", type=float, default=1e-10, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="CSV destination (default: stdout).")
def cmd_sigma_table(max_photons, jobs, quad_tol, seed, out_path):
    """Wigner entropies of the beam-splitter states over a photon-number grid.

    Every entry must stay above ln(pi) + 1; a violation would be a
    counterexample to the conjectured bound and exits with code 4.
    Monotonicity along rows and columns is reported as warnings only.
    """
    if not 0 <= max_photons <= 30:
        raise click.BadParameter("--max must lie in 0..30")
    cells = [(m, n, quad_tol) for m in range(max_photons + 1)
             for n in range(m, max_photons + 1)]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sigma_cell, cells, chunksize=4))
    else:
        results = [_sigma_cell(cell) for cell in cells]

    table = {}
    for m, n, value in results:
        table[(m, n)] = value
        table[(n, m)] = value

    lines = [_header(seed, quad_tol), "m,n,entropy"]
    for m in range(max_photons + 1):
        for n in range(max_photons + 1):
            lines.append(f"{m},{n},{_fmt(table[(m, n)])}")
    output = "\n".join(lines) + "\n"
    if out_path is None:
        click.echo(output, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(output)

    anchor_gap = abs(table[(0, 0)] - MIN_WIGNER_ENTROPY)
    if anchor_gap > 1e-9:
        click.echo(f"error: vacuum entry off the bound by {anchor_gap:.3e}", err=True)
        sys.exit(1)
    violations = [
        (m, n, v) for (m, n), v in table.items() if v < MIN_WIGNER_ENTROPY - 1e-7
    ]
    if violations:
        for m, n, v in sorted(violations):
            click.echo(
                f"BOUND VIOLATION: entropy({m},{n}) = {_fmt(v)} "
                f"< ln(pi) + 1 = {_fmt(MIN_WIGNER_ENTROPY)} - 1e-7 "
                "(possible counterexample, please report)",
                err=True,
            )
        sys.exit(EXIT_BOUND_VIOLATION)
    for m in range(max_photons + 1):
        for n in range(max_photons):
            if table[(m, n + 1)] < table[(m, n)] - 1e-9:
                click.echo(
                    f"warning: entropy not monotone at ({m},{n}) -> ({m},{n + 1})",
                    err=True,
                )


@main.command("region2")
@click.option("--samples", type=int, default=128, show_default=True,
              help="Points per family (minimum 16).")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="CSV destination (default: stdout).")
def cmd_region2(samples, seed, out_path):
    """Boundary data of the two-photon Wigner-positive region.

    Emits three row families: the extremal arc (with the tangency t of
    each state), the flat facet p1 = 1/2, and the family of lines
    W(r) = 0 whose envelope is the boundary ellipse.
    """
    if samples < 16:
        raise click.BadParameter("--samples must be at least 16")
    from .positivity import extremal_arc_point

    lines = [_header(seed, 0.0),
             "kind,param,p1,p2,tangency_t,line_p1_coef,line_p2_coef,line_const"]
    for a in np.linspace(0.0, 1.0, samples):
        p1, p2 = extremal_arc_point(float(a))
        tangency = 2.0 - p1 / p2
        lines.append(
            f"arc,{_fmt(a)},{_fmt(p1)},{_fmt(p2)},{_fmt(tangency)},,,"
        )
    for p2 in np.linspace(0.0, 0.25, samples):
        lines.append(f"facet,,{_fmt(0.5)},{_fmt(p2)},{_fmt(0.0)},,,")
    # tangent family W(r) = 0; the anchors r = 1/sqrt(2), 1, sqrt(2) give the
    # lines through the named boundary points and are always included
    radii = np.union1d(np.linspace(0.0, 2.0, samples),
                       [2.0 ** -0.5, 1.0, 2.0 ** 0.5])
    for r in radii:
        coef_p1 = 2.0 * r * r - 2.0
        coef_p2 = 2.0 * r**4 - 4.0 * r * r
        lines.append(f"tangent,{_fmt(r)},,,,{_fmt(coef_p1)},{_fmt(coef_p2)},{_fmt(1.0)}")
    output = "\n".join(lines) + "\n"
    if out_path is None:
        click.echo(output, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(output)


@main.command("verify")
@click.option("--suite", type=click.Choice(available_suites()), required=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--quad-tol", type=float, default=1e-10, show_default=True)
def cmd_verify(suite, seed, quad_tol):
    """Run one named verification suite (or all) and report pass/fail."""
    spec = QuadratureSpec(abs_tol=quad_tol, rel_tol=max(quad_tol, 1e-12))
    results = run_suite(suite, seed=seed, spec=spec)
    for result in results:
        click.echo(result.report())
    if not all(r.passed for r in results):
        sys.exit(1)


if __name__ == "__main__":
    main()
