"""
Command-line front end.

Usage:
    schubsing analyze "5,10,7,2,9,8,1,6,3,4"      # component table
    schubsing analyze --format json "3,4,1,2"     # machine readable
    schubsing smooth "1,2,3"                      # smooth / singular
    schubsing quasires "6,7,5,1,8,4,2,3"          # quasi-resolution data
    schubsing oracle "3,4,1,2"                    # brute-force cross-check
    schubsing verify -n 5                         # exhaustive harness
    schubsing verify -n 7 --sample 200 --seed 1

Exit codes: 0 ok, 2 bad input, 3 verification or internal invariant failure.
"""
from __future__ import annotations

import json
import sys

import click

from .configs import ConfigI, ConfigII
from .oracle import equivalence_harness, singular_locus_brute
from .perm import Perm
from .quasires import (
    CovexillaryError,
    build_quasi_resolutions,
    exceptional_components,
    ordinate_extension,
    select_frame,
)
from .singlocus import (
    QuadraticCone,
    RankOneCone,
    SingularComponent,
    is_smooth,
    singular_components,
)
from . import __version__

INVARIANT_EXIT = 3


def parse_perm(text: str) -> Perm:
    parts = text.replace(",", " ").split()
    try:
        return Perm(int(p) for p in parts)
    except ValueError as exc:
        raise click.UsageError(f"cannot parse permutation {text!r}: {exc}")


def config_json(conf: ConfigI | ConfigII, w: Perm) -> dict:
    if isinstance(conf, ConfigI):
        return {
            "type": "I",
            "p_plus": list(conf.p_plus),
            "p_minus": list(conf.p_minus),
            "ne": [list(pt) for pt in conf.ne_suite],
            "so": [list(pt) for pt in conf.so_suite],
        }
    return {
        "type": "II",
        "abcd": list(conf.abcd),
        "central": [list(pt) for pt in conf.central],
        "ne": [list(pt) for pt in conf.ne_suite],
        "so": [list(pt) for pt in conf.so_suite],
    }


def component_json(comp: SingularComponent, w: Perm) -> dict:
    t = comp.transversal
    entry: dict = {"v": list(comp.v.word)}
    if isinstance(t, RankOneCone):
        entry["type"] = "C"
        entry["rows"] = t.rows
        entry["cols"] = t.cols
    else:
        entry["type"] = "K"
    entry["dim"] = t.dimension
    entry["codim"] = comp.codim
    entry["kl"] = list(comp.kl.coeffs)
    entry["mult"] = comp.mult
    entry["config"] = config_json(comp.sources[0], w)
    return entry


def report_json(w: Perm) -> dict:
    comps = singular_components(w)
    return {
        "w": list(w.word),
        "smooth": not comps,
        "components": [component_json(c, w) for c in comps],
        "meta": {"version": __version__},
    }


def _config_summary(conf: ConfigI | ConfigII, w: Perm) -> str:
    if isinstance(conf, ConfigI):
        kind = "I"
        pts = sorted(conf.points())
    else:
        kind = "II_m" if conf.mixte else "II_p"
        pts = sorted(conf.points(w))
    ordinates = ",".join(str(y) for _, y in pts)
    return f"{kind:4} {ordinates}"


def render_table(w: Perm, comps: list[SingularComponent]) -> str:
    if not comps:
        return f"w = {w}: smooth"
    rows = [("Configuration", "v", "N_{v,w}", "d", "P_{v,w}", "m")]
    for comp in comps:
        rows.append(
            (
                _config_summary(comp.sources[0], w),
                str(comp.v),
                comp.transversal.label,
                str(comp.codim),
                str(comp.kl),
                str(comp.mult),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(6)]
    lines = [f"w = {w}: {len(comps)} singular component(s)"]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


@click.group()
@click.version_option(version=__version__, prog_name="schubsing")
def main():
    """Singular loci of Schubert varieties in GL(n)/B."""


@main.command()
@click.argument("perm")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
)
def analyze(perm: str, fmt: str):
    """Irreducible components of the singular locus of X_w."""
    w = parse_perm(perm)
    try:
        if fmt == "json":
            click.echo(json.dumps(report_json(w)))
        else:
            click.echo(render_table(w, singular_components(w)))
    except AssertionError as exc:
        click.echo(f"internal invariant violated: {exc}", err=True)
        sys.exit(INVARIANT_EXIT)


@main.command()
@click.argument("perm")
def smooth(perm: str):
    """Report whether X_w is smooth (pattern avoidance test)."""
    w = parse_perm(perm)
    click.echo("smooth" if is_smooth(w) else "singular")


@main.command()
@click.argument("perm")
def quasires(perm: str):
    """Quasi-resolution frame, the permutations w_i and the collapsed loci."""
    w = parse_perm(perm)
    try:
        frame = select_frame(w)
    except CovexillaryError as exc:
        raise click.UsageError(str(exc))
    try:
        alpha_p, delta_p = ordinate_extension(w, frame)
        click.echo(
            f"w = {w}: frame abscissae {frame.abcd}, ordinates "
            f"(a,b,g,d) = {frame.ordinates}, h = {frame.hauteur}, "
            f"amplitude = {frame.amplitude}, alpha' = {alpha_p}, delta' = {delta_p}"
        )
        for qr in build_quasi_resolutions(w):
            click.echo(f"  i = {qr.i}: k_i = {qr.k}, w_i = {qr.w_i}")
            for comp in exceptional_components(w, qr.i):
                anchors = ",".join(str(a) for a in comp.anchors)
                click.echo(f"      {comp.kind:5} at {anchors}: {comp.perm}")
    except AssertionError as exc:
        click.echo(f"internal invariant violated: {exc}", err=True)
        sys.exit(INVARIANT_EXIT)


@main.command()
@click.argument("perm")
def oracle(perm: str):
    """Brute-force singular locus of X_w, cross-checked against the fast path."""
    w = parse_perm(perm)
    brute = singular_locus_brute(w)
    fast = sorted((c.v for c in singular_components(w)), key=lambda p: p.word)
    for v in brute:
        click.echo(str(v))
    if fast != brute:
        click.echo("MISMATCH against configuration-based components:", err=True)
        click.echo(f"  fast : {[p.word for p in fast]}", err=True)
        click.echo(f"  brute: {[p.word for p in brute]}", err=True)
        sys.exit(INVARIANT_EXIT)
    click.echo(f"ok: {len(brute)} component(s), fast path agrees")


@main.command()
@click.option("-n", "size", type=int, required=True, help="symmetric group size")
@click.option("--sample", type=int, default=None, help="number of sampled w (default: all)")
@click.option("--seed", type=int, default=0, show_default=True)
def verify(size: int, sample: int | None, seed: int):
    """Exhaustive or sampled equivalence harness against the brute force."""
    if size > 7 and sample is None:
        raise click.UsageError("full sweeps need n <= 7; pass --sample for larger n")
    report = equivalence_harness(size, sample=sample, seed=seed)
    click.echo(report.summary())
    if not report.ok:
        w, fast, brute = report.mismatches[0]
        click.echo(f"first counterexample w = {w}", err=True)
        click.echo(f"  fast : {[p.word for p in fast]}", err=True)
        click.echo(f"  brute: {[p.word for p in brute]}", err=True)
        sys.exit(INVARIANT_EXIT)


if __name__ == "__main__":
    main()
