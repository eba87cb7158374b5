"""Command-line entry point: ``abelrad classify | table1 | selftest``."""

from __future__ import annotations

import json
import sys

import click

from .cases import table1_cases, table1_row
from .chevalley import ChevalleyError
from .microlocal import MicrolocalConsistencyError
from .orbits import ConsistencyError, orbit_count
from .parabolic import NonAbelianRadical, is_abelian_radical, parabolic_from_node
from .report import COORDS, SCHEMA_VERSION, _table, build_report, render_root, render_text
from .rootsys import MAX_RANK, RootSystemError, build_root_system
from .selftest import SUITES, run_suites

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NON_ABELIAN = 3
EXIT_CONSISTENCY = 4

CONSISTENCY_ERRORS = (ConsistencyError, MicrolocalConsistencyError, ChevalleyError, AssertionError)

format_option = click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)


def _emit_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True))


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Orbits, Arthur pairs and microlocal packets for parabolics with abelian nilradical."""


@main.command()
@click.argument("kind", type=click.Choice(["A", "B", "C", "D", "E"], case_sensitive=False))
@click.argument("rank", type=int)
@click.argument("node", type=int)
@format_option
@click.option("--coords", type=click.Choice(COORDS), default="simple", show_default=True)
def classify(kind: str, rank: int, node: int, fmt: str, coords: str) -> None:
    """Full report for the maximal parabolic of KIND RANK omitting NODE."""
    try:
        R = build_root_system(kind.upper(), rank)
        P = parabolic_from_node(R, node)
    except (RootSystemError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    if not is_abelian_radical(P):
        exc = NonAbelianRadical(P)
        if fmt == "json":
            _emit_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "input": {"type": R.kind, "rank": R.rank, "node": node, "coords": coords},
                    "abelian": False,
                    "witness_root": render_root(P, P.witness, coords),
                    "witness_level": P.levels[P.witness],
                }
            )
        click.echo(f"non-abelian: {exc}", err=True)
        sys.exit(EXIT_NON_ABELIAN)
    try:
        rep = build_report(P, coords)
    except CONSISTENCY_ERRORS as exc:
        click.echo(f"internal consistency failure: {exc}", err=True)
        sys.exit(EXIT_CONSISTENCY)
    click.echo(rep.to_json() if fmt == "json" else render_text(rep), nl=False)


@main.command()
@click.option("--max-rank", type=int, default=8, show_default=True)
@format_option
def table1(max_rank: int, fmt: str) -> None:
    """Recompute the abelian classification and every row's M, dim V and orbit count."""
    if not 2 <= max_rank <= MAX_RANK:
        click.echo(f"error: --max-rank must be in 2..{MAX_RANK}", err=True)
        sys.exit(EXIT_INVALID)
    rows, bad = [], []
    for kind, n, node in table1_cases(max_rank):
        P = parabolic_from_node(build_root_system(kind, n), node)
        exp = table1_row(kind, n, node)
        got = {"M": P.M_label, "dim_V": P.dim_V, "orbits": orbit_count(P)}
        ok = is_abelian_radical(P) and got == {"M": exp.M, "dim_V": exp.dim_V, "orbits": exp.orbits}
        rows.append({"type": kind, "rank": n, "node": node, "V": exp.V, **got, "matches": ok})
        if not ok:
            bad.append(f"{kind}{n} node {node}")
    if fmt == "json":
        _emit_json({"schema_version": SCHEMA_VERSION, "max_rank": max_rank, "rows": rows})
    else:
        click.echo(
            _table(
                ["type", "node", "M", "V", "dim V", "|M\\V|", "ok"],
                [[f"{r['type']}{r['rank']}", r["node"], r["M"], r["V"], r["dim_V"], r["orbits"], "yes" if r["matches"] else "NO"] for r in rows],
            )
        )
    if bad:
        click.echo("mismatched rows: " + ", ".join(bad), err=True)
        sys.exit(EXIT_CONSISTENCY)


@main.command()
@click.option("--max-rank", type=int, default=MAX_RANK, show_default=True)
@click.option("--suite", "suites", multiple=True, type=click.Choice(list(SUITES)), help="Run only these suites.")
@click.option("--inject-sign-flip", is_flag=True, help="Negate one structure constant before the Jacobi check.")
@format_option
def selftest(max_rank: int, suites, inject_sign_flip: bool, fmt: str) -> None:
    """Run the invariant suites over every supported case."""
    if not 1 <= max_rank <= MAX_RANK:
        click.echo(f"error: --max-rank must be in 1..{MAX_RANK}", err=True)
        sys.exit(EXIT_INVALID)
    results = run_suites(list(suites) or None, max_rank=max_rank, inject_flip=inject_sign_flip)
    if fmt == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "suites": [
                    {"name": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures[:20]}
                    for r in results
                ],
            }
        )
    else:
        for r in results:
            click.echo(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<11} {r.checked:>6} checks  {r.seconds:6.2f}s")
            for f in r.failures[:5]:
                click.echo(f"      {f}")
    if not all(r.passed for r in results):
        sys.exit(EXIT_CONSISTENCY)


if __name__ == "__main__":
    main()
