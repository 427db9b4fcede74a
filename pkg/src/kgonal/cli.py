"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import json

import click

from .exactmath import is_perfect_square
from .figurate import invert_centered, invert_polygonal
from .intersect import case2_sequence, stream
from .oracle import compare
from .pell import cf_expand, pell_solutions


@click.group()
def main():
    """Numbers that are both k-gonal and centered k-gonal."""


@main.command()
@click.option("--k", "k", type=click.IntRange(min=3), required=True, help="Polygon order.")
@click.option("--count", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--start-index", type=click.IntRange(min=0), default=0, show_default=True,
              help="Zero-based solution index i of the first record.")
@click.option("--format", "fmt", type=click.Choice(["table", "jsonl", "bfile"]), default="table",
              show_default=True)
def gen(k: int, count: int, start_index: int, fmt: str):
    """Emit common values N_i for i = start-index, ..., start-index + count - 1.

    \b
    table : columns i, n, m, value, a
    jsonl : one object per line, keys k, i, value, m, n, a as decimal strings
    bfile : "index value" lines with 1-based index = i + 1
    """
    records = stream(k, start_index, count)
    if fmt == "jsonl":
        for rec in records:
            click.echo(json.dumps(rec.as_json()))
    elif fmt == "bfile":
        for rec in records:
            click.echo(f"{rec.i + 1} {rec.value}")
    else:
        rows = [("i", "n", "m", "value", "a")]
        rows += [tuple(str(v) for v in (r.i, r.n, r.m, r.value, r.a)) for r in records]
        widths = [max(len(row[j]) for row in rows) for j in range(5)]
        for row in rows:
            click.echo("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))


@main.command()
@click.option("--kmin", type=click.IntRange(min=3), required=True)
@click.option("--kmax", type=click.IntRange(min=3), required=True)
@click.option("--limit", type=click.IntRange(min=1), required=True, help="Largest value checked.")
def verify(kmin: int, kmax: int, limit: int):
    """Check the closed form against brute-force enumeration for each k."""
    if kmin > kmax:
        raise click.UsageError(f"--kmin {kmin} exceeds --kmax {kmax}")
    failed = False
    for k in range(kmin, kmax + 1):
        report = compare(k, limit)
        click.echo(report.summary())
        if not report.closed_form_agreement:
            failed = True
            click.echo(f"first divergence: {report.first_divergence}", err=True)
            break
    click.echo("FAIL" if failed else "PASS")
    raise SystemExit(1 if failed else 0)


@main.command()
@click.option("--d", "D", type=click.IntRange(min=2), required=True, help="Non-square discriminant.")
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True)
def pell(D: int, count: int):
    """Continued fraction of sqrt(D) and solutions of x^2 - D y^2 = 1."""
    if is_perfect_square(D) is not None:
        raise click.BadParameter(f"{D} is a perfect square", param_hint="--d")
    click.echo(str(cf_expand(D)))
    for sol in pell_solutions(D, count):
        click.echo(f"({sol.x}, {sol.y})")


@main.command()
@click.option("--k", "k", type=click.IntRange(min=3), required=True)
@click.option("--value", type=click.IntRange(min=1), required=True)
def invert(k: int, value: int):
    """Report whether VALUE is k-gonal, centered k-gonal, or both."""
    out = {}
    n = invert_polygonal(value, k)
    m = invert_centered(value, k)
    if n is not None:
        out["polygonal_index"] = str(n)
    if m is not None:
        out["centered_index"] = str(m)
    out["both"] = n is not None and m is not None
    click.echo(json.dumps(out))


@main.command()
@click.option("--k", "k", type=click.IntRange(min=4), required=True, help="Perfect-square polygon order.")
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True)
def case2(k: int, count: int):
    """(m, value) pairs from the norm-2 equation, checked against the main stream."""
    if is_perfect_square(k) is None:
        raise click.BadParameter(f"{k} is not a perfect square", param_hint="--k")
    pairs = case2_sequence(k, count)
    for m, value in pairs:
        click.echo(f"({m}, {value})")
    expected = [(r.m, r.value) for r in stream(k, 0, count)]
    ok = pairs == expected
    click.echo("PASS" if ok else "FAIL")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
