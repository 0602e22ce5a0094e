"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 unrealizable input,
3 verification failure.
"""

from __future__ import annotations

import json
import os
import random
import sys
from importlib import resources

import click

from . import io
from .complexes import VertexLayout, from_mask, to_mask
from .monomials import UnrealizableError, compress, first_closure_failure
from .realization import (
    count_compressed,
    extract,
    iter_compressed_f_vectors,
    random_f_vectors,
    realize_h_vector,
    restrict_table,
    witness_check,
)
from .shelling import build_shelling_sigma, restriction, revlex_shelling
from .shelling import naive_sigma as assign_naive_sigma
from .verify import VerificationReport, iter_layouts, sweep, verify_shelling, verify_table

EXIT_USAGE = 1
EXIT_UNREALIZABLE = 2
EXIT_VERIFY = 3


class _Group(click.Group):
    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            rv = super().main(*args, **kwargs)
        except click.exceptions.Exit as exc:
            sys.exit(exc.exit_code)
        except (click.ClickException, click.Abort) as exc:
            if isinstance(exc, click.ClickException):
                exc.show()
            sys.exit(EXIT_USAGE)
        sys.exit(rv or 0)


def _style():
    if os.environ.get("SHELLKIT_COLOR", "").lower() in ("1", "true", "yes", "on"):
        return lambda s: click.style(s, bold=True)
    return None


def _ints(text, what):
    text = text.strip()
    if not text:
        return []
    try:
        if text.startswith("["):
            value = json.loads(text)
        else:
            value = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise click.BadParameter(f"cannot parse {what}: {text!r}") from exc
    return value


def _json_arg(text):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


def layout_options(f):
    f = click.option("--layout", "layout_file", type=click.Path(exists=True, dir_okay=False),
                     help="Layout JSON file {l, parts, order}.")(f)
    f = click.option("--labels", default=None, help="Comma-separated display labels, by position.")(f)
    f = click.option("--order", default=None, help="Vertex names listed by position.")(f)
    f = click.option("--parts", default="", help="Part sizes, e.g. 3,3.")(f)
    f = click.option("--l", "l", type=int, default=None, help="Number of simplex vertices.")(f)
    return f


def _layout(l, parts, order, labels, layout_file):
    try:
        if layout_file:
            with open(layout_file) as fh:
                layout = io.layout_from_json(json.load(fh))
            if labels:
                layout = VertexLayout(layout.part_of, labels=labels.split(","))
            return layout
        if l is None:
            raise click.UsageError("give --l (and --parts) or --layout")
        return VertexLayout.from_parts(
            l,
            _ints(parts, "parts"),
            _ints(order, "order") if order else None,
            labels.split(",") if labels else None,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _emit(data, fmt, text):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(text, nl=False)


@click.group(cls=_Group)
def cli():
    """Shellings of skeleta of Lambda(l; p_1, ..., p_m) and h-vector realization."""


@cli.command()
@layout_options
@click.option("--d", "d", type=int, required=True)
@click.option("--revlex", is_flag=True, help="Reverse-lex facet order instead of the recursive one.")
@click.option("--naive-sigma", is_flag=True, help="Assign monomials naively along the reverse-lex order.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def shelling(l, parts, order, labels, layout_file, d, revlex, naive_sigma, fmt):
    """Print a shelling with its restriction sizes and monomials."""
    layout = _layout(l, parts, order, labels, layout_file)
    try:
        if revlex or naive_sigma:
            table = revlex_shelling(layout, d)
            if naive_sigma:
                table = assign_naive_sigma(table)
        else:
            table = build_shelling_sigma(layout, d)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(io.table_to_json(table), fmt, io.render_table(table, _style()))


@cli.command()
@layout_options
@click.option("--d", "d", type=int, required=True)
@click.option("--F", "F", default=None, help="F-vector, e.g. 1,2,2,1.")
@click.option("--M", "M", default=None, help="Multicomplex as JSON, or @file.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def realize(l, parts, order, labels, layout_file, d, F, M, fmt):
    """Build a shellable subcomplex whose h-vector is a given F-vector."""
    layout = _layout(l, parts, order, labels, layout_file)
    if (F is None) == (M is None):
        raise click.UsageError("give exactly one of --F and --M")
    try:
        if F is not None:
            result = realize_h_vector(layout, d, _ints(F, "F"))
        else:
            result = extract(layout, d, io.monomials_from_json(_json_arg(M)))
    except UnrealizableError as exc:
        click.echo(f"unrealizable: {exc}", err=True)
        return EXIT_UNREALIZABLE
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(io.realization_to_json(result), fmt, io.render_realization(result))


@cli.command("compress")
@click.option("--F", "F", required=True, help="F-vector, e.g. 1,2,2,1.")
@click.option("--caps", default=None, help="Caps, e.g. 2,2 or [null,2]; 'inf' allowed.")
@layout_options
@click.option("--d", "d", type=int, default=None, help="Derive caps from a layout and d.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def compress_cmd(F, caps, l, parts, order, labels, layout_file, d, fmt):
    """Reverse-lex compression of an F-vector."""
    if caps is not None:
        text = caps.replace("inf", "null")
        try:
            cap_vec = io.caps_from_json(json.loads(text if text.startswith("[") else f"[{text}]"))
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    elif d is not None:
        cap_vec = _layout(l, parts, order, labels, layout_file).caps(d)
    else:
        raise click.UsageError("give --caps or a layout with --d")
    vec = _ints(F, "F")
    try:
        bad = first_closure_failure(vec, cap_vec)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    if bad is not None:
        click.echo(f"unrealizable: divisor closure fails at degree {bad}", err=True)
        if fmt == "json":
            click.echo(json.dumps({"realizable": False, "degree": bad}))
        return EXIT_UNREALIZABLE
    members = compress(vec, cap_vec)
    _emit({"realizable": True, "multicomplex": io.monomials_to_json(members)}, fmt,
          io.render_monomials(members))


GOLDEN = {
    "recursive": "lambda0_33_d4_recursive.txt",
    "naive": "lambda0_33_d4_naive.txt",
    "restriction": "lambda1_543_restriction.json",
}


def golden_text(name: str) -> str:
    return resources.files("shellkit").joinpath("testdata", GOLDEN[name]).read_text()


def check_golden_tables() -> VerificationReport:
    """Compare the bundled golden files with freshly computed output."""
    report = VerificationReport({"golden": sorted(GOLDEN.values())})
    lay = VertexLayout.from_parts(0, [3, 3])
    got = io.render_table(build_shelling_sigma(lay, 4))
    report.add("recursive_table", None if got == golden_text("recursive") else {"got": got})
    got = io.render_table(assign_naive_sigma(revlex_shelling(lay, 4)))
    report.add("naive_table", None if got == golden_text("naive") else {"got": got})
    golden = json.loads(golden_text("restriction"))
    layout = io.layout_from_json(golden["layout"])
    rd = restriction(layout, to_mask(golden["facet"]))
    got = {
        "full": sorted(rd.full),
        "miss": {str(i): p for i, p in rd.miss},
        "s": rd.s,
        "U": list(from_mask(rd.u_set)),
        "tail": list(from_mask(rd.tail)),
        "R": list(from_mask(rd.r_set)),
    }
    report.add("restriction_example", None if got == golden["expected"] else {"got": got})
    return report


def _realization_sweep(max_n, rng, limit=10_000, samples=500):
    for layout in iter_layouts(max_n):
        for d in range(1, layout.n - layout.m + 1):
            caps = layout.caps(d)
            if count_compressed(caps, d) <= limit:
                vectors = list(iter_compressed_f_vectors(caps, d))
            else:
                vectors = [F for F in random_f_vectors(caps, d, samples, rng)
                           if first_closure_failure(F, caps) is None]
            report = VerificationReport({"l": layout.l, "parts": list(layout.parts), "d": d,
                                         "f_vectors": len(vectors)})
            for F in vectors:
                result = extract(layout, d, compress(F, caps))
                sh = verify_shelling(result.facets, d)
                if not sh.passed or result.h != F:
                    report.add("realization", {"F": list(F), "h": list(result.h),
                                               "shelling": sh.to_dict()})
                    break
            else:
                report.add("realization")
            yield report


@cli.command("verify")
@click.option("--table", "table_file", type=click.Path(exists=True, dir_okay=False),
              help="Table JSON as written by 'shelling --format json'.")
@click.option("--realization", "real_file", type=click.Path(exists=True, dir_okay=False),
              help="Realization JSON as written by 'realize --format json'.")
@click.option("--sweep", "sweep_n", type=int, default=None, help="Check every layout with n <= N.")
@click.option("--realizations", is_flag=True, help="With --sweep, also extract subcomplexes.")
@click.option("--paper-tables", is_flag=True, help="Check the bundled golden tables.")
@click.option("--seed", type=int, default=0, help="Seed for sampled F-vectors.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify_cmd(table_file, real_file, sweep_n, realizations, paper_tables, seed, fmt):
    """Run the brute-force checks and report pass/fail."""
    reports = []
    if table_file:
        try:
            with open(table_file) as fh:
                table = io.table_from_json(json.load(fh))
        except (ValueError, KeyError) as exc:
            raise click.UsageError(f"bad table file: {exc}") from exc
        reports.append(verify_table(table, recursive=False))
    if real_file:
        try:
            with open(real_file) as fh:
                data = json.load(fh)
            layout = io.layout_from_json(data["layout"])
            d = int(data["d"])
            stored = io.table_from_json({"layout": data["layout"], "d": d, "rows": data["rows"]})
            base = restrict_table(build_shelling_sigma(layout, d),
                                  io.monomials_from_json(data["multicomplex"]))
        except (ValueError, KeyError) as exc:
            raise click.UsageError(f"bad realization file: {exc}") from exc
        result = type(base)(base.full_table, stored.rows, base.multicomplex,
                            tuple(to_mask(t) for t in data["facets"]),
                            tuple(data["f"]), tuple(data["h"]))
        reports.append(witness_check(result))
    if sweep_n is not None:
        reports.extend(sweep(sweep_n))
        if realizations:
            reports.extend(_realization_sweep(sweep_n, random.Random(seed)))
    if paper_tables:
        reports.append(check_golden_tables())
    if not reports:
        raise click.UsageError("nothing to verify; give --table, --realization, --sweep or --paper-tables")
    ok = all(r.passed for r in reports)
    if fmt == "json":
        click.echo(json.dumps({"passed": ok, "reports": [r.to_dict() for r in reports]}, indent=2))
    else:
        for r in reports:
            if not r.passed or len(reports) <= 5:
                click.echo(io.render_report(r), nl=False)
        n_checks = sum(len(r.checks) for r in reports)
        click.echo(f"{'PASS' if ok else 'FAIL'}: {len(reports)} instance(s), {n_checks} check(s)")
    return 0 if ok else EXIT_VERIFY


def main():
    cli()


if __name__ == "__main__":
    main()
