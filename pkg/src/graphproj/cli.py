"""Command line interface.

Conventions, also spelled out in ``--help``:

* words read left to right, and so does composition: in a word ``w1 w2``
  the path ``w1`` must end where ``w2`` starts (``range(w1) == source(w2)``);
* a trailing ``*`` on a letter marks annihilation, everything else is
  creation; quote words in the shell so ``*`` survives;
* exit codes for ``check``: 0 the word is a vertex projection, 1 it is
  not, 2 a graph or word failed to parse, 3 the decision methods
  disagreed with each other.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path as FilePath

import click

from .fock import FockBasis, classify, evaluate, subprojection_leq
from .fock import creation_matrix, PROJECTION, ZERO_CLASS
from .graph import GraphParseError, parse_graph, serialize_graph
from .groupoid import OperatorWord, ZeroWord, parse_word, reduce, to_shadow_word
from .lattice import (
    check_projection_lattice,
    export_path,
    has_star_axis_property,
    lattice_path,
    render_path_figure,
)
from .semigroupoid import Unit, WordParseError
from .verify import format_report, run_fuzz, verify_graph

EXIT_PROJECTION = 0
EXIT_NOT_PROJECTION = 1
EXIT_PARSE_ERROR = 2
EXIT_DISAGREEMENT = 3


def _load_graph(path: str):
    try:
        return parse_graph(FilePath(path).read_text(encoding="utf-8"))
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE_ERROR)
    except GraphParseError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE_ERROR)


def _parse_word(text: str, graph) -> OperatorWord:
    try:
        return parse_word(text, graph)
    except WordParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE_ERROR)


@click.group()
def main():
    """Decide whether products of edge operators are vertex projections.

    A word is written as whitespace-separated letters over a graph file:
    each letter is a vertex id or a dot-joined edge path, with an optional
    trailing * for annihilation, e.g. 'e1.e2* e1 y*'.  Composition reads
    left to right: in 'w1 w2' the path w1 must end where w2 starts.
    """


@main.command()
@click.argument("graph_file")
@click.argument("word_text", metavar="WORD", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True, help="Machine readable output.")
@click.option("--fock", "with_fock", is_flag=True, help="Also run the matrix model.")
@click.option("--fock-len", default=6, show_default=True, help="Basis length cutoff.")
def check(graph_file, word_text, as_json, with_fock, fock_len):
    """Decide whether WORD is a vertex projection.

    Runs the edge-level reduction and the length-level lattice test and
    compares them; with --fock the exact matrix model is consulted as
    well.  Exit status: 0 projection, 1 not a projection, 2 parse error,
    3 the methods disagreed.
    """
    graph = _load_graph(graph_file)
    word = _parse_word(" ".join(word_text), graph)

    shadow_word = to_shadow_word(word)
    normal_form = reduce(shadow_word)
    groupoid_vertex = normal_form.vertex if isinstance(normal_form, Unit) else None
    lattice_vertex = check_projection_lattice(word)
    path = lattice_path(word)
    agreement = groupoid_vertex == lattice_vertex
    is_zero = isinstance(shadow_word, ZeroWord)

    fock_text = None
    fock_consistent = True
    if with_fock:
        basis = FockBasis(graph, fock_len)
        op = evaluate(word, basis)
        kind = classify(op)
        if kind == PROJECTION:
            sources = {basis.elements[h].source for h in op.mapping}
            below = sources.pop().id if len(sources) == 1 else "?"
            fock_text = f"projection-below({below})"
        else:
            fock_text = kind.replace("_", "-")
        if groupoid_vertex is not None:
            dominating = creation_matrix(Unit(groupoid_vertex), basis)
            fock_consistent = kind in (ZERO_CLASS, PROJECTION) and subprojection_leq(
                op, dominating
            )
        elif is_zero:
            fock_consistent = kind == ZERO_CLASS

    projection = agreement and groupoid_vertex is not None

    if as_json:
        payload = {
            "projection": projection,
            "vertex": groupoid_vertex.id if projection and groupoid_vertex else None,
            "normal_form": str(normal_form),
            "lattice_endpoint": list(path.endpoint) if path.endpoint else None,
            "zero": is_zero,
            "agreement": agreement,
            "groupoid_vertex": groupoid_vertex.id if groupoid_vertex else None,
            "lattice_vertex": lattice_vertex.id if lattice_vertex else None,
        }
        if with_fock:
            payload["fock"] = fock_text
        click.echo(json.dumps(payload))
    else:
        click.echo(f"word: {word}")
        click.echo(f"normal form: {normal_form}")
        click.echo(
            "reduction: "
            + (f"projection at {groupoid_vertex}" if groupoid_vertex else "not a projection")
        )
        endpoint = path.endpoint
        click.echo(
            "lattice: "
            + ("empty path" if endpoint is None else f"endpoint {endpoint}")
            + (f", projection at {lattice_vertex}" if lattice_vertex else ", not a projection")
        )
        if fock_text is not None:
            click.echo(f"matrix model (cutoff {fock_len}): {fock_text}")
        if not agreement or not fock_consistent:
            click.echo("methods disagree", err=True)

    if not agreement or not fock_consistent:
        sys.exit(EXIT_DISAGREEMENT)
    sys.exit(EXIT_PROJECTION if projection else EXIT_NOT_PROJECTION)


@main.command("reduce")
@click.argument("graph_file")
@click.argument("word_text", metavar="WORD", nargs=-1, required=True)
def reduce_command(graph_file, word_text):
    """Print the reduced shadow word of WORD.

    Output is the literal Zero, a vertex id, or a dot-joined edge
    sequence in which shadow edges carry the ^-1 marker.
    """
    graph = _load_graph(graph_file)
    word = _parse_word(" ".join(word_text), graph)
    click.echo(str(reduce(to_shadow_word(word))))


@main.command()
@click.argument("graph_file")
@click.argument("word_text", metavar="WORD", nargs=-1, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "svg"]), default="csv",
              show_default=True)
@click.option("--out", "out_file", default=None,
              help="Write the export here instead of standard output.")
@click.option("--figure", "figure_file", default=None,
              help="Also draw the path to this image file.")
def lattice(graph_file, word_text, fmt, out_file, figure_file):
    """Export the lattice path of WORD and report the star axis verdict."""
    graph = _load_graph(graph_file)
    word = _parse_word(" ".join(word_text), graph)
    path = lattice_path(word)
    rendered = export_path(path, fmt)
    if out_file:
        FilePath(out_file).write_text(rendered, encoding="utf-8")
    else:
        click.echo(rendered, nl=False)
    if figure_file:
        render_path_figure(path, figure_file, title=str(word))
    if path.is_empty:
        click.echo("empty path (zero word)", err=True)
    else:
        on_axis = has_star_axis_property(path)
        click.echo(
            f"endpoint {path.endpoint}, star axis: {'yes' if on_axis else 'no'}",
            err=True,
        )


@main.command()
@click.argument("graph_file", required=False)
@click.option("--max-word-len", "-L", default=4, show_default=True,
              help="Longest word, in letters.")
@click.option("--max-letter-len", "-K", default=2, show_default=True,
              help="Longest path inside a letter.")
@click.option("--fock-len", "-N", default=6, show_default=True,
              help="Basis length cutoff for the matrix model.")
@click.option("--trials", default=100, show_default=True,
              help="Randomized cancellation orders per shadow word.")
@click.option("--fuzz", "fuzz_count", default=0, show_default=True,
              help="Verify this many seeded random graphs instead of a file.")
@click.option("--seed", default=0, show_default=True,
              help="Seed for the random graphs drawn by --fuzz.")
@click.option("--report-dir", default=None,
              help="Write a CSV summary and an overview figure here.")
def verify(graph_file, max_word_len, max_letter_len, fock_len, trials,
           fuzz_count, seed, report_dir):
    """Cross-validate all methods over every word within the bounds.

    Enumerates every operator word up to the given size over the graph
    (or over seeded random graphs with --fuzz), compares the reduction
    and lattice verdicts, checks the rewriting system, and checks the
    matrix model against the reduction.  Exit status 0 means no
    violations were found.
    """
    bounds = dict(
        max_word_len=max_word_len,
        max_letter_len=max_letter_len,
        fock_len=fock_len,
        confluence_trials=trials,
    )
    if fuzz_count and graph_file:
        click.echo("error: give either a graph file or --fuzz, not both", err=True)
        sys.exit(EXIT_PARSE_ERROR)
    if fuzz_count:
        reports = run_fuzz(fuzz_count, seed, **bounds)
    elif graph_file:
        graph = _load_graph(graph_file)
        reports = [verify_graph(graph, label=FilePath(graph_file).name, **bounds)]
    else:
        click.echo("error: need a graph file or --fuzz N", err=True)
        sys.exit(EXIT_PARSE_ERROR)

    for report in reports:
        click.echo(format_report(report))
    total_words = sum(r.words_checked for r in reports)
    total_violations = sum(r.violations for r in reports)
    click.echo(f"total: {total_words} words, {total_violations} violations")

    if report_dir:
        _write_verify_report(reports, report_dir)

    sys.exit(0 if total_violations == 0 else 1)


def _write_verify_report(reports, report_dir) -> None:
    import csv

    out = FilePath(report_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "verify_report.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["graph", "vertices", "edges", "words", "projections", "zeros",
             "agreement_violations", "rewrite_violations", "matrix_violations"]
        )
        for r in reports:
            writer.writerow(
                [r.label, len(r.graph.vertices), len(r.graph.edges),
                 r.words_checked, r.projections, r.zeros,
                 r.agreement_violations, r.rewrite_violations, r.fock_violations]
            )

    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    labels = [r.label for r in reports]
    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(max(6.0, 0.5 * len(labels)), 6.0), sharex=True
    )
    top.bar(labels, [r.words_checked for r in reports], color="tab:blue")
    top.set_ylabel("words checked")
    bottom.bar(labels, [r.violations for r in reports], color="tab:red")
    bottom.set_ylabel("violations")
    for ax in (top, bottom):
        ax.tick_params(axis="x", rotation=60)
    fig.tight_layout()
    fig.savefig(out / "verify_summary.png", dpi=150)
    plt.close(fig)
    click.echo(f"report written to {csv_path} and {out / 'verify_summary.png'}")


@main.group()
def graph():
    """Operations on graph files."""


@graph.command()
@click.argument("graph_file")
def validate(graph_file):
    """Parse GRAPH_FILE and report its size; exit 2 on any format error."""
    g = _load_graph(graph_file)
    click.echo(f"ok: {len(g.vertices)} vertices, {len(g.edges)} edges")
    sys.exit(0)


if __name__ == "__main__":
    main()
