"""
Command-line interface: enum, stats, gen, bench and serve.

Results go to stdout; run reports and diagnostics go to stderr so stdout stays
machine-parseable. Exit codes: 0 success, 1 usage / IO / parse error,
2 digest mismatch in `bench`.
"""

from typing import List, Optional, Sequence, Tuple
import logging

import click

from app import config
from app.schemas.schemas import Algorithm, EdgeOrdering, OutputMode
from app.services.bench import check_digests, format_table, run_bench
from app.services.errors import MCEError
from app.services.graph_core import Graph, dump_edge_list, load_edge_list, to_edge_list_text
from app.services.orderings import compute_stats
from app.services.runner import run_enumeration
from app.services.sink import CliqueSink
from app.services.synth import generate, parse_gen_spec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CROSS_CHECK = 2

ALGORITHMS = [a.value for a in Algorithm]
ORDERINGS = [o.value for o in EdgeOrdering]


def _load_graph(input_path: Optional[str], gen: Optional[str]) -> Tuple[str, Graph]:
    if (input_path is None) == (gen is None):
        raise click.UsageError("give exactly one of --input or --gen")
    try:
        if gen is not None:
            return gen, generate(parse_gen_spec(gen))
        with open(input_path, "r", encoding="utf-8") as stream:
            return input_path, load_edge_list(stream)
    except UnicodeDecodeError as e:
        raise click.ClickException(f"{input_path} is not UTF-8 text: {e}")
    except (MCEError, OSError) as e:
        raise click.ClickException(str(e))


def _parse_list(raw: str, parse) -> list:
    try:
        return [parse(item.strip()) for item in raw.split(",") if item.strip()]
    except ValueError as e:
        raise click.BadParameter(str(e))


def _record(name: str, graph: Graph, reports) -> None:
    from app.models.database import SessionLocal, init_db
    from app.services.ledger import record_graph, record_run

    init_db()
    db = SessionLocal()
    try:
        graph_record = record_graph(db, name, compute_stats(graph))
        for report in reports:
            record_run(db, graph_record, report)
    finally:
        db.close()


@click.group()
@click.option("--log-level", default=config.LOG_LEVEL, show_default=True,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
def cli(log_level):
    """Maximal clique enumeration toolkit."""
    config.setup_logging(log_level)


@cli.command("enum")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), help="Edge-list file.")
@click.option("--gen", help="Generator spec instead of a file, e.g. er:n=1000,rho=5,seed=3.")
@click.option("--algorithm", type=click.Choice(ALGORITHMS), default=config.DEFAULT_ALGORITHM, show_default=True)
@click.option("--et", type=click.IntRange(0, 3), default=config.DEFAULT_ET, show_default=True,
              help="Early-termination threshold t (0 disables).")
@click.option("--output", "output_mode", type=click.Choice([m.value for m in OutputMode]),
              default=OutputMode.COUNT.value, show_default=True)
@click.option("--edge-ordering", type=click.Choice(ORDERINGS), default=config.DEFAULT_EDGE_ORDERING,
              show_default=True, help="Initial-branch edge ordering (ebbmc / hbbmc).")
@click.option("--sorted", "sort_output", is_flag=True,
              help="Sort list output; holds every clique in memory.")
@click.option("--record", is_flag=True, help="Store the run in the ledger database.")
def enum_command(input_path, gen, algorithm, et, output_mode, edge_ordering, sort_output, record):
    """Enumerate all maximal cliques."""
    name, graph = _load_graph(input_path, gen)
    mode = OutputMode(output_mode)

    def echo_clique(clique):
        click.echo(" ".join(str(graph.original_id(v)) for v in clique))

    if mode == OutputMode.LIST and sort_output:
        sink = CliqueSink(OutputMode.LIST)
    elif mode == OutputMode.LIST:
        sink = CliqueSink(OutputMode.COUNT, callback=echo_clique)
    else:
        sink = CliqueSink(OutputMode.COUNT)

    try:
        report = run_enumeration(graph, Algorithm(algorithm), et, EdgeOrdering(edge_ordering), sink)
    except MCEError as e:
        raise click.ClickException(str(e))

    if mode == OutputMode.LIST and sort_output:
        for clique in sink.sorted_cliques():
            echo_clique(clique)
    elif mode == OutputMode.COUNT:
        click.echo(str(report.clique_count))
    elif mode == OutputMode.DIGEST:
        click.echo(report.clique_digest)

    for line in report.as_lines():
        click.echo(line, err=True)
    if record:
        _record(name, graph, [report])


@cli.command("stats")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--gen")
def stats_command(input_path, gen):
    """Print n, m, delta, tau, rho and the hybrid condition."""
    _, graph = _load_graph(input_path, gen)
    for line in compute_stats(graph).as_lines():
        click.echo(line)


@cli.command("gen")
@click.argument("spec")
@click.option("-o", "--out", "out_path", type=click.Path(dir_okay=False, writable=True),
              help="Output file; stdout when omitted.")
def gen_command(spec, out_path):
    """Write a generated graph as a canonical edge list."""
    _, graph = _load_graph(None, spec)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as stream:
            dump_edge_list(graph, stream)
        click.echo(f"wrote n={graph.n} m={graph.m} to {out_path}", err=True)
    else:
        click.echo(to_edge_list_text(graph), nl=False)


@cli.command("bench")
@click.option("--input", "inputs", multiple=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--gen", "gens", multiple=True)
@click.option("--algorithms", default="vbbmc,ebbmc,hbbmc", show_default=True)
@click.option("--et", "ets", default="3", show_default=True, help="Comma-separated thresholds.")
@click.option("--repeats", type=click.IntRange(1), default=1, show_default=True)
@click.option("--edge-ordering", type=click.Choice(ORDERINGS), default=config.DEFAULT_EDGE_ORDERING)
@click.option("--record", is_flag=True, help="Store every cell in the ledger database.")
@click.pass_context
def bench_command(ctx, inputs, gens, algorithms, ets, repeats, edge_ordering, record):
    """Time engines side by side; fails with exit code 2 when digests disagree."""
    if not inputs and not gens:
        raise click.UsageError("give at least one --input or --gen")
    algorithm_list = _parse_list(algorithms, Algorithm)
    et_list = _parse_list(ets, int)
    if any(not 0 <= t <= 3 for t in et_list):
        raise click.BadParameter("thresholds must lie in 0..3", param_hint="--et")

    graphs: List[Tuple[str, Graph]] = [_load_graph(p, None) for p in inputs]
    graphs += [_load_graph(None, g) for g in gens]

    try:
        result = run_bench(graphs, algorithm_list, et_list, repeats, EdgeOrdering(edge_ordering))
    except MCEError as e:
        raise click.ClickException(str(e))
    click.echo(format_table(result.table), nl=False)

    if record:
        for name, graph in graphs:
            _record(name, graph, [r for n, r in result.reports if n == name])

    ok, message = check_digests(result.table)
    if not ok:
        click.echo(f"error: {message}", err=True)
        ctx.exit(EXIT_CROSS_CHECK)


@cli.command("serve")
@click.option("--port", type=int, default=config.PORT, show_default=True)
@click.option("--host", default="0.0.0.0", show_default=True)
def serve_command(port, host):
    """Run the HTTP API."""
    import uvicorn

    uvicorn.run("app.main:app", host=host, port=port, log_level=config.LOG_LEVEL.lower())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point with the documented exit codes (click usage errors become 1)."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="mce",
                      standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except (MCEError, OSError) as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_OK
