"""Main CLI application using Typer."""

import json
import logging
import re
from collections.abc import Iterator
from contextlib import contextmanager
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Optional

import click
import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from typing_extensions import Annotated

from arrayldpc import __version__
from arrayldpc.core.analyzer import ArrayCodeAnalyzer, TABLE_COLUMNS, table_to_csv
from arrayldpc.core.arithmetic import is_odd_prime
from arrayldpc.core.code import build_code, expand_parity_check, export_alist, is_even_weight_code
from arrayldpc.core.distance import DistanceSearcherFactory
from arrayldpc.core.graphs import (
    build_graph,
    cycles_through_edge,
    graph_to_dot,
    relaxed_structure_match,
    same_cycle_structure,
)
from arrayldpc.core.interfaces import (
    ArrayLDPCError,
    ConfigurationError,
    DataFormatError,
    InvalidParameterError,
    MemoryGuardError,
)
from arrayldpc.core.support import load_support, normalize
from arrayldpc.core.template import instantiate as instantiate_template
from arrayldpc.core.template import (
    SHIPPED_SUPPORTS,
    TemplateInferrer,
    dump_template,
    load_template,
    shipped_support,
    shipped_template,
)
from arrayldpc.core.verification import VerifierFactory, canonical_order_check
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.config import DEFAULT_CONFIG_NAME, ArrayLDPCConfig
from arrayldpc.models.result import DistanceResult, PrimeStatus, VerificationMode, VerificationReport
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix

logger = logging.getLogger(__name__)

EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_VERIFICATION_FAILED = 3

# Machine output goes to stdout, everything else to stderr
console = Console()
err_console = Console(stderr=True)
app = typer.Typer(
    name="arrayldpc",
    help="🧮 arrayldpc - distances, templates and bounds for array LDPC codes",
    add_completion=False,
)

PrettyOption = Annotated[bool, typer.Option("--pretty", help="Human-readable output instead of JSON")]
ConfigOption = Annotated[
    Optional[Path], typer.Option("--config", "-c", help="Configuration file path", exists=True, dir_okay=False)
]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging on stderr")]
QuietOption = Annotated[bool, typer.Option("--quiet", "-q", help="Only log errors")]
QOption = Annotated[int, typer.Option("--q", help="Odd prime circulant size")]
MOption = Annotated[int, typer.Option("--m", help="Number of block rows (1 <= m <= q)")]
ThreadsOption = Annotated[Optional[int], typer.Option("--threads", min=1, help="Parallel partitions")]
IndexQOption = Annotated[Optional[int], typer.Option("--q", help="q for index-list inputs")]
IndexMOption = Annotated[Optional[int], typer.Option("--m", help="m for index-list inputs")]


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"arrayldpc version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        Optional[bool],
        typer.Option("--version", callback=version_callback, is_eager=True, help="Show version and exit"),
    ] = None,
) -> None:
    """arrayldpc - array LDPC code analysis.

    Construct C(q,m), compute exact minimum and stopping distances at small q, infer
    template support matrices from two low-weight codewords and verify them for all
    large primes.
    """


def _setup_logging(settings: ArrayLDPCConfig, verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else getattr(logging, settings.logging.level)
    handlers: list[logging.Handler] = [
        RichHandler(console=err_console, show_path=False, rich_tracebacks=verbose, markup=False)
    ]
    if settings.logging.file:
        file_handler = RotatingFileHandler(
            settings.logging.file,
            maxBytes=settings.logging.max_size_mb * 1024 * 1024,
            backupCount=settings.logging.backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        handlers.append(file_handler)
    logging.basicConfig(level=level, format="%(message)s", handlers=handlers, force=True)


def _load_settings(config: Optional[Path], verbose: bool = False, quiet: bool = False) -> ArrayLDPCConfig:
    try:
        settings, source = ArrayLDPCConfig.load_default(config)
    except ConfigurationError as e:
        err_console.print(f"❌ Error loading configuration: {e}", style="red")
        raise typer.Exit(EXIT_ERROR)
    _setup_logging(settings, verbose, quiet)
    if source is not None:
        logger.debug(f"Configuration loaded from {source}")
    return settings


@contextmanager
def _handle_errors() -> Iterator[None]:
    """Map domain errors to exit codes: bad parameters 2, anything else 1."""
    try:
        yield
    except (InvalidParameterError, MemoryGuardError) as e:
        err_console.print(f"❌ {e}", style="red")
        raise typer.Exit(EXIT_USAGE)
    except ArrayLDPCError as e:
        err_console.print(f"❌ {type(e).__name__}: {e}", style="red")
        raise typer.Exit(EXIT_ERROR)


def _echo_json(data: Any) -> None:
    typer.echo(json.dumps(data, indent=2))


def _odd_prime(value: int) -> int:
    if not is_odd_prime(value):
        raise typer.BadParameter(f"{value} is not an odd prime")
    return value


def _code(q: int, m: int) -> ArrayCode:
    _odd_prime(q)
    if not 1 <= m <= q:
        raise typer.BadParameter(f"m must satisfy 1 <= m <= q, got m={m}, q={q}")
    return build_code(q, m)


def _support_arg(value: str, q: Optional[int], m: Optional[int]) -> SupportMatrix:
    """A support file (JSON or index list) or the name of a shipped support matrix."""
    path = Path(value)
    if path.exists():
        return load_support(path, q, m)
    if value in SHIPPED_SUPPORTS:
        return shipped_support(value)
    raise typer.BadParameter(f"no such file or shipped support: {value}")


def _template_arg(value: str) -> TemplateSupportMatrix:
    """A template JSON file or a shipped template name (m6, m7)."""
    path = Path(value)
    if path.exists():
        return load_template(path)
    match = re.fullmatch(r"m(\d+)", value)
    if match:
        t = shipped_template(int(match.group(1)))
        if t is not None:
            return t
    raise typer.BadParameter(f"no such file or shipped template: {value}")


def _print_distance(result: DistanceResult, pretty: bool) -> None:
    if not pretty:
        _echo_json(result.to_output())
        return
    symbol = "d" if result.target.value == "minimum" else "h"
    table = Table(title=f"{symbol}({result.q},{result.m})", show_header=False)
    table.add_column("Field", style="cyan", no_wrap=True)
    table.add_column("Value", style="magenta")
    table.add_row("Value", str(result.value))
    table.add_row("Kind", str(result.kind))
    table.add_row("Method", result.method)
    table.add_row("Witness", " ".join(str(i) for i in result.witness) if result.witness else "-")
    for key, value in result.effort.items():
        table.add_row(f"Effort: {key}", str(value))
    console.print(table)


@app.command()
def construct(
    q: QOption,
    m: MOption,
    alist: Annotated[Optional[Path], typer.Option("--alist", help="Write H in alist format")] = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Construct C(q,m) and report its parameters.

    Output: {"q", "m", "n", "checks", "rank", "dimension", "even_weight"}.

    Examples:

      arrayldpc construct --q 7 --m 6 --alist h7_6.alist
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        code = _code(q, m)
        info: dict[str, Any] = {
            "q": q,
            "m": m,
            "n": code.length,
            "checks": code.n_checks,
            "rank": code.rank,
            "dimension": code.dimension,
            "even_weight": None,
        }
        if code.length <= settings.code.max_expand_columns:
            info["rank"] = expand_parity_check(code, settings.code.max_expand_columns).rank
            info["even_weight"] = is_even_weight_code(code, settings.code.max_expand_columns)
        if alist:
            alist.parent.mkdir(parents=True, exist_ok=True)
            alist.write_text(export_alist(code), encoding="utf-8")
            logger.info(f"alist written to {alist}")
    if pretty:
        table = Table(title=str(code))
        table.add_column("Parameter", style="cyan", no_wrap=True)
        table.add_column("Value", style="magenta")
        for key, value in info.items():
            table.add_row(key, str(value))
        console.print(table)
    else:
        _echo_json(info)


@app.command()
def distance(
    q: QOption,
    m: MOption,
    cap: Annotated[
        Optional[int], typer.Option("--cap", min=1, help="Weight cap; allows codes above the enumeration limit")
    ] = None,
    threads: ThreadsOption = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Exact minimum distance d(q,m).

    Output: {"d", "q", "m", "kind", "method", "witness", "effort"}.

    Examples:

      arrayldpc distance --q 7 --m 6
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        code = _code(q, m)
        searcher = DistanceSearcherFactory.create_from_config(settings, "exact", code, weight_cap=cap, threads=threads)
        with searcher:
            result = searcher.search(code)
    _print_distance(result, pretty)


@app.command()
def stopping(
    q: QOption,
    m: MOption,
    cap: Annotated[Optional[int], typer.Option("--cap", min=1, help="Largest stopping set size searched")] = None,
    threads: ThreadsOption = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Exact stopping distance h(q,m) up to a size cap.

    Output: {"h", "q", "m", "kind", "method", "witness", "effort"}; kind is
    "lower-bound" with h = cap+1 when no stopping set of size <= cap exists.

    Examples:

      arrayldpc stopping --q 7 --m 4 --cap 10
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        code = _code(q, m)
        searcher = DistanceSearcherFactory.create_from_config(
            settings, "stopping", code, stopping_cap=cap, threads=threads
        )
        with searcher:
            result = searcher.search(code)
    _print_distance(result, pretty)


@app.command()
def search(
    q: QOption,
    m: MOption,
    budget: Annotated[Optional[int], typer.Option("--budget", min=1, help="Candidate codewords to examine")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Random seed")] = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Heuristic upper bound on d(q,m) by information-set search.

    Output: {"d", "q", "m", "kind": "upper-bound", "method", "witness", "effort"}.

    Examples:

      arrayldpc search --q 11 --m 6 --budget 100000 --seed 2012
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        code = _code(q, m)
        searcher = DistanceSearcherFactory.create_from_config(
            settings, "heuristic", code, heuristic_budget=budget, heuristic_seed=seed
        )
        with searcher:
            result = searcher.search(code)
    _print_distance(result, pretty)


@app.command()
def graph(
    support: Annotated[str, typer.Option("--support", help="Support file or shipped support name")],
    i: Annotated[int, typer.Option("--i", min=0, help="First row")],
    j: Annotated[int, typer.Option("--j", min=1, help="Second row")],
    dot: Annotated[Optional[Path], typer.Option("--dot", help="Write the graph in DOT format")] = None,
    q: IndexQOption = None,
    m: IndexMOption = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Support-matrix graph G(i,j) and the cycles through its designated edges.

    Output: {"q", "i", "j", "left", "right", "edges", "cycles": {"canonical": [...], "zero": [...]}};
    a designated edge missing from the graph has cycles null.

    Examples:

      arrayldpc graph --support q47_m6_w20 --i 0 --j 1 --dot g01.dot
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        sm = _support_arg(support, q, m)
        g = build_graph(sm, i, j)
        cycles: dict[str, Optional[list[list[int]]]] = {}
        for kind in ("canonical", "zero"):
            edge = g.designated_edge(kind)
            if not g.has_edge(*edge):
                cycles[kind] = None
                continue
            found = cycles_through_edge(g, edge, settings.cycles.max_cycles_per_edge)
            cycles[kind] = [list(c.labels) for c in found]
        if dot:
            dot.write_text(graph_to_dot(g), encoding="utf-8")
            logger.info(f"DOT written to {dot}")
    info = {
        "q": sm.q,
        "i": i,
        "j": j,
        "left": g.left,
        "right": g.right,
        "edges": g.graph.number_of_edges(),
        "cycles": cycles,
    }
    if pretty:
        table = Table(title=f"G({i},{j}) at q={sm.q}")
        table.add_column("Designated edge", style="cyan")
        table.add_column("Cycle lengths", style="magenta")
        for kind, found_cycles in cycles.items():
            lengths = "missing" if found_cycles is None else " ".join(str(len(c) - 1) for c in found_cycles)
            table.add_row(kind, lengths or "-")
        console.print(table)
    else:
        _echo_json(info)


@app.command()
def compare(
    a: Annotated[str, typer.Option("--a", help="First support (file or shipped name)")],
    b: Annotated[str, typer.Option("--b", help="Second support (file or shipped name)")],
    relaxed: Annotated[bool, typer.Option("--relaxed", help="Compare only minimum cycle lengths")] = False,
    q: IndexQOption = None,
    m: IndexMOption = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Compare the graphical cycle structures of two support matrices.

    Both inputs are normalized first. Output: {"match", "relaxed"}.
    """
    settings = _load_settings(config, verbose, quiet)
    limit = settings.cycles.max_cycles_per_edge
    with _handle_errors():
        sm1, sm2 = normalize(_support_arg(a, q, m)), normalize(_support_arg(b, q, m))
        match = relaxed_structure_match(sm1, sm2, limit) if relaxed else same_cycle_structure(sm1, sm2, limit)
    if pretty:
        verdict = "✅ cycle structures match" if match else "⚠️  cycle structures differ"
        console.print(f"{verdict} ({'relaxed' if relaxed else 'strict'})")
    else:
        _echo_json({"match": match, "relaxed": relaxed})


@app.command()
def infer(
    a: Annotated[str, typer.Option("--a", help="Support at the smaller prime (file or shipped name)")],
    b: Annotated[str, typer.Option("--b", help="Support at the larger prime (file or shipped name)")],
    multiplier_bound: Annotated[
        Optional[int], typer.Option("--I", "--multiplier-bound", min=1, help="Largest CRT denominator (default m-1)")
    ] = None,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the template JSON here")] = None,
    relaxed: Annotated[bool, typer.Option("--relaxed", help="Relaxed cycle-structure matching")] = False,
    q: IndexQOption = None,
    m: IndexMOption = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Infer a template support matrix from codewords at two primes.

    Output: {"template", "permutation", "cycle_pairs", "backtracks"}.

    Examples:

      arrayldpc infer --a q47_m6_w20 --b q59_m6_w20 --out m6.json
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        sm1, sm2 = normalize(_support_arg(a, q, m)), normalize(_support_arg(b, q, m))
        inference = settings.inference_config(multiplier_bound=multiplier_bound, relaxed=relaxed or None)
        inferrer = TemplateInferrer(inference)
        result = inferrer.infer(sm1, sm2)
        if out:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(dump_template(result.template), encoding="utf-8")
            logger.info(f"Template written to {out}")
    if pretty:
        table = Table(title=f"Template m={result.template.m}, w={result.template.w}")
        table.add_column("Column", style="cyan")
        table.add_column("x", style="magenta")
        table.add_column("y", style="magenta")
        for idx, col in enumerate(result.template.complete_columns()):
            table.add_row(str(idx), str(col.x), str(col.y))
        console.print(table)
    else:
        _echo_json(
            {
                "template": result.template.model_dump(mode="json"),
                "permutation": {str(k): v for k, v in result.permutation.mapping.items()},
                "cycle_pairs": result.slots_used,
                "backtracks": result.backtracks,
            }
        )


@app.command(name="instantiate")
def instantiate_cmd(
    template: Annotated[str, typer.Option("--template", "-t", help="Template JSON file or shipped name (m6, m7)")],
    q: Annotated[int, typer.Option("--q", callback=_odd_prime, help="Odd prime")],
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Evaluate a template at q.

    Output: the support-matrix JSON {"q", "m", "columns"} plus "indices" and
    "canonical_order".
    """
    _load_settings(config, verbose, quiet)
    with _handle_errors():
        inst = instantiate_template(_template_arg(template), q)
    if pretty:
        console.print(Panel(inst.format_rows(), title=f"Instance at q={q}"))
    else:
        data = inst.model_dump(mode="json")
        data["indices"] = inst.indices()
        data["canonical_order"] = canonical_order_check(inst)
        _echo_json(data)


def _render_report(report: VerificationReport) -> None:
    style = "green" if report.valid else "red"
    console.print(Panel(report.statement(), title=f"Template verification ({report.mode})", style=style))

    thresholds = Table(title="Row thresholds t = 2*lambda + mu")
    for column in ("Row", "lambda", "mu", "t", "Other denominators"):
        thresholds.add_column(column)
    for row in report.thresholds:
        thresholds.add_row(str(row.row), str(row.lam), str(row.mu), str(row.threshold), str(row.other_denominators))
    console.print(thresholds)

    console.print(f"Numeric sweep: primes {report.m} .. {report.numeric_sweep_max} ({report.primes_checked} checked)")
    console.print(f"Collision primes: {', '.join(map(str, report.collision_primes)) or 'none'}")
    if report.exceptions:
        exceptions = Table(title="Primes that are not valid")
        exceptions.add_column("q", style="cyan")
        exceptions.add_column("Status")
        exceptions.add_column("Weight")
        exceptions.add_column("Reason")
        for outcome in report.exceptions:
            status_style = "yellow" if outcome.status == PrimeStatus.EXCEPTIONAL else "red"
            exceptions.add_row(
                str(outcome.q), f"[{status_style}]{outcome.status}[/]", str(outcome.weight), outcome.reason or ""
            )
        console.print(exceptions)


@app.command()
def verify(
    template: Annotated[str, typer.Option("--template", "-t", help="Template JSON file or shipped name (m6, m7)")],
    mode: Annotated[VerificationMode, typer.Option("--mode", help="codeword or stopping")] = VerificationMode.CODEWORD,
    sweep: Annotated[Optional[int], typer.Option("--sweep", min=3, help="Largest prime checked numerically")] = None,
    workers: Annotated[Optional[int], typer.Option("--workers", min=1, help="Parallel sweep workers")] = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Verify a template for every prime; exit 3 when no valid range is established.

    Output: the verification report {"mode", "m", "w", "q0", "numeric_sweep_max",
    "symbolic_multiplicities", "thresholds", "collision_primes", "exceptions",
    "primes_checked"}.

    Examples:

      arrayldpc verify --template m6.json --mode codeword --sweep 1000
    """
    settings = _load_settings(config, verbose, quiet)
    overrides = settings.verify.model_dump()
    if sweep is not None:
        overrides["sweep_max"] = sweep
    if workers is not None:
        overrides["workers"] = workers
    with _handle_errors():
        t = _template_arg(template)
        verifier = VerifierFactory.create_verifier(mode, overrides)
        with verifier:
            report = verifier.verify(t)
    if pretty:
        _render_report(report)
    else:
        _echo_json(report.model_dump(mode="json"))
    if not report.valid:
        raise typer.Exit(EXIT_VERIFICATION_FAILED)


@app.command()
def table(
    qmax: Annotated[int, typer.Option("--qmax", min=3, help="Largest prime")],
    qmin: Annotated[Optional[int], typer.Option("--qmin", min=3, help="Smallest prime")] = None,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the CSV here")] = None,
    pretty: PrettyOption = False,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    quiet: QuietOption = False,
) -> None:
    """Distance table for primes qmin..qmax as CSV (q,d7,d6,h5,d5,h4,d4).

    Examples:

      arrayldpc table --qmax 7
    """
    settings = _load_settings(config, verbose, quiet)
    with _handle_errors():
        analyzer = ArrayCodeAnalyzer(settings)
        with analyzer:
            rows = analyzer.build_table(qmax, qmin)
    text = table_to_csv(rows)
    if out:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        err_console.print(f"📄 Table written to: {out}", style="green")
    if pretty:
        rendered = Table(title="Minimum and stopping distances")
        rendered.add_column("q", style="cyan")
        for name, _, _ in TABLE_COLUMNS:
            rendered.add_column(name, style="magenta")
        for row in rows:
            rendered.add_row(str(row.q), *(row.cells[name] for name, _, _ in TABLE_COLUMNS))
        console.print(rendered)
    elif not out:
        typer.echo(text, nl=False)


@app.command(name="config")
def config_cmd(
    init: Annotated[bool, typer.Option("--init", help="Initialize a new configuration file")] = False,
    path: Annotated[Path, typer.Option("--path", "-p", help="Configuration file path")] = Path(DEFAULT_CONFIG_NAME),
    show: Annotated[bool, typer.Option("--show", help="Show current configuration")] = False,
) -> None:
    """Manage arrayldpc configuration.

    Examples:

      # Create a new configuration file
      arrayldpc config --init

      # Show current configuration
      arrayldpc config --show
    """
    if init:
        if path.exists():
            if not typer.confirm(f"Configuration file {path} already exists. Overwrite?"):
                err_console.print("❌ Operation cancelled", style="red")
                raise typer.Exit(EXIT_ERROR)
        ArrayLDPCConfig().to_file(path)
        console.print(f"✅ Configuration file created at: {path}", style="green")
        console.print("Edit the file to customize settings for your needs.")

    elif show:
        try:
            loaded, source = ArrayLDPCConfig.load_default(path if path.exists() else None)
        except ConfigurationError as e:
            err_console.print(f"❌ {e}", style="red")
            raise typer.Exit(EXIT_ERROR)
        console.print(f"📋 Configuration: {source or 'built-in defaults'}", style="blue")
        rendered = Table(title="arrayldpc Configuration")
        rendered.add_column("Setting", style="cyan", no_wrap=True)
        rendered.add_column("Value", style="magenta")
        for section, values in loaded.model_dump().items():
            for key, value in values.items():
                rendered.add_row(f"{section}.{key}", str(value))
        console.print(rendered)

    else:
        err_console.print("❌ Please specify an action: --init, --show", style="red")
        raise typer.Exit(EXIT_ERROR)


@app.command()
def validate(
    config_file: Annotated[Path, typer.Argument(help="Configuration file to validate")],
) -> None:
    """Validate an arrayldpc configuration file."""
    if not config_file.exists():
        err_console.print(f"❌ Configuration file not found: {config_file}", style="red")
        raise typer.Exit(EXIT_ERROR)
    try:
        loaded = ArrayLDPCConfig.from_file(config_file)
    except (ConfigurationError, DataFormatError) as e:
        err_console.print(f"❌ Configuration validation failed: {e}", style="red")
        raise typer.Exit(EXIT_ERROR)
    console.print(f"✅ Configuration file is valid: {config_file}", style="green")
    console.print(f"Enumeration limit: 2^{loaded.distance.enumeration_limit_bits}")
    console.print(f"Stopping cap: {loaded.distance.stopping_cap}")
    console.print(f"Verification sweep: {loaded.verify.sweep_max}")


def run(args: Optional[list[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = app(args=args, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return EXIT_ERROR
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    app()
