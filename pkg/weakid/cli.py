"""
Command-line interface for weakid
"""

import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from . import __version__
from .certify import (
    SUITES,
    IdentityResult,
    certified_multidegrees,
    certify_basis,
    first_nonzero_entry,
    quotient_dimension_oracle,
    verify_conjugated,
    verify_identity_suite,
)
from .config import CliConfig, Config
from .errors import (
    GroupSpecError,
    NormalFormAlphabetError,
    OracleBudgetExceeded,
    ParseError,
    StepBudgetExceeded,
)
from .groups import GroupSpec, check_irreducible, operator_table, shipped_generators
from .gpoly import evaluate, format_polynomial, parse
from .rewrite import enumerate_B, normalize, rules_for

console = Console()
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_BUDGET = 4

# one representative per family for the `groups` listing
LISTED_GROUPS = ("Zn:1", "Zn:2", "Zn:3", "Zn:4", "Dn:3", "Dn:4", "A4", "S4", "A5")


@contextmanager
def exit_codes() -> Iterator[None]:
    """Map library exceptions onto the documented exit codes."""
    try:
        yield
    except (StepBudgetExceeded, OracleBudgetExceeded) as e:
        console.print(f"[red]Budget exhausted:[/red] {e}")
        raise SystemExit(EXIT_BUDGET)
    except (ParseError, GroupSpecError, NormalFormAlphabetError, ValidationError) as e:
        raise click.UsageError(str(e))
    except click.ClickException:
        raise
    except Exception as e:
        logger.debug("internal error", exc_info=True)
        console.print(f"[red]Internal error:[/red] {type(e).__name__}: {escape(str(e))}")
        raise SystemExit(EXIT_INTERNAL)


def _parse_group(ctx, param, value: Optional[str]) -> Optional[GroupSpec]:
    if value is None:
        return None
    try:
        return GroupSpec.parse(value)
    except GroupSpecError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def _parse_multidegree(ctx, param, value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        variables = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected a comma list of variable indices, got '{value}'", ctx=ctx, param=param)
    if not variables or any(v < 1 for v in variables):
        raise click.BadParameter("variable indices start at 1", ctx=ctx, param=param)
    return variables


group_option = click.option(
    "--group", "-g", "spec", required=True, callback=_parse_group,
    help="Group: Zn:<n>, Dn:<n>, A4, S4 or A5",
)
format_option = click.option(
    "--format", "-f", "fmt", type=click.Choice(["text", "json"]), default=None, help="Report format",
)


def _config(ctx: click.Context, spec: GroupSpec) -> Config:
    """Config file or group preset, with the global flags applied on top."""
    options = ctx.obj or {}
    path = options.get("config_path")
    config = Config.from_json(path) if path else Config.for_group(spec)
    if options.get("seed") is not None:
        config.output.seed = options["seed"]
    if options.get("step_budget") is not None:
        config.rewrite.step_budget = options["step_budget"]
    return config


def _report_results(results: List[IdentityResult], title: str) -> None:
    table = Table(title=title)
    table.add_column("identity", style="cyan")
    table.add_column("status")
    table.add_column("detail", style="dim")
    for r in results:
        table.add_row(escape(r.tag), "[green]ok[/green]" if r.ok else "[red]FAIL[/red]", escape(r.detail))
    console.print(table)


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.option("--config", "config_path", type=click.Path(exists=True, path_type=Path),
              help="Load configuration JSON file (flags given explicitly override it)")
@click.option("--seed", type=int, default=None, help="Seed for every randomized suite (subcommand flags override it)")
@click.option("--step-budget", type=click.IntRange(1), default=None,
              help="Maximum rewrite steps per normalization (subcommand flags override it)")
@click.pass_context
def main(ctx, verbose, config_path, seed, step_budget):
    """weakid - exact weak G-identities of (M2, sl2)"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["seed"] = seed
    ctx.obj["step_budget"] = step_budget


@main.command()
@group_option
@click.argument("expression", required=False)
@click.option("--suite", "-s", "suites", multiple=True, type=click.Choice(list(SUITES)),
              help="Identity suite (repeatable); all applicable suites when neither suite nor expression is given")
@click.option("--conjugations", type=click.IntRange(0, 100), default=None,
              help="Re-run the suites under this many random conjugations")
@click.option("--seed", type=int, default=None, help="Seed for the random conjugating matrices")
@click.option("--step-budget", type=click.IntRange(1), default=None,
              help="Maximum rewrite steps when reducing a failing expression to normal form")
@format_option
@click.pass_context
def verify(ctx, spec, expression, suites, conjugations, seed, step_budget, fmt):
    """Check that an expression or identity suite vanishes on sl2

    Examples:
        weakid verify --group Zn:5 --suite lemma6

        weakid verify --group Dn:4 "e0(x1)*e0(x2)-e0(x2)*e0(x1)"

    A failing expression is also reduced to the normal-form basis.
    """
    with exit_codes():
        config = _config(ctx, spec)
        fmt = fmt or config.output.format
        seed = config.output.seed if seed is None else seed
        conjugations = config.output.conjugations if conjugations is None else conjugations
        residue = None

        if expression:
            f = parse(expression, spec)
            value = evaluate(f, spec)
            results = [IdentityResult(expression, value.is_zero(), first_nonzero_entry(value))]
            runs = []
            if not value.is_zero():
                budget = step_budget or config.rewrite.step_budget
                residue = format_polynomial(normalize(f, spec, step_budget=budget))
        else:
            selected = list(suites) or None
            results = verify_identity_suite(spec, selected)
            runs = verify_conjugated(spec, conjugations, seed, selected) if conjugations else []

    ok = all(r.ok for r in results) and all(r.ok for _, rs in runs for r in rs)
    if fmt == "json":
        click.echo(json.dumps({
            "group": spec.label,
            "identities": [{"tag": r.tag, "ok": r.ok} for r in results],
            "conjugations": [
                {"index": index, "ok": all(r.ok for r in rs)} for index, rs in runs
            ],
            "normal_form": residue,
            "verdict": "pass" if ok else "fail",
        }, indent=2))
    else:
        _report_results(results, f"{spec.label}")
        if residue is not None:
            console.print(f"normal form: {escape(residue)}")
        for index, rs in runs:
            failed = [r for r in rs if not r.ok]
            if failed:
                _report_results(failed, f"{spec.label} conjugation #{index}")
        if runs:
            console.print(f"🔁 {len(runs)} conjugated actions checked (seed {seed})")
        console.print("✅ [green]all identities hold[/green]" if ok else "❌ [red]not an identity[/red]")
    raise SystemExit(EXIT_OK if ok else EXIT_FALSE)


@main.command(name="normalize")
@group_option
@click.argument("expression")
@click.option("--step-budget", type=click.IntRange(1), default=None, help="Maximum rewrite steps")
@click.option("--check-steps", is_flag=True, help="Verify every rewrite step by evaluation")
@click.pass_context
def normalize_cmd(ctx, spec, expression, step_budget, check_steps):
    """Rewrite an expression into the normal-form basis

    Example:
        weakid normalize --group Zn:3 "x1"
    """
    with exit_codes():
        config = _config(ctx, spec)
        f = parse(expression, spec)
        result = normalize(
            f,
            spec,
            step_budget=step_budget or config.rewrite.step_budget,
            check_steps=check_steps,
        )
    click.echo(format_polynomial(result))


@main.command(name="enumerate")
@group_option
@click.option("--multidegree", "-m", required=True, callback=_parse_multidegree,
              help="Comma list of variable indices, e.g. 1,1,2")
@format_option
def enumerate_cmd(spec, multidegree, fmt):
    """List the normal-form monomials of one multidegree"""
    with exit_codes():
        basis = enumerate_B(spec, multidegree)
    if fmt == "json":
        click.echo(json.dumps({"group": spec.label, "degree": list(multidegree),
                               "monomials": [str(m) for m in basis]}, indent=2))
        return
    for m in basis:
        click.echo(str(m))
    console.print(f"📐 |B| = [bold]{len(basis)}[/bold] for {spec.label}, multidegree {list(multidegree)}")


@main.command()
@group_option
@click.option("--multidegree", "-m", required=True, callback=_parse_multidegree,
              help="Comma list of variable indices, e.g. 1,1,2")
@click.option("--budget", type=click.IntRange(1), default=None, help="Largest total degree accepted")
@click.pass_context
def oracle(ctx, spec, multidegree, budget):
    """Brute-force dimension of a multidegree component"""
    with exit_codes():
        config = _config(ctx, spec)
        dim = quotient_dimension_oracle(spec, multidegree, budget=budget or config.certify.oracle_budget)
    click.echo(str(dim))


@main.command()
@group_option
@click.option("--degree", "-d", type=click.IntRange(1, 6), default=None, help="Degree bound")
@click.option("--root-power", type=int, default=1, help="Use omega = zeta_n^k")
@click.option("--workers", type=click.IntRange(1, 32), default=None, help="Worker processes")
@click.option("--step-budget", type=click.IntRange(1), default=None, help="Maximum rewrite steps per word")
@click.option("--conjugations", type=click.IntRange(0, 100), default=None,
              help="Also check the identity suites under this many random conjugations")
@click.option("--seed", type=int, default=None, help="Seed for the random conjugating matrices")
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Also write the JSON certificate here")
@format_option
@click.pass_context
def certify(ctx, spec, degree, root_power, workers, step_budget, conjugations, seed, output, fmt):
    """Certify the identity list is a basis up to a degree bound

    Example:
        weakid certify --group Zn:3 --degree 3 --format json
    """
    with exit_codes():
        if root_power != 1:
            spec = GroupSpec.parse(spec.label, root_power=root_power)
        config = _config(ctx, spec)
        settings = CliConfig(
            group=spec.label,
            degree=degree or config.certify.degree_bound,
            format=fmt or config.output.format,
            seed=config.output.seed if seed is None else seed,
            step_budget=step_budget or config.rewrite.step_budget,
        )
        config.certify.degree_bound = settings.degree
        config.rewrite.step_budget = settings.step_budget
        config.output.seed = settings.seed
        if conjugations is not None:
            config.output.conjugations = conjugations
        if workers:
            config.certify.workers = workers

        total = len(certified_multidegrees(settings.degree))
        if settings.format == "text":
            console.print(f"🔎 Certifying [cyan]{spec.label}[/cyan] up to degree [yellow]{settings.degree}[/yellow]")
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            console=console,
            transient=True,
            disable=settings.format == "json",
        ) as progress:
            task = progress.add_task("multidegrees", total=total)
            certificate = certify_basis(
                spec,
                settings.degree,
                config=config,
                on_record=lambda record: progress.advance(task),
            )

    if output:
        output.write_text(certificate.to_json(), encoding="utf-8")
    if settings.format == "json":
        click.echo(certificate.to_json())
    else:
        table = Table(title=f"{spec.label} certificate")
        for column in ("multidegree", "|B|", "rank", "oracle", "spanning"):
            table.add_column(column)
        for record in certificate.multidegrees:
            style = None if record.ok else "red"
            table.add_row(
                ",".join(map(str, record.degree)),
                str(record.b_count),
                str(record.rank),
                str(record.oracle_dim),
                "ok" if record.spanning_ok else "FAIL",
                style=style,
            )
        console.print(table)
        failed_identities = [r.tag for r in certificate.identities if not r.ok]
        if failed_identities:
            console.print(f"[red]identities failing:[/red] {escape(', '.join(failed_identities))}")
        for record in certificate.failures():
            console.print(f"[red]{record.degree}:[/red] {escape(record.witness or '')}")
        if output:
            console.print(f"📁 Certificate saved: [green]{output}[/green]")
        verdict = "✅ [green]pass[/green]" if certificate.passed else "❌ [red]fail[/red]"
        console.print(f"{verdict} in {certificate.runtime_ms} ms")
    raise SystemExit(EXIT_OK if certificate.passed else EXIT_FALSE)


@main.command()
def groups():
    """List supported groups"""
    table = Table(title="Supported groups")
    for column in ("group", "order", "conductor", "alphabet", "generators", "irreducible on sl2"):
        table.add_column(column)
    for label in LISTED_GROUPS:
        spec = GroupSpec.parse(label)
        ops = operator_table(spec)
        report = check_irreducible(ops.group_elements())
        table.add_row(
            label,
            str(spec.order),
            str(spec.conductor),
            " ".join(ops.basis_names),
            str(len(shipped_generators(spec))),
            "yes" if report.irreducible else "no",
        )
    console.print(table)
    console.print("💡 Zn:<n> takes n >= 1 and Dn:<n> takes n >= 3")


@main.command()
@group_option
def rules(spec):
    """Print the rewrite rules of a group"""
    with exit_codes():
        ruleset = rules_for(spec)
    console.print(f"📜 [bold]{spec.label}[/bold] ({ruleset.family})")
    for line in ruleset.describe():
        click.echo(f"  {line}")


if __name__ == "__main__":
    main()
