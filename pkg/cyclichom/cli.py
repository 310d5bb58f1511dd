"""Batch command-line front end: homology, generators, Chern characters and the verification suite."""

from __future__ import annotations

import sys
from typing import Any, Dict, List, Optional, Sequence

import click
import structlog

from cyclichom.algebra.loader import resolve_algebra
from cyclichom.algebra.structure import Algebra
from cyclichom.chern.character import chern, chern_minus
from cyclichom.chern.generators import psi, psi_minus, u_generator, u_generator_minus
from cyclichom.chern.idempotents import load_idempotent
from cyclichom.core.config import settings
from cyclichom.core.config_loader import RunConfig, resolve_run_config
from cyclichom.core.enums import OutputFormat, Suite
from cyclichom.core.errors import (
    AlgebraValidationError,
    ConstructionError,
    CyclicHomError,
    FieldMismatchError,
    GuardrailExceededError,
    IdempotentError,
    InputFormatError,
)
from cyclichom.core.logging import setup_logging
from cyclichom.cyclic.homology import hc_minus0, hc_per0, hh, hc, s_map
from cyclichom.lab.runner import run_suite
from cyclichom.reports import render

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_GUARDRAIL = 3

INPUT_ERRORS = (InputFormatError, ConstructionError, AlgebraValidationError, IdempotentError, FieldMismatchError)


def exit_code_for(exc: CyclicHomError) -> int:
    if isinstance(exc, GuardrailExceededError):
        return EXIT_GUARDRAIL
    if isinstance(exc, INPUT_ERRORS):
        return EXIT_INPUT
    return EXIT_CHECK_FAILED


class CyclicHomGroup(click.Group):
    """Maps package errors to exit codes for every subcommand."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except CyclicHomError as exc:
            code = exit_code_for(exc)
            logger.debug("command failed", error=type(exc).__name__, exit_code=code)
            click.echo(f"error: {exc}", err=True)
            report = getattr(exc, "report", None)
            if report is not None:
                for line in report.lines():
                    click.echo(f"  {line}", err=True)
            raise click.exceptions.Exit(code) from exc


def _config(ctx: click.Context, **overrides: Any) -> RunConfig:
    obj = ctx.obj
    return resolve_run_config(obj["config"], {**obj["overrides"], **overrides})


def _algebra(ctx: click.Context, source: str, cfg: RunConfig) -> Algebra:
    # documents keep their declared field unless one was asked for
    explicit = ctx.obj["overrides"].get("field") is not None or not cfg.field.is_rationals
    return resolve_algebra(source, cfg.field if explicit else None)


def _write(cfg: RunConfig, lines: Sequence[str], records: Sequence[Dict[str, Any]]) -> None:
    click.echo(render.emit(cfg.output_format, lines, records), nl=False)


@click.group(cls=CyclicHomGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--field", "field", default=None, help="rationals (rat) or fp:<p>.")
@click.option("--cap", type=int, default=None, help="Largest admitted tensor-power dimension.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=None,
    help="Report format.",
)
@click.option("--force", is_flag=True, default=False, help="Override the size guardrail.")
@click.option("--config", "config_path", type=click.Path(), default=None, help="YAML run file.")
@click.option("--log-level", default=None, help="structlog level (stderr).")
@click.option("--log-format", type=click.Choice(["console", "json"]), default=None)
@click.pass_context
def cli(
    ctx: click.Context,
    field: Optional[str],
    cap: Optional[int],
    output_format: Optional[str],
    force: bool,
    config_path: Optional[str],
    log_level: Optional[str],
    log_format: Optional[str],
) -> None:
    """Hochschild and cyclic homology of finite-dimensional algebras."""
    setup_logging(log_level or settings.log_level, log_format or settings.log_format)
    ctx.obj = {
        "config": config_path,
        "overrides": {
            "field": field,
            "cap": cap,
            "output_format": output_format,
            "force": force or None,
        },
    }


@cli.command("hc")
@click.argument("algebra")
@click.option("--n", "n", type=click.IntRange(min=0), default=None, help="Degree of HC_n.")
@click.option("--minus", is_flag=True, default=False, help="Windowed HC_0^- instead of HC_n.")
@click.option("--per", is_flag=True, default=False, help="HC_0^per as the limit of the S-tower.")
@click.option("--window", type=click.IntRange(min=0), default=None, help="Window M for --minus.")
@click.option("--n-max", "n_max", type=click.IntRange(min=0), default=None, help="Tower height for --per.")
@click.pass_context
def hc_command(
    ctx: click.Context,
    algebra: str,
    n: Optional[int],
    minus: bool,
    per: bool,
    window: Optional[int],
    n_max: Optional[int],
) -> None:
    """Cyclic homology HC_n (or HC_0^- / HC_0^per) with representatives."""
    if minus and per:
        raise click.UsageError("--minus and --per are exclusive")
    if not (minus or per) and n is None:
        raise click.UsageError("missing option '--n'")
    cfg = _config(ctx, window=window, n_max=n_max)
    a = _algebra(ctx, algebra, cfg)
    if per:
        limit = hc_per0(a, cfg.n_max, cap=cfg.cap, force=cfg.force)
        if limit.approximate:
            click.echo(f"warning: S-tower of {a.name} not stabilized at n_max={cfg.n_max}", err=True)
        _write(cfg, render.tower_text(limit), [render.tower_record(limit)])
        return
    if minus:
        group = hc_minus0(a, cfg.window, cap=cfg.cap, force=cfg.force)
        if group.stabilized is False:
            click.echo(f"warning: HC_0^- of {a.name} not stabilized at window {cfg.window}", err=True)
    else:
        assert n is not None
        group = hc(a, n, cap=cfg.cap, force=cfg.force)
    _write(cfg, render.homology_text(group), [render.homology_record(group)])


@cli.command("hh")
@click.argument("algebra")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Degree of HH_n.")
@click.pass_context
def hh_command(ctx: click.Context, algebra: str, n: int) -> None:
    """Hochschild homology HH_n with representatives."""
    cfg = _config(ctx)
    a = _algebra(ctx, algebra, cfg)
    group = hh(a, n, cap=cfg.cap, force=cfg.force)
    _write(cfg, render.homology_text(group), [render.homology_record(group)])


@cli.command("un")
@click.option("--n", "n", type=click.IntRange(min=0), default=None, help="Print u^n.")
@click.option("--minus", is_flag=True, default=False, help="Print u^inf cut at row 2M.")
@click.option("--window", type=click.IntRange(min=0), default=None, help="Window M for --minus.")
@click.pass_context
def un_command(ctx: click.Context, n: Optional[int], minus: bool, window: Optional[int]) -> None:
    """Exact coefficients of the canonical cycle u^n over the ground field."""
    if not minus and n is None:
        raise click.UsageError("missing option '--n'")
    cfg = _config(ctx, window=window)
    if minus:
        chain = u_generator_minus(cfg.window, cfg.field)
        top, title = cfg.window, f"u^inf (window {cfg.window})"
    else:
        assert n is not None
        chain = u_generator(n, cfg.field)
        top, title = n, f"u^{n}"
    labels = render.slot_labels(top)
    field = chain.algebra.field
    items = list(chain.items())
    coefficients = ", ".join(field.format(x.coords.get(0, 0)) for _, _, x in items)
    slots = ", ".join(labels[q] for _, q, _ in items)
    lines = render.chain_text(title, chain, labels) + [f"coefficients ({coefficients}) slots ({slots})"]
    record = {"record": "generator", "name": title, "field": str(field), **render.chain_record(chain, labels)}
    _write(cfg, lines, [record])


@cli.command("chern")
@click.argument("algebra")
@click.option("--idempotent", "idempotent", required=True, help="YAML file or unit[:r] / E<i><i>:<r>.")
@click.option("--n", "n", type=click.IntRange(min=0), default=None, help="ch_n into HC_2n.")
@click.option("--minus", is_flag=True, default=False, help="ch^- into windowed HC_0^-.")
@click.option("--window", type=click.IntRange(min=0), default=None, help="Window M for --minus.")
@click.pass_context
def chern_command(
    ctx: click.Context, algebra: str, idempotent: str, n: Optional[int], minus: bool, window: Optional[int]
) -> None:
    """Chern character of an idempotent: chain, class and psi-coordinate over k.

    The psi-coordinate is printed only for the built-in ground field (k or
    ground_field). A YAML document is treated as a general algebra even when it
    is one-dimensional.
    """
    if not minus and n is None:
        raise click.UsageError("missing option '--n'")
    cfg = _config(ctx, window=window)
    a = _algebra(ctx, algebra, cfg)
    e = load_idempotent(idempotent, a)
    if minus:
        result = chern_minus(e, cfg.window, cap=cfg.cap, force=cfg.force)
        top, title = cfg.window, f"ch^-({idempotent}) window {cfg.window}"
    else:
        assert n is not None
        result = chern(e, n, cap=cfg.cap, force=cfg.force)
        top, title = n, f"ch_{n}({idempotent})"
    cls = result.homology_class
    field = a.field
    labels = render.slot_labels(top)
    lines = render.chain_text(title, result.chain, labels)
    lines.append(f"class in {cls.group.name}: [{', '.join(cls.format())}]")
    record: Dict[str, Any] = {
        "record": "chern",
        "name": title,
        "field": str(field),
        "algebra": a.name,
        "chain": render.chain_record(result.chain, labels),
        "class": render.class_record(cls),
    }
    if a.is_ground_field:
        coordinate = psi_minus(cls) if minus else psi(top, cls)
        lines.append(f"psi = {field.format(coordinate)}")
        record["psi"] = field.format(coordinate)
    _write(cfg, lines, [record])


@cli.command("smap")
@click.argument("algebra")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="S: HC_2n -> HC_2n-2.")
@click.pass_context
def smap_command(ctx: click.Context, algebra: str, n: int) -> None:
    """Matrix of the periodicity map S on homology."""
    cfg = _config(ctx)
    a = _algebra(ctx, algebra, cfg)
    source = hc(a, 2 * n, cap=cfg.cap, force=cfg.force)
    target = hc(a, 2 * n - 2, cap=cfg.cap, force=cfg.force)
    matrix = s_map(a, n, source, target)
    name = f"S: {source.name} -> {target.name}"
    lines = [f"field: {a.field}", f"algebra: {a.name}"] + render.matrix_text(name, a.field, matrix)
    record = {**render.matrix_record(name, a.field, matrix), "algebra": a.name}
    _write(cfg, lines, [record])


@cli.command("verify")
@click.option(
    "--suite",
    type=click.Choice([s.value for s in Suite]),
    default=Suite.ALL.value,
    show_default=True,
)
@click.option("--corpus", "expressions", multiple=True, help="Algebra expression or file; repeatable.")
@click.option("--strict", is_flag=True, default=False, help="Approximate and skipped verdicts count as failures.")
@click.option("--degree", type=click.IntRange(min=0), default=None, help="Degree for additivity and Morita checks.")
@click.option("--window", type=click.IntRange(min=0), default=None, help="Window M for HC_0^- checks.")
@click.option("--n-max", "n_max", type=click.IntRange(min=0), default=None, help="Top degree for generator checks.")
@click.pass_context
def verify_command(
    ctx: click.Context,
    suite: str,
    expressions: Sequence[str],
    strict: bool,
    degree: Optional[int],
    window: Optional[int],
    n_max: Optional[int],
) -> None:
    """Run the verification suite; exit 0 iff every check passes."""
    cfg = _config(ctx, strict=strict or None, degree=degree, window=window, n_max=n_max)
    reports, summary = run_suite(Suite(suite), cfg, list(expressions) or None)
    records = [render.check_record(r) for r in reports] + [render.summary_record(summary)]
    _write(cfg, render.checks_text(reports, summary), records)
    if not summary.ok(cfg.strict):
        ctx.exit(EXIT_CHECK_FAILED)


def main(argv: Optional[List[str]] = None) -> int:
    """Console entry point; returns the process exit code."""
    try:
        result = cli.main(args=argv, prog_name="cyclichom", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return EXIT_INPUT
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_INPUT
    return result if isinstance(result, int) else EXIT_OK


run = main


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
