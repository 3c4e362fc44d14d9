"""Command line interface

use:
acbench gen-wn 4
acbench --json area q2 "a^2 s^-1 a^-1 s"
acbench --threads 4 --set search.max_states=50000 search "< a, b | a b, b >"
acbench trivialize 2 --out trace.json && acbench verify-trace trace.json

Exit codes: 0 success, 1 a negative answer, 2 unknown (a cap or the bit budget was hit),
3 usage, parse or IO errors.
"""
import dataclasses
import logging
import sys
from collections.abc import Sequence
from typing import Any, Optional

import click
import typer
from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from acbench import __version__, utils
from acbench.config import WorkbenchConfig, load_config
from acbench.constructions.doubling import DoublingSpec, build_Pw, build_tilde_Pw
from acbench.constructions.families import SEED_ALPHABET, delta_k, gen_V, gen_w
from acbench.constructions.indexed import IndexedWord, dagger_lift
from acbench.errors import ReplayError, TowerOverflowError
from acbench.io import (
    dumps,
    read_trace,
    read_word,
    resolve_presentation,
    write_json,
    write_trace,
)
from acbench.moves.factor_counts import fibonacci_bound
from acbench.moves.trace import verify_trivialization
from acbench.presentations.fixtures import FIXTURES, parse_fixture_spec
from acbench.presentations.presentation import delete_letter, measures
from acbench.search.bfs import SearchCaps, search
from acbench.search.sublevel import explore_sublevel
from acbench.solvers.area import AreaCaps, area_bfs, area_star_bounded, certificate_from_path
from acbench.solvers.britton import britton_solve, solve_Bm
from acbench.trivializer import acc_bounds, audit, plan_for_wn, trivialize_Pw
from acbench.words import format_word

log = utils.get_logger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3

app = typer.Typer(add_completion=False, no_args_is_help=True, pretty_exceptions_enable=False)


@dataclasses.dataclass
class CliState:
    config: WorkbenchConfig
    json: bool = False


def _state(ctx: typer.Context) -> CliState:
    assert isinstance(ctx.obj, CliState)
    return ctx.obj


def _emit(ctx: typer.Context, data: dict[str, Any], text: str) -> None:
    typer.echo(dumps(data) if _state(ctx).json else text)


def _area_caps(ctx: typer.Context, **fields: Any) -> AreaCaps:
    given = {k: v for k, v in fields.items() if v is not None}
    return dataclasses.replace(_state(ctx).config.area, **given)


def _search_caps(ctx: typer.Context, **fields: Any) -> SearchCaps:
    given = {k: v for k, v in fields.items() if v is not None}
    return dataclasses.replace(_state(ctx).config.search, **given)


@app.callback()
def main_options(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Print results as JSON"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads"),
    overrides: Optional[list[str]] = typer.Option(
        None, "--set", help="Config override such as area.max_states=1000"
    ),
    print_config: bool = typer.Option(False, "--print-config", help="Show the config tree"),
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="-v info, -vv debug"),
) -> None:
    """Andrews-Curtis workbench: words, presentations, area, moves and traces"""
    items = list(overrides or [])
    if threads is not None:
        items.append(f"num_workers={threads}")
    config = load_config(items)
    utils.configure_logging(verbose, config.log_level)
    if print_config:
        utils.print_config(
            OmegaConf.structured(config),
            fields=("area", "search", "bit_budget", "num_workers", "log_level"),
            save_path=None,
        )
    ctx.obj = CliState(config, json_output)


# words


@app.command("gen-wn")
def gen_wn_command(ctx: typer.Context, n: int) -> None:
    """Print w_n = x V_m x^-1 V_m^-1 over < x, t >, m = floor(log2 n)"""
    w = gen_w(n)
    _emit(ctx, {"n": n, "word": format_word(w), "length": len(w)}, format_word(w))


@app.command("gen-v")
def gen_v_command(ctx: typer.Context, m: int) -> None:
    """Print V_m"""
    v = gen_V(m)
    _emit(ctx, {"m": m, "word": format_word(v), "length": len(v)}, format_word(v))


@app.command("dagger")
def dagger_command(
    ctx: typer.Context,
    m: Optional[int] = typer.Argument(None, help="Lift V_m"),
    word: Optional[str] = typer.Option(None, help="Lift this word over x, t instead"),
) -> None:
    """Print the dagger lift over x_0, x_1, ... of V_m or of a word"""
    if (m is None) == (word is None):
        raise typer.BadParameter("Give either M or --word")
    source = gen_V(m) if m is not None else read_word(word or "", SEED_ALPHABET)
    lifted = dagger_lift(source)
    _emit(ctx, {"word": str(lifted), "length": len(lifted)}, str(lifted))


# presentations


@app.command("build-pw")
def build_pw_command(
    ctx: typer.Context,
    seed: str = "s2",
    a0: str = "t",
    a1: str = "x",
    w: Optional[str] = typer.Option(None, help="Word over the seed generators"),
    n: Optional[int] = typer.Option(None, help="Use w_n over S_k"),
    tilde: bool = typer.Option(False, help="Build the version with stable letters"),
) -> None:
    """Build the doubled presentation P_w"""
    presentation = resolve_presentation(seed)
    if (w is None) == (n is None):
        raise typer.BadParameter("Give either --w or --n")
    word = gen_w(n, presentation.generators) if n is not None else None
    if word is None:
        word = read_word(w or "", presentation.generators)
    spec = DoublingSpec(presentation, a0, a1, word)
    doubled = build_tilde_Pw(spec) if tilde else build_Pw(spec)
    data = {"presentation": doubled.to_dict(), "measures": measures(doubled).to_dict()}
    _emit(ctx, data, str(doubled))


@app.command("measures")
def measures_command(ctx: typer.Context, source: str) -> None:
    """Deficiency, lambda and balance of a presentation"""
    presentation = resolve_presentation(source)
    result = measures(presentation)
    text = (
        f"deficiency {result.deficiency}, lambda {result.lam}, "
        f"balanced {'yes' if result.balanced else 'no'}"
    )
    _emit(ctx, result.to_dict(), text)


@app.command("delete-letter")
def delete_letter_command(ctx: typer.Context, source: str, generator: str) -> None:
    """Delete a generator from a presentation"""
    presentation = resolve_presentation(source)
    reduced, counts = delete_letter(presentation, generator)
    _emit(ctx, {"presentation": reduced.to_dict(), "counts": list(counts)}, str(reduced))


@app.command("fixtures")
def fixtures_command(ctx: typer.Context, name: Optional[str] = typer.Argument(None)) -> None:
    """List the fixtures, or print one such as s2, b3 or "Q:m=2,k=3" """
    if name is None:
        data = {
            "fixtures": {key: (builder.__doc__ or "").strip() for key, builder in FIXTURES.items()}
        }
        _emit(ctx, data, "\n".join(f"{k}: {v}" for k, v in data["fixtures"].items()))
        return
    presentation = parse_fixture_spec(name)
    _emit(ctx, {"presentation": presentation.to_dict()}, str(presentation))


# solvers


@app.command("solve")
def solve_command(
    ctx: typer.Context,
    word: str,
    k: int = 2,
    indexed: bool = typer.Option(False, help="The word is over x_0, x_1, ... in B_m"),
    m: Optional[int] = typer.Option(None, help="Largest index allowed with --indexed"),
) -> None:
    """Decide whether a word is trivial in S_k, or in B_m with --indexed"""
    budget = _state(ctx).config.bit_budget
    data: dict[str, Any] = {"word": word, "k": k}
    if indexed:
        trivial = solve_Bm(IndexedWord.parse(word), k, m, budget)
    else:
        result = britton_solve(read_word(word, SEED_ALPHABET), k, bit_budget=budget)
        trivial = result.trivial
        data["reduced"] = result.reduced.to_dict()
    data["trivial"] = trivial
    _emit(ctx, data, "trivial" if trivial else "not trivial")
    if not trivial:
        raise typer.Exit(EXIT_NO)


@app.command("area")
def area_command(
    ctx: typer.Context,
    source: str,
    word: str,
    max_len: Optional[int] = None,
    max_states: Optional[int] = None,
    max_depth: Optional[int] = None,
    certificate: Optional[str] = typer.Option(None, help="Write a certificate to this path"),
) -> None:
    """Area of a word by breadth-first search, exact relative to the length window"""
    presentation = resolve_presentation(source)
    target = read_word(word, presentation.generators)
    caps = _area_caps(ctx, max_len=max_len, max_states=max_states, max_depth=max_depth)
    result = area_bfs(presentation, target, caps)
    text = f"area {result.area}" if result.exact else f"unknown, area >= {result.lower}"
    _emit(ctx, result.to_dict(), text)
    if not result.exact:
        raise typer.Exit(EXIT_UNKNOWN)
    if certificate is not None:
        write_json(certificate_from_path(presentation, target, result).to_dict(), certificate)


@app.command("prove")
def prove_command(
    ctx: typer.Context,
    source: str,
    word: str,
    max_len: Optional[int] = None,
    max_states: Optional[int] = None,
    out: Optional[str] = typer.Option(None, help="Write the certificate to this path"),
) -> None:
    """A minimal certificate expressing a word as a product of conjugated relators"""
    presentation = resolve_presentation(source)
    target = read_word(word, presentation.generators)
    caps = _area_caps(ctx, max_len=max_len, max_states=max_states)
    result = area_bfs(presentation, target, caps)
    if not result.exact:
        _emit(ctx, result.to_dict(), f"unknown, area >= {result.lower}")
        raise typer.Exit(EXIT_UNKNOWN)
    cert = certificate_from_path(presentation, target, result)
    if out is not None:
        write_json({"certificate": cert.to_dict()}, out)
    text = "\n".join(
        f"({format_word(s.conjugator)}) r{s.relator}^{s.sign} ({format_word(s.conjugator)})^-1"
        for s in cert.steps
    )
    _emit(ctx, {"certificate": cert.to_dict()}, text or "empty product")


@app.command("area-star")
def area_star_command(
    ctx: typer.Context,
    source: str,
    word: str,
    n_max: int = 2,
    max_len: Optional[int] = None,
    max_states: Optional[int] = None,
    progress: bool = False,
) -> None:
    """Bounded search over the powers of a word for the least area"""
    presentation = resolve_presentation(source)
    target = read_word(word, presentation.generators)
    caps = _area_caps(ctx, max_len=max_len, max_states=max_states)
    result = area_star_bounded(presentation, target, n_max, caps, progress)
    text = f"area* in [{result.exhausted_lower}, {result.upper}] over powers 1..{n_max}"
    _emit(ctx, result.to_dict(), text)
    if result.upper is None:
        raise typer.Exit(EXIT_UNKNOWN)


# moves and traces


@app.command("trivialize")
def trivialize_command(
    ctx: typer.Context,
    n: int,
    k: int = 2,
    method: str = "constructive",
    out: Optional[str] = typer.Option(None, help="Write the trace to this path"),
) -> None:
    """Trivialize P_(w_n) over S_k and audit the trace"""
    config = _state(ctx).config
    plan = plan_for_wn(n, k, method, config.area, config.search)
    if plan is None:
        _emit(ctx, {"n": n, "status": "unknown"}, "unknown: no certificate within the caps")
        raise typer.Exit(EXIT_UNKNOWN)
    trace = trivialize_Pw(plan)
    report = audit(plan, trace)
    if out is not None:
        write_trace(trace, out, {"audit": report.to_dict()})
    text = (
        f"{report.dihedral_count} moves (bound {report.bound}: acc_bar {report.acc_bar}, "
        f"certificate {report.certificate_steps}, eliminations {report.eliminations})"
    )
    _emit(ctx, {"n": n, "audit": report.to_dict(), "trace": trace.to_dict()}, text)


@app.command("verify-trace")
def verify_trace_command(ctx: typer.Context, path: str, exact_order: bool = False) -> None:
    """Replay a trace and check that it ends at the trivial presentation"""
    trace = read_trace(path)
    try:
        verification = verify_trivialization(trace, exact_order=exact_order)
    except ReplayError as e:
        _emit(ctx, {"accepted": False, "reason": str(e), "move": e.move_index}, f"rejected: {e}")
        raise typer.Exit(EXIT_NO)
    text = (
        f"accepted, {verification.dihedral_count} moves"
        if verification.accepted
        else f"rejected: {verification.reason}"
    )
    _emit(ctx, verification.to_dict(), text)
    if not verification.accepted:
        raise typer.Exit(EXIT_NO)


@app.command("fib-bound")
def fib_bound_command(ctx: typer.Context, m: int) -> None:
    """Largest factor count reachable in m moves from a 2-relator presentation"""
    bound = fibonacci_bound(m)
    _emit(ctx, {"m": m, "bound": bound}, str(bound))


@app.command("acc-bounds")
def acc_bounds_command(
    ctx: typer.Context,
    n: int,
    k: int = 2,
    corrected: bool = False,
    trace: Optional[str] = typer.Option(None, help="A trace whose length is the upper bound"),
) -> None:
    """Lower and upper bounds on the number of moves trivializing P_(w_n)"""
    budget = _state(ctx).config.bit_budget
    bounds = acc_bounds(n, k, read_trace(trace) if trace else None, corrected, budget)
    lower = bounds.lower if bounds.lower is not None else bounds.symbolic
    _emit(ctx, {"n": n, "k": k, **bounds.to_dict()}, f"lower {lower}, upper {bounds.upper}")
    if bounds.lower is None:
        raise typer.Exit(EXIT_UNKNOWN)


@app.command("delta")
def delta_command(ctx: typer.Context, m: int, k: int = 2) -> None:
    """Delta_k(m), the tower k^k^..^k"""
    value = delta_k(k, m, _state(ctx).config.bit_budget)
    _emit(ctx, {"k": k, "m": m, "value": value}, str(value))


# search


@app.command("search")
def search_command(
    ctx: typer.Context,
    source: str,
    max_len: Optional[int] = typer.Option(None, help="Longest relator kept"),
    max_conj: Optional[int] = typer.Option(None, help="Longest conjugator"),
    max_states: Optional[int] = None,
    max_depth: Optional[int] = None,
    out: Optional[str] = typer.Option(None, help="Write the trace to this path"),
) -> None:
    """Breadth-first search for a trivializing trace"""
    presentation = resolve_presentation(source)
    caps = _search_caps(
        ctx,
        max_relator_len=max_len,
        max_conjugator_len=max_conj,
        max_states=max_states,
        max_depth=max_depth,
    )
    result = search(presentation, caps)
    if result.trace is None:
        text = f"unknown after {result.states_expanded} states, depth {result.depth}"
        _emit(ctx, result.to_dict(), text)
        raise typer.Exit(EXIT_UNKNOWN)
    if out is not None:
        write_trace(result.trace, out)
    _emit(ctx, result.to_dict(), f"trivialized in {len(result.trace)} moves")


@app.command("sublevel")
def sublevel_command(
    ctx: typer.Context,
    k: int,
    m: int,
    max_conj: Optional[int] = typer.Option(None, help="Longest conjugator"),
    max_states: Optional[int] = None,
    csv: Optional[str] = typer.Option(None, help="Write the component table to this path"),
    progress: bool = False,
) -> None:
    """Capped components of the balanced presentations with total length <= m"""
    caps = _search_caps(ctx, max_conjugator_len=max_conj, max_states=max_states)
    report = explore_sublevel(k, m, caps, progress)
    frame = report.to_dataframe()
    if csv is not None:
        frame.to_csv(csv, index=False)
    header = (
        f"{len(report.entries)} presentations, {len(report.components)} capped components"
        + (" (partial enumeration)" if report.partial else "")
    )
    _emit(ctx, report.to_dict(), f"{header}\n{frame.to_string(index=False)}")
    if report.partial:
        raise typer.Exit(EXIT_UNKNOWN)


@app.command("version")
def version_command() -> None:
    typer.echo(__version__)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting"""
    command = typer.main.get_command(app)
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        code = command.main(args=args, prog_name="acbench", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except TowerOverflowError as e:
        typer.echo(f"unknown: {e}", err=True)
        return EXIT_UNKNOWN
    except (ValueError, OSError, OmegaConfBaseException) as e:
        logging.getLogger("acbench").debug("Command failed", exc_info=True)
        typer.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
