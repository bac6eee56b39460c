"""
Main CLI entry point for canonical-basis.
"""

import logging
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

import click
from rich.console import Console
from rich.logging import RichHandler

from canonical_basis import __version__
from canonical_basis.core.errors import CanonicalBasisError, ParseError
from canonical_basis.core.rootdata import (
    CartanDatum,
    Weight,
    add_weights,
    parse_weight,
    weight_to_root_vector,
)

console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., Any])


def _parse_type(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[CartanDatum]:
    if value is None:
        return None
    try:
        return CartanDatum.parse(value)
    except ParseError as e:
        raise click.BadParameter(str(e)) from e


def _parse_weight_option(
    ctx: click.Context, param: click.Parameter, value: Optional[str]
) -> Optional[Weight]:
    if value is None:
        return None
    try:
        return parse_weight(value)
    except ParseError as e:
        raise click.BadParameter(str(e)) from e


def _check_highest(datum: CartanDatum, highest: Weight) -> Weight:
    if len(highest) != datum.rank:
        raise click.BadParameter(
            f"{datum.name} needs {datum.rank} coordinates, got {len(highest)}",
            param_hint="--highest",
        )
    if any(c < 0 for c in highest):
        raise click.BadParameter("highest weight must be dominant", param_hint="--highest")
    return highest


def _target_nu(datum: CartanDatum, highest: Weight, weight: Weight) -> Tuple[int, ...]:
    if len(weight) != datum.rank:
        raise click.BadParameter(
            f"{datum.name} needs {datum.rank} coordinates, got {len(weight)}",
            param_hint="--weight",
        )
    try:
        nu = weight_to_root_vector(datum, add_weights(highest, weight, -1))
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--weight") from e
    if any(c < 0 for c in nu):
        raise click.BadParameter(
            f"{weight} is not below the highest weight {highest}", param_hint="--weight"
        )
    return nu


def _module_overrides(ctx: click.Context, module_files: Sequence[str]) -> dict:
    from canonical_basis.modules.fileio import load_overrides

    settings = ctx.obj["settings"]
    return load_overrides(list(settings.module_files) + list(module_files))


def type_option(f: F) -> F:
    return click.option(
        "--type",
        "datum",
        required=True,
        callback=_parse_type,
        help="Cartan type, e.g. A3 or G2",
    )(f)


def highest_option(f: F) -> F:
    return click.option(
        "--highest",
        required=True,
        callback=_parse_weight_option,
        help="Highest weight in fundamental coordinates, e.g. 2,1",
    )(f)


def module_file_option(f: F) -> F:
    return click.option(
        "--module-file",
        "module_files",
        multiple=True,
        type=click.Path(exists=True, dir_okay=False),
        help="JSON module file supplying a fundamental module (repeatable)",
    )(f)


@click.group()
@click.version_option(version=__version__, prog_name="canonical-basis")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="YAML config file")
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool) -> None:
    """
    canonical-basis - Canonical bases of irreducible U_q(g)-modules.

    Computes G(b) for V(lambda) inside a tensor product of fundamental
    modules from Littelmann paths and triangular bar-correction.
    """
    from canonical_basis.core.config import load_settings

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )
    ctx.ensure_object(dict)
    try:
        ctx.obj["settings"] = load_settings(config_path)
    except CanonicalBasisError as e:
        console.print(f"[red]✗[/red] Error: {e}")
        raise click.Abort()


@cli.command()
@type_option
@highest_option
@click.option(
    "--weight",
    callback=_parse_weight_option,
    help="Target weight mu in fundamental coordinates (default: all weights)",
)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
@module_file_option
@click.option("--max-height", type=click.IntRange(min=0), help="Only weights up to this height")
@click.pass_context
def basis(
    ctx: click.Context,
    datum: CartanDatum,
    highest: Weight,
    weight: Optional[Weight],
    fmt: str,
    module_files: Tuple[str, ...],
    max_height: Optional[int],
) -> None:
    """
    Print canonical basis blocks.

    Example:
        canonical-basis basis --type G2 --highest 2,1 --weight -2,2
    """
    from canonical_basis.canonical import build_space, canonical_block, full_basis
    from canonical_basis.modules.builders import decompose_highest
    from canonical_basis.reporters.block_report import render_blocks

    highest = _check_highest(datum, highest)
    nu = _target_nu(datum, highest, weight) if weight is not None else None
    settings = ctx.obj["settings"]
    try:
        overrides = _module_overrides(ctx, module_files)
        fundamentals = decompose_highest(datum, highest)
        if nu is not None:
            space = build_space(datum, fundamentals, overrides)
            blocks = [canonical_block(datum, fundamentals, nu, space=space)]
        else:
            cap = max_height if max_height is not None else settings.max_height
            blocks = full_basis(
                datum, fundamentals, cap, overrides=overrides, workers=settings.workers
            )
        click.echo(render_blocks(blocks, fmt, as_list=nu is None))
        total = sum(len(b) for b in blocks)
        console.print(f"[green]✓[/green] {total} canonical basis elements in {len(blocks)} blocks")
    except (CanonicalBasisError, ValueError) as e:
        console.print(f"[red]✗[/red] Error: {e}")
        raise click.Abort()


@cli.command()
@type_option
@highest_option
@click.option("--format", "fmt", type=click.Choice(["dot", "text"]), default="dot")
@click.option("--max-height", type=click.IntRange(min=0), help="Stop below this height")
def crystal(datum: CartanDatum, highest: Weight, fmt: str, max_height: Optional[int]) -> None:
    """
    Export the path crystal of V(highest).

    Example:
        canonical-basis crystal --type A1 --highest 1 --format dot
    """
    from canonical_basis.crystal.littelmann import generate_crystal
    from canonical_basis.reporters.crystal_dot import render_crystal

    highest = _check_highest(datum, highest)
    try:
        graph = generate_crystal(datum, highest, max_height=max_height)
        click.echo(render_crystal(graph, fmt))
    except (CanonicalBasisError, ValueError) as e:
        console.print(f"[red]✗[/red] Error: {e}")
        raise click.Abort()


@cli.command()
@type_option
@highest_option
@click.option("--max-height", type=click.IntRange(min=0), help="Stop below this height")
def monomials(datum: CartanDatum, highest: Weight, max_height: Optional[int]) -> None:
    """
    List phi, eta and the adapted monomial of every path.

    Example:
        canonical-basis monomials --type G2 --highest 2,1 --max-height 7
    """
    from canonical_basis.crystal.littelmann import generate_crystal
    from canonical_basis.reporters.crystal_dot import render_monomials

    highest = _check_highest(datum, highest)
    try:
        graph = generate_crystal(datum, highest, max_height=max_height)
        click.echo(render_monomials(graph))
    except (CanonicalBasisError, ValueError) as e:
        console.print(f"[red]✗[/red] Error: {e}")
        raise click.Abort()


@cli.command()
@type_option
@highest_option
@module_file_option
@click.option("--max-height", type=click.IntRange(min=0), help="Height cap for block suites")
@click.pass_context
def verify(
    ctx: click.Context,
    datum: CartanDatum,
    highest: Weight,
    module_files: Tuple[str, ...],
    max_height: Optional[int],
) -> None:
    """
    Run the module, crystal, multiplicity and block property suites.

    Example:
        canonical-basis verify --type A2 --highest 1,1
    """
    from canonical_basis.reporters.verifier import run_verification

    highest = _check_highest(datum, highest)
    try:
        overrides = _module_overrides(ctx, module_files)
        report = run_verification(
            datum, highest, ctx.obj["settings"], overrides=overrides, max_height=max_height
        )
    except (CanonicalBasisError, ValueError) as e:
        console.print(f"[red]✗[/red] Error: {e}")
        raise click.Abort()

    for suite in report.suites:
        if suite.skipped:
            console.print(f"[yellow]-[/yellow] {suite.name}: skipped ({suite.skipped})")
        elif suite.passed:
            console.print(f"[green]✓[/green] {suite.name}")
        else:
            for failure in suite.failures:
                console.print(f"[red]✗[/red] {suite.name}: {failure}")
    if not report.passed:
        raise click.Abort()
    console.print("[green]✓[/green] All verification suites passed")


@cli.command()
@type_option
@highest_option
def dims(datum: CartanDatum, highest: Weight) -> None:
    """
    Print the Weyl dimension of V(highest).

    Example:
        canonical-basis dims --type G2 --highest 0,1
    """
    from canonical_basis.core.rootdata import weyl_dim

    highest = _check_highest(datum, highest)
    click.echo(str(weyl_dim(datum, highest)))


@cli.command()
@type_option
@click.option("--tableau", required=True, help="Tableau rows, e.g. 114/23/3")
def compare(datum: CartanDatum, tableau: str) -> None:
    """
    Compare our monomial of a type A tableau with the replacement-algorithm one.

    Example:
        canonical-basis compare --type A3 --tableau 114/23/3
    """
    from canonical_basis.core.rootdata import format_word
    from canonical_basis.typea.compare import compare_monomials
    from canonical_basis.typea.tableau import Tableau

    if datum.type_letter != "A":
        raise click.BadParameter("tableau comparison needs type A", param_hint="--type")
    try:
        t = Tableau.parse(tableau, n=datum.rank)
    except ParseError as e:
        raise click.BadParameter(str(e), param_hint="--tableau") from e
    if not t.is_semistandard():
        raise click.BadParameter("rows must be non-decreasing", param_hint="--tableau")
    try:
        result = compare_monomials(datum, t.shape_weight(), t)
    except (CanonicalBasisError, ValueError) as e:
        console.print(f"[red]✗[/red] Error: {e}")
        raise click.Abort()
    lines: List[str] = [
        f"tableau: {t.render()}",
        f"ours:    {result.ours.render()}  phi={format_word(result.ours.phi)}",
        f"lectof:  {result.lectof.render()}",
        f"same:    {'yes' if result.same else 'no'}",
    ]
    click.echo("\n".join(lines))


if __name__ == "__main__":
    cli()
