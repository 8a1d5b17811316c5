import json
import logging
import sys
from enum import Enum
from io import StringIO
from pathlib import Path
from typing import Any, NoReturn, Optional

import pandas as pd
import typer

from shadow_states.bijection import bijection_table, varphi, varphi_inv, verify_bijection
from shadow_states.common import MAX_BRUTEFORCE_ENV, BruteForceCapError, DomainError
from shadow_states.genpoly import PolyMethod, coefficient_table, family_poly, poly_bruteforce
from shadow_states.knot_families import Family, FamilySpec, build, crossing_labels
from shadow_states.rosette import (
    DEFAULT_RADIUS,
    Rosette,
    euler_region_count,
    region_codes,
    render_svg,
)
from shadow_states.shadow_core import state_census
from shadow_states.state_words import WordMethod, WordSet, gen_F2, gen_P, gen_T2, gen_Tau2
from shadow_states.verification import run_suite

EXIT_VERIFY_FAILED = 1
EXIT_CAP = 3
EXIT_DISAGREEMENT = 4
EXIT_DOMAIN = 5

app = typer.Typer(
    add_completion=False,
    help="State censuses of knot shadows, bitonic region codes and the bijection between them.",
)


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class WordSetName(str, Enum):
    P = "P"
    T2 = "T2"
    F2 = "F2"
    TAU2 = "Tau2"


WORD_METHODS = {
    WordSetName.P: (WordMethod.CLOSED, WordMethod.RECURSIVE, WordMethod.FILTER),
    WordSetName.T2: (WordMethod.CLOSED,),
    WordSetName.F2: (WordMethod.CLOSED, WordMethod.RECURSIVE),
    WordSetName.TAU2: (WordMethod.DEFINITION, WordMethod.PSI_RECURSION, WordMethod.PSI_STEP),
}
# 2^n words for the filter; only run it when asked for small n.
FILTER_AUTO_MAX_N = 20


def _generate(name: WordSetName, n: int, method: WordMethod) -> WordSet:
    match name:
        case WordSetName.P:
            return gen_P(n, method)
        case WordSetName.T2:
            return gen_T2(n)
        case WordSetName.F2:
            return gen_F2(n, method)
        case WordSetName.TAU2:
            return gen_Tau2(n, method)
    raise ValueError(name)


def _emit_json(command: str, params: dict[str, Any], result: Any):
    typer.echo(
        json.dumps({"command": command, "params": params, "result": result}, sort_keys=True, indent=2)
    )


def _emit_csv(frame: pd.DataFrame, header: bool = True):
    buffer = StringIO()
    frame.to_csv(buffer, index=False, header=header, lineterminator="\n")
    typer.echo(buffer.getvalue(), nl=False)


def _fail(message: str, code: int) -> NoReturn:
    typer.echo(message, err=True)
    raise typer.Exit(code=code)


def _check_method(family: Family, method: PolyMethod):
    if family == Family.FIGURE_EIGHT and method != PolyMethod.BRUTEFORCE:
        raise typer.BadParameter(
            "the figure-eight shadow only supports --method bruteforce", param_hint="--method"
        )


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr."),
):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


@app.command()
def poly(
    family: Family = typer.Argument(..., help="Shadow family."),
    n: int = typer.Argument(0, min=0, help="Number of half-twists."),
    method: PolyMethod = typer.Option(PolyMethod.CLOSED, help="How to compute D(x)."),
    format: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
):
    """Coefficients of the generating polynomial, constant term first."""
    if family == Family.FIGURE_EIGHT:
        method = PolyMethod.BRUTEFORCE if method == PolyMethod.CLOSED else method
    _check_method(family, method)
    try:
        if method == PolyMethod.BRUTEFORCE:
            half_twists = 0 if family == Family.FIGURE_EIGHT else n
            result = poly_bruteforce(build(FamilySpec(family, half_twists)))
        else:
            result = family_poly(family, n, method)
    except BruteForceCapError as e:
        _fail(str(e), EXIT_CAP)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--method")

    params = {"family": family.value, "n": n, "method": method.value}
    match format:
        case OutputFormat.JSON:
            _emit_json("poly", params, result.to_list())
        case OutputFormat.CSV:
            _emit_csv(pd.DataFrame([result.to_list()]), header=False)
        case OutputFormat.TEXT:
            typer.echo(str(result))


@app.command()
def table(
    family: Family = typer.Argument(...),
    n_max: int = typer.Argument(..., min=0),
    format: OutputFormat = typer.Option(OutputFormat.CSV, "--format"),
):
    """Coefficient table of a family for n = 0..n_max."""
    if family == Family.FIGURE_EIGHT:
        raise typer.BadParameter("the figure-eight shadow has no table", param_hint="FAMILY")
    frame = coefficient_table(family, n_max)
    match format:
        case OutputFormat.JSON:
            _emit_json(
                "table", {"family": family.value, "n_max": n_max}, frame.values.tolist()
            )
        case OutputFormat.CSV:
            _emit_csv(frame.reset_index())
        case OutputFormat.TEXT:
            typer.echo(frame.to_string())


@app.command()
def states(
    family: Family = typer.Argument(...),
    n: int = typer.Argument(0, min=0),
    components: Optional[int] = typer.Option(None, min=1, help="Only states with this many loops."),
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """State words of a shadow grouped by their number of loops."""
    try:
        spec = FamilySpec(family, 0 if family == Family.FIGURE_EIGHT else n)
        census = state_census(build(spec))
    except BruteForceCapError as e:
        _fail(str(e), EXIT_CAP)

    if components is not None:
        census = {components: census.get(components, [])}
    params = {"family": family.value, "n": n, "components": components}
    match format:
        case OutputFormat.JSON:
            _emit_json("states", params, {str(k): words for k, words in census.items()})
        case OutputFormat.CSV:
            rows = [(k, w) for k, words in census.items() for w in words]
            _emit_csv(pd.DataFrame(rows, columns=["components", "word"]))
        case OutputFormat.TEXT:
            if components is not None:
                typer.echo("\n".join(census[components]))
                return
            labels = crossing_labels(spec)
            if labels:
                typer.echo(f"crossings: {' '.join(labels)}")
            for k, words in census.items():
                typer.echo(f"k={k} ({len(words)}): {' '.join(words)}")


@app.command()
def words(
    name: WordSetName = typer.Argument(..., metavar="SET"),
    n: int = typer.Argument(..., min=0),
    method: Optional[WordMethod] = typer.Option(
        None, help="Generator to use; by default every generator runs and must agree."
    ),
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Word sets: region codes P, or the 2-states T2, F2 and Tau2."""
    if method is not None and method not in WORD_METHODS[name]:
        allowed = ", ".join(m.value for m in WORD_METHODS[name])
        raise typer.BadParameter(f"{name.value} supports {allowed}", param_hint="--method")

    if method is not None:
        result = _generate(name, n, method)
    else:
        methods = [
            m
            for m in WORD_METHODS[name]
            if not (m == WordMethod.FILTER and n > FILTER_AUTO_MAX_N)
        ]
        results = {m: _generate(name, n, m) for m in methods}
        result = results[methods[0]]
        for m, other in results.items():
            if other != result:
                difference = result.symmetric_difference(other)
                _fail(
                    f"{methods[0].value} and {m.value} disagree on: {' '.join(difference)}",
                    EXIT_DISAGREEMENT,
                )

    params = {"set": name.value, "n": n, "method": method.value if method else None}
    match format:
        case OutputFormat.JSON:
            _emit_json("words", params, list(result))
        case OutputFormat.CSV:
            _emit_csv(pd.DataFrame({"word": list(result)}))
        case OutputFormat.TEXT:
            typer.echo("\n".join(result))


@app.command()
def bijection(
    n: int = typer.Argument(..., min=0),
    map_word: Optional[str] = typer.Option(None, "--map", help="Region code of n + 1 circles."),
    inverse: Optional[str] = typer.Option(None, "--inverse", help="2-state of the n-twist knot."),
    show_table: bool = typer.Option(False, "--table", help="Print the full pairing table."),
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Map region codes to twist knot 2-states and back."""
    params = {"n": n, "map": map_word, "inverse": inverse, "table": show_table}
    try:
        if map_word is not None:
            if len(map_word) != n + 1:
                raise DomainError(map_word, f"P (length {n + 1})")
            result: Any = varphi(map_word)
        elif inverse is not None:
            if len(inverse) != n + 2:
                raise DomainError(inverse, f"Tau2 (length {n + 2})")
            result = varphi_inv(inverse)
        elif show_table:
            frame = bijection_table(n)
            if format == OutputFormat.JSON:
                _emit_json("bijection", params, frame.to_dict(orient="list"))
            else:
                _emit_csv(frame)
            return
        else:
            report = verify_bijection(n)
            result = {
                "is_bijection": report.is_bijection,
                "domain_size": report.domain_size,
                "image_size": report.image_size,
                "counterexamples": report.counterexamples,
            }
    except DomainError as e:
        _fail(f"error: {e}", EXIT_DOMAIN)
    except BruteForceCapError as e:
        _fail(str(e), EXIT_CAP)

    if format == OutputFormat.JSON:
        _emit_json("bijection", params, result)
    elif isinstance(result, dict):
        for key in sorted(result):
            typer.echo(f"{key}: {result[key]}")
    else:
        typer.echo(result)


def _radius(value: float) -> float:
    if not value > 1:
        raise typer.BadParameter(f"radius must be > 1, got {value}")
    return value


@app.command()
def rosette(
    n: int = typer.Argument(..., min=1),
    radius: float = typer.Option(DEFAULT_RADIUS, "--radius", "-r", callback=_radius),
    codes: bool = typer.Option(False, "--codes", help="List the region codes."),
    svg: Optional[Path] = typer.Option(None, "--svg", help="Write an SVG drawing here."),
    labels: bool = typer.Option(False, "--labels", help="Label regions in the SVG."),
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Regions of the rosette of n circles, found by sampling the arrangement."""
    shape = Rosette.regular(n, radius)
    found = region_codes(shape)
    if n >= 2 and euler_region_count(shape) != len(found):
        logging.warning(
            "Sampled %d regions but Euler's formula gives %d", len(found), euler_region_count(shape)
        )
    if svg is not None:
        svg.write_text(render_svg(shape, labels=labels))

    params = {"n": n, "radius": radius}
    match format:
        case OutputFormat.JSON:
            result: dict[str, Any] = {"regions": len(found)}
            if codes:
                result["codes"] = list(found)
            _emit_json("rosette", params, result)
        case OutputFormat.CSV:
            _emit_csv(pd.DataFrame({"code": list(found)}))
        case OutputFormat.TEXT:
            typer.echo(f"regions: {len(found)}")
            if codes:
                typer.echo("\n".join(found))


@app.command()
def verify(
    max_n: int = typer.Option(10, "--max-n", min=0),
    geometry: bool = typer.Option(False, "--geometry", help="Also check rosettes."),
    profile: bool = typer.Option(False, "--profile", help="Print a profile to stderr."),
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Run every cross-check and print PASS, FAIL or SKIP for each.

    Exits with 1 when a check failed and with 3 when checks were skipped
    because of the brute-force cap.
    """
    if profile:
        from pyinstrument import Profiler

        profiler = Profiler()
        profiler.start()
        report = run_suite(max_n=max_n, geometry=geometry)
        profiler.stop()
        typer.echo(profiler.output_text(unicode=False, color=False), err=True)
    else:
        report = run_suite(max_n=max_n, geometry=geometry)

    match format:
        case OutputFormat.JSON:
            _emit_json(
                "verify",
                {"max_n": max_n, "geometry": geometry},
                report.to_frame().to_dict(orient="records"),
            )
        case OutputFormat.CSV:
            _emit_csv(report.to_frame())
        case OutputFormat.TEXT:
            for result in report.results:
                typer.echo(f"{result.status.value} {result.name}")

    failure = report.first_failure
    if failure is not None:
        _fail(f"first failure: {failure.name}: {failure.detail}", EXIT_VERIFY_FAILED)
    if report.skipped:
        _fail(
            f"{len(report.skipped)} checks skipped by the brute-force cap; "
            f"raise {MAX_BRUTEFORCE_ENV} to run them",
            EXIT_CAP,
        )


def main():
    app()
