"""Command-line interface for the schurpos library.

Every verb is a thin adapter: it parses its arguments with :mod:`schurpos.parsers`, calls
one library operation and prints the result as text or, with ``--json``, as the pydantic
model the HTTP surface returns.
"""
import logging
import sys
from typing import Any, Optional, Tuple

import click
from pydantic import BaseModel

import cfg
from schurpos import utils
from schurpos.bialternant import bialternant_numerator, bialternant_eval, vandermonde
from schurpos.conegeom import sample_positivity, schur_positivity_probability, slice_volume_ratio, slice_volumes
from schurpos.exactmath import RationalMatrix
from schurpos.exceptions import SchurPosError
from schurpos.glchar import char_schur_eval, sym_square_matrix
from schurpos.kostka import k_lambda, kostka_matrix, kostka_number
from schurpos.models import (BialternantResult, CharacterResult, KostkaNumber, PartitionList, PositivityResult,
                             ProbabilityResult, SliceRatioResult)
from schurpos.parsers import parse_composition, parse_partition, parse_rationals, parse_symexpr
from schurpos.partitions import partitions_of
from schurpos.symfunc import expand_in_variables, is_schur_positive, schur_to_monomial, to_schur_basis
from schurpos.tableaux import enumerate_ssyt, enumerate_ssyt_content

logger = logging.getLogger(__name__)

USAGE_EXIT_CODE = 1


class SchurPosGroup(click.Group):
    """Command group mapping errors to the documented exit codes.

    Library errors print ``error: <message>`` on stderr and exit with their ``exit_code``
    (1 for parse errors, 2 for domain errors); usage errors exit with 1 instead of click's 2.
    """

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs["standalone_mode"] = False
        try:
            rv = super().main(*args, **kwargs)
        except SchurPosError as exc:
            click.echo(f"error: {exc.msg}", err=True)
            sys.exit(exc.exit_code)
        except click.ClickException as exc:
            exc.show()
            sys.exit(USAGE_EXIT_CODE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(USAGE_EXIT_CODE)
        sys.exit(rv if isinstance(rv, int) else 0)


def _emit(as_json: bool, model: BaseModel, text: str) -> None:
    click.echo(model.json() if as_json else text)


def _approx(value: Any) -> str:
    return f"{utils.render_rational(value)} (≈ {utils.render_approx(float(value))})"


NUMERIC_ARGS = {"ignore_unknown_options": True}
"""Lets ``-1`` or ``-m[2,1]`` reach an argument instead of failing as an unknown option."""

json_option = click.option("--json", "as_json", is_flag=True, help="Print one JSON object instead of text.")


@click.group(cls=SchurPosGroup, help=cfg.APP_DESCRIPTION)
@click.version_option(cfg.APP_VERSION, prog_name=cfg.APP_NAME)
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages to stderr.")
def cli(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else cfg.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@cli.command("partitions", context_settings=NUMERIC_ARGS)
@click.argument("k", type=int)
@json_option
def partitions_cmd(k: int, as_json: bool) -> None:
    """List the partitions of K, largest first."""
    order = partitions_of(k)
    model = PartitionList(degree=k, count=len(order), partitions=[list(lam) for lam in order])
    _emit(as_json, model, "\n".join(utils.render_partition(lam) for lam in order))


@cli.command("ssyt", context_settings=NUMERIC_ARGS)
@click.argument("shape")
@click.argument("max_entry", type=int, required=False)
@click.option("--content", help="Enumerate the tableaux with this content instead, e.g. [2,1,1].")
@json_option
def ssyt_cmd(shape: str, max_entry: Optional[int], content: Optional[str], as_json: bool) -> None:
    """Semistandard tableaux of SHAPE with entries at most MAX_ENTRY."""
    if (max_entry is None) == (content is None):
        raise click.UsageError("give exactly one of MAX_ENTRY and --content")
    lam = parse_partition(shape)
    if content is not None:
        mu = parse_composition(content)
        tableaux = enumerate_ssyt_content(lam, mu)
        model = utils.tableau_list_model(lam, tableaux, content=mu)
    else:
        tableaux = enumerate_ssyt(lam, max_entry)
        model = utils.tableau_list_model(lam, tableaux, max_entry=max_entry)
    logger.debug("%d tableaux of shape %s", len(tableaux), lam)
    if as_json or tableaux:
        _emit(as_json, model, utils.render_tableaux(tableaux))


@cli.command("kostka")
@click.argument("shape")
@click.argument("content")
@json_option
def kostka_cmd(shape: str, content: str, as_json: bool) -> None:
    """The Kostka number K_{SHAPE,CONTENT}."""
    lam, mu = parse_partition(shape), parse_composition(content)
    value = kostka_number(lam, mu)
    _emit(as_json, KostkaNumber(shape=list(lam), content=list(mu), value=value), str(value))


@cli.command("kostka-matrix", context_settings=NUMERIC_ARGS)
@click.argument("k", type=int)
@json_option
def kostka_matrix_cmd(k: int, as_json: bool) -> None:
    """The Kostka matrix of degree K as JSON, with its partition order (indented unless --json)."""
    model = utils.kostka_matrix_model(kostka_matrix(k))
    click.echo(model.json() if as_json else model.json(indent=2))


@cli.command("schur-expand")
@click.argument("partition")
@click.option("-n", "--variables", type=click.IntRange(min=0), help="Write the expansion out in this many variables.")
@json_option
def schur_expand_cmd(partition: str, variables: Optional[int], as_json: bool) -> None:
    """The monomial expansion of s_PARTITION."""
    f = schur_to_monomial(parse_partition(partition))
    if variables is None:
        _emit(as_json, utils.sympoly_model(f), utils.render_sympoly(f))
        return
    expansion = expand_in_variables(f, variables)
    _emit(as_json, utils.expansion_model(expansion), utils.render_expansion(expansion))


@cli.command("to-schur", context_settings=NUMERIC_ARGS)
@click.argument("expression")
@json_option
def to_schur_cmd(expression: str, as_json: bool) -> None:
    """Rewrite EXPRESSION in the Schur basis."""
    g = to_schur_basis(parse_symexpr(expression).to_sympoly())
    _emit(as_json, utils.sympoly_model(g), utils.render_sympoly(g))


@cli.command("positivity", context_settings=NUMERIC_ARGS)
@click.argument("expression")
@json_option
def positivity_cmd(expression: str, as_json: bool) -> None:
    """Decide whether EXPRESSION is Schur positive."""
    f = parse_symexpr(expression).to_sympoly()
    g = to_schur_basis(f)
    positive = is_schur_positive(g)
    model = PositivityResult(positive=positive, input=utils.sympoly_model(f), schur_expansion=utils.sympoly_model(g))
    verdict = "Schur positive" if positive else "NOT Schur positive"
    _emit(as_json, model, f"{verdict}; s-expansion: {utils.render_sympoly(g)}")


@cli.command("probability", context_settings=NUMERIC_ARGS)
@click.argument("k", type=int)
@json_option
def probability_cmd(k: int, as_json: bool) -> None:
    """Exact probability that a random nonnegative degree-K polynomial is Schur positive."""
    p = schur_positivity_probability(k)
    model = ProbabilityResult(
        degree=k,
        probability=utils.render_rational(p),
        probability_approx=float(p),
        k_lambda=[k_lambda(lam) for lam in partitions_of(k)],
    )
    _emit(as_json, model, _approx(p))


@cli.command("slice-ratio", context_settings=NUMERIC_ARGS)
@click.argument("k", type=int)
@json_option
def slice_ratio_cmd(k: int, as_json: bool) -> None:
    """The same probability, as a ratio of slice volumes computed with determinants."""
    ratio = slice_volume_ratio(k)
    monomial_volume, schur_volume = slice_volumes(k)
    model = SliceRatioResult(
        degree=k,
        ratio=utils.render_rational(ratio),
        ratio_approx=float(ratio),
        monomial_slice_volume=utils.render_rational(monomial_volume),
        schur_slice_volume=utils.render_rational(schur_volume),
        dimension=len(partitions_of(k)) - 1,
    )
    text = "\n".join([
        f"ratio: {_approx(ratio)}",
        f"monomial slice volume: {utils.render_rational(monomial_volume)}",
        f"Schur slice volume: {utils.render_rational(schur_volume)}",
    ])
    _emit(as_json, model, text)


@cli.command("sample", context_settings=NUMERIC_ARGS)
@click.argument("k", type=int)
@click.option("--samples", type=click.IntRange(min=1), default=cfg.DEFAULT_SAMPLES, show_default=True)
@click.option("--seed", type=int, default=cfg.DEFAULT_SEED, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=cfg.WORKERS, show_default=True)
@json_option
def sample_cmd(k: int, samples: int, seed: int, workers: int, as_json: bool) -> None:
    """Monte Carlo estimate of the Schur-positivity probability of degree K."""
    report = sample_positivity(k, samples, seed, workers=workers)
    text = "\n".join([
        f"estimate: {utils.render_approx(report.estimate)} "
        f"({report.positive} of {report.samples} samples, standard error {utils.render_approx(report.standard_error)})",
        f"exact: {report.exact} (≈ {utils.render_approx(report.exact_approx)})",
    ])
    _emit(as_json, report, text)


@cli.command("bialternant", context_settings=NUMERIC_ARGS)
@click.argument("partition")
@click.argument("point")
@json_option
def bialternant_cmd(partition: str, point: str, as_json: bool) -> None:
    """Evaluate s_PARTITION at POINT (x1,x2,...) as a quotient of determinants."""
    mu, x = parse_partition(partition), parse_rationals(point)
    value = bialternant_eval(mu, x)
    model = BialternantResult(
        partition=list(mu),
        point=[utils.render_rational(v) for v in x],
        value=utils.render_rational(value),
        numerator=utils.render_rational(bialternant_numerator(mu, x)),
        vandermonde=utils.render_rational(vandermonde(x)),
    )
    _emit(as_json, model, utils.render_rational(value))


@cli.command("char")
@click.option("--sym2", "sym2", metavar="A,B,C,D", help="Character of S² at the 2x2 matrix [[A,B],[C,D]].")
@click.option("--schur", nargs=2, metavar="PARTITION EIGENVALUES", help="Character indexed by PARTITION at a spectrum.")
@json_option
def char_cmd(sym2: Optional[str], schur: Optional[Tuple[str, str]], as_json: bool) -> None:
    """Exact character values of polynomial representations of GL_n."""
    if (sym2 is None) == (schur is None):
        raise click.UsageError("give exactly one of --sym2 and --schur")
    if sym2 is not None:
        entries = parse_rationals(sym2)
        if len(entries) != 4:
            raise click.UsageError(f"--sym2 takes 4 entries, got {len(entries)}")
        image = sym_square_matrix(RationalMatrix(2, 2, entries))
        value = image.character()
        model = CharacterResult(
            kind="sym2",
            value=utils.render_rational(value),
            matrix=[[utils.render_rational(e) for e in row] for row in image.matrix.iter_rows()],
        )
    else:
        lam, eigenvalues = parse_partition(schur[0]), parse_rationals(schur[1])
        value = char_schur_eval(lam, eigenvalues)
        model = CharacterResult(
            kind="schur",
            value=utils.render_rational(value),
            partition=list(lam),
            eigenvalues=[utils.render_rational(v) for v in eigenvalues],
        )
    _emit(as_json, model, utils.render_rational(value))


if __name__ == "__main__":
    cli()
