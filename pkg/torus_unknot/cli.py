"""
Command line front end.

    torus-unknot ucd 7 4 --minimal
    torus-unknot verify 6 4
    torus-unknot invariant jones --braid "1 1" --strands 2
    torus-unknot render 7 4 --highlight minimal -o k74.svg
    torus-unknot parity 7 4 --as-printed
    torus-unknot table --pmax 8 --qmax 8

Exit codes: 0 success or verified trivial, 1 verified nontrivial (or an
invalid certificate), 2 usage, parse or I/O errors, 3 inconclusive.
"""
import functools
import json
import logging
from dataclasses import dataclass

import click
import dlp_mpi
from tqdm import tqdm

from torus_unknot import keys
from torus_unknot.braids.word import InvalidBraidWord, parse_word
from torus_unknot.invariants.bracket import (
    DEFAULT_CROSSING_BUDGET, CrossingBudgetExceeded, jones_of_closure,
)
from torus_unknot.invariants.burau import alexander_of_closure
from torus_unknot.invariants.verdict import VerdictStatus
from torus_unknot.unknotting.certify import DEFAULT_SEARCH_BUDGET
from torus_unknot.unknotting.io import MalformedPlan, load_plan, plan_to_json
from torus_unknot.unknotting.parity import matlab_parity
from torus_unknot.unknotting.procedure import ToricParams, unknotting_number
from torus_unknot.unknotting.recursion import (
    UnknottingPlan, minimal_ucd, mirrored_plan, procedure_plan,
)
from torus_unknot.unknotting.verify import verify_plan
from torus_unknot.visualization.svg import render_braid, save_braid_svg
from torus_unknot.word_problem.certificate import (
    dump_certificate, first_illegal_step, load_certificate,
)
from torus_unknot.word_problem.handle_reduction import (
    DEFAULT_STEP_CAP, StepCapExceeded,
)

logger = logging.getLogger('cli')

EXIT_CODES = {
    VerdictStatus.TRIVIAL_UNLINK: 0,
    VerdictStatus.NONTRIVIAL: 1,
    VerdictStatus.INCONCLUSIVE: 3,
}


class CommandFailed(click.ClickException):
    exit_code = 2


@dataclass(frozen=True)
class RunConfig:
    crossing_budget: int = DEFAULT_CROSSING_BUDGET
    search_budget: int = DEFAULT_SEARCH_BUDGET
    step_cap: int = DEFAULT_STEP_CAP

    def __post_init__(self):
        if min(self.crossing_budget, self.search_budget, self.step_cap) < 1:
            raise ValueError(
                f'Budgets must be positive, got crossing budget '
                f'{self.crossing_budget}, search budget '
                f'{self.search_budget} and step cap {self.step_cap}'
            )


step_cap_option = click.option(
    '--step-cap', type=click.IntRange(min=1), default=DEFAULT_STEP_CAP,
    envvar='TORUS_UNKNOT_STEP_CAP', show_default=True,
    help='Maximal number of handle reductions per word problem.',
)


def budget_options(command):
    """
    --budget caps the number of crossings of the Jones polynomial and, unless
    --search-budget is given, the number of certificate steps. --step-cap
    bounds the handle reductions of every word problem.
    """
    @click.option(
        '--budget', type=int, default=DEFAULT_CROSSING_BUDGET,
        envvar='TORUS_UNKNOT_CROSSING_BUDGET', show_default=True,
        help='Maximal number of crossings for the Kauffman bracket.',
    )
    @click.option(
        '--search-budget', type=int, default=None,
        envvar='TORUS_UNKNOT_SEARCH_BUDGET',
        help=f'Maximal number of certificate steps '
             f'[default: {DEFAULT_SEARCH_BUDGET}, or --budget if that is '
             f'given on the command line].',
    )
    @step_cap_option
    @functools.wraps(command)
    def wrapper(*args, budget, search_budget, step_cap, **kwargs):
        ctx = click.get_current_context()
        if search_budget is None:
            source = ctx.get_parameter_source('budget')
            if source == click.core.ParameterSource.COMMANDLINE:
                search_budget = budget
            else:
                search_budget = DEFAULT_SEARCH_BUDGET
        try:
            config = RunConfig(budget, search_budget, step_cap)
        except ValueError as e:
            raise click.BadParameter(str(e)) from None
        return command(*args, config=config, **kwargs)
    return wrapper


def _params(p, q) -> ToricParams:
    try:
        return ToricParams(p, q)
    except ValueError as e:
        raise click.BadParameter(str(e)) from None


def _plan(p, q, mode, mirror) -> UnknottingPlan:
    _params(p, q)
    plan = minimal_ucd(p, q) if mode == 'minimal' else procedure_plan(p, q)
    if mirror:
        plan = mirrored_plan(plan)
    return plan


def _format_positions(positions):
    return '[' + ', '.join(map(str, positions)) + ']'


def _report_verdict(verdict):
    for name, record in verdict.evidence.items():
        if 'skipped' in record:
            click.echo(f'{name}: skipped ({record["skipped"]})')
        elif 'found' in record:
            found = f'found, {record["steps"]} steps' if record['found'] else 'not found'
            click.echo(f'{name}: {found}')
        else:
            match = 'match' if record['match'] else 'MISMATCH'
            click.echo(
                f'{name}: expected {record["expected"]}, '
                f'got {record["value"]} ({match})'
            )
    click.echo(f'verdict: {verdict.status.value}')


@click.group()
@click.option('--verbose', '-v', count=True, help='-v for info, -vv for debug.')
def cli(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level)


@cli.command()
@click.argument('p', type=int)
@click.argument('q', type=int)
@click.option('--minimal', 'mode', flag_value='minimal', default=True,
              help='Minimal unknotting crossing data from the recursion.')
@click.option('--procedure', 'mode', flag_value='procedure',
              help='U-crossing data of the toric braid.')
@click.option('--mirror', is_flag=True,
              help='Positions in the reversed braid.')
@click.option('--json', 'as_json', is_flag=True)
def ucd(p, q, mode, mirror, as_json):
    """Crossing data of the toric braid B(P, Q)."""
    plan = _plan(p, q, mode, mirror)
    if as_json:
        click.echo(json.dumps(plan_to_json(plan), indent=2))
        return
    braid = 'reverse(B' if mirror else 'B'
    closing = '))' if mirror else ')'
    click.echo(
        f'{braid}({p}, {q}{closing}: {plan.params.crossings} crossings, '
        f'd = {plan.d}, unknotting number {unknotting_number(p, q)}'
    )
    click.echo(f'{mode} crossing data: {_format_positions(plan.positions)}')
    click.echo(f'count: {len(plan)}')
    if plan.trace is not None:
        for step in plan.trace.steps:
            click.echo(
                f'step {step.index} ({step.parity}): p={step.p} q={step.q} '
                f'm={step.m} a={step.a}'
            )
        click.echo(f'terminal: {plan.trace.terminal}')


@cli.command()
@click.argument('p', type=int)
@click.argument('q', type=int)
@click.option('--plan', 'plan_path', type=click.Path(exists=True, dir_okay=False),
              help='JSON plan as written by `ucd --json`.')
@click.option('--mirror', is_flag=True,
              help='Verify the mirrored minimal data on the reversed braid.')
@click.option('--certificate', 'certificate_path',
              type=click.Path(exists=True, dir_okay=False),
              help='Check this certificate instead of searching for one.')
@click.option('--save-certificate', type=click.Path(dir_okay=False),
              help='Write the certificate that was found.')
@click.option('--json', 'as_json', is_flag=True)
@budget_options
def verify(p, q, plan_path, mirror, certificate_path, save_certificate,
           as_json, config):
    """Flips the crossing data in B(P, Q) and checks the closure."""
    ctx = click.get_current_context()
    _params(p, q)
    if plan_path is not None:
        try:
            plan = load_plan(plan_path, p=p, q=q)
        except MalformedPlan as e:
            raise CommandFailed(str(e)) from None
        if mirror:
            plan = mirrored_plan(plan)
    else:
        plan = _plan(p, q, 'minimal', mirror)

    certifier = None
    if certificate_path is not None:
        try:
            given = load_certificate(certificate_path)
        except (ValueError, InvalidBraidWord) as e:
            raise CommandFailed(f'{certificate_path}: {e}') from None

        def certifier(word):
            if given.start != word or len(given.end) != 0:
                logger.warning(
                    f'{certificate_path} does not lead from the flipped '
                    f'braid to an empty word'
                )
                return None
            try:
                index = first_illegal_step(given, step_cap=config.step_cap)
            except StepCapExceeded as e:
                logger.warning(f'{certificate_path}: undecided, {e}')
                return None
            if index is not None:
                logger.warning(f'{certificate_path}: step {index} is illegal')
                return None
            return given

    verdict = verify_plan(
        plan,
        crossing_budget=config.crossing_budget,
        search_budget=config.search_budget,
        step_cap=config.step_cap,
        certifier=certifier,
    )
    if save_certificate is not None and verdict.certificate is not None:
        try:
            dump_certificate(verdict.certificate, save_certificate)
        except OSError as e:
            raise CommandFailed(str(e)) from None

    if as_json:
        data = verdict.to_json()
        data[keys.POSITIONS] = list(plan.positions)
        data[keys.MIRRORED] = plan.mirrored
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(
            f'B({p}, {q}){" reversed" if plan.mirrored else ""}: '
            f'{len(plan)} crossing changes '
            f'{_format_positions(plan.positions)}, d = {plan.d}'
        )
        _report_verdict(verdict)
    ctx.exit(EXIT_CODES[verdict.status])


@cli.command()
@click.argument('kind', type=click.Choice(['alexander', 'jones']))
@click.option('--braid', 'text', required=True,
              help='Signed generator indices, e.g. "1 -2 1".')
@click.option('--strands', type=int, required=True)
@click.option('--budget', type=int, default=DEFAULT_CROSSING_BUDGET,
              envvar='TORUS_UNKNOT_CROSSING_BUDGET', show_default=True)
def invariant(kind, text, strands, budget):
    """Alexander or Jones polynomial of a braid closure."""
    try:
        word = parse_word(text, strands)
    except InvalidBraidWord as e:
        raise CommandFailed(str(e)) from None
    if kind == 'alexander':
        click.echo(str(alexander_of_closure(word)))
        return
    try:
        click.echo(str(jones_of_closure(word, crossing_budget=budget)))
    except CrossingBudgetExceeded as e:
        raise CommandFailed(str(e)) from None


@cli.command()
@click.argument('p', type=int)
@click.argument('q', type=int)
@click.option('--highlight', type=click.Choice(['minimal', 'procedure', 'none']),
              default='minimal', show_default=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              help='SVG file, stdout when omitted.')
def render(p, q, highlight, output):
    """
    SVG diagram of B(P, Q). With --highlight the selected crossing data are
    flipped and drawn in a distinct color.
    """
    if highlight == 'none':
        plan = UnknottingPlan(_params(p, q), ())
    else:
        plan = _plan(p, q, highlight, mirror=False)
    if output is None:
        click.echo(render_braid(plan.flipped_word(), plan.positions))
        return
    try:
        save_braid_svg(output, plan.flipped_word(), plan.positions)
    except OSError as e:
        raise CommandFailed(str(e)) from None


@cli.command()
@click.argument('p', type=int)
@click.argument('q', type=int)
@click.option('--corrected', 'mode', flag_value='corrected', default=True,
              help='Second data set as (p-1)q + 1 - W on the reversed braid.')
@click.option('--as-printed', 'mode', flag_value='as-printed',
              help='Second data set as (p-1)(q-1)/2 + 1 - W.')
@budget_options
def parity(p, q, mode, config):
    """Both data sets of the MATLAB routine for the torus knot K(P, Q)."""
    params = _params(p, q)
    try:
        report = matlab_parity(p, q)
    except ValueError as e:
        raise CommandFailed(str(e)) from None
    budgets = dict(
        crossing_budget=config.crossing_budget,
        search_budget=config.search_budget,
        step_cap=config.step_cap,
    )
    if not report.printed_by_program:
        click.echo('note: the program itself prints nothing for this input')
    primary = verify_plan(UnknottingPlan(params, report.primary), **budgets)
    click.echo(f'first: {_format_positions(report.primary)}')
    click.echo(f'  verdict: {primary.status.value}')
    if mode == 'as-printed':
        click.echo(f'second (as printed): {_format_positions(report.mirrored_as_printed)}')
        if not report.as_printed_in_range:
            click.echo(
                f'  invalid: {_format_positions(report.out_of_range)} outside '
                f'of 1..{report.crossings}'
            )
            return
        plan = UnknottingPlan(params, report.mirrored_as_printed, mirrored=True)
    else:
        click.echo(f'second (corrected): {_format_positions(report.mirrored_corrected)}')
        plan = UnknottingPlan(params, report.mirrored_corrected, mirrored=True)
    click.echo(f'  verdict on the reversed braid: {verify_plan(plan, **budgets).status.value}')


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@step_cap_option
def check(path, step_cap):
    """
    Replays a certificate file. Exits 1 when it is invalid and 3 when a
    group-rewrite cannot be decided within --step-cap handle reductions.
    """
    ctx = click.get_current_context()
    try:
        certificate = load_certificate(path)
    except (ValueError, InvalidBraidWord) as e:
        raise CommandFailed(f'{path}: {e}') from None
    try:
        index = first_illegal_step(certificate, step_cap=step_cap)
    except StepCapExceeded as e:
        click.echo(f'inconclusive: {e}')
        ctx.exit(3)
    if index is None:
        click.echo(f'valid {certificate.kind.value} certificate, {len(certificate)} steps')
        return
    if index == len(certificate):
        click.echo('invalid: the steps do not end at the end word')
    else:
        click.echo(f'invalid: step {index} is illegal')
    ctx.exit(1)


def _table_row(cell, config):
    p, q = cell
    plan = minimal_ucd(p, q)
    verdict = verify_plan(
        plan,
        crossing_budget=config.crossing_budget,
        search_budget=config.search_budget,
        step_cap=config.step_cap,
    )
    return (
        p, q, plan.d, unknotting_number(p, q),
        len(procedure_plan(p, q)), len(plan), verdict.status.value,
    )


@cli.command()
@click.option('--pmax', type=int, required=True)
@click.option('--qmax', type=int, required=True)
@budget_options
def table(pmax, qmax, config):
    """
    CSV table over 2 <= p <= PMAX, 1 <= q <= QMAX. Under mpiexec the cells
    are distributed over the processes.
    """
    if pmax < 2 or qmax < 1:
        raise click.BadParameter(f'Need pmax >= 2 and qmax >= 1, got {pmax}, {qmax}')
    cells = [(p, q) for p in range(2, pmax + 1) for q in range(1, qmax + 1)]
    mine = list(dlp_mpi.split_round_robin(cells))
    rows = [
        _table_row(cell, config)
        for cell in tqdm(mine, disable=not dlp_mpi.IS_MASTER)
    ]
    rows = dlp_mpi.gather(rows)
    if not dlp_mpi.IS_MASTER:
        return
    rows = sorted(row for part in rows for row in part)
    click.echo('p,q,d,unknotting_number,procedure_count,minimal_count,verdict')
    for row in rows:
        click.echo(','.join(map(str, row)))


if __name__ == '__main__':
    cli()
