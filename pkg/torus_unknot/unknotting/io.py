import logging
from pathlib import Path

import paderbox as pb

from torus_unknot import keys
from torus_unknot.unknotting.procedure import ToricParams, unknotting_number
from torus_unknot.unknotting.recursion import (
    EuclidStep, EuclidTrace, ProvenanceRecord, UnknottingPlan,
)

logger = logging.getLogger('plan_io')


__all__ = [
    'MalformedPlan',
    'plan_to_json',
    'plan_from_json',
    'dump_plan',
    'load_plan',
]


class MalformedPlan(ValueError):
    pass


def plan_to_json(plan: UnknottingPlan) -> dict:
    data = {
        keys.P: plan.p,
        keys.Q: plan.q,
        keys.D: plan.d,
        keys.UNKNOTTING_NUMBER: unknotting_number(plan.p, plan.q),
        keys.POSITIONS: list(plan.positions),
        keys.PROVENANCE: [
            {
                keys.POSITION: record.position,
                keys.STEP: record.step,
                keys.SOURCE: record.source,
                keys.COPY: record.copy,
            }
            for record in plan.provenance
        ],
        keys.TRACE: [],
        keys.MIRRORED: plan.mirrored,
    }
    if plan.trace is not None:
        data[keys.TRACE] = [
            {
                keys.STEP: step.index,
                keys.P: step.p,
                keys.Q: step.q,
                keys.M: step.m,
                keys.A: step.a,
                keys.PARITY: step.parity,
            }
            for step in plan.trace.steps
        ]
        data[keys.TERMINAL] = plan.trace.terminal
    return data


def plan_from_json(data, p: int = None, q: int = None) -> UnknottingPlan:
    """
    Only the positions are required; p and q fall back to the arguments and
    must agree with them when both are given.
    """
    if not isinstance(data, dict) or keys.POSITIONS not in data:
        raise MalformedPlan(f'A plan needs a {keys.POSITIONS!r} list')
    try:
        for key, value in ((keys.P, p), (keys.Q, q)):
            if value is not None and data.get(key, value) != value:
                raise MalformedPlan(
                    f'Plan has {key}={data[key]}, expected {value}')
        params = ToricParams(int(data.get(keys.P, p)), int(data.get(keys.Q, q)))
        provenance = [
            ProvenanceRecord(
                int(record[keys.POSITION]),
                int(record[keys.STEP]),
                record[keys.SOURCE],
                record.get(keys.COPY),
            )
            for record in data.get(keys.PROVENANCE, [])
        ]
        trace = None
        if data.get(keys.TRACE):
            trace = EuclidTrace(
                tuple(
                    EuclidStep(
                        int(step[keys.STEP]), int(step[keys.P]),
                        int(step[keys.Q]), int(step[keys.M]),
                        int(step[keys.A]), step[keys.PARITY],
                    )
                    for step in data[keys.TRACE]
                ),
                data.get(keys.TERMINAL, ''),
            )
        positions = [int(position) for position in data[keys.POSITIONS]]
        if len(set(positions)) != len(positions):
            raise MalformedPlan(f'Duplicate positions in {positions}')
        mirrored = data.get(keys.MIRRORED, False)
        if not isinstance(mirrored, bool):
            raise MalformedPlan(
                f'{keys.MIRRORED!r} must be true or false, not {mirrored!r}')
        return UnknottingPlan(
            params,
            positions,
            provenance,
            trace,
            mirrored=mirrored,
        )
    except MalformedPlan:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedPlan(f'Malformed plan: {e!r}') from e


def dump_plan(plan: UnknottingPlan, path):
    pb.io.dump_json(plan_to_json(plan), path)
    logger.info(f'Wrote file: {path}')


def load_plan(path, p: int = None, q: int = None) -> UnknottingPlan:
    try:
        data = pb.io.load_json(Path(path))
    except ValueError as e:
        raise MalformedPlan(f'{path} is not a JSON file: {e}') from e
    return plan_from_json(data, p=p, q=q)
