import itertools
import math

import numpy as np
import pytest

import torus_unknot
from torus_unknot.braids import (
    apply_crossing_changes, component_count_of_closure, reverse, toric_braid,
)
from torus_unknot.invariants import (
    VerdictStatus, alexander_of_closure, jones_of_closure, unlink_jones,
)
from torus_unknot.unknotting import (
    MalformedPlan,
    ToricParams,
    UnknottingPlan,
    block_reduction_pair,
    dump_plan,
    euclid_trace,
    load_plan,
    matlab_parity,
    minimal_ucd,
    mirrored_plan,
    mirrored_ucd,
    plan_from_json,
    plan_to_json,
    procedure_plan,
    u_crossing_data,
    unknotting_number,
    verify_plan,
)
from torus_unknot.utils import get_rng
from torus_unknot.word_problem import is_identity


@pytest.mark.parametrize('p, q, expected', [
    (7, 4, (8, 12, 13, 14, 17, 18, 22, 23, 24)),
    (13, 3, (15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 35, 36)),
    (6, 4, (6, 10, 14, 15, 16, 18, 19, 20)),
])
def test_minimal_ucd_golden(p, q, expected):
    assert minimal_ucd(p, q).positions == expected


@pytest.mark.parametrize('p, q, expected', [
    (3, 4, (4, 5, 6)),
    (5, 3, (8, 11, 12)),
    (5, 1, ()),
    (3, 3, (4, 5, 6)),
])
def test_u_crossing_data_golden(p, q, expected):
    assert u_crossing_data(p, q) == expected


def test_euclid_trace():
    trace = euclid_trace(13, 3)
    assert [(s.p, s.q, s.m, s.a, s.parity) for s in trace.steps] == [
        (13, 3, 0, 3, 'odd'),
        (13, 3, 4, 1, 'even'),
    ]
    assert trace.terminal == 'p = 1 mod q'

    trace = euclid_trace(6, 4)
    assert [s.parity for s in trace.steps] == ['odd', 'even', 'odd']
    assert trace.terminal == 'remainder 0'


def test_invalid_parameters():
    for p, q in [(1, 3), (0, 1), (3, 0), (-2, 5)]:
        with pytest.raises(ValueError):
            ToricParams(p, q)
        with pytest.raises(ValueError):
            minimal_ucd(p, q)
        with pytest.raises(ValueError):
            u_crossing_data(p, q)
    with pytest.raises(ValueError):
        UnknottingPlan(ToricParams(3, 2), (5,))


grid = tuple(itertools.product(range(2, 31), range(1, 31)))


def test_cardinality_law():
    for p, q in grid:
        d = math.gcd(p, q)
        plan = minimal_ucd(p, q)
        assert len(plan) == ((p - 1) * (q - 1) + d - 1) // 2, (p, q)
        assert len(plan) == unknotting_number(p, q)
        assert all(1 <= x <= q * (p - 1) for x in plan.positions), (p, q)
        assert len(set(plan.positions)) == len(plan), (p, q)

        m, a = divmod(q, p)
        count = m * p * (p - 1) // 2 + a * (a - 1) // 2
        assert len(u_crossing_data(p, q)) == count, (p, q)


def test_procedure_is_minimal_exactly_for_q_near_multiples():
    for p, q in grid:
        if math.gcd(p, q) != 1:
            continue
        procedure = u_crossing_data(p, q)
        is_minimal = len(procedure) == unknotting_number(p, q)
        assert is_minimal == (q % p in (1, p - 1)), (p, q)
        if is_minimal:
            assert set(procedure) == set(minimal_ucd(p, q).positions), (p, q)


def test_links_with_q_multiple_of_p():
    for p in range(2, 9):
        for m in range(1, 4):
            assert set(u_crossing_data(p, m * p)) == set(
                minimal_ucd(p, m * p).positions)


def test_provenance():
    plan = minimal_ucd(13, 3)
    assert [record.position for record in plan.provenance] == list(plan.positions)
    assert {record.step for record in plan.provenance} == {1, 2}
    assert {record.source for record in plan.provenance} == {'remainder', 'reduction'}

    plan = procedure_plan(3, 8)
    copies = [record.copy for record in plan.provenance]
    assert copies == [1, 1, 1, 2, 2, 2, None]


end_to_end = tuple(itertools.product(range(2, 9), range(2, 9)))


@pytest.mark.parametrize('p, q', end_to_end)
def test_minimal_ucd_unknots(p, q):
    plan = minimal_ucd(p, q)
    word = plan.flipped_word()
    d = math.gcd(p, q)
    assert component_count_of_closure(word) == d
    assert alexander_of_closure(word) == (1 if d == 1 else 0)
    if len(word) <= 20:
        assert jones_of_closure(word) == unlink_jones(d)

    verdict = verify_plan(plan)
    assert verdict.status is not VerdictStatus.NONTRIVIAL
    if len(word) <= 20:
        assert verdict.status is VerdictStatus.TRIVIAL_UNLINK, verdict.evidence


@pytest.mark.parametrize('p, q', [(7, 4), (6, 4)])
def test_verify_plan_golden(p, q):
    verdict = verify_plan(minimal_ucd(p, q))
    assert verdict.status is VerdictStatus.TRIVIAL_UNLINK
    assert verdict.components == math.gcd(p, q)


def test_removing_a_position_never_unknots_the_trefoil():
    plan = minimal_ucd(3, 2)
    assert plan.positions == (4,)
    for position in plan.positions:
        reduced = UnknottingPlan(
            plan.params, tuple(x for x in plan.positions if x != position))
        assert verify_plan(reduced).status is not VerdictStatus.TRIVIAL_UNLINK


@pytest.mark.parametrize('p, q', [(3, 2), (2, 2)])
def test_unflipped_toric_braids_are_nontrivial(p, q):
    plan = UnknottingPlan(ToricParams(p, q), ())
    assert verify_plan(plan).status is VerdictStatus.NONTRIVIAL


def test_mirrored_ucd():
    plan = minimal_ucd(7, 4)
    assert mirrored_ucd(plan) == (1, 2, 3, 7, 8, 11, 12, 13, 17)

    mirrored = mirrored_plan(plan)
    assert mirrored.mirrored
    assert mirrored.braid() == reverse(toric_braid(7, 4))
    assert mirrored.flipped_word() == reverse(plan.flipped_word())
    assert mirrored_plan(mirrored).positions == plan.positions
    assert verify_plan(mirrored).status is VerdictStatus.TRIVIAL_UNLINK


def test_matlab_parity_golden():
    report = matlab_parity(7, 4)
    assert report.primary == (8, 12, 13, 14, 17, 18, 22, 23, 24)
    assert -14 in report.mirrored_as_printed
    assert not report.as_printed_in_range
    assert report.mirrored_corrected == (1, 2, 3, 7, 8, 11, 12, 13, 17)
    # three recursion steps, the program computes W but prints nothing
    assert not report.printed_by_program

    corrected = UnknottingPlan(
        ToricParams(7, 4), report.mirrored_corrected, mirrored=True)
    assert verify_plan(corrected).status is VerdictStatus.TRIVIAL_UNLINK

    report = matlab_parity(13, 3)
    assert set(report.primary) == set(minimal_ucd(13, 3).positions)
    assert report.printed_by_program

    with pytest.raises(ValueError):
        matlab_parity(6, 4)


def test_matlab_parity_random_pairs():
    rng = get_rng('matlab_parity')
    pairs = []
    while len(pairs) < 20:
        p, q = (int(v) for v in rng.integers(2, 16, size=2))
        if math.gcd(p, q) == 1:
            pairs.append((p, q))
    for p, q in pairs:
        report = matlab_parity(p, q)
        assert set(report.primary) == set(minimal_ucd(p, q).positions), (p, q)
        assert len(report.primary_raw) == unknotting_number(p, q)


def test_plan_json(tmp_path):
    plan = minimal_ucd(6, 4)
    data = plan_to_json(plan)
    assert data['positions'] == [6, 10, 14, 15, 16, 18, 19, 20]
    assert data['d'] == 2
    assert data['unknotting_number'] == 8
    assert plan_from_json(data) == plan

    path = tmp_path / 'plan.json'
    dump_plan(plan, path)
    assert load_plan(path, 6, 4) == plan

    # positions only
    assert plan_from_json({'positions': [4]}, 3, 2).positions == (4,)
    assert not plan_from_json({'positions': [4], 'mirrored': False}, 3, 2).mirrored

    plan = procedure_plan(7, 4)
    assert plan.trace == minimal_ucd(7, 4).trace
    assert plan_from_json(plan_to_json(plan)).trace == plan.trace

    for data, p, q in [
            ({}, 3, 2),
            ({'positions': [4, 4]}, 3, 2),
            ({'positions': [7]}, 3, 2),
            ({'positions': ['x']}, 3, 2),
            ({'p': 5, 'q': 2, 'positions': []}, 3, 2),
            ({'positions': []}, None, None),
            ({'positions': [], 'mirrored': 'false'}, 3, 2),
            ([1, 2], 3, 2),
    ]:
        with pytest.raises(MalformedPlan):
            plan_from_json(data, p, q)


@pytest.mark.parametrize('p, a', tuple(
    (p, a) for p in range(3, 9) for a in range(1, p - 1)
))
def test_block_reduction_all_positive(p, a):
    lhs, rhs = block_reduction_pair(p, a, np.ones((a, p - a - 1), dtype=int))
    assert lhs == apply_crossing_changes(toric_braid(p, a), u_crossing_data(p, a))
    assert rhs == toric_braid(p - a, a)


def test_block_reduction_random_signs():
    rng = get_rng('block_reduction')
    for _ in range(5):
        signs = rng.choice([-1, 1], size=(2, 2))
        lhs, rhs = block_reduction_pair(5, 2, signs)
        assert lhs.strands == 5 and rhs.strands == 3
        assert component_count_of_closure(lhs) == component_count_of_closure(rhs)
        assert alexander_of_closure(lhs) == alexander_of_closure(rhs)
        assert jones_of_closure(lhs) == jones_of_closure(rhs)


def test_block_reduction_to_one_strand():
    lhs, rhs = block_reduction_pair(4, 3, np.zeros((3, 0), dtype=int))
    assert rhs.strands == 1 and len(rhs) == 0
    assert alexander_of_closure(lhs) == 1
    assert jones_of_closure(lhs) == 1

    with pytest.raises(ValueError):
        block_reduction_pair(4, 4, [])
    with pytest.raises(ValueError):
        block_reduction_pair(5, 2, [[1, 1]])
    with pytest.raises(ValueError):
        block_reduction_pair(5, 2, [[1, 2], [1, 1]])


coprime = tuple(
    (p, a) for p in range(3, 9) for a in range(2, p) if math.gcd(p, a) == 1
)


@pytest.mark.parametrize('p, a', coprime)
def test_flipped_block_matches_swapped_torus_knot(p, a):
    word = apply_crossing_changes(toric_braid(p, a), u_crossing_data(p, a))
    target = toric_braid(a, p - a)
    assert alexander_of_closure(word) == alexander_of_closure(target)
    if max(len(word), len(target)) <= 20:
        assert jones_of_closure(word) == jones_of_closure(target)


def test_staircase_of_full_period_is_identity():
    for p in range(2, 9):
        word = apply_crossing_changes(toric_braid(p, p), u_crossing_data(p, p))
        assert is_identity(word)
        assert word == torus_unknot.unknotting.staircase_identity_word(p - 1)
