import json

import pytest
from click.testing import CliRunner

from torus_unknot.braids import reverse, toric_braid
from torus_unknot.cli import cli
from torus_unknot.word_problem import (
    Certificate, CertificateKind, RewriteStep, Rule, dump_certificate,
)


@pytest.fixture
def runner():
    return CliRunner()


def lines(result):
    return result.stdout.splitlines()


def test_ucd_minimal(runner):
    result = runner.invoke(cli, ['ucd', '7', '4'])
    assert result.exit_code == 0, result.output
    out = lines(result)
    assert out[0] == 'B(7, 4): 24 crossings, d = 1, unknotting number 9'
    assert out[1] == 'minimal crossing data: [8, 12, 13, 14, 17, 18, 22, 23, 24]'
    assert out[2] == 'count: 9'
    assert out[-1] == 'terminal: q = 1 mod p'

    result = runner.invoke(cli, ['ucd', '13', '3'])
    assert 'minimal crossing data: [15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 35, 36]' \
        in lines(result)


def test_ucd_procedure_and_mirror(runner):
    result = runner.invoke(cli, ['ucd', '5', '1', '--procedure'])
    assert result.exit_code == 0, result.output
    assert lines(result)[1:] == [
        'procedure crossing data: []',
        'count: 0',
        'step 1 (odd): p=5 q=1 m=0 a=1',
        'terminal: q = 1 mod p',
    ]

    result = runner.invoke(cli, ['ucd', '7', '4', '--procedure', '--json'])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert [step['p'] for step in data['trace']] == [7, 7, 3]
    assert data['terminal'] == 'q = 1 mod p'

    result = runner.invoke(cli, ['ucd', '7', '4', '--mirror'])
    assert result.exit_code == 0, result.output
    assert lines(result)[0].startswith('reverse(B(7, 4)): ')
    assert lines(result)[1] == 'minimal crossing data: [1, 2, 3, 7, 8, 11, 12, 13, 17]'


@pytest.mark.parametrize('args', [
    ['ucd', '1', '3'],
    ['ucd', '3', '0'],
    ['ucd', '3'],
    ['ucd', 'x', '3'],
])
def test_ucd_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_ucd_json_verifies(runner, tmp_path):
    result = runner.invoke(cli, ['ucd', '6', '4', '--json'])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data['positions'] == [6, 10, 14, 15, 16, 18, 19, 20]
    assert data['d'] == 2

    path = tmp_path / 'plan.json'
    path.write_text(result.stdout)
    result = runner.invoke(cli, ['verify', '6', '4', '--plan', str(path)])
    assert result.exit_code == 0, result.output
    assert lines(result)[-1] == 'verdict: CertifiedTrivialUnlink'


def test_verify_exit_codes(runner, tmp_path):
    assert runner.invoke(cli, ['verify', '6', '4']).exit_code == 0

    empty = tmp_path / 'empty.json'
    empty.write_text(json.dumps({'positions': []}))
    result = runner.invoke(cli, ['verify', '3', '2', '--plan', str(empty)])
    assert result.exit_code == 1, result.output
    assert lines(result)[-1] == 'verdict: CertifiedNontrivial'

    result = runner.invoke(cli, ['verify', '9', '7', '--budget', '10'])
    assert result.exit_code == 3, result.output
    assert lines(result)[-1] == 'verdict: Inconclusive'

    malformed = tmp_path / 'malformed.json'
    malformed.write_text(json.dumps({'positions': [1, 1]}))
    result = runner.invoke(cli, ['verify', '3', '2', '--plan', str(malformed)])
    assert result.exit_code == 2

    wrong = tmp_path / 'wrong.json'
    wrong.write_text(json.dumps({'p': 5, 'q': 2, 'positions': []}))
    assert runner.invoke(
        cli, ['verify', '3', '2', '--plan', str(wrong)]).exit_code == 2


def test_verify_json(runner):
    result = runner.invoke(cli, ['verify', '3', '4', '--json'])
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data['status'] == 'CertifiedTrivialUnlink'
    assert data['components'] == 1
    assert data['positions'] == [4, 5, 6]
    assert data['evidence']['alexander']['match']


def test_verify_certificate_files(runner, tmp_path):
    path = tmp_path / 'k74.cert'
    result = runner.invoke(cli, ['verify', '7', '4', '--save-certificate', str(path)])
    assert result.exit_code == 0, result.output
    assert path.exists()

    result = runner.invoke(cli, ['verify', '7', '4', '--certificate', str(path)])
    assert result.exit_code == 0, result.output
    assert any(line.startswith('certificate: found') for line in lines(result))

    # a certificate for a different braid is not used
    result = runner.invoke(
        cli, ['verify', '7', '4', '--mirror', '--budget', '10',
              '--certificate', str(path)])
    assert result.exit_code == 3, result.output

    result = runner.invoke(cli, ['check', str(path)])
    assert result.exit_code == 0, result.output
    assert lines(result)[0].startswith('valid markov-equivalence certificate')

    tampered = tmp_path / 'tampered.cert'
    tampered.write_text(path.read_text().replace('\nend 1\n', '\nend 2\n'))
    result = runner.invoke(cli, ['check', str(tampered)])
    assert result.exit_code == 1
    assert lines(result) == ['invalid: the steps do not end at the end word']

    garbage = tmp_path / 'garbage.cert'
    garbage.write_text('start 3 1 2\nend 1\nno-such-rule 1\n')
    assert runner.invoke(cli, ['check', str(garbage)]).exit_code == 2


def test_step_cap_is_inconclusive(runner, tmp_path):
    path = tmp_path / 'k34.cert'
    result = runner.invoke(cli, ['verify', '3', '4', '--save-certificate', str(path)])
    assert result.exit_code == 0, result.output

    # the Jones polynomial is skipped, so only the certificate decides
    args = ['verify', '3', '4', '--budget', '5', '--certificate', str(path)]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    result = runner.invoke(cli, args + ['--step-cap', '1'])
    assert result.exit_code == 3, result.output
    assert lines(result)[-1] == 'verdict: Inconclusive'

    word = toric_braid(4, 4)
    certificate = Certificate(
        word, reverse(word),
        [RewriteStep(Rule.GROUP_REWRITE, 1, (12, *reverse(word).to_ints()))],
        kind=CertificateKind.GROUP_EQUALITY,
    )
    path = tmp_path / 'b44.cert'
    dump_certificate(certificate, path)
    result = runner.invoke(cli, ['check', str(path)])
    assert result.exit_code == 0, result.output
    assert lines(result) == ['valid group-equality certificate, 1 steps']

    result = runner.invoke(cli, ['check', str(path), '--step-cap', '3'])
    assert result.exit_code == 3, result.output
    assert lines(result)[0].startswith('inconclusive: Handle reduction stopped')

    assert runner.invoke(cli, ['check', str(path), '--step-cap', '0']).exit_code == 2
    assert runner.invoke(cli, ['verify', '3', '4', '--step-cap', '0']).exit_code == 2


@pytest.mark.parametrize('kind, braid, strands, expected', [
    ('alexander', '1 1 1', 2, '1 - t + t^2'),
    ('alexander', '1 -2 1 -2', 3, '1 - 3*t + t^2'),
    ('jones', '1 1 1', 2, 't + t^3 - t^4'),
    ('jones', '1 1', 2, '-t^(1/2) - t^(5/2)'),
    ('jones', '', 1, '1'),
])
def test_invariant(runner, kind, braid, strands, expected):
    result = runner.invoke(
        cli, ['invariant', kind, '--braid', braid, '--strands', str(strands)])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == expected


def test_invariant_errors(runner):
    args = ['invariant', 'jones', '--braid', '1 1 1', '--strands', '2']
    assert runner.invoke(cli, args + ['--budget', '2']).exit_code == 2
    assert runner.invoke(
        cli, args, env={'TORUS_UNKNOT_CROSSING_BUDGET': '2'}).exit_code == 2
    assert runner.invoke(
        cli, ['invariant', 'jones', '--braid', '1 x', '--strands', '2'],
    ).exit_code == 2
    assert runner.invoke(
        cli, ['invariant', 'alexander', '--braid', '3', '--strands', '2'],
    ).exit_code == 2


def test_render(runner, tmp_path):
    result = runner.invoke(cli, ['render', '7', '4'])
    assert result.exit_code == 0, result.output
    svg = result.stdout
    assert svg.count('class="crossing highlighted"') == 9
    assert svg.count('class="crossing"') == 15
    assert runner.invoke(cli, ['render', '7', '4']).stdout == svg

    path = tmp_path / 'k74.svg'
    result = runner.invoke(cli, ['render', '7', '4', '-o', str(path)])
    assert result.exit_code == 0, result.output
    assert path.read_text() + '\n' == svg

    path = tmp_path / 'k23.svg'
    result = runner.invoke(
        cli, ['render', '2', '3', '--highlight', 'none', '-o', str(path)])
    assert result.exit_code == 0, result.output
    svg = path.read_text()
    assert svg.count('class="crossing"') == 3
    assert 'highlighted' not in svg

    result = runner.invoke(
        cli, ['render', '2', '3', '-o', str(tmp_path / 'missing' / 'k.svg')])
    assert result.exit_code == 2


def test_parity(runner):
    result = runner.invoke(cli, ['parity', '7', '4'])
    assert result.exit_code == 0, result.output
    out = lines(result)
    assert 'first: [8, 12, 13, 14, 17, 18, 22, 23, 24]' in out
    assert 'second (corrected): [1, 2, 3, 7, 8, 11, 12, 13, 17]' in out
    assert out[-1] == '  verdict on the reversed braid: CertifiedTrivialUnlink'

    result = runner.invoke(cli, ['parity', '7', '4', '--as-printed'])
    assert result.exit_code == 0, result.output
    assert lines(result)[-1] == (
        '  invalid: [-2, -7, -8, -12, -13, -14, -3, -4] outside of 1..24')

    assert runner.invoke(cli, ['parity', '6', '4']).exit_code == 2


def test_table(runner):
    result = runner.invoke(cli, ['table', '--pmax', '3', '--qmax', '3'])
    assert result.exit_code == 0, result.output
    out = lines(result)
    header = out.index('p,q,d,unknotting_number,procedure_count,minimal_count,verdict')
    rows = [line.split(',') for line in out[header + 1:]]
    assert [(int(r[0]), int(r[1])) for r in rows] == [
        (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3),
    ]
    assert rows[4] == ['3', '2', '1', '1', '1', '1', 'CertifiedTrivialUnlink']
    assert all(r[-1] == 'CertifiedTrivialUnlink' for r in rows)
