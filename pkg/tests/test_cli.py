# Copyright © 2015-2018 STRG.AT GmbH, Vienna, Austria
# Copyright © 2020-2023 Necdet Can Ateşman, Vienna, Austria
#
# This file is part of the The SCORE Framework.
#
# The SCORE Framework and all its parts are free software: you can redistribute
# them and/or modify them under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation which is in
# the file named COPYING.LESSER.txt.
#
# The SCORE Framework and all its parts are distributed without any WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. For more details see the GNU Lesser General Public
# License.
#
# If you have not received a copy of the GNU Lesser General Public License see
# http://www.gnu.org/licenses/.
#
# The License-Agreement realised between you as Licensee and STRG.AT GmbH as
# Licenser including the issue of its valid conclusion and its pre- and
# post-contractual effects is governed by the laws of Austria. Any disputes
# concerning this License-Agreement including the issue of its valid conclusion
# and its pre- and post-contractual effects are exclusively decided by the
# competent court, in whose district STRG.AT GmbH has its registered seat, at
# the discretion of STRG.AT GmbH also the competent court, in whose district
# the Licensee has his registered seat, an establishment or assets.

import json

import pytest
from click.testing import CliRunner

from score.pmds.cli import main
from score.pmds.verifier import FAST, PmdsVerdict


SHIFTED = ['--variant', 'c2', '--m', '3', '--n', '5', '--modulus', 'mp:5']
SQUARED = ['--m', '3', '--n', '5', '--modulus', 'mp:17']


@pytest.fixture
def runner():
    return CliRunner()


def test_check_positive(runner):
    result = runner.invoke(main, ['check', '--m', '4', '--n', '4',
                                  '--modulus', 'mp:17'])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == 'PMDS: yes'


def test_check_negative(runner):
    result = runner.invoke(main, ['check'] + SHIFTED)
    assert result.exit_code == 1
    assert 'PMDS: no' in result.output
    assert 'witness: 0,0 0,1 0,2' in result.output


def test_check_json(runner):
    result = runner.invoke(main, ['check', '--json', '--both'] + SHIFTED)
    assert result.exit_code == 1
    record = json.loads(result.output)
    assert record['pmds'] is False
    assert record['witness'] == [[0, 0], [0, 1], [0, 2]]
    assert record['code']['variant'] == 'c2'


@pytest.mark.parametrize('args', [
    ['check', '--m', '9', '--n', '5', '--modulus', 'mp:17'],
    ['check', '--m', '3', '--n', '5', '--modulus', 'mp:16'],
    ['check', '--fast', '--oracle'] + SQUARED,
    ['check', '--odd-profiles', '--oracle'] + SHIFTED,
    ['check', '--m', '3'],
])
def test_check_usage_errors(runner, args):
    assert runner.invoke(main, args).exit_code == 2


def test_check_budget(runner):
    result = runner.invoke(main, ['check', '--oracle', '--budget', '10'] +
                           SQUARED)
    assert result.exit_code == 3


def test_check_mismatch(runner, monkeypatch):
    import score.pmds.verifier as verifier
    monkeypatch.setattr(verifier, 'check_fast',
                        lambda params: PmdsVerdict(True, params, FAST))
    result = runner.invoke(main, ['check', '--both'] + SHIFTED)
    assert result.exit_code == 4


def test_encode_and_decode(runner):
    with runner.isolated_filesystem():
        with open('data.bin', 'wb') as f:
            f.write(bytes(range(20)))
        result = runner.invoke(main, ['encode'] + SQUARED + [
            '--input', 'data.bin', '--output', 'codeword.pmds'])
        assert result.exit_code == 0
        with open('codeword.pmds', 'rb') as f:
            encoded = f.read()
        assert encoded.startswith(b'PMDS m=3 n=5 r=1 s=2 variant=c0 ')
        result = runner.invoke(main, [
            'decode', '--input', 'codeword.pmds', '--output', 'decoded.pmds',
            '--erase', '0,0', '--erase', '1,1 2,2'])
        assert result.exit_code == 0
        with open('decoded.pmds', 'rb') as f:
            assert f.read() == encoded


def test_encode_wrong_size(runner):
    with runner.isolated_filesystem():
        with open('data.bin', 'wb') as f:
            f.write(bytes(19))
        result = runner.invoke(main, ['encode'] + SQUARED + [
            '--input', 'data.bin', '--output', 'codeword.pmds'])
        assert result.exit_code == 2


def test_decode_errors(runner):
    with runner.isolated_filesystem():
        with open('data.bin', 'wb') as f:
            f.write(bytes(20))
        runner.invoke(main, ['encode'] + SQUARED + [
            '--input', 'data.bin', '--output', 'codeword.pmds'])
        result = runner.invoke(main, [
            'decode', '--input', 'codeword.pmds', '--output', 'out.pmds',
            '--erase', '0,0 0,1 0,2 1,0 1,1 1,2'])
        assert result.exit_code == 1
        result = runner.invoke(main, [
            'decode', '--input', 'codeword.pmds', '--output', 'out.pmds',
            '--erase', '7,0'])
        assert result.exit_code == 2
        result = runner.invoke(main, [
            'decode', '--input', 'data.bin', '--output', 'out.pmds',
            '--erase', '0,0'])
        assert result.exit_code == 2


def test_tables_preset(runner):
    result = runner.invoke(main, ['tables', '--preset', 'table2',
                                  '--prime', '17', '--prime', '31'])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        '17 4 4 YES', '31 5 6 NO', '31 6 5 NO']


def test_tables_preset_shape_dependence(runner):
    result = runner.invoke(main, ['tables', '--preset', 'table2',
                                  '--prime', '89'])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        '89 8 11 NO', '89 9 9 NO', '89 11 8 YES']


def test_tables_all_ring_presets(runner):
    result = runner.invoke(main, ['tables', '--paper', '--prime', '17'])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        '[table2]', '17 4 4 YES',
        '[table3]', '17 4 4 NO',
        '[table4]', '17 4 4 NO',
    ]
    result = runner.invoke(main, ['tables', '--paper', '--prime', '17',
                                  '--csv'])
    assert result.output.splitlines()[1:] == [
        'table2,17,4,4,YES,YES',
        'table3,17,4,4,NO,NO',
        'table4,17,4,4,NO,NO',
    ]


def test_tables_explicit(runner):
    result = runner.invoke(main, ['tables', '--prime', '17', '--shape', '4x4'])
    assert result.exit_code == 0
    assert result.output == '17 4 4 YES\n'
    result = runner.invoke(main, ['tables', '--fields', '--prime', '435',
                                  '--shape', '5x5', '--csv'])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        'preset,modulus,m,n,pmds,recorded', ',435,5,5,YES,']


def test_tables_json(runner):
    result = runner.invoke(main, ['tables', '--preset', 'table1',
                                  '--prime', '435', '--json'])
    assert result.exit_code == 0
    record, = json.loads(result.output)
    assert record['label'] == '435'
    assert record['pmds'] is True
    assert record['recorded'] is True


@pytest.mark.parametrize('args', [
    ['tables'],
    ['tables', '--prime', '17'],
    ['tables', '--prime', '17', '--shape', 'four'],
    ['tables', '--preset', 'nothing'],
    ['tables', '--preset', 'table2', '--paper'],
])
def test_tables_usage_errors(runner, args):
    assert runner.invoke(main, args).exit_code == 2


def test_reliability(runner):
    result = runner.invoke(main, ['reliability', '--p', '0.0001',
                                  '--p', '0.001'])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split() == ['p', '.0001', '.001']
    assert lines[1].split() == ['P', '4.1E-20', '1.1E-5']
    again = runner.invoke(main, ['reliability', '--p', '0.0001',
                                 '--p', '0.001'])
    assert again.output == result.output


def test_reliability_csv(runner):
    result = runner.invoke(main, ['reliability', '--csv', '--m', '8'])
    assert result.exit_code == 0
    assert len(result.output.splitlines()) == 11


def test_reliability_usage_errors(runner):
    assert runner.invoke(main, ['reliability', '--p', '2']).exit_code == 2
    assert runner.invoke(main, ['reliability', '--n', '1']).exit_code == 2
