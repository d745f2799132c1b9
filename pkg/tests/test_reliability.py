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

import csv
import io
import math

import pytest

from score.pmds.errors import InvalidParams
from score.pmds.reliability import (
    DEFAULT_P_VALUES, LABELS, ReliabilityParams, binomial_tail,
    codeword_failure, device_data_loss, format_table, page_hard_error,
    stripe_probs, table5, write_csv)


# printed values per quantity, one per default p; None marks misprints
PRINTED = {
    'P': ['4.1E-20', '1.8E-15', '7.9E-13', '5.3E-11', '1.3E-9', '1.6E-8',
          '1.2E-7', '7.0E-7', '3.1E-6', '1.1E-5'],
    'P_H': ['3.3E-19', '1.4E-14', '6.3E-12', None, '1.0E-8', '1.3E-7',
            '9.9E-7', '5.6E-6', '2.5E-5', '9.0E-5'],
    'P_S_m13': ['2.5E-51', '2.1E-37', '1.8E-29', '5.3E-24', '7.2E-20',
                '1.4E-16', '6.8E-14', '1.3E-11', '1.1E-9', '5.2E-8'],
    'P_S_m21': [None, '3.3E-26', '6.4E-21', '2.9E-17', '1.6E-14', '2.5E-12',
                '1.6E-10', '5.1E-9', None, '1.3E-6'],
    'P_S_m31': ['5.7E-54', '4.8E-40', '4.1E-32', '1.2E-26', None, '3.1E-19',
                '1.6E-16', '2.9E-14', '2.5E-12', '1.2E-10'],
    'P_S_111EC': ['1.7E-35', '3.3E-26', '6.4E-21', '2.9E-17', '1.6E-14',
                  '2.5E-12', '1.6E-10', '5.1E-9', '1.0E-7', '1.4E-6'],
    'P_S_12PMDS': ['2.5E-51', '2.1E-37', '1.8E-29', '5.3E-24', '7.2E-20',
                   '1.4E-16', '6.8E-14', '1.3E-11', '1.1E-9', '5.2E-8'],
    'P_DL_111EC': ['8.6E-30', '1.7E-20', '3.2E-15', '1.4E-11', '8.2E-9',
                   '1.3E-6', '7.8E-5', '2.5E-3', '.05', '.5'],
    'P_DL_12PMDS': ['1.2E-45', '1.1E-31', '8.9E-24', '2.7E-18', '3.6E-14',
                    '6.9E-11', '3.4E-8', '6.3E-6', '5.4E-4', '.026'],
}


def _tolerance(text):
    # half a unit of the last printed digit, plus slack for the model
    mantissa = text.split('E')[0]
    decimals = len(mantissa.split('.')[1]) if '.' in mantissa else 0
    return max(.08, .5 * 10 ** -decimals / float(mantissa) + .03)


def _cells():
    for attribute, printed in sorted(PRINTED.items()):
        for p, text in zip(DEFAULT_P_VALUES, printed):
            if text is not None:
                yield attribute, p, text


@pytest.fixture(scope='module')
def rows():
    return {row.p: row for row in table5()}


@pytest.mark.parametrize('attribute,p,text', list(_cells()))
def test_printed_values(rows, attribute, p, text):
    value = getattr(rows[p], attribute)
    assert value == pytest.approx(float(text), rel=_tolerance(text))


def test_pmds_block_loss_is_dominated_by_three_stripes(rows):
    for row in rows.values():
        assert row.P_S_12PMDS == pytest.approx(row.P_S_m13, rel=1e-2)
        assert row.P_S_12PMDS < row.P_S_111EC
        assert row.P_DL_12PMDS < row.P_DL_111EC


@pytest.mark.parametrize('trials,k,p', [
    (4291, 16, 1e-4),
    (4291, 16, 1e-3),
    (5, 2, 1e-8),
    (100, 3, .2),
])
def test_binomial_tail_methods_agree(trials, k, p):
    incremental = binomial_tail(trials, k, p)
    assert binomial_tail(trials, k, p, 'log') == \
        pytest.approx(incremental, rel=1e-9)
    assert binomial_tail(trials, k, p, 'scipy') == \
        pytest.approx(incremental, rel=1e-6)


def test_binomial_tail_edges():
    assert binomial_tail(10, 0, .3) == 1.0
    assert binomial_tail(10, 11, .3) == 0.0
    assert binomial_tail(10, 1, 0) == 0.0
    assert binomial_tail(10, 1, 1) == 1.0
    assert binomial_tail(2, 1, .5) == pytest.approx(.75)
    with pytest.raises(InvalidParams):
        binomial_tail(10, 2, .3, 'guess')


def test_small_probabilities():
    assert page_hard_error(1e-20) == pytest.approx(8e-20)
    assert device_data_loss(1e-30, 500000) == pytest.approx(5e-25)
    assert device_data_loss(1.0, 10) == 1.0
    one, two, three = stripe_probs(1e-5, 6)
    assert one == pytest.approx(5e-5, rel=1e-4)
    assert two == pytest.approx(10e-10, rel=1e-4)
    assert three == pytest.approx(10e-15, rel=1e-4)


def test_codeword_failure():
    params = ReliabilityParams(p=1e-4)
    assert params.codeword_bits == 4291
    assert codeword_failure(params) == pytest.approx(4.1e-20, rel=.05)


def test_invalid_parameters():
    with pytest.raises(InvalidParams):
        ReliabilityParams(p=1.5)
    with pytest.raises(InvalidParams):
        ReliabilityParams(p=1)
    with pytest.raises(InvalidParams):
        ReliabilityParams(p=-.1)
    with pytest.raises(InvalidParams):
        ReliabilityParams(n=1)
    with pytest.raises(InvalidParams):
        ReliabilityParams(t=0)
    with pytest.raises(InvalidParams):
        ReliabilityParams().replace(m=0)


def test_format_table():
    rows = table5([.0001, .001])
    lines = format_table(rows).splitlines()
    assert [line.split()[0] for line in lines] == \
        [label for _, label in LABELS]
    assert lines[0].split() == ['p', '.0001', '.001']
    assert lines[1].split() == ['P', '4.1E-20', '1.1E-5']
    assert format_table(rows) == format_table(table5([.0001, .001]))


def test_write_csv():
    stream = io.StringIO()
    write_csv(table5([.0005]), stream)
    header, line = csv.reader(io.StringIO(stream.getvalue()))
    assert header == [
        'p', 'P', 'P_H', 'P_S_m13', 'P_S_m21', 'P_S_m31', 'P_S_111EC',
        'P_S_12PMDS', 'P_DL_111EC', 'P_DL_12PMDS']
    values = [float(value) for value in line]
    assert values[0] == .0005
    assert all(math.isfinite(value) for value in values)
