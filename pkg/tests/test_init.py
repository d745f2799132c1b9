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

import pytest
from score.init import InitializationError

from score.pmds import init
from score.pmds.verifier import FAST, ORACLE


def test_defaults():
    pmds = init({})
    assert pmds.budget == 100000000
    assert pmds.workers == 1
    assert not pmds.odd_profiles
    assert pmds.method == FAST
    assert pmds.reliability.t == 15
    assert pmds.reliability.m == 16
    assert pmds.reliability.n == 6
    assert pmds.reliability.blocks == 500000
    assert len(pmds.p_values) == 10


def test_configuration():
    pmds = init({
        'budget': '12',
        'workers': '3',
        'odd_profiles': 'true',
        'check': 'oracle',
        'reliability.t': '10',
        'reliability.p': ['0.001', '0.002'],
    })
    assert pmds.budget == 12
    assert pmds.workers == 3
    assert pmds.odd_profiles
    assert pmds.method == ORACLE
    assert pmds.reliability.t == 10
    assert pmds.p_values == [.001, .002]


@pytest.mark.parametrize('confdict', [
    {'budget': 'lots'},
    {'workers': '0'},
    {'check': 'guess'},
    {'reliability.n': '1'},
    {'reliability.p': ['2']},
    {'reliability.p': ['often']},
])
def test_invalid_configuration(confdict):
    with pytest.raises(InitializationError):
        init(confdict)


def test_check():
    pmds = init({})
    params = pmds.params(4, 4, modulus='mp:17')
    assert pmds.code(params).k == 10
    assert pmds.check(params).is_pmds
    assert pmds.check(params, 'oracle').method == ORACLE


def test_check_preset():
    pmds = init({})
    results = pmds.check_preset('table2', primes=['17', '31'])
    assert [(row.label, row.m, row.n) for row, _ in results] == \
        [('17', 4, 4), ('31', 5, 6), ('31', 6, 5)]
    for row, verdict in results:
        assert verdict.is_pmds == row.pmds


def test_reliability_table():
    pmds = init({'reliability.p': ['0.0001']})
    rows = pmds.reliability_table()
    assert len(rows) == 1
    assert rows[0].P == pytest.approx(4.1e-20, rel=.05)
    assert len(pmds.reliability_table([.0002, .0003])) == 2
