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

import itertools
import random

import pytest

from score.pmds.errors import InvalidParams, SingularSystem
from score.pmds.matrix import (
    CONSECUTIVE, SHIFTED, SQUARED, CodeParams, ErasurePattern, RingMatrix,
    build_parity_check, determinant, erasure_submatrix, erasure_system,
    is_invertible, is_left_invertible, solve_linear)
from score.pmds.poly import BinPoly, ModulusSpec
from score.pmds.verifier import moore_determinant


def test_code_params():
    params = CodeParams(3, 5, 1, 3, 'c0', 'mp:17')
    assert params.variant == SQUARED
    assert params.spec == ModulusSpec.parse('mp:17')
    assert params.k == 9
    assert params.redundancy == 6
    assert params.length == 15
    assert params.describe() == 'c0 m=3 n=5 r=1 s=3 mp:17'
    assert params.as_dict() == {'variant': 'c0', 'm': 3, 'n': 5, 'r': 1,
                                's': 3, 'modulus': 'mp:17'}
    assert params.replace(s=2).s == 2
    assert params == CodeParams(3, 5, 1, 3, SQUARED, 'mp:17')


@pytest.mark.parametrize('args', [
    (4, 5, 1, 2, 'c0', 'mp:17'),
    (0, 5, 1, 2, 'c0', 'mp:17'),
    (3, 1, 1, 0, 'c0', 'mp:17'),
    (3, 5, 0, 2, 'c0', 'mp:17'),
    (3, 5, 1, -1, 'c0', 'mp:17'),
    (1, 2, 1, 1, 'c0', 'mp:5'),
    (3, 5, 1, 2, 'c9', 'mp:17'),
    (3, 5, 2, 1, 'c2', 'mp:17'),
    (3, 5, 1, 3, 'c2', 'mp:17'),
    (3, 7, 1, 2, 'c2', 'mp:5'),
    (3, 5, 1, 2, 'c0', 'mp:16'),
])
def test_invalid_code_params(args):
    with pytest.raises(InvalidParams):
        CodeParams(*args)


def test_squared_parity_check():
    params = CodeParams(3, 5, 1, 3, 'c0', 'mp:17')
    spec = params.spec
    H = build_parity_check(params)
    assert H.shape == (6, 15)
    for i in range(3):
        assert H.rows[i] == tuple(int(k // 5 == i) for k in range(15))
    for k in range(15):
        assert H[3, k] == spec.power(k)
        assert H[4, k] == spec.power(2 * k)
        assert H[5, k] == spec.power(4 * k)


def test_squared_parity_check_with_two_row_parities():
    params = CodeParams(3, 5, 2, 2, 'c0', 'mp:17')
    spec = params.spec
    H = build_parity_check(params)
    assert H.shape == (8, 15)
    for i in range(3):
        for k in range(15):
            inside = k // 5 == i
            assert H[2 * i, k] == int(inside)
            assert H[2 * i + 1, k] == (spec.power(k) if inside else 0)
    for k in range(15):
        assert H[6, k] == spec.power(2 * k)
        assert H[7, k] == spec.power(4 * k)


def test_consecutive_parity_check():
    params = CodeParams(3, 5, 3, 1, 'c1', 'mp:17')
    spec = params.spec
    H = build_parity_check(params)
    assert H.shape == (10, 15)
    for i in range(3):
        for u in range(3):
            for k in range(15):
                expected = spec.power(u * k) if k // 5 == i else 0
                assert H[3 * i + u, k] == expected
    for k in range(15):
        assert H[9, k] == spec.power(3 * k)


def test_shifted_parity_check():
    params = CodeParams(3, 5, 1, 2, 'c2', 'mp:5')
    spec = params.spec
    H = build_parity_check(params)
    assert H.shape == (5, 15)
    for i in range(3):
        for j in range(5):
            assert H[3, i * 5 + j] == spec.power(j)
            assert H[4, i * 5 + j] == spec.power(i + j)
    assert params.variant == SHIFTED


def test_squared_equals_consecutive_for_two_globals():
    squared = CodeParams(3, 5, 1, 2, 'c0', 'mp:17')
    consecutive = CodeParams(3, 5, 1, 2, 'c1', 'mp:17')
    assert consecutive.variant == CONSECUTIVE
    assert build_parity_check(squared) == build_parity_check(consecutive)


def test_squared_equals_consecutive_for_random_shapes():
    rng = random.Random(9)
    moduli = ['mp:5', 'mp:11', 'mp:13', 'mp:17', 'mp:31', '23', '45', '435']
    checked = 0
    while checked < 20:
        modulus = rng.choice(moduli)
        m, n = rng.randint(1, 8), rng.randint(2, 12)
        if m * n > ModulusSpec.parse(modulus).exponent or m * (n - 1) < 3:
            continue
        H = build_parity_check(CodeParams(m, n, 1, 2, 'c0', modulus))
        assert H == build_parity_check(CodeParams(m, n, 1, 2, 'c1', modulus))
        checked += 1



def test_squared_rows_chain():
    params = CodeParams(2, 5, 3, 2, 'c0', 'mp:17')
    H = build_parity_check(params)
    chain = [H.row(1), H.row(2), H.row(6), H.row(7)]
    for previous, current in zip(chain, chain[1:]):
        for a, b in zip(previous, current):
            if a:
                assert b == a * a


def test_erasure_pattern():
    pattern = ErasurePattern.parse('1,0 0,2;0,0 0,1  1,3', 3, 5)
    assert pattern.positions == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 3))
    assert pattern.indices == (0, 1, 2, 5, 8)
    assert pattern.by_row() == {0: (0, 1, 2), 1: (0, 3)}
    assert pattern.profile(1) == (2, 1)
    assert str(pattern) == '0,0 0,1 0,2 1,0 1,3'
    assert (1, 3) in pattern
    assert len(pattern.union(ErasurePattern([(2, 4), (0, 0)], 3, 5))) == 6


@pytest.mark.parametrize('text', ['0,0 0,0', '3,0', '0,5', '0', 'a,b'])
def test_invalid_erasure_patterns(text):
    with pytest.raises(InvalidParams):
        ErasurePattern.parse(text, 3, 5)


def test_erasure_system_drops_zero_rows():
    params = CodeParams(3, 5, 1, 2, 'c0', 'mp:17')
    H = build_parity_check(params)
    pattern = ErasurePattern([(1, 0), (1, 4)], 3, 5)
    assert erasure_submatrix(H, pattern).shape == (5, 2)
    matrix, rows = erasure_system(H, pattern)
    assert rows == (1, 3, 4)
    assert matrix.shape == (3, 2)
    with pytest.raises(InvalidParams):
        erasure_submatrix(H, ErasurePattern([], 3, 5))


def test_determinant():
    spec = ModulusSpec.parse('435')
    alpha = spec.alpha
    assert determinant(RingMatrix.identity(spec, 4)) == 1
    M = RingMatrix(spec, [[1, 1], [1, alpha]])
    assert determinant(M) == alpha + 1
    assert is_invertible(M)
    assert not is_invertible(RingMatrix(spec, [[1, 1], [1, 1]]))
    with pytest.raises(InvalidParams):
        determinant(RingMatrix(spec, [[1, 1]]))
    with pytest.raises(InvalidParams):
        is_invertible(RingMatrix(spec, [[1, 1]]))


@pytest.mark.parametrize('size', [3, 7])
def test_moore_determinant(size):
    spec = ModulusSpec.parse('435')
    elements = [spec.power(e) for e in range(size)]
    moore = RingMatrix(spec, [[a ** (1 << u) for a in elements]
                              for u in range(size)])
    assert determinant(moore) == moore_determinant(elements)
    assert determinant(moore)


@pytest.mark.parametrize('modulus', ['435', 'mp:17'])
def test_moore_determinant_of_random_rows(modulus):
    spec = ModulusSpec.parse(modulus)
    rng = random.Random(modulus)
    for _ in range(1000):
        elements = [spec.element(rng.randrange(1 << spec.degree))
                    for _ in range(rng.randint(1, 5))]
        moore = RingMatrix(spec, [[a ** (1 << u) for a in elements]
                                  for u in range(len(elements))])
        assert determinant(moore) == moore_determinant(elements), elements



def test_triangular_determinant_by_elimination():
    spec = ModulusSpec.parse('mp:17')
    size = 8
    rows = [[spec.power(i + 2 * j) if j >= i else 0 for j in range(size)]
            for i in range(size)]
    expected = spec.one
    for i in range(size):
        expected *= spec.power(3 * i)
    assert determinant(RingMatrix(spec, rows)) == expected
    assert determinant(RingMatrix(spec, rows[::-1])) == expected


def test_solve_linear():
    spec = ModulusSpec.parse('435')
    alpha = spec.alpha
    M = RingMatrix(spec, [[1, 1, 1], [1, alpha, alpha ** 2],
                          [1, alpha ** 2, alpha ** 4]])
    v = solve_linear(M, [1, 0, alpha])
    assert M.apply(v) == [1, 0, alpha]
    with pytest.raises(SingularSystem):
        solve_linear(RingMatrix(spec, [[1, 1], [1, 1]]), [1, 0])
    with pytest.raises(InvalidParams):
        solve_linear(M, [1, 0])


def test_solve_overdetermined():
    spec = ModulusSpec.parse('435')
    alpha = spec.alpha
    M = RingMatrix(spec, [[1, 1], [1, alpha], [1, alpha ** 2]])
    assert is_left_invertible(M)
    rhs = M.apply([alpha, 1])
    assert solve_linear(M, rhs) == [alpha, 1]
    with pytest.raises(SingularSystem):
        solve_linear(M, [rhs[0], rhs[1], rhs[2] + 1])


def test_solve_without_unit_pivot():
    spec = ModulusSpec.parse('mp:17')
    f = BinPoly.all_one(17)
    g1, g2 = (spec.element(v) for v in range(1 << 8, 1 << 9)
              if not f % BinPoly(v))
    M = RingMatrix(spec, [[g1, 1], [g2, 1]])
    assert is_invertible(M)
    assert determinant(M).is_unit()
    v = solve_linear(M, [1, 0])
    assert M.apply(v) == [1, 0]
    assert not is_invertible(RingMatrix(spec, [[g1, 0], [g2, 1]]))


def test_row_mds_of_consecutive_construction():
    params = CodeParams(2, 6, 3, 0, 'c1', '435')
    H = build_parity_check(params)
    for cols in itertools.combinations(range(6), 3):
        matrix, _ = erasure_system(
            H, ErasurePattern([(1, j) for j in cols], 2, 6))
        assert matrix.shape == (3, 3)
        assert is_invertible(matrix)
