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

"""
Systematic encoding, erasure decoding and serialization of array
codewords.
"""

import functools
import logging
import re

from .errors import (
    FormatError, InvalidParams, NotCorrectable, NotInvertible, SingularSystem)
from .matrix import (
    CONSECUTIVE, SHIFTED, SQUARED, CodeParams, ErasurePattern,
    build_parity_check, erasure_system, is_invertible, is_left_invertible,
    solve_linear)
from .poly import RingElement


log = logging.getLogger(__name__)


class ArrayCodeword:
    """
    An *m* × *n* array of ring elements belonging to the code described by
    *params*. The array is not required to satisfy the parity equations;
    use :func:`compute_syndromes` to find out.
    """

    __slots__ = ('params', 'grid')

    def __init__(self, params, grid):
        spec = params.spec
        grid = tuple(tuple(RingElement(spec, value) for value in row)
                     for row in grid)
        if len(grid) != params.m or any(len(row) != params.n for row in grid):
            raise InvalidParams('Codeword grid does not have shape %dx%d' %
                                (params.m, params.n))
        self.params = params
        self.grid = grid

    @classmethod
    def zeros(cls, params):
        return cls(params, [[0] * params.n for _ in range(params.m)])

    @classmethod
    def from_flat(cls, params, values):
        if len(values) != params.length:
            raise InvalidParams('Expected %d symbols, got %d' %
                                (params.length, len(values)))
        n = params.n
        return cls(params, [values[i * n:(i + 1) * n]
                            for i in range(params.m)])

    def __getitem__(self, position):
        i, j = position
        return self.grid[i][j]

    def flat(self):
        return [value for row in self.grid for value in row]

    def values(self):
        """
        The residues as nested lists of integers.
        """
        return [[value.value for value in row] for row in self.grid]

    def replace(self, updates):
        """
        Returns a copy with the entries at the positions in the *updates*
        mapping replaced.
        """
        grid = [list(row) for row in self.grid]
        for (i, j), value in updates.items():
            grid[i][j] = value
        return ArrayCodeword(self.params, grid)

    def erase(self, pattern):
        """
        Returns a copy with every position of *pattern* set to zero.
        """
        return self.replace({position: 0 for position in pattern})

    def __add__(self, other):
        if not isinstance(other, ArrayCodeword):
            return NotImplemented
        if self.params != other.params:
            raise InvalidParams('Cannot add codewords of different codes')
        return ArrayCodeword(self.params, [
            [a + b for a, b in zip(row, other_row)]
            for row, other_row in zip(self.grid, other.grid)])

    __xor__ = __add__

    def __eq__(self, other):
        if not isinstance(other, ArrayCodeword):
            return NotImplemented
        return self.params == other.params and self.grid == other.grid

    def __hash__(self):
        return hash((self.params, self.grid))

    def __str__(self):
        return '\n'.join(' '.join('%x' % value.value for value in row)
                         for row in self.grid)

    def __repr__(self):
        return '<ArrayCodeword %s>' % self.params.describe()


class ParityLayout:
    """
    The ordered positions that hold parity symbols. The first *m·r* entries
    are the row parities, the remaining *s* the global parities.
    """

    __slots__ = ('positions',)

    def __init__(self, positions):
        self.positions = tuple((int(i), int(j)) for i, j in positions)

    @classmethod
    def default(cls, params):
        m, n, r, s = params.m, params.n, params.r, params.s
        positions = [(i, j) for i in range(m) for j in range(n - r, n)]
        if params.variant == SHIFTED:
            if s > m:
                raise InvalidParams(
                    'Variant c2 with s=%d needs at least %d stripes for its '
                    'global parities' % (s, s))
            positions.extend((m - 1 - u, n - 2) for u in range(s))
        else:
            row, col = m - 1, n - r - 1
            for _ in range(s):
                positions.append((row, col))
                col -= 1
                if col < 0:
                    row, col = row - 1, n - r - 1
        return cls(positions)

    def pattern(self, params):
        return ErasurePattern(self.positions, params.m, params.n)

    def __len__(self):
        return len(self.positions)

    def __eq__(self, other):
        if not isinstance(other, ParityLayout):
            return NotImplemented
        return self.positions == other.positions

    def __hash__(self):
        return hash(self.positions)

    def __repr__(self):
        return 'ParityLayout(%r)' % (list(self.positions),)


class PmdsCode:
    """
    An immutable code instance: parameters, parity-check matrix, parity
    layout and the data positions in row-major order. Use :func:`get_code`
    to obtain cached instances.
    """

    def __init__(self, params, layout=None):
        if layout is None:
            layout = ParityLayout.default(params)
        if len(layout) != params.redundancy:
            raise InvalidParams('Layout has %d positions, the code needs %d'
                                % (len(layout), params.redundancy))
        self.params = params
        self.layout = layout
        self.H = build_parity_check(params)
        self.parity_pattern = layout.pattern(params)
        matrix, _ = erasure_system(self.H, self.parity_pattern)
        if not matrix.is_square or not is_invertible(matrix):
            raise InvalidParams('Parity positions of %s cannot be solved for'
                                % params.describe())
        parity = set(self.parity_pattern)
        self.data_positions = tuple(
            (i, j) for i in range(params.m) for j in range(params.n)
            if (i, j) not in parity)

    @property
    def k(self):
        return len(self.data_positions)

    def __repr__(self):
        return '<PmdsCode %s>' % self.params.describe()


@functools.lru_cache(maxsize=64)
def get_code(params, layout=None):
    return PmdsCode(params, layout)


def compute_syndromes(a):
    """
    Returns the syndrome vector H·a of length *mr + s*.
    """
    return build_parity_check(a.params).apply(a.flat())


def encode(data, params, layout=None):
    """
    Places the *k* data symbols row-major into the data positions and
    computes the parity symbols.
    """
    code = get_code(params, layout)
    if len(data) != code.k:
        raise InvalidParams('Expected %d data symbols, got %d' %
                            (code.k, len(data)))
    codeword = ArrayCodeword.zeros(params).replace(
        dict(zip(code.data_positions, data)))
    return decode_erasures(codeword, code.parity_pattern)


def _stripe_rows(params, row):
    return range(row * params.r, (row + 1) * params.r)


def row_decode(a, row, cols):
    """
    Recovers at most *r* erased entries of a single row from the equations
    of that row alone.
    """
    params = a.params
    cols = tuple(cols)
    if len(cols) > params.r:
        raise InvalidParams('%d erasures in row %d exceed r=%d' %
                            (len(cols), row, params.r))
    if not cols:
        return a
    cleared = a.erase((row, j) for j in cols)
    if params.r == 1:
        value = RingElement(params.spec, 0)
        for entry in cleared.grid[row]:
            value += entry
        return cleared.replace({(row, cols[0]): value})
    H = build_parity_check(params)
    offset = row * params.n
    equations = _stripe_rows(params, row)
    matrix = H.select_rows(equations).select_columns(
        [offset + j for j in cols])
    syndromes = H.select_rows(equations).apply(cleared.flat())
    try:
        solution = solve_linear(matrix, syndromes)
    except (SingularSystem, NotInvertible):
        raise NotCorrectable(
            'Row %d cannot recover columns %s' % (row, cols),
            ErasurePattern(((row, j) for j in cols), params.m, params.n))
    return cleared.replace({(row, j): value
                            for j, value in zip(cols, solution)})


def decode_erasures(a, pattern, fast=True):
    """
    Returns a copy of the codeword *a* with the erased positions recovered.
    The values found at the erased positions are ignored. Raises
    :class:`NotCorrectable` if the pattern cannot be recovered.

    Rows with at most *r* erasures are decoded on their own. Codes with a
    single row parity and two global parities have closed-form solutions for
    the remaining patterns, which are used when *fast* is set; everything
    else is solved as a linear system.
    """
    params = a.params
    if (pattern.m, pattern.n) != (params.m, params.n):
        raise InvalidParams('Pattern of a %dx%d array does not fit %s' %
                            (pattern.m, pattern.n, params.describe()))
    if not len(pattern):
        return a
    if len(pattern) > params.redundancy:
        raise NotCorrectable('%d erasures exceed the %d parity equations' %
                             (len(pattern), params.redundancy), pattern)
    cleared = a.erase(pattern)
    rows = pattern.by_row()
    if all(len(cols) <= params.r for cols in rows.values()):
        log.debug('row decoding %d erasures' % len(pattern))
        try:
            for row, cols in rows.items():
                cleared = row_decode(cleared, row, cols)
        except NotCorrectable as e:
            raise NotCorrectable(str(e), pattern)
        return cleared
    if fast and params.variant in (SQUARED, CONSECUTIVE) and \
            params.r == 1 and params.s == 2:
        for row, cols in rows.items():
            if len(cols) == 1:
                cleared = row_decode(cleared, row, cols)
        remaining = {row: cols for row, cols in rows.items() if len(cols) > 1}
        try:
            result = _decode_two_globals(cleared, remaining)
        except NotInvertible:
            raise NotCorrectable('Erasures %s cannot be recovered' % pattern,
                                 pattern)
        if result is not None:
            return result
    return _decode_generic(a.erase(pattern), pattern)


def _decode_generic(cleared, pattern):
    params = cleared.params
    H = build_parity_check(params)
    matrix, rows = erasure_system(H, pattern)
    log.debug('solving %dx%d erasure system' % matrix.shape)
    if matrix.nrows < matrix.ncols:
        raise NotCorrectable('Erasures %s leave too few equations' % pattern,
                             pattern)
    syndromes = H.apply(cleared.flat())
    try:
        solution = solve_linear(matrix, [syndromes[i] for i in rows])
    except (SingularSystem, NotInvertible):
        raise NotCorrectable('Erasures %s cannot be recovered' % pattern,
                             pattern)
    return cleared.replace(dict(zip(pattern, solution)))


def _decode_two_globals(cleared, remaining):
    # Entry (i, j) has global coefficients x and x^2 with x = alpha^(i*n+j).
    # Returns None for shapes without a closed form.
    params = cleared.params
    spec = params.spec
    n = params.n
    shape = sorted(len(cols) for cols in remaining.values())
    if shape not in ([3], [2, 2]):
        return None
    syndromes = compute_syndromes(cleared)
    S1, S2 = syndromes[params.m], syndromes[params.m + 1]
    if shape == [3]:
        (row, cols), = remaining.items()
        log.debug('closed-form decoding of three erasures in row %d' % row)
        S0 = syndromes[row]
        x = [spec.power(row * n + j) for j in cols]
        updates = {}
        for t in range(3):
            x0, x1, x2 = x[t], x[(t + 1) % 3], x[(t + 2) % 3]
            updates[(row, cols[t])] = \
                (S0 * x1 * x2 + S1 * (x1 + x2) + S2) / ((x0 + x1) * (x0 + x2))
        return cleared.replace(updates)
    (i0, (ja, jb)), (i1, (jc, jd)) = sorted(remaining.items())
    log.debug('closed-form decoding of erasure pairs in rows %d and %d' %
              (i0, i1))
    xa, xb = spec.power(i0 * n + ja), spec.power(i0 * n + jb)
    xc, xd = spec.power(i1 * n + jc), spec.power(i1 * n + jd)
    Si0, Si1 = syndromes[i0], syndromes[i1]
    A, C = xa + xb, xc + xd
    R1 = S1 + xb * Si0 + xd * Si1
    R2 = S2 + xb * xb * Si0 + xd * xd * Si1
    a = (R1 * C + R2) / (A * (A + C))
    c = (R2 + A * R1) / (C * (A + C))
    return cleared.replace({
        (i0, ja): a,
        (i0, jb): Si0 + a,
        (i1, jc): c,
        (i1, jd): Si1 + c,
    })


def is_correctable(params, pattern):
    """
    Whether *pattern* can be recovered by the code, decided on its erasure
    system.
    """
    matrix, _ = erasure_system(build_parity_check(params), pattern)
    if matrix.nrows < matrix.ncols:
        return False
    return is_left_invertible(matrix)


def pack_symbols(values, bits):
    """
    Packs b-bit symbols little-endian into the shortest byte string.
    """
    total = 0
    for index, value in enumerate(values):
        value = int(value)
        if value >> bits:
            raise InvalidParams('Symbol %x does not fit into %d bits' %
                                (value, bits))
        total |= value << (index * bits)
    return total.to_bytes((len(values) * bits + 7) // 8, 'little')


def unpack_symbols(data, bits, count):
    expected = (count * bits + 7) // 8
    if len(data) != expected:
        raise FormatError('Expected %d bytes for %d symbols of %d bits, '
                          'got %d' % (expected, count, bits, len(data)))
    total = int.from_bytes(data, 'little')
    if total >> (count * bits):
        raise FormatError('Padding bits are not zero')
    mask = (1 << bits) - 1
    return [(total >> (index * bits)) & mask for index in range(count)]


_HEADER = re.compile(
    r'PMDS m=(\d+) n=(\d+) r=(\d+) s=(\d+) variant=(\S+) modulus=(\S+)$')


def dumps(a):
    """
    Serializes a codeword: an ASCII header line followed by the packed
    symbols.
    """
    params = a.params
    header = 'PMDS m=%d n=%d r=%d s=%d variant=%s modulus=%s\n' % (
        params.m, params.n, params.r, params.s, params.variant.value,
        params.spec.label)
    return header.encode('ascii') + \
        pack_symbols([value.value for value in a.flat()], params.spec.b)


def loads(data):
    header, newline, payload = bytes(data).partition(b'\n')
    if not newline:
        raise FormatError('Missing header line')
    match = _HEADER.match(header.decode('ascii', 'replace'))
    if not match:
        raise FormatError('Invalid header %r' % header[:80])
    m, n, r, s = (int(value) for value in match.groups()[:4])
    try:
        params = CodeParams(m, n, r, s, match.group(5), match.group(6))
    except InvalidParams as e:
        raise FormatError('Invalid code in header: %s' % e)
    values = unpack_symbols(payload, params.spec.b, params.length)
    return ArrayCodeword.from_flat(params, values)
