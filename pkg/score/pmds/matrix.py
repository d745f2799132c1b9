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

import dataclasses
import enum
import functools
import logging
import re

from .errors import InvalidParams, SingularSystem
from .poly import (
    ModulusSpec, RingElement, _divmod, _gcdext, _invert, _is_unit, _mod, _mul,
    _mulmod)


log = logging.getLogger(__name__)


@enum.unique
class Variant(str, enum.Enum):
    SQUARED = 'c0'
    CONSECUTIVE = 'c1'
    SHIFTED = 'c2'


SQUARED = Variant.SQUARED
CONSECUTIVE = Variant.CONSECUTIVE
SHIFTED = Variant.SHIFTED


@dataclasses.dataclass(frozen=True)
class CodeParams:
    """
    Fully determines a code: an *m* × *n* array with *r* parities in every
    row and *s* global parities, built with the given construction *variant*
    over the ring of *spec*.

    The *variant* may be given as a :class:`Variant` or its value (``'c0'``,
    ``'c1'``, ``'c2'``), the *spec* as a :class:`ModulusSpec` or a string
    accepted by :meth:`ModulusSpec.parse`.
    """

    m: int
    n: int
    r: int
    s: int
    variant: Variant
    spec: ModulusSpec

    def __post_init__(self):
        try:
            variant = Variant(self.variant)
        except ValueError:
            raise InvalidParams('Unknown construction variant %r' %
                                (self.variant,))
        object.__setattr__(self, 'variant', variant)
        if not isinstance(self.spec, ModulusSpec):
            object.__setattr__(self, 'spec', ModulusSpec.parse(self.spec))
        for name in ('m', 'n', 'r', 's'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParams('%s must be an integer, got %r' %
                                    (name, value))
        m, n, r, s = self.m, self.n, self.r, self.s
        if m < 1 or n < 2 or r < 1 or s < 0:
            raise InvalidParams(
                'Need m >= 1, n >= 2, r >= 1 and s >= 0, got %s' %
                self.describe())
        if m * (n - r) - s < 1:
            raise InvalidParams('%s leaves no room for data' % self.describe())
        exponent = self.spec.exponent
        if variant == SHIFTED:
            if r != 1 or s > 2:
                raise InvalidParams('Variant c2 needs r = 1 and s <= 2')
            if max(m, n) > exponent:
                raise InvalidParams('Variant c2 needs max(m, n) <= %d' %
                                    exponent)
        elif m * n > exponent:
            raise InvalidParams('Variant %s needs m*n <= %d, got %d' %
                                (variant.value, exponent, m * n))

    @property
    def k(self):
        """Number of data symbols."""
        return self.m * (self.n - self.r) - self.s

    @property
    def redundancy(self):
        return self.m * self.r + self.s

    @property
    def length(self):
        return self.m * self.n

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def describe(self):
        return '%s m=%d n=%d r=%d s=%d %s' % (
            Variant(self.variant).value, self.m, self.n, self.r, self.s,
            self.spec)

    def as_dict(self):
        return {
            'variant': self.variant.value,
            'm': self.m,
            'n': self.n,
            'r': self.r,
            's': self.s,
            'modulus': self.spec.label,
        }


class RingMatrix:
    """
    A dense matrix over the ring of a :class:`ModulusSpec`. Entries are kept
    as reduced residues; indexing returns :class:`RingElement` objects.
    """

    __slots__ = ('spec', 'rows')

    def __init__(self, spec, rows):
        values = []
        for row in rows:
            values.append(tuple(_entry_value(spec, entry) for entry in row))
        if not values or not values[0]:
            raise InvalidParams('Matrix dimensions must be positive')
        width = len(values[0])
        if any(len(row) != width for row in values):
            raise InvalidParams('Matrix rows differ in length')
        self.spec = spec
        self.rows = tuple(values)

    @classmethod
    def _from_values(cls, spec, rows):
        matrix = object.__new__(cls)
        matrix.spec = spec
        matrix.rows = tuple(tuple(row) for row in rows)
        return matrix

    @classmethod
    def identity(cls, spec, size):
        return cls._from_values(
            spec, [[int(i == j) for j in range(size)] for i in range(size)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return RingElement(self.spec, self.rows[i][j])

    def row(self, i):
        return [RingElement(self.spec, value) for value in self.rows[i]]

    def column(self, j):
        return [RingElement(self.spec, row[j]) for row in self.rows]

    def select_columns(self, indices):
        return RingMatrix._from_values(
            self.spec, [[row[j] for j in indices] for row in self.rows])

    def select_rows(self, indices):
        return RingMatrix._from_values(
            self.spec, [self.rows[i] for i in indices])

    def nonzero_rows(self):
        return [i for i, row in enumerate(self.rows) if any(row)]

    def apply(self, vector):
        """
        Returns the product of this matrix with a column *vector*.
        """
        if len(vector) != self.ncols:
            raise InvalidParams('Vector of length %d does not fit %d columns'
                                % (len(vector), self.ncols))
        f = self.spec.f.value
        values = [_entry_value(self.spec, entry) for entry in vector]
        result = []
        for row in self.rows:
            total = 0
            for a, b in zip(row, values):
                if a and b:
                    total ^= _mul(a, b)
            result.append(RingElement(self.spec, _mod(total, f)))
        return result

    def to_text(self):
        """
        Renders the matrix as a grid of powers of alpha.
        """
        cells = [[str(RingElement(self.spec, value)) for value in row]
                 for row in self.rows]
        width = max(len(cell) for row in cells for cell in row)
        return '\n'.join(' '.join(cell.rjust(width) for cell in row)
                         for row in cells)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return '<RingMatrix %dx%d over %s>' % (self.nrows, self.ncols,
                                                self.spec)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.spec == other.spec and self.rows == other.rows

    def __hash__(self):
        return hash((self.spec, self.rows))


def _entry_value(spec, entry):
    if isinstance(entry, RingElement):
        if entry.spec is not spec and entry.spec != spec:
            raise InvalidParams('Cannot mix elements of %s and %s' %
                                (entry.spec, spec))
        return entry.value
    return RingElement(spec, entry).value


class ErasurePattern:
    """
    A set of erased ``(row, col)`` positions of an *m* × *n* array. Positions
    are kept in ascending order of their flat index ``row * n + col``.
    """

    __slots__ = ('m', 'n', 'positions')

    def __init__(self, positions, m, n):
        positions = [(int(i), int(j)) for i, j in positions]
        if len(set(positions)) != len(positions):
            raise InvalidParams('Duplicate erasure positions in %r' %
                                (positions,))
        for i, j in positions:
            if not (0 <= i < m and 0 <= j < n):
                raise InvalidParams('Position (%d, %d) outside %dx%d array'
                                    % (i, j, m, n))
        self.m = m
        self.n = n
        self.positions = tuple(sorted(positions))

    @classmethod
    def parse(cls, text, m, n):
        """
        Parses positions written as ``row,col`` pairs separated by spaces or
        semicolons, e.g. ``"0,1 2,3"``.
        """
        positions = []
        for token in re.split(r'[\s;]+', text.strip()):
            if not token:
                continue
            try:
                row, col = token.split(',')
                positions.append((int(row), int(col)))
            except ValueError:
                raise InvalidParams('Invalid erasure position %r' % token)
        return cls(positions, m, n)

    @property
    def indices(self):
        return tuple(i * self.n + j for i, j in self.positions)

    def by_row(self):
        rows = {}
        for i, j in self.positions:
            rows.setdefault(i, []).append(j)
        return {i: tuple(cols) for i, cols in rows.items()}

    def profile(self, r):
        """
        The number of erasures beyond *r* in each affected row, in row order.
        """
        return tuple(len(cols) - r for cols in self.by_row().values())

    def union(self, other):
        return ErasurePattern(set(self.positions) | set(other.positions),
                              self.m, self.n)

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __contains__(self, position):
        return tuple(position) in self.positions

    def __eq__(self, other):
        if not isinstance(other, ErasurePattern):
            return NotImplemented
        return (self.m, self.n, self.positions) == \
            (other.m, other.n, other.positions)

    def __hash__(self):
        return hash((self.m, self.n, self.positions))

    def __str__(self):
        return ' '.join('%d,%d' % position for position in self.positions)

    def __repr__(self):
        return 'ErasurePattern(%r, m=%d, n=%d)' % (
            list(self.positions), self.m, self.n)


def _stripe_exponent(variant, u, k, period):
    if variant == SQUARED:
        if u == 0:
            return 0
        return k * pow(2, u - 1, period) % period
    return u * k % period


def _global_exponent(variant, r, u, k, period):
    if variant == SQUARED:
        return k * pow(2, r - 1 + u, period) % period
    return (r + u) * k % period


@functools.lru_cache(maxsize=128)
def build_parity_check(params):
    """
    Builds the (mr + s) × mn parity-check matrix of the code. The rows of
    stripe *i* come first (r rows per stripe), the *s* global rows last.
    Column ``k = i*n + j`` belongs to entry *j* of stripe *i*.
    """
    m, n, r, s = params.m, params.n, params.r, params.s
    spec = params.spec
    power = spec.power_value
    period = spec.exponent
    length = m * n
    rows = []
    if params.variant == SHIFTED:
        for i in range(m):
            rows.append([int(k // n == i) for k in range(length)])
        shifted = [
            [power(j) for i in range(m) for j in range(n)],
            [power(i + j) for i in range(m) for j in range(n)],
        ]
        rows.extend(shifted[:s])
    else:
        for i in range(m):
            for u in range(r):
                row = [0] * length
                for j in range(n):
                    k = i * n + j
                    row[k] = power(
                        _stripe_exponent(params.variant, u, k, period))
                rows.append(row)
        for u in range(s):
            rows.append([
                power(_global_exponent(params.variant, r, u, k, period))
                for k in range(length)])
    log.debug('built %dx%d parity-check matrix for %s' %
              (len(rows), length, params.describe()))
    return RingMatrix._from_values(spec, rows)


def erasure_submatrix(H, pattern):
    """
    The columns of *H* belonging to the erased positions, in ascending flat
    order.
    """
    if not len(pattern):
        raise InvalidParams('Erasure pattern is empty')
    if H.ncols != pattern.m * pattern.n:
        raise InvalidParams('Pattern of a %dx%d array does not fit %d columns'
                            % (pattern.m, pattern.n, H.ncols))
    return H.select_columns(pattern.indices)


def erasure_system(H, pattern):
    """
    Like :func:`erasure_submatrix`, but without the rows that vanish on
    every erased column. Returns the matrix and the indices of the kept
    rows of *H*.
    """
    submatrix = erasure_submatrix(H, pattern)
    rows = submatrix.nonzero_rows()
    return submatrix.select_rows(rows), tuple(rows)


def _require_square(M):
    if not M.is_square:
        raise InvalidParams('Matrix of shape %dx%d is not square' % M.shape)


def _cofactor_determinant(rows, f):
    size = len(rows)
    memo = {}

    def minor(mask):
        # determinant of the trailing rows restricted to the columns in mask
        depth = size - bin(mask).count('1')
        if depth == size:
            return 1
        if mask in memo:
            return memo[mask]
        total = 0
        row = rows[depth]
        for j in range(size):
            if (mask >> j) & 1 and row[j]:
                sub = minor(mask & ~(1 << j))
                if sub:
                    total ^= _mulmod(row[j], sub, f)
        memo[mask] = total
        return total

    return minor((1 << size) - 1)


def _bareiss_determinant(rows, f):
    a = [list(row) for row in rows]
    size = len(a)
    previous = 1
    for k in range(size - 1):
        if not a[k][k]:
            for i in range(k + 1, size):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = _mul(pivot, a[i][j]) ^ _mul(a[i][k], a[k][j])
                a[i][j] = _divmod(value, previous)[0]
        previous = pivot
    return _mod(a[-1][-1], f)


def determinant(M):
    """
    The exact determinant of a square matrix over the ring: cofactor
    expansion for small matrices, fraction-free elimination in GF(2)[x]
    reduced modulo *f* otherwise.
    """
    _require_square(M)
    f = M.spec.f.value
    if M.nrows <= 6:
        value = _cofactor_determinant(M.rows, f)
    else:
        value = _bareiss_determinant(M.rows, f)
    return RingElement(M.spec, value)


def _gcd_pivot(rows, c, f):
    # Combines the rows below c into row c with unimodular 2x2 steps so
    # that row c holds the gcd of the column and the rows below hold zero.
    for i in range(c, len(rows)):
        if rows[i][c]:
            rows[c], rows[i] = rows[i], rows[c]
            break
    else:
        return
    for i in range(c + 1, len(rows)):
        b = rows[i][c]
        if not b:
            continue
        a = rows[c][c]
        g, s, t = _gcdext(a, b)
        a_g = _divmod(a, g)[0]
        b_g = _divmod(b, g)[0]
        top, other = rows[c], rows[i]
        rows[c] = [_mod(_mul(s, x) ^ _mul(t, y), f)
                   for x, y in zip(top, other)]
        rows[i] = [_mod(_mul(b_g, x) ^ _mul(a_g, y), f)
                   for x, y in zip(top, other)]


def _eliminate(rows, ncols, f):
    """
    Gauss-Jordan elimination of the first *ncols* columns of *rows* (lists
    of residues, modified in place).
    """
    nrows = len(rows)
    if nrows < ncols:
        raise SingularSystem('%d equations cannot determine %d unknowns' %
                             (nrows, ncols))
    for c in range(ncols):
        for i in range(c, nrows):
            if _is_unit(rows[i][c], f):
                rows[c], rows[i] = rows[i], rows[c]
                break
        else:
            _gcd_pivot(rows, c, f)
            if not _is_unit(rows[c][c], f):
                raise SingularSystem('No invertible pivot in column %d' % c)
        inverse = _invert(rows[c][c], f)
        pivot_row = rows[c] = [_mulmod(value, inverse, f)
                               for value in rows[c]]
        for i in range(nrows):
            factor = rows[i][c]
            if i == c or not factor:
                continue
            rows[i] = [value ^ _mulmod(factor, p, f) if p else value
                       for value, p in zip(rows[i], pivot_row)]
    return rows


def is_invertible(M):
    """
    Whether the square matrix *M* is invertible over the ring, i.e. whether
    its determinant is a unit.
    """
    _require_square(M)
    return is_left_invertible(M)


def is_left_invertible(M):
    """
    Whether a system with matrix *M* (at least as many rows as columns) has
    at most one solution for every right-hand side. Same as
    :func:`is_invertible` for square matrices.
    """
    try:
        _eliminate([list(row) for row in M.rows], M.ncols, M.spec.f.value)
    except SingularSystem:
        return False
    return True


def solve_linear(M, rhs):
    """
    Returns the unique vector *v* with ``M·v = rhs``. *M* must have at least
    as many rows as columns; surplus equations must be consistent.
    """
    if len(rhs) != M.nrows:
        raise InvalidParams('Right-hand side of length %d does not fit %d rows'
                            % (len(rhs), M.nrows))
    spec = M.spec
    f = spec.f.value
    augmented = [list(row) + [_entry_value(spec, value)]
                 for row, value in zip(M.rows, rhs)]
    _eliminate(augmented, M.ncols, f)
    solution = [RingElement(spec, augmented[j][-1]) for j in range(M.ncols)]
    expected = [RingElement(spec, _entry_value(spec, value)) for value in rhs]
    if M.apply(solution) != expected:
        raise SingularSystem('Linear system is inconsistent')
    return solution
