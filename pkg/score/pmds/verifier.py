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
Decides whether a code is PMDS: either with closed-form criteria on sums
of powers of alpha (the *fast* method) or by inspecting every relevant
erasure pattern (the *oracle*).

All criteria are evaluated with the first affected stripe moved to row 0.
Multiplying a column set by the unit alpha^(i*n) does not change whether
its erasure system is solvable.
"""

import dataclasses
import enum
import functools
import itertools
import logging
import math

from . import _forked
from .codec import is_correctable
from .errors import (
    BudgetExceeded, InvalidParams, PmdsError, UnsupportedCase,
    VerificationMismatch)
from .matrix import CONSECUTIVE, SHIFTED, SQUARED, CodeParams, ErasurePattern
from .poly import RingElement, _mulmod


log = logging.getLogger(__name__)

# patterns the exhaustive search may inspect unless told otherwise
DEFAULT_BUDGET = 10 ** 8


@enum.unique
class Method(str, enum.Enum):
    FAST = 'fast'
    ORACLE = 'oracle'
    BOTH = 'both'


FAST = Method.FAST
ORACLE = Method.ORACLE
BOTH = Method.BOTH


class ErasureProfile(tuple):
    """
    The number of erasures beyond *r* in each affected row, rows in
    ascending order. ``ErasureProfile((2, 1))`` describes r + 2 erasures in
    one row and r + 1 in a later one.
    """

    def __new__(cls, parts):
        parts = tuple(int(part) for part in parts)
        if not parts or any(part < 1 for part in parts):
            raise InvalidParams('Invalid erasure profile %r' % (parts,))
        return super().__new__(cls, parts)

    @property
    def total(self):
        return sum(self)

    @property
    def is_odd(self):
        return all(part % 2 for part in self)

    def __str__(self):
        return '(%s)' % ','.join(str(part) for part in self)

    def __repr__(self):
        return 'ErasureProfile(%s)' % (self,)


@dataclasses.dataclass(frozen=True)
class PmdsVerdict:
    """
    The outcome of a verification. A negative verdict carries a *witness*,
    an erasure pattern the code cannot recover; the pattern is checked when
    the verdict is created.
    """

    is_pmds: bool
    params: CodeParams
    method: Method
    failing_profile: ErasureProfile = None
    witness: ErasurePattern = None
    failed_condition: str = None

    def __post_init__(self):
        object.__setattr__(self, 'method', Method(self.method))
        if self.is_pmds:
            return
        if self.witness is None:
            raise PmdsError('Negative verdict for %s without a witness' %
                            self.params.describe())
        if is_correctable(self.params, self.witness):
            raise PmdsError('Witness %s of %s is correctable' %
                            (self.witness, self.params.describe()))

    def as_dict(self):
        result = {
            'pmds': self.is_pmds,
            'code': self.params.as_dict(),
            'method': self.method.value,
        }
        if not self.is_pmds:
            result['failing_profile'] = \
                list(self.failing_profile) if self.failing_profile else None
            result['witness'] = [list(position) for position in self.witness]
            result['failed_condition'] = self.failed_condition
        return result

    def format_text(self):
        lines = ['PMDS: %s' % ('yes' if self.is_pmds else 'no'),
                 'code: %s' % self.params.describe(),
                 'method: %s' % self.method.value]
        if not self.is_pmds:
            if self.failing_profile:
                lines.append('profile: %s' % (self.failing_profile,))
            lines.append('witness: %s' % self.witness)
            lines.append('condition: %s' % self.failed_condition)
        return '\n'.join(lines)

    def __str__(self):
        return self.format_text()


def _compositions(total, parts):
    if parts < 1:
        return
    for first in range(total, 0, -1):
        if first == total:
            yield (first,)
            continue
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_profiles(s, m):
    """
    All compositions of *s* into at most *m* parts, the largest first part
    first: ``enumerate_profiles(3, 3)`` gives (3), (2,1), (1,2), (1,1,1).
    """
    if s < 1:
        return []
    return [ErasureProfile(parts) for parts in _compositions(s, m)]


def reduce_profile_odd(profile):
    """
    Replaces every even part by the odd number below it.
    """
    return ErasureProfile(part - 1 if part % 2 == 0 else part
                          for part in profile)


def _profile_of(params, pattern):
    parts = pattern.profile(params.r)
    if not parts or min(parts) < 1:
        return None
    return ErasureProfile(parts)


def _verdict(params, witness, condition, method=FAST):
    return PmdsVerdict(False, params, method, _profile_of(params, witness),
                       witness, condition)


@functools.lru_cache(maxsize=256)
def _colex(n, size):
    return tuple(sorted(itertools.combinations(range(n), size),
                        key=lambda cols: cols[::-1]))


# exhaustive search

def count_patterns(params, profile):
    """
    The number of erasure patterns the oracle inspects for *profile*.
    """
    sizes = [part + params.r for part in profile]
    if len(sizes) > params.m or any(size > params.n for size in sizes):
        return 0
    count = math.comb(params.m, len(sizes))
    for size in sizes:
        count *= math.comb(params.n, size)
    return count


def _first_singular(item):
    params, sizes, rows = item
    for choice in itertools.product(*(_colex(params.n, size)
                                      for size in sizes)):
        pattern = ErasurePattern(
            [(row, col) for row, cols in zip(rows, choice) for col in cols],
            params.m, params.n)
        if not is_correctable(params, pattern):
            return pattern
    return None


def _search(params, sizes, workers):
    items = ((params, sizes, rows)
             for rows in itertools.combinations(range(params.m), len(sizes)))
    results = _forked.fork_map(_first_singular, items, workers)
    try:
        for witness in results:
            if witness is not None:
                return witness
    finally:
        results.close()
    return None


def _check_budget(patterns, budget):
    if budget is not None and patterns > budget:
        raise BudgetExceeded(
            'Exhaustive search needs %d patterns, budget is %d' %
            (patterns, budget), patterns, budget)


def oracle_is_correcting(params, profile, budget=DEFAULT_BUDGET, workers=1):
    """
    Whether the code recovers every erasure pattern with the given
    *profile*: the rows in ascending order, in every row all column sets of
    size *s_j + r* in colexicographic order. The first unrecoverable pattern
    becomes the witness.

    Raises :class:`BudgetExceeded` before searching if there are more than
    *budget* patterns; `None` lifts the limit.
    """
    profile = ErasureProfile(profile)
    patterns = count_patterns(params, profile)
    _check_budget(patterns, budget)
    log.debug('searching %d patterns of profile %s for %s' %
              (patterns, profile, params.describe()))
    if patterns:
        witness = _search(
            params, tuple(part + params.r for part in profile), workers)
        if witness is not None:
            return PmdsVerdict(False, params, ORACLE, profile, witness,
                               'oracle')
    return PmdsVerdict(True, params, ORACLE)


def _supports_odd_profiles(params):
    return params.r == 1 and (
        params.variant == SQUARED or
        (params.variant == CONSECUTIVE and params.s <= 2))


def oracle_is_pmds(params, budget=DEFAULT_BUDGET, workers=1,
                   odd_profiles=False):
    """
    Runs :func:`oracle_is_correcting` for every profile of *s*. With
    *odd_profiles* every profile is replaced by its odd reduction, checked
    on the code with correspondingly fewer global parities; a witness found
    there is widened back to the full code.
    """
    if params.s == 0:
        patterns = params.m * math.comb(params.n, params.r)
        _check_budget(patterns, budget)
        witness = _search(params, (params.r,), workers)
        if witness is not None:
            return PmdsVerdict(False, params, ORACLE, None, witness,
                               'row-mds')
        return PmdsVerdict(True, params, ORACLE)
    profiles = [profile for profile in enumerate_profiles(params.s, params.m)
                if count_patterns(params, profile)]
    if odd_profiles:
        if not _supports_odd_profiles(params):
            raise InvalidParams('Odd profile reduction needs r=1 and variant '
                                'c0, or c1 with s <= 2')
        targets = []
        for profile in profiles:
            reduced = reduce_profile_odd(profile)
            if any(reduced == target[1] for target in targets):
                continue
            targets.append((params.replace(s=reduced.total), reduced,
                            profile))
    else:
        targets = [(params, profile, profile) for profile in profiles]
    _check_budget(sum(count_patterns(code, checked)
                      for code, checked, _ in targets), budget)
    for code, checked, profile in targets:
        log.debug('oracle checks profile %s on %s' %
                  (checked, code.describe()))
        witness = _search(
            code, tuple(part + code.r for part in checked), workers)
        if witness is None:
            continue
        if code != params:
            widened = _widen(params, witness)
            if is_correctable(params, widened):
                log.warning('widened witness %s of %s is correctable, '
                            'searching profile %s directly' %
                            (widened, params.describe(), profile))
                return oracle_is_correcting(params, profile, budget, workers)
            witness = widened
        return _verdict(params, witness, 'oracle', ORACLE)
    return PmdsVerdict(True, params, ORACLE)


# witness widening

def _pad_rows(params, pattern, width):
    positions = list(pattern)
    for row, cols in pattern.by_row().items():
        missing = [j for j in range(params.n) if j not in cols]
        positions.extend((row, j) for j in missing[:width - len(cols)])
    return ErasurePattern(positions, params.m, params.n)


def _widen(params, pattern):
    """
    Extends a pattern by further erasures until it has *s* erasures beyond
    the *r* of every affected row: first in its own rows, then in fresh
    rows with at least r + 1 erasures each.
    """
    rows = pattern.by_row()
    need = params.s - sum(len(cols) - params.r for cols in rows.values())
    positions = list(pattern)
    for row, cols in rows.items():
        missing = [j for j in range(params.n) if j not in cols][:need]
        positions.extend((row, j) for j in missing)
        need -= len(missing)
    for row in range(params.m):
        if need <= 0:
            break
        if row in rows:
            continue
        width = min(need + params.r, params.n)
        positions.extend((row, j) for j in range(width))
        need -= width - params.r
    if need > 0:
        raise PmdsError('Cannot widen %s to %d global erasures' %
                        (pattern, params.s))
    return ErasurePattern(positions, params.m, params.n)


# closed-form criteria

def _column_sums(table, base, n, size):
    period = len(table)
    sums = {}
    for cols in _colex(n, size):
        value = 0
        for col in cols:
            value ^= table[(base + col) % period]
        sums.setdefault(value, cols)
    return sums


def _find_zero_sum(tables, m, n, sizes):
    """
    Searches rows ``0 = d_0 < d_1 < ... < m`` and column sets of the given
    *sizes* whose powers alpha^(d*n + col) sum to an element with a
    vanishing image. Returns the positions or `None`.
    """
    t = len(sizes)
    if t > m:
        return None
    for table in tables:
        cache = {}

        def sums(row, size):
            key = row, size
            if key not in cache:
                cache[key] = _column_sums(table, row * n, n, size)
            return cache[key]

        if t == 1:
            found = sums(0, sizes[0]).get(0)
            if found is not None:
                return [(0, col) for col in found]
            continue
        for middle in itertools.combinations(range(1, m), t - 2):
            head = (0,) + middle
            prefix = {0}
            for row, size in zip(head, sizes):
                prefix = {a ^ b for a in prefix for b in sums(row, size)}
            for last in range(head[-1] + 1, m):
                tail = sums(last, sizes[-1])
                if prefix.isdisjoint(tail):
                    continue
                value = next(v for v in tail if v in prefix)
                positions = [(last, col) for col in tail[value]]
                choices = [sums(row, size).items()
                           for row, size in zip(head, sizes)]
                for choice in itertools.product(*choices):
                    total = 0
                    for partial, _ in choice:
                        total ^= partial
                    if total == value:
                        for row, (_, cols) in zip(head, choice):
                            positions.extend((row, col) for col in cols)
                        return positions
    return None


def _check_xor_levels(params):
    m, n = params.m, params.n
    tables = params.spec.root_tables
    for level in range(1, params.s + 1):
        for composition in enumerate_profiles(level, m):
            sizes = tuple(part + 1 for part in composition)
            if not composition.is_odd or max(sizes) > n:
                continue
            log.debug('checking xor sums of composition %s' % (composition,))
            found = _find_zero_sum(tables, m, n, sizes)
            if found is not None:
                witness = _widen(params, ErasurePattern(found, m, n))
                return _verdict(params, witness, 'xor-sum%s' % (composition,))
    return PmdsVerdict(True, params, FAST)


def _check_row_weights(params, width):
    # every even set of at most `width` columns needs a unit sum
    if width > params.n:
        return PmdsVerdict(True, params, FAST)
    spec = params.spec
    for size in range(2, width + 1, 2):
        for cols in _colex(params.n, size):
            if not spec.is_unit_sum(cols):
                witness = _pad_rows(
                    params, ErasurePattern([(0, j) for j in cols],
                                           params.m, params.n), width)
                return _verdict(params, witness, 'row-weight')
    return PmdsVerdict(True, params, FAST)


def _check_binomials(params, limit, width):
    # 1 + alpha^j for 0 < j < limit <= n, with width <= n
    spec = params.spec
    for j in range(1, limit):
        if spec.is_unit_sum((0, j)):
            continue
        witness = _pad_rows(
            params, ErasurePattern([(0, 0), (0, j)], params.m, params.n),
            width)
        return _verdict(params, witness, 'binomial')
    return PmdsVerdict(True, params, FAST)


def _check_g_polynomial(params):
    m, n = params.m, params.n
    if n < 3 or m < 2:
        return PmdsVerdict(True, params, FAST)
    triples = _colex(n, 3)
    for g, table in params.spec.root_fields:
        period = len(table)
        weights = []
        for l0, l1, l2 in triples:
            d1, d2 = l1 - l0, l2 - l0
            value = 0
            for e in (0, d1, d2, 2 * d1, 2 * d2, d1 + d2):
                value ^= table[e % period]
            weights.append(value)
        for i in range(1, m):
            for first, first_weight in zip(triples, weights):
                for second, second_weight in zip(triples, weights):
                    shift = table[2 * (i * n + second[0] - first[0]) % period]
                    if first_weight ^ _mulmod(shift, second_weight, g):
                        continue
                    witness = ErasurePattern(
                        [(0, j) for j in first] + [(i, j) for j in second],
                        m, n)
                    return _verdict(params, witness, 'g-polynomial')
    return PmdsVerdict(True, params, FAST)


def _determinant3(c1, c2, c3, g):
    return (_mulmod(c3[0], _mulmod(c1[1], c2[2], g) ^
                    _mulmod(c1[2], c2[1], g), g) ^
            _mulmod(c3[1], _mulmod(c1[0], c2[2], g) ^
                    _mulmod(c1[2], c2[0], g), g) ^
            _mulmod(c3[2], _mulmod(c1[0], c2[1], g) ^
                    _mulmod(c1[1], c2[0], g), g))


def _check_consecutive_three(params):
    m, n = params.m, params.n
    verdict = _check_binomials(params, n, 4)
    if not verdict.is_pmds:
        return verdict
    pairs = _colex(n, 2)
    triples = _colex(n, 3)
    for g, table in params.spec.root_fields:
        period = len(table)

        def column(shift, delta):
            # alpha^(u*shift) * (1 + alpha^(u*delta)) for u = 1, 2, 3
            return tuple(
                _mulmod(table[u * shift % period],
                        1 ^ table[u * delta % period], g)
                for u in (1, 2, 3))

        # r + 2 erasures in one row, r + 1 in another
        if n >= 3 and m >= 2:
            for offset in itertools.chain(range(1, m), range(-1, -m, -1)):
                first_row, second_row = (0, offset) if offset > 0 \
                    else (-offset, 0)
                for triple in triples:
                    c1 = column(0, triple[1] - triple[0])
                    c2 = column(0, triple[2] - triple[0])
                    for pair in pairs:
                        c3 = column(offset * n + pair[0] - triple[0],
                                    pair[1] - pair[0])
                        if _determinant3(c1, c2, c3, g):
                            continue
                        witness = ErasurePattern(
                            [(first_row, j) for j in triple] +
                            [(second_row, j) for j in pair], m, n)
                        return _verdict(params, witness, 'mixed-3x3')
        # r + 1 erasures in three rows
        if m >= 3:
            for second_row, third_row in itertools.combinations(
                    range(1, m), 2):
                for second in pairs:
                    for third in pairs:
                        for first in pairs:
                            c1 = column(0, first[1] - first[0])
                            c2 = column(second_row * n + second[0] - first[0],
                                        second[1] - second[0])
                            c3 = column(third_row * n + third[0] - first[0],
                                        third[1] - third[0])
                            if _determinant3(c1, c2, c3, g):
                                continue
                            witness = ErasurePattern(
                                [(0, j) for j in first] +
                                [(second_row, j) for j in second] +
                                [(third_row, j) for j in third], m, n)
                            return _verdict(params, witness, 'pairs-3x3')
    return PmdsVerdict(True, params, FAST)


def _check_shifted_two(params):
    m, n = params.m, params.n
    if n >= 3:
        witness = ErasurePattern([(0, 0), (0, 1), (0, 2)], m, n)
        return _verdict(params, witness, 'three-in-row')
    return _check_binomials(params, max(m, n), 2)


def check_fast(params):
    """
    Decides the PMDS property with the closed-form criterion that applies to
    the parameters. Raises :class:`UnsupportedCase` if there is none.
    """
    variant, r, s = params.variant, params.r, params.s
    if s == 0:
        log.debug('row MDS check for %s' % params.describe())
        if variant == SQUARED:
            return _check_row_weights(params, r)
        return _check_binomials(params, params.n, r)
    if r == 1 and (variant == SQUARED or
                   (variant == CONSECUTIVE and s <= 2)):
        return _check_xor_levels(params)
    if variant == SQUARED and s == 1:
        return _check_row_weights(params, r + 1)
    if variant == SQUARED and r == 2 and s == 2:
        verdict = _check_row_weights(params, 4)
        if not verdict.is_pmds:
            return verdict
        return _check_g_polynomial(params)
    if variant == CONSECUTIVE and s == 1:
        return _check_binomials(params, params.n, r + 1)
    if variant == CONSECUTIVE and r == 1 and s == 3:
        return _check_consecutive_three(params)
    if variant == SHIFTED and s == 1:
        return _check_binomials(params, params.n, 2)
    if variant == SHIFTED and s == 2:
        return _check_shifted_two(params)
    raise UnsupportedCase('No closed-form criterion for %s' %
                          params.describe())


def check_special_combo_1_4(params):
    """
    For variant c0 with r=1 and s=4: whether the code recovers all patterns
    of profiles (4) and (2,2). Both hold iff the two-row sums of pairs and
    the sums of four columns of a row are units.
    """
    if params.variant != SQUARED or params.r != 1 or params.s != 4:
        raise InvalidParams('Only defined for variant c0 with r=1, s=4')
    m, n = params.m, params.n
    tables = params.spec.root_tables
    for sizes, width in (((2, 2), 3), ((4,), 5)):
        if width > n or len(sizes) > m:
            continue
        found = _find_zero_sum(tables, m, n, sizes)
        if found is not None:
            witness = _pad_rows(params, ErasurePattern(found, m, n), width)
            condition = 'xor-sum%s' % (ErasureProfile(
                size - 1 for size in sizes),)
            return _verdict(params, witness, condition)
    return PmdsVerdict(True, params, FAST)


def moore_determinant(first_row):
    """
    The determinant of the square matrix whose row *u* holds the 2^u-th
    powers of *first_row*: the product of the sums over all nonempty subsets
    of *first_row*.
    """
    elements = list(first_row)
    if not elements:
        raise InvalidParams('Need at least one element')
    spec = elements[0].spec
    result = RingElement(spec, 1)
    sums = [RingElement(spec, 0)]
    for element in elements:
        extended = [value + element for value in sums]
        for value in extended:
            result = result * value
        sums.extend(extended)
    return result


def check(params, method=FAST, budget=DEFAULT_BUDGET, workers=1,
          odd_profiles=False):
    """
    Verifies *params* with the given *method*. The fast method falls back to
    the oracle when no closed-form criterion applies; ``both`` runs both and
    raises :class:`VerificationMismatch` if they disagree.
    """
    method = Method(method)
    if method == ORACLE:
        return oracle_is_pmds(params, budget, workers, odd_profiles)
    try:
        fast = check_fast(params)
    except UnsupportedCase as e:
        log.debug('%s, falling back to the oracle' % e)
        return oracle_is_pmds(params, budget, workers, odd_profiles)
    if method == FAST:
        return fast
    oracle = oracle_is_pmds(params, budget, workers, odd_profiles)
    if fast.is_pmds != oracle.is_pmds:
        log.error('fast and oracle verdicts differ for %s: %s / %s' %
                  (params.describe(), fast.is_pmds, oracle.is_pmds))
        raise VerificationMismatch(
            'Verdicts differ for %s' % params.describe(), fast, oracle)
    return fast
