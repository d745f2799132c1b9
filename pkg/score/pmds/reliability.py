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
Probability of data loss after a catastrophic device failure for arrays
protected by a code correcting one erasure in each of two stripes and by
a PMDS code correcting two erasures in any one stripe, when sectors carry
a t-error-correcting BCH code and the raw bit error probability is *p*.
"""

import csv
import dataclasses
import logging
import math

import numpy as np
from scipy.special import gammaln, logsumexp
from scipy.stats import binom

from .errors import InvalidParams


log = logging.getLogger(__name__)

DEFAULT_P_VALUES = (.0001, .0002, .0003, .0004, .0005, .0006, .0007, .0008,
                    .0009, .001)

# terms below this fraction of the running sum end the summation
_RELATIVE_CUTOFF = 1e-30


@dataclasses.dataclass(frozen=True)
class ReliabilityParams:
    p: float = None
    t: int = 15
    info_bits: int = 4096
    bch_degree: int = 13
    sectors: int = 8
    m: int = 16
    n: int = 6
    blocks: int = 500000

    def __post_init__(self):
        if self.p is not None and not 0 <= self.p < 1:
            raise InvalidParams('Bit error probability %r not in [0, 1)' %
                                (self.p,))
        for name in ('t', 'info_bits', 'bch_degree', 'sectors', 'm', 'n',
                     'blocks'):
            if getattr(self, name) < 1:
                raise InvalidParams('%s must be positive' % name)
        if self.n < 2:
            raise InvalidParams('n must be at least 2')

    @property
    def redundancy_bits(self):
        return self.bch_degree * self.t

    @property
    def codeword_bits(self):
        return self.info_bits + self.redundancy_bits

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


@dataclasses.dataclass(frozen=True)
class ReliabilityRow:
    p: float
    P: float
    P_H: float
    P_S_m13: float
    P_S_m21: float
    P_S_m31: float
    P_S_111EC: float
    P_S_12PMDS: float
    P_DL_111EC: float
    P_DL_12PMDS: float


LABELS = (
    ('p', 'p'),
    ('P', 'P'),
    ('P_H', 'P_H'),
    ('P_S_m13', 'P_S(m,1,3)'),
    ('P_S_m21', 'P_S(m,2,1)'),
    ('P_S_m31', 'P_S(m,3,1)'),
    ('P_S_111EC', 'P_S(1;1,1)EC'),
    ('P_S_12PMDS', 'P_S(1;2)PMDS'),
    ('P_DL_111EC', 'P_DL(1;1,1)EC'),
    ('P_DL_12PMDS', 'P_DL(1;2)PMDS'),
)


def _log_term(trials, i, p):
    return (gammaln(trials + 1) - gammaln(i + 1) - gammaln(trials - i + 1) +
            i * math.log(p) + (trials - i) * math.log1p(-p))


def binomial_tail(trials, k, p, method='incremental'):
    """
    The probability of at least *k* successes in *trials* Bernoulli trials
    with success probability *p*.

    ``incremental`` sums the terms from *k* upwards with the ratio of
    consecutive terms until they no longer contribute, ``log`` sums all terms
    in the log domain and ``scipy`` uses :data:`scipy.stats.binom`.
    """
    if k <= 0:
        return 1.0
    if k > trials or p <= 0:
        return 0.0
    if p >= 1:
        return 1.0
    if method == 'scipy':
        return float(binom.sf(k - 1, trials, p))
    if method == 'log':
        i = np.arange(k, trials + 1)
        terms = (gammaln(trials + 1) - gammaln(i + 1) -
                 gammaln(trials - i + 1) + i * np.log(p) +
                 (trials - i) * np.log1p(-p))
        return float(math.exp(logsumexp(terms)))
    if method != 'incremental':
        raise InvalidParams('Unknown summation method %r' % (method,))
    term = math.exp(_log_term(trials, k, p))
    total = term
    ratio = p / (1 - p)
    for i in range(k, trials):
        term *= (trials - i) / (i + 1) * ratio
        total += term
        if term < total * _RELATIVE_CUTOFF:
            break
    return total


def codeword_failure(params, method='incremental'):
    """
    Probability P that a sector codeword has more than *t* bit errors.
    """
    return binomial_tail(params.codeword_bits, params.t + 1, params.p, method)


def page_hard_error(P, sectors=8):
    """
    Probability that at least one of the *sectors* codewords of a page
    fails.
    """
    return -math.expm1(sectors * math.log1p(-P))


def stripe_probs(P_H, n):
    """
    Returns the probabilities of exactly one, more than one and more than
    two hard errors among the *n - 1* surviving pages of a stripe.
    """
    one = (n - 1) * P_H * (1 - P_H) ** (n - 2)
    return one, binomial_tail(n - 1, 2, P_H), binomial_tail(n - 1, 3, P_H)


def block_probs(P_H, params):
    """
    Returns the block-level probabilities ``(S_m13, S_m21, S_m31)``: exactly
    one hard error in at least three of the *m* stripes, at least two hard
    errors in a stripe, at least three hard errors in a stripe.
    """
    m, n = params.m, params.n
    one, more_than_one, more_than_two = stripe_probs(P_H, n)
    clean = math.log1p(-P_H) * (n - 1) if P_H < 1 else -math.inf
    s13 = 0.0
    for i in range(3, m + 1):
        if not one:
            break
        s13 += math.exp(math.log(math.comb(m, i)) + i * math.log(one) +
                        (m - i) * clean)
    return s13, m * more_than_one, m * more_than_two


def scheme_block_loss(block):
    """
    Block data loss probabilities ``(EC, PMDS)`` for the code correcting
    one erasure in two stripes and the PMDS code correcting two erasures in
    one stripe.
    """
    s13, s21, s31 = block
    return s13 + s21, s13 + s31


def device_data_loss(P_S, blocks):
    """
    Probability that at least one of *blocks* independent blocks loses
    data.
    """
    if P_S >= 1:
        return 1.0
    return -math.expm1(blocks * math.log1p(-P_S))


def evaluate(params, method='incremental'):
    if params.p is None:
        raise InvalidParams('No bit error probability given')
    P = codeword_failure(params, method)
    P_H = page_hard_error(P, params.sectors)
    block = block_probs(P_H, params)
    ec, pmds = scheme_block_loss(block)
    return ReliabilityRow(
        params.p, P, P_H, block[0], block[1], block[2], ec, pmds,
        device_data_loss(ec, params.blocks),
        device_data_loss(pmds, params.blocks))


def table5(p_values=DEFAULT_P_VALUES, params=None, method='incremental'):
    """
    One :class:`ReliabilityRow` per bit error probability.
    """
    if params is None:
        params = ReliabilityParams()
    log.debug('reliability table for %d values of p' % len(p_values))
    return [evaluate(params.replace(p=p), method) for p in p_values]


def _format_value(value):
    if value == 0:
        return '0'
    if .01 <= value < 1:
        return ('%.2g' % value).lstrip('0')
    mantissa, exponent = ('%.1E' % value).split('E')
    return '%sE%d' % (mantissa, int(exponent))


def format_table(rows):
    """
    Renders the rows as an aligned text table, one line per quantity and
    one column per *p*.
    """
    lines = []
    for attribute, label in LABELS:
        if attribute == 'p':
            cells = [('%g' % row.p).lstrip('0') for row in rows]
        else:
            cells = [_format_value(getattr(row, attribute)) for row in rows]
        lines.append([label] + cells)
    widths = [max(len(line[i]) for line in lines)
              for i in range(len(lines[0]))]
    return '\n'.join(
        ' '.join(cell.ljust(width) if i == 0 else cell.rjust(width)
                 for i, (cell, width) in enumerate(zip(line, widths)))
        for line in lines)


def write_csv(rows, stream):
    """
    Writes one CSV line per row, headed by the field names of
    :class:`ReliabilityRow`.
    """
    writer = csv.writer(stream, lineterminator='\n')
    names = [field.name for field in dataclasses.fields(ReliabilityRow)]
    writer.writerow(names)
    for row in rows:
        writer.writerow([repr(getattr(row, name)) for name in names])
