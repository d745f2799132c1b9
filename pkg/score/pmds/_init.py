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

import logging
from score.init import (
    ConfiguredModule, parse_list, parse_bool, InitializationError)
from .codec import get_code
from .errors import InvalidParams
from .matrix import CodeParams
from .presets import get_preset
from .reliability import DEFAULT_P_VALUES, ReliabilityParams, table5
from .verifier import DEFAULT_BUDGET, Method, check


log = logging.getLogger('score.pmds')

defaults = {
    'budget': DEFAULT_BUDGET,
    'workers': 1,
    'odd_profiles': False,
    'check': 'fast',
    'reliability.t': 15,
    'reliability.m': 16,
    'reliability.n': 6,
    'reliability.blocks': 500000,
    'reliability.info_bits': 4096,
    'reliability.sectors': 8,
    'reliability.p': list(DEFAULT_P_VALUES),
}


def _parse_int(conf, key, minimum=1):
    import score.pmds
    try:
        value = int(conf[key])
    except (TypeError, ValueError):
        raise InitializationError(score.pmds, 'Invalid integer for %s: %r' %
                                  (key, conf[key]))
    if value < minimum:
        raise InitializationError(score.pmds, '%s must be at least %d' %
                                  (key, minimum))
    return value


def init(confdict):
    """
    Initializes this module acoording to :ref:`our module initialization
    guidelines <module_initialization>` with the following configuration keys:

    :confkey:`budget` :confdefault:`100000000`
        The largest number of erasure patterns an exhaustive search may
        inspect before giving up.

    :confkey:`workers` :confdefault:`1`
        Number of processes used by exhaustive searches.

    :confkey:`odd_profiles` :confdefault:`False`
        When set to :func:`true <score.init.parse_bool>`, exhaustive searches
        for codes with a single row parity only inspect profiles made of odd
        numbers, where the construction allows it.

    :confkey:`check` :confdefault:`fast`
        The default verification method: ``fast``, ``oracle`` or ``both``.

    :confkey:`reliability.t` :confdefault:`15`
        Number of bit errors the sector BCH code corrects. The further keys
        ``reliability.m``, ``reliability.n``, ``reliability.blocks``,
        ``reliability.info_bits`` and ``reliability.sectors`` configure the
        remaining parameters of the reliability model.

    :confkey:`reliability.p`
        The :func:`list <score.init.parse_list>` of bit error probabilities
        of the reliability table.

    """
    import score.pmds
    conf = defaults.copy()
    conf.update(confdict)
    budget = _parse_int(conf, 'budget')
    workers = _parse_int(conf, 'workers')
    odd_profiles = parse_bool(conf['odd_profiles'])
    try:
        method = Method(conf['check'])
    except ValueError:
        raise InitializationError(score.pmds, 'Invalid check method %r' %
                                  (conf['check'],))
    try:
        p_values = [float(p) for p in parse_list(conf['reliability.p'])]
        reliability = ReliabilityParams(
            t=_parse_int(conf, 'reliability.t'),
            m=_parse_int(conf, 'reliability.m', 3),
            n=_parse_int(conf, 'reliability.n', 2),
            blocks=_parse_int(conf, 'reliability.blocks'),
            info_bits=_parse_int(conf, 'reliability.info_bits'),
            sectors=_parse_int(conf, 'reliability.sectors'))
        for p in p_values:
            if not 0 < p < 1:
                raise ValueError('Bit error probability %r not in (0, 1)' % p)
    except (ValueError, InvalidParams) as e:
        raise InitializationError(score.pmds, str(e))
    return ConfiguredPmdsModule(budget, workers, odd_profiles, method,
                                reliability, p_values)


class ConfiguredPmdsModule(ConfiguredModule):
    """
    This module's :class:`configuration class
    <score.init.ConfiguredModule>`.
    """

    def __init__(self, budget, workers, odd_profiles, method, reliability,
                 p_values):
        import score.pmds
        ConfiguredModule.__init__(self, score.pmds)
        self.budget = budget
        self.workers = workers
        self.odd_profiles = odd_profiles
        self.method = method
        self.reliability = reliability
        self.p_values = p_values

    def params(self, m, n, r=1, s=2, variant='c0', modulus='mp:17'):
        """
        Convenience constructor of :class:`score.pmds.CodeParams`.
        """
        return CodeParams(m, n, r, s, variant, modulus)

    def code(self, params):
        return get_code(params)

    def check(self, params, method=None):
        """
        Verifies the PMDS property of *params* using the configured method,
        budget and number of workers.
        """
        if method is None:
            method = self.method
        return check(params, method, self.budget, self.workers,
                     self.odd_profiles)

    def check_preset(self, name, method=None, primes=None, shapes=None):
        """
        Verifies the (selected) rows of a preset. Returns a list of
        ``(row, verdict)`` pairs; rows whose verdict deviates from the
        recorded one are logged.
        """
        preset = get_preset(name)
        results = []
        for row in preset.select(primes, shapes):
            verdict = self.check(preset.params(row), method)
            if verdict.is_pmds != row.pmds:
                log.warning('%s: %s %dx%d was recorded as %s' %
                            (name, row.label, row.m, row.n,
                             'PMDS' if row.pmds else 'not PMDS'))
            results.append((row, verdict))
        return results

    def reliability_table(self, p_values=None):
        if p_values is None:
            p_values = self.p_values
        return table5(p_values, self.reliability)
