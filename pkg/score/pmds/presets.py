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
Concrete code instances with their recorded PMDS verdicts, one preset per
table of instances: codes with s = 2 and s = 3 over rings modulo
1 + x + ... + x^(p-1) for primes p where that polynomial is reducible, the
consecutive-power variant with s = 3 over the same rings, and codes with
s = 2 over finite fields given by irreducible polynomials in octal
notation.
"""

import dataclasses

from .errors import InvalidParams
from .matrix import CONSECUTIVE, SQUARED, CodeParams


Y, N = True, False


@dataclasses.dataclass(frozen=True)
class PresetRow:
    modulus: str
    m: int
    n: int
    pmds: bool

    @property
    def label(self):
        if self.modulus.startswith('mp:'):
            return self.modulus[3:]
        return self.modulus


@dataclasses.dataclass(frozen=True)
class Preset:
    name: str
    variant: str
    s: int
    description: str
    rows: tuple

    def params(self, row):
        return CodeParams(row.m, row.n, 1, self.s, self.variant, row.modulus)

    def select(self, primes=None, shapes=None):
        """
        The rows for the given primes (or octal polynomials) and ``(m, n)``
        shapes; `None` selects everything.
        """
        rows = self.rows
        if primes:
            wanted = {str(prime) for prime in primes}
            rows = tuple(row for row in rows if row.label in wanted)
        if shapes:
            wanted = {tuple(shape) for shape in shapes}
            rows = tuple(row for row in rows if (row.m, row.n) in wanted)
        return rows


def _rows(prefix, table):
    return tuple(PresetRow('%s%s' % (prefix, key), m, n, pmds)
                 for key, shapes in table
                 for m, n, pmds in shapes)


_RINGS_S2 = (
    (17, [(4, 4, Y)]),
    (23, [(3, 7, Y), (4, 5, Y)]),
    (31, [(5, 6, N), (6, 5, N)]),
    (41, [(5, 8, Y), (6, 6, Y), (8, 5, Y)]),
    (43, [(5, 8, Y), (6, 7, Y)]),
    (47, [(4, 11, Y), (5, 9, Y)]),
    (71, [(7, 10, Y), (8, 8, Y), (10, 7, Y)]),
    (73, [(6, 12, N), (7, 10, N), (8, 9, N), (9, 8, N)]),
    (79, [(6, 13, Y), (7, 11, Y), (8, 9, Y)]),
    (89, [(8, 11, N), (9, 9, N), (11, 8, Y)]),
    (97, [(8, 12, Y), (10, 9, Y), (12, 8, Y)]),
    (103, [(9, 11, Y), (10, 10, Y), (11, 9, Y)]),
    (109, [(9, 12, Y), (10, 10, Y), (12, 9, Y)]),
    (113, [(10, 11, Y), (11, 10, Y), (12, 9, Y)]),
    (127, [(11, 11, Y), (13, 9, Y)]),
    (137, [(11, 12, Y), (12, 11, Y), (13, 10, Y), (15, 9, Y), (16, 8, Y)]),
    (151, [(15, 10, Y), (16, 9, Y)]),
    (157, [(12, 13, Y), (13, 12, Y), (14, 11, Y), (15, 10, Y), (16, 9, Y)]),
    (167, [(12, 13, Y), (13, 12, Y), (15, 11, Y), (16, 10, Y)]),
    (191, [(13, 14, Y), (14, 13, Y), (17, 11, Y)]),
    (193, [(16, 12, Y)]),
    (199, [(14, 14, Y), (16, 12, Y)]),
    (223, [(15, 14, Y), (17, 13, Y)]),
    (229, [(15, 15, Y), (16, 14, Y)]),
    (233, [(15, 15, Y), (16, 14, Y)]),
    (239, [(15, 15, Y), (16, 14, Y)]),
    (241, [(16, 15, Y)]),
    (251, [(16, 15, Y), (25, 10, Y)]),
    (257, [(16, 16, Y), (32, 8, Y)]),
)

_RINGS_S3 = (
    (17, [(4, 4, N)]),
    (23, [(3, 7, Y), (4, 5, Y)]),
    (31, [(5, 6, N), (6, 5, N)]),
    (41, [(5, 8, Y), (6, 6, Y), (8, 5, Y)]),
    (43, [(5, 8, N), (6, 7, N)]),
    (47, [(4, 11, Y), (5, 9, Y)]),
    (71, [(7, 10, Y), (8, 8, Y), (10, 7, Y)]),
    (73, [(6, 12, N), (7, 10, N), (8, 9, N), (9, 8, N)]),
    (79, [(6, 13, Y), (7, 11, Y), (8, 9, Y)]),
    (89, [(8, 11, N), (9, 9, N), (11, 8, N)]),
    (97, [(8, 12, Y), (10, 9, Y), (12, 8, Y)]),
    (103, [(9, 11, Y), (10, 10, Y), (11, 9, Y)]),
    (109, [(9, 12, Y), (10, 10, Y), (12, 9, Y)]),
    (113, [(10, 11, Y), (11, 10, Y), (12, 9, Y)]),
    (127, [(11, 11, N), (13, 9, N)]),
    (137, [(11, 12, Y), (12, 11, Y)]),
    (151, [(15, 10, N), (16, 9, N)]),
    (157, [(12, 13, Y), (16, 9, Y)]),
    (167, [(16, 10, Y)]),
    (191, [(17, 11, Y)]),
    (193, [(16, 12, Y)]),
    (199, [(16, 12, Y)]),
    (223, [(17, 13, Y)]),
    (229, [(16, 14, Y), (28, 8, Y)]),
    (233, [(23, 10, Y)]),
    (239, [(26, 9, Y)]),
    (241, [(16, 15, N), (24, 10, N)]),
    (251, [(25, 10, Y)]),
    (257, [(16, 16, N), (32, 8, N)]),
)

_RINGS_S3_CONSECUTIVE = (
    (17, [(4, 4, N)]),
    (23, [(3, 7, N), (4, 5, Y)]),
    (31, [(5, 6, N), (6, 5, N)]),
    (41, [(5, 8, N), (6, 6, Y), (8, 5, Y)]),
    (43, [(5, 8, N), (6, 7, N)]),
    (47, [(4, 11, Y), (5, 9, Y)]),
    (71, [(7, 10, Y), (8, 8, Y), (10, 7, Y)]),
    (73, [(6, 12, N), (7, 10, N), (8, 9, N), (9, 8, N)]),
    (79, [(6, 13, Y), (7, 11, Y), (8, 9, Y)]),
    (89, [(8, 11, N), (9, 9, N), (11, 8, N)]),
    (97, [(8, 12, Y), (10, 9, Y), (12, 8, Y)]),
    (103, [(9, 11, Y), (10, 10, Y), (11, 9, Y)]),
    (109, [(9, 12, Y), (10, 10, Y), (12, 9, Y)]),
    (113, [(10, 11, N), (11, 10, N), (12, 9, N)]),
    (127, [(11, 11, N), (13, 9, N)]),
    (137, [(11, 12, Y), (12, 11, Y), (13, 10, Y), (15, 9, Y), (16, 8, Y)]),
    (151, [(15, 10, N), (16, 9, N)]),
    (157, [(12, 13, Y), (13, 12, Y), (16, 9, Y)]),
    (167, [(16, 10, Y)]),
    (191, [(17, 11, Y)]),
    (193, [(16, 12, Y)]),
    (199, [(16, 12, Y)]),
    (223, [(17, 13, Y)]),
    (229, [(16, 14, Y), (28, 8, Y)]),
    (233, [(23, 10, Y)]),
    (239, [(26, 9, Y)]),
    (241, [(24, 10, N)]),
    (251, [(25, 10, Y)]),
    (257, [(16, 16, N), (32, 8, N)]),
)

_FIELDS_S2 = (
    ('435', [(5, 5, Y)]),
    ('567', [(7, 5, Y)]),
    ('433', [(10, 5, Y)]),
    ('1021', [(20, 6, Y)]),
    ('1231', [(10, 7, Y)]),
    ('3025', [(21, 6, Y), (15, 7, Y)]),
    ('6015', [(29, 6, Y), (25, 7, Y), (22, 8, Y)]),
    ('5361', [(13, 10, Y)]),
    ('15647', [(67, 6, Y), (58, 7, Y), (50, 8, Y), (24, 9, Y), (22, 10, Y)]),
    ('227215', [(404, 6, Y), (346, 7, Y), (303, 8, Y), (269, 9, Y),
                (242, 10, Y), (164, 11, Y), (160, 12, Y), (59, 16, Y),
                (45, 17, Y), (53, 18, Y), (24, 20, Y), (19, 22, Y),
                (21, 23, Y), (18, 24, Y), (17, 25, Y), (16, 26, Y)]),
)


PRESETS = {
    preset.name: preset for preset in (
        Preset('table1', SQUARED, 2,
               'c0, r=1, s=2 over GF(2^b)',
               _rows('', _FIELDS_S2)),
        Preset('table2', SQUARED, 2,
               'c0, r=1, s=2 over reducible 1+x+...+x^(p-1)',
               _rows('mp:', _RINGS_S2)),
        Preset('table3', SQUARED, 3,
               'c0, r=1, s=3 over reducible 1+x+...+x^(p-1)',
               _rows('mp:', _RINGS_S3)),
        Preset('table4', CONSECUTIVE, 3,
               'c1, r=1, s=3 over reducible 1+x+...+x^(p-1)',
               _rows('mp:', _RINGS_S3_CONSECUTIVE)),
    )
}

# the tables over rings, run together by `pmds tables --paper`
RING_PRESETS = ('table2', 'table3', 'table4')


def get_preset(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidParams('Unknown preset %r, choose one of %s' %
                            (name, ', '.join(sorted(PRESETS))))
