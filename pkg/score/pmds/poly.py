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
Arithmetic on binary polynomials and on residues modulo a binary polynomial
f(x). Polynomials are plain non-negative integers internally: bit i holds
the coefficient of x^i.
"""

import enum
import functools
import itertools
import logging

from .errors import InvalidParams, NotInvertible, UnsupportedCase


log = logging.getLogger(__name__)

# largest exponent for which the powers of alpha are tabulated
_POWER_TABLE_LIMIT = 1 << 20


def _degree(a):
    return a.bit_length() - 1


def _mul(a, b):
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _mod(a, f):
    if not f:
        raise ZeroDivisionError('division by zero polynomial')
    length = f.bit_length()
    while True:
        shift = a.bit_length() - length
        if shift < 0:
            return a
        a ^= f << shift


def _divmod(a, f):
    if not f:
        raise ZeroDivisionError('division by zero polynomial')
    length = f.bit_length()
    q = 0
    while True:
        shift = a.bit_length() - length
        if shift < 0:
            return q, a
        q ^= 1 << shift
        a ^= f << shift


def _mulmod(a, b, f):
    return _mod(_mul(a, b), f)


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _gcdext(a, b):
    """
    Returns ``(d, s, t)`` with ``s*a + t*b = d = gcd(a, b)``.
    """
    s, s1 = 1, 0
    t, t1 = 0, 1
    while b:
        q, r = _divmod(a, b)
        a, b = b, r
        s, s1 = s1, s ^ _mul(q, s1)
        t, t1 = t1, t ^ _mul(q, t1)
    return a, s, t


def _invert(a, f):
    a = element = _mod(a, f)
    b = f
    s, s1 = 1, 0
    while b:
        q, r = _divmod(a, b)
        a, b = b, r
        s, s1 = s1, s ^ _mul(q, s1)
    if a != 1:
        raise NotInvertible('%s is not invertible modulo %s' %
                            (_to_terms(element), _to_terms(f)))
    return _mod(s, f)


def _powmod(a, n, f):
    result = 1
    a = _mod(a, f)
    while n:
        if n & 1:
            result = _mulmod(result, a, f)
        a = _mulmod(a, a, f)
        n >>= 1
    return _mod(result, f)


def _is_irreducible(f):
    if f <= 1:
        return False
    b = 2
    for _ in range(_degree(f) // 2):
        b = _mulmod(b, b, f)
        if _gcd(b ^ 2, f) != 1:
            return False
    return True


def _is_unit(a, f):
    return bool(a) and _gcd(f, a) == 1


def _to_terms(a):
    if not a:
        return '0'
    terms = []
    for i in range(_degree(a), -1, -1):
        if (a >> i) & 1:
            if i == 0:
                terms.append('1')
            elif i == 1:
                terms.append('x')
            else:
                terms.append('x^%d' % i)
    return '+'.join(terms)


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n):
    factors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            factors.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def multiplicative_order(a, p):
    """
    The least ``k > 0`` with ``a**k % p == 1``. *a* and *p* must be coprime.
    """
    a %= p
    if p == 1:
        return 1
    value, k = a, 1
    while value != 1:
        if not value:
            raise InvalidParams('%d is not invertible modulo %d' % (a, p))
        value = value * a % p
        k += 1
    return k


class BinPoly:
    """
    A polynomial over GF(2), stored as the integer whose bit *i* is the
    coefficient of x^i. The zero polynomial has degree -1.
    """

    __slots__ = ('value',)

    def __init__(self, value=0):
        if isinstance(value, BinPoly):
            value = value.value
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidParams('Invalid polynomial value %r' % (value,))
        self.value = value

    @classmethod
    def from_octal(cls, text):
        """
        Parses the octal coefficient notation of irreducible polynomial
        tables: ``"435"`` (or ``"0o435"`` or ``"4 3 5"``) is
        x^8 + x^4 + x^3 + x^2 + 1.
        """
        digits = ''.join(str(text).split())
        if digits.lower().startswith('0o'):
            digits = digits[2:]
        try:
            return cls(int(digits, 8))
        except ValueError:
            raise InvalidParams('Not an octal polynomial: %r' % (text,))

    @classmethod
    def from_exponents(cls, exponents):
        value = 0
        for exponent in exponents:
            value ^= 1 << exponent
        return cls(value)

    @classmethod
    def monomial(cls, exponent):
        return cls(1 << exponent)

    @classmethod
    def all_one(cls, length):
        """
        The polynomial 1 + x + ... + x^(length-1).
        """
        return cls((1 << length) - 1)

    @property
    def degree(self):
        return _degree(self.value)

    def exponents(self):
        return [i for i in range(self.value.bit_length())
                if (self.value >> i) & 1]

    def to_octal(self):
        return '%o' % self.value

    def _other(self, other):
        if isinstance(other, BinPoly):
            return other.value
        if isinstance(other, int) and other >= 0:
            return other
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BinPoly(self.value ^ other)

    __radd__ = __sub__ = __rsub__ = __xor__ = __rxor__ = __add__

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BinPoly(_mul(self.value, other))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        q, r = _divmod(self.value, other)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BinPoly(_mod(self.value, other))

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        return self.value

    def __str__(self):
        return _to_terms(self.value)

    def __repr__(self):
        return 'BinPoly(%s)' % _to_terms(self.value)


@enum.unique
class ModulusKind(str, enum.Enum):
    IRREDUCIBLE = 'irreducible'
    ALL_ONE = 'all-one'


IRREDUCIBLE = ModulusKind.IRREDUCIBLE
ALL_ONE = ModulusKind.ALL_ONE


class ModulusSpec:
    """
    The defining polynomial *f* of a field or ring GF(2)[x]/(f) together
    with its degree (the number of bits per symbol), its exponent and its
    kind. Accepted moduli are irreducible polynomials and all-one polynomials
    1 + x + ... + x^(p-1) for odd primes *p*; the latter define a ring with
    zero divisors whenever 2 is not primitive modulo *p*.
    """

    def __init__(self, f):
        f = BinPoly(f)
        if f.degree < 1:
            raise InvalidParams('Modulus %s must have positive degree' % f)
        if not f.value & 1:
            raise InvalidParams('Modulus %s is divisible by x' % f)
        length = f.degree + 1
        if length >= 3 and f.value == (1 << length) - 1 and _is_prime(length):
            self.kind = ALL_ONE
            self.prime = length
            self.exponent = length
        elif _is_irreducible(f.value):
            self.kind = IRREDUCIBLE
            self.prime = None
            self.exponent = exponent_of(f)
        else:
            raise InvalidParams(
                '%s is neither irreducible nor an all-one polynomial of '
                'prime length' % f)
        self.f = f
        self.degree = f.degree

    @classmethod
    def all_one(cls, p):
        if not _is_prime(p) or p < 3:
            raise InvalidParams('%r is not an odd prime' % (p,))
        return cls(BinPoly.all_one(p))

    @classmethod
    def parse(cls, text):
        """
        Accepts ``mp:<prime>`` for the all-one polynomial of that prime or an
        octal coefficient string like ``435``.
        """
        text = str(text).strip()
        if text.lower().startswith('mp:'):
            try:
                p = int(text[3:])
            except ValueError:
                raise InvalidParams('Invalid prime in modulus %r' % text)
            return cls.all_one(p)
        return cls(BinPoly.from_octal(text))

    @property
    def b(self):
        return self.degree

    @property
    def label(self):
        if self.kind == ALL_ONE:
            return 'mp:%d' % self.prime
        return '0o%s' % self.f.to_octal()

    @functools.cached_property
    def is_field(self):
        if self.kind == ALL_ONE:
            return is_two_primitive(self.prime)
        return True

    @property
    def zero(self):
        return RingElement(self, 0)

    @property
    def one(self):
        return RingElement(self, 1)

    @property
    def alpha(self):
        return self.power(1)

    def element(self, value):
        return RingElement(self, value)

    @functools.cached_property
    def _powers(self):
        if self.exponent > _POWER_TABLE_LIMIT:
            return None
        f = self.f.value
        top = 1 << self.degree
        powers = [1]
        value = 1
        for _ in range(self.exponent - 1):
            value <<= 1
            if value & top:
                value ^= f
            powers.append(value)
        return powers

    @functools.cached_property
    def _logarithms(self):
        if self._powers is None:
            return {}
        return {value: exponent for exponent, value in enumerate(self._powers)}

    def power_value(self, exponent):
        exponent %= self.exponent
        if self._powers is not None:
            return self._powers[exponent]
        return _powmod(2, exponent, self.f.value)

    def power(self, exponent):
        """
        Returns alpha^exponent, where alpha is the residue of x. Negative
        exponents are reduced modulo the exponent of *f*.
        """
        return RingElement(self, self.power_value(exponent))

    def logarithm(self, value):
        """
        Returns the exponent *j* with alpha^j equal to *value*, or `None` if
        the value is not a power of alpha.
        """
        if isinstance(value, RingElement):
            value = value.value
        return self._logarithms.get(value)

    def is_unit(self, value):
        if isinstance(value, RingElement):
            value = value.value
        return _is_unit(value, self.f.value)

    @functools.cached_property
    def root_fields(self):
        """
        One pair ``(g, table)`` per irreducible factor of *f*: entry *j* of
        the table is the image of alpha^j at a fixed root of that factor, an
        element of the field GF(2)[x]/(g) encoded as an integer. A ring
        element is a unit iff none of its images vanishes, so a sum of powers
        of alpha is tested by XOR-ing table entries.
        """
        if self.exponent > _POWER_TABLE_LIMIT:
            raise UnsupportedCase(
                'Exponent %d of %s is too large for root tables' %
                (self.exponent, self.label))
        if self.is_field:
            return ((self.f.value, self._powers),)
        g, tables = _cyclotomic_tables(self.prime)
        return tuple((g, table) for table in tables)

    @property
    def root_tables(self):
        return tuple(table for _, table in self.root_fields)

    def is_unit_sum(self, exponents):
        """
        Whether the sum of alpha^e over all *exponents* is a unit.
        """
        period = self.exponent
        exponents = [e % period for e in exponents]
        for table in self.root_tables:
            value = 0
            for exponent in exponents:
                value ^= table[exponent]
            if not value:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ModulusSpec):
            return NotImplemented
        return self.f.value == other.f.value

    def __hash__(self):
        return hash(('ModulusSpec', self.f.value))

    def __getstate__(self):
        return {'f': self.f.value}

    def __setstate__(self, state):
        self.__init__(state['f'])

    def __repr__(self):
        return 'ModulusSpec(%s)' % self.label

    def __str__(self):
        return self.label


@functools.lru_cache(maxsize=64)
def _cyclotomic_tables(p):
    d = multiplicative_order(2, p)
    q = (1 << d) | 1
    while not _is_irreducible(q):
        q += 2
    cofactor = ((1 << d) - 1) // p
    for h in itertools.count(2):
        zeta = _powmod(h, cofactor, q)
        if zeta != 1:
            break
    log.debug('roots of M_%d live in GF(2^%d) modulo %s' %
              (p, d, _to_terms(q)))
    tables = []
    seen = set()
    for k in range(1, p):
        if k in seen:
            continue
        j = k
        while j not in seen:
            seen.add(j)
            j = j * 2 % p
        root = _powmod(zeta, k, q)
        table = [1]
        for _ in range(p - 1):
            table.append(_mulmod(table[-1], root, q))
        tables.append(table)
    return q, tuple(tables)


class RingElement:
    """
    A residue modulo the polynomial of a :class:`ModulusSpec`. Elements are
    immutable; all operators return new elements.
    """

    __slots__ = ('spec', 'value')

    def __init__(self, spec, value=0):
        if isinstance(value, RingElement):
            if not _same_spec(spec, value.spec):
                raise InvalidParams('Cannot convert element of %s to %s' %
                                    (value.spec, spec))
            value = value.value
        elif isinstance(value, BinPoly):
            value = value.value
        if not isinstance(value, int) or value < 0:
            raise InvalidParams('Invalid residue %r' % (value,))
        if value.bit_length() > spec.degree:
            value = _mod(value, spec.f.value)
        self.spec = spec
        self.value = value

    @property
    def residue(self):
        return BinPoly(self.value)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if not _same_spec(self.spec, other.spec):
                raise InvalidParams('Cannot mix elements of %s and %s' %
                                    (self.spec, other.spec))
            return other.value
        if isinstance(other, BinPoly):
            return _mod(other.value, self.spec.f.value)
        if isinstance(other, int) and not isinstance(other, bool) \
                and other >= 0:
            return _mod(other, self.spec.f.value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.spec, self.value ^ other)

    __radd__ = __sub__ = __rsub__ = __xor__ = __rxor__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.spec,
                           _mulmod(self.value, other, self.spec.f.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * RingElement(self.spec,
                                  _invert(other, self.spec.f.value))

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        return RingElement(self.spec,
                           _powmod(self.value, exponent, self.spec.f.value))

    def inverse(self):
        return inverse_mod(self)

    def is_unit(self):
        return _is_unit(self.value, self.spec.f.value)

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return _same_spec(self.spec, other.spec) and \
                self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.f.value, self.value))

    def __str__(self):
        exponent = self.spec.logarithm(self.value)
        if not self.value:
            return '0'
        if exponent == 0:
            return '1'
        if exponent is not None:
            return 'α^%d' % exponent
        return _to_terms(self.value)

    def __repr__(self):
        return 'RingElement(%s, %s)' % (self.spec.label,
                                        _to_terms(self.value))


def _same_spec(a, b):
    return a is b or a == b


def _polyvalue(a):
    if isinstance(a, BinPoly):
        return a.value
    if isinstance(a, int) and not isinstance(a, bool) and a >= 0:
        return a
    raise InvalidParams('Not a polynomial: %r' % (a,))


def mul_mod(a, b):
    """
    Multiplies two elements of the same ring.
    """
    if not _same_spec(a.spec, b.spec):
        raise InvalidParams('Cannot multiply elements of %s and %s' %
                            (a.spec, b.spec))
    return RingElement(a.spec, _mulmod(a.value, b.value, a.spec.f.value))


def poly_gcd(a, b):
    """
    The (monic) greatest common divisor of two binary polynomials.
    """
    a, b = _polyvalue(a), _polyvalue(b)
    if not a and not b:
        raise InvalidParams('gcd(0, 0) is undefined')
    return BinPoly(_gcd(a, b))


def inverse_mod(a):
    """
    Returns the inverse of the ring element *a*. Raises
    :class:`NotInvertible` if *a* shares a factor with the modulus, which is
    only possible for zero and, in rings that are not fields, for zero
    divisors.
    """
    return RingElement(a.spec, _invert(a.value, a.spec.f.value))


def exponent_of(f):
    """
    The least ``l > 0`` with x^l = 1 modulo *f*.
    """
    f = _polyvalue(f)
    if _degree(f) < 1:
        raise InvalidParams('%s has no exponent' % _to_terms(f))
    if not f & 1:
        raise InvalidParams('%s is divisible by x' % _to_terms(f))
    length = f.bit_length()
    if length >= 3 and f == (1 << length) - 1:
        return length
    limit = (1 << _degree(f)) - 1
    if _is_irreducible(f):
        order = limit
        for q in _prime_factors(order):
            while order % q == 0 and _powmod(2, order // q, f) == 1:
                order //= q
        return order
    value = 2
    for ell in range(1, limit + 1):
        value = _mod(value, f)
        if value == 1:
            return ell
        value <<= 1
    raise InvalidParams('x has no order below 2^b modulo %s' % _to_terms(f))


def is_two_primitive(p):
    """
    Whether 2 generates the multiplicative group of GF(*p*), which holds
    exactly when 1 + x + ... + x^(p-1) is irreducible.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise InvalidParams('%r is not a prime' % (p,))
    if p == 2:
        return False
    return multiplicative_order(2, p) == p - 1


def is_irreducible(f):
    f = _polyvalue(f)
    if _degree(f) < 1:
        return False
    length = f.bit_length()
    if length >= 3 and f == (1 << length) - 1 and _is_prime(length):
        return is_two_primitive(length)
    return _is_irreducible(f)
