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


class PmdsError(Exception):
    """
    Base class of all errors raised by this module.
    """


class InvalidParams(PmdsError, ValueError):
    """
    Raised when a function receives arguments it cannot work with: invalid
    code parameters, elements of different moduli, malformed positions.
    """


class FormatError(PmdsError, ValueError):
    """
    A serialized codeword or data file could not be parsed.
    """


class NotInvertible(PmdsError, ArithmeticError):
    """
    The residue shares a factor with the modulus.
    """


class SingularSystem(PmdsError, ArithmeticError):
    """
    A linear system has no unique solution over the ring.
    """


class NotCorrectable(PmdsError):
    """
    The erasure pattern cannot be recovered by the code.
    """

    def __init__(self, message, pattern=None):
        super().__init__(message)
        self.pattern = pattern

    def __reduce__(self):
        return type(self), (self.args[0], self.pattern)


class UnsupportedCase(PmdsError):
    """
    No closed-form criterion is known for the requested code parameters.
    """


class BudgetExceeded(PmdsError):
    """
    An exhaustive search would visit more erasure patterns than allowed.
    """

    def __init__(self, message, patterns, budget):
        super().__init__(message)
        self.patterns = patterns
        self.budget = budget

    def __reduce__(self):
        return type(self), (self.args[0], self.patterns, self.budget)


class VerificationMismatch(PmdsError):
    """
    The closed-form criteria and the exhaustive search disagree.
    """

    def __init__(self, message, fast, oracle):
        super().__init__(message)
        self.fast = fast
        self.oracle = oracle

    def __reduce__(self):
        return type(self), (self.args[0], self.fast, self.oracle)
