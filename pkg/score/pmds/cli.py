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

import csv
import io
import json

import click
from score.init import parse_config_file

from ._init import init
from .codec import (
    decode_erasures, dumps, encode as encode_data, get_code, loads,
    unpack_symbols)
from .errors import (
    BudgetExceeded, FormatError, InvalidParams, NotCorrectable,
    VerificationMismatch)
from .matrix import CodeParams, ErasurePattern
from .presets import PRESETS, RING_PRESETS
from .reliability import format_table, write_csv


EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def _configure(clickctx):
    clickctx.ensure_object(dict)
    conf = {}
    if clickctx.obj.get('conf') is not None:
        # invoked as `score pmds`
        parsed = parse_config_file(clickctx.obj['conf'].path)
        if 'pmds' in parsed:
            conf = dict(parsed['pmds'])
    return init(conf)


def _fail(clickctx, message, code):
    click.echo(message, err=True)
    clickctx.exit(code)


def _method(fast, oracle, both):
    chosen = [name for name, flag in (('fast', fast), ('oracle', oracle),
                                      ('both', both)) if flag]
    if len(chosen) > 1:
        raise click.UsageError('Choose one of --fast, --oracle and --both')
    return chosen[0] if chosen else None


def _code_options(function):
    options = (
        click.option('--variant', type=click.Choice(['c0', 'c1', 'c2']),
                     default='c0', show_default=True),
        click.option('--m', 'm', type=int, required=True),
        click.option('--n', 'n', type=int, required=True),
        click.option('--r', 'r', type=int, default=1, show_default=True),
        click.option('--s', 's', type=int, default=2, show_default=True),
        click.option('--modulus', required=True,
                     help='mp:<prime> or an octal polynomial like 435'),
    )
    for option in reversed(options):
        function = option(function)
    return function


def _method_options(function):
    options = (
        click.option('--fast', is_flag=True,
                     help='Closed-form criteria (default)'),
        click.option('--oracle', is_flag=True,
                     help='Exhaustive search over erasure patterns'),
        click.option('--both', is_flag=True,
                     help='Run both and compare'),
    )
    for option in reversed(options):
        function = option(function)
    return function


def _params(variant, m, n, r, s, modulus):
    try:
        return CodeParams(m, n, r, s, variant, modulus)
    except InvalidParams as e:
        raise click.UsageError(str(e))


@click.group('pmds')
@click.pass_context
def main(clickctx):
    """
    Partial-MDS array codes
    """
    clickctx.obj['pmds'] = _configure(clickctx)


@main.command('check')
@_code_options
@_method_options
@click.option('--budget', type=int, help='Largest number of patterns the '
              'exhaustive search may inspect')
@click.option('--workers', type=int, help='Processes for the exhaustive '
              'search')
@click.option('--odd-profiles', is_flag=True,
              help='Let the exhaustive search use odd profiles only')
@click.option('--json', 'as_json', is_flag=True)
@click.pass_context
def check(clickctx, variant, m, n, r, s, modulus, fast, oracle, both, budget,
          workers, odd_profiles, as_json):
    """
    Verifies whether a code is PMDS
    """
    pmds = clickctx.obj['pmds']
    params = _params(variant, m, n, r, s, modulus)
    method = _method(fast, oracle, both)
    if budget is not None:
        pmds.budget = budget
    if workers is not None:
        pmds.workers = workers
    if odd_profiles:
        pmds.odd_profiles = True
    try:
        verdict = pmds.check(params, method)
    except InvalidParams as e:
        _fail(clickctx, str(e), EXIT_USAGE)
    except BudgetExceeded as e:
        _fail(clickctx, str(e), EXIT_BUDGET)
    except VerificationMismatch as e:
        click.echo('fast:\n%s\noracle:\n%s' % (e.fast, e.oracle))
        _fail(clickctx, str(e), EXIT_MISMATCH)
    if as_json:
        click.echo(json.dumps(verdict.as_dict(), indent=2, sort_keys=True))
    else:
        click.echo(verdict.format_text())
    clickctx.exit(EXIT_OK if verdict.is_pmds else EXIT_NEGATIVE)


@main.command('encode')
@_code_options
@click.option('--input', 'input_file', type=click.File('rb'), required=True,
              help='Raw data: k symbols of b bits, packed little-endian')
@click.option('--output', 'output_file', type=click.File('wb'),
              required=True)
@click.pass_context
def encode(clickctx, variant, m, n, r, s, modulus, input_file, output_file):
    """
    Encodes a data file into a codeword file
    """
    params = _params(variant, m, n, r, s, modulus)
    try:
        code = get_code(params)
        data = unpack_symbols(input_file.read(), params.spec.b, code.k)
        codeword = encode_data(data, params)
    except (InvalidParams, FormatError) as e:
        _fail(clickctx, str(e), EXIT_USAGE)
    output_file.write(dumps(codeword))


@main.command('decode')
@click.option('--input', 'input_file', type=click.File('rb'), required=True)
@click.option('--output', 'output_file', type=click.File('wb'),
              required=True)
@click.option('--erase', 'erasures', multiple=True,
              help='Erased positions as "row,col"; may be repeated')
@click.pass_context
def decode(clickctx, input_file, output_file, erasures):
    """
    Recovers erased positions of a codeword file
    """
    try:
        codeword = loads(input_file.read())
        pattern = ErasurePattern.parse(
            ' '.join(erasures), codeword.params.m, codeword.params.n)
    except (InvalidParams, FormatError) as e:
        _fail(clickctx, str(e), EXIT_USAGE)
    try:
        codeword = decode_erasures(codeword, pattern)
    except NotCorrectable as e:
        _fail(clickctx, str(e), EXIT_NEGATIVE)
    output_file.write(dumps(codeword))


def _parse_shape(text):
    try:
        m, n = text.lower().split('x')
        return int(m), int(n)
    except ValueError:
        raise click.BadParameter('Expected MxN, got %r' % text)


@main.command('tables')
@click.option('--preset', type=click.Choice(sorted(PRESETS)))
@click.option('--paper', 'all_rings', is_flag=True,
              help='Run the presets %s' % ', '.join(RING_PRESETS))
@click.option('--prime', 'primes', multiple=True,
              help='Prime (or octal polynomial with --fields); may be '
              'repeated')
@click.option('--shape', 'shapes', multiple=True, help='MxN; may be repeated')
@click.option('--variant', type=click.Choice(['c0', 'c1', 'c2']),
              default='c0', show_default=True)
@click.option('--s', 's', type=int, default=2, show_default=True)
@click.option('--fields', is_flag=True,
              help='Interpret --prime values as octal polynomials')
@_method_options
@click.option('--csv', 'as_csv', is_flag=True)
@click.option('--json', 'as_json', is_flag=True)
@click.pass_context
def tables(clickctx, preset, all_rings, primes, shapes, variant, s, fields,
           fast, oracle, both, as_csv, as_json):
    """
    Verifies tables of concrete codes
    """
    pmds = clickctx.obj['pmds']
    method = _method(fast, oracle, both)
    shapes = [_parse_shape(shape) for shape in shapes]
    if preset and all_rings:
        raise click.UsageError('--preset and --paper are mutually exclusive')
    presets = RING_PRESETS if all_rings else (preset,) if preset else ()
    rows = []
    try:
        for name in presets:
            for row, verdict in pmds.check_preset(name, method, primes,
                                                  shapes):
                rows.append((name, row.label, verdict, row.pmds))
        if not presets:
            if not primes or not shapes:
                raise click.UsageError(
                    'Give --preset, --paper or both --prime and --shape')
            for prime in primes:
                modulus = prime if fields else 'mp:%s' % prime
                for m, n in shapes:
                    params = _params(variant, m, n, 1, s, modulus)
                    rows.append((None, prime, pmds.check(params, method),
                                 None))
    except InvalidParams as e:
        _fail(clickctx, str(e), EXIT_USAGE)
    except BudgetExceeded as e:
        _fail(clickctx, str(e), EXIT_BUDGET)
    except VerificationMismatch as e:
        _fail(clickctx, str(e), EXIT_MISMATCH)
    if as_json:
        records = []
        for name, label, verdict, recorded in rows:
            record = verdict.as_dict()
            record['label'] = label
            if name is not None:
                record['preset'] = name
                record['recorded'] = recorded
            records.append(record)
        click.echo(json.dumps(records, indent=2, sort_keys=True))
    elif as_csv:
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['preset', 'modulus', 'm', 'n', 'pmds', 'recorded'])
        for name, label, verdict, recorded in rows:
            writer.writerow([
                name or '', label, verdict.params.m, verdict.params.n,
                'YES' if verdict.is_pmds else 'NO',
                '' if recorded is None else 'YES' if recorded else 'NO'])
        click.echo(stream.getvalue(), nl=False)
    else:
        current = None
        for name, label, verdict, recorded in rows:
            if all_rings and name != current:
                click.echo('[%s]' % name)
                current = name
            line = '%s %d %d %s' % (label, verdict.params.m,
                                    verdict.params.n,
                                    'YES' if verdict.is_pmds else 'NO')
            if recorded is not None and recorded != verdict.is_pmds:
                line += ' (recorded %s)' % ('YES' if recorded else 'NO')
            click.echo(line)
    if any(recorded is not None and recorded != verdict.is_pmds
           for _, _, verdict, recorded in rows):
        clickctx.exit(EXIT_NEGATIVE)


@main.command('reliability')
@click.option('--p', 'p_values', type=float, multiple=True,
              help='Bit error probability; may be repeated')
@click.option('--t', 't', type=int)
@click.option('--m', 'm', type=int)
@click.option('--n', 'n', type=int)
@click.option('--blocks', type=int)
@click.option('--csv', 'as_csv', is_flag=True)
@click.pass_context
def reliability(clickctx, p_values, t, m, n, blocks, as_csv):
    """
    Prints the data loss probabilities after a device failure
    """
    pmds = clickctx.obj['pmds']
    overrides = {name: value for name, value in
                 (('t', t), ('m', m), ('n', n), ('blocks', blocks))
                 if value is not None}
    try:
        pmds.reliability = pmds.reliability.replace(**overrides)
        rows = pmds.reliability_table(list(p_values) or None)
    except (InvalidParams, ValueError) as e:
        _fail(clickctx, str(e), EXIT_USAGE)
    if as_csv:
        stream = io.StringIO()
        write_csv(rows, stream)
        click.echo(stream.getvalue(), nl=False)
    else:
        click.echo(format_table(rows))
