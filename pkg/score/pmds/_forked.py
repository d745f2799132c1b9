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

import functools
import multiprocessing
import signal
import sys
import threading
from tblib import pickling_support


pickling_support.install()


def _start_method():
    if threading.active_count() > 1:
        # Cannot use os.fork() on linux when using threads, so we will try
        # instructing the multiprocessing module to use the 'spawn' method
        # instead.
        start_method = multiprocessing.get_start_method(allow_none=True)
        if start_method is None:
            available_start_methods = multiprocessing.get_all_start_methods()
            if available_start_methods[0] == 'fork':
                return 'spawn'
        elif start_method == 'fork':
            raise RuntimeError(
                'Cannot fork using start_method "fork" when using threads')
    return None


def _init_worker():
    signal.signal(signal.SIGINT, signal.SIG_IGN)


def _call(function, item):
    try:
        return True, function(item)
    except Exception:
        return False, sys.exc_info()


def fork_map(function, items, workers=1, chunksize=1):
    """
    Yields ``function(item)`` for every item, in the order of *items*. With
    more than one worker the calls are distributed to a process pool; an
    exception raised in a worker is re-raised here with its original
    traceback. Closing the generator terminates the pool.
    """
    if workers <= 1:
        for item in items:
            yield function(item)
        return
    context = multiprocessing.get_context(_start_method())
    with context.Pool(workers, initializer=_init_worker) as pool:
        results = pool.imap(functools.partial(_call, function), items,
                            chunksize)
        for success, result in results:
            if not success:
                raise result[1].with_traceback(result[2])
            yield result
