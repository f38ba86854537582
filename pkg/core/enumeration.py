import logging

import numpy as np
from django.conf import settings

from .exceptions import InfeasibleSweepError


logger = logging.getLogger(__name__)



def base_digits(indices, base, width):
    """
    Write each integer of `indices` with `width` digits in `base`, most significant digit first.

    Row i of the result is the i-th vector of F_q^width in lexicographic order when
    `indices` is range(q**width).
    """
    indices = np.asarray(indices, dtype=np.int64)
    digits = np.empty((indices.size, width), dtype=np.int64)
    rest = indices.copy()
    for position in range(width - 1, -1, -1):
        digits[:, position] = rest % base
        rest //= base
    return digits


def chunk_ranges(total, chunk_size):
    """
    Split range(total) into consecutive (start, stop) pairs of at most chunk_size items.
    """
    chunk_size = max(1, int(chunk_size))
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def ensure_feasible(what, size, limit):
    """
    Abort a sweep before allocating anything when its estimated size exceeds `limit`.

    A limit of None disables the check (the --force path).
    """
    logger.debug("%s: estimated %s field operations (limit %s)", what, size, limit)
    if limit is not None and size > limit:
        raise InfeasibleSweepError(what, size, limit)


def sweep_limit(force=False):
    """
    The configured MAX_SWEEP, or None when the caller forces the sweep.
    """
    return None if force else settings.SYMCODE['MAX_SWEEP']


def default_chunk_size():
    return settings.SYMCODE['CHUNK_SIZE']
