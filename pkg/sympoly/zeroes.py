import logging
import math
from collections import Counter
from itertools import permutations

import numpy as np
from django.core.exceptions import ValidationError

from core.enumeration import base_digits, chunk_ranges, default_chunk_size, ensure_feasible, sweep_limit
from core.exceptions import ArityError, DegenerateCodeError
from core.parallel import merge_histograms, run_tasks
from fields.arithmetic import field_from_key

from .polynomials import PointTuple, SymPoly, elementary_symmetric_table


logger = logging.getLogger(__name__)



def perm_count(n, r):
    """
    P(n, r) = n! / (n - r)!, the number of ordered arrangements of r out of n; 0 when r > n or either is negative.
    """
    if n < 0 or r < 0 or r > n:
        return 0
    return math.perm(n, r)


def zero_count_bound(size, m, type_one=True):
    """
    Upper bound on the distinguished zeroes with coordinates in a set of `size` elements.

    With type_one=True this is the general bound m P(size - 1, m - 1), attained exactly by
    Type I polynomials whose root lies in the set. With type_one=False it is the sharper bound
    m P(size - 1, m - 1) - (size - m) P(size - 2, m - 2) for every other nonzero polynomial.
    """
    general = m * perm_count(size - 1, m - 1)
    if type_one:
        return general
    return general - (size - m) * perm_count(size - 2, m - 2)


def distinguished_tuples(indices, m, force=False):
    """
    All ordered m-tuples of distinct entries of `indices`, lexicographic, as an N x m integer array.

    Aborts before allocating when P(|indices|, m) tuples of m + 1 symmetric values exceed the sweep cap.
    """
    values = sorted(int(i) for i in indices)
    ensure_feasible(
        f"distinguished {m}-tuples over {len(values)} elements",
        perm_count(len(values), m) * (m + 1),
        sweep_limit(force),
    )
    rows = list(permutations(values, m))
    if not rows:
        return np.zeros((0, m), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _subset_indices(spec, subset, m):
    if subset is None:
        subset = range(spec.order)
    indices = sorted(set(int(i) for i in subset))
    if any(not 0 <= i < spec.order for i in indices):
        raise ValidationError({"subset": [f"Subset entries must be element indices of {spec}."]})
    if len(indices) < m:
        raise ValidationError({"subset": [f"|S|={len(indices)} is smaller than m={m}."]})
    return indices


def _zero_mask_task(task):
    key, coeffs, points = task
    spec = field_from_key(*key)
    values = spec.array(coeffs) @ elementary_symmetric_table(spec, points)
    return values == 0


def _zero_mask(f, points, jobs=1):
    tasks = [
        (f.spec.key, f.indices, points[start:stop])
        for start, stop in chunk_ranges(len(points), default_chunk_size())
    ]
    masks = run_tasks(_zero_mask_task, tasks, jobs)
    return np.concatenate(masks) if masks else np.zeros(0, dtype=bool)


def count_distinguished_zeroes(f, subset=None, jobs=1, force=False):
    """
    |Z_{S,D}(f)| by evaluating f on every distinguished tuple over S (S defaults to the whole field).
    """
    indices = _subset_indices(f.spec, subset, f.m)
    points = distinguished_tuples(indices, f.m, force)
    return int(_zero_mask(f, points, jobs).sum())


def enumerate_distinguished_zeroes(f, subset=None, jobs=1, force=False):
    """
    The distinguished zeroes of f over S, in lexicographic order.
    """
    indices = _subset_indices(f.spec, subset, f.m)
    points = distinguished_tuples(indices, f.m, force)
    mask = _zero_mask(f, points, jobs)
    return [PointTuple.from_indices(f.spec, row) for row in points[mask]]


def closed_form_count_m2(f):
    """
    Number of distinguished zeroes of a_0 + a_1 sigma^1 + a_2 sigma^2 over all of F_q.

    The case split runs on the discriminant a_1^2 - a_0 a_2.
    """
    if f.m != 2:
        raise ArityError(f"The closed form applies to m = 2, got m = {f.m}.")
    q = f.spec.order
    if q == 2:
        raise DegenerateCodeError("The closed form needs q >= 3.")

    a0, a1, a2 = f.coeffs
    odd = q % 2 == 1
    if f.is_zero:
        return q * (q - 1)

    if a2.is_zero:
        if a1.is_zero:
            return 0
        if odd:
            return q - 1
        # x_1 + x_2 = a_0 / a_1 has only diagonal solutions when a_0 = 0
        return q if not a0.is_zero else 0

    discriminant = a1 * a1 - a0 * a2
    if discriminant.is_zero:
        return 2 * (q - 1)
    if not odd:
        return q - 2
    return q - 3 if discriminant.is_square() else q - 1


def table_rows_m2(q):
    """
    {zero count: number of polynomials} over all q^3 polynomials of Sigma_2, from the closed forms.

    For q = 3 the q - 3 row lands on 0 and merges with the row of nonzero constants.
    """
    if q < 3:
        raise DegenerateCodeError("The m = 2 tables need q >= 3.")
    if q % 2:
        rows = [
            (0, q - 1),
            (q - 3, q * (q - 1) ** 2 // 2),
            (q - 1, q * (q - 1) * (q + 1) // 2),
            (2 * (q - 1), q * (q - 1)),
            (q * (q - 1), 1),
        ]
    else:
        rows = [
            (0, 2 * (q - 1)),
            (q - 2, q * (q - 1) ** 2),
            (q, (q - 1) ** 2),
            (2 * (q - 1), q * (q - 1)),
            (q * (q - 1), 1),
        ]
    table = Counter()
    for count, polynomials in rows:
        table[count] += polynomials
    return dict(sorted(table.items()))


def _histogram_task(task):
    key, m, start, stop, points = task
    spec = field_from_key(*key)
    messages = spec.array(base_digits(range(start, stop), spec.order, m + 1))
    values = messages @ elementary_symmetric_table(spec, points)
    counts = (values == 0).view(np.ndarray).sum(axis=1)
    keys, totals = np.unique(counts, return_counts=True)
    return {int(k): int(t) for k, t in zip(keys, totals)}


def empirical_zero_histogram(spec, m, subset=None, jobs=1, force=False):
    """
    {zero count: number of polynomials} over all q^(m+1) members of Sigma_m, by brute force.
    """
    indices = _subset_indices(spec, subset, m)
    points = distinguished_tuples(indices, m, force)
    total = spec.order ** (m + 1)
    ensure_feasible("zero histogram", total * len(points) * (m + 1), sweep_limit(force))

    tasks = [
        (spec.key, m, start, stop, points)
        for start, stop in chunk_ranges(total, default_chunk_size())
    ]
    histogram = merge_histograms(run_tasks(_histogram_task, tasks, jobs))
    logger.info("Zero histogram for %s, m=%d: %s", spec, m, histogram)
    return histogram


def closed_form_histogram_m2(spec):
    """
    Histogram of closed_form_count_m2 over all q^3 coefficient vectors.
    """
    counts = Counter()
    for coeffs in np.ndindex(spec.order, spec.order, spec.order):
        counts[closed_form_count_m2(SymPoly.from_indices(spec, coeffs))] += 1
    return dict(sorted(counts.items()))
