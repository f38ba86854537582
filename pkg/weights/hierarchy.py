import logging
from dataclasses import dataclass
from itertools import combinations
from math import factorial

import numpy as np
from django.core.exceptions import ValidationError

from codes.evaluation import SetKind
from codes.linear import binomial, column_profile
from core.enumeration import default_chunk_size, ensure_feasible, sweep_limit
from core.parallel import merge_histograms, run_tasks
from fields.arithmetic import field_from_key
from sympoly.zeroes import perm_count

from .spectra import subspace_sweep
from .subspaces import echelon_bases, echelon_blocks, gaussian_binomial


logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class GhwVector:
    """
    (d_1, ..., d_k), optionally with one minimizing r-basis of messages per r.
    """
    values: tuple
    witnesses: tuple = None

    def __getitem__(self, r):
        """1-based: ghw[r] is d_r."""
        return self.values[r - 1]

    def __len__(self):
        return len(self.values)

    @property
    def is_strictly_increasing(self):
        return all(a < b for a, b in zip(self.values, self.values[1:]))



def generalized_hamming_weights(code, jobs=1, force=False):
    """
    d_r as the smallest support of an r-dimensional subcode, by sweeping all subcodes.
    """
    k = code.message_basis.shape[0]
    sweeps = [subspace_sweep(code, r, jobs=jobs, force=force) for r in range(1, k + 1)]
    return GhwVector(
        tuple(sweep.minimum for sweep in sweeps),
        tuple(sweep.witness for sweep in sweeps),
    )


def _incidence_task(task):
    key, block, columns, multiplicities = task
    spec = field_from_key(*key)
    bases = block.matrices(spec.order)
    size, dim, k = bases.shape
    count = columns.shape[1]

    if dim == 0:
        inside = np.repeat(~columns.any(axis=0)[:, None], size, axis=1)
    else:
        # A column y lies in the row space of a reduced basis E iff y = y[pivots] E
        coefficients = spec.array(columns[list(block.pivots), :].T)
        stacked = spec.array(bases.transpose(1, 0, 2).reshape(dim, size * k))
        rebuilt = (coefficients @ stacked).view(np.ndarray).reshape(count, size, k)
        inside = (rebuilt == columns.T[:, None, :]).all(axis=2)

    points = multiplicities @ inside.astype(np.int64)
    keys, totals = np.unique(points, return_counts=True)
    return {int(p): int(t) for p, t in zip(keys, totals)}


def subspace_incidence(code, dim, jobs=1, force=False):
    """
    {number of column points inside: number of dim-dimensional subspaces} over all subspaces
    of the message space, columns counted with multiplicity.
    """
    basis = code.message_basis
    k = basis.shape[0]
    profile = column_profile(basis)
    size = gaussian_binomial(k, dim, code.q) * max(dim, 1) * k * profile.count
    ensure_feasible(f"{dim}-subspace incidence of {code}", size, sweep_limit(force))

    tasks = [
        (code.spec.key, block, profile.columns, profile.multiplicities)
        for block in echelon_blocks(k, dim, code.q, default_chunk_size())
    ]
    return merge_histograms(run_tasks(_incidence_task, tasks, jobs))


def ghw_geometric(code, jobs=1, force=False):
    """
    d_r = n - m_r, where m_r is the largest number of column points in a subspace of codimension r.
    """
    k = code.message_basis.shape[0]
    values = []
    for r in range(1, k + 1):
        incidence = subspace_incidence(code, k - r, jobs=jobs, force=force)
        values.append(code.n - max(incidence))
    return GhwVector(tuple(values))


def ghw_upper_bound(q, m, r, kind=SetKind.FULL):
    """
    P(q, m) - m! C(q - r, m - r) for the full code and C(q, m) - C(q - r, m - r) for the orbit code.

    r = m + 1 gives n, the last generalized weight of a nondegenerate code.
    """
    if not 1 <= r <= m + 1 or m + 1 > q:
        raise ValidationError({"r": [f"The bound needs 1 <= r <= m + 1 <= q, got r={r}, m={m}, q={q}."]})
    if SetKind(kind) is SetKind.FULL:
        return perm_count(q, m) - factorial(m) * binomial(q - r, m - r)
    return binomial(q, m) - binomial(q - r, m - r)


def hyperplane_profile(code):
    """
    For every hyperplane a . y = 0 (normal a in reduced form), the number of column points on it.

    The normal is the coefficient vector of a polynomial, so the count is its number of zeroes
    among the evaluation points.
    """
    basis = code.message_basis
    spec = code.spec
    profile = column_profile(basis)
    normals = echelon_bases(basis.shape[0], 1, code.q)[:, 0, :]
    on_plane = ((spec.array(normals) @ spec.array(profile.columns)) == 0).view(np.ndarray)
    counts = on_plane.astype(np.int64) @ profile.multiplicities
    return [(tuple(int(a) for a in normal), int(count)) for normal, count in zip(normals, counts)]


def columns_on_hyperplane(code, normal):
    """
    0-based positions of the generator columns on the hyperplane with the given normal.
    """
    spec = code.spec
    values = (spec.array(normal) @ code.message_basis).view(np.ndarray)
    return [int(j) for j in np.flatnonzero(values == 0)]


def dependent_subsets(code, positions, size, max_rank):
    """
    1-based column subsets of the given size, drawn from `positions`, spanning rank <= max_rank.
    """
    generator = code.generator
    found = []
    for subset in combinations(sorted(positions), size):
        if np.linalg.matrix_rank(generator[:, list(subset)]) <= max_rank:
            found.append(tuple(j + 1 for j in subset))
    return found


def dependent_triples(code, positions):
    """
    Linearly dependent column triples (three collinear points), numbered from 1.
    """
    return dependent_subsets(code, positions, 3, 2)
