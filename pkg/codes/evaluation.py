import enum
import logging
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from core.enumeration import ensure_feasible, sweep_limit
from fields.arithmetic import resolve_field
from sympoly.polynomials import PointTuple
from sympoly.zeroes import distinguished_tuples


logger = logging.getLogger(__name__)



class SetKind(enum.Enum):
    FULL = 'full'
    ORBIT = 'orbit'



@dataclass(frozen=True, eq=False)
class EvaluationSet:
    """
    Ordered evaluation points, stored as an N x m array of canonical indices.

    FULL holds every distinguished tuple (P(q, m) points), ORBIT the strictly increasing
    ones (C(q, m) points, one per orbit of the coordinate permutations). Both are lexicographic.
    """
    spec: object
    m: int
    kind: SetKind
    points: np.ndarray

    @property
    def q(self):
        return self.spec.order

    def __len__(self):
        return len(self.points)

    def point(self, j):
        return PointTuple.from_indices(self.spec, self.points[j])

    def __iter__(self):
        return (self.point(j) for j in range(len(self)))



def enumerate_distinguished(q, m, force=False):
    spec = resolve_field(q)
    points = distinguished_tuples(range(spec.order), m, force)
    return EvaluationSet(spec, m, SetKind.FULL, points)


def enumerate_orbit_reps(q, m, force=False):
    spec = resolve_field(q)
    ensure_feasible(f"{m}-subsets of {spec}", math.comb(spec.order, m) * (m + 1), sweep_limit(force))
    rows = list(combinations(range(spec.order), m))
    points = np.array(rows, dtype=np.int64) if rows else np.zeros((0, m), dtype=np.int64)
    return EvaluationSet(spec, m, SetKind.ORBIT, points)


def evaluation_set(q, m, kind, force=False):
    """
    The FULL or ORBIT evaluation set; `kind` may be a SetKind or its value.
    """
    kind = SetKind(kind)
    if kind is SetKind.FULL:
        return enumerate_distinguished(q, m, force)
    return enumerate_orbit_reps(q, m, force)
