import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from core.exceptions import ArityError, DegenerateCodeError
from sympoly.polynomials import elementary_symmetric_table
from sympoly.zeroes import perm_count

from .evaluation import SetKind, evaluation_set


logger = logging.getLogger(__name__)



@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    The evaluation code of Sigma_m on an EvaluationSet.

    Row i of the generator holds sigma^i at every point, in set order; the message of a
    codeword is the coefficient vector (a_0, ..., a_m) of the evaluated polynomial.
    """
    evaluation: object
    generator: object

    @property
    def spec(self):
        return self.evaluation.spec

    @property
    def q(self):
        return self.spec.order

    @property
    def m(self):
        return self.evaluation.m

    @property
    def kind(self):
        return self.evaluation.kind

    @property
    def n(self):
        return self.generator.shape[1]

    @cached_property
    def k(self):
        return int(np.linalg.matrix_rank(self.generator))

    @property
    def row_labels(self):
        return [f"sigma^{i}" for i in range(self.m + 1)]

    @property
    def rows(self):
        """The generator as nested lists of canonical indices."""
        return self.generator.view(np.ndarray).astype(np.int64).tolist()

    @cached_property
    def message_basis(self):
        """
        A basis of the code: the generator itself when ev is injective, otherwise its
        nonzero row-reduced rows (then messages no longer are coefficient vectors).
        """
        if self.is_injective:
            return self.generator
        reduced = self.generator.row_reduce()
        logger.info("Generator of rank %d < %d; sweeping a row-reduced basis", self.k, self.m + 1)
        return reduced[: self.k]

    @property
    def is_injective(self):
        return self.k == self.m + 1

    def __str__(self):
        return f"C(q={self.q}, m={self.m}, set={self.kind.value}) [{self.n}, {self.k}]"



@dataclass(frozen=True, eq=False)
class ColumnProfile:
    """
    Distinct columns of a matrix (sorted lexicographically) with their multiplicities.
    """
    columns: np.ndarray
    multiplicities: np.ndarray
    inverse: np.ndarray

    @property
    def count(self):
        return self.columns.shape[1]



@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int



@dataclass(frozen=True, eq=False)
class WeightClass:
    """
    All codewords of one weight, with the messages that produce them.
    """
    weight: int
    messages: np.ndarray
    words: np.ndarray
    rank: int

    @property
    def count(self):
        return len(self.messages)



@dataclass(frozen=True)
class DualDistance:
    zero_columns: int
    parallel_pairs: int

    @property
    def lower_bound(self):
        """1 with a zero column, 2 with parallel columns, 3 otherwise."""
        if self.zero_columns:
            return 1
        if self.parallel_pairs:
            return 2
        return 3

    @property
    def passes(self):
        return self.lower_bound >= 3



def build_code(m, evaluation):
    """
    The (m + 1) x n generator matrix sigma^i(P_j) of the code on `evaluation`.
    """
    if evaluation.m != m:
        raise ArityError(f"The evaluation set has m={evaluation.m}, not {m}.")
    if len(evaluation) == 0:
        raise DegenerateCodeError(f"No distinguished points for m={m} > q={evaluation.q}.")
    generator = elementary_symmetric_table(evaluation.spec, evaluation.points)
    code = LinearCode(evaluation, generator)
    logger.debug("Built %s", code)
    return code


def make_code(q, m, kind=SetKind.FULL, force=False):
    return build_code(m, evaluation_set(q, m, kind, force))


def encode(f, code):
    """
    The codeword (f(P_1), ..., f(P_n)) as canonical indices.
    """
    if f.m != code.m:
        raise ArityError(f"f has {f.m} variables, the code is built for m={code.m}.")
    return (f.as_array() @ code.generator).view(np.ndarray).astype(np.int64)


def column_profile(code_or_matrix):
    """
    Distinct columns with multiplicities; every weight computation runs on this profile.
    """
    matrix = getattr(code_or_matrix, 'generator', code_or_matrix)
    plain = np.asarray(matrix.view(np.ndarray), dtype=np.int64)
    columns, inverse, counts = np.unique(plain, axis=1, return_inverse=True, return_counts=True)
    return ColumnProfile(columns, counts.astype(np.int64), np.asarray(inverse).reshape(-1))


def binomial(n, r):
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def closed_form_params(q, m, kind):
    """
    (n, k, d) of the full code [P(q,m), m+1, (q-m) P(q-1,m-1)] or of the orbit code
    [C(q,m), m+1, C(q,m) - C(q-1,m-1)]; only for m < q.
    """
    if not 1 <= m < q:
        raise DegenerateCodeError(f"The parameter formulas need 1 <= m < q, got m={m}, q={q}.")
    if SetKind(kind) is SetKind.FULL:
        return CodeParams(perm_count(q, m), m + 1, (q - m) * perm_count(q - 1, m - 1))
    return CodeParams(binomial(q, m), m + 1, binomial(q, m) - binomial(q - 1, m - 1))


def normalize_columns(spec, columns):
    """
    Scale every nonzero column so its first nonzero entry is 1; zero columns stay zero.
    """
    GF = spec.galois
    columns = GF(np.asarray(columns, dtype=np.int64))
    nonzero = columns != 0
    leading = np.argmax(nonzero, axis=0)
    pivots = columns[leading, np.arange(columns.shape[1])]
    pivots[pivots == 0] = 1
    return columns / pivots


def dual_distance_check(code):
    """
    Count zero columns and pairs of parallel columns; with neither the dual distance is at least 3.
    """
    plain = code.generator.view(np.ndarray)
    zero = int((~plain.any(axis=0)).sum())
    normalized = normalize_columns(code.spec, plain).view(np.ndarray)
    _, counts = np.unique(normalized[:, plain.any(axis=0)], axis=1, return_counts=True)
    parallel = int(sum(c * (c - 1) // 2 for c in counts))
    return DualDistance(zero, parallel)
