import enum
import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError

from core.exceptions import ArityError, FieldMismatchError


logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class SymPoly:
    """
    f = a_0 + a_1 sigma^1 + ... + a_m sigma^m, a linear combination of the
    elementary symmetric polynomials in m variables.
    """
    spec: object
    coeffs: tuple

    def __post_init__(self):
        self.clean()

    def clean(self):
        """
        Ensure there are m + 1 >= 2 coefficients, all in one field.
        """
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, 'coeffs', coeffs)
        if len(coeffs) < 2:
            raise ValidationError({"coeffs": ["A symmetric polynomial needs m + 1 >= 2 coefficients."]})
        if any(c.spec != self.spec for c in coeffs):
            raise FieldMismatchError("All coefficients must belong to the polynomial's field.")

    @classmethod
    def from_indices(cls, spec, indices):
        return cls(spec, tuple(spec.element(i) for i in indices))

    @property
    def m(self):
        return len(self.coeffs) - 1

    @property
    def indices(self):
        return tuple(c.index for c in self.coeffs)

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.coeffs)

    def as_array(self):
        """Coefficient vector as a galois array, ready for vector-matrix products."""
        return self.spec.array(self.indices)

    def __str__(self):
        return f"SymPoly(m={self.m}, coeffs={list(self.indices)})"



@dataclass(frozen=True)
class PointTuple:
    """
    A point of A^m over the field; distinguished when its coordinates are pairwise distinct.
    """
    coords: tuple

    @classmethod
    def from_indices(cls, spec, indices):
        return cls(tuple(spec.element(i) for i in indices))

    @property
    def is_distinguished(self):
        return len(set(self.coords)) == len(self.coords)

    @property
    def indices(self):
        return tuple(c.index for c in self.coords)



class PolyType(enum.Enum):
    ZERO = 'zero'
    NONZERO_CONSTANT = 'constant'
    TYPE_I = 'I'
    TYPE_II = 'II'



@dataclass(frozen=True)
class Classification:
    """
    Type I polynomials are a_m * prod(x_i + alpha); their only root value is b = -alpha.
    """
    tag: PolyType
    alpha: object = None

    @property
    def root(self):
        return None if self.alpha is None else -self.alpha



def elementary_symmetric(i, point):
    """
    sigma^i at `point`, from the coefficients of prod_j (1 + x_j t) built one factor at a time.
    """
    m = len(point.coords)
    if not 0 <= i <= m:
        raise ArityError(f"Index {i} is outside 0..{m}.")
    spec = point.coords[0].spec if point.coords else None
    if spec is None:
        raise ArityError("sigma^0 of the empty point needs a field; use m >= 1.")

    partial = [spec.one] + [spec.zero] * i
    for x in point.coords:
        for j in range(i, 0, -1):
            partial[j] = partial[j] + x * partial[j - 1]
    return partial[i]


def elementary_symmetric_table(spec, points):
    """
    sigma^0, ..., sigma^m at every row of `points` (an N x m array of element indices).

    Returns an (m + 1) x N galois array whose column j lists the values at point j.
    """
    points = np.asarray(points, dtype=np.int64)
    count, m = points.shape
    GF = spec.galois
    coords = GF(points)

    table = GF.Zeros((m + 1, count), dtype=np.int64)
    table[0] = 1
    for j in range(m):
        x = coords[:, j]
        for i in range(j + 1, 0, -1):
            table[i] = table[i] + x * table[i - 1]
    return table


def evaluate(f, point):
    """
    f(point) = sum_i a_i sigma^i(point).
    """
    if len(point.coords) != f.m:
        raise ArityError(f"f has {f.m} variables but the point has {len(point.coords)} coordinates.")
    table = elementary_symmetric_table(f.spec, [point.indices])
    value = f.as_array() @ table[:, 0]
    return f.spec.element(int(value))


def evaluate_many(f, points):
    """
    Values of f at every row of `points`, as canonical indices.
    """
    points = np.asarray(points, dtype=np.int64)
    if points.size == 0:
        return np.zeros(0, dtype=np.int64)
    if points.shape[1] != f.m:
        raise ArityError(f"f has {f.m} variables but the points have {points.shape[1]} coordinates.")
    values = f.as_array() @ elementary_symmetric_table(f.spec, points)
    return values.view(np.ndarray).astype(np.int64)


def decompose(f):
    """
    Split f = f_1 + x_m f_2 with f_1 = (a_0, ..., a_{m-1}) and f_2 = (a_1, ..., a_m) in m - 1 variables.
    """
    if f.m < 2:
        raise ArityError("Decomposition needs m >= 2.")
    return SymPoly(f.spec, f.coeffs[:-1]), SymPoly(f.spec, f.coeffs[1:])


def classify(f):
    """
    Zero, nonzero constant, Type I (a_m != 0 and a_i = alpha a_{i+1} for all i) or Type II.
    """
    a = f.coeffs
    if f.is_zero:
        return Classification(PolyType.ZERO)
    if all(c.is_zero for c in a[1:]):
        return Classification(PolyType.NONZERO_CONSTANT)

    leading = a[-1]
    if not leading.is_zero:
        alpha = a[-2] / leading
        if all(a[i] == alpha * a[i + 1] for i in range(f.m)):
            return Classification(PolyType.TYPE_I, alpha)
    return Classification(PolyType.TYPE_II)


def type_one(spec, m, root, scale=None):
    """
    scale * prod_i (x_i - root) as a SymPoly, i.e. coefficients scale * alpha^(m - i) with alpha = -root.
    """
    scale = spec.one if scale is None else scale
    alpha = -root
    return SymPoly(spec, tuple(scale * alpha ** (m - i) for i in range(m + 1)))


def type_one_basis(spec, m):
    """
    m + 1 Type I polynomials prod(x_i + alpha_j) with distinct alpha_j; they span Sigma_m.
    """
    if m + 1 > spec.order:
        raise ArityError(f"Need m + 1 <= q distinct values of alpha, got m={m}, q={spec.order}.")
    return [type_one(spec, m, -alpha) for alpha in spec.enumerate()[: m + 1]]
