import logging
from dataclasses import dataclass
from functools import lru_cache

import galois
import numpy as np
from django.core.exceptions import ValidationError

from core.exceptions import FieldMismatchError


logger = logging.getLogger(__name__)

# Largest supported field order; galois keeps log/antilog lookup tables below this size.
MAX_ORDER = 2**16



@lru_cache(maxsize=None)
def galois_field(characteristic, degree, modulus):
    """
    Return the galois FieldArray class of F_{p^e} built on `modulus` (ascending coefficients).

    Cached so that every worker process builds each field only once.
    """
    if degree == 1:
        return galois.GF(characteristic)
    prime_field = galois.GF(characteristic)
    irreducible = galois.Poly(list(modulus), field=prime_field, order='asc')
    return galois.GF(characteristic**degree, irreducible_poly=irreducible)


@lru_cache(maxsize=None)
def default_modulus(characteristic, degree):
    """
    The lexicographically least monic irreducible polynomial of the given degree over F_p.

    Polynomials are compared by their canonical integer c_0 + c_1 p + ... + c_e p^e,
    which is also how galois orders them for method='min'.
    """
    if degree == 1:
        return (0, 1)
    poly = galois.irreducible_poly(characteristic, degree, method='min')
    modulus = tuple(int(c) for c in poly.coeffs[::-1])
    logger.info("Default modulus for GF(%d^%d): %s", characteristic, degree, modulus)
    return modulus



@dataclass(frozen=True)
class FieldSpec:
    """
    The finite field F_q, q = p^e, in the polynomial basis over F_p.

    Elements are identified with their canonical index c_0 + c_1 p + ... + c_{e-1} p^{e-1},
    which fixes the total order used by every enumeration of the project.
    """
    characteristic: int
    degree: int = 1
    modulus: tuple = ()

    def __post_init__(self):
        self.clean()

    def clean(self):
        """
        Ensure p is prime, e >= 1, q <= 2^16 and the modulus is monic irreducible of degree e.
        """
        errors = {}
        p, e = self.characteristic, self.degree

        if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
            errors["characteristic"] = [f"p={p} is not prime."]
        if not isinstance(e, int) or e < 1:
            errors["degree"] = [f"e={e} must be an integer >= 1."]
        if errors:
            raise ValidationError(errors)

        if p**e > MAX_ORDER:
            raise ValidationError({"order": [f"q={p}^{e} exceeds the supported maximum {MAX_ORDER}."]})

        if not self.modulus:
            object.__setattr__(self, 'modulus', default_modulus(p, e))
        modulus = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, 'modulus', modulus)

        if len(modulus) != e + 1:
            errors["modulus"] = [f"The modulus must have {e + 1} coefficients c_0,...,c_{e}."]
        elif any(not 0 <= c < p for c in modulus):
            errors["modulus"] = [f"Modulus coefficients must lie in [0, {p})."]
        elif modulus[-1] != 1:
            errors["modulus"] = ["The modulus must be monic."]
        elif e > 1 and not galois.Poly(list(modulus), field=galois.GF(p), order='asc').is_irreducible():
            errors["modulus"] = [f"The modulus {list(modulus)} is reducible over F_{p}."]
        if errors:
            raise ValidationError(errors)

    @classmethod
    def from_order(cls, q, modulus=None):
        """
        Build F_q from its order, splitting q into p^e.
        """
        if not isinstance(q, int) or q < 2 or not galois.is_prime_power(q):
            raise ValidationError({"order": [f"q={q} is not a prime power."]})
        primes, exponents = galois.factors(q)
        return cls(int(primes[0]), int(exponents[0]), tuple(modulus or ()))

    @property
    def order(self):
        return self.characteristic**self.degree

    @property
    def key(self):
        """Picklable identity of the field, used to rebuild it inside worker processes."""
        return (self.characteristic, self.degree, self.modulus)

    @property
    def galois(self):
        return galois_field(*self.key)

    @property
    def is_prime_field(self):
        return self.degree == 1

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def element(self, index):
        """
        The element with the given canonical index.
        """
        if not 0 <= int(index) < self.order:
            raise ValidationError({"index": [f"{index} is not an element index of GF({self.order})."]})
        return FieldElement(self, int(index))

    def from_coeffs(self, coeffs):
        """
        The element c_0 + c_1 x + ... from its polynomial-basis coordinates.
        """
        index = 0
        for c in reversed(list(coeffs)):
            index = index * self.characteristic + int(c) % self.characteristic
        return self.element(index)

    def enumerate(self):
        """
        All q elements in canonical-index order.
        """
        return [FieldElement(self, index) for index in range(self.order)]

    def array(self, indices):
        """
        Lift canonical indices (any shape) into a galois array of this field.
        """
        return self.galois(np.asarray(indices, dtype=np.int64))

    def label(self):
        if self.is_prime_field:
            return f"GF({self.order})"
        return f"GF({self.characteristic}^{self.degree})"

    def __str__(self):
        return self.label()



@dataclass(frozen=True)
class FieldElement:
    """
    An element of a FieldSpec, stored as its canonical index.
    """
    spec: FieldSpec
    index: int

    @property
    def coeffs(self):
        """Polynomial-basis coordinates (c_0, ..., c_{e-1})."""
        p, rest, coeffs = self.spec.characteristic, self.index, []
        for _ in range(self.spec.degree):
            coeffs.append(rest % p)
            rest //= p
        return tuple(coeffs)

    @property
    def is_zero(self):
        return self.index == 0

    def _lift(self):
        return self.spec.galois(self.index)

    def _wrap(self, value):
        return FieldElement(self.spec, int(value))

    def _operand(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"Cannot combine a field element with {type(other).__name__}.")
        if other.spec != self.spec:
            raise FieldMismatchError(f"Operands belong to different fields: {self.spec} and {other.spec}.")
        return other._lift()

    def __add__(self, other):
        return self._wrap(self._lift() + self._operand(other))

    def __sub__(self, other):
        return self._wrap(self._lift() - self._operand(other))

    def __mul__(self, other):
        return self._wrap(self._lift() * self._operand(other))

    def __truediv__(self, other):
        return self * other.inverse()

    def __neg__(self):
        return self._wrap(-self._lift())

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self._wrap(self._lift() ** int(exponent))

    def __lt__(self, other):
        return self.index < other.index

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError(f"0 has no inverse in {self.spec}.")
        return self._wrap(np.reciprocal(self._lift()))

    def is_square(self):
        """
        True iff x^2 = self has a solution: always in characteristic 2, else Euler's criterion.
        """
        if self.spec.characteristic == 2 or self.is_zero:
            return True
        return (self ** ((self.spec.order - 1) // 2)).index == 1

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"FieldElement({self.spec}, {self.index})"



def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def inv(a):
    return a.inverse()


def is_square(a):
    return a.is_square()


def enumerate_field(spec):
    return spec.enumerate()


@lru_cache(maxsize=None)
def field_from_key(characteristic, degree, modulus):
    """
    Rebuild a FieldSpec from FieldSpec.key; worker processes receive only the key.
    """
    return FieldSpec(characteristic, degree, tuple(modulus))


def resolve_field(value):
    """
    Accept a FieldSpec or a field order q.
    """
    return value if isinstance(value, FieldSpec) else FieldSpec.from_order(int(value))
