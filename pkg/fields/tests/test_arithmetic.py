from itertools import product

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from core.exceptions import FieldMismatchError
from fields.arithmetic import *
from fields.serializers import FieldSpecSerializer



SMALL_ORDERS = (2, 3, 4, 5, 7, 8, 9)



class FieldSpecTests(SimpleTestCase):

    def test_prime_field_defaults(self):
        """A prime field has degree 1 and the trivial modulus x."""
        spec = FieldSpec(5)
        self.assertEqual(spec.order, 5)
        self.assertTrue(spec.is_prime_field)
        self.assertEqual(spec.modulus, (0, 1))
        self.assertEqual(spec.label(), "GF(5)")


    def test_from_order_splits_prime_power(self):
        """from_order should recover p and e from q."""
        spec = FieldSpec.from_order(9)
        self.assertEqual((spec.characteristic, spec.degree), (3, 2))
        self.assertEqual(spec.label(), "GF(3^2)")


    def test_default_moduli_are_least_irreducible(self):
        """Default moduli are the lexicographically least monic irreducibles."""
        self.assertEqual(FieldSpec.from_order(4).modulus, (1, 1, 1))
        self.assertEqual(FieldSpec.from_order(8).modulus, (1, 1, 0, 1))
        self.assertEqual(FieldSpec.from_order(9).modulus, (1, 0, 1))


    def test_non_prime_characteristic_rejected(self):
        """A composite characteristic is reported under 'characteristic'."""
        with self.assertRaises(ValidationError) as context:
            FieldSpec(6)
        self.assertIn("characteristic", context.exception.message_dict)


    def test_non_prime_power_order_rejected(self):
        """q = 6 is not a prime power."""
        with self.assertRaises(ValidationError) as context:
            FieldSpec.from_order(6)
        self.assertIn("order", context.exception.message_dict)


    def test_reducible_modulus_rejected(self):
        """x^2 + 1 = (x + 1)^2 over F_2 is not a valid modulus."""
        with self.assertRaises(ValidationError) as context:
            FieldSpec(2, 2, (1, 0, 1))
        self.assertIn("modulus", context.exception.message_dict)


    def test_non_monic_modulus_rejected(self):
        """The leading modulus coefficient must be 1."""
        with self.assertRaises(ValidationError):
            FieldSpec(3, 2, (1, 0, 2))


    def test_order_cap(self):
        """Orders above 2^16 are refused."""
        with self.assertRaises(ValidationError):
            FieldSpec(2, 17)


    def test_serializer_shape(self):
        """FieldSpec serializes as {p, e, modulus}."""
        data = FieldSpecSerializer(FieldSpec.from_order(4)).data
        self.assertEqual(dict(data), {'p': 2, 'e': 2, 'modulus': [1, 1, 1]})



class FieldOperationTests(SimpleTestCase):

    def setUp(self):
        self.f5 = FieldSpec(5)
        self.f4 = FieldSpec.from_order(4)
        self.alpha = self.f4.element(2)


    def test_prime_field_examples(self):
        """3 + 4 = 2, 2 * 3 = 1 and 2^-1 = 3 in F_5."""
        e = self.f5.element
        self.assertEqual(add(e(3), e(4)), e(2))
        self.assertEqual(mul(e(2), e(3)), e(1))
        self.assertEqual(inv(e(2)), e(3))
        self.assertEqual(inv(e(1)), e(1))


    def test_f4_examples(self):
        """alpha + alpha = 0, alpha^2 = alpha + 1 and alpha^-1 = alpha + 1 in F_4."""
        alpha_plus_one = self.f4.element(3)
        self.assertEqual(self.alpha + self.alpha, self.f4.zero)
        self.assertEqual(self.alpha * self.alpha, alpha_plus_one)
        self.assertEqual(self.alpha.inverse(), alpha_plus_one)
        self.assertEqual(alpha_plus_one.coeffs, (1, 1))


    def test_identities(self):
        """x + 0 = x and x * 1 = x for every element."""
        for spec in (self.f5, self.f4):
            for x in spec.enumerate():
                self.assertEqual(x + spec.zero, x)
                self.assertEqual(x * spec.one, x)


    def test_inverse_of_zero(self):
        """Inverting zero raises ZeroDivisionError."""
        with self.assertRaises(ZeroDivisionError):
            self.f5.zero.inverse()


    def test_mismatched_fields(self):
        """Mixing elements of different fields raises FieldMismatchError."""
        with self.assertRaises(FieldMismatchError):
            self.f5.one + self.f4.one
        with self.assertRaises(TypeError):
            self.f5.one * 1


    def test_enumerate_order(self):
        """Elements come out in canonical-index order."""
        self.assertEqual([x.index for x in enumerate_field(FieldSpec(3))], [0, 1, 2])
        self.assertEqual([x.coeffs for x in self.f4.enumerate()], [(0, 0), (1, 0), (0, 1), (1, 1)])


    def test_from_coeffs(self):
        """Polynomial-basis coordinates map back to the canonical index."""
        f9 = FieldSpec.from_order(9)
        for x in f9.enumerate():
            self.assertEqual(f9.from_coeffs(x.coeffs), x)


    def test_is_square_examples(self):
        """2 is a nonsquare and 4 a square mod 5; everything is a square in F_4."""
        self.assertFalse(is_square(self.f5.element(2)))
        self.assertTrue(is_square(self.f5.element(4)))
        self.assertTrue(all(is_square(x) for x in self.f4.enumerate()))


    def test_negative_powers(self):
        """x^-k equals (x^-1)^k."""
        x = self.f5.element(2)
        self.assertEqual(x ** -2, x.inverse() * x.inverse())



class FieldAxiomTests(SimpleTestCase):

    def test_field_axioms(self):
        """Associativity, commutativity, distributivity and inverses over small fields."""
        for q in SMALL_ORDERS:
            spec = FieldSpec.from_order(q)
            elements = spec.enumerate()
            with self.subTest(q=q):
                for a, b in product(elements, repeat=2):
                    self.assertEqual(a + b, b + a)
                    self.assertEqual(a * b, b * a)
                    self.assertEqual(a - b + b, a)
                for a, b, c in product(elements, repeat=3):
                    self.assertEqual((a + b) + c, a + (b + c))
                    self.assertEqual((a * b) * c, a * (b * c))
                    self.assertEqual(a * (b + c), a * b + a * c)
                for a in elements[1:]:
                    self.assertEqual(a * a.inverse(), spec.one)


    def test_axioms_over_f16(self):
        """Commutativity and inverses over F_16."""
        spec = FieldSpec.from_order(16)
        elements = spec.enumerate()
        for a, b in product(elements, repeat=2):
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + a), a * b + a * a)
        for a in elements[1:]:
            self.assertEqual(a / a, spec.one)


    def test_frobenius(self):
        """(a + b)^p = a^p + b^p."""
        for q in SMALL_ORDERS:
            spec = FieldSpec.from_order(q)
            p = spec.characteristic
            for a, b in product(spec.enumerate(), repeat=2):
                self.assertEqual((a + b) ** p, a ** p + b ** p)


    def test_square_counts(self):
        """(q + 1) / 2 squares for odd q, all q for even q."""
        for q in SMALL_ORDERS:
            spec = FieldSpec.from_order(q)
            squares = sum(is_square(x) for x in spec.enumerate())
            expected = q if q % 2 == 0 else (q + 1) // 2
            self.assertEqual(squares, expected, q)
