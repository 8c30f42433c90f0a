# core/tests/test_enumerator.py
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from core.enumerator import (
    EnumeratorVector, average_group_weight_check, average_weight, build_matrices,
    distance_from_enumerators, enumerator_from_group, has_parity_structure, krawtchouk,
    macwilliams, normalizer_enumerator, parity_split, shadow,
)
from core.exceptions import DimensionError
from core.stabilizer import INFINITY, StabilizerGenerators, distance

from .utils import random_group

G1 = ['XXXI', 'IYYY', 'ZIZZ']
PERFECT = ['XZZXI', 'IXZZX', 'XIXZZ', 'ZXIXZ']


def group(strings):
    return StabilizerGenerators.from_strings(strings)


class KrawtchoukTest(SimpleTestCase):
    def test_values(self):
        self.assertEqual(krawtchouk(0, 3, 5), 1)
        self.assertEqual(krawtchouk(1, 0, 1), 3)
        self.assertEqual(krawtchouk(1, 1, 1), -1)
        self.assertEqual(krawtchouk(2, 0, 6), 9 * 15)

    def test_out_of_range(self):
        with self.assertRaises(DimensionError):
            krawtchouk(3, 0, 2)

    def test_matrices_for_one_qubit(self):
        plain, signed = build_matrices(1)
        self.assertEqual(plain.entries, ((1, 1), (3, -1)))
        self.assertEqual(signed.entries, ((1, -1), (3, 1)))

    def test_first_row_is_ones(self):
        plain, _ = build_matrices(7)
        self.assertEqual(set(plain.entries[0]), {1})


class EnumeratorTest(SimpleTestCase):
    def test_group_enumerators(self):
        self.assertEqual(enumerator_from_group(group(['XXXX', 'ZZZZ'])).as_ints(), [1, 0, 0, 0, 3])
        self.assertEqual(enumerator_from_group(group(G1)).as_ints(), [1, 0, 0, 4, 3])
        self.assertEqual(enumerator_from_group(StabilizerGenerators(3)).as_ints(), [1, 0, 0, 0])

    def test_macwilliams_of_422(self):
        a = enumerator_from_group(group(['XXXX', 'ZZZZ']))
        b = macwilliams(a, 4)
        self.assertEqual(b[0], 1)
        self.assertEqual(b[1], 0)
        self.assertTrue(all(y >= x for x, y in zip(a, b)))
        self.assertEqual(b, normalizer_enumerator(group(['XXXX', 'ZZZZ'])))

    def test_distance_from_enumerators(self):
        g = group(G1)
        a = enumerator_from_group(g)
        self.assertEqual(distance_from_enumerators(a, macwilliams(a, 2)), 2)
        g = group(PERFECT)
        a = enumerator_from_group(g)
        b = macwilliams(a, 2)
        self.assertEqual(distance_from_enumerators(a, b), 3)
        self.assertEqual(list(a)[:3], list(b)[:3])
        self.assertEqual(distance_from_enumerators(a, a), INFINITY)

    def test_length_mismatch(self):
        with self.assertRaises(DimensionError):
            distance_from_enumerators(EnumeratorVector.of([1, 0]), EnumeratorVector.of([1, 0, 0]))

    def test_shadow_is_nonnegative(self):
        self.assertTrue(shadow(enumerator_from_group(group(['XXXX', 'ZZZZ'])), 4).is_nonnegative())
        self.assertTrue(shadow(EnumeratorVector.of([1, 1]), 1).is_nonnegative())

    def test_average_weight(self):
        self.assertEqual(average_group_weight_check(group(['XXXX', 'ZZZZ'])), (3, 3))
        self.assertEqual(average_group_weight_check(group(G1)), (3, 3))
        self.assertEqual(average_weight(group(['ZZII', 'IIZZ', 'XXXX'])), Fraction(3))
        self.assertEqual(average_weight(group(['ZI'])), Fraction(1, 2))

    def test_parity(self):
        a = enumerator_from_group(group(G1))
        self.assertEqual(parity_split(a), (4, 8))
        self.assertTrue(has_parity_structure(a))
        self.assertFalse(has_parity_structure(EnumeratorVector.of([1, 2, 0, 1])))


class RandomGroupPropertyTest(SimpleTestCase):
    """Identities checked on seeded random groups with n <= 8"""

    def setUp(self):
        rng = np.random.default_rng(2024)
        self.groups = []
        while len(self.groups) < 200:
            n = int(rng.integers(1, 9))
            r = int(rng.integers(0, n + 1))
            self.groups.append(random_group(rng, n, r))

    def test_macwilliams_counts_normalizer(self):
        for g in self.groups:
            a = enumerator_from_group(g)
            self.assertEqual(macwilliams(a, 2 ** g.k), normalizer_enumerator(g), str(g))

    def test_shadow_nonnegative(self):
        for g in self.groups:
            self.assertTrue(shadow(enumerator_from_group(g), 2 ** g.k).is_nonnegative(), str(g))

    def test_enumerator_distance_matches_search(self):
        for g in self.groups:
            a = enumerator_from_group(g)
            self.assertEqual(distance_from_enumerators(a, macwilliams(a, 2 ** g.k)), distance(g), str(g))

    def test_parity_structure(self):
        for g in self.groups:
            self.assertTrue(has_parity_structure(enumerator_from_group(g)), str(g))

    def test_mean_weight(self):
        for g in self.groups:
            if distance(g) >= 2:
                lhs, rhs = average_group_weight_check(g)
                self.assertEqual(lhs, rhs, str(g))
