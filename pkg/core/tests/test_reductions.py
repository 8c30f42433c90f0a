# core/tests/test_reductions.py
import numpy as np
from django.test import SimpleTestCase, override_settings

from core.exceptions import BudgetExceeded, DependentBasisError, DimensionError, InstanceParseError
from core.reductions import (
    MLDInstance, MWSGInstance, SBPInstance, Verdict, decide_mld, decide_mwsg, decide_sbp, format_sbp,
    kernel_basis, mld_to_sbp, particular_solution, random_mld_instance, read_mld_instance, sbp_to_mwsg,
)
from core.stabilizer import StabilizerGenerators, optimal_weight

from .utils import random_group


def mwsg(strings, t):
    return MWSGInstance(StabilizerGenerators.from_strings(strings), t)


class VerdictTest(SimpleTestCase):
    def test_truthiness(self):
        self.assertTrue(Verdict.YES)
        self.assertFalse(Verdict.NO)
        self.assertIs(Verdict.of(1 == 1), Verdict.YES)
        self.assertEqual(Verdict.NO.value, 'NO')


class InstanceTest(SimpleTestCase):
    def test_read_instance(self):
        text = '# H then s then t\n1 1 0\n0 1 1\n10\n1\n'
        inst = read_mld_instance(text)
        self.assertEqual(inst.h, ((1, 1, 0), (0, 1, 1)))
        self.assertEqual(inst.s, (1, 0))
        self.assertEqual((inst.m, inst.n, inst.t), (2, 3, 1))

    def test_parse_errors(self):
        for text in ['110\n1', '1a0\n1\n1', '110\n1\nx', '110\n011\n1\n1']:
            with self.subTest(text=text), self.assertRaises(InstanceParseError):
                read_mld_instance(text)

    def test_dependent_rows(self):
        with self.assertRaises(DependentBasisError):
            MLDInstance(((1, 1), (1, 1)), (0, 0), 1)

    def test_negative_threshold(self):
        with self.assertRaises(DimensionError):
            MLDInstance(((1, 0),), (1,), -1)

    def test_random_instance_is_full_rank(self):
        rng = np.random.default_rng(3)
        inst = random_mld_instance(rng, 3, 5)
        self.assertEqual(inst.m, 3)
        self.assertEqual(len(kernel_basis(inst)), 2)
        with self.assertRaises(DimensionError):
            random_mld_instance(rng, 4, 3)

    def test_particular_solution_solves(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            inst = random_mld_instance(rng, 3, 6)
            x = particular_solution(inst)
            for row, bit in zip(inst.h, inst.s):
                dot = sum(row[j] for j in range(inst.n) if x >> j & 1) % 2
                self.assertEqual(dot, bit)

    def test_sbp_rejects_dependent_basis(self):
        with self.assertRaises(DependentBasisError):
            SBPInstance((0b11, 0b11), 2, 2)
        with self.assertRaises(DimensionError):
            SBPInstance((0b100,), 1, 2)


class TransformTest(SimpleTestCase):
    def test_single_check(self):
        sbp = mld_to_sbp(MLDInstance(((1,),), (0,), 0))
        self.assertEqual(sbp.basis, (0b10,))
        self.assertEqual(sbp.t, 1)
        self.assertEqual(format_sbp(sbp), '01\n1')
        self.assertIs(decide_sbp(sbp), Verdict.YES)

    def test_z_type_generators(self):
        inst = sbp_to_mwsg(SBPInstance((0b011, 0b110), 2, 3))
        self.assertEqual([str(g) for g in inst.generators], ['ZZI', 'IZZ'])
        self.assertIs(decide_mwsg(inst), Verdict.YES)
        self.assertIs(decide_mwsg(sbp_to_mwsg(SBPInstance((0b111,), 2, 3))), Verdict.NO)
        self.assertIs(decide_mwsg(sbp_to_mwsg(SBPInstance((), 0, 3))), Verdict.YES)

    def test_threshold_past_length(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            inst = random_mld_instance(rng, 2, 4, t=4)
            self.assertIs(decide_mld(inst), Verdict.YES)
            self.assertIs(decide_sbp(mld_to_sbp(inst)), Verdict.YES)

    def test_chain_preserves_answers(self):
        """Test that random decoding instances keep their answer through the chain"""
        rng = np.random.default_rng(2024)
        answers = set()
        for _ in range(100):
            n = int(rng.integers(1, 7))
            m = int(rng.integers(1, min(3, n) + 1))
            inst = random_mld_instance(rng, m, n)
            expected = decide_mld(inst)
            sbp = mld_to_sbp(inst)
            with self.subTest(h=inst.h, s=inst.s, t=inst.t):
                self.assertIs(decide_sbp(sbp), expected)
                self.assertIs(decide_mwsg(sbp_to_mwsg(sbp)), expected)
            answers.add(expected)
        self.assertEqual(answers, {Verdict.YES, Verdict.NO})


class DeciderTest(SimpleTestCase):
    def test_small_groups(self):
        g1 = ['XXXI', 'IYYY', 'ZIZZ']
        g2 = ['ZZII', 'IIZZ', 'XXXX']
        self.assertIs(decide_mwsg(mwsg(g1, 3)), Verdict.YES)
        self.assertIs(decide_mwsg(mwsg(g1, 2)), Verdict.NO)
        self.assertIs(decide_mwsg(mwsg(g2, 3)), Verdict.NO)
        self.assertIs(decide_mwsg(mwsg(g2, 4)), Verdict.YES)

    def test_threshold_matches_optimal_weight(self):
        """Test that the decider flips exactly at the optimal generator weight"""
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            group = random_group(rng, n, int(rng.integers(1, n + 1)))
            if not group.r:
                continue
            w = optimal_weight(group)
            with self.subTest(group=str(group)):
                self.assertIs(decide_mwsg(MWSGInstance(group, w)), Verdict.YES)
                self.assertIs(decide_mwsg(MWSGInstance(group, w - 1)), Verdict.NO)

    @override_settings(QWEIGHT={'MLD_MAX_N': 3, 'MWSG_MAX_RANK': 1})
    def test_budgets(self):
        with self.assertRaises(BudgetExceeded):
            decide_mld(MLDInstance(((1, 0, 0, 1),), (1,), 1))
        with self.assertRaises(BudgetExceeded):
            decide_mwsg(mwsg(['ZZ', 'XX'], 2))
