"""
Tests for the named DFA families and the catalog.
"""

import random

from primitive_dfa import catalog
from primitive_dfa.automata import (
    is_minimal, is_permutation_dfa, is_strongly_connected, transition_group,
)
from primitive_dfa.errors import PreconditionError
from primitive_dfa.families import (
    affine_pair_non_ubm, affine_pair_ubm, alternating_dfa, cyclic_dfa,
    maslov_pair, random_permutation_dfa, symmetric_dfa, yzs_pair,
)
from primitive_dfa.gf2k import Gf2kField, agl_group
from primitive_dfa.groups import SymAltClass
from primitive_dfa.perm import Permutation

from .utils import TestsBase


class TestGroupFamilies(TestsBase):

    def test_cyclic(self):
        d = cyclic_dfa(6)
        self.assertEqual(d.alphabet, ("a",))
        self.assertEqual(d.finals, frozenset({0, 2, 4}))
        self.assertEqual(transition_group(d).order, 6)
        with self.assertRaises(PreconditionError):
            cyclic_dfa(1)

    def test_symmetric(self):
        for n in (2, 3, 5):
            with self.subTest(n=n):
                group = transition_group(symmetric_dfa(n))
                self.assertEqual(group.classify_sym_or_alt(), SymAltClass.SYMMETRIC)

    def test_alternating(self):
        for n in (3, 4, 5, 6):
            with self.subTest(n=n):
                d = alternating_dfa(n)
                group = transition_group(d)
                self.assertEqual(
                    group.classify_sym_or_alt(), SymAltClass.ALTERNATING,
                )
                self.assertTrue(is_strongly_connected(d))
        with self.assertRaises(PreconditionError):
            alternating_dfa(2)


class TestWitnessFamilies(TestsBase):

    def test_maslov(self):
        left, right = maslov_pair(3, 4)
        self.assertEqual(left.alphabet, ("1", "0"))
        self.assertEqual(right.alphabet, ("1", "0"))
        self.assertTrue(left.accepts("11"))
        self.assertTrue(left.accepts("01010"))
        self.assertFalse(left.accepts("111"))
        self.assertTrue(right.accepts("000"))
        self.assertFalse(right.accepts("0000"))
        self.assertTrue(is_minimal(left) and is_minimal(right))
        with self.assertRaises(PreconditionError):
            maslov_pair(0, 3)

    def test_yzs(self):
        left, right = yzs_pair(2, 3)
        self.assertTrue(left.accepts(""))
        self.assertTrue(left.accepts("aba"))
        self.assertFalse(left.accepts("a"))
        self.assertTrue(right.accepts("bbab"))
        self.assertFalse(right.accepts("bb"))

    def test_affine_pairs(self):
        field = Gf2kField(3)
        left, right = affine_pair_non_ubm(field)
        self.assertEqual(left.alphabet, ("a", "b", "c"))
        self.assertEqual(left.finals, frozenset({0, 1, 2, 3}))
        self.assertEqual(right.finals, left.finals)
        self.assertEqual(left.delta["b"], right.delta["c"])
        self.assertTrue(right.delta["b"].is_identity)
        agl = agl_group(field)
        self.assertTrue(transition_group(left).equals(agl))
        self.assertTrue(transition_group(right).equals(agl))

        left, right = affine_pair_ubm(field)
        self.assertEqual(left.alphabet, ("a", "b"))
        self.assertTrue(left.delta["a"].compose(right.delta["a"]).is_identity)
        self.assertEqual(left.delta["b"], right.delta["b"])
        self.assertTrue(transition_group(right).equals(agl))

    def test_random(self):
        first = random_permutation_dfa(random.Random(1), 5, 2, 2)
        second = random_permutation_dfa(random.Random(1), 5, 2, 2)
        self.assertEqual(first, second)
        self.assertEqual(first.alphabet, ("a", "b"))
        self.assertEqual(len(first.finals), 2)
        self.assertTrue(is_permutation_dfa(first))
        with self.assertRaises(PreconditionError):
            random_permutation_dfa(random.Random(1), 5, 2, 6)
        with self.assertRaises(PreconditionError):
            random_permutation_dfa(random.Random(1), 5, 27)


class TestCatalog(TestsBase):

    def test_a4_dfa(self):
        d = catalog.a4_dfa()
        self.assertEqual(d.delta["a"], Permutation([0, 2, 3, 1]))
        self.assertEqual(d.finals, frozenset({2, 3}))
        self.assertEqual(transition_group(d).order, 12)

    def test_pairs_share_alphabets(self):
        pairs = [
            catalog.xor_pair(), catalog.ubm_pair(),
            catalog.strongly_dissimilar_pair(), catalog.klein_pair(),
            catalog.s5_degree10_pair(), catalog.s5_degree10_pair(swapped=True),
            catalog.two_transitive_pair(),
        ] + [
            catalog.s5_degree6_pair(variant)
            for variant in catalog.S5_DEGREE6_VARIANTS
        ]
        for left, right in pairs:
            with self.subTest(left=left, right=right):
                self.assertEqual(left.alphabet, right.alphabet)
                self.assertTrue(is_permutation_dfa(left))
                self.assertTrue(is_permutation_dfa(right))

    def test_s5_actions(self):
        left, right = catalog.s5_degree6_pair("isomorphism")
        self.assertEqual(transition_group(left).order, 120)
        self.assertEqual(right.finals, frozenset({0, 2, 4}))
        self.assertEqual(
            transition_group(catalog.s5_degree10_pair()[1]).order, 120,
        )
        with self.assertRaises(KeyError):
            catalog.s5_degree6_pair("unknown")

    def test_two_transitive_pair(self):
        for d in catalog.two_transitive_pair():
            with self.subTest(d=d):
                self.assertTrue(transition_group(d).is_k_transitive(2))
