"""
Tests for DFA products, their transition groups and the stabilizer
conditions.
"""

import random

from hypothesis import given, settings, strategies as st

from primitive_dfa.automata import Dfa
from primitive_dfa.boolean import is_uniformly_boolean_minimal
from primitive_dfa.catalog import (
    klein_pair, s5_degree10_pair, strongly_dissimilar_pair, ubm_pair,
)
from primitive_dfa.errors import (
    AlphabetMismatchError, CapExceededError, PreconditionError,
)
from primitive_dfa.families import (
    affine_pair_non_ubm, maslov_pair, random_permutation_dfa, yzs_pair,
)
from primitive_dfa.gf2k import Gf2kField, agl_group
from primitive_dfa.groups import PermGroup
from primitive_dfa.product import (
    CorollaryCase, Guarantee, ProductGroup, Similarity, accessibility_report,
    check_prop_graph, column_stabilizer, corollary_dissimilar_case,
    direct_product, full_column_stabilizer, full_row_stabilizer,
    packed_transition_group, product_group, row_stabilizer, similarity_class,
    stabilizers_transitive, theorem_dissimilar_verdict,
)

from .utils import TestsBase, cyc, group


def diagonal_pair() -> tuple[Dfa, Dfa]:
    d = Dfa(3, ("a",), {"a": [1, 2, 0]}, finals={0})
    return d, d


class TestDirectProduct(TestsBase):

    def test_packing(self):
        product = direct_product(*maslov_pair(3, 3))
        self.assertEqual(product.state_count, 9)
        self.assertEqual(product.pack(1, 2), 5)
        self.assertEqual(product.unpack(5), (1, 2))
        self.assertEqual(product.row(0), frozenset({0, 1, 2}))
        self.assertEqual(product.column(1), frozenset({1, 4, 7}))
        self.assertEqual(product.state_name(5), "(2,3)")
        self.assertEqual(product.dfa.run("10"), product.pack(1, 1))
        self.assertEqual(product.with_finals({8}).finals, frozenset({8}))

    def test_alphabet_mismatch(self):
        left, _ = maslov_pair(3, 3)
        _, right = yzs_pair(3, 3)
        with self.assertRaises(AlphabetMismatchError):
            direct_product(left, right)
        with self.assertRaises(AlphabetMismatchError):
            product_group(left, right)

    def test_requires_permutations(self):
        d = Dfa(2, ("a",), {"a": [1, 1]})
        with self.assertRaises(PreconditionError):
            product_group(d, d)


class TestProductGroup(TestsBase):

    def test_ubm_pair(self):
        gx = product_group(*ubm_pair())
        self.assertEqual(gx.order, 6)
        self.assertEqual(gx.order_from_kernel(), 6)
        self.assertEqual(full_row_stabilizer(gx).order, 3)
        self.assertTrue(full_column_stabilizer(gx).is_trivial)
        self.assertEqual(gx.similarity(), Similarity.DISSIMILAR)
        self.assertTrue(gx.is_transitive())
        self.assertEqual(
            stabilizers_transitive(gx), ([True, True], [True, True, True]),
        )
        self.assertEqual(
            packed_transition_group(direct_product(*ubm_pair())).order, 6,
        )

    def test_similarity(self):
        self.assertEqual(
            similarity_class(*strongly_dissimilar_pair()),
            Similarity.STRONGLY_DISSIMILAR,
        )
        self.assertEqual(similarity_class(*klein_pair()), Similarity.DISSIMILAR)
        self.assertEqual(similarity_class(*s5_degree10_pair()), Similarity.SIMILAR)
        self.assertEqual(similarity_class(*diagonal_pair()), Similarity.SIMILAR)
        self.assertEqual(
            similarity_class(*s5_degree10_pair(swapped=True)),
            Similarity.STRONGLY_DISSIMILAR,
        )

    def test_similar_pair(self):
        gx = product_group(*s5_degree10_pair())
        self.assertEqual(gx.order, 120)
        self.assertEqual(gx.left_group().order, 120)
        self.assertEqual(gx.right_group().order, 120)
        self.assertTrue(gx.right_group().is_primitive())

    def test_affine_stabilizers(self):
        left, right = affine_pair_non_ubm(Gf2kField(3))
        gx = product_group(left, right)
        self.assertEqual(gx.order, 448)
        self.assertEqual(gx.order_from_kernel(), 448)
        self.assertEqual(gx.similarity(), Similarity.STRONGLY_DISSIMILAR)
        self.assertSameGroup(row_stabilizer(gx, {0}), agl_group(Gf2kField(3)))
        self.assertEqual(row_stabilizer(gx, {0, 1}).order, 8)
        self.assertFalse(row_stabilizer(gx, {0, 1}).is_primitive())
        self.assertEqual(column_stabilizer(gx, {0}).order, 56)

    def test_line_stabilizer_arguments(self):
        gx = product_group(*ubm_pair())
        with self.assertRaises(PreconditionError):
            gx.row_stabilizer(set())
        with self.assertRaises(PreconditionError):
            gx.column_stabilizer({0, 1, 2})
        with self.assertRaises(PreconditionError):
            gx.row_stabilizer({2})

    def test_constructor_and_cap(self):
        with self.assertRaises(PreconditionError):
            ProductGroup(
                [(cyc("(1,2)", 2), cyc("(1,2)", 2))], left_degree=2, right_degree=3,
            )
        gx = product_group(*s5_degree10_pair(), cap=50)
        with self.assertRaises(CapExceededError):
            gx.order

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(2, 4), st.integers(2, 4), st.integers(1, 3),
        st.randoms(use_true_random=False),
    )
    def test_stabilizer_methods_agree(self, m, n, letters, rng):
        left = random_permutation_dfa(rng, m, letters)
        right = random_permutation_dfa(rng, n, letters)
        gx = product_group(left, right)
        row = gx.full_row_stabilizer()
        self.assertSameGroup(row, gx.full_row_stabilizer(method="filter"))
        self.assertSameGroup(
            gx.full_column_stabilizer(),
            gx.full_column_stabilizer(method="filter"),
        )
        self.assertTrue(row.is_normal_in(gx.right_group()))
        self.assertEqual(gx.order_from_kernel(), gx.order)
        self.assertEqual(gx.packed_group().order, gx.order)
        for p in range(m):
            for q in range(p, m):
                rows = gx.row_stabilizer({p, q})
                self.assertSameGroup(
                    rows, gx.row_stabilizer({p, q}, method="filter"),
                )
                self.assertLessEqual(row.elements, rows.elements)
        for p in range(n):
            self.assertSameGroup(
                gx.column_stabilizer({p}),
                gx.column_stabilizer({p}, method="filter"),
            )


class TestAccessibility(TestsBase):

    def test_accessible_product(self):
        report = accessibility_report(*maslov_pair(3, 3))
        self.assertTrue(report.accessible)
        self.assertTrue(report.all_stabilizers_transitive)
        self.assertTrue(report.some_row_or_column_transitive)
        self.assertTrue(report.group_transitive)
        self.assertTrue(report.consistent)
        self.assertTrue(check_prop_graph(*maslov_pair(3, 3)))

    def test_inaccessible_product(self):
        report = accessibility_report(*diagonal_pair())
        self.assertFalse(report.accessible)
        self.assertFalse(report.all_stabilizers_transitive)
        self.assertFalse(report.some_row_or_column_transitive)
        self.assertFalse(report.group_transitive)
        self.assertTrue(report.consistent)
        self.assertFalse(check_prop_graph(*diagonal_pair()))

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(1, 4), st.integers(1, 4), st.integers(1, 2),
        st.randoms(use_true_random=False),
    )
    def test_conditions_agree(self, m, n, letters, rng):
        left = random_permutation_dfa(rng, m, letters)
        right = random_permutation_dfa(rng, n, letters)
        report = accessibility_report(left, right)
        self.assertTrue(report.consistent)
        if report.accessible:
            self.assertTrue(check_prop_graph(left, right))


class TestDissimilarVerdict(TestsBase):

    def test_ubm_guaranteed(self):
        verdict = theorem_dissimilar_verdict(*s5_degree10_pair(swapped=True))
        self.assertEqual(verdict.guarantee, Guarantee.UBM_GUARANTEED)
        self.assertEqual(
            verdict.reason,
            "C pi is non-trivial and all non-trivial normal subgroups of G"
            " are primitive",
        )

    def test_accessible_guaranteed(self):
        verdict = theorem_dissimilar_verdict(*affine_pair_non_ubm(Gf2kField(3)))
        self.assertEqual(verdict.guarantee, Guarantee.ACCESSIBLE_GUARANTEED)
        self.assertTrue(verdict.reason.startswith("C pi is non-trivial"))
        self.assertTrue(verdict.reason.endswith("are transitive"))

    def test_only_the_kernel_side_counts(self):
        # G = S_3 has only primitive non-trivial normal subgroups, but C pi
        # is trivial; R pi' is the Klein four-group inside G' = S_4.
        left = Dfa(3, ("a", "b"), {"a": [0, 2, 1], "b": [2, 0, 1]})
        right = Dfa(4, ("a", "b"), {"a": [2, 1, 0, 3], "b": [3, 0, 2, 1]})
        gx = product_group(left, right)
        self.assertTrue(gx.full_column_stabilizer().is_trivial)
        self.assertEqual(gx.full_row_stabilizer().order, 4)
        verdict = theorem_dissimilar_verdict(left, right)
        self.assertEqual(verdict.guarantee, Guarantee.ACCESSIBLE_GUARANTEED)
        self.assertTrue(verdict.reason.startswith("R pi' is non-trivial"))
        self.assertTrue(accessibility_report(left, right).accessible)
        self.assertFalse(is_uniformly_boolean_minimal(left, right))

    def test_no_guarantee(self):
        left = Dfa(4, ("a", "b"), {"a": [1, 2, 3, 0], "b": [0, 1, 2, 3]})
        right = Dfa(4, ("a", "b"), {"a": [0, 1, 2, 3], "b": [1, 0, 3, 2]})
        verdict = theorem_dissimilar_verdict(left, right)
        self.assertEqual(verdict.guarantee, Guarantee.NO_GUARANTEE)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            theorem_dissimilar_verdict(*s5_degree10_pair())
        with self.assertRaises(PreconditionError):
            theorem_dissimilar_verdict(*strongly_dissimilar_pair())
        with self.assertRaises(PreconditionError):
            theorem_dissimilar_verdict(*ubm_pair())
        with self.assertRaises(PreconditionError):
            theorem_dissimilar_verdict(
                Dfa(2, ("a",), {"a": [1, 0]}),
                Dfa(4, ("a",), {"a": [2, 3, 1, 0]}),
            )

    def test_verdicts_hold_on_random_pairs(self):
        rng = random.Random(20261016)
        checked = 0
        for _ in range(150):
            letters = rng.randint(1, 2)
            left = random_permutation_dfa(rng, rng.randint(3, 4), letters)
            right = random_permutation_dfa(rng, rng.randint(3, 4), letters)
            if product_group(left, right).similarity() == Similarity.SIMILAR:
                continue
            verdict = theorem_dissimilar_verdict(left, right)
            if verdict.guarantee == Guarantee.NO_GUARANTEE:
                continue
            checked += 1
            with self.subTest(left=left, right=right):
                self.assertTrue(accessibility_report(left, right).accessible)
                if verdict.guarantee == Guarantee.UBM_GUARANTEED:
                    self.assertTrue(is_uniformly_boolean_minimal(left, right))
        self.assertGreater(checked, 0)

    def test_corollary_cases(self):
        self.assertEqual(
            corollary_dissimilar_case(group(5, "(1,2,3)", "(1,2,3,4,5)")),
            frozenset(CorollaryCase),
        )
        self.assertEqual(
            corollary_dissimilar_case(agl_group(Gf2kField(3))),
            frozenset({CorollaryCase.PRIMITIVE}),
        )
        self.assertEqual(
            corollary_dissimilar_case(group(6, "(1,2,3,4,5,6)")), frozenset(),
        )
        self.assertEqual(
            corollary_dissimilar_case(group(5, "(1,2,3,4,5)")),
            frozenset({
                CorollaryCase.TRANSITIVE_SIMPLE, CorollaryCase.PRIMITIVE,
                CorollaryCase.PRIMITIVE_SIMPLE,
            }),
        )
        self.assertNotIn(
            CorollaryCase.SYM_OR_ALT_NOT4,
            corollary_dissimilar_case(group(4, "(1,2)", "(1,2,3,4)")),
        )
        self.assertEqual(
            corollary_dissimilar_case(PermGroup([], degree=3)), frozenset(),
        )
