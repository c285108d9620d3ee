"""
Tests for permutations, transformations and cycle notation.
"""

from hypothesis import given, strategies as st

from primitive_dfa.errors import (
    CycleSyntaxError, DegreeMismatchError, ParseError, PointRangeError,
    PreconditionError, RepeatedPointError,
)
from primitive_dfa.perm import (
    Permutation, Transformation, apply_to_set, compose, element_order,
    format_cycles, format_points, inverse, parse_cycles, parse_points,
)

from .utils import TestsBase, cyc, points


def _same_degree(count: int):
    return st.integers(1, 7).flatmap(
        lambda n: st.tuples(
            *(st.permutations(list(range(n))) for _ in range(count)),
        ),
    )


class TestCycleNotation(TestsBase):

    def test_parse(self):
        self.assertEqual(parse_cycles("(2,3,4)", 4), Permutation([0, 2, 3, 1]))
        self.assertEqual(
            parse_cycles("(1,2)(3,4)", 4), Permutation([1, 0, 3, 2]),
        )
        self.assertEqual(parse_cycles("()", 3), Permutation.identity(3))
        self.assertEqual(parse_cycles("(1)(2,3)", 3), Permutation([0, 2, 1]))

    def test_parse_errors(self):
        with self.assertRaises(CycleSyntaxError):
            parse_cycles("(1 2)", 3)
        with self.assertRaises(CycleSyntaxError):
            parse_cycles("(1,2", 3)
        with self.assertRaises(CycleSyntaxError):
            parse_cycles("", 3)
        with self.assertRaises(PointRangeError):
            parse_cycles("(1,4)", 3)
        with self.assertRaises(PointRangeError):
            parse_cycles("(0,1)", 3)
        with self.assertRaises(RepeatedPointError):
            parse_cycles("(1,2)(2,3)", 3)
        with self.assertRaises(RepeatedPointError):
            parse_cycles("(1,2,1)", 3)
        with self.assertRaises(ValueError):
            parse_cycles("(1,2)", 0)
        self.assertTrue(issubclass(CycleSyntaxError, ParseError))
        self.assertTrue(issubclass(ParseError, ValueError))

    def test_format(self):
        self.assertEqual(format_cycles(cyc("(3,1,2)", 3)), "(1,2,3)")
        self.assertEqual(format_cycles(cyc("(4,5)(1,3)", 5)), "(1,3)(4,5)")
        self.assertEqual(format_cycles(Permutation.identity(4)), "()")
        self.assertEqual(str(cyc("(2,6,4,5,3,7)(8,10,9)", 10)), "(2,6,4,5,3,7)(8,10,9)")

    @given(_same_degree(1))
    def test_format_parse_identity(self, perms):
        p = Permutation(perms[0])
        self.assertEqual(parse_cycles(format_cycles(p), len(p)), p)

    def test_points(self):
        self.assertEqual(format_points({0, 2, 4}), "{1,3,5}")
        self.assertEqual(format_points(()), "{}")
        self.assertEqual(parse_points("{1,3,5}", 6), points(1, 3, 5))
        self.assertEqual(parse_points("2 4", 6), points(2, 4))
        with self.assertRaises(PointRangeError):
            parse_points("{7}", 6)
        with self.assertRaises(PointRangeError):
            parse_points("{a}", 6)


class TestPermutation(TestsBase):

    def test_compose_is_left_to_right(self):
        p = cyc("(1,2)", 3)
        q = cyc("(2,3)", 3)
        # 1 -> 2 under p, then 2 -> 3 under q.
        self.assertEqual(compose(p, q)[0], 2)
        self.assertEqual(compose(p, q), cyc("(1,3,2)", 3))
        self.assertIsInstance(compose(p, q), Permutation)

    def test_compose_degree_mismatch(self):
        with self.assertRaises(DegreeMismatchError):
            compose(cyc("(1,2)", 2), cyc("(1,2)", 3))

    def test_inverse_order_parity(self):
        p = cyc("(1,2,3)(4,5)", 5)
        self.assertEqual(inverse(p), cyc("(1,3,2)(4,5)", 5))
        self.assertEqual(element_order(p), 6)
        self.assertEqual(element_order(Permutation.identity(3)), 1)
        self.assertFalse(p.is_even)
        self.assertTrue(cyc("(1,2,3)", 5).is_even)
        self.assertEqual(p.cycle_count, 2)
        self.assertEqual(cyc("(1,2)", 4).cycle_count, 3)

    def test_power_and_conjugate(self):
        p = cyc("(1,2,3,4,5,6)", 6)
        self.assertEqual(p.power(2), cyc("(1,3,5)(2,4,6)", 6))
        self.assertEqual(p.power(-1), p.inverse())
        self.assertEqual(p.power(6), Permutation.identity(6))
        h = cyc("(1,2)", 6)
        self.assertEqual(p.conjugate(h), h.inverse().compose(p).compose(h))
        self.assertEqual(p.conjugate(h).cycles()[0][0], 0)

    def test_validation(self):
        with self.assertRaises(ValueError):
            Permutation([0, 0, 1])
        with self.assertRaises(ValueError):
            Transformation([0, 3])
        with self.assertRaises(ValueError):
            Transformation([])
        t = Transformation([0, 0, 1])
        self.assertFalse(t.is_permutation())
        self.assertEqual(str(t), "[1 1 2]")
        self.assertIsInstance(
            Transformation([1, 0]).to_permutation(), Permutation,
        )
        self.assertEqual(
            compose(t, Transformation([1, 2, 0])), Transformation([1, 1, 2]),
        )
        self.assertNotIsInstance(
            compose(t, cyc("(1,2,3)", 3)), Permutation,
        )

    def test_apply_to_set(self):
        p = cyc("(1,2,3,4,5,6)", 6)
        self.assertEqual(apply_to_set(p, points(1, 3, 5)), points(2, 4, 6))
        with self.assertRaises(PreconditionError):
            apply_to_set(p, {6})

    @given(_same_degree(3))
    def test_group_laws(self, perms):
        p, q, r = (Permutation(images) for images in perms)
        identity = Permutation.identity(len(p))
        self.assertEqual(p.compose(q).compose(r), p.compose(q.compose(r)))
        self.assertEqual(p.compose(p.inverse()), identity)
        self.assertEqual(p.inverse().compose(p), identity)
        self.assertEqual(p.power(p.order()), identity)
        self.assertEqual(
            p.compose(q).is_even, p.is_even == q.is_even,
        )
