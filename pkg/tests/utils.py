"""
Testing utilities.
"""

import importlib.util
from typing import Iterable
import unittest

from primitive_dfa.groups import PermGroup
from primitive_dfa.perm import Permutation, parse_cycles


HAS_SYMPY = importlib.util.find_spec("sympy") is not None


def cyc(text: str, degree: int) -> Permutation:
    """
    Shorthand for `parse_cycles`.
    """
    return parse_cycles(text, degree)


def group(degree: int, *generators: str) -> PermGroup:
    """
    Return the group generated by 1-based cycle strings.
    """
    return PermGroup([cyc(gen, degree) for gen in generators], degree=degree)


def points(*names: int) -> frozenset[int]:
    """
    Return the 0-based point set of the 1-based `names`.
    """
    return frozenset(name - 1 for name in names)


class TestsBase(unittest.TestCase):
    """
    The base unit tests class, used as a foundation for all other unit tests.
    """

    def assertSameGroup(self, first: PermGroup, second: PermGroup) -> None:
        """
        Assert that two groups have the same degree and elements.
        """
        self.assertEqual(first.degree, second.degree)
        self.assertEqual(first.elements, second.elements)

    def assertPartition(
        self, partition: Iterable[frozenset[int]], *blocks: Iterable[int],
    ) -> None:
        """
        Assert that `partition` consists of the 1-based `blocks`.
        """
        self.assertEqual(
            set(partition), {points(*block) for block in blocks},
        )
