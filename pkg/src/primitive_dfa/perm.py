"""
Permutations and transformations of a finite point set.

Points are `0, 1, ..., degree - 1` internally and `1, ..., degree` in all
text. Composition is left to right: `compose(p, q)` maps `x` to `q[p[x]]`,
that is, "first `p`, then `q`".
"""

import math
import re
from typing import Iterable, TypeAlias, TypeVar

from .errors import (
    CycleSyntaxError, DegreeMismatchError, PointRangeError, PreconditionError,
    RepeatedPointError,
)


PointSet: TypeAlias = frozenset[int]
TransformationT = TypeVar("TransformationT", bound="Transformation")

_CYCLE_RE = re.compile(r"\(([0-9]+(?:,[0-9]+)*)?\)")


class Transformation(tuple[int, ...]):
    """
    A map from `{0, ..., degree - 1}` to itself, stored as its image tuple.

    Instances are immutable and hashable (they are tuples), so they can be
    used as set members and dictionary keys.
    """

    __slots__ = ()

    def __new__(cls: type[TransformationT], images: Iterable[int]) -> TransformationT:
        result = tuple.__new__(cls, images)
        result._validate()
        return result

    @classmethod
    def _trusted(cls: type[TransformationT], images: Iterable[int]) -> TransformationT:
        """
        Return a new instance without validating `images`.
        """
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls: type[TransformationT], degree: int) -> TransformationT:
        """
        Return the identity on `degree` points.
        """
        return cls(range(degree))

    def _validate(self) -> None:
        degree = len(self)
        if degree == 0:
            raise ValueError("degree must be a positive integer")
        for image in self:
            if not (isinstance(image, int) and 0 <= image < degree):
                raise ValueError(
                    f"image {image!r} is not a point of a degree {degree}"
                    " transformation",
                )

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self))

    def is_permutation(self) -> bool:
        """
        Return `True` if `self` is a bijection.
        """
        return len(set(self)) == len(self)

    def to_permutation(self) -> "Permutation":
        """
        Return `self` as a `Permutation`, checking bijectivity.
        """
        return Permutation(self)

    def compose(self, other: "Transformation") -> "Transformation":
        """
        Return the transformation "first `self`, then `other`".

        The result is a `Permutation` if both operands are.
        """
        if len(self) != len(other):
            raise DegreeMismatchError(
                f"cannot compose transformations of degrees {len(self)} and"
                f" {len(other)}",
            )
        cls = (
            Permutation
            if isinstance(self, Permutation) and isinstance(other, Permutation)
            else Transformation
        )
        return cls._trusted(map(other.__getitem__, self))

    def apply_to_set(self, points: Iterable[int]) -> PointSet:
        """
        Return the image of the point set `points`.
        """
        degree = len(self)
        result = set()
        for point in points:
            if not 0 <= point < degree:
                raise PreconditionError(
                    f"point {point} is out of range for degree {degree}",
                )
            result.add(self[point])
        return frozenset(result)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)!r})"

    def __str__(self) -> str:
        return "[" + " ".join(str(image + 1) for image in self) + "]"


class Permutation(Transformation):
    """
    A bijective `Transformation`.
    """

    __slots__ = ()

    def _validate(self) -> None:
        super()._validate()
        if not self.is_permutation():
            raise ValueError(f"{list(self)!r} is not a bijection")

    def inverse(self) -> "Permutation":
        result = [0] * len(self)
        for point, image in enumerate(self):
            result[image] = point
        return Permutation._trusted(result)

    def cycles(self) -> list[tuple[int, ...]]:
        """
        Return the non-trivial cycles in canonical order.

        Each cycle starts with its least point and cycles are sorted by their
        least points.
        """
        seen = [False] * len(self)
        result = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    @property
    def cycle_count(self) -> int:
        """
        Return the number of cycles, fixed points included.
        """
        moved = self.cycles()
        return len(moved) + len(self) - sum(len(cycle) for cycle in moved)

    @property
    def parity(self) -> int:
        return (len(self) - self.cycle_count) % 2

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    def order(self) -> int:
        """
        Return the least `n >= 1` with `self ** n` equal to the identity.
        """
        return math.lcm(*(len(cycle) for cycle in self.cycles()))

    def power(self, exponent: int) -> "Permutation":
        result = list(range(len(self)))
        for cycle in self.cycles():
            length = len(cycle)
            shift = exponent % length
            for idx, point in enumerate(cycle):
                result[point] = cycle[(idx + shift) % length]
        return Permutation._trusted(result)

    def conjugate(self, other: "Permutation") -> "Permutation":
        """
        Return `other^-1 self other`.
        """
        return other.inverse().compose(self).compose(other)  # type: ignore

    def __str__(self) -> str:
        return format_cycles(self)


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Return the permutation described by 1-based cycle notation.

    ```
    >>> parse_cycles("(2,3,4)", 4)
    Permutation([0, 2, 3, 1])
    ```

    The text is a concatenation of parenthesized, comma-separated cycles with
    no whitespace inside; `"()"` is the identity. Cycles must be disjoint.
    """
    if not (isinstance(degree, int) and degree > 0):
        raise ValueError("degree must be a positive integer")
    text = text.strip()
    if not text:
        raise CycleSyntaxError("empty cycle notation")
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    while pos < len(text):
        match = _CYCLE_RE.match(text, pos)
        if match is None:
            raise CycleSyntaxError(
                f"malformed cycle notation {text!r} at position {pos + 1}",
            )
        pos = match.end()
        body = match.group(1)
        if body is None:
            continue
        points = [int(name) for name in body.split(",")]
        for point in points:
            if not 1 <= point <= degree:
                raise PointRangeError(
                    f"point {point} is out of range 1..{degree} in {text!r}",
                )
            if point in seen:
                raise RepeatedPointError(
                    f"point {point} appears more than once in {text!r}",
                )
            seen.add(point)
        for here, there in zip(points, points[1:] + points[:1]):
            images[here - 1] = there - 1
    return Permutation._trusted(images)


def format_cycles(p: Permutation) -> str:
    """
    Return the canonical 1-based cycle notation of `p`.
    """
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join(
        "(" + ",".join(str(point + 1) for point in cycle) + ")"
        for cycle in cycles
    )


def format_points(points: Iterable[int]) -> str:
    """
    Return a 1-based rendering of a point set, like `{1,3,5}`.
    """
    return "{" + ",".join(str(point + 1) for point in sorted(points)) + "}"


def parse_points(text: str, degree: int) -> PointSet:
    """
    Return the 0-based point set written as `{1,3,5}` or `1 3 5`.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    result = set()
    for name in body.replace(",", " ").split():
        if not name.isdigit():
            raise PointRangeError(f"{name!r} is not a point name")
        point = int(name)
        if not 1 <= point <= degree:
            raise PointRangeError(f"point {point} is out of range 1..{degree}")
        result.add(point - 1)
    return frozenset(result)


def compose(p: Transformation, q: Transformation) -> Transformation:
    """
    Return "first `p`, then `q`".
    """
    return p.compose(q)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def element_order(p: Permutation) -> int:
    return p.order()


def apply_to_set(p: Transformation, points: Iterable[int]) -> PointSet:
    return p.apply_to_set(points)
