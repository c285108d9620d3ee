"""
Finite permutation groups.

A `PermGroup` is given by generators. Orbits, transitivity, blocks and
primitivity are computed from the generators alone; everything that needs
the element set (stabilizers, normal structure, orders) enumerates the group
on demand, up to a hard element cap.
"""

import enum
import logging
import math
from typing import Callable, Iterable, Iterator, Optional, Sequence, TypeAlias

from .config import DEFAULT_ELEMENT_CAP
from .errors import CapExceededError, DegreeMismatchError, PreconditionError
from .perm import Permutation, PointSet, format_cycles


logger = logging.getLogger(__name__)

Partition: TypeAlias = list[PointSet]


class SymAltClass(str, enum.Enum):
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    NEITHER = "neither"


class UnionFind:
    """
    Disjoint-set structure on `0, ..., n - 1`.
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, element: int) -> int:
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        """
        Merge the classes of `first` and `second`.

        Return `False` if they were already in the same class.
        """
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
            self.parent[rep_second] = rep_first
        elif self.rank[rep_first] > self.rank[rep_second]:
            self.parent[rep_second] = rep_first
        else:
            self.parent[rep_first] = rep_second
        return True

    def classes(self) -> Partition:
        result: dict[int, set[int]] = {}
        for element in range(len(self.parent)):
            result.setdefault(self.find(element), set()).add(element)
        return sorted((frozenset(cls) for cls in result.values()), key=min)


def _closure(
    generators: Sequence[Permutation], degree: int, cap: int,
) -> frozenset[Permutation]:
    """
    Return all products of `generators`, found breadth-first.
    """
    identity = Permutation.identity(degree)
    gens = [gen for gen in dict.fromkeys(generators) if not gen.is_identity]
    elements = {identity}
    frontier = [identity]
    while frontier:
        found = []
        for element in frontier:
            for gen in gens:
                product = Permutation._trusted(map(gen.__getitem__, element))
                if product not in elements:
                    if len(elements) >= cap:
                        raise CapExceededError(
                            f"group on {degree} points has more than {cap}"
                            " elements",
                        )
                    elements.add(product)
                    found.append(product)
        frontier = found
    logger.debug(
        "enumerated %d elements from %d generators on %d points",
        len(elements), len(gens), degree,
    )
    return frozenset(elements)


class PermGroup:
    """
    A permutation group given by generators, with a lazily enumerated
    element set.
    """

    def __init__(
        self,
        generators: Iterable[Permutation],
        *,
        degree: Optional[int] = None,
        cap: int = DEFAULT_ELEMENT_CAP,
    ) -> None:
        gens = [
            gen if isinstance(gen, Permutation) else Permutation(gen)
            for gen in generators
        ]
        if degree is None:
            if not gens:
                raise PreconditionError(
                    "degree must be given for a group without generators",
                )
            degree = len(gens[0])
        for gen in gens:
            if len(gen) != degree:
                raise DegreeMismatchError(
                    f"generator {gen} has degree {len(gen)}, expected {degree}",
                )
        self.generators = tuple(gens)
        self.degree = degree
        self.cap = cap
        self._elements: Optional[frozenset[Permutation]] = None

    @classmethod
    def from_elements(
        cls,
        elements: Iterable[Permutation],
        *,
        degree: int,
        cap: int = DEFAULT_ELEMENT_CAP,
    ) -> "PermGroup":
        """
        Return the group whose element set is `elements`.

        `elements` must be closed under composition. A small generating set is
        picked greedily from the sorted elements.
        """
        element_set = frozenset(elements)
        gens: list[Permutation] = []
        current = frozenset({Permutation.identity(degree)})
        for element in sorted(element_set):
            if element not in current:
                gens.append(element)
                current = _closure(gens, degree, cap)
        result = cls(gens, degree=degree, cap=cap)
        result._elements = current
        return result

    @property
    def elements(self) -> frozenset[Permutation]:
        if self._elements is None:
            self._elements = _closure(self.generators, self.degree, self.cap)
        return self._elements

    @property
    def is_enumerated(self) -> bool:
        return self._elements is not None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def is_trivial(self) -> bool:
        return all(gen.is_identity for gen in self.generators)

    def __contains__(self, p: object) -> bool:
        return p in self.elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.elements))

    def __repr__(self) -> str:
        gens = ", ".join(repr(format_cycles(gen)) for gen in self.generators)
        return f"{type(self).__name__}([{gens}], degree={self.degree})"

    def __str__(self) -> str:
        if self.is_trivial:
            return "<()>"
        return "<" + ",".join(
            format_cycles(gen) for gen in self.generators if not gen.is_identity
        ) + ">"

    def equals(self, other: "PermGroup") -> bool:
        """
        Return `True` if both groups have the same degree and elements.
        """
        return self.degree == other.degree and self.elements == other.elements

    # Generator-only computations.

    def orbit(self, point: int) -> PointSet:
        seen = {point}
        queue = [point]
        while queue:
            current = queue.pop()
            for gen in self.generators:
                image = gen[current]
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return frozenset(seen)

    def orbits(self) -> Partition:
        result = []
        remaining = set(range(self.degree))
        while remaining:
            orbit = self.orbit(min(remaining))
            remaining -= orbit
            result.append(orbit)
        return result

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_k_transitive(self, k: int) -> bool:
        """
        Return `True` if the group is transitive on `k`-tuples of distinct
        points.
        """
        if not (isinstance(k, int) and 1 <= k <= self.degree):
            raise PreconditionError(
                f"k must be between 1 and the degree {self.degree}, got {k}",
            )
        start = tuple(range(k))
        seen = {start}
        queue = [start]
        while queue:
            current = queue.pop()
            for gen in self.generators:
                image = tuple(gen[point] for point in current)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return len(seen) == math.perm(self.degree, k)

    def _congruence(self, seeds: Iterable[int]) -> UnionFind:
        """
        Return the finest congruence that puts all of `seeds` in one class.
        """
        classes = UnionFind(self.degree)
        seed_list = sorted(set(seeds))
        pending = [
            (seed_list[0], seed)
            for seed in seed_list[1:]
            if classes.unite(seed_list[0], seed)
        ]
        while pending:
            first, second = pending.pop()
            for gen in self.generators:
                image_first, image_second = gen[first], gen[second]
                if classes.unite(image_first, image_second):
                    pending.append((image_first, image_second))
        return classes

    def _require_transitive(self) -> None:
        if not self.is_transitive():
            raise PreconditionError(f"group {self} is not transitive")

    def minimal_block_containing(self, points: Iterable[int]) -> PointSet:
        """
        Return the smallest block containing all of `points`.
        """
        seeds = set(points)
        if not seeds:
            raise PreconditionError("at least one seed point is required")
        for point in seeds:
            if not 0 <= point < self.degree:
                raise PreconditionError(
                    f"point {point} is out of range for degree {self.degree}",
                )
        self._require_transitive()
        classes = self._congruence(seeds)
        root = classes.find(min(seeds))
        return frozenset(
            point for point in range(self.degree)
            if classes.find(point) == root
        )

    def is_primitive(self) -> bool:
        """
        Return `True` if the group is transitive and has only trivial blocks.

        Intransitive groups are not primitive.
        """
        if not self.is_transitive():
            return False
        return all(
            len(self.minimal_block_containing((0, point))) == self.degree
            for point in range(1, self.degree)
        )

    def minimal_block_systems(self) -> list[Partition]:
        """
        Return the distinct non-trivial block systems generated by the
        minimal blocks containing `{0, x}`.

        Every non-trivial congruence is coarser than one of these, so a set
        saturated by some non-trivial congruence is saturated by one of them.
        """
        self._require_transitive()
        result: dict[frozenset[PointSet], Partition] = {}
        for point in range(1, self.degree):
            partition = self._congruence((0, point)).classes()
            if len(partition) > 1:
                result.setdefault(frozenset(partition), partition)
        return sorted(result.values(), key=_partition_key)

    def blocks_containing(self, point: int = 0) -> list[PointSet]:
        """
        Return every block containing `point`, trivial ones included.
        """
        self._require_transitive()
        found = {frozenset({point})}
        queue = [frozenset({point})]
        while queue:
            block = queue.pop()
            for extra in range(self.degree):
                if extra not in block:
                    bigger = self.minimal_block_containing(block | {extra})
                    if bigger not in found:
                        found.add(bigger)
                        queue.append(bigger)
        return sorted(found, key=lambda block: (len(block), sorted(block)))

    def block_system(self, block: Iterable[int]) -> Partition:
        """
        Return the orbit of `block`, which must be a block.
        """
        start = frozenset(block)
        seen = {start}
        queue = [start]
        while queue:
            current = queue.pop()
            for gen in self.generators:
                image = gen.apply_to_set(current)
                if image not in seen:
                    if image & current and image != current:
                        raise PreconditionError(
                            f"{sorted(start)} is not a block of {self}",
                        )
                    seen.add(image)
                    queue.append(image)
        for first in seen:
            for second in seen:
                if first != second and first & second:
                    raise PreconditionError(
                        f"{sorted(start)} is not a block of {self}",
                    )
        return sorted(seen, key=min)

    def nontrivial_block_systems(self) -> list[Partition]:
        return [
            self.block_system(block)
            for block in self.blocks_containing(0)
            if 1 < len(block) < self.degree
        ]

    def nontrivial_blocks(self) -> list[PointSet]:
        """
        Return every non-trivial block, sorted by size and then by points.
        """
        result = {
            block
            for system in self.nontrivial_block_systems()
            for block in system
        }
        return sorted(result, key=lambda block: (len(block), sorted(block)))

    def is_abelian(self) -> bool:
        return all(
            first.compose(second) == second.compose(first)
            for idx, first in enumerate(self.generators)
            for second in self.generators[idx + 1:]
        )

    # Computations on the element set.

    def _subgroup(self, elements: Iterable[Permutation]) -> "PermGroup":
        return PermGroup.from_elements(
            elements, degree=self.degree, cap=self.cap,
        )

    def _generated(self, generators: Iterable[Permutation]) -> "PermGroup":
        result = PermGroup(generators, degree=self.degree, cap=self.cap)
        result.elements
        return result

    def setwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        target = frozenset(points)
        return self._subgroup(
            element for element in self.elements
            if element.apply_to_set(target) == target
        )

    def point_stabilizer(self, point: int) -> "PermGroup":
        return self.setwise_stabilizer({point})

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(
            gen in other for gen in self.generators
        )

    def is_normal_in(self, other: "PermGroup") -> bool:
        """
        Return `True` if `self` is a normal subgroup of `other`.
        """
        return self.is_subgroup_of(other) and all(
            gen.conjugate(outer) in self
            for gen in self.generators
            for outer in other.generators
        )

    def normal_closure(self, element: Permutation) -> "PermGroup":
        """
        Return the smallest normal subgroup containing `element`.
        """
        gens = [element]
        while True:
            elements = _closure(gens, self.degree, self.cap)
            missing = next(
                (
                    conjugate
                    for gen in gens
                    for outer in self.generators
                    if (conjugate := gen.conjugate(outer)) not in elements
                ),
                None,
            )
            if missing is None:
                result = PermGroup(gens, degree=self.degree, cap=self.cap)
                result._elements = elements
                return result
            gens.append(missing)

    def conjugacy_classes(self) -> list[frozenset[Permutation]]:
        remaining = set(self.elements)
        result = []
        for element in sorted(self.elements):
            if element not in remaining:
                continue
            cls = {element}
            queue = [element]
            while queue:
                current = queue.pop()
                for gen in self.generators:
                    conjugate = current.conjugate(gen)
                    if conjugate not in cls:
                        cls.add(conjugate)
                        queue.append(conjugate)
            remaining -= cls
            result.append(frozenset(cls))
        return result

    def _class_closures(self) -> list["PermGroup"]:
        """
        Return the distinct normal closures of non-identity elements.
        """
        closures: dict[frozenset[Permutation], PermGroup] = {}
        for cls in self.conjugacy_classes():
            representative = min(cls)
            if not representative.is_identity:
                closure = self.normal_closure(representative)
                closures.setdefault(closure.elements, closure)
        return sorted(closures.values(), key=_group_key)

    def is_simple(self) -> bool:
        if self.order < 2:
            raise PreconditionError("the trivial group is not considered")
        return all(
            closure.order == self.order for closure in self._class_closures()
        )

    def minimal_normal_subgroups(self) -> list["PermGroup"]:
        """
        Return the inclusion-minimal non-trivial normal subgroups.

        Each of them is the normal closure of any of its non-identity
        elements, so they are the minimal members among the normal closures
        of the conjugacy class representatives.
        """
        closures = self._class_closures()
        return [
            closure for closure in closures
            if not any(
                other.elements < closure.elements for other in closures
            )
        ]

    def normal_subgroups(self) -> list["PermGroup"]:
        """
        Return every normal subgroup, the trivial one and the group included.
        """
        closures = self._class_closures()
        trivial = self._generated([])
        found = {trivial.elements: trivial}
        queue = [trivial]
        while queue:
            current = queue.pop()
            for closure in closures:
                if not closure.elements <= current.elements:
                    joined = self._generated(
                        current.generators + closure.generators,
                    )
                    if joined.elements not in found:
                        found[joined.elements] = joined
                        queue.append(joined)
        return sorted(found.values(), key=_group_key)

    def socle(self) -> "PermGroup":
        return self._generated(
            gen
            for subgroup in self.minimal_normal_subgroups()
            for gen in subgroup.generators
        )

    def every_normal_subgroup(
        self, predicate: Callable[["PermGroup"], bool],
    ) -> bool:
        """
        Return `True` if all non-trivial normal subgroups satisfy `predicate`.

        Only the minimal normal subgroups are tested, so `predicate` must
        hold for every supergroup of a group it holds for. Transitivity and
        primitivity both do.
        """
        if self.is_trivial:
            return True
        return all(predicate(sub) for sub in self.minimal_normal_subgroups())

    def classify_sym_or_alt(self) -> SymAltClass:
        if self.is_transitive():
            full = math.factorial(self.degree)
            order = self.order
            if order == full:
                return SymAltClass.SYMMETRIC
            if 2 * order == full and all(
                gen.is_even for gen in self.generators
            ):
                return SymAltClass.ALTERNATING
        return SymAltClass.NEITHER


def _group_key(group: PermGroup) -> tuple[int, list[Permutation]]:
    return group.order, sorted(group.generators)


def _partition_key(partition: Partition) -> tuple[int, list[list[int]]]:
    return len(partition), [sorted(cls) for cls in partition]


def enumerate_group(
    generators: Sequence[Permutation], *, cap: int = DEFAULT_ELEMENT_CAP,
) -> PermGroup:
    """
    Return the enumerated group generated by `generators`.
    """
    if not generators:
        raise PreconditionError("at least one generator must be provided")
    result = PermGroup(generators, cap=cap)
    result.elements
    return result


def orbits(group: PermGroup) -> Partition:
    return group.orbits()


def is_transitive(group: PermGroup) -> bool:
    return group.is_transitive()


def is_k_transitive(group: PermGroup, k: int) -> bool:
    return group.is_k_transitive(k)


def minimal_block_containing(group: PermGroup, seed: Iterable[int]) -> PointSet:
    return group.minimal_block_containing(seed)


def is_primitive(group: PermGroup) -> bool:
    return group.is_primitive()


def setwise_stabilizer(group: PermGroup, points: Iterable[int]) -> PermGroup:
    return group.setwise_stabilizer(points)


def normal_closure(group: PermGroup, element: Permutation) -> PermGroup:
    return group.normal_closure(element)


def is_simple(group: PermGroup) -> bool:
    return group.is_simple()


def minimal_normal_subgroups(group: PermGroup) -> list[PermGroup]:
    return group.minimal_normal_subgroups()


def socle(group: PermGroup) -> PermGroup:
    return group.socle()


def is_abelian(group: PermGroup) -> bool:
    return group.is_abelian()


def classify_sym_or_alt(group: PermGroup) -> SymAltClass:
    return group.classify_sym_or_alt()
