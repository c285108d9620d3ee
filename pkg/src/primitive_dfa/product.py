"""
Direct products of DFAs and their transition groups.

Product states `(q, q')` are packed as `q * n' + q'`. The transition group
of a product of permutation DFAs is kept as a group of permutation pairs;
its row and column stabilizers are projected onto the factors.
"""

from dataclasses import dataclass
import enum
import logging
from typing import Callable, Hashable, Iterable, Literal, Sequence, TypeAlias

from .automata import Dfa, is_accessible, is_permutation_dfa, reachable_states
from .config import DEFAULT_ELEMENT_CAP
from .errors import (
    AlphabetMismatchError, CapExceededError, InconsistencyError,
    PreconditionError,
)
from .groups import PermGroup
from .perm import Permutation, PointSet


logger = logging.getLogger(__name__)

PermPair: TypeAlias = tuple[Permutation, Permutation]
StabilizerMethod: TypeAlias = Literal["schreier", "filter"]

LEFT = 0
RIGHT = 1


class Similarity(str, enum.Enum):
    SIMILAR = "similar"
    DISSIMILAR = "dissimilar"
    STRONGLY_DISSIMILAR = "strongly_dissimilar"


class Guarantee(str, enum.Enum):
    ACCESSIBLE_GUARANTEED = "accessible_guaranteed"
    UBM_GUARANTEED = "ubm_guaranteed"
    NO_GUARANTEE = "no_guarantee"


class CorollaryCase(str, enum.Enum):
    TRANSITIVE_SIMPLE = "transitive_simple"
    PRIMITIVE = "primitive"
    PRIMITIVE_SIMPLE = "primitive_simple"
    SYM_OR_ALT_NOT4 = "sym_or_alt_not4"
    TWO_TRANSITIVE_NONAFFINE = "two_transitive_nonaffine"


@dataclass(frozen=True)
class AccessibilityReport:
    """
    The four equivalent accessibility conditions of a product of permutation
    DFAs, each evaluated on its own.
    """

    accessible: bool
    product_accessible: bool
    all_stabilizers_transitive: bool
    some_row_or_column_transitive: bool
    group_transitive: bool
    consistent: bool


@dataclass(frozen=True)
class DissimilarVerdict:
    guarantee: Guarantee
    reason: str


def _require_same_alphabet(left: Dfa, right: Dfa) -> None:
    if left.alphabet != right.alphabet:
        raise AlphabetMismatchError(
            f"alphabets {list(left.alphabet)!r} and {list(right.alphabet)!r}"
            " differ",
        )


class ProductDfa:
    """
    The direct product of two DFAs over the same alphabet.

    `dfa` is the packed product with no final states; `with_finals` returns
    the product cognate for a set of packed states.
    """

    def __init__(self, left: Dfa, right: Dfa) -> None:
        _require_same_alphabet(left, right)
        self.left = left
        self.right = right
        self.alphabet = left.alphabet
        self.left_size = left.state_count
        self.right_size = right.state_count
        self.dfa = Dfa(
            self.left_size * self.right_size,
            self.alphabet,
            {
                letter: [
                    self.pack(left.delta[letter][q], right.delta[letter][q2])
                    for q in left.states
                    for q2 in right.states
                ]
                for letter in self.alphabet
            },
            initial=self.pack(left.initial, right.initial),
        )

    @property
    def state_count(self) -> int:
        return self.dfa.state_count

    def pack(self, q: int, q2: int) -> int:
        return q * self.right_size + q2

    def unpack(self, state: int) -> tuple[int, int]:
        return divmod(state, self.right_size)

    def row(self, q: int) -> PointSet:
        return frozenset(self.pack(q, q2) for q2 in self.right.states)

    def column(self, q2: int) -> PointSet:
        return frozenset(self.pack(q, q2) for q in self.left.states)

    def with_finals(self, states: Iterable[int]) -> Dfa:
        return self.dfa.with_finals(states)

    def state_name(self, state: int) -> str:
        q, q2 = self.unpack(state)
        return f"({q + 1},{q2 + 1})"


def direct_product(left: Dfa, right: Dfa) -> ProductDfa:
    return ProductDfa(left, right)


def _pair_compose(first: PermPair, second: PermPair) -> PermPair:
    return (
        Permutation._trusted(map(second[LEFT].__getitem__, first[LEFT])),
        Permutation._trusted(map(second[RIGHT].__getitem__, first[RIGHT])),
    )


def _pair_inverse(pair: PermPair) -> PermPair:
    return pair[LEFT].inverse(), pair[RIGHT].inverse()


class ProductGroup:
    """
    The transition group of a product of permutation DFAs, as the subgroup of
    `G x G'` generated by the letter pairs.

    Stabilizers are computed by default from Schreier generators over an
    orbit transversal, which never enumerates the whole group; the filter
    method enumerates the elements and selects.
    """

    def __init__(
        self,
        generators: Sequence[PermPair],
        *,
        left_degree: int,
        right_degree: int,
        cap: int = DEFAULT_ELEMENT_CAP,
    ) -> None:
        for left, right in generators:
            if len(left) != left_degree or len(right) != right_degree:
                raise PreconditionError(
                    f"generator ({left}, {right}) does not act on"
                    f" {left_degree} x {right_degree} points",
                )
        self.generators = tuple(generators)
        self.left_degree = left_degree
        self.right_degree = right_degree
        self.cap = cap
        self._elements: frozenset[PermPair] | None = None

    @property
    def identity(self) -> PermPair:
        return (
            Permutation.identity(self.left_degree),
            Permutation.identity(self.right_degree),
        )

    @property
    def elements(self) -> frozenset[PermPair]:
        if self._elements is None:
            identity = self.identity
            elements = {identity}
            frontier = [identity]
            while frontier:
                found = []
                for element in frontier:
                    for gen in self.generators:
                        product = _pair_compose(element, gen)
                        if product not in elements:
                            if len(elements) >= self.cap:
                                raise CapExceededError(
                                    "product group has more than"
                                    f" {self.cap} elements",
                                )
                            elements.add(product)
                            found.append(product)
                frontier = found
            logger.debug("enumerated %d product group elements", len(elements))
            self._elements = frozenset(elements)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, pair: object) -> bool:
        return pair in self.elements

    def left_group(self) -> PermGroup:
        return PermGroup(
            (gen[LEFT] for gen in self.generators),
            degree=self.left_degree,
            cap=self.cap,
        )

    def right_group(self) -> PermGroup:
        return PermGroup(
            (gen[RIGHT] for gen in self.generators),
            degree=self.right_degree,
            cap=self.cap,
        )

    def packed_generators(self) -> list[Permutation]:
        """
        Return the generators acting on packed product states.
        """
        n = self.right_degree
        return [
            Permutation._trusted(
                left[q] * n + right[q2]
                for q in range(self.left_degree)
                for q2 in range(n)
            )
            for left, right in self.generators
        ]

    def packed_group(self) -> PermGroup:
        return PermGroup(
            self.packed_generators(),
            degree=self.left_degree * self.right_degree,
            cap=self.cap,
        )

    def is_transitive(self) -> bool:
        return self.packed_group().is_transitive()

    def _schreier_projection(
        self,
        start: Hashable,
        act: Callable[[Hashable, PermPair], Hashable],
        side: int,
    ) -> PermGroup:
        """
        Project the stabilizer of `start` onto one coordinate.

        The stabilizer is generated by `u s v^-1` where `u` and `v` are the
        transversal elements of an orbit point and of its image under the
        generator `s`.
        """
        degree = self.left_degree if side == LEFT else self.right_degree
        transversal = {start: self.identity}
        queue = [start]
        projected: set[Permutation] = set()
        while queue:
            current = queue.pop()
            coset = transversal[current]
            for gen in self.generators:
                image = act(current, gen)
                extended = _pair_compose(coset, gen)
                if image not in transversal:
                    if len(transversal) >= self.cap:
                        raise CapExceededError(
                            f"stabilizer orbit has more than {self.cap} points",
                        )
                    transversal[image] = extended
                    queue.append(image)
                else:
                    part = _pair_compose(
                        extended, _pair_inverse(transversal[image]),
                    )[side]
                    if not part.is_identity:
                        projected.add(part)
        logger.debug(
            "orbit of %d points gave %d projected Schreier generators",
            len(transversal), len(projected),
        )
        return PermGroup(sorted(projected), degree=degree, cap=self.cap)

    def _filter_projection(
        self, keep: Callable[[PermPair], bool], side: int,
    ) -> PermGroup:
        degree = self.left_degree if side == LEFT else self.right_degree
        return PermGroup.from_elements(
            {element[side] for element in self.elements if keep(element)},
            degree=degree,
            cap=self.cap,
        )

    def full_row_stabilizer(
        self, *, method: StabilizerMethod = "schreier",
    ) -> PermGroup:
        """
        Return `R pi'`, the right parts of the elements with identity left
        part.
        """
        if method == "filter":
            return self._filter_projection(
                lambda element: element[LEFT].is_identity, RIGHT,
            )
        return self._schreier_projection(
            Permutation.identity(self.left_degree),
            lambda current, gen: current.compose(gen[LEFT]),  # type: ignore
            RIGHT,
        )

    def full_column_stabilizer(
        self, *, method: StabilizerMethod = "schreier",
    ) -> PermGroup:
        """
        Return `C pi`, the left parts of the elements with identity right
        part.
        """
        if method == "filter":
            return self._filter_projection(
                lambda element: element[RIGHT].is_identity, LEFT,
            )
        return self._schreier_projection(
            Permutation.identity(self.right_degree),
            lambda current, gen: current.compose(gen[RIGHT]),  # type: ignore
            LEFT,
        )

    def _line_stabilizer(
        self,
        lines: Iterable[int],
        side: int,
        method: StabilizerMethod,
    ) -> PermGroup:
        target = frozenset(lines)
        degree = self.left_degree if side == LEFT else self.right_degree
        if not 1 <= len(target) <= 2:
            raise PreconditionError("one or two lines must be given")
        for line in target:
            if not 0 <= line < degree:
                raise PreconditionError(
                    f"line {line} is out of range for degree {degree}",
                )
        other = RIGHT if side == LEFT else LEFT
        if method == "filter":
            return self._filter_projection(
                lambda element: element[side].apply_to_set(target) == target,
                other,
            )
        return self._schreier_projection(
            target,
            lambda current, gen: gen[side].apply_to_set(current),  # type: ignore
            other,
        )

    def row_stabilizer(
        self, rows: Iterable[int], *, method: StabilizerMethod = "schreier",
    ) -> PermGroup:
        """
        Return `R_{p,q} pi'` for the set `rows = {p, q}` (or `R_q pi'` for a
        single row).
        """
        return self._line_stabilizer(rows, LEFT, method)

    def column_stabilizer(
        self, columns: Iterable[int], *, method: StabilizerMethod = "schreier",
    ) -> PermGroup:
        """
        Return `C_{p',q'} pi` for the set `columns = {p', q'}` (or `C_q' pi`
        for a single column).
        """
        return self._line_stabilizer(columns, RIGHT, method)

    def similarity(self) -> Similarity:
        left_injective = self.full_row_stabilizer().is_trivial
        right_injective = self.full_column_stabilizer().is_trivial
        if left_injective and right_injective:
            return Similarity.SIMILAR
        if left_injective or right_injective:
            return Similarity.DISSIMILAR
        return Similarity.STRONGLY_DISSIMILAR

    def order_from_kernel(self) -> int:
        """
        Return `|G| * |R pi'|`, the order of the group.
        """
        return self.left_group().order * self.full_row_stabilizer().order


def product_group(
    left: Dfa, right: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP,
) -> ProductGroup:
    """
    Return the transition group of the product of two permutation DFAs.
    """
    _require_same_alphabet(left, right)
    if not (is_permutation_dfa(left) and is_permutation_dfa(right)):
        raise PreconditionError("both DFAs must be permutation DFAs")
    return ProductGroup(
        [
            (left.delta[letter], right.delta[letter])  # type: ignore
            for letter in left.alphabet
        ],
        left_degree=left.state_count,
        right_degree=right.state_count,
        cap=cap,
    )


def packed_transition_group(
    product: ProductDfa, *, cap: int = DEFAULT_ELEMENT_CAP,
) -> PermGroup:
    """
    Return the transition group of the packed product DFA.
    """
    return PermGroup(
        product.dfa.letter_tables(),  # type: ignore
        degree=product.state_count,
        cap=cap,
    )


def proj_left(gx: ProductGroup) -> PermGroup:
    return gx.left_group()


def proj_right(gx: ProductGroup) -> PermGroup:
    return gx.right_group()


def full_row_stabilizer(
    gx: ProductGroup, *, method: StabilizerMethod = "schreier",
) -> PermGroup:
    return gx.full_row_stabilizer(method=method)


def full_column_stabilizer(
    gx: ProductGroup, *, method: StabilizerMethod = "schreier",
) -> PermGroup:
    return gx.full_column_stabilizer(method=method)


def row_stabilizer(
    gx: ProductGroup,
    rows: Iterable[int],
    *,
    method: StabilizerMethod = "schreier",
) -> PermGroup:
    return gx.row_stabilizer(rows, method=method)


def column_stabilizer(
    gx: ProductGroup,
    columns: Iterable[int],
    *,
    method: StabilizerMethod = "schreier",
) -> PermGroup:
    return gx.column_stabilizer(columns, method=method)


def similarity_class(
    left: Dfa, right: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP,
) -> Similarity:
    return product_group(left, right, cap=cap).similarity()


def stabilizers_transitive(gx: ProductGroup) -> tuple[list[bool], list[bool]]:
    """
    Return the transitivity of every `R_q pi'` and of every `C_q' pi`.
    """
    return (
        [
            gx.row_stabilizer({q}).is_transitive()
            for q in range(gx.left_degree)
        ],
        [
            gx.column_stabilizer({q2}).is_transitive()
            for q2 in range(gx.right_degree)
        ],
    )


def accessibility_report(
    left: Dfa,
    right: Dfa,
    *,
    cap: int = DEFAULT_ELEMENT_CAP,
    strict: bool = True,
) -> AccessibilityReport:
    """
    Evaluate the four accessibility conditions of `left x right`.

    They are equivalent; if `strict` is set, a disagreement raises
    `InconsistencyError`.
    """
    gx = product_group(left, right, cap=cap)
    product_accessible = is_accessible(direct_product(left, right).dfa)
    left_transitive = gx.left_group().is_transitive()
    right_transitive = gx.right_group().is_transitive()
    rows, columns = stabilizers_transitive(gx)
    all_transitive = (
        left_transitive and right_transitive and all(rows) and all(columns)
    )
    some_transitive = (
        (left_transitive and any(rows)) or (right_transitive and any(columns))
    )
    group_transitive = gx.is_transitive()
    verdicts = {
        product_accessible, all_transitive, some_transitive, group_transitive,
    }
    consistent = len(verdicts) == 1
    if strict and not consistent:
        raise InconsistencyError(
            "accessibility conditions disagree: product accessible"
            f" {product_accessible}, all stabilizers transitive"
            f" {all_transitive}, some stabilizer transitive {some_transitive},"
            f" group transitive {group_transitive}",
        )
    return AccessibilityReport(
        accessible=product_accessible,
        product_accessible=product_accessible,
        all_stabilizers_transitive=all_transitive,
        some_row_or_column_transitive=some_transitive,
        group_transitive=group_transitive,
        consistent=consistent,
    )


def check_prop_graph(left: Dfa, right: Dfa) -> bool:
    """
    Return `True` if a factor is accessible and one of its full rows (or
    columns) is reachable in the product.
    """
    product = direct_product(left, right)
    reached = reachable_states(product.dfa)
    if is_accessible(left) and any(
        product.row(q) <= reached for q in left.states
    ):
        return True
    return is_accessible(right) and any(
        product.column(q2) <= reached for q2 in right.states
    )


def theorem_dissimilar_verdict(
    left: Dfa, right: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP,
) -> DissimilarVerdict:
    """
    Return what the normal structure of the factor groups guarantees about a
    dissimilar pair of permutation DFAs with at least three states each.

    A factor group is only consulted when its kernel image is non-trivial:
    `G` when `C pi` is, and `G'` when `R pi'` is. Uniform boolean minimality
    is guaranteed when both groups are primitive and all non-trivial normal
    subgroups of a consulted group are primitive; accessibility when both
    are transitive and all non-trivial normal subgroups of a consulted group
    are transitive.
    """
    if min(left.state_count, right.state_count) < 3:
        raise PreconditionError("both DFAs must have at least three states")
    gx = product_group(left, right, cap=cap)
    column_kernel = gx.full_column_stabilizer()
    row_kernel = gx.full_row_stabilizer()
    if column_kernel.is_trivial and row_kernel.is_trivial:
        raise PreconditionError("the DFAs are similar")
    left_group, right_group = gx.left_group(), gx.right_group()
    consulted = [
        (name, kernel, group)
        for name, kernel, group, kernel_group in (
            ("G", "C pi", left_group, column_kernel),
            ("G'", "R pi'", right_group, row_kernel),
        )
        if not kernel_group.is_trivial
    ]
    for guarantee, check, adjective in (
        (Guarantee.UBM_GUARANTEED, PermGroup.is_primitive, "primitive"),
        (Guarantee.ACCESSIBLE_GUARANTEED, PermGroup.is_transitive, "transitive"),
    ):
        if not (check(left_group) and check(right_group)):
            continue
        for name, kernel, group in consulted:
            if group.every_normal_subgroup(check):
                return DissimilarVerdict(
                    guarantee,
                    f"{kernel} is non-trivial and all non-trivial normal"
                    f" subgroups of {name} are {adjective}",
                )
    kernels = " and ".join(kernel for _, kernel, _ in consulted)
    return DissimilarVerdict(
        Guarantee.NO_GUARANTEE,
        f"no clause applies to the group behind the non-trivial {kernels}",
    )


def corollary_dissimilar_case(group: PermGroup) -> frozenset[CorollaryCase]:
    """
    Return the group classes of `group` under which
    `theorem_dissimilar_verdict` guarantees something for any dissimilar
    partner.
    """
    result = set()
    transitive = group.is_transitive()
    primitive = group.is_primitive()
    simple = group.order >= 2 and group.is_simple()
    if transitive and simple:
        result.add(CorollaryCase.TRANSITIVE_SIMPLE)
    if primitive:
        result.add(CorollaryCase.PRIMITIVE)
    if primitive and simple:
        result.add(CorollaryCase.PRIMITIVE_SIMPLE)
    if group.degree != 4 and group.classify_sym_or_alt() != "neither":
        result.add(CorollaryCase.SYM_OR_ALT_NOT4)
    if (
        group.degree >= 2
        and group.is_k_transitive(2)
        and not group.socle().is_abelian()
    ):
        result.add(CorollaryCase.TWO_TRANSITIVE_NONAFFINE)
    return frozenset(result)
