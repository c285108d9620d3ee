"""
Binary boolean operations on the languages of two DFAs.

A boolean function is stored as a 4-bit truth table whose bit `2 * u + v`
is its value at `(u, v)`. Applied to DFAs, it picks the final states of the
direct product: `(q, q')` is final if the function is 1 at
`(q in F, q' in F')`.
"""

from dataclasses import dataclass
import enum
import logging
from typing import Iterable, Iterator, Optional

from .automata import (
    Dfa, distinguishes_all, is_accessible, is_minimal, is_permutation_dfa,
    state_complexity,
)
from .config import DEFAULT_ELEMENT_CAP, DEFAULT_UBM_LIMIT
from .errors import (
    InconsistencyError, PreconditionError, SizeLimitExceededError,
)
from .perm import PointSet
from .product import ProductDfa, direct_product, product_group


logger = logging.getLogger(__name__)


class BaseForm(str, enum.Enum):
    """
    The five shapes of compatible sets up to complement, with their truth
    tables.
    """

    FXF = "FxF"
    FXNOTF = "FxNotF"
    NOTFXF = "NotFxF"
    NOTFXNOTF = "NotFxNotF"
    SYMDIFF = "SymDiff"

    @property
    def table(self) -> int:
        return _FORM_TABLES[self]


_FORM_TABLES = {
    BaseForm.FXF: 0b1000,
    BaseForm.FXNOTF: 0b0100,
    BaseForm.NOTFXF: 0b0010,
    BaseForm.NOTFXNOTF: 0b0001,
    BaseForm.SYMDIFF: 0b0110,
}


@dataclass(frozen=True)
class CompatibleForm:
    base: BaseForm
    complemented: bool = False

    @property
    def table(self) -> int:
        return self.base.table ^ 0b1111 if self.complemented else self.base.table

    def __str__(self) -> str:
        if self.complemented:
            return f"ComplementOf({self.base.value})"
        return self.base.value


@dataclass(frozen=True, order=True)
class BooleanFunction:
    """
    A binary boolean function `{0,1}^2 -> {0,1}`.
    """

    table: int

    def __post_init__(self) -> None:
        if not (isinstance(self.table, int) and 0 <= self.table < 16):
            raise ValueError(f"truth table {self.table!r} is not in 0..15")

    def evaluate(self, u: int, v: int) -> int:
        return (self.table >> (2 * u + v)) & 1

    @property
    def is_proper(self) -> bool:
        """
        `True` if the value depends on both arguments.
        """
        on_u = any(self.evaluate(0, v) != self.evaluate(1, v) for v in (0, 1))
        on_v = any(self.evaluate(u, 0) != self.evaluate(u, 1) for u in (0, 1))
        return on_u and on_v

    @property
    def form(self) -> CompatibleForm:
        """
        Return the shape of the compatible sets of a proper function.
        """
        for base in BaseForm:
            if self.table == base.table:
                return CompatibleForm(base)
            if self.table == base.table ^ 0b1111:
                return CompatibleForm(base, complemented=True)
        raise PreconditionError(f"boolean function {self} is not proper")

    @property
    def name(self) -> Optional[str]:
        return _NAMES_BY_TABLE.get(self.table)

    def __str__(self) -> str:
        return self.name or f"table {self.table:04b}"


_NAMED_TABLES = {
    "intersection": 0b1000,
    "difference": 0b0100,
    "reverse_difference": 0b0010,
    "nor": 0b0001,
    "symmetric_difference": 0b0110,
    "nand": 0b0111,
    "union": 0b1110,
    "xnor": 0b1001,
    "implication": 0b1011,
    "reverse_implication": 0b1101,
}
_NAMES_BY_TABLE = {table: name for name, table in _NAMED_TABLES.items()}

INTERSECTION = BooleanFunction(_NAMED_TABLES["intersection"])
UNION = BooleanFunction(_NAMED_TABLES["union"])
DIFFERENCE = BooleanFunction(_NAMED_TABLES["difference"])
REVERSE_DIFFERENCE = BooleanFunction(_NAMED_TABLES["reverse_difference"])
SYMMETRIC_DIFFERENCE = BooleanFunction(_NAMED_TABLES["symmetric_difference"])
NAND = BooleanFunction(_NAMED_TABLES["nand"])
NOR = BooleanFunction(_NAMED_TABLES["nor"])
XNOR = BooleanFunction(_NAMED_TABLES["xnor"])
IMPLICATION = BooleanFunction(_NAMED_TABLES["implication"])
REVERSE_IMPLICATION = BooleanFunction(_NAMED_TABLES["reverse_implication"])


def by_name(name: str) -> BooleanFunction:
    """
    Return the proper boolean function called `name`, like `"union"`.
    """
    key = name.strip().lower().replace("-", "_").replace(" ", "_")
    if key not in _NAMED_TABLES:
        raise PreconditionError(
            f"unknown boolean operation {name!r}; expected one of"
            f" {', '.join(_NAMED_TABLES)}",
        )
    return BooleanFunction(_NAMED_TABLES[key])


def all_boolean_functions() -> list[BooleanFunction]:
    return [BooleanFunction(table) for table in range(16)]


def all_proper_boolean_functions() -> list[BooleanFunction]:
    return [op for op in all_boolean_functions() if op.is_proper]


def _require_nontrivial(states: Iterable[int], size: int, name: str) -> PointSet:
    result = frozenset(states)
    if not 0 < len(result) < size:
        raise PreconditionError(f"{name} must be a non-empty proper subset")
    if any(not 0 <= state < size for state in result):
        raise PreconditionError(f"{name} has states outside 0..{size - 1}")
    return result


def _table_set(
    table: int, left: PointSet, right: PointSet, m: int, n: int,
) -> PointSet:
    return frozenset(
        q * n + q2
        for q in range(m)
        for q2 in range(n)
        if (table >> (2 * (q in left) + (q2 in right))) & 1
    )


def compatible_set(
    op: BooleanFunction,
    left_finals: Iterable[int],
    right_finals: Iterable[int],
    left_size: int,
    right_size: int,
) -> PointSet:
    """
    Return the packed product states selected by `op` from `F` and `F'`.
    """
    if not op.is_proper:
        raise PreconditionError(f"boolean function {op} is not proper")
    left = _require_nontrivial(left_finals, left_size, "F")
    right = _require_nontrivial(right_finals, right_size, "F'")
    return _table_set(op.table, left, right, left_size, right_size)


def classify_compatible(
    states: Iterable[int],
    left_finals: Iterable[int],
    right_finals: Iterable[int],
    left_size: int,
    right_size: int,
) -> CompatibleForm:
    """
    Return the form of an `(F, F')`-compatible set of packed product states.
    """
    target = frozenset(states)
    left = _require_nontrivial(left_finals, left_size, "F")
    right = _require_nontrivial(right_finals, right_size, "F'")
    everything = frozenset(range(left_size * right_size))
    for base in BaseForm:
        candidate = _table_set(base.table, left, right, left_size, right_size)
        if target == candidate:
            return CompatibleForm(base)
        if target == everything - candidate:
            return CompatibleForm(base, complemented=True)
    raise PreconditionError("the set is not (F, F')-compatible")


def apply_boolean_op(left: Dfa, right: Dfa, op: BooleanFunction) -> Dfa:
    """
    Return the packed product DFA recognizing `L(left) op L(right)`.
    """
    product = direct_product(left, right)
    return product.with_finals(
        _table_set(
            op.table,
            left.finals,
            right.finals,
            left.state_count,
            right.state_count,
        ),
    )


def boolean_complexities(left: Dfa, right: Dfa) -> dict[BooleanFunction, int]:
    """
    Return the state complexity of `L(left) op L(right)` for every proper
    operation.
    """
    return {
        op: state_complexity(apply_boolean_op(left, right, op))
        for op in all_proper_boolean_functions()
    }


def _all_operations_maximal(left: Dfa, right: Dfa) -> bool:
    return all(
        is_minimal(apply_boolean_op(left, right, op))
        for op in all_proper_boolean_functions()
    )


def has_maximal_boolean_complexity(left: Dfa, right: Dfa) -> bool:
    """
    Return `True` if every proper operation yields a language of state
    complexity `m * n`.
    """
    for name, d in (("left", left), ("right", right)):
        if not is_minimal(d):
            raise PreconditionError(f"the {name} DFA is not minimal")
    return _all_operations_maximal(left, right)


@dataclass(frozen=True)
class UbmCounterexample:
    """
    A pair of cognate final sets and a form whose product cognate is not
    minimal.
    """

    left_states: PointSet
    right_states: PointSet
    form: CompatibleForm

    @property
    def operation(self) -> BooleanFunction:
        return BooleanFunction(self.form.table)


def _subset_masks(size: int) -> Iterator[tuple[int, PointSet]]:
    for mask in range(1, (1 << size) - 1):
        yield mask, frozenset(
            state for state in range(size) if (mask >> state) & 1
        )


def _sweep(
    product: ProductDfa,
    forms: tuple[BaseForm, ...],
    limit: int,
) -> Optional[UbmCounterexample]:
    """
    Return the first cognate pair and form whose product cognate is not
    minimal, or `None`.

    Packed state sets are bit masks; a set and its complement share a
    verdict, so masks are normalized to exclude state 0 and the passing
    ones are remembered.
    """
    m, n = product.left_size, product.right_size
    if max(m, n) > limit:
        raise SizeLimitExceededError(
            f"a {m} x {n} product exceeds the sweep limit of {limit} states"
            " per factor",
        )
    if m < 2 or n < 2:
        return None
    if not is_accessible(product.dfa):
        return UbmCounterexample(
            frozenset({0}), frozenset({0}), CompatibleForm(forms[0]),
        )
    size = m * n
    full = (1 << size) - 1
    tables = product.dfa.letter_tables()
    row_masks = [((1 << n) - 1) << (q * n) for q in range(m)]
    column_masks = [
        sum(1 << (q * n + q2) for q in range(m)) for q2 in range(n)
    ]
    passed: set[int] = set()
    checked = 0
    for left_mask, left_states in _subset_masks(m):
        rows = 0
        for q in left_states:
            rows |= row_masks[q]
        for right_mask, right_states in _subset_masks(n):
            columns = 0
            for q2 in right_states:
                columns |= column_masks[q2]
            for form in forms:
                if form == BaseForm.FXF:
                    key = rows & columns
                elif form == BaseForm.FXNOTF:
                    key = rows & ~columns & full
                elif form == BaseForm.NOTFXF:
                    key = ~rows & columns & full
                elif form == BaseForm.NOTFXNOTF:
                    key = ~(rows | columns) & full
                else:
                    key = rows ^ columns
                if key & 1:
                    key ^= full
                if key in passed:
                    continue
                checked += 1
                flags = [(key >> state) & 1 for state in range(size)]
                if not distinguishes_all(tables, flags):
                    logger.debug(
                        "cognate %s on rows %s and columns %s is not minimal",
                        form.value, sorted(left_states), sorted(right_states),
                    )
                    return UbmCounterexample(
                        left_states, right_states, CompatibleForm(form),
                    )
                passed.add(key)
    logger.debug("%d distinct product cognates are minimal", checked)
    return None


def ubm_counterexample(
    left: Dfa, right: Dfa, *, limit: int = DEFAULT_UBM_LIMIT,
) -> Optional[UbmCounterexample]:
    """
    Return a cognate pair and compatible form witnessing that the product is
    not uniformly boolean minimal, or `None` if it is.

    Only the five uncomplemented forms are swept, as a DFA is minimal on a
    set of final states exactly when it is minimal on the complement.
    """
    return _sweep(direct_product(left, right), tuple(BaseForm), limit)


def is_uniformly_boolean_minimal(
    left: Dfa, right: Dfa, *, limit: int = DEFAULT_UBM_LIMIT,
) -> bool:
    return ubm_counterexample(left, right, limit=limit) is None


def rectangles_minimal(
    left: Dfa, right: Dfa, *, limit: int = DEFAULT_UBM_LIMIT,
) -> bool:
    """
    Return `True` if the product cognate on every `S x S'` with non-trivial
    `S` and `S'` is minimal.
    """
    return _sweep(direct_product(left, right), (BaseForm.FXF,), limit) is None


@dataclass(frozen=True)
class OneFinalStateReport:
    accessible: bool
    maximal: bool
    consistent: bool


def theorem_1fstate_check(
    left: Dfa, right: Dfa, *, strict: bool = True,
) -> OneFinalStateReport:
    """
    Compare accessibility of the product with maximal boolean complexity
    for permutation DFAs with one final (or one non-final) state each.

    The set of proper operations is closed under complementing either
    argument, so the one-non-final-state variants need no conversion.
    """
    for name, d in (("left", left), ("right", right)):
        if not is_permutation_dfa(d):
            raise PreconditionError(f"the {name} DFA is not a permutation DFA")
        if not (
            0 < len(d.finals) < d.state_count
            and 1 in (len(d.finals), d.state_count - len(d.finals))
        ):
            raise PreconditionError(
                f"the {name} DFA must have exactly one final or exactly one"
                " non-final state",
            )
    if max(left.state_count, right.state_count) < 3:
        raise PreconditionError("at least one DFA must have three states")
    accessible = is_accessible(direct_product(left, right).dfa)
    maximal = _all_operations_maximal(left, right)
    consistent = accessible == maximal
    if strict and not consistent:
        raise InconsistencyError(
            f"product accessibility is {accessible} but maximal boolean"
            f" complexity is {maximal}",
        )
    return OneFinalStateReport(accessible, maximal, consistent)


class LemmaVerdict(str, enum.Enum):
    HOLDS_ROWWISE = "holds_rowwise"
    HOLDS_COLWISE = "holds_colwise"
    NEITHER = "neither"


def lemma_boolprim_conditions(
    left: Dfa, right: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP,
) -> LemmaVerdict:
    """
    Check the stabilizer conditions that guarantee uniform boolean
    minimality.

    Row-wise: `|Q| >= 3`, `G` primitive, and `R_{p,q} pi'` primitive for all
    `p, q` in `Q` (`p = q` included). Column-wise is the mirror image.
    """
    gx = product_group(left, right, cap=cap)
    m, n = left.state_count, right.state_count
    if (
        m >= 3
        and gx.left_group().is_primitive()
        and all(
            gx.row_stabilizer({p, q}).is_primitive()
            for p in range(m)
            for q in range(p, m)
        )
    ):
        return LemmaVerdict.HOLDS_ROWWISE
    if (
        n >= 3
        and gx.right_group().is_primitive()
        and all(
            gx.column_stabilizer({p, q}).is_primitive()
            for p in range(n)
            for q in range(p, n)
        )
    ):
        return LemmaVerdict.HOLDS_COLWISE
    return LemmaVerdict.NEITHER


@dataclass(frozen=True)
class RectangleReport:
    condition_prim: bool
    condition_min: bool
    consistent: bool


def prop_ns_check(
    left: Dfa,
    right: Dfa,
    *,
    cap: int = DEFAULT_ELEMENT_CAP,
    limit: int = DEFAULT_UBM_LIMIT,
    strict: bool = True,
) -> RectangleReport:
    """
    Compare primitivity of all single row and column stabilizers with
    minimality of all rectangle product cognates.
    """
    if min(left.state_count, right.state_count) < 2:
        raise PreconditionError("both DFAs must have at least two states")
    gx = product_group(left, right, cap=cap)
    condition_prim = all(
        gx.row_stabilizer({q}).is_primitive() for q in left.states
    ) and all(
        gx.column_stabilizer({q2}).is_primitive() for q2 in right.states
    )
    condition_min = rectangles_minimal(left, right, limit=limit)
    consistent = condition_prim == condition_min
    if strict and not consistent:
        raise InconsistencyError(
            f"stabilizer primitivity is {condition_prim} but rectangle"
            f" minimality is {condition_min}",
        )
    return RectangleReport(condition_prim, condition_min, consistent)
