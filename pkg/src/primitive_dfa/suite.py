"""
A table of checks reproducing known facts about the constructions in this
package.

Every row recomputes its facts from scratch. Rows marked as reports print
what they find without passing or failing.
"""

from dataclasses import dataclass
import logging
import random
import time
from typing import Callable, Iterable, Optional

from . import catalog
from .automata import (
    indistinguishability_partition, is_minimal, is_strongly_connected,
    is_uniformly_minimal_bruteforce, is_uniformly_minimal_via_primitivity,
    state_complexity, transition_group,
)
from .boolean import (
    SYMMETRIC_DIFFERENCE, XNOR, BaseForm, BooleanFunction, CompatibleForm,
    LemmaVerdict,
    all_boolean_functions, apply_boolean_op, boolean_complexities,
    classify_compatible, compatible_set, has_maximal_boolean_complexity,
    is_uniformly_boolean_minimal, lemma_boolprim_conditions, prop_ns_check,
    theorem_1fstate_check, ubm_counterexample,
)
from .config import DEFAULT_SUITE_SEED, DEFAULT_UBM_LIMIT, Limits
from .errors import LimitExceededError, PreconditionError, PrimitiveDfaError
from .families import (
    affine_pair_non_ubm, affine_pair_ubm, cyclic_dfa, maslov_pair,
    random_permutation_dfa, yzs_pair,
)
from .gf2k import Gf2kField, agl_group, translation_group
from .groups import PermGroup
from .perm import Permutation, format_points, parse_cycles
from .product import (
    CorollaryCase, Guarantee, Similarity, accessibility_report,
    check_prop_graph, corollary_dissimilar_case, direct_product, product_group,
    theorem_dissimilar_verdict,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteContext:
    limits: Limits
    seed: int

    def rng(self, row_id: str) -> random.Random:
        return random.Random(f"{self.seed}:{row_id}")


@dataclass
class SuiteRow:
    row_id: str
    claim: str
    ok: Optional[bool]
    detail: str = ""
    seconds: float = 0.0
    limited: bool = False

    @property
    def verdict(self) -> str:
        if self.ok is None:
            return "report"
        if self.limited:
            return "limit"
        return "pass" if self.ok else "FAIL"


CheckResult = tuple[Optional[bool], str]


@dataclass(frozen=True)
class SuiteCheck:
    row_id: str
    claim: str
    run: Callable[[SuiteContext], CheckResult]


def _blocks_text(blocks: Iterable[frozenset[int]]) -> str:
    return " ".join(
        format_points(block)
        for block in sorted(blocks, key=lambda block: (len(block), sorted(block)))
    )


def check_cyclic_blocks(ctx: SuiteContext) -> CheckResult:
    group = PermGroup([parse_cycles("(1,2,3,4,5,6)", 6)], cap=ctx.limits.element_cap)
    expected = {
        frozenset({0, 2, 4}), frozenset({1, 3, 5}),
        frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5}),
    }
    blocks = set(group.nontrivial_blocks())
    ok = group.is_transitive() and not group.is_primitive() and blocks == expected
    return ok, f"blocks {_blocks_text(blocks)}"


def check_prime_degree(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("prime-degree")
    if not PermGroup([parse_cycles("(1,2,3,4,5)", 5)]).is_primitive():
        return False, "<(1,2,3,4,5)> is imprimitive"
    transitive = 0
    failures = 0
    for _ in range(50):
        degree = rng.choice((2, 3, 5, 7))
        gens = []
        for _ in range(rng.randint(1, 3)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Permutation(images))
        group = PermGroup(gens, degree=degree, cap=ctx.limits.element_cap)
        if group.is_transitive():
            transitive += 1
            if not group.is_primitive():
                failures += 1
    return failures == 0, f"{transitive} transitive groups, {failures} imprimitive"


def check_a4_dfa(ctx: SuiteContext) -> CheckResult:
    d = catalog.a4_dfa()
    brute = is_uniformly_minimal_bruteforce(d, limit=ctx.limits.subset_limit)
    via_group = is_uniformly_minimal_via_primitivity(d, cap=ctx.limits.element_cap)
    order = transition_group(d, cap=ctx.limits.element_cap).order
    ok = is_strongly_connected(d) and brute and via_group and order == 12
    return ok, (
        f"order {order}, brute force over {2 ** d.state_count - 2} cognates"
        f" {brute}, primitivity {via_group}"
    )


def check_cyclic_dfa(ctx: SuiteContext) -> CheckResult:
    d = cyclic_dfa(6)
    partition = indistinguishability_partition(d, d.finals)
    ok = not is_minimal(d) and frozenset({0, 2, 4}) in partition.classes()
    return ok, f"classes {_blocks_text(partition.classes())}"


def check_xor_pair(ctx: SuiteContext) -> CheckResult:
    left, right = catalog.xor_pair()
    product = direct_product(left, right)
    xor = apply_boolean_op(left, right, SYMMETRIC_DIFFERENCE)
    partition = indistinguishability_partition(xor, xor.finals)
    twins = partition.same_class(product.pack(0, 1), product.pack(1, 0))
    complexity = state_complexity(xor)
    ok = (
        not has_maximal_boolean_complexity(left, right)
        and twins
        and complexity < 4
    )
    return ok, f"xor complexity {complexity}, (1,2) ~ (2,1) {twins}"


def check_ubm_pair(ctx: SuiteContext) -> CheckResult:
    left, right = catalog.ubm_pair()
    cap = ctx.limits.element_cap
    brute = is_uniformly_boolean_minimal(left, right, limit=ctx.limits.ubm_limit)
    gx = product_group(left, right, cap=cap)
    kernel = gx.full_row_stabilizer()
    lemma = lemma_boolprim_conditions(left, right, cap=cap)
    ok = (
        brute
        and gx.similarity() == Similarity.DISSIMILAR
        and kernel.order == 3
        and kernel.is_primitive()
        and lemma == LemmaVerdict.HOLDS_COLWISE
    )
    return ok, (
        f"brute force {brute}, {gx.similarity().value}, |R pi'| ="
        f" {kernel.order}, stabilizer conditions {lemma.value}"
    )


def check_witnesses(ctx: SuiteContext) -> CheckResult:
    bad = []
    for name, family in (("maslov", maslov_pair), ("yzs", yzs_pair)):
        for m in range(3, 6):
            for n in range(3, 6):
                complexities = boolean_complexities(*family(m, n))
                if any(value != m * n for value in complexities.values()):
                    bad.append(f"{name}({m},{n})")
    return not bad, "failed " + ", ".join(bad) if bad else "18 pairs x 10 operations"


def check_one_final_state(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("one-final-state")
    disagreements = 0
    accessible = 0
    for _ in range(200):
        letters = rng.randint(1, 3)
        left = random_permutation_dfa(rng, rng.randint(3, 6), letters)
        right = random_permutation_dfa(rng, rng.randint(3, 6), letters)
        report = theorem_1fstate_check(left, right, strict=False)
        accessible += report.accessible
        disagreements += not report.consistent
    return disagreements == 0, (
        f"{accessible} accessible products, {disagreements} disagreements"
    )


def check_accessibility(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("accessibility")
    disagreements = 0
    accessible = 0
    for _ in range(200):
        letters = rng.randint(1, 3)
        left = random_permutation_dfa(rng, rng.randint(1, 6), letters)
        right = random_permutation_dfa(rng, rng.randint(1, 6), letters)
        report = accessibility_report(
            left, right, cap=ctx.limits.element_cap, strict=False,
        )
        graph = check_prop_graph(left, right)
        accessible += report.accessible
        disagreements += not report.consistent or graph != report.accessible
    return disagreements == 0, (
        f"{accessible} accessible products, {disagreements} disagreements"
    )


def check_affine_8(ctx: SuiteContext) -> CheckResult:
    field = Gf2kField(3)
    left, right = affine_pair_non_ubm(field)
    product = direct_product(left, right)
    cognate = apply_boolean_op(left, right, XNOR)
    partition = indistinguishability_partition(cognate, cognate.finals)
    twins = partition.same_class(product.pack(0, 0), product.pack(1, 1))
    order = agl_group(field).order
    ok = (
        field.pow(field.x, 7) == 1
        and order == 56
        and left.finals == frozenset({0, 1, 2, 3})
        and not is_minimal(cognate)
        and twins
    )
    return ok, (
        f"|AGL(1,8)| = {order}, B = {sorted(left.finals)}, (0,0) ~ (1,1) {twins}"
    )


def check_affine_stabilizers(ctx: SuiteContext) -> CheckResult:
    field = Gf2kField(3)
    left, right = affine_pair_non_ubm(field)
    cap = ctx.limits.element_cap
    gx = product_group(left, right, cap=cap)
    agl = agl_group(field)
    stabilizers = [gx.row_stabilizer({q}) for q in left.states] + [
        gx.column_stabilizer({q2}) for q2 in right.states
    ]
    all_agl = all(
        group.equals(agl) and group.is_primitive() for group in stabilizers
    )
    rectangles = prop_ns_check(
        left, right, cap=cap, limit=ctx.limits.ubm_limit, strict=False,
    )
    ubm = is_uniformly_boolean_minimal(left, right, limit=ctx.limits.ubm_limit)
    ok = (
        all_agl
        and rectangles.condition_prim
        and rectangles.condition_min
        and not ubm
    )
    return ok, (
        f"single stabilizers AGL(1,8) {all_agl}, rectangles minimal"
        f" {rectangles.condition_min}, uniformly boolean minimal {ubm}"
    )


def check_affine_two_letter(ctx: SuiteContext) -> CheckResult:
    field = Gf2kField(3)
    left, right = affine_pair_ubm(field)
    cap = ctx.limits.element_cap
    gx = product_group(left, right, cap=cap)
    translations = translation_group(field)
    rows = gx.row_stabilizer({0, 1})
    columns = gx.column_stabilizer({0, 1})
    both_t = rows.equals(translations) and columns.equals(translations)
    imprimitive = not rows.is_primitive() and not columns.is_primitive()
    lemma = lemma_boolprim_conditions(left, right, cap=cap)
    ubm = is_uniformly_boolean_minimal(left, right, limit=ctx.limits.ubm_limit)
    ok = (
        ubm and both_t and rows.order == 8 and imprimitive
        and lemma == LemmaVerdict.NEITHER
    )
    return ok, (
        f"uniformly boolean minimal {ubm}, double stabilizers T {both_t},"
        f" stabilizer conditions {lemma.value}"
    )


def check_s5_degree10(ctx: SuiteContext) -> CheckResult:
    cap = ctx.limits.element_cap
    left, right = catalog.s5_degree10_pair()
    similarity = product_group(left, right, cap=cap).similarity()
    report = accessibility_report(left, right, cap=cap)
    left2, right2 = catalog.s5_degree10_pair(swapped=True)
    similarity2 = product_group(left2, right2, cap=cap).similarity()
    cases = corollary_dissimilar_case(
        transition_group(left2, cap=cap),
    )
    verdict = theorem_dissimilar_verdict(left2, right2, cap=cap)
    ubm = is_uniformly_boolean_minimal(left2, right2, limit=ctx.limits.ubm_limit)
    ok = (
        similarity == Similarity.SIMILAR
        and not report.group_transitive
        and similarity2 != Similarity.SIMILAR
        and CorollaryCase.SYM_OR_ALT_NOT4 in cases
        and verdict.guarantee == Guarantee.UBM_GUARANTEED
        and ubm
    )
    return ok, (
        f"{similarity.value}, transitive {report.group_transitive};"
        f" swapped {similarity2.value}, {verdict.guarantee.value},"
        f" brute force {ubm}"
    )


def report_s5_degree6(ctx: SuiteContext) -> CheckResult:
    cap = ctx.limits.element_cap
    found = []
    for variant in catalog.S5_DEGREE6_VARIANTS:
        left, right = catalog.s5_degree6_pair(variant)
        gx = product_group(left, right, cap=cap)
        transitive = gx.is_transitive()
        product = direct_product(left, right)
        cognate = product.with_finals(
            product.pack(0, q2) for q2 in (0, 2, 4)
        )
        minimal = is_minimal(cognate)
        both = transitive and not minimal
        found.append(
            f"{variant}: {gx.similarity().value}, transitive {transitive},"
            f" {{1}}x{{1,3,5}} minimal {minimal}"
            + (" (reproduces both facts)" if both else "")
        )
    return None, "; ".join(found)


def check_compatible_forms(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("compatible-forms")
    functions = all_boolean_functions()
    proper = [op for op in functions if op.is_proper]
    forms = [
        CompatibleForm(base, complemented)
        for base in BaseForm
        for complemented in (False, True)
    ]
    failures = 0
    for _ in range(100):
        m, n = rng.randint(2, 5), rng.randint(2, 5)
        left = frozenset(rng.sample(range(m), rng.randint(1, m - 1)))
        right = frozenset(rng.sample(range(n), rng.randint(1, n - 1)))
        for op in functions:
            if not op.is_proper:
                try:
                    compatible_set(op, left, right, m, n)
                except PreconditionError:
                    continue
                failures += 1
                continue
            states = compatible_set(op, left, right, m, n)
            matching = [
                form for form in forms
                if compatible_set(
                    BooleanFunction(form.table), left, right, m, n,
                ) == states
            ]
            if matching != [op.form] or classify_compatible(
                states, left, right, m, n,
            ) != op.form:
                failures += 1
    ok = len(functions) == 16 and len(proper) == 10 and failures == 0
    return ok, f"{len(functions)} tables, {len(proper)} proper, {failures} failures"


def check_rectangles(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng("rectangles")
    cap = ctx.limits.element_cap
    limit = ctx.limits.ubm_limit
    disagreements = 0
    unsound = 0
    certified = 0
    for _ in range(100):
        letters = rng.randint(1, 3)
        left = random_permutation_dfa(rng, rng.randint(2, 5), letters)
        right = random_permutation_dfa(rng, rng.randint(2, 5), letters)
        report = prop_ns_check(left, right, cap=cap, limit=limit, strict=False)
        disagreements += not report.consistent
        if lemma_boolprim_conditions(left, right, cap=cap) != LemmaVerdict.NEITHER:
            certified += 1
            unsound += ubm_counterexample(left, right, limit=limit) is not None
    ok = disagreements == 0 and unsound == 0
    return ok, (
        f"{disagreements} disagreements, {certified} certified pairs,"
        f" {unsound} without uniform boolean minimality"
    )


def report_two_transitive_pair(ctx: SuiteContext) -> CheckResult:
    cap = ctx.limits.element_cap
    left, right = catalog.two_transitive_pair()
    gx = product_group(left, right, cap=cap)
    single = all(
        group.is_k_transitive(2)
        for group in [gx.row_stabilizer({q}) for q in left.states]
        + [gx.column_stabilizer({q2}) for q2 in right.states]
    )
    doubles = [
        gx.row_stabilizer({p, q})
        for p in left.states for q in left.states if p < q
    ] + [
        gx.column_stabilizer({p, q})
        for p in right.states for q in right.states if p < q
    ]
    doubles_imprimitive = all(
        group.is_transitive() and not group.is_primitive() for group in doubles
    )
    full = [gx.full_row_stabilizer(), gx.full_column_stabilizer()]
    full_imprimitive = all(
        group.is_transitive() and not group.is_primitive() for group in full
    )
    ubm = is_uniformly_boolean_minimal(left, right, limit=ctx.limits.ubm_limit)
    return None, (
        f"uniformly boolean minimal {ubm}, single stabilizers 2-transitive"
        f" {single}, double stabilizers transitive and imprimitive"
        f" {doubles_imprimitive}, full stabilizers transitive and imprimitive"
        f" {full_imprimitive}"
    )


def report_affine_k1(ctx: SuiteContext) -> CheckResult:
    left, right = affine_pair_non_ubm(Gf2kField(1))
    xor_left, xor_right = catalog.xor_pair()
    cap = ctx.limits.element_cap
    same = (
        product_group(left, right, cap=cap).elements
        == product_group(xor_left, xor_right, cap=cap).elements
    )
    return None, f"product group equals the 2x2 xor pair's {same}"


CHECKS = (
    SuiteCheck(
        "cyclic-blocks",
        "<(1,...,6)> is imprimitive with exactly five non-trivial blocks",
        check_cyclic_blocks,
    ),
    SuiteCheck(
        "prime-degree",
        "transitive groups of prime degree are primitive",
        check_prime_degree,
    ),
    SuiteCheck(
        "a4-dfa",
        "the A_4 DFA is uniformly minimal by both methods",
        check_a4_dfa,
    ),
    SuiteCheck(
        "cyclic-dfa",
        "the 6-cycle DFA with finals {1,3,5} is not minimal",
        check_cyclic_dfa,
    ),
    SuiteCheck(
        "xor-2x2",
        "the 2x2 xor pair lacks maximal boolean complexity",
        check_xor_pair,
    ),
    SuiteCheck(
        "ubm-2x3",
        "the 2x3 pair is uniformly boolean minimal and meets the stabilizer"
        " conditions",
        check_ubm_pair,
    ),
    SuiteCheck(
        "witnesses",
        "Maslov and YZS pairs reach m*n for every proper operation",
        check_witnesses,
    ),
    SuiteCheck(
        "one-final-state",
        "one-final-state pairs: accessible iff maximal",
        check_one_final_state,
    ),
    SuiteCheck(
        "accessibility",
        "the accessibility conditions and the graph condition agree",
        check_accessibility,
    ),
    SuiteCheck(
        "affine-8",
        "the k=3 affine pair has a non-minimal xnor cognate",
        check_affine_8,
    ),
    SuiteCheck(
        "affine-stabilizers",
        "k=3 single stabilizers are AGL(1,8) while uniform boolean"
        " minimality fails",
        check_affine_stabilizers,
    ),
    SuiteCheck(
        "affine-two-letter",
        "the k=3 two-letter pair is uniformly boolean minimal with"
        " imprimitive double stabilizers",
        check_affine_two_letter,
    ),
    SuiteCheck(
        "s5-degree-10",
        "S_5 against its degree-10 action: similar and intransitive;"
        " swapped it is uniformly boolean minimal",
        check_s5_degree10,
    ),
    SuiteCheck(
        "s5-degree-6",
        "S_5 against its degree-6 action: which right letter gives a"
        " transitive product with a non-minimal cognate",
        report_s5_degree6,
    ),
    SuiteCheck(
        "compatible-forms",
        "10 of 16 boolean functions are proper and each has one form",
        check_compatible_forms,
    ),
    SuiteCheck(
        "rectangles",
        "rectangle minimality matches single stabilizer primitivity and"
        " the stabilizer conditions are sound",
        check_rectangles,
    ),
    SuiteCheck(
        "two-transitive-8",
        "8-state 2-transitive pair: stabilizers and uniform boolean"
        " minimality",
        report_two_transitive_pair,
    ),
    SuiteCheck(
        "affine-k1",
        "the k=1 affine pair against the 2x2 xor pair",
        report_affine_k1,
    ),
)


def run_check(check: SuiteCheck, ctx: SuiteContext) -> SuiteRow:
    start = time.perf_counter()
    limited = False
    try:
        ok, detail = check.run(ctx)
    except LimitExceededError as e:
        ok, detail, limited = False, f"refused: {e}", True
    except PrimitiveDfaError as e:
        ok, detail = False, f"{type(e).__name__}: {e}"
    row = SuiteRow(
        check.row_id,
        check.claim,
        ok,
        detail,
        time.perf_counter() - start,
        limited,
    )
    logger.info("%s: %s in %.2fs", row.row_id, row.verdict, row.seconds)
    return row


def run_suite(
    *,
    limits: Limits = Limits(),
    seed: int = DEFAULT_SUITE_SEED,
    only: Optional[Iterable[str]] = None,
) -> list[SuiteRow]:
    """
    Run the checks (all of them, or the ids in `only`) in table order.
    """
    ctx = SuiteContext(limits, seed)
    selected = set(only) if only is not None else None
    if selected is not None:
        unknown = selected - {check.row_id for check in CHECKS}
        if unknown:
            raise PreconditionError(f"unknown suite rows {sorted(unknown)!r}")
    return [
        run_check(check, ctx)
        for check in CHECKS
        if selected is None or check.row_id in selected
    ]


def format_table(rows: Iterable[SuiteRow], *, timings: bool = False) -> str:
    rows = list(rows)
    id_width = max((len(row.row_id) for row in rows), default=2)
    lines = []
    for row in rows:
        line = f"{row.row_id:<{id_width}}  {row.verdict:<6}  {row.claim}"
        if timings:
            line += f"  [{row.seconds:.2f}s]"
        lines.append(line)
        if row.detail:
            lines.append(f"{'':<{id_width}}  {'':<6}  {row.detail}")
    failed = sum(row.ok is False for row in rows)
    lines.append(f"{len(rows)} rows, {failed} failed")
    return "\n".join(lines) + "\n"


def conjecture_affine_ubm(
    k: int, *, limit: int = DEFAULT_UBM_LIMIT,
) -> Optional[str]:
    """
    Return `None` if the two-letter affine pair over GF(2^k) is uniformly
    boolean minimal, or a description of a non-minimal product cognate.
    """
    field = Gf2kField(k)
    left, right = affine_pair_ubm(field)
    witness = ubm_counterexample(
        left, right, limit=limit,
    )
    if witness is None:
        return None
    return (
        f"{witness.form} on {format_points(witness.left_states)} and"
        f" {format_points(witness.right_states)}"
    )
