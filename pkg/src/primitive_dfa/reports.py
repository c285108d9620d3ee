"""
Reports for single DFAs and DFA pairs.

A report is an insertion-ordered `dict` of JSON values. The text form prints
one `field name: value` line per field; a `<field>_reason` entry is appended
to the line of `<field>` in parentheses.
"""

import json
import logging
from typing import Any

from .automata import (
    Dfa, indistinguishability_partition, is_accessible, is_permutation_dfa,
    is_strongly_connected, is_uniformly_minimal_bruteforce, state_complexity,
    transition_group,
)
from .boolean import boolean_complexities, lemma_boolprim_conditions, ubm_counterexample
from .config import Limits
from .errors import InconsistencyError
from .groups import PermGroup
from .perm import format_points
from .product import (
    Similarity, accessibility_report, check_prop_graph,
    corollary_dissimilar_case, direct_product, product_group,
    theorem_dissimilar_verdict,
)


logger = logging.getLogger(__name__)

Report = dict[str, Any]


def _group_fields(prefix: str, group: PermGroup) -> Report:
    return {
        f"{prefix}order": group.order,
        f"{prefix}generators": str(group),
        f"{prefix}transitive": group.is_transitive(),
        f"{prefix}primitive": group.is_primitive(),
    }


def analyze_report(d: Dfa, *, limits: Limits = Limits()) -> Report:
    """
    Describe `d`: reachability, its transition group and blocks, and
    uniform minimality.
    """
    report: Report = {
        "states": d.state_count,
        "alphabet": list(d.alphabet),
        "initial": d.initial + 1,
        "final": [state + 1 for state in sorted(d.finals)],
        "accessible": is_accessible(d),
        "strongly_connected": is_strongly_connected(d),
        "state_complexity": state_complexity(d),
        "permutation": is_permutation_dfa(d),
    }
    if 0 < len(d.finals) < d.state_count:
        report["indistinguishable_classes"] = [
            format_points(cls)
            for cls in indistinguishability_partition(d, d.finals).classes()
            if len(cls) > 1
        ]
    by_primitivity = None
    if report["permutation"]:
        group = transition_group(d, cap=limits.element_cap)
        report.update(_group_fields("group_", group))
        if report["group_transitive"] and not report["group_primitive"]:
            report["block_systems"] = [
                " ".join(format_points(block) for block in system)
                for system in group.nontrivial_block_systems()
            ]
            report["blocks"] = [
                format_points(block) for block in group.nontrivial_blocks()
            ]
        by_primitivity = report["accessible"] and report["group_primitive"]
        report["uniformly_minimal"] = by_primitivity
        if not report["accessible"]:
            reason = "not accessible"
        else:
            reason = (
                f"{'primitive' if report['group_primitive'] else 'imprimitive'},"
                f" order {group.order}"
            )
        report["uniformly_minimal_reason"] = reason
    if 2 <= d.state_count <= limits.subset_limit:
        brute = is_uniformly_minimal_bruteforce(d, limit=limits.subset_limit)
        report["uniformly_minimal_bruteforce"] = brute
        report["uniformly_minimal_bruteforce_reason"] = (
            f"{2 ** d.state_count - 2} cognates"
        )
        if by_primitivity is not None and brute != by_primitivity:
            raise InconsistencyError(
                f"uniform minimality is {brute} by brute force but"
                f" {by_primitivity} by primitivity",
            )
        report.setdefault("uniformly_minimal", brute)
    elif d.state_count == 1:
        report["uniformly_minimal"] = True
        report["uniformly_minimal_reason"] = "no non-trivial cognates"
    return report


def _stabilizer_line(name: str, group: PermGroup) -> str:
    kind = (
        "primitive" if group.is_primitive() else
        "transitive" if group.is_transitive() else
        "intransitive"
    )
    return f"{name}: order {group.order}, {kind}"


def product_report(
    left: Dfa,
    right: Dfa,
    *,
    limits: Limits = Limits(),
    ubm: bool = False,
    boolean: bool = False,
) -> Report:
    """
    Describe the product of `left` and `right`: similarity, accessibility
    conditions, stabilizers and the guarantees derived from them.
    """
    product = direct_product(left, right)
    report: Report = {
        "left_states": left.state_count,
        "right_states": right.state_count,
        "product_states": product.state_count,
        "product_accessible": is_accessible(product.dfa),
        "permutation": is_permutation_dfa(left) and is_permutation_dfa(right),
    }
    if report["permutation"]:
        cap = limits.element_cap
        gx = product_group(left, right, cap=cap)
        similarity = gx.similarity()
        access = accessibility_report(left, right, cap=cap)
        report.update({
            "similarity": similarity.value,
            "product_group_order": gx.order_from_kernel(),
            "group_transitive": access.group_transitive,
            "all_stabilizers_transitive": access.all_stabilizers_transitive,
            "some_row_or_column_transitive": (
                access.some_row_or_column_transitive
            ),
            "full_row_reachable": check_prop_graph(left, right),
            "full_row_stabilizer": _stabilizer_line(
                "R", gx.full_row_stabilizer(),
            ),
            "full_column_stabilizer": _stabilizer_line(
                "C", gx.full_column_stabilizer(),
            ),
            "row_stabilizers": [
                _stabilizer_line(f"R_{q + 1}", gx.row_stabilizer({q}))
                for q in left.states
            ],
            "column_stabilizers": [
                _stabilizer_line(f"C_{q2 + 1}", gx.column_stabilizer({q2}))
                for q2 in right.states
            ],
            "left_cases": sorted(
                case.value for case in corollary_dissimilar_case(gx.left_group())
            ),
            "right_cases": sorted(
                case.value for case in corollary_dissimilar_case(gx.right_group())
            ),
            "stabilizer_conditions": lemma_boolprim_conditions(
                left, right, cap=cap,
            ).value,
        })
        if similarity == Similarity.SIMILAR:
            report["guarantee"] = "not applicable"
            report["guarantee_reason"] = "similar DFAs"
        elif min(left.state_count, right.state_count) < 3:
            report["guarantee"] = "not applicable"
            report["guarantee_reason"] = "fewer than three states"
        else:
            verdict = theorem_dissimilar_verdict(left, right, cap=cap)
            report["guarantee"] = verdict.guarantee.value
            report["guarantee_reason"] = verdict.reason
    if boolean:
        report["state_complexities"] = {
            str(op): value
            for op, value in boolean_complexities(left, right).items()
        }
    if ubm:
        witness = ubm_counterexample(left, right, limit=limits.ubm_limit)
        report["uniformly_boolean_minimal"] = witness is None
        if witness is not None:
            report["uniformly_boolean_minimal_reason"] = (
                f"{witness.form} on {format_points(witness.left_states)}"
                f" and {format_points(witness.right_states)} is not minimal"
            )
    return report


def _render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return ", ".join(f"{key} {item}" for key, item in value.items())
    if isinstance(value, list):
        return ", ".join(str(item) for item in value) if value else "none"
    return str(value)


def render_text(report: Report) -> str:
    lines = []
    for key, value in report.items():
        if key.endswith("_reason") and key[:-len("_reason")] in report:
            continue
        line = f"{key.replace('_', ' ')}: {_render_value(value)}"
        reason = report.get(f"{key}_reason")
        if reason:
            line += f" ({reason})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report, indent=2) + "\n"
