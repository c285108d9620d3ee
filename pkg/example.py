from primitive_dfa import Gf2kField, direct_product, parse_cycles, product_group
from primitive_dfa.automata import Dfa, is_uniformly_minimal_bruteforce, transition_group
from primitive_dfa.boolean import SYMMETRIC_DIFFERENCE, boolean_complexities, ubm_counterexample
from primitive_dfa.families import affine_pair_non_ubm, maslov_pair

a4 = Dfa(
    4,
    ("a", "b"),
    {"a": parse_cycles("(2,3,4)", 4), "b": parse_cycles("(1,2)(3,4)", 4)},
    finals={2, 3},
)
group = transition_group(a4)
print(group, group.order, group.is_primitive())
print(is_uniformly_minimal_bruteforce(a4))

left, right = maslov_pair(3, 4)
print(direct_product(left, right).state_count)
for op, complexity in boolean_complexities(left, right).items():
    print(f"{op}: {complexity}")

left, right = affine_pair_non_ubm(Gf2kField(2))
gx = product_group(left, right)
print(gx.order, gx.similarity().value)
witness = ubm_counterexample(left, right)
print(witness.form, witness.operation == SYMMETRIC_DIFFERENCE)
