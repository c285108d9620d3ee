"""
Small named DFAs and DFA pairs with known properties, written in 1-based
cycle notation.
"""

from typing import Iterable, Mapping

from .automata import Dfa
from .perm import parse_cycles


def dfa_from_cycles(
    size: int,
    letters: Mapping[str, str],
    *,
    initial: int = 1,
    finals: Iterable[int] = (),
) -> Dfa:
    """
    Return the permutation DFA whose letters are given in cycle notation;
    `initial` and `finals` are 1-based.
    """
    return Dfa(
        size,
        tuple(letters),
        {letter: parse_cycles(text, size) for letter, text in letters.items()},
        initial=initial - 1,
        finals={state - 1 for state in finals},
    )


def a4_dfa() -> Dfa:
    """
    A strongly connected DFA with transition group `A_4`.
    """
    return dfa_from_cycles(
        4, {"a": "(2,3,4)", "b": "(1,2)(3,4)"}, finals=(3, 4),
    )


def xor_pair() -> tuple[Dfa, Dfa]:
    """
    Two 2-state DFAs whose symmetric difference needs fewer than 4 states.
    """
    return (
        dfa_from_cycles(2, {"a": "(1,2)", "b": "(1,2)", "c": "()"}, finals=(1,)),
        dfa_from_cycles(2, {"a": "(1,2)", "b": "()", "c": "(1,2)"}, finals=(1,)),
    )


def ubm_pair() -> tuple[Dfa, Dfa]:
    """
    A 2-state and a 3-state DFA with a uniformly boolean minimal product.
    """
    return (
        dfa_from_cycles(2, {"a": "(1,2)", "b": "()"}, finals=(1,)),
        dfa_from_cycles(3, {"a": "(1,2)", "b": "(1,2,3)"}, finals=(1,)),
    )


def strongly_dissimilar_pair() -> tuple[Dfa, Dfa]:
    return (
        dfa_from_cycles(2, {"a": "(1,2)", "b": "()"}, finals=(1,)),
        dfa_from_cycles(2, {"a": "()", "b": "(1,2)"}, finals=(1,)),
    )


def klein_pair() -> tuple[Dfa, Dfa]:
    """
    A dissimilar, not strongly dissimilar pair: `C_2` against the Klein
    four-group.
    """
    return (
        dfa_from_cycles(2, {"a": "(1,2)", "b": "(1,2)"}, finals=(1,)),
        dfa_from_cycles(
            4, {"a": "(1,2)(3,4)", "b": "(1,3)(2,4)"}, finals=(1,),
        ),
    )


def s5_degree10_pair(*, swapped: bool = False) -> tuple[Dfa, Dfa]:
    """
    `S_5` on 5 points and its primitive action on 10 points, letter for
    letter isomorphic; `swapped` exchanges the two letters on the right.
    """
    right_letters = ["(1,2)(6,8)(7,9)", "(2,6,4,5,3,7)(8,10,9)"]
    if swapped:
        right_letters.reverse()
    return (
        dfa_from_cycles(5, {"a": "(3,4)", "b": "(1,2,3)(4,5)"}, finals=(1,)),
        dfa_from_cycles(
            10, dict(zip("ab", right_letters)), finals=(1,),
        ),
    )


S5_DEGREE6_VARIANTS = {
    "six-cycle": "(1,2,3,4,5,6)",
    "isomorphism": "(1,2,3,5,4,6)",
}


def s5_degree6_pair(variant: str = "six-cycle") -> tuple[Dfa, Dfa]:
    """
    `S_5` on 5 points against a primitive `S_5` in `S_6`; `variant` picks
    the second right letter from `S5_DEGREE6_VARIANTS`.
    """
    return (
        dfa_from_cycles(5, {"a": "(3,4)", "b": "(1,2,3)(4,5)"}, finals=(1,)),
        dfa_from_cycles(
            6,
            {"a": "(1,2)(3,4)(5,6)", "b": S5_DEGREE6_VARIANTS[variant]},
            finals=(1, 3, 5),
        ),
    )


def two_transitive_pair() -> tuple[Dfa, Dfa]:
    """
    Two 8-state DFAs with 2-transitive transition groups whose double and
    full stabilizers are imprimitive.
    """
    return (
        dfa_from_cycles(
            8, {"a": "(1,3)(2,4)(5,7)(6,8)", "b": "(1,3,8,5,6,2,7)"},
            finals=(1,),
        ),
        dfa_from_cycles(
            8, {"a": "(1,4)(2,3)(5,8)(6,7)", "b": "(1,5,8,6,3,4,7)"},
            finals=(1,),
        ),
    )
