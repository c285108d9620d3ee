"""
Named DFA families: cyclic, symmetric and alternating DFAs, the classical
witnesses for boolean operations, and the affine pairs.
"""

import random
from typing import Sequence

from .automata import Dfa
from .errors import PreconditionError
from .gf2k import Gf2kField, affine_permutation, translation_block
from .perm import Permutation


def _cycle(degree: int, points: Sequence[int]) -> list[int]:
    images = list(range(degree))
    for here, there in zip(points, list(points[1:]) + list(points[:1])):
        images[here] = there
    return images


def _require_at_least(name: str, value: int, minimum: int) -> None:
    if not (isinstance(value, int) and value >= minimum):
        raise PreconditionError(f"{name} must be an integer >= {minimum}, got {value!r}")


def cyclic_dfa(n: int) -> Dfa:
    """
    Return the one-letter DFA whose letter is the cycle `(1,...,n)`, with
    final states every other state starting at the first.
    """
    _require_at_least("n", n, 2)
    return Dfa(
        n, ("a",), {"a": _cycle(n, range(n))}, finals=range(0, n, 2),
    )


def symmetric_dfa(n: int) -> Dfa:
    """
    Return the DFA with letters `(1,2)` and `(1,...,n)`, whose transition
    group is `S_n`.
    """
    _require_at_least("n", n, 2)
    return Dfa(
        n,
        ("a", "b"),
        {"a": _cycle(n, [0, 1]), "b": _cycle(n, range(n))},
        finals={0},
    )


def alternating_dfa(n: int) -> Dfa:
    """
    Return a DFA whose transition group is `A_n`: `(1,2,3)` with
    `(1,...,n)` for odd `n` and with `(2,...,n)` for even `n`.
    """
    _require_at_least("n", n, 3)
    second = range(n) if n % 2 else range(1, n)
    return Dfa(
        n,
        ("a", "b"),
        {"a": _cycle(n, [0, 1, 2]), "b": _cycle(n, second)},
        finals={0},
    )


def maslov_pair(m: int, n: int) -> tuple[Dfa, Dfa]:
    """
    Return the classical witnesses for union over `{1, 0}`: `1` cycles the
    `m` states of the left DFA and fixes the right one, `0` does the
    opposite; the final states are the last ones.
    """
    _require_at_least("m", m, 1)
    _require_at_least("n", n, 1)
    alphabet = ("1", "0")
    left = Dfa(
        m,
        alphabet,
        {"1": _cycle(m, range(m)), "0": range(m)},
        finals={m - 1},
    )
    right = Dfa(
        n,
        alphabet,
        {"1": range(n), "0": _cycle(n, range(n))},
        finals={n - 1},
    )
    return left, right


def yzs_pair(m: int, n: int) -> tuple[Dfa, Dfa]:
    """
    Return the DFAs counting `a`s modulo `m` and `b`s modulo `n`, with the
    initial state final.
    """
    _require_at_least("m", m, 1)
    _require_at_least("n", n, 1)
    alphabet = ("a", "b")
    left = Dfa(
        m, alphabet, {"a": _cycle(m, range(m)), "b": range(m)}, finals={0},
    )
    right = Dfa(
        n, alphabet, {"a": range(n), "b": _cycle(n, range(n))}, finals={0},
    )
    return left, right


def affine_pair_non_ubm(field: Gf2kField) -> tuple[Dfa, Dfa]:
    """
    Return two DFAs with transition group `AGL(1, 2^k)` and no uniformly
    boolean minimal product.

    Both start at 0 with the translation block as final states; the
    letters are `a = t_{g,0}`, `b = t_{1,1}`, `c = t_{1,0}` on the left and
    the same with `b` and `c` swapped on the right.
    """
    multiply = affine_permutation(field, field.generator, 0)
    shift = affine_permutation(field, 1, 1)
    identity = Permutation.identity(field.size)
    block = translation_block(field)
    alphabet = ("a", "b", "c")
    left = Dfa(
        field.size,
        alphabet,
        {"a": multiply, "b": shift, "c": identity},
        finals=block,
    )
    right = Dfa(
        field.size,
        alphabet,
        {"a": multiply, "b": identity, "c": shift},
        finals=block,
    )
    return left, right


def affine_pair_ubm(field: Gf2kField) -> tuple[Dfa, Dfa]:
    """
    Return the two-letter affine pair `a = t_{g,0}, b = t_{1,1}` and
    `a' = t_{g,0}^-1, b' = t_{1,1}`.
    """
    multiply = affine_permutation(field, field.generator, 0)
    shift = affine_permutation(field, 1, 1)
    block = translation_block(field)
    alphabet = ("a", "b")
    left = Dfa(
        field.size, alphabet, {"a": multiply, "b": shift}, finals=block,
    )
    right = Dfa(
        field.size,
        alphabet,
        {"a": multiply.inverse(), "b": shift},
        finals=block,
    )
    return left, right


def random_permutation_dfa(
    rng: random.Random,
    states: int,
    letters: int,
    final_count: int = 1,
) -> Dfa:
    """
    Return a permutation DFA with random letters over `a, b, c, ...`.
    """
    _require_at_least("states", states, 1)
    _require_at_least("letters", letters, 1)
    if not 0 <= final_count <= states:
        raise PreconditionError(
            f"cannot pick {final_count} final states out of {states}",
        )
    if letters > 26:
        raise PreconditionError("at most 26 letters are supported")
    alphabet = tuple(chr(ord("a") + idx) for idx in range(letters))
    delta = {}
    for letter in alphabet:
        images = list(range(states))
        rng.shuffle(images)
        delta[letter] = images
    return Dfa(
        states,
        alphabet,
        delta,
        initial=rng.randrange(states),
        finals=rng.sample(range(states), final_count),
    )
