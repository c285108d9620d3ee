"""
Complete deterministic finite automata.

States are `0, ..., state_count - 1`; each letter acts as a `Transformation`
of the states (a `Permutation` when it is bijective).
"""

import logging
from typing import Iterable, Mapping, Optional, Sequence, TypeAlias

from .config import DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_LIMIT
from .errors import PreconditionError, SizeLimitExceededError
from .groups import PermGroup
from .perm import Permutation, PointSet, Transformation


logger = logging.getLogger(__name__)

Word: TypeAlias = Sequence[str]


class Dfa:
    """
    A complete DFA `(Q, alphabet, delta, initial, finals)`.
    """

    def __init__(
        self,
        state_count: int,
        alphabet: Sequence[str],
        delta: Mapping[str, Iterable[int]],
        *,
        initial: int = 0,
        finals: Iterable[int] = (),
    ) -> None:
        if not (isinstance(state_count, int) and state_count > 0):
            raise PreconditionError("state count must be a positive integer")
        letters = tuple(alphabet)
        for letter in letters:
            if not (isinstance(letter, str) and letter):
                raise PreconditionError(
                    f"letters must be non-empty strings, got {letter!r}",
                )
        if len(set(letters)) != len(letters):
            raise PreconditionError(f"alphabet {letters!r} repeats a letter")
        unknown = set(delta) - set(letters)
        if unknown:
            raise PreconditionError(
                f"transitions given for unknown letters {sorted(unknown)!r}",
            )
        self.state_count = state_count
        self.alphabet = letters
        self.delta: dict[str, Transformation] = {}
        for letter in letters:
            if letter not in delta:
                raise PreconditionError(f"missing transition for letter {letter!r}")
            self.delta[letter] = _as_transformation(delta[letter], state_count)
        if not (isinstance(initial, int) and 0 <= initial < state_count):
            raise PreconditionError(
                f"initial state {initial!r} is not one of {state_count} states",
            )
        self.initial = initial
        self.finals = frozenset(finals)
        for state in self.finals:
            if not (isinstance(state, int) and 0 <= state < state_count):
                raise PreconditionError(
                    f"final state {state!r} is not one of {state_count} states",
                )

    @property
    def states(self) -> range:
        return range(self.state_count)

    def letter_tables(self) -> list[Transformation]:
        """
        Return the letter actions in alphabet order.
        """
        return [self.delta[letter] for letter in self.alphabet]

    def step(self, state: int, letter: str) -> int:
        return self.delta[letter][state]

    def run(self, word: Word, start: Optional[int] = None) -> int:
        """
        Return the state reached by reading `word` from `start` (by default,
        the initial state).
        """
        state = self.initial if start is None else start
        for letter in word:
            state = self.delta[letter][state]
        return state

    def accepts(self, word: Word) -> bool:
        return self.run(word) in self.finals

    def with_finals(self, finals: Iterable[int]) -> "Dfa":
        return Dfa(
            self.state_count,
            self.alphabet,
            self.delta,
            initial=self.initial,
            finals=finals,
        )

    def relabeled(self, order: Sequence[int]) -> "Dfa":
        """
        Return the same DFA with state `q` renamed to `order[q]`.
        """
        renaming = Permutation(order)
        if len(renaming) != self.state_count:
            raise PreconditionError(
                f"renaming has {len(renaming)} points for {self.state_count}"
                " states",
            )
        delta = {}
        for letter, table in self.delta.items():
            images = [0] * self.state_count
            for state, image in enumerate(table):
                images[renaming[state]] = renaming[image]
            delta[letter] = images
        return Dfa(
            self.state_count,
            self.alphabet,
            delta,
            initial=renaming[self.initial],
            finals=renaming.apply_to_set(self.finals),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.state_count == other.state_count
            and self.alphabet == other.alphabet
            and self.delta == other.delta
            and self.initial == other.initial
            and self.finals == other.finals
        )

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}({self.state_count}, {list(self.alphabet)!r},"
            f" initial={self.initial}, finals={sorted(self.finals)!r})"
        )


def _as_transformation(images: Iterable[int], degree: int) -> Transformation:
    result = Transformation(images)
    if len(result) != degree:
        raise PreconditionError(
            f"transition {result} has degree {len(result)}, expected {degree}",
        )
    if result.is_permutation():
        return Permutation._trusted(result)
    return result


class StatePartition:
    """
    A partition of the states, as a class id per state.

    Class ids are contiguous from 0 and numbered in order of first
    appearance.
    """

    def __init__(self, class_of: Sequence[int]) -> None:
        ids: dict[int, int] = {}
        self.class_of = tuple(ids.setdefault(cls, len(ids)) for cls in class_of)
        self.class_count = len(ids)

    @property
    def state_count(self) -> int:
        return len(self.class_of)

    @property
    def is_discrete(self) -> bool:
        return self.class_count == len(self.class_of)

    def same_class(self, first: int, second: int) -> bool:
        return self.class_of[first] == self.class_of[second]

    def classes(self) -> list[PointSet]:
        result: list[set[int]] = [set() for _ in range(self.class_count)]
        for state, cls in enumerate(self.class_of):
            result[cls].add(state)
        return [frozenset(cls) for cls in result]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.class_of)!r})"


def refine(
    tables: Sequence[Sequence[int]], class_of: Sequence[int],
) -> list[int]:
    """
    Return the coarsest refinement of `class_of` that is stable under every
    table in `tables`.

    Rounds stop as soon as the class count stops growing or every state has
    its own class.
    """
    ids: dict = {}
    current = [ids.setdefault(cls, len(ids)) for cls in class_of]
    count = len(ids)
    size = len(current)
    while count < size:
        ids = {}
        current = [
            ids.setdefault(key, len(ids))
            for key in zip(
                current,
                *(map(current.__getitem__, table) for table in tables),
            )
        ]
        if len(ids) == count:
            break
        count = len(ids)
    return current


def distinguishes_all(
    tables: Sequence[Sequence[int]], flags: Sequence[int],
) -> bool:
    """
    Return `True` if every pair of states is separated by some word relative
    to the states whose flag is set.
    """
    return len(set(refine(tables, flags))) == len(flags)


def reachable_states(d: Dfa) -> PointSet:
    seen = {d.initial}
    queue = [d.initial]
    tables = d.letter_tables()
    while queue:
        state = queue.pop()
        for table in tables:
            image = table[state]
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def is_accessible(d: Dfa) -> bool:
    return len(reachable_states(d)) == d.state_count


def is_strongly_connected(d: Dfa) -> bool:
    """
    Return `True` if every state is reachable from every other state.
    """
    if not is_accessible(d):
        return False
    predecessors: list[list[int]] = [[] for _ in d.states]
    for table in d.letter_tables():
        for state, image in enumerate(table):
            predecessors[image].append(state)
    seen = {d.initial}
    queue = [d.initial]
    while queue:
        state = queue.pop()
        for previous in predecessors[state]:
            if previous not in seen:
                seen.add(previous)
                queue.append(previous)
    return len(seen) == d.state_count


def is_permutation_dfa(d: Dfa) -> bool:
    return all(isinstance(table, Permutation) for table in d.delta.values())


def _require_permutation_dfa(d: Dfa) -> None:
    if not is_permutation_dfa(d):
        raise PreconditionError("the DFA has a non-bijective letter")


def transition_group(d: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """
    Return the transition group of a permutation DFA.
    """
    _require_permutation_dfa(d)
    return PermGroup(
        d.letter_tables(),  # type: ignore
        degree=d.state_count,
        cap=cap,
    )


def indistinguishability_partition(d: Dfa, states: Iterable[int]) -> StatePartition:
    """
    Return the partition of all states into classes of states that no word
    separates relative to `states`.
    """
    target = frozenset(states)
    for state in target:
        if not 0 <= state < d.state_count:
            raise PreconditionError(
                f"state {state} is not one of {d.state_count} states",
            )
    flags = [int(state in target) for state in d.states]
    return StatePartition(refine(d.letter_tables(), flags))


def is_minimal(d: Dfa) -> bool:
    return (
        is_accessible(d)
        and indistinguishability_partition(d, d.finals).is_discrete
    )


def _reachable_part(d: Dfa) -> Dfa:
    """
    Return the restriction to reachable states, renumbered in breadth-first
    order so that the initial state is 0.
    """
    order = [d.initial]
    index = {d.initial: 0}
    tables = d.letter_tables()
    for state in order:
        for table in tables:
            image = table[state]
            if image not in index:
                index[image] = len(order)
                order.append(image)
    return Dfa(
        len(order),
        d.alphabet,
        {
            letter: [index[d.delta[letter][state]] for state in order]
            for letter in d.alphabet
        },
        initial=0,
        finals=(index[state] for state in d.finals if state in index),
    )


def state_complexity(d: Dfa) -> int:
    """
    Return the number of states of the minimal DFA equivalent to `d`.
    """
    reachable = _reachable_part(d)
    return indistinguishability_partition(
        reachable, reachable.finals,
    ).class_count


def minimize(d: Dfa) -> Dfa:
    """
    Return the minimal DFA recognizing the language of `d`.
    """
    reachable = _reachable_part(d)
    partition = indistinguishability_partition(reachable, reachable.finals)
    representatives = [min(cls) for cls in partition.classes()]
    return Dfa(
        partition.class_count,
        d.alphabet,
        {
            letter: [
                partition.class_of[reachable.delta[letter][state]]
                for state in representatives
            ]
            for letter in d.alphabet
        },
        initial=partition.class_of[0],
        finals={partition.class_of[state] for state in reachable.finals},
    )


def cognate(d: Dfa, states: Iterable[int]) -> Dfa:
    """
    Return `d` with its final states replaced by `states`.
    """
    return d.with_finals(states)


def is_uniformly_minimal_bruteforce(
    d: Dfa, *, limit: int = DEFAULT_SUBSET_LIMIT,
) -> bool:
    """
    Return `True` if every non-trivial cognate of `d` is minimal.

    Subsets are visited in Gray-code order, so consecutive candidates differ
    in one state.
    """
    size = d.state_count
    if size < 2:
        raise PreconditionError("at least two states are required")
    if size > limit:
        raise SizeLimitExceededError(
            f"{size} states exceed the subset limit of {limit}",
        )
    if not is_accessible(d):
        return False
    tables = d.letter_tables()
    full = (1 << size) - 1
    flags = [0] * size
    for step in range(1, 1 << size):
        flags[(step & -step).bit_length() - 1] ^= 1
        if step ^ (step >> 1) == full:
            continue
        if not distinguishes_all(tables, flags):
            logger.debug(
                "cognate on %s is not minimal",
                [state for state in d.states if flags[state]],
            )
            return False
    return True


def is_uniformly_minimal_via_primitivity(
    d: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP,
) -> bool:
    """
    Return `True` if the transition group of the permutation DFA `d` is
    primitive, which is equivalent to uniform minimality.
    """
    return transition_group(d, cap=cap).is_primitive()


def _require_nontrivial_finals(d: Dfa) -> None:
    if not 0 < len(d.finals) < d.state_count:
        raise PreconditionError(
            "the set of final states must be non-empty and proper",
        )


def minimality_via_saturation(d: Dfa, *, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """
    Return `True` if no non-trivial congruence of the transition group
    saturates the final states.

    For accessible permutation DFAs this is equivalent to minimality.
    """
    group = transition_group(d, cap=cap)
    if not is_accessible(d):
        raise PreconditionError("the DFA is not accessible")
    _require_nontrivial_finals(d)
    for system in group.minimal_block_systems():
        if all(cls <= d.finals or not cls & d.finals for cls in system):
            return False
    return True


def single_final_state_minimality(d: Dfa) -> bool:
    """
    Return the minimality of a permutation DFA with exactly one final or
    exactly one non-final state, which is just its accessibility.
    """
    _require_permutation_dfa(d)
    if not (len(d.finals) == 1 or len(d.finals) == d.state_count - 1):
        raise PreconditionError(
            "exactly one final or exactly one non-final state is required",
        )
    return is_accessible(d)
