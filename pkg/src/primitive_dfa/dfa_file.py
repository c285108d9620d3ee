"""
Reading and writing DFAs in the line-oriented text format:

```
# comment
states: 4
alphabet: a b
initial: 1
final: 3 4
trans a: 1 3 4 2
trans b: 2 1 4 3
```

States are 1-based. The four header lines are required in this order and
are followed by exactly one `trans` line per letter.
"""

from os import PathLike
import re
from typing import Union

from .automata import Dfa
from .errors import DfaFileError


_HEADER_RE = re.compile(r"^(states|alphabet|initial|final):(.*)$")
_TRANS_RE = re.compile(r"^trans\s+([^\s:#]+)\s*:(.*)$")
_LETTER_RE = re.compile(r"^[^\s:#]+$")
_HEADERS = ("states", "alphabet", "initial", "final")

PathType = Union[str, PathLike]


def _states(text: str, count: int, lineno: int) -> list[int]:
    result = []
    for name in text.split():
        if not name.isdigit():
            raise DfaFileError(f"{name!r} is not a state number", lineno)
        state = int(name)
        if not 1 <= state <= count:
            raise DfaFileError(f"state {state} is out of range 1..{count}", lineno)
        result.append(state - 1)
    return result


def parse_dfa_file(text: str) -> Dfa:
    """
    Return the DFA described by `text`.
    """
    raw_lines = text.splitlines()
    end_line = max(len(raw_lines), 1)
    lines = []
    for lineno, raw in enumerate(raw_lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    headers: dict[str, str] = {}
    for expected, (lineno, line) in zip(_HEADERS, lines):
        match = _HEADER_RE.match(line)
        if match is None or match.group(1) != expected:
            raise DfaFileError(f"expected a {expected!r} line", lineno)
        headers[expected] = match.group(2).strip()
    if len(headers) < len(_HEADERS):
        missing = _HEADERS[len(headers)]
        raise DfaFileError(f"missing {missing!r} line", end_line)
    header_lines = dict(zip(_HEADERS, (lineno for lineno, _ in lines)))

    count_text = headers["states"]
    if not count_text.isdigit() or int(count_text) < 1:
        raise DfaFileError(
            f"state count must be a positive integer, got {count_text!r}",
            header_lines["states"],
        )
    count = int(count_text)

    alphabet = headers["alphabet"].split()
    if not alphabet:
        raise DfaFileError("the alphabet is empty", header_lines["alphabet"])
    for letter in alphabet:
        if not _LETTER_RE.match(letter):
            raise DfaFileError(f"invalid letter {letter!r}", header_lines["alphabet"])
    if len(set(alphabet)) != len(alphabet):
        raise DfaFileError("the alphabet repeats a letter", header_lines["alphabet"])

    initial = _states(headers["initial"], count, header_lines["initial"])
    if len(initial) != 1:
        raise DfaFileError(
            "exactly one initial state is required", header_lines["initial"],
        )
    finals = _states(headers["final"], count, header_lines["final"])

    delta: dict[str, list[int]] = {}
    for lineno, line in lines[len(_HEADERS):]:
        match = _TRANS_RE.match(line)
        if match is None:
            raise DfaFileError(f"expected a 'trans' line, got {line!r}", lineno)
        letter = match.group(1)
        if letter not in alphabet:
            raise DfaFileError(f"letter {letter!r} is not in the alphabet", lineno)
        if letter in delta:
            raise DfaFileError(f"second 'trans' line for letter {letter!r}", lineno)
        images = _states(match.group(2), count, lineno)
        if len(images) != count:
            raise DfaFileError(
                f"letter {letter!r} has {len(images)} images, expected {count}",
                lineno,
            )
        delta[letter] = images
    for letter in alphabet:
        if letter not in delta:
            raise DfaFileError(
                f"missing 'trans' line for letter {letter!r}", end_line,
            )
    return Dfa(count, alphabet, delta, initial=initial[0], finals=finals)


def format_dfa_file(d: Dfa) -> str:
    """
    Return the canonical text of `d`: finals sorted, letters in alphabet
    order.
    """
    def states(values) -> str:
        return " ".join(str(state + 1) for state in values)

    lines = [
        f"states: {d.state_count}",
        f"alphabet: {' '.join(d.alphabet)}",
        f"initial: {d.initial + 1}",
        f"final: {states(sorted(d.finals))}".rstrip(),
    ]
    for letter in d.alphabet:
        lines.append(f"trans {letter}: {states(d.delta[letter])}")
    return "\n".join(lines) + "\n"


def read_dfa_file(path: PathType) -> Dfa:
    with open(path, encoding="utf-8") as f:
        return parse_dfa_file(f.read())


def write_dfa_file(path: PathType, d: Dfa) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_dfa_file(d))
