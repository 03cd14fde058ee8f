"""Complete deterministic factor automata over the four directions L, R, U, D."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Final

from pinclass.errors import EmptyFactor, InfiniteLanguage, InvalidFactor

logger = logging.getLogger(__name__)

ALPHABET: Final[str] = "LRUD"
LETTER_INDEX: Final[dict[str, int]] = {letter: i for i, letter in enumerate(ALPHABET)}


@dataclass(frozen=True)
class FactorAutomaton:
    """A complete DFA; ``transitions[state][i]`` follows letter ``ALPHABET[i]``."""

    transitions: tuple[tuple[int, ...], ...]
    accepting: frozenset[int]
    start: int = 0

    @property
    def num_states(self) -> int:
        return len(self.transitions)

    def step(self, state: int, letter: str) -> int:
        return self.transitions[state][LETTER_INDEX[letter]]

    def run(self, word: str) -> int:
        state = self.start
        for letter in word:
            state = self.transitions[state][LETTER_INDEX[letter]]
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting

    def to_dot(self, name: str = "FactorAutomaton") -> str:
        """Graphviz source; accepting states are double circles."""
        lines = [
            f"digraph {name} {{",
            "  rankdir=LR;",
            '  init [shape=point, label=""];',
        ]
        for state in range(self.num_states):
            shape = "doublecircle" if state in self.accepting else "circle"
            lines.append(f"  {state} [shape={shape}];")
        lines.append(f"  init -> {self.start};")
        for state, row in enumerate(self.transitions):
            labels: dict[int, list[str]] = {}
            for index, target in enumerate(row):
                labels.setdefault(target, []).append(ALPHABET[index])
            for target, letters in labels.items():
                lines.append(f'  {state} -> {target} [label="{",".join(letters)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Lasso:
    """Witness of an infinite language: prefix + cycle * k + suffix is accepted."""

    prefix: str
    cycle: str
    suffix: str = ""

    def pumped(self, k: int) -> str:
        return self.prefix + self.cycle * k + self.suffix


def _letter_indices(factor: str) -> list[int]:
    if not factor:
        raise EmptyFactor()
    try:
        return [LETTER_INDEX[letter] for letter in factor]
    except KeyError as e:
        raise InvalidFactor(factor) from e


def _trie(factors: Iterable[str]) -> tuple[list[list[int]], list[bool]]:
    goto: list[list[int]] = [[-1] * len(ALPHABET)]
    terminal = [False]
    for factor in sorted(set(factors)):
        state = 0
        for index in _letter_indices(factor):
            child = goto[state][index]
            if child < 0:
                child = len(goto)
                goto.append([-1] * len(ALPHABET))
                terminal.append(False)
                goto[state][index] = child
            state = child
        terminal[state] = True
    return goto, terminal


def _complete(
    goto: list[list[int]], terminal: list[bool]
) -> tuple[list[int], list[bool]]:
    """Fill missing transitions through failure links, breadth first.

    Returns the failure links and, per state, whether some factor ends at the
    state or at one of its proper suffixes.
    """
    fail = [0] * len(goto)
    matched = list(terminal)
    queue: deque[int] = deque()
    for index, child in enumerate(goto[0]):
        if child < 0:
            goto[0][index] = 0
        else:
            queue.append(child)
    while queue:
        state = queue.popleft()
        matched[state] = matched[state] or matched[fail[state]]
        for index, child in enumerate(goto[state]):
            if child < 0:
                goto[state][index] = goto[fail[state]][index]
            else:
                fail[child] = goto[fail[state]][index]
                queue.append(child)
    return fail, matched


def build_factor_automaton(fs: Iterable[str]) -> FactorAutomaton:
    """DFA accepting the words that contain at least one word of fs as a factor.

    Raises:
        EmptyFactor: If fs contains the empty word
        InvalidFactor: If a factor uses a letter outside L, R, U, D
    """
    goto, terminal = _trie(fs)
    _, matched = _complete(goto, terminal)
    for state, is_match in enumerate(matched):
        if is_match:
            goto[state] = [state] * len(ALPHABET)
    automaton = FactorAutomaton(
        transitions=tuple(tuple(row) for row in goto),
        accepting=frozenset(
            state for state, is_match in enumerate(matched) if is_match
        ),
    )
    logger.debug(f"factor automaton: {automaton.num_states} states")
    return automaton


def complement(a: FactorAutomaton) -> FactorAutomaton:
    return FactorAutomaton(
        transitions=a.transitions,
        accepting=frozenset(range(a.num_states)) - a.accepting,
        start=a.start,
    )


def prune_subsumed(factors: Iterable[str]) -> frozenset[str]:
    """Drop every factor that has another factor as a proper factor.

    The recognized factor language is unchanged.
    """
    unique = set(factors)
    goto, terminal = _trie(unique)
    fail, matched = _complete(goto, terminal)
    kept = set()
    for factor in unique:
        state = 0
        subsumed = False
        indices = _letter_indices(factor)
        for position, index in enumerate(indices):
            state = goto[state][index]
            if position < len(indices) - 1 and matched[state]:
                subsumed = True
                break
        if not subsumed and not matched[fail[state]]:
            kept.add(factor)
    return frozenset(kept)


def accessible_states(a: FactorAutomaton) -> list[bool]:
    seen = [False] * a.num_states
    seen[a.start] = True
    queue = deque([a.start])
    while queue:
        state = queue.popleft()
        for target in a.transitions[state]:
            if not seen[target]:
                seen[target] = True
                queue.append(target)
    return seen


def coaccessible_states(a: FactorAutomaton) -> list[bool]:
    predecessors: list[list[int]] = [[] for _ in range(a.num_states)]
    for state, row in enumerate(a.transitions):
        for target in set(row):
            predecessors[target].append(state)
    seen = [False] * a.num_states
    queue: deque[int] = deque()
    for state in a.accepting:
        seen[state] = True
        queue.append(state)
    while queue:
        state = queue.popleft()
        for source in predecessors[state]:
            if not seen[source]:
                seen[source] = True
                queue.append(source)
    return seen


def _shortest_accepting_suffix(
    a: FactorAutomaton, origin: int, useful: list[bool]
) -> str:
    if origin in a.accepting:
        return ""
    parent: dict[int, tuple[int, str]] = {origin: (origin, "")}
    queue = deque([origin])
    while queue:
        state = queue.popleft()
        for index, target in enumerate(a.transitions[state]):
            if useful[target] and target not in parent:
                parent[target] = (state, ALPHABET[index])
                if target in a.accepting:
                    letters = []
                    while target != origin:
                        target, letter = parent[target]
                        letters.append(letter)
                    return "".join(reversed(letters))
                queue.append(target)
    raise AssertionError(f"state {origin} is co-accessible but accepts nothing")


def has_accessible_coaccessible_cycle(a: FactorAutomaton) -> Lasso | None:
    """A lasso through a cycle that is reachable and can reach acceptance.

    Returns None exactly when the language of ``a`` is finite. Runs one
    depth-first traversal restricted to states that are both accessible and
    co-accessible.
    """
    accessible = accessible_states(a)
    coaccessible = coaccessible_states(a)
    useful = [x and y for x, y in zip(accessible, coaccessible, strict=True)]
    if not useful[a.start]:
        return None

    # 0 unvisited, 1 on the current path, 2 finished
    colour = [0] * a.num_states
    depth: dict[int, int] = {a.start: 0}
    path_letters: list[str] = []
    stack: list[tuple[int, int]] = [(a.start, 0)]
    colour[a.start] = 1
    while stack:
        state, index = stack[-1]
        if index == len(ALPHABET):
            stack.pop()
            colour[state] = 2
            del depth[state]
            if path_letters:
                path_letters.pop()
            continue
        stack[-1] = (state, index + 1)
        target = a.transitions[state][index]
        if not useful[target]:
            continue
        if colour[target] == 1:
            entry = depth[target]
            cycle = "".join(path_letters[entry:]) + ALPHABET[index]
            return Lasso(
                prefix="".join(path_letters[:entry]),
                cycle=cycle,
                suffix=_shortest_accepting_suffix(a, target, useful),
            )
        if colour[target] == 0:
            colour[target] = 1
            depth[target] = len(stack)
            path_letters.append(ALPHABET[index])
            stack.append((target, 0))
    return None


def finite_language(a: FactorAutomaton) -> set[str]:
    """Every word accepted by ``a``.

    Raises:
        InfiniteLanguage: If the language is infinite
    """
    lasso = has_accessible_coaccessible_cycle(a)
    if lasso is not None:
        raise InfiniteLanguage(lasso)
    useful = coaccessible_states(a)
    words: set[str] = set()
    if not useful[a.start]:
        return words
    stack = [(a.start, "")]
    while stack:
        state, word = stack.pop()
        if state in a.accepting:
            words.add(word)
        for index, target in enumerate(a.transitions[state]):
            if useful[target]:
                stack.append((target, word + ALPHABET[index]))
    return words
