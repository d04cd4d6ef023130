"""Decide whether a forbidden system defines exactly one bi-infinite word.

The avoiding words are read off an Aho-Corasick automaton for the forbidden
patterns. After dropping the states that complete a forbidden word and
repeatedly pruning states with no predecessor or no successor, what is left
(the recurrent core) carries exactly the bi-infinite words avoiding the
system: the automaton state is a function of the letters already read, so
bi-infinite paths in the core and avoiding words are in bijection.

* empty core: nothing avoids the system;
* one simple cycle: a single periodic word, spelled by the cycle labels;
* anything else: at least two distinct words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .antidictionary import ForbiddenSystem
from .words import Alphabet, PeriodicWord, canonicalize


class NotDefinedError(ValueError):
    """The forbidden system does not define a unique word."""


class NoWordError(NotDefinedError):
    pass


class MultipleWordsError(NotDefinedError):
    pass


@dataclass(frozen=True)
class PatternAutomaton:
    """Failure-completed pattern automaton.

    State ``q`` stands for the word ``labels[q]``: the longest suffix of the
    input read so far that is a proper prefix of a pattern, or a full match.
    """

    alphabet: Alphabet
    labels: tuple[str, ...]
    delta: tuple[dict[str, int], ...]
    terminal: tuple[bool, ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def run(self, word: str, state: int = 0) -> int:
        for ch in word:
            state = self.delta[state][ch]
        return state

    def live_states(self) -> list[int]:
        return [q for q in range(self.size) if not self.terminal[q]]


def build_automaton(S: ForbiddenSystem) -> PatternAutomaton:
    alphabet = S.alphabet
    labels = [""]
    children: list[dict[str, int]] = [{}]
    terminal = [False]
    for s in dict.fromkeys(S.words):
        alphabet.check(s)
        q = 0
        for ch in s:
            nxt = children[q].get(ch)
            if nxt is None:
                nxt = len(labels)
                children[q][ch] = nxt
                labels.append(labels[q] + ch)
                children.append({})
                terminal.append(False)
            q = nxt
        terminal[q] = True

    # BFS over the trie: complete transitions through failure links and
    # inherit terminal flags from the failure target.
    delta: list[dict[str, int]] = [dict() for _ in labels]
    fail = [0] * len(labels)
    for a in alphabet:
        delta[0][a] = children[0].get(a, 0)
    queue = deque(children[0].values())
    while queue:
        q = queue.popleft()
        terminal[q] = terminal[q] or terminal[fail[q]]
        for a in alphabet:
            child = children[q].get(a)
            if child is None:
                delta[q][a] = delta[fail[q]][a]
            else:
                fail[child] = delta[fail[q]][a]
                delta[q][a] = child
                queue.append(child)
    return PatternAutomaton(alphabet, tuple(labels), tuple(delta), tuple(terminal))


def recurrent_core(automaton: PatternAutomaton, states: list[int] | None = None) -> dict[int, dict[str, int]]:
    """Live transitions among states lying on some bi-infinite path."""
    if states is None:
        states = automaton.live_states()
    alive = set(states)
    out = {q: {a: r for a, r in automaton.delta[q].items() if r in alive} for q in alive}
    preds: dict[int, list[int]] = {q: [] for q in alive}
    for q in alive:
        for r in out[q].values():
            preds[r].append(q)
    indeg = {q: len(preds[q]) for q in alive}
    outdeg = {q: len(out[q]) for q in alive}

    queue = deque(q for q in alive if indeg[q] == 0 or outdeg[q] == 0)
    while queue:
        q = queue.popleft()
        if q not in alive:
            continue
        alive.discard(q)
        for r in out[q].values():
            if r in alive:
                indeg[r] -= 1
                if indeg[r] == 0:
                    queue.append(r)
        for p in preds[q]:
            if p in alive:
                outdeg[p] -= 1
                if outdeg[p] == 0:
                    queue.append(p)

    return {q: {a: r for a, r in out[q].items() if r in alive} for q in sorted(alive)}


@dataclass(frozen=True)
class DefinednessVerdict:
    tag: str
    word: PeriodicWord | None = None
    witness: tuple[PeriodicWord, PeriodicWord] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.tag not in ("none", "unique", "multiple"):
            raise ValueError(f"bad verdict tag {self.tag!r}")
        if (self.tag == "unique") != (self.word is not None):
            raise ValueError("a word is present exactly for the unique verdict")

    def __str__(self) -> str:
        if self.tag == "unique":
            return f"UNIQUE {self.word}"
        return self.tag.upper()


def classify(S: ForbiddenSystem) -> DefinednessVerdict:
    automaton = build_automaton(S)
    core = recurrent_core(automaton)
    if not core:
        return DefinednessVerdict("none")
    if all(len(edges) == 1 for edges in core.values()) and _is_single_cycle(core):
        return DefinednessVerdict("unique", _cycle_word(core, next(iter(core)), S.alphabet))
    return DefinednessVerdict("multiple", witness=_witness(core, S.alphabet))


def _is_single_cycle(core: dict[int, dict[str, int]]) -> bool:
    start = next(iter(core))
    q, steps = start, 0
    while True:
        (q,) = core[q].values()
        steps += 1
        if q == start:
            return steps == len(core)
        if steps > len(core):
            return False


def _cycle_word(core: dict[int, dict[str, int]], start: int, alphabet: Alphabet) -> PeriodicWord:
    """Labels of the functional path from ``start`` until it closes a cycle."""
    seen: dict[int, int] = {}
    labels: list[str] = []
    q = start
    while q not in seen:
        seen[q] = len(labels)
        a, q = min(core[q].items())
        labels.append(a)
    return canonicalize("".join(labels[seen[q]:]), alphabet)


def _cycle_through(core: dict[int, dict[str, int]], start: int, first: str, alphabet: Alphabet) -> PeriodicWord | None:
    """Shortest cycle leaving ``start`` by ``first`` and returning to it."""
    origin = core[start][first]
    parent: dict[int, tuple[int, str] | None] = {origin: None}
    queue = deque([origin])
    while queue:
        q = queue.popleft()
        if q == start:
            labels = []
            while parent[q] is not None:
                prev, a = parent[q]
                labels.append(a)
                q = prev
            labels.append(first)
            return canonicalize("".join(reversed(labels)), alphabet)
        for a, r in sorted(core[q].items()):
            if r not in parent:
                parent[r] = (q, a)
                queue.append(r)
    return None


def _witness(core: dict[int, dict[str, int]], alphabet: Alphabet) -> tuple[PeriodicWord, PeriodicWord] | None:
    # Best effort: two distinct short cycles through a branching state, or
    # cycles from two different parts of the core.
    for q, edges in core.items():
        if len(edges) < 2:
            continue
        found = [c for a in sorted(edges) if (c := _cycle_through(core, q, a, alphabet)) is not None]
        distinct = list(dict.fromkeys(found))
        if len(distinct) >= 2:
            return distinct[0], distinct[1]
    cycles = list(dict.fromkeys(_cycle_word(core, q, alphabet) for q in core))
    if len(cycles) >= 2:
        return cycles[0], cycles[1]
    return None


def defined_word(S: ForbiddenSystem) -> PeriodicWord:
    verdict = classify(S)
    if verdict.tag == "none":
        raise NoWordError("no bi-infinite word avoids the system")
    if verdict.tag == "multiple":
        raise MultipleWordsError("more than one bi-infinite word avoids the system")
    return verdict.word


def avoids(w: PeriodicWord, S: ForbiddenSystem) -> bool:
    if not S.words:
        return True
    text = w.window(max(len(s) for s in S))
    return not any(s in text for s in S)
