"""Brute-force reference implementations, independent of the library code paths."""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def rotations(word: str) -> list[str]:
    return [word[i:] + word[:i] for i in range(len(word))]


def is_primitive(word: str) -> bool:
    n = len(word)
    return all(word != word[:d] * (n // d) for d in range(1, n) if n % d == 0)


def root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    raise AssertionError


def canonical(word: str, alphabet: str) -> str:
    key = lambda s: [alphabet.index(c) for c in s]  # noqa: E731
    return min(rotations(root(word)), key=key)


@lru_cache(maxsize=None)
def primitive_classes(alphabet: str, n: int) -> tuple[str, ...]:
    """Canonical periods of length n, by generate-and-canonicalize."""
    found = {canonical("".join(p), alphabet) for p in product(alphabet, repeat=n)}
    return tuple(sorted(c for c in found if len(c) == n))


def all_words_upto(alphabet: str, length: int) -> list[str]:
    return [""] + ["".join(p) for L in range(1, length + 1) for p in product(alphabet, repeat=L)]


def factor_set(period: str, max_len: int) -> set[str]:
    text = period * (max_len // len(period) + 2)
    return {text[i:i + L] for i in range(len(period)) for L in range(max_len + 1)}


def proper_factors(s: str) -> set[str]:
    return {s[i:j] for i in range(len(s) + 1) for j in range(i, len(s) + 1)} - {s}


def brute_maws(period: str, alphabet: str) -> set[str]:
    """Every word of length <= n+1 absent from period^inf with all proper factors present."""
    n = len(period)
    present = factor_set(period, n + 1)
    return {
        s
        for s in all_words_upto(alphabet, n + 1)[1:]
        if s not in present and proper_factors(s) <= present
    }


def brute_avoiders(forbidden, alphabet: str, max_period: int) -> list[str]:
    """Canonical periods up to max_period whose bi-infinite word contains no forbidden word."""
    longest = max((len(s) for s in forbidden), default=0)
    out = []
    for n in range(1, max_period + 1):
        for p in primitive_classes(alphabet, n):
            text = p * (longest // n + 2)
            if not any(s in text for s in forbidden):
                out.append(p)
    return out


def forbidden_systems(alphabet: str, total: int) -> list[tuple[str, ...]]:
    """Every set of distinct nonempty words with total length <= total."""
    words = all_words_upto(alphabet, total)[1:]
    out: list[tuple[str, ...]] = []

    def rec(start: int, budget: int, chosen: list[str]) -> None:
        out.append(tuple(chosen))
        for j in range(start, len(words)):
            if len(words[j]) <= budget:
                chosen.append(words[j])
                rec(j + 1, budget - len(words[j]), chosen)
                chosen.pop()

    rec(0, total, [])
    return out


def fib(k: int) -> int:
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a
