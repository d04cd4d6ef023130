"""Alphabets, canonical periodic words and their factor sets.

A bi-infinite periodic word is stored as its primitive period, rotated to
the lexicographically least rotation with respect to the alphabet order.
Finite words are plain ``str`` values; every symbol is one code point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

FIBONACCI_CAP = 90


class WordError(ValueError):
    """Raised for malformed words or symbols outside the alphabet."""


@dataclass(frozen=True)
class Alphabet:
    symbols: str

    def __post_init__(self) -> None:
        if not self.symbols:
            raise WordError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise WordError(f"alphabet {self.symbols!r} has duplicate symbols")

    @classmethod
    def infer(cls, *words: str) -> Alphabet:
        """Sorted set of the characters used by ``words``."""
        used = sorted(set("".join(words)))
        return cls("".join(used))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return isinstance(symbol, str) and len(symbol) == 1 and symbol in self.symbols

    def rank(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def check(self, word: str) -> None:
        for ch in word:
            if ch not in self.symbols:
                raise WordError(f"symbol {ch!r} of {word!r} is not in alphabet {self.symbols!r}")

    def sort_key(self, word: str) -> tuple[int, tuple[int, ...]]:
        """Order by length, then lexicographically in alphabet order."""
        return len(word), tuple(self.symbols.index(ch) for ch in word)

    def _in_codepoint_order(self) -> bool:
        return all(a < b for a, b in zip(self.symbols, self.symbols[1:]))


def least_rotation(word: str, alphabet: Alphabet) -> str:
    if alphabet._in_codepoint_order():
        return _least_rotation(word)
    # Relabel so that code point order matches alphabet order.
    ranked = "".join(chr(0x100 + alphabet.rank(ch)) for ch in word)
    best = _least_rotation(ranked)
    return "".join(alphabet.symbols[ord(ch) - 0x100] for ch in best)


def _least_rotation(word: str) -> str:
    # Minimal cyclic shift via Lyndon factorization of word+word, O(n).
    doubled = word + word
    n = len(word)
    i = start = 0
    while i < n:
        start = i
        j, k = i + 1, i
        while j < 2 * n and doubled[k] <= doubled[j]:
            k = i if doubled[k] < doubled[j] else k + 1
            j += 1
        while i <= k:
            i += j - k
    return doubled[start:start + n]


def primitive_root(word: str) -> str:
    """Shortest ``u`` with ``word == u * t``."""
    if not word:
        raise WordError("the empty word has no primitive root")
    p = (word + word).find(word, 1)
    return word[:p]


@dataclass(frozen=True)
class PeriodicWord:
    """The bi-infinite word ``...ppp...`` for a primitive, least-rotation ``period``."""

    alphabet: Alphabet
    period: str

    def __post_init__(self) -> None:
        if not self.period:
            raise WordError("period must be nonempty")
        self.alphabet.check(self.period)
        if primitive_root(self.period) != self.period:
            raise WordError(f"period {self.period!r} is not primitive")
        if least_rotation(self.period, self.alphabet) != self.period:
            raise WordError(f"period {self.period!r} is not the least rotation")

    def __len__(self) -> int:
        return len(self.period)

    def __str__(self) -> str:
        return self.period

    @property
    def n(self) -> int:
        return len(self.period)

    def window(self, length: int) -> str:
        """A finite block of the word long enough to hold every factor of ``length``."""
        copies = (length + self.n - 1) // self.n + 1
        return self.period * copies


def canonicalize(raw: str, alphabet: Alphabet | str | None = None) -> PeriodicWord:
    """Canonical representative of the shift class of ``raw``^∞."""
    if not raw:
        raise WordError("cannot canonicalize the empty word")
    alphabet = as_alphabet(alphabet, raw)
    alphabet.check(raw)
    root = primitive_root(raw)
    return PeriodicWord(alphabet, least_rotation(root, alphabet))


def as_alphabet(alphabet: Alphabet | str | None, *words: str) -> Alphabet:
    if alphabet is None:
        return Alphabet.infer(*words)
    if isinstance(alphabet, Alphabet):
        return alphabet
    return Alphabet(alphabet)


def factors(w: PeriodicWord, j: int) -> set[str]:
    """All length-``j`` factors of ``w`` (``{""}`` when ``j == 0``)."""
    if j < 0:
        raise ValueError("factor length must be non-negative")
    if j == 0:
        return {""}
    text = w.window(j)
    return {text[i:i + j] for i in range(w.n)}


def is_factor(w: PeriodicWord, s: str) -> bool:
    if not s:
        return True
    return s in w.window(len(s))


def fibonacci_number(k: int) -> int:
    """phi_k with phi_0 = phi_1 = 1."""
    if k < 0:
        raise ValueError("index must be non-negative")
    if k > FIBONACCI_CAP:
        raise OverflowError(f"index {k} exceeds cap {FIBONACCI_CAP}")
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci_string(k: int) -> str:
    """The raw word l_k: l_0 = a, l_1 = b, l_{i+1} = l_i l_{i-1}."""
    if k < 0:
        raise ValueError("index must be non-negative")
    prev, cur = "a", "b"
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, cur + prev
    return cur


def fibonacci_word(k: int, alphabet: Alphabet | str = "ab") -> PeriodicWord:
    return canonicalize(fibonacci_string(k), alphabet)


def all_words(alphabet: Iterable[str], length: int) -> Iterable[str]:
    """Every word of ``length`` over ``alphabet`` in lexicographic order."""
    for letters in product(list(alphabet), repeat=length):
        yield "".join(letters)
