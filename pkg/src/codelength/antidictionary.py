"""Minimal absent words (the reduced forbidden system) of a periodic word."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .words import Alphabet, PeriodicWord, WordError, as_alphabet, factors, is_factor


@dataclass(frozen=True)
class ForbiddenSystem:
    """A finite collection of nonempty forbidden words over an alphabet.

    Words are kept sorted by length, then in alphabet order. Duplicates are
    preserved so that :func:`is_reduced` can reject them.
    """

    alphabet: Alphabet
    words: tuple[str, ...]

    def __post_init__(self) -> None:
        for s in self.words:
            if not s:
                raise WordError("forbidden words must be nonempty")
            self.alphabet.check(s)
        ordered = tuple(sorted(self.words, key=self.alphabet.sort_key))
        object.__setattr__(self, "words", ordered)

    @classmethod
    def of(cls, words: Iterable[str], alphabet: Alphabet | str | None = None) -> ForbiddenSystem:
        words = list(words)
        return cls(as_alphabet(alphabet, *words), tuple(words))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, s: object) -> bool:
        return s in self.words

    def as_set(self) -> set[str]:
        return set(self.words)

    def without(self, s: str) -> ForbiddenSystem:
        """Copy with one occurrence of ``s`` removed."""
        words = list(self.words)
        words.remove(s)
        return ForbiddenSystem(self.alphabet, tuple(words))

    def to_text(self) -> str:
        return "\n".join(self.words) + ("\n" if self.words else "")

    def to_json(self) -> str:
        return json.dumps({"alphabet": self.alphabet.symbols, "words": list(self.words)})

    @classmethod
    def from_json(cls, text: str) -> ForbiddenSystem:
        data = json.loads(text)
        return cls(Alphabet(data["alphabet"]), tuple(data["words"]))

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet | str | None = None) -> ForbiddenSystem:
        return cls.of((line.strip() for line in text.splitlines() if line.strip()), alphabet)


def minimal_forbidden_words(w: PeriodicWord, method: str = "rotations") -> ForbiddenSystem:
    """Every absent word of ``w`` whose proper factors all occur in ``w``.

    ``method="levels"`` walks the factor sets F_1, F_2, ... up to length n+1;
    ``method="rotations"`` (default) only visits the right-special factors
    via the sorted rotations of the period and scales to periods in the
    thousands.
    """
    if method == "levels":
        words = _maws_by_levels(w)
    elif method == "rotations":
        words = _maws_by_rotations(w)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ForbiddenSystem(w.alphabet, tuple(words))


def _absent_letters(w: PeriodicWord) -> list[str]:
    used = set(w.period)
    return [a for a in w.alphabet if a not in used]


def _maws_by_levels(w: PeriodicWord) -> list[str]:
    out = _absent_letters(w)
    prev = factors(w, 1)
    letters = sorted(prev)
    for j in range(2, w.n + 2):
        cur = factors(w, j)
        for x in prev:
            for a in letters:
                s = x + a
                if s not in cur and s[1:] in prev:
                    out.append(s)
        prev = cur
    return out


def _maws_by_rotations(w: PeriodicWord) -> list[str]:
    # A MAW a.u.b needs u right-special; these are exactly the longest common
    # prefixes of rotations adjacent in sorted order.
    p, n = w.period, w.n
    doubled = p + p
    order = sorted(range(n), key=lambda i: doubled[i:i + n])
    lcp = [0] * n
    for r in range(1, n):
        lcp[r] = _common_prefix(doubled, order[r - 1], order[r], n)

    out = _absent_letters(w)
    seen: set[tuple[int, int]] = set()
    for r in range(1, n):
        ell = lcp[r]
        lo = r - 1
        while lo > 0 and lcp[lo] >= ell:
            lo -= 1
        hi = r
        while hi + 1 < n and lcp[hi + 1] >= ell:
            hi += 1
        if (lo, ell) in seen:
            continue
        seen.add((lo, ell))
        pairs = set()
        for t in range(lo, hi + 1):
            i = order[t]
            pairs.add((p[i - 1], doubled[i + ell]))
        u = doubled[order[r]:order[r] + ell]
        left = {a for a, _ in pairs}
        right = {b for _, b in pairs}
        for a in left:
            for b in right:
                if (a, b) not in pairs:
                    out.append(a + u + b)
    return out


def _common_prefix(text: str, i: int, j: int, limit: int) -> int:
    lo, hi = 0, limit
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if text[i:i + mid] == text[j:j + mid]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def codelength(w: PeriodicWord) -> int:
    """Size of the smallest forbidden system defining ``w``."""
    return len(minimal_forbidden_words(w))


def is_reduced(S: ForbiddenSystem, w: PeriodicWord) -> bool:
    """Duplicate-free, every word absent from ``w`` and every proper factor present.

    Whether ``S`` actually defines ``w`` is left to :func:`classify`.
    """
    if any(count > 1 for count in Counter(S.words).values()):
        return False
    for s in S:
        if is_factor(w, s):
            return False
        # Proper factors are present iff the two maximal ones are.
        if not (is_factor(w, s[:-1]) and is_factor(w, s[1:])):
            return False
    return True


def reduce(S: ForbiddenSystem) -> ForbiddenSystem:
    """The reduced system equivalent to ``S``.

    Raises :class:`~codelength.automaton.NoWordError` or
    :class:`~codelength.automaton.MultipleWordsError` when ``S`` does not
    define a single word.
    """
    from .automaton import defined_word

    return minimal_forbidden_words(defined_word(S))
