"""Exhaustive checks of the Fibonacci bound on the period of a word given by k forbids.

A word of least period n whose reduced forbidden system has k elements
satisfies n <= phi_k, and the Fibonacci words reach it. The searches here run
over every shift class of primitive words up to a period cap, so their cost
grows like m^n for an m-letter alphabet; ``budget`` caps that sum.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

from .antidictionary import codelength
from .words import Alphabet, PeriodicWord, as_alphabet, fibonacci_number, fibonacci_word

DEFAULT_BUDGET = 5_000_000


class BudgetExceededError(RuntimeError):
    pass


class InconclusiveError(ValueError):
    pass


def lyndon_words(alphabet: Alphabet, n: int) -> Iterator[str]:
    """Lyndon words of length exactly ``n`` in lexicographic order (FKM / Duval)."""
    m = len(alphabet)
    symbols = alphabet.symbols
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == n:
            yield "".join(symbols[i] for i in w)
        # Extend periodically to length n, then strip trailing maximal letters.
        size = len(w)
        while len(w) < n:
            w.append(w[len(w) - size])
        while w and w[-1] == m - 1:
            w.pop()


def enumerate_primitive_words(alphabet: Alphabet | str, n: int) -> list[PeriodicWord]:
    """One canonical representative per shift class of primitive period-``n`` words."""
    if n < 1:
        raise ValueError("period must be at least 1")
    alphabet = as_alphabet(alphabet)
    return [PeriodicWord(alphabet, p) for p in lyndon_words(alphabet, n)]


def necklace_count(m: int, n: int) -> int:
    """Number of aperiodic necklaces of length ``n`` over ``m`` letters."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * m ** (n // d)
    return total // n


def _mobius(d: int) -> int:
    result, p = 1, 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    return -result if d > 1 else result


def search_cost(m: int, n_max: int) -> int:
    return sum(m ** n for n in range(1, n_max + 1))


def _check_budget(alphabet: Alphabet, n_max: int, budget: int) -> None:
    if budget <= 0:
        raise ValueError("budget must be positive")
    cost = search_cost(len(alphabet), n_max)
    if cost > budget:
        raise BudgetExceededError(
            f"exhaustive search over {len(alphabet)} letters up to n={n_max} "
            f"costs {cost} > budget {budget}"
        )


def codelengths(words: Sequence[PeriodicWord], jobs: int = 1) -> list[int]:
    if jobs <= 1 or len(words) < 256:
        return [codelength(w) for w in words]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(codelength, words, chunksize=64))


@dataclass(frozen=True)
class BoundRow:
    n: int
    min_codelength: int
    extremal_words: tuple[PeriodicWord, ...]
    word_count: int

    @property
    def fib_bound_ok(self) -> bool:
        return self.n <= fibonacci_number(self.min_codelength)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min_codelength": self.min_codelength,
            "extremal_words": [w.period for w in self.extremal_words],
            "word_count": self.word_count,
            "fib_bound_ok": self.fib_bound_ok,
        }


def codelength_table(
    alphabet: Alphabet | str, n_max: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> list[BoundRow]:
    alphabet = as_alphabet(alphabet)
    _check_budget(alphabet, n_max, budget)
    rows = []
    for n in range(1, n_max + 1):
        words = enumerate_primitive_words(alphabet, n)
        ks = codelengths(words, jobs)
        best = min(ks)
        minimizers = tuple(w for w, k in zip(words, ks) if k == best)
        rows.append(BoundRow(n, best, minimizers, len(words)))
    return rows


def bound_violations(
    alphabet: Alphabet | str, n_max: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> tuple[int, list[tuple[PeriodicWord, int]]]:
    """Check n <= phi_codelength for every primitive word up to ``n_max``.

    Returns the number of words examined and the offending (word, codelength) pairs.
    """
    alphabet = as_alphabet(alphabet)
    _check_budget(alphabet, n_max, budget)
    examined, bad = 0, []
    for n in range(1, n_max + 1):
        words = enumerate_primitive_words(alphabet, n)
        for w, k in zip(words, codelengths(words, jobs)):
            examined += 1
            if n > fibonacci_number(k):
                bad.append((w, k))
    return examined, bad


def max_period_for_codelength(
    alphabet: Alphabet | str, k: int, n_cap: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> int:
    """Largest period n <= ``n_cap`` realized by a word with at most ``k`` forbids."""
    alphabet = as_alphabet(alphabet)
    bound = fibonacci_number(k)
    if n_cap < bound:
        raise InconclusiveError(f"cap {n_cap} is below phi_{k} = {bound}; the answer could be cut off")
    _check_budget(alphabet, n_cap, budget)
    for n in range(n_cap, 0, -1):
        words = enumerate_primitive_words(alphabet, n)
        if any(c <= k for c in codelengths(words, jobs)):
            return n
    return 0


@dataclass(frozen=True)
class TightnessRow:
    k: int
    word: str
    period: int
    phi_k: int
    codelength: int

    @property
    def ok(self) -> bool:
        return self.period == self.phi_k and self.codelength == self.k


def verify_tightness(k_max: int, k_min: int = 2) -> list[TightnessRow]:
    """Period and codelength of the Fibonacci words l_k for k_min <= k <= k_max."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    rows = []
    for k in range(k_min, k_max + 1):
        w = fibonacci_word(k)
        rows.append(TightnessRow(k, w.period, w.n, fibonacci_number(k), codelength(w)))
    return rows


def rows_to_tsv(rows: Sequence[BoundRow]) -> str:
    lines = ["n\tmin_k\tcount_of_minimizers\tsample_word\tfib_bound_ok"]
    for r in rows:
        sample = r.extremal_words[0].period if r.extremal_words else ""
        lines.append(f"{r.n}\t{r.min_codelength}\t{len(r.extremal_words)}\t{sample}\t{str(r.fib_bound_ok).lower()}")
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Sequence[BoundRow]) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2)


def tightness_to_dict(row: TightnessRow) -> dict:
    return dict(asdict(row), ok=row.ok)
