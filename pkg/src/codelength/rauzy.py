"""Rauzy graphs of a periodic word and the counting identities along their evolution.

Level ``k`` has the length-``k`` factors as vertices and the length-``k+1``
factors as edges, so ``G_0`` is the single vertex ``""`` with one loop per
occurring letter. Every 2-edge path of ``G_k`` spells a word of length
``k+2`` which is either an edge of ``G_{k+1}`` or a minimal absent word.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from .antidictionary import minimal_forbidden_words
from .words import PeriodicWord, factors, is_factor


@dataclass(frozen=True)
class RauzyGraph:
    level: int
    vertices: frozenset[str]
    edges: frozenset[str]

    def source(self, edge: str) -> str:
        return edge[:-1]

    def target(self, edge: str) -> str:
        return edge[1:]

    def indegrees(self) -> Counter:
        deg = Counter({v: 0 for v in self.vertices})
        deg.update(e[1:] for e in self.edges)
        return deg

    def outdegrees(self) -> Counter:
        deg = Counter({v: 0 for v in self.vertices})
        deg.update(e[:-1] for e in self.edges)
        return deg

    def two_paths(self) -> list[str]:
        """Words of length level+2 spelled by consecutive edge pairs."""
        by_source: dict[str, list[str]] = {}
        for e in self.edges:
            by_source.setdefault(e[:-1], []).append(e)
        return sorted(e + f[-1] for e in self.edges for f in by_source.get(e[1:], ()))


def rauzy_graph(w: PeriodicWord, k: int) -> RauzyGraph:
    if k < 0:
        raise ValueError("level must be non-negative")
    return RauzyGraph(k, frozenset(factors(w, k)), frozenset(factors(w, k + 1)))


def evolve(g: RauzyGraph, w: PeriodicWord) -> tuple[RauzyGraph, set[str]]:
    """Next graph from 2-edge paths, together with the paths that were forbidden."""
    kept, removed = set(), set()
    for s in g.two_paths():
        (kept if is_factor(w, s) else removed).add(s)
    return RauzyGraph(g.level + 1, g.edges, frozenset(kept)), removed


@dataclass(frozen=True)
class LevelStats:
    k: int
    v_count: int
    e_count: int
    in_forks: int
    out_forks: int
    crossroads: int
    path2: int
    maw_count: int

    @property
    def inc(self) -> int:
        """Vertices of in-degree 2 in the binary case."""
        return self.in_forks + self.crossroads


def level_stats(g: RauzyGraph, w: PeriodicWord, maws=None) -> LevelStats:
    """Fork and crossroad counts of ``g``.

    A vertex is an in-fork when it has in-degree >= 2 and out-degree 1, an
    out-fork for the mirror case and a crossroad when both degrees are >= 2.
    Over two letters these are the (2,1), (1,2) and (2,2) vertices.
    """
    if maws is None:
        maws = minimal_forbidden_words(w)
    indeg, outdeg = g.indegrees(), g.outdegrees()
    i_k = o_k = c_k = 0
    path2 = 0
    for v in g.vertices:
        d_in, d_out = indeg[v], outdeg[v]
        path2 += d_in * d_out
        if d_in >= 2 and d_out >= 2:
            c_k += 1
        elif d_in >= 2:
            i_k += 1
        elif d_out >= 2:
            o_k += 1
    m = sum(1 for s in maws if len(s) == g.level + 2)
    return LevelStats(g.level, len(g.vertices), len(g.edges), i_k, o_k, c_k, path2, m)


@dataclass
class IdentityCheck:
    name: str
    k: int | None
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    word: str
    alphabet: str
    n: int
    binary: bool
    levels: list[LevelStats] = field(default_factory=list)
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.ok]

    def checks_at(self, k: int) -> list[IdentityCheck]:
        return [c for c in self.checks if c.k == k]

    def summary(self, name: str) -> IdentityCheck | None:
        for c in self.checks:
            if c.name == name and c.k is None:
                return c
        return None

    @property
    def sum_c(self) -> int:
        return sum(s.crossroads for s in self.levels[: self.n])

    @property
    def sum_ci(self) -> int:
        return sum(s.crossroads + s.in_forks for s in self.levels[: self.n])

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "alphabet": self.alphabet,
            "n": self.n,
            "binary": self.binary,
            "levels": [dict(asdict(s), inc=s.inc) for s in self.levels],
            "checks": [dict(asdict(c), ok=c.ok) for c in self.checks],
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_identities(w: PeriodicWord) -> IdentityReport:
    """Build G_0 .. G_n and check the evolution identities level by level.

    Every alphabet gets the general edge recurrence
    ``|E_{k+1}| = sum_v indeg(v) outdeg(v) - m_{k+2}``. Over exactly two
    letters the fork recurrences, the crossroad count of the reduced system
    and the period count are checked as well, plus the terminal shape at
    level n.
    """
    maws = minimal_forbidden_words(w)
    n = w.n
    binary = len(w.alphabet) == 2
    report = IdentityReport(w.period, w.alphabet.symbols, n, binary)

    g = rauzy_graph(w, 0)
    graphs = [g]
    removed_sets = []
    for _ in range(n):
        g, removed = evolve(g, w)
        graphs.append(g)
        removed_sets.append(removed)
    report.levels = [level_stats(h, w, maws) for h in graphs]
    add = report.checks.append

    for k in range(n):
        cur, nxt = report.levels[k], report.levels[k + 1]
        m = cur.maw_count
        add(IdentityCheck("removed=maws", k, len(removed_sets[k]), m))
        add(IdentityCheck("edges=path2-m", k, nxt.e_count, cur.path2 - m))
        if binary:
            add(IdentityCheck("edges=E+2c+i-m", k, nxt.e_count, cur.e_count + 2 * cur.crossroads + cur.in_forks - m))
            add(IdentityCheck("inc_next-inc=c-m", k, nxt.inc - cur.inc, cur.crossroads - m))
            add(IdentityCheck("in_forks=out_forks", k, cur.in_forks, cur.out_forks))

    last = report.levels[n]
    add(IdentityCheck("terminal_edges=n", n, last.e_count, n))
    add(IdentityCheck("terminal_forks", n, last.in_forks + last.out_forks + last.crossroads, 0))
    if binary:
        add(IdentityCheck("terminal_inc=0", n, last.inc, 0))
        add(IdentityCheck("|S|=1+sum_c", None, len(maws), 1 + report.sum_c))
        add(IdentityCheck("n=1+sum_(c+i)", None, n, 1 + report.sum_ci))
    return report


def _dot_id(label: str) -> str:
    return json.dumps(label if label else "ε", ensure_ascii=False)


def to_dot(g: RauzyGraph) -> str:
    lines = [f"digraph G{g.level} {{"]
    for v in sorted(g.vertices, key=lambda s: (len(s), s)):
        lines.append(f"  {_dot_id(v)};")
    for e in sorted(g.edges):
        lines.append(f"  {_dot_id(e[:-1])} -> {_dot_id(e[1:])} [label={_dot_id(e)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
