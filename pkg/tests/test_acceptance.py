"""Exit criteria for the package. Each test records one PASS/FAIL line in the
``acceptance criteria`` section of the pytest terminal summary."""

from codelength.antidictionary import ForbiddenSystem, minimal_forbidden_words
from codelength.automaton import DefinednessVerdict, avoids, classify
from codelength.extremal import bound_violations, max_period_for_codelength, verify_tightness
from codelength.rauzy import level_stats, rauzy_graph, verify_identities
from codelength.words import canonicalize

from oracles import brute_avoiders, fib, forbidden_systems, primitive_classes


def maw(period):
    return minimal_forbidden_words(canonicalize(period, "ab")).as_set()


def test_1_golden_sets(criterion):
    criterion["limit"] = 1.0
    assert maw("aabab") == {"bb", "aaa", "aabaa", "babab"}
    assert maw("ab") == {"aa", "bb"}
    for n in range(3, 9):
        expected = {"a" * n, "bb"} | {"b" + "a" * k + "b" for k in range(1, n - 1)}
        got = maw("a" * (n - 1) + "b")
        assert got == expected, n
        assert len(got) == n
    criterion["detail"] = "aabab, ab, a^(n-1)b for n=3..8"


def test_2_round_trip(criterion):
    criterion["limit"] = 30.0
    count = 0
    for n in range(1, 13):
        for p in primitive_classes("ab", n):
            w = canonicalize(p, "ab")
            assert classify(minimal_forbidden_words(w)) == DefinednessVerdict("unique", w), p
            count += 1
    assert count == 747
    criterion["detail"] = f"{count} shift classes, n <= 12"


def _stats(w, maws):
    return [level_stats(rauzy_graph(w, k), w, maws) for k in range(w.n + 3)]


def test_3_binary_identities(criterion):
    criterion["limit"] = 60.0
    failures = []
    words = 0
    for n in range(1, 13):
        for p in primitive_classes("ab", n):
            w = canonicalize(p, "ab")
            maws = minimal_forbidden_words(w)
            st = _stats(w, maws)
            for k in range(n):
                m = sum(1 for s in maws if len(s) == k + 2)
                if st[k + 1].e_count != st[k].e_count + 2 * st[k].crossroads + st[k].in_forks - m:
                    failures.append((p, "edges", k))
                if st[k + 1].inc - st[k].inc != st[k].crossroads - m:
                    failures.append((p, "inc", k))
            if len(maws) != 1 + sum(s.crossroads for s in st[:n]):
                failures.append((p, "|S|", None))
            if n != 1 + sum(s.crossroads + s.in_forks for s in st[:n]):
                failures.append((p, "n", None))
            for s in st[n:]:
                if (s.e_count, s.crossroads, s.in_forks) != (n, 0, 0):
                    failures.append((p, "terminal", s.k))
            if not verify_identities(w).ok:
                failures.append((p, "report", None))
            words += 1
    assert failures == []
    criterion["detail"] = f"{words} words, zero failures"


def test_4_general_recurrence_ternary(criterion):
    criterion["limit"] = 60.0
    failures = []
    words = 0
    for n in range(1, 9):
        for p in primitive_classes("abc", n):
            w = canonicalize(p, "abc")
            maws = minimal_forbidden_words(w)
            st = _stats(w, maws)
            for k in range(n + 2):
                m = sum(1 for s in maws if len(s) == k + 2)
                indeg, outdeg = rauzy_graph(w, k).indegrees(), rauzy_graph(w, k).outdegrees()
                path2 = sum(indeg[v] * outdeg[v] for v in indeg)
                if st[k + 1].e_count != path2 - m:
                    failures.append((p, k))
            words += 1
    assert failures == []
    criterion["detail"] = f"{words} ternary words, zero failures"


def test_5_fibonacci_bound(criterion):
    criterion["limit"] = 300.0
    binary_count, binary_bad = bound_violations("ab", 16)
    ternary_count, ternary_bad = bound_violations("abc", 9)
    assert binary_bad == [] and ternary_bad == []
    criterion["detail"] = f"{binary_count} binary (n<=16) + {ternary_count} ternary (n<=9) words, zero violations"


def test_6_tightness(criterion):
    criterion["limit"] = 300.0
    rows = verify_tightness(18)
    assert [(r.k, r.period, r.codelength) for r in rows] == [(k, fib(k), k) for k in range(2, 19)]
    observed = [max_period_for_codelength("ab", k, fib(k) + 3) for k in range(2, 7)]
    assert observed == [2, 3, 5, 8, 13]
    criterion["detail"] = "l_2..l_18 tight; max periods 2, 3, 5, 8, 13"


def test_7_leave_one_out(criterion):
    criterion["limit"] = 60.0
    checked = 0
    for n in range(1, 9):
        for p in primitive_classes("ab", n):
            w = canonicalize(p, "ab")
            S = minimal_forbidden_words(w)
            for s in S:
                verdict = classify(S.without(s))
                assert verdict != DefinednessVerdict("unique", w), (p, s)
                checked += 1
    criterion["detail"] = f"{checked} deletions"


def test_8_classifier_oracle(criterion):
    criterion["limit"] = 300.0
    systems = forbidden_systems("ab", 8)
    tally = {"none": 0, "unique": 0, "multiple": 0}
    for words in systems:
        S = ForbiddenSystem.of(words, "ab")
        verdict = classify(S)
        found = brute_avoiders(S.words, "ab", 10)
        tally[verdict.tag] += 1
        if verdict.tag == "none":
            assert found == [], words
        elif verdict.tag == "unique":
            assert found == [verdict.word.period], words
            assert avoids(verdict.word, S)
        else:
            # At most 9 live automaton states: two distinct cycles of length <= 9 exist.
            assert len(found) >= 2, words
    criterion["detail"] = f"{len(systems)} systems: " + ", ".join(f"{k}={v}" for k, v in tally.items())
