"""
Acceptance checks, one test per criterion.  Each prints a PASS or FAIL line
before asserting, so ``pytest -s tests/test_acceptance.py`` (or running
this file directly) gives a one-line-per-criterion summary.
"""

from __future__ import annotations

import sys
from itertools import combinations_with_replacement

import pytest

from skewnichols.braided import gen, is_zero_in_nichols, sbar, word_vector
from skewnichols.chaincomb import unique_subsequences
from skewnichols.coinvariant import Polynomial, skew_div_diff, skew_positive_operator
from skewnichols.interval2 import absurd_hypothesis, is_shuffle, simple_product_check
from skewnichols.rootsys import build_root_system, classify_negative_pairs, find_orthogonal_witness
from skewnichols.skewcalc import (c_invariant_pairing, chain_index_sets, monomial_forms_order2,
                                  monomial_necessary_check, nichols_equal, skew,
                                  skew_equal_criterion, skew_positive)
from skewnichols.suites import run_suite
from skewnichols.weylgroup import from_word, weyl_group

E6_PAIRS = [((1, 1, 2, 2, 2, 1), 3)]
E7_PAIRS = [
    ((1, 1, 2, 2, 2, 1, 0), 3), ((1, 1, 2, 2, 2, 1, 1), 3),
    ((1, 1, 2, 2, 2, 2, 1), 3), ((1, 1, 2, 3, 2, 2, 1), 4),
    ((1, 2, 2, 3, 2, 2, 1), 4), ((1, 2, 2, 3, 3, 2, 1), 3),
    ((1, 2, 2, 4, 3, 2, 1), 2),
]
E8_MISSING = [((2, 3, 4, 5, 4, 3, 2, 1), 3)]


@pytest.fixture
def verdict(capsys):
    def record(n, what, checks):
        failed = [name for name, ok in checks if not ok]
        line = f"{'FAIL' if failed else 'PASS'} criterion {n}: {what}"
        if failed:
            line += " [" + "; ".join(failed) + "]"
        with capsys.disabled():
            print(f"\n{line}")
        assert not failed, line
    return record


def _scan(suite, t, **kw):
    r = run_suite(suite, t) if not kw else run_suite(suite, t, _opts(**kw))
    return r


def _opts(**kw):
    from skewnichols.suites import Options
    return Options(**kw)


def test_criterion_1_route_agreement(verdict):
    checks = []
    for t in ("A1", "A2", "A3", "B2"):
        g = weyl_group(build_root_system(t))
        r = _scan("positivity", t)
        intervals = sum(len(g.below(w)) for w in range(len(g)))
        checks.append((f"{t}: {len(r.violations)} violations", r.status == "pass"))
        checks.append((f"{t}: {r.cases_checked} of {intervals} pairs", r.cases_checked == intervals))
    verdict(1, "all routes agree and are nonzero for every v <= w in A1, A2, A3, B2", checks)


def test_criterion_2_bar_antipode_fixes_longest(verdict):
    checks = []
    for t in ("A2", "A3", "B2"):
        g = weyl_group(build_root_system(t))
        words = g.reduced_words(g.longest) if t != "A3" else [g.word(g.longest)]
        for word in words:
            xo = word_vector(g.rs, word)
            checks.append((f"{t} word {word}", is_zero_in_nichols(g.rs, sbar(g.rs, xo) - xo)))
    verdict(2, "bar antipode fixes x_{w_o} in A2, A3, B2 (all reduced words in A2, B2)", checks)


def test_criterion_3_one_property(verdict):
    checks = []
    for t in ("A3", "B3"):
        r = _scan("one-property", t, route="chains")
        checks.append((f"{t} chains: {len(r.violations)} violations", r.status == "pass"))
    for t in ("A2", "B2"):
        r = _scan("one-property", t, route="pairing")
        checks.append((f"{t} pairing: {len(r.violations)} violations", r.status == "pass"))
    verdict(3, "c = 1 for every v <= w (chains on A3, B3; pairing on A2, B2)", checks)


def test_criterion_4_monomial_order_two(verdict):
    checks = []
    for t in ("A3", "A4", "D4"):
        r = _scan("monomial2", t)
        checks.append((f"{t}: {len(r.violations)} violations", r.status == "pass"))
    rs = build_root_system("B2")
    v, w = from_word(rs, (1,)), from_word(rs, (1, 0, 1))
    want = gen(rs, (1, 1)) * gen(rs, (1, 2)) + gen(rs, (1, 0)) * gen(rs, (1, 1))
    x = skew_positive(rs, w, v).rep
    checks.append(("B2 two-term expression", x == want))
    checks.append(("B2 agrees with the coproduct route",
                   nichols_equal(rs, x, skew(rs, w, v, "coproduct").rep)))
    checks.append(("B2 has no monomial form", monomial_forms_order2(rs, x) == []))
    verdict(4, "length-2 intervals factor in A3, A4, D4; B2 example is two-term", checks)


def test_criterion_5_length_three_failure(verdict):
    rs = build_root_system("A3")
    v, w = from_word(rs, (0, 2)), from_word(rs, (0, 1, 2, 1, 0))
    roots, ok = monomial_necessary_check(rs, w, v)
    verdict(5, "A3 length-3 interval has 4 cover roots and fails the necessary check",
            [(f"{len(roots)} roots", len(roots) == 4), ("check fails", not ok)])


def test_criterion_6_c_one_but_unequal(verdict):
    rs = build_root_system("A3")
    v, w = from_word(rs, (1, 0)), from_word(rs, (0, 1, 2, 1, 0))
    v2, w2 = from_word(rs, (1, 0, 1)), from_word(rs, (0, 1, 2, 1, 0, 1))
    sets = chain_index_sets(rs, w, v, w2, v2, (0, 1, 2, 1, 0, 1))
    checks = [
        (f"index sets {sets}", sets == [(1, 3, 4)]),
        ("pairing gives 1", c_invariant_pairing(rs, w, v, w2, v2) == 1),
        ("criterion says unequal", not skew_equal_criterion(rs, w, v, w2, v2)),
        ("Nichols algebra says unequal",
         not nichols_equal(rs, skew_positive(rs, w, v).rep, skew_positive(rs, w2, v2).rep)),
    ]
    verdict(6, "c = 1 with the single index set {1,3,4}, yet the skew elements differ", checks)


def test_criterion_7_classical_layer(verdict):
    checks = []
    for t in ("A2", "A3", "B2"):
        r = _scan("leibniz", t, pairs=200, seed=0)
        checks.append((f"{t}: {len(r.violations)} of {r.cases_checked} fail",
                       r.status == "pass" and r.cases_checked > 0))
    g = weyl_group(build_root_system("A2"))
    E = g.elements
    mismatches = 0
    for w in range(len(g)):
        for v in g.below(w):
            for d in range(g.lengths[w] - g.lengths[v], g.rs.n_pos + 1):
                for c in combinations_with_replacement(range(2), d):
                    m = Polynomial({(c.count(0), c.count(1)): 1}, 2)
                    if skew_div_diff(g.rs, E[w], E[v], m) != skew_positive_operator(g.rs, E[w], E[v], m):
                        mismatches += 1
    checks.append((f"A2 operator mismatches: {mismatches}", mismatches == 0))
    verdict(7, "generalized Leibniz rule on 200 seeded pairs; operators agree on A2", checks)


def test_criterion_8_interval_scans(verdict):
    checks = []
    for t in ("A3", "A4", "D4"):
        for suite in ("shuffle", "interval2"):
            r = _scan(suite, t)
            checks.append((f"{suite} {t}: {r.hypothesis_hits} hits, {len(r.violations)} violations",
                           r.status == "pass" and r.hypothesis_hits > 0))
    for t in ("A3", "D4"):
        g = weyl_group(build_root_system(t))
        hits = [x for x in range(len(g)) if is_shuffle(g.rs, g.elements[x])
                and absurd_hypothesis(g.rs, g.elements[x])]
        checks.append((f"absurd hypothesis {t}: {len(hits)} hits", not hits))
        checks.append((f"simple products {t}", simple_product_check(g.rs)))
    b2 = _scan("shuffle", "B2")
    checks.append(("B2 counterexample expected",
                   sum(f.get("check") == "shuffle" for f in b2.expected_failures) == 2))
    a4 = _scan("shuffle", "A4")
    checks.append(("A4 counterexample expected",
                   any(f.get("fixture") == "cover-weakened" for f in a4.expected_failures)))
    a2 = _scan("shuffle", "A2")
    checks.append(("A2 counterexample expected",
                   any(f.get("fixture") == "non-shuffle-base" for f in a2.expected_failures)))
    verdict(8, "shuffle and interval scans hold in A3, A4, D4; counterexamples reproduce", checks)


def test_criterion_9_root_classification(verdict):
    checks = []
    for t, want in (("E6", E6_PAIRS), ("E7", E7_PAIRS)):
        got = classify_negative_pairs(build_root_system(t))
        checks.append((f"{t}: {len(got)} pairs", got == want))
    missing = {}
    for t in ("E6", "E7", "E8"):
        rs = build_root_system(t)
        missing[t] = [(a, b) for a, b in classify_negative_pairs(rs)
                      if find_orthogonal_witness(rs, a, b) is None]
    checks.append(("E6, E7 witnesses", not missing["E6"] and not missing["E7"]))
    checks.append((f"E8 missing {missing['E8']}", missing["E8"] == E8_MISSING))
    verdict(9, "E6 and E7 pair lists match; only one E8 pair lacks a witness", checks)


def test_criterion_10_chain_maps(verdict):
    r = _scan("chains", "A3")
    rs = build_root_system("A2")
    seqs = unique_subsequences(rs, (1, 0, 1), from_word(rs, (1,)))
    checks = [
        (f"A3 scan: {len(r.violations)} violations", r.status == "pass" and r.hypothesis_hits > 0),
        (f"A2 sequences {seqs}", seqs == ((2, 3), (1, 2))),
    ]
    verdict(10, "chain sequences unique and the square commutes in A3; A2 example", checks)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
