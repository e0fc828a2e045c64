"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (shown in the terminal summary) and then
asserts, so a failing criterion also fails the suite.
"""

from fractions import Fraction

import pytest

from conftest import ACCEPTANCE
from haarwg.exactmath import parse_ratfunc
from haarwg.moments import (
    MonomialSpec, conjecture_check, full_cycle_poly, full_cycle_properties, integrate_orth, integrate_unit,
    trace_monomial_expansion, truncated_trace_bruteforce, truncated_trace_moment, wg_asymptotic_leading,
    wg_unit_fullcycle,
)
from haarwg.exactmath import PolyQ
from haarwg.montecarlo import check_with_retry, estimate_monomial, estimate_trace_moment
from haarwg.partitions import partitions_of
from haarwg.weingarten import (
    check_pseudo_inverse, check_pseudo_inverse_symbolic, gram, wg_matrix_formula, wg_matrix_oracle, wg_orth,
    wg_unit,
)
from haarwg.zonal import orthogonality_expected, orthogonality_sums, power_expansion_check
from known_values import FULL_CYCLE_P, WG_ORTH


def record(name, failures, detail=""):
    ok = not failures
    ACCEPTANCE.append((name, ok, detail if ok else f"{detail}; failures: {failures[:5]}"))
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
    assert ok, failures


def test_01_value_table():
    fixtures = [mu for mu in WG_ORTH if sum(mu) <= 6]
    bad = [mu for mu in fixtures if wg_orth(mu) != parse_ratfunc(WG_ORTH[mu])]
    big = parse_ratfunc("(d⁶+17d⁵+77d⁴+7d³−446d²−472d−1280)/"
                        "(d²(d+1)(d+2)(d+3)(d+4)(d+6)(d+8)(d+10)(d−1)(d−2)(d−3)(d−4)(d−5))")
    if wg_orth((2, 2, 1, 1)) != big:
        bad.append((2, 2, 1, 1))
    if len(fixtures) < 18:
        bad.append("too few fixtures")
    record("1 symbolic Wg^O table n=1..6", bad, f"{len(fixtures)} coset types")


def test_02_oracle_equivalence():
    bad = []
    for group in ("orth", "unit"):
        for n in range(1, 5):
            for d in range(1, 9):
                if wg_matrix_oracle(n, group, d) != wg_matrix_formula(n, group, d):
                    bad.append((group, n, d))
    record("2 formula matrix == exact pseudo-inverse of Gram, n<=4, d=1..8", bad, "orth and unit")


def test_03_pseudo_inverse_laws():
    bad = []
    for group in ("orth", "unit"):
        for n in range(1, 4):
            if not check_pseudo_inverse_symbolic(n, group).ok:
                bad.append(("symbolic", group, n))
        for n in range(1, 5):
            for d in range(1, 9):
                rep = check_pseudo_inverse(gram(n, group, d), wg_matrix_oracle(n, group, d))
                if not rep.ok:
                    bad.append(("laws", group, n, d))
                if rep.gw_is_identity != (d >= n):
                    bad.append(("GW=I iff d>=n", group, n, d))
    record("3 GWG=G, WGW=W (symbolic n<=3, numeric n<=4), GW=I iff d>=n", bad)


def test_04_worked_integrals():
    bad = []
    for d in range(2, 9):
        cases = [("1,1;1,1;1,1;1,2", Fraction(0)),
                 ("1,1;1,1;2,2;2,2", Fraction(d + 1, d * (d + 2) * (d - 1))),
                 ("1,1;1,1;1,1;1,1", Fraction(3, d * (d + 2)))]
        bad += [(e, d) for e, want in cases if integrate_orth(MonomialSpec.parse(e), d) != want]
    record("4 three degree-4 orthogonal integrals, d=2..8", bad)


def test_05_expansion_identity():
    bad = []
    for n in range(1, 7):
        rep = power_expansion_check(n, range(1, 13))
        if not rep.ok:
            bad.append(rep.failure)
    record("5 power-sum expansion in zonal polynomials, n<=6, d=1..12", bad)


def test_06_orthogonality():
    bad = [(n, key) for n in range(1, 5) for key, v in orthogonality_sums(n).items()
           if v != orthogonality_expected(n, *key)]
    record("6 zonal spherical function orthogonality over pairings, n<=4", bad)


def test_07_truncated_moments():
    bad = []
    for n in range(1, 5):
        for d in range(1, 7):
            for k in range(1, d + 1):
                v = truncated_trace_moment(n, k, d)
                if v != truncated_trace_bruteforce(n, k, d):
                    bad.append(("brute", n, k, d))
                if n <= 2 and v != trace_monomial_expansion(n, k, d):
                    bad.append(("monomial", n, k, d))
    record("7 truncated trace moments vs double sum (n<=4) and monomial expansion (n<=2)", bad, "1<=k<=d<=6")


def test_08_full_cycle_polynomials():
    bad = [n for n in range(1, 11) if full_cycle_poly(n) != PolyQ(FULL_CYCLE_P[n])]
    bad += [("properties", n) for n in range(2, 11) if not full_cycle_properties(n).ok]
    rows = conjecture_check(12)
    bad += [("nonnegative integer", r.n) for r in rows if r.n <= 10 and not r.holds]
    extra = ", ".join(f"n={r.n}: {'holds' if r.holds else 'fails'}" for r in rows if r.n > 10)
    record("8 P_1..P_10, degree/leading/constant n=2..10, coefficient check n<=10", bad, f"report {extra}")


def test_09_unitary_full_cycle():
    bad = [n for n in range(1, 7) if wg_unit((n,)) != wg_unit_fullcycle(n)]
    record("9 unitary full-cycle closed form, n<=6", bad)


def test_10_asymptotics():
    bad = []
    for n in range(1, 6):
        for mu in partitions_of(n):
            r = wg_orth(mu)
            coef, exp = wg_asymptotic_leading(mu)
            if r.degree_gap() != exp or r.leading_ratio() != coef:
                bad.append(mu)
    record("10 leading asymptotic term of Wg^O, n<=5", bad)


MC_SAMPLES = 1_000_000


@pytest.mark.slow
def test_11_monte_carlo():
    bad, zs = [], []
    g4, g2g2, u4 = (MonomialSpec.parse(t) for t in ("1,1;1,1;1,1;1,1", "1,1;1,1;2,2;2,2", "1,1;1,1;1,1*;1,1*"))
    for d in (3, 4, 5):
        cases = [
            ("g11^4", lambda s, d=d: estimate_monomial(g4, "orth", d, MC_SAMPLES, s), integrate_orth(g4, d)),
            ("g11^2 g22^2", lambda s, d=d: estimate_monomial(g2g2, "orth", d, MC_SAMPLES, s),
             integrate_orth(g2g2, d)),
            ("|g11|^4", lambda s, d=d: estimate_monomial(u4, "unit", d, MC_SAMPLES, s), integrate_unit(u4, d)),
            ("tr(g^(1))^4", lambda s, d=d: estimate_trace_moment(4, 1, d, MC_SAMPLES, s),
             truncated_trace_moment(2, 1, d)),
        ]
        for i, (name, est, exact) in enumerate(cases):
            ok, e = check_with_retry(est, float(exact), seed=1000 * d + i)
            zs.append(abs(e.zscore(float(exact))))
            if not ok:
                bad.append((name, d, e.mean, float(exact), e.stderr))
    record("11 Monte Carlo battery, d=3,4,5, 1e6 samples, 4 sigma with one retry", bad, f"max |z| = {max(zs):.2f}")
