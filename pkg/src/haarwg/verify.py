"""Check batteries behind ``haarwg verify``.

Each battery yields ``(name, passed, detail)`` rows.
"""

from fractions import Fraction
from typing import Iterator

from .exactmath import format_poly, parse_ratfunc
from .moments import (
    conjecture_check,
    full_cycle_poly,
    full_cycle_properties,
    truncated_trace_bruteforce,
    truncated_trace_moment,
    wg_unit_fullcycle,
)
from .pairings import enumerate_pairings, loops, pair_coset_type, to_perm, compose, inverse, coset_type
from .partitions import partitions_of
from .reference import FULL_CYCLE_P, WG_ORTH
from .weingarten import (
    check_pseudo_inverse,
    check_pseudo_inverse_symbolic,
    gram,
    wg_matrix_formula,
    wg_matrix_oracle,
    wg_orth,
    wg_unit,
)
from .zonal import orthogonality_expected, orthogonality_sums, power_expansion_check

Row = tuple[str, bool, str]


def table_suite(nmax: int = 6) -> Iterator[Row]:
    for mu, text in WG_ORTH.items():
        if sum(mu) > nmax:
            continue
        got = wg_orth(mu)
        ok = got == parse_ratfunc(text)
        yield f"Wg^O({','.join(map(str, mu))})", ok, str(got)
    for n, coeffs in FULL_CYCLE_P.items():
        p = full_cycle_poly(n)
        yield f"P_{n}", p.coeffs == tuple(Fraction(c) for c in coeffs), format_poly(p)


def oracle_suite(nmax: int = 4, d_values=range(1, 9)) -> Iterator[Row]:
    for group in ("orth", "unit"):
        for n in range(1, min(nmax, 4) + 1):
            for d in d_values:
                w = wg_matrix_oracle(n, group, d)
                ok = w == wg_matrix_formula(n, group, d)
                rep = check_pseudo_inverse(gram(n, group, d), w)
                yield (f"{group} n={n} d={d}", ok and rep.ok and rep.gw_is_identity == (d >= n),
                       f"formula==pinv:{ok} GWG=G:{rep.gwg_equals_g} WGW=W:{rep.wgw_equals_w} GW=I:{rep.gw_is_identity}")


def identities_suite(nmax: int = 4) -> Iterator[Row]:
    for n in range(1, min(nmax, 6) + 1):
        rep = power_expansion_check(n, range(1, 13))
        yield f"power expansion n={n}", rep.ok, f"{rep.checked} checks"
    for n in range(1, min(nmax, 4) + 1):
        sums = orthogonality_sums(n)
        ok = all(v == orthogonality_expected(n, lam, mu) for (lam, mu), v in sums.items())
        yield f"orthogonality n={n}", ok, f"{len(sums)} pairs"
        b = enumerate_pairings(n)
        ok = all(loops(x, y) == len(coset_type(compose(inverse(to_perm(x)), to_perm(y))))
                 for x in b for y in b)
        yield f"loops vs coset type n={n}", ok, ""
    for n in range(1, min(nmax, 3) + 1):
        for group in ("orth", "unit"):
            rep = check_pseudo_inverse_symbolic(n, group)
            yield f"symbolic GWG=G, WGW=W {group} n={n}", rep.ok, ""
    for n in range(1, min(nmax, 4) + 1):
        ok = all(truncated_trace_moment(n, k, d) == truncated_trace_bruteforce(n, k, d)
                 for d in range(1, 7) for k in range(1, d + 1))
        yield f"truncated trace n={n}", ok, "1<=k<=d<=6"
    for n in range(2, 11):
        rep = full_cycle_properties(n)
        yield f"P_{n} degree/leading/constant", rep.ok, format_poly(rep.poly)
    for row in conjecture_check(12):
        yield f"P_{row.n} nonnegative integer coefficients", row.holds, format_poly(row.poly)
    for n in range(1, 7):
        yield f"unitary full cycle n={n}", wg_unit((n,)) == wg_unit_fullcycle(n), ""


SUITES = {"table": table_suite, "oracle": oracle_suite, "identities": identities_suite}
