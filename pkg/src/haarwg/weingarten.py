"""Orthogonal and unitary Weingarten functions.

Two independent routes are provided:

* the character expansions ``wg_orth`` / ``wg_unit``, symbolic in ``d`` or at
  a fixed integer ``d``;
* the Gram matrices and their exact pseudo-inverses (``wg_matrix_oracle``).

Symbolic mode sums over every λ ⊢ n and is the right object for ``d >= n``.
Integer mode drops the terms with ``ℓ(λ) > d``, which is what makes it valid
for small ``d`` as well.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Literal

from .exactmath import Matrix, PolyQ, RatFuncQ, _integer_rows, lcm_poly, matmul, pseudo_inverse
from .pairings import (
    PairPartition,
    compose,
    cycle_type,
    enumerate_pairings,
    inverse,
    loops,
    pair_coset_type,
    unitary_pairings,
    unitary_to_sn,
)
from .partitions import Partition, dim_f, mn_character, partitions_of
from .zonal import hn_over_2n_fact, schur_one_spec, zonal_one_spec, zonal_table

Group = Literal["orth", "unit"]

GRAM_CAP = {"orth": 6, "unit": 7}
ORACLE_CAP = {"orth": 5, "unit": 6}


@dataclass(frozen=True)
class WgValue:
    group: Group
    coset: Partition
    d: int | None  # None for the symbolic value
    value: RatFuncQ | Fraction

    @property
    def n(self) -> int:
        return sum(self.coset)


def _check_d(d):
    if d is not None and d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d}")


def _group(group: str) -> Group:
    g = {"orth": "orth", "orthogonal": "orth", "o": "orth",
         "unit": "unit", "unitary": "unit", "u": "unit"}.get(str(group).lower())
    if g is None:
        raise ValueError(f"unknown group {group!r}")
    return g


@lru_cache(maxsize=None)
def _wg_orth(mu: Partition, d: int | None):
    n = sum(mu)
    table = zonal_table(n)
    k = table.partitions.index(mu)
    c = hn_over_2n_fact(n)
    if d is None:
        total = RatFuncQ(0)
        for i, lam in enumerate(table.partitions):
            total = total + RatFuncQ(PolyQ.const(table.dims[i] * table.omega[i][k]), zonal_one_spec(lam))
        return total * c
    total = Fraction(0)
    for i, lam in enumerate(table.partitions):
        if len(lam) <= d:
            total += table.dims[i] * table.omega[i][k] / zonal_one_spec(lam)(d)
    return c * total


def wg_orth(mu: Partition, d: int | None = None):
    """``Wg^O(μ, d)``: a ``RatFuncQ`` when ``d`` is None, else an exact ``Fraction``."""
    _check_d(d)
    return _wg_orth(tuple(sorted(mu, reverse=True)), d)


@lru_cache(maxsize=None)
def _wg_unit(mu: Partition, d: int | None):
    n = sum(mu)
    c = Fraction(1, factorial(n) ** 2)
    if d is None:
        total = RatFuncQ(0)
        for lam in partitions_of(n):
            total = total + RatFuncQ(PolyQ.const(dim_f(lam) ** 2 * mn_character(lam, mu)), schur_one_spec(lam))
        return total * c
    total = Fraction(0)
    for lam in partitions_of(n):
        if len(lam) <= d:
            total += dim_f(lam) ** 2 * mn_character(lam, mu) / schur_one_spec(lam)(d)
    return c * total


def wg_unit(mu: Partition, d: int | None = None):
    """``Wg^U(μ, d)`` from the Schur-function expansion."""
    _check_d(d)
    return _wg_unit(tuple(sorted(mu, reverse=True)), d)


def wg(group: str, mu: Partition, d: int | None = None) -> WgValue:
    g = _group(group)
    mu = tuple(sorted(mu, reverse=True))
    value = wg_orth(mu, d) if g == "orth" else wg_unit(mu, d)
    return WgValue(g, mu, d, value)


def unitary_coset_type(m: PairPartition, n_: PairPartition) -> Partition:
    """Cycle type of ``σ_m^{-1} σ_n`` in S_n for two unitary pairings."""
    return cycle_type(compose(inverse(unitary_to_sn(m)), unitary_to_sn(n_)))


def wg_entry_via_formula(m: PairPartition, n_: PairPartition, d: int | None = None):
    """Entry ``Wg^{O(d)}(m, n)`` evaluated at the coset type of ``m^{-1} n``."""
    return wg_orth(pair_coset_type(m, n_), d)


def basis(n: int, group: str) -> tuple[PairPartition, ...]:
    return enumerate_pairings(n) if _group(group) == "orth" else unitary_pairings(n)


def _check_cap(n: int, group: Group, caps: dict):
    if not 1 <= n <= caps[group]:
        raise ValueError(f"n={n} outside 1..{caps[group]} for group {group}")


def loop_matrix(n: int, group: str) -> list[list[int]]:
    g = _group(group)
    _check_cap(n, g, GRAM_CAP)
    b = basis(n, g)
    return [[loops(x, y) for y in b] for x in b]


def gram(n: int, group: str, d: int) -> list[list[int]]:
    """Gram matrix ``d^{loop(m, n)}`` in ``basis(n, group)`` order."""
    _check_d(d)
    return [[d**k for k in row] for row in loop_matrix(n, group)]


def gram_symbolic(n: int, group: str) -> list[list[PolyQ]]:
    return [[PolyQ([0] * k + [1]) for k in row] for row in loop_matrix(n, group)]


@lru_cache(maxsize=None)
def _oracle(n: int, group: Group, d: int):
    return tuple(tuple(row) for row in pseudo_inverse(gram(n, group, d)))


def wg_matrix_oracle(n: int, group: str, d: int) -> Matrix:
    """Exact pseudo-inverse of the Gram matrix."""
    g = _group(group)
    _check_cap(n, g, ORACLE_CAP)
    _check_d(d)
    return [list(row) for row in _oracle(n, g, d)]


def coset_type_matrix(n: int, group: str) -> list[list[Partition]]:
    g = _group(group)
    b = basis(n, g)
    ct = pair_coset_type if g == "orth" else unitary_coset_type
    return [[ct(x, y) for y in b] for x in b]


def wg_matrix_formula(n: int, group: str, d: int | None = None) -> list[list]:
    """Weingarten matrix assembled entrywise from the character formula."""
    g = _group(group)
    f = wg_orth if g == "orth" else wg_unit
    return [[f(mu, d) for mu in row] for row in coset_type_matrix(n, g)]


def common_denominator(entries) -> tuple[PolyQ, list[list[PolyQ]]]:
    """Write a matrix of rational functions as ``N / D`` with polynomial ``N``."""
    den = lcm_poly(e.den for row in entries for e in row)
    return den, [[e.num * (den // e.den) for e in row] for row in entries]


@dataclass
class PseudoInverseReport:
    gwg_equals_g: bool
    wgw_equals_w: bool
    gw_is_identity: bool

    @property
    def ok(self) -> bool:
        return self.gwg_equals_g and self.wgw_equals_w


def check_pseudo_inverse(g, w) -> PseudoInverseReport:
    """Check ``GWG = G``, ``WGW = W`` and whether ``GW = I`` for rational matrices.

    Both sides are cleared of denominators first (``G = A/a``, ``W = N/D``) so
    the products run over integers: ``A N A = a D A``, ``N A N = a D N`` and
    ``A N = a D I``.
    """
    a, ga = _integer_rows(g)
    n, wd = _integer_rows(w)
    an = matmul(a, n)
    m = len(g)
    k = ga * wd
    return PseudoInverseReport(
        matmul(an, a) == [[k * x for x in row] for row in a],
        matmul(matmul(n, a), n) == [[k * x for x in row] for row in n],
        all(an[i][j] == (k if i == j else 0) for i in range(m) for j in range(m)),
    )


def check_pseudo_inverse_symbolic(n: int, group: str) -> PseudoInverseReport:
    """Same laws for the symbolic matrices, via a common denominator ``W = N / D``.

    ``GWG = G`` becomes ``G N G = D G`` and ``WGW = W`` becomes ``N G N = D N``,
    both identities between polynomial matrices.
    """
    g = gram_symbolic(n, group)
    den, num = common_denominator(wg_matrix_formula(n, group))
    gn = matmul(g, num)
    m = len(g)
    return PseudoInverseReport(
        matmul(gn, g) == [[den * x for x in row] for row in g],
        matmul(matmul(num, g), num) == [[den * x for x in row] for row in num],
        all(gn[i][j] == (den if i == j else PolyQ()) for i in range(m) for j in range(m)),
    )
