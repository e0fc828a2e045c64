"""Zonal spherical functions of the Gelfand pair (S_2n, H_n) and their companions.

``ω^λ_ρ`` is computed from its definition as an H_n-average of the character
``χ^{2λ}``: for a representative σ of the double coset ρ, the products σζ
(ζ in H_n) are bucketed by cycle type so each character value is looked up
once per cycle type rather than once per group element.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable

from .exactmath import PolyQ, solve_linear
from .pairings import (
    HYPEROCTAHEDRAL_CAP,
    compose,
    coset_rep_pair,
    cycle_type,
    enumerate_hyperoctahedral,
    inverse,
    to_perm,
)
from .partitions import (
    Partition,
    cells,
    dim_f,
    double,
    hook_lengths,
    mn_character,
    partitions_of,
)

ZONAL_CAP = HYPEROCTAHEDRAL_CAP


@dataclass(frozen=True)
class ZonalTable:
    n: int
    partitions: tuple[Partition, ...]
    omega: tuple[tuple[Fraction, ...], ...]  # omega[λ index][ρ index]
    dims: tuple[int, ...]  # f^{2λ}

    def value(self, lam: Partition, rho: Partition) -> Fraction:
        return self.omega[self.partitions.index(tuple(lam))][self.partitions.index(tuple(rho))]

    def dim(self, lam: Partition) -> int:
        return self.dims[self.partitions.index(tuple(lam))]


def _coset_representative(rho: Partition):
    m, n_ = coset_rep_pair(rho)
    return compose(inverse(to_perm(m)), to_perm(n_))


@lru_cache(maxsize=None)
def _hyperoctahedral(n: int):
    return tuple(enumerate_hyperoctahedral(n))


@lru_cache(maxsize=None)
def omega_column(n: int, rho: Partition) -> dict[Partition, Fraction]:
    """``{λ: ω^λ_ρ}`` for every λ ⊢ n, from the character average over H_n."""
    if not 1 <= n <= ZONAL_CAP:
        raise ValueError(f"n must be in 1..{ZONAL_CAP}")
    rho = tuple(rho)
    sigma = _coset_representative(rho)
    types = Counter(cycle_type(compose(sigma, zeta)) for zeta in _hyperoctahedral(n))
    order = 2**n * factorial(n)
    return {
        lam: Fraction(sum(c * mn_character(double(lam), t) for t, c in types.items()), order)
        for lam in partitions_of(n)
    }


@lru_cache(maxsize=None)
def zonal_table(n: int) -> ZonalTable:
    if not 1 <= n <= ZONAL_CAP:
        raise ValueError(f"n must be in 1..{ZONAL_CAP}")
    parts = partitions_of(n)
    cols = [omega_column(n, rho) for rho in parts]
    omega = tuple(tuple(col[lam] for col in cols) for lam in parts)
    return ZonalTable(n, parts, omega, tuple(dim_f(double(lam)) for lam in parts))


def zonal_fullcycle(lam: Partition) -> Fraction:
    """``ω^λ_{(n)}`` in closed form; zero as soon as λ contains the cell (3, 2)."""
    n = sum(lam)
    if n < 1:
        raise ValueError("λ must be nonempty")
    num = prod(2 * j - i - 1 for i, j in cells(lam) if (i, j) != (1, 1))
    return Fraction(num, 2 ** (n - 1) * factorial(n - 1))


@lru_cache(maxsize=None)
def zonal_one_spec(lam: Partition) -> PolyQ:
    """``Z_λ(1^d) = ∏ (d + 2j - i - 1)`` over the cells (i, j) of λ."""
    return prod((PolyQ.linear(2 * j - i - 1) for i, j in cells(lam)), start=PolyQ.const(1))


@lru_cache(maxsize=None)
def schur_one_spec(lam: Partition) -> PolyQ:
    """``s_λ(1^d) = ∏ (d + j - i) / h(i, j)``."""
    top = prod((PolyQ.linear(j - i) for i, j in cells(lam)), start=PolyQ.const(1))
    return top * Fraction(1, prod(hook_lengths(lam)))


def zonal_value(lam: Partition, d: int) -> int:
    return prod(d + 2 * j - i - 1 for i, j in cells(lam))


def hn_over_2n_fact(n: int) -> Fraction:
    """``2^n n! / (2n)! = 1 / (2n-1)!!``."""
    return Fraction(2**n * factorial(n), factorial(2 * n))


@dataclass
class ExpansionReport:
    n: int
    checked: int
    failure: tuple | None = None  # (μ, d, lhs, rhs)

    @property
    def ok(self) -> bool:
        return self.failure is None


def power_expansion_check(n: int, d_values: Iterable[int]) -> ExpansionReport:
    """Check ``d^{ℓ(μ)} = (2^n n!/(2n)!) Σ_{ℓ(λ)≤d} f^{2λ} ω^λ_μ Z_λ(1^d)`` exactly."""
    table = zonal_table(n)
    c = hn_over_2n_fact(n)
    checked = 0
    for d in d_values:
        for k, mu in enumerate(table.partitions):
            rhs = c * sum(
                table.dims[i] * table.omega[i][k] * zonal_value(lam, d)
                for i, lam in enumerate(table.partitions)
                if len(lam) <= d
            )
            lhs = Fraction(d) ** len(mu)
            checked += 1
            if lhs != rhs:
                return ExpansionReport(n, checked, (mu, d, lhs, rhs))
    return ExpansionReport(n, checked)


def omega_by_expansion(n: int) -> dict[tuple[Partition, Partition], Fraction]:
    """Independent route to ω: solve the power-sum expansion as a linear system.

    For each μ the unknowns are ``ω^λ_μ`` (λ ⊢ n) and each equation is the
    expansion evaluated at one of ``d = n, n+1, ...`` where every ``Z_λ(1^d)``
    is nonzero.  The ``Z_λ(1^d)`` are degree-n polynomials in d sharing the
    factor d, so they span at most n dimensions and the system is only
    determined while p(n) <= n, i.e. n <= 3.
    """
    parts = partitions_of(n)
    if len(parts) > n:
        raise ValueError(f"expansion system is underdetermined for n={n}")
    c = hn_over_2n_fact(n)
    ds = range(n, n + len(parts))
    a = [[c * dim_f(double(lam)) * zonal_value(lam, d) for lam in parts] for d in ds]
    out = {}
    for mu in parts:
        sol = solve_linear(a, [Fraction(d) ** len(mu) for d in ds])
        assert sol.unique
        for lam, v in zip(parts, sol.values):
            out[lam, mu] = v
    return out


def orthogonality_sums(n: int) -> dict[tuple[Partition, Partition], Fraction]:
    """``Σ_{m,n ∈ M(2n)} ω^λ(m^{-1}n) ω^μ(m^{-1}n)`` for every pair λ, μ ⊢ n."""
    from .pairings import enumerate_pairings, pair_coset_type

    table = zonal_table(n)
    b = enumerate_pairings(n)
    counts = Counter(pair_coset_type(x, y) for x in b for y in b)
    idx = {rho: k for k, rho in enumerate(table.partitions)}
    return {
        (lam, mu): sum(
            (c * table.omega[i][idx[rho]] * table.omega[j][idx[rho]] for rho, c in counts.items()),
            Fraction(0),
        )
        for i, lam in enumerate(table.partitions)
        for j, mu in enumerate(table.partitions)
    }


def orthogonality_expected(n: int, lam: Partition, mu: Partition) -> Fraction:
    if lam != mu:
        return Fraction(0)
    return Fraction(factorial(2 * n), 2**n * factorial(n)) ** 2 / dim_f(double(lam))
