"""Haar integrals of monomials, truncated-trace moments and full-cycle numerators."""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .exactmath import PolyQ, RatFuncQ
from .pairings import (
    PairPartition,
    enumerate_pairings,
    loops,
    pair_coset_type,
    unitary_pairings,
)
from .partitions import Partition, catalan, dim_f, double, double_factorial, partitions_of
from .weingarten import unitary_coset_type, wg_matrix_oracle, wg_orth, wg_unit
from .zonal import zonal_fullcycle, zonal_one_spec, zonal_value


@dataclass(frozen=True)
class MonomialSpec:
    """A product of matrix entries ``g_{ij}`` (``conj`` marks a complex-conjugated factor)."""

    entries: tuple[tuple[int, int], ...]
    conjugated: tuple[bool, ...] = ()

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a monomial needs at least one factor")
        if not self.conjugated:
            object.__setattr__(self, "conjugated", (False,) * len(self.entries))
        if len(self.conjugated) != len(self.entries):
            raise ValueError("conjugation flags do not match the entries")
        if any(i < 1 or j < 1 for i, j in self.entries):
            raise ValueError("indices are 1-based")

    @classmethod
    def parse(cls, text: str) -> "MonomialSpec":
        """Parse ``"1,1;2,2*"``: semicolon-separated ``i,j`` pairs, ``*`` for a conjugate."""
        entries, conj = [], []
        for item in text.split(";"):
            item = item.strip()
            if not item:
                continue
            m = re.fullmatch(r"(\d+)\s*,\s*(\d+)\s*(\*?)", item)
            if not m:
                raise ValueError(f"bad factor {item!r}")
            entries.append((int(m[1]), int(m[2])))
            conj.append(bool(m[3]))
        return cls(tuple(entries), tuple(conj))

    def format(self) -> str:
        return ";".join(f"{i},{j}{'*' if c else ''}" for (i, j), c in zip(self.entries, self.conjugated))

    @property
    def degree(self) -> int:
        return len(self.entries)

    def max_index(self) -> int:
        return max(max(i, j) for i, j in self.entries)


def _check_indices(spec: MonomialSpec, d: int):
    if d < 1:
        raise ValueError("d must be positive")
    if spec.max_index() > d:
        raise ValueError(f"index {spec.max_index()} out of range 1..{d}")


def _matching(labels, pairings) -> list[PairPartition]:
    return [m for m in pairings if all(labels[a - 1] == labels[b - 1] for a, b in m.blocks)]


def integrate_orth(spec: MonomialSpec, d: int) -> Fraction:
    """``∫_{O(d)} ∏ g_{i_k j_k} dg`` exactly."""
    _check_indices(spec, d)
    if any(spec.conjugated):
        raise ValueError("orthogonal monomials have no conjugated factors")
    if spec.degree % 2:
        return Fraction(0)
    # integrand is invariant under reordering factors
    entries = sorted(spec.entries)
    n = len(entries) // 2
    rows = [i for i, _ in entries]
    cols = [j for _, j in entries]
    pairings = enumerate_pairings(n)
    left = _matching(rows, pairings)
    if not left:
        return Fraction(0)
    right = _matching(cols, pairings)
    return sum((wg_orth(pair_coset_type(m, k), d) for m in left for k in right), Fraction(0))


def integrate_unit(spec: MonomialSpec, d: int) -> Fraction:
    """``∫_{U(d)} ∏ g_{i_k j_k} ∏ conj(g_{i'_k j'_k}) dg`` exactly; unbalanced monomials give 0."""
    _check_indices(spec, d)
    plain = sorted(e for e, c in zip(spec.entries, spec.conjugated) if not c)
    conj = sorted(e for e, c in zip(spec.entries, spec.conjugated) if c)
    if len(plain) != len(conj):
        return Fraction(0)
    n = len(plain)
    entries = plain + conj
    rows = [i for i, _ in entries]
    cols = [j for _, j in entries]
    pairings = unitary_pairings(n)
    left = _matching(rows, pairings)
    if not left:
        return Fraction(0)
    right = _matching(cols, pairings)
    return sum((wg_unit(unitary_coset_type(m, k), d) for m in left for k in right), Fraction(0))


def truncated_trace_moment(n: int, k: int, d: int) -> Fraction:
    """``∫_{O(d)} tr(g^{(k)})^{2n} dg = Σ_{ℓ(λ)≤k} f^{2λ} Z_λ(1^k) / Z_λ(1^d)``."""
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")
    return sum(
        (Fraction(dim_f(double(lam)) * zonal_value(lam, k), zonal_value(lam, d))
         for lam in partitions_of(n) if len(lam) <= k),
        Fraction(0),
    )


def trace_power_moment(power: int, k: int, d: int) -> Fraction:
    """Moment of any order; odd powers vanish."""
    if power % 2:
        if not 1 <= k <= d:
            raise ValueError("need 1 <= k <= d")
        return Fraction(0)
    if power == 0:
        return Fraction(1)
    return truncated_trace_moment(power // 2, k, d)


TRUNCATED_BRUTE_CAP = 4


def truncated_trace_bruteforce(n: int, k: int, d: int) -> Fraction:
    """``Σ_{m,n} Wg(m, n) k^{loop(m, n)}`` with Wg the exact pseudo-inverse of the Gram matrix."""
    if not 1 <= n <= TRUNCATED_BRUTE_CAP:
        raise ValueError(f"n must be in 1..{TRUNCATED_BRUTE_CAP}")
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")
    w = wg_matrix_oracle(n, "orth", d)
    b = enumerate_pairings(n)
    return sum(
        (w[i][j] * k ** loops(x, y) for i, x in enumerate(b) for j, y in enumerate(b)),
        Fraction(0),
    )


def trace_monomial_expansion(n: int, k: int, d: int) -> Fraction:
    """``(Σ_{a≤k} g_{aa})^{2n}`` integrated term by term through ``integrate_orth``."""
    from itertools import product

    total = Fraction(0)
    cache: dict[tuple, Fraction] = {}
    for word in product(range(1, k + 1), repeat=2 * n):
        key = tuple(sorted(word))
        if key not in cache:
            cache[key] = integrate_orth(MonomialSpec(tuple((a, a) for a in key)), d)
        total += cache[key]
    return total


# ---------------------------------------------------------------- full cycle


def full_cycle_denominator(n: int) -> PolyQ:
    """``d ∏_{j<n} (d+2j)(d-j) ∏_{k<⌊n/2⌋} (d+2k-1)``."""
    p = PolyQ.var()
    for j in range(1, n):
        p = p * PolyQ.linear(2 * j) * PolyQ.linear(-j)
    for k in range(1, n // 2):
        p = p * PolyQ.linear(2 * k - 1)
    return p


def wg_orth_fullcycle(n: int) -> RatFuncQ:
    """``Wg^O((n), d)`` summed over λ with λ_3 <= 1 using the closed form of ``ω^λ_{(n)}``."""
    total = RatFuncQ(0)
    for lam in partitions_of(n):
        if len(lam) >= 3 and lam[2] > 1:
            continue
        w = zonal_fullcycle(lam)
        total = total + RatFuncQ(PolyQ.const(dim_f(double(lam)) * w), zonal_one_spec(lam))
    return total * Fraction(1, double_factorial(2 * n - 1))


class NotAPolynomialError(ArithmeticError):
    pass


def _to_poly(r: RatFuncQ, what: str) -> PolyQ:
    if r.den.degree != 0:
        raise NotAPolynomialError(f"{what} has a nonconstant denominator: {r}")
    return r.num * (1 / r.den.lc)


def full_cycle_poly(n: int) -> PolyQ:
    """The numerator ``P_n(d)`` of ``Wg^O((n), d)`` over the fixed linear denominator."""
    if n < 1:
        raise ValueError("n must be positive")
    r = wg_orth_fullcycle(n) * RatFuncQ(full_cycle_denominator(n)) * (-1) ** (n - 1)
    return _to_poly(r, f"P_{n}")


def full_cycle_poly_hooks(n: int) -> PolyQ:
    """``P_n(d)`` again, from the hook-product form indexed by λ = (r, s, 1^{n-r-s})."""
    from .partitions import hook_rsn

    def ratio(num, shift):
        return RatFuncQ(PolyQ.const(num), PolyQ.linear(shift))

    bracket = RatFuncQ(Fraction(1, factorial(2 * n)))
    for j in range(2, n + 1):
        bracket = bracket * ratio(2 * j - 2, 2 * j - 2)
    for r in range(1, n):
        for s in range(1, min(r, n - r) + 1):
            term = RatFuncQ(Fraction(1, hook_rsn(r, s, n)))
            for j in range(2, r + 1):
                term = term * ratio(2 * j - 2, 2 * j - 2)
            for j in range(1, s + 1):
                term = term * ratio(2 * j - 3, 2 * j - 3)
            for i in range(3, n - r - s + 3):
                term = term * ratio(-(i - 1), -(i - 1))
            bracket = bracket + term
    rest = full_cycle_denominator(n) // PolyQ.var()
    return _to_poly(bracket * RatFuncQ(rest) * (2 * n * (-1) ** (n - 1)), f"P_{n}")


def full_cycle_constant_term(n: int) -> Fraction:
    """Closed form of ``P_n(0)``."""
    s = sum(dim_f(double(lam)) for lam in partitions_of(n) if len(lam) < 3 or lam[2] <= 1)
    if n % 2 and n >= 5:
        extra = double_factorial(n - 4)
    elif n % 2 == 0 and n >= 4:
        extra = double_factorial(n - 3)
    else:
        extra = 1
    return Fraction(s * factorial(n - 1) * extra, double_factorial(2 * n - 1))


@dataclass
class FullCycleReport:
    n: int
    poly: PolyQ
    degree_ok: bool
    leading_ok: bool
    constant_ok: bool

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.leading_ok and self.constant_ok


def full_cycle_properties(n: int) -> FullCycleReport:
    """Degree ``⌊n/2⌋-1``, leading coefficient ``c_{n-1}`` and the constant term of ``P_n``."""
    p = full_cycle_poly(n)
    deg_ok = p.degree == max(n // 2 - 1, 0)
    return FullCycleReport(
        n,
        p,
        deg_ok,
        p.lc == catalan(n - 1),
        p(0) == full_cycle_constant_term(n),
    )


@dataclass
class ConjectureRow:
    n: int
    poly: PolyQ
    holds: bool


def conjecture_check(n_max: int) -> list[ConjectureRow]:
    """Whether every coefficient of ``P_n`` is a nonnegative integer, for n = 1..n_max."""
    rows = []
    for n in range(1, n_max + 1):
        p = full_cycle_poly(n)
        holds = all(c >= 0 and c.denominator == 1 for c in p.coeffs)
        rows.append(ConjectureRow(n, p, holds))
    return rows


def wg_asymptotic_leading(mu: Partition) -> tuple[int, int]:
    """``(∏ (-1)^{μ_i-1} c_{μ_i-1}, -2n + ℓ(μ))``: leading coefficient and exponent of Wg^O(μ, d)."""
    coef = prod((-1) ** (m - 1) * catalan(m - 1) for m in mu)
    return coef, -2 * sum(mu) + len(mu)


def wg_unit_fullcycle(n: int, d: int | None = None):
    """``(-1)^{n-1} c_{n-1} / ∏_{|j|<n} (d - j)``."""
    c = (-1) ** (n - 1) * catalan(n - 1)
    if d is None:
        return RatFuncQ(PolyQ.const(c), PolyQ.from_roots(range(-n + 1, n)))
    if d < n:
        raise ValueError("closed form needs d >= n")
    return Fraction(c, prod(d - j for j in range(-n + 1, n)))
