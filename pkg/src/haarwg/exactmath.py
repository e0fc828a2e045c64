"""Exact arithmetic in the formal dimension variable ``d``.

``PolyQ`` and ``RatFuncQ`` are immutable polynomials and rational functions
over ``fractions.Fraction``.  Matrices are lists of rows; the linear algebra
routines work fraction-free on integer rows internally and hand back
``Fraction`` entries.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

Number = int | Fraction


class PolyQ:
    """Univariate polynomial in ``d`` with rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Number) -> PolyQ:
        return cls([c])

    @classmethod
    def var(cls) -> PolyQ:
        return cls([0, 1])

    @classmethod
    def linear(cls, shift: Number) -> PolyQ:
        """``d + shift``."""
        return cls([shift, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> PolyQ:
        return reduce(lambda p, r: p * cls.linear(-r), roots, cls.const(1))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({format_poly(self)})"

    @staticmethod
    def _coerce(x) -> PolyQ:
        return x if isinstance(x, PolyQ) else PolyQ.const(x)

    def __add__(self, other) -> PolyQ:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolyQ([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> PolyQ:
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other) -> PolyQ:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> PolyQ:
        return self._coerce(other) - self

    def __mul__(self, other) -> PolyQ:
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        if not isinstance(other, PolyQ):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolyQ:
        out = PolyQ.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: PolyQ) -> tuple[PolyQ, PolyQ]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            q = rem[k + dq] / lead
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return PolyQ(quot), PolyQ(rem[:dq])

    __divmod__ = divmod

    def __floordiv__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[0]

    def __mod__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[1]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    eval = __call__

    def monic(self) -> PolyQ:
        return self * (1 / self.lc) if self.coeffs else self

    def content_primitive(self) -> tuple[Fraction, PolyQ]:
        """Split into ``c * q`` with ``q`` integer, primitive and positive leading coefficient."""
        if not self.coeffs:
            return Fraction(0), self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), PolyQ([i // g for i in ints])

    def derivative(self) -> PolyQ:
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def lcm_poly(polys: Iterable[PolyQ]) -> PolyQ:
    """Least common multiple, scaled to a primitive integer polynomial."""
    out = PolyQ.const(1)
    for p in polys:
        out = (out * p) // poly_gcd(out, p)
    return out.content_primitive()[1]


class RatFuncQ:
    """Rational function ``num/den`` in normal form.

    The denominator is an integer polynomial with content 1 and positive
    leading coefficient, coprime to the numerator; the numerator carries any
    remaining rational factor.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        num = PolyQ._coerce(num)
        den = PolyQ.const(1) if den is None else PolyQ._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num: PolyQ = num
        self.den: PolyQ = den

    @staticmethod
    def _coerce(x) -> RatFuncQ:
        return x if isinstance(x, RatFuncQ) else RatFuncQ(x)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, PolyQ)):
            other = RatFuncQ(other)
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFuncQ({format_ratfunc(self)})"

    def __str__(self) -> str:
        return format_ratfunc(self)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> RatFuncQ:
        other = self._coerce(other)
        if self.den == other.den:
            return RatFuncQ(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        a, b = self.den // g, other.den // g
        return RatFuncQ(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFuncQ:
        return RatFuncQ(-self.num, self.den, _normalized=True)

    def __sub__(self, other) -> RatFuncQ:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RatFuncQ:
        return self._coerce(other) - self

    def __mul__(self, other) -> RatFuncQ:
        other = self._coerce(other)
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFuncQ:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFuncQ:
        return self._coerce(other) / self

    def __call__(self, x: Number) -> Fraction:
        dv = self.den(x)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at d={x}")
        return self.num(x) / dv

    eval = __call__

    def degree_gap(self) -> int:
        """``deg(num) - deg(den)``; meaningless for the zero function."""
        return self.num.degree - self.den.degree

    def leading_ratio(self) -> Fraction:
        return self.num.lc / self.den.lc


def _normalize(num: PolyQ, den: PolyQ) -> tuple[PolyQ, PolyQ]:
    if num.is_zero():
        return num, PolyQ.const(1)
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    c, den = den.content_primitive()
    return num * (1 / c), den


def ratfunc_normalize(r: RatFuncQ) -> RatFuncQ:
    return RatFuncQ(r.num, r.den)


def factor_integer_roots(p: PolyQ) -> tuple[list[tuple[int, int]], PolyQ]:
    """Strip every integer root of ``p``; returns ``([(root, multiplicity)], residual)``.

    Roots come out in the order 0, -1, -2, ..., then 1, 2, ..., which is the
    order the denominator factors ``d, d+1, d+2, ..., d-1, d-2, ...`` print in.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no factorization")
    found: dict[int, int] = {}
    rest = p
    while rest.degree > 0 and rest.coeffs[0] == 0:
        found[0] = found.get(0, 0) + 1
        rest = PolyQ(rest.coeffs[1:])
    if rest.degree > 0:
        _, prim = rest.content_primitive()
        c0 = abs(int(prim.coeffs[0]))
        candidates = set()
        for k in range(1, int(c0**0.5) + 2):
            if c0 % k == 0:
                candidates |= {k, -k, c0 // k, -(c0 // k)}
        for r in sorted(candidates, key=lambda r: (r > 0, abs(r))):
            while rest.degree > 0 and rest(r) == 0:
                found[r] = found.get(r, 0) + 1
                rest = rest // PolyQ.linear(-r)
    ordered = sorted(found.items(), key=lambda kv: (kv[0] > 0, abs(kv[0])))
    return ordered, rest


# ---------------------------------------------------------------- formatting

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: PolyQ, var: str = "d") -> str:
    """Expanded form, descending powers: ``-d^3-6d^2-3d+6``."""
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a.numerator}{mono}"
            else:
                body = f"({_fmt_coeff(a)}){mono}"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def _linear_factor(root: int, var: str) -> str:
    if root == 0:
        return var
    return f"({var}+{-root})" if root < 0 else f"({var}-{root})"


def format_factored(p: PolyQ, var: str = "d") -> str:
    """Product of integer-root linear factors times any residual, e.g. ``d^2(d+1)(d-3)``."""
    roots, rest = factor_integer_roots(p)
    pieces = []
    if rest.degree == 0:
        if rest.lc != 1 or not roots:
            pieces.append(_fmt_coeff(rest.lc) if rest.lc > 0 else f"({_fmt_coeff(rest.lc)})")
    else:
        pieces.append(f"({format_poly(rest, var)})")
    for r, mult in roots:
        f = _linear_factor(r, var)
        pieces.append(f if mult == 1 else f"{f}^{mult}")
    return "".join(pieces)


def format_ratfunc(r: RatFuncQ, var: str = "d") -> str:
    """Factored-denominator style: ``(-1)/(d(d+2)(d-1))``; a polynomial prints bare."""
    num = format_poly(r.num, var)
    if r.den.degree == 0:
        return num
    return f"({num})/({format_factored(r.den, var)})"


# ---------------------------------------------------------------- parsing

_SUPER_DIGITS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_SUPERSCRIPT = re.compile("[⁰¹²³⁴⁵⁶⁷⁸⁹]+")
_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z]+)|(\S))")


def parse_ratfunc(text: str, var: str = "d") -> RatFuncQ:
    """Parse an arithmetic expression in ``var`` (``+ - * / ^``, parentheses,
    implicit multiplication) into a normalized rational function.

    Accepts the factored printing style, e.g. ``-(5d+6)/(d(d+1)(d-1))``.
    """
    text = text.replace("−", "-").replace("·", "*")
    text = _SUPERSCRIPT.sub(lambda m: "^" + m[0].translate(_SUPER_DIGITS), text)
    toks = []
    for num, name, sym in _TOKEN.findall(text):
        if num:
            toks.append(("num", int(num)))
        elif name:
            if name != var:
                raise ValueError(f"unknown symbol {name!r}")
            toks.append(("var", name))
        elif sym:
            toks.append(("sym", sym))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else ("end", None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("sym", "+"), ("sym", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while True:
            tok = peek()
            if tok == ("sym", "*"):
                take()
                val = val * unary()
            elif tok == ("sym", "/"):
                take()
                val = val / unary()
            elif tok[0] in ("num", "var") or tok == ("sym", "("):
                val = val * power()
            else:
                return val

    def unary():
        if peek() == ("sym", "-"):
            take()
            return -unary()
        if peek() == ("sym", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("sym", "^"):
            take()
            kind, k = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            out = RatFuncQ(1)
            for _ in range(k):
                out = out * base
            return out
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return RatFuncQ(val)
        if kind == "var":
            return RatFuncQ(PolyQ.var())
        if (kind, val) == ("sym", "("):
            inner = expr()
            if take() != ("sym", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    out = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return out


def poly_to_json(p: PolyQ) -> list:
    return [c.numerator if c.denominator == 1 else str(c) for c in p.coeffs]


def poly_from_json(data: Sequence) -> PolyQ:
    return PolyQ(Fraction(c) for c in data)


def ratfunc_to_json(r: RatFuncQ) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(data: dict) -> RatFuncQ:
    return RatFuncQ(poly_from_json(data["num"]), poly_from_json(data["den"]))


# ---------------------------------------------------------------- matrices

Matrix = list[list[Fraction]]


class SingularMatrixError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


class LinearSolution(NamedTuple):
    values: list[Fraction]
    unique: bool


def to_fractions(a: Sequence[Sequence[Number]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


def identity(m: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def is_symmetric(a) -> bool:
    m = len(a)
    return all(a[i][j] == a[j][i] for i in range(m) for j in range(i + 1, m))


def _integer_rows(a: Sequence[Sequence[Number]]) -> tuple[list[list[int]], int]:
    """``a == rows / scale`` with integer rows."""
    scale = lcm(1, *(Fraction(x).denominator for row in a for x in row))
    return [[int(Fraction(x) * scale) for x in row] for row in a], scale


def _reduce_row(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    return [x // g for x in row] if g > 1 else row


def _rref_int(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan on the first ``ncols`` columns.

    Returns the pivot rows (each scaled by its own pivot) and pivot columns.
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = _reduce_row([p * x - f * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _inverse_int(a: list[list[int]]) -> tuple[list[list[int]], int]:
    """Inverse of an integer matrix as ``(N, den)`` with ``a^{-1} = N / den``."""
    m = len(a)
    aug = [row + [int(i == j) for j in range(m)] for i, row in enumerate(a)]
    rows, pivots = _rref_int(aug, m)
    if len(pivots) < m:
        raise SingularMatrixError("matrix is singular")
    den = lcm(*(rows[i][i] for i in range(m)))
    if den < 0:
        den = -den
    out = []
    for i in range(m):
        f = den // rows[i][i]
        out.append([f * x for x in rows[i][m:]])
    return out, den


def rank(a) -> int:
    rows, _ = _integer_rows(a)
    return len(_rref_int(rows, len(a[0]) if a else 0)[1])


def inverse(a) -> Matrix:
    rows, scale = _integer_rows(a)
    n, den = _inverse_int(rows)
    return [[Fraction(x * scale, den) for x in row] for row in n]


def pseudo_inverse(a) -> Matrix:
    """Moore-Penrose pseudo-inverse of a symmetric rational matrix, exactly.

    With ``P`` the pivot columns of ``a``, ``F = a[:, P]`` and ``C = a[P, P]``
    (nonsingular for symmetric ``a``), the full-rank factorization
    ``a = F (C^{-1} F^T)`` gives ``a^+ = F S^{-1} C S^{-1} F^T`` with
    ``S = F^T F``.
    """
    if not is_symmetric(a):
        raise ValueError("pseudo_inverse expects a symmetric matrix")
    m = len(a)
    if m == 0:
        return []
    rows, scale = _integer_rows(a)
    _, pivots = _rref_int(rows, m)
    r = len(pivots)
    if r == 0:
        return [[Fraction(0)] * m for _ in range(m)]
    if r == m:
        n, den = _inverse_int(rows)
        return [[Fraction(x * scale, den) for x in row] for row in n]
    f = [[row[c] for c in pivots] for row in rows]
    ft = transpose(f)
    c = [[rows[i][j] for j in pivots] for i in pivots]
    s_inv, s_den = _inverse_int(matmul(ft, f))
    core = matmul(matmul(s_inv, c), s_inv)
    b = matmul(matmul(f, core), ft)
    den = s_den * s_den
    # a = rows/scale  =>  a^+ = scale * rows^+
    return [[Fraction(x * scale, den) for x in row] for row in b]


def solve_linear(a, b: Sequence[Number]) -> LinearSolution:
    """Exact solution of ``a x = b``.

    Singular but consistent systems return one solution (free variables set to
    zero) with ``unique=False``; inconsistent systems raise
    ``InconsistentSystemError``.
    """
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("solve_linear expects a square matrix")
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, _ = _integer_rows(aug)
    red, pivots = _rref_int(rows, m + 1)
    if m in pivots:
        raise InconsistentSystemError("system has no solution")
    x = [Fraction(0)] * m
    for row, c in zip(red, pivots):
        x[c] = Fraction(row[m], row[c])
    return LinearSolution(x, len(pivots) == m)
