"""Integer partitions, hook lengths and symmetric-group characters.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.
"""

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple."""
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1,1"``; the empty string is the empty partition.

    Parts are sorted, so ``"1,2"`` is accepted as ``(2, 1)``.
    """
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return make_partition(sorted((int(t) for t in text.split(",") if t.strip()), reverse=True))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order: ``(n)`` first, ``(1^n)`` last."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def weight(lam: Partition) -> int:
    return sum(lam)


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


def z_mu(mu: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type ``mu``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def double(lam: Partition) -> Partition:
    return tuple(2 * p for p in lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cells(lam: Partition):
    """Yield the 1-based (row, column) coordinates of the Young diagram."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(lam)]


def dim_f(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def hook_rsn(r: int, s: int, n: int) -> int:
    """``(2n)! / f^{2λ}`` for ``λ = (r, s, 1^{n-r-s})`` with ``s >= 1``, in closed product form."""
    if not (1 <= s <= r and r + s <= n):
        raise ValueError(f"invalid hook triple (r={r}, s={s}, n={n})")
    num = (
        (n + r - s + 1)
        * (n + r - s)
        * (n - r + s)
        * (n - r + s - 1)
        * factorial(n - r - s + 1)
        * factorial(n - r - s)
        * factorial(2 * s - 2)
        * factorial(2 * r - 1)
    )
    q, rem = divmod(num, 2 * r - 2 * s + 1)
    assert rem == 0
    return q


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    # first-column hook lengths padded to ``length`` beads
    padded = list(lam) + [0] * (length - len(lam))
    return tuple(padded[i] + length - 1 - i for i in range(length))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    length = len(beta)
    beads = sorted(beta, reverse=True)
    return tuple(p for p in (beads[i] - (length - 1 - i) for i in range(length)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam, len(lam))
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        # leg length = number of beads strictly between target and b
        leg = sum(1 for c in beta if target < c < b)
        new_beta = tuple(target if c == b else c for c in beta)
        total += (-1) ** leg * _mn(_from_beta(new_beta), rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``χ^λ`` on the class of cycle type ``mu`` (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def catalan(k: int) -> int:
    return factorial(2 * k) // (factorial(k + 1) * factorial(k))


def double_factorial(m: int) -> int:
    """``m!!``; by convention ``0!! = (-1)!! = 1``."""
    return prod(range(m, 0, -2)) if m > 0 else 1
