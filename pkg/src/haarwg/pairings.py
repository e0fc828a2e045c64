"""Pair partitions of {1..2n}, their permutation embedding and coset types.

A pair partition is stored as the flat canonical tuple ``(m(1), ..., m(2n))``
with ``m(2i-1) < m(2i)`` and ``m(1) < m(3) < ...``.  Permutations are tuples
of 1-based images, ``perm[k-1] == σ(k)``.
"""

import re
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .partitions import Partition, double_factorial

Perm = tuple[int, ...]

HYPEROCTAHEDRAL_CAP = 7


class PairPartition(tuple):
    """A perfect matching of {1..2n} in canonical flattened form."""

    __slots__ = ()

    def __new__(cls, blocks: Iterable[Sequence[int]]):
        pairs = sorted(tuple(sorted(b)) for b in blocks)
        flat = tuple(x for b in pairs for x in b)
        if any(len(b) != 2 for b in pairs) or sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"not a pair partition of 1..{len(flat)}: {pairs}")
        return super().__new__(cls, flat)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "PairPartition":
        return cls(zip(seq[0::2], seq[1::2]))

    @property
    def n(self) -> int:
        return len(self) // 2

    @property
    def blocks(self) -> list[tuple[int, int]]:
        return [(self[2 * i], self[2 * i + 1]) for i in range(self.n)]

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.blocks:
            out[a] = b
            out[b] = a
        return out

    def __repr__(self) -> str:
        return format_pairing(self)


def format_pairing(m: PairPartition) -> str:
    return "".join(f"{{{a},{b}}}" for a, b in m.blocks)


def parse_pairing(text: str) -> PairPartition:
    """Parse ``"{1,2}{3,4}"``; blocks may be listed in any order."""
    blocks = re.findall(r"\{\s*(\d+)\s*,\s*(\d+)\s*\}", text)
    if not blocks:
        raise ValueError(f"no blocks found in {text!r}")
    return PairPartition((int(a), int(b)) for a, b in blocks)


def identity_pairing(n: int) -> PairPartition:
    return PairPartition((2 * i - 1, 2 * i) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def enumerate_pairings(n: int) -> tuple[PairPartition, ...]:
    """All ``(2n-1)!!`` pair partitions of {1..2n}, lexicographic in the canonical sequence."""
    if n < 1:
        raise ValueError("n must be positive")

    def gen(items: tuple[int, ...]):
        if not items:
            yield ()
            return
        first, rest = items[0], items[1:]
        for k, other in enumerate(rest):
            for tail in gen(rest[:k] + rest[k + 1 :]):
                yield (first, other) + tail

    out = tuple(PairPartition.from_sequence(s) for s in gen(tuple(range(1, 2 * n + 1))))
    assert len(out) == double_factorial(2 * n - 1)
    return out


def to_perm(m: PairPartition) -> Perm:
    return tuple(m)


def compose(s: Perm, t: Perm) -> Perm:
    """``(s t)(k) = s(t(k))``."""
    return tuple(s[x - 1] for x in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for k, v in enumerate(s, start=1):
        out[v - 1] = k
    return tuple(out)


def cycle_type(s: Perm) -> Partition:
    seen = [False] * len(s)
    lengths = []
    for start in range(len(s)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = s[k] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _component_half_sizes(size: int, edges: Iterable[tuple[int, int]]) -> Partition:
    parent = list(range(size + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    counts: dict[int, int] = {}
    for v in range(1, size + 1):
        r = find(v)
        counts[r] = counts.get(r, 0) + 1
    assert all(c % 2 == 0 for c in counts.values())
    return tuple(sorted((c // 2 for c in counts.values()), reverse=True))


def coset_type(sigma: Perm) -> Partition:
    """Coset type of ``sigma`` in S_2n: half the component sizes of Γ(σ)."""
    size = len(sigma)
    if size % 2:
        raise ValueError("coset type needs a permutation of an even number of points")
    n = size // 2
    edges = [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    edges += [(sigma[2 * i - 2], sigma[2 * i - 1]) for i in range(1, n + 1)]
    return _component_half_sizes(size, edges)


def pair_coset_type(m: PairPartition, n_: PairPartition) -> Partition:
    """Coset type of ``m^{-1} n``, read directly from the loops of Γ(m, n)."""
    if len(m) != len(n_):
        raise ValueError("pairings of different sizes")
    return _component_half_sizes(len(m), m.blocks + n_.blocks)


def loops(m: PairPartition, n_: PairPartition) -> int:
    return len(pair_coset_type(m, n_))


def act(sigma: Perm, m: PairPartition) -> PairPartition:
    """Image of ``m`` under relabelling its points by ``sigma``."""
    if len(sigma) != len(m):
        raise ValueError("permutation and pairing sizes differ")
    return PairPartition((sigma[a - 1], sigma[b - 1]) for a, b in m.blocks)


def enumerate_hyperoctahedral(n: int) -> list[Perm]:
    """All ``2^n n!`` elements of the centralizer of (1 2)(3 4)...(2n-1 2n).

    Built as the wreath product: a permutation of the blocks together with a
    flip inside each block.
    """
    if not 1 <= n <= HYPEROCTAHEDRAL_CAP:
        raise ValueError(f"n must be in 1..{HYPEROCTAHEDRAL_CAP}")
    out = []
    for pi in permutations(range(n)):
        for flips in product((0, 1), repeat=n):
            img = [0] * (2 * n)
            for i in range(n):
                lo, hi = 2 * pi[i] + 1, 2 * pi[i] + 2
                if flips[i]:
                    lo, hi = hi, lo
                img[2 * i] = lo
                img[2 * i + 1] = hi
            out.append(tuple(img))
    return out


def coset_rep_pair(rho: Partition) -> tuple[PairPartition, PairPartition]:
    """A pair ``(m0, n)`` with ``m0`` the identity pairing and coset type of ``m0^{-1} n`` equal to ``rho``."""
    n = sum(rho)
    m0 = identity_pairing(n)
    blocks = []
    start = 1
    for part in rho:
        pts = list(range(start, start + 2 * part))
        # shift by one so consecutive identity blocks chain into one loop
        shifted = pts[1:] + pts[:1]
        blocks += [(shifted[2 * i], shifted[2 * i + 1]) for i in range(part)]
        start += 2 * part
    return m0, PairPartition(blocks)


@lru_cache(maxsize=None)
def unitary_pairings(n: int) -> tuple[PairPartition, ...]:
    """The ``n!`` pairings linking each of 1..n to one of n+1..2n, ordered by the associated permutation."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(PairPartition((i + 1, n + s) for i, s in enumerate(sigma))
                 for sigma in permutations(range(1, n + 1)))


def is_unitary(m: PairPartition) -> bool:
    n = m.n
    return all((a <= n) != (b <= n) for a, b in m.blocks)


def unitary_to_sn(m: PairPartition) -> Perm:
    """The permutation with ``σ(i) = j`` iff ``m`` links ``i`` and ``n + j``."""
    if not is_unitary(m):
        raise ValueError(f"{m!r} is not in the unitary subset")
    n = m.n
    out = [0] * n
    for a, b in m.blocks:
        lo, hi = min(a, b), max(a, b)
        out[lo - 1] = hi - n
    return tuple(out)


def pairing_count(n: int) -> int:
    return double_factorial(2 * n - 1)


def unitary_count(n: int) -> int:
    return factorial(n)
