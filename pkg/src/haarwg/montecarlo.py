"""Monte Carlo estimates of Haar integrals, for statistical cross-checks.

Samples are QR factorizations of Gaussian matrices with the phases of R's
diagonal moved into Q, which is what makes Q Haar distributed.  The RNG is
numpy's PCG64; a run of ``samples`` draws is split into chunks of
``CHUNK`` whose generators are ``SeedSequence(seed).spawn(k)``, so results
are bit-identical for a given seed regardless of how the chunks are consumed.
"""

from dataclasses import dataclass

import numpy as np

from .moments import MonomialSpec

CHUNK = 100_000
DEFAULT_SIGMAS = 4.0


@dataclass(frozen=True)
class SampleEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int

    def zscore(self, exact: float) -> float:
        if self.stderr == 0:
            return 0.0 if self.mean == exact else float("inf")
        return (self.mean - exact) / self.stderr

    def agrees(self, exact: float, sigmas: float = DEFAULT_SIGMAS) -> bool:
        return abs(self.mean - exact) <= sigmas * self.stderr


def _fix_phases(q: np.ndarray, r: np.ndarray) -> np.ndarray:
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    phase = diag / np.abs(diag)
    return q * phase[..., None, :]


def haar_orth_batch(d: int, size: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((size, d, d))
    q, r = np.linalg.qr(z)
    return _fix_phases(q, r)


def haar_unit_batch(d: int, size: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((size, d, d)) + 1j * rng.standard_normal((size, d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return _fix_phases(q, r)


def sample_haar_orth(d: int, seed: int) -> np.ndarray:
    if d < 1:
        raise ValueError("d must be positive")
    return haar_orth_batch(d, 1, np.random.default_rng(seed))[0]


def sample_haar_unit(d: int, seed: int) -> np.ndarray:
    if d < 1:
        raise ValueError("d must be positive")
    return haar_unit_batch(d, 1, np.random.default_rng(seed))[0]


def _estimate(fn, group: str, d: int, samples: int, seed: int) -> SampleEstimate:
    if samples < 2:
        raise ValueError("need at least two samples")
    batch = haar_orth_batch if group == "orth" else haar_unit_batch
    n_chunks = -(-samples // CHUNK)
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    total = 0.0
    total_sq = 0.0
    for c, child in enumerate(children):
        size = min(CHUNK, samples - c * CHUNK)
        vals = fn(batch(d, size, np.random.Generator(np.random.PCG64(child))))
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return SampleEstimate(mean, float(np.sqrt(var / samples)), samples, seed)


def estimate_monomial(spec: MonomialSpec, group: str, d: int, samples: int, seed: int) -> SampleEstimate:
    """Sample mean of the monomial (its real part, for the unitary group)."""
    if spec.max_index() > d:
        raise ValueError(f"index {spec.max_index()} out of range 1..{d}")
    if group == "orth" and any(spec.conjugated):
        raise ValueError("orthogonal monomials have no conjugated factors")

    def fn(g):
        out = np.ones(g.shape[0], dtype=g.dtype)
        for (i, j), c in zip(spec.entries, spec.conjugated):
            x = g[:, i - 1, j - 1]
            out = out * (np.conj(x) if c else x)
        return out.real

    return _estimate(fn, group, d, samples, seed)


def estimate_trace_moment(power: int, k: int, d: int, samples: int, seed: int) -> SampleEstimate:
    """Sample mean of ``tr(g^{(k)})^power`` over O(d)."""
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")

    def fn(g):
        return np.trace(g[:, :k, :k], axis1=1, axis2=2) ** power

    return _estimate(fn, "orth", d, samples, seed)


def check_with_retry(estimator, exact: float, seed: int, sigmas: float = DEFAULT_SIGMAS):
    """Run ``estimator(seed)``; on disagreement rerun once with ``seed + 1``.

    Returns ``(passed, estimate)`` where ``estimate`` is the last one drawn.
    """
    est = estimator(seed)
    if est.agrees(exact, sigmas):
        return True, est
    est = estimator(seed + 1)
    return est.agrees(exact, sigmas), est
