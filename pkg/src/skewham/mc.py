"""Monte-Carlo codimension estimates for {rank phi(A, B) <= r} over F_p.

Samples are drawn in fixed-size blocks, each from its own generator seeded by
(seed, block index), so the result does not depend on how blocks are scheduled.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .fields import GF

BLOCK = 4096
INFINITE = math.inf


@dataclass(frozen=True)
class SampleConfig:
    n: int
    r: int
    p: int
    samples: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise DomainError(f"n must be even and >= 2, got {self.n}")
        if not 2 <= self.r <= self.n:
            raise DomainError(f"need 2 <= r <= n, got r={self.r}")
        if self.samples < 1:
            raise DomainError("samples must be positive")
        if self.p >= 2**31:
            raise DomainError("p must be below 2^31 for int64 arithmetic")
        GF(self.p)  # validates an odd prime


@dataclass(frozen=True)
class CodimEstimate:
    hits: int
    samples: int
    fraction: Fraction
    log_ratio: float  # -log_p(fraction)
    codim: int | float  # INFINITE when there are no hits


def random_skew_batch(rng: np.random.Generator, count: int, n: int, p: int) -> np.ndarray:
    U = np.triu(rng.integers(0, p, size=(count, n, n), dtype=np.int64), 1)
    return (U - U.transpose(0, 2, 1)) % p


def phi_batch(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """AJB - BJA mod p for stacks of skew matrices."""
    h = A.shape[-1] // 2
    AJ = np.concatenate([-A[..., h:], A[..., :h]], axis=-1) % p
    X = np.matmul(AJ, B) % p
    return (X + X.transpose(0, 2, 1)) % p


def _inverse_mod(a: np.ndarray, p: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % p
    e = p - 2
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def batch_rank_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of square matrices over F_p, Gaussian elimination with full pivoting."""
    M = np.array(M, dtype=np.int64) % p
    N, n, _ = M.shape
    rows = np.arange(N)
    ranks = np.zeros(N, dtype=np.int64)
    for k in range(n):
        nz = M[:, k:, k:] != 0
        has = nz.reshape(N, -1).any(axis=1)
        if not has.any():
            break
        idx = nz.reshape(N, -1).argmax(axis=1)
        pi = k + idx // (n - k)
        pj = k + idx % (n - k)
        M[rows, k], M[rows, pi] = M[rows, pi].copy(), M[rows, k].copy()
        M[rows, :, k], M[rows, :, pj] = M[rows, :, pj].copy(), M[rows, :, k].copy()
        ranks += has
        inv = _inverse_mod(M[:, k, k], p) * has  # rows without a pivot stay put
        factor = M[:, k + 1:, k] * inv[:, None] % p
        M[:, k + 1:, :] = (M[:, k + 1:, :] - factor[:, :, None] * M[:, None, k, :]) % p
    return ranks


def _block_hits(args: tuple[SampleConfig, int]) -> int:
    cfg, b = args
    count = min(BLOCK, cfg.samples - b * BLOCK)
    rng = np.random.default_rng([cfg.seed, b])
    A = random_skew_batch(rng, count, cfg.n, cfg.p)
    B = random_skew_batch(rng, count, cfg.n, cfg.p)
    return int((batch_rank_mod_p(phi_batch(A, B, cfg.p), cfg.p) <= cfg.r).sum())


def mc_codim_estimate(cfg: SampleConfig, workers: int = 1) -> CodimEstimate:
    jobs = [(cfg, b) for b in range(-(-cfg.samples // BLOCK))]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            hits = sum(ex.map(_block_hits, jobs))
    else:
        hits = sum(map(_block_hits, jobs))
    frac = Fraction(hits, cfg.samples)
    if hits == 0:
        return CodimEstimate(hits, cfg.samples, frac, INFINITE, INFINITE)
    log_ratio = -math.log(hits / cfg.samples) / math.log(cfg.p)
    codim = 0 if frac > Fraction(1, 2) else round(log_ratio)
    return CodimEstimate(hits, cfg.samples, frac, log_ratio, codim)
