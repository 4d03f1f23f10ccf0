"""Exact linear algebra over GF(p) for word-sized primes (p < 2**31).

The elimination kernel is the hot loop of the rank oracle.  A compiled
version (tncuts._rankcore) is used when the extension built; otherwise the
vectorised numpy implementation below takes over.  Set TNCUTS_PURE=1 to
force the pure path regardless.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from . import _rankcore
except ImportError:
    _rankcore = None

_FORCE_PURE = bool(os.environ.get("TNCUTS_PURE"))

MAX_PRIME = (1 << 31) - 1
MIN_PRIME = 10**6


def compiled_available() -> bool:
    return _rankcore is not None


def active_backend() -> str:
    """Which rank kernel dispatches: "compiled" or "pure"."""
    return "compiled" if (_rankcore is not None and not _FORCE_PURE) else "pure"


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.2e18."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_prime(p: int) -> int:
    """Check the field modulus: a prime with 10**6 < p <= 2**31 - 1."""
    if not isinstance(p, int) or p <= MIN_PRIME or p > MAX_PRIME:
        raise ValueError(f"field modulus must satisfy 10^6 < p <= 2^31-1, got {p}")
    if not is_prime(p):
        raise ValueError(f"field modulus must be prime, got {p}")
    return p


def rank_mod_pure(matrix: np.ndarray, p: int) -> int:
    """Rank over GF(p) by row elimination (numpy, exact)."""
    a = np.array(matrix, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("rank_mod expects a 2-d array")
    a %= p
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    m, k = a.shape
    if m == 0 or k == 0:
        return 0
    rank = 0
    for col in range(k):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        # factors and pivot entries are < p, so products fit in int64
        factors = (a[rank + 1 :, col] * inv) % p
        a[rank + 1 :, col:] = (a[rank + 1 :, col:] - factors[:, None] * a[rank, col:]) % p
        rank += 1
    return rank


def rank_mod(matrix: np.ndarray, p: int) -> int:
    """Rank over GF(p); dispatches to the compiled kernel when available."""
    if _rankcore is None or _FORCE_PURE:
        return rank_mod_pure(matrix, p)
    a = np.array(matrix, dtype=np.int64, order="C")
    if a.ndim != 2:
        raise ValueError("rank_mod expects a 2-d array")
    a %= p
    if a.shape[0] > a.shape[1]:
        a = np.ascontiguousarray(a.T)
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return _rankcore.rank_mod(a, p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) mod p for int64 inputs with entries in [0, p).

    Accumulates two products per step: 2*(p-1)^2 still fits in int64 for
    p <= 2^31 - 1.
    """
    m, k = a.shape
    k2, n = b.shape
    if k != k2:
        raise ValueError("matmul_mod shape mismatch")
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(0, k, 2):
        out += (a[:, i : i + 2] @ b[i : i + 2, :]) % p
        out %= p
    return out
