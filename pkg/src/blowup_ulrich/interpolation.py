"""Monte Carlo h^0 of fat-point systems over a prime field.

Independent of the decision ladder in :mod:`cohomology`: it builds the
interpolation matrix for random points and returns its corank.  A rank can only
be underestimated by an unlucky choice of points, so the result is an upper
bound on the value for very general points and is exact with high probability.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .cohomology import strip_fixed_exceptional
from .lattice import DivisorClass

DEFAULT_PRIME = 2_147_483_647  # 2^31 - 1
MIN_PRIME = 1 << 20
# products of two residues must fit in int64
MAX_PRIME = 3_037_000_499


class OracleError(RuntimeError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin for 64-bit inputs
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by row reduction."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = a[rank] * inv % p
        others = np.nonzero(a[:, col])[0]
        for r in others:
            if r != rank:
                a[r] = (a[r] - a[r, col] * a[rank] % p) % p
        rank += 1
    return rank


def monomials(d: int) -> list[tuple[int, int]]:
    """Exponents ``(a, b)`` of ``x^a y^b`` with ``a + b <= d``."""
    return [(a, t - a) for t in range(d + 1) for a in range(t + 1)]


def interpolation_matrix(d: int, mults, points, p: int) -> np.ndarray:
    """Rows: Hasse derivatives of order < m_i at each point; columns: monomials."""
    mons = monomials(d)
    rows = []
    for m, (px, py) in zip(mults, points):
        for order in range(m):
            for i in range(order + 1):
                j = order - i
                row = []
                for a, b in mons:
                    if a < i or b < j:
                        row.append(0)
                        continue
                    coeff = comb(a, i) * comb(b, j) % p
                    row.append(coeff * pow(px, a - i, p) % p * pow(py, b - j, p) % p)
                rows.append(row)
    if not rows:
        return np.zeros((0, len(mons)), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def h0_interpolation(
    c: DivisorClass,
    prime: int = DEFAULT_PRIME,
    trials: int = 3,
    seed: int = 0,
    retries: int = 16,
) -> int:
    if not (MIN_PRIME <= prime <= MAX_PRIME) or not _is_prime(prime):
        raise OracleError(f"need a prime in [2^20, {MAX_PRIME}], got {prime}")
    if trials < 1:
        raise OracleError("need at least one trial")
    residual, _ = strip_fixed_exceptional(c)
    d = residual.d
    if d < 0:
        raise OracleError("residual degree must be >= 0")
    active = [m for m in residual.mults if m > 0]
    ncols = (d + 1) * (d + 2) // 2
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(trials):
        for _ in range(retries):
            pts = [tuple(int(v) for v in rng.integers(0, prime, size=2)) for _ in active]
            if len(set(pts)) == len(pts):
                break
        else:
            raise OracleError("random points kept colliding")
        rank = rank_mod_p(interpolation_matrix(d, active, pts, prime), prime) if active else 0
        corank = ncols - rank
        # an unlucky draw can only lose rank, so keep the smallest corank
        best = corank if best is None else min(best, corank)
    return best
