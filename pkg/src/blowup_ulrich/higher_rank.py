"""Numerology of the rank-r Ulrich bundles built by iterated extensions.

Starting from two Ulrich line bundles ``L_1``, ``L_0`` of equal slope with
``h^1(L_1 - L_0) = h^1(L_0 - L_1) = h``, set ``E_1 = L_1`` and take non-split
extensions ``0 -> E_r -> E_{r+1} -> L_{eps(r+1)} -> 0`` where ``eps(r) = r mod 2``.
Everything here is a closed form in ``r`` and ``h``; the bundles themselves are
never built.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .lattice import DivisorClass, chi, exp_class, intersect, polarization
from .ulrich import verify


class HigherRankError(ValueError):
    pass


@dataclass(frozen=True)
class SeedPair:
    n: int
    m: int
    L0: DivisorClass
    L1: DivisorClass
    h: int
    mu: int


def seed_h(m: int) -> int:
    """``h^1(L_1 - L_0)``: ``(m^2-3)/2`` for odd m, ``(m^2-m-2)/2`` for even m."""
    return (m * m - 3) // 2 if m % 2 else (m * m - m - 2) // 2


def seed_classes(n: int, m: int) -> tuple[DivisorClass, DivisorClass]:
    """``(L_0, L_1)`` with the multiplicity blocks in the order they are displayed.

    The alignment matters: ``L_1 - L_0`` is taken slot by slot.
    """
    if m % 2:
        d = 3 * (m - 1) // 2
        a = b = (m * m - 1) // 8
        k = n - (m * m - 1) // 4
    else:
        d = 3 * m // 2 - 1
        a, b = m * (m + 2) // 8, m * (m - 2) // 8
        k = n - m * m // 4
    if k < 0:
        raise HigherRankError(f"n = {n} is too small for m = {m}")
    L1 = exp_class(d, [(2, a), (1, k), (0, b)])
    L0 = exp_class(d, [(0, b), (1, k), (2, a)])
    return L0, L1


def seed_pair(n: int, m: int, allow_conjectural: bool = False) -> SeedPair:
    if n < 2:
        raise HigherRankError("need n >= 2")
    if n == 2 and m != 3:
        raise HigherRankError("on X_2 the seed pair uses m = 3")
    pol = polarization(n, m, allow_conjectural)
    if n >= 3 and not (m * m < 4 * n and pol.very_ample):
        raise HigherRankError(f"need xi_{{{n},{m}}} very ample and m < 2 sqrt(n)")
    L0, L1 = seed_classes(n, m)
    for name, c in (("L0", L0), ("L1", L1)):
        verdict = verify(c, pol)
        if not verdict.is_ulrich:
            raise HigherRankError(f"{name} = {c} is {verdict.label}")
    h = seed_h(m)
    # Riemann-Roch cross-check: h^0 = h^2 = 0, so h^1 = -chi
    for diff in (L1 - L0, L0 - L1):
        if -chi(diff) != h:
            hint = ""
            if m % 2 == 0 and 4 * n < m * (m + 2):
                hint = f"; the closed form needs n >= m(m+2)/4 = {m * (m + 2) // 4} for even m"
            raise HigherRankError(f"-chi({diff}) = {-chi(diff)} disagrees with h = {h}{hint}")
    mu0, mu1 = intersect(L0, pol.base), intersect(L1, pol.base)
    if mu0 != mu1:
        raise HigherRankError(f"slopes differ: {mu0} != {mu1}")
    return SeedPair(n, m, L0, L1, h, mu0)


def epsilon(r: int) -> int:
    if r < 0:
        raise HigherRankError("r must be >= 0")
    return r % 2


def _check(r: int, h: int, r_min: int = 1) -> None:
    if r < r_min:
        raise HigherRankError(f"r must be >= {r_min}")
    if h < 3:
        raise HigherRankError("h must be >= 3")


def chi_E_L(r: int, h: int) -> int:
    """``chi(E_r (x) L*_{eps(r+1)})``."""
    _check(r, h)
    return -((r + 1) // 2) * (h - 1) - epsilon(r)


def chi_L_E(r: int, h: int) -> int:
    """``chi(L_{eps(r)} (x) E_r*)``."""
    _check(r, h)
    return -((r + 1) // 2) * (h - 1) + epsilon(r) * h


def chi_End(r: int, h: int) -> int:
    """``chi(E_r (x) E_r*)``; ``r^2 - eps(r)`` is always even."""
    _check(r, h)
    return -(r * r - epsilon(r)) * (h - 1) // 2 + epsilon(r)


def h1_E_L(r: int, h: int) -> int:
    """``h^1(E_r (x) L*_{eps(r+1)})``, the dimension of the next extension space."""
    _check(r, h)
    return ((r + 1) // 2) * (h - 1) + 1


def h1_E_L_same(r: int, h: int) -> int:
    """``h^1(E_r (x) L*_{eps(r)})``; one less than ``h1_E_L(r - 1, h)`` for r >= 2."""
    _check(r, h)
    return (r // 2) * (h - 1)


def moduli_dim(r: int, h: int) -> int:
    """Dimension of the component of stable rank-r Ulrich bundles, ``1 - chi_End``."""
    _check(r, h)
    return (r * r - epsilon(r)) * (h - 1) // 2 + epsilon(r + 1)


def ext_stratum_bound(r: int, h: int) -> int:
    """Upper bound for the dimension of the locus of extensions of ``L_{eps(r)}`` by rank r-1."""
    _check(r, h, r_min=2)
    return moduli_dim(r - 1, h) + (r // 2) * (h - 1)


@dataclass(frozen=True)
class RankProfile:
    r: int
    epsilon: int
    slope: int
    chi_E_L: int
    chi_L_E: int
    chi_End: int
    h1_E_L: int
    moduli_dim: int
    ext_dim_bound: Optional[int]
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def rank_profile(r: int, h: int, mu: int) -> RankProfile:
    return RankProfile(
        r=r,
        epsilon=epsilon(r),
        slope=mu,
        chi_E_L=chi_E_L(r, h),
        chi_L_E=chi_L_E(r, h),
        chi_End=chi_End(r, h),
        h1_E_L=h1_E_L(r, h),
        moduli_dim=moduli_dim(r, h),
        ext_dim_bound=ext_stratum_bound(r, h) if r >= 2 else None,
        note="line bundles on X_n are rigid" if r == 1 else "",
    )


def wildness_table(n: int, m: int, r_max: int, allow_conjectural: bool = False) -> list[RankProfile]:
    if r_max < 1:
        raise HigherRankError("r_max must be >= 1")
    seed = seed_pair(n, m, allow_conjectural)
    return [rank_profile(r, seed.h, seed.mu) for r in range(1, r_max + 1)]


PROFILE_COLUMNS = ["r", "epsilon", "slope", "chi_E_L", "chi_L_E", "chi_End",
                   "h1_E_L", "moduli_dim", "ext_dim_bound"]
