"""Infinite families of Ulrich line bundles ``(d; 2^delta, 1^k, 0^(n-delta-k))``.

For ``n >= 3`` and ``xi_{n,m}`` very ample with ``m^2 <= 4n``, every positive d with

    (2d - (2m-3))^2 <= 8n + 1      and      (2d - 3(m-1))^2 < 4n - m^2 + 1

gives an Ulrich class with

    delta = (d-m)(d-m+3)/2 + 1,
    k     = n + 3m(d+1) - m(5m-3)/2 - (d^2 + 3d + 2) = ((4n - m^2 + 1) - (2d - 3m + 3)^2) / 4.

Equality in the second inequality gives ``k = 0``; those boundary classes are
still Ulrich when their general member is smooth (e.g. ``(3;2,0)`` on X_2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .lattice import DivisorClass, exp_class, minimal_very_ample_m, polarization, vdim


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyRecord:
    n: int
    m: int
    d: int
    delta: int
    k: int
    cls: DivisorClass
    boundary: bool = False

    @property
    def orbit_size(self) -> int:
        """Number of distinct classes obtained by permuting the points."""
        rest = self.n - self.delta - self.k
        return factorial(self.n) // (factorial(self.delta) * factorial(self.k) * factorial(rest))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "delta": self.delta,
            "k": self.k,
            "class": str(self.cls),
            "vdim": vdim(self.cls),
            "orbit_size": self.orbit_size,
            "boundary": self.boundary,
        }


def _check_params(n: int, m: int) -> None:
    if n < 3:
        raise FamilyError("the families need n >= 3")
    if m * m > 4 * n:
        raise FamilyError(f"m = {m} exceeds 2 sqrt(n) for n = {n}")
    if not polarization(n, m).very_ample:
        raise FamilyError(f"xi_{{{n},{m}}} is not known to be very ample")


def _in_first_window(n: int, m: int, d: int) -> bool:
    return (2 * d - (2 * m - 3)) ** 2 <= 8 * n + 1


def d_range(n: int, m: int) -> list[int]:
    """Degrees d admitted by both window inequalities, ascending."""
    _check_params(n, m)
    disc = 4 * n - m * m + 1
    # both windows are centred near 3(m-1)/2 with half-width < sqrt(n) + m
    hi = 3 * m + 2 * n + 4
    return [
        d for d in range(1, hi)
        if _in_first_window(n, m, d) and (2 * d - 3 * (m - 1)) ** 2 < disc
    ]


def delta_k(n: int, m: int, d: int) -> tuple[int, int]:
    """Return ``(delta, k)`` and check ``0 <= delta, k <= n`` and ``delta + k <= n``.

    ``k = 0`` is accepted so that boundary classes can be described; the
    strict families additionally need ``k >= 1``.
    """
    delta = (d - m) * (d - m + 3) // 2 + 1
    k = n + 3 * m * (d + 1) - m * (5 * m - 3) // 2 - (d * d + 3 * d + 2)
    if not (0 <= delta <= n and 0 <= k <= n and delta + k <= n):
        raise FamilyError(f"(n, m, d) = ({n}, {m}, {d}) gives delta={delta}, k={k} out of range")
    return delta, k


def family_class(n: int, d: int, delta: int, k: int) -> DivisorClass:
    return exp_class(d, [(2, delta), (1, k), (0, n - delta - k)])


def _record(n: int, m: int, d: int, boundary: bool) -> FamilyRecord:
    delta, k = delta_k(n, m, d)
    return FamilyRecord(n, m, d, delta, k, family_class(n, d, delta, k), boundary)


def theorem_family(n: int, m: int) -> list[FamilyRecord]:
    """One canonical record per admissible degree.

    ``(n, m) = (2, 3)`` falls outside ``m^2 <= 4n`` and is answered with its
    single boundary class ``(3;2,0)``.
    """
    if (n, m) == (2, 3):
        return boundary_candidates(2, 3)
    _check_params(n, m)
    records = []
    for d in d_range(n, m):
        rec = _record(n, m, d, boundary=False)
        if rec.k < 1:
            raise FamilyError(f"strict window produced k = {rec.k} at d = {d}")
        records.append(rec)
    return records


def boundary_candidates(n: int, m: int) -> list[FamilyRecord]:
    """Classes with ``k = 0``: equality in the second window inequality."""
    if (n, m) != (2, 3):
        _check_params(n, m)
    disc = 4 * n - m * m + 1
    out = []
    for d in range(1, 3 * m + 2 * n + 4):
        if (2 * d - 3 * (m - 1)) ** 2 != disc or not _in_first_window(n, m, d):
            continue
        try:
            rec = _record(n, m, d, boundary=True)
        except FamilyError:
            continue
        out.append(rec)
    return out


def family_count(n: int) -> tuple[int, int]:
    """``(m, number of family shapes)`` at the minimal very ample m."""
    if n < 3:
        raise FamilyError("family_count needs n >= 3")
    m = minimal_very_ample_m(n)
    return m, len(d_range(n, m))
