"""Sheaf cohomology of line bundles on X_n, decided only where a proof exists.

``h0``, ``h1`` and ``h2`` return an ``int`` or ``None``; ``None`` means the
ladder below has no theorem covering the class and it refuses to guess.

Ladder for ``h0`` (applied to the class after dropping negative multiplicities,
which only contribute fixed exceptional components):

1. negative degree: empty;
2. a multiplicity above the degree: empty (a nonzero plane curve of degree d has
   no point of multiplicity > d);
3. multiplicities in {0, 1}: ``max(0, (d+1)(d+2)/2 - #ones)``, general simple
   points impose independent conditions;
4. multiplicities in {0, 1, 2} with at least one 1 and ``vdim >= 0``: regular,
   ``vdim + 1``;
5. anything else: unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .lattice import DivisorClass, chi, serre_dual, vdim


class Rule(str, enum.Enum):
    NEGATIVE_DEGREE = "negative_degree"
    FIXED_PART_STRIP = "fixed_part_strip"
    MULTIPLICITY_EXCEEDS_DEGREE = "multiplicity_exceeds_degree"
    SIMPLE_POINTS = "simple_points"
    DOUBLE_AND_SIMPLE = "double_and_simple_points"
    SERRE_DUALITY = "serre_duality"
    RIEMANN_ROCH = "riemann_roch"
    UNKNOWN = "unknown"


def strip_fixed_exceptional(c: DivisorClass) -> tuple[DivisorClass, DivisorClass]:
    """Split ``c`` into ``residual + fixed`` with ``fixed`` the negative exceptional part.

    Each ``E_i`` with negative multiplicity is a fixed component of ``|c|``, so
    ``h0(c) == h0(residual)``.
    """
    residual = DivisorClass(c.d, tuple(max(m, 0) for m in c.mults))
    return residual, c - residual


def h0_with_rule(c: DivisorClass) -> tuple[Optional[int], str]:
    residual, fixed = strip_fixed_exceptional(c)
    prefix = f"{Rule.FIXED_PART_STRIP.value}+" if any(fixed.mults) else ""
    d, mults = residual.d, residual.mults
    if d < 0:
        return 0, prefix + Rule.NEGATIVE_DEGREE.value
    if any(m > d for m in mults):
        return 0, prefix + Rule.MULTIPLICITY_EXCEEDS_DEGREE.value
    top = max(mults, default=0)
    if top <= 1:
        ones = sum(mults)
        return max(0, (d + 1) * (d + 2) // 2 - ones), prefix + Rule.SIMPLE_POINTS.value
    if top == 2 and 1 in mults:
        v = vdim(residual)
        if v >= 0:
            return v + 1, prefix + Rule.DOUBLE_AND_SIMPLE.value
    return None, prefix + Rule.UNKNOWN.value


def h0(c: DivisorClass) -> Optional[int]:
    return h0_with_rule(c)[0]


def is_empty(c: DivisorClass) -> Optional[bool]:
    value = h0(c)
    return None if value is None else value == 0


def h2_with_rule(c: DivisorClass) -> tuple[Optional[int], str]:
    if c.d > -3:
        return 0, Rule.NEGATIVE_DEGREE.value  # the dual K - c has negative degree
    value, rule = h0_with_rule(serre_dual(c))
    return value, f"{Rule.SERRE_DUALITY.value}+{rule}"


def h2(c: DivisorClass) -> Optional[int]:
    return h2_with_rule(c)[0]


def h1_with_rule(c: DivisorClass) -> tuple[Optional[int], str]:
    zero = h0(c)
    top = h2(c)
    if zero is None or top is None:
        return None, Rule.UNKNOWN.value
    return zero + top - chi(c), Rule.RIEMANN_ROCH.value


def h1(c: DivisorClass) -> Optional[int]:
    return h1_with_rule(c)[0]


@dataclass(frozen=True)
class CohomologyReport:
    cls: DivisorClass
    h0: Optional[int]
    h1: Optional[int]
    h2: Optional[int]
    rules: dict

    @property
    def regular(self) -> Optional[bool]:
        return None if self.h1 is None else self.h1 == 0

    def as_dict(self) -> dict:
        return {
            "class": str(self.cls.canonical()),
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "rules": dict(self.rules),
        }


def cohomology(c: DivisorClass) -> CohomologyReport:
    v0, r0 = h0_with_rule(c)
    v1, r1 = h1_with_rule(c)
    v2, r2 = h2_with_rule(c)
    return CohomologyReport(c, v0, v1, v2, {"h0": r0, "h1": r1, "h2": r2})


class Smoothness(str, enum.Enum):
    CERTIFIED = "certified_smooth_irreducible"
    GENERAL_POINT = "certified_by_general_point"
    BERTINI = "certified_by_bertini"
    UNCERTIFIED = "uncertified"


@dataclass(frozen=True)
class SmoothnessCertificate:
    status: Smoothness
    rule: str

    @property
    def certified(self) -> bool:
        return self.status is not Smoothness.UNCERTIFIED


def smooth_irreducible_member(c: DivisorClass) -> SmoothnessCertificate:
    """Certify that the general member of ``|c|`` is a smooth irreducible curve.

    Three sources are used: point-free plane systems (Bertini); classes
    ``(d; 2^a, 1^b, 0^*)`` with ``b >= 1`` and ``vdim >= 0``, which are regular
    with smooth irreducible general member; and the same shape with ``b = 0``,
    at least one zero slot and ``vdim >= 1``.  In the last case imposing a
    simple base point at a general point lands in the previous case, and the
    curves through a general point already include smooth irreducible ones.
    """
    mults = c.mults
    if any(m < 0 for m in mults) or any(m > 2 for m in mults):
        return SmoothnessCertificate(Smoothness.UNCERTIFIED, "multiplicities outside {0,1,2}")
    if not any(mults):
        if c.d >= 1:
            return SmoothnessCertificate(Smoothness.BERTINI, "general plane curve of degree d")
        return SmoothnessCertificate(Smoothness.UNCERTIFIED, "no curves of degree < 1")
    v = vdim(c)
    if 1 in mults:
        if v >= 0:
            return SmoothnessCertificate(Smoothness.CERTIFIED, "(d;2^a,1^b,0^*) with b>=1, vdim>=0")
        return SmoothnessCertificate(Smoothness.UNCERTIFIED, "vdim < 0")
    if 0 in mults and v >= 1:
        return SmoothnessCertificate(
            Smoothness.GENERAL_POINT, "(d;2^a,0^*) through a general point is (d;2^a,1,0^*)"
        )
    return SmoothnessCertificate(Smoothness.UNCERTIFIED, "no simple point and no free slot")
