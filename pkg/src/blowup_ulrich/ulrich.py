"""Ulrich test for a line bundle O(C) on X_n polarized by ``xi = (m; 1^n)``.

For a very ample H on a surface S, ``O(C) != O`` is Ulrich iff

(i)   ``C.H = H.(3H + K) / 2``;
(ii)  ``(C^2 - C.K) / 2 + chi(O_S) - H^2 = 0``;
(iii) ``h^1(O_C(K + H)) = 0``;
(iv)  ``H^0(K + 2H) -> H^0(O_C(K + 2H))`` is injective (or surjective).

On X_n, ``h^1(K + xi) = h^0(-xi) = 0``, so the restriction sequence of C gives
``h^1(O_C(K + xi)) = h^0(C - xi)`` and (iii) becomes an emptiness question.  The
kernel in (iv) is ``H^0(K + 2 xi - C)``.  Both go through the cohomology ladder;
whatever it cannot decide comes back as ``None``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .cohomology import SmoothnessCertificate, h0_with_rule, smooth_irreducible_member
from .lattice import DivisorClass, Polarization, canonical_class, intersect, parse_class


class VerificationError(ValueError):
    pass


class Outcome(str, enum.Enum):
    ULRICH = "Ulrich"
    NOT_ULRICH = "NotUlrich"
    UNDECIDED = "Undecided"


# Classes whose smooth member the rules above cannot produce but which are
# known Ulrich by a geometric argument: on X_10 a curve (7;2^10) of genus 5 and
# degree 8 in P^4 is canonical, so it is smooth in its system.
GEOMETRIC_WHITELIST = {
    (10, 4, "(7;2^10)"): "canonical genus 5 curve of degree 8 in P^4",
}


def whitelist_reason(c: DivisorClass, pol: Polarization) -> Optional[str]:
    return GEOMETRIC_WHITELIST.get((pol.n, pol.m, str(c.canonical())))


def ulrich_degree(pol: Polarization) -> int:
    """``xi . (3 xi + K) / 2 = 3m(m-1)/2 - n``."""
    return 3 * pol.m * (pol.m - 1) // 2 - pol.n


def check_degree(c: DivisorClass, pol: Polarization) -> bool:
    h = pol.base
    k = canonical_class(pol.n)
    return 2 * intersect(c, h) == intersect(h, 3 * h + k)


def check_chi(c: DivisorClass, pol: Polarization) -> bool:
    k = canonical_class(pol.n)
    return intersect(c, c) - intersect(c, k) + 2 - 2 * pol.degree == 0


def _speciality(c: DivisorClass, pol: Polarization) -> tuple[Optional[bool], str]:
    value, rule = h0_with_rule(c - pol.base)
    return (None if value is None else value == 0), f"h0(C-xi) via {rule}"


def check_speciality(c: DivisorClass, pol: Polarization) -> Optional[bool]:
    return _speciality(c, pol)[0]


def _restriction(c: DivisorClass, pol: Polarization) -> tuple[Optional[bool], str]:
    if 2 * pol.m - 3 < c.d:
        return True, "deg(K+2xi) < deg C"
    kernel = canonical_class(pol.n) + 2 * pol.base - c
    value, rule = h0_with_rule(kernel)
    return (None if value is None else value == 0), f"h0(K+2xi-C) via {rule}"


def check_restriction(c: DivisorClass, pol: Polarization) -> Optional[bool]:
    return _restriction(c, pol)[0]


@dataclass(frozen=True)
class UlrichVerdict:
    cls: DivisorClass
    pol: Polarization
    cond_i: bool
    cond_ii: Optional[bool]
    cond_iii: Optional[bool]
    cond_iv: Optional[bool]
    smoothness: Optional[SmoothnessCertificate]
    overall: Outcome
    failed: Optional[str] = None
    reason: Optional[str] = None
    rules: dict = field(default_factory=dict)

    @property
    def is_ulrich(self) -> bool:
        return self.overall is Outcome.ULRICH

    @property
    def label(self) -> str:
        if self.overall is Outcome.NOT_ULRICH:
            return f"NotUlrich({self.failed})"
        if self.overall is Outcome.UNDECIDED:
            return f"Undecided({self.reason})"
        return "Ulrich"

    def as_dict(self) -> dict:
        return {
            "class": str(self.cls.canonical()),
            "n": self.pol.n,
            "m": self.pol.m,
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "cond_iv": self.cond_iv,
            "smoothness": None if self.smoothness is None else self.smoothness.status.value,
            "rules": dict(self.rules),
            "overall": self.label,
        }


def verify(c: DivisorClass, pol: Polarization) -> UlrichVerdict:
    if c.n != pol.n:
        raise VerificationError(f"class on X_{c.n} but polarization on X_{pol.n}")
    if not pol.very_ample:
        raise VerificationError(f"{pol} is not known to be very ample")
    if c.is_zero():
        raise VerificationError("the trivial bundle is excluded")

    c = c.canonical()
    rules = {"cond_i": "intersection", "cond_ii": "riemann_roch"}

    def done(**kw) -> UlrichVerdict:
        base = dict(cond_ii=None, cond_iii=None, cond_iv=None, smoothness=None)
        base.update(kw)
        return UlrichVerdict(cls=c, pol=pol, rules=rules, **base)

    cond_i = check_degree(c, pol)
    if not cond_i:
        return done(cond_i=False, overall=Outcome.NOT_ULRICH, failed="i")
    cond_ii = check_chi(c, pol)
    if not cond_ii:
        return done(cond_i=True, cond_ii=False, overall=Outcome.NOT_ULRICH, failed="ii")

    cond_iii, rules["cond_iii"] = _speciality(c, pol)
    if cond_iii is False:
        return done(cond_i=True, cond_ii=True, cond_iii=False,
                    overall=Outcome.NOT_ULRICH, failed="iii")
    cond_iv, rules["cond_iv"] = _restriction(c, pol)
    smooth = smooth_irreducible_member(c)
    rules["smoothness"] = smooth.rule
    state = dict(cond_i=True, cond_ii=True, cond_iii=cond_iii, cond_iv=cond_iv, smoothness=smooth)
    if cond_iv is False:
        return done(**state, overall=Outcome.NOT_ULRICH, failed="iv")
    if cond_iii is None:
        return done(**state, overall=Outcome.UNDECIDED, reason="iii")
    if cond_iv is None:
        return done(**state, overall=Outcome.UNDECIDED, reason="iv")
    if not smooth.certified:
        return done(**state, overall=Outcome.UNDECIDED, reason="smoothness")
    return done(**state, overall=Outcome.ULRICH)


def verify_text(text: str, pol: Polarization) -> UlrichVerdict:
    return verify(parse_class(text), pol)
