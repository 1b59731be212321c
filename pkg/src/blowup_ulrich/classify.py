"""Exhaustive search for Ulrich line bundles on X_n at fixed polarization.

Conditions (i) and (ii) pin down, for each degree d, both the sum and the sum of
squares of the multiplicities:

    S1 = d m - (3m(m-1)/2 - n),
    S2 = d^2 + 3d - S1 + 2 - 2(m^2 - n).

Candidates are the weakly decreasing integer vectors with these two sums.  The
degree is bounded by Castelnuovo's genus bound for the image curve in
``P^{h0(xi)-1}`` (nondegenerate case) together with ``d <= m`` (degenerate case).
For ``m = 4`` this is the full argument; for other m the report flags the box
as heuristic.  When the genus does not grow with d (``m = 3``) the bound
``S1^2 <= n S2`` from Cauchy-Schwarz is used instead.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import isqrt
from typing import Iterator, Optional

from .lattice import DivisorClass, Polarization
from .ulrich import Outcome, UlrichVerdict, ulrich_degree, verify, whitelist_reason


class ClassificationError(ValueError):
    pass


def castelnuovo_bound(degree: int, ambient_dim: int) -> int:
    """Maximal arithmetic genus of a nondegenerate irreducible curve of given degree in P^r."""
    if ambient_dim < 2 or degree < ambient_dim:
        raise ClassificationError(f"no nondegenerate curve of degree {degree} in P^{ambient_dim}")
    q, eps = divmod(degree - 1, ambient_dim - 1)
    return q * (q - 1) // 2 * (ambient_dim - 1) + q * eps


@dataclass(frozen=True)
class SearchCaps:
    """Bounds for the candidate search.

    ``None`` means the per-degree default: entries in ``[-d, max(2, d)]`` and
    ``d`` up to the automatic bound.
    """

    d_max: Optional[int] = None
    mult_max: Optional[int] = None
    mult_min: Optional[int] = None

    def upper(self, d: int) -> int:
        return max(2, d) if self.mult_max is None else self.mult_max

    def lower(self, d: int) -> int:
        return -(d if self.mult_min is None else self.mult_min)


def degree_sums(n: int, m: int, d: int) -> tuple[int, int]:
    s1 = d * m - (3 * m * (m - 1) // 2 - n)
    s2 = d * d + 3 * d - s1 + 2 - 2 * (m * m - n)
    return s1, s2


def candidate_genus(m: int, d: int) -> int:
    """Arithmetic genus forced by (i) and (ii): ``(m-3)(2d-m)/2``."""
    return (m - 3) * (2 * d - m) // 2


def _cauchy_schwarz_ok(n: int, m: int, d: int) -> bool:
    s1, s2 = degree_sums(n, m, d)
    return s2 >= 0 and s1 * s1 <= n * s2


def auto_d_max(pol: Polarization) -> tuple[int, str]:
    """Largest degree to search and the rule that produced it."""
    n, m = pol.n, pol.m
    e = ulrich_degree(pol)
    ambient = (m + 1) * (m + 2) // 2 - n - 1
    if m > 3:
        if e >= ambient >= 2:
            bound = castelnuovo_bound(e, ambient)
            d = m
            while candidate_genus(m, d + 1) <= bound:
                d += 1
            return max(d, m), "castelnuovo"
        return m, "degenerate"
    # genus is constant in d; n S2 - S1^2 is a concave quadratic in d
    d = 1
    while not _cauchy_schwarz_ok(n, m, d) or _cauchy_schwarz_ok(n, m, d + 1):
        if d > 8 * (n + m * m + 4) and not _cauchy_schwarz_ok(n, m, d):
            break
        d += 1
    hi = d if _cauchy_schwarz_ok(n, m, d) else 1
    return max(hi, m), "cauchy_schwarz"


def sorted_vectors(length: int, total: int, squares: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing integer vectors in ``[lo, hi]`` with given sum and sum of squares."""
    prefix: list[int] = []

    def rec(slots: int, s: int, q: int, top: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if s == 0 and q == 0:
                yield tuple(prefix)
            return
        # every later entry lies in [lo, top]
        if not (slots * lo <= s <= slots * top):
            return
        if q < 0 or slots * q < s * s:
            return
        if q > slots * max(lo * lo, top * top):
            return
        for v in range(top, lo - 1, -1):
            prefix.append(v)
            yield from rec(slots - 1, s - v, q - v * v, v)
            prefix.pop()

    if lo <= hi:
        yield from rec(length, total, squares, hi)


@dataclass
class Truncation:
    d: int
    natural_bound: int
    lower: int
    upper: int


def enumerate_candidates(
    n: int, pol: Polarization, caps: SearchCaps = SearchCaps(), report: Optional[list] = None
) -> list[DivisorClass]:
    """All classes satisfying (i) and (ii) within the search box, in canonical form.

    If ``report`` is given, a :class:`Truncation` is appended for every degree
    whose caps are tighter than ``isqrt(S2)``, the bound any solution obeys.
    """
    if not pol.very_ample:
        raise ClassificationError(f"{pol} is not known to be very ample")
    if pol.n != n:
        raise ClassificationError("polarization lives on a different X_n")
    d_max = caps.d_max if caps.d_max is not None else auto_d_max(pol)[0]
    out = []
    for d in range(1, d_max + 1):
        s1, s2 = degree_sums(n, pol.m, d)
        if s2 < 0:
            continue
        natural = isqrt(s2)
        lo, hi = max(caps.lower(d), -natural), min(caps.upper(d), natural)
        if report is not None and (caps.lower(d) > -natural or caps.upper(d) < natural):
            report.append(Truncation(d, natural, caps.lower(d), caps.upper(d)))
        for mults in sorted_vectors(n, s1, s2, lo, hi):
            out.append(DivisorClass(d, mults))
    return out


@dataclass
class ClassificationReport:
    n: int
    m: int
    ulrich: list[DivisorClass] = field(default_factory=list)
    whitelisted: list[tuple[DivisorClass, str]] = field(default_factory=list)
    near_misses: list[tuple[DivisorClass, str]] = field(default_factory=list)
    undecided: list[tuple[DivisorClass, str]] = field(default_factory=list)
    caps: dict = field(default_factory=dict)
    truncations: list[Truncation] = field(default_factory=list)
    verdicts: list[UlrichVerdict] = field(default_factory=list, repr=False)

    def ulrich_strings(self) -> list[str]:
        return [str(c) for c in self.ulrich]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "ulrich": self.ulrich_strings(),
            "whitelisted": [{"class": str(c), "reason": r} for c, r in self.whitelisted],
            "near_misses": [{"class": str(c), "failed": f} for c, f in self.near_misses],
            "undecided": [{"class": str(c), "reason": r} for c, r in self.undecided],
            "caps": dict(self.caps),
            "truncations": [asdict(t) for t in self.truncations],
        }


def classify(n: int, pol: Polarization, caps: SearchCaps = SearchCaps()) -> ClassificationReport:
    d_max, rule = (caps.d_max, "user") if caps.d_max is not None else auto_d_max(pol)
    truncations: list[Truncation] = []
    box = SearchCaps(d_max, caps.mult_max, caps.mult_min)
    candidates = enumerate_candidates(n, pol, box, truncations)
    report = ClassificationReport(
        n=n,
        m=pol.m,
        caps={
            "d_max": d_max,
            "d_max_rule": rule,
            "mult_max": "max(2,d)" if caps.mult_max is None else caps.mult_max,
            "mult_min": "d" if caps.mult_min is None else caps.mult_min,
            "heuristic": pol.m != 4,
        },
        truncations=truncations,
    )
    seen = set()
    for c in sorted(candidates, key=lambda c: (c.d, c.mults)):
        if c in seen:
            continue
        seen.add(c)
        verdict = verify(c, pol)
        report.verdicts.append(verdict)
        if verdict.overall is Outcome.ULRICH:
            report.ulrich.append(c)
        elif verdict.overall is Outcome.NOT_ULRICH:
            report.near_misses.append((c, verdict.failed))
        elif verdict.reason == "smoothness" and whitelist_reason(c, pol):
            report.ulrich.append(c)
            report.whitelisted.append((c, whitelist_reason(c, pol)))
        else:
            report.undecided.append((c, verdict.reason))
    return report
