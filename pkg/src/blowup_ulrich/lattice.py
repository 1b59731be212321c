"""Picard lattice of the plane blown up at n very general points.

A divisor class ``d L - sum m_i E_i`` is stored as ``DivisorClass(d, (m_1, ..., m_n))``
and printed in exponential notation, e.g. ``(6;2^6,1)``.  The intersection form
is ``L^2 = 1``, ``E_i^2 = -1`` and the canonical class is ``(-3; -1^n)``.

All arithmetic is on Python integers; nothing here touches floating point.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import groupby
from math import isqrt
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Raised on malformed class text or mismatched lattice dimensions."""


@dataclass(frozen=True)
class DivisorClass:
    d: int
    mults: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        object.__setattr__(self, "d", int(self.d))

    @classmethod
    def of(cls, d: int, mults: Iterable[int]) -> DivisorClass:
        return cls(d, tuple(mults))

    @classmethod
    def zero(cls, n: int) -> DivisorClass:
        return cls(0, (0,) * n)

    @property
    def n(self) -> int:
        return len(self.mults)

    def canonical(self) -> DivisorClass:
        """Same class with multiplicities sorted weakly decreasing."""
        return DivisorClass(self.d, tuple(sorted(self.mults, reverse=True)))

    def is_zero(self) -> bool:
        return self.d == 0 and not any(self.mults)

    def _check(self, other: DivisorClass) -> None:
        if self.n != other.n:
            raise LatticeError(f"classes live on X_{self.n} and X_{other.n}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.d + other.d, tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.d - other.d, tuple(a - b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.d, tuple(-m for m in self.mults))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.d, tuple(k * m for m in self.mults))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_class(self, canonical=False)


def format_class(c: DivisorClass, *, canonical: bool = True) -> str:
    """Exponential notation; runs of equal multiplicities are collapsed."""
    mults = c.canonical().mults if canonical else c.mults
    terms = []
    for value, run in groupby(mults):
        count = len(list(run))
        terms.append(f"{value}^{count}" if count > 1 else f"{value}")
    return f"({c.d};{','.join(terms)})"


_TERM = re.compile(r"^\(?([+-]?\d+)\)?(?:\^\{?(\d+)\}?)?$")


def parse_class(text: str) -> DivisorClass:
    """Parse ``(d;t_1,...,t_k)`` where each term is ``a`` or ``a^e``.

    ``(-1)^3``, ``-1^3`` and ``0^{10}`` are all accepted; the Unicode minus sign
    is treated as ``-``.
    """
    s = text.strip().replace("−", "-").replace(" ", "")
    if not (s.startswith("(") and s.endswith(")")):
        raise LatticeError(f"class text must be wrapped in parentheses: {text!r}")
    body = s[1:-1]
    if ";" not in body:
        raise LatticeError(f"missing ';' after the degree in {text!r}")
    head, _, tail = body.partition(";")
    if not re.fullmatch(r"[+-]?\d+", head):
        raise LatticeError(f"bad degree token {head!r}")
    if not tail:
        raise LatticeError(f"no multiplicities in {text!r}")
    mults: list[int] = []
    for token in tail.split(","):
        match = _TERM.match(token)
        if match is None:
            raise LatticeError(f"bad multiplicity token {token!r}")
        value = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp == 0:
            raise LatticeError(f"zero exponent in token {token!r}")
        mults.extend([value] * exp)
    return DivisorClass(int(head), tuple(mults))


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    a._check(b)
    return a.d * b.d - sum(x * y for x, y in zip(a.mults, b.mults))


def canonical_class(n: int) -> DivisorClass:
    if n < 1:
        raise LatticeError("only blow-ups at n >= 1 points are supported")
    return DivisorClass(-3, (-1,) * n)


def chi(c: DivisorClass) -> int:
    """Holomorphic Euler characteristic by Riemann-Roch."""
    return (c.d * (c.d + 3) - sum(m * (m + 1) for m in c.mults)) // 2 + 1


def vdim(c: DivisorClass) -> int:
    """Virtual (expected) projective dimension of the linear system."""
    return chi(c) - 1


def arithmetic_genus(c: DivisorClass) -> int:
    k = canonical_class(c.n)
    return (intersect(c, c) + intersect(c, k)) // 2 + 1


def serre_dual(c: DivisorClass) -> DivisorClass:
    return canonical_class(c.n) - c


def xi(n: int, m: int) -> DivisorClass:
    """The class ``(m; 1^n)`` of degree-m curves through all points."""
    return DivisorClass(m, (1,) * n)


def exp_class(d: int, blocks: Sequence[tuple[int, int]]) -> DivisorClass:
    """Build a class from ``(value, count)`` blocks; zero-length blocks are skipped."""
    mults: list[int] = []
    for value, count in blocks:
        if count < 0:
            raise LatticeError(f"negative block length {count} for multiplicity {value}")
        mults.extend([value] * count)
    return DivisorClass(d, tuple(mults))


class Criterion(str, enum.Enum):
    PROVED_BOUND = "proved_bound"
    SMALL_N_TABLE = "small_n_table"
    CONJECTURAL_FLAG = "conjectural_flag"


# Minimal m with (m; 1^n) very ample where this is classical: conics and cubics
# for n <= 2, the cubic del Pezzo embedding for n <= 6, plane quartics through
# up to 10 general points (the n = 10 case is the Bordiga surface in P^4).
SMALL_N_TABLE = {1: 2, 2: 3, 3: 3, 4: 3, 5: 3, 6: 3, 7: 4, 8: 4, 9: 4, 10: 4}


@dataclass(frozen=True)
class Polarization:
    base: DivisorClass
    m: int
    ample: bool
    very_ample: bool
    criterion_used: Criterion

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def degree(self) -> int:
        """Self-intersection ``m^2 - n``."""
        return intersect(self.base, self.base)

    def __str__(self) -> str:
        return f"xi_{{{self.n},{self.m}}}={self.base}"


def _proved_very_ample(n: int, m: int) -> bool:
    # m >= 2 sqrt(n+4) - 3, squared after checking m + 3 >= 0
    return m + 3 >= 0 and (m + 3) ** 2 >= 4 * (n + 4)


def polarization(n: int, m: int, allow_conjectural: bool = False) -> Polarization:
    if n < 1:
        raise LatticeError("n must be >= 1")
    if n <= 2:
        ample = very_ample = m >= SMALL_N_TABLE[n]
        criterion = Criterion.SMALL_N_TABLE
    else:
        ample = m > 0 and m * m - n > 0
        very_ample = _proved_very_ample(n, m)
        criterion = Criterion.PROVED_BOUND
        if not very_ample and n in SMALL_N_TABLE and m >= SMALL_N_TABLE[n]:
            very_ample = True
            criterion = Criterion.SMALL_N_TABLE
        if not very_ample and allow_conjectural and ample and m * (m + 3) - 2 * n >= 10:
            very_ample = True
            criterion = Criterion.CONJECTURAL_FLAG
    return Polarization(xi(n, m), m, ample, very_ample, criterion)


def minimal_very_ample_m(n: int) -> int:
    """Smallest m for which :func:`polarization` reports ``(m; 1^n)`` very ample.

    The classical table decides n <= 10 (so quartics for 7 <= n <= 10); beyond
    that only the bound ``m >= 2 sqrt(n+4) - 3`` is used.
    """
    if n < 1:
        raise LatticeError("n must be >= 1")
    if n in SMALL_N_TABLE:
        return SMALL_N_TABLE[n]
    # start just below 2 sqrt(n+4) - 3 and walk up
    m = max(1, isqrt(4 * (n + 4)) - 4)
    while not _proved_very_ample(n, m):
        m += 1
    while m > 1 and _proved_very_ample(n, m - 1):
        m -= 1
    return m
