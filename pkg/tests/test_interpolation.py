import numpy as np
import pytest

from blowup_ulrich.interpolation import (
    DEFAULT_PRIME, OracleError, h0_interpolation, interpolation_matrix, monomials, rank_mod_p,
)
from blowup_ulrich.lattice import parse_class


def test_rank_mod_p():
    p = 101
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), p) == 1
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), p) == 2
    # singular mod p only
    assert rank_mod_p(np.array([[1, 0], [0, 101]]), p) == 1
    assert rank_mod_p(np.zeros((3, 4), dtype=np.int64), p) == 0


def test_rank_large_prime_no_overflow():
    rng = np.random.default_rng(5)
    a = rng.integers(0, DEFAULT_PRIME, size=(12, 12))
    assert rank_mod_p(a, DEFAULT_PRIME) == 12
    b = np.vstack([a[:6], (a[:6] * 3) % DEFAULT_PRIME])
    assert rank_mod_p(b, DEFAULT_PRIME) == 6


def test_matrix_shape():
    assert len(monomials(3)) == 10
    mat = interpolation_matrix(3, [2, 1], [(1, 2), (3, 4)], DEFAULT_PRIME)
    assert mat.shape == (3 + 1, 10)


@pytest.mark.parametrize("text,value", [
    ("(2;1^5)", 1),
    ("(3;1^9)", 1),
    ("(4;2,1^3,0^3)", 9),
    ("(6;2^6,1)", 9),
    ("(2;2,2)", 1),   # the double line through two points
    ("(4;2^5)", 1),   # the double conic through five points
    ("(3;2,2)", 4),
    ("(1;1^3)", 0),
    ("(2;1^2,-1)", 4),
])
def test_known_values(text, value):
    assert h0_interpolation(parse_class(text), seed=3) == value


def test_deterministic_for_fixed_seed():
    c = parse_class("(5;2^4,1^3)")
    assert h0_interpolation(c, seed=11) == h0_interpolation(c, seed=11)


@pytest.mark.parametrize("kw", [dict(prime=4), dict(prime=101), dict(prime=2**62 + 1), dict(trials=0)])
def test_bad_arguments(kw):
    with pytest.raises(OracleError):
        h0_interpolation(parse_class("(2;1)"), **kw)


def test_negative_degree_rejected():
    with pytest.raises(OracleError):
        h0_interpolation(parse_class("(-1;0)"))
