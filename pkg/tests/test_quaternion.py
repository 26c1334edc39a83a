"""Quaternion arithmetic, similarity classes, and the intertwiner solver."""

import math

import pytest
from hypothesis import given, strategies as st

from quatu11 import ONE, QI, QJ, QK, ZERO, Quaternion, is_similar, solve_similarity, standard_rep
from quatu11.errors import NotSimilarError

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)
units = quaternions.filter(lambda q: q.norm() > 1e-3).map(lambda q: q.normalized())


def test_multiplication_table():
    assert QI * QJ == QK
    assert QJ * QK == QI
    assert QK * QI == QJ
    assert QJ * QI == -QK
    assert QI * QI == -ONE
    assert QJ * QJ == -ONE
    assert QK * QK == -ONE


def test_basic_arithmetic():
    p = Quaternion(1.0, 2.0, 3.0, 4.0)
    q = Quaternion(0.5, -1.0, 0.0, 2.0)
    assert (p + q) - q == p
    assert p + ZERO == p
    assert p * ONE == p
    assert (-p) + p == ZERO
    assert (2.0 * p).as_list() == [2.0, 4.0, 6.0, 8.0]
    assert (p / 2.0).as_list() == [0.5, 1.0, 1.5, 2.0]


@given(p=quaternions, q=quaternions, r=quaternions)
def test_multiplication_associative(p, q, r):
    lhs = (p * q) * r
    rhs = p * (q * r)
    assert (lhs - rhs).norm() <= 1e-9 * (1.0 + p.norm() * q.norm() * r.norm())


@given(p=quaternions, q=quaternions)
def test_norm_is_multiplicative(p, q):
    assert abs((p * q).norm() - p.norm() * q.norm()) <= 1e-9 * (1.0 + p.norm() * q.norm())


@given(p=quaternions, q=quaternions)
def test_conjugate_reverses_products(p, q):
    assert ((p * q).conjugate() - q.conjugate() * p.conjugate()).norm() <= 1e-9 * (
        1.0 + p.norm() * q.norm())


def test_norm_and_parts():
    q = Quaternion(1.0, 2.0, 2.0, 4.0)
    assert q.norm() == 5.0
    assert q.norm_sq() == 25.0
    assert abs(q) == 5.0
    assert q.imag() == Quaternion(0.0, 2.0, 2.0, 4.0)
    assert q.imag_norm() == math.sqrt(24.0)
    assert q.conjugate() == Quaternion(1.0, -2.0, -2.0, -4.0)


def test_inverse_is_two_sided():
    q = Quaternion(0.3, -1.2, 0.7, 2.1)
    assert (q * q.inverse() - ONE).norm() < 1e-12
    assert (q.inverse() * q - ONE).norm() < 1e-12
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_integer_powers():
    q = Quaternion(0.5, 0.5, 0.5, 0.5)
    assert q ** 0 == ONE
    assert q ** 1 == q
    assert ((q ** 3) - q * q * q).norm() < 1e-15
    with pytest.raises(TypeError):
        q ** -2  # inverses are explicit, not spelled as negative powers


def test_standard_rep_is_canonical():
    q = Quaternion(1.0, 2.0, 2.0, 4.0)
    rep = standard_rep(q)
    assert rep == Quaternion(1.0, math.sqrt(24.0), 0.0, 0.0)
    assert is_similar(q, rep)
    # real quaternions are their own representatives
    assert standard_rep(Quaternion(-3.0)) == Quaternion(-3.0)


def test_similarity_is_real_part_and_modulus():
    assert is_similar(QI, QJ)
    assert is_similar(QI, -QI)
    assert is_similar(Quaternion(1.0, 1.0, 0.0, 0.0), Quaternion(1.0, 0.0, -1.0, 0.0))
    assert not is_similar(QI, ONE)
    assert not is_similar(Quaternion(1.0, 1.0, 0.0, 0.0), Quaternion(1.0, 2.0, 0.0, 0.0))


@given(q=quaternions, u=units)
def test_conjugation_preserves_similarity(q, u):
    assert is_similar(q, u * q * u.inverse(), tol=1e-6)


@given(q=quaternions, u=units)
def test_solve_similarity_intertwines(q, u):
    s = u * q * u.inverse()
    x = solve_similarity(s, q)
    assert (s * x - x * q).norm() <= 1e-7 * (1.0 + q.norm())
    assert abs(x.norm() - 1.0) < 1e-9


def test_solve_similarity_degenerate_directions():
    # Im(u) antiparallel to Im(s): the generic intertwiner 1 - I*J vanishes
    # and the solver must fall back to a perpendicular axis.
    x = solve_similarity(QI, -QI)
    assert (QI * x - x * (-QI)).norm() < 1e-12
    # same similarity class, fixed deterministic choice
    assert x == solve_similarity(QI, -QI)


def test_solve_similarity_real_input():
    assert solve_similarity(Quaternion(2.0), Quaternion(2.0)) == ONE


def test_solve_similarity_rejects_dissimilar():
    with pytest.raises(NotSimilarError):
        solve_similarity(QI, Quaternion(2.0, 3.0, 0.0, 0.0))


def test_json_round_trip():
    q = Quaternion(1.5, -2.0, 0.25, 3.0)
    assert Quaternion.from_list(q.as_list()) == q
