from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from bfcorr import (
    TruncatedPolynomial,
    apply_I,
    apply_I_inverse,
    boson_inner,
    character_table,
    hall_inner,
    mn_character,
    p,
    partitions_of,
    power_to_schur,
    schur,
    schur_to_power,
    truncate_symm,
    z,
    z_mu,
)
from bfcorr.boson import BosonPolynomial, monomials_of_weight
from oracles import class_sizes, frobenius_character, s3_table_bruteforce
from strategies import boson_polys, symm_elements


def test_apply_I_examples():
    assert apply_I(z(1, 2)) == p(1, 1)
    assert apply_I(BosonPolynomial.constant()) == p()
    assert apply_I(3 * (z(1) * z(2)) - z(3)) == 3 * p(2, 1) - p(3)
    assert apply_I_inverse(p(2, 1)) == z(1) * z(2)
    assert apply_I_inverse(p()) == BosonPolynomial.constant()


@given(boson_polys())
def test_apply_I_roundtrip(f):
    assert apply_I_inverse(apply_I(f)) == f


def test_hall_examples():
    assert hall_inner(p(1, 1), p(1, 1)) == 2
    assert hall_inner(p(2), p(1, 1)) == 0


@given(symm_elements(), symm_elements())
def test_hall_matches_boson_product(f, g):
    assert hall_inner(f, g) == boson_inner(apply_I_inverse(f), apply_I_inverse(g))


def test_I_isometry_on_monomial_pairs():
    for n in range(9):
        monos = monomials_of_weight(n)
        for m1 in monos:
            for m2 in monos:
                f, g = BosonPolynomial({m1: 1}), BosonPolynomial({m2: 1})
                assert boson_inner(f, g) == hall_inner(apply_I(f), apply_I(g))


def test_symm_rendering_and_product():
    assert str(p(2, 2, 1) - 3 * p(4)) == "p2^2*p1 - 3*p4"
    assert str(p()) == "1"
    assert p(2) * p(2, 1) == p(2, 2, 1)
    assert (p(1) + p(2)) ** 2 == p(1, 1) + 2 * p(2, 1) + p(2, 2)
    assert str(schur(2, 1) - schur()) == "s(2,1) - s()"


# --- truncation ---------------------------------------------------------------------


def test_truncate_examples():
    assert truncate_symm(p(1), 2) == TruncatedPolynomial(2, {(1, 0): 1, (0, 1): 1})
    assert truncate_symm(p(2), 2) == TruncatedPolynomial(2, {(2, 0): 1, (0, 2): 1})
    assert truncate_symm(p(1, 1), 2) == TruncatedPolynomial(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert truncate_symm(p(), 3) == TruncatedPolynomial.constant(3)


@given(symm_elements(max_weight=5))
def test_truncation_is_symmetric(f):
    t = truncate_symm(f, 3)
    assert t.swap(1, 2) == t
    assert t.swap(2, 3) == t


def _rank(vectors):
    # exact Gaussian elimination over Q
    rows = [list(v) for v in vectors]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


@pytest.mark.parametrize("d", range(1, 7))
def test_truncation_is_faithful_at_n_equal_degree(d):
    polys = [truncate_symm(p(*mu), d) for mu in partitions_of(d)]
    support = sorted({e for t in polys for e, _ in t.items()})
    vectors = [[t.coefficient(e) for e in support] for t in polys]
    assert _rank(vectors) == len(polys)


def test_truncated_polynomial_arithmetic():
    x1, x2 = TruncatedPolynomial.variable(2, 1), TruncatedPolynomial.variable(2, 2)
    assert (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2
    assert str((x1 - x2) * (x1 - x2)) == "x1^2 - 2*x1*x2 + x2^2"
    half = x1.scale(Fraction(1, 2))
    assert half * x2 == TruncatedPolynomial(2, {(1, 1): Fraction(1, 2)})
    with pytest.raises(ValueError):
        x1 + TruncatedPolynomial.variable(3, 1)


# --- characters -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_and_sign_characters(n):
    for mu in partitions_of(n):
        assert mn_character((n,), mu) == 1
        assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_s3_examples():
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (2, 1)) == 0
    assert mn_character((2, 1), (3,)) == -1
    lambdas, mus, rows = character_table(3)
    assert rows == s3_table_bruteforce() == [[1, 1, 1], [2, 0, -1], [1, -1, 1]]
    assert mus == [(1, 1, 1), (2, 1), (3,)]


def test_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


@pytest.mark.parametrize("n", range(1, 6))
def test_characters_match_frobenius_oracle(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert mn_character(lam, mu) == frobenius_character(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    lambdas, mus, rows = character_table(n)
    for j, mu in enumerate(mus):
        for k, nu in enumerate(mus):
            total = sum(row[j] * row[k] for row in rows)
            assert total == (z_mu(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_dimensions_squared_sum_to_factorial(n):
    lambdas, mus, rows = character_table(n)
    assert mus[0] == (1,) * n
    assert sum(row[0] ** 2 for row in rows) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_row_orthogonality_with_class_sizes(n):
    sizes = class_sizes(n)
    lambdas, mus, rows = character_table(n)
    for row in rows:
        assert sum(sizes[mu] * chi * chi for mu, chi in zip(mus, row)) == factorial(n)


# --- Schur transition ---------------------------------------------------------------


def test_power_to_schur_examples():
    assert power_to_schur(p(1, 1)) == schur(2) + schur(1, 1)
    assert power_to_schur(p(2)) == schur(2) - schur(1, 1)
    assert power_to_schur(p()) == schur()
    assert schur_to_power(schur(1)) == p(1)
    assert schur_to_power(schur(2)) == Fraction(1, 2) * p(1, 1) + Fraction(1, 2) * p(2)


@pytest.mark.parametrize("mu", [(1, 1), (2,), (2, 1), (3,), (1, 1, 1), (2, 2), (3, 1)])
def test_power_to_schur_against_truncation_oracle(mu):
    # compare both sides in n = |mu| variables, with s_lambda computed from the
    # Frobenius coefficients (oracle) rather than from the library's transition
    n = sum(mu)
    expansion = power_to_schur(p(*mu))
    for lam in partitions_of(n):
        assert expansion.coefficient(lam) == frobenius_character(lam, mu)


@given(symm_elements())
def test_schur_roundtrip(f):
    assert schur_to_power(power_to_schur(f)) == f


def test_power_to_schur_is_integral_on_basis():
    for n in range(9):
        for mu in partitions_of(n):
            image = power_to_schur(p(*mu))
            assert all(c.denominator == 1 for _, c in image.items())
            assert all(lam.weight == n for lam in image)


@pytest.mark.parametrize("n", range(9))
def test_schur_orthonormal(n):
    basis = {lam: schur_to_power(schur(*lam)) for lam in partitions_of(n)}
    for a, fa in basis.items():
        for b, fb in basis.items():
            assert hall_inner(fa, fb) == (1 if a == b else 0)


def test_hall_inner_rejects_schur_input():
    with pytest.raises(TypeError):
        hall_inner(schur(1), p(1))


def test_character_memo_is_consistent():
    first = [mn_character(lam, mu) for lam in partitions_of(5) for mu in partitions_of(5)]
    second = [mn_character(lam, mu) for lam in partitions_of(5) for mu in partitions_of(5)]
    assert first == second
