import random

import pytest

from lefschetz.fields import GF, QQ
from lefschetz.matrices import (ExactMatrix, IntRowEchelon, clear_denominators,
                                det_cofactor, det_integer, factor,
                                gcd_of_maximal_minors, mod_rank,
                                rank_int_rows, rank_rows)


def test_mod_rank_identity():
    rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert mod_rank(rows, 3, 7) == 3


def test_mod_rank_dependent_rows():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert mod_rank(rows, 3, 101) == 2


def test_rank_catches_char_p_collapse():
    # rank 2 over Q but 1 over F_2
    rows = [[1, 1], [1, -1]]
    assert rank_int_rows(rows, 2) == 2
    assert mod_rank(rows, 2, 2) == 1


def test_int_echelon_matches_mod_rank_randomized():
    rng = random.Random(6)
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        ech = IntRowEchelon(n)
        for row in rows:
            ech.add(row)
        assert ech.rank == rank_int_rows(rows, n)


def test_echelon_reduce_membership():
    ech = IntRowEchelon(3)
    ech.add([1, 2, 0])
    ech.add([0, 0, 5])
    assert not any(ech.reduce([2, 4, 10]))
    assert any(ech.reduce([1, 0, 0]))


def test_clear_denominators():
    from fractions import Fraction
    row = [Fraction(1, 2), Fraction(2, 3), 1]
    assert clear_denominators(row) == [3, 4, 6]


def test_rank_rows_over_gf():
    f = GF(5)
    rows = [[1, 2], [3, 1]]  # det = 1 - 6 = -5 = 0 mod 5
    assert rank_rows(rows, 2, f) == 1
    assert rank_rows(rows, 2, QQ) == 2


def test_det_bareiss_vs_cofactor_randomized():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 5)
        entries = [[rng.randint(-7, 7) for _ in range(n)] for _ in range(n)]
        m = ExactMatrix.from_rows(entries)
        assert det_integer(m) == det_cofactor(entries)


def test_det_rejects_non_square():
    m = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        det_integer(m)


def test_det_singular():
    m = ExactMatrix.from_rows([[1, 2], [2, 4]])
    assert det_integer(m) == 0


def test_factor_known_value():
    factors, cofactor = factor(78408)
    assert factors == {2: 3, 3: 4, 11: 2}
    assert cofactor == 1


def test_factor_large_prime_cofactor():
    p = 2**31 - 1  # prime
    factors, cofactor = factor(12 * p)
    assert factors == {2: 2, 3: 1, p: 1}
    assert cofactor == 1


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        factor(0)


def test_gcd_of_maximal_minors_small():
    # all 2x2 minors of this 3x2 matrix are even
    m = ExactMatrix.from_rows([[2, 0], [0, 2], [2, 2]])
    assert gcd_of_maximal_minors(m) == 4


def test_gcd_of_maximal_minors_square():
    m = ExactMatrix.from_rows([[1, 0], [0, 3]])
    assert gcd_of_maximal_minors(m) == 3


def test_transpose_roundtrip():
    m = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.transpose().transpose().entries == m.entries
