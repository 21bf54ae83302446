"""Exact core: polynomials, Smith normal form, cokernels, groups."""

import random
from fractions import Fraction

import pytest

from kminusone.errors import ZeroPolynomial
from kminusone.exact import (
    BiPoly,
    FinAbGroup,
    IntMatrix,
    UniPoly,
    cokernel,
    smith_normal_form,
    squarefree_decomposition,
    squarefree_part,
    uni_gcd,
)


def U(*coeffs):
    return UniPoly.from_int_coeffs(coeffs)


class TestUniPoly:
    def test_normalization_drops_leading_zeros(self):
        assert U(1, 2, 0, 0) == U(1, 2)
        assert U(0).is_zero()
        assert U().degree == -1

    def test_arithmetic(self):
        p, q = U(1, 1), U(-1, 1)          # t + 1, t - 1
        assert p * q == U(-1, 0, 1)        # t^2 - 1
        assert p + q == U(0, 2)
        assert (p * q) % p == U()
        quo, rem = U(-1, 0, 1).divmod(U(-1, 1))
        assert quo == U(1, 1) and rem.is_zero()

    def test_evaluate(self):
        assert U(1, 2, 3)(Fraction(2)) == 1 + 4 + 12

    def test_gcd(self):
        # (t-1)^2 (t+2) vs (t-1)(t+2)^2
        a = U(-1, 1) * U(-1, 1) * U(2, 1)
        b = U(-1, 1) * U(2, 1) * U(2, 1)
        assert uni_gcd(a, b) == (U(-1, 1) * U(2, 1)).monic()


class TestSquarefreePart:
    def test_already_squarefree(self):
        assert squarefree_part(U(1, 0, 1)) == U(1, 0, 1)  # t^2 + 1

    def test_double_root(self):
        # (t-1)^2 -> t - 1
        assert squarefree_part(U(1, -2, 1)) == U(-1, 1)

    def test_hand_factored_oracle(self):
        # t^3 - t^2 = t^2 (t - 1) -> t (t - 1) = t^2 - t
        assert squarefree_part(U(0, 0, -1, 1)) == U(0, -1, 1)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_part(U())

    def test_square_invariance(self):
        rng = random.Random(7)
        for _ in range(50):
            p = UniPoly.from_int_coeffs([rng.randint(-4, 4) for _ in range(4)] + [1])
            assert squarefree_part(p * p) == squarefree_part(p)

    def test_yun_decomposition(self):
        p = U(-1, 1) ** 1 * U(1, 1) ** 3
        decomp = squarefree_decomposition(p)
        assert decomp == [(U(-1, 1), 1), (U(1, 1), 3)]


class TestSmithNormalForm:
    def test_invariant_factors_of_z2_plus_z3(self):
        # oracle: Z/2 + Z/3 = Z/6, so diag(2, 3) has invariant factors (1, 6)
        m = IntMatrix.from_rows([[2, 0], [0, 3]])
        d, u, v = smith_normal_form(m)
        assert d.to_rows() == [[1, 0], [0, 6]]
        assert (u @ m @ v).entries == d.entries

    def test_identity_case(self):
        m = IntMatrix.from_rows([[1]])
        d, u, v = smith_normal_form(m)
        assert d.to_rows() == [[1]]
        assert u.to_rows() == [[1]] and v.to_rows() == [[1]]

    def test_zero_matrix(self):
        m = IntMatrix.zeros(2, 2)
        d, _, _ = smith_normal_form(m)
        assert d.to_rows() == [[0, 0], [0, 0]]

    def test_empty_matrices(self):
        for rows, cols in [(0, 0), (0, 3), (3, 0)]:
            m = IntMatrix.zeros(rows, cols)
            d, u, v = smith_normal_form(m)
            assert (d.rows, d.cols) == (rows, cols)
            assert (u @ m @ v).entries == d.entries

    def test_random_property_suite(self):
        rng = random.Random(2024)
        for _ in range(300):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            m = IntMatrix(rows, cols,
                          tuple(rng.randint(-9, 9) for _ in range(rows * cols)))
            d, u, v = smith_normal_form(m)
            assert (u @ m @ v).entries == d.entries
            assert d.is_diagonal()
            diag = [x for x in d.diagonal_entries() if x]
            for a, b in zip(diag, diag[1:]):
                assert b % a == 0
            assert abs(u.det()) == 1
            assert abs(v.det()) == 1
            if rows == cols and m.det() != 0:
                prod = 1
                for x in diag:
                    prod *= x
                assert prod == abs(m.det())


class TestCokernel:
    def test_spec_examples(self):
        assert cokernel(IntMatrix.from_rows([[1]])).is_trivial()
        assert cokernel(IntMatrix.from_rows([[0]])) == FinAbGroup.free(1)
        assert cokernel(IntMatrix.from_rows([[2]])) == FinAbGroup(0, (2,))

    def test_rank_formula(self):
        rng = random.Random(5)
        for _ in range(100):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = IntMatrix(rows, cols,
                          tuple(rng.randint(-5, 5) for _ in range(rows * cols)))
            d, _, _ = smith_normal_form(m)
            r = sum(1 for x in d.diagonal_entries() if x)
            assert cokernel(m).free_rank == rows - r

    def test_zero_columns_give_free_group(self):
        assert cokernel(IntMatrix.zeros(3, 0)) == FinAbGroup.free(3)


class TestFinAbGroup:
    def test_validation(self):
        with pytest.raises(ValueError):
            FinAbGroup(0, (1,))
        with pytest.raises(ValueError):
            FinAbGroup(0, (4, 2))  # chain violated
        with pytest.raises(ValueError):
            FinAbGroup(-1)

    def test_direct_sum_renormalizes(self):
        a = FinAbGroup(0, (2,))
        b = FinAbGroup(0, (3,))
        assert a.direct_sum(b) == FinAbGroup(0, (6,))
        assert a.direct_sum(a) == FinAbGroup(0, (2, 2))
        assert FinAbGroup.free(2).direct_sum(a) == FinAbGroup(2, (2,))

    def test_repeated(self):
        assert FinAbGroup.cyclic(2).repeated(3) == FinAbGroup(0, (2, 2, 2))
        assert FinAbGroup.free(1).repeated(0).is_trivial()

    def test_str(self):
        assert str(FinAbGroup.trivial()) == "0"
        assert str(FinAbGroup.free(1)) == "Z"
        assert str(FinAbGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"


class TestBiPoly:
    def test_arithmetic_and_order(self):
        z, w = BiPoly.var_z(), BiPoly.var_w()
        g = z * z + w * w * w
        assert g.order() == 2
        assert (g - g).is_zero()
        assert (z + w) ** 2 == z * z + z * w * BiPoly.constant(Fraction(2)) + w * w

    def test_zero_order_rejected(self):
        with pytest.raises(ZeroPolynomial):
            BiPoly.zero().order()
