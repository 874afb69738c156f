import pytest

from ternary_codes.eisenstein import ZETA, EisensteinInt, zeta_pow

ONE = EisensteinInt(1, 0)


class TestArithmetic:
    def test_zeta_cubed(self):
        assert ZETA * ZETA == EisensteinInt(-1, -1)
        assert ZETA * ZETA * ZETA == ONE
        assert ONE + ZETA + ZETA * ZETA == EisensteinInt(0, 0)

    @pytest.mark.parametrize("e", range(-3, 7))
    def test_zeta_pow(self, e):
        expected = ONE
        for _ in range(e % 3):
            expected *= ZETA
        assert zeta_pow(e) == expected

    def test_int_operands(self):
        x = EisensteinInt(2, -3)
        assert x + 1 == 1 + x == EisensteinInt(3, -3)
        assert x - 1 == EisensteinInt(1, -3)
        assert 1 - x == EisensteinInt(-1, 3)
        assert 3 * x == x * 3 == EisensteinInt(6, -9)
        assert -x == EisensteinInt(-2, 3)

    def test_invalid_operand(self):
        with pytest.raises(TypeError, match="'other'"):
            EisensteinInt(1, 1) + 1.5

    @pytest.mark.parametrize(
        "x, y", [((1, 2), (3, -1)), ((0, 5), (-4, 7)), ((-2, -2), (1, 1))]
    )
    def test_multiplication_matches_complex(self, x, y):
        zeta = complex(-0.5, 3**0.5 / 2)
        x, y = EisensteinInt(*x), EisensteinInt(*y)
        product = x * y
        expected = (x.a + x.b * zeta) * (y.a + y.b * zeta)
        assert abs(product.a + product.b * zeta - expected) < 1e-9


class TestProperties:
    @pytest.mark.parametrize(
        "x, norm", [((1, 0), 1), ((0, 1), 1), ((1, -1), 3), ((2, 1), 3), ((3, 0), 9)]
    )
    def test_norm(self, x, norm):
        assert EisensteinInt(*x).norm == norm

    def test_norm_is_multiplicative(self):
        x, y = EisensteinInt(4, -7), EisensteinInt(-2, 5)
        assert (x * y).norm == x.norm * y.norm

    def test_re2(self):
        assert ZETA.re2 == -1
        assert EisensteinInt(3, 1).re2 == 5
        assert (ZETA + ZETA.conjugate()).re2 == 2 * ZETA.re2

    def test_conjugate(self):
        assert ZETA.conjugate() == zeta_pow(2)
        x = EisensteinInt(5, -2)
        assert x.conjugate().conjugate() == x
        product = x * x.conjugate()
        assert product == EisensteinInt(x.norm, 0)

    def test_from_counts(self):
        assert EisensteinInt.from_counts(3, 0, 0) == EisensteinInt(3, 0)
        assert EisensteinInt.from_counts(1, 1, 1) == EisensteinInt(0, 0)
        assert EisensteinInt.from_counts(0, 0, 2) == 2 * zeta_pow(2)

    def test_hashable(self):
        assert len({EisensteinInt(1, 2), EisensteinInt(1, 2), ZETA}) == 2

    def test_str(self):
        assert str(EisensteinInt(3, -2)) == "3-2ζ"
        assert str(ZETA) == "0+1ζ"
