from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wellround.scalar import MixedRadicandError, NotRationalError, Scalar

fractions = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
roots = st.sampled_from([2, 3, 5, 6, 7, 10])


def scalars(root):
    return st.builds(lambda r, i: Scalar(r, i, root), fractions, fractions)


class TestArithmetic:
    def test_rational_round_trip(self):
        x = Scalar(Fraction(3, 2))
        assert x.is_rational
        assert x.as_fraction() == Fraction(3, 2)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(MixedRadicandError):
            Scalar(0, 1, 2) + Scalar(0, 1, 3)

    def test_as_fraction_requires_rational(self):
        with pytest.raises(NotRationalError):
            Scalar(0, 1, 2).as_fraction()

    @given(scalars(2), scalars(2))
    def test_mul_commutes(self, x, y):
        assert x * y == y * x

    @given(scalars(3), scalars(3))
    def test_add_sub_inverse(self, x, y):
        assert x + y - y == x

    @given(scalars(5))
    def test_division_inverts_multiplication(self, x):
        if x.sign() != 0:
            assert (x * x) / x == x

    @given(scalars(2))
    def test_float_tracks_exact(self, x):
        approx = float(x.rat) + float(x.irr) * 2 ** 0.5
        assert float(x) == pytest.approx(approx, rel=1e-12, abs=1e-9)


class TestOrdering:
    def test_sign_of_surd(self):
        # 7/5 < sqrt(2) < 3/2
        assert (Scalar(0, 1, 2) - Scalar(Fraction(7, 5))).sign() == 1
        assert (Scalar(0, 1, 2) - Scalar(Fraction(3, 2))).sign() == -1

    @given(scalars(2), scalars(2))
    def test_comparison_matches_float(self, x, y):
        if abs(float(x) - float(y)) > 1e-6:
            assert (x < y) == (float(x) < float(y))

    @given(scalars(3))
    def test_floor(self, x):
        f = x.floor()
        assert Scalar(f) <= x < Scalar(f + 1)

    @given(scalars(2))
    def test_round_half(self, x):
        r = x.round_half()
        assert abs(float(x) - r) <= 0.5 + 1e-12


class TestSquareDetection:
    def test_square_rational(self):
        assert Scalar(Fraction(9, 4)).is_square_rational()
        assert Scalar(Fraction(9, 4)).sqrt_rational() == Fraction(3, 2)
        assert not Scalar(Fraction(2)).is_square_rational()
        assert not Scalar(0, 1, 2).is_square_rational()


class TestSerialization:
    @given(scalars(2))
    def test_json_round_trip(self, x):
        assert Scalar.from_json(x.to_json()) == x

    def test_parse_forms(self):
        assert Scalar.parse("3/2") == Scalar(Fraction(3, 2))
        assert Scalar.parse("sqrt(2)") == Scalar(0, 1, 2)
        assert Scalar.parse("-2/3*sqrt(5)") == Scalar(0, Fraction(-2, 3), 5)
        assert Scalar.parse("1+2*sqrt(2)") == Scalar(1, 2, 2)
