from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wellround.gram import (
    GramForm,
    LatticeType,
    NotPositiveDefiniteError,
    Unimodular,
    classify,
    gauss_reduce,
    is_rational,
    is_well_rounded,
    rational_normalize,
)
from wellround.scalar import Scalar


def integral_pd_forms():
    def build(a, b, c_extra):
        # guarantee positive definiteness: c > b^2 / a
        c = (b * b) // a + 1 + c_extra
        return GramForm.of(a, b, c)

    return st.builds(
        build,
        st.integers(1, 40),
        st.integers(-40, 40),
        st.integers(0, 40),
    )


_SWAP = Unimodular(((0, 1), (1, 0)))


def unimodulars():
    def build(shears):
        m = Unimodular.identity()
        for kind, k in shears:
            step = Unimodular(((1, k), (0, 1))) if kind else _SWAP
            m = m @ step
        return m

    return st.builds(
        build,
        st.lists(st.tuples(st.booleans(), st.integers(-5, 5)), max_size=6),
    )


class TestReduction:
    def test_frozen_example_centred_rectangular(self):
        reduced, U = gauss_reduce(GramForm.of(5, 4, 5))
        assert (reduced.a, reduced.b, reduced.c) == (
            Scalar(2),
            Scalar(1),
            Scalar(5),
        )
        assert GramForm.of(5, 4, 5).transform(U) == reduced

    def test_frozen_example_hexagonal(self):
        reduced, _ = gauss_reduce(GramForm.of(2, -1, 2))
        assert (reduced.a, reduced.b, reduced.c) == (Scalar(2), Scalar(1), Scalar(2))

    def test_not_positive_definite_rejected(self):
        with pytest.raises(NotPositiveDefiniteError):
            gauss_reduce(GramForm.of(1, 2, 1))
        with pytest.raises(NotPositiveDefiniteError):
            gauss_reduce(GramForm.of(-1, 0, 1))

    @given(integral_pd_forms())
    def test_reduced_inequalities(self, g):
        r, _ = gauss_reduce(g)
        zero = Scalar(0)
        assert zero <= r.b * 2 <= r.a <= r.c

    @given(integral_pd_forms(), unimodulars())
    @settings(max_examples=60)
    def test_unimodular_invariance(self, g, U):
        r1, _ = gauss_reduce(g)
        r2, _ = gauss_reduce(g.transform(U))
        assert r1 == r2

    @given(integral_pd_forms(), st.integers(1, 9))
    def test_scaling_invariance_of_type(self, g, k):
        assert classify(g) == classify(g.scale(k))

    @given(integral_pd_forms())
    @settings(max_examples=60)
    def test_minimality(self, g):
        # the reduced a is the minimum of the form over small coordinates
        r, _ = gauss_reduce(g)
        values = [
            g.value(x, y)
            for x in range(-4, 5)
            for y in range(-4, 5)
            if (x, y) != (0, 0)
        ]
        assert min(values) == r.a

    def test_reduction_preserves_discriminant(self):
        g = GramForm.of(7, 3, 11)
        r, _ = gauss_reduce(g)
        assert r.discriminant() == g.discriminant()


class TestClassification:
    @pytest.mark.parametrize(
        "abc,expected",
        [
            ((1, 0, 1), LatticeType.SQUARE),
            ((2, 1, 2), LatticeType.HEXAGONAL),
            ((1, 0, 2), LatticeType.RECTANGULAR),
            ((2, 1, 5), LatticeType.CENTRED_RECTANGULAR),
            ((3, 1, 3), LatticeType.RHOMBIC),
            ((3, 1, 5), LatticeType.GENERAL),
        ],
    )
    def test_types(self, abc, expected):
        assert classify(GramForm.of(*abc)) == expected

    def test_rhombic_example_from_reduction(self):
        assert classify(GramForm.of(3, 1, 3)) == LatticeType.RHOMBIC
        assert is_well_rounded(GramForm.of(3, 1, 3))

    def test_well_rounded_iff_equal_minima(self):
        assert is_well_rounded(GramForm.of(1, 0, 1))
        assert not is_well_rounded(GramForm.of(1, 0, 2))


class TestRationality:
    def test_irrational_diag(self):
        g = GramForm(Scalar(1), Scalar(0), Scalar(0, 1, 2))
        assert not is_rational(g)
        assert g.discriminant() == Scalar(0, 1, 2)

    def test_scaled_irrational_is_rational(self):
        s = Scalar(0, 1, 2)
        g = GramForm(s, Scalar(0), s * 3)
        assert is_rational(g)

    def test_rational_normalize(self):
        g = GramForm.of(Fraction(1, 2), Fraction(1, 4), Fraction(3, 2))
        gi, scale = rational_normalize(g)
        assert gi.is_integral()
        # gi is the unit-leading-entry rescaling of g times the scale factor
        assert gi.scale((g.a / gi.a.as_fraction()).as_fraction()) == g
        assert (gi.a / scale) == (g.a / g.a)
