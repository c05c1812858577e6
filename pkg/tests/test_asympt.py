import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wellround import asympt


class TestConstants:
    def test_euler_gamma(self):
        assert asympt.euler_gamma() == pytest.approx(0.5772156649015329, abs=1e-12)

    def test_zeta_prime_ratio(self):
        # zeta'(2) = -0.9375482543...; ratio -0.56996099...
        assert asympt.zeta_prime_2_over_zeta_2() == pytest.approx(
            -0.5699609930945327, abs=1e-9
        )

    def test_L_at_one(self):
        assert asympt.L_at_one(-4) == pytest.approx(math.pi / 4, abs=1e-14)
        assert asympt.L_at_one(-3) == pytest.approx(
            math.pi / (3 * math.sqrt(3)), abs=1e-14
        )
        with pytest.raises(asympt.UnsupportedDiscriminantError):
            asympt.L_at_one(-7)

    def test_L_at_one_partial_sum_crosscheck(self):
        for D, value in ((-4, math.pi / 4), (-3, math.pi / (3 * math.sqrt(3)))):
            N = 1_000_000
            q = abs(D)
            total = sum(asympt._chi(D, n) / n for n in range(1, N))
            assert abs(total - value) < 1e-5

    def test_L_prime_over_L(self):
        assert asympt.L_prime_over_L(-4) == pytest.approx(0.2456096, abs=1e-6)
        assert asympt.L_prime_over_L(-3) == pytest.approx(0.3682816, abs=1e-6)

    def test_both_closed_forms_agree(self):
        for D in (-4, -3):
            assert asympt.L_prime_over_L(D) == pytest.approx(
                asympt.L_prime_over_L_gamma_form(D), abs=1e-12
            )

    def test_growth_constants(self):
        c_sq, err_sq = asympt.c_square_eval()
        c_tr, err_tr = asympt.c_triangle_eval()
        assert c_sq == pytest.approx(0.6272237, abs=1e-5)
        assert c_tr == pytest.approx(0.4915036, abs=1e-5)
        assert 0 < err_sq < 1e-5 and 0 < err_tr < 1e-5

    def test_constants_table_json(self):
        table = asympt.constants_table().to_json()
        for entry in table.values():
            assert set(entry) == {"value", "abs_error"}
        assert table["c_square"]["value"] == pytest.approx(0.6272237, abs=1e-5)


class TestIntervalSumBounds:
    def test_empty_window(self):
        lower, upper, exact = asympt.interval_sum_bounds(1, math.sqrt(3), 0.0, 0.0, 2.0)
        assert exact == 0.0
        assert lower < exact < upper

    def test_strict_inequalities(self):
        lower, upper, exact = asympt.interval_sum_bounds(10, math.sqrt(3), 0.0, 0.0, 1.5)
        assert lower < exact < upper
        lower, upper, exact = asympt.interval_sum_bounds(100, 3.0, 0.0, 0.0, 1.1)
        assert lower < exact < upper

    @given(
        st.integers(1, 200),
        st.floats(1.1, 4.0),
        st.floats(0.0, 3.0),
        st.floats(0.0, 0.99),
        st.floats(0.0, 4.0),
    )
    @settings(max_examples=200)
    def test_bounds_straddle(self, l, alpha, beta, gamma, s):
        lower, upper, exact = asympt.interval_sum_bounds(l, alpha, beta, gamma, s)
        assert lower < exact + 1e-12
        assert exact < upper + 1e-12

    def test_domain_errors(self):
        with pytest.raises(asympt.DomainError):
            asympt.interval_sum_bounds(0, 2.0, 0.0, 0.0, 1.0)
        with pytest.raises(asympt.DomainError):
            asympt.interval_sum_bounds(1, 1.0, 0.0, 0.0, 1.0)
        with pytest.raises(asympt.DomainError):
            asympt.interval_sum_bounds(1, 2.0, 0.0, 1.0, 1.0)
        with pytest.raises(asympt.DomainError):
            asympt.interval_sum_bounds(1, 2.0, 0.0, 0.0, -0.5)


class TestModels:
    def test_model_rejects_negative_leading(self):
        with pytest.raises(ValueError):
            asympt.AsymptoticModel(-1.0, 0.0)

    def test_model_report_rows(self):
        from wellround.square import a_square

        rows = asympt.model_report(a_square(1000), asympt.square_model(), [100, 1000])
        assert [r["x"] for r in rows] == [100, 1000]
        for r in rows:
            assert r["A"] >= 0 and "residual_over_sqrt_x" in r

    def test_model_report_out_of_range(self):
        from wellround.dirichlet import OutOfRangeError
        from wellround.square import a_square

        with pytest.raises(OutOfRangeError):
            asympt.model_report(a_square(100), asympt.square_model(), [1000])


class TestSandwich:
    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
    def test_square(self, s):
        assert asympt.sandwich_check_square(s, N=20_000)

    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
    def test_hex(self, s):
        assert asympt.sandwich_check_hex(s, N=20_000)


class TestEpstein:
    def test_truncated_positive_definite_only(self):
        with pytest.raises(asympt.DomainError):
            asympt.epstein_truncated((1, 2, 1), 2.0, 100.0)

    def test_value_against_closed_form(self):
        # for x^2 + y^2: 4 zeta(s) L(s, chi_4); at s = 2: 4 zeta(2) Catalan
        catalan = 0.915965594177219
        expected = 4 * (math.pi**2 / 6) * catalan
        value = asympt.epstein_truncated((1, 0, 1), 2.0, 1.0e5)
        assert value == pytest.approx(expected, rel=1e-6)

    def test_residues_within_two_percent(self):
        sq = asympt.epstein_residue_estimate((1, 0, 1), R0=1.0e5)
        assert abs(sq - math.pi) / math.pi < 0.02
        hexa = asympt.epstein_residue_estimate((1, 0.5, 1), R0=1.0e5)
        target = math.pi / math.sqrt(0.75)
        assert abs(hexa - target) / target < 0.02

    def test_primitive_sum_factors(self):
        # full sum over Q <= R equals sum over scalings g of
        # g^{-2s} * (coprime sum over Q <= R / g^2), an exact identity
        s = 1.5
        R = 2.0e4
        full = asympt.epstein_truncated((1, 0, 1), s, R, tail=False)
        assembled = sum(
            g ** (-2 * s)
            * asympt.epstein_primitive_truncated((1, 0, 1), s, R / (g * g))
            for g in range(1, int(math.sqrt(R)) + 1)
        )
        assert full == pytest.approx(assembled, rel=1e-12)

    def test_restricted_moebius_identity(self):
        R = 1.0e6
        for Q, s, k, l, C, D in [
            ((1, 0, 1), 1.5, 2, 1, 3, 4),
            ((1, 0, 1), 1.5, 1, 3, 3, 2),
            ((2, 1, 3), 2.0, 1, 1, 2, 3),
        ]:
            direct = asympt.epstein_restricted(Q, s, k, l, C, D, R)
            moebius = asympt.epstein_restricted_moebius(Q, s, k, l, C, D, R)
            assert abs(direct - moebius) < 1e-6

    def test_restricted_moebius_preconditions(self):
        with pytest.raises(asympt.DomainError):
            asympt.epstein_restricted_moebius((1, 0, 1), 2.0, 3, 1, 1, 4, 100.0)
