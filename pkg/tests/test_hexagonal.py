import pytest

from wellround.gram import GramForm, LatticeType
from wellround.hexagonal import (
    a_hex,
    b_hex,
    b_hex_primitive,
    hex_pair_counts,
)
from wellround.sublattices import wr_census_bruteforce


class TestSimilarCounts:
    def test_b_hex_values(self):
        b = b_hex(12)
        assert list(b) == [1, 0, 1, 1, 0, 0, 2, 0, 1, 0, 0, 1]

    def test_b_hex_multiplicative(self):
        b = b_hex(400)
        for m, n in [(3, 7), (4, 7), (7, 13), (9, 16)]:
            assert b[m * n] == b[m] * b[n]

    def test_primitive(self):
        bp = b_hex_primitive(30)
        assert bp[1] == 1 and bp[4] == 0 and bp[9] == 0
        assert bp[7] == 2


class TestPairCounts:
    def test_band(self):
        w = hex_pair_counts("any", 40)
        assert w[2] == 1  # 1*2, q <= 3p - 1 = 2
        assert w[6] == 1  # 2*3
        assert w[10] == 1  # 2*5
        assert w[12] == 1  # 2*6 inside; 3*4 also inside -> actually check below
        assert w[40] == 2  # 5*8 and 4*10

    def test_band_multiplicity(self):
        w = hex_pair_counts("any", 40)
        # 12 = 2*6 (6 > 3*2-1=5, outside) and 3*4 (4 <= 8, inside)
        assert w[12] == 1
        # 24 = 3*8 (8 <= 8, inside) and 4*6 (6 <= 11, inside)
        assert w[24] == 2

    def test_odd_band(self):
        w = hex_pair_counts("odd", 120)
        assert w[15] == 1  # (3,5): l=2 <= 3
        assert w[105] == 1  # (2k+1,2l+1) = (5,21): l=10 > 6? no -> (7,15)
        assert w[3] == 0  # k >= 1

    def test_unknown_parity(self):
        with pytest.raises(ValueError):
            hex_pair_counts("even", 10)


class TestWellRounded:
    def test_first_values(self):
        a = a_hex(12)
        assert a[1] == 1 and a[2] == 0 and a[3] == 1 and a[4] == 1

    def test_matches_census_small(self):
        N = 60
        census = wr_census_bruteforce(GramForm.of(2, 1, 2), N)
        assert list(a_hex(N)) == census.well_rounded_list()

    def test_no_square_sublattices(self):
        census = wr_census_bruteforce(GramForm.of(2, 1, 2), 80)
        assert census.by_type[LatticeType.SQUARE] == [0] * 80

    def test_similar_are_hexagonal_type(self):
        census = wr_census_bruteforce(GramForm.of(2, 1, 2), 40)
        assert census.by_type[LatticeType.HEXAGONAL] == list(b_hex(40))
