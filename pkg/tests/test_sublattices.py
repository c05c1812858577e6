import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wellround.gram import GramForm, LatticeType, Unimodular, classify
from wellround.scalar import Scalar
from wellround.sublattices import (
    CensusReport,
    SublatticeBasis,
    UnsupportedDimensionError,
    g_count,
    hnf_enumerate,
    sublattice_gram,
    wr_census_bruteforce,
)


class TestEnumeration:
    def test_count_is_sigma_one(self):
        # number of index-n sublattices is the divisor sum sigma_1(n)
        for n, expected in [(1, 1), (2, 3), (3, 4), (4, 7), (6, 12), (12, 28)]:
            assert len(list(hnf_enumerate(n))) == expected
            assert g_count(n) == expected

    def test_bases_are_distinct_sublattices(self):
        seen = set()
        for basis in hnf_enumerate(12):
            assert basis.index == 12
            seen.add((basis.m, basis.k, basis.l))
        assert len(seen) == 28

    def test_dimension_guard(self):
        with pytest.raises(UnsupportedDimensionError):
            g_count(10, d=3)


class TestSublatticeGram:
    def test_index_two_sublattices_of_square(self):
        g = GramForm.of(1, 0, 1)
        kinds = sorted(
            classify(sublattice_gram(b, g)).value for b in hnf_enumerate(2)
        )
        assert kinds == ["rectangular", "rectangular", "square"]

    @given(st.integers(1, 12), st.integers(-4, 4))
    @settings(max_examples=40)
    def test_gram_determinant_scales_by_index_squared(self, n, b):
        g = GramForm.of(3, b, b * b // 3 + 2)
        for basis in hnf_enumerate(n):
            sub = sublattice_gram(basis, g)
            assert sub.discriminant() == g.discriminant() * (n * n)

    def test_basis_independence(self):
        # census counts are intrinsic: any unimodular re-basing gives the same
        g = GramForm.of(2, 1, 3)
        U = Unimodular(((2, 1), (1, 1)))
        r1 = wr_census_bruteforce(g, 30)
        r2 = wr_census_bruteforce(g.transform(U), 30)
        assert r1.to_csv() == r2.to_csv()


class TestCensus:
    def test_square_small(self):
        r = wr_census_bruteforce(GramForm.of(1, 0, 1), 5)
        assert r.well_rounded_list() == [1, 1, 0, 1, 2]
        assert r.by_type[LatticeType.SQUARE] == [1, 1, 0, 1, 2]
        assert r.by_type[LatticeType.RHOMBIC] == [0, 0, 0, 0, 0]

    def test_hexagonal_small(self):
        r = wr_census_bruteforce(GramForm.of(2, 1, 2), 4)
        assert r.well_rounded_list() == [1, 0, 1, 1]
        assert r.by_type[LatticeType.HEXAGONAL] == [1, 0, 1, 1]

    def test_totals_match_sigma(self):
        r = wr_census_bruteforce(GramForm.of(1, 0, 3), 20)
        for n in range(1, 21):
            assert r.total(n) == g_count(n)

    def test_merge_partition(self):
        g = GramForm.of(2, 1, 2)
        whole = wr_census_bruteforce(g, 20)
        left = wr_census_bruteforce(g, 20, index_range=(1, 11))
        right = wr_census_bruteforce(g, 20, index_range=(11, 21))
        assert left.merge(right).to_csv() == whole.to_csv()

    def test_scalar_entries(self):
        g = GramForm(Scalar(1), Scalar(0), Scalar(0, 1, 2))
        r = wr_census_bruteforce(g, 6)
        assert r.well_rounded_list() == [0, 1, 0, 1, 0, 0]

    def test_csv_shape(self):
        r = wr_census_bruteforce(GramForm.of(1, 0, 1), 3)
        lines = r.to_csv().split("\r\n")
        assert lines[0].split(",") == [
            "n",
            "total",
            "general",
            "rectangular",
            "centred_rect",
            "rhombic",
            "square",
            "hexagonal",
            "well_rounded",
        ]
        assert len(lines) == 5  # header + 3 rows + trailing newline
