import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circulant_codes import _kernels
from circulant_codes.distance import (
    WeightDistribution,
    enumerator_string,
    macwilliams_dual,
    min_distance,
    parse_enumerator,
    scan_weight_class,
    weight_distribution,
    weight_table,
)
from circulant_codes.gf2_core import GeneratorVector
from circulant_codes.instances import W_C15_1, W_C19_1, W_C30

from oracles import brute_distribution, brute_min_distance, brute_per_weight_minima
from test_gf2_core import vectors


class TestMinDistance:
    @pytest.mark.parametrize(
        "name,d",
        [("alpha19", 6), ("alpha19'", 8), ("alpha15'", 8), ("alpha25'", 10)],
    )
    def test_published(self, inst, name, d):
        assert min_distance(inst(name)).d == d

    def test_zero_vector(self):
        for n in (1, 2, 7):
            r = min_distance(GeneratorVector.from_bits((0,) * n))
            assert r.d == 1 and r.witness.weight == 1 and r.exact

    def test_witness(self, inst):
        r = min_distance(inst("alpha19"))
        assert r.witness_rows == (1, 2, 6, 16)
        assert r.witness.weight == r.d == 6

    def test_examined_weights_stop_at_bound(self, inst):
        # best weight 6 is known after k = 4, so k = 5 is the last scan
        r = min_distance(inst("alpha19"))
        assert r.per_weight_minima == ((1, 8), (2, 6), (3, 4), (4, 2), (5, 2))
        assert r.d == min(k + t for k, t in r.per_weight_minima)

    def test_stop_below(self, inst):
        r = min_distance(inst("alpha19"), stop_below=8)
        assert not r.exact
        assert r.d < 8 and r.witness.weight == r.d

    def test_stop_below_not_triggered_is_exact(self, inst):
        r = min_distance(inst("alpha19'"), stop_below=8)
        assert r.exact and r.d == 8

    @settings(max_examples=150, deadline=None)
    @given(vectors(min_n=1, max_n=10))
    def test_oracle_equivalence(self, alpha):
        assert min_distance(alpha).d == brute_min_distance(alpha.bits)

    @settings(max_examples=100, deadline=None)
    @given(vectors(min_n=1, max_n=16))
    def test_weight_bound_and_witness(self, alpha):
        r = min_distance(alpha)
        assert 1 <= r.d <= sum(alpha.bits) + 1
        assert r.witness.weight == r.d and r.witness.value != 0


class TestWeightTable:
    def test_alpha19(self, inst):
        table = weight_table(inst("alpha19"), 8)
        assert [r.a_weight for r in table] == [8, 6, 4, 2, 2, 4, 2, 2]
        assert [r.rows for r in table] == [
            (1,),
            (1, 9),
            (1, 4, 12),
            (1, 2, 6, 16),
            (1, 2, 8, 11, 14),
            (1, 2, 3, 4, 6, 13),
            (1, 2, 4, 6, 7, 10, 17),
            (1, 2, 3, 6, 7, 8, 12, 16),
        ]

    @settings(max_examples=40, deadline=None)
    @given(vectors(min_n=2, max_n=9), st.integers(1, 4))
    def test_symmetry_reduction_sound(self, alpha, k):
        # the reduced scan keeps the unrestricted minimum and lex-first argmin
        k = min(k, alpha.n)
        row = weight_table(alpha, k)[-1]
        assert (row.a_weight, row.rows) == brute_per_weight_minima(alpha.bits, k)

    def test_scan_rejects_bad_k(self, inst):
        with pytest.raises(ValueError):
            scan_weight_class(inst("alpha15"), 0)


class TestWeightDistribution:
    def test_alpha19_1(self, inst):
        w = weight_distribution(inst("alpha19'"))
        assert (w[8], w[10], w[12]) == (133, 2052, 10108)
        assert w.counts == parse_enumerator(W_C19_1, 38)

    def test_alpha15_1(self, inst):
        w = weight_distribution(inst("alpha15'"))
        assert (w[8], w[10], w[12], w[14], w[16], w[30]) == (450, 1848, 5040, 9045, 9045, 1)
        assert w.counts == parse_enumerator(W_C15_1, 30)

    def test_alpha30_against_repaired_print(self, inst):
        # the printed z^20 coefficient is off; the code contains the all-ones
        # word, so A_i = A_{60-i}, and the total must be 2^30
        printed = list(parse_enumerator(W_C30, 60))
        assert printed[20] != printed[40]
        printed[20] = 2**30 - (sum(printed) - printed[20])
        assert printed[20] == printed[40]
        assert weight_distribution(inst("alpha30")).counts == tuple(printed)

    def test_zero_vector(self):
        w = weight_distribution(GeneratorVector.from_bits((0, 0)))
        assert w.counts == (1, 2, 1, 0, 0)

    def test_cap(self, inst):
        with pytest.raises(ValueError, match="cap"):
            weight_distribution(inst("alpha19"), cap=16)

    @settings(max_examples=60, deadline=None)
    @given(vectors(min_n=1, max_n=10))
    def test_matches_brute_force(self, alpha):
        assert weight_distribution(alpha).counts == brute_distribution(alpha.bits)

    @settings(max_examples=40, deadline=None)
    @given(vectors(min_n=1, max_n=16))
    def test_first_nonzero_weight_is_d(self, alpha):
        w = weight_distribution(alpha)
        assert w.total == 2**alpha.n
        assert w.min_weight == min_distance(alpha).d

    @pytest.mark.parametrize("chunks", [1, 2, 3, 7, 64])
    def test_chunking_is_invisible(self, inst, chunks):
        rows = _kernels.pack_rows(inst("alpha15"))
        assert list(_kernels.gray_sweep(rows, chunks)) == list(_kernels.gray_sweep(rows, 1))

    def test_threads_argument(self, inst):
        a = inst("alpha15'")
        assert weight_distribution(a, threads=1) == weight_distribution(a)

    def test_multiword_rows(self):
        # n = 70 spans two 64-bit words; a single circulant row is easy to verify
        bits = [0] * 70
        for p in (1, 5, 64, 65, 69):
            bits[p] = 1
        alpha = GeneratorVector.from_bits(bits)
        found, _ = scan_weight_class(alpha, 1)
        assert found == {5: (1,)}
        assert min_distance(alpha).d <= 6


class TestEnumeratorString:
    def test_alpha19_1(self, inst):
        assert enumerator_string(weight_distribution(inst("alpha19'"))).startswith(
            "1+133z^8+2052z^10"
        )

    def test_alpha15_1(self, inst):
        assert enumerator_string(weight_distribution(inst("alpha15'"))).endswith(
            "+450z^22+z^30"
        )

    def test_trivial(self):
        assert enumerator_string(WeightDistribution(4, (1, 0, 0, 0, 0))) == "1"
        assert enumerator_string(WeightDistribution(2, (1, 2, 1))) == "1+2z+z^2"

    def test_parse_roundtrip(self, inst):
        w = weight_distribution(inst("alpha15'"))
        assert parse_enumerator(enumerator_string(w), 30) == w.counts

    def test_parse_rejects(self):
        with pytest.raises(ValueError):
            parse_enumerator("1+3y^2", 4)
        with pytest.raises(ValueError):
            parse_enumerator("1+z^9", 4)


class TestMacWilliams:
    def test_full_space(self):
        assert macwilliams_dual(WeightDistribution(2, (1, 2, 1)), 2, 2).counts == (1, 0, 0)

    def test_repetition(self):
        assert macwilliams_dual(WeightDistribution(2, (1, 0, 1)), 2, 1).counts == (1, 0, 1)

    def test_hamming_7_4(self):
        # the [7,4] Hamming code's dual is the [7,3] simplex code, all weights 4
        ham = WeightDistribution(7, (1, 0, 0, 7, 7, 0, 0, 1))
        assert macwilliams_dual(ham, 7, 4).counts == (1, 0, 0, 0, 7, 0, 0, 0)

    def test_alpha19_1_self_dual(self, inst):
        w = weight_distribution(inst("alpha19'"))
        assert macwilliams_dual(w, 38, 19) == w

    def test_rejects_wrong_mass(self):
        with pytest.raises(ValueError):
            macwilliams_dual(WeightDistribution(2, (1, 1, 1)), 2, 2)

    def test_rejects_non_integral(self):
        # sums to 4 but is no linear code's distribution
        with pytest.raises(ValueError):
            macwilliams_dual(WeightDistribution(3, (1, 3, 0, 0)), 3, 2)

    @settings(max_examples=30, deadline=None)
    @given(vectors(min_n=1, max_n=12))
    def test_formal_self_duality(self, alpha):
        w = weight_distribution(alpha)
        assert macwilliams_dual(w, 2 * alpha.n, alpha.n) == w


class TestDistributionType:
    def test_invariants(self):
        with pytest.raises(ValueError):
            WeightDistribution(2, (0, 2, 2))
        with pytest.raises(ValueError):
            WeightDistribution(2, (1, 2))
        with pytest.raises(ValueError):
            WeightDistribution(2, (1, -1, 2))

    def test_csv(self):
        w = WeightDistribution(2, (1, 2, 1))
        assert w.to_csv() == "weight,count\n0,1\n1,2\n2,1\n"
