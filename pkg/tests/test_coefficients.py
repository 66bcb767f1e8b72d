from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetali import (
    CONVENTION_CLASSIC,
    EtaTable,
    GammaTable,
    PrecisionContext,
    convert_convention,
    eta_from_gamma_explicit,
    eta_from_gamma_recurrence,
    eta_limit_definition,
    eta_series_oracle,
    expand_eta_symbolic,
    expand_gamma_symbolic,
    gamma_from_eta_explicit,
    modified_gamma,
    partition_count,
    prime_power_base,
    von_mangoldt,
)
from helpers import (
    ETA_EXPANSIONS,
    GAMMA_EXPANSIONS,
    poly_compose,
    poly_normalize,
    rel_diff,
)


class TestEtaTableType:
    def test_validation(self):
        with mp.workprec(64):
            vals = (mp.mpf(1),)
        with pytest.raises(ValueError):
            EtaTable(1, vals, 64, "recurrence")
        with pytest.raises(ValueError):
            EtaTable(0, vals, 64, "guesswork")


class TestModifiedGamma:
    def test_values(self):
        assert modified_gamma(0) == 1
        assert modified_gamma(1) == 1
        assert modified_gamma(2) == 1
        assert modified_gamma(5) == 24

    def test_negative(self):
        with pytest.raises(ValueError):
            modified_gamma(-1)


class TestRecurrence:
    def test_eta0(self, gamma40, eta40, ctx256):
        with ctx256.workprec():
            assert eta40[0] == -gamma40[0]

    def test_eta1_substitution(self, gamma40, eta40, ctx256):
        with ctx256.workprec():
            direct = gamma40[0] ** 2 - 2 * gamma40[1]
            assert abs(eta40[1] - direct) < mp.mpf(2) ** -(ctx256.working_bits - 16)

    def test_provenance_and_length(self, eta40):
        assert eta40.provenance == "recurrence"
        assert len(eta40) == 41

    def test_table_too_short(self, gamma40, ctx256):
        with pytest.raises(ValueError):
            eta_from_gamma_recurrence(gamma40, 41, ctx256)

    def test_wrong_convention(self, gamma40, ctx256):
        classic = convert_convention(gamma40, CONVENTION_CLASSIC)
        with pytest.raises(ValueError):
            eta_from_gamma_recurrence(classic, 3, ctx256)


class TestExplicit:
    def test_n1_is_minus_gamma0(self, gamma40, ctx256):
        got = eta_from_gamma_explicit(gamma40, 1, ctx256)
        with ctx256.workprec():
            assert got == -gamma40[0]

    def test_n3_fixture(self, gamma40, ctx256):
        with ctx256.workprec():
            g0, g1, g2 = gamma40[0], gamma40[1], gamma40[2]
            want = -g0 ** 3 + 3 * g0 * g1 - 3 * g2
            got = eta_from_gamma_explicit(gamma40, 3, ctx256)
            assert abs(got - want) < mp.mpf(2) ** -(ctx256.working_bits - 16)

    def test_cross_method_to_30(self, gamma40, eta40, ctx256):
        with ctx256.workprec():
            for n in range(1, 31):
                got = eta_from_gamma_explicit(gamma40, n, ctx256)
                tol = mp.mpf(2) ** -(ctx256.working_bits - 8 * n)
                assert rel_diff(eta40[n - 1], got) < tol, n

    def test_table_too_short(self, gamma40, ctx256):
        with pytest.raises(ValueError):
            eta_from_gamma_explicit(gamma40, 42, ctx256)


class TestSeriesOracle:
    def test_leading_coefficient(self, gamma40, ctx256):
        ser = eta_series_oracle(gamma40, 5, ctx256)
        with ctx256.workprec():
            assert abs(ser[0] + gamma40[0]) < mp.mpf(2) ** -(ctx256.working_bits - 8)

    def test_cross_method_to_40(self, gamma40, eta40, ctx256):
        ser = eta_series_oracle(gamma40, 40, ctx256)
        tol = mp.mpf(2) ** -(ctx256.working_bits - 16)
        with ctx256.workprec():
            for n in range(41):
                assert rel_diff(eta40[n], ser[n]) < tol, n

    def test_synthetic_geometric_pattern(self, ctx256):
        # gamma = (1, 0, 0, ...) makes the generating function 1 + s, whose
        # negated logarithmic derivative is -1/(1+s) = -1 + s - s^2 + ...
        with ctx256.workprec():
            vals = tuple(mp.mpf(1 if i == 0 else 0) for i in range(7))
        synth = GammaTable("paper", 6, vals, ctx256.working_bits)
        ser = eta_series_oracle(synth, 6, ctx256)
        with ctx256.workprec():
            for n in range(7):
                want = -1 if n % 2 == 0 else 1
                assert abs(ser[n] - want) < mp.mpf(2) ** -(ctx256.working_bits - 8)

    def test_provenance(self, gamma40, ctx256):
        assert eta_series_oracle(gamma40, 3, ctx256).provenance == "series_oracle"


class TestInversion:
    def test_n1(self, eta40, ctx256):
        got = gamma_from_eta_explicit(eta40, 1, ctx256)
        with ctx256.workprec():
            assert got == -eta40[0]

    def test_n2_fixture(self, eta40, ctx256):
        with ctx256.workprec():
            want = (eta40[0] ** 2 - eta40[1]) / 2
            got = gamma_from_eta_explicit(eta40, 2, ctx256)
            assert abs(got - want) < mp.mpf(2) ** -(ctx256.working_bits - 16)

    def test_roundtrip_to_30(self, gamma40, eta40, ctx256):
        with ctx256.workprec():
            for n in range(1, 31):
                back = gamma_from_eta_explicit(eta40, n, ctx256)
                tol = mp.mpf(2) ** -(ctx256.working_bits - 8 * n)
                assert rel_diff(gamma40[n - 1], back) < tol, n


class TestVonMangoldt:
    CTX = PrecisionContext(64, 16)

    def test_one_is_zero(self):
        assert von_mangoldt(1, self.CTX) == 0

    def test_prime_power(self):
        with self.CTX.workprec():
            assert von_mangoldt(8, self.CTX) == mp.log(2)
            assert von_mangoldt(9, self.CTX) == mp.log(3)
            assert von_mangoldt(7919, self.CTX) == mp.log(7919)
            assert von_mangoldt(2 ** 20, self.CTX) == mp.log(2)

    def test_composite_is_zero(self):
        for k in (6, 10, 12, 36, 1000, 2 * 3 * 5 * 7):
            assert von_mangoldt(k, self.CTX) == 0

    def test_invalid(self):
        with pytest.raises(ValueError):
            von_mangoldt(0, self.CTX)

    def test_base_against_trial_division(self):
        def oracle(k):
            factors = set()
            m, d = k, 2
            while d * d <= m:
                while m % d == 0:
                    factors.add(d)
                    m //= d
                d += 1
            if m > 1:
                factors.add(m)
            return factors.pop() if len(factors) == 1 else None

        for k in range(2, 4000):
            assert prime_power_base(k) == oracle(k), k

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from([2, 3, 5, 7, 11, 13, 97]),
           st.integers(min_value=1, max_value=12))
    def test_powers_detected(self, p, m):
        assert prime_power_base(p ** m) == p


class TestEtaLimit:
    CTX = PrecisionContext(64, 16)

    def test_ten_term_fixture(self):
        # Lambda is nonzero below 10 exactly on {2,3,4,5,7,8,9}
        with self.CTX.workprec():
            want = (mp.log(2) * (mp.mpf(1) / 2 + mp.mpf(1) / 4 + mp.mpf(1) / 8)
                    + mp.log(3) * (mp.mpf(1) / 3 + mp.mpf(1) / 9)
                    + mp.log(5) / 5 + mp.log(7) / 7 - mp.log(10))
            got = eta_limit_definition(0, 10, self.CTX)
            assert abs(got - want) < mp.mpf(2) ** -64

    def test_error_decreases(self, eta40):
        with mp.workprec(96):
            errs = [abs(eta_limit_definition(0, x, self.CTX) - eta40[0])
                    for x in (10 ** 3, 10 ** 4, 10 ** 5)]
        assert errs[0] > errs[2]
        assert errs[2] < mp.mpf("1e-2")

    def test_validation(self):
        with pytest.raises(ValueError):
            eta_limit_definition(0, 1, self.CTX)
        with pytest.raises(ValueError):
            eta_limit_definition(-1, 100, self.CTX)


class TestSymbolicEta:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_published_lines(self, n):
        assert expand_eta_symbolic(n).terms == ETA_EXPANSIONS[n]

    def test_n5_coefficient_multiset(self):
        exp = expand_eta_symbolic(5)
        assert sorted(int(c) for c in exp.terms.values()) == \
            [-5, -5, -5, -1, 5, 5, 5]

    def test_sign_law_and_integrality(self):
        for n in range(1, 26):
            for k, coeff in expand_eta_symbolic(n).terms.items():
                assert coeff.denominator == 1
                p = sum(k)
                assert (coeff > 0) == (p % 2 == 0), (n, k)

    def test_term_count_is_partition_count(self):
        for n in range(1, 26):
            assert len(expand_eta_symbolic(n).terms) == partition_count(n)

    def test_canonical_key_order(self):
        for n in (3, 7, 12):
            keys = list(expand_eta_symbolic(n).terms)
            assert keys == sorted(keys)

    def test_json_shape(self):
        obj = expand_eta_symbolic(2).to_json_obj()
        assert obj == {
            "target": "eta", "n": 2,
            "terms": [{"k": [0, 1, 0], "coeff": "-2/1"},
                      {"k": [2, 0, 0], "coeff": "1/1"}]}


class TestSymbolicGamma:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_published_lines(self, n):
        assert expand_gamma_symbolic(n).terms == GAMMA_EXPANSIONS[n]

    def test_n_factorial_times_coefficient_is_integer(self):
        import math
        for n in range(1, 26):
            fac = math.factorial(n)
            for coeff in expand_gamma_symbolic(n).terms.values():
                assert (fac * coeff).denominator == 1, n

    def test_composition_collapses_to_identity(self):
        # substituting the eta expansions into the gamma expansion of
        # index n must produce exactly the monomial gamma_{n-1}
        eta_polys = {}

        def eta_in_gamma(i):
            if i not in eta_polys:
                eta_polys[i] = poly_normalize(expand_eta_symbolic(i + 1).terms)
            return eta_polys[i]

        for n in range(1, 9):
            outer = poly_normalize(expand_gamma_symbolic(n).terms)
            composed = poly_compose(outer, eta_in_gamma)
            expected_key = tuple(1 if i == n - 1 else 0
                                 for i in range(max(len(k) for k in composed)))
            assert composed == {expected_key: Fraction(1)}, n
