from math import gcd

import pytest

from qduadic.cyclic import cyclotomic_cosets, is_quadratic_residue, mu_apply, ord_mod
from qduadic.distance import min_odd_like_weight
from qduadic.duadic import (
    Splitting,
    SplittingError,
    build_quartet,
    check_square_root_bound,
    default_splitting,
    degeneracy_certificate,
    duadic_exists,
    find_splittings,
    p_adic_valuation,
    splitting_by,
)
from qduadic.galois import make_field


class TestDuadicExists:
    def test_7_2(self):
        assert duadic_exists(7, 2) is True

    def test_5_2(self):
        assert duadic_exists(5, 2) is False

    def test_square_field_always_exists(self):
        for n in range(3, 40, 2):
            if gcd(n, 2) == 1:
                assert duadic_exists(n, 4) is True

    def test_preconditions(self):
        with pytest.raises(ValueError):
            duadic_exists(6, 5)
        with pytest.raises(ValueError):
            duadic_exists(9, 3)


class TestSplittingBy:
    def test_mu_minus1_n7(self):
        s = splitting_by(7, 2, 6)
        assert s.S0 == (1, 2, 4) and s.S1 == (3, 5, 6)

    def test_mu_minus1_n17_absent(self):
        # ord_17(2) = 8 is even and -1 is a power of 2 mod 17
        assert splitting_by(17, 2, 16) is None

    def test_mu_minus_q_n7_gf4(self):
        s = splitting_by(7, 4, 5)  # -2 mod 7
        assert s.S0 == (1, 2, 4) and s.S1 == (3, 5, 6)

    def test_sides_swapped_by_a(self):
        for n, q in [(7, 2), (17, 2), (23, 2), (31, 2), (49, 2)]:
            s = default_splitting(n, q)
            assert mu_apply(s.S0, s.a, n) == frozenset(s.S1)
            assert mu_apply(s.S1, s.a, n) == frozenset(s.S0)

    def test_mu_a_squared_fixes_sides(self):
        for n, q in [(7, 2), (17, 2), (49, 2), (7, 4)]:
            for s in find_splittings(n, q, limit=8):
                a2 = s.a * s.a % n
                assert mu_apply(s.S0, a2, n) == frozenset(s.S0)

    def test_invalid_splitting_rejected(self):
        with pytest.raises(SplittingError):
            Splitting(n=7, q=2, S0=(1, 2, 4), S1=(3, 5, 6), a=2)  # mu_2 fixes sides
        with pytest.raises(SplittingError):
            Splitting(n=7, q=2, S0=(1, 2, 3), S1=(4, 5, 6), a=6)  # not coset unions


class TestFindSplittings:
    def test_n7_all(self):
        out = find_splittings(7, 2)
        assert [(s.a, s.S0) for s in out] == [
            (3, (1, 2, 4)), (3, (3, 5, 6)),
            (5, (1, 2, 4)), (5, (3, 5, 6)),
            (6, (1, 2, 4)), (6, (3, 5, 6)),
        ]

    def test_n5_empty(self):
        assert find_splittings(5, 2) == []

    def test_n49_at_least_one(self):
        assert len(find_splittings(49, 2, limit=1)) == 1

    def test_existence_criterion_matches_theorem(self):
        for n in range(3, 62, 2):
            has = bool(find_splittings(n, 2, limit=1))
            assert has == is_quadratic_residue(2, n)

    def test_limit_respected(self):
        assert len(find_splittings(7, 2, limit=3)) == 3

    def test_splitting_id_stable(self):
        a = splitting_by(7, 2, 6).splitting_id
        b = splitting_by(7, 2, 6).splitting_id
        assert a == b and len(a) == 12


class TestQuartet:
    def test_n7_dimensions_and_types(self):
        qt = build_quartet(splitting_by(7, 2, 6), make_field(2))
        assert (qt.D0.k, qt.C0.k) == (4, 3)
        assert qt.D0.genpoly.coeffs == (1, 1, 0, 1)  # the Hamming code

    @pytest.mark.parametrize("n,q", [(7, 2), (17, 2), (23, 2), (31, 2), (7, 4)])
    def test_dimension_formula(self, n, q):
        from qduadic.galois import field_from_order
        qt = build_quartet(default_splitting(n, q), field_from_order(q))
        assert qt.D0.k == (n + 1) // 2 and qt.D1.k == (n + 1) // 2
        assert qt.C0.k == (n - 1) // 2 and qt.C1.k == (n - 1) // 2
        assert qt.D0.k - qt.C0.k == 1

    def test_n17_dimensions(self):
        qt = build_quartet(default_splitting(17, 2), make_field(2))
        assert (qt.D0.k, qt.C0.k) == (9, 8)

    def test_containment(self):
        qt = build_quartet(default_splitting(23, 2), make_field(2))
        assert qt.D0.genpoly.divides(qt.C0.genpoly)
        assert qt.D1.genpoly.divides(qt.C1.genpoly)

    def test_even_odd_like_structure(self):
        qt = build_quartet(default_splitting(17, 2), make_field(2))
        assert all(qt.C0.is_even_like(r) for r in qt.C0.G)
        assert any(not qt.D0.is_even_like(r) for r in qt.D0.G)

    def test_field_mismatch(self):
        with pytest.raises(SplittingError):
            build_quartet(splitting_by(7, 2, 6), make_field(2, 2))


class TestSquareRootBound:
    def test_n7(self):
        qt = build_quartet(splitting_by(7, 2, 6), make_field(2))
        r = check_square_root_bound(qt, min_odd_like_weight(qt.D0),
                                    min_odd_like_weight(qt.D1))
        assert r.equal_across_pair and r.bound_sq
        assert r.mu_minus1 and r.bound_sq_strong  # 3^2 - 3 + 1 = 7 >= 7
        assert r.all_satisfied

    def test_n23_golay(self):
        qt = build_quartet(default_splitting(23, 2), make_field(2))
        d = min_odd_like_weight(qt.D0)
        assert d.value == 7
        r = check_square_root_bound(qt, d, min_odd_like_weight(qt.D1))
        assert r.bound_sq and r.mu_minus1 and r.bound_sq_strong

    def test_n17_mu_minus1_not_applicable(self):
        qt = build_quartet(default_splitting(17, 2), make_field(2))
        d = min_odd_like_weight(qt.D0)
        assert d.value == 5
        r = check_square_root_bound(qt, d, min_odd_like_weight(qt.D1))
        assert r.bound_sq and not r.mu_minus1 and r.bound_sq_strong is None

    def test_interval_input_vacuous(self):
        from qduadic.distance import DistanceResult
        qt = build_quartet(splitting_by(7, 2, 6), make_field(2))
        r = check_square_root_bound(
            qt, DistanceResult("interval", 1, 7, "full_enumeration", 0))
        assert r.bound_sq is None and r.equal_across_pair is None


class TestLemma6:
    def test_mu_minus1_equals_mu_minus_q_when_ord_odd(self):
        for n in range(3, 62, 2):
            if ord_mod(n, 2) % 2 == 1:
                s1 = splitting_by(n, 4, n - 1)
                s2 = splitting_by(n, 4, (-2) % n)
                assert s1 is not None and s2 is not None, f"n={n}"
                assert {frozenset(s1.S0), frozenset(s1.S1)} == \
                       {frozenset(s2.S0), frozenset(s2.S1)}, f"n={n}"


class TestCertificate:
    def test_n49_css(self):
        c = degeneracy_certificate(49, 2, "CSS")
        (pl,) = c.primes
        assert (pl.p, pl.m, pl.t, pl.z) == (7, 2, 3, 1)
        assert c.purity_bound == 7
        assert not pl.m_gt_2z  # 2 > 2 is false: strict hypothesis unmet
        assert c.example_clause_7m  # the 7^m, q=2 family stated with m >= 2
        assert not c.hypotheses_met

    def test_n343_css(self):
        c = degeneracy_certificate(343, 2, "CSS")
        (pl,) = c.primes
        assert pl.m == 3 and pl.z == 1 and pl.m_gt_2z
        assert c.purity_bound == 7 and c.purity_bound**2 < 343
        assert c.hypotheses_met

    def test_n343_hermitian(self):
        c = degeneracy_certificate(343, 2, "Hermitian")
        (pl,) = c.primes
        assert pl.t == ord_mod(7, 4) == 3
        assert pl.z == p_adic_valuation(7, 4**3 - 1) == 1
        assert c.ord_n_q_odd and c.all_p_cong_3_mod_4 and c.all_m_gt_2z
        assert c.hypotheses_met

    def test_n7_no_degeneracy_predicted(self):
        c = degeneracy_certificate(7, 2, "CSS")
        assert not c.hypotheses_met and not c.example_clause_7m

    def test_exact_valuation(self):
        for n, q, kind in [(49, 2, "CSS"), (343, 2, "CSS"), (343, 2, "Hermitian")]:
            c = degeneracy_certificate(n, q, kind)
            base = q * q if kind == "Hermitian" else q
            for pl in c.primes:
                x = base**pl.t - 1
                assert x % pl.p**pl.z == 0
                assert x % pl.p**(pl.z + 1) != 0

    def test_factorization_cap(self):
        with pytest.raises(ValueError):
            degeneracy_certificate(10**6 + 1, 2, "CSS")


class TestDefaultSplitting:
    def test_prefers_mu_minus1(self):
        for n in (7, 23, 31, 49):
            s = default_splitting(n, 2)
            assert s.a == n - 1

    def test_falls_back_when_mu_minus1_absent(self):
        s = default_splitting(17, 2)
        assert s is not None and s.a == 3

    def test_none_when_nonexistent(self):
        assert default_splitting(5, 2) is None
