import pytest
from hypothesis import given, strategies as st

from qduadic.galois import (
    FieldError,
    Poly,
    coerce_to_base,
    embed_into_extension,
    factorize,
    field_from_order,
    frobenius,
    make_field,
    primitive_nth_root,
)


def brute_order(f, x):
    """Independent oracle: multiplicative order by exhaustive powering."""
    acc = x
    for t in range(1, f.order):
        if acc == 1:
            return t
        acc = f.mul(acc, x)
    raise AssertionError("no order found")


class TestMakeField:
    def test_gf2(self):
        f = make_field(2)
        assert f.order == 2
        assert f.generator == 1
        assert f.modulus == (0, 1)

    def test_gf4_canonical(self):
        f = make_field(2, 2)
        # x^2 + x + 1 is the only irreducible quadratic over GF(2)
        assert f.modulus == (1, 1, 1)
        assert brute_order(f, f.generator) == 3

    def test_gf4_every_nonzero_cubes_to_one(self):
        f = make_field(2, 2)
        for x in range(1, 4):
            assert f.pow(x, 3) == 1

    def test_gf7_smallest_primitive_root(self):
        f = make_field(7)
        assert f.generator == 3
        # oracle: 3^k runs through all 6 nonzero residues
        seen = {pow(3, k, 7) for k in range(6)}
        assert seen == set(range(1, 7))

    def test_not_prime_rejected(self):
        with pytest.raises(FieldError):
            make_field(4, 1)

    def test_cap_rejected(self):
        with pytest.raises(FieldError):
            make_field(2, 60)

    def test_determinism(self):
        a, b = make_field(3, 2), make_field(3, 2)
        assert a is b
        assert a.modulus == b.modulus and a.generator == b.generator

    def test_tables_roundtrip(self):
        f = make_field(3, 2)
        for x in range(1, f.order):
            assert f.exp(f.log(x)) == x


class TestArithmetic:
    @pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (7, 1)])
    def test_inverses(self, p, m):
        f = make_field(p, m)
        for x in f.elements():
            assert f.add(x, f.neg(x)) == 0
            if x:
                assert f.mul(f.inv(x), x) == 1

    @given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
    def test_gf9_ring_axioms(self, a, b, c):
        f = make_field(3, 2)
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))

    def test_pow_zero_exponent(self):
        f = make_field(2, 3)
        for x in f.elements():
            assert f.pow(x, 0) == 1

    def test_invert_zero(self):
        with pytest.raises(FieldError):
            make_field(2, 2).inv(0)

    def test_tablefree_matches_tables(self):
        # same arithmetic with and without log/antilog tables
        f = make_field(2, 4)
        for a in f.elements():
            for b in f.elements():
                assert f.mul(a, b) == f._raw_mul(a, b)


class TestFrobenius:
    def test_fixed_points(self):
        f = make_field(2, 2)
        assert frobenius(f, 0, 2) == 0
        assert frobenius(f, 1, 2) == 1

    def test_gf4_swaps_non_subfield_elements(self):
        f = make_field(2, 2)
        assert frobenius(f, 2, 2) == 3
        assert frobenius(f, 3, 2) == 2

    @pytest.mark.parametrize("p,m,q", [(2, 2, 2), (2, 4, 4), (3, 2, 3)])
    def test_involution(self, p, m, q):
        f = make_field(p, m)
        for x in f.elements():
            assert frobenius(f, frobenius(f, x, q), q) == x

    def test_incompatible_subfield(self):
        with pytest.raises(FieldError):
            frobenius(make_field(2, 3), 1, 4)


class TestPrimitiveNthRoot:
    def test_n7_over_gf2(self):
        ext, alpha = primitive_nth_root(7, 2)
        assert (ext.p, ext.m) == (2, 3)
        assert alpha != 1
        assert ext.pow(alpha, 7) == 1

    def test_n1_trivial(self):
        ext, alpha = primitive_nth_root(1, 4)
        assert ext.order == 4 and alpha == 1

    def test_n17_over_gf2(self):
        ext, alpha = primitive_nth_root(17, 2)
        assert (ext.p, ext.m) == (2, 8)
        assert brute_order(ext, alpha) == 17

    @pytest.mark.parametrize("n,q", [(3, 2), (5, 2), (7, 2), (9, 2), (5, 4), (7, 4)])
    def test_exact_order(self, n, q):
        ext, alpha = primitive_nth_root(n, q)
        acc = 1
        for k in range(1, n):
            acc = ext.mul(acc, alpha)
            assert acc != 1, f"alpha^{k} = 1 before n"
        assert ext.mul(acc, alpha) == 1

    def test_gcd_violation(self):
        with pytest.raises(FieldError):
            primitive_nth_root(6, 2)


class TestCoercion:
    def test_constant_one(self):
        ext = make_field(2, 3)
        p = coerce_to_base(Poly.one(ext), make_field(2))
        assert p.coeffs == (1,)

    def test_coset_product_lands_in_gf2(self):
        ext, alpha = primitive_nth_root(7, 2)
        g = Poly.one(ext)
        for j in (1, 2, 4):
            g = g.mul(Poly.make([ext.neg(ext.pow(alpha, j)), 1], ext))
        gb = coerce_to_base(g, make_field(2))
        assert gb.coeffs == (1, 1, 0, 1)  # x^3 + x + 1 with the canonical alpha

    def test_strict_extension_coefficient_rejected(self):
        ext = make_field(2, 3)
        bad = Poly.make([ext.generator, 1], ext)  # generator is not in GF(2)
        with pytest.raises(FieldError):
            coerce_to_base(bad, make_field(2))

    @pytest.mark.parametrize("base_m,ext_m", [(1, 3), (1, 4), (2, 4), (2, 6)])
    def test_embed_then_coerce_identity(self, base_m, ext_m):
        base, ext = make_field(2, base_m), make_field(2, ext_m)
        for coeffs in [(1,), (1, 0, 1), tuple(range(min(base.order, 4)))]:
            p = Poly.make(coeffs, base)
            assert coerce_to_base(embed_into_extension(p, ext), base) == p

    def test_gf4_coefficients_from_gf64(self):
        ext, alpha = primitive_nth_root(7, 4)
        base = make_field(2, 2)
        g = Poly.one(ext)
        for j in (1, 2, 4):
            g = g.mul(Poly.make([ext.neg(ext.pow(alpha, j)), 1], ext))
        gb = coerce_to_base(g, base)
        assert gb.degree == 3
        assert all(0 <= c < 4 for c in gb.coeffs)
        # the lift of the coerced polynomial reproduces the original
        assert embed_into_extension(gb, ext) == g


class TestPoly:
    def test_divmod_roundtrip(self):
        f = make_field(3)
        a = Poly.make((1, 2, 0, 1, 2), f)
        b = Poly.make((2, 1, 1), f)
        q, r = a.divmod(b)
        assert q.mul(b).add(r) == a
        assert r.degree < b.degree

    def test_eval_horner(self):
        f = make_field(5)
        p = Poly.make((1, 2, 3), f)  # 1 + 2x + 3x^2
        for x in range(5):
            assert p.eval(x) == (1 + 2 * x + 3 * x * x) % 5

    def test_zero_normalization(self):
        f = make_field(2)
        assert Poly.make((0, 0, 0), f).is_zero()


def test_factorize():
    assert factorize(49) == {7: 2}
    assert factorize(343) == {7: 3}
    assert factorize(2 * 3 * 3 * 25) == {2: 1, 3: 2, 5: 2}
