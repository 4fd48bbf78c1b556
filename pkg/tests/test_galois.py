import pytest
from hypothesis import given, strategies as st

from pscodes.galois import BinaryExtField, PrimeField, PRIMITIVE_POLYS, is_prime


class TestPrimeField:
    def test_add_mod5(self):
        assert PrimeField(5).add(3, 4) == 2

    def test_inv_identity(self):
        assert PrimeField(7).inv(1) == 1

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            PrimeField(9)
        with pytest.raises(ValueError):
            PrimeField(1)

    def test_rejects_huge(self):
        with pytest.raises(ValueError):
            PrimeField((1 << 31) + 11)

    def test_div_by_zero(self):
        f = PrimeField(5)
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        with pytest.raises(ZeroDivisionError):
            f.div(3, 0)

    @given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 30))
    def test_associativity(self, a, b, c):
        f = PrimeField(31)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))

    @given(st.integers(1, 30))
    def test_mul_inverse(self, a):
        f = PrimeField(31)
        assert f.mul(a, f.inv(a)) == 1

    @given(st.integers(0, 30))
    def test_fermat(self, a):
        f = PrimeField(31)
        assert f.pow(a, 31) == a

    def test_is_prime_small(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(50):
            assert is_prime(n) == (n in primes)


class TestBinaryExtField:
    def test_alpha4_gf16(self):
        # x^4 reduces to x + 1 under x^4 + x + 1.
        f = BinaryExtField(4)
        assert f.alpha_pow(4) == 0b0011

    def test_log_antilog_gf16(self):
        f = BinaryExtField(4)
        assert f.log[1] == 0
        assert f.antilog[4] == 0b0011

    def test_gf4_cycle_length(self):
        assert len(BinaryExtField(2).antilog) == 3

    def test_antilog_log_roundtrip(self):
        f = BinaryExtField(5)
        for x in range(1, f.order):
            assert f.antilog[f.log[x]] == x

    def test_char_two(self):
        f = BinaryExtField(6)
        for x in (0, 1, 17, 62):
            assert f.add(x, x) == 0

    @pytest.mark.parametrize("m", sorted(PRIMITIVE_POLYS))
    def test_builtin_polys_are_primitive(self, m):
        f = BinaryExtField(m)
        assert len(set(f.antilog)) == f.order - 1

    def test_non_primitive_poly_detected(self):
        # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5, not 15.
        with pytest.raises(ValueError):
            BinaryExtField(4, 0b11111)

    def test_mul_against_school_method(self):
        f = BinaryExtField(4)

        def slow_mul(a, b):
            prod = 0
            for i in range(4):
                if (b >> i) & 1:
                    prod ^= a << i
            for d in range(7, 3, -1):
                if (prod >> d) & 1:
                    prod ^= f.primitive_poly << (d - 4)
            return prod

        for a in range(16):
            for b in range(16):
                assert f.mul(a, b) == slow_mul(a, b)

    def test_inv(self):
        f = BinaryExtField(4)
        for a in range(1, 16):
            assert f.mul(a, f.inv(a)) == 1
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
