import itertools
import random

import pytest

from pscodes.bch import (
    BchCode,
    bch_build,
    bch_decode,
    bch_encode,
    bch_syndromes,
    cyclotomic_coset,
    minimal_polynomial,
    poly2_mod,
)
from pscodes.errors import BchDecodeFailure
from pscodes.galois import BinaryExtField


def flip(word, *positions):
    bits = list(word)
    for i in positions:
        bits[i] = "0" if bits[i] == "1" else "1"
    return "".join(bits)


class TestBuild:
    def test_hamming_15_11(self):
        code = bch_build(4, 1)
        assert code.gen_poly == 0b10011
        assert code.dimension == 11

    def test_15_7_generator(self):
        # minpoly(alpha) * minpoly(alpha^3) under x^4 + x + 1.
        code = bch_build(4, 2)
        assert code.gen_poly == 0b111010001
        assert code.dimension == 7

    def test_lemma_dimension_formula(self):
        code = bch_build(4, 2)
        assert code.lemma_bound_ok
        assert code.dimension == 15 - 4 * 2

    def test_dimension_plus_degree(self):
        for m, t in ((3, 1), (4, 1), (4, 2), (5, 3), (6, 2)):
            code = bch_build(m, t)
            assert code.dimension + (code.gen_poly.bit_length() - 1) == code.n

    def test_generator_divides_x_n_plus_1(self):
        for m, t in ((4, 2), (5, 3)):
            code = bch_build(m, t)
            assert poly2_mod((1 << code.n) | 1, code.gen_poly) == 0

    def test_outside_lemma_window(self):
        # Designed distance 15 on length 31 violates the dimension-formula
        # window but the true generator still leaves 6 message bits.
        code = bch_build(5, 7)
        assert not code.lemma_bound_ok
        assert code.dimension == 6
        assert code.radius == 7

    def test_infeasible_distance(self):
        with pytest.raises(ValueError):
            bch_build(3, 4)

    def test_coset(self):
        assert cyclotomic_coset(1, 15) == (1, 2, 4, 8)
        assert cyclotomic_coset(3, 15) == (3, 6, 9, 12)
        assert cyclotomic_coset(5, 15) == (5, 10)

    def test_minimal_polynomial_has_root(self):
        fld = BinaryExtField(4)
        for e in (1, 3, 5, 7):
            poly = minimal_polynomial(fld, e)
            beta = fld.alpha_pow(e)
            acc = 0
            for i in range(poly.bit_length()):
                if (poly >> i) & 1:
                    acc ^= fld.pow(beta, i)
            assert acc == 0


class TestEncode:
    def test_zero_message(self):
        code = bch_build(4, 2)
        assert bch_encode("0" * 7, code) == "0" * 15

    def test_systematic(self):
        code = bch_build(4, 2)
        for v in (0, 1, 43, 127):
            msg = format(v, "07b")
            assert bch_encode(msg, code)[:7] == msg

    def test_multiple_of_generator(self):
        code = bch_build(4, 2)
        for v in range(0, 128, 11):
            word = bch_encode(format(v, "07b"), code)
            assert poly2_mod(int(word, 2), code.gen_poly) == 0

    def test_min_weight_is_5(self):
        code = bch_build(4, 2)
        weights = {
            bch_encode(format(v, "07b"), code).count("1") for v in range(1, 128)
        }
        assert min(weights) == 5

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            bch_encode("101", bch_build(4, 2))


class TestDecode:
    def test_clean(self):
        code = bch_build(4, 2)
        word = bch_encode("1010101", code)
        assert bch_decode(word, code) == (word, "1010101")

    def test_zero_word_single_flip(self):
        code = bch_build(4, 2)
        for pos in range(15):
            assert bch_decode(flip("0" * 15, pos), code) == ("0" * 15, "0" * 7)

    def test_exhaustive_radius_two(self):
        # Every codeword x every <= 2-bit pattern; outputs re-encode to
        # themselves.
        code = bch_build(4, 2)
        patterns = [()] + [(i,) for i in range(15)] + list(
            itertools.combinations(range(15), 2)
        )
        for v in range(128):
            word = bch_encode(format(v, "07b"), code)
            for pat in patterns:
                got, msg = bch_decode(flip(word, *pat), code)
                assert got == word
                assert bch_encode(msg, code) == got

    def test_beyond_radius_loud_or_valid(self):
        # With 3 > t errors the decoder either fails loudly or lands on some
        # valid codeword within radius t of the received word; it never
        # returns a non-codeword or over-corrects.
        code = bch_build(4, 2)
        rng = random.Random(7)
        for _ in range(300):
            word = bch_encode(format(rng.getrandbits(7), "07b"), code)
            received = flip(word, *rng.sample(range(15), 3))
            try:
                got, _ = bch_decode(received, code)
            except BchDecodeFailure:
                continue
            assert not any(bch_syndromes(got, code))
            assert sum(a != b for a, b in zip(got, received)) <= code.t

    def test_good_code_interface(self):
        code = bch_build(5, 7)
        assert isinstance(code, BchCode)
        msg = "101101"[: code.dimension]
        word = code.encode(msg)
        assert code.decode(flip(word, 0, 7, 11, 20))[0] == word
