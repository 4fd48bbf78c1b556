import itertools

import pytest

from pscodes.errors import GrsDecodeFailure
from pscodes.galois import PrimeField
from pscodes.grs import GrsParams, grs_decode, grs_encode, grs_syndromes


def codebook(params):
    for msg in itertools.product(range(params.field.p), repeat=params.k):
        yield grs_encode(msg, params)


class TestParams:
    def test_default(self):
        gp = GrsParams.default(7, 6, 2)
        assert gp.alphas == (1, 2, 3, 4, 5, 6)
        assert gp.omegas == (1,) * 6

    def test_length_needs_room(self):
        with pytest.raises(ValueError):
            GrsParams.default(5, 5, 2)

    def test_duplicate_alpha_rejected(self):
        with pytest.raises(ValueError):
            GrsParams(PrimeField(7), 3, 1, (1, 1, 2), (1, 1, 1))

    def test_zero_omega_rejected(self):
        with pytest.raises(ValueError):
            GrsParams(PrimeField(7), 3, 1, (1, 2, 3), (1, 0, 1))


class TestEncode:
    def test_zero_message(self):
        gp = GrsParams.default(7, 6, 2)
        assert grs_encode((0, 0, 0, 0), gp) == (0,) * 6

    def test_frozen_example(self):
        # Solving the 2x2 parity system by hand for msg (1,0,0,0):
        # a + b = 6 and 5a + 6b = -1 (mod 7) give (a, b) = (2, 4).
        gp = GrsParams.default(7, 6, 2)
        assert grs_encode((1, 0, 0, 0), gp) == (1, 0, 0, 0, 2, 4)

    def test_systematic_and_zero_syndromes(self):
        gp = GrsParams.default(11, 8, 3)
        msg = (3, 1, 4, 1, 5)
        word = grs_encode(msg, gp)
        assert word[:5] == msg
        assert grs_syndromes(word, gp) == (0, 0, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            grs_encode((1, 2, 3), GrsParams.default(7, 6, 2))


class TestSyndromes:
    def test_unit_vector(self):
        gp = GrsParams.default(7, 6, 2)
        assert grs_syndromes((0, 0, 1, 0, 0, 0), gp) == (1, 3)

    def test_linearity_single_error(self):
        gp = GrsParams.default(11, 6, 3)
        word = grs_encode((2, 9, 4), gp)
        y = list(word)
        y[4] = (y[4] + 5) % 11
        alpha = gp.alphas[4]
        assert grs_syndromes(y, gp) == tuple(
            5 * pow(alpha, l, 11) % 11 for l in range(3)
        )


class TestMinimumDistance:
    def test_p5_n4_r2(self):
        gp = GrsParams.default(5, 4, 2)
        for word in codebook(gp):
            if any(word):
                assert sum(v != 0 for v in word) >= 3


class TestDecode:
    def test_clean_word(self):
        gp = GrsParams.default(7, 6, 2)
        word = grs_encode((1, 2, 3, 4), gp)
        assert grs_decode(word, gp) == word

    def test_exhaustive_single_errors(self):
        gp = GrsParams.default(7, 6, 2)
        for word in codebook(gp):
            for pos in range(6):
                for val in range(1, 7):
                    y = list(word)
                    y[pos] = (y[pos] + val) % 7
                    assert grs_decode(y, gp) == word

    def test_exhaustive_double_errors_r4(self):
        gp = GrsParams.default(7, 6, 4)
        words = list(codebook(gp))
        for word in words:
            for p1, p2 in itertools.combinations(range(6), 2):
                for v1, v2 in itertools.product(range(1, 7), repeat=2):
                    y = list(word)
                    y[p1] = (y[p1] + v1) % 7
                    y[p2] = (y[p2] + v2) % 7
                    assert grs_decode(y, gp) == word

    def test_beyond_radius_is_loud_or_wrong_codeword(self):
        gp = GrsParams.default(7, 6, 2)
        word = grs_encode((1, 0, 0, 0), gp)
        y = list(word)
        y[0] = (y[0] + 1) % 7
        y[3] = (y[3] + 2) % 7
        try:
            out = grs_decode(y, gp)
            assert grs_syndromes(out, gp) == (0, 0)
        except GrsDecodeFailure:
            pass

    def test_single_erasure_with_one_parity(self):
        # One erasure and zero errors fit in r = 1: 2*0 + 1 <= 1.
        gp = GrsParams.default(7, 6, 1)
        word = grs_encode((1, 5, 0, 2, 6), gp)
        y = list(word)
        y[2] = (y[2] + 3) % 7
        assert grs_decode(y, gp, erasures=[2]) == word

    def test_erasures_plus_errors(self):
        gp = GrsParams.default(11, 8, 4)
        word = grs_encode((7, 0, 3, 9), gp)
        for era_pos in range(8):
            for err_pos in range(8):
                if err_pos == era_pos:
                    continue
                y = list(word)
                y[era_pos] = (y[era_pos] + 4) % 11
                y[err_pos] = (y[err_pos] + 6) % 11
                assert grs_decode(y, gp, erasures=[era_pos]) == word

    def test_erasure_value_irrelevant(self):
        gp = GrsParams.default(7, 6, 2)
        word = grs_encode((4, 4, 4, 4), gp)
        for val in range(7):
            y = list(word)
            y[5] = val
            assert grs_decode(y, gp, erasures=[5]) == word

    def test_too_many_erasures(self):
        gp = GrsParams.default(7, 6, 2)
        word = grs_encode((1, 2, 3, 4), gp)
        with pytest.raises(GrsDecodeFailure):
            grs_decode(word, gp, erasures=[0, 1, 2])

    def test_known_syndromes_zero_matches_plain(self):
        gp = GrsParams.default(7, 6, 2)
        for word in itertools.islice(codebook(gp), 0, 49, 7):
            y = list(word)
            y[1] = (y[1] + 3) % 7
            assert grs_decode(y, gp) == grs_decode(y, gp, true_syndromes=(0, 0))

    def test_known_syndromes_coset(self):
        # Decode toward an arbitrary coset: take any vector x, publish its
        # syndromes, corrupt one position, recover x exactly.
        gp = GrsParams.default(11, 8, 2)
        x = (5, 2, 0, 10, 7, 1, 1, 3)
        target = grs_syndromes(x, gp)
        for pos in range(8):
            y = list(x)
            y[pos] = (y[pos] + 8) % 11
            assert grs_decode(y, gp, true_syndromes=target) == x
