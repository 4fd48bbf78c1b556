import itertools

import pytest

from pscodes.bch import bch_build, bch_encode
from pscodes.channel import ErrorPlan, corrupt, random_plan, substitute
from pscodes.compositions import CompositionMultiset, weight
from pscodes.errors import MultiDecodeFailure, NonBinaryDifference
from pscodes.multi_recon import (
    PhiSpec,
    dominance_chain_check,
    multi_decode_errors,
    multi_decode_free,
    phi_encode,
    phi_extract,
    phi_trace,
)

EX_Z = ["101010", "001011"]
EX_SPEC = PhiSpec(2, 6)


def all_strings(n):
    return [format(v, f"0{n}b") for v in range(1 << n)]


class TestTrace:
    def test_paper_example_arrays(self):
        tr = phi_trace(EX_Z, EX_SPEC)
        assert tr.halves == ("101", "010", "001", "110")
        assert tr.indicators == ("0100", "0010", "0101")
        assert tr.shorts == (
            ("00", "00", "00"),
            ("01", "00", "01"),
            ("01", "01", "01"),
            ("01", "01", "11"),
        )
        assert tr.interleaved == (
            "001000001", "010001010", "010010011", "011011110",
        )

    def test_indicator_weight_bound(self):
        for z1, z2 in itertools.product(all_strings(4), repeat=2):
            tr = phi_trace([z1, z2], PhiSpec(2, 4))
            assert all(r.count("1") <= 2 for r in tr.indicators)

    def test_odd_k_has_no_trace(self):
        with pytest.raises(ValueError):
            phi_trace(["101"], PhiSpec(1, 3))


class TestEncode:
    def test_paper_example_codewords(self):
        cs = phi_encode(EX_Z, EX_SPEC)
        assert cs[0] == "001000001" + "010100010"
        assert cs[1] == "010010011" + "011110110"

    def test_top_group_carries_string_weights(self):
        cs = phi_encode(EX_Z, EX_SPEC)
        x = CompositionMultiset.of_strings(cs)
        masses = [b for _, b in x.group(18)]
        assert sorted(masses) == sorted(
            [weight(cs[0])] * 2 + [weight(cs[1])] * 2
        )

    def test_all_zero_h1(self):
        assert phi_encode(["00"], PhiSpec(1, 2)) == ["0000"]

    def test_rate_identity(self):
        for h, k in ((1, 1), (1, 6), (2, 3), (2, 6), (3, 4), (3, 5)):
            cs = phi_encode(["0" * k] * h, PhiSpec(h, k))
            assert len(cs) == h
            assert all(len(c) == (h + 1) * k for c in cs)

    def test_odd_k_matches_lift_and_delete(self):
        # Re-derive the odd rule in the test: duplicate the middle bit,
        # encode with k+1, delete coordinates q(h+1)+1 .. q(h+1)+h+1.
        for h, k in ((1, 3), (2, 3), (2, 5), (3, 1)):
            spec = PhiSpec(h, k)
            q = (k + 1) // 2
            for zs in itertools.product(all_strings(k), repeat=h):
                lifted = [z[:q] + z[q - 1] + z[q:] for z in zs]
                coded = phi_encode(lifted, PhiSpec(h, k + 1))
                expect = [c[: q * (h + 1)] + c[(q + 1) * (h + 1):] for c in coded]
                assert phi_encode(list(zs), spec) == expect

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            phi_encode(["10", "100"], PhiSpec(2, 2))


class TestChain:
    def test_paper_example(self):
        assert dominance_chain_check(phi_encode(EX_Z, EX_SPEC))

    def test_counterexample(self):
        assert not dominance_chain_check(["10", "01"])

    def test_exhaustive_h2(self):
        for k in (1, 2, 3, 4):
            spec = PhiSpec(2, k)
            for zs in itertools.product(all_strings(k), repeat=2):
                assert dominance_chain_check(phi_encode(list(zs), spec))


class TestDecodeFree:
    def test_paper_example(self):
        x = CompositionMultiset.of_strings(phi_encode(EX_Z, EX_SPEC))
        assert multi_decode_free(x, EX_SPEC) == EX_Z

    def test_h1_single_string(self):
        spec = PhiSpec(1, 4)
        (c,) = phi_encode(["1011"], spec)
        x = CompositionMultiset.of_string(c)
        assert multi_decode_free(x, spec) == ["1011"]

    def test_exhaustive_h2_including_equal_pairs(self):
        for k in (1, 2, 3):
            spec = PhiSpec(2, k)
            for zs in itertools.product(all_strings(k), repeat=2):
                cs = phi_encode(list(zs), spec)
                x = CompositionMultiset.of_strings(cs)
                assert multi_decode_free(x, spec) == list(zs)

    def test_corrupted_input_is_loud(self):
        # All-zero codeword, one mass lifted to 1 at size 1: the sorted
        # suffix-side sequence steps 1 -> 0 and the difference -1 is caught.
        spec = PhiSpec(1, 2)
        x = CompositionMultiset.of_string(phi_encode(["00"], spec)[0])
        y = corrupt(x, ErrorPlan((substitute(1, 0, 1),)))
        with pytest.raises(NonBinaryDifference):
            multi_decode_free(y, spec)


class TestDecodeErrors:
    def test_error_free_matches_free_decoder(self):
        good = bch_build(4, 4)  # (15, 1) with radius 4
        spec = PhiSpec(2, 15)
        zs = [bch_encode("0", good), bch_encode("1", good)]
        x = CompositionMultiset.of_strings(phi_encode(zs, spec))
        assert multi_decode_errors(x, spec, good) == multi_decode_free(x, spec) == zs

    def test_single_group_errors_recovered(self):
        good = bch_build(4, 4)
        spec = PhiSpec(2, 15)
        zs = [bch_encode("1", good), bch_encode("1", good)]
        x = CompositionMultiset.of_strings(phi_encode(zs, spec))
        for seed in range(60):
            y = corrupt(x, random_plan(x, 1, seed))
            assert multi_decode_errors(y, spec, good) == zs

    def test_failure_reports_index(self):
        good = bch_build(4, 4)
        spec = PhiSpec(2, 15)
        zs = [bch_encode("0", good), bch_encode("1", good)]
        x = CompositionMultiset.of_strings(phi_encode(zs, spec))
        # Hammer one side far beyond the budget until a decode fails.
        failed = None
        for seed in range(200):
            y = corrupt(x, random_plan(x, 12, seed))
            try:
                multi_decode_errors(y, spec, good)
            except MultiDecodeFailure as exc:
                failed = exc
                break
        assert failed is not None
        assert failed.index in (0, 1)

    def test_wrong_code_length_rejected(self):
        good = bch_build(4, 4)
        with pytest.raises(ValueError):
            multi_decode_errors(
                CompositionMultiset.of_string("0" * 9), PhiSpec(2, 3), good
            )


class TestExtract:
    def test_inverse_on_image(self):
        for h, k in ((1, 5), (2, 4), (3, 3)):
            spec = PhiSpec(h, k)
            zs = all_strings(k)[: h]
            while len(zs) < h:
                zs.append(zs[-1])
            cs = phi_encode(zs, spec)
            assert [phi_extract(c, spec) for c in cs] == zs
