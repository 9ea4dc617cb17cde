import struct

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vrle.bitio import BitString
from vrle.errors import CorruptStreamError
from vrle.rle import (baseline_rle_compress, baseline_rle_decompress, rle_decode,
                      rle_encode, validate_runs)

from oracles import rle_decode_oracle, rle_encode_oracle

WORKED_BITS = "0" * 36 + "101000" + "001001"
WORKED_RUNS = [36, 1, 1, 1, 5, 1, 2, 1]


@pytest.mark.parametrize("bits, runs", [
    (WORKED_BITS, WORKED_RUNS),
    ("111", [0, 3]),
    ("0" * 300, [255, 0, 45]),
    ("", []),
    ("0" * 255 + "1", [255, 1]),
    ("0" * 510, [255, 0, 255]),
    ("1" * 256, [0, 255, 0, 1]),
])
def test_encode(bits, runs):
    assert rle_encode(BitString(bits)).tolist() == runs
    assert rle_encode_oracle(bits) == runs


@pytest.mark.parametrize("runs, bits", [
    (WORKED_RUNS, WORKED_BITS),
    ([0, 3], "111"),
    ([], ""),
    ([255, 0, 45], "0" * 300),
])
def test_decode(runs, bits):
    assert str(rle_decode(runs)) == bits
    assert rle_decode_oracle(runs) == bits


@pytest.mark.parametrize("runs", [[3, 0, 2], [0, 0], [5, 300], [-1]])
def test_decode_malformed(runs):
    with pytest.raises(CorruptStreamError):
        rle_decode(runs)


def structured_bits():
    return st.one_of(
        st.text("01", max_size=3000),
        st.lists(st.tuples(st.sampled_from("01"), st.integers(1, 700)), max_size=30)
          .map(lambda parts: "".join(b * n for b, n in parts)),
    )


@given(structured_bits())
def test_round_trip_and_invariants(text):
    runs = rle_encode(BitString(text))
    assert runs.tolist() == rle_encode_oracle(text)
    assert str(rle_decode(runs)) == text
    values = runs.astype(int).tolist()
    assert sum(values) == len(text)
    assert all(0 <= r <= 255 for r in values)
    for i, r in enumerate(values):
        if r == 0:
            assert i == 0 or values[i - 1] == 255
        elif i + 1 < len(values) and r < 255:
            # a short run always ends at a bit flip, never at a continuation
            assert values[i + 1] != 0
    validate_runs(runs)


def test_round_trip_long_random():
    rng = np.random.default_rng(7)
    bits = (rng.random(100_000) < 0.03).astype(np.uint8)
    bits[:5000] = 0
    runs = rle_encode(BitString(bits))
    assert np.array_equal(rle_decode(runs).array, bits)


class TestBaseline:
    def test_zero_byte(self):
        assert baseline_rle_compress(b"\x00") == struct.pack(">Q", 1) + b"\x08"

    def test_ff_byte(self):
        assert baseline_rle_compress(b"\xff") == struct.pack(">Q", 1) + b"\x00\x08"

    def test_empty(self):
        assert baseline_rle_compress(b"") == struct.pack(">Q", 0)
        assert baseline_rle_decompress(struct.pack(">Q", 0)) == b""

    @pytest.mark.parametrize("data", [b"\x00", b"\xff", b"abraca"])
    def test_round_trip(self, data):
        assert baseline_rle_decompress(baseline_rle_compress(data)) == data

    def test_length_mismatch(self):
        with pytest.raises(CorruptStreamError):
            baseline_rle_decompress(struct.pack(">Q", 2) + b"\x08")

    def test_truncated_header(self):
        with pytest.raises(CorruptStreamError):
            baseline_rle_decompress(b"\x00\x00\x01")

    def test_worst_case_bound(self):
        data = b"\x55" * 1000
        blob = baseline_rle_compress(data)
        assert len(blob) == 8 + 8 * len(data)
        assert baseline_rle_decompress(blob) == data

    @given(st.binary(max_size=3000))
    def test_round_trip_random(self, data):
        blob = baseline_rle_compress(data)
        assert len(blob) <= 8 + 8 * len(data) + 1
        assert baseline_rle_decompress(blob) == data
