import pytest
from hypothesis import given, strategies as st

from vrle.bitio import BitString
from vrle.errors import CorruptStreamError
from vrle.vertical import bit_planes, inverse_transpose, transpose

from oracles import vertical_oracle

WORKED = bytes([2, 0, 3, 0, 0, 1])
WORKED_BITS = "0" * 36 + "101000" + "001001"


def test_worked_example():
    assert str(transpose(WORKED)) == WORKED_BITS
    planes = bit_planes(WORKED)
    assert [str(p) for p in planes[6:]] == ["101000", "001001"]
    assert all(str(p) == "000000" for p in planes[:6])


def test_planes_of_plain_text():
    planes = [str(p) for p in bit_planes(b"abraca")]
    assert planes == ["000000", "111111", "111111", "001000",
                      "000000", "000000", "011010", "100111"]


def test_single_high_bit():
    assert str(transpose(b"\x80")) == "10000000"


def test_empty():
    assert len(transpose(b"")) == 0
    assert inverse_transpose(BitString(), 0) == b""


def test_inverse_worked_example():
    assert inverse_transpose(BitString(WORKED_BITS), 6) == WORKED


def test_inverse_length_mismatch():
    with pytest.raises(CorruptStreamError):
        inverse_transpose(BitString(WORKED_BITS[:47]), 6)


@given(st.binary(max_size=500))
def test_round_trip_and_conservation(data):
    bits = transpose(data)
    assert str(bits) == vertical_oracle(data)
    assert len(bits) == 8 * len(data)
    assert bits.popcount() == sum(bin(b).count("1") for b in data)
    assert inverse_transpose(bits, len(data)) == data


@given(st.integers(0, 60).flatmap(lambda n: st.tuples(st.just(n), st.text("01", min_size=8 * n, max_size=8 * n))))
def test_inverse_then_forward(case):
    n, text = case
    assert str(transpose(inverse_transpose(BitString(text), n))) == text
