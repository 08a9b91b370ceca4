import pytest

from hikeys.bits import BitString


def test_construct_from_string_and_iterable():
    a = BitString("0101")
    b = BitString([0, 1, 0, 1])
    assert a == b
    assert len(a) == 4
    assert str(a) == "0101"


def test_rejects_non_bits():
    with pytest.raises(ValueError):
        BitString("012")
    with pytest.raises(ValueError):
        BitString([0, 2])


def test_from_int_round_trip():
    for v, w in [(0, 1), (5, 3), (45, 8), (2835, 16), (0, 0)]:
        assert BitString.from_int(v, w).value() == v
        assert len(BitString.from_int(v, w)) == w


def test_from_int_range_checks():
    with pytest.raises(ValueError):
        BitString.from_int(8, 3)
    with pytest.raises(ValueError):
        BitString.from_int(-1, 4)


def test_from_bytes_and_to_bytes():
    bs = BitString.from_bytes(b"abc")
    assert len(bs) == 24
    assert bs.to_bytes() == b"abc"


def test_to_bytes_pads_right():
    assert BitString("1").to_bytes() == b"\x80"
    assert BitString("00000001 1".replace(" ", "")).to_bytes() == b"\x01\x80"


def test_concat_and_slice():
    k = BitString("1111") + BitString("00")
    assert str(k) == "111100"
    assert str(k[2:4]) == "11"
    assert k[0] == 1
    assert str(k[:0]) == ""


def test_xor_and_length_mismatch():
    assert str(BitString("1100") ^ BitString("1010")) == "0110"
    with pytest.raises(ValueError):
        BitString("11") ^ BitString("111")


def test_value_is_big_endian():
    assert BitString("00101101").value() == 45
    assert BitString("").value() == 0


def test_hashable_and_eq():
    assert hash(BitString("01")) == hash(BitString("01"))
    assert BitString("01") != BitString("010")
    assert BitString("01") != "01"
