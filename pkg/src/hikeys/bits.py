"""Arbitrary-length ordered bit sequences.

Every key, random number, and rekeying value in the scheme is a positional
sequence of bits with an exact length: no implicit padding, equality is
bit-for-bit. Backed by an immutable tuple so instances are hashable and
safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class BitString:
    """Immutable sequence of 0/1 values with exact length."""

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int] | str = ()):
        if isinstance(bits, str):
            vals = tuple(1 if c == "1" else 0 if c == "0" else _bad_char(c) for c in bits)
        else:
            vals = tuple(bits)
            for b in vals:
                if b not in (0, 1):
                    raise ValueError(f"bit values must be 0 or 1, got {b!r}")
        self._bits = vals

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        """Big-endian encoding of ``value`` in exactly ``width`` bits."""
        if width < 0:
            raise ValueError("width must be >= 0")
        if value < 0 or value >= (1 << width):
            raise ValueError(f"value {value} does not fit in {width} bits")
        return cls(format(value, f"0{width}b") if width else "")

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        return cls("".join(format(b, "08b") for b in data))

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls((0,) * n)

    def value(self) -> int:
        """Big-endian unsigned integer value (0 for the empty string)."""
        v = 0
        for b in self._bits:
            v = (v << 1) | b
        return v

    def to_bytes(self) -> bytes:
        """Pack into octets, zero-padding on the right to a byte boundary."""
        bits = self._bits
        out = bytearray()
        for i in range(0, len(bits), 8):
            chunk = bits[i : i + 8]
            byte = 0
            for b in chunk:
                byte = (byte << 1) | b
            byte <<= 8 - len(chunk)
            out.append(byte)
        return bytes(out)

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self._bits)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return BitString(self._bits[idx])
        return self._bits[idx]

    def __add__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString(self._bits + other._bits)

    def __xor__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError(f"xor length mismatch: {len(self)} vs {len(other)}")
        return BitString(a ^ b for a, b in zip(self._bits, other._bits))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitString) and self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __str__(self) -> str:
        return "".join("01"[b] for b in self._bits)

    def __repr__(self) -> str:
        return f"BitString('{self}')"


def _bad_char(c: str):
    raise ValueError(f"bit characters must be '0' or '1', got {c!r}")
