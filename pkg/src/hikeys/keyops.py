"""Bit-level key calculus.

Pure functions covering the whole key lifecycle: hashing member
contributions, deriving a cluster key from the sorted contribution set,
mixing a random pair, and the three rekeying transforms applied on
membership changes (insert-mix for cluster joins/leaves, product-insert-trim
for the cluster-head overlay, block-XOR for the group-leader overlay).

All operations are deterministic and stateless. Random-number width ``w``
is carried by the values themselves (a RandomPair knows its width), so the
transforms never consult global configuration.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum

from .bits import BitString
from .errors import ConfigError, ProtocolError

# Digest widths in bits for the supported hash algorithms.
DIGEST_BITS = {"sha1": 160, "sha256": 256}

DEFAULT_HASH = "sha1"
ALLOWED_WIDTHS = (8, 16, 32)
DEFAULT_WIDTH = 16


class KeyKind(Enum):
    """Which tier of the hierarchy a key protects."""

    CLUSTER = "cluster"
    HEADS = "heads"
    LEADERS = "leaders"
    PAIR = "pair"


@dataclass(frozen=True)
class Contribution:
    """One member's share of the cluster key: the hash of its random number."""

    node_id: int
    hr: BitString


@dataclass(frozen=True)
class RandomPair:
    """Two equal-width random numbers carried in a single rekeying message."""

    r1: BitString
    r2: BitString

    def __post_init__(self):
        if len(self.r1) != len(self.r2):
            raise ValueError(f"pair widths differ: {len(self.r1)} vs {len(self.r2)}")
        if len(self.r1) not in ALLOWED_WIDTHS:
            raise ValueError(f"pair width must be one of {ALLOWED_WIDTHS}, got {len(self.r1)}")

    @property
    def w(self) -> int:
        return len(self.r1)


@dataclass(frozen=True)
class KeyMaterial:
    """A group key at one tier and scope, versioned by epoch."""

    kind: KeyKind
    scope: int
    epoch: int
    key: BitString

    def __post_init__(self):
        if len(self.key) == 0:
            raise ValueError("key must be non-empty")
        if self.epoch < 0:
            raise ValueError("epoch must be >= 0")

    def advanced(self, key: BitString) -> "KeyMaterial":
        """Next epoch of this key with new bits."""
        return KeyMaterial(self.kind, self.scope, self.epoch + 1, key)


def hash_contribution(random_value: BitString, hash_id: str = DEFAULT_HASH) -> BitString:
    """Digest of a bit string under the configured hash, as a BitString.

    Inputs are packed to octets (right zero-padded when the length is not a
    multiple of 8); every value the protocol hashes is byte-aligned.
    """
    if len(random_value) == 0:
        raise ValueError("cannot hash an empty bit string")
    try:
        hasher = hashlib.new(_check_hash(hash_id))
    except ValueError as exc:  # pragma: no cover - guarded by _check_hash
        raise ConfigError(str(exc)) from exc
    hasher.update(random_value.to_bytes())
    return BitString.from_bytes(hasher.digest())


def derive_cluster_key(contribs, hash_id: str = DEFAULT_HASH) -> BitString:
    """Cluster key from a set of contributions.

    Sorts by node id ascending, concatenates the hashed contributions, and
    applies the one-way function once more over the concatenation. The
    result is independent of the order contributions are presented in.
    """
    contribs = list(contribs)
    if not contribs:
        raise ValueError("at least one contribution required")
    ids = [c.node_id for c in contribs]
    if len(set(ids)) != len(ids):
        raise ProtocolError(f"duplicate contribution node ids: {sorted(ids)}")
    concat = BitString()
    for c in sorted(contribs, key=lambda c: c.node_id):
        concat = concat + c.hr
    return hash_contribution(concat, hash_id)


def mix(pair: RandomPair, hash_id: str = DEFAULT_HASH) -> BitString:
    """Mix the pair into a single w-bit value.

    Defined as the low-order w bits of the hash of r1 concatenated with r2.
    """
    digest = hash_contribution(pair.r1 + pair.r2, hash_id)
    return digest[-pair.w :]


def insert_at(key: BitString, s: BitString, pos: int) -> BitString:
    """Splice ``s`` into ``key`` ahead of position ``pos``."""
    if pos < 0 or pos > len(key):
        raise ValueError(f"insert position {pos} out of range for key of {len(key)} bits")
    return key[:pos] + s + key[pos:]


def join_leave_rekey(old_key: BitString, pair: RandomPair, hash_id: str = DEFAULT_HASH) -> BitString:
    """Cluster rekey on join or member leave.

    The mixed pair is inserted into the old key at the position named by the
    first random number (taken modulo len+1 so every key length is valid).
    Output is w bits longer than the input.
    """
    if len(old_key) < 1:
        raise ValueError("old key must be non-empty")
    pos = pair.r1.value() % (len(old_key) + 1)
    return insert_at(old_key, mix(pair, hash_id), pos)


def ch_rekey(old_key: BitString, pair: RandomPair) -> BitString:
    """Cluster-head overlay rekey: product-insert-trim.

    The product of the two random numbers, rendered as a fixed-width 2w bit
    string, is inserted at the position named by the first number; the first
    2w bits of the spliced string are then removed. Length is preserved.
    """
    w2 = 2 * pair.w
    if len(old_key) < w2:
        raise ValueError(f"old key of {len(old_key)} bits cannot absorb a {w2}-bit trim")
    product = BitString.from_int(pair.r1.value() * pair.r2.value(), w2)
    pos = pair.r1.value() % (len(old_key) + 1)
    spliced = insert_at(old_key, product, pos)
    return spliced[w2:]


def gl_rekey(old_key: BitString, r: BitString) -> BitString:
    """Group-leader overlay rekey: block-XOR with a single random number.

    The old key is split into consecutive blocks of len(r) bits; each block
    is XORed with r (the final partial block with r truncated to its length)
    and the results concatenated. Length-preserving and an involution.
    """
    w = len(r)
    if w < 1:
        raise ValueError("random number must be non-empty")
    if len(old_key) < 1:
        raise ValueError("old key must be non-empty")
    out = BitString()
    for i in range(0, len(old_key), w):
        block = old_key[i : i + w]
        out = out + (block ^ r[: len(block)])
    return out


def _check_hash(hash_id: str) -> str:
    if hash_id not in DIGEST_BITS:
        raise ConfigError(f"unknown hash id {hash_id!r}; supported: {sorted(DIGEST_BITS)}")
    return hash_id
