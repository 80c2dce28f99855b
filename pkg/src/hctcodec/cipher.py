"""Chained multi-level cipher pipeline, hashing mode, and ciphertext envelope.

Encryption walks the key exponents in order.  Each level regroups the
running bit sequence into x-bit values, pads to whole blocks, records the
sentinel positions and the pre-padding bit length, transforms every block
with the mod-(2^x - 1) Hadamard matrix, and re-emits bits.  Decryption
replays the levels in reverse with the inverse transform, restoring the
sentinels and stripping the recorded padding, which makes the round trip
exact for every input including lengths the exponents do not divide.

The envelope is the self-contained ciphertext container: without the
per-level bit lengths and sentinel sets the payload alone is not
invertible.  Carrying them in-band means a ciphertext file can always be
decrypted by the matching key, at the documented cost that sentinel
metadata reveals which plaintext groups were all ones.
"""

import struct
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .bitcodec import (
    BitSeq,
    SentinelSet,
    detect_sentinels,
    pad_and_group,
    restore_sentinels,
    truncate,
    ungroup,
)
from .errors import (
    InvalidKeyElement,
    LengthUnderflow,
    MalformedEnvelope,
    NonZeroPadding,
    SentinelConflict,
    UnsupportedBlockOrder,
)
from .hadamard import SUPPORTED_ORDERS, HadamardSpec, apply_fast, apply_inverse
from .modmath import ModulusParams, validate_key_element

ENVELOPE_MAGIC = b"HCT1"
ENVELOPE_VERSION = 1


@dataclass(frozen=True)
class KeySchedule:
    """Ordered, validated sequence of Mersenne exponents; order is significant."""

    elements: tuple[ModulusParams, ...]

    def __post_init__(self):
        if not self.elements:
            raise InvalidKeyElement("key must contain at least one exponent")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "KeySchedule":
        return cls(tuple(validate_key_element(x) for x in exponents))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e.x for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class LevelRecord:
    """Per-level inversion metadata: exponent, pre-padding length, sentinels."""

    x: int
    orig_bit_len: int
    sentinels: SentinelSet

    def padded_group_count(self, block_order: int) -> int:
        """Group count after padding to whole blocks; 0 for empty input."""
        if self.orig_bit_len == 0:
            return 0
        groups = -(-self.orig_bit_len // self.x)
        return block_order * -(-groups // block_order)


@dataclass(frozen=True)
class CipherEnvelope:
    """Versioned ciphertext container: block order, level records, payload bits."""

    version: int
    block_order: int
    levels: tuple[LevelRecord, ...]
    payload: BitSeq

    def to_bytes(self) -> bytes:
        """Serialize to the HCT1 binary layout (big-endian throughout)."""
        if not 1 <= len(self.levels) <= 255:
            raise MalformedEnvelope(
                f"level count {len(self.levels)} does not fit the format (1..255)"
            )
        parts = [
            ENVELOPE_MAGIC,
            struct.pack(">BBB", self.version, self.block_order, len(self.levels)),
        ]
        for rec in self.levels:
            parts.append(struct.pack(">BQI", rec.x, rec.orig_bit_len, len(rec.sentinels)))
            if rec.sentinels.indices:
                parts.append(
                    struct.pack(f">{len(rec.sentinels)}I", *rec.sentinels.indices)
                )
        parts.append(struct.pack(">Q", len(self.payload)))
        parts.append(self.payload.to_bytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes) -> "CipherEnvelope":
        """Parse and fully validate an HCT1 envelope; raises MalformedEnvelope."""
        cursor = _Cursor(data)
        magic = cursor.take(4, "magic")
        if magic != ENVELOPE_MAGIC:
            raise MalformedEnvelope(f"bad magic {magic!r}, expected {ENVELOPE_MAGIC!r}")
        version, block_order, level_count = struct.unpack(
            ">BBB", cursor.take(3, "header")
        )
        if version != ENVELOPE_VERSION:
            raise MalformedEnvelope(f"unsupported version {version}")
        if block_order == 0 or block_order & (block_order - 1):
            raise MalformedEnvelope(f"block order {block_order} is not a power of two")
        if level_count == 0:
            raise MalformedEnvelope("envelope carries no levels")

        levels = []
        for index in range(level_count):
            x, orig_bit_len, sentinel_count = struct.unpack(
                ">BQI", cursor.take(13, f"level {index} record")
            )
            if x == 0:
                raise MalformedEnvelope(f"level {index} has group width 0")
            raw = cursor.take(4 * sentinel_count, f"level {index} sentinel indices")
            indices = struct.unpack(f">{sentinel_count}I", raw)
            if any(b <= a for a, b in zip(indices, indices[1:])):
                raise MalformedEnvelope(
                    f"level {index} sentinel indices not strictly ascending"
                )
            record = LevelRecord(x, orig_bit_len, SentinelSet(indices))
            limit = record.padded_group_count(block_order)
            if indices and indices[-1] >= limit:
                raise MalformedEnvelope(
                    f"level {index} sentinel index {indices[-1]} out of range "
                    f"(padded group count {limit})"
                )
            levels.append(record)

        (payload_bit_len,) = struct.unpack(">Q", cursor.take(8, "payload length"))
        expected = levels[-1].padded_group_count(block_order) * levels[-1].x
        if payload_bit_len != expected:
            raise MalformedEnvelope(
                f"payload bit length {payload_bit_len} inconsistent with level "
                f"records (expected {expected})"
            )
        payload_bytes = cursor.take(-(-payload_bit_len // 8), "payload")
        if cursor.remaining():
            raise MalformedEnvelope(f"{cursor.remaining()} trailing bytes after payload")
        unpacked = BitSeq.from_bytes(payload_bytes)
        if "1" in unpacked.bits[payload_bit_len:]:
            raise MalformedEnvelope("nonzero filler bits after payload")
        return cls(version, block_order, tuple(levels), BitSeq(unpacked.bits[:payload_bit_len]))


class _Cursor:
    """Byte reader that turns short reads into MalformedEnvelope."""

    def __init__(self, data: bytes):
        self.data = data
        self.offset = 0

    def take(self, count: int, what: str) -> bytes:
        end = self.offset + count
        if end > len(self.data):
            raise MalformedEnvelope(f"truncated envelope while reading {what}")
        chunk = self.data[self.offset:end]
        self.offset = end
        return chunk

    def remaining(self) -> int:
        return len(self.data) - self.offset


def _transform_blocks(spec: HadamardSpec, values: Sequence[int], kernel) -> list[int]:
    out: list[int] = []
    for start in range(0, len(values), spec.n):
        out.extend(kernel(spec, values[start:start + spec.n]))
    return out


def encrypt(plaintext: BitSeq, key: KeySchedule, block_order: int = 8) -> CipherEnvelope:
    """Run the full multi-level pipeline and wrap the result in an envelope.

    The ciphertext bit length is a multiple of block_order * x for the last
    exponent x, so it generally differs from the plaintext length.  Empty
    input is legal and produces an empty payload with one record per level.
    """
    if block_order not in SUPPORTED_ORDERS:
        raise UnsupportedBlockOrder(
            f"block order {block_order} not in supported set {SUPPORTED_ORDERS}"
        )
    bits = plaintext
    levels = []
    for params in key.elements:
        grouped = pad_and_group(bits, params.x, block_order)
        sentinels = detect_sentinels(grouped)
        spec = HadamardSpec(block_order, params.p)
        transformed = _transform_blocks(spec, grouped.values, apply_fast)
        levels.append(LevelRecord(params.x, grouped.orig_bit_len, sentinels))
        bits = ungroup(transformed, params.x)
    return CipherEnvelope(ENVELOPE_VERSION, block_order, tuple(levels), bits)


def decrypt(envelope: CipherEnvelope, key: KeySchedule) -> BitSeq:
    """Invert the pipeline level by level in reverse key order.

    The supplied key drives all grouping and arithmetic; the exponents
    recorded in the envelope are descriptive only and are never used to
    authenticate the key.  A wrong key therefore yields garbage output or
    surfaces as SentinelConflict / NonZeroPadding / LengthUnderflow when
    the recorded metadata stops matching what the arithmetic produces.
    """
    if len(key.elements) != len(envelope.levels):
        raise MalformedEnvelope(
            f"envelope has {len(envelope.levels)} levels but key supplies "
            f"{len(key.elements)} exponents"
        )
    if envelope.block_order not in SUPPORTED_ORDERS:
        raise UnsupportedBlockOrder(
            f"block order {envelope.block_order} not in supported set {SUPPORTED_ORDERS}"
        )
    bits = envelope.payload
    for params, record in zip(reversed(key.elements), reversed(envelope.levels)):
        grouped = pad_and_group(bits, params.x, envelope.block_order)
        spec = HadamardSpec(envelope.block_order, params.p)
        recovered = _transform_blocks(spec, grouped.values, apply_inverse)
        restored = restore_sentinels(recovered, record.sentinels, params.x)
        bits = truncate(ungroup(restored, params.x), record.orig_bit_len)
    return bits


@dataclass
class DecryptAnomalies:
    """What the tolerant decrypt path skipped over instead of raising."""

    sentinel_conflicts: int = 0
    padding_violations: int = 0
    length_underflows: int = 0

    def any(self) -> bool:
        return bool(
            self.sentinel_conflicts or self.padding_violations or self.length_underflows
        )


def decrypt_tolerant(
    envelope: CipherEnvelope, key: KeySchedule
) -> tuple[BitSeq, DecryptAnomalies]:
    """Best-effort decrypt that records anomalies and keeps going.

    Sentinel positions holding nonzero values are left as they are,
    nonzero padding is discarded anyway, and a too-short level keeps
    whatever bits exist.  Used by diffusion experiments, where corrupted
    ciphertext must still produce an output to compare against.
    """
    if len(key.elements) != len(envelope.levels):
        raise MalformedEnvelope(
            f"envelope has {len(envelope.levels)} levels but key supplies "
            f"{len(key.elements)} exponents"
        )
    anomalies = DecryptAnomalies()
    bits = envelope.payload
    for params, record in zip(reversed(key.elements), reversed(envelope.levels)):
        grouped = pad_and_group(bits, params.x, envelope.block_order)
        spec = HadamardSpec(envelope.block_order, params.p)
        recovered = _transform_blocks(spec, grouped.values, apply_inverse)
        maximum = (1 << params.x) - 1
        for i in record.sentinels:
            if i < len(recovered) and recovered[i] == 0:
                recovered[i] = maximum
            else:
                anomalies.sentinel_conflicts += 1
        raw = ungroup(recovered, params.x)
        keep = record.orig_bit_len
        if keep > len(raw):
            anomalies.length_underflows += 1
            keep = len(raw)
        elif "1" in raw.bits[keep:]:
            anomalies.padding_violations += 1
        bits = BitSeq(raw.bits[:keep])
    return bits, anomalies


def hash_digest(
    data: BitSeq, key: KeySchedule, block_order: int = 8, digest_bits: int = 128
) -> BitSeq:
    """Keyed digest: encrypt, keep the first digest_bits payload bits.

    The payload is zero-extended when shorter than the requested digest.
    Deterministic: equal inputs always produce equal digests.  This is a
    checksum-grade construction, not a cryptographic hash.
    """
    if digest_bits < 1:
        raise ValueError(f"digest_bits must be >= 1, got {digest_bits}")
    payload = encrypt(data, key, block_order).payload
    return BitSeq(payload.bits[:digest_bits].ljust(digest_bits, "0"))
