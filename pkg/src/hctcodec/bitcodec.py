"""Bit-level plumbing: grouping, padding, sentinels, and binary conversion.

A level of the cipher reads the running bit sequence in x-bit MSB-first
windows, pads the resulting value sequence up to a multiple of the block
order with zeros, and remembers two things needed for lossless inversion:
the pre-padding bit length and the positions holding the group maximum
2^x - 1 (which is congruent to 0 mod p and would otherwise be lost).
"""

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import LengthUnderflow, NonZeroPadding, SentinelConflict, ValueOverflow


@dataclass(frozen=True)
class BitSeq:
    """An ordered bit sequence; the string length is the authoritative bit count."""

    bits: str = ""

    def __post_init__(self):
        if self.bits and not set(self.bits) <= {"0", "1"}:
            raise ValueError("bit sequence may contain only '0' and '1'")

    def __len__(self) -> int:
        return len(self.bits)

    def flip(self, index: int) -> "BitSeq":
        """Return a copy with the bit at ``index`` inverted."""
        if not 0 <= index < len(self.bits):
            raise IndexError(f"bit index {index} out of range 0..{len(self.bits) - 1}")
        flipped = "1" if self.bits[index] == "0" else "0"
        return BitSeq(self.bits[:index] + flipped + self.bits[index + 1:])

    @classmethod
    def from_bytes(cls, data: bytes, bit_len: int | None = None) -> "BitSeq":
        """Unpack bytes MSB-first; ``bit_len`` trims the zero-filled tail."""
        bits = "".join(format(b, "08b") for b in data)
        if bit_len is not None:
            if bit_len > len(bits):
                raise LengthUnderflow(
                    f"bit length {bit_len} exceeds {len(bits)} unpacked bits"
                )
            bits = bits[:bit_len]
        return cls(bits)

    def to_bytes(self) -> bytes:
        """Pack MSB-first, zero-filling the final partial byte."""
        if not self.bits:
            return b""
        padded = self.bits.ljust(-(-len(self.bits) // 8) * 8, "0")
        return int(padded, 2).to_bytes(len(padded) // 8, "big")


@dataclass(frozen=True)
class GroupedSeq:
    """Decimated values read from a bit sequence in x-bit windows."""

    values: tuple[int, ...]
    x: int
    orig_bit_len: int


@dataclass(frozen=True)
class SentinelSet:
    """Strictly ascending group positions that held the maximum value 2^x - 1."""

    indices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("sentinel indices must be strictly ascending")
        if self.indices and self.indices[0] < 0:
            raise ValueError("sentinel indices must be non-negative")

    @classmethod
    def from_positions(cls, positions: Iterable[int]) -> "SentinelSet":
        return cls(tuple(sorted(set(positions))))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices


def pad_and_group(bits: BitSeq, x: int, n: int) -> GroupedSeq:
    """Read ``bits`` in x-bit MSB-first windows, zero-padded to a multiple of n groups.

    The group count is ceil(len/x) rounded up to the next multiple of the
    block order n; empty input stays empty.  The pre-padding bit length is
    recorded so the padding can be stripped exactly on the way back.
    """
    length = len(bits)
    if length == 0:
        return GroupedSeq((), x, 0)
    groups = -(-length // x)
    total = n * -(-groups // n)
    padded = bits.bits.ljust(total * x, "0")
    values = tuple(int(padded[i:i + x], 2) for i in range(0, total * x, x))
    return GroupedSeq(values, x, length)


def detect_sentinels(grouped: GroupedSeq) -> SentinelSet:
    """Positions whose value equals the group maximum 2^x - 1."""
    maximum = (1 << grouped.x) - 1
    return SentinelSet(
        tuple(i for i, v in enumerate(grouped.values) if v == maximum)
    )


def restore_sentinels(
    values: Sequence[int], sentinels: SentinelSet, x: int
) -> list[int]:
    """Write 2^x - 1 back at each recorded sentinel position.

    Every marked position must currently hold 0; anything else means the
    ciphertext was corrupted or decrypted under the wrong key.
    """
    maximum = (1 << x) - 1
    out = list(values)
    for i in sentinels:
        if i >= len(out):
            raise SentinelConflict(
                f"sentinel index {i} beyond value count {len(out)}"
            )
        if out[i] != 0:
            raise SentinelConflict(
                f"sentinel position {i} holds {out[i]}, expected 0"
            )
        out[i] = maximum
    return out


def ungroup(values: Sequence[int], x: int) -> BitSeq:
    """Concatenate the x-bit MSB-first encodings of ``values``."""
    limit = 1 << x
    for i, v in enumerate(values):
        if not 0 <= v < limit:
            raise ValueOverflow(f"value {v} at position {i} does not fit in {x} bits")
    return BitSeq("".join(format(v, f"0{x}b") for v in values))


def truncate(bits: BitSeq, orig_bit_len: int) -> BitSeq:
    """Drop the zero padding beyond ``orig_bit_len``, verifying it is all zeros."""
    if orig_bit_len > len(bits):
        raise LengthUnderflow(
            f"recorded length {orig_bit_len} exceeds available {len(bits)} bits"
        )
    tail = bits.bits[orig_bit_len:]
    if "1" in tail:
        raise NonZeroPadding(
            f"discarded padding contains {tail.count('1')} one bits"
        )
    return BitSeq(bits.bits[:orig_bit_len])
