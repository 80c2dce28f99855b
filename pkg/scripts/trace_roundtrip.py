#!/usr/bin/env python3
"""Walk a message through every level of the pipeline, printing intermediates.

The default run traces the 24-bit demo message under key 3,5 and shows the
decimated groups, sentinel positions, transformed blocks, and the recovery
of each on the way back.  Useful for eyeballing what the codec does to a
specific input.
"""

import argparse

from hctcodec.bitcodec import BitSeq, detect_sentinels, pad_and_group, restore_sentinels, truncate, ungroup
from hctcodec.cipher import KeySchedule, decrypt, encrypt
from hctcodec.hadamard import HadamardSpec, apply_fast, apply_inverse

DEMO_BITS = "110010011101111110000011"


def chunks(values, n):
    return [list(values[i:i + n]) for i in range(0, len(values), n)]


def trace_encrypt(bits: BitSeq, key: KeySchedule, n: int) -> BitSeq:
    print(f"plaintext ({len(bits)} bits): {bits.bits}")
    current = bits
    for depth, params in enumerate(key.elements, 1):
        grouped = pad_and_group(current, params.x, n)
        sentinels = detect_sentinels(grouped)
        spec = HadamardSpec(n, params.p)
        transformed = []
        for block in chunks(grouped.values, n):
            transformed.extend(apply_fast(spec, block))
        current = ungroup(transformed, params.x)
        print(f"\nlevel {depth}: x={params.x}, modulus {params.p}")
        print(f"  groups     {list(grouped.values)}")
        print(f"  sentinels  {list(sentinels)}")
        print(f"  transformed{transformed}")
        print(f"  bits out   {current.bits}")
    return current


def trace_decrypt(envelope, key: KeySchedule) -> BitSeq:
    n = envelope.block_order
    current = envelope.payload
    for depth, (params, record) in enumerate(
        zip(reversed(key.elements), reversed(envelope.levels)), 1
    ):
        grouped = pad_and_group(current, params.x, n)
        spec = HadamardSpec(n, params.p)
        recovered = []
        for block in chunks(grouped.values, n):
            recovered.extend(apply_inverse(spec, block))
        restored = restore_sentinels(recovered, record.sentinels, params.x)
        current = truncate(ungroup(restored, params.x), record.orig_bit_len)
        print(f"\nundo level {len(key) - depth + 1}: x={params.x}, modulus {params.p}")
        print(f"  recovered  {recovered}")
        print(f"  restored   {restored}")
        print(f"  bits out   {current.bits} ({record.orig_bit_len} kept)")
    return current


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--text", default=DEMO_BITS, help="bit string to trace")
    parser.add_argument("--key", default="3,5", help="comma-separated exponents")
    parser.add_argument("--block-size", type=int, default=8)
    args = parser.parse_args()

    key = KeySchedule.from_exponents(int(x) for x in args.key.split(","))
    bits = BitSeq(args.text)

    payload = trace_encrypt(bits, key, args.block_size)
    envelope = encrypt(bits, key, args.block_size)
    assert envelope.payload == payload
    blob = envelope.to_bytes()
    print(f"\nenvelope ({len(blob)} bytes): {blob.hex()}")

    recovered = trace_decrypt(envelope, key)
    print(f"\nround trip {'OK' if recovered == bits else 'MISMATCH'}: "
          f"{recovered.bits}")
    assert decrypt(envelope, key) == recovered
    return 0 if recovered == bits else 1


if __name__ == "__main__":
    raise SystemExit(main())
