"""Acceptance gate: ten numbered criteria, one printed line each.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines as
they appear; without -s pytest shows them for failing tests only.  Every
criterion asserts, so a FAIL line always comes with a failing test.
"""

import random
import struct
import time
from dataclasses import replace

from hctcodec.bitcodec import BitSeq, SentinelSet, detect_sentinels, pad_and_group
from hctcodec.cipher import (
    ENVELOPE_MAGIC,
    ENVELOPE_VERSION,
    CipherEnvelope,
    KeySchedule,
    LevelRecord,
    decrypt,
    encrypt,
    hash_digest,
)
from hctcodec.cli import run_bench
from hctcodec.errors import MalformedEnvelope, NonZeroPadding, SentinelConflict
from hctcodec.hadamard import (
    HadamardSpec,
    apply_fast,
    apply_inverse,
    apply_naive,
    multiply_raw,
    self_check,
)
from hctcodec.modmath import mod_inverse
from vectors import (
    CIPHER_BITS,
    D1_INV_SCALE,
    D1_RAW_PRODUCTS,
    D1_RECOVERED,
    D1_RESTORED,
    D2_INV_SCALE,
    D2_RAW_PRODUCTS,
    D2_RECOVERED,
    ENVELOPE_HEX,
    L1_GROUPS,
    L1_MASKED,
    L1_SENTINELS,
    L1_TRANSFORMED,
    L2_GROUPS,
    L2_TRANSFORMED,
    PLAIN_BITS,
    SUPPORTED_N,
    SUPPORTED_P,
    SUPPORTED_X,
)

KEY35 = KeySchedule.from_exponents([3, 5])


def report(criterion: int, ok: bool, detail: str) -> bool:
    print(f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def test_criterion_01_golden_encryption():
    start = time.perf_counter()
    env = encrypt(BitSeq(PLAIN_BITS), KEY35)
    elapsed = time.perf_counter() - start
    ok = env.payload.bits == CIPHER_BITS and elapsed < 1.0
    assert report(1, ok, f"reference message encrypts to the frozen "
                         f"40-bit ciphertext in {elapsed * 1e3:.1f} ms")


def test_criterion_02_golden_encryption_intermediates():
    grouped = pad_and_group(BitSeq(PLAIN_BITS), 3, 8)
    sentinels = detect_sentinels(grouped)
    masked = tuple(0 if i in sentinels else v for i, v in enumerate(grouped.values))
    t1 = apply_fast(HadamardSpec(8, 7), masked)
    regrouped = pad_and_group(BitSeq("".join(format(v, "03b") for v in t1)), 5, 8)
    t2 = apply_fast(HadamardSpec(8, 31), regrouped.values)
    checks = [
        grouped.values == L1_GROUPS,
        sentinels.indices == L1_SENTINELS,
        masked == L1_MASKED,
        tuple(t1) == L1_TRANSFORMED,
        regrouped.values == L2_GROUPS,
        tuple(t2) == L2_TRANSFORMED,
    ]
    ok = all(checks)
    assert report(2, ok, f"all six encryption intermediates match "
                         f"({sum(checks)}/6): groups, sentinels, both transforms")


def test_criterion_03_golden_decryption_intermediates():
    spec31 = HadamardSpec(8, 31)
    spec7 = HadamardSpec(8, 7)
    raw2 = multiply_raw(spec31, L2_TRANSFORMED)
    inv2 = mod_inverse(8 % 31, 31)
    rec2 = apply_inverse(spec31, L2_TRANSFORMED)
    raw1 = multiply_raw(spec7, L1_TRANSFORMED)
    inv1 = mod_inverse(8 % 7, 7)
    rec1 = apply_inverse(spec7, L1_TRANSFORMED)
    restored = list(rec1)
    for i in L1_SENTINELS:
        restored[i] = 7
    env = CipherEnvelope.from_bytes(bytes.fromhex(ENVELOPE_HEX))
    final = decrypt(env, KEY35)
    checks = [
        tuple(raw2) == D2_RAW_PRODUCTS,
        inv2 == D2_INV_SCALE,
        tuple(rec2) == D2_RECOVERED,
        tuple(raw1) == D1_RAW_PRODUCTS,
        inv1 == D1_INV_SCALE,
        tuple(rec1) == D1_RECOVERED,
        tuple(restored) == D1_RESTORED,
        final.bits == PLAIN_BITS,
    ]
    ok = all(checks)
    assert report(3, ok, f"decryption intermediates match ({sum(checks)}/8): raw "
                         f"products, scale factors {inv2} and {inv1}, recovery")


def test_criterion_04_matrix_identity():
    rng = random.Random(404)
    start = time.perf_counter()
    brute = 0
    for n in (8, 16, 32):
        for p in SUPPORTED_P:
            assert self_check(HadamardSpec(n, p)), (n, p)
            brute += 1
    probes = 0
    for n in (64, 128):
        for p in SUPPORTED_P:
            spec = HadamardSpec(n, p)
            scale = n % p
            for _ in range(1000):
                v = [rng.randrange(p) for _ in range(n)]
                twice = apply_fast(spec, apply_fast(spec, v))
                assert twice == [scale * a % p for a in v], (n, p)
                probes += 1
    elapsed = time.perf_counter() - start
    ok = brute == 24 and probes == 16000 and elapsed < 10.0
    assert report(4, ok, f"H.H == (n mod p)I: {brute} orders brute-forced, "
                         f"{probes} random probes, {elapsed:.2f} s")


def test_criterion_05_kernel_equivalence_and_speed():
    rng = random.Random(505)
    start = time.perf_counter()
    compared = 0
    for n in SUPPORTED_N:
        for p in SUPPORTED_P:
            spec = HadamardSpec(n, p)
            for _ in range(1000):
                v = [rng.randrange(p) for _ in range(n)]
                assert apply_fast(spec, v) == apply_naive(spec, v), (n, p)
                compared += 1
    elapsed = time.perf_counter() - start
    naive_s, fast_s = run_bench(HadamardSpec(128, 2**31 - 1), trials=200, seed=1)
    ok = compared == 40000 and fast_s <= naive_s
    assert report(5, ok, f"fast == naive on {compared} vectors across "
                         f"{len(SUPPORTED_N) * len(SUPPORTED_P)} configs in {elapsed:.1f} s; "
                         f"n=128 bench fast {fast_s:.3f} s vs naive {naive_s:.3f} s")


def test_criterion_06_round_trip_fuzz():
    rng = random.Random(606)
    start = time.perf_counter()
    cases = [
        ("", (3,), 8),
        ("1", (2,), 8),
        ("0" * 4096, (3, 5), 8),
        ("1" * 4096, (31,), 32),
        ("10" * 2048, (2, 3, 5, 7), 16),
    ]
    while len(cases) < 1000:
        length = rng.randint(0, 4096)
        bits = "".join(rng.choice("01") for _ in range(length))
        key = tuple(rng.choice(SUPPORTED_X) for _ in range(rng.randint(1, 4)))
        cases.append((bits, key, rng.choice((8, 16, 32))))
    for bits, exponents, n in cases:
        key = KeySchedule.from_exponents(exponents)
        env = encrypt(BitSeq(bits), key, n)
        assert decrypt(env, key).bits == bits, (len(bits), exponents, n)
    elapsed = time.perf_counter() - start
    ok = len(cases) == 1000 and elapsed < 30.0
    assert report(6, ok, f"{len(cases)} random round trips (lengths 0..4096, "
                         f"key lengths 1..4, orders 8/16/32) in {elapsed:.1f} s")


def test_criterion_07_degenerate_inputs():
    # All-zero inputs degenerate at any length; all-one inputs need a
    # length the first exponent divides, else the padded tail group is
    # neither zero nor a sentinel.
    combos = []
    for exponents in ((3,), (3, 5), (2, 7), (5, 3, 2)):
        x1 = exponents[0]
        combos.append(("0" * 24, exponents))
        combos.append(("0" * 111, exponents))
        combos.append(("1" * (x1 * 8), exponents))
        combos.append(("1" * (x1 * 15), exponents))
    checked = 0
    for bits, exponents in combos:
        key = KeySchedule.from_exponents(exponents)
        env = encrypt(BitSeq(bits), key)
        assert set(env.payload.bits) <= {"0"}, (bits[:2], len(bits), exponents)
        assert decrypt(env, key).bits == bits, (bits[:2], len(bits), exponents)
        checked += 1
    ok = checked == 16
    assert report(7, ok, f"all-zero and all-one inputs give all-zero payloads "
                         f"and still decrypt exactly ({checked} combinations)")


def test_criterion_08_corruption_sensitivity():
    env = CipherEnvelope.from_bytes(bytes.fromhex(ENVELOPE_HEX))
    outcomes = {"different": 0, "rejected": 0, "silent": 0}
    for i in range(len(env.payload)):
        corrupted = replace(env, payload=env.payload.flip(i))
        try:
            out = decrypt(corrupted, KEY35)
        except (SentinelConflict, NonZeroPadding):
            outcomes["rejected"] += 1
            continue
        if out.bits != PLAIN_BITS:
            outcomes["different"] += 1
        else:
            outcomes["silent"] += 1
    total = sum(outcomes.values())
    ok = total == 40 and outcomes["silent"] == 0
    assert report(8, ok, f"40/40 payload bit flips detected: "
                         f"{outcomes['rejected']} rejected, "
                         f"{outcomes['different']} decrypt to different bits, "
                         f"{outcomes['silent']} silent")


def _random_envelope(rng: random.Random) -> CipherEnvelope:
    block_order = rng.choice((8, 16, 32))
    levels = []
    for _ in range(rng.randint(1, 4)):
        x = rng.choice((2, 3, 5, 7, 13))
        orig = rng.randint(0, 4000)
        limit = LevelRecord(x, orig, SentinelSet(())).padded_group_count(block_order)
        count = rng.randint(0, min(6, limit))
        positions = tuple(sorted(rng.sample(range(limit), count)))
        levels.append(LevelRecord(x, orig, SentinelSet(positions)))
    last = levels[-1]
    payload_bits = last.padded_group_count(block_order) * last.x
    payload = BitSeq("".join(rng.choice("01") for _ in range(payload_bits)))
    return CipherEnvelope(ENVELOPE_VERSION, block_order, tuple(levels), payload)


def test_criterion_09_envelope_round_trip_and_rejects():
    rng = random.Random(909)
    round_trips = 0
    for _ in range(1000):
        env = _random_envelope(rng)
        assert CipherEnvelope.from_bytes(env.to_bytes()) == env
        round_trips += 1

    gold = bytes.fromhex(ENVELOPE_HEX)

    def patched(offset: int, value: bytes) -> bytes:
        buf = bytearray(gold)
        buf[offset:offset + len(value)] = value
        return bytes(buf)

    two_sentinels = CipherEnvelope(
        ENVELOPE_VERSION,
        8,
        (LevelRecord(3, 24, SentinelSet((2, 4))),),
        BitSeq("0" * 24),
    ).to_bytes()
    unsorted = bytearray(two_sentinels)
    unsorted[20:24], unsorted[24:28] = unsorted[24:28], unsorted[20:24]

    malformed = [
        ("bad magic", patched(0, b"HCT2")),
        ("bad version", patched(4, b"\x07")),
        ("block order not a power of two", patched(5, b"\x0c")),
        ("zero levels", patched(6, b"\x00")),
        ("zero group width", patched(7, b"\x00")),
        ("unsorted sentinels", bytes(unsorted)),
        ("sentinel out of range", patched(20, struct.pack(">I", 8))),
        ("payload length inconsistent", patched(37, struct.pack(">Q", 48))),
        ("truncated", gold[:13]),
        ("trailing bytes", gold + b"\xee"),
        ("empty input", b""),
    ]
    rejected = 0
    for label, blob in malformed:
        try:
            CipherEnvelope.from_bytes(blob)
        except MalformedEnvelope:
            rejected += 1
        else:
            print(f"  not rejected: {label}")
    ok = round_trips == 1000 and rejected == len(malformed)
    assert report(9, ok, f"{round_trips} random envelopes round-trip bytes "
                         f"exactly; {rejected}/{len(malformed)} malformed inputs rejected")


def test_criterion_10_hash_behavior():
    rng = random.Random(1010)
    deterministic = all(
        hash_digest(msg, KEY35, 8, 64) == hash_digest(msg, KEY35, 8, 64)
        for msg in (
            BitSeq("".join(rng.choice("01") for _ in range(rng.randint(0, 500))))
            for _ in range(100)
        )
    )
    sized = all(
        len(hash_digest(BitSeq("1011"), KEY35, 8, w)) == w
        for w in (1, 7, 16, 128, 1000)
    )
    collisions = 0
    for _ in range(1000):
        bits = "".join(rng.choice("01") for _ in range(256))
        a = BitSeq(bits)
        b = a.flip(rng.randrange(256))
        if hash_digest(a, KEY35, 8, 128) == hash_digest(b, KEY35, 8, 128):
            collisions += 1
    ok = deterministic and sized
    assert report(10, ok, f"digest deterministic over 100 inputs, honors 5 "
                          f"width settings; {collisions}/1000 single-bit-flip "
                          f"pairs collide at 128 bits (informational)")
