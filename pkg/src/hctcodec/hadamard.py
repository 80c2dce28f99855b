"""Sylvester Hadamard transforms over Z_p with -1 mapped to p - 1.

The order-n matrix is defined entrywise by the parity rule
``H[i][j] = 1 if popcount(i & j) is even else p - 1``, which is exactly the
Sylvester recursion H_{2m} = [[H_m, H_m], [H_m, -H_m]] with -1 folded into
the residue p - 1.  The fast path never materializes the matrix; the naive
path multiplies against a cached materialized copy and serves as the
independent oracle for the butterfly kernel.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatch, UnsupportedBlockOrder
from .modmath import mod_inverse

SUPPORTED_ORDERS = (8, 16, 32, 64, 128)


@dataclass(frozen=True)
class HadamardSpec:
    """Transform order n (power of two, 8..128) and prime modulus p."""

    n: int
    p: int

    def __post_init__(self):
        if self.n not in SUPPORTED_ORDERS:
            raise UnsupportedBlockOrder(
                f"order {self.n} not in supported set {SUPPORTED_ORDERS}"
            )
        if self.p < 2:
            raise ValueError(f"modulus {self.p} is not a prime")


def entry(i: int, j: int, spec: HadamardSpec) -> int:
    """Matrix entry at (i, j): 1 on even popcount(i & j), else p - 1."""
    if not (0 <= i < spec.n and 0 <= j < spec.n):
        raise DimensionMismatch(f"index ({i}, {j}) outside order {spec.n}")
    return 1 if (i & j).bit_count() % 2 == 0 else spec.p - 1


@lru_cache(maxsize=32)
def _matrix_rows(spec: HadamardSpec) -> tuple[tuple[int, ...], ...]:
    pm1 = spec.p - 1
    return tuple(
        tuple(1 if (i & j).bit_count() % 2 == 0 else pm1 for j in range(spec.n))
        for i in range(spec.n)
    )


def build_matrix(spec: HadamardSpec) -> list[list[int]]:
    """Materialize the full n x n residue matrix (display and tests only)."""
    return [list(row) for row in _matrix_rows(spec)]


def _check_length(spec: HadamardSpec, v: Sequence[int]) -> None:
    if len(v) != spec.n:
        raise DimensionMismatch(f"vector length {len(v)} != order {spec.n}")


def multiply_raw(spec: HadamardSpec, v: Sequence[int]) -> list[int]:
    """Unreduced products H . v with entries taken from {1, p - 1}.

    This is the textbook row-by-row multiply; apply_naive is its reduction
    mod p.  Kept public so the unreduced intermediate values are observable.
    """
    _check_length(spec, v)
    rows = _matrix_rows(spec)
    return [sum(map(int.__mul__, row, v)) for row in rows]


def apply_naive(spec: HadamardSpec, v: Sequence[int]) -> list[int]:
    """O(n^2) transform: w[i] = (sum_j H[i][j] * v[j]) mod p."""
    p = spec.p
    return [r % p for r in multiply_raw(spec, v)]


def apply_fast(spec: HadamardSpec, v: Sequence[int]) -> list[int]:
    """O(n log n) butterfly computing exactly the same transform as apply_naive.

    Subtraction is realized as addition of p - value, so every intermediate
    stays a canonical residue.  Input values equal to p fold to 0 on entry.
    """
    _check_length(spec, v)
    p = spec.p
    out = [value % p for value in v]
    h = 1
    n = spec.n
    while h < n:
        for base in range(0, n, 2 * h):
            for j in range(base, base + h):
                a = out[j]
                b = out[j + h]
                out[j] = (a + b) % p
                out[j + h] = (a + p - b) % p
        h *= 2
    return out


def apply_inverse(spec: HadamardSpec, w: Sequence[int]) -> list[int]:
    """Invert the transform: v = inv(n mod p) * (H . w) mod p.

    Works because H . H == (n mod p) * I over Z_p; n is a power of two and
    p is odd, so n mod p is always invertible.
    """
    scale = mod_inverse(spec.n % spec.p, spec.p)
    p = spec.p
    return [scale * value % p for value in apply_fast(spec, w)]


def self_check(spec: HadamardSpec) -> bool:
    """Brute-force confirmation that H . H == (n mod p) * I over Z_p."""
    rows = _matrix_rows(spec)
    n, p = spec.n, spec.p
    target = n % p
    cols = rows  # the matrix is symmetric
    for i in range(n):
        row = rows[i]
        for j in range(n):
            acc = sum(map(int.__mul__, row, cols[j])) % p
            if acc != (target if i == j else 0):
                return False
    return True
