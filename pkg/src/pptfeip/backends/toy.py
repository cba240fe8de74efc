"""Deterministic insecure toy backend for oracle testing.

G is the additive group of integers mod p, so every element *is* its own
discrete log with respect to the canonical generator 1.  G_T is the order-p
subgroup of Z_q* for the smallest prime q = k*p + 1, generated by ghat, and
the pairing is e(x, y) = ghat**(x*y mod p) -- bilinear by construction.

Exposing discrete logs is the whole point: tests can inspect exponents
directly and brute-force every equation the production curve only asserts.
Never use outside tests and local experiments.
"""

from __future__ import annotations

from ..errors import DecodeError, UsageError
from .base import BACKEND_TOY, Backend, scalar_width

DEFAULT_P = 1000003

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the base set covers all n < 3.3e24.
    if n < 2:
        return False
    for sp in _MR_BASES:
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def _residue_field(p: int) -> tuple[int, int]:
    """Smallest prime q = k*p + 1 and a fixed generator of its order-p subgroup."""
    k = 2
    while not _is_prime(k * p + 1):
        k += 2
    q = k * p + 1
    cofactor = (q - 1) // p
    h0 = 2
    while pow(h0, cofactor, q) == 1:
        h0 += 1
    return q, pow(h0, cofactor, q)


class ToyBackend(Backend):
    id = BACKEND_TOY
    name = "toy"

    def __init__(self, p: int = DEFAULT_P):
        super().__init__()
        if not _is_prime(p):
            raise UsageError(f"toy modulus {p} is not prime")
        self.p = p
        self.q, self.ghat = _residue_field(p)
        self.scalar_nbytes = scalar_width(p)
        self.element_nbytes = self.scalar_nbytes
        self.gt_nbytes = scalar_width(self.q)

    # G is written multiplicatively by the interface but is Z_p additive here.

    def mul(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def identity(self) -> int:
        return 0

    def generator(self) -> int:
        return 1

    def _exp(self, x: int, k: int) -> int:
        return (x * k) % self.p

    def gt_mul(self, t: int, u: int) -> int:
        return (t * u) % self.q

    def gt_identity(self) -> int:
        return 1

    def _gt_exp(self, t: int, k: int) -> int:
        return pow(t, k, self.q)

    def _pair(self, x: int, y: int) -> int:
        return pow(self.ghat, (x * y) % self.p, self.q)

    def encode_element(self, x: int) -> bytes:
        if not 0 <= x < self.p:
            raise DecodeError("element outside group")
        return x.to_bytes(self.element_nbytes, "big")

    def decode_element(self, data: bytes) -> int:
        if len(data) != self.element_nbytes:
            raise DecodeError(f"element must be {self.element_nbytes} bytes")
        x = int.from_bytes(data, "big")
        if x >= self.p:
            raise DecodeError("element not reduced mod p")
        return x

    def encode_gt(self, t: int) -> bytes:
        if not 0 < t < self.q:
            raise DecodeError("target element outside field")
        return t.to_bytes(self.gt_nbytes, "big")

    def decode_gt(self, data: bytes) -> int:
        if len(data) != self.gt_nbytes:
            raise DecodeError(f"target element must be {self.gt_nbytes} bytes")
        t = int.from_bytes(data, "big")
        if not 0 < t < self.q or pow(t, self.p, self.q) != 1:
            raise DecodeError("not in the order-p subgroup")
        return t
