"""Abstract bilinear group interface with operation counting.

A backend provides a source group G of prime order p, a target group G_T of
the same order, a bilinear non-degenerate pairing between them, canonical
serialization for scalars and elements, and Fiat-Shamir hashing to scalars.

Scalars are plain Python ints in [0, p). Group and target elements are
backend-specific opaque values supporting ``==``.

Counting model (matches how the evaluation tallies costs): ``exp``,
``gt_exp``, ``pair`` and ``hash_to_scalar`` increment counters; group
multiplications do not.  Inversion is performed by raising to p-1, so a
division costs one counted exponentiation.  Sampling random elements and
deriving cached system constants go through uncounted raw paths.
"""

from __future__ import annotations

import hashlib
from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..errors import DecodeError

BACKEND_TOY = 0x01
BACKEND_CURVE = 0x02


@dataclass
class OpCounts:
    pairings: int = 0
    exponentiations: int = 0
    hashes: int = 0

    def snapshot(self) -> "OpCounts":
        return OpCounts(self.pairings, self.exponentiations, self.hashes)

    def __sub__(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(
            self.pairings - other.pairings,
            self.exponentiations - other.exponentiations,
            self.hashes - other.hashes,
        )


class Backend(ABC):
    """One instantiation of the bilinear group; stateless except counters."""

    id: int
    name: str
    p: int
    scalar_nbytes: int
    element_nbytes: int
    gt_nbytes: int

    def __init__(self):
        self.counts = OpCounts()

    def reset_counts(self) -> None:
        self.counts = OpCounts()

    # -- counted operations ------------------------------------------------

    def exp(self, x, k: int):
        """x**k in G."""
        self.counts.exponentiations += 1
        return self._exp(x, k % self.p)

    def gt_exp(self, t, k: int):
        """t**k in G_T."""
        self.counts.exponentiations += 1
        return self._gt_exp(t, k % self.p)

    def pair(self, x, y):
        """Bilinear map e(x, y)."""
        self.counts.pairings += 1
        return self._pair(x, y)

    def hash_to_scalar(self, domain_tag: bytes, transcript: bytes) -> int:
        """SHA-256(domain_tag || 0x00 || transcript) as a big-endian int mod p."""
        self.counts.hashes += 1
        digest = hashlib.sha256(domain_tag + b"\x00" + transcript).digest()
        return int.from_bytes(digest, "big") % self.p

    def inv(self, x):
        """Inverse in G, computed as x**(p-1); costs one exponentiation."""
        return self.exp(x, self.p - 1)

    def gt_inv(self, t):
        """Inverse in G_T, computed as t**(p-1); costs one exponentiation."""
        return self.gt_exp(t, self.p - 1)

    # -- uncounted operations ----------------------------------------------

    @abstractmethod
    def mul(self, x, y):
        """Group operation in G."""

    @abstractmethod
    def gt_mul(self, t, u):
        """Group operation in G_T."""

    @abstractmethod
    def identity(self):
        ...

    @abstractmethod
    def gt_identity(self):
        ...

    @abstractmethod
    def generator(self):
        """Canonical generator of G."""

    def pair_raw(self, x, y):
        """Uncounted pairing, for deriving cached public constants."""
        return self._pair(x, y)

    def exp_raw(self, x, k: int):
        """Uncounted exponentiation in G (sampling, dlog internals)."""
        return self._exp(x, k % self.p)

    def exp_raw_gt(self, t, k: int):
        """Uncounted exponentiation in G_T (dlog internals)."""
        return self._gt_exp(t, k % self.p)

    def random_scalar(self, rng) -> int:
        return rng.randrange(self.p)

    def random_nonzero_scalar(self, rng) -> int:
        return rng.randrange(1, self.p)

    def random_element(self, rng):
        """Uniform non-identity element of G (uncounted sampling)."""
        return self._exp(self.generator(), self.random_nonzero_scalar(rng))

    # -- canonical serialization --------------------------------------------

    def encode_scalar(self, k: int) -> bytes:
        if not 0 <= k < self.p:
            raise DecodeError(f"scalar {k} outside [0, p)")
        return k.to_bytes(self.scalar_nbytes, "big")

    def decode_scalar(self, data: bytes) -> int:
        if len(data) != self.scalar_nbytes:
            raise DecodeError(f"scalar must be {self.scalar_nbytes} bytes, got {len(data)}")
        k = int.from_bytes(data, "big")
        if k >= self.p:
            raise DecodeError("scalar not reduced mod p")
        return k

    @abstractmethod
    def encode_element(self, x) -> bytes:
        ...

    @abstractmethod
    def decode_element(self, data: bytes):
        ...

    @abstractmethod
    def encode_gt(self, t) -> bytes:
        ...

    @abstractmethod
    def decode_gt(self, data: bytes):
        ...

    # -- backend kernels ------------------------------------------------------

    @abstractmethod
    def _exp(self, x, k: int):
        ...

    @abstractmethod
    def _gt_exp(self, t, k: int):
        ...

    @abstractmethod
    def _pair(self, x, y):
        ...


def scalar_width(p: int) -> int:
    return (p.bit_length() + 7) // 8
