"""Traceable inner-product functional encryption: core algorithms.

Setup / Encrypt / KeyGen / verify_key / Decrypt / Trace over an abstract
bilinear group.  A key binds a vector y and an identity theta; decryption of
a ciphertext for x yields <x, y> (small-range), and the tracer's secret b
recovers theta from any well-formed key.

Cost profile on the counted backend ops:
  setup    (l+2) exps              encrypt  (2l+3) exps
  keygen   6 exps                  verify_key  (l+5) exps + 9 pairings
  decrypt  (l+2) exps + 5 pairings
  trace    3 exps + 4 pairings fixed, + 1 exp per candidate
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .backends import Backend
from .dlog import dlog_signed
from .errors import DimensionError, IdentityDomainError

DEFAULT_DLOG_BOUND = 1 << 20


@dataclass(frozen=True)
class PublicParams:
    backend: Backend = field(repr=False, compare=False)
    dim: int
    g0: object
    g1: object
    g2: object
    h: object          # extra generator consumed by the blind-issuance commitments
    tracer_pub: object  # B = g2^b
    kgc_pub: object     # Y = g0^a
    h_vec: tuple        # h_i = g1^{s_i}
    gt_base: object = field(compare=False)  # e(g0, g1), cached system constant


@dataclass(frozen=True)
class MasterSecretKey:
    a: int
    s_vec: tuple


@dataclass(frozen=True)
class TracerSecret:
    b: int


@dataclass(frozen=True)
class KeyContext:
    """What the key holder presents at decryption: the bound vector and identity."""

    y_vec: tuple
    theta: int


@dataclass(frozen=True)
class Ciphertext:
    ct_vec: tuple   # ct_i = h_i^r * g1^{x_i}
    ct_l1: object   # g1^r
    ct_l2: object   # g2^r
    ct_l3: object   # g0^r


@dataclass(frozen=True)
class FunctionalKey:
    k1: object
    k2: object
    k3: object
    k4: int  # w
    k5: int  # d


def _check_dim(pp: PublicParams, vec: Sequence[int]) -> None:
    if len(vec) != pp.dim:
        raise DimensionError(f"vector length {len(vec)} != dimension {pp.dim}")


def _check_theta(p: int, theta: int) -> None:
    if not 1 <= theta <= p - 1:
        raise IdentityDomainError(f"identity must be in [1, p-1], got {theta}")


def inner_mod(x_vec: Iterable[int], y_vec: Iterable[int], p: int) -> int:
    return sum(x * y for x, y in zip(x_vec, y_vec)) % p


def setup(backend: Backend, dim: int, rng) -> tuple[PublicParams, MasterSecretKey, TracerSecret]:
    """Sample generators, masking exponents s, KGC secret a and tracer secret b."""
    if dim < 1:
        raise DimensionError("dimension must be >= 1")
    p = backend.p
    g0 = backend.random_element(rng)
    g1 = backend.random_element(rng)
    g2 = backend.random_element(rng)
    h = backend.random_element(rng)
    a = backend.random_nonzero_scalar(rng)
    b = backend.random_nonzero_scalar(rng)
    s_vec = tuple(backend.random_scalar(rng) for _ in range(dim))
    h_vec = tuple(backend.exp(g1, s) for s in s_vec)
    tracer_pub = backend.exp(g2, b)
    kgc_pub = backend.exp(g0, a)
    pp = PublicParams(
        backend=backend,
        dim=dim,
        g0=g0,
        g1=g1,
        g2=g2,
        h=h,
        tracer_pub=tracer_pub,
        kgc_pub=kgc_pub,
        h_vec=h_vec,
        gt_base=backend.pair_raw(g0, g1),
    )
    return pp, MasterSecretKey(a=a, s_vec=s_vec), TracerSecret(b=b)


def encrypt(pp: PublicParams, x_vec: Sequence[int], rng) -> Ciphertext:
    return encrypt_with_randomness(pp, x_vec, pp.backend.random_scalar(rng))


def encrypt_with_randomness(pp: PublicParams, x_vec: Sequence[int], r: int) -> Ciphertext:
    """Deterministic encryption core; ``r`` injectable for tests."""
    _check_dim(pp, x_vec)
    be = pp.backend
    ct_vec = tuple(
        be.mul(be.exp(h_i, r), be.exp(pp.g1, x_i)) for h_i, x_i in zip(pp.h_vec, x_vec)
    )
    return Ciphertext(
        ct_vec=ct_vec,
        ct_l1=be.exp(pp.g1, r),
        ct_l2=be.exp(pp.g2, r),
        ct_l3=be.exp(pp.g0, r),
    )


def keygen(pp: PublicParams, msk: MasterSecretKey, ctx: KeyContext, rng) -> FunctionalKey:
    """Issue a key binding (y, theta); d is resampled while d + a = 0 mod p."""
    p = pp.backend.p
    w = pp.backend.random_scalar(rng)
    d = pp.backend.random_scalar(rng)
    while (d + msk.a) % p == 0:
        d = pp.backend.random_scalar(rng)
    return keygen_with_randomness(pp, msk, ctx, w, d)


def keygen_with_randomness(
    pp: PublicParams, msk: MasterSecretKey, ctx: KeyContext, w: int, d: int
) -> FunctionalKey:
    _check_dim(pp, ctx.y_vec)
    be = pp.backend
    p = be.p
    _check_theta(p, ctx.theta)
    if (d + msk.a) % p == 0:
        raise IdentityDomainError("d + a = 0 mod p; caller must resample d")
    e = pow((d + msk.a) % p, -1, p)
    k1 = be.mul(
        be.exp(pp.g0, inner_mod(ctx.y_vec, msk.s_vec, p)),
        be.exp(pp.tracer_pub, w * e % p),
    )
    g2b = be.mul(pp.g2, pp.tracer_pub)
    k2 = be.exp(be.mul(pp.g0, be.mul(be.exp(g2b, w), be.exp(pp.g2, ctx.theta))), e)
    k3 = be.exp(pp.g1, e)
    return FunctionalKey(k1=k1, k2=k2, k3=k3, k4=w, k5=d)


def verify_key(pp: PublicParams, key: FunctionalKey, ctx: KeyContext) -> bool:
    """The key holder's three pairing equations; each is checked independently."""
    _check_dim(pp, ctx.y_vec)
    be = pp.backend

    # e(K1, g1) = e(g0, prod h_i^{y_i}) * e(B^{K4}, K3)
    acc = be.identity()
    for h_i, y_i in zip(pp.h_vec, ctx.y_vec):
        acc = be.mul(acc, be.exp(h_i, y_i))
    eq1 = be.pair(key.k1, pp.g1) == be.gt_mul(
        be.pair(pp.g0, acc), be.pair(be.exp(pp.tracer_pub, key.k4), key.k3)
    )

    # e(K3, g0^{K5} * Y) = e(g0, g1)
    eq2 = be.pair(key.k3, be.mul(be.exp(pp.g0, key.k5), pp.kgc_pub)) == be.pair(pp.g0, pp.g1)

    # e(K2, g0^{K5} * Y) = e(g0, g0) * e(g0, g2*B)^{K4} * e(g0, g2)^{theta}
    rhs = be.gt_mul(
        be.pair(pp.g0, pp.g0),
        be.gt_mul(
            be.gt_exp(be.pair(pp.g0, be.mul(pp.g2, pp.tracer_pub)), key.k4),
            be.gt_exp(be.pair(pp.g0, pp.g2), ctx.theta),
        ),
    )
    eq3 = be.pair(key.k2, be.mul(be.exp(pp.g0, key.k5), pp.kgc_pub)) == rhs

    return eq1 and eq2 and eq3


def decrypt(
    pp: PublicParams,
    key: FunctionalKey,
    ctx: KeyContext,
    ct: Ciphertext,
    bound: int = DEFAULT_DLOG_BOUND,
) -> int:
    """Recover <x, y> with |<x, y>| <= bound, searching both signs.

    Callers are expected to have verified the key (see ``verify_key``).
    Raises DlogRangeError when no inner product within the bound matches.
    """
    _check_dim(pp, ctx.y_vec)
    if len(ct.ct_vec) != pp.dim:
        raise DimensionError("ciphertext dimension mismatch")
    be = pp.backend
    acc = be.identity()
    for ct_i, y_i in zip(ct.ct_vec, ctx.y_vec):
        acc = be.mul(acc, be.exp(ct_i, y_i))
    num = be.gt_mul(be.pair(pp.g0, acc), be.pair(ct.ct_l1, key.k2))
    den = be.gt_mul(
        be.pair(key.k1, ct.ct_l1),
        be.gt_mul(
            be.pair(key.k3, ct.ct_l3),
            be.pair(be.mul(be.exp(key.k3, key.k4), be.exp(key.k3, ctx.theta)), ct.ct_l2),
        ),
    )
    # num/den = e(g0, g1)^{<x,y>}; the ratio search avoids a G_T inversion so
    # decryption stays at exactly (l+2) exponentiations and 5 pairings.
    return dlog_signed(be, pp.gt_base, num, den, bound)


def trace(
    pp: PublicParams, tsk: TracerSecret, key: FunctionalKey, candidates: Sequence[int]
) -> int:
    """Recover the identity embedded in a well-formed key.

    Fixed cost 4 pairings + 3 exponentiations (the third is the G_T division,
    performed as an exponentiation by p-1), then one exponentiation per
    candidate.  Raises TraceFailedError when no candidate matches.
    """
    from .errors import TraceFailedError

    if not candidates:
        raise TraceFailedError("empty candidate set")
    be = pp.backend
    t1 = be.exp(key.k3, key.k4)            # K3^{K4}
    t2 = be.exp(t1, tsk.b)                 # K3^{K4*b}
    num = be.pair(key.k2, pp.g1)
    den = be.gt_mul(be.pair(pp.g0, key.k3), be.pair(pp.g2, be.mul(t1, t2)))
    target = be.gt_mul(num, be.gt_inv(den))  # e(K3, g2)^theta
    base = be.pair(key.k3, pp.g2)
    for theta in candidates:
        if be.gt_exp(base, theta) == target:
            return theta
    raise TraceFailedError("no candidate identity matches the key")
