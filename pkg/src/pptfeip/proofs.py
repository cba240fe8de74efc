"""Non-interactive proofs of knowledge used by blind issuance.

Two Fiat-Shamir sigma protocols:

* user side: knowledge of (tau, theta, w1) behind the commitments
  A1 = h^tau * B^w1 and A2 = (g2*B)^w1 * g2^theta;
* KGC side: knowledge of (a, s_vec) behind the issuance response
  B1..B4, with d (= B5), w2 and y treated as public statement data.

Challenges are SHA-256 over domain-separated canonical encodings; responses
use subtraction mod p (t = nonce - c * witness).  The KGC-side challenge
covers every commitment, every statement value, B5, A1, A2, w2 and y, a
strict superset of either party's minimal list: omitting statement data from
a Fiat-Shamir hash is unsound, and binding w2/y prevents mixing messages
across sessions.

Both provers accept injected nonces so tests can rewind transcripts; when no
rng is given, nonces are derived deterministically from the witness and
statement (so a given proof is reproducible bit for bit).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Sequence

from .backends import Backend
from .errors import DecodeError
from .scheme import PublicParams

SIGMA_U_TAG = b"PPTFEIP/SIGMA_U"
SIGMA_K_TAG = b"PPTFEIP/SIGMA_K"
_NONCE_U_TAG = b"PPTFEIP/NONCE_U"
_NONCE_K_TAG = b"PPTFEIP/NONCE_K"


@dataclass(frozen=True)
class SigmaUProof:
    a1p: object      # A1' commitment
    a2p: object      # A2' commitment
    c: int
    t_tau: int
    t_theta: int
    t_w1: int


@dataclass(frozen=True)
class SigmaKProof:
    mu_commit_p: tuple  # (g0^{y_i})^{a'} per coordinate
    r1p: object         # commitment for the B1 relation
    r2p: object         # commitment for the B2 relation
    r3p: object         # commitment for the B3 relation
    r4p: object         # commitment for the B4 relation
    c: int
    t_a: int
    t_s: tuple
    mu_commit: tuple    # statement auxiliaries g0^{y_i * a}


def _derive_nonces(p: int, tag: bytes, seed_parts: Sequence[bytes], count: int) -> list[int]:
    """Deterministic per-proof nonces from secrets and statement bytes."""
    seed = hashlib.sha256(tag + b"\x00" + b"".join(seed_parts)).digest()
    out = []
    for i in range(count):
        out.append(int.from_bytes(hashlib.sha256(seed + i.to_bytes(4, "big")).digest(), "big") % p)
    return out


# -- user-side proof ---------------------------------------------------------


def sigma_u_challenge(be: Backend, a1, a1p, a2, a2p) -> int:
    stream = be.encode_element(a1) + be.encode_element(a1p)
    stream += be.encode_element(a2) + be.encode_element(a2p)
    return be.hash_to_scalar(SIGMA_U_TAG, stream)


def sigma_u_commitments(pp: PublicParams, tau_n: int, theta_n: int, w1_n: int):
    be = pp.backend
    a1p = be.mul(be.exp(pp.h, tau_n), be.exp(pp.tracer_pub, w1_n))
    a2p = be.mul(be.exp(be.mul(pp.g2, pp.tracer_pub), w1_n), be.exp(pp.g2, theta_n))
    return a1p, a2p


def sigma_u_prove(
    pp: PublicParams,
    a1,
    a2,
    tau: int,
    theta: int,
    w1: int,
    rng=None,
    nonces: tuple[int, int, int] | None = None,
) -> SigmaUProof:
    be = pp.backend
    p = be.p
    if nonces is None:
        if rng is not None:
            nonces = (be.random_scalar(rng), be.random_scalar(rng), be.random_scalar(rng))
        else:
            seed = [be.encode_scalar(tau % p), be.encode_scalar(theta % p),
                    be.encode_scalar(w1 % p), be.encode_element(a1), be.encode_element(a2)]
            nonces = tuple(_derive_nonces(p, _NONCE_U_TAG, seed, 3))
    tau_n, theta_n, w1_n = nonces
    a1p, a2p = sigma_u_commitments(pp, tau_n, theta_n, w1_n)
    c = sigma_u_challenge(be, a1, a1p, a2, a2p)
    return SigmaUProof(
        a1p=a1p,
        a2p=a2p,
        c=c,
        t_tau=(tau_n - c * tau) % p,
        t_theta=(theta_n - c * theta) % p,
        t_w1=(w1_n - c * w1) % p,
    )


def sigma_u_verify(pp: PublicParams, a1, a2, proof: SigmaUProof) -> bool:
    be = pp.backend
    if proof.c != sigma_u_challenge(be, a1, proof.a1p, a2, proof.a2p):
        return False
    lhs1 = be.mul(
        be.mul(be.exp(pp.h, proof.t_tau), be.exp(pp.tracer_pub, proof.t_w1)),
        be.exp(a1, proof.c),
    )
    if proof.a1p != lhs1:
        return False
    lhs2 = be.mul(
        be.mul(
            be.exp(be.mul(pp.g2, pp.tracer_pub), proof.t_w1),
            be.exp(pp.g2, proof.t_theta),
        ),
        be.exp(a2, proof.c),
    )
    return proof.a2p == lhs2


def sigma_u_extract(
    p: int, t1: tuple[int, int, int], c1: int, t2: tuple[int, int, int], c2: int
) -> tuple[int, int, int]:
    """Special-soundness extraction from two transcripts sharing commitments.

    Given responses (t_tau, t_theta, t_w1) under distinct challenges c1 != c2,
    recovers the witness (tau, theta, w1).
    """
    dc = pow((c2 - c1) % p, -1, p)
    return tuple((x1 - x2) * dc % p for x1, x2 in zip(t1, t2))


# -- KGC-side proof ----------------------------------------------------------


def _sigma_k_statements(pp: PublicParams, a1, a2, w2: int, b1, b2, b3, b4, d: int):
    """Public statement values each relation is anchored to.

    W  = B1^d / (A1 * B^{w2})           = B1^{-a} * prod (V_i * g0^{d*y_i})^{s_i}
    X  = g0 * A2 * (g2*B)^{w2} / B2^d   = B2^a
    Y3 = g1 / B3^d                      = B3^a
    Z  = h / B4^d                       = B4^a
    """
    be = pp.backend
    g2b = be.mul(pp.g2, pp.tracer_pub)
    w_st = be.mul(be.exp(b1, d), be.inv(be.mul(a1, be.exp(pp.tracer_pub, w2))))
    x_st = be.mul(be.mul(pp.g0, be.mul(a2, be.exp(g2b, w2))), be.inv(be.exp(b2, d)))
    y_st = be.mul(pp.g1, be.inv(be.exp(b3, d)))
    z_st = be.mul(pp.h, be.inv(be.exp(b4, d)))
    return w_st, x_st, y_st, z_st


def sigma_k_challenge(
    be: Backend,
    y_vec: Sequence[int],
    a1,
    a2,
    w2: int,
    b1,
    b2,
    b3,
    b4,
    b5: int,
    mu_commit_p: Sequence,
    mu_commit: Sequence,
    r1p,
    r2p,
    r3p,
    r4p,
) -> int:
    parts = [be.encode_element(v) for v in mu_commit_p]
    parts += [be.encode_element(v) for v in mu_commit]
    parts += [
        be.encode_element(b1), be.encode_element(r1p),
        be.encode_element(b2), be.encode_element(r2p),
        be.encode_element(b3), be.encode_element(r3p),
        be.encode_element(b4), be.encode_element(r4p),
        be.encode_scalar(b5 % be.p),
        be.encode_element(a1), be.encode_element(a2),
        be.encode_scalar(w2 % be.p),
    ]
    parts += [be.encode_scalar(y % be.p) for y in y_vec]
    return be.hash_to_scalar(SIGMA_K_TAG, b"".join(parts))


def sigma_k_prove(
    pp: PublicParams,
    y_vec: Sequence[int],
    a1,
    a2,
    w2: int,
    b1,
    b2,
    b3,
    b4,
    b5: int,
    a: int,
    s_vec: Sequence[int],
    rng=None,
    nonces: tuple[int, tuple] | None = None,
) -> SigmaKProof:
    be = pp.backend
    p = be.p
    dim = len(y_vec)
    if nonces is None:
        if rng is not None:
            a_n = be.random_scalar(rng)
            s_n = tuple(be.random_scalar(rng) for _ in range(dim))
        else:
            seed = [be.encode_scalar(a % p)]
            seed += [be.encode_scalar(s % p) for s in s_vec]
            seed += [be.encode_element(a1), be.encode_element(a2), be.encode_scalar(b5 % p)]
            drawn = _derive_nonces(p, _NONCE_K_TAG, seed, dim + 1)
            a_n, s_n = drawn[0], tuple(drawn[1:])
    else:
        a_n, s_n = nonces
    d = b5
    mu_commit = tuple(be.exp(pp.g0, y * a % p) for y in y_vec)
    mu_commit_p = tuple(be.exp(pp.g0, y * a_n % p) for y in y_vec)
    r1p = be.exp(b1, (-a_n) % p)
    for v_i, y_i, s_ni in zip(mu_commit, y_vec, s_n):
        base_i = be.mul(v_i, be.exp(pp.g0, d * y_i % p))
        r1p = be.mul(r1p, be.exp(base_i, s_ni))
    r2p = be.exp(b2, a_n)
    r3p = be.exp(b3, a_n)
    r4p = be.exp(b4, a_n)
    c = sigma_k_challenge(
        be, y_vec, a1, a2, w2, b1, b2, b3, b4, b5, mu_commit_p, mu_commit, r1p, r2p, r3p, r4p
    )
    return SigmaKProof(
        mu_commit_p=mu_commit_p,
        r1p=r1p,
        r2p=r2p,
        r3p=r3p,
        r4p=r4p,
        c=c,
        t_a=(a_n - c * a) % p,
        t_s=tuple((s_ni - c * s_i) % p for s_ni, s_i in zip(s_n, s_vec)),
        mu_commit=mu_commit,
    )


def sigma_k_check_relations(
    pp: PublicParams,
    y_vec: Sequence[int],
    a1,
    a2,
    w2: int,
    b1,
    b2,
    b3,
    b4,
    b5: int,
    proof: SigmaKProof,
) -> dict[str, bool]:
    """Per-relation verdicts; ``sigma_k_verify`` is their conjunction."""
    be = pp.backend
    p = be.p
    dim = len(y_vec)
    if not (len(proof.mu_commit) == len(proof.mu_commit_p) == len(proof.t_s) == dim):
        return {"shape": False}
    c = proof.c
    d = b5
    checks: dict[str, bool] = {}
    checks["challenge"] = c == sigma_k_challenge(
        be, y_vec, a1, a2, w2, b1, b2, b3, b4, b5,
        proof.mu_commit_p, proof.mu_commit, proof.r1p, proof.r2p, proof.r3p, proof.r4p,
    )
    checks["aux"] = all(
        vp == be.mul(be.exp(pp.g0, y * proof.t_a % p), be.exp(v, c))
        for vp, v, y in zip(proof.mu_commit_p, proof.mu_commit, y_vec)
    )
    w_st, x_st, y_st, z_st = _sigma_k_statements(pp, a1, a2, w2, b1, b2, b3, b4, d)
    rhs1 = be.exp(b1, (-proof.t_a) % p)
    for v_i, y_i, t_si in zip(proof.mu_commit, y_vec, proof.t_s):
        base_i = be.mul(v_i, be.exp(pp.g0, d * y_i % p))
        rhs1 = be.mul(rhs1, be.exp(base_i, t_si))
    checks["b1"] = proof.r1p == be.mul(rhs1, be.exp(w_st, c))
    checks["b2"] = proof.r2p == be.mul(be.exp(b2, proof.t_a), be.exp(x_st, c))
    checks["b3"] = proof.r3p == be.mul(be.exp(b3, proof.t_a), be.exp(y_st, c))
    checks["b4"] = proof.r4p == be.mul(be.exp(b4, proof.t_a), be.exp(z_st, c))
    return checks


def sigma_k_verify(
    pp: PublicParams,
    y_vec: Sequence[int],
    a1,
    a2,
    w2: int,
    b1,
    b2,
    b3,
    b4,
    b5: int,
    proof: SigmaKProof,
) -> bool:
    return all(sigma_k_check_relations(pp, y_vec, a1, a2, w2, b1, b2, b3, b4, b5, proof).values())


# -- canonical proof serialization -------------------------------------------


def _count(n: int) -> bytes:
    return n.to_bytes(4, "big")


def encode_sigma_u(be: Backend, proof: SigmaUProof) -> bytes:
    return (
        be.encode_element(proof.a1p)
        + be.encode_element(proof.a2p)
        + be.encode_scalar(proof.c)
        + be.encode_scalar(proof.t_tau)
        + be.encode_scalar(proof.t_theta)
        + be.encode_scalar(proof.t_w1)
    )


def decode_sigma_u(be: Backend, data: bytes) -> tuple[SigmaUProof, bytes]:
    en, sn = be.element_nbytes, be.scalar_nbytes
    need = 2 * en + 4 * sn
    if len(data) < need:
        raise DecodeError("truncated user proof")
    a1p = be.decode_element(data[:en])
    a2p = be.decode_element(data[en:2 * en])
    off = 2 * en
    vals = []
    for _ in range(4):
        vals.append(be.decode_scalar(data[off:off + sn]))
        off += sn
    return SigmaUProof(a1p, a2p, *vals), data[off:]


def encode_sigma_k(be: Backend, proof: SigmaKProof) -> bytes:
    out = _count(len(proof.mu_commit_p))
    out += b"".join(be.encode_element(v) for v in proof.mu_commit_p)
    out += (
        be.encode_element(proof.r1p)
        + be.encode_element(proof.r2p)
        + be.encode_element(proof.r3p)
        + be.encode_element(proof.r4p)
    )
    out += be.encode_scalar(proof.c) + be.encode_scalar(proof.t_a)
    out += _count(len(proof.t_s)) + b"".join(be.encode_scalar(t) for t in proof.t_s)
    out += _count(len(proof.mu_commit))
    out += b"".join(be.encode_element(v) for v in proof.mu_commit)
    return out


def decode_sigma_k(be: Backend, data: bytes) -> tuple[SigmaKProof, bytes]:
    en, sn = be.element_nbytes, be.scalar_nbytes

    def take(buf: bytes, n: int) -> tuple[bytes, bytes]:
        if len(buf) < n:
            raise DecodeError("truncated KGC proof")
        return buf[:n], buf[n:]

    raw, data = take(data, 4)
    n1 = int.from_bytes(raw, "big")
    mu_p = []
    for _ in range(n1):
        raw, data = take(data, en)
        mu_p.append(be.decode_element(raw))
    rps = []
    for _ in range(4):
        raw, data = take(data, en)
        rps.append(be.decode_element(raw))
    raw, data = take(data, sn)
    c = be.decode_scalar(raw)
    raw, data = take(data, sn)
    t_a = be.decode_scalar(raw)
    raw, data = take(data, 4)
    n2 = int.from_bytes(raw, "big")
    t_s = []
    for _ in range(n2):
        raw, data = take(data, sn)
        t_s.append(be.decode_scalar(raw))
    raw, data = take(data, 4)
    n3 = int.from_bytes(raw, "big")
    mu = []
    for _ in range(n3):
        raw, data = take(data, en)
        mu.append(be.decode_element(raw))
    proof = SigmaKProof(tuple(mu_p), *rps, c, t_a, tuple(t_s), tuple(mu))
    return proof, data
