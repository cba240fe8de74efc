"""Production BLS12-381 backend.

The group kernels live in the compiled extension ``pptfeip._blscore``
(arkworks under a thin PyO3 wrapper), selected at import time.  There is no
pure-Python implementation of this curve: writing pairing arithmetic by hand
is out of scope, and the pure-Python kernel path in this package is the toy
backend.  If the extension is missing, constructing this backend raises with
build instructions.

Because the scheme places the same logical elements on both sides of the
pairing, each source-group element is a synchronized (G1, G2) pair with equal
exponent; the extension maintains the pair under every operation.
"""

from __future__ import annotations

from ..errors import BackendUnavailableError, DecodeError
from .base import BACKEND_CURVE, Backend, scalar_width

try:
    from .. import _blscore
except ImportError:  # extension not built
    _blscore = None


def extension_available() -> bool:
    return _blscore is not None


class BlsBackend(Backend):
    id = BACKEND_CURVE
    name = "curve"

    def __init__(self):
        if _blscore is None:
            raise BackendUnavailableError(
                "compiled group kernels not available; build them with "
                "`python scripts/build_ext.py` (requires a Rust toolchain)"
            )
        super().__init__()
        self.p = int.from_bytes(_blscore.order_be(), "big")
        self.scalar_nbytes = scalar_width(self.p)
        self.element_nbytes = _blscore.G_LEN
        self.gt_nbytes = _blscore.GT_LEN
        self._gen = _blscore.generator()
        self._id = _blscore.identity()
        self._gt_id = _blscore.gt_identity()

    def _k(self, k: int) -> bytes:
        return k.to_bytes(32, "big")

    def mul(self, x, y):
        return x.mul(y)

    def identity(self):
        return self._id

    def generator(self):
        return self._gen

    def _exp(self, x, k: int):
        return x.exp(self._k(k))

    def gt_mul(self, t, u):
        return t.mul(u)

    def gt_identity(self):
        return self._gt_id

    def _gt_exp(self, t, k: int):
        return t.exp(self._k(k))

    def _pair(self, x, y):
        return _blscore.pair(x, y)

    def encode_element(self, x) -> bytes:
        return x.to_bytes()

    def decode_element(self, data: bytes):
        try:
            return _blscore.g_from_bytes(data)
        except ValueError as e:
            raise DecodeError(str(e)) from e

    def encode_gt(self, t) -> bytes:
        return t.to_bytes()

    def decode_gt(self, data: bytes):
        try:
            return _blscore.gt_from_bytes(data)
        except ValueError as e:
            raise DecodeError(str(e)) from e
