"""Small-range discrete logarithm in G_T via baby-step/giant-step.

The search works on ratios without ever inverting: to solve
``den * base**n == num`` it tables ``num * base**j`` against giant steps
``den * base**(k*m)`` and reads off ``n = k*m - j``.  O(sqrt(bound)) time and
memory.  Internal arithmetic here sits outside the operation-count model,
exactly as the evaluation's cost accounting ignores the final dlog step.
"""

from __future__ import annotations

from math import isqrt

from .backends import Backend
from .errors import DlogRangeError


def _ratio_search(backend: Backend, base, num, den, bound: int) -> int:
    """Smallest n in [0, bound] with den * base**n == num, else raises."""
    if bound < 1:
        raise DlogRangeError("bound must be >= 1")
    if base == backend.gt_identity():
        if num == den:
            return 0
        raise DlogRangeError("degenerate base")
    m = isqrt(bound) + 1
    table: dict[bytes, int] = {}
    cur = num
    for j in range(m):
        table.setdefault(backend.encode_gt(cur), j)
        cur = backend.gt_mul(cur, base)
    stride = backend.exp_raw_gt(base, m)
    cur = den
    best = None
    for k in range(bound // m + 2):
        j = table.get(backend.encode_gt(cur))
        if j is not None:
            n = k * m - j
            if 0 <= n <= bound:
                best = n if best is None else min(best, n)
            if best is not None and best <= k * m - (m - 1):
                break  # no later window can beat it
        cur = backend.gt_mul(cur, stride)
    if best is None:
        raise DlogRangeError(f"no discrete log within bound {bound}")
    return best


def dlog_bsgs(backend: Backend, base, target, bound: int) -> int:
    """n in [0, bound] with base**n == target, or DlogRangeError."""
    return _ratio_search(backend, base, target, backend.gt_identity(), bound)


def dlog_signed(backend: Backend, base, num, den, bound: int) -> int:
    """Signed n with |n| <= bound and den * base**n == num, trying n >= 0 first."""
    try:
        return _ratio_search(backend, base, num, den, bound)
    except DlogRangeError:
        pass
    try:
        return -_ratio_search(backend, base, den, num, bound)
    except DlogRangeError:
        raise DlogRangeError(f"no discrete log within +/-{bound}") from None
