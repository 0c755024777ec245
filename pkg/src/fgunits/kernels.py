"""Convolution kernels for dense coefficient arrays over F_p.

Two interchangeable implementations are kept: a numba ``@njit`` kernel and a
pure numpy one.  The numba path is used when numba imports cleanly and the
environment variable ``FGUNITS_DISABLE_JIT`` is unset (or ``0``).  Both take
the same arguments and return identical results.

Group elements are addressed by mixed-radix index with the first exponent
varying fastest; ``digits[i]`` is the exponent tuple of index ``i`` and
``strides`` converts a tuple back to its index.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

HAVE_NUMBA = numba is not None
JIT_DISABLED = os.environ.get("FGUNITS_DISABLE_JIT", "0").lower() not in ("", "0", "false", "no")


def convolve_batch_numpy(X, Y, digits, orders, strides, p):
    """Row-wise group-algebra product of ``X`` and ``Y`` (both ``(N, n)``)."""
    N, n = X.shape
    out = np.zeros((N, n), dtype=np.int64)
    for i in np.flatnonzero(X.any(axis=0)):
        shifted = ((digits + digits[i]) % orders) @ strides
        out[:, shifted] += X[:, i : i + 1] * Y
    return out % p


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def convolve_batch_numba(X, Y, digits, orders, strides, p):
        N, n = X.shape
        t = orders.shape[0]
        out = np.zeros((N, n), dtype=np.int64)
        shifted = np.empty(n, dtype=np.int64)
        for i in range(n):
            used = False
            for b in range(N):
                if X[b, i] != 0:
                    used = True
                    break
            if not used:
                continue
            for j in range(n):
                k = 0
                for a in range(t):
                    k += ((digits[i, a] + digits[j, a]) % orders[a]) * strides[a]
                shifted[j] = k
            for b in range(N):
                xi = X[b, i]
                if xi == 0:
                    continue
                for j in range(n):
                    out[b, shifted[j]] += xi * Y[b, j]
        for b in range(N):
            for j in range(n):
                out[b, j] %= p
        return out

else:  # pragma: no cover
    convolve_batch_numba = None


_BACKENDS = {"numpy": convolve_batch_numpy}
if HAVE_NUMBA:
    _BACKENDS["numba"] = convolve_batch_numba

_active = "numba" if HAVE_NUMBA and not JIT_DISABLED else "numpy"


def backend():
    """Name of the kernel currently in use (``"numba"`` or ``"numpy"``)."""
    return _active


def set_backend(name):
    """Switch kernels at runtime; mostly for benchmarks and tests."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(_BACKENDS)}")
    _active = name


def available_backends():
    return sorted(_BACKENDS)


def convolve_batch(X, Y, digits, orders, strides, p):
    X = np.ascontiguousarray(X, dtype=np.int64)
    Y = np.ascontiguousarray(Y, dtype=np.int64)
    if X.shape != Y.shape:
        raise ValueError(f"shape mismatch {X.shape} vs {Y.shape}")
    return _BACKENDS[_active](X, Y, digits, orders, strides, np.int64(p))
