"""Hot loops of the point-counting oracle.

Two interchangeable implementations: numba-compiled loops and a vectorised
numpy path. ``CYCLICNP_BACKEND=numpy`` forces the numpy path; otherwise
numba is used when it imports.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

BACKEND_ENV = "CYCLICNP_BACKEND"


def _default_backend() -> str:
    choice = os.environ.get(BACKEND_ENV, "").strip().lower()
    if choice == "numpy" or not HAVE_NUMBA:
        return "numpy"
    if choice not in ("", "numba"):
        raise ValueError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {choice!r}")
    return "numba"


BACKEND = _default_backend()


def set_backend(name: str) -> None:
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(name)
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    BACKEND = name


def _check_overflow(p: int, k: int) -> None:
    if k * (p - 1) ** 2 >= 2**62:
        raise OverflowError(f"F_{p}^{k} too large for int64 kernels")


# numpy path


def _matpow_mod(mat: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(mat.shape[0], dtype=np.int64)
    base = mat % p
    while e:
        if e & 1:
            result = result @ base % p
        base = base @ base % p
        e >>= 1
    return result


def log_table_numpy(mat: np.ndarray, p: int, q: int) -> np.ndarray:
    k = mat.shape[0]
    n = q - 1
    step = max(1, isqrt(n))
    first = np.zeros((step, k), dtype=np.int64)
    v = np.zeros(k, dtype=np.int64)
    v[0] = 1
    for i in range(step):
        first[i] = v
        v = mat @ v % p
    jump_t = _matpow_mod(mat, step, p).T.copy()
    blocks = [first]
    filled = step
    cur = first
    while filled < n:
        cur = cur @ jump_t % p
        blocks.append(cur)
        filled += step
    states = np.concatenate(blocks)[:n]
    enc = states @ (p ** np.arange(k, dtype=np.int64))
    logs = np.full(q, -1, dtype=np.int64)
    logs[enc] = np.arange(n, dtype=np.int64)
    if np.count_nonzero(logs >= 0) != n or logs[0] != -1:
        raise ArithmeticError("generator is not primitive")
    return logs


def count_affine_numpy(logs: np.ndarray, p: int, a1: int, a2: int, g: int) -> int:
    q = logs.shape[0]
    if q <= 2:
        return 0
    x = np.arange(2, q, dtype=np.int64)
    c0 = x % p
    xm1 = x - c0 + (c0 + p - 1) % p
    hits = np.count_nonzero((a1 * logs[x] + a2 * logs[xm1]) % g == 0)
    return int(hits) * g


# numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _log_table_nb(mat, p, q):
        k = mat.shape[0]
        logs = np.full(q, -1, dtype=np.int64)
        state = np.zeros(k, dtype=np.int64)
        nxt = np.zeros(k, dtype=np.int64)
        state[0] = 1
        weights = np.ones(k, dtype=np.int64)
        for j in range(1, k):
            weights[j] = weights[j - 1] * p
        for i in range(q - 1):
            enc = 0
            for j in range(k):
                enc += state[j] * weights[j]
            if logs[enc] != -1:
                return logs, False
            logs[enc] = i
            for r in range(k):
                acc = 0
                for c in range(k):
                    acc += mat[r, c] * state[c]
                nxt[r] = acc % p
            for r in range(k):
                state[r] = nxt[r]
        return logs, logs[0] == -1

    @njit(cache=True)
    def _count_affine_nb(logs, p, a1, a2, g):
        q = logs.shape[0]
        hits = 0
        for x in range(2, q):
            c0 = x % p
            xm1 = x - c0 + (c0 + p - 1) % p
            if (a1 * logs[x] + a2 * logs[xm1]) % g == 0:
                hits += 1
        return hits * g


def log_table_numba(mat: np.ndarray, p: int, q: int) -> np.ndarray:
    logs, ok = _log_table_nb(np.ascontiguousarray(mat, dtype=np.int64), p, q)
    if not ok:
        raise ArithmeticError("generator is not primitive")
    return logs


def count_affine_numba(logs: np.ndarray, p: int, a1: int, a2: int, g: int) -> int:
    return int(_count_affine_nb(logs, p, a1, a2, g))


def log_table(mat: np.ndarray, p: int, q: int) -> np.ndarray:
    """Discrete logs of all nonzero field elements w.r.t. the generator whose
    multiplication matrix is ``mat``; entry 0 is -1."""
    _check_overflow(p, mat.shape[0])
    if BACKEND == "numba":
        return log_table_numba(mat, p, q)
    return log_table_numpy(mat, p, q)


def count_affine(logs: np.ndarray, p: int, a1: int, a2: int, g: int) -> int:
    """g * #{x != 0, 1 : a1*log(x) + a2*log(x - 1) = 0 mod g}."""
    if BACKEND == "numba":
        return count_affine_numba(logs, p, a1, a2, g)
    return count_affine_numpy(logs, p, a1, a2, g)
