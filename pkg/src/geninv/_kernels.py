"""Scan kernels over multiplication tables.

Every kernel exists twice: a numba ``@njit`` loop version and a vectorised
numpy version. ``GENINV_NUMBA=0`` in the environment (or numba missing)
selects the numpy path at import time; both paths return identical arrays.

Tables are ``int64`` arrays; ``-1`` means "no element".
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly when numba is present
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("GENINV_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")
BACKEND = "numba" if USE_NUMBA else "numpy"


def _njit(func):
    if not HAVE_NUMBA:
        return None
    return numba.njit(cache=True)(func)


# -- associativity -----------------------------------------------------------


def _assoc_loop(mul):
    k = mul.shape[0]
    for a in range(k):
        for b in range(k):
            ab = mul[a, b]
            for c in range(k):
                if mul[ab, c] != mul[a, mul[b, c]]:
                    return np.array([a, b, c], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


def associativity_violation_numpy(mul: np.ndarray) -> np.ndarray:
    for a in range(mul.shape[0]):
        left = mul[mul[a]]  # [b, c] -> (a b) c
        right = mul[a][mul]  # [b, c] -> a (b c)
        bad = np.argwhere(left != right)
        if len(bad):
            return np.array([a, bad[0, 0], bad[0, 1]], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


associativity_violation_numba = _njit(_assoc_loop)


# -- involution --------------------------------------------------------------


def _star_loop(mul, star):
    k = mul.shape[0]
    for x in range(k):
        if star[star[x]] != x:
            return np.array([x, -1], dtype=np.int64)
    for x in range(k):
        for y in range(k):
            if star[mul[x, y]] != mul[star[y], star[x]]:
                return np.array([x, y], dtype=np.int64)
    return np.array([-1, -1], dtype=np.int64)


def star_violation_numpy(mul: np.ndarray, star: np.ndarray) -> np.ndarray:
    k = mul.shape[0]
    bad = np.flatnonzero(star[star] != np.arange(k))
    if len(bad):
        return np.array([bad[0], -1], dtype=np.int64)
    lhs = star[mul]
    rhs = mul[star][:, star].T
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return np.array([bad[0, 0], bad[0, 1]], dtype=np.int64)
    return np.array([-1, -1], dtype=np.int64)


star_violation_numba = _njit(_star_loop)


# -- Green's preorders -------------------------------------------------------


def _green_loop(mul):
    k = mul.shape[0]
    wl = np.full((k, k), -1, dtype=np.int64)
    wr = np.full((k, k), -1, dtype=np.int64)
    for b in range(k):
        for x in range(k):
            a = mul[x, b]
            if wl[a, b] < 0:
                wl[a, b] = x
            a = mul[b, x]
            if wr[a, b] < 0:
                wr[a, b] = x
    return wl, wr


def green_tables_numpy(mul: np.ndarray):
    """``wl[a, b]`` = least x with ``x b = a``; ``wr[a, b]`` = least y with ``b y = a``."""
    k = mul.shape[0]
    wl = np.full((k, k), -1, dtype=np.int64)
    wr = np.full((k, k), -1, dtype=np.int64)
    for b in range(k):
        vals, first = np.unique(mul[:, b], return_index=True)
        wl[vals, b] = first
        vals, first = np.unique(mul[b, :], return_index=True)
        wr[vals, b] = first
    return wl, wr


green_tables_numba = _njit(_green_loop)


# -- inverses along an element ------------------------------------------------


def _along_loop(mul, wl, wr, literal_right):
    """Least left / right / two-sided inverse of a along d for every (a, d)."""
    k = mul.shape[0]
    left = np.full((k, k), -1, dtype=np.int64)
    right = np.full((k, k), -1, dtype=np.int64)
    both = np.full((k, k), -1, dtype=np.int64)
    for a in range(k):
        for d in range(k):
            da = mul[d, a]
            for b in range(k):
                lok = mul[mul[b, a], d] == d and wl[b, d] >= 0
                dab = mul[da, b]
                if literal_right:
                    rok = dab == b and wr[b, d] >= 0
                else:
                    rok = dab == d and wr[b, d] >= 0
                if lok and left[a, d] < 0:
                    left[a, d] = b
                if rok and right[a, d] < 0:
                    right[a, d] = b
                if lok and dab == d and wr[b, d] >= 0 and both[a, d] < 0:
                    both[a, d] = b
    return left, right, both


def along_tables_numpy(mul: np.ndarray, wl: np.ndarray, wr: np.ndarray, literal_right: bool = False):
    k = mul.shape[0]
    idx = np.arange(k)
    leq_l = wl >= 0  # [b, d]
    leq_r = wr >= 0
    left = np.full((k, k), -1, dtype=np.int64)
    right = np.full((k, k), -1, dtype=np.int64)
    both = np.full((k, k), -1, dtype=np.int64)
    for a in range(k):
        bad = mul[mul[:, a]]  # [b, d] -> (b a) d
        dab = bad.T  # [b, d] -> (d a) b
        lmask = (bad == idx[None, :]) & leq_l
        eq_d = dab == idx[None, :]
        if literal_right:
            rmask = (dab == idx[:, None]) & leq_r
        else:
            rmask = eq_d & leq_r
        hmask = lmask & eq_d & leq_r
        for mask, out in ((lmask, left), (rmask, right), (hmask, both)):
            has = mask.any(axis=0)
            out[a, has] = mask.argmax(axis=0)[has]
    return left, right, both


along_tables_numba = _njit(_along_loop)


# -- Penrose-type equations ---------------------------------------------------


def _penrose_loop(mul, star):
    """Bit mask per (a, x): 1 axa=a, 2 xax=x, 4 (ax)*=ax, 8 (xa)*=xa, 16 ax=xa."""
    k = mul.shape[0]
    out = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        for x in range(k):
            ax = mul[a, x]
            xa = mul[x, a]
            m = 0
            if mul[ax, a] == a:
                m |= 1
            if mul[xa, x] == x:
                m |= 2
            if star[ax] == ax:
                m |= 4
            if star[xa] == xa:
                m |= 8
            if ax == xa:
                m |= 16
            out[a, x] = m
    return out


def penrose_masks_numpy(mul: np.ndarray, star: np.ndarray) -> np.ndarray:
    k = mul.shape[0]
    idx = np.arange(k)
    ax = mul  # [a, x]
    xa = mul.T  # [a, x] -> x a
    out = np.zeros((k, k), dtype=np.int64)
    out |= (mul[ax, idx[:, None]] == idx[:, None]) * 1
    out |= (mul[xa, idx[None, :]] == idx[None, :]) * 2
    out |= (star[ax] == ax) * 4
    out |= (star[xa] == xa) * 8
    out |= (ax == xa) * 16
    return out


penrose_masks_numba = _njit(_penrose_loop)


EQ_INNER, EQ_OUTER, EQ_THREE, EQ_FOUR, EQ_COMMUTE = 1, 2, 4, 8, 16


# -- dispatch ---------------------------------------------------------------


def _as_table(mul) -> np.ndarray:
    return np.ascontiguousarray(mul, dtype=np.int64)


def associativity_violation(mul):
    mul = _as_table(mul)
    if USE_NUMBA:
        return associativity_violation_numba(mul)
    return associativity_violation_numpy(mul)


def star_violation(mul, star):
    mul, star = _as_table(mul), _as_table(star)
    if USE_NUMBA:
        return star_violation_numba(mul, star)
    return star_violation_numpy(mul, star)


def green_tables(mul):
    mul = _as_table(mul)
    if USE_NUMBA:
        return green_tables_numba(mul)
    return green_tables_numpy(mul)


def along_tables(mul, wl, wr, literal_right=False):
    mul, wl, wr = _as_table(mul), _as_table(wl), _as_table(wr)
    if USE_NUMBA:
        return along_tables_numba(mul, wl, wr, bool(literal_right))
    return along_tables_numpy(mul, wl, wr, literal_right)


def penrose_masks(mul, star):
    mul, star = _as_table(mul), _as_table(star)
    if USE_NUMBA:
        return penrose_masks_numba(mul, star)
    return penrose_masks_numpy(mul, star)
