import os
import subprocess
import sys

import numpy as np
import pytest

from geninv import _kernels as K
from geninv.monoid import all_matrices, closure, table_from_matrices
from geninv.scalars import GF

from conftest import M

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")


def tables():
    yield "gf2", table_from_matrices(all_matrices(GF(2), 2))
    yield "gf3", table_from_matrices(all_matrices(GF(3), 2))
    yield "cyclic", closure([M([[1, 1], [0, 1]], GF(3))])


def same(x, y):
    if isinstance(x, tuple):
        return len(x) == len(y) and all(np.array_equal(u, v) for u, v in zip(x, y))
    return np.array_equal(x, y)


@needs_numba
@pytest.mark.parametrize("name,mon", list(tables()), ids=lambda v: v if isinstance(v, str) else "")
def test_backends_agree_on_monoids(name, mon):
    mul = np.ascontiguousarray(mon.mul)
    star = np.ascontiguousarray(mon.star if mon.star is not None else np.arange(mon.k))
    wl, wr = K.green_tables_numpy(mul)
    assert same(K.green_tables_numba(mul), (wl, wr))
    for lit in (False, True):
        assert same(K.along_tables_numba(mul, wl, wr, lit), K.along_tables_numpy(mul, wl, wr, lit))
    assert same(K.penrose_masks_numba(mul, star), K.penrose_masks_numpy(mul, star))
    assert same(K.associativity_violation_numba(mul), K.associativity_violation_numpy(mul))
    assert same(K.star_violation_numba(mul, star), K.star_violation_numpy(mul, star))


@needs_numba
@pytest.mark.parametrize("seed", range(8))
def test_backends_agree_on_random_tables(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(2, 7))
    mul = rng.integers(0, k, size=(k, k)).astype(np.int64)
    star = rng.permutation(k).astype(np.int64)
    assert same(K.associativity_violation_numba(mul), K.associativity_violation_numpy(mul))
    assert same(K.star_violation_numba(mul, star), K.star_violation_numpy(mul, star))
    wl, wr = K.green_tables_numpy(mul)
    assert same(K.green_tables_numba(mul), (wl, wr))
    assert same(K.penrose_masks_numba(mul, star), K.penrose_masks_numpy(mul, star))


def test_green_tables_are_least_witnesses():
    mon = table_from_matrices(all_matrices(GF(2), 2))
    wl, wr = K.green_tables(mon.mul)
    for a in range(mon.k):
        for b in range(mon.k):
            xs = np.flatnonzero(mon.mul[:, b] == a)
            ys = np.flatnonzero(mon.mul[b, :] == a)
            assert wl[a, b] == (xs[0] if len(xs) else -1)
            assert wr[a, b] == (ys[0] if len(ys) else -1)


@pytest.mark.parametrize("flag,backend", [("0", "numpy"), ("off", "numpy")])
def test_env_flag_selects_numpy(flag, backend):
    env = dict(os.environ, GENINV_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", "from geninv import _kernels as K; print(K.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == backend


def test_numpy_backend_full_pipeline():
    code = ("from geninv.verify import parse_universe, verify_theorem\n"
            "r = verify_theorem('T2.5', parse_universe('gf:2:2'))\n"
            "print(r.instances_checked, len(r.counterexamples), len(r.oracle_disagreements))")
    env = dict(os.environ, GENINV_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["16", "0", "0"]
