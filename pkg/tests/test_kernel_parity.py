"""Compiled kernels and the pure-Python fallback must agree bit for bit."""

import math
import random

import pytest

from iout_wakeup import _kernels_py

compiled = pytest.importorskip("iout_wakeup._kernels")


def test_backend_labels():
    assert _kernels_py.BACKEND == "python"
    assert compiled.BACKEND == "compiled"


def test_scalar_kernels_bit_identical():
    rng = random.Random(101)
    for _ in range(2000):
        f = rng.uniform(0.1, 100.0)
        assert compiled.thorp_absorption_db_per_km(f) == _kernels_py.thorp_absorption_db_per_km(f)
        sl = rng.uniform(150.0, 220.0)
        k = rng.choice([10.0, 15.0, 20.0])
        alpha = rng.uniform(0.003, 20.0)
        off = rng.uniform(-160.0, -140.0)
        d = rng.uniform(1.0, 10000.0)
        assert compiled.acoustic_tl_db(k, alpha, d) == _kernels_py.acoustic_tl_db(k, alpha, d)
        assert compiled.acoustic_rx_dbm(sl, k, alpha, off, d) == _kernels_py.acoustic_rx_dbm(
            sl, k, alpha, off, d
        )
        ptx = rng.uniform(0.0, 30.0)
        ext = rng.uniform(0.0, 10.0)
        cap = rng.uniform(-30.0, 30.0)
        assert compiled.optical_rx_dbm(ptx, ext, cap, d) == _kernels_py.optical_rx_dbm(
            ptx, ext, cap, d
        )
        const = rng.uniform(-40.0, 40.0)
        assert compiled.mi_rx_dbm(const, d) == _kernels_py.mi_rx_dbm(const, d)


def test_sentinel_propagation_matches():
    neg_inf = float("-inf")
    assert compiled.optical_rx_dbm(20.0, 0.1, neg_inf, 5.0) == neg_inf
    assert _kernels_py.optical_rx_dbm(20.0, 0.1, neg_inf, 5.0) == neg_inf
    assert compiled.mi_rx_dbm(neg_inf, 5.0) == neg_inf
    assert math.isinf(_kernels_py.mi_rx_dbm(neg_inf, 5.0))


def test_sweep_kernels_bit_identical():
    args_acoustic = (190.0, 20.0, 0.8051805069090371, -151.7609125905568, 1.0, 0.37, 5000)
    assert compiled.acoustic_sweep(*args_acoustic) == _kernels_py.acoustic_sweep(*args_acoustic)
    args_optical = (23.979400086720375, 0.655784667673911, 12.646, 0.1, 0.11, 5000)
    assert compiled.optical_sweep(*args_optical) == _kernels_py.optical_sweep(*args_optical)
    args_mi = (29.607, 0.5, 0.21, 5000)
    assert compiled.mi_sweep(*args_mi) == _kernels_py.mi_sweep(*args_mi)
