"""Pure-Python scalar kernels for the three link-budget laws.

This is the fallback backend used when the compiled extension
(``iout_wakeup._kernels``) is not built.  The two backends must stay
bit-identical: every expression here is mirrored verbatim in
``_kernels.pyx``, and the extension is compiled with FP contraction off.

All kernels take pre-reduced scalar arguments (dB constants computed once
by the link modules) so the per-distance work is a handful of flops.
"""

from math import log10

BACKEND = "python"


def thorp_absorption_db_per_km(f_khz):
    """Seawater acoustic absorption, dB/km, for f in kHz."""
    f2 = f_khz * f_khz
    return 0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) + 2.75e-4 * f2 + 0.003


def acoustic_tl_db(spreading, alpha_db_per_km, d_m):
    """Spreading plus absorption loss, dB, at range d_m >= 1."""
    return spreading * log10(d_m) + alpha_db_per_km * d_m / 1000.0


def acoustic_rx_dbm(sl_db, spreading, alpha_db_per_km, intensity_offset_db, d_m):
    """Received sound power density, dBm re 1 mW/m^2.

    intensity_offset_db converts a received level in dB re 1 uPa into the
    density via the plane-wave impedance of the medium; the link module
    precomputes it as -90 - 10*log10(rho*c).
    """
    return sl_db - acoustic_tl_db(spreading, alpha_db_per_km, d_m) + intensity_offset_db


def optical_rx_dbm(ptx_dbm, ext_db_per_m, capture_db_1m, d_m):
    """Received optical power, dBm.

    capture_db_1m is the aperture/beam-footprint ratio at 1 m in dB
    (-inf for a fully misaligned receiver); the geometric gain is capped
    at 0 dB inside the region where the beam is narrower than the aperture.
    """
    g = capture_db_1m - 20.0 * log10(d_m)
    if g > 0.0:
        g = 0.0
    return ptx_dbm - ext_db_per_m * d_m + g


def mi_rx_dbm(const_db, d_m):
    """Near-field coupled-coil received power, dBm: a pure 1/d^6 law.

    const_db folds transmit power, coil geometry, misalignment and the
    calibration gain (-inf when the coils are orthogonal).
    """
    return const_db - 60.0 * log10(d_m)


def acoustic_sweep(sl_db, spreading, alpha_db_per_km, intensity_offset_db, d0, step, n):
    out = []
    for i in range(n):
        d = d0 + i * step
        out.append(acoustic_rx_dbm(sl_db, spreading, alpha_db_per_km, intensity_offset_db, d))
    return out


def optical_sweep(ptx_dbm, ext_db_per_m, capture_db_1m, d0, step, n):
    out = []
    for i in range(n):
        d = d0 + i * step
        out.append(optical_rx_dbm(ptx_dbm, ext_db_per_m, capture_db_1m, d))
    return out


def mi_sweep(const_db, d0, step, n):
    out = []
    for i in range(n):
        d = d0 + i * step
        out.append(mi_rx_dbm(const_db, d))
    return out
