# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled scalar kernels for the three link-budget laws.

Mirror of ``_kernels_py`` (the pure-Python fallback).  Expressions must
stay identical between the two files so both backends produce the same
bits; the extension is built with -ffp-contract=off for that reason.
"""

from libc.math cimport log10

BACKEND = "compiled"


cpdef double thorp_absorption_db_per_km(double f_khz):
    """Seawater acoustic absorption, dB/km, for f in kHz."""
    cdef double f2 = f_khz * f_khz
    return 0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) + 2.75e-4 * f2 + 0.003


cpdef double acoustic_tl_db(double spreading, double alpha_db_per_km, double d_m):
    """Spreading plus absorption loss, dB, at range d_m >= 1."""
    return spreading * log10(d_m) + alpha_db_per_km * d_m / 1000.0


cpdef double acoustic_rx_dbm(double sl_db, double spreading, double alpha_db_per_km,
                             double intensity_offset_db, double d_m):
    """Received sound power density, dBm re 1 mW/m^2."""
    return sl_db - acoustic_tl_db(spreading, alpha_db_per_km, d_m) + intensity_offset_db


cpdef double optical_rx_dbm(double ptx_dbm, double ext_db_per_m, double capture_db_1m,
                            double d_m):
    """Received optical power, dBm; geometric gain capped at 0 dB."""
    cdef double g = capture_db_1m - 20.0 * log10(d_m)
    if g > 0.0:
        g = 0.0
    return ptx_dbm - ext_db_per_m * d_m + g


cpdef double mi_rx_dbm(double const_db, double d_m):
    """Near-field coupled-coil received power, dBm: a pure 1/d^6 law."""
    return const_db - 60.0 * log10(d_m)


cpdef list acoustic_sweep(double sl_db, double spreading, double alpha_db_per_km,
                          double intensity_offset_db, double d0, double step, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t i
    cdef double d
    for i in range(n):
        d = d0 + i * step
        out.append(acoustic_rx_dbm(sl_db, spreading, alpha_db_per_km, intensity_offset_db, d))
    return out


cpdef list optical_sweep(double ptx_dbm, double ext_db_per_m, double capture_db_1m,
                         double d0, double step, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t i
    cdef double d
    for i in range(n):
        d = d0 + i * step
        out.append(optical_rx_dbm(ptx_dbm, ext_db_per_m, capture_db_1m, d))
    return out


cpdef list mi_sweep(double const_db, double d0, double step, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t i
    cdef double d
    for i in range(n):
        d = d0 + i * step
        out.append(mi_rx_dbm(const_db, d))
    return out
