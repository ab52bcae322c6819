"""Kernel backend selection.

Imports the compiled extension when it is built, otherwise falls back to
the pure-Python implementation.  Both expose the same functions and
produce bit-identical values; ``BACKEND`` records which one is active.
"""

try:
    from . import _kernels as _impl
except ImportError:  # extension not built
    from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

thorp_absorption_db_per_km = _impl.thorp_absorption_db_per_km
acoustic_tl_db = _impl.acoustic_tl_db
acoustic_rx_dbm = _impl.acoustic_rx_dbm
optical_rx_dbm = _impl.optical_rx_dbm
mi_rx_dbm = _impl.mi_rx_dbm
acoustic_sweep = _impl.acoustic_sweep
optical_sweep = _impl.optical_sweep
mi_sweep = _impl.mi_sweep
