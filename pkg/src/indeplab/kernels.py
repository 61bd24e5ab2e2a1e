"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``INDEPLAB_PURE=1`` to force the pure-Python kernels even when the
compiled module is importable (used by the benchmark and by tests that pin
down the twin-equivalence contract).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("INDEPLAB_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

IMPLEMENTATION: str = _impl.IMPLEMENTATION

mu_table = _impl.mu_table
independent_set_masks = _impl.independent_set_masks
omega_masks = _impl.omega_masks
critical_masks = _impl.critical_masks
subset_max_difference = _impl.subset_max_difference
