"""Backend selection for the hot kernels.

The compiled module is used when it imports; set ``QEXTREMAL_PURE_PYTHON=1``
to force the fallback.  Both backends return identical results.
"""
import os

if os.environ.get("QEXTREMAL_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
canonical_labeling = _impl.canonical_labeling
odd_walk_masks = _impl.odd_walk_masks
odd_closed_walks = _impl.odd_closed_walks
power_iteration = _impl.power_iteration
