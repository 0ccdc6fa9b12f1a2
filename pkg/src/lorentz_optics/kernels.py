"""Backend selection for the batch 2x2 power kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise, or
when the environment variable ``LORENTZ_OPTICS_PURE_PYTHON`` is set to a
non-empty value other than ``0``, the numpy fallback ``_kernels_py`` is used.
"""

import os

from . import _kernels_py

_force_pure = os.environ.get("LORENTZ_OPTICS_PURE_PYTHON", "") not in ("", "0")

compiled = None
if not _force_pure:
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None

_impl = compiled if compiled is not None else _kernels_py

BACKEND = "cython" if compiled is not None else "python"

matpow = _impl.matpow
core_power = _impl.core_power
layer_power = _impl.layer_power
