"""Prime-field sweep kernels.

The compiled backend is used when its extension module imported cleanly;
set SESQ_PURE=1 to force the numpy fallback.  Both backends walk candidates
in the same canonical order and must return identical witnesses.
"""

import os

if os.environ.get("SESQ_PURE"):
    from . import _modp_py as _impl
else:
    try:
        from . import _modp_cy as _impl
    except ImportError:
        from . import _modp_py as _impl

backend_name = _impl.BACKEND
sweep_pair_iso = _impl.sweep_pair_iso
sweep_isometry = _impl.sweep_isometry
sweep_congruence = _impl.sweep_congruence
