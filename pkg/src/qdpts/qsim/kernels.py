"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback is used when the
extension was not built or when ``QDPTS_PURE_PY`` is set (handy for the
backend-parity tests and the benchmark).
"""

import os

if os.environ.get("QDPTS_PURE_PY"):
    from . import _statevec_py as _impl
else:
    try:
        from . import _statevec_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _statevec_py as _impl

BACKEND = _impl.BACKEND
apply_1q = _impl.apply_1q
apply_cnot = _impl.apply_cnot
deriv_overlap = _impl.deriv_overlap
