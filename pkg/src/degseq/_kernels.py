"""Select the kernel backend at import.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Set ``DEGSEQ_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

if os.environ.get("DEGSEQ_PURE_PYTHON", "") not in ("", "0"):
    backend = _pykernels
else:
    try:
        from . import _ckernels as backend
    except ImportError:
        backend = _pykernels

BACKEND_NAME = "compiled" if backend is not _pykernels else "python"
MAX_KERNEL_ORDER = backend.MAX_KERNEL_ORDER

hamiltonian_cycle = backend.hamiltonian_cycle
hamiltonian_path = backend.hamiltonian_path
cycle_of_length = backend.cycle_of_length
max_independent_set = backend.max_independent_set
canonical_labeling = backend.canonical_labeling
refine = backend.refine
