"""Backend selection for the tableau kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module. Set ``STAIRCASE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernel as python_kernel
from ._pykernel import KernelError

compiled_kernel = None
if not os.environ.get("STAIRCASE_PURE_PYTHON"):
    try:
        from . import _ckernel as compiled_kernel
    except ImportError:
        compiled_kernel = None

active = compiled_kernel if compiled_kernel is not None else python_kernel
BACKEND = "cython" if active is compiled_kernel else "python"

__all__ = ["BACKEND", "KernelError", "active", "compiled_kernel", "python_kernel"]
