"""Backend selection for the GF(p) elimination kernels.

Prefers the compiled extension; falls back to pure Python.  Set
``INVARANK_FORCE_PURE=1`` to force the fallback (used by the backend
agreement tests and the benchmark).
"""

import os

if os.environ.get("INVARANK_FORCE_PURE") == "1":
    from ._gfpure import gf_matmul, gf_rank, gf_rref
    BACKEND = "python"
else:
    try:
        from ._gfcore import gf_matmul, gf_rank, gf_rref
        BACKEND = "cython"
    except ImportError:
        from ._gfpure import gf_matmul, gf_rank, gf_rref
        BACKEND = "python"

__all__ = ["gf_matmul", "gf_rank", "gf_rref", "BACKEND"]
