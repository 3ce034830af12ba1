"""Select the enumeration kernel at import time.

Prefers the compiled Cython extension; falls back to the NumPy block
enumeration when the extension was not built.  ``BACKEND`` records which one
is active so reports, tests and the benchmark can tell them apart.
"""

try:
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _kernels_py as _impl

    BACKEND = "python"

signed_l1_enum = _impl.signed_l1_enum
