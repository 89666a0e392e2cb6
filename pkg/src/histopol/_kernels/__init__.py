"""Kernel backend selection.

The compiled Cython kernels are used when available; setting the environment
variable HISTOPOL_PURE_PYTHON (to anything non-empty) forces the numpy
fallback. Both backends expose the same functions and produce the same
results up to floating-point round-off; ``backend_name()`` reports which one
is active.
"""

import os

from histopol._kernels import numpy_backend

MONOMIAL = numpy_backend.MONOMIAL
CHEBYSHEV = numpy_backend.CHEBYSHEV

if os.environ.get("HISTOPOL_PURE_PYTHON"):
    _backend = numpy_backend
    _BACKEND_NAME = "numpy"
else:
    try:
        from histopol._kernels import _cykernels as _backend

        _BACKEND_NAME = "compiled"
    except ImportError:
        _backend = numpy_backend
        _BACKEND_NAME = "numpy"

kind_code = _backend.kind_code
exponent_arrays = _backend.exponent_arrays
eval_basis_matrix = _backend.eval_basis_matrix
disc_basis_integrals = _backend.disc_basis_integrals


def backend_name() -> str:
    return _BACKEND_NAME
