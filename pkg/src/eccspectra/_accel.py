"""Backend switch for the compiled kernels.

Set ``ECC_SPECTRA_NUMBA=0`` before import to force the pure-numpy path.
"""

import os

_DISABLED = {"0", "false", "no", "off"}

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


USE_NUMBA = HAVE_NUMBA and os.environ.get("ECC_SPECTRA_NUMBA", "1").strip().lower() not in _DISABLED


def backend():
    return "numba" if USE_NUMBA else "numpy"
