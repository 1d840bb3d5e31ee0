"""Select the kernel backend once, at import time."""
from ._backend import HAS_NUMBA

if HAS_NUMBA:
    from ._kernels import (
        direct_march,
        mwright_series_arr,
        ptrap_integral_grid,
        ptrap_weights,
        wright_series_scalar,
    )
else:
    from ._kernels_np import (
        direct_march,
        mwright_series_arr,
        ptrap_integral_grid,
        ptrap_weights,
        wright_series_scalar,
    )

__all__ = [
    "HAS_NUMBA",
    "direct_march",
    "mwright_series_arr",
    "ptrap_integral_grid",
    "ptrap_weights",
    "wright_series_scalar",
]
