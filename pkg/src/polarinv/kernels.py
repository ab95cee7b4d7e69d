"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python twin. Set ``POLARINV_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("POLARINV_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "python"

mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
divides = _impl.divides
find_divisor = _impl.find_divisor
lead_exponents = _impl.lead_exponents
axpy_shift = _impl.axpy_shift

__all__ = [
    "BACKEND", "mono_mul", "mono_div", "mono_lcm", "divides",
    "find_divisor", "lead_exponents", "axpy_shift",
]
