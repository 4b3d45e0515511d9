"""Selects the compiled reduction kernel, falling back to pure Python.

Set WEILDESCENT_FORCE_PYTHON=1 to skip the compiled extension (used by the
benchmark to compare both).
"""

import os

if os.environ.get("WEILDESCENT_FORCE_PYTHON"):
    from . import _pykernel as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

IMPL = _impl.IMPL
normal_form = _impl.normal_form
buchberger = _impl.buchberger
