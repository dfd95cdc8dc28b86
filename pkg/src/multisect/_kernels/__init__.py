"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable MULTISECT_PURE=1 forces the pure-Python backend.
Both backends expose the same two functions, `conv` and `series_div`.
"""

import os

from . import pure as _pure

if os.environ.get("MULTISECT_PURE"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

conv = _impl.conv
series_div = _impl.series_div
BACKEND = _impl.BACKEND
