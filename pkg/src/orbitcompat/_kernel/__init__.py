"""Engine selection: compiled extension when available, pure Python otherwise.

Set ORBITCOMPAT_KERNEL=pure to force the fallback (used by the benchmark and
the parity tests).  Both engines implement the same API and return identical
results; the reduced Groebner basis is unique, so this is checkable.
"""

import os

if os.environ.get("ORBITCOMPAT_KERNEL", "").lower() == "pure":
    from . import pure as _active
else:
    try:
        from . import _speedups as _active  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _active

BACKEND = _active.BACKEND_NAME
buchberger_raw = _active.buchberger
normal_form_raw = _active.normal_form
