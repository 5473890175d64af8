"""Kernel backend selection.

The compiled Cython kernel is preferred when its extension module imported
successfully; otherwise the pure-Python twin is used.  Set the environment
variable ``BELLSEP_PURE_PYTHON=1`` before import to force the fallback.
Both backends implement the same two functions (``jacobi_eigh``,
``jacobi_eigvalsh``) with identical numerical contracts.
"""

import os
from contextlib import contextmanager

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

if _ckernels is not None and os.environ.get("BELLSEP_PURE_PYTHON", "") not in (
    "1",
    "true",
    "yes",
):
    _active = _ckernels
else:
    _active = _pykernels


def active():
    """Module implementing the currently selected backend."""
    return _active


def active_name():
    return _active.BACKEND_NAME


def available():
    """Mapping of backend name to module, for benchmarks and parity tests."""
    return dict(_BACKENDS)


@contextmanager
def use(name):
    """Temporarily select a backend by name ("python" or "compiled")."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}")
    previous = _active
    _active = _BACKENDS[name]
    try:
        yield _active
    finally:
        _active = previous
