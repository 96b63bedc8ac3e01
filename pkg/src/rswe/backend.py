"""Kernel backend selection.

The package ships a compiled Cython core (``rswe._kernels``) and a numpy
fallback (``rswe._kernels_py``) with identical interfaces.  The compiled one
is picked at import time when available; :func:`use` switches the process
default, :func:`using` scopes a switch (handy for tests and benchmarks).
Switching is not thread-safe; do it before spawning workers.
"""

import contextlib

from . import _kernels_py

try:
    from . import _kernels
    HAVE_COMPILED = True
except ImportError:
    _kernels = None
    HAVE_COMPILED = False

_BACKENDS = {"python": _kernels_py}
if HAVE_COMPILED:
    _BACKENDS["compiled"] = _kernels

_active = _kernels if HAVE_COMPILED else _kernels_py


def resolve(name="auto"):
    """Return the kernel module for *name* ('auto', 'compiled' or 'python')."""
    if name == "auto":
        return _kernels if HAVE_COMPILED else _kernels_py
    try:
        return _BACKENDS[name]
    except KeyError:
        if name == "compiled":
            raise RuntimeError("compiled kernels are not available") from None
        raise ValueError(f"unknown backend {name!r}") from None


def active():
    """The kernel module currently in use."""
    return _active


def active_name():
    return "compiled" if _active is _kernels else "python"


def use(name):
    """Switch the process-wide backend; returns the previous module."""
    global _active
    prev = _active
    _active = resolve(name)
    return prev


@contextlib.contextmanager
def using(name):
    """Temporarily switch backends."""
    global _active
    prev = use(name)
    try:
        yield _active
    finally:
        _active = prev
