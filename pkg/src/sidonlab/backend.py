"""Kernel backend selection: compiled extension when available, else pure Python.

Set SIDONLAB_BACKEND=python or =cython to force a choice; the default (auto)
prefers the compiled module and falls back silently.
"""

import os

from . import _kernel_py

_CHOICE = os.environ.get("SIDONLAB_BACKEND", "auto").lower()

if _CHOICE not in ("auto", "python", "cython"):
    raise ValueError(
        "SIDONLAB_BACKEND must be auto, python, or cython, got %r" % _CHOICE
    )

_compiled = None
if _CHOICE in ("auto", "cython"):
    try:
        from . import _kernel as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None
    if _CHOICE == "cython" and _compiled is None:
        raise ImportError(
            "SIDONLAB_BACKEND=cython but the compiled kernel is not built"
        )

kernel = _compiled if _compiled is not None else _kernel_py

BACKEND_NAME = "cython" if _compiled is not None else "python"


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "cython")
    return tuple(names)
