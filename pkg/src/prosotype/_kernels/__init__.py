"""Kernel backend selection.

The compiled extension is preferred when it was built; otherwise the numpy
fallback is used. `BACKEND` names the active implementation.
"""

try:
    from . import _acf as _impl

    BACKEND = "compiled"
except ImportError:
    from . import pure as _impl

    BACKEND = "pure"

best_peaks = _impl.best_peaks


def get_backend(name):
    """Return a specific kernel module ('compiled' or 'pure').

    Raises ImportError when the compiled extension is unavailable.
    """
    if name == "pure":
        from . import pure

        return pure
    if name == "compiled":
        from . import _acf

        return _acf
    raise ValueError(f"unknown kernel backend '{name}'")
