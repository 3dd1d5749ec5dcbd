"""Exact-rational certification of pathological maximally monotone operators
on sequence spaces.

All scalar values cross the boundary as canonical ``"p/q"`` strings; feed
them to :class:`fractions.Fraction` for arithmetic on the Python side.
"""

try:
    from ._monocert import *  # noqa: F401,F403  (installed wheel layout)
    from . import _monocert as _impl
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _monocert import *  # noqa: F401,F403
    import _monocert as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
