"""Flat-top beam synthesis for array-fed reflective intelligent surfaces."""

try:
    from ._risbeam import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _risbeam import *  # noqa: F401,F403  (in-tree build)
