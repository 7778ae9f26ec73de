"""Subcube covering and polychromatic coloring toolkit."""

try:
    from ._cubecover import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: module sits next to this package
    from _cubecover import *  # noqa: F401,F403
