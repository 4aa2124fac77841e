try:
    from ._bsgeo import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _bsgeo import *  # noqa: F401,F403  (in-tree build directory)
