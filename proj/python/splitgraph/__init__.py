"""Graph in-splits and out-splits with exact shift-equivalence and conjugacy checks."""

try:
    from ._splitgraph import *  # noqa: F401,F403
    from ._splitgraph import __doc__  # noqa: F401
except ImportError:  # extension built in-tree and placed on sys.path directly
    from _splitgraph import *  # noqa: F401,F403
