"""Word-class dominance and readability analytics for scientific abstracts."""

try:
    from ._viralstyle import *  # noqa: F401,F403
    from ._viralstyle import __version__  # noqa: F401
except ImportError:  # in-tree builds put the module next to the package
    from _viralstyle import *  # noqa: F401,F403
    from _viralstyle import __version__  # noqa: F401
