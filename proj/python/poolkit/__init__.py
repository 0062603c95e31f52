"""Failure-tolerant non-adaptive pooling designs.

Thin re-export of the compiled core. All element lists are 1-based, matching
the text formats of the CLI.
"""

try:
    from poolkit._core import *  # noqa: F401,F403
except ImportError:  # running from a build tree with the module on PYTHONPATH
    from _core import *  # noqa: F401,F403
