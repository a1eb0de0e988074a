"""Synchronization and primitivity analysis of complete DFAs.

Thin re-export of the native extension. The interesting objects are
`Automaton`, `Partition`, the per-letter structure helpers, the
synchronization searches, and the `sweep`/`check_claims` harness.
"""

from synckit._core import *  # noqa: F401,F403
from synckit._core import __version__  # noqa: F401
