"""Generalized Tamari intervals, separating decompositions and their bijections.

Objects cross the boundary in the same text formats the ``gtam`` tool reads
and writes; walks are strings over ``N`` and ``E``.
"""

from ._core import *  # noqa: F401,F403
from ._core import ParseError, DomainError, CapExceeded, InvariantFailure  # noqa: F401
