"""Law registry, checker, and the stock law catalog."""

from . import catalog  # noqa: F401  (registers every law)
from .harness import *  # noqa: F401,F403
from .harness import __all__
