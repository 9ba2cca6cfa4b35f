"""Gamma-convexity toolkit: free polynomial evaluation, TV screen pencils,
Effros-Winkler separation and BMI boundary limits, backed by the C++ core."""

from ._gck import *  # noqa: F401,F403
from ._gck import __doc__  # noqa: F401
