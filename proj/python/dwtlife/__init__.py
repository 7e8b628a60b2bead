"""Component life, reliability and maintenance scheduling for small ducted wind turbines."""

from ._core import *  # noqa: F401,F403
from ._core import NumericError, ValidationError  # noqa: F401
