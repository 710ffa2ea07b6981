# conekit/__init__.py
"""
conekit: operator ideal norms over finite-dimensional l1/l2/linf spaces
and entanglement classes of linear maps between proper cones.
"""

__version__ = "0.1.0"

from conekit.config import ConekitConfig, get_config
from conekit.errors import ConekitError

__all__ = ["__version__", "ConekitConfig", "get_config", "ConekitError"]
