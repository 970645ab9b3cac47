"""Bethe-ansatz spectra of repulsive bosons in a hard-wall box and the
quantum Otto heat engine built on top of them.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__version__ = "1.0.0"
__doc__ = _core_doc
