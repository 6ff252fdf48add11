"""Go pattern networks: build weighted directed networks of canonical 3x3
move patterns from SGF game records, analyze their Google-matrix spectra,
and test whether two game databases come from the same kind of player."""

from ._gonet import *  # noqa: F401,F403
from ._gonet import __version__  # noqa: F401
