"""Sporadica: finite fields, permutation groups, the Mathieu groups, the Leech lattice and moonshine."""

from .errors import SporadicaError

__version__ = "0.1.0"

__all__ = ["SporadicaError", "__version__"]
