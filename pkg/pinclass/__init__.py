"""Decide whether a wreath-closed permutation class has finitely many simples."""

from .decision import decide_overall
from .errors import PinClassError
from .perm import Permutation, parse_permutation
from .schemas import FinitenessReport, Verdict

__version__ = "0.1.0"

__all__ = [
    "FinitenessReport",
    "Permutation",
    "PinClassError",
    "Verdict",
    "__version__",
    "decide_overall",
    "parse_permutation",
]
