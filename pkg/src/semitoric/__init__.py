"""Exact SL2(Z) word algebra, toric fans and semitoric helices."""

from .errors import SemitoricError
from .fans import ToricFan, fan_classify_minimal, fan_validate
from .helix import SemitoricHelix, helix_classify_minimal, helix_validate, type7_from_seed
from .lattice import LatticeMatrix, LatticeVector
from .polygon import SemitoricPolygon, helix_to_polygon, polygon_to_helix, polygon_validate
from .standard_form import StandardForm, reduce
from .words import Twelfths, Word, parse_word

__version__ = "0.1.0"
