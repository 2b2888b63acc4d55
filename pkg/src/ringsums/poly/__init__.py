from .laurent import LaurentInU
from .polynomial import Poly, translate_poly

__all__ = ["LaurentInU", "Poly", "translate_poly"]
