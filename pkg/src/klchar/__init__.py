"""Exact characters of (k,l)-admissible configurations and their bosonic formulas."""
from .series import Monomial2, PoleError, Series, Window, WindowError
from .configurations import BoundaryVector, all_boundaries, char_bruteforce, char_infinite, char_recursion
from .operators import SimpleVector, apply_A, apply_B, apply_word, char_by_monomials, v_infinity, v_ini
from .goodmon import classify, cancellation_partner, good_words, is_good, verify_cancellation
from .bosonic import GoodParam, char_bosonic, char_l2_closed, char_l3_closed, param_to_word, word_to_param

__all__ = [
    "Monomial2", "PoleError", "Series", "Window", "WindowError",
    "BoundaryVector", "all_boundaries", "char_bruteforce", "char_infinite", "char_recursion",
    "SimpleVector", "apply_A", "apply_B", "apply_word", "char_by_monomials", "v_infinity", "v_ini",
    "classify", "cancellation_partner", "good_words", "is_good", "verify_cancellation",
    "GoodParam", "char_bosonic", "char_l2_closed", "char_l3_closed", "param_to_word", "word_to_param",
]
