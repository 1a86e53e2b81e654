"""Exact invariants of the hypersurface families H, V and W and their cohomology rings."""
from .lambda_ring import LambdaProduct, lp_degree, lp_expand, lp_order_at_one, lp_value_at_one
from .milnor_orlik import WeightSystem, milnor_number, monodromy_char_poly
from .families import FamilyInstance, betti_numbers, delta_closed_form, phi, phi_closed_form

__all__ = [
    "FamilyInstance",
    "LambdaProduct",
    "WeightSystem",
    "betti_numbers",
    "delta_closed_form",
    "lp_degree",
    "lp_expand",
    "lp_order_at_one",
    "lp_value_at_one",
    "milnor_number",
    "monodromy_char_poly",
    "phi",
    "phi_closed_form",
]
__version__ = "0.1.0"
