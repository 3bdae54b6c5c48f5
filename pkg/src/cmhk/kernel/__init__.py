"""
Núcleo algébrico exato: racionais, polinômios, matrizes, polígonos e Hensel.
"""

from .numbers import (
    to_rational,
    format_rational,
    padic_valuation,
    unit_part,
    squarefree_part,
    reduce_mod,
    symmetric_residue,
    is_padic_square_rational,
)
from .polygons import LowerPolygon, newton_polygon_of_poly, rational_valuation
from .matrices import char_poly, berkowitz_charpoly, determinant
from .hensel import hensel_factor

__all__ = [
    'to_rational',
    'format_rational',
    'padic_valuation',
    'unit_part',
    'squarefree_part',
    'reduce_mod',
    'symmetric_residue',
    'is_padic_square_rational',
    'LowerPolygon',
    'newton_polygon_of_poly',
    'rational_valuation',
    'char_poly',
    'berkowitz_charpoly',
    'determinant',
    'hensel_factor',
]
