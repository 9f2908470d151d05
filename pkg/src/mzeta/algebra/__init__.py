from .poly import MultiPoly, VarTable, parse_poly, poly_arith, poly_substitute
from .series import PowerSeries, series_arith, series_invert

__all__ = [
    "MultiPoly",
    "VarTable",
    "PowerSeries",
    "parse_poly",
    "poly_arith",
    "poly_substitute",
    "series_arith",
    "series_invert",
]
