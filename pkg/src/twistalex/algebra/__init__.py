"""Coefficient rings, Laurent polynomials in t^(1/2), rational functions and
polynomial-matrix determinants."""

from .rings import (CoeffRing, Integers, Rationals, PrimeField, ApproxComplex,
                    ZZ, QQ, CC, ring_from_name)
from .laurent import HalfLaurent, hl_add, hl_mul, hl_conjugate
from .ratfunc import RationalFunction, Degrees, rf_reduce, degrees
from .polymatrix import PolyMatrix, det_exact, det_numeric, det

__all__ = [
    'CoeffRing', 'Integers', 'Rationals', 'PrimeField', 'ApproxComplex',
    'ZZ', 'QQ', 'CC', 'ring_from_name',
    'HalfLaurent', 'hl_add', 'hl_mul', 'hl_conjugate',
    'RationalFunction', 'Degrees', 'rf_reduce', 'degrees',
    'PolyMatrix', 'det_exact', 'det_numeric', 'det',
]
