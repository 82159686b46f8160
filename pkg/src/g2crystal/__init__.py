"""Exact combinatorics of level-l perfect crystals of type G2(1).

Modules cover the Cartan data and weight lattice, the signature rule for
tensor-product crystal operators, the A2 and G2 tableau crystals, the
affine model crystal with its bijection onto the direct sum of G2 crystals,
perfectness verification, and exact q-arithmetic checks for the level-1
module.
"""

__version__ = "0.1.0"
