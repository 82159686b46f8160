"""Cartan data and classical weight lattice for affine G2.

Index order is (0, 1, 2) throughout.  Classical weights are stored in the
fundamental-weight basis (Lambda_0, Lambda_1, Lambda_2); the delta-component
of an affine weight is never tracked.
"""

from __future__ import annotations

from dataclasses import dataclass

# Rows <h_i, alpha_j> for i, j in {0, 1, 2}.
CARTAN_MATRIX = (
    (2, -1, 0),
    (-1, 2, -1),
    (0, -3, 2),
)

# (alpha_i, alpha_i) for i in {0, 1, 2}: alpha_0, alpha_1 long, alpha_2 short.
ROOT_NORMS = (3, 3, 1)

# c = h_0 + 2 h_1 + h_2.
CENTRAL_COEFFS = (1, 2, 1)


@dataclass(frozen=True)
class CartanData:
    matrix: tuple = CARTAN_MATRIX
    root_norms: tuple = ROOT_NORMS
    central: tuple = CENTRAL_COEFFS


def cartan_entry(i: int, j: int) -> int:
    """Return <h_i, alpha_j>."""
    if i not in (0, 1, 2) or j not in (0, 1, 2):
        raise IndexError(f"Cartan index out of range: ({i}, {j})")
    return CARTAN_MATRIX[i][j]


@dataclass(frozen=True, order=True)
class ClassicalWeight:
    """Element m0*Lambda_0 + m1*Lambda_1 + m2*Lambda_2 of the classical lattice."""

    m0: int
    m1: int
    m2: int

    def wt(self, i: int) -> int:
        return (self.m0, self.m1, self.m2)[i]

    def __add__(self, other: "ClassicalWeight") -> "ClassicalWeight":
        return ClassicalWeight(self.m0 + other.m0, self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: "ClassicalWeight") -> "ClassicalWeight":
        return ClassicalWeight(self.m0 - other.m0, self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self) -> "ClassicalWeight":
        return ClassicalWeight(-self.m0, -self.m1, -self.m2)

    def is_dominant(self) -> bool:
        return self.m0 >= 0 and self.m1 >= 0 and self.m2 >= 0

    def to_json(self) -> dict:
        return {"m0": self.m0, "m1": self.m1, "m2": self.m2}


ZERO_WEIGHT = ClassicalWeight(0, 0, 0)


def level(w: ClassicalWeight) -> int:
    """<c, w> with c = h_0 + 2 h_1 + h_2."""
    return w.m0 + 2 * w.m1 + w.m2


def simple_root(j: int) -> ClassicalWeight:
    """cl(alpha_j): the j-th column of the Cartan matrix in the Lambda-basis."""
    return ClassicalWeight(*(CARTAN_MATRIX[i][j] for i in range(3)))


def from_classical_pair(m1: int, m2: int) -> ClassicalWeight:
    """Lift a G2 weight m1*Lambda_1 + m2*Lambda_2 to the level-zero classical weight."""
    return ClassicalWeight(-2 * m1 - m2, m1, m2)


def dominant_weights(l: int) -> set[ClassicalWeight]:
    """All dominant classical weights of level l."""
    if l < 0:
        raise ValueError("level must be nonnegative")
    out = set()
    for m1 in range(l // 2 + 1):
        for m2 in range(l - 2 * m1 + 1):
            out.add(ClassicalWeight(l - 2 * m1 - m2, m1, m2))
    return out
