"""Tensor square of the level-1 module, singular vectors, fusion identities.

Vectors in the tensor square carry coefficients that are Laurent
polynomials in the spectral variables x, y over the exact q-field.  The
comultiplication sends a raising generator to e otimes t^-1 + 1 otimes e
and a lowering generator to f otimes 1 + t otimes f; the affine generators
pick up the spectral twist x (resp. y) on the first (resp. second) factor.

Everything here is verification: the intertwiner itself is never built;
only its scalar action on the highest-weight components, pinned by the
itemized operator-string identities, is checked against the transcribed
coefficient polynomials.
"""

from __future__ import annotations

from functools import lru_cache

from .level1 import (
    BASIS, E_TABLE, F_TABLE, NORMS, _WT12, nullspace, qint, weight_pairing,
)
from .qlaurent import QRat, qfactorial

_ONE = QRat.one()
_Q = QRat.q_power


class XY:
    """Laurent polynomial in x, y with exact q-rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not c.is_zero():
                    self.terms[k] = c

    @staticmethod
    def monomial(dx, dy, coeff=_ONE):
        return XY({(dx, dy): coeff})

    @staticmethod
    def const(c):
        if isinstance(c, int):
            c = QRat(c)
        return XY({(0, 0): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            c2 = out.get(k, QRat.zero()) + c
            if c2.is_zero():
                out.pop(k, None)
            else:
                out[k] = c2
        return XY(out)

    def __sub__(self, other):
        return self + other.scale(-_ONE)

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                c = out.get(k, QRat.zero()) + c1 * c2
                if c.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = c
        return XY(out)

    def scale(self, c: QRat):
        if c.is_zero():
            return XY()
        return XY({k: c * v for k, v in self.terms.items()})

    def shift(self, dx, dy):
        return XY({(a + dx, b + dy): c for (a, b), c in self.terms.items()})

    def swap(self):
        """Exchange the two spectral variables."""
        return XY({(b, a): c for (a, b), c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "XY(0)"
        bits = []
        for (a, b) in sorted(self.terms):
            bits.append(f"x^{a} y^{b} * ({self.terms[(a, b)]})")
        return "XY(" + " + ".join(bits) + ")"


X = XY.monomial(1, 0)
Y = XY.monomial(0, 1)


def xy_q(k: int) -> XY:
    return XY.const(_Q(k))


# -- tensor vectors -------------------------------------------------------


def tvec(a, b, coeff=None):
    return {(a, b): coeff if coeff is not None else XY.const(_ONE)}


def tadd(u, v):
    out = dict(u)
    for k, c in v.items():
        c2 = out.get(k)
        c2 = c if c2 is None else c2 + c
        if c2.is_zero():
            out.pop(k, None)
        else:
            out[k] = c2
    return out


def tscale(c, u):
    if isinstance(c, QRat):
        c = XY.const(c)
    out = {}
    for k, v in u.items():
        w = c * v
        if not w.is_zero():
            out[k] = w
    return out


def tsub(u, v):
    return tadd(u, tscale(XY.const(-_ONE), v))


def tensor_apply(gen, u, spectral: bool = True):
    """Apply a generator through the comultiplication, with spectral twist.

    For the affine color the first factor carries x and the second y; the
    finite colors are untwisted.  Pass ``spectral=False`` to drop the twist.
    """
    kind, i = gen[0], gen[1]
    twist = 1 if (spectral and i == 0) else 0
    out = {}

    def put(key, coeff):
        c2 = out.get(key)
        c2 = coeff if c2 is None else c2 + coeff
        if c2.is_zero():
            out.pop(key, None)
        else:
            out[key] = c2

    if kind == "f":
        for (a, b), c in u.items():
            for a2, coef in F_TABLE[i].get(a, ()):
                put((a2, b), c * XY.monomial(-twist, 0, coef))
            tw = _Q(NORMS[i] * weight_pairing(i, a))
            for b2, coef in F_TABLE[i].get(b, ()):
                put((a, b2), c * XY.monomial(0, -twist, tw * coef))
        return out
    if kind == "e":
        for (a, b), c in u.items():
            tw = _Q(-NORMS[i] * weight_pairing(i, b))
            for a2, coef in E_TABLE[i].get(a, ()):
                put((a2, b), c * XY.monomial(twist, 0, coef * tw))
            for b2, coef in E_TABLE[i].get(b, ()):
                put((a, b2), c * XY.monomial(0, twist, coef))
        return out
    if kind == "t":
        s = gen[2]
        for (a, b), c in u.items():
            w = weight_pairing(i, a) + weight_pairing(i, b)
            put((a, b), c * XY.const(_Q(NORMS[i] * s * w)))
        return out
    raise ValueError(f"unknown generator {gen!r}")


def tensor_divided(kind, i, k, u, spectral=True):
    for _ in range(k):
        u = tensor_apply((kind, i), u, spectral)
    fac = qfactorial(k, NORMS[i]).inv()
    return tscale(fac, u)


def tensor_weight(u):
    wts = {(_WT12[a][0] + _WT12[b][0], _WT12[a][1] + _WT12[b][1]) for (a, b) in u}
    if len(wts) > 1:
        raise ArithmeticError("tensor vector is not weight homogeneous")
    return wts.pop() if wts else None


# -- singular vectors ------------------------------------------------------


def _u_2la1():
    return tvec(1, 1)


def _u_3la2():
    return tadd(tvec(1, 2), tvec(2, 1, XY.const(-_Q(3))))


def _u_2la2():
    b22, b32 = qint(2, 2), qint(3, 2)
    out = tvec(1, 5)
    out = tadd(out, tvec(2, 4, XY.const(-_Q(3))))
    out = tadd(out, tvec(3, 3, XY.const(b22 / b32 * _Q(4))))
    out = tadd(out, tvec(4, 2, XY.const(-_Q(7))))
    out = tadd(out, tvec(5, 1, XY.const(_Q(10))))
    return out


def _u_la1_3():
    b21, b32 = qint(2, 1), qint(3, 2)
    out = tvec(1, 8)
    out = tadd(out, tvec(2, 6, XY.const(-b21 * _Q(6))))
    out = tadd(out, tvec(3, 4, XY.const(b21 / b32 * _Q(5))))
    out = tadd(out, tvec(4, 3, XY.const(-(b21 / b32) * _Q(6))))
    out = tadd(out, tvec(6, 2, XY.const(b21 * _Q(9))))
    out = tadd(out, tvec(8, 1, XY.const(-_Q(12))))
    return out


def _u_0_2_known():
    """The transcribed weight-zero singular vector, minus its garbled terms."""
    b21, b22, b32 = qint(2, 1), qint(2, 2), qint(3, 2)
    inv32 = b32.inv()
    comps = {
        (1, -1): _ONE, (2, -2): -_Q(3), (3, -3): _Q(2) * inv32,
        (4, -4): -_Q(3) * inv32, (5, -5): _Q(6) * inv32, (6, -6): _Q(6),
        (7, 7): -_Q(6) / (b22 * b32), (8, 8): -_Q(6) / b21,
        (-5, 5): _Q(8) * inv32, (-6, 6): _Q(12), (-4, 4): -_Q(11) * inv32,
        (-3, 3): _Q(12) * inv32, (-2, 2): -_Q(15), (-1, 1): _Q(18),
        (8, 9): -_Q(6) / (b21 * b21), (9, 8): -_Q(6) / (b21 * b21),
    }
    return {k: XY.const(c) for k, c in comps.items()}


@lru_cache(maxsize=None)
def solve_u02():
    """Resolve the two garbled coefficients of the weight-zero vector.

    The components on the two mixed weight-zero pairs carry an undefined
    bracket in the source table; they are pinned by solving for the unique
    weight-zero vector killed by both finite raising operators that has the
    transcribed leading component and no component on the pure extra pair.
    Returns (vector, coefficient) with the shared resolved coefficient.
    """
    pairs = [(a, b) for a in BASIS for b in BASIS
             if (_WT12[a][0] + _WT12[b][0], _WT12[a][1] + _WT12[b][1]) == (0, 0)]
    index = {p: n for n, p in enumerate(pairs)}
    rows = []
    for i in (1, 2):
        images = {}
        for p in pairs:
            img = tensor_apply(("e", i), tvec(*p), spectral=False)
            for k, c in img.items():
                images.setdefault(k, {})[p] = c.terms.get((0, 0), QRat.zero())
        for k, row in images.items():
            rows.append([row.get(p, QRat.zero()) for p in pairs])
    kern = nullspace(rows, len(pairs))
    if len(kern) != 2:
        raise ArithmeticError(f"weight-zero singular space has dimension {len(kern)}")
    # normalize: coefficient 1 on (1, -1), coefficient 0 on (9, 9)
    a, b = kern
    ia, ib = index[(1, -1)], index[(9, 9)]
    det = a[ia] * b[ib] - b[ia] * a[ib]
    if det.is_zero():
        raise ArithmeticError("cannot normalize the weight-zero singular vector")
    ca = b[ib] / det
    cb = -a[ib] / det
    sol = [ca * x + cb * y for x, y in zip(a, b)]
    vecxy = {p: XY.const(c) for p, c in zip(pairs, sol) if not c.is_zero()}
    coeff = sol[index[(7, 8)]]
    return vecxy, coeff


def singular_vectors() -> dict:
    """The eight highest-weight vectors of the tensor square, by name."""
    u02, _ = solve_u02()
    return {
        "u_2La1": _u_2la1(),
        "u_3La2": _u_3la2(),
        "u_2La2": _u_2la2(),
        "u_La1_1": tvec(1, 9),
        "u_La1_2": tvec(9, 1),
        "u_La1_3": _u_la1_3(),
        "u_0_1": tvec(9, 9),
        "u_0_2": u02,
    }


EXPECTED_SINGULAR_WEIGHTS = {
    "u_2La1": (2, 0), "u_3La2": (0, 3), "u_2La2": (0, 2),
    "u_La1_1": (1, 0), "u_La1_2": (1, 0), "u_La1_3": (1, 0),
    "u_0_1": (0, 0), "u_0_2": (0, 0),
}


def verify_singular() -> dict:
    """Each named vector is killed by both finite raising operators and has
    the stated weight; the weight multiset matches the decomposition."""
    report = {"vectors": {}, "pass": True}
    vecs = singular_vectors()
    for name, u in vecs.items():
        killed = all(not tensor_apply(("e", i), u, spectral=False) for i in (1, 2))
        wt = tensor_weight(u)
        ok = killed and wt == EXPECTED_SINGULAR_WEIGHTS[name]
        report["vectors"][name] = {"pass": ok, "weight": wt, "killed": killed}
        report["pass"] &= ok
    mult = sorted(EXPECTED_SINGULAR_WEIGHTS.values())
    report["decomposition"] = mult == sorted([(2, 0), (0, 3), (0, 2),
                                              (1, 0), (1, 0), (1, 0), (0, 0), (0, 0)])
    # the transcribed partial vector agrees with the solved one off the garbled terms
    u02, coeff = solve_u02()
    known = _u_0_2_known()
    diff = tsub(u02, known)
    ok = all(k in ((7, 8), (8, 7)) for k in diff)
    report["u02_partial_match"] = ok
    report["u02_coefficient"] = str(coeff)
    report["pass"] &= ok and report["decomposition"]
    return report


# -- the fusion identities -------------------------------------------------


def _string(ops, u):
    """Apply [(kind, color, power), ...] right to left with divided powers."""
    for kind, i, k in reversed(ops):
        u = tensor_divided(kind, i, k, u)
    return u


STR_F = (("f", 0, 2), ("f", 1, 1), ("f", 2, 3), ("f", 1, 1))
# the raising string's unsubscripted divided square is color 1, by weight
# bookkeeping: nine color-2 and two affine steps force six color-1 steps
STR_E = (("e", 1, 1), ("e", 2, 3), ("e", 1, 2), ("e", 2, 3), ("e", 0, 1),
         ("e", 1, 2), ("e", 2, 3), ("e", 1, 1), ("e", 0, 1))
STR_F0 = (("f", 0, 1),)
STR_F02 = (("f", 0, 2),)
STR_LONG = (("f", 1, 2), ("f", 2, 6), ("f", 1, 4), ("f", 2, 6), ("f", 1, 2),
            ("f", 0, 2), ("f", 1, 1), ("f", 2, 2), ("f", 1, 1), ("f", 2, 1),
            ("f", 0, 1), ("f", 1, 1), ("f", 2, 3), ("f", 1, 1), ("f", 0, 1))
STR_14 = (("f", 0, 2), ("f", 1, 1), ("f", 2, 3), ("f", 1, 2), ("f", 2, 3))
# the transcribed final divided square annihilates the source and is one
# color-2 step short of the stated weight; the single step reproduces the
# transcribed coefficient exactly
STR_15 = (("f", 0, 2), ("f", 1, 1), ("f", 2, 3), ("f", 1, 1), ("f", 2, 1))

RESOLUTIONS = {
    6: "coefficient resolved to [2]_1([2]_1+[2]_2)(x-q^6 y)(x+y); the transcribed "
       "value omits the (x+y) factor and misprints the scalar, and fails the "
       "intertwiner consistency relation that the resolved value satisfies",
    12: "extremal target normalized as the plain lowest tensor pair; the "
        "transcribed coefficient carries an extra (xy)^4 from the twisted string "
        "normalization of the target",
    13: "same normalization as item 12",
    15: "operator string reconstructed by weight bookkeeping (final lowering "
        "power 1, not 2); the transcribed string annihilates the source",
}


def extract_multiple(u, target) -> XY | None:
    """Coefficient of the pure tensor ``target``; None if anything strays."""
    out = XY()
    for k, c in u.items():
        if k == target:
            out = c
        else:
            return None
    return out


def _b21():
    return qint(2, 1)


def fusion_items() -> dict:
    """The fifteen itemized identities: (string, source, target, coefficient)."""
    b21, b22 = qint(2, 1), qint(2, 2)
    sing = singular_vectors()
    x2 = X * X
    y2 = Y * Y
    xy = X * Y
    q = xy_q
    items = {
        1: (STR_F, "u_La1_1", (1, 1), XY.monomial(-1, -1, b21 * _Q(-3))),
        2: (STR_F, "u_La1_2", (1, 1), XY.monomial(-1, -1, b21 * _Q(-3))),
        3: (STR_F, "u_La1_3", (1, 1),
            (X - Y.scale(_Q(6))) * (X + Y.scale(_Q(12))) *
            XY.monomial(-2, -2, b21 * _Q(-6))),
        4: (STR_E, "u_La1_1", (1, 1), Y.scale(b21) * (X + Y)),
        5: (STR_E, "u_La1_2", (1, 1), X.scale(b21 * _Q(-6)) * (X + Y)),
        6: (STR_E, "u_La1_3", (1, 1),
            ((X - Y.scale(_Q(6))) * (X + Y)).scale(b21 * (b21 + b22))),
        7: (STR_F0, "u_La1_1", (1, 1), XY.monomial(0, -1, b21 * _Q(-6))),
        8: (STR_F0, "u_La1_2", (1, 1), XY.monomial(-1, 0, b21)),
        9: (STR_F0, "u_La1_3", (1, 1), XY()),
        10: (STR_F02, "u_0_1", (1, 1), XY.monomial(-1, -1, b21 * b21 * _Q(-3))),
        11: (STR_F02, "u_0_2", (1, 1),
             (x2 + y2.scale(_Q(30))) * XY.monomial(-2, -2, _Q(-12))),
        12: (STR_LONG, "u_0_1", (-1, -1),
             ((y2.scale(_Q(6)) + x2)
              * xy.scale(b21 * b21 * (_Q(4) + _Q(2) + _ONE) * _Q(-8))).shift(-4, -4)),
        13: (STR_LONG, "u_0_2", (-1, -1),
             ((y2.scale(_Q(22) + _Q(18))
               + xy.scale((_Q(6) + _ONE) * (_Q(16) - _Q(14) + _Q(12) - 2 * _Q(10)
                                            + _Q(8) - 2 * _Q(6) + _Q(4) - _Q(2) + _ONE))
               + x2.scale(_Q(4) + _ONE))
              * xy.scale(b22 * (_Q(4) + _Q(2) + _ONE) * _Q(-10))).shift(-4, -4)),
        14: (STR_14, "u_3La2", (1, 1),
             (X - Y.scale(_Q(6))) * (X + Y) * XY.monomial(-2, -2, _Q(-3))),
        15: (STR_15, "u_2La2", (1, 1),
             (X - Y.scale(_Q(6))) * (X - Y.scale(_Q(10))) *
             XY.monomial(-2, -2, (_Q(4) + _Q(2) + _ONE) * _Q(-8))),
    }
    return {"singular": sing, "items": items}


def verify_fusion_identities() -> dict:
    """Each itemized identity as an exact equality in the spectral variables.

    The two long-string items land on the extremal pair of the top component
    (named by the highest vector of the component); they are
    verified exactly there.
    """
    data = fusion_items()
    sing = data["singular"]
    report = {"items": {}, "pass": True}
    for n, (ops, src, target, expected) in data["items"].items():
        img = _string(ops, sing[src])
        got = XY() if not img else extract_multiple(img, target)
        ok = got == expected
        report["items"][n] = {"pass": ok}
        if not ok:
            report["items"][n]["got"] = repr(got)
            report["items"][n]["expected"] = repr(expected)
        report["pass"] &= ok
    return report


def fusion_vectors(family: str) -> list[XY]:
    """Computed coefficient vectors v_i(x, y) for one item family."""
    data = fusion_items()
    sing = data["singular"]
    items = data["items"]
    groups = {"F": (1, 2, 3), "E": (4, 5, 6), "f0": (7, 8, 9),
              "f02": (10, 11), "long": (12, 13)}
    out = []
    for n in groups[family]:
        ops, src, target, _ = items[n]
        img = _string(ops, sing[src])
        out.append(extract_multiple(img, target) if img else XY())
    return out


# -- the transcribed coefficient polynomials of the intertwiner ----------


def _zpoly(coeffs) -> list[QRat]:
    """Coefficient list [c_0, c_1, ...] in z."""
    return [c if isinstance(c, QRat) else QRat(c) for c in coeffs]


def _zmul(a, b):
    out = [QRat.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _zlin(c0, c1):
    """c0 + c1*z."""
    return _zpoly([c0, c1])


@lru_cache(maxsize=None)
def a_polynomials() -> dict:
    """The transcribed scalar polynomials in z = x/y, one per component."""
    q = _Q
    one = _ONE
    f12 = _zlin(one, -q(12))  # (1 - q^12 z)
    f10 = _zlin(one, -q(10))
    f8 = _zlin(one, -q(8))
    f6 = _zlin(one, -q(6))
    g10 = _zlin(-q(10), one)  # (z - q^10)
    g6 = _zlin(-q(6), one)

    a = {}
    a["2La1"] = _zmul(_zmul(f12, f10), _zmul(f8, f6))
    a["3La2"] = _zmul(_zmul(f12, f10), _zmul(f8, g6))
    a["2La2"] = _zmul(_zmul(f12, g10), _zmul(f8, g6))

    c61 = q(6) - one          # (q^6 - 1)
    c21 = q(2) + one          # (q^2 + 1)
    c121 = q(12) - one
    c41 = q(4) + one

    a["L11"] = _zmul(f12, _zmul(_zpoly([QRat.zero(), c61 * c21]),
                                _zlin(-(q(4) - q(2) + one),
                                      -(q(16) - q(14) + q(12) - q(10) - q(6)))))
    a["L12"] = _zmul(f12, _zmul(_zpoly([q(6)]), _zmul(_zlin(one, -one),
                     _zpoly([one, q(12) - q(6) - q(4) - q(2), q(12)]))))
    a["L13"] = _zmul(f12, _zmul(_zpoly([QRat.zero(), q(3) * c61]), _zlin(-one, one)))
    a["L21"] = _zmul(f12, _zmul(_zpoly([q(6)]), _zmul(_zlin(one, -one),
                     _zpoly([one, -(q(10) + q(8) + q(6) - one), q(12)]))))
    a["L22"] = _zmul(f12, _zmul(_zpoly([QRat.zero(), c61 * c21]),
                                _zlin(q(10) + q(6) - q(4) + q(2) - one,
                                      -q(16) + q(14) - q(12))))
    a["L23"] = _zmul(f12, _zmul(_zpoly([QRat.zero(), q(3) * c61]), _zlin(-one, one)))
    a["L31"] = _zmul(f12, _zmul(_zpoly([QRat.zero(), q(9) * c121 * c41 * c21]),
                                _zmul(_zlin(one, -one), g6)))
    a["L32"] = _zmul(f12, _zmul(_zpoly([q(3) * c121 * c41 * c21]),
                                _zmul(_zlin(one, -one), _zlin(q(6), -one))))
    a["L33"] = _zmul(f12, _zmul(g6, _zpoly([q(12),
                     q(18) - q(12) - q(10) - q(8) - q(6) + one, q(6)])))

    big = q(36) - q(30) + q(22) + q(20) + 2 * q(18) + q(16) + q(14) - q(6) + one
    a["Z11"] = _zpoly([q(6), -q(6) * c41 * c21, big, -q(24) * c41 * c21, q(30)])
    a["Z12"] = _zmul(_zpoly([QRat.zero(), -q(3) * c121 * (q(6) + one)]),
                     _zmul(_zlin(one, -one), _zlin(one, one)))
    a["Z21"] = _zmul(_zmul(_zpoly([-q(3) * c61 / (q(4) - q(2) + one)]),
                           _zmul(_zlin(one, -one), _zlin(one, one))),
                     _zpoly([q(22) + q(18),
                             q(40) - q(38) + q(36) - q(34) - q(30) - q(26)
                             - q(20) - q(14) - q(10) - q(6) + q(4) - q(2) + one,
                             q(22) + q(18)]))
    a["Z22"] = _zpoly([q(30), -q(24) * c41 * c21, big, -q(6) * c41 * c21, q(6)])
    return a


def _zeval(poly, z: QRat) -> QRat:
    out = QRat.zero()
    for k, c in enumerate(poly):
        out = out + c * z ** k
    return out


def _z_to_xy(poly, clear: int) -> XY:
    """poly(x/y) * y^clear as a Laurent polynomial in x, y."""
    out = XY()
    for k, c in enumerate(poly):
        out = out + XY.monomial(k, clear - k, c)
    return out


def rmatrix_checks() -> dict:
    """Consistency relations, kernel facts at z = q^6, and nonvanishing.

    The matrix relations take the derived orientation: for an operator
    string S with S u^i = v_i(x, y) u_top, intertwining forces
    v_i(x, y) a_top(z) = sum_j a_ij v_j(y, x).
    """
    a = a_polynomials()
    report = {"pass": True}

    def matrix_relation(name, vecs, rows, top="2La1"):
        clear = max(len(a[top]), *(len(a[r]) for row in rows for r in row)) + 1
        atop = _z_to_xy(a[top], clear)
        bad = []
        for i, vi in enumerate(vecs):
            lhs = vi * atop
            rhs = XY()
            for j, vj in enumerate(vecs):
                rhs = rhs + _z_to_xy(a[rows[i][j]], clear) * vj.swap()
            if lhs != rhs:
                bad.append(i + 1)
        report[name] = {"pass": not bad, "failures": bad}
        report["pass"] &= not bad

    l_rows = [["L11", "L12", "L13"], ["L21", "L22", "L23"], ["L31", "L32", "L33"]]
    z_rows = [["Z11", "Z12"], ["Z21", "Z22"]]
    matrix_relation("relation_F_family", fusion_vectors("F"), l_rows)
    matrix_relation("relation_E_family", fusion_vectors("E"), l_rows)
    matrix_relation("relation_f0_family", fusion_vectors("f0"), l_rows)
    matrix_relation("relation_f02_family", fusion_vectors("f02"), z_rows)
    matrix_relation("relation_long_family", fusion_vectors("long"), z_rows)

    # proportionality relations between the one-dimensional components
    clear = 5
    x_q6y = X - Y.scale(_Q(6))
    y_q6x = Y - X.scale(_Q(6))
    x_q10y = X - Y.scale(_Q(10))
    y_q10x = Y - X.scale(_Q(10))
    ok1 = x_q6y * _z_to_xy(a["2La1"], clear) == _z_to_xy(a["3La2"], clear) * y_q6x
    ok2 = (x_q6y * x_q10y * _z_to_xy(a["2La1"], clear)
           == _z_to_xy(a["2La2"], clear) * y_q6x * y_q10x)
    report["relation_3La2"] = {"pass": ok1}
    report["relation_2La2"] = {"pass": ok2}
    report["pass"] &= ok1 and ok2

    # kernel facts at z = q^6
    z6 = _Q(6)
    facts = {
        "a_L3j_vanish": all(_zeval(a[f"L3{j}"], z6).is_zero() for j in (1, 2, 3)),
        "a_L1j_eq_L2j": all(_zeval(a[f"L1{j}"], z6) == _zeval(a[f"L2{j}"], z6)
                            for j in (1, 2, 3)),
        "a_2La2_vanish": _zeval(a["2La2"], z6).is_zero(),
        "a_3La2_vanish": _zeval(a["3La2"], z6).is_zero(),
        "a_Z_kernel": all((_Q(3) * (_Q(12) - _Q(6) + _ONE) * _zeval(a[f"Z1{j}"], z6)
                           - (_Q(6) + _ONE) * _zeval(a[f"Z2{j}"], z6)).is_zero()
                          for j in (1, 2)),
    }
    for k, v in facts.items():
        report[k] = {"pass": v}
        report["pass"] &= v

    # nonvanishing of the top-component scalar at the fusion points
    ok = all(not _zeval(a["2La1"], _Q(6 * k)).is_zero() for k in range(1, 6))
    report["phi_nonvanishing"] = {"pass": ok}
    report["pass"] &= ok
    return report
