"""Exact rational functions in q with integer Laurent-polynomial parts.

A value is a reduced fraction num/den of integer-coefficient Laurent
polynomials stored as {exponent: coefficient} dictionaries.  The canonical
form has a denominator with valuation zero, positive constant term, unit
integer content, and no common polynomial factor with the numerator, so
equality is structural.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _trim(d):
    return {e: c for e, c in d.items() if c}


def _add(d1, d2):
    out = dict(d1)
    for e, c in d2.items():
        c2 = out.get(e, 0) + c
        if c2:
            out[e] = c2
        else:
            out.pop(e, None)
    return out


def _mul(d1, d2):
    out = {}
    for e1, c1 in d1.items():
        for e2, c2 in d2.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def _neg(d):
    return {e: -c for e, c in d.items()}


def _val(d):
    return min(d) if d else 0


def _deg(d):
    return max(d) if d else 0


def _content(d):
    g = 0
    for c in d.values():
        g = gcd(g, abs(c))
    return g or 1


def _to_list(d):
    """Shift to valuation zero and return (valuation, dense coefficient list)."""
    if not d:
        return 0, []
    v = _val(d)
    out = [0] * (_deg(d) - v + 1)
    for e, c in d.items():
        out[e - v] = c
    return v, out


def _from_list(v, lst):
    return {v + i: c for i, c in enumerate(lst) if c}


def _list_prim(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    g = g or 1
    return [c // g for c in a]


def _list_prem(a, b):
    """Pseudo-remainder of dense integer polynomial lists."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[shift + i] -= la * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def _list_gcd(a, b):
    a = _list_prim([c for c in a])
    b = _list_prim([c for c in b])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a:
        return b or [1]
    if not b:
        return a
    while b:
        r = _list_prem(a, b)
        a, b = b, _list_prim(r)
    return a


def _list_divexact(a, b):
    """Exact division of dense lists over Q, asserted to land in Z."""
    a = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = Fraction(b[-1])
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] / lb
        out[i] = c
        for j, bc in enumerate(b):
            a[i + j] -= c * bc
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    res = []
    for c in out:
        if c.denominator != 1:
            raise ArithmeticError("division left rational coefficients")
        res.append(int(c))
    return res


class QRat:
    """A reduced fraction of integer Laurent polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, int):
            num = {0: num} if num else {}
        if den is None:
            den = {0: 1}
        elif isinstance(den, int):
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            den = {0: den}
        num = _trim(dict(num))
        den = _trim(dict(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if _reduced:
            self.num, self.den = num, den
            return
        self.num, self.den = self._reduce(num, den)

    @staticmethod
    def _reduce(num, den):
        if not num:
            return {}, {0: 1}
        vd = _val(den)
        if vd:
            num = {e - vd: c for e, c in num.items()}
            den = {e - vd: c for e, c in den.items()}
        cn, cd = _content(num), _content(den)
        g = gcd(cn, cd)
        if g > 1:
            num = {e: c // g for e, c in num.items()}
            den = {e: c // g for e, c in den.items()}
        vn, ln = _to_list(num)
        _, ld = _to_list(den)
        if len(ld) > 1:
            gpoly = _list_gcd(ln, ld)
            if len(gpoly) > 1:
                ln = _list_divexact(ln, gpoly)
                ld = _list_divexact(ld, gpoly)
            num = _from_list(vn, ln)
            den = _from_list(0, ld)
        if den.get(_val(den), 0) < 0:
            num = _neg(num)
            den = _neg(den)
        cn, cd = _content(num), _content(den)
        g = gcd(cn, cd)
        if g > 1:
            num = {e: c // g for e, c in num.items()}
            den = {e: c // g for e, c in den.items()}
        return num, den

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def q_power(k: int):
        return QRat({k: 1}, None, _reduced=True)

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QRat(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QRat(other)
        if not self.num:
            return other
        if not other.num:
            return self
        return QRat(_add(_mul(self.num, other.den), _mul(other.num, self.den)),
                    _mul(self.den, other.den))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return QRat(_neg(self.num), dict(self.den), _reduced=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QRat(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return QRat(other).__sub__(self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = QRat(other)
        if not self.num or not other.num:
            return _ZERO
        return QRat(_mul(self.num, other.num), _mul(self.den, other.den))

    def __rmul__(self, other):
        return self.__mul__(other)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverting zero")
        return QRat(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        if isinstance(other, int):
            other = QRat(other)
        return self.__mul__(other.inv())

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure -------------------------------------------------------

    def is_laurent(self):
        return self.den == {0: 1}

    def order_at_zero(self) -> int:
        """Valuation at q = 0; the denominator has valuation zero."""
        if not self.num:
            raise ValueError("zero has no valuation")
        return _val(self.num)

    def value_at_zero(self) -> Fraction:
        """Limit at q = 0 for values regular there."""
        if not self.num:
            return Fraction(0)
        if self.order_at_zero() < 0:
            raise ValueError("pole at q = 0")
        return Fraction(self.num.get(0, 0), self.den.get(0))

    def subs_power(self, k: int) -> "QRat":
        """Substitute q -> q^k."""
        return QRat({e * k: c for e, c in self.num.items()},
                    {e * k: c for e, c in self.den.items()})

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        ns = _poly_str(self.num)
        if self.den == {0: 1}:
            return ns
        return f"({ns})/({_poly_str(self.den)})"


def _poly_str(d):
    if not d:
        return "0"
    parts = []
    for e in sorted(d, reverse=True):
        c = d[e]
        if e == 0:
            parts.append(f"{c:+d}")
        else:
            mono = "q" if e == 1 else f"q^{e}"
            if c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c:+d}*{mono}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


_ZERO = QRat({}, None, _reduced=True)
_ONE = QRat({0: 1}, None, _reduced=True)


def qbracket(m: int, norm: int) -> QRat:
    """[m] for q_i = q^norm: a Laurent polynomial, built without division."""
    if m < 0:
        return -qbracket(-m, norm)
    return QRat({norm * (m - 1 - 2 * t): 1 for t in range(m)}, None)


def qfactorial(k: int, norm: int) -> QRat:
    out = _ONE
    for m in range(2, k + 1):
        out = out * qbracket(m, norm)
    return out
