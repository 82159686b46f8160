"""The affine model crystal and the level-l crystal B^l.

The model crystal A at level l is the disjoint union of A2 crystals
B^i_(k,j) over blocks 0 <= i <= l//2, i <= k, j <= l-i, with elements named
by string coordinates (p, q, r): the element f_0^r f_1^q f_0^p applied to
the block's highest-weight element, 0 <= p <= j, p <= q <= p+k,
0 <= r <= j+q-2p.

E_A is defined case by case on the r = 0 layer and extended to the rest by
commuting past f_0; F_A is the conjugate C_A E_A C_A under the involution,
and the mutual-inverse property is verified rather than assumed.  The
bijection Phi onto the direct sum of G2 crystals B(n*Lambda_1), n <= l, is
built from explicit tableau anchors and closed under the operator
compatibilities it must satisfy; every assignment is cross-checked and any
conflict or gap raises a construction fault.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from . import a2, g2
from .cartan import ClassicalWeight


class ConstructionFault(RuntimeError):
    """A mis-transcribed case or rule conflict in the model construction."""


class AParam(NamedTuple):
    i: int
    k: int
    j: int
    p: int
    q: int
    r: int

    def to_json(self):
        return {"i": self.i, "k": self.k, "j": self.j,
                "p": self.p, "q": self.q, "r": self.r}


def _valid_block(l, i, k, j):
    return 0 <= i <= l // 2 and i <= k <= l - i and i <= j <= l - i


def _valid_param(l, b):
    return (
        _valid_block(l, b.i, b.k, b.j)
        and 0 <= b.p <= b.j
        and b.p <= b.q <= b.p + b.k
        and 0 <= b.r <= b.j + b.q - 2 * b.p
    )


def ea_plus(l, i, k, j, p, q):
    """E_A on the r = 0 layer, by the case table with level induction.

    Returns (i', k', j', p', q') or None.  The level-induction case maps the
    parameters to the corresponding element at level l-1 in block (k-1, j-1)
    and transports the answer back.  A raising target with j = l-i falls out
    of the block range and is the annihilation case.
    """
    if i < k and i < j:
        if p == min(q, j):
            if q <= j - 1 - (j - k) // 3:
                return (i, k - 1, j, p, q)
            if j < l - i:
                return (i, k, j + 1, p + 1, q + 1)
            return None
        inner = ea_plus(l - 1, i, k - 1, j - 1, p, q - 1)
        if inner is None:
            return None
        i2, k2, j2, p2, q2 = inner
        return (i2, k2 + 1, j2 + 1, p2, q2 + 1)
    if k == i and j >= i + 2:
        if p <= j - 1 - (j - i) // 3:
            return (i + 1, k + 1, j - 1, p, q + 1)
        if j < l - i:
            return (i, k, j + 1, p + 1, q + 1)
        return None
    if k == i and j == i + 1:
        if p <= i:
            return (i, k + 1, j - 1, p, q + 1)
        if j < l - i:
            return (i, k, j + 1, p + 1, q + 1)
        return None
    if k == i and j == i:
        if p <= i - 1:
            return (i - 1, k + 1, j - 1, p, q + 1)
        if j < l - i:
            return (i, k, j + 1, p + 1, q + 1)
        return None
    # j == i, i + 1 <= k
    if q <= p - 1 - (i - k) // 3:
        return (i, k - 1, j, p, q)
    if p == i:
        if j < l - i:
            return (i, k, j + 1, p + 1, q + 1)
        return None
    return (i - 1, k + 1, j - 1, p, q + 1)


class AffineModel:
    """The model crystal A at a fixed level, with its operators."""

    def __init__(self, l: int):
        if l < 0:
            raise ValueError("level must be nonnegative")
        self.l = l
        self.blocks = [
            (i, k, j)
            for i in range(l // 2 + 1)
            for k in range(i, l - i + 1)
            for j in range(i, l - i + 1)
        ]
        self.elements = [
            AParam(i, k, j, p, q, r)
            for (i, k, j) in self.blocks
            for p in range(j + 1)
            for q in range(p, p + k + 1)
            for r in range(j + q - 2 * p + 1)
        ]
        self._coords_cache: dict[tuple, AParam] = {}

    # -- A2-crystal-backed operators ------------------------------------

    def _tableau(self, b: AParam) -> a2.A2Tableau:
        return a2.from_coords(b.k, b.j, b.p, b.q, b.r)

    def _param(self, i, k, j, t: a2.A2Tableau) -> AParam:
        key = (i, k, j, t.row1, t.row2)
        got = self._coords_cache.get(key)
        if got is None:
            p, q, r = a2.string_coords(t)
            got = AParam(i, k, j, p, q, r)
            self._coords_cache[key] = got
        return got

    def f1(self, b: AParam) -> AParam | None:
        c = a2.alpha_coord_maps(b.k, b.j)[0].get((b.p, b.q, b.r))
        return None if c is None else AParam(b.i, b.k, b.j, *c)

    def e1(self, b: AParam) -> AParam | None:
        c = a2.alpha_coord_maps(b.k, b.j)[1].get((b.p, b.q, b.r))
        return None if c is None else AParam(b.i, b.k, b.j, *c)

    def f0(self, b: AParam) -> AParam | None:
        if b.r >= b.j + b.q - 2 * b.p:
            return None
        return b._replace(r=b.r + 1)

    def e0(self, b: AParam) -> AParam | None:
        if b.r == 0:
            return None
        return b._replace(r=b.r - 1)

    def eps0(self, b: AParam) -> int:
        return b.r

    def phi0(self, b: AParam) -> int:
        return b.j + b.q - 2 * b.p - b.r

    def weight(self, b: AParam) -> tuple[int, int]:
        """(wt_1, wt_0) of the element."""
        return (b.k + b.p - 2 * b.q + b.r, b.j - 2 * b.p + b.q - 2 * b.r)

    # -- the auxiliary raising/lowering pair ----------------------------

    def EA(self, b: AParam) -> AParam | None:
        """The raising counterpart of the extra color; commutes with f_0."""
        base = ea_plus(self.l, b.i, b.k, b.j, b.p, b.q)
        if base is None:
            return None
        out = AParam(*base, b.r)
        if not _valid_param(self.l, out):
            raise ConstructionFault(f"E_A left the crystal: {b} -> {out}")
        return out

    def CA(self, b: AParam) -> AParam:
        out = AParam(b.i, b.j, b.k, b.k - b.q + b.p, b.k + b.j - b.q,
                     b.j + b.q - 2 * b.p - b.r)
        if not _valid_param(self.l, out):
            raise ConstructionFault(f"involution left the crystal: {b} -> {out}")
        return out

    def FA(self, b: AParam) -> AParam | None:
        img = self.EA(self.CA(b))
        return None if img is None else self.CA(img)

    def ea_depth(self, b: AParam) -> int:
        n = 0
        while True:
            b = self.EA(b)
            if b is None:
                return n
            n += 1

    def fa_depth(self, b: AParam) -> int:
        n = 0
        while True:
            b = self.FA(b)
            if b is None:
                return n
            n += 1

    def is_terminal(self, b: AParam) -> bool:
        return self.FA(b) is None

    # -- the anchor sets -------------------------------------------------

    def y_of(self, i, j) -> int:
        return (self.l - i - j) // 3

    def classify(self, b: AParam) -> str | None:
        """Membership in the anchor sets B_C, B_W, B_U, B_R.

        B_C is the q = p wedge of the k = l-i blocks together with its whole
        f_0-fiber; B_W and B_U are the displayed wedges on the j = i and
        p = j edges; B_R is the residual of the terminal r = 0 set, which
        absorbs the over-constrained inequality description.
        """
        l = self.l
        if b.k == l - b.i and b.q == b.p:
            return "BC"
        y = self.y_of(b.i, b.j)
        if b.k == l - b.i and b.r == 0:
            if b.j == b.i and b.p < b.q <= y + b.i:
                return "BW"
            if b.p == b.j and b.j < b.q <= y + 2 * b.j - b.i:
                return "BU"
        if b.r == 0 and self.is_terminal(b):
            return "BR"
        return None


@lru_cache(maxsize=None)
def model(l: int) -> AffineModel:
    return AffineModel(l)


def gl_elements(l: int) -> list[tuple[int, ...]]:
    """All of the target set: words of length at most l, sorted."""
    out = []
    for n in range(l + 1):
        out.extend(g2.enumerate_tableaux(n))
    out.sort(key=lambda w: (len(w), tuple(g2.ORDER_INDEX[a] for a in w)))
    return out


def gl_count(l: int) -> int:
    return sum(g2.dim(n) for n in range(l + 1))


def a_count(l: int) -> int:
    return sum(
        a2.dim(k, j)
        for i in range(l // 2 + 1)
        for k in range(i, l - i + 1)
        for j in range(i, l - i + 1)
    )


# -- explicit tableau anchors -------------------------------------------


def _anchor_f0p(l, i, j, p) -> tuple[int, ...]:
    """Word assigned to f_0^p applied to the highest element of B^i_(l-i,j)."""
    y = (l - i - j) // 3
    m = (l - i - j) % 3
    if p <= i:
        if m == 0:
            w = (1,) * p + (6,) * y + g2.cstrip(y + i - p) + (-2,) * (y + j)
        elif m == 1 and y + i > p:
            w = (1,) * p + (6,) * (y + 1) + g2.cstrip(y + i - p - 1) + (-4,) + (-2,) * (y + j)
        elif m == 1:
            w = (1,) * i + (-5,) + (-2,) * j
        else:
            w = (1,) * p + (6,) * (y + 1) + g2.cstrip(y + i - p) + (-3,) + (-2,) * (y + j)
    else:
        if m == 0:
            w = (1,) * i + (6,) * (p - i + y) + g2.cstrip(y) + (-2,) * (y + j - p + i)
        elif m == 1 and y > 0:
            w = (1,) * i + (6,) * (p - i + y + 1) + g2.cstrip(y - 1) + (-4,) + (-2,) * (y + j - p + i)
        elif m == 1:
            w = (1,) * i + (6,) * (p - i) + (-5,) + (-2,) * (j - p + i)
        else:
            w = (1,) * i + (6,) * (p - i + y + 1) + g2.cstrip(y) + (-3,) + (-2,) * (y + j - p + i)
    return g2.sort_word(w)


def _anchor_highest(l, i, j) -> tuple[int, ...]:
    """Word assigned to the highest element of B^i_(l-i,j); four residue cases."""
    y = (l - i - j) // 3
    m = (l - i - j) % 3
    if m == 0:
        w = (6,) * y + g2.cstrip(y + i) + (-2,) * (y + j)
    elif m == 1 and y + i > 0:
        w = (6,) * (y + 1) + g2.cstrip(y + i - 1) + (-4,) + (-2,) * (y + j)
    elif m == 1:
        w = (-5,) + (-2,) * (j - i)
    else:
        w = (6,) * (y + 1) + g2.cstrip(y + i) + (-3,) + (-2,) * (y + j)
    return g2.sort_word(w)


class PhiTable:
    """The bijection between model parameters and tableau words at one level."""

    def __init__(self, l, forward, backward):
        self.l = l
        self.forward = forward
        self.backward = backward

    def __len__(self):
        return len(self.forward)


def _g_apply(op, i, word):
    return g2.apply(op, i, word)


def build_phi(l: int) -> PhiTable:
    """Construct the bijection from the model crystal onto the tableau sum.

    Anchor rules are applied in a fixed order; a later rule disagreeing with
    an existing assignment, an out-of-crystal image, or a leftover gap is a
    construction fault, never silently resolved.  Remaining elements are
    closed under the color-1 compatibility, the extra-color compatibility,
    conjugation under the two involutions, and finally by weight elimination
    (a parameter and a word forced to pair because they are alone in their
    weight class).
    """
    mod = model(l)
    forward: dict[AParam, tuple[int, ...]] = {}
    backward: dict[tuple[int, ...], AParam] = {}

    def assign(b, w, rule):
        if w is None:
            raise ConstructionFault(f"{rule}: image vanished for {b}")
        if not _valid_param(l, b):
            raise ConstructionFault(f"{rule}: parameter out of range {b}")
        old = forward.get(b)
        if old is not None:
            if old != w:
                raise ConstructionFault(f"{rule}: conflict at {b}: {old} vs {w}")
            return False
        owner = backward.get(w)
        if owner is not None:
            raise ConstructionFault(f"{rule}: word {w} already assigned to {owner}, not {b}")
        forward[b] = w
        backward[w] = b
        return True

    # R1: the two boundary families of the top block.
    for p in range(l + 1):
        assign(AParam(0, l, l, 0, 0, p), (6,) * p + (-2,) * (l - p), "R1")
    for p in range(l + 1):
        assign(AParam(0, l, l, l, 2 * l, l - p), (2,) * (l - p) + (-6,) * p, "R1")

    # R2: raising powers of the extra color off the boundary family.
    for k in range(l + 1):
        for p in range(l + 1):
            w = (6,) * p + (-2,) * (l - p)
            w = g2.apply_power("e", 2, w, l - k)
            assign(AParam(0, k, l, 0, 0, p), w, "R2")

    # R3: color-1 powers on the p = l edge of the same blocks.
    for k in range(l + 1):
        g = forward[AParam(0, k, l, 0, 0, l)]
        for q in range(1, l + k + 1):
            g = _g_apply("f", 1, g)
            b = AParam(0, k, l, q, q, l - q) if q <= l else AParam(0, k, l, l, q, 0)
            assign(b, g, "R3")

    # R4: highest elements of the k = l-i blocks (residue-case formulas).
    for i in range(l // 2 + 1):
        for j in range(i, l - i + 1):
            assign(AParam(i, l - i, j, 0, 0, 0), _anchor_highest(l, i, j), "R4")

    # R5: their f_0 powers.
    for i in range(l // 2 + 1):
        for j in range(i, l - i + 1):
            for p in range(j + 1):
                assign(AParam(i, l - i, j, 0, 0, p), _anchor_f0p(l, i, j, p), "R5")

    # R6: color-1 powers over the R5 anchors.
    for i in range(l // 2 + 1):
        for j in range(i, l - i + 1):
            y = mod.y_of(i, j)
            for p in range(j + 1):
                g = forward[AParam(i, l - i, j, 0, 0, p)]
                qmax = y + j - max(i - p, 0)
                for q in range(1, qmax + 1):
                    g = _g_apply("f", 1, g)
                    b = (AParam(i, l - i, j, q, q, p - q) if q <= p
                         else AParam(i, l - i, j, p, q, 0))
                    assign(b, g, "R6")

    # Classify anchors once.
    seeds = {"BC": [], "BW": [], "BU": [], "BR": []}
    for b in mod.elements:
        c = mod.classify(b)
        if c:
            seeds[c].append(b)

    # R7: extend along raising strings from B_C and B_R.
    for b in seeds["BC"] + seeds["BR"]:
        g = forward.get(b)
        if g is None:
            raise ConstructionFault(f"R7: seed {b} has no anchor value")
        x = b
        while True:
            x2 = mod.EA(x)
            if x2 is None:
                break
            g = _g_apply("e", 2, g)
            assign(x2, g, "R7")
            x = x2

    # R8: B_W and B_U strings via the two involutions.
    for b in seeds["BW"] + seeds["BU"]:
        x = b
        while x is not None:
            s = mod.CA(x)
            gs = forward.get(s)
            if gs is None:
                raise ConstructionFault(f"R8: conjugate {s} of {x} unassigned")
            assign(x, g2.involution(gs), "R8")
            x = mod.EA(x)

    # R9: the f_0-top rows over B_R strings, again via the involutions.
    for b in seeds["BR"]:
        rtop = mod.phi0(b)
        x = b
        while x is not None:
            t = x._replace(r=rtop)
            s = mod.CA(t)
            gs = forward.get(s)
            if gs is None:
                raise ConstructionFault(f"R9: conjugate {s} of {t} unassigned")
            assign(t, g2.involution(gs), "R9")
            x = mod.EA(x)

    # Closure: color-1 first, then the extra color, involutions, and
    # weight elimination for whatever the named rules leave open.
    universe = gl_elements(l)
    if len(mod.elements) != len(universe):
        raise ConstructionFault(
            f"size mismatch: model {len(mod.elements)} vs words {len(universe)}")

    def wt_target(b):
        w1, w0 = mod.weight(b)
        return (w1, -2 * w1 - w0)

    def closure_pass():
        changed = False
        for b in list(forward):
            g = forward[b]
            for opA, opG, colG in ((mod.f1, "f", 1), (mod.e1, "e", 1)):
                t = opA(b)
                if t is not None and t not in forward:
                    changed |= assign(t, _g_apply(opG, colG, g), "color1-closure")
        return changed

    def extra_color_pass():
        changed = False
        for b in list(forward):
            g = forward[b]
            t = mod.EA(b)
            if t is not None and t not in forward:
                changed |= assign(t, _g_apply("e", 2, g), "color2-closure")
            t = mod.FA(b)
            if t is not None and t not in forward:
                changed |= assign(t, _g_apply("f", 2, g), "color2-closure")
        return changed

    def conjugation_pass():
        changed = False
        for b in mod.elements:
            if b in forward:
                continue
            s = mod.CA(b)
            gs = forward.get(s)
            if gs is not None:
                changed |= assign(b, g2.involution(gs), "C-closure")
        return changed

    def elimination_pass():
        open_params = [b for b in mod.elements if b not in forward]
        open_words = [w for w in universe if w not in backward]
        by_wt_p: dict[tuple, list] = {}
        by_wt_w: dict[tuple, list] = {}
        for b in open_params:
            by_wt_p.setdefault(wt_target(b), []).append(b)
        for w in open_words:
            wt = g2.weight(w)
            by_wt_w.setdefault((wt.m1, wt.m2), []).append(w)
        if set(by_wt_p) != set(by_wt_w):
            raise ConstructionFault("weight classes of open parameters and words differ")
        changed = False
        for key, params in by_wt_p.items():
            words = by_wt_w[key]
            if len(params) != len(words):
                raise ConstructionFault(
                    f"weight class {key}: {len(params)} parameters vs {len(words)} words")
            if len(params) == 1:
                changed |= assign(params[0], words[0], "wt-elimination")
        return changed

    while len(forward) < len(mod.elements):
        if closure_pass():
            continue
        if extra_color_pass():
            continue
        if conjugation_pass():
            continue
        if elimination_pass():
            continue
        missing = [b for b in mod.elements if b not in forward][:5]
        raise ConstructionFault(f"gap: unassigned parameters remain, e.g. {missing}")

    if len(backward) != len(universe):
        raise ConstructionFault("assignment is not onto the word set")

    # Self-check: the finished table must intertwine the color-1 and
    # extra-color operators and match weights on every element, so a table
    # is never handed out with a silent closure inconsistency.
    for b, w in forward.items():
        for opA, opG in ((mod.f1, ("f", 1)), (mod.e1, ("e", 1)),
                         (mod.FA, ("f", 2)), (mod.EA, ("e", 2))):
            t = opA(b)
            lhs = forward.get(t) if t is not None else None
            if lhs != g2.apply(*opG, w):
                raise ConstructionFault(f"operator compatibility fails at {b} for {opG}")
        w1, w0 = mod.weight(b)
        wt = g2.weight(w)
        if wt.m1 != w1 or wt.m2 != -2 * w1 - w0:
            raise ConstructionFault(f"weight mismatch at {b}")
    return PhiTable(l, forward, backward)


@lru_cache(maxsize=None)
def phi_table(l: int) -> PhiTable:
    return build_phi(l)


# -- the level-l affine crystal ----------------------------------------


class BlCrystal:
    """B^l: tableau words of length at most l with three colored operators."""

    def __init__(self, l: int):
        self.l = l
        self.phi = phi_table(l)
        self.model = model(l)
        self.elements = gl_elements(l)
        self.index = {w: n for n, w in enumerate(self.elements)}
        self._f = {0: {}, 1: {}, 2: {}}
        self._e = {0: {}, 1: {}, 2: {}}
        for w in self.elements:
            for i in (1, 2):
                img = g2.apply("f", i, w)
                if img is not None:
                    self._f[i][w] = img
                    self._e[i][img] = w
            b = self.phi.backward[w]
            b2 = self.model.f0(b)
            if b2 is not None:
                img = self.phi.forward[b2]
                self._f[0][w] = img
                self._e[0][img] = w

    def f(self, i, w):
        return self._f[i].get(w)

    def e(self, i, w):
        return self._e[i].get(w)

    def eps(self, i, w) -> int:
        if i == 0:
            return self.phi.backward[w].r
        return g2.eps(i, w)

    def phi_i(self, i, w) -> int:
        if i == 0:
            b = self.phi.backward[w]
            return self.model.phi0(b)
        return g2.phi(i, w)

    def weight(self, w) -> ClassicalWeight:
        return g2.weight(w)

    def eps_weight(self, w) -> ClassicalWeight:
        return ClassicalWeight(self.eps(0, w), self.eps(1, w), self.eps(2, w))

    def phi_weight(self, w) -> ClassicalWeight:
        return ClassicalWeight(self.phi_i(0, w), self.phi_i(1, w), self.phi_i(2, w))


@lru_cache(maxsize=None)
def bl_crystal(l: int) -> BlCrystal:
    return BlCrystal(l)


def f0(l: int, word) -> tuple[int, ...] | None:
    return bl_crystal(l).f(0, tuple(word))


def e0(l: int, word) -> tuple[int, ...] | None:
    return bl_crystal(l).e(0, tuple(word))


# -- exhaustive verification --------------------------------------------


def _components(elements, edge_maps):
    """Connected components under the given {element: element} edge maps."""
    idx = {w: n for n, w in enumerate(elements)}
    parent = list(range(len(elements)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for mp in edge_maps:
        for a, b in mp.items():
            union(idx[a], idx[b])
    comps: dict[int, list] = {}
    for w in elements:
        comps.setdefault(find(idx[w]), []).append(w)
    return list(comps.values())


def verify_construction(l: int) -> dict:
    """Check every construction axiom exhaustively; failures are data."""
    mod = model(l)
    table = phi_table(l)
    bl = bl_crystal(l)
    report: dict[str, dict] = {}

    def record(name, bad):
        report[name] = {"pass": not bad, "counterexamples": bad[:10], "failures": len(bad)}

    # (C1) mutual inverse
    bad = []
    for b in mod.elements:
        up = mod.EA(b)
        if up is not None and mod.FA(up) != b:
            bad.append((b, up))
        dn = mod.FA(b)
        if dn is not None and mod.EA(dn) != b:
            bad.append((b, dn))
    record("pair_mutual_inverse", bad)

    # (C2) commutation with f_0, including definedness, plus phi_0 preservation
    bad = []
    for b in mod.elements:
        t = mod.f0(b)
        lhs = None if t is None else mod.EA(t)
        up = mod.EA(b)
        rhs = None if (t is None or up is None) else mod.f0(up)
        if (lhs is None) != (rhs is None) or lhs != rhs:
            bad.append(b)
        if up is not None and mod.phi0(up) != mod.phi0(b):
            bad.append(b)
    record("affine_color_commutation", bad)

    # (C3) string-length difference equals the weight functional
    bad = []
    for b in mod.elements:
        w1, w0 = mod.weight(b)
        if mod.fa_depth(b) - mod.ea_depth(b) != -2 * w1 - w0:
            bad.append(b)
    record("string_depth_weight", bad)

    # E_A injectivity where nonzero
    images: dict[AParam, AParam] = {}
    bad = []
    for b in mod.elements:
        up = mod.EA(b)
        if up is not None:
            if up in images:
                bad.append((images[up], b, up))
            images[up] = b
    record("EA_injective", bad)

    # (D1) the affine operator commutes with the extra finite color
    bad = []
    for w in bl.elements:
        for first, second in ((0, 2), (2, 0)):
            a = bl.f(first, w)
            a = None if a is None else bl.f(second, a)
            c = bl.f(second, w)
            c = None if c is None else bl.f(first, c)
            if a != c:
                bad.append((w, "f"))
            a = bl.e(first, w)
            a = None if a is None else bl.e(second, a)
            c = bl.e(second, w)
            c = None if c is None else bl.e(first, c)
            if a != c:
                bad.append((w, "e"))
    record("zero_two_commutation", bad)

    # (E1) color-1 compatibility on every element
    bad = []
    for b in mod.elements:
        w = table.forward[b]
        t = mod.f1(b)
        if (table.forward.get(t) if t is not None else None) != g2.apply("f", 1, w):
            bad.append((b, "f1"))
        t = mod.e1(b)
        if (table.forward.get(t) if t is not None else None) != g2.apply("e", 1, w):
            bad.append((b, "e1"))
    record("color1_compatibility", bad)

    # (E2) extra-color compatibility
    bad = []
    for b in mod.elements:
        w = table.forward[b]
        t = mod.FA(b)
        if (table.forward.get(t) if t is not None else None) != g2.apply("f", 2, w):
            bad.append((b, "FA"))
        t = mod.EA(b)
        if (table.forward.get(t) if t is not None else None) != g2.apply("e", 2, w):
            bad.append((b, "EA"))
    record("color2_compatibility", bad)

    # (E3)/(E4) weight matching
    bad = []
    for b in mod.elements:
        w1, w0 = mod.weight(b)
        wt = g2.weight(table.forward[b])
        if wt.m1 != w1 or wt.m2 != -2 * w1 - w0:
            bad.append(b)
    record("weight_compatibility", bad)

    # (E5) vanishing of the affine operators matches the model
    bad = []
    for b in mod.elements:
        w = table.forward[b]
        if (bl.f(0, w) is None) != (mod.f0(b) is None):
            bad.append((b, "f0"))
        if (bl.e(0, w) is None) != (mod.e0(b) is None):
            bad.append((b, "e0"))
    record("vanishing_compatibility", bad)

    # restriction to the finite colors {1,2}: one component per n <= l
    comps = _components(bl.elements, [bl._f[1], bl._f[2]])
    sizes = sorted(len(c) for c in comps)
    expected = sorted(g2.dim(n) for n in range(l + 1))
    ok = sizes == expected
    sources = []
    for comp in comps:
        srcs = [w for w in comp if g2.eps(1, w) == 0 and g2.eps(2, w) == 0]
        sources.append(srcs)
    ok = ok and all(len(s) == 1 and s[0] == (1,) * len(s[0]) for s in sources)
    report["restriction_12"] = {"pass": ok, "sizes": sizes, "failures": 0 if ok else 1,
                                "counterexamples": []}

    # restriction to the colors {1,0}: components match the model blocks,
    # by size and by the weight of the unique source of each component
    comps = _components(bl.elements, [bl._f[1], bl._f[0]])
    got = []
    ok = True
    for comp in comps:
        srcs = [w for w in comp
                if g2.eps(1, w) == 0 and table.backward[w].r == 0
                and mod.e1(table.backward[w]) is None]
        ok &= len(srcs) == 1
        if srcs:
            w1, w0 = mod.weight(table.backward[srcs[0]])
            got.append((len(comp), w1, w0))
    expected = sorted((a2.dim(k, j), k, j) for (i, k, j) in mod.blocks)
    ok &= sorted(got) == expected
    report["restriction_10"] = {"pass": ok, "components": len(comps),
                                "failures": 0 if ok else 1,
                                "counterexamples": []}

    report["all_pass"] = all(v["pass"] for k, v in report.items() if isinstance(v, dict))
    return report
