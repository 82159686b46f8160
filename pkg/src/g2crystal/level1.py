"""The 15-dimensional level-1 module over exact q-arithmetic.

Basis labels are the 14 letters plus 9 for the extra one-dimensional piece.
The action table is stored in resolved form: the generator rows with
secondary terms are fixed by the defining relations (the commutator of the
color-1 generators forces the bracket on the 6 / 0_2 / barred-6 string to be
the color-1 bracket, and pins every secondary coefficient); the resolution
is frozen here and re-verified relation by relation.

Tensor vectors carry coefficients that are Laurent polynomials in the two
spectral variables x, y over the exact rational-function field.
"""

from __future__ import annotations

from functools import lru_cache

from .qlaurent import QRat, qbracket, qfactorial

BASIS = (1, 2, 3, 4, 5, 6, 7, 8, -6, -5, -4, -3, -2, -1, 9)

NORMS = (3, 3, 1)  # (alpha_i, alpha_i) for i = 0, 1, 2

# <h_1, wt>, <h_2, wt> per basis label; label 9 has weight zero.
_WT12 = {
    1: (1, 0), 2: (-1, 3), 3: (0, 1), 4: (1, -1), 5: (-1, 2), 6: (2, -3),
    7: (0, 0), 8: (0, 0), -6: (-2, 3), -5: (1, -2), -4: (-1, 1),
    -3: (0, -1), -2: (1, -3), -1: (-1, 0), 9: (0, 0),
}


def qint(m: int, i: int) -> QRat:
    """[m]_i with q_0 = q_1 = q^3 and q_2 = q."""
    return qbracket(m, NORMS[i])


def weight_pairing(i: int, a: int) -> int:
    """<h_i, wt(a)> for a basis label a."""
    m1, m2 = _WT12[a]
    if i == 0:
        return -2 * m1 - m2
    return (m1, m2)[i - 1]


_ONE = QRat.one()
_B21 = qbracket(2, 3)
_B22 = qbracket(2, 1)
_B32 = qbracket(3, 1)

# Lowering table: F[i][a] = [(target, coefficient), ...]
F_TABLE = {
    0: {
        -6: [(2, _ONE)], -4: [(3, _ONE)], -3: [(4, _ONE)], -2: [(6, _ONE)],
        -1: [(9, _ONE), (8, _B21.inv())], 9: [(1, _B21)],
    },
    1: {
        1: [(2, _ONE)], 4: [(5, _ONE)],
        6: [(8, _ONE), (7, _B22.inv()), (9, _B21.inv())],
        8: [(-6, _B21)], -5: [(-4, _ONE)], -2: [(-1, _ONE)],
    },
    2: {
        2: [(3, _ONE)], 3: [(4, _B22)], 4: [(6, _B32)],
        5: [(7, _ONE), (8, _B32 / _B21)], 7: [(-5, _B22)],
        -6: [(-4, _ONE)], -4: [(-3, _B22)], -3: [(-2, _B32)],
    },
}

# Raising table, bar-symmetric to the lowering one.
E_TABLE = {
    0: {
        6: [(-2, _ONE)], 4: [(-3, _ONE)], 3: [(-4, _ONE)], 2: [(-6, _ONE)],
        1: [(9, _ONE), (8, _B21.inv())], 9: [(-1, _B21)],
    },
    1: {
        -1: [(-2, _ONE)], -4: [(-5, _ONE)],
        -6: [(8, _ONE), (7, _B22.inv()), (9, _B21.inv())],
        8: [(6, _B21)], 5: [(4, _ONE)], 2: [(1, _ONE)],
    },
    2: {
        -2: [(-3, _ONE)], -3: [(-4, _B22)], -4: [(-6, _B32)],
        -5: [(7, _ONE), (8, _B32 / _B21)], 7: [(5, _B22)],
        6: [(4, _ONE)], 4: [(3, _B22)], 3: [(2, _B32)],
    },
}


# -- vectors on the module itself ----------------------------------------


def vec(a: int):
    return {a: _ONE}


def vadd(u, v):
    out = dict(u)
    for a, c in v.items():
        c2 = out.get(a, QRat.zero()) + c
        if c2.is_zero():
            out.pop(a, None)
        else:
            out[a] = c2
    return out


def vscale(c: QRat, u):
    if c.is_zero():
        return {}
    return {a: c * x for a, x in u.items()}


def vsub(u, v):
    return vadd(u, vscale(-_ONE, v))


def v1_apply(gen, u):
    """Apply a generator to a module vector.

    ``gen`` is ('e', i), ('f', i) or ('t', i, s) with s = +1 or -1.
    """
    kind = gen[0]
    i = gen[1]
    out = {}
    if kind in ("e", "f"):
        table = E_TABLE[i] if kind == "e" else F_TABLE[i]
        for a, c in u.items():
            for b, coef in table.get(a, ()):
                c2 = out.get(b, QRat.zero()) + c * coef
                if c2.is_zero():
                    out.pop(b, None)
                else:
                    out[b] = c2
        return out
    if kind == "t":
        s = gen[2]
        for a, c in u.items():
            out[a] = c * QRat.q_power(NORMS[i] * s * weight_pairing(i, a))
        return out
    raise ValueError(f"unknown generator {gen!r}")


def v1_divided(kind, i, k, u):
    for _ in range(k):
        u = v1_apply((kind, i), u)
    return vscale(qfactorial(k, NORMS[i]).inv(), u)


def _serre_exponent(i, j):
    cartan = ((2, -1, 0), (-1, 2, -1), (0, -3, 2))
    return 1 - cartan[i][j]


def verify_module_relations() -> dict:
    """Every defining relation as an exact linear identity on the module."""
    report = {}

    def matrix_of(fn):
        return {a: fn(vec(a)) for a in BASIS}

    def eq_maps(m1, m2):
        return all(m1[a] == m2[a] for a in BASIS)

    # weight rows: t_i e_j t_i^{-1} = q_i^{<h_i, alpha_j>} e_j
    bad = []
    for i in range(3):
        for j in range(3):
            aij = ((2, -1, 0), (-1, 2, -1), (0, -3, 2))[i][j]
            for kind, table in (("e", E_TABLE), ("f", F_TABLE)):
                s = 1 if kind == "e" else -1
                lhs = matrix_of(lambda u: v1_apply(("t", i, 1),
                                                   v1_apply((kind, j), v1_apply(("t", i, -1), u))))
                rhs = matrix_of(lambda u: vscale(QRat.q_power(NORMS[i] * s * aij),
                                                 v1_apply((kind, j), u)))
                if not eq_maps(lhs, rhs):
                    bad.append((i, j, kind))
    report["weight_rows"] = {"pass": not bad, "failures": bad}

    # [e_i, f_j] = delta_ij (t_i - t_i^{-1}) / (q_i - q_i^{-1})
    bad = []
    for i in range(3):
        for j in range(3):
            for a in BASIS:
                u = vec(a)
                lhs = vsub(v1_apply(("e", i), v1_apply(("f", j), u)),
                           v1_apply(("f", j), v1_apply(("e", i), u)))
                if i == j:
                    rhs = vscale(qbracket_eig(i, a), u)
                else:
                    rhs = {}
                if lhs != rhs:
                    bad.append((i, j, a))
    report["ef_commutator"] = {"pass": not bad, "failures": bad}

    # q-Serre relations in both kinds
    bad = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            b = _serre_exponent(i, j)
            for kind in ("e", "f"):
                for a in BASIS:
                    acc = {}
                    for k in range(b + 1):
                        term = v1_divided(kind, i, b - k, vec(a))
                        term = v1_apply((kind, j), term)
                        term = v1_divided(kind, i, k, term)
                        if k % 2:
                            term = vscale(-_ONE, term)
                        acc = vadd(acc, term)
                    if acc:
                        bad.append((i, j, kind, a))
    report["serre"] = {"pass": not bad, "failures": bad}

    report["all_pass"] = all(v["pass"] for v in report.values() if isinstance(v, dict))
    return report


def qbracket_eig(i, a) -> QRat:
    """(q_i^m - q_i^-m) / (q_i - q_i^-1) for the h_i-eigenvalue m of label a."""
    return qbracket(weight_pairing(i, a), NORMS[i])


# -- linear algebra over the exact field ----------------------------------


def nullspace(rows, ncols):
    """Basis of the right nullspace of a list of QRat rows."""
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if not mat[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inv()
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [QRat.zero()] * ncols
        v[fc] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -mat[r][fc]
        basis.append(v)
    return basis


# -- polarization ---------------------------------------------------------


@lru_cache(maxsize=None)
def polarization_gram() -> dict:
    """The symmetric invariant form, solved from the pairing conditions.

    Unknown entries live on equal-weight pairs only; the compatibility
    (e_i u, v) = (u, q_i^-1 t_i^-1 f_i v) over all generators and basis
    pairs leaves a one-dimensional solution space (the module is irreducible
    over the affine algebra), normalized by (v_1, v_1) = 1.
    """
    pairs = []
    for a in BASIS:
        for b in BASIS:
            if a <= b and _WT12[a] == _WT12[b] and weight_pairing(0, a) == weight_pairing(0, b):
                pairs.append((a, b))
    index = {p: n for n, p in enumerate(pairs)}

    def gidx(a, b):
        return index.get((a, b) if a <= b else (b, a))

    rows = []
    for i in range(3):
        for a in BASIS:
            for b in BASIS:
                row = [QRat.zero()] * len(pairs)
                nontrivial = False
                for a2, c in E_TABLE[i].get(a, ()):
                    k = gidx(a2, b)
                    if k is not None:
                        row[k] = row[k] + c
                        nontrivial = True
                for b2, c in F_TABLE[i].get(b, ()):
                    k = gidx(a, b2)
                    if k is not None:
                        tw = QRat.q_power(NORMS[i] * (-1 - weight_pairing(i, b2)))
                        row[k] = row[k] - c * tw
                        nontrivial = True
                if nontrivial:
                    rows.append(row)
    basis = nullspace(rows, len(pairs))
    if len(basis) != 1:
        raise ArithmeticError(f"polarization space has dimension {len(basis)}, expected 1")
    sol = basis[0]
    scale = sol[index[(1, 1)]].inv()
    return {p: scale * sol[n] for p, n in index.items()}


def gram(a, b) -> QRat:
    g = polarization_gram()
    key = (a, b) if a <= b else (b, a)
    return g.get(key, QRat.zero())


def vec_pair(u, v) -> QRat:
    out = QRat.zero()
    for a, c in u.items():
        for b, d in v.items():
            out = out + c * d * gram(a, b)
    return out


def verify_prepolarization() -> dict:
    """Both pairing moves and symmetry of the form, on all basis pairs."""
    bad = []
    for i in range(3):
        for a in BASIS:
            for b in BASIS:
                lhs = vec_pair(v1_apply(("e", i), vec(a)), vec(b))
                rhs = vec_pair(vec(a), vscale(QRat.q_power(-NORMS[i]),
                                              v1_apply(("t", i, -1), v1_apply(("f", i), vec(b)))))
                if lhs != rhs:
                    bad.append(("e", i, a, b))
                lhs = vec_pair(v1_apply(("f", i), vec(a)), vec(b))
                rhs = vec_pair(vec(a), vscale(QRat.q_power(-NORMS[i]),
                                              v1_apply(("t", i, 1), v1_apply(("e", i), vec(b)))))
                if lhs != rhs:
                    bad.append(("f", i, a, b))
    return {"pass": not bad, "failures": bad[:10]}


# -- Kashiwara operators and crystal compatibility ------------------------


@lru_cache(maxsize=None)
def _string_basis(i: int):
    """Chains f_i^(k) w over e_i-primitive w, one entry (k, vector) each.

    Primitives are found per full weight class, so every chain is weight
    homogeneous; the chains of one primitive occupy consecutive entries.
    """
    classes: dict[tuple, list] = {}
    for a in BASIS:
        classes.setdefault(_WT12[a], []).append(a)
    chains = []
    for labels in classes.values():
        images = {b: v1_apply(("e", i), vec(b)) for b in labels}
        targets = sorted({a for img in images.values() for a in img}, key=str)
        mat = [[images[b].get(t, QRat.zero()) for b in labels] for t in targets]
        for coeffs in nullspace(mat, len(labels)):
            w = {a: c for a, c in zip(labels, coeffs) if not c.is_zero()}
            m = weight_pairing(i, next(iter(w)))
            for k in range(m + 1):
                chains.append((k, v1_divided("f", i, k, w)))
    if len(chains) != len(BASIS):
        raise ArithmeticError(f"string basis has {len(chains)} vectors, wants {len(BASIS)}")
    return chains


def _in_string_coords(i, u):
    """Coefficients of u in the string basis for color i."""
    chains = _string_basis(i)
    # solve sum c_n chain_n = u
    cols = {a: n for n, a in enumerate(BASIS)}
    rows = []
    for a in BASIS:
        rows.append([ch.get(a, QRat.zero()) for _, ch in chains] + [u.get(a, QRat.zero())])
    # gaussian solve
    n = len(chains)
    mat = [list(r) for r in rows]
    piv_of_col = {}
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(mat)) if not mat[r][col].is_zero()), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = mat[rank][col].inv()
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        piv_of_col[col] = rank
        rank += 1
    sol = [QRat.zero()] * n
    for col, r in piv_of_col.items():
        sol[col] = mat[r][n]
    # consistency
    for r in range(len(mat)):
        if all(mat[r][c].is_zero() for c in range(n)) and not mat[r][n].is_zero():
            raise ArithmeticError("vector outside the string-basis span")
    return sol


def kashiwara(kind: str, i: int, u):
    """The modified operator via the divided-power string decomposition.

    Chains of one primitive occupy consecutive entries (k = 0, 1, ..., m);
    stepping past an end of the string contributes zero.
    """
    chains = _string_basis(i)
    coords = _in_string_coords(i, u)
    out = {}
    for n, (c, (k, _)) in enumerate(zip(coords, chains)):
        if c.is_zero():
            continue
        k2 = k + 1 if kind == "f" else k - 1
        idx2 = n - k + k2
        if k2 >= 0 and 0 <= idx2 < len(chains) and chains[idx2][0] == k2:
            out = vadd(out, vscale(c, chains[idx2][1]))
    return out


def crystal_compat_report() -> dict:
    """q -> 0 leading behavior of the modified operators vs the level-1 table."""
    from .affine import bl_crystal

    bl = bl_crystal(1)
    label_of = {(): 9}
    for w in bl.elements:
        if len(w) == 1:
            label_of[w] = w[0]
    word_of = {v: k for k, v in label_of.items()}
    bad = []
    for kind in ("f", "e"):
        for i in (0, 1, 2):
            for a in BASIS:
                img = kashiwara(kind, i, vec(a))
                target = bl.f(i, word_of[a]) if kind == "f" else bl.e(i, word_of[a])
                if target is None:
                    ok = all(c.order_at_zero() >= 1 for c in img.values())
                else:
                    t = label_of[target]
                    ok = t in img and img[t].value_at_zero() == 1 and all(
                        c.order_at_zero() >= 1 for b, c in img.items() if b != t)
                if not ok:
                    bad.append((kind, i, a))
    return {"pass": not bad, "failures": bad}
