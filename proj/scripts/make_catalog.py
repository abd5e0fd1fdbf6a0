#!/usr/bin/env python3
"""Generates the lattice catalog and group files in catalog/.

Each Gram matrix is built from a standard construction and sanity-checked
here (determinant, integrality, evenness); minimal vectors and kissing
numbers are re-verified independently by the C++ enumeration tests.
"""

import json
import math
import os
from fractions import Fraction

OUT = os.path.join(os.path.dirname(__file__), "..", "catalog")


def write(name, obj):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")
    print("wrote", path)


def lattice_entry(name, gram, comment):
    n = len(gram)
    for row in gram:
        assert len(row) == n
    return {"name": name, "n": n, "gram": gram, "comment": comment}


# ----------------------------------------------------------------- basics

def ident(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det_int(m):
    """Exact determinant via fraction-free Gaussian elimination."""
    from fractions import Fraction as F
    n = len(m)
    a = [[F(x) for x in row] for row in m]
    d = F(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        inv = a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / inv
            if f == 0:
                continue
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    assert d.denominator == 1
    return d.numerator


def hnf_rows(rows, n):
    """Row-style HNF of integer rows; returns the nonzero rows."""
    a = [list(r) for r in rows]
    pivots = []
    col = 0
    r0 = 0
    while col < n and r0 < len(a):
        piv = None
        for r in range(r0, len(a)):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        a[r0], a[piv] = a[piv], a[r0]
        # Euclid the column below r0 to zero.
        for r in range(r0 + 1, len(a)):
            while a[r][col] != 0:
                q = a[r0][col] // a[r][col]
                for k in range(n):
                    a[r0][k] -= q * a[r][k]
                a[r0], a[r] = a[r], a[r0]
        if a[r0][col] < 0:
            a[r0] = [-x for x in a[r0]]
        for r in range(r0):
            q = a[r][col] // a[r0][col]
            if q:
                for k in range(n):
                    a[r][k] -= q * a[r0][k]
        pivots.append(col)
        r0 += 1
        col += 1
    return [row for row in a[:r0]]


def gram_of(basis, scale_div=1):
    n = len(basis)
    g = []
    for i in range(n):
        row = []
        for j in range(n):
            s = sum(basis[i][k] * basis[j][k] for k in range(len(basis[i])))
            assert s % scale_div == 0, (i, j, s, scale_div)
            row.append(s // scale_div)
        g.append(row)
    return g


# ----------------------------------------------------------------- codes

def golay_codewords():
    """Extended binary Golay [24,12,8] from the length-23 QR cyclic code."""
    g = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1
    basis = []
    for i in range(12):
        w = g << i  # g(x) * x^i, degree <= 22 < 23
        vec = [(w >> b) & 1 for b in range(23)]
        vec.append(sum(vec) % 2)  # overall parity
        basis.append(vec)
    words = [[0] * 24]
    for b in basis:
        words += [[(x + y) % 2 for x, y in zip(w, b)] for w in words]
    dist = {}
    for w in words:
        dist[sum(w)] = dist.get(sum(w), 0) + 1
    assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, dist
    return basis, words


def rm14_basis():
    """Reed-Muller RM(1,4): all-ones plus the four coordinate functions."""
    rows = [[1] * 16]
    for bit in range(4):
        rows.append([(i >> bit) & 1 for i in range(16)])
    return rows


def hexacode():
    """[6,3,4] hexacode over GF(4): (a, b, c, f(1), f(w), f(w^2)) with
    f(x) = a x^2 + b x + c. GF(4) elements coded 0,1,2,3 = 0,1,w,w^2."""
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    words = []
    for a in range(4):
        for b in range(4):
            for c in range(4):
                w = [a, b, c]
                for x in (1, 2, 3):
                    x2 = mul[x][x]
                    w.append(add[add[mul[a][x2]][mul[b][x]]][c])
                words.append(w)
    wts = {}
    for w in words:
        k = sum(1 for x in w if x)
        wts[k] = wts.get(k, 0) + 1
    assert wts == {0: 1, 4: 45, 6: 18}, wts
    gens = [w for w in words
            if w[:3] in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    assert len(gens) == 3
    return gens


# --------------------------------------------------------------- lattices

def make_simple():
    write("z2.json", lattice_entry("Z2", ident(2), "standard cubic lattice"))
    write("z3.json", lattice_entry("Z3", ident(3), "standard cubic lattice"))
    write("a2.json", lattice_entry("A2", [[2, 1], [1, 2]],
                                   "hexagonal root lattice"))
    d4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    write("d4.json", lattice_entry("D4", d4, "root basis Gram (Cartan matrix)"))
    # Simply laced root lattices: Gram = Cartan matrix.
    def cartan(n, links):
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in links:
            c[i][j] = c[j][i] = -1
        return c
    e6 = cartan(6, [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
    e7 = cartan(7, [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)])
    e8 = cartan(8, [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)])
    assert det_int(e6) == 3 and det_int(e7) == 2 and det_int(e8) == 1
    write("e6.json", lattice_entry("E6", e6, "root basis Gram (Cartan matrix)"))
    write("e7.json", lattice_entry("E7", e7, "root basis Gram (Cartan matrix)"))
    write("e8.json", lattice_entry("E8", e8, "root basis Gram (Cartan matrix)"))


def make_bw16():
    """L = {x in Z^16: x mod 2 in RM(1,4), sum x == 0 mod 4}; Gram/2."""
    gens = [r[:] for r in rm14_basis()]
    for i in range(1, 16):
        gens.append([2 if k == 0 else (-2 if k == i else 0) for k in range(16)])
    gens.append([2 if k in (0, 1) else 0 for k in range(16)])
    gens.append([4 if k == 0 else 0 for k in range(16)])
    basis = hnf_rows(gens, 16)
    assert len(basis) == 16
    gram = gram_of(basis, scale_div=2)
    assert det_int(gram) == 2 ** 8
    assert all(gram[i][i] % 2 == 0 for i in range(16))
    write("bw16.json", lattice_entry(
        "BW16", gram,
        "Barnes-Wall: construction B on RM(1,4), quadratic form halved"))


def make_k12():
    """K12 over the Eisenstein integers: x in E^6 with x mod 2 in the
    hexacode (E/2E = GF(4), w -> w). Real Gram from the trace form, halved.
    Coordinates per Eisenstein entry: (a, b) for a + b w."""
    lift = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (-1, -1)}  # 0,1,w,w^2

    def emul(x, y):  # (a+bw)(c+dw), w^2 = -1-w
        a, b = x
        c, d = y
        return (a * c - b * d, a * d + b * c - b * d)

    w = (0, 1)
    gens = []
    for cw in hexacode():
        vec = [lift[x] for x in cw]
        gens.append(vec)
        gens.append([emul(w, z) for z in vec])
    for i in range(6):
        for unit in ((2, 0), (0, 2)):
            gens.append([unit if k == i else (0, 0) for k in range(6)])
    rows = [[c for z in v for c in z] for v in gens]
    basis = hnf_rows(rows, 12)
    assert len(basis) == 12

    def tr_pair(u, v):  # sum_i tr(u_i conj(v_i)), tr(a+bw) = 2a - b
        s = 0
        for i in range(6):
            a, b = u[2 * i], u[2 * i + 1]
            c, d = v[2 * i], v[2 * i + 1]
            # conj(c+dw) = (c-d) - dw; product with (a+bw):
            p = emul((a, b), (c - d, -d))
            s += 2 * p[0] - p[1]
        return s

    gram = []
    for i in range(12):
        row = []
        for j in range(12):
            s = tr_pair(basis[i], basis[j])
            assert s % 2 == 0
            row.append(s // 2)
        gram.append(row)
    assert det_int(gram) == 3 ** 6, det_int(gram)
    assert all(gram[i][i] % 2 == 0 for i in range(12))
    write("k12.json", lattice_entry(
        "K12", gram,
        "Coxeter-Todd: hexacode lattice over the Eisenstein integers mod 2, "
        "trace form halved"))


def make_leech():
    """x in Z^24, all coords same parity m, (x - m)/2 mod 2 in the Golay
    code, sum x == 4m mod 8; Gram = B B^T / 8."""
    gbasis, _ = golay_codewords()
    gens = [[2 * x for x in c] for c in gbasis]
    for i in range(1, 24):
        gens.append([4 if k == 0 else (-4 if k == i else 0) for k in range(24)])
    gens.append([4 if k in (0, 1) else 0 for k in range(24)])
    gens.append([-3 if k == 0 else 1 for k in range(24)])
    basis = hnf_rows(gens, 24)
    assert len(basis) == 24
    gram = gram_of(basis, scale_div=8)
    assert det_int(gram) == 1, det_int(gram)
    assert all(gram[i][i] % 2 == 0 for i in range(24))
    write("leech.json", lattice_entry(
        "Leech", gram,
        "Golay-code construction, quadratic form divided by 8"))


# ----------------------------------------------------------------- groups

def make_groups():
    def perm_mat(p):
        n = len(p)
        return [[1 if p[j] == i else 0 for j in range(n)] for i in range(n)]

    d4_gens = [
        perm_mat([1, 0, 2, 3]),
        perm_mat([1, 2, 3, 0]),
        [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [["1/2", "1/2", "1/2", "1/2"],
         ["1/2", "1/2", "-1/2", "-1/2"],
         ["1/2", "-1/2", "1/2", "-1/2"],
         ["1/2", "-1/2", "-1/2", "1/2"]],
    ]
    write("d4_aut.json", {
        "n": 4,
        "comment": "signed permutations and the halved Hadamard reflection; "
                   "closure is the full automorphism group of D4",
        "generators": d4_gens,
    })
    sp3 = [
        perm_mat([1, 0, 2]),
        perm_mat([1, 2, 0]),
        [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
    ]
    write("signed_perm3.json", {
        "n": 3,
        "comment": "signed permutation group of R^3 (order 48)",
        "generators": sp3,
    })

    # Conjugacy-class style data for the D4 automorphism group: elements
    # grouped by their power-trace vector (that is all the character
    # computation consumes), traces for g^1..g^6.
    mats = []
    seen = set()
    gens = []
    for g in d4_gens:
        gens.append([[Fraction(x) if not isinstance(x, str) else
                      Fraction(x) for x in row] for row in g])
    idm = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]

    def mmul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)]
                for i in range(4)]

    def key(m):
        return tuple(tuple(x for x in row) for row in m)

    frontier = [idm]
    seen.add(key(idm))
    mats.append(idm)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                p = mmul(e, g)
                k = key(p)
                if k not in seen:
                    seen.add(k)
                    mats.append(p)
                    nxt.append(p)
        frontier = nxt
    assert len(mats) == 1152, len(mats)
    classes = {}
    for m in mats:
        traces = []
        p = m
        for _ in range(6):
            traces.append(sum(p[i][i] for i in range(4)))
            p = mmul(p, m)
        k = tuple(traces)
        classes[k] = classes.get(k, 0) + 1
    write("d4_aut_classes.json", {
        "n": 4,
        "order": 1152,
        "comment": "elements of the D4 automorphism group grouped by their "
                   "power-trace vector tr(g^j), j = 1..6",
        "classes": [{"size": v,
                     "power_traces": [str(Fraction(t)) for t in k]}
                    for k, v in sorted(classes.items())],
    })


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    make_simple()
    make_bw16()
    make_k12()
    make_leech()
    make_groups()
