#!/usr/bin/env python3
"""Write data/groups/*.json: generators for the primitive groups of Table 1.

Points in the output are 1-based cycle strings. Every group's order and
primitivity is checked with sympy before it is written. Random searches use a
fixed seed so reruns produce the same files.
"""
import itertools
import json
import pathlib
import random
import sys

from sympy.combinatorics import Permutation, PermutationGroup
import sympy.core.random as sympy_random


def cycles(images):
    """1-based cycle string of a 0-based image list."""
    seen, parts = set(), []
    for s in range(len(images)):
        if s in seen or images[s] == s:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x + 1)
            x = images[x]
        parts.append("(" + ",".join(map(str, c)) + ")")
    return "".join(parts) or "()"


def perm_on(points, f):
    index = {p: i for i, p in enumerate(points)}
    return [index[f(p)] for p in points]


# projective lines over prime fields ---------------------------------------

INF = "inf"


def line_points(q):
    return list(range(q)) + [INF]


def mobius(q, a, b, c, d):
    def f(x):
        if x == INF:
            return INF if c == 0 else a * pow(c, -1, q) % q
        den = (c * x + d) % q
        if den == 0:
            return INF
        return (a * x + b) * pow(den, -1, q) % q
    return f


def primitive_root(q):
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in range(2, q) if (q - 1) % p == 0 and all(p % r for r in range(2, p))):
            return g
    raise ValueError(q)


def psl2(q):
    pts, w = line_points(q), primitive_root(q)
    gens = [perm_on(pts, mobius(q, 1, 1, 0, 1)), perm_on(pts, mobius(q, w * w % q, 0, 0, 1)),
            perm_on(pts, mobius(q, 0, q - 1, 1, 0))]
    return gens, [perm_on(pts, mobius(q, w, 0, 0, 1))]


def pgl2(q):
    gens, norm = psl2(q)
    return gens + norm, []


# GF(2^k) ------------------------------------------------------------------

def gf2_mul(a, b, k, poly):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> k:
            a ^= poly
    return r


def pgaml2_16():
    k, poly = 4, 0b10011
    inv = {a: next(b for b in range(1, 16) if gf2_mul(a, b, k, poly) == 1) for a in range(1, 16)}
    pts = list(range(16)) + [INF]

    def add1(x):
        return INF if x == INF else x ^ 1

    def times_w(x):
        return INF if x == INF else gf2_mul(x, 2, k, poly)

    def invert(x):
        return 0 if x == INF else INF if x == 0 else inv[x]

    def frob(x):
        return INF if x == INF else gf2_mul(x, x, k, poly)

    return [perm_on(pts, f) for f in (add1, times_w, invert, frob)], []


# matrices over small prime fields -----------------------------------------

def mat_vec(m, v, p):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) % p for i in range(len(m)))


def elementary(n, i, j):
    return [[1 if r == c else (1 if (r, c) == (i, j) else 0) for c in range(n)] for r in range(n)]


def normalized(v, p):
    for x in v:
        if x:
            s = pow(x, -1, p)
            return tuple(y * s % p for y in v)
    return v


def proj_points(n, p):
    return sorted({normalized(v, p) for v in itertools.product(range(p), repeat=n) if any(v)})


def psl3_3():
    pts = proj_points(3, 3)
    gens = [perm_on(pts, lambda v, m=elementary(3, i, j): normalized(mat_vec(m, v, 3), 3))
            for i in range(3) for j in range(3) if i != j]
    return gens, []


def gl4_2_matrices():
    return [elementary(4, i, j) for i in range(4) for j in range(4) if i != j]


def nonzero_vectors():
    return [v for v in itertools.product(range(2), repeat=4) if any(v)]


def psl4_2():
    pts = nonzero_vectors()
    return [perm_on(pts, lambda v, m=m: mat_vec(m, v, 2)) for m in gl4_2_matrices()], []


def affine(linear_perms_on_vectors):
    """Affine group 2^4:H on the 16 vectors, H given by permutations of F_2^4."""
    pts = list(itertools.product(range(2), repeat=4))
    translations = []
    for k in range(4):
        e = tuple(1 if i == k else 0 for i in range(4))
        translations.append(perm_on(pts, lambda v, e=e: tuple((a + b) % 2 for a, b in zip(v, e))))
    return translations + [perm_on(pts, f) for f in linear_perms_on_vectors], []


def symplectic_transvections():
    # form B(x, y) = x0 y1 + x1 y0 + x2 y3 + x3 y2
    def b(x, y):
        return (x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2]) % 2
    fns = []
    for v in itertools.product(range(2), repeat=4):
        if any(v):
            fns.append(lambda x, v=v: tuple((xi + b(x, v) * vi) % 2 for xi, vi in zip(x, v)))
    return fns


def linear_fns(matrices):
    return [lambda x, m=m: mat_vec(m, x, 2) for m in matrices]


def a7_in_gl4_2(rng):
    """Matrices generating a subgroup A_7 of GL(4,2), found by random search."""
    pts = nonzero_vectors()
    mats = gl4_2_matrices()
    gl = PermutationGroup([Permutation(perm_on(pts, lambda v, m=m: mat_vec(m, v, 2))) for m in mats])
    while True:
        a, b = gl.random(), gl.random()
        h = PermutationGroup([a, b])
        if h.order() == 2520:
            return [list(a.array_form), list(b.array_form)]


def a7_15(rng):
    gens = a7_in_gl4_2(rng)
    return gens, []


def two4_a7(rng):
    pts = nonzero_vectors()
    vectors = list(itertools.product(range(2), repeat=4))
    fns = []
    for g in a7_in_gl4_2(rng):
        table = {pts[i]: pts[g[i]] for i in range(15)}
        fns.append(lambda x, t=table: x if not any(x) else t[x])
    assert len(vectors) == 16
    return affine(fns)


# Mathieu groups -------------------------------------------------------------

def parse_1based(text, n):
    img = list(range(n))
    for part in text.strip("()").split(")("):
        c = [int(x) - 1 for x in part.split(",")]
        for i, x in enumerate(c):
            img[x] = c[(i + 1) % len(c)]
    return img


M24_GENS = [
    "(" + ",".join(str(i) for i in range(1, 24)) + ")",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
    "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)",
]


def m24():
    return [parse_1based(g, 24) for g in M24_GENS], []


def m23():
    return [parse_1based(g, 24)[:23] for g in M24_GENS[:2]], []


def m22_2(rng):
    g = PermutationGroup([Permutation(x) for x in m24()[0]])
    m22 = g.stabilizer(22).stabilizer(23)
    while True:
        t = g.random()
        if t(22) == 23 and t(23) == 22:
            break
    gens = [list(x.array_form) for x in m22.generators] + [list(t.array_form)]
    return [x[:22] for x in gens], []


def m12():
    q = 11
    pts = line_points(q)
    squares = {x * x % q for x in range(1, q)}

    def delta(x):
        if x == INF or x == 0:
            return x
        c = pow(x, 3, q)
        return c if x in squares else 9 * c % q

    gens = psl2(q)[0] + [perm_on(pts, delta)]
    return gens, []


def m11_12(rng):
    """Transitive M11 inside M12, found by random search over pairs."""
    g = PermutationGroup([Permutation(x) for x in m12()[0]])
    while True:
        a, b = g.random(), g.random()
        h = PermutationGroup([a, b])
        if h.is_transitive() and h.order() == 7920:
            return [list(a.array_form), list(b.array_form)], []


# ---------------------------------------------------------------------------

def build(rng):
    sp = affine(symplectic_transvections())
    return [
        ("psl2_11", "PSL(2,11)", 660, psl2(11), "Moebius maps on the projective line over GF(11)"),
        ("pgl2_11", "PGL(2,11)", 1320, pgl2(11), "Moebius maps on the projective line over GF(11)"),
        ("m11_12", "M11", 7920, m11_12(rng), "transitive subgroup M11 of M12"),
        ("m12", "M12", 95040, m12(), "PSL(2,11) with x -> x^3 (squares), 9x^3 (non-squares)"),
        ("psl3_3", "PSL(3,3)", 5616, psl3_3(), "elementary transvections on PG(2,3)"),
        ("pgl2_13", "PGL(2,13)", 2184, pgl2(13), "Moebius maps on the projective line over GF(13)"),
        ("a7_15", "A7", 2520, a7_15(rng), "subgroup A7 of GL(4,2) on the nonzero vectors"),
        ("psl4_2", "PSL(4,2)", 20160, psl4_2(), "elementary transvections on the nonzero vectors of GF(2)^4"),
        ("2e4_s6", "2^4:S6", 11520, sp, "translations and symplectic transvections, S6 = Sp(4,2)"),
        ("2e4_a7", "2^4:A7", 40320, two4_a7(rng), "translations and a subgroup A7 of GL(4,2)"),
        ("2e4_psl4_2", "2^4:PSL(4,2)", 322560, affine(linear_fns(gl4_2_matrices())), "AGL(4,2)"),
        ("pgaml2_16", "PGammaL(2,16)", 16320, pgaml2_16(), "x+1, wx, 1/x and Frobenius on PG(1,16)"),
        ("m22_2", "M22:2", 887040, m22_2(rng), "set stabiliser of {23,24} in M24"),
        ("m23", "M23", 10200960, m23(), "point stabiliser of 24 in M24"),
        ("m24", "M24", 244823040, m24(), "standard generators on 24 points"),
    ]


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/groups")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240501)
    # sympy's random elements draw from the global random module
    random.seed(20240501)
    sympy_random.seed(20240501)
    for stem, name, order, (gens, norm), how in build(rng):
        g = PermutationGroup([Permutation(x) for x in gens])
        if g.order() != order:
            raise SystemExit(f"{stem}: order {g.order()} != {order}")
        if not g.is_primitive():
            raise SystemExit(f"{stem}: not primitive")
        for n in norm:
            pn = Permutation(n)
            if any(not g.contains(pn ** -1 * Permutation(x) * pn) for x in gens):
                raise SystemExit(f"{stem}: normalizer element fails")
        doc = {
            "name": name,
            "degree": len(gens[0]),
            "order": order,
            "generators": [cycles(x) for x in gens],
            "normalizer": [cycles(x) for x in norm],
            "provenance": how,
        }
        (out / f"{stem}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print(stem, name, order)


if __name__ == "__main__":
    main()
