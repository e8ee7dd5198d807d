#!/usr/bin/env python3
"""Generate data/embeddings.json, the inclusion chart consumed by `svoa chart`.

Each classical embedding is described on maximal tori in epsilon coordinates:
target labels -> target eps (rational) -> source eps (integer torus map)
-> source labels. The composite must be an integer matrix.
"""
import json
import sys
from fractions import Fraction as F
from pathlib import Path


# ---------------------------------------------------------------- groups
# A group is a list of factors plus label<->eps maps for the whole product.

def spin(m, level, current="v"):
    """Spin(m) in stable conventions; m=3 is A1 at level 2k, m=4 is A1 x A1."""
    n = m // 2
    if m == 3:
        facs = [("A", 1, 2 * level, "1" if current == "v" else current)]
    elif m == 4:
        cur = {"v": ("1", "1"), "s+": ("0", "1"), "s-": ("1", "0")}[current]
        facs = [("A", 1, level, cur[0]), ("A", 1, level, cur[1])]
    else:
        facs = [("B" if m % 2 else "D", n, level, current)]
    odd = m % 2 == 1

    def to_eps(lab):
        x = [F(0)] * n
        for i, l in enumerate(lab):
            node = i + 1
            if odd:
                # omega_i = e1+..+ei (i<n), omega_n = half sum
                if node < n:
                    for j in range(node):
                        x[j] += l
                else:
                    for j in range(n):
                        x[j] += F(l, 2)
            else:
                if node <= n - 2:
                    for j in range(node):
                        x[j] += l
                elif node == n - 1:
                    for j in range(n):
                        x[j] += F(l, 2) * (-1 if j == n - 1 else 1)
                else:
                    for j in range(n):
                        x[j] += F(l, 2)
        return x

    def from_eps(x):
        lab = []
        if odd:
            for i in range(n - 1):
                lab.append(x[i] - x[i + 1])
            lab.append(2 * x[n - 1])
        else:
            for i in range(n - 2):
                lab.append(x[i] - x[i + 1])
            lab.append(x[n - 2] - x[n - 1])
            lab.append(x[n - 2] + x[n - 1])
        return lab

    return {"factors": facs, "dim": n, "to_eps": to_eps, "from_eps": from_eps}


def sp(n, level, current="c"):
    facs = [("A", 1, level, "1")] if n == 1 else [("C", n, level, current)]

    def to_eps(lab):
        x = [F(0)] * n
        for i, l in enumerate(lab):
            for j in range(i + 1):
                x[j] += l
        return x

    def from_eps(x):
        return [x[i] - x[i + 1] for i in range(n - 1)] + [x[n - 1]]

    return {"factors": facs, "dim": n, "to_eps": to_eps, "from_eps": from_eps}


def su(n, level, current):
    facs = [("A", n - 1, level, current)]

    def to_eps(lab):
        x = [F(0)] * n
        for j in range(n):
            x[j] = sum(F(l) for l in lab[j:])
        return x

    def from_eps(x):
        return [x[i] - x[i + 1] for i in range(n - 1)]

    return {"factors": facs, "dim": n, "to_eps": to_eps, "from_eps": from_eps}


def power(g, times):
    return product([g] * times)


def product(gs):
    facs = [f for g in gs for f in g["factors"]]
    ranks = [sum(f[1] for f in g["factors"]) for g in gs]
    dims = [g["dim"] for g in gs]

    def to_eps(lab):
        out, off = [], 0
        for g, r in zip(gs, ranks):
            out += g["to_eps"](lab[off:off + r])
            off += r
        return out

    def from_eps(x):
        out, off = [], 0
        for g, d in zip(gs, dims):
            out += g["from_eps"](x[off:off + d])
            off += d
        return out

    return {"factors": facs, "dim": sum(dims), "to_eps": to_eps, "from_eps": from_eps, "parts": dims}


def rank(g):
    return sum(f[1] for f in g["factors"])


# ---------------------------------------------------------------- torus maps
# Each map takes target eps coordinates to source eps coordinates.

def first(k):
    return lambda y: y[:k]


def identity(y):
    return list(y)


def diagonal(copies, d):
    return lambda y: [sum(y[c * d + j] for c in range(copies)) for j in range(d)]


def fold(n):
    """Sp(2n) or Spin(2n) inside SU(2n): y_i = x_i - x_{2n+1-i}."""
    return lambda x: [x[i] - x[2 * n - 1 - i] for i in range(n)]


def unitary(n):
    """U(n) inside SO(2n), class whose s+ spinor contains the n/2-form."""
    return lambda y: list(y[:n - 1]) + [-y[n - 1]]


def factorwise(maps, dims):
    def f(y):
        out, off = [], 0
        for mp, d in zip(maps, dims):
            out += mp(y[off:off + d])
            off += d
        return out
    return f


def projection(src, tgt, torus):
    rows = []
    r = rank(tgt)
    cols = []
    for j in range(r):
        e = [0] * r
        e[j] = 1
        cols.append(src["from_eps"](torus(tgt["to_eps"](e))))
    for i in range(rank(src)):
        row = []
        for j in range(r):
            v = F(cols[j][i])
            if v.denominator != 1:
                raise ValueError("non-integral projection")
            row.append(int(v))
        rows.append(row)
    return rows


# ---------------------------------------------------------------- exceptional data

def e7_cartan():
    bonds = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]
    a = [[2 if i == j else 0 for j in range(7)] for i in range(7)]
    for i, j in bonds:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return a


def minuscule_orbit(cartan, top):
    seen, todo = {tuple(top)}, [tuple(top)]
    while todo:
        w = todo.pop()
        for i, c in enumerate(w):
            if c > 0:
                v = tuple(w[j] - c * cartan[i][j] for j in range(len(w)))
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def d6_in_e7():
    """D6 nodes 1..4 = E7 nodes 7,6,5,4; nodes 5,6 = {3,2}, oriented so 56 contains omega_6."""
    orbit = minuscule_orbit(e7_cartan(), [0, 0, 0, 0, 0, 0, 1])
    for tail in ([3, 2], [2, 3]):
        nodes = [7, 6, 5, 4] + tail
        rows = [[1 if e == n else 0 for e in range(1, 8)] for n in nodes]
        images = {tuple(sum(r[j] * w[j] for j in range(7)) for r in rows) for w in orbit}
        if (0, 0, 0, 0, 0, 1) in images:
            return rows
    raise RuntimeError("no orientation of D6 in E7 contains the spinor")


def block_diag(*blocks):
    rows = sum(len(b) for b in blocks)
    cols = sum(len(b[0]) for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[r0 + i][c0 + j] = v
        r0 += len(b)
        c0 += len(b[0])
    return out


# ---------------------------------------------------------------- chart

def factor_json(f):
    t, r, k, cur = f
    return {"type": t, "rank": r, "level": k, "current": cur}


def index_block(src, tgt, pairs):
    """pairs: (source factor, target factor) with index 1 unless given."""
    m = [[0] * len(tgt["factors"]) for _ in src["factors"]]
    for p in pairs:
        s, t = p[0], p[1]
        m[s][t] = p[2] if len(p) > 2 else 1
    return m


def spin_parts(m):
    """Number of simple factors of Spin(m)."""
    return 2 if m == 4 else 1


def edge(name, src, tgt, torus=None, proj=None, index=None, contains=True, triality=False, fixtures=None):
    p = proj if proj is not None else projection(src, tgt, torus)
    return {
        "name": name,
        "source": [factor_json(f) for f in src["factors"]],
        "target": [factor_json(f) for f in tgt["factors"]],
        "projection": p,
        "expected_index": index,
        "expect_contains": contains,
        "triality": triality,
        "fixtures": fixtures or {},
    }


def diag_index(n_src_parts, copies):
    # source part a lands in part a of every copy
    return [[1 if t % n_src_parts == a else 0 for t in range(n_src_parts * copies)] for a in range(n_src_parts)]


def same_index(n):
    return [[1 if s == t else 0 for t in range(n)] for s in range(n)]


def spin_chain_index(m, copies):
    """Spin(m)^c inside Spin(m+1)^c, factorwise."""
    ps, pt = spin_parts(m), spin_parts(m + 1)
    out = []
    for c in range(copies):
        for a in range(ps):
            out.append([1 if t // pt == c else 0 for t in range(pt * copies)])
    return out


def build():
    edges = []
    # Spin(m)_3 chain and Spin(m)_1^3 chain, m = 3..9 (m=9 -> 10 stands for the dots).
    for m in range(3, 10):
        s3, t3 = spin(m, 3), spin(m + 1, 3)
        edges.append(edge(f"Spin({m})_3 < Spin({m + 1})_3", s3, t3, first(m // 2),
                          index=spin_chain_index(m, 1)))
        s1, t1 = power(spin(m, 1), 3), power(spin(m + 1, 1), 3)
        edges.append(edge(f"Spin({m})_1^3 < Spin({m + 1})_1^3", s1, t1,
                          factorwise([first(m // 2)] * 3, [(m + 1) // 2] * 3),
                          index=spin_chain_index(m, 3)))
        edges.append(edge(f"Spin({m})_3 < Spin({m})_1^3", spin(m, 3), power(spin(m, 1), 3),
                          diagonal(3, m // 2), index=diag_index(spin_parts(m), 3)))

    # Symplectic / unitary row for the small Spin(m)_3 and Spin(m)_1^3 nodes.
    C16, C132, C23 = sp(1, 6), power(sp(1, 3), 2), sp(2, 3)
    A33 = su(4, 3, "2")
    D43t = spin(8, 3, "s+")
    edges.append(edge("Sp(2x1)_6 < Sp(2x1)_3^2", C16, C132, diagonal(2, 1), index=[[1, 1]]))
    edges.append(edge("Sp(2x1)_3^2 < Sp(2x2)_3", C132, C23, identity, index=[[1], [1]]))
    edges.append(edge("Sp(2x2)_3 < SU(4)_3", C23, A33, fold(2), index=[[1]]))
    edges.append(edge("SU(4)_3 < Spin(8)_3 (triality)", A33, D43t, identity, index=[[1]], triality=True))

    C123, C116, C213 = power(sp(1, 2), 3), power(sp(1, 1), 6), power(sp(2, 1), 3)
    A313 = power(su(4, 1, "2"), 3)
    D413t = power(spin(8, 1, "s+"), 3)
    edges.append(edge("Sp(2x1)_2^3 < Sp(2x1)_1^6", C123, C116,
                      factorwise([diagonal(2, 1)] * 3, [2] * 3), index=[[1 if t // 2 == s else 0 for t in range(6)] for s in range(3)]))
    edges.append(edge("Sp(2x1)_1^6 < Sp(2x2)_1^3", C116, C213, identity,
                      index=[[1 if t == s // 2 else 0 for t in range(3)] for s in range(6)]))
    edges.append(edge("Sp(2x2)_1^3 < SU(4)_1^3", C213, A313, factorwise([fold(2)] * 3, [4] * 3),
                      index=same_index(3)))
    edges.append(edge("SU(4)_1^3 < Spin(8)_1^3 (triality)", A313, D413t, identity, index=same_index(3),
                      triality=True))

    C32, C312, C61 = sp(3, 2), power(sp(3, 1), 2), sp(6, 1)
    A52, A512, A111 = su(6, 2, "3"), power(su(6, 1, "3"), 2), su(12, 1, "6")
    D62, D612, D121 = spin(12, 2, "s+"), power(spin(12, 1, "s+"), 2), spin(24, 1, "s+")
    D8D4 = product([spin(16, 1, "s+"), spin(8, 1, "s+")])

    edges.append(edge("Sp(2x1)_2^3 < Sp(2x3)_2", C123, C32, identity, index=[[1], [1], [1]]))
    edges.append(edge("Sp(2x1)_1^6 < Sp(2x3)_1^2", C116, C312, identity,
                      index=[[1 if t == s // 3 else 0 for t in range(2)] for s in range(6)]))
    edges.append(edge("Sp(2x2)_1^3 < Sp(2x6)_1", C213, C61, identity, index=[[1], [1], [1]]))
    edges.append(edge("SU(4)_1^3 < SU(12)_1", A313, A111, identity, index=[[1], [1], [1]]))
    edges.append(edge("Sp(2x3)_2 < Sp(2x3)_1^2", C32, C312, diagonal(2, 3), index=[[1, 1]]))
    edges.append(edge("Sp(2x3)_1^2 < Sp(2x6)_1", C312, C61, identity, index=[[1], [1]]))
    edges.append(edge("Sp(2x3)_2 < SU(6)_2", C32, A52, fold(3), index=[[1]]))
    edges.append(edge("Sp(2x3)_1^2 < SU(6)_1^2", C312, A512, factorwise([fold(3)] * 2, [6, 6]),
                      index=same_index(2)))
    edges.append(edge("Sp(2x6)_1 < SU(12)_1", C61, A111, fold(6), index=[[1]]))
    edges.append(edge("SU(6)_2 < Sp(2x6)_1", A52, C61, identity, index=[[2]]))
    edges.append(edge("SU(6)_2 < SU(6)_1^2", A52, A512, diagonal(2, 6), index=[[1, 1]]))
    edges.append(edge("SU(6)_1^2 < SU(12)_1", A512, A111, identity, index=[[1], [1]]))
    edges.append(edge("SU(6)_2 < Spin(12)_2", A52, D62, unitary(6), index=[[1]]))
    edges.append(edge("SU(6)_1^2 < Spin(12)_1^2", A512, D612, factorwise([unitary(6)] * 2, [6, 6]), index=same_index(2)))
    edges.append(edge("SU(12)_1 < Spin(24)_1", A111, D121, identity, index=[[1]],
                      fixtures={"restricted_dims": {"1": 2, "66": 2, "495": 2, "924": 1}}))
    edges.append(edge("Spin(12)_2 < SU(12)_1", D62, A111, fold(6), index=[[2]],
                      fixtures={"restricted_dims": {"462": 2}}))
    edges.append(edge("Spin(12)_2 < Spin(12)_1^2", D62, D612, diagonal(2, 6), index=[[1, 1]]))
    edges.append(edge("Spin(12)_1^2 < Spin(24)_1", D612, D121, identity, index=[[1], [1]],
                      fixtures={"restricted_dims": {"1024": 2}}))
    edges.append(edge("Spin(8)_1^3 < Spin(16)_1 x Spin(8)_1 (triality)", D413t, D8D4, identity,
                      index=[[1, 0], [1, 0], [0, 1]], triality=True,
                      fixtures={"restricted_dims": {"512": 2}}))
    edges.append(edge("Spin(16)_1 x Spin(8)_1 < Spin(24)_1", D8D4, D121, identity, index=[[1], [1]],
                      fixtures={"restricted_dims": {"1024": 2}}))

    # Exceptional edges: explicit label projections.
    d6e7 = d6_in_e7()
    e7 = [("E7", 7, 2, "z")]
    edges.append({
        "name": "Spin(12)_2 < E7,2", "source": [factor_json(f) for f in D62["factors"]],
        "target": [factor_json(f) for f in e7], "projection": d6e7, "expected_index": [[1]],
        "expect_contains": True, "triality": False, "fixtures": {}})
    edges.append({
        "name": "Spin(12)_1^2 < E7,1^2", "source": [factor_json(f) for f in D612["factors"]],
        "target": [factor_json(("E7", 7, 1, "z"))] * 2, "projection": block_diag(d6e7, d6e7),
        "expected_index": same_index(2), "expect_contains": True, "triality": False, "fixtures": {}})
    i7 = [[1 if i == j else 0 for j in range(7)] for i in range(7)]
    edges.append({
        "name": "E7,2 < E7,1^2", "source": [factor_json(f) for f in e7],
        "target": [factor_json(("E7", 7, 1, "z"))] * 2, "projection": [r + r for r in i7],
        "expected_index": [[1, 1]], "expect_contains": True, "triality": False, "fixtures": {}})
    edges.append({
        "name": "E7,2 < E8,2", "source": [factor_json(f) for f in e7],
        "target": [factor_json(("E8", 8, 2, "3875"))], "projection": [r + [0] for r in i7],
        "expected_index": [[1]], "expect_contains": False, "triality": False,
        "fixtures": {"restricted_dims": {"1": 1, "1539": 1, "56": 2, "912": 2, "133": 3}}})
    return {"version": 1, "edges": edges}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "embeddings.json"
    chart = build()
    out.write_text(json.dumps(chart, indent=1) + "\n")
    print(f"wrote {len(chart['edges'])} edges to {out}")


if __name__ == "__main__":
    main()
