"""Enumerate all 7-half-square polyabolo animals on the integer grid (any
diagonal orientation per cell) and find the non-congruent isospectral pair."""
import itertools
from collections import defaultdict

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from shapely.geometry import Point, Polygon
from shapely.ops import unary_union

R = 5


def tri_verts(i, j, o):
    a, b, c, d = (i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)
    return {"SW": (a, b, d), "NE": (b, c, d), "SE": (a, b, c), "NW": (a, c, d)}[o]


CELL_OK = [frozenset(), *(frozenset([o]) for o in ("SW", "NE", "SE", "NW")),
           frozenset(["SW", "NE"]), frozenset(["SE", "NW"])]
CELL_OK = set(CELL_OK)

tris = []
for i in range(-R, R):
    for j in range(-R, R):
        for o in ("SW", "NE", "SE", "NW"):
            tris.append((i, j, o))
tri_id = {t: k for k, t in enumerate(tris)}


def tri_edges(t):
    v = tri_verts(*t)
    return [frozenset((v[0], v[1])), frozenset((v[1], v[2])), frozenset((v[0], v[2]))]


edge_map = defaultdict(list)
for t in tris:
    for e in tri_edges(t):
        edge_map[e].append(tri_id[t])

nbrs = defaultdict(set)
for e, ts in edge_map.items():
    for a, b in itertools.combinations(ts, 2):
        ia, ja, oa = tris[a]
        ib, jb, ob = tris[b]
        if (ia, ja) == (ib, jb) and frozenset([oa, ob]) not in CELL_OK:
            continue
        nbrs[a].add(b)
        nbrs[b].add(a)


def compatible(an, nb):
    i, j, o = tris[nb]
    cell = {tris[t][2] for t in an if tris[t][:2] == (i, j)}
    return frozenset(cell | {o}) in CELL_OK


t0 = tri_id[(0, 0, "SW")]
level = {frozenset([t0])}
for size in range(2, 8):
    nxt = set()
    for an in level:
        for t in an:
            for nb in nbrs[t]:
                if nb not in an and compatible(an, nb):
                    nxt.add(an | {nb})
    level = nxt
    print("size", size, "anchored animals:", len(level))


def canon(an):
    P = np.array([v for t in an for v in tri_verts(*tris[t])], float)
    best = None
    for rot in range(4):
        c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][rot]
        Rm = np.array([[c, -s], [s, c]])
        for M in (Rm, Rm @ np.diag([1, -1])):
            Q = P @ M.T
            Q = Q - Q.min(axis=0)
            keys = []
            for k in range(0, len(Q), 3):
                keys.append(tuple(sorted(map(tuple, np.round(Q[k:k + 3]).astype(int)))))
            form = tuple(sorted(keys))
            if best is None or form < best:
                best = form
    return best


classes = {}
for an in level:
    classes.setdefault(canon(an), an)
print("congruence classes:", len(classes))


def polygon_of(an):
    u = unary_union([Polygon(tri_verts(*tris[t])) for t in an])
    if u.geom_type != "Polygon" or list(u.interiors) or not u.is_valid:
        return None
    return u


def fd_eigs(poly, n, k=8):
    h = 1.0 / n
    minx, miny, maxx, maxy = poly.bounds
    xs = np.arange(round(minx * n) + 1, round(maxx * n)) * h
    ys = np.arange(round(miny * n) + 1, round(maxy * n)) * h
    nx, ny = len(xs), len(ys)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    pts = np.column_stack([X.ravel(), Y.ravel()])
    inside = np.array([poly.contains(Point(p)) for p in pts])
    idx = -np.ones(len(pts), int)
    idx[inside] = np.arange(inside.sum())
    rows, cols, vals = [], [], []
    for p in range(len(pts)):
        if idx[p] < 0:
            continue
        rows.append(idx[p]); cols.append(idx[p]); vals.append(4.0 / h**2)
        i, j = divmod(p, ny)
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            ii, jj = i + di, j + dj
            if 0 <= ii < nx and 0 <= jj < ny and idx[ii * ny + jj] >= 0:
                rows.append(idx[p]); cols.append(idx[ii * ny + jj]); vals.append(-1.0 / h**2)
    A = sp.csr_matrix((vals, (rows, cols)), shape=(inside.sum(),) * 2)
    return spla.eigsh(A, k=k, sigma=0, which="LM")[0]


buckets = defaultdict(list)
polys = {}
simple = 0
for form, an in classes.items():
    poly = polygon_of(an)
    if poly is None:
        continue
    simple += 1
    polys[form] = poly
    e = fd_eigs(poly, 8, k=6)
    key = (round(poly.length, 6),) + tuple(np.round(e, 7))
    buckets[key].append(form)
print("simple-polygon classes:", simple)

found = []
for key, forms in buckets.items():
    if len(forms) < 2:
        continue
    for a, b in itertools.combinations(forms, 2):
        ok = True
        for n in (12, 16):
            ea, eb = fd_eigs(polys[a], n), fd_eigs(polys[b], n)
            if np.max(np.abs(ea - eb) / np.abs(ea)) > 1e-9:
                ok = False
                break
        if ok:
            found.append((a, b))

print("\nnon-congruent isospectral pairs found:", len(found))
for a, b in found:
    for form, poly in ((a, polys[a]), (b, polys[b])):
        ring = np.array(poly.exterior.coords[:-1])
        print("  verts:", [tuple(map(int, np.round(p))) for p in ring])
    ea, eb = fd_eigs(polys[a], 32), fd_eigs(polys[b], 32)
    print("  n=32 eigs A:", np.round(ea, 6))
    print("  max rel diff n=32:", np.max(np.abs(ea - eb) / ea))
    print()
