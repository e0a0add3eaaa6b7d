"""Same as gww_enumerate2 but dedupe animals by their union polygon."""
import itertools
from collections import defaultdict

import numpy as np
import sys
sys.path.insert(0, "/root/pkg/tools")
from gww_enumerate2 import (tris, tri_verts, tri_id, nbrs, compatible,
                            polygon_of, fd_eigs, CELL_OK)
from shapely.geometry import Polygon


def clean_ring(pts):
    out = []
    for p in pts:
        if not out or not np.allclose(p, out[-1], atol=1e-9):
            out.append(np.asarray(p, float))
    if np.allclose(out[0], out[-1], atol=1e-9):
        out.pop()
    changed = True
    while changed:
        changed = False
        n = len(out)
        for i in range(n):
            a, b, c = out[(i - 1) % n], out[i], out[(i + 1) % n]
            cr = (b - a)[0] * (c - b)[1] - (b - a)[1] * (c - b)[0]
            if abs(cr) < 1e-9:
                out.pop(i)
                changed = True
                break
    return np.round(np.array(out)).astype(int)


def poly_canon(ring):
    best = None
    for rot in range(4):
        c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][rot]
        Rm = np.array([[c, -s], [s, c]])
        for M in (Rm, Rm @ np.diag([1, -1])):
            q = ring @ M.T
            q = q - q.min(axis=0)
            seq = [tuple(map(int, p)) for p in q]
            for s2 in (seq, seq[::-1]):
                for k in range(len(s2)):
                    cand = tuple(s2[k:] + s2[:k])
                    if best is None or cand < best:
                        best = cand
    return best


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

shapes = {}
for an in level:
    poly = polygon_of(an)
    if poly is None:
        continue
    ring = clean_ring(np.array(poly.exterior.coords[:-1]))
    shapes.setdefault(poly_canon(ring), (ring, poly))
print("distinct simple shapes:", len(shapes))

buckets = defaultdict(list)
for key, (ring, poly) in shapes.items():
    e = fd_eigs(poly, 8, k=6)
    bkey = (round(poly.length, 6),) + tuple(np.round(e, 7))
    buckets[bkey].append(key)

pairs = []
for bkey, keys in buckets.items():
    if len(keys) < 2:
        continue
    for a, b in itertools.combinations(keys, 2):
        ok = True
        for n in (12, 16):
            ea, eb = fd_eigs(shapes[a][1], n), fd_eigs(shapes[b][1], n)
            if np.max(np.abs(ea - eb) / np.abs(ea)) > 1e-9:
                ok = False
                break
        if ok:
            pairs.append((a, b))

print("genuinely non-congruent isospectral pairs:", len(pairs))
for a, b in pairs:
    print("\npair:")
    print("  P:", [tuple(p) for p in shapes[a][0]])
    print("  Q:", [tuple(p) for p in shapes[b][0]])
    ea, eb = fd_eigs(shapes[a][1], 32), fd_eigs(shapes[b][1], 32)
    print("  n=32 eigs:", np.round(ea, 6), " maxreldiff %.1e" % np.max(np.abs(ea - eb) / ea))
