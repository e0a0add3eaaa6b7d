"""Snap drum candidates to integer coordinates, test congruence properly,
and confirm which pair is the genuine (non-congruent) isospectral pair."""
import itertools
import numpy as np
import sys
sys.path.insert(0, "/root/pkg/tools")
from gww_search import build_domain, domain_polygon, fd_eigs
from shapely.geometry import Polygon


def clean_ring(pts):
    """Dedupe consecutive duplicates, then drop collinear vertices."""
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
    return np.array(out)


def canonical(pts):
    forms = []
    for rot in range(4):
        c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][rot]
        R = np.array([[c, -s], [s, c]])
        for M in (R, R @ np.diag([1, -1])):
            q = pts @ M.T
            q = q - q.min(axis=0)
            # canonical cyclic order: all rotations of the ring, both directions
            ring = [tuple(map(float, p)) for p in np.round(q, 9)]
            best = None
            for seq in (ring, ring[::-1]):
                for k in range(len(seq)):
                    cand = tuple(seq[k:] + seq[:k])
                    if best is None or cand < best:
                        best = cand
            forms.append(best)
    return min(forms)


cands = [(2, 1, 1), (2, 1, 2), (2, 3, 1), (3, 1, 1), (3, 1, 2), (3, 3, 1)]
info = {}
for c in cands:
    poly = domain_polygon(build_domain(c))
    pts = clean_ring(np.array(poly.exterior.coords[:-1]))
    pts = np.round(pts)  # snap to exact integers
    assert np.allclose(Polygon(pts).area, 3.5), c
    info[c] = (pts, canonical(pts), Polygon(pts))
    print(c, "verts:", [tuple(int(v) for v in p) for p in pts])

print()
for a, b in itertools.combinations(cands, 2):
    if info[a][1] == info[b][1]:
        print(a, "CONGRUENT to", b)

print()
for n in (16, 32, 64):
    for a, b in [((2, 3, 1), (3, 1, 2))]:
        ea = fd_eigs(info[a][2], n, k=8)
        eb = fd_eigs(info[b][2], n, k=8)
        print(f"n={n}", a, "vs", b, "max rel diff %.2e" % np.max(np.abs(ea - eb) / ea))
        print("   eigs:", np.round(ea, 5))
