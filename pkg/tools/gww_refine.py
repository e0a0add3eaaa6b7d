"""Refine FD eigenvalues for the drum candidates and extrapolate to h=0."""
import numpy as np
import sys
sys.path.insert(0, "/root/pkg/tools")
from gww_search import build_domain, domain_polygon, fd_eigs

cands = [(2, 3, 1), (3, 1, 2), (2, 1, 1), (3, 1, 1)]
polys = {}
for c in cands:
    p = domain_polygon(build_domain(c))
    # clean vertex list: drop duplicate and collinear points
    pts = np.array(p.exterior.coords[:-1])
    keep = []
    n = len(pts)
    for i in range(n):
        a, b, cc = pts[(i - 1) % n], pts[i], pts[(i + 1) % n]
        if np.allclose(a, b):
            continue
        cross = (b - a)[0] * (cc - b)[1] - (b - a)[1] * (cc - b)[0]
        if abs(cross) > 1e-9:
            keep.append(tuple(b))
    polys[c] = p
    print(c, "cleaned verts:", keep)

ns = [16, 24, 32, 48, 64]
eigs = {c: {} for c in cands}
for n in ns:
    for c in cands:
        eigs[c][n] = fd_eigs(polys[c], n, k=6)
    print("n =", n, "done")

for a, b in [((2, 3, 1), (3, 1, 2)), ((2, 1, 1), (3, 1, 1))]:
    print("\npair", a, b)
    for n in ns:
        d = np.abs(eigs[a][n] - eigs[b][n]) / eigs[a][n]
        print(f"  h=1/{n}: per-eig rel diff", np.round(d, 5))
