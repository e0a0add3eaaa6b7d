"""Find the GWW pair by refinement: among all 316 shapes, locate the
non-congruent pair whose FD spectral difference vanishes as h -> 0."""
import itertools
from collections import defaultdict

import numpy as np
import sys
sys.path.insert(0, "/root/pkg/tools")
from gww_enumerate2 import (tris, tri_verts, tri_id, nbrs, compatible,
                            polygon_of, fd_eigs)
from gww_enumerate3 import clean_ring, poly_canon

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

# group by perimeter, then match coarse spectra with loose tolerance
groups = defaultdict(list)
for key, (ring, poly) in shapes.items():
    groups[round(poly.length, 6)].append(key)

eig_cache = {}
def eigs(key, n):
    if (key, n) not in eig_cache:
        eig_cache[(key, n)] = fd_eigs(shapes[key][1], n, k=6)
    return eig_cache[(key, n)]

cands = []
for perim, keys in groups.items():
    if len(keys) < 2:
        continue
    for a, b in itertools.combinations(keys, 2):
        d16 = np.max(np.abs(eigs(a, 16) - eigs(b, 16)) / eigs(a, 16))
        if d16 > 0.04:
            continue
        d32 = np.max(np.abs(eigs(a, 32) - eigs(b, 32)) / eigs(a, 32))
        if d32 < d16 / 1.5:
            cands.append((a, b, d16, d32))

print("refinement candidates:", len(cands))
for a, b, d16, d32 in cands:
    d64 = np.max(np.abs(eigs(a, 64) - eigs(b, 64)) / eigs(a, 64))
    verdict = "ISOSPECTRAL" if d64 < d32 / 1.5 and d64 < 3e-3 else "no"
    print(f"d16={d16:.2e} d32={d32:.2e} d64={d64:.2e} -> {verdict}")
    if verdict == "ISOSPECTRAL":
        print("  P:", [tuple(p) for p in shapes[a][0]])
        print("  Q:", [tuple(p) for p in shapes[b][0]])
        print("  eigs n=64:", np.round(eigs(a, 64), 5))
