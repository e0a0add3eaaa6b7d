import numpy as np
import sys
sys.path.insert(0, "/root/pkg/tools")
from gww_search import build_domain, domain_polygon, fd_eigs

cands = [(2, 3, 1), (3, 1, 2), (2, 1, 1), (3, 1, 1)]
polys = {c: domain_polygon(build_domain(c)) for c in cands}
for c in cands:
    print(c, "area", polys[c].area, "bounds", polys[c].bounds)
for n in (24, 40, 48):
    print(f"--- n={n}")
    for c in cands:
        e = fd_eigs(polys[c], n, k=6)
        print(c, np.round(e, 6))
