"""Derive the Gordon-Webb-Wolpert isospectral drum pair from the propeller
construction and verify isospectrality with a finite-difference eigensolver.

Each candidate domain is a "propeller": a central right isosceles triangle
(legs 1) with three blades of two triangles each, glued edge-to-edge by
reflections.  The central triangle's sides are labeled 1 (hypotenuse),
2 (horizontal leg), 3 (vertical leg); blade k attaches across side k, and
the outer triangle of blade k attaches across one of the inner triangle's
two free sides.  That leaves 2^3 = 8 candidate domains; the GWW pair is the
unique non-congruent isospectral pair among them.

Run: python3 tools/gww_search.py
"""

import itertools

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from shapely.geometry import Point, Polygon
from shapely.ops import unary_union


def reflect_point(p, a, b):
    """Reflect point p across the line through a, b."""
    p, a, b = np.asarray(p, float), np.asarray(a, float), np.asarray(b, float)
    d = b - a
    d = d / np.linalg.norm(d)
    ap = p - a
    return a + 2.0 * np.dot(ap, d) * d - ap


class Tri:
    """Labeled triangle: sides[k] = (i, j) vertex indices of side label k."""

    def __init__(self, verts, sides):
        self.verts = [np.asarray(v, float) for v in verts]
        self.sides = dict(sides)  # label -> (i, j)

    def reflect(self, label):
        i, j = self.sides[label]
        a, b = self.verts[i], self.verts[j]
        new = [reflect_point(v, a, b) for v in self.verts]
        return Tri(new, self.sides)

    def poly(self):
        return Polygon([tuple(v) for v in self.verts])


def build_domain(choice):
    """choice[k] = free-side label across which blade k's outer triangle glues."""
    base = Tri([(0, 0), (1, 0), (0, 1)], {1: (1, 2), 2: (0, 1), 3: (0, 2)})
    tris = [base]
    for k in (1, 2, 3):
        inner = base.reflect(k)
        outer = inner.reflect(choice[k - 1])
        tris += [inner, outer]
    return tris


def domain_polygon(tris):
    u = unary_union([t.poly() for t in tris])
    if u.geom_type != "Polygon" or list(u.interiors):
        return None
    if abs(u.area - 3.5) > 1e-9:
        return None
    return u


def canonical(poly):
    """Canonical form of an integer-vertex polygon under D4 + translation."""
    pts = np.array(poly.exterior.coords[:-1])
    forms = []
    mats = []
    for rot in range(4):
        c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][rot]
        R = np.array([[c, -s], [s, c]])
        mats += [R, R @ np.diag([1, -1])]
    for M in mats:
        q = pts @ M.T
        q = q - q.min(axis=0)
        form = tuple(sorted(map(tuple, np.round(q, 9))))
        forms.append(form)
    return min(forms)


def fd_eigs(poly, n, k=6):
    """First k Dirichlet eigenvalues by 5-point finite differences, h=1/n."""
    h = 1.0 / n
    minx, miny, maxx, maxy = poly.bounds
    xs = np.arange(minx + h, maxx, h)
    ys = np.arange(miny + h, maxy, h)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    pts = np.column_stack([X.ravel(), Y.ravel()])
    inside = np.array([poly.contains(Point(p)) for p in pts])
    idx = -np.ones(len(pts), int)
    idx[inside] = np.arange(inside.sum())
    nin = inside.sum()
    rows, cols, vals = [], [], []
    nx, ny = len(xs), len(ys)
    for p in range(len(pts)):
        if idx[p] < 0:
            continue
        rows.append(idx[p]); cols.append(idx[p]); vals.append(4.0 / h**2)
        i, j = divmod(p, ny)
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            ii, jj = i + di, j + dj
            if 0 <= ii < nx and 0 <= jj < ny and idx[ii * ny + jj] >= 0:
                rows.append(idx[p]); cols.append(idx[ii * ny + jj]); vals.append(-1.0 / h**2)
    A = sp.csr_matrix((vals, (rows, cols)), shape=(nin, nin))
    return spla.eigsh(A, k=k, sigma=0, which="LM")[0]


def main():
    shapes = {}
    for choice in itertools.product((2, 3), (1, 3), (1, 2)):
        tris = build_domain(choice)
        poly = domain_polygon(tris)
        if poly is None:
            print(choice, "-> invalid (overlap or hole)")
            continue
        can = canonical(poly)
        verts = [tuple(np.round(v, 9)) for v in poly.exterior.coords[:-1]]
        shapes.setdefault(can, []).append((choice, verts, poly))
        print(choice, "-> ok, verts:", verts)

    print("\ndistinct shapes:", len(shapes))
    keys = list(shapes)
    for n in (16, 32):
        print(f"\n--- FD eigenvalues at h=1/{n} ---")
        eigs = {}
        for kk in keys:
            eigs[kk] = fd_eigs(shapes[kk][0][2], n)
            print(shapes[kk][0][0], np.round(eigs[kk], 5))
        for a, b in itertools.combinations(keys, 2):
            d = np.max(np.abs(eigs[a] - eigs[b]) / eigs[a])
            tag = "  <-- ISOSPECTRAL CANDIDATE" if d < 5e-3 else ""
            print(shapes[a][0][0], "vs", shapes[b][0][0], "max rel diff %.2e" % d, tag)


if __name__ == "__main__":
    main()
