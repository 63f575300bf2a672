"""Expands disc and a0*ad*disc(a0 + a1 x + ... + ad x^d) and prints degrees and Newton polytope vertices."""
import itertools
import sys

import sympy as sp
from scipy.spatial import ConvexHull
import numpy as np


def oracle(d, principal=True):
    a = sp.symbols(f"a0:{d + 1}")
    x = sp.Symbol("x")
    f = sum(a[i] * x**i for i in range(d + 1))
    e = sp.expand(sp.discriminant(f, x))
    if principal:
        e = sp.expand(a[0] * a[d] * e)
    poly = sp.Poly(e, *a)
    exps = sorted(set(poly.monoms()))
    degs = {sum(m) for m in exps}
    pts = np.array(exps, dtype=float)
    if len(exps) <= 2:
        verts = exps
    else:
        base = pts[0]
        basis, _ = np.linalg.qr((pts - base).T)
        rank = np.linalg.matrix_rank(pts - base)
        coords = (pts - base) @ basis[:, :rank]
        if rank == 1:
            order = np.argsort(coords[:, 0])
            verts = [exps[order[0]], exps[order[-1]]]
        else:
            verts = [exps[i] for i in ConvexHull(coords).vertices]
    return degs, sorted(verts)


if __name__ == "__main__":
    for d in map(int, sys.argv[1:] or ["2", "3", "4"]):
        for principal in (True, False):
            degs, verts = oracle(d, principal)
            print(d, "principal" if principal else "discriminant", sorted(degs), verts)
