"""Pure-Python distance kernels.

Fallback used when the compiled extension is unavailable (or when
SETFIX_PURE_PYTHON is set).  Must stay bit-identical to the compiled
kernels: same accumulation order, same comparison structure.
"""

import math

IMPLEMENTATION = "python"


def point_set_matrix(dist, x, a):
    """min over k of dist[x, a[k]] for a distance-matrix space."""
    row = dist[x]
    best = float(row[a[0]])
    for k in range(1, len(a)):
        v = float(row[a[k]])
        if v < best:
            best = v
    return best


def hausdorff_matrix(dist, a, b):
    """Exhaustive Hausdorff distance between index sets on a distance matrix."""
    h = 0.0
    for i in range(len(a)):
        row = dist[a[i]]
        best = float(row[b[0]])
        for k in range(1, len(b)):
            v = float(row[b[k]])
            if v < best:
                best = v
        if best > h:
            h = best
    for j in range(len(b)):
        row = dist[b[j]]
        best = float(row[a[0]])
        for k in range(1, len(a)):
            v = float(row[a[k]])
            if v < best:
                best = v
        if best > h:
            h = best
    return h


def _eucl(x, y, dim):
    s = 0.0
    for c in range(dim):
        d = float(x[c]) - float(y[c])
        s += d * d
    return math.sqrt(s)


def point_set_euclidean(x, pts):
    """min over rows p of pts of the Euclidean distance |x - p|."""
    dim = len(x)
    best = _eucl(x, pts[0], dim)
    for k in range(1, len(pts)):
        v = _eucl(x, pts[k], dim)
        if v < best:
            best = v
    return best


def hausdorff_euclidean(a, b):
    """Exhaustive Hausdorff distance between coordinate arrays (rows = points)."""
    dim = len(a[0])
    h = 0.0
    for i in range(len(a)):
        best = _eucl(a[i], b[0], dim)
        for k in range(1, len(b)):
            v = _eucl(a[i], b[k], dim)
            if v < best:
                best = v
        if best > h:
            h = best
    for j in range(len(b)):
        best = _eucl(b[j], a[0], dim)
        for k in range(1, len(a)):
            v = _eucl(b[j], a[k], dim)
            if v < best:
                best = v
        if best > h:
            h = best
    return h
