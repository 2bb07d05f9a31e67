"""Metric spaces, finite compact sets, point-to-set and Hausdorff distances.

Two backends: an explicit n-by-n distance matrix (every axiom validated at
construction) and a Euclidean coordinate space.  Sets are nonempty finite
and canonically ordered, so infima/suprema are attained minima/maxima and
every distance here is exact (no tolerances inside the computations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union

import numpy as np

from . import kernels

# Validation slack for user-supplied matrices (decimal text rounds).
MATRIX_SLACK = 1e-12

Point = Union[int, Tuple[float, ...]]


class MetricError(ValueError):
    """Invalid space, point, or set."""


class FiniteMatrixSpace:
    """A finite metric space given by an explicit distance matrix.

    The matrix must be square with zero diagonal, positive off-diagonal
    entries, and symmetry / triangle inequality within MATRIX_SLACK.  The
    upper triangle is taken as the truth and mirrored, so stored distances
    are exactly symmetric.
    """

    def __init__(self, dist: Sequence[Sequence[float]]):
        m = np.asarray(dist, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise MetricError("distance matrix must be square and nonempty")
        n = m.shape[0]
        if not np.all(np.isfinite(m)):
            raise MetricError("distance matrix entries must be finite")
        for i in range(n):
            if m[i, i] != 0.0:
                raise MetricError(f"dist[{i}][{i}] must be 0, got {m[i, i]!r}")
        for i in range(n):
            for j in range(i + 1, n):
                if abs(m[i, j] - m[j, i]) > MATRIX_SLACK:
                    raise MetricError(f"asymmetry at ({i},{j}): {m[i, j]!r} vs {m[j, i]!r}")
                if m[i, j] <= 0.0:
                    raise MetricError(f"dist[{i}][{j}] must be positive for distinct points")
                m[j, i] = m[i, j]
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if m[i, j] > m[i, k] + m[k, j] + MATRIX_SLACK:
                        raise MetricError(
                            f"triangle inequality violated at ({i},{j},{k}): "
                            f"{m[i, j]!r} > {m[i, k]!r} + {m[k, j]!r}"
                        )
        self.n = n
        self.dist = np.ascontiguousarray(m)
        self.dist.setflags(write=False)

    def validate_point(self, x: Point) -> None:
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
            raise MetricError(f"matrix-space point must be an index, got {x!r}")
        if not 0 <= x < self.n:
            raise MetricError(f"point index {x} out of range [0, {self.n})")

    def distance(self, x: Point, y: Point) -> float:
        self.validate_point(x)
        self.validate_point(y)
        return float(self.dist[x, y])

    def __repr__(self):
        return f"FiniteMatrixSpace(n={self.n})"


class EuclideanSpace:
    """R^dim with the Euclidean distance; points are coordinate tuples."""

    def __init__(self, dim: int):
        if not isinstance(dim, int) or dim < 1:
            raise MetricError(f"dimension must be a positive integer, got {dim!r}")
        self.dim = dim

    def validate_point(self, x: Point) -> None:
        if not isinstance(x, tuple):
            raise MetricError(f"Euclidean point must be a coordinate tuple, got {x!r}")
        if len(x) != self.dim:
            raise MetricError(f"point has {len(x)} coordinates, space has dim {self.dim}")
        for c in x:
            if not isinstance(c, float) or not math.isfinite(c):
                raise MetricError(f"non-finite or non-float coordinate in {x!r}")

    def distance(self, x: Point, y: Point) -> float:
        self.validate_point(x)
        self.validate_point(y)
        s = 0.0
        for c in range(self.dim):
            d = x[c] - y[c]
            s += d * d
        return math.sqrt(s)

    def __repr__(self):
        return f"EuclideanSpace(dim={self.dim})"


MetricSpace = Union[FiniteMatrixSpace, EuclideanSpace]


def as_point(space: MetricSpace, raw) -> Point:
    """Coerce raw input (index or coordinate sequence) to a validated Point."""
    if isinstance(space, FiniteMatrixSpace):
        p = int(raw) if isinstance(raw, (int, np.integer)) and not isinstance(raw, bool) else raw
    else:
        if isinstance(raw, (int, float)) and not isinstance(raw, bool):
            p = (float(raw),)
        elif isinstance(raw, (list, tuple, np.ndarray)):
            p = tuple(float(c) for c in raw)
        else:
            p = raw
    space.validate_point(p)
    return p


@dataclass(frozen=True)
class CompactSet:
    """Nonempty finite point set in canonical order (the computable CB(X) stand-in).

    Canonical order is ascending index for matrix spaces and lexicographic
    coordinates for Euclidean ones; equality of sets is equality of the
    element tuples.  Build through from_points unless the input is already
    canonical.
    """

    elements: Tuple[Point, ...]

    def __post_init__(self):
        if len(self.elements) == 0:
            raise MetricError("CompactSet must be nonempty")
        for a, b in zip(self.elements, self.elements[1:]):
            if not a < b:
                raise MetricError("CompactSet elements must be strictly increasing (canonical)")

    @classmethod
    def from_points(cls, points) -> "CompactSet":
        return cls(tuple(sorted(set(points))))

    def __contains__(self, x: Point) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def _index_array(A: CompactSet) -> np.ndarray:
    return np.asarray(A.elements, dtype=np.intp)


def _coord_array(A: CompactSet) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(A.elements, dtype=np.float64))


def distance(space: MetricSpace, x: Point, y: Point) -> float:
    return space.distance(x, y)


def point_to_set_distance(space: MetricSpace, x: Point, A: CompactSet) -> float:
    """D(x, A): attained minimum of d(x, a) over a in A."""
    space.validate_point(x)
    for a in A.elements:
        space.validate_point(a)
    if isinstance(space, FiniteMatrixSpace):
        return float(kernels.point_set_matrix(space.dist, x, _index_array(A)))
    xs = np.asarray(x, dtype=np.float64)
    return float(kernels.point_set_euclidean(xs, _coord_array(A)))


def hausdorff_distance(space: MetricSpace, A: CompactSet, B: CompactSet) -> float:
    """H(A, B) = max(max_a D(a,B), max_b D(b,A)), evaluated exhaustively."""
    for p in A.elements:
        space.validate_point(p)
    for p in B.elements:
        space.validate_point(p)
    if isinstance(space, FiniteMatrixSpace):
        return float(kernels.hausdorff_matrix(space.dist, _index_array(A), _index_array(B)))
    return float(kernels.hausdorff_euclidean(_coord_array(A), _coord_array(B)))
