"""Projective geometry PG(k-1, q) and weighted point multisets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .errors import DimensionMismatch
from .gf import FieldSpec, make_field


def theta(q: int, k: int) -> int:
    """Number of points of PG(k, q); theta(q, -1) == 0."""
    if k < -1:
        raise ValueError("k must be >= -1")
    return (q ** (k + 1) - 1) // (q - 1)


@lru_cache(maxsize=64)
def _point_tuple(q: int, k: int) -> tuple[tuple[int, ...], ...]:
    pts = []
    # lexicographic order: more leading zeros first
    for lead in range(k - 1, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(q), repeat=k - 1 - lead):
            pts.append(prefix + tail)
    return tuple(pts)


def enumerate_points(q: int, k: int) -> list[tuple[int, ...]]:
    """Canonical points of PG(k-1, q) as coordinate tuples, sorted.

    A point is canonical when its first nonzero coordinate is 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    make_field(q)
    return list(_point_tuple(q, k))


def enumerate_hyperplanes(q: int, k: int) -> list[tuple[int, ...]]:
    """Canonical normals of the hyperplanes of PG(k-1, q) (dual points)."""
    return enumerate_points(q, k)


def point_array(q: int, k: int) -> np.ndarray:
    return np.array(_point_tuple(q, k), dtype=np.int64).reshape(-1, k)


def canonicalize(F: FieldSpec, coords: Iterable[int]) -> tuple[int, ...]:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    coords = tuple(int(c) for c in coords)
    for c in coords:
        if c:
            s = F.inv(c)
            return tuple(F.mul(s, x) for x in coords)
    raise ValueError("the zero vector is not a projective point")


def is_canonical(coords: tuple[int, ...]) -> bool:
    for c in coords:
        if c:
            return c == 1
    return False


def incidence_matrix(F: FieldSpec, normals: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Boolean matrix ``M[h, i]`` telling whether point i lies on hyperplane h."""
    k = normals.shape[1]
    acc = np.zeros((normals.shape[0], points.shape[0]), dtype=np.int64)
    for j in range(k):
        acc = F.vadd(acc, F.vmul(normals[:, j:j + 1], points[None, :, j]))
    return acc == 0


def rank(F: FieldSpec, rows) -> int:
    """Rank over GF(q) of a list of vectors (Gaussian elimination)."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = F.inv(M[r][c])
        M[r] = [F.mul(s, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = F.neg(M[i][c])
                M[i] = [F.add(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


@dataclass(frozen=True)
class ProjectiveSystem:
    """A multiset of points of PG(k-1, q).

    ``mults`` maps canonical coordinate tuples to positive Python ints; zero
    multiplicities are dropped on construction so equal systems compare equal.
    """

    q: int
    k: int
    mults: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        F = make_field(self.q)
        clean = {}
        for pt, m in self.mults.items():
            pt = tuple(int(c) for c in pt)
            m = int(m)
            if m < 0:
                raise ValueError(f"negative multiplicity at {pt}")
            if len(pt) != self.k:
                raise DimensionMismatch(f"point {pt} is not in PG({self.k - 1},{self.q})")
            if any(not 0 <= c < self.q for c in pt):
                raise ValueError(f"coordinate out of range in {pt}")
            if m:
                pt = canonicalize(F, pt)
                clean[pt] = clean.get(pt, 0) + m
        if not clean:
            raise ValueError("a projective system needs at least one point")
        object.__setattr__(self, "mults", dict(sorted(clean.items())))

    @property
    def field(self) -> FieldSpec:
        return make_field(self.q)

    @property
    def n(self) -> int:
        return sum(self.mults.values())

    @property
    def support(self) -> list[tuple[int, ...]]:
        return list(self.mults)

    def multiplicity(self, point) -> int:
        return self.mults.get(tuple(point), 0)

    def __repr__(self):
        return f"ProjectiveSystem(q={self.q}, k={self.k}, points={len(self.mults)}, n={self.n})"


def character(sys: ProjectiveSystem, hyperplane) -> int:
    """Total multiplicity of the system's points lying on ``hyperplane``."""
    hyperplane = tuple(hyperplane)
    if len(hyperplane) != sys.k:
        raise DimensionMismatch(f"hyperplane of length {len(hyperplane)} in k={sys.k}")
    F = sys.field
    total = 0
    for pt, m in sys.mults.items():
        s = 0
        for a, b in zip(hyperplane, pt):
            s = F.add(s, F.mul(a, b))
        if s == 0:
            total += m
    return total


def all_characters(sys: ProjectiveSystem) -> list[int]:
    """Characters of every hyperplane, in canonical hyperplane order."""
    F = sys.field
    normals = point_array(sys.q, sys.k)
    pts = np.array(sys.support, dtype=np.int64).reshape(-1, sys.k)
    inc = incidence_matrix(F, normals, pts)
    mults = list(sys.mults.values())
    # multiplicities are unbounded ints; sum in Python
    return [sum(m for m, on in zip(mults, row) if on) for row in inc.tolist()]


def spans(sys: ProjectiveSystem) -> bool:
    """True iff the support spans the whole ambient space."""
    return rank(sys.field, sys.support) == sys.k
