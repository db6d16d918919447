"""Rational convex polytopes in half-space form, with exact combinatorics.

A polytope is given by inequalities ``l_i(x) = <x, v_i> + lam_i >= 0`` with
primitive integer normals ``v_i`` and rational offsets ``lam_i``.
Construction enumerates all vertices exactly, rejects unbounded or
lower-dimensional input, and prunes half-spaces whose tight set is not a
facet.  On top of that sit pulling triangulations (of the body and of each
facet), the smooth-vertex test, and the one-parameter family of model
polytopes used throughout: the simplex of size ``b`` truncated at the
origin corner, ``{x >= 0, 1 <= x_1 + ... + x_n <= b}``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import (
    RationalLike,
    as_fraction,
    format_rational,
    mat_det,
    mat_rank,
    mat_solve,
    parse_rational,
)

Point = tuple[Fraction, ...]

# Vertex enumeration tries every n-subset of half-spaces; this cap keeps a
# malformed input from hanging the process.
MAX_VERTEX_SUBSETS = 100_000


def as_point(x: Sequence[RationalLike], n: int) -> Point:
    pt = tuple(as_fraction(v) for v in x)
    if len(pt) != n:
        raise ValueError(f"point has length {len(pt)}, expected {n}")
    return pt


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull of a point set (-1 when empty)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[p[j] - base[j] for j in range(len(base))] for p in points[1:]]
    if not diffs:
        return 0
    return mat_rank(diffs)


def _kernel_vector(rows: list[list[Fraction]], n: int) -> Point | None:
    """A nonzero rational solution of ``rows @ d = 0``, or None at full rank."""
    a = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((k for k in range(r, len(a)) if a[k][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for k in range(len(a)):
            if k != r and a[k][col] != 0:
                factor = a[k][col]
                a[k] = [v - factor * w for v, w in zip(a[k], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    j = free[0]
    d = [Fraction(0)] * n
    d[j] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        d[col] = -a[row_idx][j]
    return tuple(d)


@dataclass(frozen=True)
class HalfSpace:
    """One inequality ``<x, v> + lam >= 0`` with primitive integer normal.

    A non-primitive integer normal is normalized by dividing the whole
    inequality by ``gcd(v)``; this leaves the half-space unchanged and makes
    the induced lattice measure on the boundary well defined.
    """

    v: tuple[int, ...]
    lam: Fraction

    def __post_init__(self) -> None:
        v = tuple(self.v)
        if not v:
            raise ValueError("normal vector must be non-empty")
        if any(not isinstance(c, int) or isinstance(c, bool) for c in v):
            raise ValueError(f"normal must have integer entries: {v}")
        g = math.gcd(*(abs(c) for c in v))
        if g == 0:
            raise ValueError("normal vector must be nonzero")
        lam = as_fraction(self.lam)
        if g > 1:
            v = tuple(c // g for c in v)
            lam = lam / g
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        return len(self.v)

    def value(self, x: Sequence[RationalLike]) -> Fraction:
        pt = as_point(x, self.n)
        return sum((a * b for a, b in zip(pt, self.v)), self.lam)

    def to_json_dict(self) -> dict:
        return {"v": list(self.v), "lam": format_rational(self.lam)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "HalfSpace":
        lam = d["lam"]
        if isinstance(lam, float):
            raise TypeError("half-space offset must be an int or 'p/q' string, not float")
        return cls(tuple(int(c) for c in d["v"]), as_fraction(lam))


@dataclass(frozen=True)
class Simplex:
    """Affinely independent rational points; dimension is ``len - 1``."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(tuple(as_fraction(c) for c in p) for p in self.vertices)
        if not verts:
            raise ValueError("simplex needs at least one vertex")
        if len({len(p) for p in verts}) != 1:
            raise ValueError("simplex vertices must share an ambient dimension")
        if affine_rank(verts) != len(verts) - 1:
            raise ValueError("simplex vertices must be affinely independent")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def edge_matrix(self) -> list[list[Fraction]]:
        """Rows ``v_k - v_0`` for ``k >= 1``."""
        base = self.vertices[0]
        return [
            [p[j] - base[j] for j in range(self.ambient_dim)]
            for p in self.vertices[1:]
        ]

    def volume(self) -> Fraction:
        """Euclidean volume; requires the simplex to be full-dimensional."""
        if self.dim != self.ambient_dim:
            raise ValueError("volume needs a full-dimensional simplex")
        return abs(mat_det(self.edge_matrix())) / math.factorial(self.dim)


class DelzantPolytope:
    """Bounded full-dimensional polytope from validated half-space data.

    The constructor runs the whole pipeline: exact vertex enumeration over
    all ``n``-subsets of half-spaces, a recession-direction test for
    boundedness, a full-dimensionality check on the vertex set, and pruning
    of half-spaces whose tight set has affine rank below ``n - 1``.  Facet
    indices used elsewhere always refer to the pruned list, whose order
    follows the input.
    """

    __slots__ = ("n", "_halfspaces", "_vertices", "_tight", "_facet_vertices")

    def __init__(self, n: int, halfspaces: Iterable[HalfSpace]):
        if not isinstance(n, int) or n < 1:
            raise ValueError("ambient dimension must be a positive int")
        hs: list[HalfSpace] = []
        for h in halfspaces:
            if not isinstance(h, HalfSpace):
                raise TypeError("halfspaces must be HalfSpace instances")
            if h.n != n:
                raise ValueError(f"half-space normal {h.v} has wrong dimension for n={n}")
            if h not in hs:  # duplicates carry no information
                hs.append(h)
        if math.comb(len(hs), n) > MAX_VERTEX_SUBSETS:
            raise ValueError(
                f"{len(hs)} half-spaces in dimension {n} exceed the "
                f"vertex-enumeration budget of {MAX_VERTEX_SUBSETS} subsets"
            )

        verts = self._enumerate_vertices(n, hs)
        if not verts:
            raise ValueError("no vertices: the half-spaces cut out an empty or unbounded set")
        if self._recession_direction(n, hs) is not None:
            raise ValueError("polytope is unbounded (recession direction exists)")
        if affine_rank(verts) != n:
            raise ValueError("polytope is not full-dimensional")

        tight: dict[Point, tuple[int, ...]] = {}
        facet_verts: list[tuple[Point, ...]] = []
        kept: list[HalfSpace] = []
        for h in hs:
            on = tuple(v for v in verts if h.value(v) == 0)
            if affine_rank(on) == n - 1:
                kept.append(h)
                facet_verts.append(on)
        for v in verts:
            tight[v] = tuple(
                i for i, h in enumerate(kept) if h.value(v) == 0
            )

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_halfspaces", tuple(kept))
        object.__setattr__(self, "_vertices", tuple(verts))
        object.__setattr__(self, "_tight", tight)
        object.__setattr__(self, "_facet_vertices", tuple(facet_verts))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DelzantPolytope is immutable")

    # -- construction helpers ----------------------------------------------

    @staticmethod
    def _enumerate_vertices(n: int, hs: list[HalfSpace]) -> list[Point]:
        verts: set[Point] = set()
        for subset in itertools.combinations(range(len(hs)), n):
            rows = [list(hs[i].v) for i in subset]
            rhs = [-hs[i].lam for i in subset]
            x = mat_solve(rows, rhs)
            if x is None:
                continue
            pt = tuple(x)
            if all(h.value(pt) >= 0 for h in hs):
                verts.add(pt)
        return sorted(verts)

    @staticmethod
    def _recession_direction(n: int, hs: list[HalfSpace]) -> Point | None:
        """A nonzero direction ``d`` with ``<d, v_i> >= 0`` for all i, if any.

        When the normals span a proper subspace, any kernel vector of the
        normal matrix works.  Otherwise every extreme ray of the recession
        cone lies on ``n - 1`` linearly independent active constraints, so
        checking the kernel direction of every such subset is exhaustive.
        """
        normals = [list(h.v) for h in hs]
        kernel = _kernel_vector(normals, n)
        if kernel is not None:
            return kernel
        if n == 1:
            signs = {h.v[0] for h in hs}
            if 1 not in signs:
                return (Fraction(-1),)
            if -1 not in signs:
                return (Fraction(1),)
            return None
        for subset in itertools.combinations(range(len(hs)), n - 1):
            rows = [list(hs[i].v) for i in subset]
            if mat_rank(rows) != n - 1:
                continue
            d = _kernel_vector(rows, n)
            if d is None:
                continue
            for cand in (d, tuple(-c for c in d)):
                if all(
                    sum(a * b for a, b in zip(cand, h.v)) >= 0 for h in hs
                ):
                    return cand
        return None

    # -- basic queries -------------------------------------------------------

    @property
    def halfspaces(self) -> tuple[HalfSpace, ...]:
        return self._halfspaces

    @property
    def num_facets(self) -> int:
        return len(self._halfspaces)

    def vertices(self) -> list[Point]:
        """All vertices, sorted lexicographically."""
        return list(self._vertices)

    def facet_vertices(self, i: int) -> list[Point]:
        self._check_facet_index(i)
        return list(self._facet_vertices[i])

    def tight_indices(self, vertex: Point) -> tuple[int, ...]:
        """Indices of facets through a vertex of the polytope."""
        key = as_point(vertex, self.n)
        try:
            return self._tight[key]
        except KeyError:
            raise ValueError(f"{vertex} is not a vertex of this polytope") from None

    def contains(self, x: Sequence[RationalLike]) -> bool:
        pt = as_point(x, self.n)
        return all(h.value(pt) >= 0 for h in self._halfspaces)

    def bounding_box(self) -> tuple[Point, Point]:
        mins = tuple(min(v[j] for v in self._vertices) for j in range(self.n))
        maxs = tuple(max(v[j] for v in self._vertices) for j in range(self.n))
        return mins, maxs

    def _check_facet_index(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < len(self._halfspaces):
            raise ValueError(
                f"facet index {i} out of range (polytope has {len(self._halfspaces)} facets)"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DelzantPolytope):
            return NotImplemented
        return self.n == other.n and self._halfspaces == other._halfspaces

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"DelzantPolytope(n={self.n}, facets={len(self._halfspaces)}, "
            f"vertices={len(self._vertices)})"
        )

    # -- smoothness ----------------------------------------------------------

    def is_delzant(self) -> bool:
        """True when every vertex is smooth: exactly ``n`` facets meet there
        and their primitive normals span the integer lattice (det +-1)."""
        for v in self._vertices:
            idx = self._tight[v]
            if len(idx) != self.n:
                return False
            rows = [list(self._halfspaces[i].v) for i in idx]
            if abs(mat_det(rows)) != 1:
                return False
        return True

    # -- faces and triangulation ---------------------------------------------

    def _subfaces(
        self, face: tuple[Point, ...], d: int
    ) -> list[tuple[Point, ...]]:
        """Codimension-one faces of a d-dimensional face, each sorted."""
        face_set = frozenset(face)
        seen: set[frozenset[Point]] = set()
        out: list[tuple[Point, ...]] = []
        for h in self._halfspaces:
            on = tuple(v for v in face if h.value(v) == 0)
            key = frozenset(on)
            if not on or key == face_set or key in seen:
                continue
            if affine_rank(on) == d - 1:
                seen.add(key)
                out.append(on)
        return out

    def _pull(
        self, face: tuple[Point, ...], d: int, apex_rule: str
    ) -> list[Simplex]:
        if len(face) == d + 1:
            return [Simplex(face)]
        apex = min(face) if apex_rule == "lexmin" else max(face)
        simplices: list[Simplex] = []
        for sub in self._subfaces(face, d):
            if apex in sub:
                continue
            for s in self._pull(sub, d - 1, apex_rule):
                simplices.append(Simplex(s.vertices + (apex,)))
        return simplices

    def triangulate(self, apex_rule: str = "lexmin") -> list[Simplex]:
        """Pulling triangulation of the body, deterministic per apex rule.

        ``apex_rule`` picks the pulled vertex of every face: the
        lexicographically smallest ("lexmin") or largest ("lexmax").
        """
        if apex_rule not in ("lexmin", "lexmax"):
            raise ValueError(f"unknown apex rule: {apex_rule!r}")
        return self._pull(self._vertices, self.n, apex_rule)

    def facet_triangulate(self, i: int, apex_rule: str = "lexmin") -> list[Simplex]:
        """Pulling triangulation of facet ``i`` into (n-1)-simplices."""
        if apex_rule not in ("lexmin", "lexmax"):
            raise ValueError(f"unknown apex rule: {apex_rule!r}")
        self._check_facet_index(i)
        return self._pull(self._facet_vertices[i], self.n - 1, apex_rule)

    # -- transforms and serialization ------------------------------------------

    def translate(self, t: Sequence[RationalLike]) -> "DelzantPolytope":
        """The polytope ``P + t``; normals are unchanged, offsets shift."""
        tv = as_point(t, self.n)
        moved = [
            HalfSpace(h.v, h.lam - sum(a * b for a, b in zip(tv, h.v)))
            for h in self._halfspaces
        ]
        return DelzantPolytope(self.n, moved)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "halfspaces": [h.to_json_dict() for h in self._halfspaces],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "DelzantPolytope":
        return cls(int(d["n"]), [HalfSpace.from_json_dict(h) for h in d["halfspaces"]])


def standard_blowup_polytope(n: int, b: RationalLike) -> DelzantPolytope:
    """The model polytope ``{x >= 0, 1 <= x_1 + ... + x_n <= b}``.

    This is the moment polytope of projective n-space of size ``b`` blown
    up at a fixed point, with exceptional size 1; it is Delzant for every
    rational ``b > 1``.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("dimension must be a positive int")
    bf = as_fraction(b)
    if bf <= 1:
        raise ValueError(f"outer size b must exceed 1 (got {bf}); the class is not Kahler")
    ones = tuple([1] * n)
    hs = [
        HalfSpace(tuple(1 if j == i else 0 for j in range(n)), Fraction(0))
        for i in range(n)
    ]
    hs.append(HalfSpace(ones, Fraction(-1)))
    hs.append(HalfSpace(tuple([-1] * n), bf))
    return DelzantPolytope(n, hs)
