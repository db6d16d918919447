"""Exact integration over rational polytopes, plus a Monte Carlo oracle.

Three exact integral types are provided:

* body integrals of polynomials against Lebesgue measure, by pulling
  triangulation and the Dirichlet moment formula on each simplex,
* facet integrals against the lattice boundary measure ``d(sigma)``, the
  measure whose density against (n-1)-dimensional Hausdorff measure is
  ``1 / |v|`` for a facet with primitive normal ``v`` (equivalently: the
  translation-invariant measure assigning volume 1 to a fundamental cell
  of the facet's intersection lattice),
* radial slab integrals of :class:`RadialSum` integrands over
  ``{x >= 0, lo <= x_1 + ... + x_n <= hi}``, which pick up an exact
  logarithm when the net radial power hits -1.

The Monte Carlo estimator is deliberately independent of all of that: it
rejection-samples the bounding box with a counter-based generator, so it
can arbitrate between an exact result and a transcription mistake.  Its
stream is indexed by sample position, which makes the estimate invariant
under chunk-size changes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .exactnum import (
    LogLinear,
    MultiPoly,
    RadialSum,
    RationalLike,
    as_fraction,
    mat_det,
)
from .polytope import DelzantPolytope, Point, Simplex


def _as_poly(n: int, p: MultiPoly | RationalLike) -> MultiPoly:
    if isinstance(p, MultiPoly):
        if p.n != n:
            raise ValueError(f"polynomial has {p.n} variables, expected {n}")
        return p
    return MultiPoly.constant(n, as_fraction(p))


# ---------------------------------------------------------------------------
# Simplex building blocks.


def monomial_simplex_integral(
    simplex: Simplex, p: MultiPoly, measure: Fraction
) -> Fraction:
    """Integral of ``p`` over a simplex carrying total measure ``measure``.

    Works in barycentric coordinates: each ambient coordinate is a linear
    form in the barycentric variables, and a barycentric monomial
    ``prod l_k**b_k`` integrates to ``measure * d! * prod(b_k!) / (d + |b|)!``
    on a d-simplex.  ``measure`` is the simplex's total mass in whichever
    measure is being used (Euclidean volume for body integrals, lattice
    measure for facet integrals), which is what makes this routine shared.
    """
    d = simplex.dim
    nbary = d + 1
    coords = [
        MultiPoly(
            nbary,
            {
                tuple(1 if k == kk else 0 for k in range(nbary)): simplex.vertices[kk][j]
                for kk in range(nbary)
                if simplex.vertices[kk][j] != 0
            },
        )
        for j in range(simplex.ambient_dim)
    ]
    total = Fraction(0)
    pow_cache: dict[tuple[int, int], MultiPoly] = {}
    for alpha, c in p.items():
        term = MultiPoly.constant(nbary, c)
        for j, e in enumerate(alpha):
            if not e:
                continue
            key = (j, e)
            if key not in pow_cache:
                pow_cache[key] = coords[j] ** e
            term = term * pow_cache[key]
        for beta, cq in term.items():
            num = math.prod(math.factorial(b) for b in beta)
            total += cq * Fraction(num, math.factorial(d + sum(beta)))
    return measure * math.factorial(d) * total


def sigma_simplex_measure(
    simplex: Simplex, normal: Sequence[int], transversal: Sequence[int]
) -> Fraction:
    """Lattice measure of an (n-1)-simplex inside a facet with given normal.

    For edge vectors ``u_1, ..., u_{n-1}`` of the simplex and any integer
    vector ``w`` with ``<v, w> != 0``, the measure is
    ``|det[u_1, ..., u_{n-1}, w]| / (|<v, w>| * (n-1)!)``; the choice of
    ``w`` drops out because the edges span the normal's orthogonal lattice
    direction space.
    """
    n = simplex.ambient_dim
    if simplex.dim != n - 1:
        raise ValueError("facet simplex must have codimension one")
    pairing = sum(a * b for a, b in zip(normal, transversal))
    if pairing == 0:
        raise ValueError(f"transversal {tuple(transversal)} lies in the facet hyperplane")
    rows = simplex.edge_matrix()
    rows.append([Fraction(w) for w in transversal])
    return abs(mat_det(rows)) / (abs(Fraction(pairing)) * math.factorial(n - 1))


@dataclass(frozen=True)
class FacetMeasureContext:
    """Everything needed to integrate against ``d(sigma)`` on one facet."""

    facet_index: int
    normal: tuple[int, ...]
    transversal: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(c) for c in self.transversal)
        v = tuple(int(c) for c in self.normal)
        if sum(a * b for a, b in zip(v, w)) == 0:
            raise ValueError(f"transversal {w} is not transversal to normal {v}")
        object.__setattr__(self, "normal", v)
        object.__setattr__(self, "transversal", w)

    @classmethod
    def default(cls, P: DelzantPolytope, i: int) -> "FacetMeasureContext":
        """Default transversal: the first coordinate axis the normal sees."""
        v = P.halfspaces[i].v
        j = next(k for k, c in enumerate(v) if c != 0)
        w = tuple(1 if k == j else 0 for k in range(P.n))
        return cls(i, v, w)


# ---------------------------------------------------------------------------
# Polytope-level exact integrals.


def integrate_poly(P: DelzantPolytope, p: MultiPoly | RationalLike) -> Fraction:
    """Exact Lebesgue integral of a polynomial over the polytope body."""
    q = _as_poly(P.n, p)
    total = Fraction(0)
    for s in P.triangulate():
        total += monomial_simplex_integral(s, q, s.volume())
    return total


def volume(P: DelzantPolytope) -> Fraction:
    return integrate_poly(P, 1)


def integrate_poly_facet(
    P: DelzantPolytope,
    i: int,
    p: MultiPoly | RationalLike,
    transversal: Sequence[int] | None = None,
) -> Fraction:
    """Exact integral of a polynomial over facet ``i`` against ``d(sigma)``.

    ``transversal`` overrides the integer vector used in the lattice-measure
    determinant; the result is independent of that choice.
    """
    q = _as_poly(P.n, p)
    if not isinstance(i, int) or not 0 <= i < P.num_facets:
        raise ValueError(
            f"facet index {i} out of range (polytope has {P.num_facets} facets)"
        )
    if transversal is None:
        ctx = FacetMeasureContext.default(P, i)
    else:
        ctx = FacetMeasureContext(i, P.halfspaces[i].v, tuple(transversal))
    total = Fraction(0)
    for s in P.facet_triangulate(i):
        measure = sigma_simplex_measure(s, ctx.normal, ctx.transversal)
        total += monomial_simplex_integral(s, q, measure)
    return total


def facet_sigma(P: DelzantPolytope, i: int) -> Fraction:
    return integrate_poly_facet(P, i, 1)


def integrate_poly_boundary(
    P: DelzantPolytope, p: MultiPoly | RationalLike
) -> Fraction:
    """Integral of a polynomial over the whole boundary against ``d(sigma)``."""
    q = _as_poly(P.n, p)
    return sum(
        (integrate_poly_facet(P, i, q) for i in range(P.num_facets)), Fraction(0)
    )


def c_constant(P: DelzantPolytope, i: int) -> Fraction:
    """The constant ``c`` making ``integral of (x_i + c) over P`` vanish."""
    if not 0 <= i < P.n:
        raise ValueError(f"coordinate index {i} out of range for n={P.n}")
    vol = volume(P)
    moment = integrate_poly(P, MultiPoly.variable(P.n, i))
    return -moment / vol


# ---------------------------------------------------------------------------
# Radial slab integrals.


def integrate_radial_slab(
    n: int,
    lo: RationalLike,
    hi: RationalLike,
    r: RadialSum,
) -> LogLinear:
    """Exact integral of a radial sum over ``{x >= 0, lo <= sum(x) <= hi}``.

    Decomposes Lebesgue measure as ``X**(n-1) dX`` times normalized lattice
    measure on the standard simplex, whose monomial moments are Dirichlet
    factorials.  A net radial power of -1 integrates to a logarithm, so the
    result is a :class:`LogLinear` taken with respect to ``log(hi / lo)``.
    """
    lof, hif = as_fraction(lo), as_fraction(hi)
    if not 0 < lof < hif:
        raise ValueError(f"slab bounds must satisfy 0 < lo < hi, got {lof}, {hif}")
    if r.n != n:
        raise ValueError(f"integrand has {r.n} variables, expected {n}")
    q0 = Fraction(0)
    q1 = Fraction(0)
    for poly, k in r.terms():
        for alpha, c in poly.items():
            tot = sum(alpha)
            moment = Fraction(
                math.prod(math.factorial(a) for a in alpha),
                math.factorial(n - 1 + tot),
            )
            m = tot + n - 1 + k
            if m == -1:
                q1 += c * moment
            else:
                q0 += c * moment * (hif ** (m + 1) - lof ** (m + 1)) / (m + 1)
    return LogLinear(q0, q1)


def integrate_radial(n: int, b: RationalLike, r: RadialSum) -> LogLinear:
    """Slab integral with inner radius 1 and outer radius ``b`` (log base ``b``)."""
    return integrate_radial_slab(n, 1, b, r)


def slab_bounds(P: DelzantPolytope) -> tuple[Fraction, Fraction] | None:
    """Detect ``{x >= 0, lo <= sum(x) <= hi}`` structure; None otherwise."""
    n = P.n
    axes = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    lo = hi = None
    seen_axes = set()
    for h in P.halfspaces:
        if h.v in axes and h.lam == 0:
            seen_axes.add(h.v)
        elif h.v == tuple([1] * n):
            lo = -h.lam
        elif h.v == tuple([-1] * n):
            hi = h.lam
        else:
            return None
    if seen_axes != axes or lo is None or hi is None or not 0 < lo < hi:
        return None
    return lo, hi


# ---------------------------------------------------------------------------
# Monte Carlo oracle.

# Per-sample values are buffered for an order-invariant reduction; this cap
# bounds that buffer to a few hundred MB.
MAX_MC_SAMPLES = 50_000_000


@dataclass(frozen=True)
class MCResult:
    """A seeded Monte Carlo estimate with its standard error."""

    estimate: float
    stderr: float
    samples: int
    accepted: int
    seed: int

    def agrees_with(self, exact: float, sigmas: float = 4.0, rel: float = 1e-9) -> bool:
        """Tolerance check: ``|estimate - exact| <= max(sigmas*SE, rel*|exact|)``."""
        return abs(self.estimate - exact) <= max(sigmas * self.stderr, rel * abs(exact))


def mc_integrate(
    P: DelzantPolytope,
    f: Callable[[np.ndarray], np.ndarray],
    samples: int,
    seed: int,
    chunk_size: int = 1 << 17,
) -> MCResult:
    """Monte Carlo integral of ``f`` over the polytope body.

    Rejection-samples the exact bounding box with a Philox counter-based
    generator.  Each sample index owns a fixed block of ``ceil(n/4)``
    counter steps (Philox emits four 64-bit words per step), so the stream
    consumed by sample ``i`` never depends on ``chunk_size``; partitioning
    the run differently reproduces the estimate bit for bit.  ``f`` is
    called only on accepted points and must map an ``(m, n)`` float array
    to ``m`` values.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if samples > MAX_MC_SAMPLES:
        raise ValueError(
            f"{samples} samples exceed the cap of {MAX_MC_SAMPLES}"
            " (per-sample values are kept in memory for an order-invariant sum)"
        )
    if seed < 0:
        raise ValueError("seed must be a non-negative int")
    n = P.n
    mins, maxs = P.bounding_box()
    lo = np.array([float(v) for v in mins])
    widths = np.array([float(b) - float(a) for a, b in zip(mins, maxs)])
    box_vol = float(np.prod(widths))
    normals = np.array([[float(c) for c in h.v] for h in P.halfspaces])
    offsets = np.array([float(h.lam) for h in P.halfspaces])

    blocks_per_sample = (n + 3) // 4
    draws_per_sample = 4 * blocks_per_sample

    # Per-sample values are collected before reduction: summing chunk partial
    # sums would regroup float additions and lose bitwise partition invariance.
    y = np.zeros(samples)
    accepted = 0
    start = 0
    while start < samples:
        count = min(chunk_size, samples - start)
        bitgen = np.random.Philox(key=seed)
        bitgen.advance(start * blocks_per_sample)
        u = np.random.Generator(bitgen).random((count, draws_per_sample))
        pts = lo + u[:, :n] * widths
        inside = np.all(pts @ normals.T + offsets >= 0.0, axis=1)
        if inside.any():
            vals = np.asarray(f(pts[inside]), dtype=float)
            if vals.shape != (int(inside.sum()),):
                raise ValueError("integrand must return one value per input point")
            chunk = np.zeros(count)
            chunk[inside] = vals
            y[start : start + count] = chunk
        accepted += int(inside.sum())
        start += count

    if accepted == 0:
        raise ValueError("no sample hit the polytope; bounding box sampling failed")
    total = float(y.sum())
    mean = total / samples
    var = max(float((y * y).sum()) / samples - mean * mean, 0.0)
    estimate = box_vol * mean
    stderr = box_vol * math.sqrt(var / samples)
    return MCResult(estimate, stderr, samples, accepted, seed)
