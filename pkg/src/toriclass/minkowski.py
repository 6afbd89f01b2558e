"""Minkowski length machinery, exceptional triangles, and the closed-form
minimum-distance formulas and lower bounds for toric surface codes.

The length recursion peels one indecomposable positive-dimensional summand at
a time: if P = S + R with S indecomposable then R is forced to be the full
Minkowski difference P (-) S, so l(P) = 1 + max l(P (-) S) over valid S, else 1.
Everything is memoized on canonical forms; at <= 9 lattice points exhaustive
search is trivial.
"""

from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    DoesNotFit,
    NotPolygon,
    NotPositiveDimensional,
    ThresholdNotMet,
)
from .lattice import (
    LatticePolytope,
    area,
    boundary_interior,
    canonical_key,
    convex_hull,
    lattice_points,
)

EXCEPTIONAL_TRIANGLE = lattice_points([(-1, 0), (0, 1), (1, -1)])

EXCEPTIONAL = "Exceptional"
NO_EXCEPTIONAL = "NoExceptional"


def minkowski_sum(P, Q):
    """Hull of pairwise sums, with the full lattice-point set."""
    sums = {(p[0] + q[0], p[1] + q[1])
            for p in P.hull_vertices for q in Q.hull_vertices}
    return lattice_points(list(sums))


def _oriented_dirs(P):
    """Primitive oriented hull edge directions (both signs for segments)."""
    hull = P.hull_vertices
    if P.dim == 0:
        return frozenset()
    if P.dim == 1:
        a, b = hull[0], hull[-1]
        d = (b[0] - a[0], b[1] - a[1])
        g = gcd(abs(d[0]), abs(d[1]))
        u = (d[0] // g, d[1] // g)
        return frozenset([u, (-u[0], -u[1])])
    dirs = set()
    for a, b in zip(hull, hull[1:] + hull[:1]):
        d = (b[0] - a[0], b[1] - a[1])
        g = gcd(abs(d[0]), abs(d[1]))
        dirs.add((d[0] // g, d[1] // g))
    return frozenset(dirs)


_sub_cache = {}


def sub_polytopes(P):
    """Distinct sub-polytopes spanned by subsets of P's lattice points."""
    cache_key = P.points
    got = _sub_cache.get(cache_key)
    if got is not None:
        return got
    pts = P.points
    n = len(pts)
    seen = {}
    for mask in range(1, 1 << n):
        chosen = [pts[i] for i in range(n) if mask >> i & 1]
        hull = convex_hull(chosen)
        hkey = tuple(hull)
        if hkey not in seen:
            seen[hkey] = lattice_points(hull)
    out = {}
    for Q in seen.values():
        out[Q.points] = Q
    result = [out[key] for key in sorted(out)]
    _sub_cache[cache_key] = result
    return result


def minkowski_difference(P, S):
    """The polytope of translations t with S + t inside P, or None if empty."""
    px0, py0, px1, py1 = P.bbox()
    sx0, sy0, sx1, sy1 = S.bbox()
    pset = set(P.points)
    shifts = []
    for tx in range(px0 - sx0, px1 - sx1 + 1):
        for ty in range(py0 - sy0, py1 - sy1 + 1):
            if all((p[0] + tx, p[1] + ty) in pset for p in S.points):
                shifts.append((tx, ty))
    if not shifts:
        return None
    return lattice_points(shifts)


def _summand_splits(P):
    """Pairs (S, R): S an indecomposable positive-dim summand, R = P (-) S,
    with S + R = P exactly and R positive-dimensional."""
    dirs = _oriented_dirs(P)
    splits = []
    for S in sub_polytopes(P):
        if S.dim == 0 or S.points == P.points:
            continue
        if not _oriented_dirs(S) <= dirs:
            continue
        if minkowski_length(S) != 1:
            continue
        R = minkowski_difference(P, S)
        if R is None or R.dim == 0:
            continue
        # The difference is absolutely positioned, so the sum must reproduce
        # P exactly, not merely up to translation.
        if minkowski_sum(S, R).points != P.points:
            continue
        splits.append((S, R))
    return splits


_len_cache = {}


def minkowski_length(P):
    """Largest number of positive-dimensional summands in a decomposition."""
    if P.dim == 0:
        raise NotPositiveDimensional("Minkowski length needs a positive-dimensional polytope")
    if P.dim == 1:
        return len(P.points) - 1
    key = canonical_key(P)
    got = _len_cache.get(key)
    if got is not None:
        return got
    best = 1
    for _S, R in _summand_splits(P):
        cand = 1 + minkowski_length(R)
        if cand > best:
            best = cand
    _len_cache[key] = best
    return best


_full_cache = {}


def full_minkowski_length(P):
    """Maximum Minkowski length over all sub-polytopes."""
    if P.dim == 0:
        raise NotPositiveDimensional("full Minkowski length needs a positive-dimensional polytope")
    key = canonical_key(P)
    got = _full_cache.get(key)
    if got is not None:
        return got
    best = max(minkowski_length(Q) for Q in sub_polytopes(P) if Q.dim > 0)
    _full_cache[key] = best
    return best


def is_exceptional_triangle(P):
    """True iff P is lattice-equivalent to Conv((-1,0),(0,1),(1,-1))."""
    return len(P.points) == 4 and canonical_key(P) == canonical_key(EXCEPTIONAL_TRIANGLE)


_obstruction_cache = {}


def _max_decomp_contains_exceptional(Q):
    """Does some decomposition of Q into l(Q) positive-dim summands contain an
    exceptional triangle?"""
    key = canonical_key(Q)
    got = _obstruction_cache.get(key)
    if got is not None:
        return got
    if is_exceptional_triangle(Q):
        _obstruction_cache[key] = True
        return True
    ell = minkowski_length(Q)
    result = False
    if ell > 1:
        for S, R in _summand_splits(Q):
            if 1 + minkowski_length(R) != ell:
                continue
            if is_exceptional_triangle(S) or _max_decomp_contains_exceptional(R):
                result = True
                break
    _obstruction_cache[key] = result
    return result


def has_exceptional_obstruction(P):
    """True iff some sub-polytope achieving L(P) has a maximal decomposition
    with an exceptional-triangle summand."""
    L = full_minkowski_length(P)
    for Q in sub_polytopes(P):
        if Q.dim == 0:
            continue
        if minkowski_length(Q) == L and _max_decomp_contains_exceptional(Q):
            return True
    return False


# -- closed-form distances and bounds ---------------------------------------

def ls_rectangle_distance(k, l, q):
    """Exact minimum distance (q-1-k)(q-1-l) of the [0,k]x[0,l] box code."""
    if k > q - 2 or l > q - 2:
        raise DoesNotFit(max(k, l) + 2)
    return (q - 1 - k) * (q - 1 - l)


def ls_triangle_distance(k, l, q):
    """Exact minimum distance (q-1)^2 - M(q-1), M = max(k,l), of the right
    triangle with legs k and l."""
    if k > q - 2 or l > q - 2:
        raise DoesNotFit(max(k, l) + 2)
    M = max(k, l)
    return (q - 1) ** 2 - M * (q - 1)


def _sqrt_upper(x):
    """A rational >= sqrt(x) for a nonnegative Fraction x; exact when x is a
    perfect rational square."""
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    scale = 10**9
    ceil_scaled = -((-n * scale * scale) // d)
    return Fraction(isqrt(ceil_scaled) + 1, scale)


def ss_threshold(A, L, variant):
    """Smallest admissible q for the lower bound: max(23, (c+sqrt(c^2+5/2))^2)
    with c = A/2 - L + 9/4 in the Exceptional variant, and max(37, ...) with
    c = A/2 - L + 11/4 in the NoExceptional variant."""
    A = Fraction(A)
    if variant == EXCEPTIONAL:
        c = A / 2 - L + Fraction(9, 4)
        floor_q = 23
    elif variant == NO_EXCEPTIONAL:
        c = A / 2 - L + Fraction(11, 4)
        floor_q = 37
    else:
        raise ValueError(f"unknown variant {variant!r}")
    s = _sqrt_upper(c * c + Fraction(5, 2))
    return max(Fraction(floor_q), (c + s) ** 2)


class BoundReport:
    """Lower-bound report: full length L, area A, variant, threshold, value."""

    __slots__ = ("L", "A", "variant", "q_threshold", "bound", "q")

    def __init__(self, L, A, variant, q_threshold, bound, q):
        self.L = L
        self.A = A
        self.variant = variant
        self.q_threshold = q_threshold
        self.bound = bound
        self.q = q

    def to_dict(self):
        thr = self.q_threshold
        return {
            "L": self.L,
            "A": f"{self.A.numerator}/{self.A.denominator}",
            "variant": self.variant,
            "q_threshold": int(thr) if thr.denominator == 1 else f"{thr.numerator}/{thr.denominator}",
            "bound": self.bound,
        }

    def __repr__(self):
        return f"BoundReport(L={self.L}, variant={self.variant}, bound={self.bound})"


def ss_lower_bound(P, q):
    """Minimum-distance lower bound for C_P at q, provided q meets the
    applicable threshold; picks the stronger NoExceptional variant whenever
    no maximal decomposition is obstructed by an exceptional triangle."""
    L = full_minkowski_length(P)
    A = area(P)
    variant = EXCEPTIONAL if has_exceptional_obstruction(P) else NO_EXCEPTIONAL
    threshold = ss_threshold(A, L, variant)
    if q < threshold:
        raise ThresholdNotMet(threshold)
    n = (q - 1) ** 2
    if variant == EXCEPTIONAL:
        bound = n - L * (q - 1) - isqrt(4 * q) + 1
    else:
        bound = n - L * (q - 1)
    return BoundReport(L, A, variant, threshold, bound, q)


def torus_zero_bound(I, Bprime, q):
    """Upper bound q + 1 + floor(2 I sqrt(q)) - B' on torus zeros of an
    absolutely irreducible curve; the floor is exact integer arithmetic."""
    return q + 1 + isqrt(4 * I * I * q) - Bprime


def primitive_edge_count(P):
    """Number of hull edges whose only lattice points are their endpoints."""
    if P.dim != 2:
        raise NotPolygon(f"dim {P.dim} polytope has no polygon edges")
    hull = P.hull_vertices
    count = 0
    for a, b in zip(hull, hull[1:] + hull[:1]):
        if gcd(abs(b[0] - a[0]), abs(b[1] - a[1])) == 1:
            count += 1
    return count
