"""Plane lattice polytopes, unimodular affine canonical forms, and the census
of equivalence classes by lattice-point count.

Conventions:

- points are plain (x, y) integer tuples
- a polytope stores its full lattice-point set (sorted by (x, y)) plus the
  hull vertices in counterclockwise order starting at the lex-min vertex
- equivalence maps are x -> M x + t with M integer, det(M) = +-1 (reflections
  included: the classification merges mirror pairs)
- all rational arithmetic is exact (fractions); no floats anywhere here
"""

from fractions import Fraction
from math import gcd

from .errors import ZeroAreaDegenerate

# Shear values scanned on each side of the row-aligned anchor when picking a
# canonical image.  Any window derived from the rotated point set alone keeps
# the canonical form constant on equivalence orbits.
SHEAR_WINDOW = 2


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Counterclockwise hull, lex-min vertex first; collinear inputs collapse."""
    pts = sorted(set(points))
    if len(pts) <= 1:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull


class LatticePolytope:
    """Immutable plane lattice polytope carrying its full lattice-point set."""

    __slots__ = ("points", "hull_vertices", "dim")

    def __init__(self, points, hull_vertices, dim):
        self.points = points
        self.hull_vertices = hull_vertices
        self.dim = dim

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"LatticePolytope({len(self.points)} pts, dim {self.dim})"

    def bbox(self):
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    def width_height(self):
        x0, y0, x1, y1 = self.bbox()
        return x1 - x0, y1 - y0


def lattice_points(vertices):
    """Polytope of the convex hull of `vertices` with every integer point filled in."""
    hull = convex_hull(vertices)
    if len(hull) == 1:
        return LatticePolytope((hull[0],), tuple(hull), 0)
    if len(hull) == 2:
        (x0, y0), (x1, y1) = hull
        g = gcd(abs(x1 - x0), abs(y1 - y0))
        sx, sy = (x1 - x0) // g, (y1 - y0) // g
        pts = tuple(sorted((x0 + i * sx, y0 + i * sy) for i in range(g + 1)))
        return LatticePolytope(pts, tuple(hull), 1)
    xs = [v[0] for v in hull]
    ys = [v[1] for v in hull]
    edges = list(zip(hull, hull[1:] + hull[:1]))
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if all((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) >= 0
                   for a, b in edges):
                pts.append(p)
    return LatticePolytope(tuple(sorted(pts)), tuple(hull), 2)


def boundary_interior(P):
    """(B, I): lattice points on the hull boundary and strictly inside."""
    if P.dim < 2:
        return len(P.points), 0
    B = 0
    hull = P.hull_vertices
    for a, b in zip(hull, hull[1:] + hull[:1]):
        B += gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
    return B, len(P.points) - B


def area(P):
    """Exact Euclidean area (shoelace over the hull)."""
    if P.dim < 2:
        raise ZeroAreaDegenerate(f"dim {P.dim} polytope has no area")
    hull = P.hull_vertices
    twice = 0
    for a, b in zip(hull, hull[1:] + hull[:1]):
        twice += a[0] * b[1] - b[0] * a[1]
    return Fraction(twice, 2)


def pick_area(B, I):
    """Pick's theorem: area from boundary and interior point counts."""
    return Fraction(2 * I + B - 2, 2)


class UnimodularAffineMap:
    """x -> M x + t with M a 2x2 integer matrix of determinant +-1."""

    __slots__ = ("m", "t")

    def __init__(self, m, t=(0, 0)):
        self.m = ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))
        self.t = (int(t[0]), int(t[1]))
        assert abs(self.det()) == 1, f"matrix {self.m} not unimodular"

    def det(self):
        (a, b), (c, d) = self.m
        return a * d - b * c

    def apply(self, p):
        (a, b), (c, d) = self.m
        return (a * p[0] + b * p[1] + self.t[0], c * p[0] + d * p[1] + self.t[1])

    def compose(self, other):
        """self after other: (self.compose(other)).apply(x) = self.apply(other.apply(x))."""
        (a, b), (c, d) = self.m
        (e, f), (g, h) = other.m
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        t = self.apply(other.t)
        return UnimodularAffineMap(m, (t[0], t[1]))

    def inverse(self):
        (a, b), (c, d) = self.m
        det = a * d - b * c
        inv = ((d * det, -b * det), (-c * det, a * det))
        it = (-(inv[0][0] * self.t[0] + inv[0][1] * self.t[1]),
              -(inv[1][0] * self.t[0] + inv[1][1] * self.t[1]))
        return UnimodularAffineMap(inv, it)

    @staticmethod
    def identity():
        return UnimodularAffineMap(((1, 0), (0, 1)))

    def __eq__(self, other):
        return (isinstance(other, UnimodularAffineMap)
                and self.m == other.m and self.t == other.t)

    def __repr__(self):
        return f"UnimodularAffineMap(m={self.m}, t={self.t})"


def apply_map(T, P):
    """Pointwise image of P; unimodular affine maps preserve lattice point sets."""
    pts = tuple(sorted(T.apply(p) for p in P.points))
    hull = convex_hull([T.apply(v) for v in P.hull_vertices])
    return LatticePolytope(pts, tuple(hull), P.dim)


def _primitive(v):
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _basis_completion(u):
    """Unimodular M0 with M0 u = (1, 0), via the extended Euclid cofactors."""
    a, b = u
    # x0*a + y0*b = 1
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    x0, y0 = old_s, old_t
    return ((x0, y0), (-b, a))


def _edge_directions(P):
    """Primitive hull edge directions, deduplicated up to sign, sorted."""
    hull = P.hull_vertices
    dirs = set()
    for a, b in zip(hull, hull[1:] + hull[:1]):
        u = _primitive((b[0] - a[0], b[1] - a[1]))
        if u[0] < 0 or (u[0] == 0 and u[1] < 0):
            u = (-u[0], -u[1])
        dirs.add(u)
    return sorted(dirs)


def _shear_anchor(rot):
    """Shear t aligning the lex-min points of the top and bottom rows."""
    ymin = min(p[1] for p in rot)
    ymax = max(p[1] for p in rot)
    H = ymax - ymin
    bot = min(p[0] for p in rot if p[1] == ymin)
    top = min(p[0] for p in rot if p[1] == ymax)
    return -((top - bot) // H)


def _row_major_key(pts):
    """Sorted (y, x) pairs after translating the min-corner to the origin."""
    xmin = min(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    return tuple(sorted((y - ymin, x - xmin) for x, y in pts))


def canonical_form(P):
    """Canonical representative and a map achieving it.

    Candidate frames come from the primitive hull edge directions (both
    orientations, both determinant signs); the leftover shear freedom is
    normalized by the row-alignment anchor plus a small scan window; the image
    with the smallest row-major point list wins.  The winner has its min-corner
    at the origin and all coordinates >= 0.  Segments canonicalize to
    {(0,0)..(l,0)}, single points to {(0,0)}.
    """
    pts = P.points
    if P.dim == 0:
        p = pts[0]
        T = UnimodularAffineMap(((1, 0), (0, 1)), (-p[0], -p[1]))
        return LatticePolytope(((0, 0),), ((0, 0),), 0), T
    if P.dim == 1:
        a, b = P.hull_vertices[0], P.hull_vertices[-1]
        u = _primitive((b[0] - a[0], b[1] - a[1]))
        m = _basis_completion(u)
        T = UnimodularAffineMap(m)
        q = [T.apply(p) for p in pts]
        xmin = min(p[0] for p in q)
        y = q[0][1]
        T = UnimodularAffineMap(m, (-xmin, -y))
        return apply_map(T, P), T

    best_key = None
    best_map = None
    for u in _edge_directions(P):
        for ou in (u, (-u[0], -u[1])):
            m0 = _basis_completion(ou)
            (a00, a01), (a10, a11) = m0
            for s in (1, -1):
                m = ((a00, a01), (s * a10, s * a11))
                rot = [(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
                       for x, y in pts]
                t0 = _shear_anchor(rot)
                for t in range(t0 - SHEAR_WINDOW, t0 + SHEAR_WINDOW + 1):
                    sheared = [(x + t * y, y) for x, y in rot]
                    key = _row_major_key(sheared)
                    if best_key is None or key < best_key:
                        best_key = key
                        best_map = ((m[0][0] + t * m[1][0], m[0][1] + t * m[1][1]),
                                    (m[1][0], m[1][1]))
    canon_pts = tuple(sorted((x, y) for y, x in best_key))
    hull = convex_hull(canon_pts)
    canon = LatticePolytope(canon_pts, tuple(hull), 2)
    M = UnimodularAffineMap(best_map)
    img = [M.apply(p) for p in pts]
    tx = -min(p[0] for p in img)
    ty = -min(p[1] for p in img)
    T = UnimodularAffineMap(best_map, (tx, ty))
    return canon, T


def are_lattice_equivalent(P1, P2):
    """A map T with T(P1) = P2 if one exists, else None."""
    C1, T1 = canonical_form(P1)
    C2, T2 = canonical_form(P2)
    if C1.points != C2.points:
        return None
    T = T2.inverse().compose(T1)
    assert apply_map(T, P1).points == P2.points
    return T


def candidate_points(P):
    """Finite candidate region for single-point additions.

    For dim-2 bases this is a genuine superset of every v with
    #(conv(P u {v})) = #(P) + 1: the triangle spanned by v and a primitive
    boundary segment of P sits inside the grown polygon, whose area Pick's
    theorem caps at #(P) - 3/2, so |cross(u, v - a)| <= 2#(P) - 3 along two
    independent edge directions.  Lower-dimensional bases admit infinitely
    many valid additions, all shear-equivalent; the region returned is
    complete up to equivalences fixing the base.
    """
    k = len(P.points)
    bound = 2 * k - 3
    pts_set = set(P.points)
    out = []
    if P.dim == 0:
        cx, cy = P.points[0]
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if (dx, dy) != (0, 0):
                    out.append((cx + dx, cy + dy))
        return sorted(out)
    if P.dim == 1:
        a = P.hull_vertices[0]
        b = P.hull_vertices[-1]
        u = _primitive((b[0] - a[0], b[1] - a[1]))
        w = (-u[1], u[0])
        ell = k - 1
        for beta in range(-bound, bound + 1):
            alphas = range(-2 * k, ell + 2 * k + 1) if beta else (-1, ell + 1)
            for alpha in alphas:
                v = (a[0] + alpha * u[0] + beta * w[0],
                     a[1] + alpha * u[1] + beta * w[1])
                if v not in pts_set:
                    out.append(v)
        return sorted(out)

    hull = P.hull_vertices
    edges = []
    for a, b in zip(hull, hull[1:] + hull[:1]):
        edges.append((a, _primitive((b[0] - a[0], b[1] - a[1]))))
    a1, u1 = edges[0]
    a2, u2 = next((a, u) for a, u in edges[1:]
                  if u1[0] * u[1] - u1[1] * u[0] != 0)
    # Corner points of the strip intersection bound the scan box.
    det = u1[0] * u2[1] - u1[1] * u2[0]
    c1 = u1[0] * a1[1] - u1[1] * a1[0]
    c2 = u2[0] * a2[1] - u2[1] * a2[0]
    corners = []
    for s1 in (-bound, bound):
        for s2 in (-bound, bound):
            # cross(u1, v - a1) = s1, cross(u2, v - a2) = s2
            rhs1 = s1 + c1
            rhs2 = s2 + c2
            x = Fraction(rhs1 * u2[0] - rhs2 * u1[0], det)
            y = Fraction(rhs1 * u2[1] - rhs2 * u1[1], det)
            corners.append((x, y))
    xlo = min(c[0] for c in corners)
    xhi = max(c[0] for c in corners)
    ylo = min(c[1] for c in corners)
    yhi = max(c[1] for c in corners)
    for x in range(int(xlo) - 1, int(xhi) + 2):
        for y in range(int(ylo) - 1, int(yhi) + 2):
            v = (x, y)
            if v in pts_set:
                continue
            d1 = u1[0] * (y - a1[1]) - u1[1] * (x - a1[0])
            d2 = u2[0] * (y - a2[1]) - u2[1] * (x - a2[0])
            if abs(d1) <= bound and abs(d2) <= bound:
                out.append(v)
    return sorted(out)


def grow_by_one(P):
    """All polytopes with one more lattice point containing P, deduplicated
    by exact point set (not up to equivalence)."""
    k = len(P.points)
    seen = {}
    for v in candidate_points(P):
        Q = lattice_points(list(P.hull_vertices) + [v])
        if len(Q.points) == k + 1:
            seen[Q.points] = Q
    return [seen[key] for key in sorted(seen)]


def enumerate_classes(k):
    """Canonical representatives of all equivalence classes with k lattice points.

    Built inductively from the two-point seed {(0,0),(1,0)}: every polytope
    with k points contains one with k-1 (drop a suitable vertex), so growing
    every (k-1)-class by one candidate point reaches every k-class.
    """
    if k < 2:
        raise ValueError("census starts at k = 2")
    classes = [lattice_points([(0, 0), (1, 0)])]
    for _size in range(3, k + 1):
        seen = {}
        cache = {}
        for base in classes:
            for Q in grow_by_one(base):
                key = _translate_normalize(Q.points)
                canon = cache.get(key)
                if canon is None:
                    canon = canonical_form(Q)[0]
                    cache[key] = canon
                seen[canon.points] = canon
        classes = [seen[key] for key in sorted(seen)]
    return classes


def _translate_normalize(pts):
    xmin = min(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    return tuple((x - xmin, y - ymin) for x, y in pts)


_canon_key_cache = {}


def canonical_key(P):
    """Canonical-form point tuple, cached by translation-normalized input."""
    key = _translate_normalize(P.points)
    got = _canon_key_cache.get(key)
    if got is None:
        got = canonical_form(P)[0].points
        _canon_key_cache[key] = got
    return got


# -- polytope text format ----------------------------------------------------

def polytope_line(k, index, P):
    """One-line text form: `k=7 id=15 pts=(-1,0)(-1,1)...` (points sorted lex)."""
    pts = "".join(f"({x},{y})" for x, y in P.points)
    return f"k={k} id={index} pts={pts}"


def parse_polytope_line(line):
    """Inverse of polytope_line: returns (k, index, LatticePolytope)."""
    fields = dict(part.split("=", 1) for part in line.strip().split(None, 2))
    k = int(fields["k"])
    index = int(fields["id"])
    body = fields["pts"].strip()
    pts = []
    for chunk in body.strip("()").split(")("):
        x, y = chunk.split(",")
        pts.append((int(x), int(y)))
    P = lattice_points(pts)
    if P.points != tuple(sorted(pts)):
        raise ValueError(f"point list is not hull-saturated: {line!r}")
    if len(P.points) != k:
        raise ValueError(f"k={k} does not match {len(P.points)} points: {line!r}")
    return k, index, P
