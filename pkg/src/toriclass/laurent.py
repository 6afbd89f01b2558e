"""Laurent polynomials on the torus (F_q*)^2: evaluation, zero counting,
Newton polygons, and the monomial basis attached to a lattice polygon.

Exponent vectors live in Z^2 (negative exponents welcome; the torus has no
zero coordinates).  Coefficients are field elements in the integer encoding
of the gf module.  Zero counting is vectorized over the whole torus through
the field's log/antilog tables.
"""

import numpy as np

from .errors import NotOnTorus, ZeroPolynomial
from .lattice import lattice_points


class LaurentPolynomial:
    """Finite exponent-to-coefficient map with no zero coefficients stored."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def monomial(cls, field, exponent, coeff=1):
        return cls(field, {tuple(exponent): coeff})

    @classmethod
    def constant(cls, field, coeff):
        return cls(field, {(0, 0): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, LaurentPolynomial)
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field.q, frozenset(self.terms.items())))

    def __add__(self, other):
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial(F, out)

    def __neg__(self):
        F = self.field
        return LaurentPolynomial(F, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, int):
            return LaurentPolynomial(F, {e: F.mul(c, other) for e, c in self.terms.items()})
        out = {}
        for (e1, e2), c in self.terms.items():
            for (f1, f2), d in other.terms.items():
                e = (e1 + f1, e2 + f2)
                s = F.add(out.get(e, 0), F.mul(c, d))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPolynomial(F, out)

    __rmul__ = __mul__

    def key(self):
        """Hashable canonical form of the expanded polynomial."""
        return frozenset(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "LaurentPolynomial(0)"
        bits = [f"{c}*x^{e1}y^{e2}" for (e1, e2), c in sorted(self.terms.items())]
        return " + ".join(bits)


def product(field, factors):
    """Product of LaurentPolynomials (empty product = 1)."""
    acc = LaurentPolynomial.constant(field, 1)
    for f in factors:
        acc = acc * f
    return acc


def evaluate(f, a):
    """f at the torus point a = (a1, a2); both coordinates must be nonzero."""
    F = f.field
    a1, a2 = a
    if a1 == 0 or a2 == 0:
        raise NotOnTorus("evaluation point has a zero coordinate")
    acc = 0
    for (e1, e2), c in f.terms.items():
        acc = F.add(acc, F.mul(c, F.mul(F.pow(a1, e1), F.pow(a2, e2))))
    return acc


def torus_values(f):
    """f evaluated at every torus point, in the fixed (g^i, g^j) column order."""
    F = f.field
    q = F.q
    n = (q - 1) ** 2
    ii, jj = np.divmod(np.arange(n), q - 1)
    add = F.add_table
    mul = F.mul_table
    exp = F.exp
    acc = np.zeros(n, dtype=add.dtype)
    for (e1, e2), c in f.terms.items():
        vals = exp[(ii * e1 + jj * e2) % (q - 1)]
        acc = add[acc, mul[c][vals]]
    return acc


def count_torus_zeros(f):
    """Number of torus points where f vanishes."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial vanishes everywhere")
    return int((torus_values(f) == 0).sum())


def newton_polygon(f):
    """Convex hull of the exponent vectors of f."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no Newton polygon")
    return lattice_points(list(f.terms))


def monomial_basis(P):
    """The lattice points of P in the fixed (x, y)-sorted order; this is the
    row order of every generator matrix built from P."""
    return list(P.points)
