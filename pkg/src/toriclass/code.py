"""Toric code construction and exact parameter computation.

The generator matrix evaluates each monomial of the polygon at each torus
point: G[r, c] = a_c ^ p_r, rows in monomial_basis order, columns in
torus_points order (i outer, j inner).  Weight distributions come from full
projective enumeration: one representative per scalar class (first nonzero
message digit equal to 1), counts multiplied back by q-1.  The enumeration
is batched: all but the last two free message digits are expanded into a
prefix array, and the last two are applied through a precomputed q^2-row
pair table.
"""

import numpy as np

from .errors import DoesNotFit, TooLarge
from .laurent import LaurentPolynomial

DEFAULT_BUDGET = 10**9


class ToricCode:
    """polygon + field + deterministic generator matrix."""

    __slots__ = ("field", "polygon", "offset", "exponents", "G", "n", "k")

    def __init__(self, field, polygon, offset, exponents, G):
        self.field = field
        self.polygon = polygon
        self.offset = offset
        self.exponents = exponents
        self.G = G
        self.k, self.n = G.shape

    def __repr__(self):
        return f"ToricCode(q={self.field.q}, n={self.n}, k={self.k})"

    def message_polynomial(self, msg):
        """The Laurent polynomial (in original polygon coordinates) encoded by msg."""
        dx, dy = self.offset
        terms = {}
        for coeff, (e1, e2) in zip(msg, self.exponents):
            if coeff:
                terms[(e1 + dx, e2 + dy)] = int(coeff)
        return LaurentPolynomial(self.field, terms)


def build_code(P, field):
    """Toric code of polygon P over the field; the polygon is translated by its
    min-corner into [0, q-2]^2 (a lattice equivalence, recorded in `offset`)."""
    q = field.q
    w, h = P.width_height()
    if w > q - 2 or h > q - 2:
        raise DoesNotFit(max(w, h) + 2)
    x0, y0, _, _ = P.bbox()
    exponents = [(x - x0, y - y0) for x, y in P.points]
    n = (q - 1) ** 2
    ii, jj = np.divmod(np.arange(n), q - 1)
    G = np.zeros((len(exponents), n), dtype=field.add_table.dtype)
    for r, (e1, e2) in enumerate(exponents):
        G[r] = field.exp[(ii * e1 + jj * e2) % (q - 1)]
    return ToricCode(field, P, (x0, y0), exponents, G)


def encode(C, msg):
    """Codeword msg . G as a numpy vector of field elements."""
    F = C.field
    add = F.add_table
    acc = np.zeros(C.n, dtype=add.dtype)
    for coeff, row in zip(msg, C.G):
        if coeff:
            acc = add[acc, F.mul_table[int(coeff)][row]]
    return acc


class WeightDistribution:
    """Codeword counts by weight: A[i] = number of codewords of weight i."""

    __slots__ = ("A", "n", "k", "q")

    def __init__(self, A, n, k, q):
        self.A = A
        self.n = n
        self.k = k
        self.q = q
        assert int(A[0]) == 1
        assert int(A.sum()) == q**k
        assert all(int(a) % (q - 1) == 0 for a in A[1:] if a)

    def min_distance(self):
        nz = np.nonzero(self.A[1:])[0]
        return int(nz[0]) + 1

    def coefficient(self, weight):
        return int(self.A[weight]) if 0 <= weight <= self.n else 0

    def enumerator_string(self, label):
        bits = []
        for w in range(self.n, -1, -1):
            a = int(self.A[w])
            if a:
                bits.append(f"{a}*x^{w}")
        return f"W[{label}][q={self.q}] = " + " + ".join(bits)

    def to_list(self):
        return [int(a) for a in self.A]


def enumeration_cost(q, k, n):
    """Column-operation count of the projective enumeration (budget unit)."""
    return q ** (k - 1) * n


def weight_distribution(C, budget=DEFAULT_BUDGET):
    """Exact weight distribution by projective enumeration.

    Refuses with TooLarge when q^(k-1) * n column-operations exceed the budget.
    """
    q = C.field.q
    cost = enumeration_cost(q, C.k, C.n)
    if budget is not None and cost > budget:
        raise TooLarge(cost, budget)
    counts = _projective_weight_counts(C)
    A = counts * (q - 1)
    A[0] = 1
    return WeightDistribution(A, C.n, C.k, q)


def _scaled_rows(C):
    """scaled[r][s] = s * G[r] for every scalar s; shape (k, q, n)."""
    F = C.field
    out = np.zeros((C.k, F.q, C.n), dtype=F.add_table.dtype)
    for r in range(C.k):
        out[r] = F.mul_table[:, C.G[r]]
    return out


def projective_batches(C):
    """Yield codeword-value arrays of shape (B, n), one row per projective
    representative (first nonzero message digit 1), covering every nonzero
    scalar class exactly once across all yields."""
    q = C.field.q
    n, k = C.n, C.k
    add = C.field.add_table
    scaled = _scaled_rows(C)
    for lead in range(k):
        free = list(range(lead + 1, k))
        arr = scaled[lead][1][None, :]
        for r in free[:-2]:
            arr = add[arr[:, None, :], scaled[r][None, :, :]].reshape(-1, n)
        tail = free[-2:]
        if not tail:
            yield arr
        elif len(tail) == 1:
            yield add[arr[:, None, :], scaled[tail[0]][None, :, :]].reshape(-1, n)
        else:
            rA, rB = tail
            pair = add[scaled[rA][:, None, :], scaled[rB][None, :, :]].reshape(q * q, n)
            for row in pair:
                yield add[arr, row[None, :]]


def _projective_weight_counts(C):
    """Weight histogram over one representative per projective message class."""
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for W in projective_batches(C):
        weights = (W != 0).sum(axis=1)
        counts += np.bincount(weights, minlength=C.n + 1)
    return counts


def min_distance(C, budget=DEFAULT_BUDGET):
    """Smallest nonzero codeword weight (exhaustive, exact)."""
    return weight_distribution(C, budget).min_distance()


def special_weight_targets(q):
    """The three distinguished weights, with 2q-2, 2q-3, 3q-5 torus zeros."""
    n = (q - 1) ** 2
    return n - (2 * q - 2), n - (2 * q - 3), n - (3 * q - 5)


def special_weight_counts(C, budget=DEFAULT_BUDGET, dist=None):
    """(n1, n2, n3): codeword counts at the three distinguished weights."""
    if dist is None:
        dist = weight_distribution(C, budget)
    w1, w2, w3 = special_weight_targets(C.field.q)
    return dist.coefficient(w1), dist.coefficient(w2), dist.coefficient(w3)


def code_from_generator(field, G):
    """Wrap an explicit generator matrix (e.g. a scrambled code) as a code
    object usable by the enumeration and equivalence machinery."""
    G = np.asarray(G, dtype=field.add_table.dtype)
    return ToricCode(field, None, (0, 0), None, G)


def batch_weights(C, msgs):
    """Weights of many codewords at once; msgs is an (N, k) integer array."""
    F = C.field
    add = F.add_table
    msgs = np.asarray(msgs)
    acc = np.zeros((msgs.shape[0], C.n), dtype=add.dtype)
    for r in range(C.k):
        acc = add[acc, F.mul_table[msgs[:, r], :][:, C.G[r]]]
    return (acc != 0).sum(axis=1)
