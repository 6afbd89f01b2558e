"""Exact arithmetic in GF(q) for prime powers q, with log/antilog tables.

Elements are integers in [0, q) encoding coordinate vectors over GF(p) in the
polynomial basis, little-endian: e = sum(c_i * p^i).  The modulus polynomial is
the lexicographically smallest monic irreducible of degree m (by the same
integer encoding), and the generator is the smallest element of multiplicative
order q-1.  Both are deterministic so that generator matrices, torus point
orders and equivalence witnesses are reproducible byte-for-byte.
"""

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import NotPrimePower


def _prime_power(q):
    """Split q into (p, m) with q = p^m, p prime; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    for d in range(2, int(p**0.5) + 1):
        if p % d == 0:
            raise NotPrimePower(f"{q} is not a prime power")
    return p, m


def _poly_digits(n, p):
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


def _poly_encode(digits, p):
    n = 0
    for c in reversed(digits):
        n = n * p + c
    return n


def _poly_divmod(a, b, p):
    """Divide polynomial a by b over GF(p); both little-endian digit lists."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(da - db + 1, 1)
    for shift in range(da - db, -1, -1):
        coef = (a[shift + db] * inv_lead) % p
        if coef:
            quot[shift] = coef
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - coef * bc) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quot, a


def _poly_mulmod(a, b, modulus, p):
    """Product of digit lists a, b reduced mod the modulus polynomial."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                prod[i + j] = (prod[i + j] + ac * bc) % p
    _, rem = _poly_divmod(prod, modulus, p)
    return rem


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d, 2 * p**d):
            div = _poly_digits(enc, p)
            if len(div) != d + 1 or div[-1] != 1:
                continue
            _, rem = _poly_divmod(poly, div, p)
            if len(rem) == 1 and rem[0] == 0:
                return False
    return True


def _smallest_modulus(p, m):
    """Lex-smallest (by integer encoding) monic irreducible of degree m over GF(p)."""
    if m == 1:
        return [0, 1]
    for enc in range(p**m, 2 * p**m):
        digits = _poly_digits(enc, p)
        if len(digits) == m + 1 and digits[-1] == 1 and _is_irreducible(digits, p):
            return digits
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


class Field:
    """GF(p^m) with fixed modulus, generator, and log/antilog tables."""

    def __init__(self, q):
        p, m = _prime_power(q)
        if q > 2**16:
            raise NotPrimePower(f"q = {q} beyond supported range 2^16")
        self.q = q
        self.p = p
        self.m = m
        self.modulus = _smallest_modulus(p, m)
        self._digits = [_poly_digits(e, p) or [0] for e in range(q)]
        self.generator = self._find_generator()
        self._build_log_tables()

    # -- raw arithmetic (table-free; used only during construction) --

    def _raw_mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        rem = _poly_mulmod(self._digits[a], self._digits[b], self.modulus, self.p)
        return _poly_encode(rem, self.p)

    def _raw_pow(self, a, e):
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return acc

    def _find_generator(self):
        n = self.q - 1
        prime_factors = set()
        rest = n
        d = 2
        while d * d <= rest:
            while rest % d == 0:
                prime_factors.add(d)
                rest //= d
            d += 1
        if rest > 1:
            prime_factors.add(rest)
        for g in range(2, self.q):
            if all(self._raw_pow(g, n // r) != 1 for r in prime_factors):
                return g
        raise AssertionError("no generator found")

    def _build_log_tables(self):
        n = self.q - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, self.generator)
        assert x == 1, "generator order != q-1"
        exp[n:] = exp[:n]
        self.exp = exp
        self.log = log

    # -- element operations --

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits[a], self._digits[b]
        if len(da) < len(db):
            da, db = db, da
        out = list(da)
        for i, c in enumerate(db):
            out[i] = (out[i] + c) % self.p
        return _poly_encode(out, self.p)

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return _poly_encode([(-c) % self.p for c in self._digits[a]], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return int(self.exp[(self.q - 1) - self.log[a]])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0 if e else 1
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def units(self):
        """All nonzero elements, in generator-power order g^0, g^1, ..."""
        return [int(self.exp[i]) for i in range(self.q - 1)]

    def count_kth_roots(self, a, k):
        """Number of i in GF(q)* with i^k = a (a nonzero)."""
        if a == 0:
            raise ZeroDivisionError("kth roots of 0")
        g = gcd(k, self.q - 1)
        return g if self.log[a] % g == 0 else 0

    def is_square(self, a):
        return a != 0 and self.count_kth_roots(a, 2) > 0

    # -- bulk tables for the enumeration engines --

    @property
    def add_table(self):
        if not hasattr(self, "_add_table"):
            q = self.q
            dtype = np.uint8 if q <= 256 else np.uint16
            t = np.zeros((q, q), dtype=dtype)
            if self.m == 1:
                idx = np.arange(q, dtype=np.int64)
                t[:, :] = (idx[:, None] + idx[None, :]) % self.p
            else:
                for a in range(q):
                    for b in range(q):
                        t[a, b] = self.add(a, b)
            self._add_table = t
        return self._add_table

    @property
    def mul_table(self):
        if not hasattr(self, "_mul_table"):
            q = self.q
            dtype = np.uint8 if q <= 256 else np.uint16
            t = np.zeros((q, q), dtype=dtype)
            for a in range(1, q):
                for b in range(1, q):
                    t[a, b] = self.mul(a, b)
            self._mul_table = t
        return self._mul_table

    # -- serialization --

    def spec_dict(self):
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    def __repr__(self):
        return f"Field(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.q == other.q

    def __hash__(self):
        return hash(("Field", self.q))


@lru_cache(maxsize=None)
def build_field(q):
    """Deterministic GF(q); raises NotPrimePower for composite non-prime-powers."""
    return Field(q)


def torus_points(field):
    """The (q-1)^2 points (g^i, g^j) of the 2-torus, i outer, j inner.

    This order is the column order of every generator matrix.
    """
    units = field.units()
    return [(a, b) for a in units for b in units]
