"""Length-<=2 Witt vectors over any coefficient ring in the library.

The ring laws for W_2 come from the universal structure polynomials,
expanded over the integers and reduced mod p:

    S1 = a1 + b1 - sum_{0<i<p} (1/p) C(p,i) a0^i b0^(p-i)
    P1 = a0^p b1 + a1 b0^p          (the p*a1*b1 cross term dies mod p)
    N1 = -a1 - (a0^p + (-a0)^p)/p   (identically -a1 for odd p)

Each integer coefficient is checked to be divisible where the formula
divides by p, which pins the expansion against the ghost construction;
the exhaustive Z/p^2 oracle below is the independent test surface.
"""

from functools import lru_cache
from math import comb

from .errors import ContextMismatchError, PreconditionError

# monomial key: exponents of (a0, a1, b0, b1)


@lru_cache(maxsize=None)
def structure_polynomials(p):
    """The mod-p structure polynomials for W_2 as monomial dicts."""
    if p not in (2, 3, 5, 7):
        raise PreconditionError("p must be a prime in 2..7")
    s1 = {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1}
    for i in range(1, p):
        c = comb(p, i)
        assert c % p == 0
        coef = (-(c // p)) % p
        if coef:
            key = (i, 0, p - i, 0)
            s1[key] = (s1.get(key, 0) + coef) % p
    p1 = {(p, 0, 0, 1): 1, (0, 1, p, 0): 1}
    n1 = {(0, 1, 0, 0): (-1) % p}
    if p == 2:
        # (a0^2 + a0^2)/2 = a0^2
        n1[(2, 0, 0, 0)] = 1
    return {"S1": s1, "P1": p1, "N1": n1}


def _eval_poly(poly, ctx, a0, a1, b0, b1):
    total = ctx.zero()
    for (e0, e1, e2, e3), c in sorted(poly.items()):
        term = ctx.from_int(c)
        if e0:
            term = term * a0 ** e0
        if e1:
            term = term * a1 ** e1
        if e2:
            term = term * b0 ** e2
        if e3:
            term = term * b1 ** e3
        total = total + term
    return total


class WittVec:
    """Witt vector of length 1 or 2 over a coefficient context ``ctx``
    (a residue field or a SeriesRing)."""

    __slots__ = ("ctx", "comps")

    def __init__(self, ctx, comps):
        comps = tuple(comps)
        if len(comps) not in (1, 2):
            raise PreconditionError("Witt length must be 1 or 2")
        self.ctx = ctx
        self.comps = comps

    @property
    def r(self):
        return len(self.comps)

    def _check(self, other):
        if not isinstance(other, WittVec) or other.ctx != self.ctx:
            raise ContextMismatchError("Witt vectors over different rings")
        if other.r != self.r:
            raise ContextMismatchError("Witt vectors of different lengths")

    def __add__(self, other):
        self._check(other)
        if self.r == 1:
            return WittVec(self.ctx, (self.comps[0] + other.comps[0],))
        polys = structure_polynomials(self.ctx.p)
        a0, a1 = self.comps
        b0, b1 = other.comps
        return WittVec(self.ctx, (a0 + b0, _eval_poly(polys["S1"], self.ctx, a0, a1, b0, b1)))

    def __neg__(self):
        if self.r == 1:
            return WittVec(self.ctx, (-self.comps[0],))
        polys = structure_polynomials(self.ctx.p)
        a0, a1 = self.comps
        zero = self.ctx.zero()
        return WittVec(self.ctx, (-a0, _eval_poly(polys["N1"], self.ctx, a0, a1, zero, zero)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.r == 1:
            return WittVec(self.ctx, (self.comps[0] * other.comps[0],))
        polys = structure_polynomials(self.ctx.p)
        a0, a1 = self.comps
        b0, b1 = other.comps
        return WittVec(self.ctx, (a0 * b0, _eval_poly(polys["P1"], self.ctx, a0, a1, b0, b1)))

    def frob_components(self):
        """Componentwise p-th power (not the Witt Frobenius)."""
        return WittVec(self.ctx, tuple(c.pth_power() for c in self.comps))

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other):
        return (isinstance(other, WittVec) and other.ctx == self.ctx
                and other.comps == self.comps)

    def __hash__(self):
        return hash(tuple(str(c) for c in self.comps))

    def __str__(self):
        if self.r == 1:
            return str(self.comps[0])
        return "w2(%s, %s)" % self.comps

    def __repr__(self):
        return "WittVec(%s)" % self


def witt_V(u):
    """Verschiebung W_1 -> W_2: a -> (0, a)."""
    if u.r != 1:
        raise PreconditionError("V expects length 1")
    return WittVec(u.ctx, (u.ctx.zero(), u.comps[0]))


def witt_R(u):
    """Projection W_2 -> W_1: (a0, a1) -> a0."""
    if u.r != 2:
        raise PreconditionError("R expects length 2")
    return WittVec(u.ctx, (u.comps[0],))


def witt_F(u):
    """Frobenius W_2 -> W_1; in characteristic p: (a0, a1) -> a0^p."""
    if u.r != 2:
        raise PreconditionError("F expects length 2")
    return WittVec(u.ctx, (u.comps[0].pth_power(),))


def witt_P(u):
    """Artin-Schreier-Witt map: componentwise Frobenius minus identity,
    the subtraction taken in the Witt ring."""
    return u.frob_components() - u


def ghost_oracle(p):
    """Independent addition/multiplication tables of W_2(F_p) via the
    ring Z/p^2 (test oracle; intentionally avoids the structure polys).

    The bijection sends (a0, a1) to a0^p + p*a1 mod p^2, i.e. (1,0) to 1
    and V(1) = (0,1) to p; its inverse is m -> (m mod p,
    (m - (m mod p)^p)/p mod p).
    """
    q = p * p

    def to_int(comps):
        a0, a1 = comps
        return (pow(a0, p, q) + p * a1) % q

    def from_int(m):
        a0 = m % p
        a1 = ((m - pow(a0, p, q)) // p) % p
        return (a0, a1)

    add_table = {}
    mul_table = {}
    for u in range(q):
        for v in range(q):
            add_table[(from_int(u), from_int(v))] = from_int((u + v) % q)
            mul_table[(from_int(u), from_int(v))] = from_int((u * v) % q)
    return add_table, mul_table
