"""Dense polynomials and reduced rational functions over F_q.

RatFunc is the element type of the rational-function residue field
F_q(x): numerator/denominator polynomials with the denominator monic
and gcd(num, den) = 1.  The p-th-power test and p-basis decomposition
work by exponent-class grouping on num * den^(p-1), which avoids any
polynomial factorization.
"""

from .errors import ContextMismatchError, PreconditionError
from .finite import FqElem


class Poly:
    """Polynomial over F_q, dense coefficient tuple, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero(), field.one()))

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Poly(self.field, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Poly(self.field, ())
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, tuple(out))

    def scale(self, c):
        return Poly(self.field, tuple(c * a for a in self.coeffs))

    def __pow__(self, e):
        result = Poly.const(self.field, self.field.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv = other.coeffs[-1].inv()
        quo = [self.field.zero()] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            lead = rem[-1] * inv
            shift = len(rem) - 1 - db
            quo[shift] = lead
            for i in range(db + 1):
                rem[shift + i] = rem[shift + i] - lead * other.coeffs[i]
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(self.field, tuple(quo)), Poly(self.field, tuple(rem))

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.coeffs[-1].inv())

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def derivative(self):
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.field.from_int(i) * self.coeffs[i])
        return Poly(self.field, tuple(out))

    def pth_root(self):
        """Return h with h^p = self, or None.  A polynomial is a p-th
        power iff every exponent carrying a nonzero coefficient is
        divisible by p (coefficient roots always exist in F_q)."""
        p = self.field.p
        if self.is_zero():
            return self
        root = [self.field.zero()] * (self.degree() // p + 1)
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i % p != 0:
                return None
            root[i // p] = c.pth_root()
        return Poly(self.field, tuple(root))

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero()

    def __eq__(self, other):
        return isinstance(other, Poly) and other.field == self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field.q,) + self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = str(c)
            need_paren = any(op in cs for op in "+-") and i > 0
            if i == 0:
                terms.append("(%s)" % cs if "+" in cs or "-" in cs else cs)
                continue
            xs = "x" if i == 1 else "x^%d" % i
            if cs == "1":
                terms.append(xs)
            else:
                terms.append("%s*%s" % ("(%s)" % cs if need_paren else cs, xs))
        return "+".join(terms)


class RatFunc:
    """Reduced rational function num/den over F_q in the variable x."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, reduced=False):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.coeffs[-1]
            if not (lead - field.one()).is_zero():
                inv = lead.inv()
                num = num.scale(inv)
                den = den.scale(inv)
        self.field = field
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------
    @classmethod
    def from_poly(cls, field, poly):
        return cls(field, poly, Poly.const(field, field.one()), reduced=True)

    @classmethod
    def const(cls, field, c):
        return cls.from_poly(field, Poly.const(field, c))

    @classmethod
    def x(cls, field):
        return cls.from_poly(field, Poly.x(field))

    def _check(self, other):
        if not isinstance(other, RatFunc) or other.field != self.field:
            raise ContextMismatchError("rational functions from different fields")

    # -- ring/field ops -------------------------------------------------
    def __add__(self, other):
        self._check(other)
        return RatFunc(self.field, self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        self._check(other)
        return RatFunc(self.field, self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den, reduced=True)

    def __mul__(self, other):
        self._check(other)
        return RatFunc(self.field, self.num * other.num, self.den * other.den)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.field, self.den, self.num)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        return RatFunc(self.field, self.num ** e, self.den ** e)

    def is_zero(self):
        return self.num.is_zero()

    def is_exact_zero(self):
        return self.is_zero()

    def pth_power(self):
        p = self.field.p
        return RatFunc(self.field, self.num ** p, self.den ** p, reduced=True)

    def pth_root(self):
        """Return u with u^p = self, or None.  Tests num * den^(p-1)
        for p-th-power shape by exponent grouping."""
        p = self.field.p
        if self.is_zero():
            return self
        g = self.num * self.den ** (p - 1)
        r = g.pth_root()
        if r is None:
            return None
        return RatFunc(self.field, r, self.den)

    def derivative(self):
        # (num' den - num den') / den^2
        return RatFunc(self.field,
                       self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def p_basis_decompose(self):
        """Components (f_0, ..., f_{p-1}) with self = sum f_i^p x^i."""
        p = self.field.p
        g = self.num * self.den ** (p - 1)
        comps = []
        for i in range(p):
            root = [self.field.zero()] * (g.degree() // p + 2 if not g.is_zero() else 1)
            for e, c in enumerate(g.coeffs):
                if not c.is_zero() and e % p == i:
                    root[e // p] = c.pth_root()
            comps.append(RatFunc(self.field, Poly(self.field, tuple(root)), self.den))
        return tuple(comps)

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and other.field == self.field
                and other.num == self.num and other.den == self.den)

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __str__(self):
        ns = str(self.num)
        if self.den.degree() == 0:
            return ns
        ds = str(self.den)
        if "+" in ns or "-" in ns:
            ns = "(%s)" % ns
        if "+" in ds or "-" in ds or "*" in ds:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)
