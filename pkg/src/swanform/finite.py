"""Arithmetic in F_q, q = p^n, with a deterministically chosen modulus.

Elements are vectors of p-ary digits with respect to the monic
irreducible modulus of degree n whose coefficient vector, read as a
base-p integer (constant digit least significant), is minimal.  The
choice is deterministic per (p, n) so that all serialized output is
reproducible; for (2,2) it yields w^2+w+1 and for (3,2) it yields
w^2+1.
"""

from functools import lru_cache

from .errors import ContextMismatchError, PreconditionError

GENERATOR_NAME = "w"


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
    return _poly_trim(tuple(x % p for x in a))


def _poly_powmod(a, e, m, p):
    result = (1,)
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _poly_rem(a, b, p):
    binv = pow(b[-1], p - 2, p)
    a = list(a)
    db = len(b) - 1
    while a and len(a) - 1 >= db:
        lead = (a[-1] * binv) % p
        if lead:
            shift = len(a) - 1 - db
            for i in range(db + 1):
                a[shift + i] = (a[shift + i] - lead * b[i]) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return _poly_trim(tuple(x % p for x in a))


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f, p):
    """Rabin test: f of degree n is irreducible over F_p iff
    x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n."""
    n = len(f) - 1
    x = (0, 1)
    xq = _poly_powmod(x, p ** n, f, p)
    if _poly_trim(xq) != _poly_trim(x):
        return False
    for r in _prime_divisors(n):
        xe = _poly_powmod(x, p ** (n // r), f, p)
        diff = _poly_trim(tuple(
            ((xe[i] if i < len(xe) else 0) - (x[i] if i < len(x) else 0)) % p
            for i in range(max(len(xe), len(x)))
        ))
        g = _poly_gcd(diff, f, p)
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def _minimal_modulus(p, n):
    if n == 1:
        return (0, 1)
    for code in range(p ** n):
        coeffs = []
        c = code
        for _ in range(n):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible modulus found")  # unreachable


class FqElem:
    """Element of F_q as a length-n digit tuple over F_p."""

    __slots__ = ("field", "digits")

    def __init__(self, field, digits):
        self.field = field
        self.digits = digits

    def _check(self, other):
        if not isinstance(other, FqElem):
            raise ContextMismatchError("expected an F_q element")
        if other.field is not self.field and other.field != self.field:
            raise ContextMismatchError("F_q elements from different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.digits, other.digits)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FqElem(self.field, tuple((a - b) % p for a, b in zip(self.digits, other.digits)))

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.digits))

    def __mul__(self, other):
        self._check(other)
        return self.field._mul(self, other)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_q")
        return self ** (self.field.q - 2)

    def is_zero(self):
        return all(d == 0 for d in self.digits)

    def is_exact_zero(self):
        return self.is_zero()

    def pth_power(self):
        return self ** self.field.p

    def pth_root(self):
        # Frobenius is a bijection: x -> x^(p^(n-1)) inverts it.
        return self ** (self.field.p ** (self.field.n - 1))

    def trace(self):
        """Absolute trace to F_p, returned as an int in [0, p)."""
        acc = self
        tot = self
        for _ in range(self.field.n - 1):
            acc = acc.pth_power()
            tot = tot + acc
        return tot.digits[0] if tot.digits else 0

    def __eq__(self, other):
        return isinstance(other, FqElem) and other.field == self.field and other.digits == self.digits

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.digits))

    def __str__(self):
        terms = []
        for i, d in enumerate(self.digits):
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            elif i == 1:
                terms.append(GENERATOR_NAME if d == 1 else "%d*%s" % (d, GENERATOR_NAME))
            else:
                base = "%s^%d" % (GENERATOR_NAME, i)
                terms.append(base if d == 1 else "%d*%s" % (d, base))
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return "Fq(%s)" % self


class Fq:
    """The field F_q = F_p[w]/(modulus), q = p^n."""

    def __init__(self, p, n=1):
        if p not in (2, 3, 5, 7):
            raise PreconditionError("characteristic must be a prime in 2..7")
        if n < 1:
            raise PreconditionError("extension degree must be positive")
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = _minimal_modulus(p, n)
        self._inv_table = None

    # -- construction -------------------------------------------------
    def elem(self, digits):
        digits = tuple(d % self.p for d in digits)
        if len(digits) < self.n:
            digits = digits + (0,) * (self.n - len(digits))
        if len(digits) > self.n:
            raise PreconditionError("too many digits for F_%d" % self.q)
        return FqElem(self, digits)

    def zero(self):
        return self.elem(())

    def one(self):
        return self.elem((1,))

    def from_int(self, k):
        return self.elem((k % self.p,))

    def generator(self):
        if self.n == 1:
            raise PreconditionError("prime field has no generator %r" % GENERATOR_NAME)
        return self.elem((0, 1))

    def elements(self):
        for code in range(self.q):
            digits, c = [], code
            for _ in range(self.n):
                digits.append(c % self.p)
                c //= self.p
            yield self.elem(tuple(digits))

    def rand(self, rng):
        return self.elem(tuple(rng.randrange(self.p) for _ in range(self.n)))

    # -- arithmetic ----------------------------------------------------
    def _mul(self, a, b):
        prod = _poly_mul(a.digits, b.digits, self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        return self.elem(red)

    def artin_schreier_solve(self, a):
        """Solve u^p - u = a in F_q, or return None.

        The map u -> u^p - u is F_p-linear on F_q, so this is an n x n
        linear solve over F_p; a solution exists iff the absolute trace
        of a vanishes.
        """
        basis = [self.elem(tuple(1 if j == i else 0 for j in range(self.n))) for i in range(self.n)]
        cols = [(b.pth_power() - b).digits for b in basis]
        sol = _solve_fp(cols, a.digits, self.p)
        if sol is None:
            return None
        u = self.zero()
        for coef, b in zip(sol, basis):
            if coef:
                u = u + self.from_int(coef) * b
        return u

    def __eq__(self, other):
        return isinstance(other, Fq) and (other.p, other.n) == (self.p, self.n)

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return "Fq(p=%d, n=%d)" % (self.p, self.n)


def _solve_fp(cols, target, p):
    """Solve sum_j z_j * cols[j] = target over F_p.  cols are digit
    tuples; returns a tuple of z_j or None."""
    ncols = len(cols)
    nrows = len(target)
    rows = [[cols[j][i] % p for j in range(ncols)] + [target[i] % p] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rows[i][ncols]:
            return None
    sol = [0] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][ncols]
    return tuple(sol)


@lru_cache(maxsize=None)
def get_fq(p, n=1):
    """Shared F_q instances; element contexts compare by identity."""
    return Fq(p, n)
