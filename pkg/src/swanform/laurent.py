"""Truncated Laurent series with explicit precision horizons.

One generic implementation serves every series level in the library:
F_q((s)) residue elements, the main field F = k((t)), and the
re-expansions used by the two-dimensional reduction.  A series knows
its coefficients for all exponents below an absolute horizon ``prec``
(an int, or INF for exact values); nothing is assumed beyond it.

Precision propagation follows the valuation bookkeeping: a product of
series with horizons (N1, N2) and valuation lower bounds (v1, v2) is
known below min(N1 + v2, N2 + v1).  Zero-to-precision is distinct from
exact zero, and comparisons are three-valued.
"""

from .errors import ContextMismatchError, PrecisionError, PreconditionError

INF = float("inf")

EQUAL = "Equal"
DISTINCT = "Distinct"
INDETERMINATE = "Indistinguishable"


class SeriesRing:
    """Context for truncated Laurent series over a coefficient field.

    ``coeff`` is any object exposing zero/one/from_int and whose
    elements implement the arithmetic protocol (including is_zero,
    is_exact_zero, pth_power).  ``prec`` is the default horizon used
    when an exact value must be truncated (e.g. inverting 1 - t).
    """

    def __init__(self, coeff, var, prec=40):
        if prec <= 0:
            raise PreconditionError("series horizon must be positive")
        self.coeff = coeff
        self.var = var
        self.prec = prec
        self.p = coeff.p

    def make(self, terms, prec=INF):
        clean = {}
        for e, c in terms.items():
            if e < prec and not c.is_exact_zero():
                clean[e] = c
        return Series(self, clean, prec)

    def zero(self):
        return Series(self, {}, INF)

    def one(self):
        return self.from_const(self.coeff.one())

    def from_const(self, c):
        return self.make({0: c})

    def from_int(self, k):
        return self.from_const(self.coeff.from_int(k))

    def monomial(self, c, e):
        return self.make({e: c})

    def var_power(self, e):
        return self.monomial(self.coeff.one(), e)

    def o_term(self, prec):
        """Zero-to-precision element: no known coefficients below prec."""
        return Series(self, {}, prec)

    def __eq__(self, other):
        return (isinstance(other, SeriesRing) and other.var == self.var
                and other.coeff == self.coeff)

    def __hash__(self):
        return hash((self.var, id(self.coeff)))

    def __repr__(self):
        return "SeriesRing(%r over %r, prec=%r)" % (self.var, self.coeff, self.prec)


class Series:
    """One truncated Laurent series.  Immutable."""

    __slots__ = ("ring", "coeffs", "prec")

    def __init__(self, ring, coeffs, prec):
        self.ring = ring
        self.coeffs = coeffs
        self.prec = prec

    # -- structure -----------------------------------------------------
    def is_exact_zero(self):
        return not self.coeffs and self.prec == INF

    def is_zero(self):
        """True when no known-nonzero coefficient exists (zero to the
        available precision; possibly still indeterminate)."""
        return all(c.is_zero() for c in self.coeffs.values())

    def vlb(self):
        """Valuation lower bound: the true valuation is >= this."""
        if self.coeffs:
            return min(self.coeffs)
        return self.prec

    def valuation(self):
        """Exact valuation of the leading known-nonzero coefficient.

        Raises PrecisionError when an undetermined coefficient sits at
        or below the first known-nonzero one, or when the series is
        zero-to-precision with a finite horizon.
        """
        lead = None
        for e in sorted(self.coeffs):
            if self.coeffs[e].is_zero():
                if lead is None:
                    raise PrecisionError(
                        "valuation undetermined: coefficient of %s^%d unknown"
                        % (self.ring.var, e))
            else:
                lead = e
                break
        if lead is None:
            if self.prec == INF:
                return INF
            raise PrecisionError("valuation of a zero-to-precision series")
        return lead

    def coeff_at(self, e):
        if e >= self.prec:
            raise PrecisionError(
                "coefficient of %s^%d beyond horizon %s" % (self.ring.var, e, self.prec))
        return self.coeffs.get(e, self.ring.coeff.zero())

    def support(self):
        return sorted(self.coeffs)

    def _check(self, other):
        if not isinstance(other, Series) or other.ring != self.ring:
            raise ContextMismatchError("series from different rings")

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        prec = min(self.prec, other.prec)
        terms = dict(self.coeffs)
        for e, c in other.coeffs.items():
            terms[e] = terms[e] + c if e in terms else c
        return self.ring.make(terms, prec)

    def __neg__(self):
        return Series(self.ring, {e: -c for e, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return self.ring.zero()
        prec = min(self.prec + other.vlb(), other.prec + self.vlb())
        terms = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e >= prec:
                    continue
                prod = c1 * c2
                terms[e] = terms[e] + prod if e in terms else prod
        return self.ring.make(terms, prec)

    def scale(self, c):
        """Multiply by a coefficient-field element."""
        if c.is_exact_zero():
            return self.ring.zero()
        return self.ring.make({e: x * c for e, x in self.coeffs.items()}, self.prec)

    def scale_int(self, k):
        return self.scale(self.ring.coeff.from_int(k))

    def shift(self, d):
        """Multiply by var^d."""
        return Series(self.ring, {e + d: c for e, c in self.coeffs.items()},
                      self.prec if self.prec == INF else self.prec + d)

    def inv(self):
        v = self.valuation()
        if v == INF:
            raise ZeroDivisionError("inverse of the zero series")
        if len(self.coeffs) == 1:
            # monomial: exact inverse
            return self.ring.monomial(self.coeffs[v].inv(), -v)
        if self.prec == INF:
            rel = self.ring.prec
        else:
            rel = self.prec - v
        # unit part u with u = sum a_i v^i, a_0 invertible
        a = {e - v: c for e, c in self.coeffs.items()}
        inv0 = a[0].inv()
        b = {0: inv0}
        zero = self.ring.coeff.zero()
        for k in range(1, rel):
            acc = zero
            for i, ai in a.items():
                if 0 < i <= k and (k - i) in b:
                    acc = acc + ai * b[k - i]
            if not acc.is_exact_zero():
                b[k] = -(inv0 * acc)
        out_prec = rel - v if self.prec == INF else self.prec - 2 * v
        return self.ring.make({e - v: c for e, c in b.items()}, out_prec)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pth_power(self):
        """self^p computed coefficientwise: (sum c_e v^e)^p =
        sum c_e^p v^(pe) in characteristic p, with horizon p*prec."""
        p = self.ring.p
        prec = INF if self.prec == INF else p * self.prec
        return self.ring.make({p * e: c.pth_power() for e, c in self.coeffs.items()}, prec)

    def pth_root(self):
        """Return g with g^p = self, or None when no root exists.

        Raises PrecisionError for a zero-to-precision series with a
        finite horizon, where the leading part determines no answer.
        """
        p = self.ring.p
        if self.is_exact_zero():
            return self
        if not self.coeffs and self.prec != INF:
            raise PrecisionError("p-th root of a zero-to-precision series")
        terms = {}
        for e, c in self.coeffs.items():
            if c.is_zero() and not c.is_exact_zero():
                # undetermined coefficient: cannot certify divisibility
                raise PrecisionError("p-th root blocked by undetermined coefficient")
            if e % p != 0:
                return None
            r = c.pth_root() if hasattr(c, "pth_root") else None
            if r is None:
                return None
            terms[e // p] = r
        prec = INF if self.prec == INF else -(-self.prec // p)
        return self.ring.make(terms, prec)

    def derivative(self):
        """Formal d/dvar; the horizon drops by one."""
        terms = {}
        for e, c in self.coeffs.items():
            if e % self.ring.p == 0:
                continue
            terms[e - 1] = c.scale_int(e) if hasattr(c, "scale_int") else self.ring.coeff.from_int(e) * c
        prec = INF if self.prec == INF else self.prec - 1
        return self.ring.make(terms, prec)

    def map_coeffs(self, fn):
        """Apply fn to every known coefficient (e.g. a residue-field
        derivative); the horizon is unchanged."""
        return self.ring.make({e: fn(c) for e, c in self.coeffs.items()}, self.prec)

    def truncate(self, prec):
        if prec >= self.prec:
            return self
        return self.ring.make(dict(self.coeffs), prec)

    # -- comparison ------------------------------------------------------
    def eq3(self, other):
        diff = self - other
        if diff.is_exact_zero():
            return EQUAL
        if diff.is_zero():
            return INDETERMINATE
        return DISTINCT

    def __eq__(self, other):
        return (isinstance(other, Series) and other.ring == self.ring
                and other.prec == self.prec and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ring.var, self.prec, tuple(sorted((e, str(c)) for e, c in self.coeffs.items()))))

    # -- display ----------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        var = self.ring.var
        parts = []
        for e in sorted(self.coeffs):
            c = str(self.coeffs[e])
            if any(op in c for op in "+-/*"):
                c = "(%s)" % c
            if e == 0:
                parts.append(c)
            else:
                ve = var if e == 1 else "%s^%d" % (var, e)
                parts.append(ve if c == "1" else "%s*%s" % (c, ve))
        return " + ".join(parts)

    def __repr__(self):
        horizon = "" if self.prec == INF else " + O(%s^%d)" % (self.ring.var, self.prec)
        return "<%s%s>" % (self, horizon)


def p_basis_decompose_series(f, p_rank):
    """Decompose f in k((t)) over the p-basis {theta, t} (or {t} when
    the residue field is perfect): f = sum f_ij^p theta^i t^j with
    0 <= i, j < p.  Returns a dict keyed by (i, j); components carry the
    horizon ceil((N - j) / p).
    """
    ring = f.ring
    p = ring.p
    k = ring.coeff
    buckets = {}
    for e, c in f.coeffs.items():
        j = e % p
        m = (e - j) // p
        if p_rank == 0:
            r = c.pth_root()
            if r is None:
                raise PreconditionError("coefficient without p-th root in a perfect field")
            buckets.setdefault((0, j), {})[m] = r
        else:
            for i, comp in enumerate(k.p_basis_decompose(c)):
                if not comp.is_exact_zero():
                    buckets.setdefault((i, j), {})[m] = comp
    out = {}
    irange = 1 if p_rank == 0 else p
    for i in range(irange):
        for j in range(p):
            prec = INF if f.prec == INF else -(-(f.prec - j) // p)
            out[(i, j)] = ring.make(buckets.get((i, j), {}), prec)
    return out


def p_basis_reconstruct(table, theta, p_rank):
    """Inverse of p_basis_decompose_series (for tests and callers that
    need the certified identity).  ``theta`` is the coefficient-level
    p-basis element (ignored for p-rank 0)."""
    some = next(iter(table.values()))
    ring = some.ring
    total = ring.zero()
    for (i, j), comp in table.items():
        term = comp.pth_power().shift(j)
        if p_rank > 0 and i > 0:
            term = term.scale(theta ** i)
        total = total + term
    return total
