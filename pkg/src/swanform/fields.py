"""Residue fields and their p-structure.

Three residue fields k are supported, all of p-rank <= 1:

* ``fq``      -- F_q itself (perfect, p-rank 0)
* ``ratfunc`` -- F_q(x) with p-basis {x}
* ``local``   -- truncated F_q((s)) with p-basis {s}

Each kind is wrapped in a small context object exposing the same
surface: exact arithmetic constructors, p-th roots, the p-basis
decomposition f = sum f_i^p theta^i, the formal derivative d/dtheta,
the Cartier decomposition of 1-forms, Artin-Schreier solving, and the
class tests needed by the conductor machinery (membership in k^p and
in the image of x^p - x).
"""

from dataclasses import dataclass

from .errors import PrecisionError, PreconditionError
from .finite import Fq, get_fq, _solve_fp
from .laurent import Series, SeriesRing, p_basis_decompose_series
from .polyring import Poly, RatFunc

KIND_FQ = "fq"
KIND_RATFUNC = "ratfunc"
KIND_LOCAL = "local"
KINDS = (KIND_FQ, KIND_RATFUNC, KIND_LOCAL)

DEFAULT_PREC = 40


@dataclass(frozen=True)
class FieldContext:
    """Configuration for a residue field and the series field over it.

    q = p^n; ``prec`` is the series horizon (used for F = k((t)) always
    and for the coefficients as well when the kind is ``local``).
    """

    p: int
    n: int
    kind: str
    prec: int = DEFAULT_PREC

    def __post_init__(self):
        if self.p not in (2, 3, 5, 7):
            raise PreconditionError("p must be a prime in 2..7")
        if self.n < 1:
            raise PreconditionError("extension degree must be >= 1")
        if self.kind not in KINDS:
            raise PreconditionError("unknown residue kind %r" % (self.kind,))
        if self.prec <= 0:
            raise PreconditionError("precision must be positive")

    @property
    def q(self):
        return self.p ** self.n

    @property
    def p_basis_label(self):
        return {KIND_FQ: None, KIND_RATFUNC: "x", KIND_LOCAL: "s"}[self.kind]


class FiniteResidue:
    """k = F_q: perfect, p-rank 0.  Elements are FqElem."""

    kind = KIND_FQ
    p_rank = 0

    def __init__(self, fq):
        self.fq = fq
        self.p = fq.p
        self.n = fq.n
        self.q = fq.q

    def zero(self):
        return self.fq.zero()

    def one(self):
        return self.fq.one()

    def from_int(self, k):
        return self.fq.from_int(k)

    def theta(self):
        return None

    def rand(self, rng):
        return self.fq.rand(rng)

    def pth_root(self, a):
        return a.pth_root()

    def p_basis_decompose(self, a):
        # p-rank 0: the single component is the p-th root.
        return (a.pth_root(),)

    def derivative(self, a):
        raise PreconditionError("d/dtheta needs a residue field of p-rank 1")

    def cartier_decompose(self, a):
        raise PreconditionError("Cartier decomposition needs p-rank 1")

    def artin_schreier_solve(self, a):
        return self.fq.artin_schreier_solve(a)

    def as_class_is_zero(self, a):
        return a.trace() == 0

    def kp_class_is_zero(self, a):
        return True  # perfect field

    def __eq__(self, other):
        return isinstance(other, FiniteResidue) and other.fq == self.fq

    def __hash__(self):
        return hash((self.kind, self.p, self.n))

    def __repr__(self):
        return "FiniteResidue(F_%d)" % self.q


class RatFuncResidue:
    """k = F_q(x): p-rank 1 with p-basis {x}.  Elements are RatFunc."""

    kind = KIND_RATFUNC
    p_rank = 1

    def __init__(self, fq):
        self.fq = fq
        self.p = fq.p
        self.n = fq.n
        self.q = fq.q

    def zero(self):
        return RatFunc.const(self.fq, self.fq.zero())

    def one(self):
        return RatFunc.const(self.fq, self.fq.one())

    def from_int(self, k):
        return RatFunc.const(self.fq, self.fq.from_int(k))

    def theta(self):
        return RatFunc.x(self.fq)

    def rand(self, rng, max_deg=2):
        def rand_poly(dmax, monic=False):
            deg = rng.randrange(dmax + 1)
            coeffs = [self.fq.rand(rng) for _ in range(deg + 1)]
            if monic:
                coeffs[-1] = self.fq.one()
            elif all(c.is_zero() for c in coeffs):
                coeffs[0] = self.fq.one()
            return Poly(self.fq, tuple(coeffs))

        num = rand_poly(max_deg)
        den = rand_poly(max_deg, monic=True)
        if den.is_zero():
            den = Poly.const(self.fq, self.fq.one())
        return RatFunc(self.fq, num, den)

    def pth_root(self, a):
        return a.pth_root()

    def p_basis_decompose(self, a):
        return a.p_basis_decompose()

    def derivative(self, a):
        return a.derivative()

    def cartier_decompose(self, a):
        return _cartier_via_p_basis(self, a)

    def artin_schreier_solve(self, a):
        return _artin_schreier_ratfunc(self, a)

    def as_class_is_zero(self, a):
        return self.artin_schreier_solve(a) is not None

    def kp_class_is_zero(self, a):
        return a.pth_root() is not None

    def __eq__(self, other):
        return isinstance(other, RatFuncResidue) and other.fq == self.fq

    def __hash__(self):
        return hash((self.kind, self.p, self.n))

    def __repr__(self):
        return "RatFuncResidue(F_%d(x))" % self.q


class LocalResidue:
    """k = F_q((s)) truncated: p-rank 1 with p-basis {s}.

    Elements are Series over F_q; precision questions surface as
    PrecisionError from the series layer.
    """

    kind = KIND_LOCAL
    p_rank = 1

    def __init__(self, fq, prec=DEFAULT_PREC, var="s"):
        self.fq = fq
        self.p = fq.p
        self.n = fq.n
        self.q = fq.q
        self.ring = SeriesRing(fq, var, prec)

    def zero(self):
        return self.ring.zero()

    def one(self):
        return self.ring.one()

    def from_int(self, k):
        return self.ring.from_int(k)

    def theta(self):
        return self.ring.var_power(1)

    def rand(self, rng, max_terms=3, min_exp=-3, max_exp=4):
        terms = {}
        for _ in range(rng.randrange(max_terms + 1)):
            terms[rng.randrange(min_exp, max_exp + 1)] = self.fq.rand(rng)
        return self.ring.make(terms, self.ring.prec)

    def pth_root(self, a):
        return a.pth_root()

    def p_basis_decompose(self, a):
        table = p_basis_decompose_series(a, p_rank=0)
        return tuple(table[(0, j)] for j in range(self.p))

    def derivative(self, a):
        return a.derivative()

    def cartier_decompose(self, a):
        return _cartier_via_p_basis(self, a)

    def artin_schreier_solve(self, a):
        """Hensel lifting from the constant term; the input must be
        integral (u^p - u preserves the valuation ring)."""
        if a.is_exact_zero():
            return self.zero()
        if a.vlb() < 0:
            if any(e < 0 and not c.is_zero() for e, c in a.coeffs.items()):
                raise PreconditionError("unsolvable-integrally: pole present")
            raise PrecisionError("integrality of the input is undetermined")
        c0 = a.coeff_at(0)
        u0 = self.fq.artin_schreier_solve(c0)
        if u0 is None:
            return None
        u = self.ring.from_const(u0)
        for _ in range(64):
            g = u.pth_power() - u - a
            if g.is_zero():
                return u
            u = u + g
        raise PrecisionError("Hensel iteration failed to settle")

    def as_class_is_zero(self, a):
        """Triviality of a in k / (x^p - x)(k), poles included: p-divisible
        pole layers are peeled by explicit Artin-Schreier shifts, a pole
        layer of order prime to p is an obstruction, and the integral
        remainder is decided by the constant-term trace."""
        a = _reduce_as_pole(self, a)
        if a is None:
            return False
        if a.is_zero():
            return True
        return a.coeff_at(0).trace() == 0

    def kp_class_is_zero(self, a):
        return a.pth_root() is not None

    def schmid_invariant(self, b, c):
        """Local invariant Tr(res_s(b dlog c)) in Z/p of the symbol [b, c)."""
        if c.is_zero():
            raise PreconditionError("dlog of a zero element")
        form = b * c.derivative() * c.inv()
        return form.coeff_at(-1).trace()

    def __eq__(self, other):
        return (isinstance(other, LocalResidue) and other.fq == self.fq
                and other.ring.var == self.ring.var)

    def __hash__(self):
        return hash((self.kind, self.p, self.n, self.ring.var))

    def __repr__(self):
        return "LocalResidue(F_%d((%s)))" % (self.q, self.ring.var)


def _reduce_as_pole(k, a):
    """Peel p-divisible pole layers off a mod (x^p - x)(k); returns the
    integral remainder, or None when a pole layer prime to p remains
    (nontrivial class)."""
    while True:
        if a.is_zero():
            return a
        v = a.valuation()
        if v >= 0:
            return a
        j = -v
        if j % k.p != 0:
            return None
        c = a.coeff_at(v)
        root = c.pth_root()
        shift = k.ring.monomial(c, v) - k.ring.monomial(root, -(j // k.p))
        a = a - shift


def _cartier_via_p_basis(k, c):
    """Write c dtheta = a^p theta^(p-1) dtheta + dg over a p-rank-1 k.

    Termwise: the p-basis component at theta^(p-1) is the Cartier image
    a; every lower component antidifferentiates exactly."""
    comps = k.p_basis_decompose(c)
    p = k.p
    theta = k.theta()
    a = comps[p - 1]
    g = k.zero()
    for i in range(p - 1):
        ci = comps[i]
        if ci.is_exact_zero():
            continue
        inv = pow(i + 1, p - 2, p)
        term = ci.pth_power() * theta ** (i + 1)
        g = g + _scale_int(k, term, inv)
    return a, g


def _scale_int(k, elem, m):
    if hasattr(elem, "scale_int"):
        return elem.scale_int(m)
    return k.from_int(m) * elem


def _artin_schreier_ratfunc(k, a):
    """Bounded-degree linear solve for u^p - u = a over F_q(x).

    Any solution u = P/Q in lowest terms forces Q^p = den(a) (monic),
    and deg P <= max(ceil(deg num(a) / p), deg Q).  The map
    P -> P^p - P Q^(p-1) is F_p-linear in the coefficients of P, so a
    Gaussian solve over F_p decides existence.  The affine solution set
    is u + F_p; the representative of minimal degree (then minimal
    digit encoding) is returned.
    """
    fq = k.fq
    p = fq.p
    if a.is_zero():
        return k.zero()
    Q = a.den.pth_root()
    if Q is None:
        return None
    A = a.num
    D = max(-(-max(A.degree(), 0) // p), Q.degree())
    Qp1 = Q ** (p - 1)

    unknowns = []  # (coeff index j, basis digit index d)
    cols = []
    rows_len = max(p * D, D + (p - 1) * Q.degree(), A.degree()) + 1
    basis = [fq.elem(tuple(1 if t == d else 0 for t in range(fq.n))) for d in range(fq.n)]
    for j in range(D + 1):
        xj = Poly(fq, tuple([fq.zero()] * j + [fq.one()]))
        for d in range(fq.n):
            base_poly = xj.scale(basis[d])
            image = base_poly ** p - base_poly * Qp1
            vec = []
            for r in range(rows_len):
                vec.extend(image.coeff(r).digits)
            cols.append(tuple(vec))
            unknowns.append((j, d))
    target = []
    for r in range(rows_len):
        target.extend(A.coeff(r).digits)
    sol = _solve_fp(cols, tuple(target), p)
    if sol is None:
        return None
    coeffs = [fq.zero() for _ in range(D + 1)]
    for z, (j, d) in zip(sol, unknowns):
        if z:
            coeffs[j] = coeffs[j] + fq.from_int(z) * basis[d]
    P = Poly(fq, tuple(coeffs))
    u = RatFunc(fq, P, Q)
    # normalize across the solution set u + F_p
    best = None
    for c in range(p):
        cand = u - k.from_int(c)
        key = (cand.num.degree(), tuple(d for co in cand.num.coeffs for d in co.digits))
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def make_residue_field(ctx):
    fq = get_fq(ctx.p, ctx.n)
    if ctx.kind == KIND_FQ:
        return FiniteResidue(fq)
    if ctx.kind == KIND_RATFUNC:
        return RatFuncResidue(fq)
    return LocalResidue(fq, prec=ctx.prec)


def make_main_field(ctx):
    """The series field F = k((t)) for a context."""
    return SeriesRing(make_residue_field(ctx), "t", ctx.prec)
