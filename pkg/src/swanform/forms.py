"""Differential 1-forms over F = k((t)) and coboundary certificates.

A form is stored in the coordinate basis (dtheta, dt): A dtheta + B dt
with A, B truncated Laurent series over the residue field k.  When k is
perfect (p-rank 0) the dtheta component is absent.  The coordinate
representation is unique, which makes equality-to-precision O(1) and
keeps certificate verification mechanical: a Certificate is a list of
moves, each an exact differential d(v) or a Frobenius-minus-identity
image (F - I)(u), and verification recomputes the telescoping sum from
scratch rather than trusting the rewriting engine's bookkeeping.
"""

from .errors import ContextMismatchError, PreconditionError
from .laurent import DISTINCT, EQUAL, INDETERMINATE, INF, Series

VALID = "Valid"
INVALID = "Invalid"
CERT_INDETERMINATE = "Indeterminate"

#: forms whose difference is zero to at least this many known
#: coefficients count as certified; thinner agreement is reported as
#: indeterminate rather than valid.
CONFIDENCE_FLOOR = 5


class Form1:
    """Rank-<=2 differential form A dtheta + B dt over k((t))."""

    __slots__ = ("ring", "A", "B")

    def __init__(self, ring, A, B):
        k = ring.coeff
        if k.p_rank == 0:
            if A is not None and not A.is_exact_zero():
                raise PreconditionError("no dtheta component over a perfect residue field")
            A = None
        else:
            A = ring.zero() if A is None else A
        self.ring = ring
        self.A = A
        self.B = ring.zero() if B is None else B

    def _check(self, other):
        if not isinstance(other, Form1) or other.ring != self.ring:
            raise ContextMismatchError("forms over different fields")

    def __add__(self, other):
        self._check(other)
        A = None if self.A is None else self.A + other.A
        return Form1(self.ring, A, self.B + other.B)

    def __neg__(self):
        return Form1(self.ring, None if self.A is None else -self.A, -self.B)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f):
        """Multiply by a series f in F."""
        return Form1(self.ring, None if self.A is None else self.A * f, self.B * f)

    def is_zero(self):
        return (self.A is None or self.A.is_zero()) and self.B.is_zero()

    def is_exact_zero(self):
        return (self.A is None or self.A.is_exact_zero()) and self.B.is_exact_zero()

    def truncate(self, prec):
        return Form1(self.ring, None if self.A is None else self.A.truncate(prec),
                     self.B.truncate(prec))

    def horizon(self):
        precs = [self.B.prec]
        if self.A is not None:
            precs.append(self.A.prec)
        return min(precs)

    def eq3(self, other):
        diff = self - other
        if diff.is_exact_zero():
            return EQUAL
        if diff.is_zero():
            return INDETERMINATE
        return DISTINCT

    def __str__(self):
        parts = []
        if self.A is not None and not self.A.is_zero():
            parts.append("(%s)*d%s" % (self.A, _theta_name(self.ring.coeff)))
        if not self.B.is_zero():
            parts.append("(%s)*d%s" % (self.B, self.ring.var))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "Form1<%s>" % self


def _theta_name(k):
    if k.kind == "ratfunc":
        return "x"
    if k.kind == "local":
        return k.ring.var
    return "?"


def d_F(f):
    """Total differential df = (df/dtheta) dtheta + (df/dt) dt."""
    ring = f.ring
    k = ring.coeff
    B = f.derivative()
    if k.p_rank == 0:
        return Form1(ring, None, B)
    A = f.map_coeffs(k.derivative)
    return Form1(ring, A, B)


def dlog_F(u):
    """dlog u = du / u for u nonzero to precision."""
    return d_F(u).scale(u.inv())


def frobenius_form(omega):
    """The Frobenius of the r = 1 presentation in p-basis coordinates:
    F(A dtheta + B dt) = A^p theta^(p-1) dtheta + B^p t^(p-1) dt.

    It fixes dlog theta and dlog t and satisfies
    F(a dlog b) = a^p dlog b modulo exact forms on decomposables.
    """
    ring = omega.ring
    k = ring.coeff
    p = ring.p
    B = omega.B.pth_power().shift(p - 1)
    if k.p_rank == 0:
        return Form1(ring, None, B)
    A = omega.A.pth_power().scale(k.theta() ** (p - 1))
    return Form1(ring, A, B)


def f_minus_i(omega):
    """(F - I)(omega); its image is a coboundary (the zero class)."""
    return frobenius_form(omega) - omega


class Move:
    """One certificate move."""

    __slots__ = ("kind", "payload")

    EXACT = "Exact"
    FROB = "Frob"

    def __init__(self, kind, payload):
        self.kind = kind
        self.payload = payload

    @classmethod
    def exact(cls, v):
        if not isinstance(v, Series):
            raise PreconditionError("Exact move wants a series")
        return cls(cls.EXACT, v)

    @classmethod
    def frob(cls, u):
        if not isinstance(u, Form1):
            raise PreconditionError("Frob move wants a form")
        return cls(cls.FROB, u)

    def coboundary(self):
        if self.kind == self.EXACT:
            return d_F(self.payload)
        return f_minus_i(self.payload)

    def __repr__(self):
        return "%s(%s)" % (self.kind, self.payload)


class Certificate:
    """Ordered list of coboundary moves witnessing that two form
    representatives define the same Brauer class:
    omega_in - omega_out = sum d(v) + sum (F - I)(u)."""

    __slots__ = ("moves",)

    def __init__(self, moves=()):
        self.moves = list(moves)

    def append(self, move):
        self.moves.append(move)

    def extend(self, other):
        self.moves.extend(other.moves)

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def total(self, ring):
        acc = Form1(ring, None, None)
        for m in self.moves:
            acc = acc + m.coboundary()
        return acc

    def describe(self):
        return [{"move": m.kind, "value": str(m.payload)} for m in self.moves]


def cert_verify(omega_in, omega_out, cert, floor=CONFIDENCE_FLOOR):
    """Three-valued certificate check.

    Valid when omega_in - omega_out - sum(moves) is exactly zero, or is
    zero-to-precision with the agreement horizon at least ``floor``;
    Indeterminate when the difference is zero-to-precision but the
    horizon is shallower than the floor; Invalid on any known nonzero
    coefficient.
    """
    omega_in._check(omega_out)
    diff = omega_in - omega_out - cert.total(omega_in.ring)
    if diff.is_exact_zero():
        return VALID
    if not diff.is_zero():
        return INVALID
    if diff.horizon() >= floor:
        return VALID
    return CERT_INDETERMINATE
