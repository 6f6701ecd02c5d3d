"""The conductor filtration, graded symbols, certified pole lowering,
and reduction to symbol normal forms.

The increasing filtration M_0 c M_1 c ... of the p-torsion Brauer
group of F = k((t)) is generated in level j by forms a dlog b with
v(a) >= -j.  For a representative A dtheta + B dt the least candidate
level is

    pole_order = max(-v(A), -1 - v(B), 0),

and the class sits one level lower exactly when its graded symbol
vanishes: the graded piece at level j is Omega^1_k for p not dividing
j and k/k^p for p | j (the closed-form factor is identically zero at
p-rank 1, where every 1-form is closed).  Each vanishing layer is
removed by explicit coboundary moves which are recorded in a
certificate, so every reported conductor is machine-checkable.

Everything downstream is uniformizer-dependent; the uniformizer is
fixed to the series variable t throughout.
"""

from .errors import PrecisionError, PreconditionError
from .forms import (CERT_INDETERMINATE, VALID, Certificate, Form1, Move,
                    cert_verify, d_F, dlog_F, f_minus_i, frobenius_form)
from .laurent import INF

ZERO = "Zero"
NONZERO = "NonZero"
UNKNOWN = "Unknown"

TYPE_I = "I"
TYPE_II = "II"
TYPE_III = "III"

_KILL_CAP = 200


class GradedSymbol:
    """Image of a class in M_j/M_(j-1), or the tame data at level 0."""

    WILD_PRIME = "WildPrimeToP"
    WILD_DIV = "WildDivisibleByP"
    TAME = "Tame"

    def __init__(self, variant, field, coeff=None, beta=None, as_residue=None, unram=None):
        self.variant = variant
        self.field = field
        self.coeff = coeff            # Omega^1_k class: coeff * dtheta
        self.beta = beta              # k/k^p class representative
        self.as_residue = as_residue  # k/P(k) representative (level 0)
        self.unram = unram            # k-coefficient of the unramified form

    def is_nonzero(self):
        if self.variant == self.WILD_PRIME:
            return not self.coeff.is_zero()
        if self.variant == self.WILD_DIV:
            return self.field.pth_root(self.beta) is None
        raise PreconditionError("tame data carries no graded nonzero test")

    def describe(self):
        if self.variant == self.WILD_PRIME:
            return {"variant": self.variant, "form": "(%s)*dtheta" % self.coeff}
        if self.variant == self.WILD_DIV:
            return {"variant": self.variant, "beta": str(self.beta)}
        return {"variant": self.variant,
                "as_residue": str(self.as_residue),
                "unram": None if self.unram is None else "(%s)*dtheta" % self.unram}


class SwanReport:
    """Conductor, leading symbol, certified reduced representative."""

    def __init__(self, ring, sw, leading_symbol, reduced_rep, certificate,
                 zero_status, zero_reason, as_residue=None, unram=None):
        self.ring = ring
        self.sw = sw
        self.leading_symbol = leading_symbol
        self.reduced_rep = reduced_rep
        self.certificate = certificate
        self.zero_status = zero_status
        self.zero_reason = zero_reason
        self.as_residue = as_residue
        self.unram = unram


class SymbolPresentation:
    """Normal form per the three-shape classification: a single wild
    symbol [a, b) of type II/III, or the tame pair (type-I symbol plus
    an unramified remainder over k)."""

    def __init__(self, ring, sw, wild_symbol=None, tame_symbol=None,
                 unram_remainder=None, certificate=None):
        self.ring = ring
        self.sw = sw
        self.wild_symbol = wild_symbol      # (a: Series, b: Series, type tag)
        self.tame_symbol = tame_symbol      # (a: Series, type TYPE_I); slot-b is t
        self.unram_remainder = unram_remainder  # k element c, meaning c dtheta
        self.certificate = certificate or Certificate()

    def emitted_form(self):
        ring = self.ring
        total = Form1(ring, None, None)
        if self.wild_symbol is not None:
            a, b, _tag = self.wild_symbol
            total = total + dlog_F(b).scale(a)
        if self.tame_symbol is not None:
            a, _tag = self.tame_symbol
            total = total + dlog_F(ring.var_power(1)).scale(a)
        if self.unram_remainder is not None and not self.unram_remainder.is_zero():
            total = total + Form1(ring, ring.from_const(self.unram_remainder), None)
        return total


def pole_order(omega):
    """Least filtration level the coordinate representative exhibits:
    max(-v(A), -1 - v(B), 0)."""
    j = 0
    A, B = omega.A, omega.B
    if A is not None:
        if A.is_zero():
            if A.prec <= 0:
                raise PrecisionError("dtheta component undetermined at negative exponents")
        else:
            j = max(j, -A.valuation())
    if B.is_zero():
        if B.prec < -1:
            raise PrecisionError("dt component undetermined at negative exponents")
    else:
        j = max(j, -1 - B.valuation())
    return j


def graded_symbol(omega, j):
    """The class of omega in M_j/M_(j-1), j > 0 (t-relative)."""
    if j <= 0:
        raise PreconditionError("graded symbol needs a positive level")
    if pole_order(omega) > j:
        raise PreconditionError("representative does not lie in M_%d" % j)
    ring = omega.ring
    k = ring.coeff
    beta = omega.B.coeff_at(-j - 1)
    if j % ring.p == 0:
        return GradedSymbol(GradedSymbol.WILD_DIV, k, beta=beta)
    alpha = omega.A.coeff_at(-j) if omega.A is not None else None
    inv_j = pow(j % ring.p, ring.p - 2, ring.p)
    if k.p_rank == 0:
        # Omega^1_k = 0 for perfect k: the graded piece is trivial.
        coeff = k.zero()
    else:
        coeff = alpha + _times_int(k, k.derivative(beta), inv_j)
    return GradedSymbol(GradedSymbol.WILD_PRIME, k, coeff=coeff)


def _times_int(k, elem, m):
    if hasattr(elem, "scale_int"):
        return elem.scale_int(m)
    return k.from_int(m) * elem


def lowering_moves(omega, j):
    """Coboundary moves clearing level j of a representative whose
    graded symbol at j vanishes.

    p not dividing j: subtracting d(-(1/j) beta t^-j) replaces the
    layer by (alpha + (1/j) d beta) t^-j dtheta, which is zero exactly
    when the graded class is.

    p | j: the dtheta layer alpha splits by Cartier as
    a^p theta^(p-1) + dg; d(g t^-j) removes the exact part (the dt term
    of the differential dies because p | j), (F-I)(a t^(-j/p) dtheta)
    trades the semisimple part for a pole at j/p, and with
    beta = b^p the move (F-I)(b t^(-j/p) dlog t) does the same for the
    dlog t layer.
    """
    ring = omega.ring
    k = ring.coeff
    p = ring.p
    moves = []
    beta = omega.B.coeff_at(-j - 1)
    if j % p != 0:
        inv_j = pow(j % p, p - 2, p)
        c = _times_int(k, -beta, inv_j)
        if not c.is_zero():
            moves.append(Move.exact(ring.monomial(c, -j)))
        return moves
    if omega.A is not None:
        alpha = omega.A.coeff_at(-j)
        a, g = k.cartier_decompose(alpha)
        if not g.is_zero():
            moves.append(Move.exact(ring.monomial(g, -j)))
        if not a.is_zero():
            moves.append(Move.frob(Form1(ring, ring.monomial(a, -j // p), None)))
    b = k.pth_root(beta)
    if b is None:
        raise PreconditionError("graded symbol at level %d does not vanish" % j)
    if not b.is_zero():
        moves.append(Move.frob(Form1(ring, None, ring.monomial(b, -j // p - 1))))
    return moves


def _apply(omega, moves):
    for m in moves:
        omega = omega - m.coboundary()
    return omega


def require_headroom(omega, j):
    horizon = omega.horizon()
    if horizon != INF and horizon <= j + omega.ring.p:
        raise PrecisionError(
            "horizon %s too small for conductor work at pole order %d "
            "(need > pole + p)" % (horizon, j))


def swan_conductor(omega):
    """Kato Swan conductor with a certified reduction.

    Lowers the representative layer by layer while the graded symbol
    vanishes; the first nonvanishing layer is the conductor.  At level
    zero the tame data is split off (t-relative): the dlog t residue as
    a class of k/P(k) and the unramified coefficient A(0), classified
    through the residue-field capability tiers.
    """
    ring = omega.ring
    k = ring.coeff
    j = pole_order(omega)
    require_headroom(omega, j)
    cert = Certificate()
    cur = omega
    while j > 0:
        gs = graded_symbol(cur, j)
        if gs.is_nonzero():
            return SwanReport(ring, j, gs, cur, cert, NONZERO,
                              "wild: graded symbol at level %d is nonzero" % j)
        moves = lowering_moves(cur, j)
        cur = _apply(cur, moves)
        for m in moves:
            cert.append(m)
        new_j = pole_order(cur)
        if new_j >= j:
            raise AssertionError("lowering failed to reduce the pole order")
        j = new_j
    as_residue, unram, status, reason = classify_tame(cur)
    leading = GradedSymbol(GradedSymbol.TAME, k, as_residue=as_residue, unram=unram)
    return SwanReport(ring, 0, leading, cur, cert, status, reason,
                      as_residue=as_residue, unram=unram)


def tame_residue(omega):
    """Residue data of a pole-order-zero representative: the dlog t
    coefficient at level zero as a class of k/P(k) (canonicalized to 0
    when trivial) and the unramified form A(0) dtheta over k."""
    if pole_order(omega) != 0:
        raise PreconditionError("tame residue needs pole order 0")
    as_residue, unram, _status, _reason = classify_tame(omega)
    return as_residue, unram


def classify_tame(omega):
    ring = omega.ring
    k = ring.coeff
    raw = omega.B.coeff_at(-1)
    residue_zero = k.as_class_is_zero(raw)
    as_residue = k.zero() if residue_zero else raw
    unram = omega.A.coeff_at(0) if omega.A is not None else None
    if not residue_zero:
        return as_residue, unram, NONZERO, "tame: dlog t residue nontrivial in k/P(k)"
    if k.p_rank == 0:
        return as_residue, unram, ZERO, "tame residue trivial; Br(F_q)[p] = 0"
    if k.kind == "local":
        inv = unram.coeff_at(-1).trace()
        if inv == 0:
            return as_residue, unram, ZERO, "tame residue trivial; local invariant of the unramified part is 0"
        return as_residue, unram, NONZERO, "unramified part has nonzero local invariant %d" % inv
    reduced, _moves = cartier_reduce_unram(k, unram)
    if reduced.is_zero():
        return as_residue, k.zero(), ZERO, "tame residue trivial; unramified part certified exact"
    return as_residue, unram, UNKNOWN, \
        "unramified class over F_q(x) not decidable (zero test out of scope)"


def cartier_reduce_unram(k, c):
    """Iterate the Cartier operator on c dtheta, collecting certificate
    moves; lands on 0 (class certified zero) or a cycle (undecided).

    Each step writes c dtheta = a^p theta^(p-1) dtheta + dg and trades
    it for a dtheta via one Exact and one Frob move, which preserves
    the Brauer class."""
    moves = []
    seen = set()
    cur = c
    for _ in range(100):
        if cur.is_zero():
            return cur, moves
        key = str(cur)
        if key in seen:
            return cur, moves
        seen.add(key)
        a, g = k.cartier_decompose(cur)
        moves.append(("exact", g))
        moves.append(("frob", a))
        cur = a
    return cur, moves


def kill_positive_part(delta):
    """Certificate move erasing an integral form with no level-0 data.

    With every exponent of the dtheta part >= 1 and of the dlog t part
    >= 1, the Frobenius strictly increases exponents, so the geometric
    sum u = -(delta + F delta + F^2 delta + ...) converges t-adically
    and (F - I)(u) = delta - F^M(delta) with the tail beyond the
    horizon.  Returns (moves, residual).
    """
    ring = delta.ring
    if delta.is_zero():
        return [], delta
    if delta.A is not None and not delta.A.is_zero() and delta.A.valuation() < 1:
        raise PreconditionError("positive-part kill needs dtheta exponents >= 1")
    if not delta.B.is_zero() and delta.B.valuation() < 0:
        raise PreconditionError("positive-part kill needs integral dt part")
    horizon = delta.horizon()
    if horizon == INF:
        horizon = ring.prec
    u = Form1(ring, None, None)
    g = delta.truncate(horizon)
    for _ in range(_KILL_CAP):
        if g.is_zero():
            break
        u = u - g
        g = frobenius_form(g).truncate(horizon)
    else:
        raise PrecisionError("geometric kill did not converge")
    move = Move.frob(u)
    residual = delta - move.coboundary()
    return [move], residual


def _absorb_residue_moves(k, ring, residue):
    """Moves writing residue dlog t as a coboundary when the k/P(k)
    class vanishes: [P(u), t) = (F - I)(u dlog t), with the solution
    assembled pole-layer by pole-layer for the local kind."""
    moves = []
    cur = residue
    if k.kind == "local":
        while not cur.is_zero() and cur.valuation() < 0:
            v = cur.valuation()
            j = -v
            if j % k.p != 0:
                raise PreconditionError("residue class does not vanish")
            c = cur.coeff_at(v)
            u = k.ring.monomial(c.pth_root(), -(j // k.p))
            moves.append(Move.frob(Form1(ring, None, ring.monomial(u, -1))))
            cur = cur - (u.pth_power() - u)
    if cur.is_zero():
        return moves
    u = k.artin_schreier_solve(cur)
    if u is None:
        raise PreconditionError("residue class does not vanish")
    moves.append(Move.frob(Form1(ring, None, ring.monomial(u, -1))))
    return moves


def normal_form(omega):
    """Reduce a class to its symbol normal form with a certificate.

    sw = n > 0 and p | n: type II, [f/t^n, e t) with f integral,
    residue of f outside k^p, and e a unit.  sw = n > 0, p not dividing
    n: type III, [c/t^n, g) with c a unit and g integral with residue
    outside k^p.  sw = 0: a type-I symbol [a, t) carrying the
    Artin-Schreier residue (absent when the residue class is trivial)
    plus an unramified remainder over k (absent when certified zero).

    The refinement absorbs each nonvanishing graded layer of the defect
    into the symbol slots (a-slot shifts for the k/k^p and Omega^1_k
    layers that the slot can carry; unit twists of the b-slot for the
    others) and lowers vanishing layers with certified moves; the final
    integral defect is erased by the geometric Frobenius sum.
    """
    report = swan_conductor(omega)
    ring = omega.ring
    k = ring.coeff
    cert = Certificate(list(report.certificate))
    reduced = report.reduced_rep
    n = report.sw
    if n == 0:
        return _normal_form_tame(omega, report, cert)
    if k.p_rank == 0:
        raise PreconditionError("wild classes cannot occur over a perfect residue field")
    p = ring.p
    theta = k.theta()
    if n % p == 0:
        f_bar = report.leading_symbol.beta
        a_num = ring.from_const(f_bar)          # f, integral; a-slot is f * t^-n
        b_slot = ring.var_power(1)              # e * t with e a unit
        f_prime = k.derivative(f_bar)
        tag = TYPE_II
    else:
        gamma = report.leading_symbol.coeff
        a_num = ring.from_const(gamma * theta)  # c with v(c) = 0; a-slot c * t^-n
        b_slot = ring.from_const(theta)         # g integral, residue outside k^p
        tag = TYPE_III

    def sym_form():
        return dlog_F(b_slot).scale(a_num.shift(-n))

    guard = 0
    while True:
        guard += 1
        if guard > 4 * n + 8:
            raise AssertionError("normal-form refinement failed to terminate")
        delta = reduced - sym_form() - cert_tail(cert, report.certificate, ring)
        j = pole_order(delta)
        if j == 0:
            break
        gs = graded_symbol(delta, j)
        if gs.is_nonzero():
            # absorb the nonvanishing layer into the symbol slots
            if tag == TYPE_II:
                if j % p == 0:
                    # k/k^p layer rides along in the numerator f
                    a_num = a_num + ring.monomial(gs.beta, n - j)
                else:
                    # unit twist of the b-slot shifts the defect's
                    # Omega^1_k layer by +f' h dtheta at level j
                    h = -(gs.coeff * f_prime.inv())
                    b_slot = b_slot * (ring.one() + ring.monomial(h, n - j))
            else:
                if j % p != 0:
                    # Omega^1_k layer: c-shift contributes c^ dlog theta
                    a_num = a_num + ring.monomial(gs.coeff * theta, n - j)
                else:
                    # k/k^p layer: twist contributes n*c*e at the dlog t
                    # coefficient of the level
                    c_bar = a_num.coeff_at(0)
                    e = gs.beta * _times_int(k, c_bar, n % p).inv()
                    b_slot = b_slot * (ring.one() + ring.monomial(e, n - j))
            delta = reduced - sym_form() - cert_tail(cert, report.certificate, ring)
            gs2 = graded_symbol(delta, j)
            if gs2.is_nonzero():
                raise AssertionError("graded absorption failed at level %d" % j)
        moves = lowering_moves(delta, j)
        for m in moves:
            cert.append(m)

    # level 0 of the defect: dlog t residue first, then the
    # unramified dtheta coefficient
    rho = delta.B.coeff_at(-1)
    if not rho.is_zero():
        if tag == TYPE_II:
            a_num = a_num + ring.monomial(rho, n)
        else:
            c_bar = a_num.coeff_at(0)
            e = _times_int(k, rho * c_bar.inv(), pow(n % p, p - 2, p))
            b_slot = b_slot * (ring.one() + ring.monomial(e, n))
        delta = reduced - sym_form() - cert_tail(cert, report.certificate, ring)
    u0 = delta.A.coeff_at(0)
    if not u0.is_zero():
        if tag == TYPE_II:
            # twist leaves the exact remainder -d(f h) at level 0
            f_bar_cur = a_num.coeff_at(0)
            h = -(u0 * k.derivative(f_bar_cur).inv())
            b_slot = b_slot * (ring.one() + ring.monomial(h, n))
        else:
            a_num = a_num + ring.monomial(u0 * theta, n)
        delta = reduced - sym_form() - cert_tail(cert, report.certificate, ring)
        u0b = delta.A.coeff_at(0)
        if not u0b.is_zero():
            g0 = _match_exact_constant(k, u0b)
            cert.append(Move.exact(ring.from_const(g0)))
            delta = reduced - sym_form() - cert_tail(cert, report.certificate, ring)
    rho2 = delta.B.coeff_at(-1)
    if not rho2.is_zero():
        raise AssertionError("residue re-appeared after unramified absorption")
    moves, residual = kill_positive_part(delta)
    for m in moves:
        cert.append(m)
    if not residual.is_zero():
        raise AssertionError("normal-form defect did not vanish")
    _shape_check(k, ring, tag, a_num, b_slot, n)
    presentation = SymbolPresentation(
        ring, n, wild_symbol=(a_num.shift(-n), b_slot, tag), certificate=cert)
    return presentation


def cert_tail(cert, base_cert, ring):
    """Sum of the coboundaries appended after the swan phase (the swan
    moves are already folded into the reduced representative)."""
    acc = Form1(ring, None, None)
    for m in cert.moves[len(base_cert):]:
        acc = acc + m.coboundary()
    return acc


def _match_exact_constant(k, u0b):
    """The leftover level-0 dtheta coefficient after a b-slot twist is
    an exact differential d(g0) over k by construction; recover g0."""
    a, g = k.cartier_decompose(u0b)
    if not a.is_zero():
        raise AssertionError("level-0 leftover is not exact")
    return g


def _shape_check(k, ring, tag, a_num, b_slot, n):
    if tag == TYPE_II:
        if n % ring.p != 0:
            raise AssertionError("type II exponent must be divisible by p")
        if k.pth_root(a_num.coeff_at(0)) is not None:
            raise AssertionError("type II residue lies in k^p")
        if b_slot.valuation() != 1:
            raise AssertionError("type II slot-b must be unit * t")
    else:
        if n % ring.p == 0:
            raise AssertionError("type III exponent must be prime to p")
        if a_num.valuation() != 0:
            raise AssertionError("type III a-slot must be a unit")
        if b_slot.valuation() != 0 or k.pth_root(b_slot.coeff_at(0)) is not None:
            raise AssertionError("type III slot-b residue lies in k^p")


def _normal_form_tame(omega, report, cert):
    ring = omega.ring
    k = ring.coeff
    reduced = report.reduced_rep
    raw_residue = reduced.B.coeff_at(-1)
    tame_symbol = None
    base_len = len(report.certificate)
    if k.as_class_is_zero(raw_residue):
        if not raw_residue.is_zero():
            for m in _absorb_residue_moves(k, ring, raw_residue):
                cert.append(m)
    else:
        tame_symbol = (ring.from_const(raw_residue), TYPE_I)
    unram_remainder = None
    if reduced.A is not None:
        u0 = reduced.A.coeff_at(0)
        if not u0.is_zero():
            if k.kind == "ratfunc":
                final, kmoves = cartier_reduce_unram(k, u0)
                if final.is_zero():
                    for kind, payload in kmoves:
                        if kind == "exact":
                            cert.append(Move.exact(ring.from_const(payload)))
                        else:
                            cert.append(Move.frob(Form1(ring, ring.from_const(payload), None)))
                else:
                    unram_remainder = u0
            else:
                unram_remainder = u0
    presentation = SymbolPresentation(ring, 0, tame_symbol=tame_symbol,
                                      unram_remainder=unram_remainder,
                                      certificate=cert)
    emitted = presentation.emitted_form()
    delta = reduced - emitted - _moves_sum(cert.moves[base_len:], ring)
    moves, residual = kill_positive_part(delta)
    for m in moves:
        cert.append(m)
    if not residual.is_zero():
        raise AssertionError("tame defect did not vanish")
    return presentation


def _moves_sum(moves, ring):
    acc = Form1(ring, None, None)
    for m in moves:
        acc = acc + m.coboundary()
    return acc


def verify_presentation(omega, presentation, floor=None):
    """Certificate check from the input to the emitted symbol sum."""
    kwargs = {} if floor is None else {"floor": floor}
    return cert_verify(omega, presentation.emitted_form(), presentation.certificate, **kwargs)


def split_certificate(presentation):
    """Splitting-field descriptors for a single-symbol presentation,
    with the mechanical degree-p check.

    The radical descriptor y^p = slot-b makes the slot a p-th power
    after pullback, so the p-torsion symbol [a, y^p) = p [a, y) dies;
    the check verifies the p-th power literally.  The residue-side
    descriptor records the degree-p residue extension the a-slot cuts
    out: purely inseparable z^p = f for the wild types, Artin-Schreier
    z^p - z = a for type I.
    """
    ring = presentation.ring
    k = ring.coeff
    descriptors = []
    if presentation.unram_remainder is not None and not presentation.unram_remainder.is_zero():
        if k.kind == "ratfunc":
            raise PreconditionError(
                "split verification deferred: unramified remainder over F_q(x)")
    if presentation.wild_symbol is not None:
        a, b, tag = presentation.wild_symbol
        kind = "totally-ramified" if tag == TYPE_II else "residually-inseparable"
        check = _pullback_check(ring, b)
        descriptors.append({
            "descriptor": "radical",
            "kind": kind,
            "equation": "y^%d = %s" % (ring.p, b),
            "degree": ring.p,
            "check": check,
        })
        f_res = a.shift(presentation.sw).coeff_at(0) if tag == TYPE_II else b.coeff_at(0)
        descriptors.append({
            "descriptor": "residue-extension",
            "kind": "purely-inseparable",
            "equation": "z^%d = %s" % (ring.p, f_res),
            "degree": ring.p,
            "check": "residue outside k^p" if k.pth_root(f_res) is None else "degenerate",
        })
    if presentation.tame_symbol is not None:
        a, _tag = presentation.tame_symbol
        check = _pullback_check(ring, ring.var_power(1))
        descriptors.append({
            "descriptor": "radical",
            "kind": "totally-ramified",
            "equation": "y^%d = t" % ring.p,
            "degree": ring.p,
            "check": check,
        })
        descriptors.append({
            "descriptor": "residue-extension",
            "kind": "artin-schreier",
            "equation": "z^%d - z = %s" % (ring.p, a.coeff_at(0)),
            "degree": ring.p,
            "check": "residue outside P(k)" if not k.as_class_is_zero(a.coeff_at(0))
                     else "degenerate",
        })
    if not descriptors:
        descriptors.append({
            "descriptor": "trivial",
            "kind": "already-split",
            "equation": None,
            "degree": 1,
            "check": "class certified zero" if presentation.unram_remainder is None else "unknown",
        })
    return descriptors


def _pullback_check(ring, b):
    """Check that adjoining y with y^p = b is a genuine degree-p
    radical extension (b is not already a p-th power in F) and that the
    pullback splits the symbol: over F[y]/(y^p - b) the slot becomes
    y^p, so [a, b) = [a, y^p) = p * [a, y) = 0 at p-torsion."""
    if b.pth_root() is not None:
        return "degenerate: slot-b already a p-th power"
    return "slot-b = y^p after pullback; [a, y^p) = p*[a, y) = 0"
