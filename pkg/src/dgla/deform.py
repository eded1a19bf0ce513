"""Maurer-Cartan solving, the Kuranishi map and its inverse, obstructions,
and the gauge action.

Everything runs over a truncated coefficient ring, so the fixed-point map

    C_x(y) = x - 1/2 h[y, y]

is a contraction in the m-adic filtration and stabilizes exactly within the
truncation order.  Convention (fixed once, used everywhere): the Maurer-
Cartan equation is d tau + 1/2 [tau, tau] = 0, the corrective term carries
-1/2 h, and the Kuranishi map is F(y) = y + 1/2 h[y, y], so that F and the
fixed point tau_x of C_x are exact mutual inverses order by order.

Gauge elements are degree-0 FormalElements (no constant term, which the
element type already enforces); exp(a) acts on a degree-1 element A by

    exp(a) . A = A + sum_{n >= 0} ad_a^n / (n+1)! ([a, A] - da),

a finite sum because ad_a raises the monomial order.
"""

from fractions import Fraction
from math import factorial

from .algebra import HALF
from .formal import CoefficientRing, FormalElement
from .linalg import solve_linear


class MCSolution:
    """A solved Maurer-Cartan initial value problem.

    direction is the initial value x, tau the fixed point of C_x, residual
    the curvature d tau + 1/2 [tau, tau], obstruction its harmonic part, and
    iterations the index of the first fixed iterate (for the order-by-order
    recursion: the truncation order).
    """

    __slots__ = ("direction", "tau", "residual", "obstruction", "iterations")

    def __init__(self, direction, tau, residual, obstruction, iterations):
        self.direction = direction
        self.tau = tau
        self.residual = residual
        self.obstruction = obstruction
        self.iterations = iterations

    def is_flat(self):
        return self.residual.is_zero()

    def kur_member(self):
        return self.obstruction.is_zero()

    def __repr__(self):
        return "MCSolution(tau=%r, flat=%s, iterations=%d)" % (
            self.tau, self.is_flat(), self.iterations)


def contraction_step(L, R, x, y):
    """One application of C_x: x - 1/2 h[y, y]."""
    return x - R.contract(L.apply_bracket(y, y)).scale(HALF)


def _fixed_point(L, R, x):
    """Iterate y_1 = x, y_{n+1} = C_x(y_n) until exact stabilization."""
    y = x
    n = 1
    while True:
        nxt = contraction_step(L, R, x, y)
        if nxt == y:
            return y, n
        y = nxt
        n += 1
        if n > x.ring.order + 1:
            raise RuntimeError("fixed point not reached within the truncation order")


def _check_degree_one(x):
    if x.degree != 1:
        raise ValueError("expected a degree 1 element, got degree %d" % x.degree)


def _normalized(x, order):
    _check_degree_one(x)
    if order is not None:
        x = x.to_order(order)
    return x


def _package(L, R, direction, tau, iterations):
    residual = L.curvature(tau)
    obstruction = R.harmonic_projection(residual)
    return MCSolution(direction, tau, residual, obstruction, iterations)


def solve_mc_ivp(L, R, x, order=None):
    """Solve d tau + 1/2 [tau, tau] = 0 with tau = x - 1/2 h[tau, tau].

    The order-1 part of x must be a cocycle (otherwise no solution with
    tau^1 = x^1 exists).  Obstructed directions do not abort: tau always
    solves the fixed-point equation, and flatness is reported separately
    through residual and obstruction.
    """
    x = _normalized(x, order)
    if not L.apply_differential(x.homogeneous_part(1)).is_zero():
        raise ValueError("the order-1 part of the initial value is not a cocycle")
    tau, iters = _fixed_point(L, R, x)
    return _package(L, R, x, tau, iters)


def solve_by_recursion(L, R, x, order=None):
    """The same solution assembled order by order:

        tau^b = x^b - 1/2 h ( sum_{i+j=b} [tau^i, tau^j] ).

    Cross-checks the fixed-point engine; iterations is the truncation order.
    """
    x = _normalized(x, order)
    if not L.apply_differential(x.homogeneous_part(1)).is_zero():
        raise ValueError("the order-1 part of the initial value is not a cocycle")
    N = x.ring.order
    dim2 = L.dim(2)
    parts = {}
    for b in range(1, N + 1):
        acc = FormalElement.zero(x.ring, 2, dim2)
        for i in range(1, b):
            u = parts.get(i)
            v = parts.get(b - i)
            if u is not None and v is not None:
                acc = acc + L.apply_bracket(u, v)
        tau_b = x.homogeneous_part(b) - R.contract(acc).scale(HALF)
        if not tau_b.is_zero():
            parts[b] = tau_b
    tau = FormalElement.zero(x.ring, 1, L.dim(1))
    for b in sorted(parts):
        tau = tau + parts[b]
    return _package(L, R, x, tau, N)


def universal_solution(L, R, order):
    """Solve the IVP with the universal initial value sum_i eta_i t_i.

    The eta_i are the harmonic degree-1 representatives; the coefficient of
    each degree-b monomial packages the order-b Taylor coefficient of the
    universal solution.  With H^1 = 0 the zero solution is returned (over a
    single placeholder variable).
    """
    H1 = R.splitting.harmonic.get(1)
    k = H1.dim if H1 is not None else 0
    if k == 0:
        ring = CoefficientRing(("t1",), order)
        x = FormalElement.zero(ring, 1, L.dim(1))
    else:
        ring = CoefficientRing(tuple("t%d" % (i + 1) for i in range(k)), order)
        terms = {}
        for i, eta in enumerate(H1.vectors):
            mono = tuple(1 if j == i else 0 for j in range(k))
            terms[mono] = eta
        x = FormalElement(ring, 1, L.dim(1), terms)
    return solve_mc_ivp(L, R, x)


def mc_residual(L, tau):
    """The curvature d tau + 1/2 [tau, tau]; zero iff tau is flat."""
    _check_degree_one(tau)
    return L.curvature(tau)


def kuranishi_map(L, R, y):
    """F(y) = y + 1/2 h[y, y]."""
    _check_degree_one(y)
    return y + R.contract(L.apply_bracket(y, y)).scale(HALF)


def kuranishi_inverse(L, R, x, order=None):
    """The fixed point of y -> x - 1/2 h[y, y]; F(result) = x exactly.

    Identical engine to solve_mc_ivp but without the cocycle precondition.
    """
    x = _normalized(x, order)
    tau, _ = _fixed_point(L, R, x)
    return tau


def obstruction(L, R, x, order=None):
    """The harmonic part of 1/2 [F^{-1}(x), F^{-1}(x)], order by order.

    Lands in the span of the harmonic degree-2 representatives; equals the
    harmonic part of the residual of the solved IVP.
    """
    tau = kuranishi_inverse(L, R, x, order)
    return R.harmonic_projection(L.apply_bracket(tau, tau).scale(HALF))


def kur_membership(L, R, x, order=None):
    """Whether the obstruction of x vanishes identically (mod m^{N+1}).

    Requires the order-1 part of x to lie in the span of the harmonic
    degree-1 representatives.
    """
    x = _normalized(x, order)
    H1 = R.splitting.harmonic.get(1)
    for vec in x.homogeneous_part(1).terms.values():
        if H1 is None or not H1.contains(vec):
            raise ValueError("the order-1 part of x is not harmonic")
    return obstruction(L, R, x).is_zero()


def _check_gauge(a):
    if a.degree != 0:
        raise ValueError("gauge elements have degree 0, got degree %d" % a.degree)


def gauge_act(L, a, A):
    """exp(a) . A for a degree-0 gauge element a and degree-1 element A."""
    _check_gauge(a)
    _check_degree_one(A)
    if a.ring != A.ring:
        raise ValueError("ring mismatch")
    cur = L.apply_bracket(a, A) - L.apply_differential(a)
    out = A
    k = 1
    while not cur.is_zero():
        out = out + cur.scale(Fraction(1, factorial(k)))
        cur = L.apply_bracket(a, cur)
        k += 1
        if k > a.ring.order + 2:
            raise RuntimeError("gauge action series failed to terminate")
    return out


def gauge_equivalent(L, R, A, Aprime, order=None):
    """A degree-0 witness a with exp(a) . A = Aprime, or None.

    Both inputs must be flat.  Solved order by order: at order b the unknown
    a_b enters only through -d(a_b), so each monomial coefficient is one
    linear solve against d: g^0 -> g^1, with free components set to zero.
    Returning None means no witness exists under that zero-free-component
    rule (sound, not complete, when d has a kernel in degree 0).
    """
    A = _normalized(A, order)
    Aprime = _normalized(Aprime, order)
    if A.ring != Aprime.ring:
        raise ValueError("ring mismatch")
    if not mc_residual(L, A).is_zero():
        raise ValueError("gauge_equivalent requires flat inputs: A is not flat")
    if not mc_residual(L, Aprime).is_zero():
        raise ValueError("gauge_equivalent requires flat inputs: Aprime is not flat")
    ring = A.ring
    dim0 = L.dim(0)
    d0 = L.differential.block(0, 1)
    a = FormalElement.zero(ring, 0, dim0)
    for b in range(1, ring.order + 1):
        diff = (gauge_act(L, a, A) - Aprime).homogeneous_part(b)
        if diff.is_zero():
            continue
        terms = {}
        for mono, vec in diff.terms.items():
            sol = solve_linear(d0, vec)
            if sol is None:
                return None
            if any(sol):
                terms[mono] = sol
        if terms:
            a = a + FormalElement(ring, 0, dim0, terms)
    if gauge_act(L, a, A) != Aprime:
        return None
    return a


def gauge_fix(R, A):
    """Project a degree-1 element onto C^1 + H^1 along B^1 (kill the exact part)."""
    _check_degree_one(A)
    return A - R.boundary_projection(A)
