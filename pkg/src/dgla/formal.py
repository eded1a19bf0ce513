"""Truncated formal power series coefficients over exact rationals.

A CoefficientRing fixes the deformation variables t1..tk and a truncation
order N.  Elements live in g tensor m where m is the maximal ideal
(t1, ..., tk) of Q[[t1..tk]] modulo m^{N+1}: every monomial has total degree
at least 1 and at most N, and any product landing above N is identically
zero.  All coefficients are Fraction; nothing is ever rounded.

FormalElement is a vector in one graded piece of an algebra whose entries
are such truncated series, stored sparsely as exponent tuple -> dense
coefficient tuple.
"""

from fractions import Fraction

from .linalg import ZERO

_ONE = Fraction(1)


def mono_degree(mono):
    """Total degree of an exponent tuple."""
    return sum(mono)


def mono_mul(m1, m2):
    """Product of two exponent tuples (degrees add)."""
    return tuple(a + b for a, b in zip(m1, m2))


def mono_key(mono):
    """Graded lexicographic sort key."""
    return (sum(mono), mono)


class CoefficientRing:
    """The quotient m / m^{N+1} of the ideal m = (t1..tk) in Q[[t1..tk]]."""

    __slots__ = ("variables", "order")

    def __init__(self, variables, order):
        variables = tuple(str(v) for v in variables)
        if not variables:
            raise ValueError("need at least one deformation variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not v or not v[0].isalpha() or not v.isalnum():
                raise ValueError("bad variable name %r" % (v,))
        order = int(order)
        if order < 1:
            raise ValueError("truncation order must be at least 1")
        self.variables = variables
        self.order = order

    @classmethod
    def single(cls, order, name="t"):
        return cls((name,), order)

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        if not isinstance(other, CoefficientRing):
            return NotImplemented
        return self.variables == other.variables and self.order == other.order

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return "CoefficientRing(%r, order=%d)" % (list(self.variables), self.order)

    def check_mono(self, mono):
        """Validate an exponent tuple against this ring; return it normalized."""
        mono = tuple(int(e) for e in mono)
        if len(mono) != len(self.variables):
            raise ValueError("exponent tuple has wrong length")
        if any(e < 0 for e in mono):
            raise ValueError("negative exponent")
        d = sum(mono)
        if d == 0:
            raise ValueError("constant terms do not exist here (degree 0 monomial)")
        return mono

    def monomials(self, degree):
        """All exponent tuples of the given total degree, lexicographically."""
        if degree < 0:
            return []
        k = len(self.variables)
        out = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                out.append(prefix + (remaining,))
                return
            for e in range(remaining + 1):
                rec(prefix + (e,), remaining - e, slots - 1)

        rec((), degree, k)
        return out

    def all_monomials(self):
        """Every monomial of the ring, in graded lexicographic order."""
        out = []
        for d in range(1, self.order + 1):
            out.extend(self.monomials(d))
        return out

    def mono_str(self, mono):
        """Render an exponent tuple, e.g. (2, 1) -> "t1^2*t2"."""
        parts = []
        for name, e in zip(self.variables, mono):
            if e == 0:
                continue
            parts.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    def parse_mono(self, text):
        """Inverse of mono_str: "t1^2*t2" -> (2, 1).  Whitespace tolerated."""
        text = text.strip()
        if text == "1":
            raise ValueError("constant terms do not exist here (degree 0 monomial)")
        index = {name: i for i, name in enumerate(self.variables)}
        exps = [0] * len(self.variables)
        for factor in text.split("*"):
            factor = factor.strip()
            if "^" in factor:
                name, _, estr = factor.partition("^")
                name = name.strip()
                e = int(estr)
            else:
                name, e = factor, 1
            if name not in index:
                raise ValueError("unknown variable %r" % (name,))
            if e < 1:
                raise ValueError("bad exponent in %r" % (factor,))
            exps[index[name]] += e
        return self.check_mono(exps)


class FormalElement:
    """A vector in one graded piece, with truncated formal series entries.

    terms maps an exponent tuple to a dense tuple of Fraction coefficients of
    length dim.  Monomials above the ring's truncation order are identically
    zero and are silently dropped; degree zero monomials are rejected.
    """

    __slots__ = ("ring", "degree", "dim", "terms")

    def __init__(self, ring, degree, dim, terms=None):
        if dim < 0:
            raise ValueError("negative dimension")
        self.ring = ring
        self.degree = int(degree)
        self.dim = int(dim)
        clean = {}
        if terms:
            for mono, vec in terms.items():
                mono = ring.check_mono(mono)
                if sum(mono) > ring.order:
                    continue
                vec = tuple(Fraction(c) for c in vec)
                if len(vec) != dim:
                    raise ValueError("coefficient vector has wrong length")
                if any(vec):
                    clean[mono] = vec
        self.terms = clean

    @classmethod
    def zero(cls, ring, degree, dim):
        return cls(ring, degree, dim)

    @classmethod
    def single(cls, ring, degree, dim, mono, index, coeff=_ONE):
        """coeff * e_index * mono, a one-term element."""
        vec = [ZERO] * dim
        vec[index] = Fraction(coeff)
        return cls(ring, degree, dim, {tuple(mono): tuple(vec)})

    def is_zero(self):
        return not self.terms

    def support(self):
        """Monomials with a nonzero coefficient, in graded lex order."""
        return tuple(sorted(self.terms, key=mono_key))

    def coefficient(self, mono):
        """Dense coefficient tuple at one monomial (zeros if absent)."""
        mono = self.ring.check_mono(mono)
        return self.terms.get(mono, tuple([ZERO] * self.dim))

    def min_order(self):
        """Lowest total degree appearing, or None for the zero element."""
        if not self.terms:
            return None
        return min(sum(m) for m in self.terms)

    def _check_compat(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        if self.degree != other.degree:
            raise ValueError("graded degree mismatch")
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        if not isinstance(other, FormalElement):
            return NotImplemented
        self._check_compat(other)
        terms = dict(self.terms)
        for mono, vec in other.terms.items():
            cur = terms.get(mono)
            if cur is None:
                terms[mono] = vec
            else:
                s = tuple(a + b for a, b in zip(cur, vec))
                if any(s):
                    terms[mono] = s
                else:
                    del terms[mono]
        out = FormalElement(self.ring, self.degree, self.dim)
        out.terms = terms
        return out

    def __neg__(self):
        out = FormalElement(self.ring, self.degree, self.dim)
        out.terms = {m: tuple(-c for c in v) for m, v in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        out = FormalElement(self.ring, self.degree, self.dim)
        if c:
            out.terms = {m: tuple(c * x for x in v) for m, v in self.terms.items()}
        return out

    def times_mono(self, mono):
        """Multiply by one monomial, truncating above the ring order."""
        mono = self.ring.check_mono(mono)
        out = FormalElement(self.ring, self.degree, self.dim)
        cap = self.ring.order
        terms = {}
        for m, v in self.terms.items():
            prod = mono_mul(m, mono)
            if sum(prod) <= cap:
                terms[prod] = v
        out.terms = terms
        return out

    def truncate(self, order):
        """Drop every monomial of total degree above order."""
        out = FormalElement(self.ring, self.degree, self.dim)
        out.terms = {m: v for m, v in self.terms.items() if sum(m) <= order}
        return out

    def to_order(self, order):
        """The same element over the ring with truncation order `order`."""
        if order == self.ring.order:
            return self
        ring = CoefficientRing(self.ring.variables, order)
        return FormalElement(ring, self.degree, self.dim, self.terms)

    def homogeneous_part(self, order):
        """Keep only the monomials of total degree exactly order."""
        out = FormalElement(self.ring, self.degree, self.dim)
        out.terms = {m: v for m, v in self.terms.items() if sum(m) == order}
        return out

    def __eq__(self, other):
        if not isinstance(other, FormalElement):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.degree == other.degree
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __repr__(self):
        bits = ", ".join(
            "%s: (%s)"
            % (self.ring.mono_str(m), ", ".join(str(c) for c in self.terms[m]))
            for m in self.support()
        )
        return "FormalElement(deg=%d, {%s})" % (self.degree, bits)
