"""Finite-dimensional differential graded Lie algebras over the rationals.

A DGLA is presented by structure constants on a finite ordered list of graded
generators: a differential d of degree +1 and a bracket of degree 0, given as
  d(g_i)      = sum_j  c_ij g_j
  [g_i, g_j]  = sum_k  c^k_ij g_k .
validate_dgla checks every axiom (degrees, d squared, graded antisymmetry,
graded Jacobi, graded Leibniz) and reports violations with witnessing
generators instead of raising.  apply_differential, apply_bracket and
curvature extend the structure constants to FormalElements, with all series
arithmetic truncated at the ring order through the kernel backend.

Sign conventions (cohomological grading, d of degree +1):
  [x, y] = -(-1)^{|x||y|} [y, x]
  (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
  d[x, y] = [dx, y] + (-1)^{|x|} [x, dy]
"""

from fractions import Fraction

from .backend import bracket_convolve
from .formal import FormalElement
from .graded import GradedLinearMap
from .linalg import Matrix, ZERO

HALF = Fraction(1, 2)


def koszul_sign(p, q):
    """(-1)^{pq} for integer degrees p, q."""
    return -1 if (p % 2) and (q % 2) else 1


def antisymmetric_closure(generators, pairs):
    """Extend a partial bracket table by graded antisymmetry.

    generators is the ordered (name, degree) list; pairs maps (name, name) to
    an iterable of (name, coeff).  For every supplied pair (x, y) whose
    reverse is absent, [y, x] = -(-1)^{|x||y|}[x, y] is added.  If both orders
    are supplied and disagree with the sign rule, ValueError is raised;
    diagonal pairs are left for validate_dgla to judge.
    """
    degree = {name: int(d) for name, d in generators}
    full = {}
    for (x, y), ents in pairs.items():
        full[(x, y)] = tuple((g, Fraction(c)) for g, c in ents)
    for (x, y), ents in list(full.items()):
        if x == y:
            continue
        if x not in degree or y not in degree:
            raise ValueError("bracket references unknown generator in (%r, %r)" % (x, y))
        s = -koszul_sign(degree[x], degree[y])
        flipped = {}
        for g, c in ents:
            flipped[g] = flipped.get(g, ZERO) + s * c
        flipped = {g: c for g, c in flipped.items() if c}
        if (y, x) in full:
            given = {}
            for g, c in full[(y, x)]:
                given[g] = given.get(g, ZERO) + c
            given = {g: c for g, c in given.items() if c}
            if given != flipped:
                raise ValueError(
                    "bracket pair (%s, %s) inconsistent with antisymmetry of (%s, %s)"
                    % (y, x, x, y)
                )
        else:
            full[(y, x)] = tuple(sorted(flipped.items()))
    return full


class ValidationIssue:
    """One violated axiom with the witnessing generator tuple."""

    __slots__ = ("axiom", "witness", "detail")

    def __init__(self, axiom, witness, detail):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.detail = detail

    def to_data(self):
        return {"axiom": self.axiom, "witness": list(self.witness), "detail": self.detail}

    def __repr__(self):
        return "ValidationIssue(%s at (%s): %s)" % (self.axiom, ", ".join(self.witness), self.detail)


class ValidationReport:
    """Outcome of validate_dgla: empty issue list means every axiom holds."""

    __slots__ = ("name", "issues")

    def __init__(self, name, issues):
        self.name = name
        self.issues = tuple(issues)

    @property
    def ok(self):
        return not self.issues

    def to_data(self):
        return {"valid": self.ok, "issues": [i.to_data() for i in self.issues]}

    def __str__(self):
        if self.ok:
            return "%s: all DGLA axioms hold" % self.name
        lines = ["%s: %d axiom violation(s)" % (self.name, len(self.issues))]
        for i in self.issues:
            lines.append("  %s at (%s): %s" % (i.axiom, ", ".join(i.witness), i.detail))
        return "\n".join(lines)


class DGLA:
    """A DGLA given by structure constants on named graded generators.

    generators: ordered iterable of (name, degree).
    d: map name -> iterable of (name, coeff); omitted generators map to 0.
    bracket: map (name, name) -> iterable of (name, coeff) for ordered pairs;
        omitted pairs are 0.  Use antisymmetric_closure to fill in reversed
        pairs from a minimal table.
    """

    def __init__(self, generators, d=None, bracket=None, name="dgla"):
        self.name = str(name)
        gens = []
        index = {}
        for gname, deg in generators:
            gname = str(gname)
            if not gname:
                raise ValueError("empty generator name")
            if gname in index:
                raise ValueError("duplicate generator %r" % gname)
            index[gname] = len(gens)
            gens.append((gname, int(deg)))
        self.generators = tuple(gens)
        self._index = index

        by_degree = {}
        for gi, (_, deg) in enumerate(self.generators):
            by_degree.setdefault(deg, []).append(gi)
        self._by_degree = {deg: tuple(v) for deg, v in by_degree.items()}
        self._pos = {}
        for deg, idxs in self._by_degree.items():
            for pos, gi in enumerate(idxs):
                self._pos[gi] = (deg, pos)
        self.dims = {deg: len(idxs) for deg, idxs in self._by_degree.items()}
        self.degrees = tuple(sorted(self.dims))

        self._d = {}
        for gname, ents in (d or {}).items():
            gi = self._lookup(gname, "differential")
            combo = {}
            for tname, c in ents:
                gj = self._lookup(tname, "differential")
                c = Fraction(c)
                if c:
                    combo[gj] = combo.get(gj, ZERO) + c
            combo = {k: v for k, v in combo.items() if v}
            if combo:
                self._d[gi] = combo

        self._bracket = {}
        for (xname, yname), ents in (bracket or {}).items():
            gi = self._lookup(xname, "bracket")
            gj = self._lookup(yname, "bracket")
            combo = {}
            for tname, c in ents:
                gk = self._lookup(tname, "bracket")
                c = Fraction(c)
                if c:
                    combo[gk] = combo.get(gk, ZERO) + c
            combo = {k: v for k, v in combo.items() if v}
            if combo:
                self._bracket[(gi, gj)] = combo

        self._diff = None
        self._tables = {}

    def _lookup(self, name, where):
        gi = self._index.get(str(name))
        if gi is None:
            raise ValueError("unknown generator %r in %s" % (name, where))
        return gi

    # introspection

    @property
    def total_dim(self):
        return len(self.generators)

    def dim(self, degree):
        return self.dims.get(degree, 0)

    def degree_of(self, name):
        return self.generators[self._lookup(name, "lookup")][1]

    def basis_names(self, degree):
        return tuple(self.generators[gi][0] for gi in self._by_degree.get(degree, ()))

    def basis_position(self, name):
        """(degree, position within that degree) of a generator."""
        return self._pos[self._lookup(name, "lookup")]

    def differential_of(self, name):
        """d(generator) as a tuple of (name, coeff), in declaration order."""
        combo = self._d.get(self._lookup(name, "lookup"), {})
        return tuple((self.generators[gj][0], c) for gj, c in sorted(combo.items()))

    def bracket_of(self, xname, yname):
        """[x, y] as a tuple of (name, coeff), in declaration order."""
        key = (self._lookup(xname, "lookup"), self._lookup(yname, "lookup"))
        combo = self._bracket.get(key, {})
        return tuple((self.generators[gk][0], c) for gk, c in sorted(combo.items()))

    def bracket_pairs(self):
        """Ordered generator-name pairs with a nonzero bracket."""
        return tuple(
            (self.generators[i][0], self.generators[j][0])
            for i, j in sorted(self._bracket)
        )

    def __eq__(self, other):
        """Structural equality: same generators and structure constants."""
        if not isinstance(other, DGLA):
            return NotImplemented
        return (
            self.generators == other.generators
            and self._d == other._d
            and self._bracket == other._bracket
        )

    def __repr__(self):
        dims = ", ".join("g^%d:%d" % (d, self.dims[d]) for d in self.degrees)
        return "DGLA(%s; %s)" % (self.name, dims or "zero")

    # structure maps

    @property
    def differential(self):
        """d as a GradedLinearMap of degree +1 (raises if degrees are off)."""
        if self._diff is None:
            entries = {}
            for gi, combo in self._d.items():
                sdeg, spos = self._pos[gi]
                for gj, c in combo.items():
                    tdeg, tpos = self._pos[gj]
                    if tdeg != sdeg + 1:
                        raise ValueError(
                            "differential of %s is not homogeneous of degree +1; "
                            "run validate_dgla" % self.generators[gi][0]
                        )
                    entries.setdefault((sdeg, tdeg), {})[(tpos, spos)] = c
            blocks = {
                key: Matrix(self.dims[key[1]], self.dims[key[0]], ents)
                for key, ents in entries.items()
            }
            self._diff = GradedLinearMap(self.dims, self.dims, blocks)
        return self._diff

    def bracket_table(self, p, q):
        """Structure table for g^p x g^q -> g^{p+q} in degree-local positions."""
        key = (p, q)
        table = self._tables.get(key)
        if table is None:
            table = {}
            for (gi, gj), combo in self._bracket.items():
                if self._pos[gi][0] != p or self._pos[gj][0] != q:
                    continue
                ipos = self._pos[gi][1]
                jpos = self._pos[gj][1]
                ents = []
                for gk, c in sorted(combo.items()):
                    tdeg, tpos = self._pos[gk]
                    if tdeg != p + q:
                        raise ValueError(
                            "bracket [%s, %s] does not preserve total degree; "
                            "run validate_dgla"
                            % (self.generators[gi][0], self.generators[gj][0])
                        )
                    ents.append((tpos, c))
                if ents:
                    table[(ipos, jpos)] = tuple(ents)
            self._tables[key] = table
        return table

    # action on formal elements

    def zero_element(self, ring, degree):
        return FormalElement.zero(ring, degree, self.dim(degree))

    def generator_element(self, ring, name, mono=None, coeff=1):
        """coeff * (generator) * mono as a FormalElement.

        mono defaults to the single variable of a one-variable ring.
        """
        deg, pos = self.basis_position(name)
        if mono is None:
            if ring.nvars != 1:
                raise ValueError("mono is required for multivariate rings")
            mono = (1,)
        return FormalElement.single(ring, deg, self.dim(deg), mono, pos, coeff)

    def apply_differential(self, v):
        """d extended coefficient-wise to a FormalElement."""
        if self.dim(v.degree) != v.dim:
            raise ValueError("element dimension does not match g^%d" % v.degree)
        return self.differential.apply_element(v, 1)

    def apply_bracket(self, u, v):
        """[u, v], the bilinear extension over monomials, truncated."""
        if u.ring != v.ring:
            raise ValueError("ring mismatch")
        if self.dim(u.degree) != u.dim or self.dim(v.degree) != v.dim:
            raise ValueError("element dimension does not match its degree")
        out_deg = u.degree + v.degree
        out_dim = self.dim(out_deg)
        out = FormalElement.zero(u.ring, out_deg, out_dim)
        if out_dim and u.terms and v.terms:
            table = self.bracket_table(u.degree, v.degree)
            if table:
                out.terms = bracket_convolve(
                    u.terms, v.terms, table, u.ring.order, out_dim
                )
        return out

    def curvature(self, A):
        """dA + 1/2 [A, A] for a degree 1 element."""
        if A.degree != 1:
            raise ValueError("curvature is defined on degree 1 elements")
        return self.apply_differential(A) + self.apply_bracket(A, A).scale(HALF)

    def bracket_vectors(self, p, u, q, v):
        """[u, v] for plain coefficient vectors u in g^p, v in g^q."""
        out_dim = self.dim(p + q)
        out = [ZERO] * out_dim
        if out_dim:
            for (i, j), ents in self.bracket_table(p, q).items():
                ci = u[i]
                cj = v[j]
                if ci and cj:
                    f = ci * cj
                    for k, c in ents:
                        out[k] += f * c
        return tuple(out)

    # axiom checking (combination arithmetic over global generator indices)

    def _d_combo(self, combo):
        out = {}
        for gi, c in combo.items():
            for gj, v in self._d.get(gi, {}).items():
                out[gj] = out.get(gj, ZERO) + c * v
        return {k: v for k, v in out.items() if v}

    def _bracket_combo(self, a, b):
        out = {}
        for gi, ca in a.items():
            for gj, cb in b.items():
                ents = self._bracket.get((gi, gj))
                if not ents:
                    continue
                f = ca * cb
                for gk, v in ents.items():
                    out[gk] = out.get(gk, ZERO) + f * v
        return {k: v for k, v in out.items() if v}

    def _combo_str(self, combo):
        if not combo:
            return "0"
        parts = []
        for gi in sorted(combo):
            c = combo[gi]
            nm = self.generators[gi][0]
            if c == 1:
                parts.append(nm)
            elif c == -1:
                parts.append("-%s" % nm)
            else:
                parts.append("%s*%s" % (c, nm))
        return " + ".join(parts).replace("+ -", "- ")


def _scale_combo(c, combo):
    return {k: c * v for k, v in combo.items()}


def _add_combos(*combos):
    out = {}
    for combo in combos:
        for k, v in combo.items():
            out[k] = out.get(k, ZERO) + v
    return {k: v for k, v in out.items() if v}


def validate_dgla(L):
    """Check every DGLA axiom on generators; violations become report issues."""
    issues = []
    gens = L.generators
    names = [g[0] for g in gens]
    degs = [g[1] for g in gens]

    for gi, combo in sorted(L._d.items()):
        for gj in sorted(combo):
            if degs[gj] != degs[gi] + 1:
                issues.append(ValidationIssue(
                    "differential-degree",
                    (names[gi],),
                    "d(%s) hits %s of degree %d, expected degree %d"
                    % (names[gi], names[gj], degs[gj], degs[gi] + 1),
                ))

    for gi in range(len(gens)):
        dd = L._d_combo(L._d_combo({gi: Fraction(1)}))
        if dd:
            issues.append(ValidationIssue(
                "differential-squared",
                (names[gi],),
                "d(d(%s)) = %s, expected 0" % (names[gi], L._combo_str(dd)),
            ))

    for (gi, gj), combo in sorted(L._bracket.items()):
        want = degs[gi] + degs[gj]
        for gk in sorted(combo):
            if degs[gk] != want:
                issues.append(ValidationIssue(
                    "bracket-degree",
                    (names[gi], names[gj]),
                    "bracket degree violation at (%s, %s): hits %s of degree %d, "
                    "expected degree %d" % (names[gi], names[gj], names[gk], degs[gk], want),
                ))

    n = len(gens)
    for gi in range(n):
        for gj in range(gi, n):
            lhs = L._bracket_combo({gi: Fraction(1)}, {gj: Fraction(1)})
            rhs = _scale_combo(
                -koszul_sign(degs[gi], degs[gj]),
                L._bracket_combo({gj: Fraction(1)}, {gi: Fraction(1)}),
            )
            if lhs != rhs:
                issues.append(ValidationIssue(
                    "antisymmetry",
                    (names[gi], names[gj]),
                    "[%s, %s] = %s but -(-1)^{|x||y|}[%s, %s] = %s"
                    % (names[gi], names[gj], L._combo_str(lhs),
                       names[gj], names[gi], L._combo_str(rhs)),
                ))

    for gi in range(n):
        for gj in range(n):
            x = {gi: Fraction(1)}
            y = {gj: Fraction(1)}
            lhs = L._d_combo(L._bracket_combo(x, y))
            rhs = _add_combos(
                L._bracket_combo(L._d_combo(x), y),
                _scale_combo(1 if degs[gi] % 2 == 0 else -1,
                             L._bracket_combo(x, L._d_combo(y))),
            )
            if lhs != rhs:
                issues.append(ValidationIssue(
                    "leibniz",
                    (names[gi], names[gj]),
                    "d[%s, %s] = %s but [dx, y] + (-1)^{|x|}[x, dy] = %s"
                    % (names[gi], names[gj], L._combo_str(lhs), L._combo_str(rhs)),
                ))

    for gi in range(n):
        for gj in range(n):
            for gk in range(n):
                x = {gi: Fraction(1)}
                y = {gj: Fraction(1)}
                z = {gk: Fraction(1)}
                total = _add_combos(
                    _scale_combo(koszul_sign(degs[gi], degs[gk]),
                                 L._bracket_combo(x, L._bracket_combo(y, z))),
                    _scale_combo(koszul_sign(degs[gj], degs[gi]),
                                 L._bracket_combo(y, L._bracket_combo(z, x))),
                    _scale_combo(koszul_sign(degs[gk], degs[gj]),
                                 L._bracket_combo(z, L._bracket_combo(x, y))),
                )
                if total:
                    issues.append(ValidationIssue(
                        "jacobi",
                        (names[gi], names[gj], names[gk]),
                        "graded Jacobi sum = %s, expected 0" % L._combo_str(total),
                    ))

    return ValidationReport(L.name, issues)
