"""Built-in example DGLAs: the corpus driven by tests, selftest and the CLI.

E0 "abelian2": g^1 = span{x1, x2}; d = 0; bracket = 0.
E1 "curl":     g^1 = span{x, c}, g^2 = span{b}; d(c) = b; [x, x] = b.
E2 "ce3":      Chevalley-Eilenberg complex of the abelian Lie algebra k^3
               with adjoint (zero) coefficients: g^{n-1} = Hom(Lambda^n k^3,
               k^3) for n = 1, 2, 3; d = 0; bracket = Nijenhuis-Richardson,
               normalized so that 1/2 [m, m] is the Jacobiator of a bilinear
               map m.
E3 "obst":     g^1 = span{x}, g^2 = span{b}; d = 0; [x, x] = b.
E4 "gauge2":   g^0 = span{a}, g^1 = span{x}; d(a) = x; bracket = 0.

E2's structure constants are generated from the insertion (composition)
product over shuffles, not written down by hand; the test suite checks them
against a brute-force Jacobiator enumeration.
"""

import itertools
from fractions import Fraction

from .algebra import DGLA, antisymmetric_closure
from .linalg import ZERO

BUILTIN_NAMES = ("E0", "E1", "E2", "E3", "E4")

_ONE = Fraction(1)


def _sort_sign(args):
    """Sort index arguments with the permutation sign; repeats give (None, 0)."""
    args = list(args)
    sign = 1
    for i in range(1, len(args)):
        j = i
        while j > 0 and args[j - 1] > args[j]:
            args[j - 1], args[j] = args[j], args[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(args, args[1:]):
        if a == b:
            return None, 0
    return tuple(args), sign


def _eval_alt(f, args):
    """Evaluate f in Hom(Lambda^n k^dim, k^dim) on basis indices (any order).

    f maps sorted index tuples to coefficient tuples; alternating extension.
    Returns None when the value is zero.
    """
    key, sign = _sort_sign(args)
    if key is None:
        return None
    vec = f.get(key)
    if vec is None:
        return None
    if sign == 1:
        return vec
    return tuple(-c for c in vec)


def _shuffle_sign(first_pos):
    """Sign of the (m, rest)-shuffle picking positions first_pos in order."""
    s = sum(p - idx for idx, p in enumerate(first_pos))
    return -1 if s % 2 else 1


def _insert(f, n, g, m, dim):
    """Insertion product: sum over shuffles of +- f(g(block), rest).

    f is n-ary, g is m-ary; the result is (n + m - 1)-ary, as a map from
    sorted index tuples to coefficient lists.
    """
    arity = n + m - 1
    out = {}
    for T in itertools.combinations(range(dim), arity):
        acc = [ZERO] * dim
        hit = False
        for first_pos in itertools.combinations(range(arity), m):
            chosen = set(first_pos)
            block = tuple(T[p] for p in first_pos)
            rest = tuple(T[p] for p in range(arity) if p not in chosen)
            gv = g.get(block)
            if gv is None:
                continue
            sgn = _shuffle_sign(first_pos)
            for i, ci in enumerate(gv):
                if not ci:
                    continue
                fv = _eval_alt(f, (i,) + rest)
                if fv is None:
                    continue
                c = sgn * ci
                for k, ck in enumerate(fv):
                    if ck:
                        acc[k] += c * ck
                        hit = True
        if hit and any(acc):
            out[T] = acc
    return out


def _nr_bracket(f, n, g, m, dim):
    """Nijenhuis-Richardson bracket [f, g] = f o g - (-1)^{pq} g o f."""
    p, q = n - 1, m - 1
    out = {T: list(v) for T, v in _insert(f, n, g, m, dim).items()}
    sgn = -1 if (p % 2) and (q % 2) else 1
    for T, v in _insert(g, m, f, n, dim).items():
        acc = out.setdefault(T, [ZERO] * dim)
        for k, c in enumerate(v):
            acc[k] -= sgn * c
    return {T: v for T, v in out.items() if any(v)}


def _ce3():
    dim = 3
    gens = []
    for n in (1, 2, 3):
        for S in itertools.combinations(range(dim), n):
            for i in range(dim):
                name = "m%s_%d" % ("".join(str(s + 1) for s in S), i + 1)
                gens.append((name, n - 1, S, i))
    basis_name = {}
    for name, deg, S, i in gens:
        basis_name[(S, i)] = name

    def as_map(S, i):
        vec = tuple(_ONE if k == i else ZERO for k in range(dim))
        return {S: vec}

    bracket = {}
    for na, pa, Sa, ia in gens:
        fa = as_map(Sa, ia)
        for nb, pb, Sb, ib in gens:
            if len(Sa) + len(Sb) - 1 > dim:
                continue
            fb = as_map(Sb, ib)
            val = _nr_bracket(fa, len(Sa), fb, len(Sb), dim)
            ents = []
            for T in sorted(val):
                for k, c in enumerate(val[T]):
                    if c:
                        ents.append((basis_name[(T, k)], c))
            if ents:
                bracket[(na, nb)] = tuple(ents)

    return DGLA(
        [(name, deg) for name, deg, _, _ in gens],
        d=None,
        bracket=bracket,
        name="E2",
    )


def builtin_example(name):
    """One of the corpus DGLAs by its catalog name E0..E4."""
    if name == "E0":
        return DGLA([("x1", 1), ("x2", 1)], name="E0")
    if name == "E1":
        return DGLA(
            [("x", 1), ("c", 1), ("b", 2)],
            d={"c": [("b", 1)]},
            bracket=antisymmetric_closure(
                [("x", 1), ("c", 1), ("b", 2)], {("x", "x"): [("b", 1)]}
            ),
            name="E1",
        )
    if name == "E2":
        return _ce3()
    if name == "E3":
        return DGLA(
            [("x", 1), ("b", 2)],
            bracket={("x", "x"): [("b", 1)]},
            name="E3",
        )
    if name == "E4":
        return DGLA([("a", 0), ("x", 1)], d={"a": [("x", 1)]}, name="E4")
    raise ValueError("unknown builtin example %r (have %s)" % (name, ", ".join(BUILTIN_NAMES)))
