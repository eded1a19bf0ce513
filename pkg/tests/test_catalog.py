import os
from fractions import Fraction
from itertools import combinations

import pytest

from dgla import BUILTIN_NAMES, builtin_example, koszul_sign, obstruction
from dgla.docio import load_dgla
from dgla.formal import CoefficientRing, FormalElement

from conftest import contraction_for

CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "corpus")


def F(x):
    return Fraction(x)


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        builtin_example("E9")


def test_corpus_shapes():
    want = {
        "E0": {1: 2},
        "E1": {1: 2, 2: 1},
        "E2": {0: 9, 1: 9, 2: 3},
        "E3": {1: 1, 2: 1},
        "E4": {0: 1, 1: 1},
    }
    for name in BUILTIN_NAMES:
        L = builtin_example(name)
        assert dict(L.dims) == want[name], name
        assert L.name == name


def test_corpus_betti():
    want = {
        "E0": {1: 2},
        "E1": {1: 1, 2: 0},
        "E2": {0: 9, 1: 9, 2: 3},
        "E3": {1: 1, 2: 1},
        "E4": {0: 0, 1: 0},
    }
    for name in BUILTIN_NAMES:
        _, R = contraction_for(name)
        assert R.splitting.betti() == want[name], name


def test_bracket_tables_antisymmetric():
    for name in BUILTIN_NAMES:
        L = builtin_example(name)
        for xn, yn in L.bracket_pairs():
            p, q = L.degree_of(xn), L.degree_of(yn)
            fwd = dict(L.bracket_of(xn, yn))
            bwd = dict(L.bracket_of(yn, xn))
            assert bwd == {g: -koszul_sign(p, q) * c for g, c in fwd.items()}


def test_corpus_files_match_catalog():
    for name in BUILTIN_NAMES:
        L, rep = load_dgla(os.path.join(CORPUS_DIR, "%s.json" % name))
        assert rep.ok
        assert L == builtin_example(name), name


# E2 spot values, each recomputed by hand from the composition rule:
# on 1-ary maps [f, g] = f.g - g.f; mixing 1-ary into 2-ary inserts f
# into each argument slot of mu.

def test_e2_gl3_part():
    L = builtin_example("E2")
    assert dict(L.bracket_of("m1_1", "m1_2")) == {"m1_2": F(-1)}
    # matrix units: [E21, E12] = E22 - E11
    assert dict(L.bracket_of("m1_2", "m2_1")) == {"m1_1": F(-1), "m2_2": F(1)}


def test_e2_action_on_bilinear():
    L = builtin_example("E2")
    # f = identity-on-e1, mu(e1,e2) = e3: f.mu = 0, mu after inserting f
    # keeps only mu(f(e1), e2) = e3, so [f, mu] = -mu
    assert dict(L.bracket_of("m1_1", "m12_3")) == {"m12_3": F(-1)}


# independent obstruction oracle: the quadratic coefficient for the
# direction mu must equal the Jacobiator of mu computed from scratch


def _mu_of_pairs(pairs):
    """Alternating bilinear map on basis indices from an {(i<j): vec} table."""
    def mu(i, j):
        if i == j:
            return (F(0), F(0), F(0))
        if i < j:
            return pairs.get((i, j), (F(0), F(0), F(0)))
        flipped = pairs.get((j, i), (F(0), F(0), F(0)))
        return tuple(-a for a in flipped)
    return mu


def _mu_on_vec(mu, v, j):
    """mu(v, e_j) extended linearly in the first slot."""
    out = [F(0)] * 3
    for i, ci in enumerate(v):
        if ci:
            w = mu(i, j)
            for t in range(3):
                out[t] += ci * w[t]
    return out


def _jacobiator(mu, tri):
    """Sum over (2,1)-unshuffles of tri with alternating parity."""
    total = [F(0)] * 3
    for pos in combinations(range(3), 2):
        i, j = tri[pos[0]], tri[pos[1]]
        (k,) = [tri[p] for p in range(3) if p not in pos]
        # parity of moving the chosen pair to the front of tri
        sign = (-1) ** (pos[0] + pos[1] - 1)
        inner = mu(i, j)
        outer = _mu_on_vec(mu, inner, k)
        for t in range(3):
            total[t] += sign * outer[t]
    return tuple(total)


def _cyclic_jacobiator(mu, i, j, k):
    """mu(mu(i,j),k) + mu(mu(j,k),i) + mu(mu(k,i),j)."""
    total = [F(0)] * 3
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        outer = _mu_on_vec(mu, mu(a, b), c)
        for t in range(3):
            total[t] += outer[t]
    return tuple(total)


def test_jacobiator_oracle_value():
    # mu(e1,e2) = e3, mu(e1,e3) = e1 has Jacobiator -e3 at (e1,e2,e3)
    mu = _mu_of_pairs({
        (0, 1): (F(0), F(0), F(1)),
        (0, 2): (F(1), F(0), F(0)),
    })
    assert _jacobiator(mu, (0, 1, 2)) == (F(0), F(0), F(-1))
    # for alternating mu the unshuffle and cyclic forms coincide
    assert _cyclic_jacobiator(mu, 0, 1, 2) == (F(0), F(0), F(-1))


def test_e2_obstruction_matches_jacobiator():
    L, R = contraction_for("E2")
    ring = CoefficientRing.single(2)
    names = L.basis_names(1)
    vec = [F(0)] * 9
    vec[names.index("m12_3")] = F(1)
    vec[names.index("m13_1")] = F(1)
    x = FormalElement(ring, 1, 9, {(1,): tuple(vec)})
    ob = obstruction(L, R, x)
    mu = _mu_of_pairs({
        (0, 1): (F(0), F(0), F(1)),
        (0, 2): (F(1), F(0), F(0)),
    })
    # one triple basis element of the third exterior power for k^3
    for tri in combinations(range(3), 3):
        assert ob.coefficient((2,)) == _jacobiator(mu, tri)


def test_e2_obstruction_random_direction_matches_jacobiator():
    from random import Random

    rng = Random(23)
    L, R = contraction_for("E2")
    ring = CoefficientRing.single(2)
    names = L.basis_names(1)
    order = ["12", "13", "23"]
    for _ in range(10):
        pairs = {}
        vec = [F(0)] * 9
        for pi, key in enumerate(combinations(range(3), 2)):
            col = [F(rng.randint(-3, 3)) for _ in range(3)]
            pairs[key] = tuple(col)
            for t in range(3):
                vec[names.index("m%s_%d" % (order[pi], t + 1))] = col[t]
        x = FormalElement(ring, 1, 9, {(1,): tuple(vec)})
        ob = obstruction(L, R, x)
        mu = _mu_of_pairs(pairs)
        want = _jacobiator(mu, (0, 1, 2))
        got = ob.coefficient((2,)) if not ob.is_zero() else (F(0),) * 3
        assert got == want
