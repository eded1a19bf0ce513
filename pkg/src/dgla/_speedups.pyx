# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementation of the hot inner loops.

Twin of _kernels.py; backend.py selects one at import time.  Coefficients
stay exact Fractions (Python objects), so the speedup comes from compiled
loop and dispatch overhead, not from changing the arithmetic.  Results must
be bit-identical to the pure-python backend on every input.
"""

from fractions import Fraction

cdef object _ZERO = Fraction(0)


def bracket_convolve(dict uterms, dict vterms, dict table, long trunc, Py_ssize_t out_dim):
    """Bilinear convolution of two terms maps through a structure table.

    Computes sum over monomial pairs of [u_m1, v_m2] * m1*m2, truncating
    every product monomial whose total degree exceeds trunc.
    """
    cdef dict out = {}
    cdef long d1, d2
    cdef Py_ssize_t i, j, n
    cdef tuple m1, m2, v1, v2, mono, ents, ent
    cdef list acc
    cdef object ui, vj, uv, a, b
    for m1, v1 in uterms.items():
        d1 = 0
        for a in m1:
            d1 += a
        for m2, v2 in vterms.items():
            d2 = 0
            for b in m2:
                d2 += b
            if d1 + d2 > trunc:
                continue
            n = len(m1)
            mono = tuple([m1[i] + m2[i] for i in range(n)])
            acc = <list> out.get(mono)
            if acc is None:
                acc = [_ZERO] * out_dim
                out[mono] = acc
            for i in range(len(v1)):
                ui = v1[i]
                if not ui:
                    continue
                for j in range(len(v2)):
                    vj = v2[j]
                    if not vj:
                        continue
                    ents = <tuple> table.get((i, j))
                    if not ents:
                        continue
                    uv = ui * vj
                    for ent in ents:
                        acc[<Py_ssize_t> ent[0]] = acc[<Py_ssize_t> ent[0]] + uv * ent[1]
    return {m: tuple(v) for m, v in out.items() if any(v)}


def matvec_terms(dict terms, tuple rows, Py_ssize_t out_dim):
    """Apply one sparse matrix to the coefficient vector of every monomial."""
    cdef dict res = {}
    cdef Py_ssize_t r
    cdef bint nonzero
    cdef tuple v, row, ent
    cdef list out
    cdef object mono, s, vc
    for mono, v in terms.items():
        out = [_ZERO] * out_dim
        nonzero = False
        for r in range(out_dim):
            s = _ZERO
            row = <tuple> rows[r]
            for ent in row:
                vc = v[<Py_ssize_t> ent[0]]
                if vc:
                    s = s + ent[1] * vc
            if s:
                out[r] = s
                nonzero = True
        if nonzero:
            res[mono] = tuple(out)
    return res
