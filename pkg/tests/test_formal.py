from fractions import Fraction
from random import Random

import pytest

from dgla.formal import CoefficientRing, FormalElement, mono_degree, mono_mul


def F(x):
    return Fraction(x)


def test_ring_rejects_bad_input():
    with pytest.raises(ValueError):
        CoefficientRing((), 3)
    with pytest.raises(ValueError):
        CoefficientRing(("t", "t"), 3)
    with pytest.raises(ValueError):
        CoefficientRing(("t",), 0)
    with pytest.raises(ValueError):
        CoefficientRing(("2t",), 3)


def test_ring_monomials_count():
    # degree-d monomials in k variables: C(d+k-1, k-1)
    r = CoefficientRing(("t1", "t2", "t3"), 5)
    assert len(r.monomials(1)) == 3
    assert len(r.monomials(2)) == 6
    assert len(r.monomials(4)) == 15


def test_ring_monomials_exclude_constants():
    r = CoefficientRing(("t",), 3)
    assert all(mono_degree(m) >= 1 for m in r.all_monomials())
    with pytest.raises(ValueError):
        r.check_mono((0,))


def test_mono_str_round_trip():
    r = CoefficientRing(("t1", "t2"), 6)
    for m in r.all_monomials():
        assert r.parse_mono(r.mono_str(m)) == m
    assert r.mono_str((2, 1)) == "t1^2*t2"
    with pytest.raises(ValueError):
        r.parse_mono("1")
    with pytest.raises(ValueError):
        r.parse_mono("u")


def test_element_truncates_on_construction():
    r = CoefficientRing(("t",), 2)
    e = FormalElement(r, 1, 1, {(1,): (F(1),), (3,): (F(5),)})
    assert e.support() == ((1,),)


def test_element_drops_zero_vectors():
    r = CoefficientRing(("t",), 3)
    e = FormalElement(r, 1, 2, {(1,): (F(0), F(0))})
    assert e.is_zero()
    assert e.support() == ()


def test_element_rejects_degree_zero_monomial():
    r = CoefficientRing(("t",), 3)
    with pytest.raises(ValueError):
        FormalElement(r, 1, 1, {(0,): (F(1),)})


def test_element_arithmetic():
    r = CoefficientRing(("t",), 4)
    a = FormalElement(r, 1, 2, {(1,): (F(1), F(2))})
    b = FormalElement(r, 1, 2, {(1,): (F(1), F(0)), (2,): (F(3), F(1))})
    s = a + b
    assert s.coefficient((1,)) == (F(2), F(2))
    assert s.coefficient((2,)) == (F(3), F(1))
    assert (s - b) == a
    assert a.scale(F("1/2")).coefficient((1,)) == (F("1/2"), F(1))
    assert (a - a).is_zero()


def test_element_times_mono_truncates():
    r = CoefficientRing(("t",), 3)
    a = FormalElement(r, 1, 1, {(2,): (F(1),), (3,): (F(4),)})
    shifted = a.times_mono((1,))
    assert shifted.support() == ((3,),)
    assert shifted.coefficient((3,)) == (F(1),)


def test_element_homogeneous_part_and_min_order():
    r = CoefficientRing(("t1", "t2"), 4)
    a = FormalElement(r, 1, 1, {(1, 0): (F(1),), (1, 1): (F(2),), (0, 3): (F(3),)})
    assert a.min_order() == 1
    part2 = a.homogeneous_part(2)
    assert part2.support() == ((1, 1),)
    assert a.homogeneous_part(4).is_zero()
    assert a == a.homogeneous_part(1) + part2 + a.homogeneous_part(3)


def test_element_to_order():
    r = CoefficientRing(("t",), 5)
    a = FormalElement(r, 1, 1, {(1,): (F(1),), (4,): (F(7),)})
    low = a.to_order(2)
    assert low.ring.order == 2
    assert low.support() == ((1,),)
    high = low.to_order(6)
    assert high.coefficient((1,)) == (F(1),)


def test_element_compat_errors():
    r = CoefficientRing(("t",), 3)
    r2 = CoefficientRing(("t",), 4)
    a = FormalElement(r, 1, 1, {(1,): (F(1),)})
    with pytest.raises(ValueError):
        a + FormalElement(r2, 1, 1)
    with pytest.raises(ValueError):
        a + FormalElement(r, 2, 1)
    with pytest.raises(ValueError):
        a + FormalElement(r, 1, 2)
    with pytest.raises(ValueError):
        FormalElement(r, 1, 1, {(1,): (F(1), F(2))})


def test_support_graded_lex_order():
    r = CoefficientRing(("t1", "t2"), 3)
    a = FormalElement(r, 1, 1, {
        (0, 2): (F(1),), (1, 0): (F(1),), (2, 0): (F(1),), (0, 1): (F(1),),
    })
    assert a.support() == ((0, 1), (1, 0), (0, 2), (2, 0))


def test_mono_mul_and_degree():
    assert mono_mul((1, 0), (0, 2)) == (1, 2)
    assert mono_degree((3, 1)) == 4


def test_addition_associative_random():
    rng = Random(11)
    r = CoefficientRing(("t1", "t2"), 3)
    monos = r.all_monomials()

    def rand_elem():
        terms = {}
        for m in monos:
            if rng.random() < 0.5:
                terms[m] = (F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        return FormalElement(r, 1, 2, terms)

    for _ in range(50):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + (-a) == FormalElement.zero(r, 1, 2)
