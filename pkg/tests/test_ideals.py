import random

import pytest

from fiberlab.fields import GF
from fiberlab.ideals import Ideal, divide_exact
from fiberlab.polyring import Ring, RingError


def test_sum_product_power(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    assert Ideal(R3, (x,)) * Ideal(R3, (y,)) == Ideal(R3, (x * y,))
    sq = Ideal(R3, (x, y)).power(2)
    assert sq == Ideal(R3, (x * x, x * y, y * y))
    assert len(sq.minimal_generators()) == 3
    assert Ideal(R3, (x,)).power(0) == Ideal(R3, (R3.one(),))


def test_sevengen_square_product_count(sevengen):
    from math import comb
    raw = sevengen * sevengen
    assert all(g.homogeneous_degree() == 12 for g in raw.generators)
    # 28 formal unordered products before minimalization; as monomials
    # some coincide
    formal = [(i, j) for i in range(7) for j in range(i, 7)]
    assert len(formal) == comb(7 + 1, 2) == 28
    distinct = {a * b for a in sevengen.generators for b in sevengen.generators}
    assert len(distinct) == 21


def test_intersection_examples(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    assert Ideal(R3, (x,)).intersect(Ideal(R3, (y,))) == Ideal(R3, (x * y,))
    a = Ideal(R3, (x, y * z))
    assert a.intersect(a) == a


def test_intersection_fat_lines(R3):
    """(x,y)^3 cap (x,z)^3 via elimination matches the monomial oracle."""
    x, y, z = (R3.variable(i) for i in range(3))
    A = Ideal(R3, (x, y)).power(3, minimalize=False)
    B = Ideal(R3, (x, z)).power(3, minimalize=False)
    I = A.intersect(B)
    mingens = I.minimal_generators()
    assert len(mingens) == 4
    # oracle: pairwise lcms of the monomial generators, minimalized
    from fiberlab.polyring import mono_lcm
    lcms = {mono_lcm(next(iter(f.terms)), next(iter(g.terms)))
            for f in A.generators for g in B.generators}
    oracle = Ideal(R3, tuple(R3.monomial(m) for m in lcms))
    assert I == oracle


def test_colon_examples(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    a = Ideal(R3, (x * y,))
    assert a.colon(x) == Ideal(R3, (y,))
    b = Ideal(R3, (x * x, y))
    assert b.colon(R3.one()) == b
    with pytest.raises(ZeroDivisionError):
        b.colon(R3.zero())


def test_colon_properties_random(R3, rng):
    from conftest import random_poly
    x, y, z = (R3.variable(i) for i in range(3))
    for _ in range(10):
        a = Ideal(R3, (random_poly(R3, 2, rng), random_poly(R3, 3, rng)))
        if a.is_zero():
            continue
        f = random_poly(R3, 1, rng, terms=2)
        if f.is_zero():
            continue
        q = a.colon(f)
        # (a : f) * f inside a, and a inside (a : f)
        for g in q.generators:
            assert a.contains(g * f)
        for g in a.generators:
            assert q.contains(g)


def test_colon_intersect_duality(R3):
    # f * (a : f) = a cap (f) when f is a nonzerodivisor mod a
    x, y, z = (R3.variable(i) for i in range(3))
    a = Ideal(R3, (x * x, x * y))
    f = z
    lhs = Ideal(R3, tuple(f * g for g in a.colon(f).generators))
    rhs = a.intersect(Ideal(R3, (f,)))
    assert lhs == rhs


def test_colon_ideal(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    a = Ideal(R3, (x * y, x * z))
    assert a.colon_ideal(Ideal(R3, (y, z))) == Ideal(R3, (x,))
    b = Ideal(R3, (x * y, z))
    assert b.colon_ideal(Ideal(R3, (y,))) == Ideal(R3, (x, z))


def test_dimension_height_examples(R3, sixgen):
    x, y, z = (R3.variable(i) for i in range(3))
    principal = Ideal(R3, (x,))
    assert principal.krull_dimension() == 2
    assert principal.height() == 1
    assert sixgen.height() == 2
    unit = Ideal(R3, (R3.one(),))
    assert unit.krull_dimension() == -1
    assert unit.height() == 3


def test_power_dimension_invariant(monomial4):
    d = monomial4.krull_dimension()
    for n in (2, 3):
        assert monomial4.power(n).krull_dimension() == d


def test_catenary_height_formula(R3, sixgen, sevengen, monomial4, binomial4):
    for ideal in (sixgen, sevengen, monomial4, binomial4):
        assert ideal.height() + ideal.krull_dimension() == 3


def test_graded_equal(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    a = Ideal(R3, (x,))
    b = Ideal(R3, (x, x * x))
    assert a.graded_equal(b, 1)
    assert a.graded_equal(b, 2)
    assert not Ideal(R3, (x,)).graded_equal(Ideal(R3, (y,)), 1)


def test_divide_exact(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    f = x * y - z * z
    g = (x + y) * f
    assert divide_exact(g, f) == x + y
    with pytest.raises(ArithmeticError):
        divide_exact(x * x, y)


def test_ring_mismatch(R3, R3q):
    with pytest.raises(RingError):
        Ideal(R3, (R3.variable(0),)) + Ideal(R3q, (R3q.variable(0),))


def test_equality_is_ideal_equality(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    assert Ideal(R3, (x, y)) == Ideal(R3, (x + y, y))
    assert Ideal(R3, (x,)) != Ideal(R3, (x * x,))
