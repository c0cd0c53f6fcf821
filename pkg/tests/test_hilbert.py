import random
from itertools import product

from fiberlab.fields import GF
from fiberlab.hilbert import HilbertSeries, monomial_numerator
from fiberlab.ideals import Ideal
from fiberlab.polyring import Ring


def brute_hilbert_function(gens, nvars, weights, up_to):
    """Count standard monomials degree by degree, straight from the
    definition."""
    counts = []
    for d in range(up_to + 1):
        total = 0
        for m in Ring(GF(32003), [f"v{i}" for i in range(nvars)],
                      weights).monomials_of_degree(d):
            if not any(all(a <= b for a, b in zip(g, m)) for g in gens):
                total += 1
        counts.append(total)
    return counts


def test_zero_ideal():
    hs = HilbertSeries.from_numerator({0: 1}, 3)
    assert hs.dimension == 3
    assert hs.multiplicity == 1
    assert hs.coefficients(3) == [1, 3, 6, 10]


def test_spec_example_x2_xy_y2():
    num = monomial_numerator([(2, 0, 0), (1, 1, 0), (0, 2, 0)], (1, 1, 1))
    hs = HilbertSeries.from_numerator(num, 3)
    reduced, cancelled = hs.reduced()
    assert reduced == {0: 1, 1: 2}          # 1 + 2t after cancelling
    assert hs.dimension == 1
    assert hs.multiplicity == 3
    assert hs.coefficients(5) == [1, 3, 3, 3, 3, 3]


def test_unit_ideal_conventions():
    num = monomial_numerator([(0, 0)], (1, 1))
    hs = HilbertSeries.from_numerator(num, 2)
    assert hs.dimension == -1
    assert hs.multiplicity == 0


def test_random_monomial_ideals_against_brute_force():
    rng = random.Random("hilbert")
    for _ in range(30):
        nvars = rng.randrange(2, 5)
        gens = []
        for _ in range(rng.randrange(1, 6)):
            gens.append(tuple(rng.randrange(4) for _ in range(nvars)))
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        weights = tuple(rng.choice((1, 1, 1, 2)) for _ in range(nvars))
        num = monomial_numerator(gens, weights)
        hs = HilbertSeries.from_numerator(num, nvars, weights)
        assert hs.coefficients(8) == brute_hilbert_function(gens, nvars, weights, 8)


def test_regular_cut_identity():
    # quotient by a regular linear form: numerator picks up (1 - t)
    num = monomial_numerator([(2, 0, 0)], (1, 1, 1))
    hs = HilbertSeries.from_numerator(num, 3)
    cut = hs * {0: 1, 1: -1}
    assert hs.equals_after_cut(cut, 1)
    assert not hs.equals_after_cut(hs, 1)


def test_series_matches_lead_term_ideal(sixgen):
    """Series of the ideal equals the series of its lead-term ideal by
    construction; check both against the brute count."""
    hs = sixgen.hilbert_series()
    leads = sixgen.groebner().leading_monomials
    brute = brute_hilbert_function(list(leads), 3, (1, 1, 1), 9)
    assert hs.coefficients(9) == brute
