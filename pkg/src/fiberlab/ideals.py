"""Ideal-level operations, each reducible to Groebner or graded data.

Intersections go through a single auxiliary variable and block
elimination; colons divide the intersection with a principal ideal;
dimension, height and multiplicity come from the Hilbert series of the
grevlex lead-term ideal.
"""

from __future__ import annotations

from .fields import FieldSpec
from .groebner import GREVLEX, GroebnerBasis, buchberger, eliminate, normal_form
from .hilbert import HilbertSeries, monomial_numerator
from .polyring import Polynomial, Ring, RingError


class Ideal:
    """Homogeneous-friendly ideal with per-order cached reduced bases."""

    def __init__(self, ring: Ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingError("generator outside the ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._gb_cache = {}
        self._hilbert = None

    # -- basics ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def groebner(self, order=GREVLEX) -> GroebnerBasis:
        key = repr(order)
        gb = self._gb_cache.get(key)
        if gb is None:
            if self.is_zero():
                gb = GroebnerBasis(self.ring, order, (), ())
            else:
                gb = buchberger(self.generators, order)
            self._gb_cache[key] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return self.groebner().contains(f)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return NotImplemented
        return self.groebner().elements == other.groebner().elements

    def __hash__(self):
        return hash((self.ring, self.groebner().elements))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators[:6])
        more = ", ..." if len(self.generators) > 6 else ""
        return f"Ideal({gens}{more})"

    def equigenerated_degree(self):
        """Common degree of the minimal generators, or None."""
        mingens = self.minimal_generators()
        if not mingens:
            return None
        degs = {g.homogeneous_degree() for g in mingens}
        return degs.pop() if len(degs) == 1 else None

    def minimal_generators(self):
        from .graded import minimal_generators
        return minimal_generators(self)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        return Ideal(self.ring, tuple(a * b for a in self.generators
                                      for b in other.generators))

    def power(self, n: int, minimalize: bool = True) -> "Ideal":
        """I^n, computed incrementally with generator minimalization."""
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            return Ideal(self.ring, (self.ring.one(),))
        result = self
        for _ in range(n - 1):
            result = result * self
            if minimalize:
                result = Ideal(self.ring, result.minimal_generators())
        return result

    def _check(self, other):
        if self.ring != other.ring:
            raise RingError("ideals in different rings")

    # -- intersection / colon -----------------------------------------------
    def intersect(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        ring = self.ring
        aux = _aux_name(ring)
        big = Ring(ring.field, (aux,) + ring.names, (1,) + ring.weights)
        u = big.variable(0)
        one = big.one()
        gens = [u * ring.embed(g, big) for g in self.generators]
        gens += [(one - u) * ring.embed(g, big) for g in other.generators]
        kept = eliminate(gens, 1)
        return Ideal(ring, tuple(big.restrict(g, ring) for g in kept))

    def colon(self, f: Polynomial) -> "Ideal":
        """(I : f) = {g : g*f in I}."""
        if f.is_zero():
            raise ZeroDivisionError("colon by zero")
        if f.ring != self.ring:
            raise RingError("colon element outside the ring")
        inter = self.intersect(Ideal(self.ring, (f,)))
        return Ideal(self.ring, tuple(divide_exact(g, f) for g in inter.generators))

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("colon by the zero ideal")
        result = None
        for f in other.generators:
            part = self.colon(f)
            result = part if result is None else result.intersect(part)
        return result

    # -- numeric invariants ---------------------------------------------------
    def hilbert_series(self) -> HilbertSeries:
        """Series of R/I in the ring's grading."""
        if self._hilbert is None:
            if not self.is_homogeneous():
                raise RingError("Hilbert series needs a homogeneous ideal")
            if self.is_zero():
                num = {0: 1}
            else:
                gb = self.groebner()
                num = monomial_numerator(gb.leading_monomials, self.ring.weights)
            self._hilbert = HilbertSeries.from_numerator(num, self.ring.nvars,
                                                         self.ring.weights)
        return self._hilbert

    def krull_dimension(self) -> int:
        """dim(R/I); -1 when I is the unit ideal."""
        return self.hilbert_series().dimension

    def height(self) -> int:
        """ht(I) in the polynomial ambient; nvars for the unit ideal."""
        d = self.krull_dimension()
        return self.ring.nvars if d < 0 else self.ring.nvars - d

    def is_unit(self) -> bool:
        return bool(self.generators) and self.krull_dimension() == -1

    def multiplicity(self) -> int:
        """e(R/I) from the Hilbert series."""
        return self.hilbert_series().multiplicity

    def dim_graded_piece(self, degree: int) -> int:
        from .graded import graded_piece
        return graded_piece(self, degree).dim

    def graded_equal(self, other: "Ideal", degree: int) -> bool:
        """[I]_degree == [J]_degree as subspaces of R_degree."""
        from .graded import graded_piece, joint_rank
        self._check(other)
        a = graded_piece(self, degree)
        b = graded_piece(other, degree)
        if a.dim != b.dim:
            return False
        return joint_rank(a, b) == a.dim


def _aux_name(ring: Ring) -> str:
    base = "t"
    k = 0
    while True:
        cand = f"{base}{k}"
        if cand not in ring.names:
            return cand
        k += 1


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient g/f when f divides g exactly."""
    ring = g.ring
    field = ring.field
    order = GREVLEX
    if g.is_zero():
        return g
    lt_f = f.leading_monomial(order)
    lc_f = f.terms[lt_f]
    quotient = {}
    rest = g
    while rest.terms:
        lt_r = rest.leading_monomial(order)
        if not all(a <= b for a, b in zip(lt_f, lt_r)):
            raise ArithmeticError("division is not exact")
        from .polyring import mono_div
        q = mono_div(lt_r, lt_f)
        c = field.div(rest.terms[lt_r], lc_f)
        quotient[q] = c
        rest = rest - f.mul_term(q, c)
    return Polynomial(ring, quotient)


def ideal_sum_product_power(a: Ideal, b_or_n) -> Ideal:
    if isinstance(b_or_n, Ideal):
        return a * b_or_n
    return a.power(int(b_or_n))


def intersect(a: Ideal, b: Ideal) -> Ideal:
    return a.intersect(b)


def colon(a: Ideal, f: Polynomial) -> Ideal:
    return a.colon(f)


def hilbert_series(a: Ideal) -> HilbertSeries:
    return a.hilbert_series()


def krull_dimension(a: Ideal) -> int:
    return a.krull_dimension()


def height(a: Ideal) -> int:
    return a.height()


def graded_equal(a: Ideal, b: Ideal, degree: int) -> bool:
    return a.graded_equal(b, degree)
