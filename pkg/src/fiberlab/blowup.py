"""Blow-up algebras of an equigenerated ideal: special fiber, Rees
algebra, associated graded ring, reductions and Cohen-Macaulay tests.

Presentations are produced by block elimination.  With generators
f_1..f_m of common degree d, the fiber relations Q live in k[w_1..w_m]
(kernel of w_i -> f_i) and the Rees relations in k[x.., w..] (kernel of
w_i -> f_i t).  Both kernels are bigraded, so their generators are
homogeneous for the standard regrading in which every variable has
weight one; all dimension, multiplicity and depth computations run in
that regrading (verified generator by generator).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .depth import DepthReport, graded_depth, series_of_basis
from .fields import FieldSpec
from .graded import graded_piece, piece_span_of_polys
from .groebner import GREVLEX, GroebnerBasis, Elimination, buchberger, extend_basis
from .hilbert import HilbertSeries
from .ideals import Ideal
from .linalg import rank_of_rows
from .polyring import Polynomial, Ring, RingError


def _fresh_names(base: str, count: int, taken) -> list:
    out = []
    k = 1
    while len(out) < count:
        cand = f"{base}{k}"
        if cand not in taken:
            out.append(cand)
        k += 1
    return out


def _bidegree(m, split: int):
    """(x-degree, w-count) of an exponent tuple split at index ``split``."""
    return sum(m[:split]), sum(m[split:])


def _is_bihomogeneous(p: Polynomial, split: int) -> bool:
    degs = {_bidegree(m, split) for m in p.terms}
    return len(degs) <= 1


@dataclass
class FiberPresentation:
    """k[w_1..w_m] together with the relations Q of the fiber cone."""

    fiber_ring: Ring
    relations: Ideal
    source: tuple               # the degree-d minimal generators of I
    degree: int

    @property
    def num_generators(self) -> int:
        return self.fiber_ring.nvars

    def hilbert_series(self) -> HilbertSeries:
        return self.relations.hilbert_series()

    def analytic_spread(self) -> int:
        return self.hilbert_series().dimension

    def multiplicity(self) -> int:
        return self.hilbert_series().multiplicity

    def relation_piece_dim(self, n: int) -> int:
        """dim_k of the degree-n part of Q, from the fiber Hilbert series."""
        ambient = self.fiber_ring.dim_of_degree(n)
        return ambient - self.hilbert_series().coefficients(n)[n]


@dataclass
class ReesPresentation:
    """Presentations of the Rees algebra and associated graded ring.

    ``big_ring`` is k[x.., w..] in the standard regrading (all weights
    one); the bigraded structure is recovered by splitting exponents at
    ``split``.  ``rees_ideal`` presents the Rees algebra, ``gr_ideal``
    the associated graded ring.
    """

    big_ring: Ring
    split: int
    rees_ideal: Ideal
    gr_ideal: Ideal
    source: tuple
    degree: int

    def rees_dimension(self) -> int:
        return self.rees_ideal.krull_dimension()

    def gr_dimension(self) -> int:
        return self.gr_ideal.krull_dimension()

    def gr_plus_codimension(self) -> int:
        """Codimension of the irrelevant ideal of gr (an upper bound for
        its height)."""
        wvars = [self.big_ring.variable(i)
                 for i in range(self.split, self.big_ring.nvars)]
        top = Ideal(self.big_ring, self.gr_ideal.generators + tuple(wvars))
        return self.gr_dimension() - top.krull_dimension()


def equigenerated_data(ideal: Ideal):
    """(minimal generators, common degree); rejects mixed degrees."""
    gens = ideal.minimal_generators()
    if not gens:
        raise ValueError("zero ideal is not equigenerated")
    degs = {g.homogeneous_degree() for g in gens}
    if len(degs) != 1:
        raise ValueError(f"ideal is not equigenerated: degrees {sorted(degs)}")
    return gens, degs.pop()


def fiber_presentation(ideal: Ideal) -> FiberPresentation:
    """Relations Q of the fiber cone, by eliminating the x-variables."""
    ring = ideal.ring
    gens, d = equigenerated_data(ideal)
    m = len(gens)
    wnames = _fresh_names("w", m, set(ring.names))
    elim_ring = Ring(ring.field, ring.names + tuple(wnames),
                     ring.weights + (d,) * m)
    work = []
    for i, f in enumerate(gens):
        w = elim_ring.variable(ring.nvars + i)
        work.append(w - ring.embed(f, elim_ring))
    kept = _eliminate_with_basis(work, ring.nvars)
    fiber_ring = Ring(ring.field, tuple(wnames))
    rel_polys = tuple(elim_ring.restrict(g, fiber_ring) for g in kept)
    relations = Ideal(fiber_ring, rel_polys)
    relations._gb_cache[repr(GREVLEX)] = GroebnerBasis(
        fiber_ring, GREVLEX, rel_polys, rel_polys)
    fp = FiberPresentation(fiber_ring, relations, tuple(gens), d)
    _verify_fiber(fp, ring)
    return fp


def _eliminate_with_basis(work, block: int):
    """Tail elements of the block-elimination basis (a reduced grevlex
    basis of the elimination ideal)."""
    gb = buchberger(work, Elimination(block))
    return [g for g in gb.elements
            if all(all(e == 0 for e in m[:block]) for m in g.terms)]


def _verify_fiber(fp: FiberPresentation, ring: Ring):
    images = [f for f in fp.source]
    for g in fp.relations.generators:
        sub = g.substitute(images, ring)
        if not sub.is_zero():
            raise AssertionError("fiber relation does not vanish on the generators")


def analytic_spread(ideal: Ideal, fp: FiberPresentation | None = None) -> int:
    fp = fp or fiber_presentation(ideal)
    return fp.analytic_spread()


@dataclass
class TruncatedFiber:
    """Fiber relations known only through a w-degree bound, from a
    degree-truncated elimination."""

    fiber_ring: Ring
    partial_relations: tuple
    degree_bound: int            # w-degree through which Q is presented
    relation_dims: dict          # n -> dim_k [Q]_n for n <= degree_bound


def fiber_truncated(ideal: Ideal, n_max: int) -> TruncatedFiber:
    """Q through w-degree n_max via a degree-truncated elimination.

    X-free elements of the truncated block basis present Q through the
    bound (reductions of x-free elements stay x-free under the block
    order), so the relation dimensions are standard-monomial counts.
    """
    ring = ideal.ring
    gens, d = equigenerated_data(ideal)
    m = len(gens)
    wnames = _fresh_names("w", m, set(ring.names))
    elim_ring = Ring(ring.field, ring.names + tuple(wnames),
                     ring.weights + (d,) * m)
    work = []
    for i, f in enumerate(gens):
        w = elim_ring.variable(ring.nvars + i)
        work.append(w - ring.embed(f, elim_ring))
    gb = buchberger(work, Elimination(ring.nvars), degree_bound=n_max * d)
    n = ring.nvars
    kept = [g for g in gb.elements
            if all(all(e == 0 for e in mm[:n]) for mm in g.terms)]
    fiber_ring = Ring(ring.field, tuple(wnames))
    rels = tuple(elim_ring.restrict(g, fiber_ring) for g in kept)
    for q in rels:
        if not q.substitute(list(gens), ring).is_zero():
            raise AssertionError("truncated fiber relation does not vanish")
    leads = [q.leading_monomial(GREVLEX) for q in rels]
    dims = {}
    for nn in range(1, n_max + 1):
        total = fiber_ring.dim_of_degree(nn)
        std = sum(1 for mm in fiber_ring.monomials_of_degree(nn)
                  if not any(all(a <= b for a, b in zip(lm, mm)) for lm in leads))
        dims[nn] = total - std
    return TruncatedFiber(fiber_ring, rels, n_max, dims)


def spread_via_jacobian(ideal: Ideal, trials: int = 5, seed="jac") -> tuple:
    """(lower bound for the analytic spread, exact flag).

    The Jacobian rank of the generators at a random point bounds the
    transcendence degree of k[I_d] from below; when the bound meets
    dim R it is exact.
    """
    import random as _random
    ring = ideal.ring
    field = ring.field
    gens = ideal.minimal_generators()
    jac = [[g.derivative(j) for j in range(ring.nvars)] for g in gens]
    best = 0
    from .graded import _evaluate
    for trial in range(trials):
        rng = _random.Random(f"{seed}:{trial}")
        point = [field.random_raw(rng) for _ in range(ring.nvars)]
        rows = [[_evaluate(entry, point, field) for entry in row] for row in jac]
        best = max(best, rank_of_rows(rows, field, ring.nvars))
    return best, best == ring.nvars


def rees_and_gr(ideal: Ideal, fp: FiberPresentation | None = None) -> ReesPresentation:
    """Rees and associated graded presentations, by eliminating t."""
    ring = ideal.ring
    gens, d = equigenerated_data(ideal)
    if ideal.height() < 1:
        raise ValueError("Rees presentation needs grade >= 1")
    m = len(gens)
    taken = set(ring.names)
    tname = _fresh_names("t", 1, taken)[0]
    wnames = _fresh_names("w", m, taken | {tname})
    elim_ring = Ring(ring.field, (tname,) + ring.names + tuple(wnames),
                     (1,) + ring.weights + (d + 1,) * m)
    t = elim_ring.variable(0)
    work = []
    for i, f in enumerate(gens):
        w = elim_ring.variable(1 + ring.nvars + i)
        work.append(w - ring.embed(f, elim_ring) * t)
    kept = _eliminate_with_basis(work, 1)
    big_ring = Ring(ring.field, ring.names + tuple(wnames))
    split = ring.nvars
    rees_polys = []
    for g in kept:
        h = elim_ring.restrict(g, big_ring)
        if not _is_bihomogeneous(h, split):
            raise AssertionError("Rees relation is not bihomogeneous")
        rees_polys.append(h)
    rees_polys = tuple(rees_polys)
    rees_ideal = Ideal(big_ring, rees_polys)
    rees_ideal._gb_cache[repr(GREVLEX)] = GroebnerBasis(
        big_ring, GREVLEX, rees_polys, rees_polys)
    gr_gens = rees_polys + tuple(ring.embed(f, big_ring) for f in gens)
    gr_ideal = Ideal(big_ring, gr_gens)
    gr_ideal._gb_cache[repr(GREVLEX)] = extend_basis(
        rees_ideal.groebner(), gr_gens[len(rees_polys):])
    pres = ReesPresentation(big_ring, split, rees_ideal, gr_ideal,
                            tuple(gens), d)
    _verify_rees(pres, elim_ring, ring, t)
    if fp is not None:
        _verify_fiber_inside_rees(fp, pres)
    return pres


def _verify_rees(pres: ReesPresentation, elim_ring: Ring, ring: Ring, t):
    images = []
    for i in range(pres.split):
        images.append(elim_ring.variable(1 + i))
    for f in pres.source:
        images.append(ring.embed(f, elim_ring) * t)
    for g in pres.rees_ideal.generators:
        if not g.substitute(images, elim_ring).is_zero():
            raise AssertionError("Rees relation does not vanish under w -> f t")
    if pres.rees_dimension() != ring.nvars + 1:
        raise AssertionError("Rees quotient has unexpected dimension")
    if pres.gr_dimension() != ring.nvars:
        raise AssertionError("gr quotient has unexpected dimension")


def _verify_fiber_inside_rees(fp: FiberPresentation, pres: ReesPresentation):
    gb = pres.rees_ideal.groebner()
    for q in fp.relations.generators:
        lifted = fp.fiber_ring.embed(q, pres.big_ring)
        if not gb.contains(lifted):
            raise AssertionError("fiber relation missing from the Rees ideal")


# ---------------------------------------------------------------------------
# Cohen-Macaulay test by Artinian reduction colength

@dataclass
class CMReport:
    verdict: str               # "CM" | "NOT_CM"
    dimension: int
    multiplicity: int
    colengths: list
    seeds: list
    depth: DepthReport | None = None

    @property
    def is_cm(self) -> bool:
        return self.verdict == "CM"


def is_cm_graded(ring_and_ideal, trials: int = 3, base_seed="cm",
                 escalate_depth: bool = True, max_retries: int = 4) -> CMReport:
    """Colength-versus-multiplicity test with a random linear system of
    parameters; equality certifies CM, excess certifies NOT_CM."""
    ring, ideal = ring_and_ideal
    assert all(w == 1 for w in ring.weights), "CM test needs the standard grading"
    hs = ideal.hilbert_series()
    s = hs.dimension
    if s < 0:
        raise ValueError("CM test of the zero ring")
    e = hs.multiplicity
    if s == 0:
        total = sum(hs.coefficients(max((d for d, _ in hs.numerator), default=0)))
        return CMReport("CM", 0, e, [total], [])
    gb = ideal.groebner()
    colengths = []
    seeds = []
    for trial in range(trials):
        seed = f"{base_seed}:{trial}"
        rng = random.Random(seed)
        for attempt in range(max_retries):
            thetas = [ring.linear_form([ring.field.random_raw(rng)
                                        for _ in range(ring.nvars)])
                      for _ in range(s)]
            cut_gb = extend_basis(gb, thetas)
            cut_hs = series_of_basis(cut_gb)
            if cut_hs.dimension == 0:
                break
        else:
            raise RuntimeError("no linear system of parameters found")
        top = max((d for d, _ in cut_hs.numerator), default=0)
        colengths.append(sum(cut_hs.coefficients(top)))
        seeds.append(seed)
    if any(c < e for c in colengths):
        raise AssertionError("colength below multiplicity: parameter check failed")
    agree_cm = all(c == e for c in colengths)
    agree_not = all(c > e for c in colengths)
    if not (agree_cm or agree_not):
        raise AssertionError(f"unstable CM trials: colengths {colengths} vs e={e}")
    verdict = "CM" if agree_cm else "NOT_CM"
    depth_report = None
    if verdict == "NOT_CM" and escalate_depth:
        depth_report = graded_depth(gb, seed=f"{base_seed}:depth")
        if depth_report.exact and depth_report.value >= s:
            raise AssertionError("depth escalation contradicts NOT_CM verdict")
    return CMReport(verdict, s, e, colengths, seeds, depth_report)


# ---------------------------------------------------------------------------
# minimal reductions and reduction numbers

@dataclass
class ReductionData:
    reduction_generators: list
    seed: str
    reduction_number: int | None
    verified: bool
    spread: int
    degree: int
    piece_dims: list = dc_field(default_factory=list)

    @property
    def ideal(self) -> Ideal:
        ring = self.reduction_generators[0].ring
        return Ideal(ring, tuple(self.reduction_generators))


def random_forms_in_degree(ideal: Ideal, count: int, seed,
                           gens=None) -> list:
    """Seeded k-linear combinations of the minimal generators, with a
    linear-independence recheck."""
    gens = gens or ideal.minimal_generators()
    ring = ideal.ring
    field = ring.field
    rng = random.Random(str(seed))
    for _ in range(16):
        matrix = [[field.random_raw(rng) for _ in gens] for _ in range(count)]
        if rank_of_rows(matrix, field, len(gens)) == count:
            break
    else:
        raise RuntimeError("could not draw independent coefficient rows")
    forms = []
    for row in matrix:
        f = ring.zero()
        for c, g in zip(row, gens):
            f = f + g.scale(c)
        forms.append(f)
    return forms


def minimal_reduction(ideal: Ideal, seed="red:1", r_max: int = 12,
                      fp: FiberPresentation | None = None,
                      forms=None) -> ReductionData:
    """Candidate minimal reduction by random combinations (or the given
    forms), plus the least verified reduction number r with
    J I^r = I^{r+1}."""
    gens, d = equigenerated_data(ideal)
    fp = fp or fiber_presentation(ideal)
    spread = fp.analytic_spread()
    ring = ideal.ring
    if forms is None and spread == len(gens):
        return ReductionData(list(gens), str(seed), 0, True, spread, d)
    if forms is None:
        forms = random_forms_in_degree(ideal, spread, seed, gens)
    elif len(forms) != spread:
        raise ValueError("a minimal reduction needs analytic-spread many forms")
    powers = [[ring.one()], list(gens)]        # powers[k] = minimal gens of I^k
    dims = []
    for r in range(0, r_max + 1):
        while len(powers) <= r + 1:
            prev = Ideal(ring, tuple(a * b for a in powers[-1] for b in gens))
            powers.append(prev.minimal_generators())
        target = piece_span_of_polys(powers[r + 1], (r + 1) * d, ring)
        jpart = piece_span_of_polys([a * b for a in forms for b in powers[r]],
                                    (r + 1) * d, ring)
        dims.append((r, jpart.dim, target.dim))
        if jpart.dim == target.dim:
            return ReductionData(forms, str(seed), r, True, spread, d, dims)
    return ReductionData(forms, str(seed), None, False, spread, d, dims)


def fiber_multiplicity(ideal: Ideal, fp: FiberPresentation | None = None) -> int:
    fp = fp or fiber_presentation(ideal)
    return fp.multiplicity()


def free_basis_over_reduction(ideal: Ideal, red: ReductionData,
                              fp: FiberPresentation | None = None,
                              fiber_cm: CMReport | None = None):
    """Lifted module basis of the fiber over its Noether normalization.

    Returns [(n, B_n)] for 1 <= n <= r with B_n a lift of a basis of
    [I^n / J I^{n-1}]_{nd}; total rank 1 + sum |B_n| must equal the
    fiber multiplicity.  Refuses when the fiber is not CM.
    """
    fp = fp or fiber_presentation(ideal)
    if fiber_cm is None:
        fiber_cm = is_cm_graded((fp.fiber_ring, fp.relations))
    if not fiber_cm.is_cm:
        raise ValueError("fiber is not Cohen-Macaulay: no free basis")
    if red.reduction_number is None:
        raise ValueError("unverified reduction")
    from .graded import vector_to_poly
    ring = ideal.ring
    d = red.degree
    J_forms = red.reduction_generators
    out = []
    for n in range(1, red.reduction_number + 1):
        lower = ideal.power(n - 1).minimal_generators() if n > 1 else [ring.one()]
        jproducts = [a * b for a in J_forms for b in lower]
        jpiece = piece_span_of_polys(jproducts, n * d, ring)
        ipiece = graded_piece(ideal.power(n), n * d)
        lifts = []
        ech = jpiece.echelon
        for row in ipiece.echelon.rows:
            if ech.add(row):
                lifts.append(vector_to_poly(row, ipiece.ambient_monomials, ring))
        out.append((n, lifts))
    total = 1 + sum(len(b) for _, b in out)
    if total != fp.multiplicity():
        raise AssertionError(
            f"free-basis bookkeeping {total} != fiber multiplicity {fp.multiplicity()}")
    return out
