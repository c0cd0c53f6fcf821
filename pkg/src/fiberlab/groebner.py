"""Buchberger engine: normal forms, reduced bases, block elimination.

Pair management follows Gebauer-Moeller (criteria M, F and the coprime
criterion, plus pruning of old pairs), with the normal selection
strategy: minimal lcm degree, ties broken by the lcm monomial and then
by insertion index, so runs are deterministic for a fixed input.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .polyring import (GREVLEX, Elimination, Polynomial, Ring, RingError,
                       TermOrder, mono_coprime, mono_div, mono_lcm, mono_mul)


def _support_mask(m) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


class _Reducers:
    """Leading-term indexed view of the current basis for fast division.

    A support bitmask per leading term rejects most divisibility
    candidates with one integer operation.
    """

    __slots__ = ("lts", "ltdegs", "masks", "tails", "alive")

    def __init__(self):
        self.lts = []
        self.ltdegs = []
        self.masks = []
        self.tails = []     # list[(mono, coeff)] of the non-leading terms, monic
        self.alive = []

    def append(self, lt, tail):
        self.lts.append(lt)
        self.ltdegs.append(sum(lt))
        self.masks.append(_support_mask(lt))
        self.tails.append(tail)
        self.alive.append(True)

    def find(self, m, mdeg, mmask):
        lts = self.lts
        ltdegs = self.ltdegs
        masks = self.masks
        alive = self.alive
        for i in range(len(lts)):
            if not alive[i] or ltdegs[i] > mdeg or (masks[i] & ~mmask):
                continue
            lt = lts[i]
            for a, b in zip(lt, m):
                if a > b:
                    break
            else:
                return i
        return -1


def _poly_to_parts(p: Polynomial, order: TermOrder):
    """(leading monomial, monic tail items) of a nonzero polynomial."""
    lt = p.leading_monomial(order)
    f = p.ring.field
    lc = p.terms[lt]
    if lc == f.one:
        tail = [(m, c) for m, c in p.terms.items() if m != lt]
    else:
        inv = f.inv(lc)
        tail = [(m, f.mul(c, inv)) for m, c in p.terms.items() if m != lt]
    return lt, tail


def _nf_terms(terms: dict, red: _Reducers, order: TermOrder, field):
    """Normal form of a coefficient map; returns a new map."""
    heapkey = order.heapkey
    cur = dict(terms)
    heap = [(heapkey(m), m) for m in cur]
    heapq.heapify(heap)
    rem = {}
    p = field.characteristic
    if p:
        while heap:
            m = heapq.heappop(heap)[1]
            c = cur.pop(m, 0)
            if not c:
                continue
            i = red.find(m, sum(m), _support_mask(m))
            if i < 0:
                rem[m] = c
                continue
            q = mono_div(m, red.lts[i])
            for tm, tc in red.tails[i]:
                mm = mono_mul(q, tm)
                old = cur.get(mm)
                if old is None:
                    v = (-c * tc) % p
                    if v:
                        cur[mm] = v
                        heapq.heappush(heap, (heapkey(mm), mm))
                else:
                    v = (old - c * tc) % p
                    if v:
                        cur[mm] = v
                    else:
                        del cur[mm]
    else:
        while heap:
            m = heapq.heappop(heap)[1]
            c = cur.pop(m, None)
            if not c:
                continue
            i = red.find(m, sum(m), _support_mask(m))
            if i < 0:
                rem[m] = c
                continue
            q = mono_div(m, red.lts[i])
            for tm, tc in red.tails[i]:
                mm = mono_mul(q, tm)
                old = cur.get(mm)
                if old is None:
                    v = -c * tc
                    if v:
                        cur[mm] = v
                        heapq.heappush(heap, (heapkey(mm), mm))
                else:
                    v = old - c * tc
                    if v:
                        cur[mm] = v
                    else:
                        del cur[mm]
    return rem


def _strip_content(terms: dict, field):
    """Scale a Q-coefficient map to primitive integer form (unit change)."""
    if field.characteristic or not terms:
        return terms
    from math import gcd
    den = 1
    for c in terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    if num in (0, 1) and den == 1:
        return terms
    from fractions import Fraction
    scale = Fraction(den, num)
    return {m: c * scale for m, c in terms.items()}


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by leading term.

    ``degree_bound`` is None for a complete basis; otherwise the
    elements only present the ideal in weighted degrees <= the bound.
    """

    ring: Ring
    order: TermOrder
    elements: tuple
    source_generators: tuple
    cofactors: tuple | None = dc_field(default=None, compare=False)
    degree_bound: int | None = None

    @property
    def leading_monomials(self):
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def same_ideal(self, other: "GroebnerBasis") -> bool:
        if self.order == other.order:
            return self.elements == other.elements
        return (all(other.contains(g) for g in self.elements)
                and all(self.contains(g) for g in other.elements))


def _make_reducers(polys, order):
    red = _Reducers()
    for g in polys:
        lt, tail = _poly_to_parts(g, order)
        red.append(lt, tail)
    return red


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo gb; zero iff f lies in the ideal."""
    if f.ring != gb.ring:
        raise RingError("polynomial not in the basis ring")
    if not f.terms:
        return f
    red = _make_reducers(gb.elements, gb.order)
    rem = _nf_terms(f.terms, red, gb.order, f.ring.field)
    return Polynomial(f.ring, rem)


def buchberger(generators, order: TermOrder = GREVLEX, *,
               track_cofactors: bool = False,
               groebner_prefix: int = 0,
               degree_bound: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    ``groebner_prefix=k`` promises that the first k generators already
    form a Groebner basis for this order, so pairs among them are
    skipped.

    ``degree_bound=D`` truncates the run: only S-pairs of weighted lcm
    degree <= D are processed.  Inputs must be homogeneous in the ring
    weights (pair degrees are then nondecreasing, so the truncation is a
    basis through degree D).  The result carries ``degree_bound`` and
    must not be treated as a full basis.
    """
    gens = [g for g in generators if g is not None and not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise RingError("generators live in different rings")
    if degree_bound is not None:
        if not all(g.is_homogeneous() for g in gens):
            raise RingError("degree-truncated runs need homogeneous input")
    field = ring.field
    if track_cofactors:
        return _buchberger_tracked(gens, ring, order)

    key = order.key
    if groebner_prefix:
        work = gens
    else:
        work = sorted(gens, key=lambda g: key(g.leading_monomial(order)))
    wdeg = ring.mono_degree     # selection by graded degree: for inputs
    red = _Reducers()           # homogeneous in the ring weights this is
    polys = []                  # true degree-by-degree processing
    pairs = []                  # heap of (lcm degree, lcm, i, j)

    def push_element(terms):
        terms = _strip_content(terms, field)
        g = Polynomial(ring, terms).monic(order)
        t = len(polys)
        lt_t, tail_t = _poly_to_parts(g, order)
        # Gebauer-Moeller update of the pair set.
        cand = []
        if t >= groebner_prefix:
            for i in range(t):
                if not red.alive[i]:
                    continue
                cand.append((i, mono_lcm(red.lts[i], lt_t)))
        cand.sort(key=lambda e: (sum(e[1]), e[1], e[0]))
        # criterion M: drop a pair whose lcm is properly divided by another's
        kept_m = []
        for i, lcm_i in cand:
            dominated = False
            for j, lcm_j in cand:
                if lcm_j != lcm_i and all(a <= b for a, b in zip(lcm_j, lcm_i)):
                    dominated = True
                    break
            if not dominated:
                kept_m.append((i, lcm_i))
        # criterion F: one pair per lcm value; a coprime member kills its group
        new_pairs = []
        seen = {}
        for i, lcm_i in kept_m:
            seen.setdefault(lcm_i, []).append(i)
        for lcm_i in sorted(seen, key=lambda m: (sum(m), m)):
            group = seen[lcm_i]
            if any(mono_coprime(red.lts[i], lt_t) for i in group):
                continue
            new_pairs.append((wdeg(lcm_i), lcm_i, group[0], t))
        # criterion B: prune old pairs via the new leading term
        survivors = []
        for entry in pairs:
            _, lcm_ij, i, j = entry
            if (all(a <= b for a, b in zip(lt_t, lcm_ij))
                    and mono_lcm(red.lts[i], lt_t) != lcm_ij
                    and mono_lcm(red.lts[j], lt_t) != lcm_ij):
                continue
            survivors.append(entry)
        pairs.clear()
        pairs.extend(survivors)
        pairs.extend(new_pairs)
        heapq.heapify(pairs)
        # retire basis elements whose leading term became redundant
        for i in range(t):
            if red.alive[i] and all(a <= b for a, b in zip(lt_t, red.lts[i])):
                red.alive[i] = False
        red.append(lt_t, tail_t)
        polys.append(g)

    for g in work:
        rem = _nf_terms(g.terms, red, order, field)
        if rem:
            push_element(rem)

    while pairs:
        top, lcm_ij, i, j = heapq.heappop(pairs)
        if degree_bound is not None and top > degree_bound:
            break
        fi, fj = polys[i], polys[j]
        # s-polynomial of two monic elements
        qi = mono_div(lcm_ij, red.lts[i])
        qj = mono_div(lcm_ij, red.lts[j])
        s = {}
        for m, c in fi.terms.items():
            s[mono_mul(m, qi)] = c
        for m, c in fj.terms.items():
            mm = mono_mul(m, qj)
            v = field.sub(s.get(mm, field.zero), c)
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        if not s:
            continue
        rem = _nf_terms(s, red, order, field)
        if rem:
            push_element(rem)

    elements = _final_reduce(polys, red, order, field, ring)
    gb = GroebnerBasis(ring, order, tuple(elements), tuple(gens),
                       degree_bound=degree_bound)
    for g in gens:
        if not gb.contains(g):
            raise AssertionError("source generator does not reduce to zero")
    return gb


def _final_reduce(polys, red, order, field, ring):
    """Interreduce the live basis elements into the reduced basis."""
    live = [i for i in range(len(polys)) if red.alive[i]]
    out = []
    for i in live:
        others = _Reducers()
        for j in live:
            if j != i:
                others.append(red.lts[j], red.tails[j])
        rem = _nf_terms(polys[i].terms, others, order, field)
        if rem:
            out.append(Polynomial(ring, rem).monic(order))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


# ---------------------------------------------------------------------------
# cofactor-tracking variant (small inputs; certifies ideal membership)

def _buchberger_tracked(gens, ring, order):
    field = ring.field

    def nf_tracked(poly, cof, basis):
        # full reduction keeping poly = sum cof[k] * gens[k] + (reducible part)
        rem = ring.zero()
        cur = poly
        changed = True
        while cur.terms:
            lt_m = cur.leading_monomial(order)
            c = cur.terms[lt_m]
            hit = None
            for g, gcof in basis:
                glt = g.leading_monomial(order)
                if all(a <= b for a, b in zip(glt, lt_m)):
                    hit = (g, gcof, glt)
                    break
            if hit is None:
                t = Polynomial(ring, {lt_m: c})
                rem = rem + t
                cur = cur - t
                continue
            g, gcof, glt = hit
            q = mono_div(lt_m, glt)
            factor = field.div(c, g.terms[glt])
            cur = cur - g.mul_term(q, factor)
            for k, w in gcof.items():
                cof[k] = cof.get(k, ring.zero()) - w.mul_term(q, factor)
        return rem, cof

    basis = []
    for k, g in enumerate(gens):
        rem, cof = nf_tracked(g, {k: ring.one()}, basis)
        if rem.terms:
            lc = rem.leading_coefficient(order)
            inv = field.inv(lc)
            basis.append((rem.scale(inv), {k2: w.scale(inv) for k2, w in cof.items()}))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        gi, ci = basis[i]
        gj, cj = basis[j]
        li = gi.leading_monomial(order)
        lj = gj.leading_monomial(order)
        lcm_ij = mono_lcm(li, lj)
        s = gi.mul_term(mono_div(lcm_ij, li), field.one) - \
            gj.mul_term(mono_div(lcm_ij, lj), field.one)
        cof = {}
        for k, w in ci.items():
            cof[k] = cof.get(k, ring.zero()) + w.mul_term(mono_div(lcm_ij, li), field.one)
        for k, w in cj.items():
            cof[k] = cof.get(k, ring.zero()) - w.mul_term(mono_div(lcm_ij, lj), field.one)
        rem, cof = nf_tracked(s, cof, basis)
        if rem.terms:
            lc = rem.leading_coefficient(order)
            inv = field.inv(lc)
            basis.append((rem.scale(inv), {k: w.scale(inv) for k, w in cof.items()}))
            t = len(basis) - 1
            pairs.extend((i2, t) for i2 in range(t))

    # interreduce, keeping the certificates in sync
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            gi, ci = basis[i]
            if gi.is_zero():
                continue
            others = [(g, c) for k, (g, c) in enumerate(basis) if k != i and not g.is_zero()]
            rem, cof = nf_tracked(gi, dict(ci), others)
            if rem != gi:
                changed = True
            if rem.terms:
                lc = rem.leading_coefficient(order)
                inv = field.inv(lc)
                basis[i] = (rem.scale(inv), {k: w.scale(inv) for k, w in cof.items()})
            else:
                basis[i] = (ring.zero(), {})
    final = [(g, c) for g, c in basis if not g.is_zero()]
    final.sort(key=lambda e: order.key(e[0].leading_monomial(order)))
    elements = tuple(g for g, _ in final)
    cofactors = tuple({k: w for k, w in c.items() if not w.is_zero()} for _, c in final)
    gb = GroebnerBasis(ring, order, elements, tuple(gens), cofactors)
    for g, cof in zip(gb.elements, gb.cofactors):
        check = ring.zero()
        for k, w in cof.items():
            check = check + w * gens[k]
        if check != g:
            raise AssertionError("cofactor certificate failed")
    return gb


def extend_basis(gb: GroebnerBasis, extra) -> GroebnerBasis:
    """Basis of ideal(gb) + ideal(extra), reusing gb's pair bookkeeping."""
    extra = tuple(g for g in extra if not g.is_zero())
    if not extra:
        return gb
    if not gb.elements:
        return buchberger(extra, gb.order)
    return buchberger(gb.elements + extra, gb.order,
                      groebner_prefix=len(gb.elements))


# ---------------------------------------------------------------------------
# elimination and saturation

def eliminate(gens, drop_first_k: int, order_tail: TermOrder | None = None):
    """Generators of ideal(gens) intersected with the subring that omits
    the first ``drop_first_k`` variables.

    Returns the Groebner basis elements free of the dropped variables,
    still expressed in the full ring; they form a basis of the
    elimination ideal for the induced tail order (grevlex by default).
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    k = drop_first_k
    if k < 0 or k >= ring.nvars:
        raise RingError("elimination block out of range")
    if order_tail is not None and not isinstance(order_tail, GREVLEX.__class__):
        raise RingError("only a grevlex tail order is supported")
    gb = buchberger(gens, Elimination(k))
    kept = [g for g in gb.elements
            if all(all(e == 0 for e in m[:k]) for m in g.terms)]
    return kept


def saturate_by_last_variable(gb: GroebnerBasis) -> GroebnerBasis:
    """(J : x_n^inf) from a grevlex basis of homogeneous J.

    With the last variable smallest in grevlex, dividing each basis
    element by its maximal x_n power generates the saturation; the
    result is re-reduced into a basis.
    """
    if not isinstance(gb.order, GREVLEX.__class__):
        raise RingError("saturation shortcut needs a grevlex basis")
    ring = gb.ring
    n = ring.nvars
    divided = []
    for g in gb.elements:
        a = min(m[n - 1] for m in g.terms)
        if a == 0:
            divided.append(g)
        else:
            divided.append(Polynomial(ring, {m[:n - 1] + (m[n - 1] - a,): c
                                             for m, c in g.terms.items()}))
    return buchberger(divided, gb.order)
