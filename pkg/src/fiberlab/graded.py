"""Degreewise exact linear algebra on ideals and free-module maps.

Graded pieces are represented by canonical reduced row-echelon bases
over the monomial basis of the ambient degree, so dimensions, piece
memberships and complements are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import Echelon, nullspace, rank_of_rows
from .polyring import GREVLEX, Polynomial, Ring, mono_mul


@lru_cache(maxsize=4096)
def degree_basis(ring: Ring, degree: int):
    """(monomials sorted grevlex-descending, column index map)."""
    monos = tuple(ring.monomials_of_degree(degree))
    index = {m: i for i, m in enumerate(monos)}
    return monos, index


def poly_to_vector(p: Polynomial, index, width):
    if p.ring.field.characteristic:
        vec = np.zeros(width, dtype=np.int64)
        for m, c in p.terms.items():
            vec[index[m]] = c
        return vec
    vec = [p.ring.field.zero] * width
    for m, c in p.terms.items():
        vec[index[m]] = c
    return vec


def vector_to_poly(vec, monos, ring: Ring) -> Polynomial:
    field = ring.field
    terms = {}
    for m, v in zip(monos, vec):
        c = field.raw(int(v)) if field.characteristic else v
        if c:
            terms[m] = c
    return Polynomial(ring, terms)


@dataclass
class GradedPieceBasis:
    """Echelonized basis of the degree-d piece of a homogeneous ideal."""

    degree: int
    ambient_monomials: tuple
    echelon: Echelon

    @property
    def dim(self) -> int:
        return self.echelon.rank

    @property
    def coords(self):
        return self.echelon.basis_rows()

    def contains(self, p: Polynomial) -> bool:
        vec = poly_to_vector(p, {m: i for i, m in enumerate(self.ambient_monomials)},
                             len(self.ambient_monomials))
        return self.echelon.contains(vec)

    def basis_polynomials(self, ring: Ring):
        return [vector_to_poly(row, self.ambient_monomials, ring)
                for row in self.echelon.rows]


def spanning_rows(gens, degree: int, ring: Ring, index, width):
    """Vectors of all monomial multiples m*g landing in the given degree."""
    rows = []
    for g in gens:
        d = g.homogeneous_degree()
        if d > degree:
            continue
        for m in ring.monomials_of_degree(degree - d):
            rows.append(poly_to_vector(g.mul_term(m, ring.field.one), index, width))
    return rows


def graded_piece(ideal, degree: int) -> GradedPieceBasis:
    ring = ideal.ring
    monos, index = degree_basis(ring, degree)
    ech = Echelon(ring.field, len(monos))
    for row in spanning_rows(ideal.generators, degree, ring, index, len(monos)):
        ech.add(row)
    return GradedPieceBasis(degree, monos, ech)


def piece_span_of_polys(polys, degree: int, ring: Ring) -> GradedPieceBasis:
    monos, index = degree_basis(ring, degree)
    ech = Echelon(ring.field, len(monos))
    for row in spanning_rows(polys, degree, ring, index, len(monos)):
        ech.add(row)
    return GradedPieceBasis(degree, monos, ech)


def joint_rank(a: GradedPieceBasis, b: GradedPieceBasis) -> int:
    """dim of the sum of two pieces of the same degree."""
    assert a.degree == b.degree
    ech = Echelon(a.echelon.field, len(a.ambient_monomials))
    for row in a.echelon.rows:
        ech.add(row)
    for row in b.echelon.rows:
        ech.add(row)
    return ech.rank


def piece_intersection_dim(a: GradedPieceBasis, b: GradedPieceBasis) -> int:
    return a.dim + b.dim - joint_rank(a, b)


def piece_intersection(a: GradedPieceBasis, b: GradedPieceBasis, ring: Ring):
    """Basis polynomials of the intersection of two graded pieces.

    Kernel method: vectors (u, w) with u in A-coords, w in B-coords and
    u*A = w*B; the intersection is the image of the u-part.
    """
    field = ring.field
    width = len(a.ambient_monomials)
    rows_a = a.echelon.rows
    rows_b = b.echelon.rows
    # columns: coefficients over rows_a then rows_b; constraint u*A - w*B = 0
    mat = []
    for j in range(width):
        col = [row[j] for row in rows_a] + [field.neg(row[j] if not field.characteristic
                                                       else int(row[j])) for row in rows_b]
        mat.append(col)
    combos = nullspace(mat, field, len(rows_a) + len(rows_b))
    out = []
    ech = Echelon(field, width)
    for v in combos:
        u = v[:len(rows_a)]
        if field.characteristic:
            vec = np.zeros(width, dtype=np.int64)
            for c, row in zip(u, rows_a):
                if c:
                    vec = (vec + int(c) * row) % field.characteristic
        else:
            vec = [field.zero] * width
            for c, row in zip(u, rows_a):
                if c:
                    vec = [x + c * y for x, y in zip(vec, row)]
        if ech.add(vec):
            out.append(vector_to_poly(vec, a.ambient_monomials, ring))
    return out


def minimal_generators(ideal):
    """Minimal homogeneous generating set, degree by degree.

    New generators in degree e span the complement of R_1 * [I]_{e-1}
    inside the degree-e part generated so far.
    """
    ring = ideal.ring
    gens = [g for g in ideal.generators if not g.is_zero()]
    if not gens:
        return []
    if not all(g.is_homogeneous() for g in gens):
        raise ValueError("minimal generators need a homogeneous ideal")
    by_degree = {}
    for g in gens:
        by_degree.setdefault(g.homogeneous_degree(), []).append(g)
    chosen = []
    for e in sorted(by_degree):
        monos, index = degree_basis(ring, e)
        ech = Echelon(ring.field, len(monos))
        for row in spanning_rows(chosen, e, ring, index, len(monos)):
            ech.add(row)
        for g in by_degree[e]:
            if ech.add(poly_to_vector(g, index, len(monos))):
                chosen.append(g)
    return chosen


# ---------------------------------------------------------------------------
# syzygies of a tuple of free-module elements, degree by degree

@dataclass
class PresentationMatrix:
    """Minimal presentation: rows = generators, columns = first syzygies."""

    matrix: list            # matrix[i][k]: Polynomial entry (row i, column k)
    row_degrees: list
    column_degrees: list

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.column_degrees)

    def column(self, k):
        return [self.matrix[i][k] for i in range(self.nrows)]


def syzygies_degreewise(columns, codomain_degrees, ring: Ring, max_degree: int):
    """Minimal generating syzygies among module elements, up to max_degree.

    ``columns[k]`` is a vector of polynomials over a free module whose
    generator degrees are ``codomain_degrees``; each column must be
    homogeneous (entry i has degree col_degree - codomain_degrees[i]).
    Returns (list of syzygy vectors, their degrees).
    """
    field = ring.field
    col_degrees = []
    for col in columns:
        degs = {codomain_degrees[i] + entry.homogeneous_degree()
                for i, entry in enumerate(col) if not entry.is_zero()}
        if len(degs) != 1:
            raise ValueError("column is not homogeneous")
        col_degrees.append(degs.pop())

    syzygies = []
    syzygy_degrees = []
    min_e = min(col_degrees, default=0) + 1
    for e in range(min_e, max_degree + 1):
        # domain coordinates: (column k, monomial of degree e - col_degrees[k])
        dom = []
        for k, dk in enumerate(col_degrees):
            if e - dk < 0:
                continue
            for m in ring.monomials_of_degree(e - dk):
                dom.append((k, m))
        if not dom:
            continue
        # codomain coordinates: (row i, monomial of degree e - codomain_degrees[i])
        cod_index = {}
        for i, di in enumerate(codomain_degrees):
            if e - di < 0:
                continue
            for m in ring.monomials_of_degree(e - di):
                cod_index[(i, m)] = len(cod_index)
        width = len(cod_index)
        rows = []
        for k, m in dom:
            vec = (np.zeros(width, dtype=np.int64) if field.characteristic
                   else [field.zero] * width)
            for i, entry in enumerate(columns[k]):
                for em, ec in entry.terms.items():
                    j = cod_index[(i, mono_mul(em, m))]
                    if field.characteristic:
                        vec[j] = (vec[j] + int(ec)) % field.characteristic
                    else:
                        vec[j] = vec[j] + ec
            rows.append(vec)
        # left kernel of the map: transpose and solve
        if field.characteristic:
            mat = np.array(rows, dtype=np.int64).T if rows else np.zeros((0, 0))
            kernel = nullspace(list(mat), field, len(dom))
        else:
            mat = list(map(list, zip(*rows))) if rows else []
            kernel = nullspace(mat, field, len(dom))
        if not kernel:
            continue
        # known syzygies generate a sub; take the complement inside the kernel
        known = Echelon(field, len(dom))
        dom_index = {t: i for i, t in enumerate(dom)}
        for s, ds in zip(syzygies, syzygy_degrees):
            if e - ds < 0:
                continue
            for m in ring.monomials_of_degree(e - ds):
                vec = (np.zeros(len(dom), dtype=np.int64) if field.characteristic
                       else [field.zero] * len(dom))
                for k, entry in enumerate(s):
                    for em, ec in entry.terms.items():
                        j = dom_index[(k, mono_mul(em, m))]
                        if field.characteristic:
                            vec[j] = (vec[j] + int(ec)) % field.characteristic
                        else:
                            vec[j] = vec[j] + ec
                known.add(vec)
        for v in kernel:
            if known.add(v):
                # materialize the new syzygy as a polynomial vector
                parts = [dict() for _ in columns]
                for (k, m), c in zip(dom, v):
                    c = field.raw(int(c)) if field.characteristic else c
                    if c:
                        parts[k][m] = field.add(parts[k].get(m, field.zero), c) \
                            if m in parts[k] else c
                syzygies.append([Polynomial(ring, t) for t in parts])
                syzygy_degrees.append(e)
    return syzygies, syzygy_degrees


def minors_ideal(pres: PresentationMatrix, size: int, ideal) -> "object":
    """Ideal of size x size minors of the presentation matrix."""
    from itertools import combinations

    from .ideals import Ideal
    from .parse import determinant
    ring = ideal.ring
    if size <= 0:
        return Ideal(ring, (ring.one(),))
    if size > min(pres.nrows, pres.ncols):
        return Ideal(ring, ())
    gens = []
    for rsel in combinations(range(pres.nrows), size):
        for csel in combinations(range(pres.ncols), size):
            sub = [[pres.matrix[i][k] for k in csel] for i in rsel]
            gens.append(determinant(sub, ring))
    gens = [g for g in gens if not g.is_zero()]
    return Ideal(ring, tuple(gens))


def linear_rank(pres: PresentationMatrix, field, seeds=(11, 12, 13, 14, 15)) -> int:
    """Generic rank of the linear-column submatrix, by random evaluation.

    Five independent evaluations; the maximum observed rank is the
    answer with failure probability at most (degree/|field|) per trial.
    """
    d = pres.row_degrees[0]
    linear_cols = [k for k, cd in enumerate(pres.column_degrees) if cd == d + 1]
    if not linear_cols:
        return 0
    import random
    best = 0
    ring0 = pres.matrix[0][linear_cols[0]].ring if pres.nrows else None
    for seed in seeds:
        rng = random.Random(f"linear-rank:{seed}")
        point = [field.random_raw(rng) for _ in range(ring0.nvars)]
        rows = []
        for i in range(pres.nrows):
            row = []
            for k in linear_cols:
                row.append(_evaluate(pres.matrix[i][k], point, field))
            rows.append(row)
        best = max(best, rank_of_rows(rows, field, len(linear_cols)))
    return best


def _evaluate(p: Polynomial, point, field):
    total = field.zero
    for m, c in p.terms.items():
        v = c
        for e, x in zip(m, point):
            for _ in range(e):
                v = field.mul(v, x)
        total = field.add(total, v)
    return total
