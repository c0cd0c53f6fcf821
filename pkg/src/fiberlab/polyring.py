"""Monomials, term orders, and exact multivariate polynomials.

Monomials are plain exponent tuples.  A Polynomial is a map from
monomial to nonzero raw coefficient (see fields.py) together with its
Ring.  Values are immutable by convention: nothing mutates ``terms``
after construction, so rings, orders and polynomials are safe to share
across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .fields import FieldSpec, FieldError

MAX_EXPONENT = 10**6


class RingError(ValueError):
    """Mixed-ring arithmetic or malformed ring construction."""


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# term orders

class TermOrder:
    """Total multiplicative monomial order with 1 minimal.

    ``key(m)`` returns a tuple that sorts ascending in the order;
    ``heapkey(m)`` is its negation, so a min-heap pops the largest
    monomial first.
    """

    name = "order"

    def key(self, m):
        raise NotImplementedError

    def heapkey(self, m):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        if len(a) != len(b):
            raise RingError("monomial length mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class GrevLex(TermOrder):
    name = "grevlex"

    def key(self, m):
        return (sum(m), tuple(-e for e in reversed(m)))

    def heapkey(self, m):
        return (-sum(m), tuple(reversed(m)))


class Lex(TermOrder):
    name = "lex"

    def key(self, m):
        return m

    def heapkey(self, m):
        return tuple(-e for e in m)


class Elimination(TermOrder):
    """Block order: grevlex on the first ``block_size`` variables, then
    grevlex on the rest.  Any monomial touching the first block beats
    every monomial in the tail variables.
    """

    def __init__(self, block_size: int):
        if block_size < 1:
            raise RingError("elimination block must have >= 1 variable")
        self.block_size = block_size
        self.name = f"elimination({block_size})"

    def key(self, m):
        k = self.block_size
        head, tail = m[:k], m[k:]
        return (sum(head), tuple(-e for e in reversed(head)),
                sum(tail), tuple(-e for e in reversed(tail)))

    def heapkey(self, m):
        k = self.block_size
        head, tail = m[:k], m[k:]
        return (-sum(head), tuple(reversed(head)),
                -sum(tail), tuple(reversed(tail)))


class WeightThen(TermOrder):
    """Weighted total degree first, ties broken by a base order."""

    def __init__(self, weights, base: TermOrder | None = None):
        self.weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise RingError("order weights must be positive")
        self.base = base or GrevLex()
        self.name = f"weight_then({list(self.weights)},{self.base.name})"

    def key(self, m):
        return (sum(w * e for w, e in zip(self.weights, m)), self.base.key(m))

    def heapkey(self, m):
        return (-sum(w * e for w, e in zip(self.weights, m)), self.base.heapkey(m))


GREVLEX = GrevLex()
LEX = Lex()


def compare_monomials(a, b, order: TermOrder) -> str:
    c = order.compare(a, b)
    return "LT" if c < 0 else ("GT" if c > 0 else "EQ")


# ---------------------------------------------------------------------------
# rings

class Ring:
    """Polynomial ring: field, ordered variable names, positive weights.

    Weights define the grading only; term orders are independent of
    them (block eliminations always compare raw exponents).
    """

    def __init__(self, field: FieldSpec, names, weights=None):
        names = tuple(names)
        if not names:
            raise RingError("ring needs at least one variable")
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names")
        self.field = field
        self.names = names
        self.nvars = len(names)
        self.weights = tuple(int(w) for w in (weights or (1,) * self.nvars))
        if len(self.weights) != self.nvars or any(w <= 0 for w in self.weights):
            raise RingError("need one positive weight per variable")
        self._index = {n: i for i, n in enumerate(names)}
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.field == other.field
                and self.names == other.names and self.weights == other.weights)

    def __hash__(self):
        return hash((self.field, self.names, self.weights))

    def __repr__(self):
        w = "" if all(w == 1 for w in self.weights) else f", weights={list(self.weights)}"
        return f"Ring({self.field}, {','.join(self.names)}{w})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"unknown variable {name!r}") from None

    def mono_degree(self, m) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    # -- polynomial constructors ------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self._zero_mono: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field.raw(c)
        return Polynomial(self, {self._zero_mono: c} if c else {})

    def variable(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {m: self.field.one})

    def monomial(self, expo, coeff=1) -> "Polynomial":
        c = self.field.raw(coeff)
        expo = tuple(int(e) for e in expo)
        if len(expo) != self.nvars or any(e < 0 for e in expo):
            raise RingError("bad exponent vector")
        return Polynomial(self, {expo: c} if c else {})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {m: c for m, c in terms.items() if c}
        return Polynomial(self, clean)

    def linear_form(self, coeffs) -> "Polynomial":
        """sum coeffs[i] * x_i."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = self.field.raw(c)
            if c:
                m = tuple(1 if j == i else 0 for j in range(self.nvars))
                terms[m] = c
        return Polynomial(self, terms)

    def monomials_of_degree(self, degree: int):
        """All exponent tuples of weighted degree ``degree``, grevlex-descending."""
        monos = _weighted_monomials(self.weights, degree)
        return sorted(monos, key=GREVLEX.key, reverse=True)

    def dim_of_degree(self, degree: int) -> int:
        return len(_weighted_monomials(self.weights, degree))

    # -- ring maps ----------------------------------------------------
    def embed(self, poly: "Polynomial", target: "Ring") -> "Polynomial":
        """Rename-preserving inclusion into a ring containing our variables."""
        idx = [target.index(n) for n in self.names]
        terms = {}
        for m, c in poly.terms.items():
            mm = [0] * target.nvars
            for i, e in enumerate(m):
                mm[idx[i]] = e
            terms[tuple(mm)] = target.field.raw(c)
        return target.from_terms(terms)

    def restrict(self, poly: "Polynomial", target: "Ring") -> "Polynomial":
        """Project onto a subring; variables outside it must not occur."""
        idx = []
        for i, n in enumerate(self.names):
            idx.append(target._index.get(n, -1))
        terms = {}
        for m, c in poly.terms.items():
            mm = [0] * target.nvars
            for i, e in enumerate(m):
                if e:
                    if idx[i] < 0:
                        raise RingError(f"variable {self.names[i]} not in target ring")
                    mm[idx[i]] = e
            terms[tuple(mm)] = target.field.raw(c)
        return target.from_terms(terms)


@lru_cache(maxsize=4096)
def _weighted_monomials(weights, degree):
    if degree < 0:
        return ()
    n = len(weights)

    def rec(i, left):
        if i == n - 1:
            if left % weights[i] == 0:
                yield (left // weights[i],)
            return
        w = weights[i]
        for e in range(left // w + 1):
            for rest in rec(i + 1, left - w * e):
                yield (e,) + rest

    return tuple(rec(0, degree))


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basics -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if self.ring != other.ring:
            raise RingError("mixed rings")

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def num_terms(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        self._check(other)
        f = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(res.get(m, 0), c) if m in res else c
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res)

    def __sub__(self, other):
        self._check(other)
        f = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = f.sub(res.get(m, f.zero), c)
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res)

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        f = self.ring.field
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        res = {}
        if f.characteristic:
            p = f.characteristic
            for m1, c1 in a.items():
                for m2, c2 in b.items():
                    mm = mono_mul(m1, m2)
                    v = (res.get(mm, 0) + c1 * c2) % p
                    if v:
                        res[mm] = v
                    else:
                        res.pop(mm, None)
        else:
            for m1, c1 in a.items():
                for m2, c2 in b.items():
                    mm = mono_mul(m1, m2)
                    v = res.get(mm, 0) + c1 * c2
                    if v:
                        res[mm] = v
                    else:
                        res.pop(mm, None)
        return Polynomial(self.ring, res)

    def scale(self, c):
        f = self.ring.field
        c = f.raw(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono, coeff):
        f = self.ring.field
        coeff = f.raw(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {mono_mul(m, mono): f.mul(v, coeff) for m, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- grading --------------------------------------------------------
    def degree(self) -> int:
        """Max weighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        md = self.ring.mono_degree
        return max(md(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        md = self.ring.mono_degree
        it = iter(self.terms)
        d = md(next(it))
        return all(md(m) == d for m in it)

    def homogeneous_degree(self) -> int:
        if not self.is_homogeneous():
            raise RingError("polynomial is not homogeneous")
        return self.degree()

    # -- leading data -----------------------------------------------------
    def leading_monomial(self, order: TermOrder):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        f = self.ring.field
        if lc == f.one:
            return self
        inv = f.inv(lc)
        return Polynomial(self.ring, {m: f.mul(c, inv) for m, c in self.terms.items()})

    def content_free(self) -> "Polynomial":
        """Over Q: primitive integer form with positive leading content."""
        if self.ring.field.characteristic or not self.terms:
            return self
        from math import gcd
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        if num == 0:
            return self
        scale = Fraction(den, num)
        return Polynomial(self.ring, {m: c * scale for m, c in self.terms.items()})

    def derivative(self, var_index: int) -> "Polynomial":
        f = self.ring.field
        terms = {}
        for m, c in self.terms.items():
            e = m[var_index]
            if e:
                mm = m[:var_index] + (e - 1,) + m[var_index + 1:]
                v = f.add(terms.get(mm, f.zero), f.mul(c, f.raw(e)))
                if v:
                    terms[mm] = v
                else:
                    terms.pop(mm, None)
        return Polynomial(self.ring, terms)

    # -- substitution ------------------------------------------------------
    def substitute(self, images, target: Ring | None = None) -> "Polynomial":
        """Evaluate at ``images[i]`` for variable i (polynomials in ``target``)."""
        tgt = target or (images[0].ring if images else self.ring)
        if len(images) != self.ring.nvars:
            raise RingError("need one image per variable")
        pow_cache = [{} for _ in range(self.ring.nvars)]

        def power(i, e):
            cache = pow_cache[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        result = tgt.zero()
        for m, c in self.terms.items():
            part = tgt.constant(c)
            for i, e in enumerate(m):
                if e:
                    part = part * power(i, e)
            result = result + part
        return result

    # -- printing -----------------------------------------------------------
    def __repr__(self):
        return poly_to_string(self)


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def poly_to_string(p: Polynomial) -> str:
    """Canonical text form, grevlex-descending; parses back via parse.py."""
    if not p.terms:
        return "0"
    names = p.ring.names
    parts = []
    for m in sorted(p.terms, key=GREVLEX.key, reverse=True):
        c = p.terms[m]
        factors = []
        for n, e in zip(names, m):
            if e == 1:
                factors.append(n)
            elif e > 1:
                factors.append(f"{n}^{e}")
        body = "*".join(factors)
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        if not body:
            text = f"{c}"
        elif c == 1:
            text = body
        elif c == -1:
            text = f"-{body}"
        else:
            text = f"{c}*{body}"
        parts.append(text)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out
