"""Exact arithmetic substrate: rationals, multivariate polynomials, polynomial
matrices, ideals, Groebner bases, and rank computations.

Everything is exact over Q; floating point is forbidden in this module.  All
values are immutable after construction and every operation is a pure
function, so values may be shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernel
from .errors import (
    ArityMismatchError,
    DimensionMismatchError,
    PolyParseError,
    RingMismatchError,
)

# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

ORDERS = ("grevlex", "grlex", "lex")


def monomial_key(order: str):
    """Sort key on exponent tuples; larger key = larger monomial."""
    if order == "grevlex":
        # total degree, ties by rightmost-nonzero-negative: encode as the
        # reversed, negated exponent tuple compared lexicographically.
        def key(e):
            return (sum(e), tuple(-x for x in reversed(e)))

    elif order == "grlex":
        def key(e):
            return (sum(e), e)

    elif order == "lex":
        def key(e):
            return e

    else:
        raise ValueError(f"unknown monomial order {order!r}")
    return key


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    """Q[variables]; the shared descriptor carried by every Poly."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: Fraction(1)})

    def const(self, c) -> "Poly":
        c = Fraction(c)
        if not c:
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Poly":
        i = self.variables.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(v) for v in self.variables)

    def __str__(self):
        return "Q[" + ",".join(self.variables) + "]"


def ring(*variables: str) -> PolyRing:
    return PolyRing(tuple(variables))


class Poly:
    """Sparse multivariate polynomial over Q.

    Terms are stored as a dict from exponent tuples to nonzero Fractions;
    instances are immutable by convention (the dict is never mutated after
    construction).
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    # -- construction helpers

    @staticmethod
    def convert(x, ring: PolyRing) -> "Poly":
        if isinstance(x, Poly):
            if x.ring != ring:
                raise RingMismatchError(f"{x.ring} vs {ring}")
            return x
        return ring.const(x)

    # -- inspection

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Canonically ordered (exponent, coefficient) pairs (grevlex desc)."""
        key = monomial_key("grevlex")
        return tuple(
            (e, self._terms[e])
            for e in sorted(self._terms, key=key, reverse=True)
        )

    def term_dict(self) -> dict:
        return dict(self._terms)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading_exponent(self, order: str = "grevlex"):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=monomial_key(order))

    def leading_coefficient(self, order: str = "grevlex") -> Fraction:
        return self._terms[self.leading_exponent(order)]

    def constant_value(self):
        """The rational value if the polynomial is constant, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if not any(e):
                return c
        return None

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly(self.ring, _kernel.terms_add(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly(self.ring, _kernel.terms_sub(self._terms, other._terms))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(self.ring, _kernel.terms_neg(self._terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.ring, _kernel.terms_scale(self._terms, Fraction(other)))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly(self.ring, _kernel.terms_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- calculus / evaluation

    def diff(self, var) -> "Poly":
        """Partial derivative; var by name or index."""
        i = var if isinstance(var, int) else self.ring.variables.index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly(self.ring, out)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.ring.nvars:
            raise ArityMismatchError(
                f"point of arity {len(point)} in {self.ring}"
            )
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring morphism: variable i maps to images[i] (all in one ring)."""
        if len(images) != self.ring.nvars:
            raise ArityMismatchError("one image per variable required")
        target = images[0].ring if images else self.ring
        for im in images:
            if im.ring != target:
                raise RingMismatchError("images live in different rings")
        # cache powers of each image as needed
        powers = [{0: target.one()} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        total = target.zero()
        for e, c in self._terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    # -- printing

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self!s})"

    def sort_tuple(self):
        """Canonical total-order key for deterministic output listings."""
        return tuple(
            (e, c) for e, c in self.terms()
        )


# ---------------------------------------------------------------------------
# text grammar: `3/2*x^2*y - z + 1`
# ---------------------------------------------------------------------------


def format_poly(p: Poly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for e, c in p.terms():
        mono = "*".join(
            v if k == 1 else f"{v}^{k}"
            for v, k in zip(p.ring.variables, e)
            if k
        )
        coeff = str(abs(c))
        if mono:
            body = mono if abs(c) == 1 else f"{coeff}*{mono}"
        else:
            body = coeff
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class _Tokens:
    """Minimal tokenizer for the polynomial grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("num", text[i:j], i))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j], i))
                i = j
            elif ch in "+-*/^()":
                self.toks.append((ch, ch, i))
                i += 1
            else:
                raise PolyParseError(f"unexpected character {ch!r}", i)
        self.idx = 0

    def peek(self):
        if self.idx < len(self.toks):
            return self.toks[self.idx]
        return ("end", "", len(self.text))

    def next(self):
        t = self.peek()
        self.idx += 1
        return t


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse the plain-text polynomial grammar into a Poly.

    Grammar: sums/differences of terms; a term is an optional rational
    coefficient (`p/q`) and variable powers (`x^2`), with `*` optional
    between factors.  Parenthesized subexpressions are accepted.
    """
    toks = _Tokens(text)
    p = _parse_sum(toks, ring)
    kind, val, pos = toks.peek()
    if kind != "end":
        raise PolyParseError(f"unexpected token {val!r}", pos)
    return p


def _parse_sum(toks, ring):
    sign = 1
    kind, _, _ = toks.peek()
    if kind in "+-":
        toks.next()
        sign = -1 if kind == "-" else 1
    total = _parse_product(toks, ring) * sign
    while True:
        kind, _, _ = toks.peek()
        if kind == "+":
            toks.next()
            total = total + _parse_product(toks, ring)
        elif kind == "-":
            toks.next()
            total = total - _parse_product(toks, ring)
        else:
            return total


def _parse_product(toks, ring):
    result = _parse_factor(toks, ring)
    while True:
        kind, _, _ = toks.peek()
        if kind == "*":
            toks.next()
            result = result * _parse_factor(toks, ring)
        elif kind in ("name", "num", "("):
            # implicit multiplication: `3x`, `x (y+1)`
            result = result * _parse_factor(toks, ring)
        else:
            return result


def _parse_factor(toks, ring):
    kind, val, pos = toks.next()
    if kind == "num":
        num = int(val)
        k2, _, _ = toks.peek()
        if k2 == "/":
            toks.next()
            k3, v3, p3 = toks.next()
            if k3 != "num":
                raise PolyParseError("expected denominator", p3)
            base = ring.const(Fraction(num, int(v3)))
        else:
            base = ring.const(num)
    elif kind == "name":
        if val not in ring.variables:
            raise PolyParseError(f"unknown variable {val!r}", pos)
        base = ring.var(val)
    elif kind == "(":
        base = _parse_sum(toks, ring)
        k2, v2, p2 = toks.next()
        if k2 != ")":
            raise PolyParseError(f"expected ')', got {v2!r}", p2)
    else:
        raise PolyParseError(f"unexpected token {val!r}", pos)

    kind, _, _ = toks.peek()
    if kind == "^":
        toks.next()
        k2, v2, p2 = toks.next()
        if k2 != "num":
            raise PolyParseError("expected integer exponent", p2)
        base = base ** int(v2)
    return base


# ---------------------------------------------------------------------------
# polynomial matrices
# ---------------------------------------------------------------------------


class PolyMatrix:
    """Immutable rows×cols grid of Poly entries over one ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence]):
        rows = []
        for r in entries:
            row = tuple(Poly.convert(x, ring) for x in r)
            rows.append(row)
        self.ring = ring
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError("ragged matrix rows")

    @staticmethod
    def from_strings(ring: PolyRing, entries: Sequence[Sequence[str]]) -> "PolyMatrix":
        return PolyMatrix(
            ring, [[parse_poly(s, ring) for s in row] for row in entries]
        )

    @staticmethod
    def identity(ring: PolyRing, n: int) -> "PolyMatrix":
        return PolyMatrix(
            ring,
            [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)],
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[Poly, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.ring != self.ring or other.rows != self.rows:
            raise DimensionMismatchError("hstack shape/ring mismatch")
        return PolyMatrix(
            self.ring,
            [list(a) + list(b) for a, b in zip(self.entries, other.entries)],
        )

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[e * c for e in row] for row in self.entries])

    def apply(self, vec: Sequence[Poly]) -> tuple[Poly, ...]:
        """Matrix–vector product."""
        if len(vec) != self.cols:
            raise DimensionMismatchError(f"vector length {len(vec)} != cols {self.cols}")
        vec = [Poly.convert(v, self.ring) for v in vec]
        out = []
        for row in self.entries:
            acc = self.ring.zero()
            for a, v in zip(row, vec):
                acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("matmul shape mismatch")
        cols = other.columns()
        return PolyMatrix(
            self.ring, [list(self.apply(c)) for c in cols]
        ).transpose()

    def substitute(self, images: Sequence[Poly]) -> "PolyMatrix":
        """Entrywise ring morphism (e.g. compose an anchor with a map)."""
        target = images[0].ring
        return PolyMatrix(
            target,
            [[e.substitute(images) for e in row] for row in self.entries],
        )

    def evaluate(self, point: Sequence) -> list[list[Fraction]]:
        return [[e.evaluate(point) for e in row] for row in self.entries]

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "PolyMatrix":
        return PolyMatrix(
            self.ring,
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __str__(self):
        return "[" + "; ".join(
            ", ".join(str(e) for e in row) for row in self.entries
        ) + "]"

    __repr__ = __str__


def poly_exact_div(a: Poly, b: Poly):
    """Exact quotient a/b, or None when b does not divide a.

    Multivariate single-divisor division: cancel leading terms (grevlex)
    repeatedly; any leftover remainder means non-divisibility.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return a.ring.zero()
    key = monomial_key("grevlex")
    lb = b.leading_exponent()
    cb = b.leading_coefficient()
    bt = b.term_dict()
    rem = a.term_dict()
    quot = {}
    while rem:
        la = max(rem, key=key)
        diff = tuple(x - y for x, y in zip(la, lb))
        if any(d < 0 for d in diff):
            return None
        c = rem[la] / cb
        quot[diff] = c
        _kernel.axpy(rem, bt, diff, -c)
    return Poly(a.ring, quot)


def det(m: PolyMatrix) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination; exact."""
    if m.rows != m.cols:
        raise DimensionMismatchError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return m.ring.one()
    a = [list(row) for row in m.entries]
    ringv = m.ring
    sign = 1
    prev = ringv.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ringv.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q = poly_exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                a[i][j] = q
            a[i][k] = ringv.zero()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def generic_rank(m: PolyMatrix) -> int:
    """Rank over the field of rational functions (fraction-free elimination).

    Equals the maximum over rational points of the pointwise rank.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    ringv = m.ring
    rank = 0
    prev = ringv.one()
    while True:
        pivot = None
        for i in range(rank, nr):
            for j in range(rank, nc):
                if not a[i][j].is_zero:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            return rank
        pi, pj = pivot
        if pi != rank:
            a[pi], a[rank] = a[rank], a[pi]
        if pj != rank:
            for row in a:
                row[pj], row[rank] = row[rank], row[pj]
        for i in range(rank + 1, nr):
            for j in range(rank + 1, nc):
                num = a[rank][rank] * a[i][j] - a[i][rank] * a[rank][j]
                q = poly_exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                a[i][j] = q
            a[i][rank] = ringv.zero()
        prev = a[rank][rank]
        rank += 1
        if rank == min(nr, nc):
            return rank


def rank_at(m: PolyMatrix, point: Sequence) -> int:
    """Rank of the rational matrix m(point)."""
    if len(point) != m.ring.nvars:
        raise ArityMismatchError(
            f"point arity {len(point)} vs ring {m.ring}"
        )
    rows = m.evaluate(point)
    return rational_matrix_rank(rows)


def rational_matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    a = [[Fraction(x) for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    rank = 0
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(nr):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def minors(m: PolyMatrix, k: int):
    """All k×k minors, deterministic row-major order."""
    out = []
    for ri in itertools.combinations(range(m.rows), k):
        for ci in itertools.combinations(range(m.cols), k):
            out.append(det(m.submatrix(ri, ci)))
    return out


# ---------------------------------------------------------------------------
# ideals and Groebner bases (scalar Buchberger)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal in one ring."""

    ring: PolyRing
    generators: tuple[Poly, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"{g.ring} vs {self.ring}")


def _exp_divides(a, b) -> bool:
    """a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def reduce_poly(p: Poly, basis: Sequence[Poly], order: str = "grevlex"):
    """Full normal form of p modulo basis; returns (quotients, remainder).

    Deterministic: the first basis element (in listed order) whose leading
    term divides the current leading term is used at each step.
    """
    key = monomial_key(order)
    leads = [(b.leading_exponent(order), b.leading_coefficient(order), b.term_dict())
             for b in basis if not b.is_zero]
    quot = [dict() for _ in leads]
    rem = {}
    work = p.term_dict()
    while work:
        la = max(work, key=key)
        ca = work[la]
        for i, (lb, cb, bt) in enumerate(leads):
            if _exp_divides(lb, la):
                shift = _exp_sub(la, lb)
                c = ca / cb
                q = quot[i]
                q[shift] = q.get(shift, Fraction(0)) + c
                _kernel.axpy(work, bt, shift, -c)
                break
        else:
            rem[la] = ca
            del work[la]
    # map quotients back to the full basis listing (zeros for zero divisors)
    quots = []
    it = iter(quot)
    for b in basis:
        if b.is_zero:
            quots.append(p.ring.zero())
        else:
            quots.append(Poly(p.ring, next(it)))
    return tuple(quots), Poly(p.ring, rem)


def groebner_basis(gens: Iterable[Poly], order: str = "grevlex") -> tuple[Poly, ...]:
    """Reduced Groebner basis via Buchberger with the two classical criteria.

    Deterministic for fixed input and order: pairs are processed by
    (lcm degree, lcm, index) and the result is interreduced, made monic, and
    sorted by leading monomial.
    """
    if order not in ORDERS:
        raise ValueError(f"unknown monomial order {order!r}")
    key = monomial_key(order)
    basis = []
    rings = set()
    for g in gens:
        rings.add(g.ring)
        if not g.is_zero:
            basis.append(g * (1 / g.leading_coefficient(order)))
    if len(rings) > 1:
        raise RingMismatchError("generators from multiple rings")
    if not basis:
        return ()
    basis.sort(key=lambda p: key(p.leading_exponent(order)))

    lead = [b.leading_exponent(order) for b in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_sort(ij):
        i, j = ij
        l = _exp_lcm(lead[i], lead[j])
        return (sum(l), key(l), i, j)

    done = set()
    while pairs:
        i, j = min(pairs, key=pair_sort)
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = lead[i], lead[j]
        l = _exp_lcm(li, lj)
        # product criterion: coprime leading monomials (ideals only)
        if l == tuple(a + b for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _exp_divides(lead[k], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        fi, fj = basis[i], basis[j]
        s = _mono_shift(fi, _exp_sub(l, li)) - _mono_shift(fj, _exp_sub(l, lj))
        _, r = reduce_poly(s, basis, order)
        if not r.is_zero:
            r = r * (1 / r.leading_coefficient(order))
            new = len(basis)
            basis.append(r)
            lead.append(r.leading_exponent(order))
            for k in range(new):
                pairs.add((k, new))
    return _interreduce(basis, order)


def _mono_shift(p: Poly, shift) -> Poly:
    out = {}
    _kernel.axpy(out, p.term_dict(), shift, Fraction(1))
    return Poly(p.ring, out)


def _interreduce(basis: list[Poly], order: str) -> tuple[Poly, ...]:
    key = monomial_key(order)
    # minimize: drop elements whose lead is divisible by another's lead
    kept = []
    items = sorted(basis, key=lambda p: key(p.leading_exponent(order)))
    leads = [p.leading_exponent(order) for p in items]
    for i, p in enumerate(items):
        li = leads[i]
        redundant = False
        for j, lj in enumerate(leads):
            if i == j:
                continue
            if _exp_divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(p)
    # tail-reduce each against the others
    reduced = []
    for i, p in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        if others:
            _, r = reduce_poly(p, others, order)
        else:
            r = p
        if not r.is_zero:
            reduced.append(r * (1 / r.leading_coefficient(order)))
    reduced.sort(key=lambda p: key(p.leading_exponent(order)))
    return tuple(reduced)


def ideal_contains_one(ideal: Ideal, order: str = "grevlex") -> bool:
    """True iff 1 lies in the ideal (unit ideal).

    True implies the generators have no common zero over any field extension;
    the converse fails over Q/R (e.g. <x^2+1> is proper with no real zero),
    so a False verdict is inconclusive about real solvability.
    """
    for g in ideal.generators:
        c = g.constant_value()
        if c is not None and c != 0:
            return True
    gb = groebner_basis(ideal.generators, order)
    return len(gb) == 1 and gb[0].constant_value() == 1
