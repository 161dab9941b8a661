"""Finite commutative unital rings, their ideals, and multiplicatively closed sets.

Rings come in two presentations: products of Z_n with componentwise
arithmetic (tables are never materialized for these) and explicit
Cayley-table rings.  Elements are plain integer indices.  For Z_n products
the index is the mixed-radix encoding of the residue tuple, so index order
is lexicographic on residues; for table rings it is the table index.  That
index order is the canonical order used by every "first witness" search in
the library.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .errors import (
    AxiomViolation,
    ContainsZero,
    MCSViolation,
    MissingOne,
    NotClosed,
    SizeCapExceeded,
)
from .witnesses import Witness, revalidator

DEFAULT_CAP = 64


class Ring:
    """A finite commutative ring with 1 != 0, elements indexed 0..order-1."""

    __slots__ = (
        "kind",
        "moduli",
        "order",
        "zero",
        "one",
        "name",
        "_labels",
        "_tuples",
        "_weights",
        "_add_rows",
        "_mul_rows",
        "_neg",
        "_hash",
    )

    def __init__(self, kind, order, zero, one, name, moduli=None, add_rows=None,
                 mul_rows=None, labels=None):
        self.kind = kind
        self.order = order
        self.zero = zero
        self.one = one
        self.name = name
        self.moduli = moduli
        self._add_rows = add_rows
        self._mul_rows = mul_rows
        self._labels = labels
        if kind == "zn_product":
            weights = []
            w = 1
            for n in reversed(moduli):
                weights.append(w)
                w *= n
            self._weights = tuple(reversed(weights))
            self._tuples = tuple(self._decode(i) for i in range(order))
            self._neg = tuple(
                self._encode(tuple((-c) % n for c, n in zip(t, moduli)))
                for t in self._tuples
            )
        else:
            self._weights = None
            self._tuples = None
            self._neg = tuple(add_rows[a].index(zero) for a in range(order))
        self._hash = None

    def _decode(self, index):
        out = []
        for n, w in zip(self.moduli, self._weights):
            out.append((index // w) % n)
        return tuple(out)

    def _encode(self, residues):
        return sum(c * w for c, w in zip(residues, self._weights))

    def elements(self):
        return range(self.order)

    def add(self, a, b):
        if self.kind == "zn_product":
            if len(self.moduli) == 1:
                return (a + b) % self.order
            ta, tb = self._tuples[a], self._tuples[b]
            return self._encode(
                tuple((x + y) % n for x, y, n in zip(ta, tb, self.moduli))
            )
        return self._add_rows[a][b]

    def mul(self, a, b):
        if self.kind == "zn_product":
            if len(self.moduli) == 1:
                return (a * b) % self.order
            ta, tb = self._tuples[a], self._tuples[b]
            return self._encode(
                tuple((x * y) % n for x, y, n in zip(ta, tb, self.moduli))
            )
        return self._mul_rows[a][b]

    def neg(self, a):
        return self._neg[a]

    def label(self, a):
        if self._labels is not None:
            return self._labels[a]
        if self.kind == "zn_product" and len(self.moduli) > 1:
            return "(" + ",".join(str(c) for c in self._tuples[a]) + ")"
        return str(a)

    def describe(self):
        return self.name

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Ring):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "zn_product":
            return self.moduli == other.moduli
        return (
            self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and self._add_rows == other._add_rows
            and self._mul_rows == other._mul_rows
        )

    def __hash__(self):
        if self._hash is None:
            if self.kind == "zn_product":
                h = hash(("zn_product", self.moduli))
            else:
                h = hash(("table", self.order, self.zero, self.one,
                          self._add_rows, self._mul_rows))
            self._hash = h
        return self._hash

    def __repr__(self):
        return f"Ring({self.name})"


def make_ring_zn(moduli, cap=DEFAULT_CAP):
    """Ring Z_{n1} x ... x Z_{nk} under componentwise modular arithmetic."""
    moduli = tuple(int(n) for n in moduli)
    if not moduli or any(n < 2 for n in moduli):
        raise AxiomViolation("zn_product moduli must all be >= 2", moduli)
    order = 1
    for n in moduli:
        order *= n
    if order > cap:
        raise SizeCapExceeded("ring", order, cap)
    name = "x".join(f"Z{n}" for n in moduli)
    ring = Ring("zn_product", order, 0, 0, name, moduli=moduli)
    ring.one = ring._encode(tuple(1 for _ in moduli))
    return ring


def make_ring_table(add_rows, mul_rows, zero, one, cap=DEFAULT_CAP,
                    labels=None, name=None):
    """Ring from explicit Cayley tables; all ring axioms checked exhaustively."""
    add_rows = tuple(tuple(row) for row in add_rows)
    mul_rows = tuple(tuple(row) for row in mul_rows)
    order = len(add_rows)
    if order > cap:
        raise SizeCapExceeded("ring", order, cap)
    _validate_ring_tables(add_rows, mul_rows, zero, one, order)
    return Ring(
        "table", order, zero, one, name or f"table({order})",
        add_rows=add_rows, mul_rows=mul_rows,
        labels=tuple(labels) if labels is not None else None,
    )


def make_ring(presentation, cap=DEFAULT_CAP):
    """Dispatching constructor: {'kind': 'zn_product'|'table', ...}."""
    kind = presentation["kind"]
    if kind == "zn_product":
        return make_ring_zn(presentation["moduli"], cap=cap)
    if kind == "table":
        return make_ring_table(
            presentation["add"], presentation["mul"],
            presentation["zero"], presentation["one"],
            cap=cap, name=presentation.get("name"),
        )
    raise AxiomViolation(f"unknown ring presentation kind {kind!r}")


def _validate_ring_tables(add, mul, zero, one, order):
    rng = range(order)
    if len(mul) != order or any(len(r) != order for r in add) or any(
        len(r) != order for r in mul
    ):
        raise AxiomViolation("tables must be square of matching dimension")
    for table, opname in ((add, "+"), (mul, "*")):
        for a in rng:
            for b in rng:
                v = table[a][b]
                if not (0 <= v < order):
                    raise AxiomViolation(f"{opname} table entry out of range", (a, b))
    if zero == one:
        raise AxiomViolation("1 must differ from 0")
    for a in rng:
        if add[zero][a] != a:
            raise AxiomViolation("0 is not an additive identity", (a,))
        if mul[one][a] != a:
            raise AxiomViolation("1 is not a multiplicative identity", (a,))
        if zero not in add[a]:
            raise AxiomViolation("missing additive inverse", (a,))
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a]:
                raise AxiomViolation("addition not commutative", (a, b))
            if mul[a][b] != mul[b][a]:
                raise AxiomViolation("multiplication not commutative", (a, b))
    for a in rng:
        for b in rng:
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise AxiomViolation("addition not associative", (a, b, c))
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise AxiomViolation("multiplication not associative", (a, b, c))
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise AxiomViolation("multiplication not distributive", (a, b, c))


def product_ring(r1, r2, cap=DEFAULT_CAP):
    """Direct product R1 x R2; zn products concatenate their moduli."""
    if r1.kind == "zn_product" and r2.kind == "zn_product":
        return make_ring_zn(r1.moduli + r2.moduli, cap=cap)
    order = r1.order * r2.order
    if order > cap:
        raise SizeCapExceeded("ring", order, cap)

    def enc(a, b):
        return a * r2.order + b

    add = tuple(
        tuple(enc(r1.add(a1, b1), r2.add(a2, b2)) for b1 in r1.elements()
              for b2 in r2.elements())
        for a1 in r1.elements() for a2 in r2.elements()
    )
    mul = tuple(
        tuple(enc(r1.mul(a1, b1), r2.mul(a2, b2)) for b1 in r1.elements()
              for b2 in r2.elements())
        for a1 in r1.elements() for a2 in r2.elements()
    )
    labels = tuple(
        f"({r1.label(a)},{r2.label(b)})" for a in r1.elements() for b in r2.elements()
    )
    return make_ring_table(
        add, mul, enc(r1.zero, r2.zero), enc(r1.one, r2.one),
        cap=cap, labels=labels, name=f"{r1.name}x{r2.name}",
    )


def split_product_element(r1, r2, product, index):
    """Inverse of the product encoding: index in r1 x r2 -> (a, b)."""
    if product.kind == "zn_product":
        t = product._tuples[index]
        k = len(r1.moduli)
        return r1._encode(t[:k]), r2._encode(t[k:])
    return index // r2.order, index % r2.order


def join_product_element(r1, r2, product, a, b):
    if product.kind == "zn_product":
        k = len(r1.moduli)
        return product._encode(r1._tuples[a] + r2._tuples[b])
    return a * r2.order + b


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """A subset of a ring closed under addition and all scalar multiples."""

    ring: Ring
    elements: frozenset
    generators: tuple = field(default=None, compare=False)

    def __post_init__(self):
        ring = self.ring
        els = self.elements
        if ring.zero not in els:
            raise AxiomViolation("ideal must contain 0")
        for a in els:
            for b in els:
                if ring.add(a, b) not in els:
                    raise AxiomViolation("ideal not closed under addition", (a, b))
        for r in ring.elements():
            for a in els:
                if ring.mul(r, a) not in els:
                    raise AxiomViolation("ideal not closed under scalars", (r, a))
        if self.generators is not None:
            closed = _ideal_closure_set(ring, self.generators)
            if closed != els:
                raise AxiomViolation("generators do not generate the element set")

    def members(self):
        return sorted(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def is_proper(self):
        return len(self.elements) < self.ring.order

    def describe(self):
        return "{" + ",".join(self.ring.label(x) for x in self.members()) + "}"


def _ideal_closure_set(ring, generators):
    elems = {ring.zero}
    frontier = []
    for g in generators:
        for r in ring.elements():
            x = ring.mul(r, g)
            if x not in elems:
                elems.add(x)
                frontier.append(x)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            z = ring.add(x, y)
            if z not in elems:
                elems.add(z)
                frontier.append(z)
    return frozenset(elems)


def ideal_closure(ring, generators):
    """Least ideal containing the generators."""
    gens = tuple(sorted(set(generators)))
    return Ideal(ring, _ideal_closure_set(ring, gens), generators=gens)


def ideal_from_set(ring, elements):
    return Ideal(ring, frozenset(elements))


def _canonical_subset_key(elements):
    return (len(elements), tuple(sorted(elements)))


@lru_cache(maxsize=None)
def enumerate_ideals(ring, cap=DEFAULT_CAP):
    """Every ideal exactly once, sorted by (cardinality, element list)."""
    if ring.order > cap:
        raise SizeCapExceeded("ring", ring.order, cap)
    known = {frozenset((ring.zero,))}
    frontier = [frozenset((ring.zero,))]
    while frontier:
        base = frontier.pop()
        for x in ring.elements():
            if x in base:
                continue
            grown = _ideal_closure_set(ring, tuple(base) + (x,))
            if grown not in known:
                known.add(grown)
                frontier.append(grown)
    ordered = sorted(known, key=_canonical_subset_key)
    return tuple(Ideal(ring, els) for els in ordered)


def is_ideal_set(ring, elements):
    """Plain subset test against the ideal invariants (no object creation)."""
    els = frozenset(elements)
    if ring.zero not in els:
        return False
    for a in els:
        for b in els:
            if ring.add(a, b) not in els:
                return False
        for r in ring.elements():
            if ring.mul(r, a) not in els:
                return False
    return True


@lru_cache(maxsize=None)
def maximal_ideals(ring):
    """Proper ideals maximal under inclusion, in canonical order."""
    proper = [i for i in enumerate_ideals(ring) if i.is_proper()]
    out = []
    for i in proper:
        if not any(i.elements < j.elements for j in proper):
            out.append(i)
    return tuple(out)


@lru_cache(maxsize=None)
def minimal_nonzero_ideals(ring):
    nonzero = [i for i in enumerate_ideals(ring) if len(i) > 1]
    out = []
    for i in nonzero:
        if not any(j.elements < i.elements for j in nonzero):
            out.append(i)
    return tuple(out)


@lru_cache(maxsize=None)
def prime_ideals(ring):
    """Proper ideals I with ab in I implying a in I or b in I."""
    out = []
    for ideal in enumerate_ideals(ring):
        if ideal.is_proper() and is_prime_ideal_set(ring, ideal.elements):
            out.append(ideal)
    return tuple(out)


def is_prime_ideal_set(ring, elements):
    if len(elements) == ring.order:
        return False
    for a in ring.elements():
        if a in elements:
            continue
        for b in ring.elements():
            if b in elements:
                continue
            if ring.mul(a, b) in elements:
                return False
    return True


@lru_cache(maxsize=None)
def jacobson_radical(ring):
    """Intersection of all maximal ideals."""
    els = frozenset(ring.elements())
    for m in maximal_ideals(ring):
        els &= m.elements
    return Ideal(ring, els)


def ideal_sum(i, j):
    ring = i.ring
    return Ideal(ring, frozenset(ring.add(a, b) for a in i.elements for b in j.elements))


def ideal_product(i, j):
    ring = i.ring
    products = {ring.mul(a, b) for a in i.elements for b in j.elements}
    return Ideal(ring, _additive_closure(ring, products))


def _additive_closure(ring, elements):
    elems = set(elements)
    elems.add(ring.zero)
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            z = ring.add(x, y)
            if z not in elems:
                elems.add(z)
                frontier.append(z)
    return frozenset(elems)


def ideal_intersection(i, j):
    return Ideal(i.ring, i.elements & j.elements)


def ideal_colon(i, j):
    """(I : J) = {x in R : xJ <= I}."""
    ring = i.ring
    out = frozenset(
        x for x in ring.elements()
        if all(ring.mul(x, a) in i.elements for a in j.elements)
    )
    return Ideal(ring, out)


def ideal_annihilator(i):
    """ann(I) = (0 : I)."""
    zero = Ideal(i.ring, frozenset((i.ring.zero,)))
    return ideal_colon(zero, i)


def ideal_ops(ring, i, j):
    """The standard ideal arithmetic bundle for a pair of ideals."""
    return {
        "sum": ideal_sum(i, j),
        "product": ideal_product(i, j),
        "intersection": ideal_intersection(i, j),
        "colon": ideal_colon(i, j),
        "annihilator": ideal_annihilator(i),
    }


@lru_cache(maxsize=None)
def units(ring):
    """u(R) = {x : xy = 1 for some y}."""
    return frozenset(
        x for x in ring.elements()
        if any(ring.mul(x, y) == ring.one for y in ring.elements())
    )


# ---------------------------------------------------------------------------
# multiplicatively closed sets


@dataclass(frozen=True)
class MCS:
    """A validated multiplicatively closed subset: 0 out, 1 in, closed."""

    ring: Ring
    elements: frozenset

    def members(self):
        return sorted(self.elements)

    def __iter__(self):
        return iter(self.members())

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def describe(self):
        return "{" + ",".join(self.ring.label(x) for x in self.members()) + "}"


def validate_mcs(ring, subset):
    """Return an MCS or raise the specific violated condition."""
    els = frozenset(subset)
    if ring.zero in els:
        raise ContainsZero()
    if ring.one not in els:
        raise MissingOne()
    for s in sorted(els):
        for t in sorted(els):
            if ring.mul(s, t) not in els:
                raise NotClosed(s, t)
    return MCS(ring, els)


def is_mcs_set(ring, subset):
    try:
        validate_mcs(ring, subset)
        return True
    except MCSViolation:
        return False


def unit_mcs(ring):
    return MCS(ring, frozenset((ring.one,)))


def saturation(mcs):
    """S* = {x : rx in S for some r}; saturated, contains S (both checked)."""
    ring = mcs.ring
    star = frozenset(
        x for x in ring.elements()
        if any(ring.mul(r, x) in mcs.elements for r in ring.elements())
    )
    out = validate_mcs(ring, star)
    if not mcs.elements <= out.elements:
        raise AxiomViolation("saturation must contain the original set")
    return out


def divides(ring, t, s):
    """t | s, i.e. s lies in the principal ideal tR."""
    return any(ring.mul(t, r) == s for r in ring.elements())


def has_maximal_multiple(mcs):
    """First s in S divisible by every t in S, as a witness, else None."""
    ring = mcs.ring
    for s in mcs.members():
        if all(divides(ring, t, s) for t in mcs.members()):
            return Witness.make("maximal-multiple", mcs=mcs, s=s)
    return None


@revalidator("maximal-multiple")
def _check_maximal_multiple(w):
    mcs = w.get("mcs")
    s = w.get("s")
    return s in mcs.elements and all(divides(mcs.ring, t, s) for t in mcs)


class NoetherianVerdict(NamedTuple):
    value: bool
    note: str


def is_s_noetherian(ring, mcs):
    """Whether every ideal is S-finite; finite rings make this automatic."""
    return NoetherianVerdict(True, "trivially true at finite scale")


def enumerate_mcs(ring, cap=16):
    """All valid m.c.s. of the ring, sorted by (size, element list)."""
    if ring.order > cap:
        raise SizeCapExceeded("ring (m.c.s. enumeration)", ring.order, cap)
    others = [x for x in ring.elements() if x not in (ring.zero, ring.one)]
    found = []
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            subset = frozenset((ring.one,) + extra)
            if is_mcs_set(ring, subset):
                found.append(MCS(ring, subset))
    found.sort(key=lambda s: _canonical_subset_key(s.elements))
    return tuple(found)


def cyclic_mcs(ring):
    """The m.c.s. generated by {1, s} for each s, deduplicated and sorted."""
    out = {frozenset((ring.one,))}
    for s in ring.elements():
        if s == ring.zero:
            continue
        closure = {ring.one, s}
        frontier = [s]
        ok = True
        while frontier:
            x = frontier.pop()
            for y in list(closure):
                z = ring.mul(x, y)
                if z == ring.zero:
                    ok = False
                    frontier = []
                    break
                if z not in closure:
                    closure.add(z)
                    frontier.append(z)
        if ok:
            out.add(frozenset(closure))
    ordered = sorted(out, key=_canonical_subset_key)
    return tuple(MCS(ring, els) for els in ordered)


def product_mcs(s1, s2, ring):
    """S1 x S2 inside the given product of the two base rings."""
    els = frozenset(
        join_product_element(s1.ring, s2.ring, ring, a, b)
        for a in s1.elements for b in s2.elements
    )
    return validate_mcs(ring, els)
