"""Localization of finite rings and modules by explicit pair classes.

S^-1 R is built from pairs (r, s) with r in R, s in S under the relation
(r, s) ~ (r', s') iff u(s'r - sr') = 0 for some u in S.  The u-factor is
mandatory: without it the relation is not transitive over rings with zero
divisors.  The relation is checked to be an equivalence by an explicit
scan, arithmetic on representatives is cross-checked against a second
representative of each class, and the image of every element of S is
checked to be a unit.  The same construction yields S^-1 M.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AxiomViolation, SizeCapExceeded
from .modules import (
    Module,
    Submodule,
    colon_set_into_module,
    make_module,
    zero_colon_set,
)
from .rings import DEFAULT_CAP, Ideal, MCS, make_ring_table, units, validate_mcs


def default_relation(add, neg, act, u_candidates):
    """(x, s) ~ (x', s') iff u(s'x - sx') = 0 for some u in S."""

    def related(p, q):
        x, s = p
        y, t = q
        diff = add(act(t, x), neg(act(s, y)))
        return any(act(u, diff) == 0 for u in u_candidates)

    return related


def _partition(pairs, related):
    """Group pairs into classes via relation rows; verify equivalence."""
    n = len(pairs)
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            if related(pairs[i], pairs[j]):
                row |= 1 << j
        rows.append(row)
    for i in range(n):
        if not rows[i] & (1 << i):
            raise AxiomViolation("localization relation not reflexive", (pairs[i],))
        for j in range(n):
            if rows[i] & (1 << j) and not rows[j] & (1 << i):
                raise AxiomViolation("localization relation not symmetric",
                                     (pairs[i], pairs[j]))
    for i in range(n):
        for j in range(n):
            if rows[i] & (1 << j) and rows[j] | rows[i] != rows[i]:
                k = (rows[j] & ~rows[i]).bit_length() - 1
                raise AxiomViolation("localization relation not transitive",
                                     (pairs[i], pairs[j], pairs[k]))
    class_of = {}
    classes = []
    for i in range(n):
        if i in class_of:
            continue
        members = [j for j in range(n) if rows[i] & (1 << j)]
        for j in members:
            class_of[j] = len(classes)
        classes.append(tuple(members))
    return class_of, classes


@dataclass(frozen=True, eq=False)
class LocalizedRing:
    base: object
    mcs: MCS
    ring: object              # the quotient structure as a table Ring
    pairs: tuple              # (r, s) pairs in construction order
    class_of_pair: tuple      # pair index -> class index

    def class_of(self, r, s):
        return self.class_of_pair[self.pairs.index((r, s))]

    def map_element(self, r):
        """Image of r under the canonical map R -> S^-1 R."""
        return self.class_of(r, self.mcs.members()[0])

    def kernel(self):
        zero = self.map_element(self.base.zero)
        return frozenset(r for r in self.base.elements()
                         if self.map_element(r) == zero)


def _first(mcs):
    return mcs.members()[0]


def _build_classes(size, mcs, add, neg, act, relation, what, cap):
    pairs = tuple((x, s) for x in range(size) for s in mcs.members())
    if len(pairs) > cap * cap:
        raise SizeCapExceeded(f"{what} localization pairs", len(pairs), cap * cap)
    related = relation(add, neg, act, mcs.members())
    class_of, classes = _partition(pairs, related)
    # order classes by their least pair; the class of (0, s0) comes first
    order = sorted(range(len(classes)), key=lambda c: classes[c][0])
    rank = {c: i for i, c in enumerate(order)}
    class_of_pair = tuple(rank[class_of[i]] for i in range(len(pairs)))
    members = [tuple(classes[c]) for c in order]
    return pairs, class_of_pair, members


def _cross_checked_table(pairs, class_of_pair, members, combine, index_of):
    """Build a class-level operation table, checking representative choice."""
    k = len(members)
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            picks = set()
            for pi in members[i][:2]:
                for pj in members[j][:2]:
                    picks.add(class_of_pair[index_of[combine(pairs[pi], pairs[pj])]])
            if len(picks) != 1:
                raise AxiomViolation("localization operation not well defined",
                                     (i, j))
            row.append(picks.pop())
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def localize_ring(ring, mcs, cap=DEFAULT_CAP):
    return localize_ring_with(ring, mcs, default_relation, cap=cap)


def localize_ring_with(ring, mcs, relation, cap=DEFAULT_CAP):
    """S^-1 R via pair classes; returns a LocalizedRing wrapper."""
    pairs, class_of_pair, members = _build_classes(
        ring.order, mcs, ring.add, ring.neg, ring.mul, relation, "ring", cap
    )
    index_of = {p: i for i, p in enumerate(pairs)}

    def add_pairs(p, q):
        (r1, s1), (r2, s2) = p, q
        return (ring.add(ring.mul(r1, s2), ring.mul(r2, s1)), ring.mul(s1, s2))

    def mul_pairs(p, q):
        (r1, s1), (r2, s2) = p, q
        return (ring.mul(r1, r2), ring.mul(s1, s2))

    add_table = _cross_checked_table(pairs, class_of_pair, members, add_pairs, index_of)
    mul_table = _cross_checked_table(pairs, class_of_pair, members, mul_pairs, index_of)
    reps = [pairs[m[0]] for m in members]
    labels = tuple(
        f"{ring.label(r)}/{ring.label(s)}" for r, s in reps
    )
    s0 = _first(mcs)
    zero = class_of_pair[index_of[(ring.zero, s0)]]
    one = class_of_pair[index_of[(ring.one, s0)]]
    loc = make_ring_table(add_table, mul_table, zero, one, cap=cap, labels=labels,
                          name=f"({ring.name} loc {mcs.describe()})")
    wrapper = LocalizedRing(ring, mcs, loc, pairs, class_of_pair)
    _check_localized_ring(wrapper)
    return wrapper


def _check_localized_ring(wrapper):
    ring, loc, mcs = wrapper.base, wrapper.ring, wrapper.mcs
    phi = [wrapper.class_of(r, _first(mcs)) for r in ring.elements()]
    for a in ring.elements():
        for b in ring.elements():
            if phi[ring.add(a, b)] != loc.add(phi[a], phi[b]):
                raise AxiomViolation("canonical map is not additive", (a, b))
            if phi[ring.mul(a, b)] != loc.mul(phi[a], phi[b]):
                raise AxiomViolation("canonical map is not multiplicative", (a, b))
    if phi[ring.one] != loc.one:
        raise AxiomViolation("canonical map must send 1 to 1")
    unit_set = units(loc)
    for s in mcs:
        if phi[s] not in unit_set:
            raise AxiomViolation("image of S must consist of units", (s,))
    expected = frozenset(
        r for r in ring.elements()
        if any(ring.mul(u, r) == ring.zero for u in mcs)
    )
    if wrapper.kernel() != expected:
        raise AxiomViolation("canonical map kernel mismatch")


@dataclass(frozen=True, eq=False)
class LocalizedModule:
    base: object
    mcs: MCS
    locring: LocalizedRing
    module: Module
    pairs: tuple
    class_of_pair: tuple

    def class_of(self, m, s):
        return self.class_of_pair[self.pairs.index((m, s))]

    def map_element(self, m):
        return self.class_of(m, self.mcs.members()[0])

    def kernel(self):
        zero = self.map_element(0)
        return frozenset(m for m in self.base.elements()
                         if self.map_element(m) == zero)


@lru_cache(maxsize=None)
def localize_module(module, mcs, cap=DEFAULT_CAP):
    return localize_module_with(module, mcs, default_relation, cap=cap)


def localize_module_with(module, mcs, relation, cap=DEFAULT_CAP):
    """S^-1 M as a module over S^-1 R, with the canonical map data."""
    locring = localize_ring_with(module.ring, mcs, relation, cap=cap)
    pairs, class_of_pair, members = _build_classes(
        module.size, mcs, module.add, module.neg, module.act, relation, "module", cap
    )
    index_of = {p: i for i, p in enumerate(pairs)}

    def add_pairs(p, q):
        (m1, s1), (m2, s2) = p, q
        return (module.add(module.act(s2, m1), module.act(s1, m2)),
                module.ring.mul(s1, s2))

    add_table = _cross_checked_table(pairs, class_of_pair, members, add_pairs, index_of)
    reps = [pairs[m[0]] for m in members]
    # action of each localized-ring class via representatives, cross-checked
    ring = module.ring
    rpairs = locring.pairs
    act_rows = []
    for rc in range(locring.ring.order):
        rmembers = [i for i, c in enumerate(locring.class_of_pair) if c == rc][:2]
        row = []
        for mc in range(len(members)):
            picks = set()
            for ri in rmembers:
                r, s = rpairs[ri]
                for mi in members[mc][:2]:
                    m, t = pairs[mi]
                    picks.add(class_of_pair[index_of[
                        (module.act(r, m), ring.mul(s, t))]])
            if len(picks) != 1:
                raise AxiomViolation("localized action not well defined", (rc, mc))
            row.append(picks.pop())
        act_rows.append(tuple(row))
    labels = tuple(f"{module.label(m)}/{ring.label(s)}" for m, s in reps)
    loc_module = make_module(
        locring.ring, add_table, tuple(act_rows), kind="localization",
        name=f"({module.name} loc {mcs.describe()})", labels=labels, cap=cap,
    )
    wrapper = LocalizedModule(module, mcs, locring, loc_module, pairs, class_of_pair)
    expected = frozenset(
        m for m in module.elements()
        if any(module.act(u, m) == 0 for u in mcs)
    )
    if wrapper.kernel() != expected:
        raise AxiomViolation("canonical module map kernel mismatch")
    return wrapper


def localize_submodule(locmod, n):
    """S^-1 N = {class(n, s)} as a submodule of S^-1 M."""
    n_set = n.elements if isinstance(n, Submodule) else frozenset(n)
    els = frozenset(
        locmod.class_of(m, s) for m in n_set for s in locmod.mcs
    )
    return Submodule(locmod.module, els)


def localize_ideal(locring, ideal):
    """S^-1 I = {class(a, s)} as an ideal of S^-1 R."""
    els = frozenset(
        locring.class_of(a, s) for a in ideal.elements for s in locring.mcs
    )
    return Ideal(locring.ring, els)


def all_submodules_are_localizations(module, mcs):
    """Every submodule of S^-1 M arises as S^-1 N for a submodule N of M."""
    from .modules import enumerate_submodules

    locmod = localize_module(module, mcs)
    images = {localize_submodule(locmod, n).elements
              for n in enumerate_submodules(module)}
    return all(w.elements in images
               for w in enumerate_submodules(locmod.module))


def localized_colon_identity_check(module, mcs, ideal):
    """S^-1((0 :_M I)) equals (0 :_{S^-1 M} S^-1 I)."""
    locmod = localize_module(module, mcs)
    left = localize_submodule(locmod, zero_colon_set(module, ideal.elements))
    loc_ideal = localize_ideal(locmod.locring, ideal)
    right = colon_set_into_module(locmod.module, frozenset((0,)), loc_ideal.elements)
    return left.elements == right


def complement_mcs(ring, prime_ideal):
    """R minus a prime ideal, validated as an m.c.s. rather than assumed."""
    subset = frozenset(x for x in ring.elements() if x not in prime_ideal.elements)
    return validate_mcs(ring, subset)


def mm_locally_nonzero(module, maximal_ideal):
    """Whether the localization at R minus the maximal ideal is nonzero."""
    if module.is_zero_module:
        return False
    mcs = complement_mcs(module.ring, maximal_ideal)
    return localize_module(module, mcs).module.size > 1
