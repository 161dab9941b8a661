"""Finite unital modules over a Ring: carriers, actions, and submodules.

A module carrier is either a product of cyclic groups Z_{d1} x ... x Z_{dm}
(elements indexed in mixed radix, lexicographic on residue tuples) or an
explicit addition table.  Table carriers are what quotients, localizations
and submodule restrictions naturally produce; index 0 is always the zero
element.  The scalar action is held as a full table, built and checked
exhaustively at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import AxiomViolation, SizeCapExceeded
from .rings import (
    DEFAULT_CAP,
    Ideal,
    _canonical_subset_key,
    product_ring,
    split_product_element,
)

_MODULE_CACHE = {}


class Module:
    """A finite unital module; elements are indices 0..size-1, zero is 0."""

    __slots__ = (
        "ring",
        "size",
        "kind",
        "moduli",
        "name",
        "_labels",
        "_add_rows",
        "_act_rows",
        "_neg",
        "_hash",
    )

    def __init__(self, ring, size, add_rows, act_rows, kind, name,
                 moduli=None, labels=None):
        self.ring = ring
        self.size = size
        self.kind = kind
        self.name = name
        self.moduli = moduli
        self._labels = labels
        self._add_rows = add_rows
        self._act_rows = act_rows
        self._neg = tuple(add_rows[m].index(0) for m in range(size))
        self._hash = None

    zero = 0

    def elements(self):
        return range(self.size)

    def add(self, a, b):
        return self._add_rows[a][b]

    def neg(self, a):
        return self._neg[a]

    def act(self, r, m):
        return self._act_rows[r][m]

    def act_row(self, r):
        return self._act_rows[r]

    @property
    def is_zero_module(self):
        return self.size == 1

    def label(self, m):
        if self._labels is not None:
            return self._labels[m]
        if self.moduli is not None and len(self.moduli) > 1:
            return "(" + ",".join(str(c) for c in _decode(m, self.moduli)) + ")"
        return str(m)

    def describe(self):
        return f"{self.name} over {self.ring.name}"

    def set_label(self, elements):
        return "{" + ",".join(self.label(x) for x in sorted(elements)) + "}"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Module):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.size == other.size
            and self._add_rows == other._add_rows
            and self._act_rows == other._act_rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.size, self._add_rows, self._act_rows))
        return self._hash

    def __repr__(self):
        return f"Module({self.describe()})"


def _decode(index, moduli):
    out = []
    w = 1
    weights = []
    for n in reversed(moduli):
        weights.append(w)
        w *= n
    for n, w in zip(moduli, reversed(weights)):
        out.append((index // w) % n)
    return tuple(out)


def _moduli_add_rows(moduli):
    size = 1
    for n in moduli:
        size *= n
    tuples = [_decode(i, moduli) for i in range(size)]
    index = {t: i for i, t in enumerate(tuples)}
    return tuple(
        tuple(
            index[tuple((x + y) % n for x, y, n in zip(ta, tb, moduli))]
            for tb in tuples
        )
        for ta in tuples
    )


def _validate_module(ring, size, add_rows, act_rows):
    rng = range(size)
    if len(add_rows) != size or any(len(r) != size for r in add_rows):
        raise AxiomViolation("carrier addition table has wrong shape")
    if len(act_rows) != ring.order or any(len(r) != size for r in act_rows):
        raise AxiomViolation("action table has wrong shape")
    for a in rng:
        if add_rows[0][a] != a:
            raise AxiomViolation("0 is not the carrier identity", (a,))
        if 0 not in add_rows[a]:
            raise AxiomViolation("missing carrier inverse", (a,))
        for b in rng:
            if add_rows[a][b] != add_rows[b][a]:
                raise AxiomViolation("carrier addition not commutative", (a, b))
            for c in rng:
                if add_rows[add_rows[a][b]][c] != add_rows[a][add_rows[b][c]]:
                    raise AxiomViolation("carrier addition not associative", (a, b, c))
    one_row = act_rows[ring.one]
    for m in rng:
        if one_row[m] != m:
            raise AxiomViolation("1 does not act as identity", (m,))
    for r in ring.elements():
        row = act_rows[r]
        for m in rng:
            for m2 in rng:
                if row[add_rows[m][m2]] != add_rows[row[m]][row[m2]]:
                    raise AxiomViolation("action not additive in the module", (r, m, m2))
    for r in ring.elements():
        for r2 in ring.elements():
            sum_row = act_rows[ring.add(r, r2)]
            prod_row = act_rows[ring.mul(r, r2)]
            row, row2 = act_rows[r], act_rows[r2]
            for m in rng:
                if sum_row[m] != add_rows[row[m]][row2[m]]:
                    raise AxiomViolation("action not additive in the ring", (r, r2, m))
                if prod_row[m] != row[row2[m]]:
                    raise AxiomViolation("action not multiplicative", (r, r2, m))


def _intern(module):
    return _MODULE_CACHE.setdefault(module, module)


def make_module(ring, add_rows, act_rows, kind="table", name=None, moduli=None,
                labels=None, cap=DEFAULT_CAP):
    """Validated module from explicit tables."""
    add_rows = tuple(tuple(row) for row in add_rows)
    act_rows = tuple(tuple(row) for row in act_rows)
    size = len(add_rows)
    if size > cap:
        raise SizeCapExceeded("module carrier", size, cap)
    _validate_module(ring, size, add_rows, act_rows)
    return _intern(Module(
        ring, size, add_rows, act_rows, kind, name or f"table({size})",
        moduli=moduli, labels=tuple(labels) if labels is not None else None,
    ))


def module_from_rule(ring, moduli, rule, kind, name, cap=DEFAULT_CAP):
    """Module over a Z-product carrier with action given by a rule on tuples."""
    moduli = tuple(moduli)
    size = 1
    for n in moduli:
        size *= n
    if size > cap:
        raise SizeCapExceeded("module carrier", size, cap)
    tuples = [_decode(i, moduli) for i in range(size)]
    index = {t: i for i, t in enumerate(tuples)}
    act_rows = tuple(
        tuple(index[rule(r, t)] for t in tuples) for r in ring.elements()
    )
    return make_module(
        ring, _moduli_add_rows(moduli), act_rows,
        kind=kind, name=name, moduli=moduli, cap=cap,
    )


@lru_cache(maxsize=None)
def self_module(ring):
    """The ring viewed as a module over itself."""
    if ring.kind == "zn_product":
        mods = ring.moduli

        def rule(r, t):
            rt = ring._tuples[r]
            return tuple((a * b) % n for a, b, n in zip(rt, t, mods))

        return module_from_rule(ring, mods, rule, "self", ring.name)
    add_rows = ring._add_rows
    act_rows = ring._mul_rows
    if ring.zero != 0:
        raise AxiomViolation("table ring must place zero at index 0 for self module")
    return make_module(ring, add_rows, act_rows, kind="self", name=ring.name,
                       labels=[ring.label(x) for x in ring.elements()])


def zn_over_zk(ring, d, cap=DEFAULT_CAP):
    """Z_d as a module over Z_n (single-modulus ring), requiring d | n."""
    if ring.kind != "zn_product" or len(ring.moduli) != 1:
        raise AxiomViolation("zn_over_zk needs a single-modulus ring")
    n = ring.moduli[0]
    if d < 1 or n % d != 0:
        raise AxiomViolation("carrier modulus must divide the ring modulus", (d, n))
    return module_from_rule(
        ring, (d,), lambda r, t: ((r * t[0]) % d,), "zn_over_zk", f"Z{d}", cap=cap
    )


def direct_sum_module(ring, moduli, cap=DEFAULT_CAP):
    """Z_{d1} + ... + Z_{dk} over Z_n with componentwise action, each d | n."""
    if ring.kind != "zn_product" or len(ring.moduli) != 1:
        raise AxiomViolation("direct_sum needs a single-modulus ring")
    n = ring.moduli[0]
    moduli = tuple(moduli)
    for d in moduli:
        if d < 1 or n % d != 0:
            raise AxiomViolation("each carrier modulus must divide the ring modulus", (d, n))
    name = "+".join(f"Z{d}" for d in moduli)
    return module_from_rule(
        ring, moduli,
        lambda r, t: tuple((r * x) % d for x, d in zip(t, moduli)),
        "direct_sum", name, cap=cap,
    )


def zero_module(ring):
    """The one-element module; constructible but flagged via is_zero_module."""
    return make_module(ring, ((0,),), tuple((0,) for _ in ring.elements()),
                       kind="zero", name="0")


def product_module(m1, m2, ring=None, cap=DEFAULT_CAP):
    """M1 x M2 over R1 x R2 with componentwise action."""
    r1, r2 = m1.ring, m2.ring
    if ring is None:
        ring = product_ring(r1, r2, cap=cap)
    size = m1.size * m2.size
    if size > cap:
        raise SizeCapExceeded("module carrier", size, cap)

    def enc(a, b):
        return a * m2.size + b

    add_rows = tuple(
        tuple(enc(m1.add(a1, b1), m2.add(a2, b2))
              for b1 in m1.elements() for b2 in m2.elements())
        for a1 in m1.elements() for a2 in m2.elements()
    )
    act_rows = []
    for r in ring.elements():
        ra, rb = split_product_element(r1, r2, ring, r)
        row1, row2 = m1.act_row(ra), m2.act_row(rb)
        act_rows.append(tuple(
            enc(row1[a], row2[b]) for a in m1.elements() for b in m2.elements()
        ))
    labels = tuple(
        f"({m1.label(a)},{m2.label(b)})"
        for a in m1.elements() for b in m2.elements()
    )
    return make_module(
        ring, add_rows, tuple(act_rows), kind="product",
        name=f"{m1.name}x{m2.name}", labels=labels, cap=cap,
    )


def split_product_module_element(m1, m2, index):
    return index // m2.size, index % m2.size


def join_product_module_element(m1, m2, a, b):
    return a * m2.size + b


# ---------------------------------------------------------------------------
# submodules


@dataclass(frozen=True)
class Submodule:
    """A subset closed under addition and the full ring action."""

    module: Module
    elements: frozenset
    generators: tuple = field(default=None, compare=False)

    def __post_init__(self):
        mod = self.module
        els = self.elements
        if 0 not in els:
            raise AxiomViolation("submodule must contain 0")
        for a in els:
            for b in els:
                if mod.add(a, b) not in els:
                    raise AxiomViolation("submodule not closed under addition", (a, b))
        for r in mod.ring.elements():
            row = mod.act_row(r)
            for a in els:
                if row[a] not in els:
                    raise AxiomViolation("submodule not closed under action", (r, a))
        if self.generators is not None:
            if _closure_set(mod, self.generators) != els:
                raise AxiomViolation("generators do not generate the element set")

    def members(self):
        return sorted(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def is_zero(self):
        return len(self.elements) == 1

    def is_full(self):
        return len(self.elements) == self.module.size

    def describe(self):
        return self.module.set_label(self.elements)


def _closure_set(module, generators):
    elems = {0}
    frontier = []
    for g in generators:
        for r in module.ring.elements():
            x = module.act(r, g)
            if x not in elems:
                elems.add(x)
                frontier.append(x)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            z = module.add(x, y)
            if z not in elems:
                elems.add(z)
                frontier.append(z)
    return frozenset(elems)


def submodule_closure(module, generators):
    """Least submodule containing the generators."""
    gens = tuple(sorted(set(generators)))
    return Submodule(module, _closure_set(module, gens), generators=gens)


def submodule_from_set(module, elements):
    return Submodule(module, frozenset(elements))


def zero_submodule(module):
    return Submodule(module, frozenset((0,)))


def full_submodule(module):
    return Submodule(module, frozenset(module.elements()))


@lru_cache(maxsize=None)
def enumerate_submodules(module, cap=DEFAULT_CAP):
    """All submodules by incremental one-element extensions, canonical order."""
    if module.size > cap:
        raise SizeCapExceeded("module carrier", module.size, cap)
    known = {frozenset((0,))}
    frontier = [frozenset((0,))]
    while frontier:
        base = frontier.pop()
        for x in module.elements():
            if x in base:
                continue
            grown = _closure_set(module, tuple(base) + (x,))
            if grown not in known:
                known.add(grown)
                frontier.append(grown)
    ordered = sorted(known, key=_canonical_subset_key)
    return tuple(Submodule(module, els) for els in ordered)


def is_submodule_set(module, elements):
    els = frozenset(elements)
    if 0 not in els:
        return False
    for a in els:
        for b in els:
            if module.add(a, b) not in els:
                return False
    for r in module.ring.elements():
        row = module.act_row(r)
        for a in els:
            if row[a] not in els:
                return False
    return True


# ---------------------------------------------------------------------------
# residuals, annihilators, torsion

_ZERO_SET = frozenset((0,))


def colon_set_into_ring(module, n_set, k_set):
    """(N : K) = {x in R : xK <= N} as a raw element set."""
    out = []
    for x in module.ring.elements():
        row = module.act_row(x)
        if all(row[k] in n_set for k in k_set):
            out.append(x)
    return frozenset(out)


def colon_into_ring(n, k_set):
    """(N : K) for a submodule N and nonempty subset K; always an ideal."""
    module = n.module
    return Ideal(module.ring, colon_set_into_ring(module, n.elements, k_set))


def colon_set_into_module(module, n_set, i_set):
    """(N :_M I) = {m : Im <= N} as a raw element set."""
    rows = [module.act_row(a) for a in i_set]
    return frozenset(
        m for m in module.elements() if all(row[m] in n_set for row in rows)
    )


def colon_into_module(n, ideal):
    """(N :_M I) for a submodule N and ideal I; always a submodule."""
    module = n.module
    return Submodule(module, colon_set_into_module(module, n.elements, ideal.elements))


@lru_cache(maxsize=None)
def annihilator_set(module, subset):
    """ann(K) = (0 : K) as a raw element set; cached per (module, subset)."""
    return colon_set_into_ring(module, _ZERO_SET, subset)


def annihilator(module, subset):
    return Ideal(module.ring, annihilator_set(module, frozenset(subset)))


@lru_cache(maxsize=None)
def zero_colon_set(module, i_set):
    """(0 :_M I) as a raw element set; cached per (module, ideal set)."""
    return colon_set_into_module(module, _ZERO_SET, i_set)


@lru_cache(maxsize=None)
def torsion_set(module):
    """T(M) = {m : rm = 0 for some nonzero r}."""
    ring = module.ring
    rows = [module.act_row(r) for r in ring.elements() if r != ring.zero]
    return frozenset(m for m in module.elements() if any(row[m] == 0 for row in rows))


def is_torsion(module):
    return len(torsion_set(module)) == module.size


@lru_cache(maxsize=None)
def zero_divisors_on(ring, module):
    """z(M) = {x in R : xm = 0 for some nonzero m}."""
    return frozenset(
        x for x in ring.elements()
        if any(module.act(x, m) == 0 for m in module.elements() if m != 0)
    )


def scalar_times_set(module, r, elements):
    row = module.act_row(r)
    return frozenset(row[m] for m in elements)


def sum_of_sets(module, sets):
    """N1 + ... + Nk elementwise; submodule sums are already closed."""
    acc = _ZERO_SET
    for s in sets:
        acc = frozenset(module.add(a, b) for a in acc for b in s)
    return acc


def ideal_times_module_set(module, i_set, m_set):
    """IM' = additive closure of {a*m : a in I, m in M'}."""
    products = {module.act(a, m) for a in i_set for m in m_set}
    products.add(0)
    elems = set(products)
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            z = module.add(x, y)
            if z not in elems:
                elems.add(z)
                frontier.append(z)
    return frozenset(elems)


def cyclic_set(module, m):
    """Rm = {rm : r in R}; closed already, being the image of an ideal."""
    return frozenset(module.act(r, m) for r in module.ring.elements())


# ---------------------------------------------------------------------------
# quotients, restrictions


@lru_cache(maxsize=None)
def quotient_module(module, submodule):
    """M/N with the induced action, cosets indexed by least representative."""
    n_set = submodule.elements
    seen = {}
    cosets = []
    for m in module.elements():
        if m in seen:
            continue
        coset = frozenset(module.add(m, x) for x in n_set)
        for y in coset:
            seen[y] = len(cosets)
        cosets.append(coset)
    reps = [min(c) for c in cosets]
    size = len(cosets)
    add_rows = tuple(
        tuple(seen[module.add(reps[i], reps[j])] for j in range(size))
        for i in range(size)
    )
    act_rows = tuple(
        tuple(seen[module.act(r, reps[i])] for i in range(size))
        for r in module.ring.elements()
    )
    labels = tuple("[" + module.label(reps[i]) + "]" for i in range(size))
    return make_module(
        module.ring, add_rows, act_rows, kind="quotient",
        name=f"{module.name}/{module.set_label(n_set)}", labels=labels,
    )


def coset_index_map(module, submodule):
    """Element of M -> index of its coset in quotient_module(M, N)."""
    n_set = submodule.elements
    seen = {}
    count = 0
    for m in module.elements():
        if m in seen:
            continue
        for y in (module.add(m, x) for x in n_set):
            seen[y] = count
        count += 1
    return seen


@lru_cache(maxsize=None)
def submodule_as_module(submodule):
    """N as a module in its own right, same ring and action."""
    module = submodule.module
    members = sorted(submodule.elements)
    index = {m: i for i, m in enumerate(members)}
    add_rows = tuple(
        tuple(index[module.add(a, b)] for b in members) for a in members
    )
    act_rows = tuple(
        tuple(index[module.act(r, a)] for a in members)
        for r in module.ring.elements()
    )
    labels = tuple(module.label(m) for m in members)
    return make_module(
        module.ring, add_rows, act_rows, kind="restriction",
        name=f"{module.name}|{module.set_label(submodule.elements)}", labels=labels,
    )
