"""Module homomorphisms, homotheties, and their S-variant classifications.

A homomorphism is a full value table on the source carrier, validated for
additivity and R-linearity.  The S-variants (S-zero, S-monic, S-epic)
search the m.c.s. in canonical order for a single element making the
respective condition hold; `*_with` helpers check one candidate so that
characterization proofs can pin a shared witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .errors import AxiomViolation, PreconditionUnmet, SizeCapExceeded
from .modules import (
    Submodule,
    quotient_module,
    coset_index_map,
    submodule_as_module,
    zero_divisors_on,
)
from .rings import units
from .witnesses import Witness, revalidator


@dataclass(frozen=True)
class ModuleHom:
    """An R-linear map between modules over the same ring."""

    source: object
    target: object
    values: tuple

    def __call__(self, m):
        return self.values[m]

    def describe(self):
        return f"{self.source.name}->{self.target.name}"


def make_hom(source, target, values):
    """Validated homomorphism from a full value table."""
    if source.ring != target.ring:
        raise AxiomViolation("homomorphism requires a common base ring")
    values = tuple(values)
    if len(values) != source.size:
        raise AxiomViolation("value table must cover the source carrier")
    for v in values:
        if not (0 <= v < target.size):
            raise AxiomViolation("value out of range", (v,))
    for a in source.elements():
        for b in source.elements():
            if values[source.add(a, b)] != target.add(values[a], values[b]):
                raise AxiomViolation("map is not additive", (a, b))
    for r in source.ring.elements():
        src_row = source.act_row(r)
        tgt_row = target.act_row(r)
        for m in source.elements():
            if values[src_row[m]] != tgt_row[values[m]]:
                raise AxiomViolation("map is not linear", (r, m))
    return ModuleHom(source, target, values)


def identity_hom(module):
    return ModuleHom(module, module, tuple(module.elements()))


def multiplication_hom(module, a):
    """The homothety m -> a*m on the module itself."""
    return ModuleHom(module, module, module.act_row(a))


def inclusion_hom(submodule):
    """N (as a module) -> M."""
    n_mod = submodule_as_module(submodule)
    return ModuleHom(n_mod, submodule.module, tuple(sorted(submodule.elements)))


def projection_hom(module, submodule):
    """M -> M/N, the canonical surjection."""
    q = quotient_module(module, submodule)
    index = coset_index_map(module, submodule)
    return ModuleHom(module, q, tuple(index[m] for m in module.elements()))


def kernel(f):
    return Submodule(f.source, frozenset(m for m in f.source.elements()
                                         if f.values[m] == 0))


def image(f):
    return Submodule(f.target, frozenset(f.values))


def is_zero_hom(f):
    return all(v == 0 for v in f.values)


def is_monic(f):
    return len(set(f.values)) == f.source.size


def is_epic(f):
    return len(set(f.values)) == f.target.size


# ---------------------------------------------------------------------------
# S-variants

def is_s_zero_with(f, s):
    row = f.target.act_row(s)
    return all(row[v] == 0 for v in f.values)


def is_s_monic_with(f, s):
    row = f.source.act_row(s)
    return all(row[m] == 0 for m in f.source.elements() if f.values[m] == 0)


def is_s_epic_with(f, s):
    row = f.target.act_row(s)
    img = set(f.values)
    return all(row[m] in img for m in f.target.elements())


def is_s_zero(f, mcs):
    """First s with s*f(m) = 0 for every m."""
    for s in mcs:
        if is_s_zero_with(f, s):
            return Witness.make("s-zero", hom=f, s=s)
    return None


def is_s_monic(f, mcs):
    """First s with f(m) = 0 implying sm = 0; cross-checked via s*Ker(f)."""
    direct = None
    for s in mcs:
        if is_s_monic_with(f, s):
            direct = Witness.make("s-monic", hom=f, s=s)
            break
    via_kernel = is_s_monic_via_kernel(f, mcs)
    if (direct is None) != (via_kernel is None):
        raise AxiomViolation("S-monic characterizations disagree")
    if direct is not None and direct.get("s") != via_kernel.get("s"):
        raise AxiomViolation("S-monic characterizations picked different witnesses")
    return direct


def is_s_monic_via_kernel(f, mcs):
    """First s with s*Ker(f) = 0, the equivalent kernel form."""
    ker = [m for m in f.source.elements() if f.values[m] == 0]
    for s in mcs:
        row = f.source.act_row(s)
        if all(row[m] == 0 for m in ker):
            return Witness.make("s-monic", hom=f, s=s)
    return None


def is_s_epic(f, mcs):
    """First s with s*M' contained in Im(f)."""
    for s in mcs:
        if is_s_epic_with(f, s):
            return Witness.make("s-epic", hom=f, s=s)
    return None


@revalidator("s-zero")
def _check_s_zero(w):
    return is_s_zero_with(w.get("hom"), w.get("s"))


@revalidator("s-monic")
def _check_s_monic(w):
    return is_s_monic_with(w.get("hom"), w.get("s"))


@revalidator("s-epic")
def _check_s_epic(w):
    return is_s_epic_with(w.get("hom"), w.get("s"))


# ---------------------------------------------------------------------------
# homotheties


@lru_cache(maxsize=None)
def homothety_family(module, submodule):
    """All homotheties a. on M/P, indexed by a."""
    q = quotient_module(module, submodule)
    return tuple(ModuleHom(q, q, q.act_row(a)) for a in module.ring.elements())


def homothety(module, submodule, a):
    """The multiplication-by-a map on M/P."""
    return homothety_family(module, submodule)[a]


@lru_cache(maxsize=None)
def homothety_on_family(submodule):
    """All homotheties a. on N viewed as a module."""
    n_mod = submodule_as_module(submodule)
    return tuple(ModuleHom(n_mod, n_mod, n_mod.act_row(a))
                 for a in submodule.module.ring.elements())


def homothety_on(submodule, a):
    """The multiplication-by-a map on N."""
    return homothety_on_family(submodule)[a]


# ---------------------------------------------------------------------------
# bridges and transfer


@dataclass(frozen=True)
class BridgeReport:
    monic_forward: bool
    monic_converse: bool | None   # None when the side condition fails
    epic_forward: bool
    epic_converse: bool | None

    def holds(self):
        return (
            self.monic_forward
            and self.epic_forward
            and self.monic_converse in (None, True)
            and self.epic_converse in (None, True)
        )


def monic_epic_bridge(f, mcs):
    """Forward claims and their side-conditioned converses for one hom."""
    ring = f.source.ring
    monic_forward = (not is_monic(f)) or is_s_monic(f, mcs) is not None
    epic_forward = (not is_epic(f)) or is_s_epic(f, mcs) is not None
    monic_converse = None
    if not (mcs.elements & zero_divisors_on(ring, f.source)):
        monic_converse = (is_s_monic(f, mcs) is None) or is_monic(f)
    epic_converse = None
    if mcs.elements <= units(ring):
        epic_converse = (is_s_epic(f, mcs) is None) or is_epic(f)
    return BridgeReport(monic_forward, monic_converse, epic_forward, epic_converse)


@revalidator("kernel-killer")
def _check_kernel_killer(w):
    f = w.get("hom")
    row = f.source.act_row(w.get("s"))
    return all(row[m] == 0 for m in f.source.elements() if f.values[m] == 0)


def kernel_killer(f, mcs):
    """First t in S with t*Ker(f) = 0, or None."""
    ker = [m for m in f.source.elements() if f.values[m] == 0]
    for t in mcs:
        row = f.source.act_row(t)
        if all(row[m] == 0 for m in ker):
            return Witness.make("kernel-killer", hom=f, s=t)
    return None


@dataclass(frozen=True)
class TransferReport:
    kernel_witness: Witness
    downward_applicable: bool     # target had the property
    downward_holds: bool | None
    upward_applicable: bool       # f surjective and source had the property
    upward_holds: bool | None
    failing_submodule: object

    def holds(self):
        return self.downward_holds in (None, True) and self.upward_holds in (None, True)


def transfer_theorem_check(f, mcs):
    """Transfer of the S-comultiplication property along f when tKer(f)=0."""
    from .s_theory import is_s_comultiplication

    witness = kernel_killer(f, mcs)
    if witness is None:
        raise PreconditionUnmet("no element of S annihilates the kernel")
    failing = None
    target_res = is_s_comultiplication(f.target, mcs)
    source_res = is_s_comultiplication(f.source, mcs)
    downward_applicable = target_res.holds
    downward = None
    if downward_applicable:
        downward = source_res.holds
        if not downward:
            failing = source_res.failing
    upward_applicable = is_epic(f) and source_res.holds
    upward = None
    if upward_applicable:
        upward = target_res.holds
        if not upward:
            failing = target_res.failing
    return TransferReport(witness, downward_applicable, downward,
                          upward_applicable, upward, failing)


# ---------------------------------------------------------------------------
# hom enumeration


def _additive_generators(module):
    """Greedy additive generating sequence with BFS parents for rebuilding."""
    gens = []
    span = {0}
    order = [0]
    parent = {0: None}
    while len(span) < module.size:
        g = min(m for m in module.elements() if m not in span)
        gens.append(g)
        gi = len(gens) - 1
        frontier = list(order)
        while frontier:
            x = frontier.pop(0)
            y = module.add(x, g)
            if y not in span:
                span.add(y)
                parent[y] = (x, gi)
                order.append(y)
                frontier.append(y)
    return gens, order, parent


def _additive_order(module, m):
    k = 1
    acc = m
    while acc != 0:
        acc = module.add(acc, m)
        k += 1
    return k


def enumerate_homs(source, target, cap=8):
    """All homs source -> target, for small carriers."""
    if source.size > cap or target.size > cap:
        raise SizeCapExceeded("hom enumeration carrier", max(source.size, target.size), cap)
    gens, order, parent = _additive_generators(source)
    if not gens:
        return (ModuleHom(source, target, (0,)),)
    candidate_images = []
    for g in gens:
        o = _additive_order(source, g)
        ok = []
        for y in target.elements():
            acc = 0
            for _ in range(o):
                acc = target.add(acc, y)
            if acc == 0:
                ok.append(y)
        candidate_images.append(ok)
    out = []
    for combo in iproduct(*candidate_images):
        values = [0] * source.size
        for m in order[1:]:
            x, gi = parent[m]
            values[m] = target.add(values[x], combo[gi])
        try:
            out.append(make_hom(source, target, values))
        except AxiomViolation:
            continue
    return tuple(out)
