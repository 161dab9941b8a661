"""Deliberately broken predicate variants for exercising the suite.

A verifier that cannot fail verifies nothing.  Each mutant swaps one
toolbox entry for a subtly wrong implementation; running the statement
suite with a mutant installed must make at least one statement fail.

Two of the mutants cannot change any boolean verdict over a finite ring:
closure of S under products means a per-pair witness can always be
multiplied up to a uniform one, and the product of all elements of S is a
multiple of each of them.  Those mutants return witnesses they never
verified, and the suite catches them through witness revalidation.
"""

from __future__ import annotations

from dataclasses import replace

from .catalog import CatalogParams, generate_catalog
from .errors import PreconditionUnmet
from .modules import (
    Submodule,
    annihilator_set,
    colon_set_into_ring,
    enumerate_submodules,
    scalar_times_set,
)
from .s_theory import _require_disjoint, _scalar_multiples, LemmaPairResult
from .statements import Toolbox, verify_all
from .witnesses import Witness

_ZERO = frozenset((0,))


def s_prime_quantifier_swap(module, p, mcs):
    """Checks each pair am in P on its own and reports the last pair's s."""
    p_set = p.elements if isinstance(p, Submodule) else frozenset(p)
    colon = colon_set_into_ring(module, p_set, frozenset(module.elements()))
    _require_disjoint("(P:M) and S", colon, mcs)
    ring = module.ring
    last = mcs.members()[0]
    for a in ring.elements():
        a_row = module.act_row(a)
        for m in module.elements():
            if a_row[m] not in p_set:
                continue
            found = None
            for s in mcs:
                if ring.mul(s, a) in colon or module.act(s, m) in p_set:
                    found = s
                    break
            if found is None:
                return None
            last = found
    return Witness.make("s-prime-submodule", module=module, p=p_set, mcs=mcs,
                        s=last)


def s_second_drop_disjointness(module, n, mcs):
    """Skips the ann(N) and S disjointness precondition."""
    n_sub = n if isinstance(n, Submodule) else Submodule(module, frozenset(n))
    if n_sub.is_zero():
        raise PreconditionUnmet("S-second requires a nonzero submodule")
    multiples = _scalar_multiples(module, n_sub.elements)
    ring = module.ring
    for s in mcs:
        s_image = multiples[s]
        if all(
            multiples[ring.mul(s, a)] == _ZERO or multiples[ring.mul(s, a)] == s_image
            for a in ring.elements()
        ):
            return Witness.make("s-second", module=module, n=n_sub.elements,
                                mcs=mcs, s=s)
    return None


def lemma_pair_direction_flip(module, mcs):
    """Tests sK <= N instead of sN <= K."""
    subs = enumerate_submodules(module)
    anns = {n: annihilator_set(module, n.elements) for n in subs}
    found = []
    for k in subs:
        for n in subs:
            if not anns[k] <= anns[n]:
                continue
            witness = None
            for s in mcs:
                if scalar_times_set(module, s, k.elements) <= n.elements:
                    witness = Witness.make("lemma-pair", module=module,
                                           k=k.elements, n=n.elements, s=s)
                    break
            if witness is None:
                return LemmaPairResult(False, tuple(found), (k, n))
            found.append(((k, n), witness))
    return LemmaPairResult(True, tuple(found), None)


def uniform_multiple_unchecked(module, n, mcs):
    """Emits the first element of S without verifying sN <= s'N."""
    n_set = n.elements if isinstance(n, Submodule) else frozenset(n)
    return Witness.make("uniform-multiple", module=module, n=n_set, mcs=mcs,
                        s=mcs.members()[0])


def localization_drop_ufactor(add, neg, act, u_candidates):
    """Relates pairs only when s'x - sx' is exactly zero."""

    def related(p, q):
        x, s = p
        y, t = q
        return add(act(t, x), neg(act(s, y))) == 0

    return related


MUTANTS = {
    "s_prime_quantifier_swap": ("is_s_prime_submodule", s_prime_quantifier_swap),
    "s_second_drop_disjointness": ("is_s_second", s_second_drop_disjointness),
    "localization_drop_ufactor": ("localization_relation", localization_drop_ufactor),
    "lemma_pair_direction_flip": ("lemma_pair_form", lemma_pair_direction_flip),
    "tm3_drop_uniform_clause": ("uniform_multiple", uniform_multiple_unchecked),
}


def mutant_toolbox(name):
    field_name, fn = MUTANTS[name]
    return replace(Toolbox(), **{field_name: fn, "mutated": (name,)})


def mutation_catalog_params():
    """A reduced catalog; every mutant is killable inside the Z6 family."""
    return CatalogParams(max_ring_order=6, product_moduli=((2, 2), (2, 3)),
                         max_module_carrier=8)


def run_mutation_suite(catalog=None, statement_ids=None):
    """Run the suite once per mutant; report which statements each one broke.

    Returns a list of (mutant name, [failed statement ids]) in mutant-name
    order.  A mutant with an empty list escaped the suite.
    """
    if catalog is None:
        catalog = generate_catalog(mutation_catalog_params())
    outcomes = []
    for name in sorted(MUTANTS):
        reports = verify_all(catalog, statement_ids, toolbox=mutant_toolbox(name))
        failed = [r.statement_id for r in reports if r.verdict == "fail"]
        outcomes.append((name, failed))
    return outcomes
