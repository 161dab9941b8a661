"""S-theoretic predicates: pins, characterizations, and witness discipline."""

import pytest

from scomult.errors import DisjointnessFailure, PreconditionUnmet
from scomult.modules import (
    full_submodule,
    self_module,
    submodule_from_set,
    zn_over_zk,
)
from scomult.mutations import s_prime_quantifier_swap
from scomult.rings import make_ring_zn, unit_mcs, validate_mcs
from scomult.s_theory import (
    is_comultiplication,
    is_cyclic,
    is_multiplication,
    is_prime_module,
    is_s_comultiplication,
    is_s_cyclic,
    is_s_finite,
    is_s_minimal,
    is_s_multiplication,
    is_s_prime_ideal,
    is_s_prime_submodule,
    is_s_second,
    is_s_torsion_free,
    lemma_equivalence_bundle,
    s_multiplication_general_form,
    s_prime_characterizations,
    s_second_characterizations,
    uniform_multiple,
)


def test_s_prime_pins(m6, s1, s13):
    evens = submodule_from_set(m6, {0, 2, 4})
    w = is_s_prime_submodule(m6, evens, s1)
    assert w.get("s") == 1 and w.validate()
    assert is_s_prime_submodule(m6, evens, s13) is not None
    with pytest.raises(DisjointnessFailure):
        is_s_prime_submodule(m6, full_submodule(m6), s1)


def test_s_prime_ideal_pins(z6, s1):
    from scomult.rings import ideal_from_set

    assert is_s_prime_ideal(z6, ideal_from_set(z6, {0, 3}), s1) is not None
    assert is_s_prime_ideal(z6, ideal_from_set(z6, {0}), s1) is None
    z5 = make_ring_zn([5])
    from scomult.rings import ideal_from_set as ideal
    assert is_s_prime_ideal(z5, ideal(z5, {0}), unit_mcs(z5)) is not None


def test_quantifier_order_regression(m6, s124):
    """Swapping the quantifiers cannot flip the boolean over a finite ring
    (resolver sets absorb products from S), but it does corrupt the witness."""
    zero = submodule_from_set(m6, {0})
    real = is_s_prime_submodule(m6, zero, s124)
    swapped = s_prime_quantifier_swap(m6, zero, s124)
    assert real is not None and swapped is not None       # booleans agree
    assert real.get("s") == 2 and real.validate()
    assert swapped.get("s") == 1 and not swapped.validate()


def test_s_prime_characterizations_agree(m6, s13, s124, m4):
    for module, mcs, p_set in (
        (m6, s13, {0, 2, 4}),
        (m6, s124, {0}),
        (m6, s124, {0, 3}),
        (m4, unit_mcs(m4.ring), {0}),
    ):
        forms = s_prime_characterizations(module, submodule_from_set(module, p_set), mcs)
        assert forms.agree()
        for w in (forms.direct, forms.colon_prime, forms.homothety):
            assert w is None or w.validate()


def test_s_second_pins(m6, m4, s1, s13):
    evens = submodule_from_set(m6, {0, 2, 4})
    w = is_s_second(m6, evens, s1)
    assert w.get("s") == 1 and w.validate()
    two = submodule_from_set(m4, {0, 2})
    assert is_s_second(m4, two, unit_mcs(m4.ring)).get("s") == 1
    with pytest.raises(DisjointnessFailure):
        is_s_second(m6, evens, s13)
    with pytest.raises(PreconditionUnmet):
        is_s_second(m6, submodule_from_set(m6, {0}), s1)


def test_s_second_characterizations_agree(m6, s1, s124):
    for mcs in (s1, s124):
        for n_set in ({0, 2, 4}, {0, 3}, {0, 1, 2, 3, 4, 5}):
            n = submodule_from_set(m6, n_set)
            try:
                forms = s_second_characterizations(m6, n, mcs)
            except DisjointnessFailure:
                continue
            assert forms.agree()


def test_s_comultiplication_pins(m6, v2, s1, z2):
    assert is_s_comultiplication(m6, s1).holds
    result = is_s_comultiplication(v2, validate_mcs(z2, {1}))
    assert not result.holds
    assert len(result.failing) == 2          # a line of the plane
    for _, w in is_s_comultiplication(m6, s1).witnesses:
        assert w.validate()


def test_trivial_s_comultiplication(z6, z2_over_z6):
    # ann(M) meets S, so the property holds outright
    s14 = validate_mcs(z6, {1, 4})
    from scomult.modules import annihilator_set

    assert annihilator_set(z2_over_z6, frozenset({0, 1})) & s14.elements
    assert is_s_comultiplication(z2_over_z6, s14).holds


def test_lemma_bundle_pins(m6, v2, s1, s13, z2, m4):
    assert lemma_equivalence_bundle(m6, s1).verdicts == (True, True, True)
    assert lemma_equivalence_bundle(v2, validate_mcs(z2, {1})).verdicts == \
        (False, False, False)
    bundle = lemma_equivalence_bundle(m4, validate_mcs(m4.ring, {1, 3}))
    assert bundle.agree()


def test_comultiplication_and_multiplication_pins(m6, v2):
    assert is_comultiplication(m6)
    assert not is_comultiplication(v2)
    assert not is_multiplication(v2)       # lines are not ideal multiples
    assert is_multiplication(self_module(make_ring_zn([5])))


def test_comultiplication_implies_s_comultiplication(m6):
    from scomult.rings import enumerate_mcs

    assert is_comultiplication(m6)
    for mcs in enumerate_mcs(m6.ring):
        assert is_s_comultiplication(m6, mcs).holds


def test_s_multiplication_reduction_matches_general_form(m6, v2, s1, s13, z2):
    for module, mcs in ((m6, s1), (m6, s13), (v2, validate_mcs(z2, {1}))):
        assert is_s_multiplication(module, mcs).holds == \
            s_multiplication_general_form(module, mcs)


def test_s_cyclic_pins(m6, v2, s1, z2):
    w = is_s_cyclic(m6, s1)
    assert (w.get("s"), w.get("element")) == (1, 1) and w.validate()
    assert is_s_cyclic(v2, validate_mcs(z2, {1})) is None
    z22 = make_ring_zn([2, 2])
    w = is_s_cyclic(self_module(z22), unit_mcs(z22))
    assert (w.get("s"), w.get("element")) == (z22.one, z22.one)


def test_s_finite_pins(m6, s1):
    w = is_s_finite(m6, full_submodule(m6), s1)
    assert w.get("generators") == (1,) and w.validate()
    w = is_s_finite(m6, submodule_from_set(m6, {0}), s1)
    assert w.get("generators") == ()


def test_s_torsion_free_pins(m6, s1, s13):
    z5 = make_ring_zn([5])
    assert is_s_torsion_free(self_module(z5), unit_mcs(z5)).get("s") == 1
    assert is_s_torsion_free(m6, s1) is None
    w = is_s_torsion_free(m6, s13)
    assert w is not None and w.validate()


def test_s_minimal_pins(m4, s1):
    z5 = make_ring_zn([5])
    m5 = self_module(z5)
    steps = is_s_minimal(m5, full_submodule(m5), unit_mcs(z5))
    assert steps is not None and all(w.validate() for w in steps.values())
    assert is_s_minimal(m5, full_submodule(m5), unit_mcs(z5),
                        include_zero=True) is None
    assert is_s_minimal(m4, full_submodule(m4), unit_mcs(m4.ring)) is None


def test_prime_module_pins(m6, v2):
    assert is_prime_module(v2)
    assert not is_prime_module(m6)


def test_uniform_multiple_always_found(m6, s13, s124):
    for mcs in (s13, s124):
        for n_set in ({0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}):
            w = uniform_multiple(m6, frozenset(n_set), mcs)
            assert w is not None and w.validate()


def test_reduction_laws_with_trivial_mcs(m6, v2, s1, z2):
    """With S = {1} every S-predicate is its classical counterpart."""
    from scomult.modules import annihilator_set, enumerate_submodules
    from scomult.rings import is_prime_ideal_set
    from scomult.s_theory import is_prime_submodule_set, is_second_submodule_set

    one_v2 = validate_mcs(z2, {1})
    assert is_s_comultiplication(m6, s1).holds == is_comultiplication(m6)
    assert is_s_comultiplication(v2, one_v2).holds == is_comultiplication(v2)
    assert (is_s_cyclic(m6, s1) is not None) == is_cyclic(m6)
    assert (is_s_cyclic(v2, one_v2) is not None) == is_cyclic(v2)
    for module, mcs in ((m6, s1), (v2, one_v2)):
        for p in enumerate_submodules(module):
            try:
                s_verdict = is_s_prime_submodule(module, p, mcs) is not None
            except DisjointnessFailure:
                assert p.is_full()
                continue
            assert s_verdict == is_prime_submodule_set(module, p.elements)
        for n in enumerate_submodules(module):
            if n.is_zero():
                continue
            try:
                s_verdict = is_s_second(module, n, mcs) is not None
            except DisjointnessFailure:
                continue
            assert s_verdict == is_second_submodule_set(module, n.elements)


def test_unit_mcs_collapse(m6):
    """S inside the units reduces every S-notion to the classical one."""
    from scomult.modules import enumerate_submodules
    from scomult.rings import validate_mcs as v
    from scomult.s_theory import is_prime_submodule_set, is_second_submodule_set

    s15 = v(m6.ring, {1, 5})
    assert is_s_comultiplication(m6, s15).holds == is_comultiplication(m6)
    for p in enumerate_submodules(m6):
        try:
            s_verdict = is_s_prime_submodule(m6, p, s15) is not None
        except DisjointnessFailure:
            continue
        assert s_verdict == is_prime_submodule_set(m6, p.elements)
    for n in enumerate_submodules(m6):
        if n.is_zero():
            continue
        try:
            s_verdict = is_s_second(m6, n, s15) is not None
        except DisjointnessFailure:
            continue
        assert s_verdict == is_second_submodule_set(m6, n.elements)


def test_finite_analog_of_the_divisible_example():
    """Z_{p^t} towers over Z_{p^k}: the finite stand-ins for the divisible
    example are comultiplication outright, so nothing qualitative survives
    the truncation; recorded as a computed fact."""
    z8 = make_ring_zn([8])
    for d in (2, 4, 8):
        module = zn_over_zk(z8, d) if d != 8 else self_module(z8)
        assert is_comultiplication(module)
        assert is_s_comultiplication(module, unit_mcs(z8)).holds
