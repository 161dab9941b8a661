"""Shared fixtures and the independent brute-force oracles.

The oracles deliberately avoid the library's closure-based enumeration:
they filter raw subsets against the defining invariants, so agreement
between the two is a real check rather than a tautology.
"""

import pytest

from scomult.modules import self_module, zn_over_zk, direct_sum_module
from scomult.rings import make_ring_zn, validate_mcs


def brute_force_ideals(ring):
    """Every subset containing 0 that passes the ideal invariant."""
    size = ring.order
    out = []
    for mask in range(1, 1 << size, 2):          # bit 0 = the zero element
        members = [i for i in range(size) if (mask >> i) & 1]
        ok = True
        for a in members:
            for b in members:
                if not (mask >> ring.add(a, b)) & 1:
                    ok = False
                    break
            if not ok:
                break
            for r in range(size):
                if not (mask >> ring.mul(r, a)) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(members))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def brute_force_submodules(module):
    """Every subset containing 0 that passes the submodule invariant."""
    size = module.size
    act_rows = [module.act_row(r) for r in module.ring.elements()]
    out = []
    for mask in range(1, 1 << size, 2):
        members = [i for i in range(size) if (mask >> i) & 1]
        ok = True
        for a in members:
            row = module._add_rows[a]
            for b in members:
                if not (mask >> row[b]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for row in act_rows:
                for a in members:
                    if not (mask >> row[a]) & 1:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(frozenset(members))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@pytest.fixture(scope="session")
def z6():
    return make_ring_zn([6])


@pytest.fixture(scope="session")
def m6(z6):
    return self_module(z6)


@pytest.fixture(scope="session")
def z4():
    return make_ring_zn([4])


@pytest.fixture(scope="session")
def m4(z4):
    return self_module(z4)


@pytest.fixture(scope="session")
def z2():
    return make_ring_zn([2])


@pytest.fixture(scope="session")
def v2(z2):
    """The plane over the two-element field."""
    return direct_sum_module(z2, [2, 2])


@pytest.fixture(scope="session")
def z2_over_z6(z6):
    return zn_over_zk(z6, 2)


@pytest.fixture(scope="session")
def s1(z6):
    return validate_mcs(z6, {1})


@pytest.fixture(scope="session")
def s13(z6):
    return validate_mcs(z6, {1, 3})


@pytest.fixture(scope="session")
def s124(z6):
    return validate_mcs(z6, {1, 2, 4})
