"""The statement suite: filters, verdicts, determinism, and mutation kills."""

import pytest

from scomult.catalog import CatalogParams, generate_catalog
from scomult.errors import UnknownStatement
from scomult.modules import (
    full_submodule,
    self_module,
    submodule_from_set,
    zero_colon_set,
    zn_over_zk,
)
from scomult.morphisms import identity_hom, kernel_killer, projection_hom
from scomult.mutations import (
    MUTANTS,
    mutant_toolbox,
    mutation_catalog_params,
    run_mutation_suite,
)
from scomult.rings import (
    make_ring_zn,
    minimal_nonzero_ideals,
    unit_mcs,
    validate_mcs,
)
from scomult.statements import STATEMENTS, verify, verify_all


@pytest.fixture(scope="module")
def small_catalog():
    return generate_catalog(mutation_catalog_params())


@pytest.fixture(scope="module")
def tiny_catalog():
    return generate_catalog(CatalogParams(
        max_ring_order=4, product_moduli=(), max_module_carrier=4))


def test_registry_shape():
    assert len(STATEMENTS) == 26
    assert sorted(STATEMENTS) == [
        "C-DU", "C-M3", "C-SUB", "L-EQ", "P-CY1", "P-EXT", "P-FAM", "P-HOMS",
        "P-LOC", "P-MONO", "P-PF", "P-PROD", "P-SAT", "P-SPR", "T-COM",
        "T-CY2", "T-CY3", "T-DU", "T-HOM", "T-LOC", "T-M3", "T-MIN",
        "T-PRODN", "T-SEC", "T-SSUM", "T-TOR"]


def test_unknown_statement(small_catalog):
    with pytest.raises(UnknownStatement):
        verify("T-NOPE", small_catalog)
    with pytest.raises(UnknownStatement):
        verify_all(small_catalog, ["L-EQ", "T-NOPE"])


def test_empty_catalog_all_vacuous():
    empty = generate_catalog(CatalogParams(max_ring_order=1))
    reports = verify_all(empty)
    assert len(reports) == 26
    assert all(r.verdict == "vacuous" for r in reports)


def test_small_catalog_all_pass(small_catalog):
    reports = verify_all(small_catalog)
    assert all(r.verdict != "fail" for r in reports)
    by_id = {r.statement_id: r for r in reports}
    # no three-factor product fits under ring order 6
    assert by_id["T-PRODN"].verdict == "vacuous"
    assert by_id["P-PROD"].verdict == "pass"
    assert by_id["L-EQ"].verdict == "pass"


def test_statement_filter_runs_subset(small_catalog):
    reports = verify_all(small_catalog, ["T-DU", "L-EQ"])
    assert [r.statement_id for r in reports] == ["L-EQ", "T-DU"]


def test_reports_are_deterministic(small_catalog):
    first = verify("L-EQ", small_catalog)
    second = verify("L-EQ", small_catalog)
    assert first.instances == second.instances
    assert first.verdict == second.verdict == "pass"


def test_report_json_shape(small_catalog):
    report = verify("T-DU", small_catalog)
    doc = report.to_json()
    assert doc["id"] == "T-DU" and doc["verdict"] in ("pass", "fail", "vacuous")
    assert isinstance(doc["instances"], int) and isinstance(doc["ms"], float)
    assert "counterexample" not in doc


# ---------------------------------------------------------------------------
# hypothesis filters: one qualifying and one non-qualifying instance each


def test_thom_filter():
    z4 = make_ring_zn([4])
    m4 = self_module(z4)
    s = unit_mcs(z4)
    assert kernel_killer(identity_hom(m4), s) is not None
    surjection = projection_hom(m4, submodule_from_set(m4, {0, 2}))
    assert kernel_killer(surjection, s) is None


def test_tdu_filter_only_zero_modules_qualify(small_catalog):
    report = verify("T-DU", small_catalog)
    assert report.verdict == "pass"
    assert report.instances >= 1
    assert report.notes["nonzero_instances"] == 0


def test_cdu_filter(small_catalog):
    report = verify("C-DU", small_catalog)
    assert report.verdict == "pass" and report.instances >= 1
    assert report.notes["nonzero_instances"] == 0


def test_pcy1_filter(z6, m6, z2_over_z6):
    minimal = minimal_nonzero_ideals(z6)
    assert any(zero_colon_set(z2_over_z6, i.elements) == frozenset({0})
               for i in minimal)
    assert not any(zero_colon_set(m6, i.elements) == frozenset({0})
                   for i in minimal)


def test_tcy2_filter(small_catalog):
    report = verify("T-CY2", small_catalog)
    assert report.verdict == "pass" and report.instances >= 1
    assert report.notes["already_cyclic"] == report.instances


def test_tcy3_filter(small_catalog):
    report = verify("T-CY3", small_catalog)
    assert report.verdict == "pass" and report.instances >= 1


def test_tmin_filter_and_readings(small_catalog):
    report = verify("T-MIN", small_catalog)
    assert report.verdict == "pass" and report.instances >= 1
    assert report.notes["holds_nonzero_L_reading"] == report.instances
    assert report.notes["holds_all_L_reading"] < report.instances


def test_csub_quotient_side(z6, m6, s1):
    # N = M qualifies for the quotient part with t = 1; a proper N does not
    full = frozenset(m6.elements())
    from scomult.modules import scalar_times_set

    assert scalar_times_set(m6, 1, full) <= full
    assert not scalar_times_set(m6, 1, full) <= frozenset({0, 3})


def test_pspr_and_tsec_record_skips(small_catalog):
    spr = verify("P-SPR", small_catalog)
    sec = verify("T-SEC", small_catalog)
    assert spr.notes["disjointness_skips"] > 0
    assert sec.notes["disjointness_skips"] > 0


def test_product_statements_on_default_instances():
    catalog = generate_catalog(CatalogParams(
        max_ring_order=6, product_moduli=((2, 2), (2, 3))))
    assert verify("P-PROD", catalog).verdict == "pass"
    prodn = verify("T-PRODN", catalog)
    assert prodn.verdict == "vacuous"      # no triples fit under order 6


# ---------------------------------------------------------------------------
# mutation sensitivity


def test_every_mutant_is_killed(small_catalog):
    outcomes = run_mutation_suite(small_catalog)
    assert [name for name, _ in outcomes] == sorted(MUTANTS)
    for name, failed in outcomes:
        assert failed, f"mutant {name} escaped the suite"


def test_expected_kill_sets(small_catalog):
    kills = dict(run_mutation_suite(small_catalog))
    assert kills["lemma_pair_direction_flip"] == ["L-EQ"]
    assert kills["localization_drop_ufactor"] == ["P-LOC", "T-LOC"]
    assert kills["s_prime_quantifier_swap"] == ["P-SPR", "T-M3"]
    assert kills["s_second_drop_disjointness"] == ["T-M3", "T-SEC", "T-SSUM"]
    assert kills["tm3_drop_uniform_clause"] == ["T-M3"]


def test_mutant_failure_reports_carry_counterexamples(small_catalog):
    toolbox = mutant_toolbox("lemma_pair_direction_flip")
    report = verify("L-EQ", small_catalog, toolbox)
    assert report.verdict == "fail"
    assert report.counterexample is not None
    assert "module" in report.counterexample


def test_witness_revalidation_catches_swapped_quantifiers(small_catalog):
    toolbox = mutant_toolbox("s_prime_quantifier_swap")
    report = verify("P-SPR", small_catalog, toolbox)
    assert report.verdict == "fail"
    assert "revalidation" in report.counterexample.get("detail", "")
