import json

import pytest

from makalg.algebra import algebra_for
from makalg.errors import OutOfRangeError
from makalg.scalars import validate_parameters
from makalg.verify import (
    VerificationReport,
    check_definition_relations,
    multi_parameter_fuzz,
    run_suites,
    verify_b_presentation,
    verify_definition_presentation,
    verify_lemma_suite,
    verify_yokonuma_presentation,
)

CASES = [
    validate_parameters(3, 2, "3/2", [1, -1]),
    validate_parameters(2, 3, 2, [1, 2, 4]),
    validate_parameters(3, 1, "3/2", [1]),
    validate_parameters(4, 2, "-2/3", ["1/2", 5]),
]


@pytest.mark.parametrize("P", CASES, ids=str)
def test_all_suites_pass(P):
    for suite in (verify_definition_presentation, verify_yokonuma_presentation, verify_b_presentation, verify_lemma_suite):
        report = suite(P)
        assert report.passed, [c.relation for c in report.failures]
        assert report.checks


def test_expected_instances_present():
    yh = verify_yokonuma_presentation(validate_parameters(4, 2, 2, [1, -1]))
    names = {c.relation for c in yh.checks}
    assert "yh.braid(i=1)" in names
    assert "yh.g_commute(i=1,j=3)" in names
    b = verify_b_presentation(validate_parameters(2, 3, 2, [1, 2, 4]))
    assert sum(1 for c in b.checks if c.relation.startswith("b.orthogonal")) == 81
    assert "b.sum" in {c.relation for c in b.checks}
    lemmas = verify_lemma_suite(validate_parameters(3, 2, "3/2", [1, -1]))
    names = {c.relation for c in lemmas.checks}
    assert {"e_rational_form(i=1)", "e_rational_form(i=2)", "unitriangular(w=[3, 2, 1])", "T_symmetric_commute(p=1,sum)"} <= names


def test_broken_images_are_reported_with_witness():
    P = validate_parameters(2, 2, "3/2", [1, -1])
    A = algebra_for(P)
    report = VerificationReport("def", [P])
    # g_1 in place of T_1 violates the T-quadratic relation
    check_definition_relations(A, [A.t(1), A.t(2)], [A.g(1)], P, report)
    assert not report.passed
    failed = {c.relation for c in report.failures}
    assert "def.quadratic(i=1)" in failed
    witness = report.failures[0].witness["difference"]
    assert witness["terms"]
    data = json.loads(json.dumps(report.to_dict()))
    assert data["pass"] is False and data["failures"] == len(report.failures)
    assert "FAIL" in report.table()


def test_fuzz():
    report = multi_parameter_fuzz(2, 2, 3, 7)
    assert report.passed
    assert len(report.contexts) == 3
    assert multi_parameter_fuzz(3, 3, 1, 0, suites=("def", "yh", "b")).passed
    with pytest.raises(OutOfRangeError):
        multi_parameter_fuzz(2, 2, 0, 1)


def test_fuzz_is_deterministic():
    a = multi_parameter_fuzz(2, 2, 2, 5, suites=("def",)).to_dict()
    b = multi_parameter_fuzz(2, 2, 2, 5, suites=("def",)).to_dict()
    assert a == b


def test_run_suites_names():
    assert run_suites(CASES[0]).suite == "all"
    assert run_suites(CASES[0], ("def", "b")).suite == "def+b"
