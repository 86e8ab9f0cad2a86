"""The claim catalogue: one deliberate failure, everything else green."""

import json
import re
import time

import pytest

from braidcat.audit import AuditReport, check_identifiers, run_audit

STATUS_SHAPE = re.compile(r"^(pass|fail|inconclusive|resolved:.+)$")


@pytest.fixture(scope="module")
def report():
    return run_audit()


def test_identifiers_unique_and_sorted(report):
    idents = [r.ident for r in report.results]
    assert idents == sorted(idents)
    assert len(set(idents)) == len(idents)
    assert idents == check_identifiers()


def test_every_status_well_formed(report):
    for r in report.results:
        assert STATUS_SHAPE.match(r.status), r.ident
        assert r.seconds >= 0


def test_single_deliberate_failure(report):
    # The embedding search finds certificates, so the emptiness claim is
    # the one red entry of the catalogue.
    assert [r.ident for r in report.failed] == ["embed:main"]
    assert report.inconclusive == []
    assert report.exit_code == 1


def test_resolved_verdicts(report):
    by_id = {r.ident: r for r in report.results}
    assert by_id["dictionary:e"].status == "resolved:e=A b a"
    assert by_id["dictionary:f"].status == "resolved:f=C b c"
    assert by_id["dictionary:bhat"].status == "resolved:bhat=C^2 b c^2"
    assert by_id["dictionary:c-from-xy"].status == "resolved:c=X y"
    assert by_id["convention:conjugation"].status == "resolved:left"
    assert by_id["index:matrix-pair"].status == "resolved:1"
    witness = by_id["index:matrix-pair"].witness
    assert witness["quotient_of_generators_is_S"] is True
    assert witness["hlt"]["count"] == 1 and witness["felsch"]["count"] == 1


def test_embedding_failure_witness(report):
    by_id = {r.ident: r for r in report.results}
    witness = by_id["embed:main"].witness
    assert witness["certificates_up_to_symmetry"] == 32
    assert witness["certificates_total"] == 96
    assert witness["all_verified"] is True
    assert witness["example"]["node_images"]
    assert witness["prunes"]["distance"] > 0

    obstruction = by_id["embed:distance-obstruction"]
    assert obstruction.status == "pass"
    assert obstruction.witness["short-arc-far-images"] > 0
    example = obstruction.witness["example"]
    assert example["source_distance"] == "1/3"


def test_index_four_stays_small(report):
    by_id = {r.ident: r for r in report.results}
    witness = by_id["index:four"].witness
    assert witness["hlt"]["count"] == 4 and witness["felsch"]["count"] == 4
    assert witness["defined_below_thousand"] is True
    assert witness["tables_verified"] is True


def test_selection_by_prefix_and_full_id():
    partial = run_audit(only=["index"])
    assert [r.ident for r in partial.results] == [
        "index:four",
        "index:matrix-pair",
        "index:whole-ax",
        "index:whole-xy",
    ]
    assert partial.exit_code == 0

    single = run_audit(only=["embed:main"])
    assert len(single.results) == 1
    assert single.exit_code == 1


def test_empty_selection_is_empty_report():
    report = run_audit(only=[])
    assert report.results == ()
    assert report.exit_code == 0


def test_unknown_selector_rejected():
    with pytest.raises(ValueError, match="matches no check"):
        run_audit(only=["garbage"])
    with pytest.raises(ValueError, match="convention"):
        run_audit(convention="sideways")


def test_right_convention_breaks_the_asymmetric_orbits():
    report = run_audit(only=["orbit"], convention="right")
    statuses = {r.ident: r.status for r in report.results}
    assert statuses["orbit:x-a"] == "fail"
    assert statuses["orbit:y-a"] == "fail"
    assert statuses["orbit:y-c"] == "fail"
    # the period-two orbit reads the same in both directions
    assert statuses["orbit:x-b"] == "pass"
    assert report.exit_code == 1
    assert "right" in report.meta["conjugation"]


def test_tiny_cap_is_inconclusive_not_failed():
    report = run_audit(only=["index:four"], cap=2)
    assert [r.status for r in report.results] == ["inconclusive"]
    assert report.exit_code == 2


def test_fail_takes_precedence_over_inconclusive():
    report = run_audit(only=["embed:main", "index:four"], cap=2)
    assert report.exit_code == 1


def test_json_round_trip(report):
    data = report.to_json_dict()
    json.dumps(data)
    again = AuditReport.from_json_dict(data)
    assert again.to_json_dict() == data
    stripped = report.to_json_dict(include_timing=False)
    assert all("seconds" not in entry for entry in stripped["results"])


def test_deterministic_modulo_timing(report):
    second = run_audit()
    assert report.to_json_dict(include_timing=False) == second.to_json_dict(
        include_timing=False
    )


def test_text_rendering(report):
    text = report.to_text()
    lines = text.splitlines()
    assert len(lines) == len(report.results) + 1
    assert lines[-1].endswith("1 failed, 0 inconclusive")


def test_full_catalogue_under_five_seconds():
    start = time.perf_counter()
    run_audit()
    assert time.perf_counter() - start < 5.0
