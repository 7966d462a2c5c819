import json

import pytest

from effcone import linalg
from effcone.moduli import tables
from effcone.moduli.action import s6_action_on_curves
from effcone.moduli.generators import parse_combination, sweep_generators
from effcone.moduli.lattice import canonical_class
from effcone.verifier import (
    CHECK_IDS, ModelData, full_report, membership_sweep, run_check, verify_decompositions,
    verify_m05_duality, with_changes,
)

# orbit sizes in the order of the printed table
TABLE_SIZES = [1, 6, 15, 45, 60, 72, 120, 120, 180, 6, 10, 30, 60, 90, 90, 180, 180,
               360, 360, 360, 120, 360, 360, 360, 360]


def test_table_sizes_are_the_embedded_ones():
    assert [s for _, _, s, _ in tables.COEXTREMAL_TABLE] == TABLE_SIZES
    assert sum(TABLE_SIZES) == 3905


def test_orbits_match_table(coextremal_rows):
    rows = coextremal_rows
    assert len(rows) == 25
    assert sum(r.size for r in rows) == 3905
    assert sorted((r.degree, r.size) for r in rows) == sorted(
        (d, s) for _, d, s, _ in tables.COEXTREMAL_TABLE)
    degrees = [r.degree for r in rows]
    assert degrees == sorted(degrees)


def test_orbit_sizes_agree_with_full_group_oracle(coextremal_rows):
    # union-find over generators vs. applying all 720 matrices directly
    mats = list(s6_action_on_curves().elements.values())
    for row in coextremal_rows:
        orbit = {linalg.mat_vec(m, row.representative) for m in mats}
        assert len(orbit) == row.size
        assert orbit == set(row.members)


def test_printed_representatives_are_in_matching_orbits(coextremal_rows):
    where = {m: r for r in coextremal_rows for m in r.members}
    for idx, degree, size, rep in tables.COEXTREMAL_TABLE:
        assert where[rep].degree == degree and where[rep].size == size, idx


def test_m05_duality_and_perturbation():
    assert verify_m05_duality().passed
    xi = [v for v in ModelData.default().m05_xi if v.coords != (1, -1, 0, 0, 0)]
    res = verify_m05_duality(with_changes(m05_xi=xi))
    assert not res.passed
    assert res.witness["side"] == "dual-not-in-b"
    assert res.witness["generator"] is not None


def test_m05_duplicate_generators_still_pass():
    data = ModelData.default()
    assert verify_m05_duality(with_changes(m05_xi=data.m05_xi + data.m05_xi[:3])).passed


def test_decomposition_mutation_fails():
    assert verify_decompositions().passed
    changed = dict(tables.DECOMPOSITIONS)
    changed[1] = changed[1].replace("2B_246", "B_246")
    res = verify_decompositions(with_changes(decompositions=changed))
    assert not res.passed and res.witness["failed"] == [1]


def test_degree_check_fails_for_wrong_canonical_class():
    assert run_check("degree-column").passed
    res = run_check("degree-column", with_changes(canonical=canonical_class(-3)))
    assert not res.passed and len(res.witness["failed"]) == 25


def test_empty_gamma_is_recorded_not_raised():
    res = run_check("coextremal-orbits", with_changes(gamma=[]))
    assert not res.passed
    assert "empty" in res.witness["error"]


def test_unknown_check():
    with pytest.raises(KeyError):
        run_check("no-such-check")


def test_sweep_with_printed_coefficients_as_hints(tabs):
    gens = sweep_generators(tabs)
    reps = {idx: rep for idx, _, _, rep in tables.COEXTREMAL_TABLE}
    hints = {reps[i]: parse_combination(e) for i, e in tables.DECOMPOSITIONS.items()}
    res = membership_sweep(list(hints), gens, hints=hints)
    assert res["members"] == 25 and not res["failures"]
    for rep, dec in zip(hints, res["decompositions"]):
        assert dec == hints[rep]


def test_sweep_negated_ray_gets_separator(tabs):
    gens = sweep_generators(tabs)
    ray = tuple(-x for x in tables.COEXTREMAL_TABLE[0][3])
    res = membership_sweep([ray], gens)
    assert res["members"] == 0
    (bad, sep), = res["failures"]
    assert linalg.dot(sep, ray) < 0
    assert all(linalg.dot(sep, g) >= 0 for g in gens.values())


def test_sweep_sequential_and_parallel_agree(tabs, coextremal_rows):
    gens = sweep_generators(tabs)
    rays = [m for r in coextremal_rows[:6] for m in r.members][:150]
    seq = membership_sweep(rays, gens, threads=1)
    par = membership_sweep(rays, gens, threads=2)
    assert seq == par


@pytest.fixture(scope="module")
def clean_report():
    return full_report()


def test_clean_report_passes(clean_report):
    assert clean_report.passed
    assert len(clean_report.checks) == len(CHECK_IDS) >= 10
    assert [c.check_id for c in clean_report.checks] == list(CHECK_IDS)
    assert clean_report.to_table().endswith(f"overall: pass ({len(CHECK_IDS)}/{len(CHECK_IDS)} checks)\n")


def test_report_json_is_deterministic(clean_report):
    again = full_report()
    assert again.to_json() == clean_report.to_json()
    data = json.loads(clean_report.to_json())
    assert data["overall"] == "pass"
    sweep = next(c for c in data["checks"] if c["id"] == "membership-sweep")
    assert sweep["witness"]["members"] == 3905


def test_failing_check_does_not_stop_others():
    report = full_report(with_changes(canonical=canonical_class(-3)),
                         checks=["degree-column", "linear-series", "boundary-span"])
    assert [c.verdict for c in report.checks] == ["fail", "pass", "pass"]
    assert report.overall == "fail"
