import io
import json
import subprocess
import sys

import pytest

from effcone import coneio
from effcone.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def ab_file(tmp_path):
    path = tmp_path / "AB.cone"
    assert run("export", "--set", "AB", "--out", str(path))[0] == 0
    return path


def test_export_sets(tmp_path):
    sizes = {"gamma": 40, "sigma": 170, "A": 75, "B": 20, "AB": 95, "m05-sigma": 10,
             "m05-xi": 10, "fsigma-curves": 13, "fsigma-xi": 38}
    for name, n in sizes.items():
        code, out, _ = run("export", "--set", name)
        assert code == 0
        cf = coneio.parse(out)
        assert len(cf.rows) == n, name
    cf = coneio.parse(run("export", "--set", "gamma")[1])
    assert cf.labels[0] == "D_12" and cf.labels[-1].startswith("F_(")
    assert "A_45;6" in coneio.parse(run("export", "--set", "A")[1]).labels


def test_member_prints_verified_certificate(ab_file):
    code, out, _ = run("member", "--vector", "1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0", "--in", str(ab_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict\tmember"
    cf = coneio.read(ab_file)
    vecs = dict(zip(cf.labels, cf.rows))
    total = [0] * 16
    for line in lines[1:]:
        _, coeff, label = line.split("\t")
        total = [t + int(coeff) * x for t, x in zip(total, vecs[label])]
    assert total == [1, 0, 0, 0, 0, 1] + [0] * 10


def test_member_non_member(tmp_path):
    path = tmp_path / "q.cone"
    path.write_text(coneio.format_cone("V", 2, [(1, 0), (0, 1)]))
    code, out, _ = run("member", "--vector", "-1 0", "--in", str(path))
    assert code == 0 and out == "verdict\tnon-member\nseparator\t1 0\n"
    assert run("member", "--vector", "1 0 0", "--in", str(path))[0] == 2


def test_round_trip_through_dual(tmp_path):
    src = tmp_path / "sigma.cone"
    run("export", "--set", "fsigma-curves", "--out", str(src))
    d1, d2 = tmp_path / "d1.cone", tmp_path / "d2.cone"
    assert run("dualize", "--in", str(src), "--out", str(d1))[0] == 0
    assert run("dualize", "--in", str(d1), "--out", str(d2))[0] == 0
    code, out, _ = run("extremal", "--in", str(d2))
    assert code == 0
    assert set(coneio.parse(out).rows) == set(coneio.read(src).rows)


def test_extremal_of_h_file(tmp_path):
    path = tmp_path / "h.cone"
    path.write_text("CONE H\ndim 3\nrows 3\n1 0 0\n0 1 0\n-1 -1 1\nEND\n")
    code, out, _ = run("extremal", "--in", str(path))
    assert code == 0 and coneio.parse(out).rows == ((0, 0, 1), (0, 1, 1), (1, 0, 1))


def test_malformed_input_exit_two_with_line(tmp_path):
    path = tmp_path / "bad.cone"
    path.write_text("CONE V\ndim 2\nrows 1\n1 0\nEND\nextra\n")
    code, _, err = run("dualize", "--in", str(path))
    assert code == 2 and "line 6" in err
    assert run("dualize", "--in", str(tmp_path / "missing.cone"))[0] == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("export", "--set", "nope")[0] == 2
    assert run("verify", "--check", "nope")[0] == 2
    assert run("export", "--set", "B", "--bogus")[0] == 2


def test_orbit_table_tsv():
    code, out, _ = run("orbits", "--table5")
    assert code == 0 and out.endswith("\n")
    lines = out.splitlines()
    assert lines[0] == "index\tdegree\tsize\trepresentative"
    assert len(lines) == 27
    assert lines[-1].split("\t")[:3] == ["total", "", "3905"]
    assert all(len(l.split("\t")) == 4 for l in lines)
    assert run("orbits", "--table5")[1] == out


def test_verify_single_check_and_json(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run("verify", "--check", "linear-series", "--json", str(report))
    assert code == 0 and "PASS" in out
    data = json.loads(report.read_text())
    assert data["checks"][0]["witness"] == {"cubic": 2, "quadric": 4, "quartic": 4}


def test_verify_failure_exit_one(monkeypatch):
    from effcone import verifier
    real = verifier.ModelData.default.__func__

    def broken(cls):
        data = real(cls)
        data.canonical = verifier.canonical_class(-3)
        return data

    monkeypatch.setattr(verifier.ModelData, "default", classmethod(broken))
    assert run("verify", "--check", "degree-column")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "effcone", "verify", "--check", "boundary-span"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "boundary-span" in proc.stdout
