import json
import os

import pytest

from hemicones.cli import main


@pytest.fixture()
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_p42(capsys, cache_dir):
    code, out, _ = run(capsys, "build", "--family", "p", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir)
    assert code == 0
    assert "6 rays" in out and "8 facets" in out


def test_rays_tsv(capsys, cache_dir):
    code, out, _ = run(capsys, "rays", "--family", "nhm", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir)
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 6
    assert lines[0].startswith("a(")


def test_rays_ext_format(capsys, cache_dir):
    code, out, _ = run(capsys, "rays", "--family", "nhm", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir,
                       "--format", "ext")
    assert code == 0
    assert "V-representation" in out


def test_facets_json(capsys, cache_dir):
    code, out, _ = run(capsys, "facets", "--family", "nhm", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir,
                       "--format", "json")
    assert code == 0
    data = json.loads(out)["payload"]
    assert len(data["facets"]) == 8
    assert sorted(data["labels"]).count("N_123") == 1


def test_orbits(capsys, cache_dir):
    code, out, _ = run(capsys, "orbits", "--family", "nhm", "--m", "2",
                       "--n", "5", "--cache-dir", cache_dir)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["orbit", "size", "representative"]
    sizes = sorted(int(l.split("\t")[1]) for l in lines[1:])
    assert sizes == [10, 12, 15]


def test_graph_dot(capsys, cache_dir):
    code, out, _ = run(capsys, "graph", "--family", "nhm", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir,
                       "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 12  # octahedron


def test_diameter(capsys, cache_dir):
    code, out, _ = run(capsys, "diameter", "--family", "nhm", "--m", "2",
                       "--n", "5", "--cache-dir", cache_dir,
                       "--kind", "ridge")
    assert code == 0
    assert out.strip().endswith("2")


def test_table(capsys, cache_dir):
    code, out, _ = run(capsys, "table", "--family", "nhm", "--m", "2",
                       "--n", "5", "--cache-dir", cache_dir,
                       "--of", "facets")
    assert code == 0
    assert "T_" in out and "N_" in out


def test_rgraph_partition(capsys):
    code, out, _ = run(capsys, "rgraph", "--n", "5",
                       "--partition", "1|23|45")
    assert code == 0
    assert " -- " in out


def test_rgraph_needs_arguments(capsys):
    code, _, err = run(capsys, "rgraph", "--n", "5")
    assert code == 2


def test_verify_p42(capsys, cache_dir):
    code, out, _ = run(capsys, "verify", "--family", "p", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir, "--exhaustive")
    assert code == 0
    assert "FAIL" not in out


def test_conjecture_command(capsys, cache_dir):
    code, out, _ = run(capsys, "conjecture", "--id", "1", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir)
    assert code == 0
    assert "holds" in out


def test_conjecture_failure_exit_code(capsys, cache_dir):
    code, out, _ = run(capsys, "conjecture", "--id", "2", "--m", "2",
                       "--n", "4", "--cache-dir", cache_dir)
    assert code == 1
    assert "fails" in out


def test_resource_limit_exit_code_and_snapshot(capsys, cache_dir):
    code, out, err = run(capsys, "rays", "--family", "nhm", "--m", "2",
                         "--n", "5", "--cache-dir", cache_dir,
                         "--max-rays", "10")
    assert code == 3
    assert "snapshot" in err
    snap_path = None
    for token in err.split():
        if token.endswith("snapshot.json"):
            snap_path = token
    assert snap_path and os.path.exists(snap_path)
    code2, out2, _ = run(capsys, "rays", "--family", "nhm", "--m", "2",
                         "--n", "5", "--cache-dir", cache_dir,
                         "--resume", snap_path)
    assert code2 == 0
    assert len([l for l in out2.splitlines() if l.strip()]) == 37


def test_invalid_arguments_exit_2(capsys):
    code, _, _ = run(capsys, "rays", "--family", "zzz", "--m", "2", "--n", "4")
    assert code == 2


def test_summary_smoke(capsys, cache_dir):
    code, out, _ = run(capsys, "summary", "--rows", "p:2:4,nhm:2:4",
                       "--cache-dir", cache_dir, "--compute")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header + 2 rows


def test_output_file(tmp_path, capsys, cache_dir):
    out_path = tmp_path / "rays.ext"
    code, _, _ = run(capsys, "rays", "--family", "nhm", "--m", "2",
                     "--n", "4", "--cache-dir", cache_dir,
                     "--format", "ext", "-o", str(out_path))
    assert code == 0
    assert "V-representation" in out_path.read_text()
