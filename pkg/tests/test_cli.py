import math
import subprocess
import sys

import pytest

from polyholes.cli import main
from polyholes.grid import from_cells
from polyholes.io import serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_poly(tmp_path, cells, name="p.txt"):
    path = tmp_path / name
    path.write_text(serialize(from_cells(cells)))
    return str(path)


def test_construct_s1_ascii(capsys):
    code, out, err = run(capsys, "construct", "--family", "s", "--k", "1", "--format", "ascii")
    assert code == 0
    assert out == "###\n#.#\n###\n"
    assert "holes=1" in err and err.strip().endswith("PASS")


def test_construct_s3_ascii(capsys):
    code, out, _ = run(capsys, "construct", "--family", "s", "--k", "3", "--format", "ascii")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 9 and all(len(r) == 9 for r in rows)
    assert out.count("#") == 60
    assert "holes=21" in _


def test_construct_rprime_report(capsys, tmp_path):
    out_file = tmp_path / "r.txt"
    code, out, _ = run(capsys, "construct", "--family", "rprime", "--n", "71400", "--out", str(out_file))
    assert code == 0
    assert "tiles=71400 holes=35280" in out and out.strip().endswith("PASS")
    assert out_file.read_text().startswith("polyomino v1 71400\n")


def test_construct_figure(capsys, tmp_path):
    fig = tmp_path / "s2.png"
    code, _, _ = run(capsys, "construct", "--family", "s", "--k", "2", "--figure", str(fig))
    assert code == 0 and fig.stat().st_size > 0


def test_construct_domain_errors(capsys):
    assert run(capsys, "construct", "--family", "rext", "--k", "2", "--l", "13")[0] == 4
    assert run(capsys, "construct", "--family", "rprime", "--n", "100")[0] == 4
    assert run(capsys, "construct", "--family", "s")[0] == 4


@pytest.mark.parametrize(
    "cells, line",
    [
        ([(x, y) for y in range(3) for x in range(3) if (x, y) != (1, 1)], "n=8 holes=1 p=16 b=8 p_h=4 p_o=12"),
        ([(x, 0) for x in range(7)], "n=7 holes=0 p=16 b=6 p_h=0 p_o=16"),
        ([(0, 0)], "n=1 holes=0 p=4 b=0 p_h=0 p_o=4"),
    ],
)
def test_analyze(capsys, tmp_path, cells, line):
    code, out, _ = run(capsys, "analyze", write_poly(tmp_path, cells))
    assert code == 0 and out == line + "\n"


def test_analyze_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("polyomino v1 2\n0 0\n0 x")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 3" in err


def test_analyze_missing_file(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "none.txt"))[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct"])
    assert exc.value.code == 2


def test_render_round_trip(capsys, tmp_path):
    src = write_poly(tmp_path, [(0, 0), (1, 0), (0, 1)])
    code, out, _ = run(capsys, "render", "--in", src, "--format", "ascii")
    assert code == 0 and out == "#.\n##\n"
    svg = tmp_path / "p.svg"
    assert run(capsys, "render", "--in", src, "--format", "svg", "--out", str(svg))[0] == 0
    first = svg.read_bytes()
    run(capsys, "render", "--in", src, "--format", "svg", "--out", str(svg))
    assert svg.read_bytes() == first and first.count(b"<rect") == 3


def test_enumerate_csv_and_figure(capsys, tmp_path):
    csv_path, fig = tmp_path / "c.csv", tmp_path / "c.png"
    code, _, _ = run(capsys, "enumerate", "--max-n", "8", "--out", str(csv_path), "--figure", str(fig))
    assert code == 0 and fig.stat().st_size > 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "n,total,holes_0,holes_1,f,min_perimeter"
    assert lines[7] == "7,760,756,4,1,12"  # four fixed orientations of the holed 7-omino


def test_enumerate_workers_identical(capsys):
    a = run(capsys, "enumerate", "--max-n", "8")[1]
    b = run(capsys, "enumerate", "--max-n", "8", "--workers", "2")[1]
    assert a == b


def test_enumerate_cap(capsys):
    assert run(capsys, "enumerate", "--max-n", "15")[0] == 4


def test_gtable(capsys):
    code, out, _ = run(capsys, "gtable", "--max-m", "2", "--max-n", "11", "--cap", "11")
    assert code == 0 and out == "m,g\n1,7\n2,11\n"
    code, out, _ = run(capsys, "gtable", "--max-m", "3", "--method", "search")
    assert code == 0 and out == "m,g\n1,7\n2,11\n3,14\n"
    assert run(capsys, "gtable", "--max-m", "3", "--max-n", "11", "--cap", "11")[0] == 4


def test_bounds_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "bounds", "--n", "20", "--lb", "5")
    assert code == 0
    header, row = out.splitlines()
    assert header == "n,p_min,ub_fixed_point,lb_construction,ub_from_lb"
    assert row.split(",")[0] == "20" and row.endswith(",5")
    fig = tmp_path / "b.png"
    code, out, _ = run(capsys, "bounds", "--n-min", "1", "--n-max", "80", "--figure", str(fig))
    assert code == 0 and len(out.splitlines()) == 81 and fig.stat().st_size > 0
    assert run(capsys, "bounds")[0] == 4


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--k-max", "6")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 19 and all(l.startswith("PASS") for l in lines)


def test_verify_table1(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--m-max", "3")
    assert code == 0
    for m, g in [(1, 7), (2, 11), (3, 14)]:
        assert f"PASS table1 g({m})={g}" in out


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--samples", "200", "--seed", "1")
    assert code == 0 and "PASS identity 4n=p+2b 200/200" in out


def test_verify_theorem2_small_range(capsys, tmp_path):
    fig = tmp_path / "t2.png"
    code, out, _ = run(
        capsys, "verify", "theorem2", "--n-min", "71400", "--n-max", "71410", "--range-only", "--figure", str(fig)
    )
    assert code == 0 and "PASS theorem2 n=71405" in out and fig.stat().st_size > 0


def test_verify_precondition(capsys):
    code, _, err = run(capsys, "verify", "theorem2", "--c1", repr(math.sqrt(5 / 2)))
    assert code == 4 and "sqrt(5/2)" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polyholes", "construct", "--family", "a", "--k", "1", "--format", "ascii"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == ".##\n#.#\n###\n"
