import json
import math
from pathlib import Path

import pytest

from histopol.cli import main
from histopol.geometry import SupportSet


def write_cfg(tmp_path: Path, name: str, cfg: dict) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


def read_csv(path: Path):
    lines = path.read_text().strip().splitlines()
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def test_cond_single_degree(tmp_path):
    cfg = write_cfg(
        tmp_path, "c.json", {"degrees": {"from": 3, "to": 3}, "families": ["bojanov-xu"]}
    )
    out = tmp_path / "out"
    assert main(["cond", "--config", cfg, "--out", str(out)]) == 0
    header, rows = read_csv(out / "cond.csv")
    assert header == ["family", "basis", "degree", "size", "cond"]
    assert len(rows) == 2  # one per basis
    assert {r[1] for r in rows} == {"monomial", "chebyshev"}
    assert all(float(r[4]) > 0 for r in rows)
    assert (out / "resolved_config.json").exists()


def test_lebesgue_orbit_single_row(tmp_path):
    cfg = write_cfg(tmp_path, "l.json", {"family": "orbit", "degrees": [2]})
    out = tmp_path / "out"
    assert main(["lebesgue", "--config", cfg, "--out", str(out)]) == 0
    header, rows = read_csv(out / "lebesgue.csv")
    assert header == ["degree", "lambda", "method", "M"]
    assert len(rows) == 1
    assert float(rows[0][1]) >= 1.0 - 1e-9


def test_lebesgue_radius_sweep(tmp_path):
    cfg = write_cfg(
        tmp_path,
        "l.json",
        {
            "family": "bojanov-xu",
            "degrees": [3],
            "radius_sweep": {"degree": 3, "steps": 5},
        },
    )
    out = tmp_path / "out"
    assert main(["lebesgue", "--config", cfg, "--out", str(out)]) == 0
    header, rows = read_csv(out / "radius_sweep.csv")
    assert header == ["step", "radius", "lambda", "method", "M"]
    assert len(rows) == 5
    radii = [float(r[1]) for r in rows]
    assert radii == sorted(radii)


def test_interp_empty_degree_range(tmp_path):
    cfg = write_cfg(
        tmp_path,
        "i.json",
        {"degrees": [], "functions": ["f1"], "families": ["bojanov-xu"]},
    )
    out = tmp_path / "out"
    assert main(["interp", "--config", cfg, "--out", str(out)]) == 0
    header, rows = read_csv(out / "errors_f1.csv")
    assert header == ["degree", "family", "error"]
    assert rows == []


def test_interp_errors_decrease(tmp_path):
    cfg = write_cfg(
        tmp_path,
        "i.json",
        {
            "degrees": [1, 8],
            "functions": ["f1"],
            "families": ["bojanov-xu"],
            "grid": {"radial": 30, "angular": 60},
        },
    )
    out = tmp_path / "out"
    assert main(["interp", "--config", cfg, "--out", str(out)]) == 0
    _, rows = read_csv(out / "errors_f1.csv")
    errs = {int(r[0]): float(r[2]) for r in rows}
    assert errs[8] < 1e-4 * errs[1]


def test_interp_surface_dump(tmp_path):
    cfg = write_cfg(
        tmp_path,
        "i.json",
        {
            "degrees": [2],
            "functions": ["f2"],
            "families": ["bojanov-xu"],
            "grid": {"radial": 10, "angular": 20},
            "surface": {"function": "f2", "family": "bojanov-xu", "degree": 2, "grid_n": 12},
        },
    )
    out = tmp_path / "out"
    assert main(["interp", "--config", cfg, "--out", str(out), "--svg"]) == 0
    header, rows = read_csv(out / "surface_f2_bojanov-xu_d2.csv")
    assert header == ["x", "y", "exact", "interpolant"]
    assert all(math.hypot(float(r[0]), float(r[1])) <= 1.0 for r in rows)
    assert (out / "surface_f2_bojanov-xu_d2.svg").exists()


def test_extract_afs_degree_zero(tmp_path):
    cfg = write_cfg(tmp_path, "e.json", {"method": "afs", "degree": 0, "pool": {"grid_n": 11}})
    out = tmp_path / "out"
    assert main(["extract", "--config", cfg, "--out", str(out)]) == 0
    data = json.loads((out / "supports.json").read_text())
    assert len(data["supports"]) == 1


def test_extract_leja_prefix_across_degrees(tmp_path):
    sets = {}
    for d in (4, 2):
        cfg = write_cfg(
            tmp_path, f"e{d}.json", {"method": "dls", "degree": d, "pool": {"grid_n": 25}}
        )
        out = tmp_path / f"out{d}"
        assert main(["extract", "--config", cfg, "--out", str(out)]) == 0
        sets[d] = json.loads((out / "supports.json").read_text())
    assert sets[4]["supports"][:6] == sets[2]["supports"]
    assert sets[4]["order"][:6] == sets[2]["order"]


def test_extract_round_trips_into_lebesgue(tmp_path):
    cfg = write_cfg(tmp_path, "e.json", {"method": "afs", "degree": 3, "pool": {"grid_n": 25}})
    out = tmp_path / "out"
    assert main(["extract", "--config", cfg, "--out", str(out)]) == 0
    loaded = SupportSet.from_json((out / "supports.json").read_text())
    assert len(loaded) == 10
    cfg2 = write_cfg(
        tmp_path,
        "l.json",
        {"family": "file", "support_file": str(out / "supports.json")},
    )
    out2 = tmp_path / "out2"
    assert main(["lebesgue", "--config", cfg2, "--out", str(out2)]) == 0
    _, rows = read_csv(out2 / "lebesgue.csv")
    assert rows[0][0] == "3"
    assert float(rows[0][1]) >= 1.0 - 1e-9


def test_repeated_runs_are_byte_identical(tmp_path):
    cfg = write_cfg(
        tmp_path,
        "c.json",
        {"degrees": {"from": 1, "to": 4}, "families": ["halton"], "seed": 42},
    )
    blobs = []
    for tag in ("a", "b"):
        out = tmp_path / tag
        assert main(["cond", "--config", cfg, "--out", str(out), "--svg"]) == 0
        blobs.append(
            tuple(
                (p.name, p.read_bytes())
                for p in sorted(out.iterdir(), key=lambda q: q.name)
            )
        )
    assert blobs[0] == blobs[1]


def test_svg_outputs_written(tmp_path):
    cfg = write_cfg(tmp_path, "l.json", {"family": "dls", "degrees": [1, 2], "pool": {"grid_n": 15}})
    out = tmp_path / "out"
    assert main(["lebesgue", "--config", cfg, "--out", str(out), "--svg"]) == 0
    svg = (out / "lebesgue.svg").read_text()
    assert svg.startswith("<svg") and "bound N(d)" in svg


def test_config_errors_exit_2(tmp_path):
    assert main(["cond", "--config", str(tmp_path / "missing.json")]) == 2
    bad = write_cfg(tmp_path, "bad.json", {"families": ["nonsense"]})
    assert main(["cond", "--config", bad, "--out", str(tmp_path / "o1")]) == 2
    bad2 = write_cfg(tmp_path, "bad2.json", {"family": "orbit", "method": "typo"})
    assert main(["lebesgue", "--config", bad2, "--out", str(tmp_path / "o2")]) == 2
    bad3 = write_cfg(tmp_path, "bad3.json", {"degree": 2})
    assert main(["extract", "--config", bad3, "--out", str(tmp_path / "o3")]) == 2
    notjson = tmp_path / "notjson.json"
    notjson.write_text("{")
    assert main(["cond", "--config", str(notjson), "--out", str(tmp_path / "o4")]) == 2


def test_numerical_failure_exit_3(tmp_path):
    # duplicated supports make every degree fail
    dup = {
        "domain": "unit_disc",
        "supports": [
            {"cx": 0.1, "cy": 0.0, "r": 0.05},
            {"cx": 0.1, "cy": 0.0, "r": 0.05},
            {"cx": -0.3, "cy": 0.0, "r": 0.05},
        ],
    }
    sup = tmp_path / "dup.json"
    sup.write_text(json.dumps(dup))
    cfg = write_cfg(tmp_path, "l.json", {"family": "file", "support_file": str(sup)})
    out = tmp_path / "out"
    assert main(["lebesgue", "--config", cfg, "--out", str(out)]) == 3
    _, rows = read_csv(out / "lebesgue.csv")
    assert rows[0][1] == "nan"


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["cond"])
    assert exc.value.code == 2
