"""Experiment command line: conditioning sweeps, Lebesgue-constant curves,
interpolation error curves, and greedy support extraction.

Usage:
    histopol {cond|lebesgue|interp|extract} --config cfg.json [--out DIR] [--svg]

Configs are JSON; every run writes the resolved configuration (defaults
merged in) next to its outputs, and repeated runs with the same config are
byte-identical. Exit codes: 0 success, 2 config error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from histopol.basis import BasisSpec, basis_size
from histopol.geometry import (
    OrbitSchedule,
    SupportSet,
    bojanov_xu_points,
    default_orbit_schedule,
    halton_points,
    min_center_separation,
    orbit_supports,
    safe_common_radius,
    translated_supports,
)
from histopol.greedy import (
    PoolRankError,
    approximate_fekete,
    discrete_leja,
    discrete_leja_indices,
    extraction_to_json,
    slice_pool,
    uniform_disc_pool,
)
from histopol.interp import builtin_integrands, default_data_exactness, project, sup_error
from histopol.lebesgue import (
    default_eval_grid,
    default_probe_family,
    lebesgue_long,
    lebesgue_short,
    nodal_lebesgue,
)
from histopol.vandermonde import UnisolvenceError, assemble, condition_number
from histopol import svgplot

POINT_FAMILIES = ("halton", "bojanov-xu")
FAMILIES = ("halton", "bojanov-xu", "orbit", "afs", "dls")

CSV_DOC = """CSV outputs:
  cond:      cond.csv           family,basis,degree,size,cond
  lebesgue:  lebesgue.csv       degree,lambda,method,M
             radius_sweep.csv   step,radius,lambda,method,M   (when configured)
  interp:    errors_<fn>.csv    degree,family,error
             surface_*.csv      x,y,exact,interpolant         (when configured)
  extract:   supports.json      SupportSet JSON ("order" field for dls)
Config keys (JSON object per command; all optional unless noted):
  degrees         {"from": a, "to": b} or explicit list   (cond/lebesgue/interp)
  basis           "chebyshev" (default) | "monomial"
  families        subset of halton|bojanov-xu|orbit|afs|dls  (cond/interp)
  family          one of the above, or "file"                (lebesgue, required)
  support_file    SupportSet JSON path (lebesgue family=file)
  radius_policy   {"separation_factor": f, "boundary_factor": g}
  pool            {"grid_n": n, "radius_factor": f}          (afs/dls)
  grid            {"radial": nr, "angular": na}              evaluation grid
  probes          {"radial": nr, "angular": na, "radius": r} (lebesgue long)
  method          "short" | "long" | "both"                  (lebesgue)
  nodal_baseline  true/false                                 (lebesgue)
  radius_sweep    {"degree": d, "steps": k}                  (lebesgue)
  functions       subset of ["f1","f2"]                      (interp)
  data_exactness_offset  integer, quadrature degree = 2d + offset (interp)
  surface         {"function","family","degree","grid_n"}    (interp)
  method/degree   extraction method and degree               (extract, required)
  seed            integer, recorded in the resolved config
"""


class ConfigError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _write_csv(path: Path, header: str, rows) -> None:
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def _parse_degrees(cfg: dict, default_lo: int, default_hi: int) -> list[int]:
    spec = cfg.get("degrees", {"from": default_lo, "to": default_hi})
    if isinstance(spec, dict):
        unknown = set(spec) - {"from", "to"}
        if unknown:
            raise ConfigError(f"degrees range has unknown keys {sorted(unknown)}")
        lo, hi = spec.get("from", default_lo), spec.get("to", default_hi)
        if not (isinstance(lo, int) and isinstance(hi, int) and lo >= 0):
            raise ConfigError("degrees range needs integer from/to with from >= 0")
        degrees = list(range(lo, hi + 1))
    elif isinstance(spec, list):
        if not all(isinstance(d, int) and d >= 0 for d in spec):
            raise ConfigError("degrees list must contain non-negative integers")
        degrees = list(spec)
    else:
        raise ConfigError("degrees must be a {from,to} object or a list")
    cfg["degrees"] = degrees
    return degrees


def _parse_basis(cfg: dict) -> str:
    basis = cfg.setdefault("basis", "chebyshev")
    if basis not in ("chebyshev", "monomial"):
        raise ConfigError(f"unknown basis {basis!r}")
    return basis


def _parse_policy(cfg: dict, sep: float, bnd: float) -> tuple[float, float]:
    policy = cfg.setdefault("radius_policy", {})
    if not isinstance(policy, dict):
        raise ConfigError("radius_policy must be an object")
    policy.setdefault("separation_factor", sep)
    policy.setdefault("boundary_factor", bnd)
    return policy["separation_factor"], policy["boundary_factor"]


def _parse_grid(cfg: dict):
    grid_cfg = cfg.setdefault("grid", {})
    grid_cfg.setdefault("radial", 60)
    grid_cfg.setdefault("angular", 120)
    return default_eval_grid(grid_cfg["radial"], grid_cfg["angular"])


def _parse_pool(cfg: dict) -> tuple[int, float]:
    pool_cfg = cfg.setdefault("pool", {})
    pool_cfg.setdefault("grid_n", 101)
    pool_cfg.setdefault("radius_factor", 0.4)
    if pool_cfg["grid_n"] < 2:
        raise ConfigError("pool grid_n must be at least 2")
    return pool_cfg["grid_n"], pool_cfg["radius_factor"]


def _orbit_schedule(cfg: dict, d: int) -> OrbitSchedule:
    raw = cfg.get("orbit_schedule")
    if raw is None:
        return default_orbit_schedule(d)
    return OrbitSchedule(
        orbit_radii=tuple(raw["orbit_radii"]),
        ball_radii=tuple(raw["ball_radii"]),
        center_ball_radius=raw.get("center_ball_radius"),
    )


class FamilyBuilder:
    """Resolves (family, degree) to a SupportSet, caching the candidate pool."""

    def __init__(self, cfg: dict, max_degree: int, basis: str):
        self.cfg = cfg
        self.sep, self.bnd = _parse_policy(
            cfg, *cfg.get("_default_policy", (0.4, 0.95))
        )
        self.basis = basis
        self.max_degree = max_degree
        self._pool = None

    def pool(self):
        if self._pool is None:
            grid_n, factor = _parse_pool(self.cfg)
            self._pool = uniform_disc_pool(
                grid_n, BasisSpec(self.basis, self.max_degree), radius_factor=factor
            )
        return self._pool

    def nodes(self, family: str, d: int):
        if family == "halton":
            return halton_points(basis_size(d))
        if family == "bojanov-xu":
            return bojanov_xu_points(d)
        raise ConfigError(f"family {family!r} has no node description")

    def build(self, family: str, d: int) -> SupportSet:
        if family in POINT_FAMILIES:
            pts = self.nodes(family, d)
            radius = safe_common_radius(pts, self.sep, self.bnd)
            return translated_supports(pts, radius)
        if family == "orbit":
            return orbit_supports(d, _orbit_schedule(self.cfg, d))
        if family == "afs":
            return approximate_fekete(slice_pool(self.pool(), d))
        if family == "dls":
            return discrete_leja(slice_pool(self.pool(), d))
        raise ConfigError(f"unknown family {family!r}")


def _write_resolved(cfg: dict, out_dir: Path) -> None:
    cfg.pop("_default_policy", None)
    cfg.setdefault("seed", 0)
    with open(out_dir / "resolved_config.json", "w") as fh:
        json.dump(cfg, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_cond(cfg: dict, out_dir: Path, svg: bool) -> int:
    degrees = _parse_degrees(cfg, 1, 15)
    families = cfg.setdefault("families", ["halton", "bojanov-xu"])
    bases = cfg.setdefault("bases", ["monomial", "chebyshev"])
    for fam in families:
        if fam not in FAMILIES:
            raise ConfigError(f"unknown family {fam!r}")
    for b in bases:
        if b not in ("monomial", "chebyshev"):
            raise ConfigError(f"unknown basis {b!r}")
    cfg["_default_policy"] = (0.4, 0.95)
    builder = FamilyBuilder(cfg, max(degrees, default=1), "chebyshev")
    rows = []
    curves: dict[tuple[str, str], tuple[list, list]] = {}
    for fam in families:
        for b in bases:
            for d in degrees:
                ss = builder.build(fam, d)
                cond = condition_number(assemble(ss, BasisSpec(b, d), normalized=True))
                rows.append((fam, b, d, basis_size(d), cond))
                curves.setdefault((fam, b), ([], []))[0].append(d)
                curves[(fam, b)][1].append(cond)
    _write_csv(out_dir / "cond.csv", "family,basis,degree,size,cond", rows)
    if svg:
        for fam in families:
            series = [
                (b, curves[(fam, b)][0], curves[(fam, b)][1])
                for b in bases
                if (fam, b) in curves
            ]
            svgplot.line_plot(
                series,
                out_dir / f"cond_{fam}.svg",
                title=f"Vandermonde conditioning, {fam} discs",
                xlabel="degree",
                ylabel="cond (2-norm)",
                logy=True,
            )
    _write_resolved(cfg, out_dir)
    return 0


def _infer_degree(n_supports: int) -> int:
    d = 0
    while basis_size(d) < n_supports:
        d += 1
    if basis_size(d) != n_supports:
        raise ConfigError(f"{n_supports} supports do not match any total degree")
    return d


def cmd_lebesgue(cfg: dict, out_dir: Path, svg: bool) -> int:
    family = cfg.get("family")
    if family is None:
        raise ConfigError("lebesgue config requires a family")
    basis = _parse_basis(cfg)
    method = cfg.setdefault("method", "short")
    if method not in ("short", "long", "both"):
        raise ConfigError(f"unknown method {method!r}")
    nodal_baseline = cfg.setdefault("nodal_baseline", False)
    grid = _parse_grid(cfg)
    cfg["_default_policy"] = (0.1, 0.5)

    if family == "file":
        path = cfg.get("support_file")
        if not path:
            raise ConfigError("family 'file' requires support_file")
        try:
            loaded = SupportSet.from_json(Path(path).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read support_file: {exc}") from exc
        degrees = [_infer_degree(len(loaded))]
        builder = None
    elif family in FAMILIES:
        degrees = _parse_degrees(cfg, 1, 10)
        builder = FamilyBuilder(cfg, max(degrees, default=1), basis)
        loaded = None
    else:
        raise ConfigError(f"unknown family {family!r}")

    probes = None
    if method in ("long", "both"):
        probe_cfg = cfg.setdefault("probes", {})
        probe_cfg.setdefault("radial", 40)
        probe_cfg.setdefault("angular", 80)
        probe_cfg.setdefault("radius", 0.01)
        probes = default_probe_family(
            probe_cfg["radial"], probe_cfg["angular"], probe_cfg["radius"]
        )

    rows = []
    curves: dict[str, tuple[list, list]] = {}
    failures = 0
    for d in degrees:
        spec = BasisSpec(basis, d)
        try:
            ss = loaded if loaded is not None else builder.build(family, d)
            if method in ("short", "both"):
                est = lebesgue_short(ss, spec, grid)
                rows.append((d, est.value, "short", est.grid_size))
                curves.setdefault("short", ([], []))[0].append(d)
                curves["short"][1].append(est.value)
            if method in ("long", "both"):
                est = lebesgue_long(ss, spec, probes)
                rows.append((d, est.value, "long", est.grid_size))
                curves.setdefault("long", ([], []))[0].append(d)
                curves["long"][1].append(est.value)
            if nodal_baseline:
                centers = [disc.center for disc in ss.supports]
                est = nodal_lebesgue(centers, spec, grid)
                rows.append((d, est.value, "nodal", est.grid_size))
                curves.setdefault("nodal", ([], []))[0].append(d)
                curves["nodal"][1].append(est.value)
        except (UnisolvenceError, PoolRankError) as exc:
            print(f"degree {d}: {exc}", file=sys.stderr)
            rows.append((d, float("nan"), method if method != "both" else "short", 0))
            failures += 1
    _write_csv(out_dir / "lebesgue.csv", "degree,lambda,method,M", rows)

    sweep_cfg = cfg.get("radius_sweep")
    if sweep_cfg is not None:
        if family not in POINT_FAMILIES:
            raise ConfigError("radius_sweep needs a point-based family")
        d = sweep_cfg.get("degree", 7)
        steps = sweep_cfg.get("steps", 10)
        pts = builder.nodes(family, d)
        r_max = min(0.5 * min_center_separation(pts), 1.0 - max(p.norm() for p in pts))
        spec = BasisSpec(basis, d)
        sweep_rows = []
        for i in range(1, steps + 1):
            radius = r_max * i / steps
            est = lebesgue_short(translated_supports(pts, radius), spec, grid)
            sweep_rows.append((i, radius, est.value, "short", est.grid_size))
        _write_csv(
            out_dir / "radius_sweep.csv", "step,radius,lambda,method,M", sweep_rows
        )

    if svg and curves:
        series = [(name, xs, ys) for name, (xs, ys) in sorted(curves.items())]
        dashed = set()
        if family in ("afs", "dls"):
            series.append(("bound N(d)", degrees, [float(basis_size(d)) for d in degrees]))
            dashed = {"bound N(d)"}
        svgplot.line_plot(
            series,
            out_dir / "lebesgue.svg",
            title=f"Lebesgue constant, {family}",
            xlabel="degree",
            ylabel="lambda",
            logy=True,
            dashed=dashed,
        )
    _write_resolved(cfg, out_dir)
    if rows and failures == len(degrees):
        return 3
    return 0


def cmd_interp(cfg: dict, out_dir: Path, svg: bool) -> int:
    degrees = _parse_degrees(cfg, 1, 20)
    basis = _parse_basis(cfg)
    families = cfg.setdefault("families", list(FAMILIES))
    for fam in families:
        if fam not in FAMILIES:
            raise ConfigError(f"unknown family {fam!r}")
    names = cfg.setdefault("functions", ["f1", "f2"])
    integrands = {f.name: f for f in builtin_integrands()}
    for nm in names:
        if nm not in integrands:
            raise ConfigError(f"unknown function {nm!r} (have {sorted(integrands)})")
    offset = cfg.setdefault("data_exactness_offset", 20)
    grid = _parse_grid(cfg)
    cfg["_default_policy"] = (0.4, 0.95)
    builder = FamilyBuilder(cfg, max(degrees, default=1), basis)

    sets: dict[tuple[str, int], SupportSet] = {}
    failures, attempts = 0, 0
    for nm in names:
        f = integrands[nm]
        rows = []
        curves = {}
        for fam in families:
            for d in degrees:
                attempts += 1
                try:
                    key = (fam, d)
                    if key not in sets:
                        sets[key] = builder.build(fam, d)
                    p = project(f, sets[key], BasisSpec(basis, d), 2 * d + offset)
                    err = sup_error(f, p, grid)
                    rows.append((d, fam, err))
                    curves.setdefault(fam, ([], []))[0].append(d)
                    curves[fam][1].append(err)
                except (UnisolvenceError, PoolRankError) as exc:
                    print(f"{nm} {fam} degree {d}: {exc}", file=sys.stderr)
                    rows.append((d, fam, float("nan")))
                    failures += 1
        _write_csv(out_dir / f"errors_{nm}.csv", "degree,family,error", rows)
        if svg:
            series = [(fam, xs, ys) for fam, (xs, ys) in curves.items()]
            svgplot.line_plot(
                series,
                out_dir / f"errors_{nm}.svg",
                title=f"sup-norm interpolation error, {nm}",
                xlabel="degree",
                ylabel="error",
                logy=True,
            )

    surface = cfg.get("surface")
    if surface is not None:
        nm = surface.get("function", "f2")
        fam = surface.get("family", families[0])
        d = surface.get("degree", 5)
        n_grid = surface.get("grid_n", 60)
        if nm not in integrands:
            raise ConfigError(f"unknown surface function {nm!r}")
        f = integrands[nm]
        ss = builder.build(fam, d)
        p = project(f, ss, BasisSpec(basis, d), 2 * d + offset)
        coords = -1.0 + (np.arange(n_grid) + 0.5) * 2.0 / n_grid
        xg, yg = np.meshgrid(coords, coords, indexing="ij")
        keep = np.hypot(xg, yg) <= 1.0
        xs, ys = xg[keep], yg[keep]
        from histopol.interp import eval_interpolant_many

        exact = np.asarray(f(xs, ys), dtype=float)
        approx = eval_interpolant_many(p, np.column_stack([xs, ys]))
        _write_csv(
            out_dir / f"surface_{nm}_{fam}_d{d}.csv",
            "x,y,exact,interpolant",
            zip(xs.tolist(), ys.tolist(), exact.tolist(), approx.tolist()),
        )
        if svg:
            svgplot.heatmap(
                xs.tolist(),
                ys.tolist(),
                approx.tolist(),
                out_dir / f"surface_{nm}_{fam}_d{d}.svg",
                title=f"{nm} interpolant, {fam}, degree {d}",
            )
    _write_resolved(cfg, out_dir)
    if attempts and failures == attempts:
        return 3
    return 0


def cmd_extract(cfg: dict, out_dir: Path, svg: bool) -> int:
    method = cfg.get("method")
    if method not in ("afs", "dls"):
        raise ConfigError("extract config requires method 'afs' or 'dls'")
    d = cfg.get("degree")
    if not isinstance(d, int) or d < 0:
        raise ConfigError("extract config requires a non-negative integer degree")
    basis = _parse_basis(cfg)
    grid_n, factor = _parse_pool(cfg)
    pool = uniform_disc_pool(grid_n, BasisSpec(basis, d), radius_factor=factor)
    if method == "afs":
        ss = approximate_fekete(pool)
        text = extraction_to_json(ss)
    else:
        order = discrete_leja_indices(pool)
        ss = SupportSet(supports=tuple(pool.supports[i] for i in order))
        text = extraction_to_json(ss, order=order)
    with open(out_dir / "supports.json", "w") as fh:
        fh.write(text + "\n")
    if svg:
        svgplot.disc_plot(ss, out_dir / "supports.svg", title=f"{method} degree {d}")
    _write_resolved(cfg, out_dir)
    return 0


COMMANDS = {
    "cond": cmd_cond,
    "lebesgue": cmd_lebesgue,
    "interp": cmd_interp,
    "extract": cmd_extract,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="histopol",
        description="Histopolation experiments on the unit disc.",
        epilog=CSV_DOC,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True, help="JSON experiment config")
    parser.add_argument("--out", default="histopol_out", help="output directory")
    parser.add_argument("--svg", action="store_true", help="also emit SVG plots")
    args = parser.parse_args(argv)

    try:
        cfg = _load_config(args.config)
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        return COMMANDS[args.command](cfg, out_dir, args.svg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (UnisolvenceError, PoolRankError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
