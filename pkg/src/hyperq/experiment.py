"""Experiment orchestration: seeded construction sweeps with per-cell
certifier and detector tasks, emitted as a versioned CSV table and a
structured JSON report.

A sweep is fully determined by its spec: cells are pure functions of
(construction, n, k, seed), rows are sorted before emission, and the CSV
carries no timing data, so repeated runs are byte-identical regardless of
the worker count.  Wall times appear only in the JSON report.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .certifiers import (
    pair_deviation,
    quad_vertex_deviation,
    weak_deviation,
    xyz_deviation,
)
from .constructions import CONSTRUCTIONS
from .core import write_hypergraph
from .detectors import find_clique3, find_f4, find_k4_minus, find_sk

CSV_SCHEMA_VERSION = 1
BASE_COLUMNS = ("schema_version", "construction", "n", "k", "seed",
                "edge_count", "density_num", "density_den", "density", "error")


@dataclass
class ExperimentSpec:
    """A declarative sweep description, loadable from JSON."""

    construction: str
    cells: list  # (n, seed) pairs
    k: int | None = None
    certify: list = field(default_factory=list)
    detect: list = field(default_factory=list)
    csv_path: str | None = None
    json_path: str | None = None
    hypergraph_dir: str | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentSpec":
        if data.get("schema_version", 1) != 1:
            raise ValueError("unsupported experiment schema version")
        construction = data["construction"]
        if construction not in CONSTRUCTIONS:
            raise ValueError("unknown construction %r" % construction)
        if "cells" in data:
            cells = [(int(n), int(s)) for n, s in data["cells"]]
        else:
            cells = [(int(n), int(s)) for n in data["ns"] for s in data["seeds"]]
        out = data.get("output", {})
        spec = cls(construction=construction, cells=cells,
                   k=data.get("k"), certify=list(data.get("certify", [])),
                   detect=list(data.get("detect", [])),
                   csv_path=out.get("csv"), json_path=out.get("json"),
                   hypergraph_dir=out.get("hypergraph_dir"))
        cols = spec.task_columns()
        if len(cols) != len(set(cols)):
            raise ValueError("tasks produce duplicate report columns: %r" % cols)
        return spec

    @classmethod
    def from_json(cls, text: str) -> "ExperimentSpec":
        return cls.from_dict(json.loads(text))

    def task_columns(self) -> list[str]:
        cols = []
        for task in self.certify:
            cols.append("eta_%s" % task["kind"])
        for task in self.detect:
            name = task["pattern"]
            if task.get("k"):
                name += str(task["k"])
            if task.get("ordered"):
                name += "_ordered"
            cols.append(name + ("_count" if task.get("count") else "_found"))
        return cols

    def columns(self) -> list[str]:
        return list(BASE_COLUMNS) + self.task_columns()


def _run_certify(h, task: dict) -> float:
    kind = task["kind"]
    d = task.get("d")
    seed = int(task.get("seed", 0))
    if kind == "weak":
        rep = weak_deviation(h, d, mode=task.get("mode", "search"),
                             restarts=int(task.get("restarts", 8)), seed=seed)
    elif kind == "xyz":
        rep = xyz_deviation(h, d, samples=int(task.get("samples", 100)),
                            seed=seed, disjoint=bool(task.get("disjoint", False)))
    elif kind == "pair":
        rep = pair_deviation(h, d, mode=task.get("mode", "search"),
                             restarts=int(task.get("restarts", 8)), seed=seed)
    elif kind == "quad":
        rep = quad_vertex_deviation(h, d, samples=int(task.get("samples", 100)),
                                    seed=seed)
    else:
        raise ValueError("unknown certifier kind %r" % kind)
    return rep.eta


def _run_detect(h, task: dict):
    pattern = task["pattern"]
    if pattern == "k4minus":
        if task.get("count"):
            from .detectors import count_k4_minus
            return count_k4_minus(h)
        return int(find_k4_minus(h, ordered=bool(task.get("ordered"))) is not None)
    if pattern == "clique":
        return int(find_clique3(h, int(task["k"])) is not None)
    if pattern == "sk":
        return int(find_sk(h, int(task["k"])) is not None)
    if pattern == "f4":
        return int(find_f4(h) is not None)
    raise ValueError("unknown detector pattern %r" % pattern)


def run_cell(spec_data: dict, n: int, seed: int) -> dict:
    """Execute one sweep cell; failures land in the row, never raise."""
    spec = ExperimentSpec.from_dict(spec_data)
    row: dict = {"schema_version": CSV_SCHEMA_VERSION,
                 "construction": spec.construction, "n": n,
                 "k": spec.k if spec.k is not None else "",
                 "seed": seed, "error": ""}
    start = time.perf_counter()
    try:
        h = CONSTRUCTIONS[spec.construction](n, spec.k, seed)
        dens = h.density()
        row.update(edge_count=dens.edge_count,
                   density_num=dens.density_fraction.numerator,
                   density_den=dens.density_fraction.denominator,
                   density=repr(dens.density))
        for task in spec.certify:
            row["eta_%s" % task["kind"]] = repr(_run_certify(h, task))
        for task, col in zip(spec.detect, spec.task_columns()[len(spec.certify):]):
            row[col] = _run_detect(h, task)
        if spec.hypergraph_dir:
            name = "%s_n%d_s%d.hg" % (spec.construction, n, seed)
            path = Path(spec.hypergraph_dir) / name
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(write_hypergraph(h), encoding="utf-8")
            row["file"] = str(path)
    except Exception as exc:  # cell failures are data, not crashes
        row["error"] = "%s: %s" % (type(exc).__name__, exc)
    row["wall_time_s"] = round(time.perf_counter() - start, 4)
    return row


@dataclass
class ExperimentResult:
    spec: ExperimentSpec
    rows: list

    def to_csv(self) -> str:
        cols = self.spec.columns()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in self.rows:
            writer.writerow([row.get(c, "") for c in cols])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "schema_version": CSV_SCHEMA_VERSION,
            "construction": self.spec.construction,
            "k": self.spec.k,
            "columns": self.spec.columns(),
            "rows": self.rows,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _worker(args):
    return run_cell(*args)


def run_experiment(spec: ExperimentSpec, threads: int = 1) -> ExperimentResult:
    """Run every cell (optionally in a process pool) and sort the rows by
    (construction, n, k, seed) for order-independent output."""
    spec_data = {
        "construction": spec.construction, "k": spec.k,
        "cells": [list(c) for c in spec.cells],
        "certify": spec.certify, "detect": spec.detect,
        "output": {"csv": spec.csv_path, "json": spec.json_path,
                   "hypergraph_dir": spec.hypergraph_dir},
    }
    jobs = [(spec_data, n, seed) for n, seed in spec.cells]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_worker, jobs))
    else:
        rows = [run_cell(*job) for job in jobs]
    rows.sort(key=lambda r: (r["construction"], r["n"], str(r["k"]), r["seed"]))
    result = ExperimentResult(spec, rows)
    if spec.csv_path:
        Path(spec.csv_path).parent.mkdir(parents=True, exist_ok=True)
        Path(spec.csv_path).write_text(result.to_csv(), encoding="utf-8")
    if spec.json_path:
        Path(spec.json_path).parent.mkdir(parents=True, exist_ok=True)
        Path(spec.json_path).write_text(result.to_json(), encoding="utf-8")
    return result
