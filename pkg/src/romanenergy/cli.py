"""Command-line front end: ``romanenergy <command> [--input PATH | --family NAME --param K]``.

Exit codes: 0 success, 1 I/O or parse error, 2 precondition violation,
3 verification mismatches (the ledger is still printed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import families, graph, roman, spectral, verify

EXIT_OK, EXIT_IO, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3
COMMANDS = ("energy", "spectrum", "rdf", "charpoly", "verify", "generate", "batch")
RDF_CAP = 1000


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    family: str | None = None
    param: int | None = None
    tol: float = spectral.DEFAULT_TOL
    rdf_policy: str = "canonical"
    output_format: str = "text"
    seed: int = 0
    count: int = 10
    output: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.tol <= 0:
            raise UsageError("--tol must be positive")
        if self.command != "batch":
            has_file = self.input is not None
            has_family = self.family is not None or self.param is not None
            if has_file == has_family:
                raise UsageError("give exactly one of --input or --family/--param")
            if has_family and (self.family is None or self.param is None):
                raise UsageError("--family and --param go together")
        if self.rdf_policy not in ("canonical", "all") and not self.rdf_policy.isdigit():
            raise UsageError("--rdf must be canonical, all or a nonnegative index")

    @property
    def family_spec(self) -> graph.FamilySpec | None:
        if self.family is None:
            return None
        return graph.FamilySpec(graph.parse_family(self.family), self.param)


def _load(cfg: RunConfig) -> tuple[graph.Graph, str]:
    spec = cfg.family_spec
    if spec is not None:
        return graph.generate(spec), spec.label
    return graph.read_edge_list(cfg.input), cfg.input


def _select_rdfs(g: graph.Graph, policy: str) -> list[roman.RomanDominatingFunction]:
    if policy == "canonical":
        return [roman.min_roman_domination(g)[1]]
    found = roman.enumerate_min_rdfs(g, RDF_CAP).rdfs
    if policy == "all":
        return found
    k = int(policy)
    if k >= len(found):
        raise UsageError(f"--rdf {k}: only {len(found)} minimum RDFs")
    return [found[k]]


def _rdf_text(f: roman.RomanDominatingFunction) -> str:
    return f"V2={list(f.v2)} V1={list(f.v1)} weight={f.weight}"


def _cmd_energy(cfg: RunConfig, out) -> int:
    g, _ = _load(cfg)
    rows = []
    for f in _select_rdfs(g, cfg.rdf_policy):
        s = spectral.eigenvalues(spectral.mrdd_for(g, f), cfg.tol)
        rows.append((f, s.energy))
    lo, hi = min(e for _, e in rows), max(e for _, e in rows)
    if cfg.output_format == "json":
        doc = {"energy": rows[0][1], "rdf": rows[0][0].to_json()}
        if cfg.rdf_policy == "all":
            doc = {"per_rdf": [{"energy": e, "rdf": f.to_json()} for f, e in rows],
                   "energy_min": lo, "energy_max": hi}
        out.write(json.dumps(doc) + "\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["energy", "v0", "v1", "v2", "weight"])
        for f, e in rows:
            w.writerow([f"{e:.10f}", " ".join(map(str, f.v0)), " ".join(map(str, f.v1)),
                        " ".join(map(str, f.v2)), f.weight])
    else:
        for f, e in rows:
            out.write(f"{e:.10f}\t{_rdf_text(f)}\n")
        if cfg.rdf_policy == "all":
            out.write(f"spread\t{lo:.10f}\t{hi:.10f}\n")
    return EXIT_OK


def _cmd_spectrum(cfg: RunConfig, out) -> int:
    g, _ = _load(cfg)
    docs = []
    for f in _select_rdfs(g, cfg.rdf_policy):
        s = spectral.eigenvalues(spectral.mrdd_for(g, f), cfg.tol)
        docs.append((f, s))
    if cfg.output_format == "json":
        for _, s in docs:
            out.write(json.dumps(s.to_json()) + "\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["rdf_index", "k", "eigenvalue"])
        for i, (_, s) in enumerate(docs):
            for k, x in enumerate(s.eigenvalues):
                w.writerow([i, k, repr(x)])
    else:
        for f, s in docs:
            out.write(f"rdf\t{_rdf_text(f)}\n")
            for x in s.eigenvalues:
                out.write(f"{x:.10f}\n")
            out.write(f"energy\t{s.energy:.10f}\nresidual\t{s.residual:.3e}\n")
    return EXIT_OK


def _cmd_rdf(cfg: RunConfig, out) -> int:
    g, _ = _load(cfg)
    gamma, _ = roman.min_domination(g)
    gamma_r, f = roman.min_roman_domination(g)
    found = roman.enumerate_min_rdfs(g, RDF_CAP)
    count = f"{len(found.rdfs)}+" if found.truncated else str(len(found.rdfs))
    if cfg.output_format == "json":
        doc = {"gamma": gamma, "gamma_R": gamma_r, "rdf": f.to_json(), "count": len(found.rdfs),
               "truncated": found.truncated}
        out.write(json.dumps(doc) + "\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["gamma", "gamma_R", "v0", "v1", "v2", "count"])
        w.writerow([gamma, gamma_r, " ".join(map(str, f.v0)), " ".join(map(str, f.v1)),
                    " ".join(map(str, f.v2)), count])
    else:
        out.write(f"gamma\t{gamma}\ngamma_R\t{gamma_r}\nrdf\t{_rdf_text(f)}\nminimum_rdfs\t{count}\n")
    return EXIT_OK


def _cmd_charpoly(cfg: RunConfig, out) -> int:
    g, _ = _load(cfg)
    for f in _select_rdfs(g, cfg.rdf_policy):
        p = spectral.char_poly(spectral.mrdd_for(g, f))
        if cfg.output_format == "json":
            out.write(json.dumps(p.to_json()) + "\n")
        elif cfg.output_format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow([f"c{k}" for k in range(p.degree + 1)])
            w.writerow(p.coefficients)
        else:
            out.write(" ".join(map(str, p.descending())) + "\n")
            out.write(str(p) + "\n")
    return EXIT_OK


def _write_ledger(rows, fmt: str, out) -> None:
    if fmt == "json":
        out.write(verify.to_jsonl(rows))
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["graph", "formula_id", "computed", "printed", "corrected", "slack", "holds", "note"])
        for r in rows:
            w.writerow([r.graph, r.formula_id, repr(r.computed), json.dumps(r.printed),
                        json.dumps(r.corrected), repr(r.slack), r.holds, r.note])
    else:
        for r in rows:
            mark = "ok  " if r.holds else "FAIL"
            out.write(f"{mark} {r.graph:<16} {r.formula_id:<22} computed={r.computed:.10g} "
                      f"printed={json.dumps(r.printed)} slack={r.slack:.6g}"
                      + (f"  # {r.note}" if r.note else "") + "\n")


def _cmd_verify(cfg: RunConfig, out) -> int:
    g, label = _load(cfg)
    rows = []
    for i, f in enumerate(_select_rdfs(g, cfg.rdf_policy)):
        tag = label if cfg.rdf_policy == "canonical" else f"{label}#rdf{i}"
        rows += verify.audit_graph(g, tag, f, cfg.tol)
    spec = cfg.family_spec
    fam_ok = True
    fam_reports = []
    if spec is not None and spec.family not in (graph.Family.PATH, graph.Family.CYCLE):
        try:
            fam_reports.append(families.verify_family(spec, eig_tol=cfg.tol))
        except graph.GraphError:
            pass  # family parameter outside the theorem's range
        if spec.family is graph.Family.HEALTHY_SPIDER:
            rows.append(verify.spider_remark_row(label, spec.parameter, verify.compute_invariants(g)))
    _write_ledger(rows, cfg.output_format, out)
    for rep in fam_reports:
        fam_ok = fam_ok and rep.passed
        if cfg.output_format == "json":
            doc = dict(zip(families.CSV_COLUMNS, rep.csv_row()))
            doc["formula_id"] = "S3_family"
            doc["holds"] = rep.passed
            out.write(json.dumps(doc) + "\n")
        else:
            out.write(families.reports_to_csv([rep]))
    return EXIT_OK if fam_ok and not verify.failures(rows) else EXIT_MISMATCH


def _cmd_generate(cfg: RunConfig, out) -> int:
    g, _ = _load(cfg)
    text = graph.format_edge_list(g)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_batch(cfg: RunConfig, out) -> int:
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for i in range(cfg.count):
        n = int(rng.integers(4, 11))
        g = graph.random_connected_graph(rng, n)
        rows += verify.audit_graph(g, f"random{i}(n={n})", tol=cfg.tol)
    _write_ledger(rows, cfg.output_format, out)
    return EXIT_MISMATCH if verify.failures(rows) else EXIT_OK


_HANDLERS = {
    "energy": _cmd_energy,
    "spectrum": _cmd_spectrum,
    "rdf": _cmd_rdf,
    "charpoly": _cmd_charpoly,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
    "batch": _cmd_batch,
}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _HANDLERS[cfg.command](cfg, out)
    except (OSError, graph.EdgeListParseError, graph.SelfLoopError, graph.DuplicateEdgeError,
            graph.VertexRangeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_IO
    except (graph.GraphError, roman.ProblemTooLargeError, spectral.SpectralError,
            spectral.ConvergenceError, verify.PreconditionError, UsageError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="romanenergy", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", metavar="PATH", help="edge-list file")
    p.add_argument("--family", help="complete, bipartite, star, crown, spider, path or cycle")
    p.add_argument("--param", type=int)
    p.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)
    p.add_argument("--rdf", dest="rdf_policy", default="canonical", help="canonical, all, or an index")
    p.add_argument("--format", dest="output_format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--output", metavar="PATH", help="write generated graph here (generate only)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
    except (UsageError, graph.GraphError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
