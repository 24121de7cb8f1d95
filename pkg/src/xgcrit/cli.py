"""Command-line front end: xgcrit {generate, chi, alternator, verify-critical, verify-hom}.

Exit codes: 0 success, 1 verification failed, 2 budget exhausted / unknown,
3 usage error.  All element and vertex numbers printed are 1-based.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from .alternator import find_standard_alternator, format_certificate, is_vertex
from .coloring.exact import DEFAULT_BUDGET, ENGINES, chromatic_number
from .coloring.verify import FAILED, UNKNOWN, report_to_dict, verify_edge_critical
from .cyclic import GroundSet
from .graphs import FAMILIES, encode_label, export_dimacs, export_json, import_json, read_dimacs, xg_graph
from .mycielski import (
    APEX,
    MycielskiVertex,
    homomorphism_f,
    homomorphism_source,
    mycielski_edge_kind,
    mycielski_tower,
    verify_homomorphism,
)

log = logging.getLogger("xgcrit")

EXIT_OK, EXIT_FAILED, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3
BUDGET_ENV = "XGCRIT_BUDGET"
TOWER = "mycielski-tower"
HOM_MAPS = ("lemma", "identity", "perturbed")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    k: Optional[int] = None
    family: str = "xg"
    t: Optional[int] = None
    radii: list = field(default_factory=list)
    output: Optional[str] = None
    format: str = "dimacs"
    budget: int = DEFAULT_BUDGET
    engine: str = "auto"
    sample: Optional[str] = None
    jobs: int = 1
    seed: int = 0

    @property
    def ground(self) -> GroundSet:
        if self.n is None or self.k is None:
            raise UsageError("-n and -k are required")
        try:
            return GroundSet(self.n, self.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xgcrit", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ground(sp, required=True):
        sp.add_argument("-n", type=int, required=required)
        sp.add_argument("-k", type=int, required=required)

    def family(sp):
        ground(sp, required=False)
        sp.add_argument("--family", default="xg", choices=sorted(FAMILIES) + [TOWER])
        sp.add_argument("-t", type=int, help="tower height (mycielski-tower)")
        sp.add_argument("--radii", type=_int_list, default=[], help="comma-separated radii, t-2 of them")

    def solver(sp):
        sp.add_argument("--budget", type=int, default=None,
                        help=f"solver node/conflict budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
        sp.add_argument("--engine", default="auto", choices=ENGINES)

    sp = sub.add_parser("generate", help="build a graph and write it out")
    family(sp)
    sp.add_argument("--format", default="dimacs", choices=("dimacs", "json"))
    sp.add_argument("-o", "--output", help="output path (default: standard output)")

    sp = sub.add_parser("chi", help="exact chromatic number with a witness")
    family(sp)
    solver(sp)
    sp.add_argument("--input", help="read the graph from a DIMACS or JSON file instead")
    sp.add_argument("-o", "--output", help="write a JSON report with the witness colouring")

    sp = sub.add_parser("alternator", help="standard alternator certificate of an edge AB")
    ground(sp)
    sp.add_argument("A", type=_int_list)
    sp.add_argument("B", type=_int_list)

    sp = sub.add_parser("verify-critical", help="check the rule colouring of XG - AB for every edge AB")
    ground(sp)
    solver(sp)
    sp.add_argument("--sample", default=None,
                    help="edges given the exact-χ cross-check: a count, 'all' or 0 (default: all if |V|<=60, else 25)")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--negative-control", action="store_true", help="merge two colour classes; must fail")
    sp.add_argument("--literal-rules", action="store_true", help=argparse.SUPPRESS)
    sp.add_argument("-o", "--output", help="certificate path (JSON)")

    sp = sub.add_parser("verify-hom", help="check the Mycielski homomorphism into XG(n,k)")
    ground(sp)
    sp.add_argument("--map", default="lemma", choices=HOM_MAPS)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", help="write the violation list as JSON")
    return p


def make_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(args.command)
    for name in ("n", "k", "family", "t", "radii", "output", "format", "engine", "sample", "jobs", "seed"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    budget = getattr(args, "budget", None)
    cfg.budget = _default_budget() if budget is None else budget
    if cfg.budget <= 0:
        raise UsageError("budget must be positive")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if cfg.sample is not None and cfg.sample != "all":
        try:
            if int(cfg.sample) < 0:
                raise ValueError
        except ValueError:
            raise UsageError(f"--sample must be 'all' or a non-negative count, got {cfg.sample!r}") from None
    return cfg


def _graph(cfg: RunConfig):
    if cfg.family == TOWER:
        if cfg.t is None:
            raise UsageError("mycielski-tower needs -t")
        try:
            return mycielski_tower(cfg.t, cfg.radii)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return FAMILIES[cfg.family](cfg.ground)


def _write_text(path: Optional[str], text: str):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def _describe(cfg: RunConfig) -> str:
    if cfg.family == TOWER:
        return f"{TOWER} t={cfg.t} radii={','.join(map(str, cfg.radii))}"
    return f"{cfg.family}({cfg.n},{cfg.k})"


def cmd_generate(cfg: RunConfig) -> int:
    G = _graph(cfg)
    if cfg.output is None:
        (export_dimacs if cfg.format == "dimacs" else export_json)(G, sys.stdout)
        print(f"{_describe(cfg)}: {G.n_vertices} vertices, {G.n_edges} edges", file=sys.stderr)
        return EXIT_OK
    try:
        with open(cfg.output, "w") as fh:
            (export_dimacs if cfg.format == "dimacs" else export_json)(G, fh)
    except OSError as exc:
        raise UsageError(f"cannot write {cfg.output}: {exc}") from None
    print(f"{_describe(cfg)}: {G.n_vertices} vertices, {G.n_edges} edges -> {cfg.output}")
    return EXIT_OK


def _load(path: str):
    try:
        with open(path) as fh:
            head = fh.read(1)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return import_json(path) if head == "{" else read_dimacs(path)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None


def cmd_chi(cfg: RunConfig, input_path: Optional[str] = None) -> int:
    G = _load(input_path) if input_path else _graph(cfg)
    name = input_path or _describe(cfg)
    if G.n_vertices == 0:
        raise UsageError("graph has no vertices")
    res = chromatic_number(G, cfg.budget, cfg.engine)
    if res.exact:
        print(f"{name}: chi = {res.chi} (exact, {G.n_vertices} vertices, {G.n_edges} edges, {res.nodes} search steps)")
    else:
        print(f"{name}: chi unknown, {res.lower} <= chi <= {res.upper} (budget {cfg.budget} exhausted)")
    if cfg.output:
        doc = {
            "graph": name,
            "status": res.status,
            "chi": res.chi,
            "lower": res.lower,
            "upper": res.upper,
            "budget": cfg.budget,
            "engine": cfg.engine,
            "seed": cfg.seed,
            "coloring": [[v + 1, c + 1] for v, c in enumerate(res.coloring)],
        }
        _write_text(cfg.output, json.dumps(doc, indent=1) + "\n")
    return EXIT_OK if res.exact else EXIT_UNKNOWN


def cmd_alternator(cfg: RunConfig, A: list, B: list) -> int:
    g = cfg.ground
    for X in (A, B):
        if not is_vertex(X, g):
            raise UsageError(f"{sorted(X)} is not a vertex of SG({g.n},{g.k})")
    if set(A) & set(B):
        print("not an edge: A and B intersect")
        return EXIT_FAILED
    alt = find_standard_alternator(A, B, g)
    if alt is None:
        print(f"not an edge: {sorted(A)} and {sorted(B)} are not almost-interlacing in C_{g.n}")
        return EXIT_FAILED
    print(format_certificate(A, B, alt, g).rstrip())
    return EXIT_OK


def cmd_verify_critical(cfg: RunConfig, negative_control=False, literal=False) -> int:
    g = cfg.ground
    G = xg_graph(g)
    report = verify_edge_critical(
        g, sample=cfg.sample, budget=cfg.budget, jobs=cfg.jobs, seed=cfg.seed,
        literal=literal, corrupt=negative_control, G=G,
    )
    if cfg.output:
        doc = report_to_dict(report, G)
        doc["negative_control"] = negative_control
        _write_text(cfg.output, json.dumps(doc, indent=1) + "\n")
    target = report.target
    verdict = report.verdict
    print(f"XG({g.n},{g.k}): {report.n_vertices} vertices, {report.n_edges} edges, "
          f"target {target} colours, seed {cfg.seed}, exact cross-checks {len(report.sampled)}")
    for cert in report.failures[:10]:
        A, B = cert.A, cert.B
        why = cert.error or (f"{len(cert.violations)} monochromatic edges" if cert.violations else
                             f"{cert.n_colors} colours, chi {cert.chi}")
        print(f"  FAIL edge {list(A)}-{list(B)}: {why}")
        for u, v, col, ru, rv in cert.violations[:3]:
            print(f"    {list(G.labels[u])} ({ru}) ~ {list(G.labels[v])} ({rv}) share colour {col}")
    print(f"verdict: {verdict}")
    if verdict == FAILED:
        return EXIT_FAILED
    return EXIT_UNKNOWN if verdict == UNKNOWN else EXIT_OK


def format_label(label) -> str:
    """{1,3} for a set, {1,3}^2 for a Mycielski copy at level 2, Z for the apex."""
    if isinstance(label, MycielskiVertex):
        return f"{format_label(label.base)}^{label.level}"
    if label == APEX:
        return APEX
    return "{" + ",".join(map(str, label)) + "}"


def perturbed_map(f: dict, source) -> dict:
    """Copy of ``f`` sending the first edge's second endpoint onto the image of the first."""
    i, j = next(iter(source.edges()))
    out = dict(f)
    out[source.labels[j]] = f[source.labels[i]]
    return out


def cmd_verify_hom(cfg: RunConfig, which="lemma") -> int:
    g = cfg.ground
    target = xg_graph(g)
    if which == "identity":
        source, f, classify = target, {lab: lab for lab in target.labels}, None
    else:
        source = homomorphism_source(g)
        f = homomorphism_f(g, source)
        if which == "perturbed":
            f = perturbed_map(f, source)
        classify = mycielski_edge_kind
    report = verify_homomorphism(source, target, f, classify)
    print(f"{which} map into XG({g.n},{g.k}): {report.checked} edges checked, "
          f"{len(report.violations)} violations, seed {cfg.seed}")
    for kind, count in sorted(report.by_kind.items()):
        if kind:
            print(f"  {kind}: {count} edges")
    for viol in report.violations[:10]:
        print(f"  {format_label(viol.u)} ~ {format_label(viol.v)} -> "
              f"{format_label(viol.fu)}, {format_label(viol.fv)} not adjacent")
    if cfg.output:
        doc = {
            "n": g.n, "k": g.k, "map": which, "seed": cfg.seed,
            "checked": report.checked,
            "violations": [
                [encode_label(v.u), encode_label(v.v), list(v.fu), list(v.fv), v.kind]
                for v in report.violations
            ],
        }
        _write_text(cfg.output, json.dumps(doc, indent=1) + "\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = make_config(args)
        if cfg.command == "generate":
            return cmd_generate(cfg)
        if cfg.command == "chi":
            return cmd_chi(cfg, args.input)
        if cfg.command == "alternator":
            return cmd_alternator(cfg, args.A, args.B)
        if cfg.command == "verify-critical":
            return cmd_verify_critical(cfg, args.negative_control, args.literal_rules)
        return cmd_verify_hom(cfg, args.map)
    except UsageError as exc:
        print(f"xgcrit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
