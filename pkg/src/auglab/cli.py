"""Command line front end: ``auglab {check,faces,augment,volume} FILE``.

Exit codes: 0 success, 1 hypothesis failure or numeric mismatch, 2 input
errors, 3 infeasible arc system, 4 search truncated at the cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .diagram import DiagramError, build_faces, parse_pd, read_pd_file
from .gate import check_hypotheses
from .planner import (
    DEFAULT_CAP,
    ArcSystem,
    AugmentedLink,
    CapExceeded,
    PlannerError,
    realize_disjoint_system,
)
from .volume import (
    BORROMEAN,
    OCT,
    VolumeError,
    borromean_rings,
    evaluate,
    leaf_bindings,
    node_from_json,
    numeric,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_UNKNOWN = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    paths: tuple[str, ...]
    format: str = "json"
    tolerance: float = 1e-9
    cap: int = DEFAULT_CAP
    output: str | None = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.cap < 1:
            raise ValueError("cap must be at least 1")
        if self.format not in ("json", "text"):
            raise ValueError(f"unknown format {self.format!r}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- commands ------------------------------------------------------------
# each returns (exit code, json-able payload, text rendering)

def cmd_check(cfg: RunConfig, path: str):
    diagrams = read_pd_file(path)
    reports = [check_hypotheses(d) for d in diagrams]
    code = EXIT_OK if all(r.passes for r in reports) else EXIT_FAIL
    payload = [r.to_dict() for r in reports]
    payload = payload[0] if len(payload) == 1 else payload
    lines = []
    for r in reports:
        flags = ["connected", "alternating", "reduced", "obviously_prime", "two_braid"]
        lines.append(" ".join(f"{k}={getattr(r, k)}" for k in flags)
                     + f" -> {'PASS' if r.passes else 'FAIL'}")
        lines += [f"  witness: {json.dumps(w, sort_keys=True)}" for w in r.witnesses]
    return code, payload, "\n".join(lines) + "\n"


def _face_census(d) -> dict:
    f = build_faces(d)
    return {
        "crossings": d.crossing_count,
        "face_count": len(f),
        "sizes": f.sizes(),
        "faces": [{"index": i, "size": face.size, "edges": list(face.edges),
                   "darts": [list(x) for x in face.darts]}
                  for i, face in enumerate(f.faces)],
    }


def cmd_faces(cfg: RunConfig, path: str):
    censuses = [_face_census(d) for d in read_pd_file(path)]
    payload = censuses[0] if len(censuses) == 1 else censuses
    lines = []
    for c in censuses:
        lines.append(f"{c['crossings']} crossings, {c['face_count']} faces")
        lines += [f"  face {x['index']}: size {x['size']} edges {x['edges']}"
                  for x in c["faces"]]
    return EXIT_OK, payload, "\n".join(lines) + "\n"


def cmd_augment(cfg: RunConfig, path: str):
    with open(path, encoding="utf-8") as fh:
        try:
            request = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PlannerError(f"{path}: bad JSON: {exc}") from None
    if not isinstance(request, dict) or "diagram" not in request:
        raise PlannerError(f"{path}: expected {{diagram, pairs}}")
    d = parse_pd(request["diagram"])
    pairs = request.get("pairs", [])
    report = check_hypotheses(d)
    try:
        result = realize_disjoint_system(build_faces(d), pairs, cfg.cap)
    except CapExceeded as exc:
        payload = {"status": "unknown", "cap": exc.cap,
                   "truncated": [list(p) for p in exc.truncated]}
        return EXIT_UNKNOWN, payload, f"unknown: {exc}\n"
    if not isinstance(result, ArcSystem):
        return (EXIT_INFEASIBLE, result.to_dict(),
                f"infeasible within cap {result.cap}: certificate "
                f"{[list(p) for p in result.certificate]}\n")
    link = AugmentedLink(d, result, report)
    payload = {"status": "feasible", **link.to_dict()}
    lines = [f"feasible: {len(result.arcs)} arcs; hyperbolic certificate: {link.hyperbolic}"]
    for arc in result.arcs:
        lines.append(f"  {arc.endpoints}: n={arc.punctures} ({arc.kind}) route {list(arc.route)}")
    code = EXIT_OK if link.hyperbolic else EXIT_FAIL
    return code, payload, "\n".join(lines) + "\n"


def cmd_volume(cfg: RunConfig, path: str, want_numeric: bool = False,
               expect: float | None = None, identify_borromean: bool = False):
    with open(path, encoding="utf-8") as fh:
        try:
            tree = node_from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise VolumeError(f"{path}: bad JSON: {exc}") from None
    expr = evaluate(tree)
    if identify_borromean and BORROMEAN in expr.symbols():
        k = expr.coefficient(BORROMEAN)
        expr = expr - k * type(expr).symbol(BORROMEAN) + k * borromean_rings()
    bindings = leaf_bindings(tree)
    payload = {"terms": expr.to_json(), "oct_coefficient": str(expr.coefficient(OCT))}
    value = None
    if want_numeric or expect is not None or expr.symbols() <= bindings.keys() | {OCT}:
        value = numeric(expr, bindings)
        payload["numeric"] = value
    text = f"{expr}\n" + (f"= {value!r}\n" if value is not None else "")
    code = EXIT_OK
    if expect is not None:
        ok = abs(value - expect) <= cfg.tolerance
        payload["expected"] = expect
        payload["matches"] = ok
        code = EXIT_OK if ok else EXIT_FAIL
    return code, payload, text


# -- entry point ---------------------------------------------------------

def _env_cap() -> int:
    raw = os.environ.get("AUGLAB_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"auglab: AUGLAB_CAP must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tolerance", type=float, default=1e-9,
                        help="absolute tolerance for numeric comparisons")
    common.add_argument("--cap", type=int, default=None,
                        help=f"shortest routes tried per pair (default {DEFAULT_CAP}, "
                             "or $AUGLAB_CAP)")
    common.add_argument("--output", "-o", default=None, help="write result here")

    parser = argparse.ArgumentParser(
        prog="auglab", description="Augmentation workbench for alternating diagrams.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="check hypotheses of a PD file")
    p.add_argument("path")
    p = sub.add_parser("faces", parents=[common], help="face census of a PD file")
    p.add_argument("path")
    p = sub.add_parser("augment", parents=[common],
                       help="realize vertical components from a JSON request")
    p.add_argument("path")
    p = sub.add_parser("volume", parents=[common], help="evaluate a belted-sum expression")
    p.add_argument("path")
    p.add_argument("--numeric", action="store_true",
                   help="require a numeric value (fails on unbound leaves)")
    p.add_argument("--expect", type=float, default=None,
                   help="compare the numeric value with this one at --tolerance")
    p.add_argument("--identify-borromean", action="store_true",
                   help=f"replace the {BORROMEAN} symbol by 2*OCT")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.command, (args.path,), args.format, args.tolerance,
                        args.cap if args.cap is not None else _env_cap(), args.output)
    except ValueError as exc:
        print(f"auglab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if cfg.command == "check":
            code, payload, text = cmd_check(cfg, args.path)
        elif cfg.command == "faces":
            code, payload, text = cmd_faces(cfg, args.path)
        elif cfg.command == "augment":
            code, payload, text = cmd_augment(cfg, args.path)
        else:
            code, payload, text = cmd_volume(cfg, args.path, args.numeric, args.expect,
                                             args.identify_borromean)
    except (DiagramError, PlannerError, VolumeError, OSError, KeyError, TypeError) as exc:
        print(f"auglab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = dumps(payload) if cfg.format == "json" else text
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
