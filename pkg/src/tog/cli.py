"""Command-line surface: stable JSON/DOT formats over the library modules.

All JSON output is canonical (sorted keys, two-space indent) and versioned
with a "schema": "tog/1" field, so identical inputs and configuration yield
byte-identical artifacts. Exit codes: 0 success, 1 validation failure (with a
machine-readable violation list on stdout), 2 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .multigraph import Multigraph, SurgeryError, components, is_two_connected
from . import rcs as _rcs
from . import jsj_frontend as _jsj
from . import vsystem as _vsystem
from .twin_theta import theta_sum_decomposition
from .vsystem import ConnectingVSystem
from .words_whitehead import (
    PeripheralSpec,
    cyclically_reduce,
    extended_whitehead_graph,
    whitehead_graph,
    whitehead_v_involution,
)


@dataclass
class Config:
    resolution: int = 2
    depth: int = 2
    root: int = 0
    cap: int = 10000
    emit: str = "json"

    def __post_init__(self):
        if self.resolution < 1:
            raise SurgeryError("resolution must be at least 1")
        if self.depth < 0:
            raise SurgeryError("depth must be nonnegative")


class _Failure(Exception):
    def __init__(self, code: int, violations: list[str]):
        super().__init__("; ".join(violations))
        self.code = code
        self.violations = violations


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as ex:
        raise _Failure(1, [f"MalformedInput: {ex}"])


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as ex:
        raise _Failure(1, [f"MalformedInput: bad fraction {s!r}: {ex}"])


def _graph_from(data: dict) -> Multigraph:
    try:
        return Multigraph.from_json_dict(data)
    except (SurgeryError, KeyError, TypeError, ValueError) as ex:
        raise _Failure(1, [f"MalformedInput: {ex}"])


def _cmd_graph(args) -> int:
    g = _graph_from(_load_json(args.input))
    if args.emit == "dot":
        print(g.to_dot())
        return 0
    _emit_json(
        {
            "schema": "tog/1",
            "graph": g.to_json_dict(),
            "vertex_count": len(g.vertices),
            "edge_count": len(g.edges),
            "component_count": len(components(g)),
            "two_connected": is_two_connected(g),
        }
    )
    return 0


def _cmd_twin_decompose(args) -> int:
    g = _graph_from(_load_json(args.input))
    tree = theta_sum_decomposition(g)
    _emit_json(tree.to_json_dict())
    return 0


def _cmd_whitehead(args) -> int:
    raw_words = [w for w in args.words.split(",") if w]
    labels = (
        [s for s in args.labels.split(",")] if args.labels else list(raw_words)
    )
    if len(labels) != len(raw_words):
        raise _Failure(1, ["MalformedInput: labels/words length mismatch"])
    words = [cyclically_reduce(w, lab) for w, lab in zip(raw_words, labels)]
    if args.multiplicities:
        mults = [int(s) for s in args.multiplicities.split(",")]
        if len(mults) != len(words):
            raise _Failure(1, ["MalformedInput: multiplicities/words length mismatch"])
        specs = [PeripheralSpec(w, n) for w, n in zip(words, mults)]
        W, vsys = extended_whitehead_graph(args.rank, specs)
        labels_out = {e: list(W.edge_labels[e]) for e in W.graph.edge_ids()}
    else:
        W = whitehead_graph(args.rank, words)
        vsys = whitehead_v_involution(W)
        labels_out = {e: W.edge_labels[e] for e in W.graph.edge_ids()}
    if args.emit == "dot":
        print(W.graph.to_dot(edge_labels={e: str(W.edge_labels[e]) for e in W.graph.edge_ids()}))
        return 0
    _emit_json(
        {
            "schema": "tog/1",
            "graph": W.graph.to_json_dict(),
            "edge_labels": labels_out,
            "vsystem": vsys.to_json_dict(),
            "two_connected": is_two_connected(W.graph),
        }
    )
    return 0


def _cmd_vsystem(args) -> int:
    data = _load_json(args.input)
    try:
        vs = ConnectingVSystem.from_json_dict(data)
    except (SurgeryError, KeyError, TypeError, ValueError) as ex:
        raise _Failure(1, [f"MalformedInput: {ex}"])
    violations = _vsystem.validate(vs)
    if violations:
        raise _Failure(1, violations)
    _emit_json(_vsystem.lines_report(vs))
    return 0


def _rcs_from(data: dict) -> _rcs.GraphicalConnectingSystem:
    try:
        return _rcs.GraphicalConnectingSystem.from_json_dict(data)
    except (SurgeryError, KeyError, TypeError, ValueError) as ex:
        raise _Failure(1, [f"MalformedInput: {ex}"])


def _cmd_rcs_validate(args) -> int:
    sys_ = _rcs_from(_load_json(args.input))
    violations = _rcs.validate(sys_)
    _emit_json({"schema": "tog/1", "violations": violations})
    return 0 if not violations else 1


def _expansion_dot(pu: _rcs.PartialUnion) -> str:
    doc = pu.to_json_dict()
    prov_v = doc["provenance"]["vertices"]
    lines = ["graph expansion {"]
    for v in sorted(pu.vertices):
        if v in prov_v:
            rec = prov_v[v]
            attrs = f'node="{rec["node"]}", cell="{rec["cell"]}"'
        else:
            attrs = 'kind="surgery"'
        lines.append(f'  "{v}" [{attrs}];')
    prov_e = doc["provenance"]["edges"]
    for e in sorted(pu.edges):
        t, h = pu.edges[e]
        rec = prov_e.get(e)
        attrs = f'label="{e}"'
        if rec is not None:
            attrs += f', node="{rec["node"]}", cell="{rec["cell"]}", interval="{rec["interval"][0]}:{rec["interval"][1]}"'
        lines.append(f'  "{t}" -- "{h}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines)


def _cmd_rcs_expand(args, cfg: Config) -> int:
    sys_ = _rcs_from(_load_json(args.input))
    violations = _rcs.validate(sys_)
    if violations:
        raise _Failure(1, violations)
    pu = _rcs.expand(
        sys_, root=cfg.root, depth=cfg.depth, resolution=cfg.resolution, cap=cfg.cap
    )
    if cfg.emit == "dot":
        print(_expansion_dot(pu))
    else:
        _emit_json(pu.to_json_dict())
    return 0


def _cmd_rcs_analyze(args, cfg: Config) -> int:
    sys_ = _rcs_from(_load_json(args.input))
    violations = _rcs.validate(sys_)
    if violations:
        raise _Failure(1, violations)
    pus = [
        _rcs.expand(sys_, root=cfg.root, depth=d, resolution=cfg.resolution, cap=cfg.cap)
        for d in range(cfg.depth + 1)
    ]
    locus = ("n", args.cell)
    if args.position is not None:
        locus = ("n", args.cell, _parse_fraction(args.position))
    pair = None
    if args.pair_cell:
        pair = ("n", args.pair_cell)
        if args.pair_position is not None:
            pair = ("n", args.pair_cell, _parse_fraction(args.pair_position))
    trace = _rcs.analyze_point(pus, locus, pair_with=pair)
    entries = []
    for depth, e in enumerate(trace.entries):
        rec = {
            "depth": depth,
            "degree": e["degree"],
            "target": [str(x) for x in e["target"]],
        }
        if "pair_components" in e:
            rec["pair_components"] = e["pair_components"]
        entries.append(rec)
    _emit_json({"schema": "tog/1", "locus": [str(x) for x in locus], "trace": entries})
    return 0


def _cmd_jsj_synth(args) -> int:
    if args.golden:
        inp = _jsj.golden_g2() if args.golden == "g2" else _jsj.golden_racg1()
    elif args.input:
        try:
            inp = _jsj.JsjInput.from_json_dict(_load_json(args.input))
        except (SurgeryError, KeyError, TypeError, ValueError) as ex:
            raise _Failure(1, [f"MalformedInput: {ex}"])
    else:
        raise _Failure(1, ["MalformedInput: provide an input file or --golden"])
    sys_, ledger = _jsj.synthesize(inp)
    _emit_json(
        {
            "schema": "tog/1",
            "system": sys_.to_json_dict(),
            "ledger": ledger.to_json_dict(),
        }
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tog", description="Finite calculus of trees of graphs"
    )
    sub = p.add_subparsers(dest="command", required=True)

    gp = sub.add_parser("graph", help="inspect a graph JSON file")
    gp.add_argument("input", help="graph JSON path or - for stdin")
    gp.add_argument("--emit", choices=["json", "dot"], default="json")

    tp = sub.add_parser("twin-decompose", help="decompose a twin graph into theta summands")
    tp.add_argument("input")

    wp = sub.add_parser("whitehead", help="Whitehead graph of cyclic words")
    wp.add_argument("--rank", type=int, required=True)
    wp.add_argument("--words", required=True, help="comma-separated words; uppercase = inverse")
    wp.add_argument("--labels", help="comma-separated labels (default: the words)")
    wp.add_argument("--multiplicities", help="comma-separated n >= 2 per word; builds the extended graph")
    wp.add_argument("--emit", choices=["json", "dot"], default="json")

    vp = sub.add_parser("vsystem", help="lines report of a connecting V-system")
    vp.add_argument("input")

    rp = sub.add_parser("rcs", help="graphical connecting systems")
    rsub = rp.add_subparsers(dest="rcs_command", required=True)
    rv = rsub.add_parser("validate")
    rv.add_argument("input")
    re_ = rsub.add_parser("expand")
    re_.add_argument("input")
    ra = rsub.add_parser("analyze")
    ra.add_argument("input")
    ra.add_argument("--cell", required=True, help="root-component cell to track")
    ra.add_argument("--position", help="interior position as a fraction, e.g. 1/5")
    ra.add_argument("--pair-cell", help="second tracked cell for complement counts")
    ra.add_argument("--pair-position")
    for q in (re_, ra):
        q.add_argument("--depth", type=int, default=2)
        q.add_argument("--resolution", type=int, default=2)
        q.add_argument("--root", type=int, default=0)
        q.add_argument("--cap", type=int, default=10000)
    re_.add_argument("--emit", choices=["json", "dot"], default="json")

    jp = sub.add_parser("jsj", help="reduced JSJ frontend")
    jsub = jp.add_subparsers(dest="jsj_command", required=True)
    js = jsub.add_parser("synth")
    js.add_argument("input", nargs="?")
    js.add_argument("--golden", choices=["g2", "racg1"])
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "graph":
            return _cmd_graph(args)
        if args.command == "twin-decompose":
            return _cmd_twin_decompose(args)
        if args.command == "whitehead":
            return _cmd_whitehead(args)
        if args.command == "vsystem":
            return _cmd_vsystem(args)
        if args.command == "rcs":
            if args.rcs_command == "validate":
                return _cmd_rcs_validate(args)
            cfg = Config(args.resolution, args.depth, args.root, args.cap,
                         getattr(args, "emit", "json"))
            if args.rcs_command == "expand":
                return _cmd_rcs_expand(args, cfg)
            return _cmd_rcs_analyze(args, cfg)
        if args.command == "jsj":
            return _cmd_jsj_synth(args)
        raise _Failure(1, [f"UnknownCommand: {args.command}"])
    except _Failure as ex:
        _emit_json({"schema": "tog/1", "violations": ex.violations})
        return ex.code
    except _rcs.ResourceCapExceeded as ex:
        _emit_json({"schema": "tog/1", "violations": [f"ResourceCapExceeded: {ex}"]})
        return 2
    except SurgeryError as ex:
        _emit_json({"schema": "tog/1", "violations": [f"{type(ex).__name__}: {ex}"]})
        return 1


if __name__ == "__main__":
    sys.exit(main())
