"""Command-line front door.

Subcommands: construct, check, decompose, score, certify, oracle, export.
Graph files use the rotation-system JSON schema {"n": ..., "rotation": ...}.
Exit codes: 0 success, 1 verified negative (a forbidden cycle was found or a
bound failed), 2 input or hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import construct, discharge, oracle
from .blocks import blocks_report_json, decompose_triangular_blocks
from .cycles import is_c_l_free
from .planar_core import (
    GraphError,
    PlanarEmbedding,
    embedding_from_json,
    embedding_to_json,
    graph_to_dot,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_embedding(path: str) -> PlanarEmbedding:
    return embedding_from_json(Path(path).read_text())


def _cmd_construct(args) -> int:
    if args.family == "g0":
        report = construct.assemble_extremal(args.k, "g0")
    elif args.family == "h0":
        report = construct.assemble_extremal(args.k, "h0")
    elif args.family == "chain":
        report = construct.chain_report(args.t)
    elif args.family == "general":
        report = construct.construct_from_base(construct.cycle_base(args.ell), args.ell)
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown family {args.family}")
    _write(args.out, embedding_to_json(report.embedding))
    if args.report:
        _write(args.report, report.to_json())
    if args.dot:
        _write(args.dot, graph_to_dot(report.embedding.graph()))
    return EXIT_OK


def _cmd_check(args) -> int:
    emb = _load_embedding(args.file)
    free, witness = is_c_l_free(emb.graph(), args.ell)
    verdict = {
        "ell": args.ell,
        "free": free,
        "witness": list(witness.vertices) if witness else None,
    }
    _write(args.out, json.dumps(verdict, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if free else EXIT_NEGATIVE


def _cmd_decompose(args) -> int:
    emb = _load_embedding(args.file)
    blocks = decompose_triangular_blocks(emb)
    _write(args.out, json.dumps(blocks_report_json(blocks), sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _cmd_score(args) -> int:
    emb = _load_embedding(args.file)
    ledger = discharge.compute_ledger(emb)
    _write(args.out, ledger.to_json())
    return EXIT_OK


def _cmd_certify(args) -> int:
    emb = _load_embedding(args.file)
    certificate = discharge.partition_and_certify(emb)
    payload = json.loads(certificate.to_json())
    payload["bound"] = json.loads(discharge.certify_bound(emb).to_json())
    _write(args.out, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    ok = certificate.all_classes_nonpositive and certificate.edge_bound_holds
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_oracle(args) -> int:
    methods = ["edge-subsets", "iso-classes"] if args.method == "both" else [args.method]
    results = [oracle.max_edges_c6free_planar(args.n, method=m) for m in methods]
    payload = [r.to_json_dict() for r in results]
    _write(args.out, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    if len(results) == 2 and results[0].max_edges != results[1].max_edges:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_export(args) -> int:
    emb = _load_embedding(args.file)
    if args.format == "dot":
        _write(args.out, graph_to_dot(emb.graph()))
    else:
        _write(args.out, embedding_to_json(emb))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turanlab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family member")
    p.add_argument("--family", choices=["g0", "h0", "chain", "general"], required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--ell", type=int, default=6)
    p.add_argument("--out", default="-")
    p.add_argument("--report", default=None)
    p.add_argument("--dot", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="test for a fixed-length cycle")
    p.add_argument("--file", required=True)
    p.add_argument("--ell", type=int, default=6)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("decompose", help="triangular-block report")
    p.add_argument("--file", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("score", help="contribution ledger with block scores")
    p.add_argument("--file", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("certify", help="discharge certificate plus edge bound")
    p.add_argument("--file", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("oracle", help="exact extremal value at small order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["edge-subsets", "iso-classes", "both"],
                   default="edge-subsets")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("export", help="re-emit a graph file")
    p.add_argument("--file", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="dot")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_export)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
