"""Command-line surface.

Each subcommand is a thin pipeline over the library; no logic lives only
here.  Reports go to stdout, machine-readable with --json.  JSON reports
embed the tool version and the sha256 of every input file so golden files
fail loudly when formats drift.  Exit codes: 0 success, 1 domain error
(precondition or bound violation, with the named error), 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .catalog import load_catalog
from .classify import classify_code
from .codes import LinearCode, format_code_file, load_code
from .connectivity import connectivity_lambda, find_k_separation, state_profile
from .dectree import build_complete_tree, recompose, tree_from_json, tree_to_dict, tree_to_json
from .errors import SeymourError
from .graphs import format_graph_file, load_graph, code_from_graph, realize_graph
from .lpgeom import full_dual_words, hunt_pseudocodeword, lp_decode
from .mldecode import cost_from_channel, linmin_bruteforce, linmin_tree, min_distance, parse_channel_file


def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _report(args, command: str, inputs: list[str], result: dict) -> int:
    if args.json:
        doc = {
            "command": command,
            "inputs": {p: _sha256(p) for p in inputs},
            "result": result,
            "tool": "seymour",
            "version": __version__,
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for key, value in result.items():
            print(f"{key}: {value}")
    return 0


def _parse_gamma(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(part) for part in text.replace(",", " ").split())


def _cmd_graph2code(args) -> int:
    graph = load_graph(args.graph)
    code = code_from_graph(graph)
    if args.json:
        return _report(args, "graph2code", [args.graph], {
            "n": code.n, "k": code.k, "generator": code.gen.to_strings(),
        })
    sys.stdout.write(format_code_file(code))
    return 0


def _cmd_realize(args) -> int:
    code = load_code(args.code)
    graph = realize_graph(code, bound=args.bound)
    if graph is None:
        return _report(args, "realize", [args.code], {"realizable": False})
    if args.json:
        return _report(args, "realize", [args.code], {
            "realizable": True,
            "n_vertices": graph.n_vertices,
            "edges": [list(e) for e in graph.edges],
        })
    sys.stdout.write(format_graph_file(graph))
    return 0


def _cmd_sep(args) -> int:
    code = load_code(args.code)
    result: dict = {}
    if args.k is not None:
        sep = find_k_separation(code, args.k, args.min_side or args.k)
        result["separation"] = None if sep is None else {
            "J": list(sep.J), "k": sep.k, "exact": sep.exact, "minimal": sep.minimal,
        }
    if args.profile:
        result["state_profile"] = list(state_profile(code).s)
    if args.connectivity or (args.k is None and not args.profile):
        lam = connectivity_lambda(code)
        result["lambda"] = "infinity" if lam == math.inf else lam
    return _report(args, "sep", [args.code], result)


def _cmd_decompose(args) -> int:
    code = load_code(args.code)
    mode = "three_homogeneous" if args.mode == "3" else "three_bar_homogeneous"
    tree = build_complete_tree(code, mode)
    if args.json:
        return _report(args, "decompose", [args.code], {"tree": tree_to_dict(tree)})
    print(tree_to_json(tree))
    return 0


def _cmd_recompose(args) -> int:
    with open(args.tree, "r", encoding="utf-8") as fh:
        tree = tree_from_json(fh.read())
    code = recompose(tree)
    if args.json:
        return _report(args, "recompose", [args.tree], {
            "n": code.n, "k": code.k, "generator": code.gen.to_strings(),
        })
    sys.stdout.write(format_code_file(code))
    return 0


def _cmd_decode(args) -> int:
    code = load_code(args.code)
    inputs = [args.code]
    if args.gamma is not None:
        gamma = tuple(float(g) for g in _parse_gamma(args.gamma))
    else:
        if not args.channel or args.received is None:
            raise SeymourError("decode needs either --gamma or --channel with --received")
        with open(args.channel, "r", encoding="utf-8") as fh:
            channel = parse_channel_file(fh.read())
        inputs.append(args.channel)
        received = [int(ch) for ch in args.received.strip()]
        gamma = cost_from_channel(received, channel)
    if args.tree:
        tree = build_complete_tree(code, "three_bar_homogeneous")
        word, cost = linmin_tree(tree, gamma)
    else:
        word, cost = linmin_bruteforce(code, gamma)
    return _report(args, "decode", inputs, {
        "codeword": str(word), "cost": cost, "method": "tree" if args.tree else "bruteforce",
    })


def _cmd_mindist(args) -> int:
    code = load_code(args.code)
    tree = build_complete_tree(code, "three_bar_homogeneous") if args.tree else None
    d = min_distance(code, tree)
    return _report(args, "mindist", [args.code], {
        "distance": d, "method": "tree" if args.tree else "bruteforce",
    })


def _cmd_classify(args) -> int:
    code = load_code(args.code)
    report = classify_code(code, with_tree_crosscheck=not args.no_crosscheck)
    return _report(args, "classify", [args.code], {
        "graphic": report.graphic,
        "cographic": report.cographic,
        "regular": report.regular,
        "geometrically_perfect": report.geometrically_perfect,
    })


def _load_dual_words(args, code: LinearCode) -> tuple[list[int], list[str]]:
    if args.dual_all:
        return full_dual_words(code), []
    if not args.h_list:
        raise SeymourError("need --h-list FILE or --dual-all")
    words = []
    with open(args.h_list, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            mask = 0
            for j, ch in enumerate(line):
                if ch == "1":
                    mask |= 1 << j
            words.append(mask)
    return words, [args.h_list]


def _cmd_lpdecode(args) -> int:
    code = load_code(args.code)
    words, extra = _load_dual_words(args, code)
    gamma = _parse_gamma(args.gamma)
    vertex, verdict = lp_decode(code, words, gamma)
    return _report(args, "lpdecode", [args.code] + extra, {
        "verdict": verdict,
        "vertex": [str(x) for x in vertex.x],
        "objective": str(vertex.objective),
        "integral": vertex.integral,
    })


def _cmd_hunt(args) -> int:
    code = load_code(args.code)
    words, extra = _load_dual_words(args, code)
    result = hunt_pseudocodeword(code, words, trials=args.trials, seed=args.seed)
    doc: dict = {"trials": args.trials, "seed": args.seed}
    if result is None:
        doc.update({"witness_gamma": None, "witness_vertex": None, "found_at": None})
    else:
        doc.update({
            "found_at": result.trial,
            "witness_gamma": [str(g) for g in result.gamma],
            "witness_vertex": [str(x) for x in result.vertex.x],
            "objective": str(result.vertex.objective),
        })
    return _report(args, "hunt", [args.code] + extra, doc)


def _cmd_catalog(args) -> int:
    entries = {
        name: {"n": e.n, "k": e.k, "d": e.d}
        for name, e in load_catalog().items()
    }
    return _report(args, "catalog", [], {"entries": entries})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seymour",
        description="Decomposition, decoding, and classification of binary linear codes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized behavior")
        p.add_argument("--threads", type=int, default=1,
                       help="cap on module-internal parallelism (current modules are sequential)")

    p = sub.add_parser("graph2code", help="cycle code of a graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=_cmd_graph2code)

    p = sub.add_parser("realize", help="search for a graph realization of a code")
    p.add_argument("code")
    p.add_argument("--bound", type=int, default=16)
    common(p)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("sep", help="separations, connectivity, state profile")
    p.add_argument("code")
    p.add_argument("--k", type=int, help="separation order to search for")
    p.add_argument("--min-side", type=int, help="minimum side size (default k)")
    p.add_argument("--profile", action="store_true", help="emit the state-complexity profile")
    p.add_argument("--connectivity", action="store_true", help="emit the connectivity")
    common(p)
    p.set_defaults(func=_cmd_sep)

    p = sub.add_parser("decompose", help="build a complete decomposition tree")
    p.add_argument("code")
    p.add_argument("--mode", choices=["3", "3bar"], default="3bar")
    common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("recompose", help="recombine a JSON decomposition tree")
    p.add_argument("tree")
    common(p)
    p.set_defaults(func=_cmd_recompose)

    p = sub.add_parser("decode", help="ML decode via cost minimization")
    p.add_argument("code")
    p.add_argument("--gamma", help="cost vector, comma or space separated")
    p.add_argument("--channel", help="channel spec file")
    p.add_argument("--received", help="received word (symbol indices, e.g. 0/1 string)")
    p.add_argument("--tree", action="store_true", help="decode through a decomposition tree")
    common(p)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("mindist", help="minimum distance via cost minimizations")
    p.add_argument("code")
    p.add_argument("--tree", action="store_true", help="use the decomposition-tree decoder")
    common(p)
    p.set_defaults(func=_cmd_mindist)

    p = sub.add_parser("classify", help="graphic/regular/geometrically-perfect flags")
    p.add_argument("code")
    p.add_argument("--no-crosscheck", action="store_true",
                   help="skip the decomposition-leaf cross-check")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("lpdecode", help="LP decoding over the fundamental polytope")
    p.add_argument("code")
    p.add_argument("--gamma", required=True)
    p.add_argument("--h-list", help="file with one 0/1 dual word per line")
    p.add_argument("--dual-all", action="store_true", help="use every nonzero dual word")
    common(p)
    p.set_defaults(func=_cmd_lpdecode)

    p = sub.add_parser("hunt", help="search for a pseudocodeword")
    p.add_argument("code")
    p.add_argument("--h-list")
    p.add_argument("--dual-all", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    common(p)
    p.set_defaults(func=_cmd_hunt)

    p = sub.add_parser("catalog", help="list the named codes")
    common(p)
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SeymourError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
