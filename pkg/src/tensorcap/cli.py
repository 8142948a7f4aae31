"""Command-line front end.

Every run prints one JSON object on stdout (or ``key: value`` lines with
``--format=plain``). Exit codes: 0 success or class member, 1 non-member or
class violation, 2 input/size errors.

Graph inputs are file paths or inline generator specs such as
``gen:rook:3,4`` and ``gen:random_cograph:12:seed=7``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from fractions import Fraction

from .capacity import (
    a_ratio,
    a_star,
    capacity_trichotomy,
    neighborhood_profile,
    tensor_capacity_cograph,
)
from .graph import (
    Graph,
    GraphFormatError,
    categorical_product,
    is_independent,
    is_induced_path,
    read_graph,
    write_graph,
)
from .generators import generate, parse_spec
from .oracle import TooLarge, brute_a, brute_max_independent_set
from .product import alpha_product_cographs, alpha_product_splitgraphs, verify_certificate
from .recognition import NotCograph, NotSplit, build_cotree, split_partition

EXIT_OK = 0
EXIT_NOT_MEMBER = 1
EXIT_ERROR = 2


def _load(source: str, seed: int | None) -> tuple[Graph, str]:
    if source.startswith("gen:"):
        spec = parse_spec(source[4:])
        if seed is not None and spec.family.startswith("random_"):
            spec = replace(spec, seed=seed)
        return generate(spec), "gen:" + str(spec)
    return read_graph(source), source


def _frac(r) -> str:
    return f"{r.numerator}/{r.denominator}"


def _recognize(graphs, args, report):
    (G,) = graphs
    if args.cls == "cograph":
        try:
            T = build_cotree(G)
        except NotCograph as exc:
            assert is_induced_path(G, exc.witness)
            report.update(member=False, witness=list(exc.witness))
            return EXIT_NOT_MEMBER
        report.update(member=True, cotree=str(T))
        return EXIT_OK
    try:
        P = split_partition(G)
    except NotSplit:
        report.update(member=False, witness="NotSplit")
        return EXIT_NOT_MEMBER
    report.update(member=True, S=sorted(P.S), C=sorted(P.C))
    return EXIT_OK


def _alpha_product(graphs, args, report):
    G, H = graphs
    if args.cls == "cograph":
        try:
            res = alpha_product_cographs(build_cotree(G), build_cotree(H))
        except NotCograph as exc:
            report.update(error="input is not a cograph", witness=list(exc.witness))
            return EXIT_NOT_MEMBER
    elif args.cls == "split":
        try:
            res = alpha_product_splitgraphs(G, split_partition(G), H, split_partition(H))
        except NotSplit:
            report.update(error="input is not a splitgraph", witness="NotSplit")
            return EXIT_NOT_MEMBER
    else:
        cert = brute_max_independent_set(categorical_product(G, H))
        res = None
        report.update(alpha=len(cert), certificate=sorted(cert))
    if res is not None:
        report["alpha"] = res.value
        if res.case_tag is not None:
            report["case_tag"] = res.case_tag
        report["certificate"] = sorted(res.certificate)
    if not verify_certificate(G, H, report["certificate"]):
        raise AssertionError("certificate failed verification")
    return EXIT_OK


def _capacity(graphs, args, report):
    (G,) = graphs
    if args.mode == "trichotomy":
        report["capacity"] = capacity_trichotomy(G).value
        return EXIT_OK
    try:
        T = build_cotree(G)
    except NotCograph as exc:
        report.update(error="input is not a cograph", witness=list(exc.witness))
        return EXIT_NOT_MEMBER
    P = neighborhood_profile(T)
    report.update(
        capacity=str(tensor_capacity_cograph(T)),
        a=_frac(a_ratio(P)),
        argmax_k=P.best_k(),
        profile=list(P.table),
    )
    return EXIT_OK


def _emit_graph(G: Graph, args, report):
    report.update(n=G.n, m=G.num_edges)
    text = write_graph(G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report["out"] = args.out
    else:
        report["graph"] = text
    return EXIT_OK


def _generate(graphs, args, report):
    return _emit_graph(graphs[0], args, report)


def _product(graphs, args, report):
    return _emit_graph(categorical_product(*graphs), args, report)


def _oracle(graphs, args, report):
    (G,) = graphs
    cert = brute_max_independent_set(G)
    assert is_independent(G, cert)
    a, witness = brute_a(G)
    report.update(
        alpha=len(cert),
        certificate=sorted(cert),
        independence_ratio=_frac(Fraction(len(cert), G.n)),
        a=_frac(a),
        a_witness=sorted(witness),
        a_star=str(a_star(a)),
    )
    return EXIT_OK


COMMANDS = {
    "recognize": _recognize,
    "alpha-product": _alpha_product,
    "capacity": _capacity,
    "generate": _generate,
    "product": _product,
    "oracle": _oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the resulting graph to this path")
    common.add_argument("--seed", type=int, help="seed for random gen: inputs")
    common.add_argument("--trials", type=int, default=1, help="repeat with seeds S, S+1, ...")
    common.add_argument("--format", choices=["json", "plain"], default="json")

    parser = argparse.ArgumentParser(prog="tensorcap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="cograph / splitgraph recognition")
    p.add_argument("input")
    p.add_argument("--class", dest="cls", choices=["cograph", "split"], default="cograph")

    p = sub.add_parser("alpha-product", parents=[common], help="independence number of G x H")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--class", dest="cls", choices=["cograph", "split", "oracle"], default="cograph")

    p = sub.add_parser("capacity", parents=[common], help="tensor capacity")
    p.add_argument("input")
    p.add_argument("--mode", choices=["cograph", "trichotomy"], default="cograph")

    p = sub.add_parser("generate", parents=[common], help="write a generated graph")
    p.add_argument("spec")

    p = sub.add_parser("product", parents=[common], help="write the categorical product G x H")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("oracle", parents=[common], help="brute-force alpha and a(G)")
    p.add_argument("input")
    return parser


def _inputs(args) -> list[str]:
    if args.command == "generate":
        spec = args.spec if args.spec.startswith("gen:") else "gen:" + args.spec
        return [spec]
    if args.command in ("alpha-product", "product"):
        return [args.left, args.right]
    return [args.input]


def _run_once(args, seeds) -> tuple[int, dict]:
    handler = COMMANDS[args.command]
    report: dict = {"command": args.command}
    start = time.perf_counter()
    graphs = []
    descriptors = []
    for source, seed in zip(_inputs(args), seeds):
        g, desc = _load(source, seed)
        graphs.append(g)
        descriptors.append(desc)
    report["inputs"] = descriptors
    code = handler(graphs, args, report)
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return code, report


def _print(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report))
        return
    for key, value in report.items():
        if isinstance(value, str) and "\n" in value:
            print(f"{key}:")
            print(value, end="")
        else:
            print(f"{key}: {value}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.trials < 1:
        print("error: --trials must be positive", file=sys.stderr)
        return EXIT_ERROR
    ninputs = len(_inputs(args))
    try:
        if args.trials == 1:
            seeds = [None if args.seed is None else args.seed + j for j in range(ninputs)]
            code, report = _run_once(args, seeds)
        else:
            base = args.seed or 0
            runs = [
                _run_once(args, [base + t * ninputs + j for j in range(ninputs)])
                for t in range(args.trials)
            ]
            code = max(c for c, _ in runs)
            report = {"command": args.command, "trials": [r for _, r in runs]}
    except (GraphFormatError, TooLarge, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _print(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
