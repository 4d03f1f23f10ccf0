"""Command-line front end.  JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 input error, 2 internal assertion (landmark
mismatch), 3 resource cap exceeded.  Every randomised command takes an
explicit --seed (default 0); identical inputs and flags reproduce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .cuts import max_colour_cut, min_mono_cut
from .hackbusch import LandmarkMismatchError, hackbusch_verdict, min_exponent_over_permutations
from .models import (
    TnsModel,
    compare_models,
    construct_hard_subset,
    load_model,
    optimalize,
    predict_rank,
)
from .oracle import DEFAULT_PRIME, SizeCapError, estimate_generic_rank
from .trees import parse_tree


class _CliError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 1 for input errors
        raise _CliError(message)


def _load_tree(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(fh.read())


def _parse_subset(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(","))
    except ValueError:
        raise _CliError(f"bad subset {text!r}: expected comma-separated labels") from None


def _sorted_keys(edges: Iterable) -> list[str]:
    return [e.key for e in sorted(edges)]


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        print(" ".join(f"{k}={v}" for k, v in payload.items()))


def _cmd_minmono(args) -> dict:
    tree = _load_tree(args.tree)
    subset = _parse_subset(args.subset)
    mono = min_mono_cut(tree, subset)
    colour = max_colour_cut(tree, subset)
    return {
        "size": mono.size,
        "witness": _sorted_keys(mono.witness),
        "colour_cut_size": colour.size,
    }


def _cmd_predict(args) -> dict:
    model = load_model(args.model)
    pred = predict_rank(model, _parse_subset(args.subset))
    return {"value": pred.value, "exact": pred.exact, "witness": _sorted_keys(pred.witness)}


def _cmd_verify(args) -> dict:
    model = load_model(args.model)
    if args.r is not None:
        model = TnsModel(model.tree, {e: args.r for e in model.tree.edges()}, model.dims)
    subset = _parse_subset(args.subset)
    pred = predict_rank(model, subset)
    oracle = estimate_generic_rank(model, subset, trials=args.trials, seed=args.seed, p=args.prime)
    agree = (oracle == pred.value) if pred.exact else (oracle <= pred.value)
    return {"predicted": pred.value, "exact": pred.exact, "oracle": oracle, "agree": agree}


def _cmd_hackbusch(args) -> dict:
    return hackbusch_verdict(args.n, args.r).to_json_dict()


def _cmd_compare(args) -> dict:
    m1 = load_model(args.model1)
    m2 = load_model(args.model2)
    return compare_models(m1, m2).to_json_dict()


def _cmd_hardset(args) -> dict:
    tree = _load_tree(args.tree)
    subset = construct_hard_subset(tree)
    size = min_mono_cut(tree, subset).size
    return {"subset": sorted(subset), "minmono": size, "rank_bound": args.r**size}


def _cmd_optimalize(args) -> dict:
    return optimalize(load_model(args.model)).to_json_dict()


def _cmd_permscan(args) -> dict:
    tree = _load_tree(args.tree)
    result = min_exponent_over_permutations(tree, mode=args.mode, trials=args.trials, seed=args.seed)
    payload = {"n": tree.n, "mode": args.mode, "k_min": result.k_min, "witness": list(result.witness)}
    if args.mode == "sampled":
        payload["trials"] = args.trials
        payload["seed"] = args.seed
    return payload


def build_parser() -> _Parser:
    parser = _Parser(prog="tncuts", description="Cut invariants and rank oracles for tree tensor-network models")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                       help="emit JSON (default) or a terse key=value line")
        return p

    p = add("minmono", _cmd_minmono, "minimal monochromatic cut and colour cut size")
    p.add_argument("--tree", required=True, help="file with a parenthesised tree expression")
    p.add_argument("--subset", required=True, help="comma-separated leaf labels (may be empty)")

    p = add("predict", _cmd_predict, "predicted flattening rank for a subset")
    p.add_argument("--model", required=True, help="model JSON file")
    p.add_argument("--subset", required=True)

    p = add("verify", _cmd_verify, "compare prediction against the sampling oracle")
    p.add_argument("--model", required=True)
    p.add_argument("--subset", required=True)
    p.add_argument("--r", type=int, default=None, help="override the model with a constant bond r")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=0)

    p = add("hackbusch", _cmd_hackbusch, "bond-growth verdict for the balanced tree on n leaves")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)

    p = add("compare", _cmd_compare, "necessary per-edge condition for model inclusion")
    p.add_argument("model1", help="candidate inner model JSON file")
    p.add_argument("model2", help="candidate outer model JSON file")

    p = add("hardset", _cmd_hardset, "leaf subset forcing cut size >= floor(n/2)")
    p.add_argument("--tree", required=True)
    p.add_argument("--r", type=int, default=2)

    p = add("optimalize", _cmd_optimalize, "shrink the bond function to its optimal form")
    p.add_argument("--model", required=True)

    p = add("permscan", _cmd_permscan, "minimum interval exponent over leaf permutations")
    p.add_argument("--tree", required=True)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.func(args)
    except LandmarkMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.json)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
