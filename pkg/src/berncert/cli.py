"""Command-line driver.

Commands: convert, restrict, elevate, certify, paper.  All output is
deterministic; machine mode (--json) prints one canonical compact JSON
document whose sha256 is the digest recorded in the optional run
manifest.  Errors go to standard error only and nothing is printed to
standard output on a failed run.

Exit codes: 0 success/Certified, 1 Exhausted or report mismatch,
2 unparseable input, 3 requested degree below the polynomial degree,
4 degenerate simplex.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone
from pathlib import Path

from .bernstein import BernsteinForm, DegreeTooLowError, degree_elevate, to_bernstein
from .certify import (
    CertifyConfig,
    Strategy,
    Target,
    certify,
    failing_leaves,
    is_certified,
    walk,
)
from .counterexample import render_report, reproduce_report
from .polynomials import Polynomial, PolynomialParseError, parse_polynomial
from .serialize import (
    canonical_dumps,
    digest,
    form_to_json,
    parse_json_exact,
    simplex_from_json,
    tree_to_json,
)
from .simplices import (
    DegenerateSimplexError,
    Simplex,
    barycentric_system,
    standard_simplex,
)
from .subdivision import restrict_general

__all__ = ["main"]

_STRATEGIES = {
    "bisect": Strategy.EDGE_BISECTION,
    "witness": Strategy.WITNESS_GUIDED_SPLIT,
    "elevate": Strategy.ELEVATION_ONLY,
    "elevate-split": Strategy.ELEVATION_THEN_SPLIT,
}

_TARGETS = {
    "positive": Target.POSITIVE,
    "pos": Target.POSITIVE,
    "nonnegative": Target.NONNEGATIVE,
    "nonneg": Target.NONNEGATIVE,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berncert",
        description=(
            "Exact certificates of polynomial positivity in the simplicial "
            "Bernstein basis."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_degree: bool = True) -> None:
        p.add_argument(
            "polynomial",
            help='polynomial text, e.g. "x1^2 + x2^2 - x1*x2" (variables x1..xn)',
        )
        p.add_argument(
            "--simplex",
            default=None,
            metavar="SPEC",
            help=(
                "stdN for the standard N-simplex, inline JSON vertex list, or "
                "@FILE with JSON; default: standard simplex matching the "
                "polynomial's variables"
            ),
        )
        if with_degree:
            p.add_argument(
                "--degree",
                type=int,
                default=None,
                help="Bernstein degree (default: the polynomial's degree)",
            )
        p.add_argument("--json", action="store_true", help="print canonical JSON")
        p.add_argument(
            "--manifest",
            default=None,
            metavar="PATH",
            help="write a run manifest (command echo, timestamp, result digest)",
        )

    p_convert = sub.add_parser(
        "convert", help="expand a polynomial in the Bernstein basis"
    )
    add_common(p_convert)

    p_restrict = sub.add_parser(
        "restrict", help="re-expand a Bernstein form on a sub-simplex"
    )
    add_common(p_restrict)
    p_restrict.add_argument(
        "--to",
        required=True,
        metavar="SPEC",
        help="target simplex (same formats as --simplex)",
    )

    p_elevate = sub.add_parser("elevate", help="raise the Bernstein degree")
    add_common(p_elevate)
    p_elevate.add_argument(
        "--by", type=int, default=1, help="number of elevation steps (default 1)"
    )

    p_certify = sub.add_parser(
        "certify", help="search for a positivity/nonnegativity certificate"
    )
    add_common(p_certify, with_degree=False)
    p_certify.add_argument(
        "--max-depth", type=int, default=8, help="edge-split budget (default 8)"
    )
    p_certify.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="elevation cap (default: the starting degree)",
    )
    p_certify.add_argument(
        "--strategy",
        choices=sorted(_STRATEGIES),
        default="witness",
        help="refinement strategy (default witness)",
    )
    p_certify.add_argument(
        "--target",
        choices=sorted(_TARGETS),
        default="nonnegative",
        help="certificate target (default nonnegative)",
    )

    p_paper = sub.add_parser(
        "paper",
        help=(
            "re-derive the bundled study's values and flag each row "
            "MATCH/MISMATCH"
        ),
    )
    p_paper.add_argument("--json", action="store_true", help="print canonical JSON")
    p_paper.add_argument(
        "--manifest", default=None, metavar="PATH", help="write a run manifest"
    )

    return parser


def _parse_simplex_spec(spec: str) -> Simplex:
    match = re.fullmatch(r"std(\d+)", spec)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise ValueError("standard simplex dimension must be >= 1")
        return standard_simplex(n)
    if spec.startswith("@"):
        text = Path(spec[1:]).read_text(encoding="utf-8")
    else:
        text = spec
    try:
        obj = parse_json_exact(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"simplex spec is not valid JSON: {exc}") from exc
    return simplex_from_json(obj)


def _load_inputs(args) -> tuple[Polynomial, Simplex]:
    if args.simplex is None:
        p = parse_polynomial(args.polynomial)
        return p, standard_simplex(p.num_vars)
    simplex = _parse_simplex_spec(args.simplex)
    p = parse_polynomial(args.polynomial, num_vars=simplex.dimension)
    return p, simplex


def _root_form(args) -> tuple[Polynomial, BernsteinForm]:
    p, simplex = _load_inputs(args)
    degree = args.degree if getattr(args, "degree", None) is not None else p.degree
    return p, to_bernstein(p, barycentric_system(simplex), degree)


def _render_vertex(vertex) -> str:
    return "(" + ", ".join(str(x) for x in vertex) + ")"


def _render_simplex(simplex: Simplex) -> str:
    return "[" + ", ".join(_render_vertex(v) for v in simplex.vertices) + "]"


def _render_form(form: BernsteinForm) -> str:
    items = form.items_sorted()
    lines = [
        f"degree: {form.degree}",
        f"simplex: {_render_simplex(form.system.simplex)}",
        f"nonzero coefficients: {len(items)}",
    ]
    for index, value in items:
        lines.append(f"  b{index} = {value}")
    return "\n".join(lines)


def _cmd_convert(args) -> tuple[dict, str, int]:
    _, form = _root_form(args)
    return form_to_json(form), _render_form(form), 0


def _cmd_restrict(args) -> tuple[dict, str, int]:
    _, form = _root_form(args)
    sub = _parse_simplex_spec(args.to)
    restricted = restrict_general(form, sub)
    return form_to_json(restricted), _render_form(restricted), 0


def _cmd_elevate(args) -> tuple[dict, str, int]:
    if args.by < 1:
        raise ValueError("--by must be >= 1")
    _, form = _root_form(args)
    elevated = degree_elevate(form, args.by)
    return form_to_json(elevated), _render_form(elevated), 0


def _cmd_certify(args) -> tuple[dict, str, int]:
    p, simplex = _load_inputs(args)
    config = CertifyConfig(
        max_depth=args.max_depth,
        max_degree=args.max_degree,
        strategy=_STRATEGIES[args.strategy],
        target=_TARGETS[args.target],
    )
    tree = certify(p, simplex, config)
    certified = is_certified(tree, config.target)
    frontier = failing_leaves(tree, config.target)
    max_degree = config.max_degree if config.max_degree is not None else p.degree
    payload = {
        "status": "certified" if certified else "exhausted",
        "target": config.target.value,
        "strategy": config.strategy.value,
        "max_depth": config.max_depth,
        "max_degree": max_degree,
        "failing": [
            {
                "path": list(path),
                "negative_indices": [
                    list(index) for index in leaf.status.negative_indices
                ],
            }
            for path, leaf in frontier
        ],
        "tree": tree_to_json(tree),
    }

    nodes = sum(1 for _ in walk(tree))
    leaves = sum(1 for _ in tree.leaves())
    height = max(len(path) for path, _ in walk(tree))
    lines = [
        f"status: {'Certified' if certified else 'Exhausted'}",
        f"target: {config.target.value}",
        f"strategy: {config.strategy.value}",
        f"budget: max-depth {config.max_depth}, max-degree {max_degree}",
        f"tree: {nodes} node(s), {leaves} leaf/leaves, height {height}",
    ]
    if frontier:
        lines.append(f"frontier: {len(frontier)} indeterminate leaf/leaves")
        for path, leaf in frontier[:10]:
            worst = min(
                leaf.status.negative_indices, key=lambda idx: leaf.form.coeffs[idx]
            )
            route = ".".join(str(step) for step in path) or "root"
            lines.append(
                f"  path {route} degree {leaf.form.degree} simplex "
                f"{_render_simplex(leaf.simplex)}: b{worst} = "
                f"{leaf.form.coefficient(worst)} "
                f"({len(leaf.status.negative_indices)} negative)"
            )
        if len(frontier) > 10:
            lines.append(f"  ... and {len(frontier) - 10} more")
    return payload, "\n".join(lines), 0 if certified else 1


def _cmd_paper(args) -> tuple[dict, str, int]:
    report = reproduce_report()
    return report, render_report(report), 0 if report["all_match"] else 1


def _write_manifest(args, payload: dict) -> None:
    echo = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in ("command", "json", "manifest") and value is not None
    }
    manifest = {
        "command": args.command,
        "inputs": echo,
        "digest": digest(payload),
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    Path(args.manifest).write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


_COMMANDS = {
    "convert": _cmd_convert,
    "restrict": _cmd_restrict,
    "elevate": _cmd_elevate,
    "certify": _cmd_certify,
    "paper": _cmd_paper,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, text, code = _COMMANDS[args.command](args)
        if args.manifest is not None:
            _write_manifest(args, payload)
    except PolynomialParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegreeTooLowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DegenerateSimplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        sys.stdout.write(canonical_dumps(payload) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code
