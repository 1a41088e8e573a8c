"""Command-line front end.

Subcommands:

* ``exists N D``     decide feasibility of the (order, degree) pair
* ``construct N D``  emit a certified witness graph
* ``verify``         certify a graph (direct) or a connection-set spec (spectral)
* ``lemmas``         run the polynomial-family verification suites
* ``census``         enumerate nut graphs of a family at (N, D)

Exit codes are a stable contract: 0 success / positive verdict, 1 negative
verdict, 2 usage or parse error, 3 search budget exhaustion.

Spec input for ``verify --method spectral|both`` is a one-line JSON object:
either ``{"m": 8, "rotations": [1, 7], "reflections": [0, 1, 4, 6]}`` for a
dihedral Cayley graph or ``{"m": 18, "s0": [...], "s1": [...], "s2": [...]}``
for a general bicirculant, optionally with ``"shift": 0`` or ``1``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructions import (
    InfeasiblePairError,
    SearchExhaustedError,
    census,
    construct,
    feasible_vt,
)
from .exact import integer_kernel_vector
from .graphs import (
    BicirculantSpec,
    DihedralSpec,
    build_bicirculant,
    is_regular,
    parse_graph,
    serialize,
    to_graph6,
)
from .lemmas import (
    FAMILIES,
    FAMILY_TAGS,
    verify_family_bounded,
    verify_finite_case_analysis,
    verify_unique_remainder,
)
from .verify import nullity_shifted, nut_check_direct, nut_check_spectral

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NUTFORGE_JOBS", "1")))
    except ValueError:
        return 1


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _write(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_exists(args) -> int:
    if args.n < 1 or args.d < 0:
        return _usage_error("order must be >= 1 and degree >= 0")
    verdict = feasible_vt(args.n, args.d)
    flag = "true" if verdict.exists else "false"
    print(f"exists: {flag} (case {verdict.case}): {verdict.reason}")
    return EXIT_OK if verdict.exists else EXIT_NEGATIVE


def cmd_construct(args) -> int:
    if args.n < 1 or args.d < 0:
        return _usage_error("order must be >= 1 and degree >= 0")
    try:
        w = construct(args.n, args.d, budget=args.budget)
    except InfeasiblePairError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except SearchExhaustedError as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "jsonl":
        payload = {
            "n": args.n,
            "d": args.d,
            "graph6": to_graph6(w.graph),
            "recipe": w.recipe,
            "nullity": w.certificate.nullity,
            "kernel_vector": [str(x) for x in
                              integer_kernel_vector(w.certificate.kernel_vector)],
        }
        _write(json.dumps(payload), args.output)
        return EXIT_OK
    lines = []
    if args.recipe:
        lines.append(f"# recipe: {w.recipe}")
        lines.append("# certified: nullity 1, kernel vector free of zeros")
    lines.append(serialize(w.graph, args.format))
    _write("\n".join(lines), args.output)
    return EXIT_OK


def _read_input(path: str | None) -> str:
    if path and path != "-":
        with open(path) as fh:
            return fh.read()
    return sys.stdin.read()


def _parse_spec(text: str):
    data = json.loads(text)
    shift = int(data.get("shift", 0))
    if "rotations" in data or "reflections" in data:
        spec = DihedralSpec(int(data["m"]),
                            frozenset(data.get("rotations", [])),
                            frozenset(data.get("reflections", []))).as_bicirculant()
        vertex_transitive = True
    else:
        spec = BicirculantSpec(int(data["m"]),
                               frozenset(data.get("s0", [])),
                               frozenset(data.get("s1", [])),
                               frozenset(data.get("s2", [])))
        vertex_transitive = spec.s0 == spec.s2
    return spec, shift, vertex_transitive


def _looks_like_spec(text: str) -> bool:
    return text.lstrip().startswith("{")


def cmd_verify(args) -> int:
    try:
        text = _read_input(args.input)
    except OSError as exc:
        return _usage_error(str(exc))
    is_spec = args.input_format == "spec" or (
        args.input_format == "auto" and _looks_like_spec(text))
    if args.method == "direct":
        if is_spec:
            return _usage_error("direct verification needs a graph, not a spec")
        try:
            g = parse_graph(text, "auto" if args.input_format == "auto" else args.input_format)
        except (ValueError, IndexError) as exc:
            return _usage_error(f"cannot parse graph: {exc}")
        if args.shift:
            nullity = nullity_shifted(g, args.shift)
            print(f"shifted nullity: {nullity}")
            return EXIT_OK if nullity == 1 else EXIT_NEGATIVE
        cert = nut_check_direct(g)
        if cert.is_nut:
            print("nut: true, nullity: 1")
            return EXIT_OK
        if cert.nullity == 1:
            print("nut: false (kernel vector has zero entry), nullity: 1")
        else:
            print(f"nut: false, nullity: {cert.nullity}")
        return EXIT_NEGATIVE
    # spectral and both need a spec description
    if not is_spec:
        return _usage_error(f"method {args.method} needs a JSON spec input")
    try:
        spec, spec_shift, vertex_transitive = _parse_spec(text)
    except (ValueError, KeyError) as exc:
        return _usage_error(f"cannot parse spec: {exc}")
    shift = args.shift if args.shift is not None else spec_shift
    report = nut_check_spectral(spec, shift)
    singular = ", ".join(f"b={v.b} ({'simple' if v.trace_nonzero_at_root else 'double'})"
                         for v in report.divisor_verdicts if v.det_divisible) or "none"
    label = "nullity" if shift == 0 else "shifted nullity"
    print(f"spectral {label}: {report.total_nullity}; singular divisors: {singular}")
    positive = report.total_nullity == 1
    if args.method == "both":
        g = build_bicirculant(spec)
        nut_line = None
        if shift == 0:
            cert = nut_check_direct(g)
            direct_nullity = cert.nullity
            # the kernel-entry condition is decided by the direct method
            positive = cert.is_nut
            extra = ("" if cert.kernel_has_zero_entry is None or cert.is_nut
                     else " (kernel vector has zero entry)")
            nut_line = f"nut: {str(cert.is_nut).lower()}{extra}"
        else:
            direct_nullity = nullity_shifted(g, shift)
        agree = direct_nullity == report.total_nullity
        print(f"direct {label}: {direct_nullity}; agreement: {str(agree).lower()}")
        if nut_line:
            print(nut_line)
        if not agree:
            return EXIT_NEGATIVE
    elif shift == 0 and vertex_transitive:
        print(f"nut: {'true' if report.simple_zero else 'false'} (vertex-transitive)")
    return EXIT_OK if positive else EXIT_NEGATIVE


def cmd_lemmas(args) -> int:
    tags = list(FAMILY_TAGS) if args.family == "all" else [args.family]
    reports = []
    for tag in tags:
        reports.append(verify_family_bounded(tag, args.t_max))
        threshold = FAMILIES[tag].unique_remainder_threshold
        if args.beta_max >= threshold:
            reports.append(verify_unique_remainder(tag, (threshold, args.beta_max)))
        if args.full_case_analysis:
            reports.append(verify_finite_case_analysis(tag))
    ok = all(r.ok for r in reports)
    if args.format == "jsonl":
        for r in reports:
            print(json.dumps(r.summary()))
    else:
        for r in reports:
            for line in r.text_lines():
                print(line)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_census(args) -> int:
    if args.n < 1 or args.d < 0:
        return _usage_error("order must be >= 1 and degree >= 0")
    try:
        witnesses = census(args.family, args.n, args.d,
                           dedup=not args.no_dedup, jobs=args.jobs,
                           budget=args.budget)
    except SearchExhaustedError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        return _usage_error(str(exc))
    for w in witnesses:
        if args.format == "jsonl":
            print(json.dumps({"graph6": to_graph6(w.graph), "recipe": w.recipe,
                              "order": w.graph.order, "degree": is_regular(w.graph)}))
        else:
            print(to_graph6(w.graph))
    label = "classes" if not args.no_dedup else "witnesses"
    print(f"# {label}: {len(witnesses)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nutforge",
        description="Exact constructions and certification of regular nut graphs "
                    "over cyclic and dihedral groups.")
    from . import __version__

    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exists", help="decide feasibility of an (order, degree) pair")
    p.add_argument("n", type=int, help="graph order")
    p.add_argument("d", type=int, help="vertex degree")
    p.set_defaults(fn=cmd_exists)

    p = sub.add_parser("construct", help="emit a certified nut-graph witness")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--format", choices=["graph6", "adjacency-list", "dot", "jsonl"],
                   default="graph6")
    p.add_argument("--recipe", action=argparse.BooleanOptionalAction, default=True,
                   help="emit the construction recipe as a comment line")
    p.add_argument("--budget", type=int, default=None,
                   help="search candidate cap for the degree-divisible-by-4 regime")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="certify a graph or connection-set spec")
    p.add_argument("--input", default="-", help="input path or - for stdin")
    p.add_argument("--method", choices=["direct", "spectral", "both"],
                   default="direct")
    p.add_argument("--shift", type=int, choices=[0, 1], default=None,
                   help="0 checks eigenvalue 0, 1 checks eigenvalue -1")
    p.add_argument("--input-format", choices=["auto", "graph6", "adjacency-list", "spec"],
                   default="auto")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("lemmas", help="run the polynomial-family verification suites")
    p.add_argument("--family", choices=[*FAMILY_TAGS, "all"], default="all")
    p.add_argument("--t-max", type=int, default=10)
    p.add_argument("--beta-max", type=int, default=300)
    p.add_argument("--full-case-analysis", action="store_true")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.set_defaults(fn=cmd_lemmas)

    p = sub.add_parser("census", help="enumerate nut graphs of a family at (N, D)")
    p.add_argument("--family", choices=["circulant", "dihedral"], required=True)
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--no-dedup", action="store_true",
                   help="skip isomorphism dedup (required above order 20)")
    p.add_argument("--budget", type=int, default=None,
                   help="candidate cap; exceeding it exits with code 3")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker process count (default: NUTFORGE_JOBS or 1)")
    p.add_argument("--format", choices=["graph6", "jsonl"], default="graph6")
    p.set_defaults(fn=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
