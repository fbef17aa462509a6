"""Command-line surface: decision, tracing, enumeration, catalog tools, duality,
and genericity checks, with stable text and JSON output.

Verdicts are data, not exit codes: a NotSolvable decision still exits 0.  Only
malformed input (exit 2) and exceeded resource guards (exit 3) are errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .errors import (
    ChainMismatchError,
    DspkitError,
    GenerationFailedError,
    ObstructionError,
    ResourceLimitError,
)
from .genericity import (
    assignment_from_dict,
    assignment_to_dict,
    generate_generic,
    nongenericity_witness,
    trace_condition,
    witness_to_dict,
)
from .jnf import (
    JnfTuple,
    corresponding_diagonal,
    jnf_from_dict,
    jnf_tuple_from_dict,
)
from .partitions import normalize, parse_partition, parse_parts
from .reduction import decide, trace_to_dict

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _parse_mvs(text: str) -> list[list[int]]:
    segments = [seg for seg in text.split(";") if seg.strip()]
    if not segments:
        raise ValueError("empty tuple")
    return [parse_parts(seg) for seg in segments]


def _tuple_from_args(args) -> JnfTuple:
    sources = [bool(getattr(args, "pmv", None)), bool(getattr(args, "jnf", None))]
    if sum(sources) != 1:
        raise ValueError("provide exactly one of: a multiplicity-vector tuple, --jnf")
    if getattr(args, "pmv", None):
        raw = _parse_mvs(args.pmv)
        mvs = [normalize(parts) for parts in raw]
        for parts, mv in zip(raw, mvs):
            if tuple(p for p in parts if p) != mv.parts:
                print(f"warning: normalized {parts} to {mv}", file=sys.stderr)
        return JnfTuple.from_pmv(mvs)
    return jnf_tuple_from_dict(json.loads(args.jnf))


def _step_names(state) -> list[str]:
    return catalog.identify(state)


def _decide_payload(t: JnfTuple):
    trace = decide(t)
    payload = trace_to_dict(trace)
    payload["defect"] = catalog.defect(t)
    payload["chain"] = [_step_names(s.state) for s in trace.steps]
    return payload, trace


def _render_state(state) -> str:
    return str(state)


def _cmd_decide(args) -> int:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                item = json.loads(line)
                t = (JnfTuple.from_pmv([normalize(p) for p in _parse_mvs(item)])
                     if isinstance(item, str) else jnf_tuple_from_dict(item))
                _emit_json(_decide_payload(t)[0])
        return EXIT_OK
    t = _tuple_from_args(args)
    payload, trace = _decide_payload(t)
    if args.json:
        _emit_json(payload)
        return EXIT_OK
    v = payload["verdict"]
    word = "Solvable" if v["solvable"] else "NotSolvable"
    print(f"verdict: {word} ({v['reason']}) at step {v['at_step']}")
    print(f"defect: {payload['defect']}")
    labels = []
    for names, step in zip(payload["chain"], trace.steps):
        labels.append("=".join(names) if names else _render_state(step.state))
    print("chain: " + " -> ".join(labels))
    return EXIT_OK


def _cmd_trace(args) -> int:
    t = _tuple_from_args(args)
    payload, _ = _decide_payload(t)
    if args.json:
        _emit_json(payload)
        return EXIT_OK
    v = payload["verdict"]
    word = "Solvable" if v["solvable"] else "NotSolvable"
    print(f"verdict: {word} ({v['reason']}) at step {v['at_step']}")
    for i, step in enumerate(payload["steps"]):
        state = step.get("pmv") or json.dumps(step["state"], sort_keys=True)
        names = payload["chain"][i]
        tag = f"  [{'='.join(names)}]" if names else ""
        print(f"step {i}: n={step['n']} {state}{tag}")
        if step["dropped"]:
            print(f"  dropped scalar entries: {step['dropped']}")
        print(f"  alpha slack {step['alpha']['slack']}, "
              f"beta margins {step['beta']['margins']}, "
              f"omega slack {step['omega']['slack']}, n1={step['n1']}")
    return EXIT_OK


def _cmd_defect(args) -> int:
    t = _tuple_from_args(args)
    value = catalog.defect(t)
    if args.json:
        _emit_json({"n": t.n, "defect": value, "rigid": value == 2})
    else:
        print(f"defect: {value} ({'rigid' if value == 2 else 'not rigid'})")
    return EXIT_OK


def _max_n_guard() -> int:
    return int(os.environ.get("DSPKIT_MAX_N", str(catalog.DEFAULT_MAX_ENUM_N)))


def _cmd_enum_rigid(args) -> int:
    constraints = catalog.EnumConstraints(
        n=args.n,
        num_entries=args.entries,
        max_first_part=args.u,
        forbid_all_ones=args.no_all_ones,
        forbid_scalar=args.no_scalar,
        require_defect=args.defect,
    )
    results = catalog.enumerate_rigid(constraints, jobs=args.jobs, max_n=_max_n_guard())
    records = catalog.catalog_lines(results)
    if args.json:
        for record in records:
            _emit_json(record)
    else:
        for record, t in zip(records, results):
            names = ",".join(record["series_names"]) or "-"
            print(f"{t}  defect={record['defect']}  [{names}]")
        print(f"total: {len(records)}")
    return EXIT_OK


def _cmd_series(args) -> int:
    sid = catalog.parse_series_id(args.id)
    t = catalog.series(sid)
    if args.json:
        _emit_json({
            "id": str(sid),
            "n": t.n,
            "entries": [list(e.multiplicity_vector().parts) for e in t.entries],
            "defect": catalog.defect(t),
        })
    else:
        print(t)
    return EXIT_OK


def _cmd_chain(args) -> int:
    sid = catalog.parse_series_id(args.id)
    labels = catalog.verify_chain(sid)
    steps = catalog.expected_chain(sid)
    if args.json:
        _emit_json({"id": str(sid),
                    "chain": labels,
                    "states": [str(s.state) for s in steps]})
    else:
        print(" -> ".join(labels))
    return EXIT_OK


def _cmd_dual(args) -> int:
    if bool(args.partition) == bool(args.jnf):
        raise ValueError("provide exactly one of --partition, --jnf")
    if args.partition:
        from .partitions import dual

        result = dual(parse_partition(args.partition))
    else:
        result = corresponding_diagonal(jnf_from_dict(json.loads(args.jnf)))
    if args.json:
        _emit_json({"parts": list(result.parts)})
    else:
        print(result)
    return EXIT_OK


def _cmd_min_d(args) -> int:
    mv = catalog.min_d_mv(args.n, args.r)
    if args.json:
        _emit_json({"parts": list(mv.parts)})
    else:
        print(mv)
    return EXIT_OK


def _load_assignment(args):
    if bool(args.assignment) == bool(args.file):
        raise ValueError("provide exactly one of: assignment JSON, --file")
    if args.assignment:
        return assignment_from_dict(json.loads(args.assignment))
    with open(args.file, "r", encoding="utf-8") as handle:
        return assignment_from_dict(json.load(handle))


def _cmd_generic_check(args) -> int:
    a = _load_assignment(args)
    witness = nongenericity_witness(a)
    payload = {
        "trace_condition": trace_condition(a),
        "generic": witness is None,
        "witness": None if witness is None else witness_to_dict(witness),
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"trace condition: {payload['trace_condition']}")
        if witness is None:
            print("generic: true")
        else:
            print(f"generic: false (kappa={witness.kappa}, "
                  f"choice={list(map(list, witness.sub_multiplicities))})")
    return EXIT_OK


def _cmd_generic_gen(args) -> int:
    t = _tuple_from_args(args)
    a = generate_generic(t, args.mode, args.seed,
                         product_exponent=args.product_exponent)
    _emit_json(assignment_to_dict(a))
    return EXIT_OK


def _cmd_catalog_verify(args) -> int:
    per_family: dict[str, dict] = {}
    failures = []
    for sid in catalog.all_series_ids(args.max_n):
        t = catalog.series(sid)
        ok = catalog.defect(t) == 2 and decide(t).solvable
        if ok and args.chains:
            try:
                catalog.verify_chain(sid)
            except ChainMismatchError as exc:
                ok = False
                failures.append(str(exc))
        elif not ok:
            failures.append(f"{sid}: defect or verdict check failed")
        stats = per_family.setdefault(sid.name, {"instances": 0, "ok": 0})
        stats["instances"] += 1
        stats["ok"] += int(ok)
    payload = {"families": per_family, "failures": failures,
               "all_ok": not failures}
    if args.json:
        _emit_json(payload)
    else:
        for name in sorted(per_family):
            stats = per_family[name]
            print(f"{name}: {stats['ok']}/{stats['instances']} instances OK")
        print("all OK" if not failures else f"failures: {failures}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dspkit",
        description="Solvability tests, rigid-tuple catalogs, and generic-eigenvalue "
                    "tools for tuples of conjugacy-class shapes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tuple_args(p, with_file=False):
        p.add_argument("pmv", nargs="?", default=None,
                       help="multiplicity-vector tuple, e.g. \"(2,2,1);(3,2);(4,1)\"")
        p.add_argument("--jnf", default=None,
                       help="JSON tuple {\"n\":..,\"entries\":[{\"eigenvalues\":[[..]]},..]}")
        if with_file:
            p.add_argument("--file", default=None,
                           help="batch mode: JSON lines, each a tuple")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("decide", help="solvability verdict with chain names")
    add_tuple_args(p, with_file=True)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("trace", help="full reduction trace")
    add_tuple_args(p)
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("defect", help="2n^2 minus the dimension sum")
    add_tuple_args(p)
    p.set_defaults(func=_cmd_defect)

    p = sub.add_parser("enum-rigid", help="exhaustive rigid-tuple enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--entries", type=int, required=True)
    p.add_argument("--u", type=int, default=None,
                   help="cap on the largest part of the first vector")
    p.add_argument("--no-all-ones", action="store_true")
    p.add_argument("--no-scalar", action="store_true")
    p.add_argument("--defect", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enum_rigid)

    p = sub.add_parser("series", help="instantiate a named family, e.g. W_2")
    p.add_argument("id")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("chain", help="verify a family's reduction chain")
    p.add_argument("id")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("dual", help="conjugate partition / corresponding diagonal shape")
    p.add_argument("--partition", default=None)
    p.add_argument("--jnf", default=None,
                   help="JSON shape {\"eigenvalues\":[[4,2,2],[5,1]]}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("min-d", help="dimension-minimizing vector at fixed rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_min_d)

    p = sub.add_parser("generic-check", help="trace condition and genericity of an assignment")
    p.add_argument("assignment", nargs="?", default=None)
    p.add_argument("--file", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generic_check)

    p = sub.add_parser("generic-gen", help="generate a certified-generic assignment")
    add_tuple_args(p)
    p.add_argument("--mode", choices=["additive", "multiplicative"], default="additive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--product-exponent", type=int, default=1)
    p.set_defaults(func=_cmd_generic_gen)

    p = sub.add_parser("catalog-verify", help="rigidity and solvability of every catalog instance")
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--chains", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_catalog_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ObstructionError, GenerationFailedError, ChainMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, json.JSONDecodeError, OSError, DspkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
