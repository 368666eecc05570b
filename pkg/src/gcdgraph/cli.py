"""Command-line front end.

Exit codes: 0 = success and all embedded checks pass, 1 = a check failed,
2 = usage or parse error.  Reports go to stdout, diagnostics to stderr.
"""

import argparse
import csv
import io
import json
import sys

from . import dsl
from .dsl import ParseError, parse_element, parse_ring_spec
from .functional import canonical_functional
from .graph import build_gcd_graph, summary, to_dot
from .oracle import verify_spectrum
from .ramanujan import ramanujan_sum_closed, ramanujan_sum_direct
from .rings import RingError, euler_phi, local_decomposition, moebius
from .spectrum import full_spectrum


def _emit_json(data):
    json.dump(data, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _emit_csv(rows, header):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _load_graph(args):
    ring = parse_ring_spec(args.ring, max_cardinality=args.max_card)
    gens = [parse_element(ring, part.strip())
            for part in args.gens.split(";") if part.strip()]
    return ring, build_gcd_graph(ring, gens)


def cmd_info(args):
    ring = parse_ring_spec(args.ring, max_cardinality=args.max_card)
    factors = local_decomposition(ring)
    _emit_json({
        "ring": dsl.format_ring(ring),
        "cardinality": ring.cardinality,
        "characteristic": ring.characteristic,
        "phi": euler_phi(ring),
        "mu": moebius(ring),
        "idempotents": [e.serialize() for e in ring.idempotents],
        "local_factors": [
            {"size": f.cardinality,
             "residue_field_size": f.residue_field_size,
             "maximal_ideal_size": len(f.maximal_ideal)}
            for f in factors],
    })
    return 0


def cmd_graph(args):
    ring, graph = _load_graph(args)
    data = summary(graph)
    data["ring"] = dsl.format_ring(ring)
    _emit_json(data)
    return 0


def cmd_spectrum(args):
    ring, graph = _load_graph(args)
    report = full_spectrum(graph)
    if not report.check_trace_identities():
        print("trace identity check failed", file=sys.stderr)
        return 1
    if args.format == "csv":
        _emit_csv([(e.serialize(), lam) for e, lam in report.entries],
                  ["g", "lambda"])
    else:
        data = report.to_dict()
        data["ring"] = dsl.format_ring(ring)
        _emit_json(data)
    return 0


def cmd_verify(args):
    ring, graph = _load_graph(args)
    report = verify_spectrum(graph)
    data = report.to_dict()
    data["ring"] = dsl.format_ring(ring)
    _emit_json(data)
    return 0 if report.passed else 1


def cmd_ramanujan(args):
    ring = parse_ring_spec(args.ring, max_cardinality=args.max_card)
    psi = canonical_functional(ring) if args.psi == "canonical" else None
    rows = []
    failed = False
    for g in ring.elements:
        closed = ramanujan_sum_closed(ring, g)
        row = [g.serialize(), closed]
        if psi is not None:
            direct = ramanujan_sum_direct(ring, psi, g)
            agree = direct == closed
            failed = failed or not agree
            row.append(agree)
        rows.append(row)
    header = ["g", "c"] + (["direct_agrees"] if psi is not None else [])
    if args.format == "csv":
        _emit_csv(rows, header)
    else:
        _emit_json({"ring": dsl.format_ring(ring),
                    "table": [dict(zip(header, row)) for row in rows]})
    return 1 if failed else 0


def cmd_export_dot(args):
    _, graph = _load_graph(args)
    with open(args.output, "w") as fh:
        fh.write(to_dot(graph))
        fh.write("\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gcdgraph",
        description="gcd-graphs over finite commutative rings: structure, "
                    "connectivity, diameters, and integer spectra.")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized selections (reserved)")
    parser.add_argument("--max-card", type=int, default=4096,
                        help="ring cardinality cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="ring invariants")
    p.add_argument("ring")
    p.set_defaults(func=cmd_info)

    for name, func, needs_out in [("graph", cmd_graph, False),
                                  ("spectrum", cmd_spectrum, False),
                                  ("verify", cmd_verify, False),
                                  ("export-dot", cmd_export_dot, True)]:
        p = sub.add_parser(name)
        p.add_argument("ring")
        p.add_argument("--gens", required=True,
                       help="semicolon-separated element tuples, e.g. \"(1,1);(x,0)\"")
        if needs_out:
            p.add_argument("-o", "--output", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("ramanujan", help="c(g, R) table")
    p.add_argument("ring")
    p.add_argument("--psi", choices=["canonical"], default=None,
                   help="also evaluate the direct character sum with this functional")
    p.set_defaults(func=cmd_ramanujan)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RingError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
