"""Command-line front end.

A thin client over the library: parse flags, dispatch, render.  Output in
json format is byte-stable for identical inputs (sorted keys, normalized
rationals, no timestamps).  The default format comes from the
ORDERMAPS_FORMAT environment variable; an explicit --format wins.

Exit status: 0 on success, 1 when `verify` or `identity` finds a
counterexample, 2 for invalid flags or parameter errors.
"""

import argparse
import csv
import json
import os
import sys
from itertools import islice

from .counting import count_cell, count_family, count_stratum, verify_identity
from .distributions import conditional_moments, conditional_pmf, image_size_moments, image_size_pmf
from .oracle import enumerate_family
from .ranking import rank, unrank
from .render import (
    distribution_payload,
    dumps,
    fraction_str,
    identity_payload,
    moments_payload,
    report_payload,
    transformation_payload,
)
from .sampling import monte_carlo_report, sample_chunked
from .transform import Family, from_payload
from .verify import run_verification

FORMAT_ENV = "ORDERMAPS_FORMAT"
IDENTITY_GRID_DEFAULT = 12


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _family(args) -> Family:
    return Family(args.family)


def _add_family(parser, required=True):
    parser.add_argument(
        "--family",
        required=required,
        choices=[f.value for f in Family],
        help="transformation family",
    )


def _add_n(parser):
    parser.add_argument("--n", type=int, required=True, help="chain size (>= 1)")


def _add_null_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--include-null", dest="include_null", action="store_const", const=True, default=None,
        help="force the null transformation into the sample space",
    )
    group.add_argument(
        "--exclude-null", dest="include_null", action="store_const", const=False,
        help="force the null transformation out of the sample space",
    )


def _add_format(parser):
    parser.add_argument(
        "--format",
        choices=["text", "json", "csv"],
        default=os.environ.get(FORMAT_ENV, "text"),
        help=f"output format (default from ${FORMAT_ENV}, else text)",
    )


def cmd_count(args) -> int:
    family = _family(args)
    if args.k is not None and args.r is None:
        raise ValueError("--k requires --r")
    if args.k is not None:
        value = count_cell(family, args.n, args.r, args.k)
    elif args.r is not None:
        value = count_stratum(family, args.n, args.r)
    else:
        include = True if args.include_null is None else args.include_null
        value = count_family(family, args.n, include_null=include)
    if args.format == "json":
        payload = {"family": family.value, "n": args.n, "value": value}
        if args.r is not None:
            payload["r"] = args.r
        if args.k is not None:
            payload["k"] = args.k
        if args.r is None and args.include_null is not None:
            payload["include_null"] = args.include_null
        print(dumps(payload))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["family", "n", "r", "k", "value"])
        writer.writerow([family.value, args.n,
                         "" if args.r is None else args.r,
                         "" if args.k is None else args.k,
                         value])
    else:
        print(value)
    return 0


def _pmf_table(args):
    family = _family(args)
    if args.r is not None:
        return conditional_pmf(family, args.n, args.r)
    return image_size_pmf(family, args.n, include_null=args.include_null)


def cmd_pmf(args) -> int:
    table = _pmf_table(args)
    if args.format == "json":
        payload = {"family": args.family, "n": args.n}
        if args.r is not None:
            payload["r"] = args.r
        payload.update(distribution_payload(table, approx=args.approx))
        print(dumps(payload))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["k", "p_num", "p_den", "p_approx"])
        for k, p in table.support:
            writer.writerow([k, p.numerator, p.denominator, format(float(p), ".17g")])
    else:
        print(f"family={args.family} n={args.n} normalizer={table.normalizer}")
        for k, p in table.support:
            line = f"k={k} p={fraction_str(p)}"
            if args.approx:
                line += f" (~{format(float(p), '.17g')})"
            print(line)
    return 0


def cmd_moments(args) -> int:
    family = _family(args)
    if args.r is not None:
        mean, variance = conditional_moments(family, args.n, args.r)
    else:
        mean, variance = image_size_moments(family, args.n, include_null=args.include_null)
    if args.format == "json":
        fields = {"family": args.family, "n": args.n}
        if args.r is not None:
            fields["r"] = args.r
        print(dumps(moments_payload(mean, variance, approx=args.approx, **fields)))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["family", "n", "r",
                         "mean_num", "mean_den", "variance_num", "variance_den"])
        writer.writerow([args.family, args.n, "" if args.r is None else args.r,
                         mean.numerator, mean.denominator,
                         variance.numerator, variance.denominator])
    else:
        print(f"mean={fraction_str(mean)}")
        print(f"variance={fraction_str(variance)}")
        if args.approx:
            print(f"mean~{format(float(mean), '.17g')}")
            print(f"variance~{format(float(variance), '.17g')}")
    return 0


def _emit_transformations(stream, args) -> int:
    if args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["n", "map"])
        for alpha in stream:
            writer.writerow([alpha.n, json.dumps([list(p) for p in alpha.mapping])])
    else:
        # canonical one-JSON-document-per-line form for both text and json
        for alpha in stream:
            print(dumps(transformation_payload(alpha)))
    return 0


def cmd_enumerate(args) -> int:
    stream = enumerate_family(_family(args), args.n)
    if args.count is not None:
        stream = islice(stream, args.count)
    return _emit_transformations(stream, args)


def cmd_sample(args) -> int:
    family = _family(args)
    if args.report:
        report = monte_carlo_report(family, args.n, args.seed, args.count,
                                    include_null=args.include_null)
        print(dumps(report_payload(report)))
        return 0
    stream = sample_chunked(family, args.n, args.seed, args.count,
                            jobs=args.jobs, include_null=args.include_null)
    return _emit_transformations(stream, args)


def cmd_rank(args) -> int:
    family = _family(args)
    documents = args.transformation if args.transformation else (line for line in sys.stdin if line.strip())
    for doc in documents:
        alpha = from_payload(json.loads(doc))
        index = rank(alpha, family)
        if args.format == "json":
            print(dumps({"family": family.value, "index": index, "n": alpha.n}))
        else:
            print(index)
    return 0


def cmd_unrank(args) -> int:
    alpha = unrank(_family(args), args.n, args.index)
    if args.format == "csv":
        return _emit_transformations([alpha], args)
    print(dumps(transformation_payload(alpha)))
    return 0


def cmd_verify(args) -> int:
    family = _family(args)
    results = run_verification(family, args.n, max_brute=args.max_brute)
    failure = next((r for r in results if not r.ok), None)
    if args.format == "json":
        payload = {
            "family": family.value,
            "max_n": args.n,
            "checks": len(results),
            "ok": failure is None,
            "failure": None if failure is None else
                {"name": failure.name, "n": failure.n, "detail": failure.detail},
        }
        print(dumps(payload))
    else:
        by_n: dict[int, int] = {}
        for r in results:
            by_n[r.n] = by_n.get(r.n, 0) + 1
        for n, count in sorted(by_n.items()):
            if failure is not None and n == failure.n:
                print(f"family={family.value} n={n}: MISMATCH {failure.name}: {failure.detail}")
            else:
                print(f"family={family.value} n={n}: {count} checks ok")
    return 0 if failure is None else 1


def _identity_grid(ident: int, bound: int):
    if ident == 1:
        for a in range(bound + 1):
            for b in range(bound + 1):
                for r in range(bound + 1):
                    yield {"a": a, "b": b, "r": r}
    else:
        for n in range(bound + 1):
            for r in range(1, bound + 1):
                yield {"n": n, "r": r}


def cmd_identity(args) -> int:
    idents = [args.ident] if args.ident is not None else [1, 2, 3, 4]
    summaries = []
    for ident in idents:
        checked = 0
        for params in _identity_grid(ident, args.max):
            check = verify_identity(ident, params)
            checked += 1
            if not check.equal:
                if args.format == "json":
                    print(dumps({"ok": False, "counterexample": identity_payload(check)}))
                else:
                    print(f"identity {ident} FAILS at {dict(check.params)}: "
                          f"lhs {check.lhs} != rhs {check.rhs}")
                return 1
        summaries.append({"identity": ident, "checked": checked, "ok": True})
    if args.format == "json":
        print(dumps({"max": args.max, "ok": True, "results": summaries}))
    else:
        for s in summaries:
            print(f"identity {s['identity']}: {s['checked']} cases checked, all equal")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordermaps",
        description="Exact counting, image-size distributions, ranking and "
                    "uniform sampling for order-preserving partial transformations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="family, stratum, or (r,k) cell cardinality")
    _add_family(p)
    _add_n(p)
    p.add_argument("--r", type=int, default=None, help="domain size (stratum count)")
    p.add_argument("--k", type=int, default=None, help="image size (cell count; needs --r)")
    _add_null_flags(p)
    _add_format(p)
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("pmf", help="exact image-size distribution")
    _add_family(p)
    _add_n(p)
    p.add_argument("--r", type=int, default=None, help="condition on domain size r")
    _add_null_flags(p)
    p.add_argument("--approx", action="store_true", help="add decimal approximations")
    _add_format(p)
    p.set_defaults(handler=cmd_pmf)

    p = sub.add_parser("moments", help="exact mean and variance of the image size")
    _add_family(p)
    _add_n(p)
    p.add_argument("--r", type=int, default=None, help="condition on domain size r")
    _add_null_flags(p)
    p.add_argument("--approx", action="store_true", help="add decimal approximations")
    _add_format(p)
    p.set_defaults(handler=cmd_moments)

    p = sub.add_parser("enumerate", help="stream every family member in canonical order")
    _add_family(p)
    _add_n(p)
    p.add_argument("--count", type=int, default=None, help="stop after this many elements")
    _add_format(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("sample", help="seeded exact-uniform draws")
    _add_family(p)
    _add_n(p)
    p.add_argument("--seed", type=int, default=0, help="64-bit generator seed")
    p.add_argument("--count", type=int, default=1, help="number of draws")
    p.add_argument("--jobs", type=int, default=1,
                   help="fan out over seeded worker streams (seed XOR worker index)")
    p.add_argument("--report", action="store_true",
                   help="emit a Monte Carlo report instead of the raw stream")
    _add_null_flags(p)
    _add_format(p)
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("rank", help="canonical index of a transformation")
    _add_family(p)
    p.add_argument("transformation", nargs="*",
                   help='transformation JSON {"n": ..., "map": [[x, y], ...]}; stdin lines if omitted')
    _add_format(p)
    p.set_defaults(handler=cmd_rank)

    p = sub.add_parser("unrank", help="transformation at a canonical index")
    _add_family(p)
    _add_n(p)
    p.add_argument("--index", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=cmd_unrank)

    p = sub.add_parser("verify", help="cross-check closed forms against brute force")
    _add_family(p)
    p.add_argument("--n", type=int, required=True, help="check every chain size up to this")
    p.add_argument("--max-brute", type=int, default=6,
                   help="hard cap on brute-force chain size (default 6)")
    _add_format(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("identity", help="check the convolution identities on a grid")
    p.add_argument("--id", dest="ident", type=int, choices=[1, 2, 3, 4], default=None,
                   help="identity to check (default: all four)")
    p.add_argument("--max", type=int, default=IDENTITY_GRID_DEFAULT,
                   help="grid bound for every parameter")
    _add_format(p)
    p.set_defaults(handler=cmd_identity)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
