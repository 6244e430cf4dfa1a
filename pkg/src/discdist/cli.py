"""Command-line front end.

Subcommands: `table` (reproduce the published distribution tables),
`type-census` (one factorization type), `verify` (check suites), `surject`
(construct a polynomial with a prescribed discriminant), `counterexample`
(non-uniformity witness partition).  Field elements appear everywhere as
integer encodings in [0, q).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as cz
from . import theory
from .field import FieldSpec, field_from_order
from .partitions import Partition
from .poly import discriminant

ODD_ONLY_CHECKS = {"stickelberger", "balance", "thm11", "lemma44"}
EVEN_ONLY_CHECKS = {"thm12"}
ALL_CHECKS = ODD_ONLY_CHECKS | EVEN_ONLY_CHECKS | {
    "musums",
    "disczero",
    "gauss",
    "vlemma",
    "lemma42",
}


def _add_common(parser):
    parser.add_argument("--q", type=int, required=True, help="field size (prime power)")
    parser.add_argument(
        "--modulus",
        type=str,
        default=None,
        help="override modulus coefficients c0,c1,... for extension fields",
    )
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    parser.add_argument(
        "--cache-dir",
        type=str,
        default=os.environ.get("DISC_CACHE_DIR") or None,
        help="census cache directory (default: $DISC_CACHE_DIR)",
    )
    parser.add_argument(
        "--no-reduction",
        action="store_true",
        help="disable the translation-orbit reduction",
    )
    parser.add_argument("--format", choices=["text", "csv", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discdist",
        description="Exact distributions of discriminants of monic polynomials over F_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="discriminant distribution per degree")
    _add_common(p_table)
    p_table.add_argument("--min-deg", type=int, default=2)
    p_table.add_argument("--max-deg", type=int, default=10)
    p_table.add_argument("--mode", choices=["all", "irr"], default="all")

    p_type = sub.add_parser("type-census", help="census of one factorization type")
    _add_common(p_type)
    p_type.add_argument(
        "--partition", type=str, required=True, help="comma-separated parts, e.g. 3,1"
    )

    p_verify = sub.add_parser("verify", help="run verification checks")
    _add_common(p_verify)
    p_verify.add_argument("--max-deg", type=int, default=5)
    p_verify.add_argument(
        "--checks",
        type=str,
        default="stickelberger,musums,disczero,balance,gauss,vlemma,thm11",
        help="comma-separated subset of " + ",".join(sorted(ALL_CHECKS)),
    )

    p_surj = sub.add_parser("surject", help="construct f with a prescribed discriminant")
    _add_common(p_surj)
    p_surj.add_argument("--deg", type=int, required=True)
    p_surj.add_argument("--disc", type=int, required=True, help="target encoding")

    p_cex = sub.add_parser("counterexample", help="non-uniformity witness partition")
    _add_common(p_cex)
    p_cex.add_argument("--deg", type=int, required=True)

    return parser


def _field(args) -> FieldSpec:
    override = None
    if args.modulus:
        override = [int(t) for t in args.modulus.split(",")]
    return field_from_order(args.q, override)


def _field_banner(spec: FieldSpec) -> str:
    if spec.k == 1:
        return f"field: F_{spec.q}"
    mod = " + ".join(
        ([f"x^{spec.k}"])
        + [
            (f"{c}*x^{i}" if i > 1 else (f"{c}*x" if i == 1 else str(c)))
            for i in range(spec.k - 1, -1, -1)
            for c in [spec.modulus[i]]
            if c
        ]
    )
    return f"field: F_{spec.q} = F_{spec.p}[x]/({mod})  modulus coeffs: " + ",".join(
        map(str, spec.modulus)
    )


def _check_cache_dir(args):
    cache_dir = args.cache_dir
    if not cache_dir:
        return None
    try:
        os.makedirs(cache_dir, exist_ok=True)
        probe = os.path.join(cache_dir, ".write-test")
        with open(probe, "w") as fh:
            fh.write("")
        os.remove(probe)
    except OSError:
        print(f"warning: cache dir {cache_dir!r} not writable; caching disabled",
              file=sys.stderr)
        return None
    return cache_dir


def _render_text_table(spec, tables, marked):
    q = spec.q
    mode = tables[0].mode
    start = 0 if mode.kind == "all" else 1
    headers = [f"{t.degree}{'*' if t.degree in marked else ''}" for t in tables]
    width = max(
        [len(h) for h in headers]
        + [len(str(t.counts[d])) for t in tables for d in range(start, q)]
    ) + 2
    lines = ["Degree |" + "".join(h.rjust(width) for h in headers)]
    lines.append("-" * len(lines[0]))
    for d in range(start, q):
        row = f"{d:6d} |" + "".join(str(t.counts[d]).rjust(width) for t in tables)
        lines.append(row)
    return "\n".join(lines)


def cmd_table(args) -> int:
    spec = _field(args)
    if not 1 <= args.min_deg <= args.max_deg <= 12:
        raise ValueError("need 1 <= min-deg <= max-deg <= 12")
    cache_dir = _check_cache_dir(args)
    mode = cz.ALL_MONIC if args.mode == "all" else cz.IRREDUCIBLE
    tables = [
        cz.census(
            spec,
            m,
            mode,
            reduction=not args.no_reduction,
            workers=args.workers,
            progress=sys.stderr,
            cache_dir=cache_dir,
        )
        for m in range(args.min_deg, args.max_deg + 1)
    ]
    marked = {
        m
        for m in range(max(2, args.min_deg), args.max_deg + 1)
        if theory.gcd_hypothesis(spec, m).applies
    }
    if args.format == "text":
        print(_field_banner(spec))
        print(_render_text_table(spec, tables, marked))
    elif args.format == "csv":
        print(_field_banner(spec), file=sys.stderr)
        sys.stdout.write(cz.render_csv(tables))
    else:
        print(json.dumps([cz.table_to_json_dict(t) for t in tables], sort_keys=True))
    return 0


def cmd_type_census(args) -> int:
    spec = _field(args)
    parts = [int(t) for t in args.partition.split(",")]
    lam = Partition.of(parts)
    if lam.m > 10:
        raise ValueError("partition weight capped at 10")
    table = cz.census(
        spec,
        lam.m,
        cz.by_type(lam),
        reduction=not args.no_reduction,
        workers=args.workers,
        progress=sys.stderr,
    )
    support = sorted(cz.support_set(table))
    expected = theory.type_class_size(spec, lam)
    verdict = cz.is_equally_distributed(table)
    if args.format == "json":
        blob = cz.table_to_json_dict(table)
        blob["support"] = support
        blob["class_size"] = expected
        blob["class_size_matches"] = expected == table.total
        blob["equally_distributed"] = verdict.equal
        print(json.dumps(blob, sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(cz.render_csv([table]))
    else:
        print(_field_banner(spec))
        print(f"type {lam}, degree {lam.m}")
        print(_render_text_table(spec, [table], set()))
        print(f"total: {table.total} (closed-form class size {expected})")
        print(f"support: {support if support else 'empty'}")
        print(f"equally distributed: {'yes' if verdict.equal else 'no'}"
              + (f" ({verdict.reason})" if verdict.reason else ""))
    return 0


def _verify_reports(spec, max_deg, checks, workers):
    reports = []
    spectra = {}
    all_tables = {}

    def spectrum(m):
        if m not in spectra:
            spectra[m] = cz.type_spectrum(spec, m, workers=workers)
        return spectra[m]

    def all_table(m):
        if m not in all_tables:
            all_tables[m] = cz.census(spec, m, cz.ALL_MONIC, workers=workers)
        return all_tables[m]

    degrees = range(2, max_deg + 1)
    for check in checks:
        if check == "stickelberger":
            reports += [cz.verify_stickelberger(spec, m, workers=workers) for m in degrees]
        elif check == "musums":
            reports += [cz.verify_mobius_sums(spec, m, workers=workers) for m in degrees]
        elif check == "disczero":
            for m in degrees:
                got = all_table(m).counts[0]
                want = spec.q ** (m - 1)
                reports.append(
                    cz.VerifyReport("disczero", spec.q, m, got == want,
                                    f"count at disc 0 is {got} (want {want})")
                )
        elif check == "balance":
            reports += [cz.verify_square_balance(all_table(m)) for m in degrees]
        elif check == "gauss":
            for m in degrees:
                got = cz.census(spec, m, cz.IRREDUCIBLE, workers=workers).total
                want = theory.gauss_count(spec, m)
                reports.append(
                    cz.VerifyReport("gauss", spec.q, m, got == want,
                                    f"irreducible census total {got} (want {want})")
                )
        elif check == "vlemma":
            from .field import prime_factors

            for ell in prime_factors(spec.q - 1):
                if ell == 2:
                    continue
                t = 0
                while 2**t * ell <= max_deg:
                    rep = theory.check_count_valuation(spec, ell, t)
                    reports.append(
                        cz.VerifyReport(
                            "vlemma", spec.q, rep.degree, rep.passed,
                            f"v_{ell}(N({rep.degree})={rep.count}) = {rep.lhs} "
                            f"(want {rep.rhs})",
                        )
                    )
                    t += 1
        elif check in ("thm11", "thm12"):
            for m in degrees:
                if not theory.gcd_hypothesis(spec, m).applies:
                    continue
                uniform = cz.is_equally_distributed(all_table(m))
                ok = uniform.equal and all_table(m).counts[0] == spec.q ** (m - 1)
                detail = f"all-monic uniform at q^(m-1)={spec.q**(m-1)}"
                for lam, table in spectrum(m).items():
                    if table.total == 0:
                        continue
                    v = cz.is_equally_distributed(table)
                    if not v.equal:
                        ok = False
                        detail = f"type {lam} not uniform on its class"
                        break
                reports.append(cz.VerifyReport(check, spec.q, m, ok, detail))
        elif check == "lemma44":
            from .field import character_signs

            chi = character_signs(spec)
            for m in degrees:
                ok = True
                detail = "every attained disc matches (-1)^(m-k)"
                for lam, table in spectrum(m).items():
                    sign = -1 if (m - lam.length) % 2 else 1
                    bad = [d for d in cz.support_set(table) if chi[d] != sign]
                    if bad:
                        ok = False
                        detail = f"type {lam} attains disc {bad[0]} off its character class"
                        break
                reports.append(cz.VerifyReport("lemma44", spec.q, m, ok, detail))
        elif check == "lemma42":
            for m in degrees:
                g = theory.gcd_hypothesis(spec, m).g
                bound = (spec.q - 1) // g
                ok = True
                detail = f"every nonempty type attains >= (q-1)/g = {bound} values"
                for lam, table in spectrum(m).items():
                    if table.total == 0:
                        continue
                    if len(cz.support_set(table)) < bound:
                        ok = False
                        detail = f"type {lam} attains only {len(cz.support_set(table))} values"
                        break
                reports.append(cz.VerifyReport("lemma42", spec.q, m, ok, detail))
        else:
            raise ValueError(f"unknown check {check!r}")
    return reports


def cmd_verify(args) -> int:
    spec = _field(args)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - ALL_CHECKS
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    parity_odd = spec.q % 2 == 1
    for c in checks:
        if c in ODD_ONLY_CHECKS and not parity_odd:
            raise ValueError(f"check {c!r} needs odd q")
        if c in EVEN_ONLY_CHECKS and parity_odd:
            raise ValueError(f"check {c!r} needs even q")
    reports = _verify_reports(spec, args.max_deg, checks, args.workers)
    for rep in reports:
        print(rep.line())
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def cmd_surject(args) -> int:
    spec = _field(args)
    result = theory.construct_disc(spec, args.deg, spec.element(args.disc))
    verified = discriminant(result.poly)
    if args.format == "json":
        print(json.dumps({
            "polynomial": result.poly.to_text(),
            "case": result.case,
            "searched": result.searched,
            "discriminant": verified.encoding,
        }, sort_keys=True))
    else:
        print(f"polynomial: {result.poly.to_text()}")
        print(f"case: {result.case}")
        print(f"verified discriminant: {verified.encoding}")
    return 0


def cmd_counterexample(args) -> int:
    spec = _field(args)
    lam = theory.counterexample_partition(spec, args.deg)
    if lam is None:
        print("none")
        return 0
    size = theory.type_class_size(spec, lam)
    from .field import prime_factors

    ell = min(
        e for e in prime_factors(spec.q - 1)
        if e % 2 and (args.deg % e == 0 or (args.deg - 1) % e == 0)
    )
    divisor = (spec.q - 1) // 2 if spec.q % 2 else spec.q - 1
    print(f"partition: {lam}")
    print(f"class size: {size}")
    print(
        f"witness: {ell} does not divide {size}, hence {divisor} does not divide it; "
        f"discriminants of this type cannot be equally distributed"
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": cmd_table,
        "type-census": cmd_type_census,
        "verify": cmd_verify,
        "surject": cmd_surject,
        "counterexample": cmd_counterexample,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
