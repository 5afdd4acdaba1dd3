"""Command-line front end: classes, decompose, richardson, label, verify, tables."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .balacarter import diagram_string, is_extra_class, label, phi1, phi2
from .classes import (
    Char,
    ClassParam,
    EpsilonMap,
    Family,
    GroupSpec,
    canonical_eps,
    enumerate_classes,
    is_valid_class,
)
from .decomp import decompose, render_trace
from .errors import InputError, ResourceLimitError
from .oracle import (
    VerificationReport,
    count_extra_classes,
    run_all,
    verify_minimal_levi,
    verify_proposition,
    verify_psi2_restricted_injective,
    verify_right_inverse,
    verify_surjectivity,
    _group_sweep,
)
from .partitions import Partition, iter_partitions
from .richardson import (
    ParabolicDescriptor,
    enumerate_distinguished_parabolics,
    in_richardson_image,
    parabolic_from_blocks,
    regular_jordan_blocks,
    richardson_jordan_blocks,
)

SCHEMA = "unipotent-atlas/v1"


def _group_from_args(args) -> GroupSpec:
    try:
        family = Family(args.group)
    except ValueError:
        raise InputError(f"unknown group family {args.group!r} (expected gl, sp, so, or o)")
    char = Char.TWO if args.char == "2" else Char.GOOD
    return GroupSpec(family, args.dim, char)


def _resolve_eps(G: GroupSpec, lam: Partition, eps_text: str | None) -> EpsilonMap:
    base = canonical_eps(G, lam).as_dict()
    free = set()
    if G.p2 and G.family is not Family.GL:
        free = {x for x, m in lam.multiplicities().items() if x % 2 == 0 and m % 2 == 0}
    given = EpsilonMap.parse(eps_text).as_dict() if eps_text else {}
    unknown = set(given) - set(base)
    if unknown:
        raise InputError(f"epsilon given for values {sorted(unknown)} that are not parts of {lam}")
    merged = dict(base)
    merged.update(given)
    eps = EpsilonMap.from_dict(merged)
    if not is_valid_class(G, lam, eps):
        raise InputError(f"epsilon {eps} is not admissible for {lam} in {G.describe()}")
    missing = free - set(given)
    if missing and eps_text is None and free:
        # free values default to the canonical 0; make the choice explicit
        print(
            f"note: eps defaulted to 0 on even parts of even multiplicity {sorted(missing)}",
            file=sys.stderr,
        )
    return eps


def _emit_table(rows: list[dict], columns: list[str], fmt: str, payload_key: str, meta: dict) -> None:
    if fmt == "json":
        doc = {"schema": SCHEMA, **meta, payload_key: rows}
        print(json.dumps(doc, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _plain(row.get(k)) for k in columns})
        sys.stdout.write(buf.getvalue())
    else:
        widths = {c: max([len(c)] + [len(_plain(r.get(c))) for r in rows]) for c in columns}
        print("  ".join(c.ljust(widths[c]) for c in columns))
        print("  ".join("-" * widths[c] for c in columns))
        for row in rows:
            print("  ".join(_plain(row.get(c)).ljust(widths[c]) for c in columns))


def _plain(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    return str(value)


def _class_row(C: ClassParam, full: bool) -> dict:
    G = C.group
    row = {
        "lambda": str(C.lam),
        "eps": str(C.eps),
        "split": C.split_tag,
    }
    if G.family is Family.O and (G.p2 and G.dim % 2 == 0 and len(C.lam) % 2 != 0):
        row.update({"extra": None, "label": None, "phi1": None, "phi2": None})
        return row
    inner = C if G.family is not Family.O else ClassParam(
        GroupSpec(Family.SO, G.dim, G.char), C.lam, C.eps
    )
    row["extra"] = is_extra_class(inner)
    row["label"] = label(inner)
    X = phi1(inner)
    P = phi2(inner)
    row["phi1"] = X.describe()
    pieces = []
    if inner.group.family is not Family.GL:
        from .classes import minimal_levi

        _, beta, _ = minimal_levi(inner)
        if beta:
            pieces = [str(p) for p in decompose(beta, inner.group).nonzero_pieces()]
    row["phi2"] = "(" + ")(".join(pieces) + ")" if pieces else "-"
    if full:
        row["phi1_json"] = _phi1_json(X)
        row["phi2_json"] = _phi2_json(P)
    return row


def _phi1_json(X) -> dict:
    return {
        "gl": list(X.gl_parts.parts),
        "factors": [{"dim": m, "full": f} for m, f in X.cl_parts],
    }


def _phi2_json(P) -> dict:
    return {
        "gl": list(P.gl_parts.parts),
        "parabolics": [
            {"group": d.group.describe(), "c": list(d.c), "m0": d.m0} for d in P.parabolics
        ],
    }


def cmd_classes(args) -> int:
    G = _group_from_args(args)
    max_dim = args.max_dim if args.max_dim is not None else 40
    classes = enumerate_classes(G, max_dim=max_dim)
    rows = []
    for C in classes:
        row = _class_row(C, full=args.format == "json")
        if args.extra_only and row.get("extra") is not True:
            continue
        if args.format == "json":
            row = {
                **C.to_json(),
                "extra": row["extra"],
                "label": row["label"],
                "phi1": row.get("phi1_json"),
                "phi2": row.get("phi2_json"),
            }
        rows.append(row)
    meta = {"group": G.describe(), "count": len(rows)}
    _emit_table(rows, ["lambda", "eps", "split", "extra", "label", "phi1", "phi2"], args.format, "classes", meta)
    return 0


def cmd_decompose(args) -> int:
    beta = Partition.parse(args.beta)
    if not beta:
        raise InputError("nothing to decompose: the partition is empty")
    G = GroupSpec(Family(args.group), beta.total, Char.TWO if args.char == "2" else Char.GOOD)
    dec = decompose(beta, G)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "group": G.describe(),
            "beta": list(beta.parts),
            "beta1": list(dec.beta1.parts),
            "beta2": list(dec.beta2.parts),
            "beta3": list(dec.beta3.parts),
            "trace1": list(dec.trace1.bits),
            "trace2": list(dec.trace2.bits),
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(render_trace(dec.trace1, "beta"))
    if dec.trace2.beta:
        print()
        print(render_trace(dec.trace2, "delta"))
    print()
    print(f"beta1 = {dec.beta1}")
    print(f"beta2 = {dec.beta2}")
    print(f"beta3 = {dec.beta3}")
    return 0


def _parse_levi(text: str, G: GroupSpec) -> ParabolicDescriptor:
    """Parse "1^3,2;m0=1" into a descriptor for G."""
    blocks_text, _, m0_text = text.partition(";")
    m0 = 0
    if m0_text:
        key, _, value = m0_text.partition("=")
        if key.strip() != "m0":
            raise InputError(f"expected 'm0=<k>' after ';', got {m0_text!r}")
        m0 = int(value)
    blocks = Partition.parse(blocks_text) if blocks_text.strip() not in ("", "0") else Partition()
    c = [0] * (blocks.parts[0] if blocks else 0)
    for p in blocks.parts:
        c[p - 1] += 1
    return ParabolicDescriptor.make(G, tuple(c), m0)


def cmd_richardson(args) -> int:
    G = _group_from_args(args)
    if args.invert:
        lam = Partition.parse(args.blocks)
        P = parabolic_from_blocks(G, lam)
        doc = {
            "schema": SCHEMA,
            "group": G.describe(),
            "blocks": list(lam.parts),
            "levi": P.levi_name(),
            "c": list(P.c),
            "m0": P.m0,
            "diagram": diagram_string(P),
        }
        if args.format == "json":
            print(json.dumps(doc, indent=2))
        else:
            print(f"levi: {P.levi_name()}")
            print(f"descriptor: {P.describe()}")
            print(f"diagram: {diagram_string(P)}")
        return 0
    if not args.levi:
        raise InputError("provide --levi (forward map) or --invert --blocks")
    P = _parse_levi(args.levi, G)
    lam, eps = richardson_jordan_blocks(P)
    member = in_richardson_image(G, lam)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "group": G.describe(),
            "levi": P.levi_name(),
            "blocks": list(lam.parts),
            "eps": {str(x): v for x, v in eps.items},
            "in_image": member,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"blocks: {lam}")
        print(f"eps: {eps}")
        print(f"in richardson image: {'yes' if member else 'no'}")
    return 0


def cmd_label(args) -> int:
    G = _group_from_args(args)
    lam = Partition.parse(args.blocks)
    eps = _resolve_eps(G, lam, args.eps)
    C = ClassParam(G, lam, eps)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            **C.to_json(),
            "label": label(C),
            "extra": is_extra_class(C),
            "phi1": _phi1_json(phi1(C)),
            "phi2": _phi2_json(phi2(C)),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(label(C))
    return 0


def cmd_verify(args) -> int:
    reports = []
    max_dim = args.max_dim if args.max_dim is not None else 24
    if args.claim == "all":
        surj = args.surjectivity_max_dim if args.surjectivity_max_dim is not None else min(max_dim, 16)
        reports = run_all(max_dim=max_dim, surjectivity_max_dim=surj, beta_bound=args.max_beta)
    elif args.claim == "proposition":
        reports = [verify_proposition(args.max_beta)]
    elif args.claim == "extra-counts":
        for dim, want in ((7, 2), (12, 1), (14, 2), (16, 5)):
            G = GroupSpec(Family.SO, dim, Char.TWO)
            got = count_extra_classes(G)
            reports.append(
                VerificationReport(
                    claim="extra-count",
                    group=G.describe(),
                    bound=dim,
                    outcome="pass" if got == want else "fail",
                    counterexamples=[] if got == want else [f"counted {got}, expected {want}"],
                )
            )
    else:
        for G in _group_sweep(max_dim):
            if args.claim == "psi1-surjective":
                reports.append(verify_surjectivity(G, "psi1"))
            elif args.claim == "psi2-surjective":
                reports.append(verify_surjectivity(G, "psi2"))
            elif args.claim == "psi2-injective-r1":
                reports.append(verify_psi2_restricted_injective(G))
            elif args.claim == "phi1-right-inverse":
                reports.append(verify_right_inverse(G, "phi1"))
            elif args.claim == "phi2-right-inverse":
                reports.append(verify_right_inverse(G, "phi2"))
            elif args.claim == "minimal-levi":
                reports.append(verify_minimal_levi(G))
    for rep in reports:
        print(rep.to_json_line())
    failed = [rep for rep in reports if not rep.passed]
    if failed:
        print(f"{len(failed)} claim(s) failed", file=sys.stderr)
        return 1
    return 0


def _table1_rows(dim: int) -> list[dict]:
    rows = []
    cases = [
        (Family.GL, Char.GOOD, dim, False, "GL"),
        (Family.SP, Char.TWO, dim - dim % 2, False, "Sp, p=2"),
        (Family.SP, Char.GOOD, dim - dim % 2, False, "Sp, p odd"),
        (Family.SO, Char.GOOD, dim | 1, False, "SO odd dim, p odd"),
        (Family.SO, Char.TWO, dim | 1, False, "SO odd dim, p=2"),
        (Family.SO, Char.GOOD, dim - dim % 2, False, "SO even dim, p odd"),
        (Family.SO, Char.TWO, dim - dim % 2, False, "SO even dim, p=2"),
        (Family.O, Char.TWO, dim - dim % 2, True, "O non-identity component, p=2"),
    ]
    for family, char, d, nonid, name in cases:
        if d < 1:
            continue
        G = GroupSpec(family, d, char)
        lam, eps = regular_jordan_blocks(G, nonidentity_component=nonid)
        rows.append({"case": name, "group": G.describe(), "blocks": str(lam), "eps": str(eps)})
    return rows


def cmd_tables(args) -> int:
    if args.which == 1:
        rows = _table1_rows(args.dim or 12)
        _emit_table(rows, ["case", "group", "blocks", "eps"], args.format, "rows",
                    {"table": 1})
        return 0
    if args.which in (2, 3):
        if not args.group or not args.dim:
            raise InputError("tables 2 and 3 need --group and --dim")
        G = _group_from_args(args)
        if args.which == 2:
            rows = []
            for P in enumerate_distinguished_parabolics(G):
                lam, eps = richardson_jordan_blocks(P)
                rows.append({
                    "levi": P.levi_name(),
                    "descriptor": P.describe(),
                    "blocks": str(lam),
                    "eps": str(eps),
                })
            _emit_table(rows, ["levi", "descriptor", "blocks", "eps"], args.format, "rows",
                        {"table": 2, "group": G.describe()})
        else:
            rows = [
                {"blocks": str(Partition(p))}
                for p in iter_partitions(G.dim)
                if in_richardson_image(G, Partition(p))
            ]
            _emit_table(rows, ["blocks"], args.format, "rows", {"table": 3, "group": G.describe()})
        return 0
    # table 4: the five extra classes of SO_16 at p=2
    G = GroupSpec(Family.SO, 16, Char.TWO)
    rows = []
    for C in enumerate_classes(G):
        if C.split_tag == "II" or not is_extra_class(C):
            continue
        from .classes import minimal_levi

        _, beta, _ = minimal_levi(C)
        dec = decompose(beta, G)
        pieces = " + ".join(str(p) for p in dec.nonzero_pieces())
        rows.append({
            "blocks": str(C.lam),
            "decomposition": f"{beta} = {pieces}",
            "label": label(C),
        })
    _emit_table(rows, ["blocks", "decomposition", "label"], args.format, "rows",
                {"table": 4, "group": G.describe()})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unipotent-atlas",
        description="Classify unipotent conjugacy classes of classical groups "
        "(characteristic 2 and odd) via subgroup data.",
    )
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--max-dim", type=int, default=None,
                        help="bound for enumeration-driven commands (classes, verify)")
    # the global flags are accepted after the subcommand too; SUPPRESS keeps
    # a value given up front from being overwritten by the subparser default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--max-dim", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=argparse.ArgumentParser)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("classes", help="list the unipotent classes of a group")
    p.add_argument("--group", required=True, choices=[f.value for f in Family])
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--char", choices=["2", "odd"], default="2")
    p.add_argument("--extra-only", action="store_true")
    p.set_defaults(func=cmd_classes)

    p = add_parser("decompose", help="decompose distinguished Jordan data with the scan map")
    p.add_argument("beta", help='partition text, e.g. "12,12,10,8,6,6,4,2"')
    p.add_argument("--group", choices=["sp", "so"], default="so")
    p.add_argument("--char", choices=["2", "odd"], default="2")
    p.set_defaults(func=cmd_decompose)

    p = add_parser("richardson", help="Richardson blocks of a distinguished parabolic")
    p.add_argument("--group", required=True, choices=["gl", "sp", "so"])
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--char", choices=["2", "odd"], default="2")
    p.add_argument("--levi", help='descriptor text, e.g. "1^3,2;m0=1"')
    p.add_argument("--invert", action="store_true")
    p.add_argument("--blocks", help="partition text for --invert")
    p.set_defaults(func=cmd_richardson)

    p = add_parser("label", help="label a class from its blocks and eps")
    p.add_argument("--group", required=True, choices=["gl", "sp", "so"])
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--char", choices=["2", "odd"], default="2")
    p.add_argument("--blocks", required=True)
    p.add_argument("--eps")
    p.set_defaults(func=cmd_label)

    p = add_parser("verify", help="run the exhaustive verifiers (JSON lines)")
    p.add_argument(
        "--claim",
        default="all",
        choices=[
            "all",
            "psi1-surjective",
            "psi2-surjective",
            "psi2-injective-r1",
            "phi1-right-inverse",
            "phi2-right-inverse",
            "minimal-levi",
            "proposition",
            "extra-counts",
        ],
    )
    p.add_argument("--surjectivity-max-dim", type=int, default=None)
    p.add_argument("--max-beta", type=int, default=30)
    p.set_defaults(func=cmd_verify)

    p = add_parser("tables", help="regenerate a block table")
    p.add_argument("which", type=int, choices=[1, 2, 3, 4])
    p.add_argument("--group", choices=["gl", "sp", "so"])
    p.add_argument("--dim", type=int)
    p.add_argument("--char", choices=["2", "odd"], default="2")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
