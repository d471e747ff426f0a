"""Command-line front end.

Exit codes: 0 success, 1 mathematical mismatch, 2 invalid input.
JSON output always has sorted keys so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .dvr import comparison_table, parse_blocks, radical_power_check
from .exact_linalg import PrimeField, default_field
from .grading import GradingGroup
from .k0 import (
    CyclicQuiver,
    FiniteLengthInfiniteSimples,
    HereditaryAlgebra,
    SheafOrder,
    classify,
    descriptor_from_json,
    k0_rank,
    verify_tilting,
)
from .p1 import SheafOrderSpec, hom_ext_table
from .wpl import GradedRingSpec, hilbert_wpl, random_points, verify_hilbert_match

OK, MISMATCH, INVALID = 0, 1, 2


class InputError(ValueError):
    pass


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))


def _fail(message: str) -> None:
    print(f"mismatch: {message}", file=sys.stderr)


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None:
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from exc


def _points(text: str | None) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip()) if text else ()


def _field(args) -> PrimeField:
    return PrimeField(args.prime) if args.prime else default_field()


def _spec(args) -> SheafOrderSpec:
    if getattr(args, "spec", None):
        return SheafOrderSpec.from_json(Path(args.spec).read_text())
    return SheafOrderSpec(_ints(args.e), _points(args.points), getattr(args, "n", 0) or 0)


# ---------------------------------------------------------------------------


def cmd_k0(args) -> int:
    _emit(k0_rank(_spec(args)).to_json())
    return OK


def cmd_tilting_table(args) -> int:
    spec = _spec(args)
    table = hom_ext_table(spec)
    drops = [x for d in args.drop for x in d.split(";") if x.strip()]
    if drops:
        table = table.drop(*drops)
    verdict = verify_tilting(table, spec) if args.verify else None
    if args.format == "table":
        sys.stdout.write(table.to_text())
        if verdict is not None:
            print("tilting" if verdict else "not tilting: " + "; ".join(verdict.reasons))
    else:
        payload = {"spec": spec.to_json(), "table": table.to_json()}
        if verdict is not None:
            payload["verdict"] = verdict.to_json()
        _emit(payload)
    if verdict is not None and not verdict:
        _fail(verdict.reasons[0])
        return MISMATCH
    return OK


def cmd_hilbert(args) -> int:
    e = _ints(args.e)
    spec = GradedRingSpec.from_points(e, _points(args.points) or None)
    H = GradingGroup(e)
    rows = sorted(
        ((h.phi, h.canonical, hilbert_wpl(spec, h)) for h in H.canonical_elements(0, args.max_phi)),
    )
    _emit({
        "e": list(e),
        "lambda": [str(x) for x in spec.lambdas],
        "rows": [{"degree": list(c), "phi": f, "dim": d} for f, c, d in rows],
    })
    return OK


def cmd_verify_hilbert(args) -> int:
    e = _ints(args.e)
    field = _field(args)
    runs = [_points(args.points) or None]
    if args.sweep:
        rng = random.Random(args.seed)
        runs += [random_points(len(e), rng) for _ in range(args.sweep)]
    reports = [verify_hilbert_match(e, pts, args.max_phi, args.oracle, field) for pts in runs]
    if args.format == "table":
        for rep in reports:
            print(f"points {', '.join(rep.to_json()['points'])}  lambda {rep.to_json()['lambda']}")
            for r in rep.rows:
                extra = f" {r.dim_oracle:>4}" if r.dim_oracle is not None else ""
                print(f"  {str(r.degree):<20} phi={r.phi:<3} {r.dim_wpl:>4} {r.dim_order:>4}{extra}  {'ok' if r.match else 'MISMATCH'}")
    else:
        _emit({"match": all(r.match for r in reports), "reports": [r.to_json() for r in reports]})
    bad = next((r for r in reports if not r.match), None)
    if bad:
        row = bad.first_mismatch
        _fail(f"degree {list(row.degree)} (phi {row.phi}): wpl {row.dim_wpl}, order {row.dim_order}, oracle {row.dim_oracle}")
        return MISMATCH
    return OK


def cmd_dvr(args) -> int:
    order = parse_blocks(args.blocks)
    if args.N < 2:
        raise InputError("truncation level N must be at least 2")
    payload = {"blocks": list(order.blocks), "N": args.N}
    if order.is_maximal:
        payload.update(message="maximal order, no simples", rows=[], agree=True)
        _emit(payload)
        return OK
    rows = comparison_table(order, args.N, _field(args))
    payload.update(rows=rows, agree=all(r["agree"] for r in rows))
    status = OK
    if args.radical_check:
        check = radical_power_check(order, args.N)
        payload["radical"] = {"verified": check.verified, "exponent": check.exponent,
                              "minimal": check.minimal, "message": check.describe()}
        if not check.verified:
            _fail(check.describe())
            status = MISMATCH
    _emit(payload)
    bad = next((r for r in rows if not r["agree"]), None)
    if bad:
        _fail(f"{bad['source']} -> {bad['target']}: closed {bad['closed']}, oracle {bad['oracle']}")
        status = MISMATCH
    return status


def cmd_classify(args) -> int:
    if args.descriptor:
        text = args.descriptor
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        desc = descriptor_from_json(text)
    elif args.cyclic is not None:
        desc = CyclicQuiver(args.cyclic)
    elif args.algebra is not None:
        desc = HereditaryAlgebra(args.algebra or None)
    elif args.infinite_simples:
        desc = FiniteLengthInfiniteSimples()
    else:
        desc = SheafOrder(SheafOrderSpec(_ints(args.e)), args.genus)
    _emit(classify(desc).to_json())
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hereditary-orders", description=__doc__.splitlines()[0])
    parser.add_argument("--prime", type=int, default=None, help="oracle prime (default: env or 32003)")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_flags(p, with_points=True):
        p.add_argument("--e", default="", help="ramification indices, e.g. 2,3,7")
        if with_points:
            p.add_argument("--points", default="", help="points, e.g. inf,0,1")

    p = sub.add_parser("k0", help="rank of the Grothendieck group")
    spec_flags(p)
    p.add_argument("--spec", help="JSON spec file")
    p.set_defaults(func=cmd_k0)

    p = sub.add_parser("tilting-table", help="Hom/Ext^1 table of the tilting object")
    spec_flags(p)
    p.add_argument("--n", type=int, default=0, help="rank of the ambient matrix algebra")
    p.add_argument("--spec", help="JSON spec file")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--drop", action="append", default=[], help="summand label to remove (repeatable)")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_tilting_table)

    p = sub.add_parser("hilbert", help="Hilbert function of the weighted projective line ring")
    spec_flags(p)
    p.add_argument("--max-phi", type=int, default=12)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("verify-hilbert", help="compare both graded rings degree by degree")
    spec_flags(p)
    p.add_argument("--max-phi", type=int, default=12)
    p.add_argument("--sweep", type=int, default=0, help="extra runs with random points")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="also rank the relation span")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_verify_hilbert)

    p = sub.add_parser("dvr", help="closed forms vs oracle for a block order over k[[s]]")
    p.add_argument("--blocks", required=True, help="block sizes, e.g. 1,1,2")
    p.add_argument("--N", type=int, default=3, help="truncation level")
    p.add_argument("--radical-check", action="store_true")
    p.set_defaults(func=cmd_dvr)

    p = sub.add_parser("classify", help="K_0 and tilting report for a hereditary category")
    p.add_argument("--descriptor", help="JSON descriptor or path to one")
    p.add_argument("--cyclic", type=int, help="cyclically oriented A~_n")
    p.add_argument("--algebra", type=int, nargs="?", const=0, help="hereditary algebra [vertex count]")
    p.add_argument("--infinite-simples", action="store_true")
    p.add_argument("--e", default="", help="sheaf order on a curve with these indices")
    p.add_argument("--genus", type=int, default=0)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_phi", 1) < 1:
        print("error: --max-phi must be at least 1", file=sys.stderr)
        return INVALID
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
