"""Command-line driver: ``bispinor-qc {verify,tables,bispinor,braid}``.

Exit status is 0 when every check passes, 1 when any check fails and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bispinor as bs
from . import qubit as qb
from . import suites, tqc
from .matrix import Mat, is_close, to_numpy, vec_entries
from .scalar import ExactScalar

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # attached to the main parser and every subparser, so flags work on either side
    # of the subcommand; subparsers use SUPPRESS to avoid clobbering earlier values
    p = argparse.ArgumentParser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=_u64, default=default(0), help="seed for random directions (default 0)")
    p.add_argument("--samples", type=_positive, default=default(1000), help="random directions per check (default 1000)")
    p.add_argument("--json", action="store_true", default=default(False), help="JSON output for tables")
    p.add_argument("--exact", action="store_true", default=default(False),
                   help="exact backend for bispinor (canonical frame only)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bispinor-qc",
        description="Exact verification of bispinor, entangling-gate and Majorana braiding identities.",
        parents=[_global_flags(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    shared = [_global_flags(suppress=True)]

    v = sub.add_parser("verify", parents=shared, help="run verification suites; JSON report on stdout")
    v.add_argument("--suite", choices=("all",) + suites.SUITES, default="all")

    t = sub.add_parser("tables", parents=shared, help="eigenvalue and gate-action tables, computed from scratch")
    t.add_argument("--csv", action="store_true", help="emit CSV instead of aligned text")

    b = sub.add_parser("bispinor", parents=shared, help="components and measured quantum numbers of a bispinor")
    b.add_argument("--type", choices=("weyl", "majorana"), required=True)
    b.add_argument("--index", type=int, choices=(1, 2, 3, 4), required=True)
    b.add_argument("--theta", type=float, default=0.0)
    b.add_argument("--phi", type=float, default=0.0)

    r = sub.add_parser(
        "braid",
        parents=shared,
        help="apply a braid word to an occupation state",
        description="Letters are applied left to right: in 'B23,B12' B23 acts first. "
        "A letter may carry '^-1'; --inverse k inverts the k-th letter (1-based).",
    )
    r.add_argument("--word", required=True, help="comma-separated generators, e.g. B23,B12^-1 ('' is the identity)")
    r.add_argument("--init", choices=tqc.OCCUPATIONS, required=True)
    r.add_argument("--inverse", type=int, action="append", default=[], metavar="K")
    return parser


def _scalar_json(a: ExactScalar) -> dict:
    z = complex(a)
    return {"exact": a.to_json(), "text": str(a), "float": [z.real, z.imag]}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- verify ----------------------------------------------------------------


def cmd_verify(args, out, err) -> int:
    report = suites.run(args.suite, seed=args.seed, samples=args.samples)
    print(_dump(report.to_dict()), file=out)
    s = report.summary()
    print(f"suite {args.suite}: {s['passed']}/{s['total']} checks passed", file=err)
    for c in report.failures():
        print(f"  FAIL {c.id}: {c.anchor}", file=err)
    return EXIT_OK if report.passed else EXIT_FAIL


# -- tables ----------------------------------------------------------------


def compute_tables() -> dict:
    t1 = {}
    for i, (e, h, c) in qb.eigenvalue_table().items():
        t1[f"u{i}"] = {"energy": e, "helicity": h, "chirality": c}

    def actions(family):
        out = {}
        for (g, k), hit in qb.gate_action_table(family).items():
            out.setdefault(g, {})[k] = qb.format_bell(*hit) if hit else None
        return out

    return {"weyl_eigenvalues": t1, "r_gates": actions(qb.R_FAMILY), "rhat_gates": actions(qb.RHAT_FAMILY)}


def _rows(tables: dict):
    sign = {1: "+", -1: "-", None: "?"}
    num = {1: "+1", -1: "-1", None: "?"}
    cols = list(tables["weyl_eigenvalues"])
    yield "weyl_eigenvalues", [""] + cols
    for key, fmt in (("energy", sign), ("helicity", num), ("chirality", num)):
        yield "weyl_eigenvalues", [key] + [fmt[tables["weyl_eigenvalues"][c][key]] for c in cols]
    for name in ("r_gates", "rhat_gates"):
        yield name, [""] + [f"|{k}>" for k in qb.TABLE_KETS]
        for g, row in tables[name].items():
            yield name, [g] + [row[k] or "?" for k in qb.TABLE_KETS]


def render_tables_text(tables: dict) -> str:
    lines, current, block = [], None, []

    def flush():
        if block:
            widths = [max(len(r[i]) for r in block) for i in range(len(block[0]))]
            lines.append(current)
            lines.extend("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in block)
            lines.append("")

    for name, row in _rows(tables):
        if name != current:
            flush()
            current, block = name, []
        block.append(row)
    flush()
    return "\n".join(lines).rstrip() + "\n"


def render_tables_csv(tables: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for name, row in _rows(tables):
        w.writerow([name] + row)
    return buf.getvalue()


def cmd_tables(args, out, err) -> int:
    tables = compute_tables()
    if args.json:
        print(_dump(tables), file=out)
    elif args.csv:
        out.write(render_tables_csv(tables))
    else:
        out.write(render_tables_text(tables))
    return EXIT_OK


# -- bispinor --------------------------------------------------------------


def _float_bispinor(kind: str, i: int, d: bs.Direction) -> bs.Bispinor4:
    if kind == "weyl":
        return bs.general_weyl(i, d)
    m = bs.majorana(i, d)
    return bs.Bispinor4(to_numpy(m.components), m.kind, i, m.energy, majorana_sign=m.majorana_sign, direction=d)


def cmd_bispinor(args, out, err, parser) -> int:
    try:
        d = bs.Direction(args.theta, args.phi)
    except ValueError as exc:
        parser.error(str(exc))
    if args.exact:
        if not d.is_canonical:
            parser.error("--exact is only available for theta = 0, phi = 0")
        v = bs.canonical_weyl(args.index) if args.type == "weyl" else bs.majorana(args.index)
    else:
        v = _float_bispinor(args.type, args.index, d)
    comps = v.components
    energy, helicity, chirality = bs.measure_eigenvalues(comps, d)
    cv = bs.charge_conjugate(comps)
    c_sign = next((s for s in (1, -1) if is_close(cv, s * comps)), None)
    payload = {
        "type": args.type,
        "index": args.index,
        "direction": {"theta": d.theta, "phi": d.phi},
        "backend": v.backend,
    }
    if isinstance(comps, Mat):
        payload["components"] = [a.to_json() for a in vec_entries(comps)]
        payload["text"] = [str(a) for a in vec_entries(comps)]
    else:
        payload["components"] = [[z.real, z.imag] for z in map(complex, comps)]
    payload["measured"] = {
        "energy": energy,
        "helicity": helicity,
        "chirality": chirality,
        "charge_conjugation": c_sign,
    }
    print(_dump(payload), file=out)
    return EXIT_OK


# -- braid -----------------------------------------------------------------


def cmd_braid(args, out, err, parser) -> int:
    try:
        word = tqc.BraidWord.parse(args.word, args.inverse)
    except ValueError as exc:
        parser.error(str(exc))
    final = tqc.evaluate_braid(word, tqc.FusionState.basis(args.init))
    phase = tqc.majorana_condition_check(final)
    payload = {
        "word": str(word),
        "init": args.init,
        "amplitudes": {o: _scalar_json(a) for o, a in zip(tqc.OCCUPATIONS, final.amplitudes)},
        "q_parity_expectation": _scalar_json(final.charge_expectation()),
        "parity": final.parity,
        "concurrence": qb.concurrence(final.vector()),
        "majorana_eigenphase": _scalar_json(phase) if phase is not None else None,
    }
    print(_dump(payload), file=out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.command == "verify":
        return cmd_verify(args, out, err)
    if args.command == "tables":
        return cmd_tables(args, out, err)
    try:
        if args.command == "bispinor":
            return cmd_bispinor(args, out, err, parser)
        return cmd_braid(args, out, err, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
