"""Command-line front end for the library.

Each subcommand reads exact integer data, runs one library operation and
prints a deterministic rendering, text by default or JSON with --format
json.  Exit status 0 means the operation succeeded with a positive answer,
1 that the mathematics said no (a checked identity fails, no translation
step exists, a construction is obstructed, a search finds nothing) and 2
that the invocation itself was unusable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .constructions import (
    UnionSpec,
    block_product_table,
    cancellative_semigroups,
    constant_column_semigroups,
    embed,
    idempotent_groupoid,
    left_unitary_groupoid,
    pair_union,
    union_same_step,
    union_shifted_step,
)
from .core import (
    BoundError,
    CayleyTable,
    ConstructionError,
    InvalidInputError,
    KSequence,
    ParseError,
    PreconditionError,
    TranslatableError,
    parse_table,
    serialize,
)
from .properties import (
    LCOND_NAMES,
    PROPERTY_NAMES,
    lcond_check,
    report,
)
from .campaigns import THEOREMS
from .search import SequenceFilter, campaign_ids, catalog, enumerate_sequences, verify
from .structure import decompose, ideals, iso_idempotent, iso_left_unitary, iso_to_cyclic
from .translation import (
    all_rotated_presentations,
    detect,
    dual,
    dual_step,
    table_from_sequence,
)

CONSTRUCT_VARIANTS = (
    "left-unitary",
    "idempotent",
    "cancellative-semigroups",
    "block-product",
    "constant-column",
    "embed",
    "union-same-step",
    "union-shifted-step",
    "pair-union",
)

OK = 0
NEGATIVE = 1
USAGE = 2


def _json_line(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _ints(raw: str, what: str) -> tuple[int, ...]:
    fields = raw.replace(",", " ").split()
    values = []
    for field in fields:
        try:
            values.append(int(field))
        except ValueError:
            raise InvalidInputError(f"{what} must hold integers, got {field!r}") from None
    if not values:
        raise InvalidInputError(f"{what} is empty")
    return tuple(values)


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidInputError(f"{args.command} needs {' and '.join(missing)}")


def _sequence_from_args(args, raw: str | None = None) -> KSequence:
    raw = raw if raw is not None else (args.seq[0] if args.seq else None)
    if raw is None:
        raise InvalidInputError(f"{args.command} needs --seq")
    _require(args, "k")
    values = _ints(raw, "--seq")
    n = args.n if args.n is not None else len(values)
    if n != len(values):
        raise InvalidInputError(f"--n {n} does not match the {len(values)} values in --seq")
    return KSequence(n, args.k, values)


def _table_from_args(args) -> CayleyTable:
    if getattr(args, "table", None):
        if args.table == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.table, encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise InvalidInputError(f"cannot read {args.table}: {exc.strerror}") from None
        return parse_table(text)
    if getattr(args, "seq", None):
        return table_from_sequence(_sequence_from_args(args))
    raise InvalidInputError(f"{args.command} needs --table or --k/--seq")


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _seq_lines(seqs, fmt: str) -> str:
    if fmt == "json":
        if not seqs:
            return _json_line({"count": 0, "seqs": []})
        head = seqs[0]
        return _json_line(
            {"n": head.n, "k": head.k, "count": len(seqs), "seqs": [list(s.seq) for s in seqs]}
        )
    return "".join(serialize(s, "text") for s in seqs)


# -- subcommands -------------------------------------------------------------


def _cmd_build(args) -> int:
    seq = _sequence_from_args(args)
    _emit(args, serialize(table_from_sequence(seq), args.format))
    return OK


def _cmd_detect(args) -> int:
    table = _table_from_args(args)
    steps = sorted(detect(table))
    if args.format == "json":
        _emit(args, _json_line({"n": table.n, "steps": steps}))
    else:
        _emit(args, " ".join(str(s) for s in steps) + "\n" if steps else "none\n")
    return OK if steps else NEGATIVE


def _cmd_check(args) -> int:
    table = _table_from_args(args)
    names = list(args.property) if args.property else None
    verdicts = report(table, names)
    if args.format == "json":
        results = {
            name: {"holds": ok, "witness": w.as_dict() if w else None}
            for name, (ok, w) in verdicts.items()
        }
        _emit(args, _json_line({"n": table.n, "results": results}))
    else:
        lines = []
        for name, (ok, witness) in verdicts.items():
            if ok:
                lines.append(f"{name}: yes\n")
            else:
                at = " ".join(str(e) for e in witness.elements)
                lines.append(
                    f"{name}: no ({witness.tag} at {at}: {witness.lhs} != {witness.rhs})\n"
                )
        _emit(args, "".join(lines))
    return OK if all(ok for ok, _ in verdicts.values()) else NEGATIVE


def _cmd_lcond(args) -> int:
    seq = _sequence_from_args(args)
    names = list(args.property) if args.property else list(LCOND_NAMES)
    verdicts = {name: lcond_check(seq, name) for name in names}
    if args.format == "json":
        _emit(args, _json_line({"n": seq.n, "k": seq.k, "results": verdicts}))
    else:
        _emit(args, "".join(f"{name}: {'yes' if ok else 'no'}\n" for name, ok in verdicts.items()))
    return OK if all(verdicts.values()) else NEGATIVE


def _union_payload(union, fmt: str) -> str:
    spec = union.spec
    if fmt == "json":
        return _json_line(
            {
                "n": spec.n,
                "k": spec.k,
                "t": spec.t,
                "order": union.table.n,
                "step": union.step,
                "copies": [list(c) for c in union.copies()],
                "table": [list(row) for row in union.table.rows],
            }
        )
    lines = [f"order: {union.table.n}\n", f"step: {union.step}\n"]
    for i, members in enumerate(union.copies(), start=1):
        lines.append(f"copy {i}: " + " ".join(str(m) for m in members) + "\n")
    lines.append(serialize(union.table, "text"))
    return "".join(lines)


def _cmd_construct(args) -> int:
    variant = args.variant
    if variant == "left-unitary":
        _require(args, "n", "k")
        _emit(args, serialize(left_unitary_groupoid(args.n, args.k), args.format))
        return OK
    if variant == "idempotent":
        _require(args, "n", "k")
        _emit(args, serialize(idempotent_groupoid(args.n, args.k), args.format))
        return OK
    if variant == "cancellative-semigroups":
        _require(args, "n", "k")
        found = cancellative_semigroups(args.n, args.k)
        _emit(args, _seq_lines(found, args.format))
        return OK if found else NEGATIVE
    if variant == "block-product":
        _require(args, "k")
        _emit(args, serialize(block_product_table(args.k), args.format))
        return OK
    if variant == "constant-column":
        _require(args, "n", "k")
        found = constant_column_semigroups(args.n, args.k)
        _emit(args, _seq_lines(found, args.format))
        return OK if found else NEGATIVE
    if variant == "embed":
        _require(args, "t")
        seq = _sequence_from_args(args)
        table, mapping = embed(seq, args.t)
        if args.format == "json":
            _emit(
                args,
                _json_line(
                    {
                        "n": table.n,
                        "t": args.t,
                        "mapping": [[s, mapping[s]] for s in sorted(mapping)],
                        "table": [list(row) for row in table.rows],
                    }
                ),
            )
        else:
            pairs = " ".join(f"{s}->{mapping[s]}" for s in sorted(mapping))
            _emit(args, f"map: {pairs}\n" + serialize(table, "text"))
        return OK
    if variant in ("union-same-step", "union-shifted-step"):
        _require(args, "n", "k", "t")
        build = union_same_step if variant == "union-same-step" else union_shifted_step
        union = build(UnionSpec(args.n, args.k, args.t))
        _emit(args, _union_payload(union, args.format))
        return OK
    if variant == "pair-union":
        _require(args, "k")
        _emit(args, _union_payload(pair_union(args.k), args.format))
        return OK
    raise InvalidInputError(f"unknown construction {variant!r}")


def _cmd_dual(args) -> int:
    if args.table or args.seq:
        table = _table_from_args(args)
        _emit(args, serialize(dual(table), args.format))
        return OK
    _require(args, "n", "k")
    step = dual_step(args.n, args.k)
    if args.format == "json":
        _emit(
            args,
            _json_line(
                {"n": step.n, "k": step.k, "kstar": step.kstar, "alterable": step.alterable}
            ),
        )
    elif step.kstar is None:
        _emit(args, "kstar: none\n")
    else:
        tail = " (alterable)" if step.alterable else ""
        _emit(args, f"kstar: {step.kstar}{tail}\n")
    return OK if step.kstar is not None else NEGATIVE


def _cmd_rotate(args) -> int:
    seq = _sequence_from_args(args)
    rotations = all_rotated_presentations(seq)
    if args.format == "json":
        _emit(
            args,
            _json_line(
                {
                    "n": seq.n,
                    "k": seq.k,
                    "rotations": [
                        {"ordering": list(o.perm), "seq": list(s.seq)} for o, s in rotations
                    ],
                }
            ),
        )
    else:
        lines = []
        for ordering, rotated in rotations:
            left = " ".join(str(p) for p in ordering.perm)
            right = " ".join(str(v) for v in rotated.seq)
            lines.append(f"{left} | {right}\n")
        _emit(args, "".join(lines))
    return OK


def _cmd_decompose(args) -> int:
    seq = _sequence_from_args(args)
    table = table_from_sequence(seq)
    dec = decompose(table, seq)
    if args.format == "json":
        _emit(
            args,
            _json_line(
                {
                    "n": seq.n,
                    "k": seq.k,
                    "m": dec.m,
                    "t": dec.t,
                    "idempotents": sorted(dec.idempotents),
                    "components": [list(c) for c in dec.components],
                    "generators": list(dec.generators),
                }
            ),
        )
    else:
        lines = [
            f"m: {dec.m}\n",
            f"t: {dec.t}\n",
            "idempotents: " + " ".join(str(e) for e in sorted(dec.idempotents)) + "\n",
        ]
        for comp, gen in zip(dec.components, dec.generators):
            members = " ".join(str(c) for c in comp)
            lines.append(f"component: {members} (generator {gen})\n")
        _emit(args, "".join(lines))
    return OK


def _cmd_idempotents(args) -> int:
    table = _table_from_args(args)
    found = sorted(e for e in range(1, table.n + 1) if table.entry(e, e) == e)
    if args.format == "json":
        _emit(args, _json_line({"n": table.n, "idempotents": found}))
    else:
        _emit(args, " ".join(str(e) for e in found) + "\n" if found else "none\n")
    return OK if found else NEGATIVE


def _mapping_payload(args, n: int, iso) -> int:
    if iso is None:
        if args.format == "json":
            _emit(args, _json_line({"kind": args.kind, "n": n, "mapping": None}))
        else:
            _emit(args, "none\n")
        return NEGATIVE
    if args.format == "json":
        _emit(
            args,
            _json_line(
                {
                    "kind": args.kind,
                    "n": n,
                    "mapping": list(iso.mapping),
                    "verified": iso.verified,
                }
            ),
        )
    else:
        pairs = " ".join(f"{x}->{iso.mapping[x - 1]}" for x in range(1, n + 1))
        _emit(args, f"map: {pairs}\n")
    return OK


def _cmd_iso(args) -> int:
    if args.kind == "cyclic":
        table = _table_from_args(args)
        return _mapping_payload(args, table.n, iso_to_cyclic(table))
    if not args.seq or len(args.seq) != 2:
        raise InvalidInputError(f"iso --kind {args.kind} needs --seq twice, source then target")
    first = _sequence_from_args(args, args.seq[0])
    second = _sequence_from_args(args, args.seq[1])
    builder = iso_idempotent if args.kind == "idempotent" else iso_left_unitary
    return _mapping_payload(args, first.n, builder(first, second))


def _cmd_ideals(args) -> int:
    table = _table_from_args(args)
    found = ideals(table, args.side)
    if args.format == "json":
        _emit(
            args,
            _json_line(
                {
                    "n": table.n,
                    "side": args.side,
                    "ideals": [
                        {"elements": list(i.elements), "semiprime": i.semiprime} for i in found
                    ],
                }
            ),
        )
    else:
        lines = []
        for ideal in found:
            members = " ".join(str(e) for e in ideal.elements)
            tail = " (semiprime)" if ideal.semiprime else ""
            lines.append(f"{members}{tail}\n")
        _emit(args, "".join(lines))
    return OK


def _cmd_enumerate(args) -> int:
    _require(args, "n", "k")
    filt = SequenceFilter(
        permutation_only=args.permutation_only,
        required=tuple(args.require or ()),
        forbidden=tuple(args.forbid or ()),
    )
    found = list(enumerate_sequences(args.n, args.k, filt))
    _emit(args, _seq_lines(found, args.format))
    return OK if found else NEGATIVE


def _cmd_catalog(args) -> int:
    _require(args, "n")
    census = catalog(args.n, args.permutation_only)
    entries = sorted((k, tuple(sorted(flags)), count) for (k, flags), count in census.items())
    if args.format == "json":
        _emit(
            args,
            _json_line(
                {
                    "n": args.n,
                    "entries": [
                        {"k": k, "flags": list(flags), "count": count}
                        for k, flags, count in entries
                    ],
                }
            ),
        )
    else:
        lines = []
        for k, flags, count in entries:
            label = ",".join(flags) if flags else "-"
            lines.append(f"k={k} [{label}] {count}\n")
        _emit(args, "".join(lines))
    return OK


def _cmd_verify(args) -> int:
    names = list(args.theorem)
    if names == ["list"]:
        _emit(args, "".join(f"{cid}: {THEOREMS[cid].summary}\n" for cid in campaign_ids()))
        return OK
    started = time.perf_counter()
    lines = []
    failed = 0
    for name in names:
        rep = verify(name, max_n=args.max_n, jobs=args.jobs)
        for result in rep.results:
            lines.append(_json_line(result.as_dict()))
        lines.append(
            _json_line(
                {
                    "theorem": rep.theorem_id,
                    "instances": rep.instances_checked,
                    "failures": len(rep.failures),
                    "status": "pass" if rep.passed else "fail",
                }
            )
        )
        if not rep.passed:
            failed += 1
    _emit(args, "".join(lines))
    elapsed = time.perf_counter() - started
    print(f"{len(names)} campaign(s), {failed} failing, {elapsed:.1f}s", file=sys.stderr)
    return OK if failed == 0 else NEGATIVE


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translatable",
        description="Exact tools for groupoids whose rows advance by a fixed step.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, table=False):
        p.add_argument("--n", type=int, help="order of the groupoid")
        p.add_argument("--k", type=int, help="translation step")
        p.add_argument(
            "--seq",
            action="append",
            metavar="VALUES",
            help="first row, comma or space separated (repeatable where two rows are needed)",
        )
        if table:
            p.add_argument("--table", metavar="FILE", help="table file, '-' for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        return p

    common(sub.add_parser("build", help="table from a first row and step"))
    common(sub.add_parser("detect", help="every step the table is translatable by"), table=True)
    p = common(sub.add_parser("check", help="test identities on a table"), table=True)
    p.add_argument("--property", action="append", choices=PROPERTY_NAMES, metavar="NAME")
    p = common(sub.add_parser("lcond", help="closed-form identity tests on a first row"))
    p.add_argument("--property", action="append", choices=LCOND_NAMES, metavar="NAME")
    p = common(sub.add_parser("construct", help="build one of the stock families"))
    p.add_argument("variant", choices=CONSTRUCT_VARIANTS)
    p.add_argument("--t", type=int, help="copies to glue, or scale factor for embed")
    common(sub.add_parser("dual", help="transposed table, or the dual step for n and k"), table=True)
    common(sub.add_parser("rotate", help="all rotated presentations of a first row"))
    common(sub.add_parser("decompose", help="split a cancellative semigroup into cyclic groups"))
    common(sub.add_parser("idempotents", help="elements with x*x = x"), table=True)
    p = common(sub.add_parser("iso", help="explicit isomorphism between two presentations"), table=True)
    p.add_argument("--kind", choices=("idempotent", "left-unitary", "cyclic"), required=True)
    p = common(sub.add_parser("ideals", help="principal one-sided ideals"), table=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p = common(sub.add_parser("enumerate", help="first rows passing a property filter"))
    p.add_argument("--permutation-only", action="store_true")
    p.add_argument("--require", action="append", choices=PROPERTY_NAMES, metavar="NAME")
    p.add_argument("--forbid", action="append", choices=PROPERTY_NAMES, metavar="NAME")
    p = common(sub.add_parser("catalog", help="census of property fingerprints at one order"))
    p.add_argument("--permutation-only", action="store_true")
    p = sub.add_parser("verify", help="run an exhaustive verification campaign")
    p.add_argument("--theorem", action="append", required=True, metavar="ID")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE")

    return parser


HANDLERS = {
    "build": _cmd_build,
    "detect": _cmd_detect,
    "check": _cmd_check,
    "lcond": _cmd_lcond,
    "construct": _cmd_construct,
    "dual": _cmd_dual,
    "rotate": _cmd_rotate,
    "decompose": _cmd_decompose,
    "idempotents": _cmd_idempotents,
    "iso": _cmd_iso,
    "ideals": _cmd_ideals,
    "enumerate": _cmd_enumerate,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except ConstructionError as exc:
        print(f"translatable: {exc}", file=sys.stderr)
        return NEGATIVE
    except (ParseError, PreconditionError, BoundError, InvalidInputError) as exc:
        print(f"translatable: {exc}", file=sys.stderr)
        return USAGE
    except TranslatableError as exc:
        print(f"translatable: {exc}", file=sys.stderr)
        return NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
