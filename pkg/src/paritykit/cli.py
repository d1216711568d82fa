"""Command-line interface for batch validation, generation, and checks.

Exit codes: 0 on success (or a passed check), 1 when well-formed input
fails the requested check (report on stdout), 2 for usage errors or
malformed input (message on stderr).  `-` means stdin for inputs and
stdout for outputs.  Output bytes are deterministic for identical
inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cells as cells_mod
from . import fixtures
from .chain import check_complex, extract_structure, from_structure
from .generators import FAMILIES, family
from .morphisms import (
    MorphismError,
    apply_to_cell,
    check_strict_movement,
    compose_morphisms,
    validate_morphism,
)
from .multiset import DimensionMismatchError
from .parity_core import (
    CLASS_ADDITIVE,
    CLASS_PARITY_COMPLEX,
    CLASS_WEAK,
    CycleWitness,
    StructureError,
    ValidationReport,
    validate,
)

REQUIRE_LEVELS = {
    "apc": CLASS_ADDITIVE,
    "wpc": CLASS_WEAK,
    "pc": CLASS_PARITY_COMPLEX,
}

_STRUCTURE_KINDS = (fixtures.KIND_PARITY, fixtures.KIND_ADDITIVE)


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(str(exc))


def _load(path: str, *kinds: str) -> fixtures.Fixture:
    fixture = fixtures.loads(_read_text(path))
    if kinds and fixture.kind not in kinds:
        raise _UsageError(
            f"{path}: fixture kind {fixture.kind!r} not usable here (expected {' or '.join(kinds)})"
        )
    return fixture


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_structured(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _print_report(name: str, report: ValidationReport) -> None:
    if name:
        print(f"name: {name}")
    print(f"classification: {report.classification}")
    for flag, value in report.flags().items():
        print(f"{flag.replace('_', ' ')}: {_flag(value)}")
    for failure in report.failures:
        gens = ", ".join(failure.generators)
        print(f"FAIL {failure.axiom}" + (f" at {gens}" if gens else "") + f": {failure.detail}")
    for axiom in ("weakly_loop_free", "steiner_loop_free", "strongly_loop_free"):
        witness = report.witnesses.get(axiom)
        if isinstance(witness, CycleWitness):
            where = "" if witness.level is None else f" (level {witness.level})"
            print(f"cycle witness for {axiom}{where}: {witness}")
    for note in report.notes:
        print(f"note: {note}")


def _print_cell(table: cells_mod.CellTable) -> None:
    print(f"dim: {table.dim}")
    print(f"neg: {', '.join(str(c) for c in table.neg)}")
    print(f"pos: {', '.join(str(c) for c in table.pos)}")


def _cell_out(args, table: cells_mod.CellTable, name: str) -> None:
    if args.format == "structured":
        sys.stdout.write(fixtures.dumps(table, name=name))
    else:
        _print_cell(table)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    report = validate(fixture.value)
    if args.format == "structured":
        _emit_structured({"name": fixture.name, **report.to_payload()})
    else:
        _print_report(fixture.name, report)
    if args.require is not None:
        return 0 if report.meets(REQUIRE_LEVELS[args.require]) else 1
    return 0


def _cmd_classify(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    report = validate(fixture.value)
    if args.format == "structured":
        _emit_structured({"name": fixture.name, "classification": report.classification})
    else:
        print(report.classification)
    return 0


def _cmd_generate(args) -> int:
    struct = family(args.family, args.n)
    name = f"{args.family}-{args.n}"
    _write_out(fixtures.dumps(struct, name=name), args.output)
    return 0


def _cmd_chain(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    complex_ = from_structure(fixture.value)
    report = check_complex(complex_)
    if args.format == "structured":
        payload = {"name": fixture.name, **report.to_payload()}
        if not args.check:
            payload["boundaries"] = {
                g.name: str(complex_.boundary_of(g))
                for g in complex_.structure.all_generators()
                if g.dim >= 1
            }
        _emit_structured(payload)
    else:
        if not args.check:
            for g in complex_.structure.all_generators():
                if g.dim >= 1:
                    print(f"d({g.name}) = {complex_.boundary_of(g)}")
        print(f"dd zero: {_flag(report.dd_zero)}")
        print(f"normal: {_flag(report.normal)}")
        print(f"unital: {_flag(report.unital)}")
        print(f"augmented: {_flag(report.augmented)}")
        for check, gen, detail in report.failures:
            print(f"FAIL {check}" + (f" at {gen}" if gen else "") + f": {detail}")
    if args.check:
        return 0 if (report.dd_zero and report.normal and report.unital) else 1
    return 0


def _cmd_atom(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    struct = fixture.value
    gen = struct.gen(args.generator)
    table = cells_mod.atom(struct, gen) if gen.dim else cells_mod.cell_zero(struct, gen)
    _cell_out(args, table, name=f"atom-{gen.name}")
    return 0


def _cmd_cells(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    enumerated = cells_mod.enumerate_cells(fixture.value, args.max_dim)
    counts = [0] * (args.max_dim + 1)
    for c in enumerated:
        counts[c.dim] += 1
    if args.count_only:
        if args.format == "structured":
            _emit_structured({"name": fixture.name, "counts": counts})
        else:
            print(" ".join(str(c) for c in counts))
        return 0
    if args.format == "structured":
        _emit_structured(
            {
                "name": fixture.name,
                "counts": counts,
                "cells": [fixtures.cell_payload(c) for c in enumerated],
            }
        )
    else:
        print(" ".join(str(c) for c in counts))
        for c in enumerated:
            print(c)
    return 0


def _cmd_face(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    cell_fixture = _load(args.cell, fixtures.KIND_CELL)
    table = cell_fixture.value
    ok, reason = cells_mod.validate_cell(fixture.value, table)
    if not ok:
        print(f"invalid cell: {reason}")
        return 1
    result = cells_mod.face(table, args.k, args.sign)
    _cell_out(args, result, name=f"{cell_fixture.name}-{args.sign}-{args.k}")
    return 0


def _cmd_compose(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    first = _load(args.cells[0], fixtures.KIND_CELL)
    second = _load(args.cells[1], fixtures.KIND_CELL)
    for label, cf in (("first", first), ("second", second)):
        ok, reason = cells_mod.validate_cell(fixture.value, cf.value)
        if not ok:
            print(f"invalid {label} cell: {reason}")
            return 1
    try:
        result = cells_mod.compose(first.value, second.value, args.k)
    except cells_mod.NotComposableError as exc:
        print(f"not composable: {exc}")
        return 1
    _cell_out(args, result, name=f"{first.name}-o{args.k}-{second.name}")
    return 0


def _cmd_decompose(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    cell_fixture = _load(args.cell, fixtures.KIND_CELL)
    try:
        slices = cells_mod.excision_decompose(fixture.value, cell_fixture.value)
    except ValueError as exc:
        print(f"cannot decompose: {exc}")
        return 1
    if args.format == "structured":
        _emit_structured(
            {
                "name": cell_fixture.name,
                "slices": [fixtures.cell_payload(s) for s in slices],
            }
        )
    else:
        print(f"slices: {len(slices)}")
        for s in slices:
            print(s)
    return 0


def _cmd_roundtrip(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    struct = fixture.value
    recovered = extract_structure(from_structure(struct))
    original = struct.to_additive() if hasattr(struct, "to_additive") else struct
    same = recovered == original
    if args.format == "structured":
        _emit_structured({"name": fixture.name, "isomorphic": same})
    else:
        print(f"roundtrip isomorphic: {_flag(same)}")
    return 0 if same else 1


def _cmd_freeness(args) -> int:
    fixture = _load(args.file, *_STRUCTURE_KINDS)
    struct = fixture.value
    enumerated = cells_mod.enumerate_cells(struct, args.max_dim)
    closure = cells_mod.atom_closure(struct, args.max_dim)
    missing = [c for c in enumerated if c not in closure]
    bad = [c for c in enumerated if c in closure and closure[c].evaluate(struct) != c]
    if args.format == "structured":
        _emit_structured(
            {
                "name": fixture.name,
                "cells": len(enumerated),
                "reached": len(enumerated) - len(missing),
                "witnesses_reevaluate": not bad,
                "missing": [fixtures.cell_payload(c) for c in missing],
            }
        )
    else:
        print(f"cells: {len(enumerated)}")
        print(f"reached from atoms: {len(enumerated) - len(missing)}")
        for c in missing:
            print(f"unreached: {c}")
    return 0 if not missing and not bad else 1


def _cmd_morphism(args) -> int:
    if args.action == "validate":
        fixture = _load(args.morphism, fixtures.KIND_MORPHISM)
        f = fixture.value
        report = validate_morphism(f, args.mode or f.mode)
        strict = None
        if report.valid and (args.mode or f.mode) == "weak_parity":
            strict = check_strict_movement(f)
        if args.format == "structured":
            payload = {"name": fixture.name, **report.to_payload()}
            if strict is not None:
                payload["strict_movement"] = strict
            _emit_structured(payload)
        else:
            print(f"valid: {_flag(report.valid)}")
            print(f"normal: {_flag(report.normal)}")
            if strict is not None:
                print(f"strict movement: {_flag(strict)}")
            for failure in report.failures:
                print(f"FAIL: {failure}")
        return 0 if report.valid else 1
    if args.action == "compose":
        first = _load(args.morphism, fixtures.KIND_MORPHISM)
        second = _load(args.second, fixtures.KIND_MORPHISM)
        try:
            composed = compose_morphisms(first.value, second.value)
        except MorphismError as exc:
            print(f"not composable: {exc}")
            return 1
        _write_out(
            fixtures.dumps(composed, name=f"{first.name}-then-{second.name}"), args.output
        )
        return 0
    if args.action == "apply":
        fixture = _load(args.morphism, fixtures.KIND_MORPHISM)
        cell_fixture = _load(args.cell, fixtures.KIND_CELL)
        try:
            result = apply_to_cell(fixture.value, cell_fixture.value)
        except ValueError as exc:
            print(f"cannot apply: {exc}")
            return 1
        _cell_out(args, result, name=f"{fixture.name}-{cell_fixture.name}")
        return 0
    raise _UsageError(f"unknown morphism action {args.action!r}")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritykit",
        description="Validate, generate, and explore parity complexes at desk scale.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="output style (structured = canonical JSON)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="run every axiom check on a structure fixture")
    p.add_argument("file")
    p.add_argument("--require", choices=sorted(REQUIRE_LEVELS))
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="print the classification only")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("generate", parents=[common], help="emit a standard family fixture")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("chain", parents=[common], help="boundary report and chain-level checks")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="exit 1 unless dd=0, normal, and unital")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("atom", parents=[common], help="the atom cell of a generator")
    p.add_argument("file")
    p.add_argument("generator")
    p.set_defaults(func=_cmd_atom)

    p = sub.add_parser("cells", parents=[common], help="enumerate the cells up to a dimension")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_cells)

    p = sub.add_parser("face", parents=[common], help="source or target face of a cell")
    p.add_argument("file")
    p.add_argument("--cell", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--sign", choices=("source", "target"), required=True)
    p.set_defaults(func=_cmd_face)

    p = sub.add_parser("compose", parents=[common], help="k-composite of two cells")
    p.add_argument("file")
    p.add_argument("--cells", nargs=2, required=True, metavar=("FIRST", "SECOND"))
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("decompose", parents=[common], help="excision decomposition of a cell")
    p.add_argument("file")
    p.add_argument("--cell", required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("morphism", parents=[common], help="validate, compose, or apply morphism fixtures")
    action = p.add_subparsers(dest="action", required=True)
    q = action.add_parser("validate", parents=[common])
    q.add_argument("morphism")
    q.add_argument("--mode", choices=("additive", "weak_parity"))
    q.set_defaults(func=_cmd_morphism)
    q = action.add_parser("compose", parents=[common])
    q.add_argument("morphism")
    q.add_argument("second")
    q.add_argument("-o", "--output", default="-")
    q.set_defaults(func=_cmd_morphism)
    q = action.add_parser("apply", parents=[common])
    q.add_argument("morphism")
    q.add_argument("--cell", required=True)
    q.set_defaults(func=_cmd_morphism)

    p = sub.add_parser("roundtrip", parents=[common], help="structure -> chain complex -> structure")
    p.add_argument("file")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("freeness", parents=[common], help="check atoms generate all cells up to a dimension")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, required=True)
    p.set_defaults(func=_cmd_freeness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        fixtures.FixtureError,
        _UsageError,
        StructureError,
        DimensionMismatchError,
        MorphismError,
        cells_mod.EnumerationCapError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
