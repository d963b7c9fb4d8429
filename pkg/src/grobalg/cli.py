"""Command-line front end: ``grobalg COMMAND FILE [options]``.

Exit status is 0 on success, 1 when the mathematics says no (a point is not
a Groebner basis, an invariant is infinite) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path as FilePath
from typing import Callable, Optional, Sequence

from .coefficients import CoeffVar
from .constructions import enveloping_scheme, opposite_scheme, tensor_scheme
from .invariants import (betti_table, cartan_determinant, cartan_matrix, enumerate_nontips,
                         global_dimension, InfiniteDimensionError, injective_dimension,
                         projective_dimension)
from .schemefile import parse, parse_assignment, SchemeFile, SchemeFileError
from .variety import buchberger_check, QuadraticScheme, specialize, variety_ideal, VarietyIdeal

COMMANDS = ("ideal", "check", "basis", "cartan", "betti", "gldim", "specialize", "op", "tensor")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _namer(variables: Sequence[CoeffVar], rename: Optional[Sequence[str]]) -> Callable[[CoeffVar], str]:
    if not rename:
        return str
    if len(rename) != len(variables):
        raise InputError(f"--rename lists {len(rename)} names for {len(variables)} variables")
    table = dict(zip(variables, rename))
    return lambda v: table.get(v, str(v))


def _dim(d) -> str:
    return "inf" if d == math.inf else str(d)


def _scheme_json(sf: SchemeFile) -> dict:
    return {"vertices": sf.vertices,
            "arrows": [{"name": a, "source": s, "target": t} for a, s, t in sf.arrows],
            "order": sf.order if sf.order is not None else [a for a, _, _ in sf.arrows],
            "tips": [".".join(t) for t in sf.tips]}


def _ideal_lines(ideal: VarietyIdeal, name) -> list[str]:
    return [g.to_text(name) for g in ideal.generators]


def _ideal_json(ideal: VarietyIdeal, name) -> list[dict]:
    return [{"t": str(e.tip), "t2": str(e.tip2), "nhat": str(e.nhat), "poly": g.to_text(name)}
            for g, e in zip(ideal.generators, ideal.origins)]


def _assignments(sf: SchemeFile, scheme: QuadraticScheme, extra: Sequence[str]) -> list:
    try:
        return [(scheme.var(t, n), v)
                for (t, n), v in sf.with_sets([parse_assignment(s) for s in extra]).assignments(scheme)]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(exc.args[0] if exc.args else str(exc)) from None


def _point(sf: SchemeFile, scheme: QuadraticScheme, extra: Sequence[str]) -> dict:
    values = {}
    for key, v in _assignments(sf, scheme, extra):
        if key in values:
            raise InputError(f"{key} is assigned twice")
        values[key] = v
    return scheme.point(values)


def _render(sf: SchemeFile, variables, name, generators_json, invariants, lines, as_json) -> str:
    if as_json:
        doc = {"scheme": _scheme_json(sf), "variables": [name(v) for v in variables],
               "generators": generators_json}
        if invariants is not None:
            doc["invariants"] = invariants
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return "\n".join(lines)


def run(command: str, sf: SchemeFile, *, json_output: bool = False, sets: Sequence[str] = (),
        rename: Optional[Sequence[str]] = None, jobs: int = 1, max_length: int = 8,
        other: Optional[SchemeFile] = None, envelope: bool = False) -> tuple[int, str]:
    """Execute ``command`` and return ``(exit status, output text)``."""
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}")
    try:
        scheme = sf.scheme()
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc)) from None
    status = EXIT_OK
    variables = scheme.variables
    gens: list = []
    inv: Optional[dict] = None
    lines: list[str] = []

    if command == "ideal":
        name = _namer(variables, rename)
        ideal = variety_ideal(scheme, jobs=jobs)
        gens = _ideal_json(ideal, name)
        lines = _ideal_lines(ideal, name) + [f"variables: {scheme.D}"]

    elif command == "check":
        name = _namer(variables, rename)
        X = _point(sf, scheme, sets)
        res = buchberger_check(scheme, X)
        inv = {"groebner": res.groebner}
        lines = [f"GROEBNER: {'yes' if res else 'no'}"]
        if not res:
            status = EXIT_FAIL
            c = res.certificate
            text = c.element.to_text(scheme.order)
            inv["certificate"] = {"t": str(c.tip), "t2": str(c.tip2), "remainder": text}
            lines.append(f"certificate: overlap {c.tip} / {c.tip2} reduces to {text}")

    elif command == "specialize":
        try:
            sub = specialize(scheme, _assignments(sf, scheme, sets), jobs=jobs)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        variables = sub.free_variables
        name = _namer(variables, rename)
        gens = _ideal_json(sub.ideal, name)
        lines = _ideal_lines(sub.ideal, name) + [f"variables: {len(variables)}"]

    elif command == "basis":
        name = str
        basis = enumerate_nontips(scheme, max_length)
        counts = [len(ps) for ps in basis.by_length]
        inv = {"finite": basis.finite, "by_length": counts, "dimension": basis.total}
        for k, ps in enumerate(basis.by_length):
            lines.append(f"length {k}: " + " ".join(str(p) for p in ps))
        if basis.finite:
            lines.append(f"dimension: {basis.total}")
        else:
            status = EXIT_FAIL
            lines.append(f"dimension: inf (listed up to length {max_length})")

    elif command == "cartan":
        name = str
        try:
            c = cartan_matrix(scheme)
        except InfiniteDimensionError as exc:
            status, lines = EXIT_FAIL, [str(exc)]
            inv = {"cartan": None}
        else:
            det = cartan_determinant(scheme)
            inv = {"vertices": scheme.quiver.vertices, "cartan": c.tolist(), "determinant": det}
            width = max(len(str(x)) for x in c.flat)
            lines = [" ".join(str(x).rjust(width) for x in row) for row in c]
            lines.append(f"determinant: {det}")

    elif command == "betti":
        name = str
        verts = scheme.quiver.vertices
        table = betti_table(scheme, max_length)
        inv = {"vertices": verts, "betti": table.tolist()}
        for i, v in enumerate(verts):
            for j, w in enumerate(verts):
                lines.append(f"{v} {w}: " + " ".join(str(x) for x in table[:, i, j]))

    elif command == "gldim":
        name = str
        verts = scheme.quiver.vertices
        pd = {v: projective_dimension(scheme, v) for v in verts}
        idim = {v: injective_dimension(scheme, v) for v in verts}
        try:
            g = global_dimension(scheme)
        except InfiniteDimensionError as exc:
            status, g = EXIT_FAIL, None
            lines = [str(exc)]
        else:
            lines = [_dim(g)]
        inv = {"gldim": None if g is None else _dim(g),
               "pd": {v: _dim(d) for v, d in pd.items()},
               "id": {v: _dim(d) for v, d in idim.items()}}

    elif command == "op":
        opp = opposite_scheme(scheme)
        variables = opp.variables
        name = _namer(variables, rename)
        ideal = variety_ideal(opp, jobs=jobs)
        gens = _ideal_json(ideal, name)
        arrows = [f"arrow {a.name}: {a.source} -> {a.target}" for a in opp.quiver.arrows]
        lines = (["vertices: " + " ".join(opp.quiver.vertices)] + arrows
                 + ["tips: " + ", ".join(str(t) for t in opp.tips)]
                 + _ideal_lines(ideal, name) + [f"variables: {opp.D}"])
        inv = {"opposite": {"arrows": arrows, "tips": [str(t) for t in opp.tips]}}

    else:  # tensor
        name = str
        if envelope == (other is not None):
            raise InputError("tensor needs exactly one of --with FILE or --envelope")
        X = _point(sf, scheme, sets)
        if envelope:
            tp = enveloping_scheme(scheme, X)
        else:
            try:
                s2 = other.scheme()
            except (KeyError, ValueError) as exc:
                raise InputError(str(exc)) from None
            tp = tensor_scheme(scheme, X, s2, _point(other, s2, ()))
        res = tp.check()
        reduced = tp.is_reduced()
        count = tp.nontip_count()
        inv = {"vertices": len(tp.quiver.vertices), "arrows": len(tp.quiver.arrows),
               "rules": len(tp.rules.tips), "lifted": len(tp.lifted_first) + len(tp.lifted_second),
               "commutativity": len(tp.commutativity), "groebner": res.groebner,
               "reduced": reduced, "dimension": count}
        lines = [f"{k}: {_fmt(v)}" for k, v in inv.items()]
        lines += [f"  {t} -> {tp.rules.rules[t].to_text(tp.order)}" for t in tp.rules.tips]
        if not (res and reduced):
            status = EXIT_FAIL
        variables = ()

    return status, _render(sf, variables, name, gens, inv, lines, json_output)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "inf" if v is None else str(v)


def _read(path: str) -> SchemeFile:
    try:
        text = FilePath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse(text)
    except SchemeFileError as exc:
        raise InputError(f"{path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grobalg",
                                description="Varieties of quadratic Groebner bases over path algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="scheme file")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--set", action="append", default=[], metavar="T->N=Q",
                   help="coordinate value, e.g. 'z.y->y.z=1' (repeatable)")
    p.add_argument("--rename", help="comma-separated names for the variables, in canonical order")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for overlap reduction")
    p.add_argument("--max-length", type=int, default=8,
                   help="length cutoff for infinite bases and Betti degrees shown")
    p.add_argument("--with", dest="other", metavar="FILE2", help="second factor for 'tensor'")
    p.add_argument("--envelope", action="store_true", help="tensor with the opposite algebra")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.jobs < 1:
            raise InputError("--jobs must be positive")
        if args.max_length < 0:
            raise InputError("--max-length must be nonnegative")
        sf = _read(args.file)
        other = _read(args.other) if args.other else None
        rename = [s.strip() for s in args.rename.split(",")] if args.rename else None
        status, out = run(args.command, sf, json_output=args.json, sets=args.set, rename=rename,
                          jobs=args.jobs, max_length=args.max_length, other=other,
                          envelope=args.envelope)
    except (InputError, SchemeFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
