"""Command-line front-end.

Commands: validate, invariants, h2, multiplier, cover, zstar, unicentral,
verify, gen, table.  Reports go to standard output as stable ``key = value``
lines; ``--json`` emits the same content as one JSON object.  Exit codes:
0 pass, 1 identity/theorem-check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import algfile
from .algebra import (
    InvalidAlgebraError,
    TriAlgebra,
    check_dim_bounds,
    dimension_bound_table,
    hom_to_field,
)
from .cohomology import h2 as h2_of
from .extensions import cover as build_cover
from .extensions import is_unicentral, stem_center_image_check, z_star
from .fields import QQ, FieldMismatchError, parse_field
from .generators import abelian, cover_abelian, random_extension
from .linalg import Subspace
from .sequences import (
    NotCentralIdealError,
    stallings_check,
    tra_image_check,
    unicentrality_criteria,
    verify_five_term,
    verify_inf_delta,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class _Report:
    """Ordered key/value accumulator with the two output styles."""

    def __init__(self):
        self.items: list[tuple[str, object]] = []

    def add(self, key, value):
        self.items.append((key, value))

    def extend(self, prefix, mapping):
        for key, value in mapping.items():
            self.add(f"{prefix}.{key}", value)

    def print(self, as_json: bool):
        if as_json:
            print(json.dumps(dict(self.items), default=str, indent=2))
        else:
            for key, value in self.items:
                if isinstance(value, bool):
                    value = "true" if value else "false"
                print(f"{key} = {value}")


def _read_algebra(path: str) -> TriAlgebra:
    if path == "-":
        return algfile.parse(sys.stdin.read())
    return algfile.load(path)


def _fail_input(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT_ERROR


def _vector_str(field, v) -> str:
    return ",".join(field.to_str(x) for x in v)


def _parse_z_spec(alg: TriAlgebra, spec: str) -> Subspace:
    """Basis spec: ';'-separated vectors, each either e<i> (1-based basis
    vector) or a comma-separated coordinate list."""
    rows = []
    for token in spec.split(";"):
        token = token.strip()
        if not token:
            continue
        if token.startswith("e"):
            idx = int(token[1:])
            if not (1 <= idx <= alg.dim):
                raise ValueError(f"basis vector {token} out of range for dim {alg.dim}")
            row = [alg.field.zero] * alg.dim
            row[idx - 1] = alg.field.one
            rows.append(row)
        else:
            parts = [p.strip() for p in token.split(",")]
            if len(parts) != alg.dim:
                raise ValueError(f"vector {token!r} must have {alg.dim} coordinates")
            rows.append([alg.field.parse(p) for p in parts])
    return Subspace.from_rows(alg.field, alg.dim, rows)


def cmd_validate(args) -> int:
    alg = _read_algebra(args.path)
    report = alg.axiom_report()
    out = _Report()
    out.add("dim", alg.dim)
    out.add("field", alg.field.name)
    out.add("axioms_ok", report.ok)
    out.add("violation_count", len(report.violations))
    for idx, v in enumerate(report.violations):
        i, j, l = v.triple
        out.add(f"violation[{idx}]", f"axiom {v.axiom} at ({i},{j},{l}) "
                                     f"defect {_vector_str(alg.field, v.defect)}")
    out.print(args.json)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_invariants(args) -> int:
    alg = _read_algebra(args.path)
    alg.require_valid()
    derived = alg.derived().space
    center = alg.center().space
    out = _Report()
    out.add("dim", alg.dim)
    out.add("derived_dim", derived.dim)
    out.add("center_dim", center.dim)
    out.add("derived_cap_center_dim", derived.intersection(center).dim)
    out.add("hom_dim", hom_to_field(alg, 1).dim if alg.dim else 0)
    bounds = check_dim_bounds(alg)
    out.add("derived_bound", bounds.derived_bound)
    out.add("derived_bound_ok", bounds.derived_ok)
    out.print(args.json)
    return EXIT_OK


def cmd_h2(args) -> int:
    alg = _read_algebra(args.path)
    res = h2_of(alg, args.k)
    out = _Report()
    out.add("coeff_dim", args.k)
    out.add("z2_dim", res.z2.dim)
    out.add("b2_dim", res.b2.dim)
    out.add("h2_dim", res.h2_dim)
    if args.k == 1:
        out.add("multiplier_dim", res.h2_dim)
    if args.reps:
        for idx, rep in enumerate(res.h2_reps):
            out.add(f"rep[{idx}]", _vector_str(alg.field, rep.vectorize()))
    out.print(args.json)
    return EXIT_OK


def cmd_cover(args) -> int:
    alg = _read_algebra(args.path)
    result = build_cover(alg)
    ext = result.extension
    document = algfile.emit(ext.total)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(document)
        out = _Report()
        out.add("multiplier_dim", result.multiplier_dim)
        out.add("cover_dim", ext.total.dim)
        out.add("kernel_dim", ext.kernel_dim)
        out.add("stem", ext.is_stem())
        for idx, row in enumerate(ext.kernel.space.basis_rows()):
            out.add(f"kernel.basis[{idx}]", _vector_str(alg.field, row))
        out.add("output", args.output)
        out.print(args.json)
    else:
        sys.stdout.write(document)
    return EXIT_OK


def cmd_zstar(args) -> int:
    alg = _read_algebra(args.path)
    zs = z_star(alg)
    out = _Report()
    out.add("z_star_dim", zs.dim)
    for idx, row in enumerate(zs.space.basis_rows()):
        out.add(f"z_star.basis[{idx}]", _vector_str(alg.field, row))
    out.print(args.json)
    return EXIT_OK


def cmd_unicentral(args) -> int:
    alg = _read_algebra(args.path)
    out = _Report()
    out.add("unicentral", is_unicentral(alg))
    out.print(args.json)
    return EXIT_OK


def _central_ideal_samples(alg: TriAlgebra, seed: int) -> list[tuple[str, Subspace]]:
    """Central ideals for --all-central: zero, each center basis line, up to
    two random central lines, and the full center."""
    center = alg.center().space
    fld = alg.field
    samples = [("zero", Subspace.zero(fld, alg.dim))]
    for idx, row in enumerate(center.basis_rows()):
        samples.append((f"center_line[{idx}]", Subspace.from_rows(fld, alg.dim, [row])))
    rng = random.Random(seed)
    for t in range(2):
        if center.dim < 2:
            break
        acc = [fld.zero] * alg.dim
        nonzero = False
        for row in center.basis_rows():
            c = fld.random_scalar(rng)
            if c:
                nonzero = True
                acc = [fld.add(a, fld.mul(c, x)) for a, x in zip(acc, row)]
        if nonzero:
            samples.append((f"random_line[{t}]", Subspace.from_rows(fld, alg.dim, [acc])))
    if center.dim:
        samples.append(("center", center))
    return samples


def cmd_verify(args) -> int:
    alg = _read_algebra(args.path)
    alg.require_valid()
    if args.z is not None:
        try:
            z = _parse_z_spec(alg, args.z)
        except ValueError as exc:
            return _fail_input(str(exc))
        targets = [("z", z)]
    elif args.all_central:
        targets = _central_ideal_samples(alg, args.seed)
    else:
        return _fail_input("give --z <basis spec> or --all-central")
    out = _Report()
    all_ok = True
    for label, z in targets:
        out.add(f"{label}.dim", z.dim)
        five = verify_five_term(alg, z, 1)
        out.extend(f"{label}.five_term", five.as_dict())
        infdelta = verify_inf_delta(alg, z)
        out.extend(f"{label}.inf_delta", infdelta.as_dict())
        tra_img = tra_image_check(alg, z)
        out.extend(f"{label}.tra_image", tra_img.as_dict())
        criteria = unicentrality_criteria(alg, z)
        out.extend(f"{label}.criteria", criteria.as_dict())
        stallings = stallings_check(alg, z)
        out.extend(f"{label}.stallings", stallings.as_dict())
        ok = five.ok and infdelta.ok and tra_img.ok and criteria.agree and stallings.ok
        out.add(f"{label}.ok", ok)
        all_ok = all_ok and ok
    out.add("ok", all_ok)
    out.print(args.json)
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def cmd_gen(args) -> int:
    if args.kind in ("abelian", "cover-abelian"):
        if args.n is None:
            return _fail_input(f"gen {args.kind} requires -n")
        field = parse_field(args.field)
        alg = abelian(args.n, field) if args.kind == "abelian" else cover_abelian(args.n, field)
    else:  # random-ext
        if args.base is None:
            return _fail_input("gen random-ext requires --base")
        if args.base.startswith("abelian"):
            field = parse_field(args.field)
            base = abelian(int(args.base[len("abelian"):]), field)
        else:
            base = _read_algebra(args.base)
        alg = random_extension(base, args.k, args.seed).total
    document = algfile.emit(alg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)
    return EXIT_OK


def cmd_table(args) -> int:
    out = _Report()
    for cls_name, n, d_bound, k_bound in dimension_bound_table(args.n):
        out.add(f"{cls_name}[{n}]", f"{d_bound},{k_bound}")
    out.print(args.json)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trialg",
        description="Exact structure-constant toolkit for triassociative algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        return p

    p = add("validate", cmd_validate, help="check the defining identities")
    p.add_argument("path", help="algebra file, or - for stdin")

    p = add("invariants", cmd_invariants, help="dimension invariants")
    p.add_argument("path")

    p = add("h2", cmd_h2, help="second cohomology dimensions")
    p.add_argument("path")
    p.add_argument("-k", type=int, default=1, help="coefficient dimension (default 1)")
    p.add_argument("--reps", action="store_true", help="dump class representatives")

    p = add("multiplier", cmd_h2, help="alias of h2 at k = 1")
    p.add_argument("path")
    p.set_defaults(k=1, reps=False)

    p = add("cover", cmd_cover, help="construct a cover")
    p.add_argument("path")
    p.add_argument("-o", "--output", help="write the cover file here and report on stdout")

    p = add("zstar", cmd_zstar, help="stable center Z*")
    p.add_argument("path")

    p = add("unicentral", cmd_unicentral, help="is Z* equal to the center")
    p.add_argument("path")

    p = add("verify", cmd_verify, help="run the sequence/criteria suites for a central ideal")
    p.add_argument("path")
    p.add_argument("--z", help="central ideal basis: 'e2' or '0,1'; ';' separates vectors")
    p.add_argument("--all-central", action="store_true", help="sample central ideals")
    p.add_argument("--seed", type=int, default=0)

    p = add("gen", cmd_gen, help="generate corpus algebras")
    p.add_argument("kind", choices=["abelian", "cover-abelian", "random-ext"])
    p.add_argument("-n", type=int, help="dimension parameter")
    p.add_argument("--field", default="Q", help="Q (default) or Fp:<prime>")
    p.add_argument("--base", help="random-ext base: file path or abelian<N>")
    p.add_argument("-k", type=int, default=1, help="random-ext kernel dimension")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")

    p = add("table", cmd_table, help="dimension-bound table rows")
    p.add_argument("-n", type=int, default=10, help="largest n (default 10)")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (algfile.AlgebraFileError, FieldMismatchError, OSError) as exc:
        return _fail_input(str(exc))
    except NotCentralIdealError as exc:
        return _fail_input(str(exc))
    except InvalidAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except ValueError as exc:
        return _fail_input(str(exc))


if __name__ == "__main__":
    sys.exit(main())
