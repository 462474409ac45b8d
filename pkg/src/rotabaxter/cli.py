"""Command line front end.

Exit codes: 0 success, 1 an axiom or cocycle check failed (a violation report
is printed), 2 unreadable or ill-shaped input, 3 the cochain budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .cochains import DEFAULT_BUDGET, BudgetExceeded
from .cohomology import (
    Cochain,
    cohomology_dims,
    derivation_basis,
    les_report,
    rb_cohomology_dims,
    rb_derivation_basis,
    rb_scheme,
    scheme,
    xi_commutes,
)
from .extensions import (
    AbelianExtension,
    AbelianExtensionRB,
    CocycleError,
    SectionError,
    canonical_section,
    canonical_section_rb,
    check_extension,
    check_extension_rb,
    cocycle_from_extension,
    cocycle_from_extension_rb,
    extension_from_cocycle,
    extension_from_cocycle_rb,
    induced_coeff_rep_from_extension,
    induced_rep_from_extension_rb,
)
from .lie import check_jacobi, check_representation
from .lie2 import check_skeletal_rb2, check_skeletal_rrb2, cocycle_to_rb2, cocycle_to_rrb2, rb2_to_3cocycle, rrb2_to_3cocycle
from .linalg import DimensionError
from .report import AxiomError, ValidationReport
from .serialize import (
    ParseError,
    cochain_to_json,
    coeffs_to_json,
    dumps,
    extension_to_json,
    load,
    matrix_to_json,
    parse_cochain,
    parse_extension,
    parse_instance,
    parse_section,
    parse_skeletal,
    parse_two_cocycle,
    rb_coeffs_to_json,
    rb_to_json,
    rrb_to_json,
    skeletal_to_json,
    two_cocycle_to_json,
)
from .structures import (
    adjoint_rb_rep,
    adjoint_rrb_rep,
    check_rb,
    check_rb_representation,
    check_rrb,
    check_rrb_representation,
    coadjoint_rb_rep,
    coadjoint_rrb_rep,
)

COMMANDS = ("check", "cohomology", "derivations", "extension-build", "extension-extract",
            "lie2-from-cocycle", "lie2-to-cocycle", "les", "xi-check")


class Failure(Exception):
    """A check failed; ``payload`` is the report to print with exit status 1."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


class UsageError(Exception):
    def __init__(self, pointer: str, message: str):
        super().__init__(message)
        self.pointer = pointer


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rotabaxter", description="Relative Rota-Baxter Lie algebra toolkit")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="JSON input file")
    p.add_argument("--variant", choices=("rrb", "rb"), default="rrb")
    p.add_argument("--max-degree", type=_nat, default=3)
    p.add_argument("--budget", type=_nat, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--section", help="section file for extension-extract")
    p.add_argument("--cocycle", help="cocycle file for extension-build and lie2-from-cocycle")
    return p


# ---------------------------------------------------------------- helpers

def validate_instance(inst) -> ValidationReport:
    """Every axiom of the base structure, plus the coefficients when given explicitly."""
    base = inst.base
    report = ValidationReport().merge(check_jacobi(base.g), "lie.")
    if inst.variant == "rrb":
        report.merge(check_representation(base.rep), "rep.")
        report.merge(check_rrb(base))
        if inst.coeffs is not None and not isinstance(inst.coeffs, str):
            report.merge(check_rrb_representation(inst.coeffs), "coeffs.")
    else:
        report.merge(check_rb(base))
        if inst.coeffs is not None and not isinstance(inst.coeffs, str):
            report.merge(check_rb_representation(inst.coeffs), "coeffs.")
    return report


def _valid_instance(inst):
    report = validate_instance(inst)
    if not report.valid:
        raise Failure(report.to_json())
    return inst


def _coeffs(inst):
    """Explicit coefficients, or the adjoint/coadjoint package (adjoint when omitted)."""
    c = inst.coeffs if inst.coeffs is not None else "adjoint"
    if not isinstance(c, str):
        return c
    if inst.variant == "rrb":
        return adjoint_rrb_rep(inst.base) if c == "adjoint" else coadjoint_rrb_rep(inst.base)
    return adjoint_rb_rep(inst.base) if c == "adjoint" else coadjoint_rb_rep(inst.base)


def _cocycle_failure(c: Cochain):
    """Violation report listing the nonzero coordinates of D(c), grouped by basis tuple."""
    image = c.coboundary()
    lay = image.scheme.layout
    report = ValidationReport()
    for name, block in lay.blocks:
        for tup, extras in block.keys():
            b = block.base_index(tup, extras)
            report.expect(f"cocycle.{name}", tup + extras, image.coords[b:b + block.target_dim])
    return report.to_json()


def _require(flag, value):
    if value is None:
        raise UsageError(f"--{flag}", f"this command needs --{flag} FILE")
    return value


def _rrb_only(args):
    if args.variant != "rrb":
        raise UsageError("--variant", f"{args.command} is only defined for the rrb variant")


# ---------------------------------------------------------------- commands

def cmd_check(args):
    inst = parse_instance(load(args.input), args.variant)
    report = validate_instance(inst)
    if not report.valid:
        raise Failure(report.to_json())
    return report.to_json()


def cmd_cohomology(args):
    inst = _valid_instance(parse_instance(load(args.input), args.variant))
    coeffs = _coeffs(inst)
    if args.variant == "rrb":
        rep = cohomology_dims(inst.base, coeffs, args.max_degree, args.budget)
    else:
        rep = rb_cohomology_dims(inst.base, coeffs, args.max_degree, args.budget)
    return rep.to_json()


def cmd_derivations(args):
    inst = _valid_instance(parse_instance(load(args.input), args.variant))
    if args.variant == "rrb":
        basis = [{"f_g": matrix_to_json(fg), "f_V": matrix_to_json(fv)}
                 for fg, fv in derivation_basis(inst.base, args.budget)]
    else:
        basis = [{"f": matrix_to_json(f)} for f in rb_derivation_basis(inst.base, args.budget)]
    return {"dim": len(basis), "basis": basis}


def cmd_extension_build(args):
    inst = _valid_instance(parse_instance(load(args.input), args.variant))
    coeffs = _coeffs(inst)
    z = parse_two_cocycle(load(_require("cocycle", args.cocycle)), inst.base, coeffs, args.variant)
    try:
        if args.variant == "rrb":
            e = extension_from_cocycle(inst.base, coeffs, z)
        else:
            e = extension_from_cocycle_rb(inst.base, coeffs, z)
    except CocycleError:
        raise Failure(_cocycle_failure(z.to_cochain(inst.base, coeffs))) from None
    return extension_to_json(e)


def cmd_extension_extract(args):
    base, total, dims = parse_extension(load(args.input), args.variant)
    report = ValidationReport().merge(check_jacobi(base.g), "base.lie.").merge(check_jacobi(total.g), "total.lie.")
    if args.variant == "rrb":
        report.merge(check_representation(base.rep), "base.rep.").merge(check_representation(total.rep), "total.rep.")
        report.merge(check_rrb(base), "base.").merge(check_rrb(total), "total.")
        e = AbelianExtension(total, base, dims["h_dim"], dims["w_dim"])
        report.merge(check_extension(e), "extension.")
    else:
        report.merge(check_rb(base), "base.").merge(check_rb(total), "total.")
        e = AbelianExtensionRB(total, base, dims["w_dim"])
        report.merge(check_extension_rb(e), "extension.")
    if not report.valid:
        raise Failure(report.to_json())
    n = base.g.dim
    if args.variant == "rrb":
        if args.section:
            section = parse_section(load(args.section), n, e.h_dim, base.v_dim, e.w_dim)
        else:
            section = canonical_section(e)
        coeffs = induced_coeff_rep_from_extension(e, section)
        z = cocycle_from_extension(e, section)
        return {"coeffs": coeffs_to_json(coeffs), "cocycle": two_cocycle_to_json(z)}
    section = parse_section(load(args.section), n, e.w_dim) if args.section else canonical_section_rb(e)
    coeffs = induced_rep_from_extension_rb(e, section)
    z = cocycle_from_extension_rb(e, section)
    return {"coeffs": rb_coeffs_to_json(coeffs), "cocycle": two_cocycle_to_json(z)}


def cmd_lie2_from_cocycle(args):
    inst = _valid_instance(parse_instance(load(args.input), args.variant))
    coeffs = _coeffs(inst)
    if args.variant == "rrb":
        sch = scheme(inst.base, coeffs, 3, args.budget)
    else:
        sch = rb_scheme(inst.base, coeffs, 3, args.budget)
    c = parse_cochain(load(_require("cocycle", args.cocycle)), sch)
    if any(c.coboundary().coords):
        raise Failure(_cocycle_failure(c))
    s = cocycle_to_rrb2(inst.base, coeffs, c) if args.variant == "rrb" else cocycle_to_rb2(inst.base, coeffs, c)
    return skeletal_to_json(s)


def cmd_lie2_to_cocycle(args):
    s = parse_skeletal(load(args.input), args.variant)
    s_check = check_skeletal_rrb2 if args.variant == "rrb" else check_skeletal_rb2
    report = s_check(s)
    if not report.valid:
        raise Failure(report.to_json())
    if args.variant == "rrb":
        base, coeffs, c = rrb2_to_3cocycle(s)
        return {"base": rrb_to_json(base), "coeffs": coeffs_to_json(coeffs), "cocycle": cochain_to_json(c)}
    base, rep, c = rb2_to_3cocycle(s)
    return {"base": rb_to_json(base), "coeffs": rb_coeffs_to_json(rep), "cocycle": cochain_to_json(c)}


def cmd_les(args):
    _rrb_only(args)
    inst = _valid_instance(parse_instance(load(args.input), args.variant))
    rep = les_report(inst.base, _coeffs(inst), args.max_degree, args.budget)
    out = rep.to_json()
    if not rep.exact:
        raise Failure(out)
    return out


def cmd_xi_check(args):
    _rrb_only(args)
    inst = _valid_instance(parse_instance(load(args.input), args.variant))
    report = xi_commutes(inst.base, _coeffs(inst), args.max_degree, args.budget)
    if not report.valid:
        raise Failure(report.to_json())
    return report.to_json()


HANDLERS = {
    "check": cmd_check,
    "cohomology": cmd_cohomology,
    "derivations": cmd_derivations,
    "extension-build": cmd_extension_build,
    "extension-extract": cmd_extension_extract,
    "lie2-from-cocycle": cmd_lie2_from_cocycle,
    "lie2-to-cocycle": cmd_lie2_to_cocycle,
    "les": cmd_les,
    "xi-check": cmd_xi_check,
}


# ---------------------------------------------------------------- rendering

def render_text(value, indent: int = 0) -> str:
    """Plain rendering of a JSON value: one key per line, scalar lists inline."""
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item and not _flat(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(value))
    return "\n".join(lines)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def _emit(out, payload, fmt):
    if fmt == "text":
        out.write(render_text(payload) + "\n")
    else:
        out.write(dumps(payload))


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if args.max_degree < 1:
        _emit(out, {"error": "usage", "problems": [{"pointer": "--max-degree", "message": "must be at least 1"}]},
              args.format)
        return 2
    try:
        payload = HANDLERS[args.command](args)
    except Failure as f:
        _emit(out, f.payload, args.format)
        err.write("check failed\n")
        return 1
    except AxiomError as e:
        _emit(out, e.report.to_json(), args.format)
        err.write(f"{e}\n")
        return 1
    except ParseError as e:
        _emit(out, e.to_json(), args.format)
        err.write(f"{e}\n")
        return 2
    except UsageError as e:
        _emit(out, {"error": "usage", "problems": [{"pointer": e.pointer, "message": str(e)}]}, args.format)
        err.write(f"{e}\n")
        return 2
    except (SectionError, DimensionError) as e:
        where = "--section" if isinstance(e, SectionError) else "/"
        _emit(out, {"error": "shape", "problems": [{"pointer": where, "message": str(e)}]}, args.format)
        err.write(f"{e}\n")
        return 2
    except BudgetExceeded as e:
        _emit(out, {"error": "budget", "message": str(e), "sizes": e.sizes}, args.format)
        err.write(f"{e}\n")
        return 3
    _emit(out, payload, args.format)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
