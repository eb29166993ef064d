"""Command-line entry point: ``hitchinkit <subcommand> ...``.

Every subcommand builds a report ``{schema_version, subcommand, inputs,
results, warnings}``.  ``--json`` prints it with sorted keys; otherwise a
flat ``key: value`` listing is printed.  Exit codes: 0 on success, 2 on
usage errors (including malformed polynomial strings), 1 on domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import g2 as g2mod
from . import principal as principal_mod
from . import quotient, skchart, spectral
from .algebra import PolySyntaxError, RationalPoly, parse_poly
from .cubic import (CALIBRATION, calibration_ratio, residue_cubic_sl2, period_oracle, sl2_cameral_data)
from .liecore import build_root_system, chevalley_algebra, weyl_group

SCHEMA_VERSION = "1"
FLOAT_PRECISION = 10


class UsageError(Exception):
    pass


def seeded_rng() -> random.Random:
    return random.Random(int(os.environ.get("HITCHINKIT_SEED", "0")))


# value encoding

def fmt_float(x: float) -> dict:
    return {"value": f"{x:.{FLOAT_PRECISION}e}", "precision": FLOAT_PRECISION}


def fmt_complex(z: complex) -> dict:
    return {"re": f"{z.real:.{FLOAT_PRECISION}e}", "im": f"{z.imag:.{FLOAT_PRECISION}e}",
            "precision": FLOAT_PRECISION}


def encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, RationalPoly):
        return str(value)
    if isinstance(value, complex):
        return fmt_complex(value)
    if isinstance(value, float):
        return fmt_float(value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def parse_rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot read rational list {text!r}: {exc}") from None


def named_vector(labels, vec) -> dict:
    return {lab: str(Fraction(c)) for lab, c in zip(labels, vec) if c}


# subcommands

def cmd_rootsys(args) -> tuple[dict, list]:
    rs = build_root_system(args.type)
    w = weyl_group(rs)
    res = {
        "type": rs.type_name,
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan],
        "positive_roots": [list(r) for r in rs.positive_roots],
        "root_count": len(rs.roots),
        "root_lengths_sq": {"".join(map(str, r)): str(l) for r, l in zip(rs.positive_roots, rs.lengths_sq)},
        "dimension": rs.dimension,
        "exponents": list(rs.exponents),
        "degrees": list(rs.degrees),
        "highest_height": rs.highest_height,
        "coxeter_number": rs.coxeter_number,
        "weyl_order": w.order,
        "grading_dimensions": {str(k): v for k, v in sorted(rs.grading_dimensions().items())},
    }
    if rs.rank == 2:
        s1, s2 = w.generators
        m = w.element_order(w.multiply(s1, s2))
        res["dihedral"] = {"m": m, "order": 2 * m, "relations": f"s1^2 = s2^2 = (s1 s2)^{m} = 1"}
    return res, []


def cmd_principal(args) -> tuple[dict, list]:
    scal = parse_rationals(args.scalings) if args.scalings else None
    ep = principal_mod.Epinglage.standard(args.type, scal)
    t = principal_mod.principal_triple(ep)
    dec = principal_mod.ad_decomposition(t)
    labels = t.algebra.labels
    res = {
        "type": t.algebra.root_system.type_name,
        "kac_labels": list(t.kac_labels),
        "x": named_vector(labels, t.x),
        "h": named_vector(labels, t.h),
        "y": named_vector(labels, t.y),
        "relations": t.relations_hold(),
        "exponents": list(dec["exponents"]),
        "summand_dimensions": list(dec["summand_dimensions"]),
        "total_dimension": dec["total_dimension"],
        "dim_ker_ad_y": len(dec["z_y"]),
    }
    if args.verify:
        p = principal_mod.splitting_map(t)
        res["splitting_map_on_basis"] = {
            lab: named_vector(labels, p(model_basis)) for lab, model_basis in
            ((lab, t.algebra.basis_vector(k)) for k, lab in enumerate(labels))}
        res["ad_h_is_twice_height"] = dec["ad_h_is_twice_height"]
    return res, []


def cmd_kostant(args) -> tuple[dict, list]:
    point = parse_rationals(args.point)
    data = quotient.kostant_section_data(args.type.upper())
    elem = quotient.kostant_section(args.type, point)
    model = data.triple.algebra
    res = {
        "type": data.type_name,
        "point": point,
        "section": named_vector(model.labels, elem),
        "matrix": [[str(Fraction(x)) for x in row] for row in model.represent(elem)],
        "certificate": data.certificate,
    }
    if args.verify:
        chi = quotient.adjoint_quotient(args.type, elem)
        res["verify"] = {
            "chi": list(chi),
            "chi_matches": list(chi) == point,
            "regular": model.kernel_dimension(elem) == model.rank,
            "equals_regular_nilpotent": tuple(elem) == tuple(data.triple.y),
        }
    return res, []


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def cmd_chi(args) -> tuple[dict, list]:
    inv = quotient.invariant_generators(args.type)
    model = inv.model
    data = _read_json(args.element)
    if "matrix" in data:
        try:
            elem = model.from_matrix([[Fraction(str(x)) for x in row] for row in data["matrix"]])
        except ValueError as exc:
            raise ValueError(f"matrix does not lie in the {inv.type_name} realization ({exc})") from None
    elif "coordinates" in data:
        coords = data["coordinates"]
        if isinstance(coords, dict):
            unknown = set(coords) - set(model.labels)
            if unknown:
                raise UsageError(f"unknown basis labels {sorted(unknown)}")
            elem = [Fraction(str(coords.get(lab, 0))) for lab in model.labels]
        else:
            elem = [Fraction(str(x)) for x in coords]
            if len(elem) != model.dim:
                raise UsageError(f"need {model.dim} coordinates")
    else:
        raise UsageError("element JSON needs 'coordinates' or 'matrix'")
    chi = inv.evaluate(elem)
    res = {
        "type": inv.type_name,
        "degrees": list(inv.degrees),
        "chi": list(chi),
        "regular": model.kernel_dimension(elem) == model.rank,
    }
    return res, []


def cmd_spectral(args) -> tuple[dict, list]:
    fam = spectral.MatrixFamily.from_json(_read_json(args.family))
    eq = spectral.spectral_equation(fam)
    res = {
        "variables": list(fam.variables),
        "equation": eq.polynomial,
        "coefficients": list(eq.coefficients),
    }
    warnings = []
    if args.loci:
        loci = spectral.branch_and_singular(fam)
        res["branch"] = loci.branch
        res["ramification"] = list(loci.ramification)
        res["singular"] = list(loci.singular)
        zs = spectral.linear_zero_set(loci.singular)
        if any(g.is_constant() and not g.is_zero() for g in loci.singular):
            res["singular_empty"] = True
        elif zs is None:
            warnings.append("singular locus is not cut out by its linear generators; no parametrization")
        else:
            res["singular_parametrization"] = {
                "parameters": list(zs["parameters"]),
                "map": {k: str(v) for k, v in zs["parametrization"].items()},
            }
    return res, warnings


def cmd_numerology(args) -> tuple[dict, list]:
    if args.group.upper() == "G2":
        tab = g2mod.g2_dimension_table(args.genus, args.delta)
        res = {"group": "G2", "genus": tab.genus, "delta": tab.delta, "dim_base": tab.dim_base,
               "dim_higgs0": tab.dim_higgs0, "dim_B0": tab.dim_B0, "dim_leaf_space": tab.dim_leaf_space}
        return res, list(tab.caveats)
    if args.n is None:
        raise UsageError("--n is required for GL and SL")
    rep = spectral.numerology(args.group, args.n, args.genus, args.delta)
    res = {"group": rep.group, "n": rep.n, "genus": rep.genus, "delta": rep.delta}
    res.update(rep.values)
    return res, list(rep.caveats)


def _base_value(text: str):
    p = parse_poly(text)
    return p.constant_value() if p.is_constant() else p


def cmd_g2(args) -> tuple[dict, list]:
    if args.g2cmd == "involution":
        p = g2mod.G2BasePoint(_base_value(args.f), _base_value(args.q))
        img = g2mod.langlands_involution(p)
        back = g2mod.langlands_involution(img)
        disc = g2mod.g2_discriminant(p)
        res = {
            "image": [img.f, img.q],
            "involutive": back == p,
            "discriminant": disc.value,
            "discriminant_preserved": g2mod.g2_discriminant(img).value == disc.value,
            "short_root_factor": disc.short_root_factor,
            "long_root_factor": disc.long_root_factor,
        }
        return res, []
    if args.g2cmd == "dims":
        tab = g2mod.g2_dimension_table(args.genus, args.delta)
        return {"genus": tab.genus, "delta": tab.delta, "dim_base": tab.dim_base,
                "dim_higgs0": tab.dim_higgs0, "dim_B0": tab.dim_B0,
                "dim_leaf_space": tab.dim_leaf_space}, list(tab.caveats)
    # cameral
    f0, q0 = _base_value(args.f0), _base_value(args.q0)
    s = g2mod.cameral_equations(f0, q0)
    res = {
        "system_invariant": list(s.system_invariant),
        "system_rotated": list(s.system_rotated),
        "system_hitchin": list(s.system_hitchin),
        "change_rational": [list(r) for r in s.change_rational],
        "change_sqrt3": [list(r) for r in s.change_sqrt3],
        "change_exact": g2mod.change_is_exact(s),
    }
    if isinstance(f0, Fraction):
        res["rotated_matches_hitchin"] = g2mod.rotated_equals_hitchin_on_quadric(s)
    if args.bezout:
        if not (isinstance(f0, Fraction) and isinstance(q0, Fraction)):
            raise UsageError("--bezout needs numeric f0 and q0")
        res["bezout"] = g2mod.bezout_count(f0, q0)
    return res, []


def cmd_cubic(args) -> tuple[dict, list]:
    data = sl2_cameral_data(args.b, args.delta)
    xi = parse_poly(args.xi, ("u",))
    eta = parse_poly(args.eta, ("u",)) if args.eta else xi
    zeta = parse_poly(args.zeta, ("u",)) if args.zeta else xi
    value = residue_cubic_sl2(data, xi, eta, zeta)
    res = {
        "b": data.b,
        "delta": data.delta,
        "ramification": list(data.ramification),
        "leaf_dimension": data.leaf_dimension,
        "value": value,
    }
    if args.oracle:
        if not (eta == xi and zeta == xi):
            raise UsageError("--oracle compares c(xi)(xi, xi) only")
        o = period_oracle(data.b, xi, args.step)
        ratio = calibration_ratio(o, value) if value else complex("nan")
        res["oracle"] = {"dtau_dt": o.dtau_dt, "error_bound": float(o.error_bound),
                         "tau": o.tau, "a_period": o.a_period, "step": float(o.step)}
        res["calibration"] = ratio
        res["calibration_reference"] = CALIBRATION
        res["relative_error"] = float(abs(ratio - CALIBRATION) / abs(CALIBRATION))
    return res, []


def cmd_sk(args) -> tuple[dict, list]:
    pre = skchart.Prepotential.parse(args.prepotential)
    chart = skchart.from_prepotential(pre)
    res = {
        "variables": list(chart.names),
        "dual": list(chart.dual),
        "tau": [list(r) for r in chart.tau],
        "cubic": {",".join(map(str, k)): v for k, v in sorted(chart.cubic.items()) if not v.is_zero()},
        "kahler_potential": chart.kahler_potential,
        "symmetric": chart.symmetric,
        "connection": {",".join(map(str, k)): v for k, v in sorted(skchart.connection_matrix(chart).items())
                       if not v.is_zero()},
    }
    if args.sample:
        pts = skchart.parse_samples(args.sample)
        res["samples"] = [{"point": [complex(z) for z in p.point], "min_eigenvalue": p.min_eigenvalue,
                           "classification": p.classification, "signature": p.signature}
                          for p in skchart.positivity_sample(chart, pts)]
    return res, []


# argument grammar

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hitchinkit", description="Hitchin-system toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("rootsys", cmd_rootsys, "root system and Weyl group data")
    sp.add_argument("--type", required=True)
    sp = add("principal", cmd_principal, "principal sl2-triple")
    sp.add_argument("--type", required=True)
    sp.add_argument("--scalings", help="comma-separated nonzero rationals c_i")
    sp.add_argument("--verify", action="store_true")
    sp = add("kostant", cmd_kostant, "Kostant section at a point of the base")
    sp.add_argument("--type", required=True)
    sp.add_argument("--point", required=True)
    sp.add_argument("--verify", action="store_true")
    sp = add("chi", cmd_chi, "adjoint quotient of an element")
    sp.add_argument("--type", required=True)
    sp.add_argument("--element", required=True, help="JSON file with 'coordinates' or 'matrix'")
    sp = add("spectral", cmd_spectral, "spectral equation of a matrix family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--loci", action="store_true")
    sp = add("numerology", cmd_numerology, "dimension and degree formulas")
    sp.add_argument("--group", required=True, choices=["GL", "SL", "G2", "gl", "sl", "g2"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--delta", type=int, default=0)

    sp = add("g2", cmd_g2, "G2 base involution, dimensions and cameral equations")
    g2sub = sp.add_subparsers(dest="g2cmd", required=True, parser_class=_Parser)
    inv = g2sub.add_parser("involution")
    inv.add_argument("--f", required=True)
    inv.add_argument("--q", required=True)
    dims = g2sub.add_parser("dims")
    dims.add_argument("--genus", type=int, required=True)
    dims.add_argument("--delta", type=int, required=True)
    cam = g2sub.add_parser("cameral")
    cam.add_argument("--f0", required=True)
    cam.add_argument("--q0", required=True)
    cam.add_argument("--bezout", action="store_true")
    for sp2 in (inv, dims, cam):
        sp2.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = add("cubic", cmd_cubic, "residue cubic for SL2 cameral covers")
    csub = sp.add_subparsers(dest="cubiccmd", required=True, parser_class=_Parser)
    sl2 = csub.add_parser("sl2")
    sl2.add_argument("--b", required=True)
    sl2.add_argument("--delta", type=int, required=True)
    sl2.add_argument("--xi", required=True)
    sl2.add_argument("--eta")
    sl2.add_argument("--zeta")
    sl2.add_argument("--oracle", action="store_true")
    sl2.add_argument("--step", type=float, default=1e-4)
    sl2.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = add("sk", cmd_sk, "special Kahler chart from a prepotential")
    sp.add_argument("--prepotential", required=True)
    sp.add_argument("--sample", help="points separated by ';', coordinates by ','")
    return p


def _inputs(args) -> dict:
    skip = {"func", "json", "command", "g2cmd", "cubiccmd"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None and v is not False}


def render_text(report: dict) -> str:
    lines = [f"{report['subcommand']}"]

    def walk(prefix, value):
        if isinstance(value, dict) and value and not {"re", "precision"} & set(value) \
                and not {"value", "precision"} == set(value):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else k, value[k])
        else:
            lines.append(f"  {prefix}: {json.dumps(value, sort_keys=True)}")

    walk("", report["results"])
    for w in report["warnings"]:
        lines.append(f"  warning: {w}")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        results, warnings = args.func(args)
    except UsageError as exc:
        stderr.write(f"hitchinkit: usage error: {exc}\n")
        return 2
    except PolySyntaxError as exc:
        stderr.write(f"hitchinkit: malformed polynomial: {exc}\n")
        return 2
    except (ValueError, ArithmeticError, KeyError) as exc:
        stderr.write(f"hitchinkit: error: {exc}\n")
        return 1
    name = args.command
    if name == "g2":
        name = f"g2 {args.g2cmd}"
    elif name == "cubic":
        name = f"cubic {args.cubiccmd}"
    report = {
        "schema_version": SCHEMA_VERSION,
        "subcommand": name,
        "inputs": encode(_inputs(args)),
        "results": encode(results),
        "warnings": list(warnings),
    }
    if getattr(args, "json", False):
        stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(render_text(report))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
