"""Command-line front end.  Exit codes: 0 success, 1 verification failure, 2 usage error."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import families as fam
from . import rings, sullivan, threefolds
from .catalog import audit_record, build_catalog, dumps_catalog, iter_instances
from .lambda_ring import (
    DEFAULT_MAX_EXPAND_DEGREE,
    DegreeCapError,
    NotAPolynomialError,
    lp_expand,
    lp_order_at_one,
    lp_value_at_one,
)
from .milnor_orlik import WeightSystem, milnor_number, monodromy_char_poly
from .verify import run_verification

log = logging.getLogger("rellip")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    """'2,4,6' or '2-6' or a mix: '1,3-5'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1) if not part.startswith("-") else (part, part)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _fractions(text: str) -> list[Fraction]:
    return [Fraction(x.strip()) for x in text.split(",") if x.strip()]


def parse_ring(spec: str) -> rings.GradedRing:
    name, *args = spec.split(":")
    try:
        if name == "s2":
            return rings.truncated_polynomial_ring(1)
        if name == "pn":
            return rings.truncated_polynomial_ring(int(args[0]))
        if name == "twisted-projective":
            return rings.twisted_projective_ring(int(args[0]), int(args[1]))
        if name == "twisted-quadric":
            return rings.twisted_quadric_ring(int(args[0]), Fraction(args[1]))
        if name == "quadric":
            return rings.smooth_quadric_ring(int(args[0]))
        if name == "odd-quadric":
            return rings.odd_quadric_ring(int(args[0]))
        if name == "pe":
            return threefolds.pe_cohomology_ring(int(args[0]))
        if name == "wedge":
            return rings.wedge_of_spheres_ring(int(args[0]) if args else 2)
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad ring spec {spec!r}: {exc}") from exc
    raise UsageError(
        f"unknown ring {name!r}; use s2, pn:N, twisted-projective:N:D, twisted-quadric:K:A, "
        "quadric:K, odd-quadric:K, pe:N, wedge[:COUNT]"
    )


def _emit(data, args) -> None:
    indent = 2 if getattr(args, "pretty", False) else None
    sys.stdout.write(json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False) + "\n")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing " + ", ".join("-" + m if len(m) == 1 else "--" + m for m in missing))


def _instance(args) -> fam.FamilyInstance:
    if args.family == "H":
        _need(args, "a")
        return fam.FamilyInstance.H(_int_list(args.a))
    _need(args, "family", "n", "d")
    return fam.FamilyInstance(args.family, args.n, args.d)


# --- subcommands ------------------------------------------------------------------


def cmd_monodromy(args) -> int:
    if args.weights:
        ws = WeightSystem(_fractions(args.weights))
        p = monodromy_char_poly(ws)
        source = {"weights": ws.to_json()}
    else:
        _need(args, "family", "n", "d")
        if args.family == "W":
            p = fam.phi(args.n, args.d)
        elif args.family == "V":
            p = fam.delta_closed_form(args.n, args.d)
        else:
            raise UsageError("monodromy supports --family V or W, or --weights")
        source = {"family": args.family, "n": args.n, "d": args.d}
    out = {
        "source": source,
        "char_poly": p.to_json(),
        "pretty": str(p),
        "degree": p.degree,
        "order_at_one": lp_order_at_one(p),
        "value_at_one": str(lp_value_at_one(p)) if lp_order_at_one(p) == 0 else None,
    }
    if args.expand:
        try:
            out["coefficients"] = lp_expand(p, args.max_expand_degree)
        except DegreeCapError as exc:
            out["coefficients"] = None
            out["flags"] = [f"skipped: degree cap ({exc})"]
        except NotAPolynomialError as exc:
            out["coefficients"] = None
            out["flags"] = [f"not a polynomial ({exc})"]
    _emit(out, args)
    return EXIT_OK


def cmd_weights(args) -> int:
    _need(args, "family", "n", "d")
    if args.family == "W":
        ws = fam.w_singularity_weights(args.n, args.d)
        formula = fam.milnor_number_W(args.n, args.d)
    elif args.family == "V":
        ws = fam.v_singularity_weights(args.n, args.d)
        formula = fam.milnor_number_V(args.n, args.d)
    else:
        raise UsageError("weights supports --family V or W (use `kollar` for H)")
    _emit({"weights": ws.to_json(), "milnor_number": milnor_number(ws), "milnor_formula": formula}, args)
    return EXIT_OK


def cmd_kollar(args) -> int:
    _need(args, "a")
    _emit(fam.kollar_weight_system(_int_list(args.a)).to_json(), args)
    return EXIT_OK


def cmd_betti(args) -> int:
    inst = _instance(args)
    _emit({"instance": inst.to_json(), "betti": fam.betti_numbers(inst), "flags": fam.instance_flags(inst)}, args)
    return EXIT_OK


def cmd_ring(args) -> int:
    ring = parse_ring(args.ring)
    data = ring.to_json()
    data["ranks"] = ring.ranks()
    _emit(data, args)
    return EXIT_OK


def cmd_signature(args) -> int:
    ring = parse_ring(args.ring)
    labels, mat = rings.poincare_pairing(ring)
    _emit(
        {
            "ring": ring.name,
            "middle_basis": labels,
            "pairing": [[str(x) for x in row] for row in mat],
            "signature": list(rings.middle_signature(ring)),
        },
        args,
    )
    return EXIT_OK


def cmd_homotopy_class(args) -> int:
    values = [Fraction(v) for v in args.values]
    classes = [
        {"a": str(a), "real_class": rings.real_homotopy_class(a), "rational_class": rings.rational_homotopy_class(a)}
        for a in values
    ]
    out = {"classes": classes}
    if len(values) > 1:
        out["real_equivalent"] = len({c["real_class"] for c in classes}) == 1
        out["rational_equivalent"] = len({c["rational_class"] for c in classes}) == 1
    _emit(out, args)
    return EXIT_OK


def cmd_model(args) -> int:
    ring = parse_ring(args.ring)
    model = sullivan.minimal_model(ring, args.cutoff)
    audit = sullivan.audit_model(model)
    out = model.to_json()
    out["ring"] = ring.name
    out["homotopy_ranks"] = {str(k): v for k, v in sullivan.homotopy_ranks(model).items()}
    out["generator_degrees"] = model.degrees
    out["audit"] = {
        "d_squared_zero": audit.d_squared_zero,
        "minimal": audit.minimal,
        "chain_map": audit.chain_map,
        "cohomology_iso": all(audit.cohomology_iso.values()),
    }
    try:
        out["ellipticity"] = sullivan.ellipticity_report(model, ring).to_json()
    except sullivan.CutoffError as exc:
        out["ellipticity"] = {"verdict": f"not evaluated: {exc}"}
    _emit(out, args)
    return EXIT_OK if audit.ok else EXIT_FAIL


def cmd_threefolds(args) -> int:
    _need(args, "n")
    out = threefolds.threefold_report(args.n).to_json()
    if args.compare is not None:
        m = args.compare
        out["compare"] = {
            "m": m,
            "homotopy_equivalent": threefolds.fn_homotopy_equivalent(args.n, m),
            "hirzebruch_diffeomorphic": threefolds.hirzebruch_diffeomorphic(args.n, m),
            "gl2z_equivalent": threefolds.gl2z_equivalent(
                threefolds.pe_cubic_form(args.n), threefolds.pe_cubic_form(m), args.bound
            ),
        }
    _emit(out, args)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.family == "H":
        _need(args, "a")
        instances = list(iter_instances("H", a=_int_list(args.a)))
    else:
        _need(args, "family", "n_values", "d_values")
        instances = list(iter_instances(args.family, _int_list(args.n_values), _int_list(args.d_values)))
    records = build_catalog(instances, args.jobs)
    if args.audit:
        problems = {i: audit_record(r) for i, r in enumerate(records)}
        problems = {i: p for i, p in problems.items() if p}
        if problems:
            sys.stderr.write(json.dumps(problems, indent=2) + "\n")
            return EXIT_FAIL
    text = dumps_catalog(records, args.pretty)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {args.out}: {exc}\n")
            return EXIT_FAIL
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(
        max_n=args.max_n,
        max_d=args.max_d,
        max_expand_degree=args.max_expand_degree,
        perturb=args.perturb,
        include_models=not args.skip_models,
    )
    for w in report.warnings:
        log.warning(w)
    _emit(report.to_json(), args)
    return EXIT_OK if report.passed else EXIT_FAIL


# --- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rellip", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=False, nd=False):
        p.add_argument("--pretty", action="store_true", help="indented JSON output")
        if family:
            p.add_argument("--family", choices=["H", "V", "W"])
        if nd:
            p.add_argument("-n", type=int)
            p.add_argument("-d", type=int)
        return p

    p = common(sub.add_parser("monodromy", help="monodromy characteristic polynomial"), True, True)
    p.add_argument("--weights", help="comma-separated rational weights, e.g. 2,4,8/3")
    p.add_argument("--expand", action="store_true", help="also expand to integer coefficients")
    p.add_argument("--max-expand-degree", type=int, default=DEFAULT_MAX_EXPAND_DEGREE)
    p.set_defaults(func=cmd_monodromy)

    p = common(sub.add_parser("weights", help="local weights of the singular point"), True, True)
    p.set_defaults(func=cmd_weights)

    p = common(sub.add_parser("kollar", help="solve the cyclic weight system of H(a)"))
    p.add_argument("-a", "--a", help="comma-separated exponents a_0..a_{n+1}")
    p.set_defaults(func=cmd_kollar)

    p = common(sub.add_parser("betti", help="Betti numbers b_0..b_2n"), True, True)
    p.add_argument("-a", "--a")
    p.set_defaults(func=cmd_betti)

    for name, func, help_ in (
        ("ring", cmd_ring, "cohomology ring multiplication table"),
        ("signature", cmd_signature, "middle-degree pairing and signature"),
    ):
        p = common(sub.add_parser(name, help=help_))
        p.add_argument("--ring", required=True)
        p.set_defaults(func=func)

    p = common(sub.add_parser("homotopy-class", help="real/rational class of a-twisted quadrics"))
    p.add_argument("values", nargs="+", help="nonzero rationals a")
    p.set_defaults(func=cmd_homotopy_class)

    p = common(sub.add_parser("model", help="minimal Sullivan model up to a cutoff"))
    p.add_argument("--ring", required=True)
    p.add_argument("--cutoff", type=int)
    p.set_defaults(func=cmd_model)

    p = common(sub.add_parser("threefolds", help="F_n = P(O + O(n)) invariants"), False, True)
    p.add_argument("--compare", type=int, help="compare F_n with F_m")
    p.add_argument("--bound", type=int, default=2, help="entry bound for the GL2(Z) search")
    p.set_defaults(func=cmd_threefolds)

    p = common(sub.add_parser("catalog", help="JSON-lines catalog over an (n, d) grid"), True)
    p.add_argument("-n", dest="n_values", help="n values, e.g. 2,4 or 2-8")
    p.add_argument("-d", dest="d_values", help="d values, e.g. 2,4,6")
    p.add_argument("-a", "--a")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--audit", action="store_true", help="re-validate every record before writing")
    p.set_defaults(func=cmd_catalog)

    p = common(sub.add_parser("verify", help="run every identity over a parameter grid"))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-d", type=int, default=8)
    p.add_argument("--max-expand-degree", type=int, default=DEFAULT_MAX_EXPAND_DEGREE)
    p.add_argument("--skip-models", action="store_true")
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
