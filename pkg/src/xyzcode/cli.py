"""Command-line front end: `xyzcode {validate,dim,distance,css,barrier,fractal} ...`."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .css_map import css_convert, css_dimension, css_distance_capped
from .cyclic import (
    chamon_spec,
    energy_barrier_path,
    fractal_operator,
    parse_cyclic_spec,
    xyz3d_spec,
)
from .dimension import dimension_formula
from .distance import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    describe_operator,
    distance_capped,
    dstar,
)
from .pauli import minus_one_in_group
from .xyz_build import ParseError, build, check_abelian, format_matrix_text, in_T, parse_matrix_text

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_INCONSISTENT = 4


class InconsistencyError(RuntimeError):
    pass


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_code(args) -> tuple[object, dict, object]:
    """Build the code named by the input flags; returns (code, input record, cyclic spec or None)."""
    if args.h1 or args.h2 or args.h3:
        if not (args.h1 and args.h2 and args.h3):
            raise ParseError("--h1, --h2 and --h3 must be given together")
        mats, hashes = [], {}
        for key in ("h1", "h2", "h3"):
            path = getattr(args, key)
            text = _read(path)
            try:
                mats.append(parse_matrix_text(text))
            except ParseError as exc:
                raise ParseError(f"{path}: {exc.message}", exc.line) from None
            hashes[key] = _sha256(text.encode())
        return build(*mats), {"kind": "matrices", "sha256": hashes}, None
    if args.cyclic:
        text = _read(args.cyclic)
        try:
            spec = parse_cyclic_spec(text)
        except ParseError as exc:
            raise ParseError(f"{args.cyclic}: {exc.message}", exc.line) from None
        return spec.code(), {"kind": "cyclic", "sha256": {"cyclic": _sha256(text.encode())}}, spec
    for flag, maker in (("chamon", chamon_spec), ("xyz3d", xyz3d_spec)):
        sizes = getattr(args, flag)
        if sizes:
            spec = maker(*sizes)
            desc = f"{flag} {' '.join(map(str, sizes))}"
            return spec.code(), {"kind": flag, "sizes": list(sizes), "sha256": {flag: _sha256(desc.encode())}}, spec
    raise ParseError("no input given: use --h1/--h2/--h3, --cyclic, --chamon or --3dxyz")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--h1", metavar="FILE")
    p.add_argument("--h2", metavar="FILE")
    p.add_argument("--h3", metavar="FILE")
    p.add_argument("--cyclic", metavar="FILE")
    p.add_argument("--chamon", nargs=3, type=int, metavar=("N1", "N2", "N3"))
    p.add_argument("--3dxyz", dest="xyz3d", nargs=3, type=int, metavar=("N1", "N2", "N3"))


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xyzcode", description="Analyse XYZ product codes.")
    parser.add_argument("--version", action="version", version=f"xyzcode {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="commutation, sign and dimension-one family checks")
    _add_input_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("dim", help="code dimension by every available route")
    _add_input_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("distance", help="capped exact distance search and decoupled bound")
    _add_input_flags(p)
    _add_common_flags(p)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--dstar", choices=("exhaustive", "greedy"))

    p = sub.add_parser("css", help="convert to a CSS code and measure it")
    _add_input_flags(p)
    _add_common_flags(p)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--out-hx", metavar="FILE")
    p.add_argument("--out-hz", metavar="FILE")

    p = sub.add_parser("barrier", help="syndrome profile of the two-slice flip path")
    p.add_argument("n1", type=int)
    p.add_argument("n2", type=int)
    p.add_argument("--n3", type=int, default=3)
    p.add_argument("--pattern", default="0,1", help="exponents shared by all three polynomials")
    p.add_argument("--compare", nargs="*", default=[], metavar="N1xN2",
                   help="further sizes whose maximum is compared with this one")
    _add_common_flags(p)

    p = sub.add_parser("fractal", help="fractal operator image weights")
    p.add_argument("spec", metavar="FILE", help="cyclic spec file")
    p.add_argument("p", type=int)
    p.add_argument("--axes", default="0,1")
    _add_common_flags(p)
    return parser


def _fraction(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# --- commands -----------------------------------------------------------------------


def cmd_validate(args) -> tuple[dict, list[str]]:
    code, inputs, _ = load_code(args)
    abelian = check_abelian(code)
    minus_one = minus_one_in_group(code.generators, seed=args.seed) if abelian else None
    t_ok, t_why = in_T(code.h1, code.h2, code.h3)
    report = {
        "inputs": inputs,
        "N": code.N,
        "abelian": abelian,
        "minus_one": minus_one,
        "in_T": t_ok,
        "in_T_diagnostic": t_why,
    }
    yn = {True: "yes", False: "no", None: "n/a"}
    text = [
        f"N = {code.N}",
        f"abelian: {yn[abelian]}, minus_one: {yn[minus_one]}, in_T: {yn[t_ok]}"
        + ("" if t_ok else f" ({t_why})"),
    ]
    return report, text


def cmd_dim(args) -> tuple[dict, list[str]]:
    code, inputs, _ = load_code(args)
    rep = dimension_formula(code)
    report = {"inputs": inputs, "N": code.N, "dimension": rep.to_dict()}
    k = rep.k_bruteforce if rep.k_bruteforce is not None else rep.k_formula
    text = [f"N = {code.N}"]
    if k is None:
        text.append("k: bounds only; " + "; ".join(rep.notes))
    else:
        text.append(f"k={k}")
    text.append(
        f"brute force: {rep.k_bruteforce}, formula: {rep.k_formula}, relations r: {rep.r}, "
        f"sylvester s: {rep.s}, agreement: {'yes' if rep.agreement else 'NO'}"
    )
    text.extend(rep.notes)
    if not rep.agreement:
        raise InconsistencyError("dimension routes disagree", report, text)
    return report, text


def _distance_record(code, rep) -> dict:
    op = rep.best_logical_found
    return {
        "exact_d": rep.exact_d,
        "cap": rep.cap,
        "lower_bound": rep.lower_bound,
        "upper_bound": rep.upper_bound,
        "ops_enumerated": rep.ops_enumerated,
        "witness": None if op is None else [[code.describe_qubit(q), op.letter(q)] for q in op.sites()],
        "notes": rep.notes,
    }


def cmd_distance(args) -> tuple[dict, list[str]]:
    code, inputs, _ = load_code(args)
    report = {"inputs": inputs, "N": code.N}
    text = [f"N = {code.N}"]
    try:
        rep = distance_capped(code, args.cap, budget=args.budget, workers=args.workers, seed=args.seed)
    except BudgetExceeded as exc:
        part = exc.partial
        report["distance"] = _distance_record(code, part)
        text.append(f"budget exceeded: d >= {part.lower_bound}")
        raise BudgetExceeded(str(exc), (report, text)) from None
    report["distance"] = _distance_record(code, rep)
    if rep.exact_d is not None:
        text.append(f"d = {rep.exact_d}, witness: {describe_operator(code, rep.best_logical_found)}")
    else:
        text.append(f"d > {args.cap} (no logical up to the cap)")
    if args.dstar:
        t_ok, t_why = in_T(code.h1, code.h2, code.h3)
        if not t_ok:
            report["dstar"] = {"skipped": t_why}
            text.append(f"d* skipped: {t_why}")
        else:
            try:
                ds = dstar(code.h1, code.h2, code.h3, strategy=args.dstar, budget=args.budget, seed=args.seed)
            except BudgetExceeded as exc:
                report["dstar"] = {"error": str(exc)}
                text.append(f"d* budget exceeded: {exc}")
                raise BudgetExceeded(str(exc), (report, text)) from None
            perm, M = ds.witness
            entry = {
                "value": _fraction(ds.value),
                "exact": ds.exact,
                "strategy": ds.strategy,
                "w": ds.w,
                "per_permutation": {"".join(map(str, p)): _fraction(v) for p, (v, _) in ds.per_permutation.items()},
                "witness_permutation": list(perm),
                "witness_M": [list(c) for c in M.cells()],
            }
            label = "d*" if ds.exact else "d* <="
            line = f"{label} {_fraction(ds.value)}"
            if rep.exact_d is not None and ds.exact:
                lo, hi, ok = ds.sandwich(rep.exact_d)
                entry["sandwich"] = {"low": _fraction(lo), "high": _fraction(hi), "ok": ok}
                line += f", sandwich: {_fraction(lo)} <= {rep.exact_d} <= {_fraction(hi)} {'ok' if ok else 'VIOLATED'}"
                if not ok:
                    report["dstar"] = entry
                    raise InconsistencyError("sandwich bound violated", report, text + [line])
            report["dstar"] = entry
            text.append(line)
    return report, text


def cmd_css(args) -> tuple[dict, list[str]]:
    code, inputs, _ = load_code(args)
    css = css_convert(code)
    k = css_dimension(css)
    report = {
        "inputs": inputs,
        "n": css.n,
        "k": k,
        "hx_rows": css.hx.nrows,
        "hz_rows": css.hz.nrows,
        "max_check_weight": max(r.bit_count() for r in css.hx.rows + css.hz.rows),
    }
    text = [f"CSS code: n = {css.n}, k = {k}"]
    if args.out_hx:
        with open(args.out_hx, "w", encoding="utf-8") as fh:
            fh.write(format_matrix_text(css.hx))
    if args.out_hz:
        with open(args.out_hz, "w", encoding="utf-8") as fh:
            fh.write(format_matrix_text(css.hz))
    try:
        rep = css_distance_capped(css, args.cap, budget=args.budget, seed=args.seed)
    except BudgetExceeded as exc:
        text.append("budget exceeded during CSS distance search")
        raise BudgetExceeded(str(exc), (report, text)) from None
    report["distance"] = {
        "d": rep.d, "d_x": rep.d_x, "d_z": rep.d_z, "cap": rep.cap,
        "witness_x": rep.witness_x, "witness_z": rep.witness_z,
        "even_per_group": rep.even_per_group,
    }
    text.append(f"d = {rep.d}" if rep.d is not None else f"d > {args.cap}")
    return report, text


def _parse_size(tok: str) -> tuple[int, int]:
    try:
        a, b = tok.lower().split("x")
        return int(a), int(b)
    except ValueError:
        raise ParseError(f"bad size {tok!r}, expected N1xN2") from None


def cmd_barrier(args) -> tuple[dict, list[str]]:
    try:
        pattern = tuple(int(t) for t in args.pattern.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad pattern {args.pattern!r}") from None
    sizes = [(args.n1, args.n2)] + [_parse_size(t) for t in args.compare]
    runs = []
    for n1, n2 in sizes:
        path = energy_barrier_path(n1, n2, pattern, args.n3)
        runs.append({
            "n1": n1, "n2": n2, "n3": args.n3,
            "profile": [w for _, w in path.steps],
            "max": path.max_syndrome_weight,
            "endpoint_is_two_slice_logical": path.endpoint_is_plane and path.endpoint_zero_syndrome,
        })
    maxima = {r["max"] for r in runs}
    report = {"pattern": list(pattern), "runs": runs, "constant_across_sizes": len(maxima) == 1}
    first = runs[0]
    text = [f"profile: {' '.join(map(str, first['profile']))}"]
    text.append(f"max = {first['max']}, constant across sizes: {'yes' if len(maxima) == 1 else 'no'}")
    return report, text


def cmd_fractal(args) -> tuple[dict, list[str]]:
    text_in = _read(args.spec)
    try:
        spec = parse_cyclic_spec(text_in)
    except ParseError as exc:
        raise ParseError(f"{args.spec}: {exc.message}", exc.line) from None
    try:
        axes = tuple(int(t) for t in args.axes.split(","))
    except ValueError:
        raise ParseError(f"bad axes {args.axes!r}") from None
    rows = []
    text = []
    for p in range(1, args.p + 1):
        res = fractal_operator(spec, axes, p)
        rows.append({"p": p, "operator_weight": res.operator.weight(), "image_weight": res.image_weight,
                     "bound": res.bound, "closed_form_ok": res.closed_form_ok})
        text.append(f"p={p}: |F| = {res.operator.weight()}, image weight {res.image_weight} <= {res.bound}"
                    + ("" if res.bound_ok else " VIOLATED"))
    report = {"inputs": {"kind": "cyclic", "sha256": {"cyclic": _sha256(text_in.encode())}},
              "axes": list(axes), "sweep": rows}
    if not all(r["image_weight"] <= r["bound"] and r["closed_form_ok"] for r in rows):
        raise InconsistencyError("fractal image bound violated", report, text)
    return report, text


COMMANDS = {
    "validate": cmd_validate,
    "dim": cmd_dim,
    "distance": cmd_distance,
    "css": cmd_css,
    "barrier": cmd_barrier,
    "fractal": cmd_fractal,
}


def _envelope(args, report: dict) -> dict:
    return {
        "tool": "xyzcode",
        "version": __version__,
        "command": args.command,
        "seed": args.seed,
        "cap": getattr(args, "cap", None),
        "budget": args.budget,
        "report": report,
    }


def _emit(args, report: dict | None, text: list[str], out) -> None:
    for line in text:
        print(line, file=out)
    if args.json and report is not None:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(_envelope(args, report), fh, sort_keys=True, indent=2)
            fh.write("\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, text = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        report, text = exc.partial if isinstance(exc.partial, tuple) else (None, [])
        _emit(args, report, text, sys.stdout)
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InconsistencyError as exc:
        _, report, text = exc.args
        _emit(args, report, text, sys.stdout)
        print(f"internal consistency failure: {exc.args[0]}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(args, report, text, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
