"""Command-line interface.

Subcommands: gen (write a frame file), analyze (all bound checks and
invariants), optimize (coherence search), verify (file validation).

Exit codes: 0 success, 1 a proven bound failed to hold (an internal bug
canary, since the inequalities are unconditional), 2 usage or
precondition error, 3 I/O or format error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import constructions, frameio
from .algebra import AlgebraElement, leq
from .bounds import (BoundReport, generalized_welch_check, verify_frame)
from .errors import (CapacityError, ConfigError, DegenerateVectorError,
                     DimensionError, FrameFormatError, ModframeError,
                     UnitFrameError)
from .module import (Frame, frame_potential, gram_table, is_equiangular,
                     is_frame, is_tight, mrms)
from .optimize import (SearchConfig, certify_equality, grassmannian_search,
                       sic_search)
from .symtensor import sym_spectrum_check

_KINDS = ("random", "onb", "mercedes", "sic-d2")


def _pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in values]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modframe",
        description="Frames over finite-spectrum commutative C*-algebras: "
                    "generation, bound verification, and coherence search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a frame file")
    p_gen.add_argument("--spectrum", type=int, default=1, metavar="K",
                       help="number of spectrum points (default 1)")
    p_gen.add_argument("--dim", type=int, metavar="D", help="module rank d")
    p_gen.add_argument("--count", type=int, metavar="N", help="number of vectors")
    p_gen.add_argument("--seed", type=int, default=0, help="random seed (kind random)")
    p_gen.add_argument("--kind", choices=_KINDS, default="random")
    p_gen.add_argument("--out", required=True, help="output path")
    p_gen.set_defaults(func=cmd_gen)

    p_an = sub.add_parser("analyze", help="verify all bounds and invariants")
    p_an.add_argument("--in", dest="path", required=True, help="frame file")
    p_an.add_argument("--max-order", type=int, default=3, metavar="M")
    p_an.add_argument("--format", choices=("json", "text"), default="text")
    p_an.add_argument("--sym-check", action="store_true",
                      help="also run the per-point eigenvalue checks on the "
                           "lifted frame operators")
    p_an.add_argument("--allow-nonunit", action="store_true",
                      help="accept non-unit frames; only the normalization-free "
                           "bound is checked")
    p_an.set_defaults(func=cmd_analyze)

    p_opt = sub.add_parser("optimize", help="search for a low-coherence frame")
    p_opt.add_argument("--spectrum", type=int, default=1, metavar="K")
    p_opt.add_argument("--dim", type=int, required=True, metavar="D")
    p_opt.add_argument("--count", type=int, metavar="N",
                       help="number of vectors (defaults to d^2 with --sic)")
    p_opt.add_argument("--restarts", type=int, default=10)
    p_opt.add_argument("--iters", type=int, default=5000)
    p_opt.add_argument("--seed", type=int, default=0)
    p_opt.add_argument("--temperature", type=float, default=0.1)
    p_opt.add_argument("--cooling", type=float, default=0.99)
    p_opt.add_argument("--step", type=float, default=0.5)
    p_opt.add_argument("--tolerance", type=float, default=1e-6)
    p_opt.add_argument("--sic", action="store_true",
                       help="equiangular target 1/(d+1) with n = d^2")
    p_opt.add_argument("--out", required=True, help="result JSON path")
    p_opt.add_argument("--frame-out", help="also write the best frame alone")
    p_opt.add_argument("--trajectory-csv",
                       help="write per-iteration (restart, iteration, smoothed, "
                            "coherence) rows")
    p_opt.set_defaults(func=cmd_optimize)

    p_ver = sub.add_parser("verify", help="validate a frame file")
    p_ver.add_argument("--in", dest="path", required=True, help="frame file")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "random":
        if args.dim is None or args.count is None:
            print("gen --kind random needs --dim and --count", file=sys.stderr)
            return 2
        if args.dim < 1 or args.count < 1 or args.spectrum < 1:
            print("shape values must be positive", file=sys.stderr)
            return 2
        frame = constructions.random_unit_frame(args.spectrum, args.dim,
                                                args.count, args.seed)
        metadata = {"kind": kind, "seed": args.seed}
    elif kind == "onb":
        if args.dim is None:
            print("gen --kind onb needs --dim", file=sys.stderr)
            return 2
        if args.count is not None and args.count != args.dim:
            print(f"onb requires count = dim, got count={args.count} "
                  f"dim={args.dim}", file=sys.stderr)
            return 2
        frame = constructions.canonical_basis(args.spectrum, args.dim)
        metadata = {"kind": kind}
    elif kind == "mercedes":
        if ((args.dim is not None and args.dim != 2)
                or (args.count is not None and args.count != 3)):
            print("mercedes is fixed at dim=2, count=3", file=sys.stderr)
            return 2
        frame = constructions.mercedes_frame(args.spectrum)
        metadata = {"kind": kind}
    else:  # sic-d2
        if ((args.dim is not None and args.dim != 2)
                or (args.count is not None and args.count != 4)):
            print("sic-d2 is fixed at dim=2, count=4", file=sys.stderr)
            return 2
        frame = constructions.sic_d2_frame(args.spectrum)
        # self-certify instead of trusting the fiducial coefficients
        equi, gamma = is_equiangular(frame, 1e-9)
        if not equi or abs(gamma.norm() - 1.0 / 3.0) > 1e-9:
            print("internal error: built-in configuration failed its "
                  "equiangularity check", file=sys.stderr)
            return 1
        metadata = {"kind": kind}

    frameio.save_frame(args.out, frame, metadata)
    return 0


def _mrms_block(frame: Frame) -> dict:
    element = mrms(frame)
    norm = element.norm()
    block = {"values": _pairs(element.values), "norm": norm,
             "norm_at_most_one": norm <= 1.0 + 1e-9}
    if frame.n >= frame.d:
        lower = math.sqrt((frame.n - frame.d) / (frame.d * (frame.n - 1)))
        block["lower_bound"] = lower
        block["holds"] = leq(AlgebraElement.constant(lower, frame.spectrum),
                             element, 1e-9)
    else:
        block["lower_bound"] = None
        block["holds"] = True
    return block


def _mfp_block(frame: Frame) -> dict:
    element = frame_potential(frame)
    n, d = frame.n, frame.d
    lower = n * n / d
    upper = float(n * n)
    norm = element.norm()
    order_ok = leq(AlgebraElement.constant(lower, frame.spectrum), element, 1e-9)
    return {"values": _pairs(element.values), "norm": norm,
            "lower_bound": lower, "upper_bound": upper,
            "holds": order_ok and norm <= upper + 1e-9}


def _analysis_document(frame: Frame, max_order: int, with_sym: bool) -> dict:
    report = verify_frame(frame, max_order)
    doc = report.to_dict()

    bounds_ok, lower, upper = is_frame(frame)
    doc["frame_bounds"] = {"is_frame": bounds_ok, "lower": lower, "upper": upper}
    tight, bound, parseval = is_tight(frame)
    doc["tightness"] = {"tight": tight, "bound": bound, "parseval": parseval}
    if frame.n >= 2:
        equi, gamma = is_equiangular(frame)
        doc["equiangularity"] = {"equiangular": equi, "gamma": _pairs(gamma.values)}
    doc["mrms"] = _mrms_block(frame) if frame.n >= 2 else None
    doc["mfp"] = _mfp_block(frame)
    certificate = certify_equality(frame)
    doc["equality_certificate"] = certificate.to_dict()

    if with_sym:
        checks = []
        for m in range(1, max_order + 1):
            sym = sym_spectrum_check(frame, m)
            checks.append({
                "m": m,
                "rank": sym.rank,
                "inequality_holds": sym.inequality_holds,
                "points": [
                    {"point": r.point, "trace": r.trace,
                     "trace_square": r.trace_square,
                     "cross_power_sum": r.cross_power_sum,
                     "trace_ok": r.trace_ok,
                     "trace_square_ok": r.trace_square_ok,
                     "cauchy_schwarz_ok": r.cauchy_schwarz_ok}
                    for r in sym.points
                ],
            })
        doc["sym_checks"] = checks

    violations = not report.all_hold
    if doc["mrms"] is not None:
        violations = violations or not doc["mrms"]["holds"] \
            or not doc["mrms"]["norm_at_most_one"]
    violations = violations or not doc["mfp"]["holds"]
    violations = violations or not certificate.implication_holds
    if with_sym:
        violations = violations or any(not c["inequality_holds"]
                                       for c in doc["sym_checks"])
    doc["all_bounds_hold"] = not violations
    return doc


def _render_text(doc: dict) -> str:
    lines = []
    lines.append(f"frame: n={doc['n']} d={doc['d']} K={doc['K']}")
    lines.append(f"coherence: {doc['coherence']:.12g} "
                 f"(witness pair {tuple(doc['witness'])})")
    lines.append("order  max_bound      coherence^2m   holds  equality")
    for o in doc["orders"]:
        tag = " vacuous" if o["vacuous"] else ""
        lines.append(f"  m={o['m']}  {o['max_bound']:< 14.8g} "
                     f"{o['max_lhs']:< 14.8g} {str(o['holds']):5}  "
                     f"{str(o['equality']):5}{tag}")
    lines.append("order  sum_bound      sum_lhs        holds  equality  middle")
    for s in doc["sums"]:
        lines.append(f"  m={s['m']}  {s['sum_bound']:< 14.8g} "
                     f"{s['sum_lhs']:< 14.8g} {str(s['holds']):5}  "
                     f"{str(s['equality']):8}  {str(s['middle_holds'])}")
    comp = doc["comparators"]
    lines.append(
        "comparators: gerzon={gerzon} bukh_cox={bukh_cox} orthoplex={orthoplex}"
        " (applicable={orthoplex_applicable}) levenstein={levenstein}"
        " exponential={exponential}".format(**comp))
    fb = doc["frame_bounds"]
    lines.append(f"frame bounds: a={fb['lower']:.10g} b={fb['upper']:.10g} "
                 f"(frame={fb['is_frame']})")
    ti = doc["tightness"]
    lines.append(f"tight: {ti['tight']} (bound {ti['bound']:.10g}, "
                 f"parseval {ti['parseval']})")
    if doc.get("equiangularity") is not None:
        eq = doc["equiangularity"]
        lines.append(f"equiangular: {eq['equiangular']}")
    if doc.get("mrms") is not None:
        lines.append(f"rms cross relation norm: {doc['mrms']['norm']:.10g} "
                     f"(holds={doc['mrms']['holds']})")
    lines.append(f"frame potential norm: {doc['mfp']['norm']:.10g} in "
                 f"[{doc['mfp']['lower_bound']:.10g}, {doc['mfp']['upper_bound']:.10g}] "
                 f"(holds={doc['mfp']['holds']})")
    cert = doc["equality_certificate"]
    if cert["vacuous"]:
        lines.append("equality certificate: vacuous (n <= d)")
    else:
        lines.append(f"equality certificate: gamma^2={cert['gamma_sq']:.10g} "
                     f"equiangular={cert['equiangular']} "
                     f"equality={cert['coherence_equality']}")
    for check in doc.get("sym_checks", []):
        lines.append(f"sym order {check['m']}: rank={check['rank']} "
                     f"holds={check['inequality_holds']}")
    lines.append(f"all bounds hold: {doc['all_bounds_hold']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    if args.max_order < 1:
        print("--max-order must be >= 1", file=sys.stderr)
        return 2
    frame, _ = frameio.load_frame(args.path)

    if not frame.is_unit():
        if not args.allow_nonunit:
            bad = frame.nonunit_indices()
            print(f"frame is not unit inner product (vectors {bad}); "
                  "pass --allow-nonunit to analyze anyway", file=sys.stderr)
            return 2
        checks = []
        for m in range(1, args.max_order + 1):
            res = generalized_welch_check(frame, m)
            checks.append({
                "m": m, "holds": res.holds,
                "lhs": _pairs(res.lhs.values), "rhs": _pairs(res.rhs.values),
                "max_lhs": res.max_lhs, "max_rhs": res.max_rhs,
                "max_holds": res.max_holds,
            })
        ok = all(c["holds"] and c["max_holds"] is not False for c in checks)
        doc = {"n": frame.n, "d": frame.d, "K": frame.K,
               "allow_nonunit": True, "generalized": checks,
               "all_bounds_hold": ok}
        if args.format == "json":
            print(frameio.dumps(doc))
        else:
            for c in checks:
                print(f"order m={c['m']}: normalization-free bound holds={c['holds']} "
                      f"max-form holds={c['max_holds']}")
            print(f"all bounds hold: {ok}")
        return 0 if ok else 1

    if frame.n < 2:
        print("analysis needs n >= 2 (coherence is undefined)", file=sys.stderr)
        return 2

    doc = _analysis_document(frame, args.max_order, args.sym_check)
    if args.format == "json":
        print(frameio.dumps(doc))
    else:
        print(_render_text(doc))
    return 0 if doc["all_bounds_hold"] else 1


def cmd_optimize(args) -> int:
    count = args.count
    if args.sic:
        if count is None:
            count = args.dim**2
        elif count != args.dim**2:
            print(f"--sic requires count = dim^2 = {args.dim ** 2}, "
                  f"got {count}", file=sys.stderr)
            return 2
    elif count is None:
        print("optimize needs --count (or --sic)", file=sys.stderr)
        return 2

    cfg = SearchConfig(
        spectrum=args.spectrum, dim=args.dim, count=count,
        restarts=args.restarts, max_iters=args.iters,
        initial_temperature=args.temperature, cooling=args.cooling,
        step=args.step, seed=args.seed, tolerance=args.tolerance,
        target=(1.0 / (args.dim + 1) if args.sic else None),
    )
    result = sic_search(cfg) if args.sic else grassmannian_search(cfg)

    doc = {
        "summary": result.summary(),
        "best_frame": frameio.frame_to_dict(
            result.best_frame, {"kind": "optimized", "seed": args.seed}),
        "trajectories": [
            [[it, val, coh] for it, val, coh in t] for t in result.trajectories
        ],
    }
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(frameio.dumps(doc))
        fh.write("\n")
    if args.frame_out:
        frameio.save_frame(args.frame_out, result.best_frame,
                           {"kind": "optimized", "seed": args.seed})
    if args.trajectory_csv:
        with open(args.trajectory_csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["restart", "iteration", "smoothed", "coherence"])
            for r, t in enumerate(result.trajectories):
                for it, val, coh in t:
                    writer.writerow([r, it, f"{val:.17g}", f"{coh:.17g}"])

    goal = result.target if result.target is not None else result.welch_bound
    print(f"best coherence {result.best_coherence:.10g} "
          f"(squared {result.best_coherence ** 2:.10g}), "
          f"target {goal:.10g}, attained {result.attained}")
    return 0


def cmd_verify(args) -> int:
    frame, _ = frameio.load_frame(args.path)

    gram = gram_table(frame)
    herm = gram.hermitian_residual()
    if herm > 1e-8:
        print(f"invariant failed: Gram Hermitian symmetry "
              f"(residual {herm:.3g})", file=sys.stderr)
        return 3
    residual = frame.unit_residual()
    if residual > 1e-8:
        print(f"invariant failed: unit Gram diagonal "
              f"(residual {residual:.3g})", file=sys.stderr)
        return 3
    potential = frame_potential(frame)
    check = potential.is_positive(1e-9)
    if not check.ok:
        print(f"invariant failed: frame potential positivity "
              f"(value {check.worst_value} at point {check.worst_point})",
              file=sys.stderr)
        return 3
    print("ok")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FrameFormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, UnitFrameError, DegenerateVectorError, CapacityError,
            DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ModframeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
