"""Command-line surface: exact verifications, constructions and reports.

Every invocation prints exactly one JSON report document on stdout and exits
with 0 (pass), 1 (a verification answered no), 2 (input error), or
3 (inconclusive: a semi-decision exhausted its depth).  Output is
byte-deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import construct as cons
from . import figures, msf2d, serialize, spectral
from .errors import InputError, PreconditionError
from .intervals import Interval, IntervalSet
from .serialize import format_rational
from .spectral import StepFn
from .torus import check_S3, fold_multiplicity

EXIT_CODES = {"pass": 0, "fail": 1, "error": 2, "inconclusive": 3}


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as input errors (exit code 2)."""

    def error(self, message):  # noqa: A003 - argparse API
        raise InputError(f"{message}\n{self.format_usage()}")


def _witness(reason: str, iv: Interval | None = None) -> dict:
    out: dict[str, Any] = {"reason": reason}
    if iv is not None:
        out["interval"] = serialize.interval_to_json(iv)
    return out


def _report(command: str, status: str, witnesses=(), defects=None, data=None) -> dict:
    report: dict[str, Any] = {
        "command": command,
        "status": status,
        "witnesses": list(witnesses),
    }
    if defects is not None:
        report["defects"] = serialize.defect_report_to_json(defects)
    report["data"] = data if data is not None else {}
    return report


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _load_interval_set(path: str) -> IntervalSet:
    return serialize.interval_set_from_json(_load_json(path))


def _load_step_fn(path: str) -> StepFn:
    return serialize.step_fn_from_json(_load_json(path))


def _load_mat2(path_or_id: str) -> msf2d.Mat2:
    if path_or_id == "id":
        return msf2d.Mat2.identity()
    return serialize.mat2_from_json(_load_json(path_or_id))


# ------------------------------------------------------------- handlers


def _cmd_verify(args) -> dict:
    command = f"verify {args.kind}"
    if args.kind == "wavelet-set":
        w = _load_interval_set(args.file)
        verdict = cons.verify_wavelet_set(w)
        data = {"measure": format_rational(w.measure())}
        if verdict.passed:
            return _report(command, "pass", data=data)
        return _report(command, "fail", [_witness(verdict.reason, verdict.witness)], data=data)
    if args.kind == "scaling-set":
        s = _load_interval_set(args.file)
        s1, s2, s3 = cons.check_S1(s), cons.check_S2(s), check_S3(s)
        witnesses = []
        if not s1:
            witnesses.append(_witness("S1: escapes its double", cons.s1_witness(s)))
        if not s2:
            witnesses.append(_witness("S2: no punctured neighborhood of 0"))
        if not s3:
            bad = fold_multiplicity(s).where_not(1) if not s.is_empty else None
            witnesses.append(
                _witness("S3: translates do not tile with multiplicity one",
                         bad.parts[0] if bad and bad.parts else Interval(0, 1))
            )
        data = {"S1": s1, "S2": s2, "S3": s3, "measure": format_rational(s.measure())}
        return _report(command, "pass" if s1 and s2 and s3 else "fail", witnesses, data=data)
    g = _load_step_fn(args.file)
    verdict = spectral.validate_scaling_spectrum(g)
    if verdict.passed:
        return _report(command, "pass")
    return _report(
        command, "fail",
        [_witness(f"{verdict.condition}: {verdict.detail}", verdict.witness)],
        data={"condition": verdict.condition},
    )


def _scaling_result_data(result: cons.ScalingSetResult) -> dict:
    return {
        "s": serialize.interval_set_to_json(result.s),
        "w": serialize.interval_set_to_json(result.w),
        "fast_path": result.fast_path,
        "s_measure": format_rational(result.s.measure()),
        "w_measure": format_rational(result.w.measure()),
    }


def _cmd_construct_scaling_set(args) -> dict:
    sprime = _load_interval_set(args.file)
    result = cons.lemma_r3_construct(sprime, args.depth_n, args.depth_j)
    return _report("construct scaling-set", "pass", defects=result.defects,
                   data=_scaling_result_data(result))


def _cmd_construct_rze(args) -> dict:
    g = _load_step_fn(args.spectrum)
    result = cons.rze_pipeline(g, args.depth_n, args.depth_j)
    data = {
        "s": serialize.interval_set_to_json(result.s),
        "w": serialize.interval_set_to_json(result.w),
        "supp_psi": serialize.interval_set_to_json(result.supp_psi),
        "contained": result.contained,
        "leftover_measure": format_rational(result.leftover_measure),
        "psi_spectrum": serialize.step_fn_to_json(result.psi_spectrum),
    }
    status = "pass" if result.contained else "inconclusive"
    witnesses = []
    if not result.contained:
        witnesses.append(_witness(
            "containment not exact at this truncation depth; escape within certified bound"
        ))
    return _report("construct rze", status, witnesses, defects=result.defects, data=data)


def _outcome_json(o: spectral.CheckOutcome) -> dict:
    out: dict[str, Any] = {"status": o.status}
    if o.witness is not None:
        out["witness"] = serialize.interval_to_json(o.witness)
    if o.note:
        out["note"] = o.note
    return out


def _cmd_dimfun(args) -> dict:
    h = _load_step_fn(args.file)
    depth = args.depth
    window = spectral.dimension_function(h, depth)
    checks = spectral.check_D1_D4(spectral.dimension_function(h, depth + 2), depth)
    mra = spectral.mra_check(h, depth)
    conditions = {
        "D1": _outcome_json(checks.d1),
        "D2": _outcome_json(checks.d2),
        "D3": _outcome_json(checks.d3),
        "D4": _outcome_json(checks.d4),
    }
    data = {
        "window": serialize.dim_fn_window_to_json(window),
        "conditions": conditions,
        "mra": {
            "status": mra.status,
            "witness": serialize.interval_to_json(mra.witness) if mra.witness else None,
            "note": mra.note,
        },
    }
    failed = [name for name, c in conditions.items() if c["status"] == "fail"]
    witnesses = [
        _witness(f"{name}: certified violation",
                 Interval(*(Fraction(x) for x in conditions[name]["witness"]))
                 if "witness" in conditions[name] else None)
        for name in failed
    ]
    return _report("dimfun", "fail" if failed else "pass", witnesses, data=data)


def _calderon_data(res: spectral.CalderonResult) -> dict:
    if res.diverges:
        return {"diverges": True}
    return {
        "diverges": False,
        "min": format_rational(res.min_value),
        "max": format_rational(res.max_value),
        "constant_one": res.is_one,
        "annulus": [
            {"interval": serialize.interval_to_json(iv), "value": format_rational(v)}
            for iv, v in res.atoms
        ],
    }


def _cmd_calderon(args) -> dict:
    h = _load_step_fn(args.file)
    res = spectral.calderon(h)
    witnesses = []
    if res.diverges:
        witnesses.append(_witness("sum diverges: support reaches 0", res.divergence_witness))
    elif not res.is_one:
        bad = next((iv, v) for iv, v in res.atoms if v != 1)
        witnesses.append(_witness(f"sum equals {format_rational(bad[1])} here", bad[0]))
    status = "pass" if (not res.diverges and res.is_one) else "fail"
    return _report("calderon", status, witnesses, data=_calderon_data(res))


def _cmd_tq(args) -> dict:
    psi = _load_step_fn(args.file)
    res = spectral.tq_check(psi, args.alpha)
    data = {
        "alpha": args.alpha,
        "sum": serialize.step_fn_to_json(res.fn),
    }
    if res.zero:
        return _report("tq", "pass", data=data)
    return _report("tq", "fail", [_witness("orthogonality sum is nonzero", res.witness)], data=data)


def _orthonormality_data(rep: spectral.OrthonormalityReport) -> dict:
    return {
        "norm_sq": format_rational(rep.norm_sq),
        "calderon": _calderon_data(rep.calderon),
        "alphas_checked": list(rep.alphas_checked),
        "tq_failures": [
            {"alpha": a, "interval": serialize.interval_to_json(iv)}
            for a, iv in rep.tq_failures
        ],
        "notes": list(rep.notes),
    }


def _cmd_orthonormal(args) -> dict:
    psi = _load_step_fn(args.file)
    rep = spectral.orthonormality_check(psi)
    witnesses = []
    if not rep.passed:
        if rep.calderon.diverges or not rep.calderon.is_one:
            witnesses.append(_witness("dilation sum is not identically 1"))
        for a, iv in rep.tq_failures:
            witnesses.append(_witness(f"orthogonality sum nonzero at shift {a}", iv))
        if rep.norm_sq != 1:
            witnesses.append(_witness(f"squared norm is {format_rational(rep.norm_sq)}"))
    return _report("orthonormal", "pass" if rep.passed else "fail", witnesses,
                   data=_orthonormality_data(rep))


def _cmd_psib(args) -> dict:
    rep = spectral.psi_b_report(args.b)
    data = {
        "b": format_rational(rep.b),
        "norm_sq": format_rational(rep.norm_sq),
        "calderon": _calderon_data(rep.calderon),
        "tq_failures": [
            {"alpha": a, "interval": serialize.interval_to_json(iv)}
            for a, iv in rep.tq_failures
        ],
        "orthonormal": rep.orthonormal,
        "table_row": rep.table_row,
        "consistent": rep.consistent,
        "notes": list(rep.notes),
    }
    return _report("psib", "pass", data=data)


def _cmd_msf2d(args) -> dict:
    a = _load_mat2(args.matrix)
    p = _load_mat2(args.lattice)
    res = msf2d.wavelet_set_exists(a, p)
    data = {
        "verdict": res.verdict,
        "detail": res.detail,
        "unit_eigenvalue": res.unit_eigenvalue,
        "witness": list(res.witness) if res.witness else None,
    }
    if res.verdict == "exists":
        return _report("msf2d", "pass", data=data)
    if res.verdict == "not_exists":
        return _report("msf2d", "fail", [{"reason": res.detail, "lattice_point": list(res.witness)}],
                       data=data)
    return _report("msf2d", "error", [{"reason": res.detail}], data=data)


def _cmd_lce(args) -> dict:
    a = _load_mat2(args.matrix)
    p = _load_mat2(args.lattice)
    rep = msf2d.lce_report(a, p, args.jmin, args.jmax, args.c)
    data = {
        "c": format_rational(rep.c),
        "rows": [
            {
                "j": row.j,
                "count": row.count,
                "bound_base": format_rational(row.bound_base),
                "ratio": format_rational(row.ratio),
            }
            for row in rep.rows
        ],
        "note": rep.note,
    }
    if rep.all_bounded:
        return _report("lce", "pass", data=data)
    return _report("lce", "fail", [{"reason": f"ratio exceeds C at j = {rep.witness_j}"}], data=data)


def _cmd_plot(args) -> dict:
    obj = serialize.load_typed(_load_json(args.file))
    if isinstance(obj, msf2d.Mat2):
        raise InputError("matrices have no figure rendering; plot an interval set, "
                         "step function or dimension-function window")
    n = figures.emit_figure(obj, args.format, args.out)
    return _report("plot", "pass", data={"out": args.out, "format": args.format, "bytes": n})


# --------------------------------------------------------------- parser


def build_parser() -> _Parser:
    parser = _Parser(prog="waveset", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = sub.add_parser("verify", help="exact verification of sets and spectra")
    verify.add_argument("kind", choices=["scaling-set", "wavelet-set", "spectrum"])
    verify.add_argument("file")
    verify.set_defaults(handler=_cmd_verify)

    con = sub.add_parser("construct", help="scaling-set and wavelet-set construction")
    csub = con.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    cs = csub.add_parser("scaling-set")
    cs.add_argument("file")
    _add_depths(cs)
    cs.set_defaults(handler=_cmd_construct_scaling_set)
    cr = csub.add_parser("rze")
    cr.add_argument("--spectrum", required=True)
    _add_depths(cr)
    cr.set_defaults(handler=_cmd_construct_rze)

    dim = sub.add_parser("dimfun", help="dimension function window and its conditions")
    dim.add_argument("file")
    dim.add_argument("--depth", type=int, default=20)
    dim.set_defaults(handler=_cmd_dimfun)

    cal = sub.add_parser("calderon", help="dyadic dilation sum on the unit annulus")
    cal.add_argument("file")
    cal.set_defaults(handler=_cmd_calderon)

    tq = sub.add_parser("tq", help="translation-orthogonality sum for one odd shift")
    tq.add_argument("file")
    tq.add_argument("--alpha", type=int, required=True)
    tq.set_defaults(handler=_cmd_tq)

    ortho = sub.add_parser("orthonormal", help="full orthonormality certification")
    ortho.add_argument("file")
    ortho.set_defaults(handler=_cmd_orthonormal)

    psib = sub.add_parser("psib", help="band-pair family diagnostics")
    psib.add_argument("--b", required=True)
    psib.set_defaults(handler=_cmd_psib)

    m2 = sub.add_parser("msf2d", help="2D wavelet-set existence decision")
    m2.add_argument("--matrix", required=True)
    m2.add_argument("--lattice", required=True, help="mat2 JSON file or 'id'")
    m2.set_defaults(handler=_cmd_msf2d)

    lce = sub.add_parser("lce", help="lattice counting probe")
    lce.add_argument("--matrix", required=True)
    lce.add_argument("--lattice", required=True, help="mat2 JSON file or 'id'")
    lce.add_argument("--jmin", type=int, required=True)
    lce.add_argument("--jmax", type=int, required=True)
    lce.add_argument("--c", required=True)
    lce.set_defaults(handler=_cmd_lce)

    plot = sub.add_parser("plot", help="emit a CSV table or SVG figure")
    plot.add_argument("file")
    plot.add_argument("--format", choices=["csv", "svg"], required=True)
    plot.add_argument("--out", required=True)
    plot.set_defaults(handler=_cmd_plot)

    return parser


def _add_depths(p: argparse.ArgumentParser) -> None:
    p.add_argument("--depth-n", type=int, default=cons.DEFAULT_DEPTH_N, dest="depth_n")
    p.add_argument("--depth-j", type=int, default=cons.DEFAULT_DEPTH_J, dest="depth_j")


def run(argv: list[str]) -> int:
    """Execute one command; print the JSON report; return the exit code."""
    command_label = " ".join(t for t in argv[:2] if not t.startswith("-")) or "waveset"
    try:
        args = build_parser().parse_args(argv)
        report = args.handler(args)
    except PreconditionError as exc:
        witness = exc.witness if isinstance(exc.witness, Interval) else None
        report = _report(command_label, "error",
                         [_witness(f"{exc.condition}: {exc}", witness)],
                         data={"condition": exc.condition})
    except InputError as exc:
        witness = getattr(exc, "witness", None)
        report = _report(command_label, "error",
                         [_witness(str(exc), witness if isinstance(witness, Interval) else None)])
    print(json.dumps(report, indent=2))
    return EXIT_CODES[report["status"]]


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
