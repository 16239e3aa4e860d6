"""Command-line front end.

Subcommands: values, poles, shift, series, contour, continue, aaa, catalog.
Every command accepts --json for a schema-stable document and --check to
re-derive the result along an independent route and report the discrepancy.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .aaa import aaa_fit, bary_eval, derivative_at, find_real_features
from .asym import classify_poles, l_asy_eval, zeta_int_leq_alpha
from .catalog import ln_gamma_continued, model_from_spec
from .errors import PoleError, ZetakitError
from .evaluate import contour_zeta, continued_zeta, zeta_series
from .series import log_coeffs, zeta_pos_int, zeta_via_bell
from .shift import ShiftParams, shifted_values

_MODELS = ("riemann", "hurwitz", "airy", "pcf", "chf")


def _fmt(x) -> str:
    x = complex(x)
    if x.imag == 0.0:
        return f"{x.real + 0.0:.15g}"
    return f"{x.real:.15g}{x.imag:+.15g}j"


def _cnum(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


def _parse_n_range(text: str):
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _build_model(args):
    spec = args.model
    if spec.startswith("{"):
        return model_from_spec(spec)
    doc = {"model": spec}
    if args.a is not None:
        doc["a"] = complex(args.a) if "j" in str(args.a) else float(args.a)
    if args.b is not None:
        doc["b"] = complex(args.b) if "j" in str(args.b) else float(args.b)
    return model_from_spec(doc)


def _emit(args, doc, human_lines):
    if args.json:
        print(json.dumps(doc))
    else:
        for line in human_lines:
            print(line)


def _value_entry(model, n: int, check: bool):
    alpha = model.asym.alpha
    report = classify_poles(model.asym)
    entry = {"n": n}
    pole = report.pole_at(float(n))
    if pole is not None:
        entry.update(method="pole", order=pole.order,
                     residue={"re": pole.residue.real, "im": pole.residue.imag})
        return entry
    if n > alpha:
        val = zeta_pos_int(model.series, n, alpha)
        method = "recursion"
    elif n == 0:
        val = report.zeta0
        method = "continuation"
    else:
        j = model.asym.j_for_location(float(n))
        absent = j is None or model.asym.max_log_power(j) is None
        logc = log_coeffs(model.series) if n >= 1 else None
        val = zeta_int_leq_alpha(model.asym, logc, n)
        method = "structural-zero" if (n < 0 and absent) else "continuation"
    entry.update(method=method, value={"re": val.real, "im": val.imag})
    form = model.closed_forms.get(n)
    if form:
        entry["closed_form"] = form
    if check:
        other = None
        if method == "recursion" and 2 <= n <= 20:
            other = zeta_via_bell(model.series, n)
        elif model.log_deriv is not None and n != 0:
            other = continued_zeta(model, float(n))
        elif model.log_deriv is not None:
            other = continued_zeta(model, 1e-6)
        if other is not None:
            entry["check_discrepancy"] = abs(val - other)
    return entry


def cmd_values(args) -> int:
    model = _build_model(args)
    ns = _parse_n_range(args.n)
    entries = []
    failures = []
    for n in ns:
        try:
            entries.append(_value_entry(model, n, args.check))
        except ZetakitError as exc:
            failures.append((n, str(exc)))
    lines = []
    for e in entries:
        if e["method"] == "pole":
            lines.append(f"zeta({e['n']}) : pole of order {e['order']} "
                         f"(residue {_fmt(complex(e['residue']['re'], e['residue']['im']))})")
            continue
        v = complex(e["value"]["re"], e["value"]["im"])
        line = f"zeta({e['n']}) = {_fmt(v)}   [{e['method']}]"
        if "closed_form" in e:
            line += f"   = {e['closed_form']}"
        if "check_discrepancy" in e:
            line += f"   (check: {e['check_discrepancy']:.2e})"
        lines.append(line)
    doc = {"command": "values", "model": model.name, "params": _params_doc(model),
           "results": entries}
    _emit(args, doc, lines)
    for n, msg in failures:
        print(f"zeta({n}): {msg}", file=sys.stderr)
    return 1 if failures else 0


def _params_doc(model):
    out = {}
    for k, v in model.params.items():
        if isinstance(v, complex):
            out[k] = {"re": v.real, "im": v.imag}
        else:
            out[k] = v
    return out


def cmd_poles(args) -> int:
    model = _build_model(args)
    report = classify_poles(model.asym)
    entries = []
    for p in report.poles:
        e = {"location": p.location, "order": p.order,
             "residue": {"re": p.residue.real, "im": p.residue.imag}}
        if args.check:
            h1, h2 = 1e-3, 1e-4
            f1 = (h1 ** p.order) * l_asy_eval(model.asym, p.location + h1, args.R or 1.0)
            f2 = (h2 ** p.order) * l_asy_eval(model.asym, p.location + h2, args.R or 1.0)
            rich = (h1 * f2 - h2 * f1) / (h1 - h2)
            e["check_discrepancy"] = abs(rich - p.residue)
        entries.append(e)
    doc = {"command": "poles", "model": model.name, "params": _params_doc(model),
           "poles": entries,
           "zeta0": None if report.zeta0 is None else
           {"re": report.zeta0.real, "im": report.zeta0.imag},
           "zeta_prime0": None if report.zeta_prime0 is None else
           {"re": report.zeta_prime0.real, "im": report.zeta_prime0.imag}}
    lines = [f"pole at s = {p['location']:g}, order {p['order']}, "
             f"residue {_fmt(complex(p['residue']['re'], p['residue']['im']))}"
             + (f"   (check: {p['check_discrepancy']:.2e})" if "check_discrepancy" in p else "")
             for p in entries]
    if report.zeta0 is not None:
        lines.append(f"zeta(0) = {_fmt(report.zeta0)}")
    if report.zeta_prime0 is not None:
        lines.append(f"zeta'(0) = {_fmt(report.zeta_prime0)}")
    _emit(args, doc, lines)
    return 0


def cmd_shift(args) -> int:
    model = _build_model(args)
    shift = ShiftParams(_cnum(args.A), _cnum(args.B))
    ln_f_shift = None
    branch_note = None
    if model.name == "riemann" and shift.A == 1.0 and shift.B.imag == 0.0:
        ln_f_shift = -ln_gamma_continued(1.0 + shift.B)
    elif model.eval is not None:
        try:
            f_val, _ = model.eval(-shift.mu)
            ln_f_shift = complex(np.log(complex(f_val)))
            branch_note = ("ln F(-B/A) taken on the principal branch; "
                           "zeta'(0) is determined up to the branch choice")
        except ZetakitError:
            branch_note = ("evaluator cannot reach -B/A; zeta'(0) omitted")
    rep = shifted_values(model.asym, shift, ln_f_shifted=ln_f_shift,
                         n_values=[n for n in range(-6, 0)])
    entries = [{"location": p.location, "order": p.order,
                "residue": {"re": p.residue.real, "im": p.residue.imag}}
               for p in rep.report.poles]
    doc = {"command": "shift", "model": model.name, "params": _params_doc(model),
           "A": {"re": shift.A.real, "im": shift.A.imag},
           "B": {"re": shift.B.real, "im": shift.B.imag},
           "poles": entries,
           "zeta0": None if rep.report.zeta0 is None else
           {"re": rep.report.zeta0.real, "im": rep.report.zeta0.imag},
           "zeta_prime0": None if rep.report.zeta_prime0 is None or ln_f_shift is None
           else {"re": rep.report.zeta_prime0.real, "im": rep.report.zeta_prime0.imag},
           "values": {str(n): {"re": v.real, "im": v.imag}
                      for n, v in sorted(rep.values.items())},
           "flags": list(rep.flags) + ([branch_note] if branch_note else [])}
    lines = [f"transformed sequence A*a_n + B with A={_fmt(shift.A)}, B={_fmt(shift.B)}"]
    for p in rep.report.poles:
        lines.append(f"pole at s = {p.location:g}, order {p.order}, "
                     f"residue {_fmt(p.residue)}")
    if rep.report.zeta0 is not None:
        lines.append(f"zeta(0) = {_fmt(rep.report.zeta0)}")
    if rep.report.zeta_prime0 is not None and ln_f_shift is not None:
        lines.append(f"zeta'(0) = {_fmt(rep.report.zeta_prime0)}")
    for n, v in sorted(rep.values.items()):
        lines.append(f"zeta({n}) = {_fmt(v)}")
    for fl in doc["flags"]:
        lines.append(f"note: {fl}")
    _emit(args, doc, lines)
    return 0


def _point_command(args, which: str) -> int:
    model = _build_model(args)
    s = _cnum(args.s)
    kw = {}
    if args.R is not None:
        kw["R"] = args.R
    if args.tmax is not None:
        kw["t_max"] = args.tmax
    if args.tol is not None:
        kw["quad_tol"] = args.tol
    if which == "series":
        val = zeta_series(model.zeros, s, args.nterms)
    elif which == "contour":
        val = contour_zeta(model, s, **kw)
    else:
        val = continued_zeta(model, s, **kw)
    doc = {"command": which, "model": model.name, "params": _params_doc(model),
           "s": {"re": s.real, "im": s.imag},
           "value": {"re": val.real, "im": val.imag}}
    lines = [f"zeta({_fmt(s)}) = {_fmt(val)}   [{which}]"]
    if args.check:
        if which == "series":
            other = contour_zeta(model, s, **kw)
        elif which == "contour":
            other = continued_zeta(model, s, **kw)
        else:
            other = (zeta_series(model.zeros, s, 4000)
                     if (model.zeros is not None and s.real > model.alpha + 0.25)
                     else contour_zeta(model, s, **kw)
                     if s.real > model.alpha else None)
        if other is not None:
            doc["check_discrepancy"] = abs(val - other)
            lines.append(f"independent route discrepancy: {abs(val - other):.2e}")
    _emit(args, doc, lines)
    return 0


def cmd_aaa(args) -> int:
    model = _build_model(args)
    if model.zeros is None:
        raise ZetakitError(f"model {model.name!r} has no zero generator for sampling")
    lo, hi = 2.0, 8.0
    pts = np.linspace(lo, hi, args.npoints)
    samples = np.array([zeta_series(model.zeros, s, args.nterms) for s in pts])
    fit = aaa_fit(pts, samples, rel_tol=(args.tol or 1e-13))
    zeros, poles = find_real_features(fit, (-3.0, 0.0))
    v1 = bary_eval(fit, 1.0)
    v0 = bary_eval(fit, 0.0)
    d0 = derivative_at(fit, 0.0)
    vm = bary_eval(fit, -0.5)
    doc = {"command": "aaa", "model": model.name, "params": _params_doc(model),
           "degree": fit.degree, "max_residual": fit.max_residual,
           "converged": fit.converged,
           "features": {"zeros": list(map(float, zeros)),
                        "poles": list(map(float, poles))},
           "verification": {
               "zeta1": {"re": v1.real, "im": v1.imag},
               "zeta0": {"re": v0.real, "im": v0.imag},
               "zeta_prime0": {"re": d0.real, "im": d0.imag},
               "zeta_minus_half": {"re": vm.real, "im": vm.imag}}}
    lines = [
        f"fitted degree {fit.degree}, max relative residual {fit.max_residual:.2e}"
        + ("" if fit.converged else "  (tolerance not reached)"),
        f"real zeros in [-3, 0]: {[f'{z:.6f}' for z in zeros]}",
        f"real poles in [-3, 0]: {[f'{p:.6f}' for p in poles]}",
        f"zeta(1)  ~ {_fmt(v1)}",
        f"zeta(0)  ~ {_fmt(v0)}",
        f"zeta'(0) ~ {_fmt(d0)}",
        f"zeta(-1/2) ~ {_fmt(vm)}",
    ]
    _emit(args, doc, lines)
    return 0


def cmd_catalog(args) -> int:
    entries = [
        {"model": "riemann", "spec": {"model": "riemann"}},
        {"model": "hurwitz", "spec": {"model": "hurwitz", "a": 0.25}},
        {"model": "airy", "spec": {"model": "airy"}},
        {"model": "pcf", "spec": {"model": "pcf", "a": 1.0}},
        {"model": "chf", "spec": {"model": "chf", "a": 0.5, "b": 1.5}},
    ]
    doc = {"command": "catalog", "models": entries}
    lines = [f"{e['model']}: {json.dumps(e['spec'])}" for e in entries]
    _emit(args, doc, lines)
    return 0


def _add_common(p, with_s=False):
    p.add_argument("--model", required=True,
                   help="model name (%s) or a JSON spec" % "|".join(_MODELS))
    p.add_argument("--a", default=None, help="model parameter a")
    p.add_argument("--b", default=None, help="model parameter b")
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.add_argument("--check", action="store_true",
                   help="re-derive through an independent route")
    p.add_argument("--R", type=float, default=None, help="circle radius")
    p.add_argument("--tmax", type=float, default=None, help="ray cutoff")
    p.add_argument("--tol", type=float, default=None, help="tolerance override")
    if with_s:
        p.add_argument("--s", required=True, help="evaluation point (complex ok)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zetakit",
        description="zeta functions of complex sequences from characteristic-function data")
    ap.add_argument("--version", action="version", version=f"zetakit {__version__}")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("values", help="special values at integers")
    _add_common(p)
    p.add_argument("--n", required=True, help="integer or range lo..hi")
    p.set_defaults(fn=cmd_values)

    p = sub.add_parser("poles", help="pole locations, orders, residues")
    _add_common(p)
    p.set_defaults(fn=cmd_poles)

    p = sub.add_parser("shift", help="linear sequence transformation A*a_n + B")
    _add_common(p)
    p.add_argument("--A", required=True, help="scale factor (complex ok)")
    p.add_argument("--B", required=True, help="offset (complex ok)")
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("series", help="direct series summation")
    _add_common(p, with_s=True)
    p.add_argument("--nterms", type=int, default=10000)
    p.set_defaults(fn=lambda a: _point_command(a, "series"))

    p = sub.add_parser("contour", help="deformed-contour quadrature")
    _add_common(p, with_s=True)
    p.set_defaults(fn=lambda a: _point_command(a, "contour"))

    p = sub.add_parser("continue", help="analytically continued representation")
    _add_common(p, with_s=True)
    p.set_defaults(fn=lambda a: _point_command(a, "continue"))

    p = sub.add_parser("aaa", help="rational continuation of series samples")
    _add_common(p)
    p.add_argument("--npoints", type=int, default=100)
    p.add_argument("--nterms", type=int, default=10000)
    p.set_defaults(fn=cmd_aaa)

    p = sub.add_parser("catalog", help="list bundled models")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ZetakitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
