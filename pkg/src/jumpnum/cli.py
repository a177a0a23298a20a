"""The ``jumpnum`` command line.

Exit status is 0 when everything requested succeeded, 1 when a verification
check failed, and 2 for unusable input (parse errors, unmet hypotheses).
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Sequence

from . import io
from .algebra import MonomialIdeal, SparsePolynomial, default_names, format_rational, parse_rational
from .graded import (
    DiagonalFamily,
    cluster_diagnostics,
    diagonal_jumps,
    hyperbola_jumps,
    nonperiodicity_demo,
)
from .groebner import StepCapExceeded, groebner
from .hypersurface import DegenerateError, divisor_jumps
from .jacobian import HypothesisError, ar_bounds, jac_m, jacobian_ideal, milnor, thm_4_2_check, tyurina
from .jumping import jumps_upto
from .suites import SUITE_NAMES, bs_input_case, run_suite
from .svg import ruler_svg, spectrum_csv

log = logging.getLogger("jumpnum")


class UsageError(Exception):
    pass


def _short(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _names(d: int) -> list[str]:
    return ["s", "t"] if d == 2 else default_names(d)


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


# -- jumps --------------------------------------------------------------------------------

def _load_spectrum(kind: str, path: str, c_max: Fraction, assume: bool):
    doc = io.load_document(path)
    if kind == "monomial":
        ideal = io.parse_ideal(doc)
        spec = jumps_upto(ideal, c_max)
        return {
            "label": ideal.to_string(_names(ideal.dimension)),
            "jumps": list(spec.jumps),
            "multiplicities": None if spec.multiplicities is None else list(spec.multiplicities),
            "record": {"input": path, "kind": "monomial", **spec.to_record()},
            "length": None,
        }
    f = io.parse_polynomial(doc)
    spec = divisor_jumps(f, c_max, assume_nondegenerate=assume)
    record = {
        "input": path,
        "kind": "polynomial",
        "cutoff": format_rational(c_max),
        "jumps": [format_rational(x) for x in spec.jumps],
        "jumping_length": spec.jumping_length,
    }
    return {
        "label": f.to_string(_names(f.dimension)),
        "jumps": list(spec.jumps),
        "multiplicities": None,
        "record": record,
        "length": spec.jumping_length,
    }


def cmd_jumps(args, out) -> int:
    if args.multiplicities and args.kind == "poly":
        raise UsageError("--multiplicities applies to monomial ideals only")
    spectra = [_load_spectrum(args.kind, p, args.max, args.assume_nondegenerate) for p in args.files]
    if args.plot == "svg":
        _emit(ruler_svg([(s["label"], s["jumps"]) for s in spectra], args.max), out)
        return 0
    if args.plot == "csv":
        for i, s in enumerate(spectra):
            if len(spectra) > 1:
                out.write(f"# {s['label']}\n")
            out.write(spectrum_csv(s["jumps"], s["multiplicities"]))
        return 0
    if args.format == "structured":
        _emit(io.dumps({"command": "jumps", "spectra": [s["record"] for s in spectra]}), out)
        return 0
    for s in spectra:
        if len(spectra) > 1:
            out.write(f"{s['label']}:\n")
        line = " ".join(_short(x) for x in s["jumps"]) or "(no jumps up to the cutoff)"
        if s["length"] is not None:
            line += f", length {s['length']}"
        out.write(line + "\n")
        if args.multiplicities:
            if s["multiplicities"] is None:
                out.write("multiplicities: not defined (ideal does not have finite colength)\n")
                continue
            out.write("value  multiplicity\n")
            for x, m in zip(s["jumps"], s["multiplicities"]):
                out.write(f"{_short(x):>5}  {m}\n")
            kappa = [x for x, m in zip(s["jumps"], s["multiplicities"]) for _ in range(m)]
            out.write("kappa: " + " ".join(_short(x) for x in kappa) + "\n")
    return 0


# -- verify -------------------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    extra = []
    if args.input:
        if args.suite != "bs":
            raise UsageError("--input is only used by the bs suite")
        doc = io.load_document(args.input)
        roots = io.parse_roots(doc)
        if args.poly:
            f = io.parse_polynomial(io.load_document(args.poly))
        elif "polynomial" in doc:
            if not isinstance(doc["polynomial"], dict):
                raise io.InputError("polynomial", "expected a polynomial document")
            f = io.parse_polynomial(doc["polynomial"])
        else:
            raise io.InputError("polynomial", "missing; add it to the roots file or pass --poly")
        extra.append(bs_input_case(args.input, f, roots, args.poly))
    report = run_suite(args.suite, trials=args.trials, seed=args.seed, instance=args.instance, extra=extra, jobs=args.jobs)
    if args.format == "structured":
        _emit(io.dumps(report.to_record()), out)
    else:
        for r in report.instances:
            status = "ok  " if r.ok else "FAIL"
            out.write(f"{status} {r.label}: {r.description} ({len(r.checks)} checks)\n")
            for c in r.checks:
                if not c.ok:
                    out.write(f"     failed: {c.name}: {c.detail}\n")
                    out.write(f"     reproduce: {r.repro}\n")
        verdict = "pass" if report.ok else "fail"
        out.write(f"{args.suite}: {verdict} ({len(report.instances)} instances, {report.check_count} checks, seed {args.seed})\n")
    return 0 if report.ok else 1


# -- graded -------------------------------------------------------------------------------

def cmd_graded(args, out) -> int:
    if args.family_kind == "diagonal":
        if args.family:
            fam = io.parse_family(io.load_document(args.family))
            if fam == "hyperbola":
                raise io.InputError("type", "expected a diagonal family for 'graded diagonal'")
        elif args.mu:
            fam = DiagonalFamily(args.mu)
        else:
            raise UsageError("give --mu values or --family FILE")
        stream = diagonal_jumps(fam, args.max)
        demo = nonperiodicity_demo(fam)
        if args.format == "structured":
            rec = stream.to_record()
            rec["nonperiodicity"] = {
                "applicable": demo.applicable,
                "kind": demo.kind,
                "witness": None if demo.witness is None else format_rational(demo.witness),
            }
            _emit(io.dumps(rec), out)
            return 0
        out.write(" ".join(_short(x) for x in stream.jumps) + "\n")
        if not demo.applicable:
            out.write("nonperiodicity: not applicable (all exponents integral)\n")
        elif demo.witness is None:
            out.write("nonperiodicity: no witness in the search window\n")
        else:
            out.write(f"nonperiodicity: {demo.kind} witness {_short(demo.witness)}\n")
        return 0

    stream = hyperbola_jumps(args.window, args.max)
    reports = [cluster_diagnostics(args.window, n, args.epsilon) for n in args.clusters]
    if args.format == "structured":
        rec = stream.to_record()
        rec["clusters"] = [
            {
                "n": r.n,
                "epsilon": format_rational(r.epsilon),
                "windows": list(r.windows),
                "left_counts": list(r.left_counts),
                "right_counts": list(r.right_counts),
                "left_grows": r.left_grows,
                "right_stable": r.right_stable,
                "right_threshold": r.right_threshold,
            }
            for r in reports
        ]
        _emit(io.dumps(rec), out)
        return 0
    out.write(f"{len(stream.jumps)} jumps up to {_short(args.max)} with e, f <= {args.window}\n")
    out.write(" ".join(_short(x) for x in stream.jumps) + "\n")
    for r in reports:
        e1, e2 = r.windows
        grows = "grows" if r.left_grows else "does not grow"
        out.write(f"cluster at {r.n} (epsilon {_short(r.epsilon)}): left counts {r.left_counts[0]} (E={e1}) -> "
                  f"{r.left_counts[1]} (E={e2}), {grows}\n")
        if r.right_stable is None:
            stable = f"window below stability threshold {r.right_threshold}"
        else:
            stable = "stable" if r.right_stable else "changed"
        out.write(f"  right counts {r.right_counts[0]} -> {r.right_counts[1]}, {stable}\n")
    return 0


# -- jacobian / bounds --------------------------------------------------------------------

def cmd_jacobian(args, out) -> int:
    doc = io.load_document(args.file)
    kind = io.document_kind(doc)
    if kind == "ideal":
        ideal = io.parse_ideal(doc)
        if args.m is None:
            raise UsageError("monomial input needs --m")
        gens = [SparsePolynomial.monomial(g) for g in ideal.generators]
        verdict = thm_4_2_check(ideal, args.m)
        minors = jac_m(gens, args.m) if args.m <= 2 * len(gens) else []
        names = _names(ideal.dimension)
        if args.format == "structured":
            rec = {"input": args.file, "m": args.m, "case": verdict.case, "holds": verdict.holds, "detail": verdict.detail}
            if args.emit_minors:
                rec["minors"] = [io.polynomial_document(q) for q in minors]
            _emit(io.dumps(rec), out)
        else:
            out.write(f"Jac_{args.m} inclusion: case {verdict.case}, {'holds' if verdict.holds else 'FAILS'} ({verdict.detail})\n")
            if args.emit_minors:
                for q in minors:
                    out.write(f"  {q.to_string(names)}\n")
        return 0 if verdict.holds else 1
    if kind != "polynomial":
        raise io.InputError("<document>", "expected a polynomial or monomial ideal document")
    f = io.parse_polynomial(doc)
    names = _names(f.dimension)
    tau = tyurina(f)
    mu = milnor(f)
    gens = jacobian_ideal(f)
    basis = groebner(gens)
    if args.format == "structured":
        rec = {"input": args.file, "tau": tau, "mu": mu, "groebner_basis": [io.polynomial_document(g) for g in basis.generators]}
        if args.emit_minors:
            rec["minors"] = [io.polynomial_document(g) for g in jac_m([f], 1)]
        _emit(io.dumps(rec), out)
        return 0
    out.write(f"τ = {tau}, μ = {mu}\n")
    out.write("Jac(f) basis: " + ", ".join(g.to_string(names) for g in basis.generators) + "\n")
    if args.emit_minors:
        for q in jac_m([f], 1):
            out.write(f"  {q.to_string(names)}\n")
    return 0


def cmd_bounds(args, out) -> int:
    f = io.parse_polynomial(io.load_document(args.file))
    b = ar_bounds(f)
    if args.format == "structured":
        _emit(io.dumps({"input": args.file, "d_times_length": b.dl, "tau_plus_d": b.tau_plus_d,
                        "half_mu_plus_d": b.half_mu_plus_d, "mu_odd": b.mu_odd}), out)
        return 0
    out.write(f"d·ℓ = {b.dl}, τ+d = {b.tau_plus_d}, ⌈μ/2⌉+d = {b.half_mu_plus_d}\n")
    return 0


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jumpnum", description="Exact jumping numbers of multiplier ideals.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    j = sub.add_parser("jumps", help="jump spectrum of a monomial ideal or a nondegenerate polynomial")
    j.add_argument("kind", choices=["monomial", "poly"])
    j.add_argument("files", nargs="+", metavar="FILE", help="one input, or two for stacked rulers")
    j.add_argument("--max", type=_rational_arg, required=True, help="cutoff c_max as p/q")
    j.add_argument("--multiplicities", action="store_true")
    j.add_argument("--plot", choices=["svg", "csv"])
    j.add_argument("--format", choices=["text", "structured"], default="text")
    j.add_argument("--assume-nondegenerate", action="store_true",
                   help="accept sampled (not proven) nondegeneracy in three or more variables")
    j.set_defaults(func=cmd_jumps)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--trials", type=int, default=0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--instance", type=int, help="replay a single random instance")
    v.add_argument("--input", help="root-list document (bs suite)")
    v.add_argument("--poly", help="polynomial document for --input, if the roots file lacks one")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["text", "structured"], default="text")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("graded", help="asymptotic jumps of a graded family")
    g.add_argument("family_kind", choices=["diagonal", "hyperbola"])
    g.add_argument("--mu", type=_rational_arg, nargs="+")
    g.add_argument("--family", help="family document")
    g.add_argument("--window", type=int, default=20)
    g.add_argument("--max", type=_rational_arg, required=True)
    g.add_argument("--clusters", type=int, nargs="*", default=[], metavar="N")
    g.add_argument("--epsilon", type=_rational_arg, default=Fraction(1, 10))
    g.add_argument("--format", choices=["text", "structured"], default="text")
    g.set_defaults(func=cmd_graded)

    jc = sub.add_parser("jacobian", help="Tyurina/Milnor numbers, or Jac_m inclusion for a monomial ideal")
    jc.add_argument("file")
    jc.add_argument("--m", type=int)
    jc.add_argument("--emit-minors", action="store_true")
    jc.add_argument("--format", choices=["text", "structured"], default="text")
    jc.set_defaults(func=cmd_jacobian)

    b = sub.add_parser("bounds", help="uniform Artin-Rees numbers of a polynomial")
    b.add_argument("file")
    b.add_argument("--format", choices=["text", "structured"], default="text")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    if getattr(args, "files", None) is not None and len(args.files) > 2:
        parser.error("at most two input files")
    try:
        return args.func(args, out)
    except (io.InputError, UsageError, DegenerateError, HypothesisError, StepCapExceeded, ValueError) as exc:
        print(f"jumpnum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
