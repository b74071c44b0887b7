"""Command-line interface: ``sicpovm <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal error. ``SICPOVM_TOL`` overrides the default tolerances.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import analysis, clifford
from .errors import CapExceeded, DimensionMismatch, NormError, ParseError, SicError
from .numtheory import diag_conditions, factorize, is_prime
from .search import SearchConfig, search_fiducial, sic_defect
from .tables import ORDER3_ROWS

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
RENORMALIZE_TOL = 1e-12
REJECT_TOL = 1e-3
TOL_ENV = "SICPOVM_TOL"


class UsageError(Exception):
    pass


# -- vector files ---------------------------------------------------------------

@dataclass
class VectorFile:
    psi: np.ndarray
    label: str | None = None
    provenance: str | None = None
    norm_correction: float = 0.0


def write_vector(psi, path, label: str | None = None, provenance: str | None = None) -> None:
    psi = np.asarray(psi, dtype=complex)
    doc = {
        "d": int(psi.shape[0]),
        "re": [float(x) for x in psi.real],
        "im": [float(x) for x in psi.imag],
    }
    if label is not None:
        doc["label"] = label
    if provenance is not None:
        doc["provenance"] = provenance
    # json writes floats with shortest round-trip repr, so reading back is exact
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def read_vector_file(path) -> VectorFile:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    try:
        d = doc["d"]
        re_, im_ = doc["re"], doc["im"]
    except KeyError as exc:
        raise ParseError(f"{path}: missing field {exc.args[0]!r}") from None
    if not isinstance(d, int) or d < 1:
        raise ParseError(f"{path}: d must be a positive integer")
    try:
        re_arr = np.asarray(re_, dtype=float)
        im_arr = np.asarray(im_, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: re/im must be arrays of numbers") from exc
    if re_arr.shape != (d,) or im_arr.shape != (d,):
        raise DimensionMismatch(
            f"{path}: d = {d} but re/im have lengths {re_arr.size}, {im_arr.size}"
        )
    psi = re_arr + 1j * im_arr
    norm = float(np.linalg.norm(psi))
    if not math.isfinite(norm) or abs(norm - 1.0) > REJECT_TOL:
        raise NormError(f"{path}: vector norm {norm} is too far from 1")
    correction = 0.0
    if abs(norm - 1.0) > RENORMALIZE_TOL:
        psi = psi / norm
        correction = norm - 1.0
    return VectorFile(psi, doc.get("label"), doc.get("provenance"), correction)


def read_vector(path) -> np.ndarray:
    return read_vector_file(path).psi


# -- argument helpers -------------------------------------------------------------

_VALUE_FLAGS = ("--F", "--chi", "--t", "--seed")


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    # "--F -1,0,0,-1" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _int_list(text: str, n: int, flag: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag}: expected {n} comma-separated integers, got {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"{flag}: expected {n} comma-separated integers, got {len(vals)}")
    return vals


def _element(args) -> clifford.CliffordElement:
    F = _int_list(args.F, 4, "--F")
    chi = _int_list(args.chi, 2, "--chi") if getattr(args, "chi", None) else (0, 0)
    try:
        return clifford.validate_element(F, chi, args.d)
    except SicError as exc:
        raise UsageError(f"--F: {exc}") from None


def _default_tol(fallback: float) -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV}={raw!r} is not a number") from None


def _tol(args, fallback: float) -> float:
    return args.tol if args.tol is not None else _default_tol(fallback)


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _element_json(e: clifford.CliffordElement) -> dict:
    return {"F": list(e.F), "chi": list(e.chi), "d": e.d, "unitary": e.is_unitary}


def _sl2_order_from_primes(d: int) -> int:
    # |SL(2, Z_d)| = d^3 prod_{p | d} (1 - 1/p^2)
    n = d**3
    for p, _ in factorize(d) if d > 1 else ():
        n = n // (p * p) * (p * p - 1)
    return n


# -- subcommands ------------------------------------------------------------------

def cmd_group_order(args) -> int:
    d, ext = args.d, args.extended
    n = clifford.group_order(d, ext)
    check = d * d * _sl2_order_from_primes(d) * (2 if ext else 1)
    doc = {"d": d, "extended": ext, "order": n, "cross_check": check, "agree": n == check}
    lines = [str(n), f"cross-check d^2 |SL(2,Z_d)|{' x 2' if ext else ''} = {check}"]
    if is_prime(d):
        prime_formula = d**3 * (d * d - 1) * (2 if ext else 1)
        doc["prime_formula"] = prime_formula
        lines.append(f"prime formula d^3 (d^2 - 1){' x 2' if ext else ''} = {prime_formula}")
    _emit(args, doc, lines)
    return EXIT_OK if n == check else EXIT_INTERNAL


def cmd_enumerate(args) -> int:
    try:
        elements = clifford.enumerate_group(args.d, args.extended)
        if args.count_only:
            count = sum(1 for _ in elements)
            expected = clifford.group_order(args.d, args.extended)
            _emit(
                args,
                {"d": args.d, "extended": args.extended, "count": count, "expected": expected},
                [str(count), f"formula = {expected}"],
            )
            return EXIT_OK if count == expected else EXIT_INTERNAL
        if args.json:
            print(json.dumps({"d": args.d, "elements": [_element_json(e) for e in elements]}))
        else:
            for e in elements:
                print(e)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_make_fiducial(args) -> int:
    psi = analysis.exact_fiducial(args.recipe, args.t)
    label = args.recipe if args.t is None else f"{args.recipe}(t={args.t!r})"
    write_vector(psi, args.out, label=label, provenance="closed form")
    _emit(args, {"d": psi.shape[0], "label": label, "out": str(args.out)},
          [f"wrote {label} (d = {psi.shape[0]}) to {args.out}"])
    return EXIT_OK


def cmd_verify(args) -> int:
    vf = read_vector_file(args.file)
    rep = analysis.verify_fiducial(vf.psi, _tol(args, analysis.FIDUCIAL_TOL))
    doc = rep.to_dict() | {"sic_defect": sic_defect(vf.psi), "norm_correction": vf.norm_correction}
    lines = [
        f"d = {rep.d}",
        f"max deviation from 1/sqrt(d+1): {rep.max_deviation:.3e}",
        f"norm error: {rep.norm_error:.3e}",
        f"defect: {doc['sic_defect']:.3e}",
        f"{'PASS' if rep.passed else 'FAIL'} at tolerance {rep.tolerance:g}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_stabilizer(args) -> int:
    psi = read_vector(args.file)
    try:
        res = analysis.stabilizer(psi, _tol(args, analysis.EIGEN_TOL), full_sweep=args.full_sweep)
    except CapExceeded as exc:
        raise UsageError(f"{exc}; pass --full-sweep") from None
    lines = [f"stabilizer order {res.order}"]
    if res.generator_hint is not None:
        lines.append(f"cyclic, generated by {res.generator_hint}")
    lines += [f"  {e}" for e in res.elements]
    _emit(args, res.to_dict(), lines)
    return EXIT_OK


def cmd_orbit(args) -> int:
    psi = read_vector(args.file)
    d = psi.shape[0]
    try:
        orbit, sics = analysis.orbit_stats(psi, _tol(args, analysis.EIGEN_TOL), args.full_sweep)
    except CapExceeded as exc:
        raise UsageError(f"{exc}; pass --full-sweep") from None
    total = clifford.group_order(d, extended=True)
    doc = {"d": d, "group_order": total, "stabilizer_order": total // orbit,
           "orbit_size": orbit, "sic_count": sics}
    lines = [
        f"orbit size {orbit} = {total} / {total // orbit}",
        f"SIC-POVMs {sics} = {orbit} / {d * d}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_eigenspaces(args) -> int:
    e = _element(args)
    if not e.is_unitary:
        raise UsageError("--F: eigenspaces need det F = 1")
    dims = analysis.eigenspace_dims(e)
    k = clifford.element_order(e)
    _emit(args, {"element": _element_json(e), "order": k, "dims": list(dims), "sum": sum(dims)},
          [f"order {k}", "dims " + " ".join(map(str, dims)), f"sum {sum(dims)} (d = {e.d})"])
    return EXIT_OK


def cmd_trace(args) -> int:
    e = _element(args)
    t = clifford.clifford_trace(e)
    c3 = clifford.is_canonical_order3(e)
    _emit(args, {"element": _element_json(e), "trace": t, "canonical_order3": c3},
          [f"trace {t} (mod {e.d})", f"canonical order 3: {'yes' if c3 else 'no'}"])
    return EXIT_OK


def cmd_order(args) -> int:
    e = _element(args)
    k = clifford.element_order(e)
    _emit(args, {"element": _element_json(e), "order": k}, [str(k)])
    return EXIT_OK


def cmd_zauner_check(args) -> int:
    d = args.d
    if d not in ORDER3_ROWS:
        raise UsageError(f"no tabulated order-3 row for d = {d} (have {min(ORDER3_ROWS)}..{max(ORDER3_ROWS)})")
    l, f = analysis.table_conjugator(d), analysis.table_order3_element(d)
    got = analysis.conjugate(l, f)
    ok = got == analysis.zauner_element(d)
    _emit(args, {"d": d, "L": _element_json(l), "F": _element_json(f),
                 "conjugate": _element_json(got), "ok": ok},
          [f"L F L^-1 = {got}", "matches [Z, 0]" if ok else "does NOT match [Z, 0]"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_diag_order3(args) -> int:
    d = args.d
    if d < 2:
        raise UsageError("d must be at least 2")
    e = analysis.diag_order3(d)
    cond = diag_conditions(d)
    if e is None:
        _emit(args, {"d": d, "present": False, "conditions": cond}, ["absent"])
    else:
        _emit(args, {"d": d, "present": True, "alpha": e.F[0], "element": _element_json(e),
                     "conditions": cond},
              [f"diag({e.F[0]}, {e.F[3]})", f"factorization conditions hold: {cond}"])
    return EXIT_OK


def cmd_conjectures(args) -> int:
    psi = read_vector(args.file)
    try:
        rep = analysis.conjecture_scan(psi, _tol(args, analysis.EIGEN_TOL), args.full_sweep)
    except CapExceeded as exc:
        raise UsageError(f"{exc}; pass --full-sweep") from None
    lines = [
        f"stabilizer order {rep.stabilizer_order}",
        f"canonical order-3 stabilizing element: {'yes' if rep.has_canonical_order3 else 'no'}",
    ]
    lines += [f"  {e}" for e in rep.canonical_order3]
    if rep.zauner_witness:
        l, s = rep.zauner_witness
        lines.append(f"conjugate to [Z, 0]: yes, l = {l} maps {s}")
    else:
        lines.append("conjugate to [Z, 0]: no")
    _emit(args, rep.to_dict(), lines)
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = SearchConfig(args.d, restarts=args.restarts, max_iterations=args.max_iterations,
                       seed=args.seed)
    out = search_fiducial(cfg)
    if args.out:
        write_vector(out.best_vector, args.out, label=f"search d={args.d}",
                     provenance=f"search seed={args.seed} restarts={args.restarts}")
    _emit(args, out.to_dict() | {"d": args.d, "seed": args.seed},
          [f"best defect {out.best_defect:.3e} (restart {out.restart_index})",
           f"iterations {out.iterations_used}",
           "converged" if out.converged else "not converged"])
    return EXIT_OK if out.converged else EXIT_FAIL


# -- parser -------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sicpovm", description="SIC-POVM fiducials and the Clifford group")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON document")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("group-order", cmd_group_order, "order of the Clifford group modulo phases")
    sp.add_argument("d", type=_positive_int)
    sp.add_argument("--extended", action="store_true")

    sp = add("enumerate", cmd_enumerate, "list every operation")
    sp.add_argument("d", type=_positive_int)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--count-only", action="store_true")

    sp = add("make-fiducial", cmd_make_fiducial, "write a closed-form fiducial")
    sp.add_argument("recipe", choices=analysis.RECIPES)
    sp.add_argument("--t", type=float, help="d3 parameter in radians")
    sp.add_argument("--out", required=True, type=Path)

    for name, func, help_ in (
        ("verify", cmd_verify, "check the fiducial condition"),
        ("stabilizer", cmd_stabilizer, "stability group of a vector"),
        ("orbit", cmd_orbit, "orbit size and SIC-POVM count"),
        ("conjectures", cmd_conjectures, "order-3 and Zauner checks"),
    ):
        sp = add(name, func, help_)
        sp.add_argument("file", type=Path)
        sp.add_argument("--tol", type=float)
        if name != "verify":
            sp.add_argument("--full-sweep", action="store_true")

    for name, func, help_, with_chi in (
        ("eigenspaces", cmd_eigenspaces, "eigenspace dimensions", True),
        ("trace", cmd_trace, "Clifford trace", False),
        ("order", cmd_order, "order of an operation", True),
    ):
        sp = add(name, func, help_)
        sp.add_argument("d", type=_positive_int)
        sp.add_argument("--F", required=True, help="a,b,c,d row-major")
        if with_chi:
            sp.add_argument("--chi", default="0,0", help="x,y")

    sp = add("zauner-check", cmd_zauner_check, "verify a tabulated conjugation to [Z, 0]")
    sp.add_argument("d", type=_positive_int)

    sp = add("diag-order3", cmd_diag_order3, "diagonal canonical order-3 operation")
    sp.add_argument("d", type=_positive_int)

    sp = add("search", cmd_search, "numerical fiducial search")
    sp.add_argument("d", type=_positive_int)
    sp.add_argument("--restarts", type=_positive_int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-iterations", type=_positive_int, default=2000)
    sp.add_argument("--out", type=Path)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sicpovm {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, NormError, DimensionMismatch) as exc:
        print(f"sicpovm {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SicError as exc:
        print(f"sicpovm {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - last-resort exit code contract
        print(f"sicpovm {args.command}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
