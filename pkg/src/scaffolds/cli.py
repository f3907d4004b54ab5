"""Work with association schemes, planar diagrams and their scaffolds.

    scaffolds scheme validate|params|dual SCHEME
    scaffolds diagram faces|dual DIAGRAM
    scaffolds scaffold eval DIAGRAM --scheme SCHEME
    scaffolds scaffold verify-duality DIAGRAM --scheme SCHEME
    scaffolds scaffold dualize COMBINATION --scheme SCHEME

Exit status: 0 success, 1 failed verification, 2 bad input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__, catalog, io
from .diagrams import dual_diagram
from .duality import dualize_combination, verify_duality
from .errors import ScaffoldError, ValidationError
from .evaluate import DEFAULT_MAX_ENTRIES, eval_bruteforce, eval_elimination
from .schemes import Scheme, check_p_polynomial, check_q_polynomial
from .translation import TranslationScheme, dual_scheme


class InputError(Exception):
    pass


def _scheme_obj(s) -> Scheme:
    return s.scheme if isinstance(s, TranslationScheme) else s


def _translation(s) -> TranslationScheme:
    if not isinstance(s, TranslationScheme):
        raise InputError("this command needs a translation scheme")
    return s


def _diagram_for(source: str, s):
    # the drawn labels of fig1 run to 5; fold them into the scheme's classes
    if source == "builtin:fig1" and s is not None:
        return catalog.fig1_for(_scheme_obj(s).d)
    return io.load_diagram(source)


def _matrix(M) -> str:
    if M is None:
        return "n/a"
    a = np.round(np.asarray(M), 9) + 0.0  # drop rounding noise and -0.0
    return np.array2string(np.real_if_close(a), precision=6, suppress_small=True)


def _emit(text: str, out: str | None = None):
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_scheme(args) -> int:
    s = io.load_scheme(args.scheme)
    base = _scheme_obj(s)
    if args.action == "validate":
        info = {"valid": True, "size": base.size, "classes": base.d,
                "translation": isinstance(s, TranslationScheme)}
        if args.json:
            _emit(io.dumps(info))
        else:
            print(f"valid {base.d}-class scheme on {base.size} points")
        return 0
    if args.action == "params":
        out = io.params_to_json(s)
        out["p_polynomial"] = check_p_polynomial(base)
        out["q_polynomial"] = check_q_polynomial(base) if base.has_eigen_data else None
        if args.json:
            _emit(io.dumps(out))
        else:
            print("P =")
            print(_matrix(base.P))
            print("Q =")
            print(_matrix(base.Q))
            print(f"P-polynomial: {out['p_polynomial']}  Q-polynomial: {out['q_polynomial']}")
        return 0
    # dual
    _emit(io.dumps(io.scheme_to_json(dual_scheme(_translation(s)))))
    return 0


def cmd_diagram(args) -> int:
    d = io.load_diagram(args.diagram)
    if args.action == "faces":
        info = io.faces_to_json(d)
        if args.json:
            _emit(io.dumps(info))
        else:
            e = info["euler"]
            print(f"{e['faces']} faces ({len(info['interior'])} interior); "
                  f"Euler: {e['nodes']} - {e['edges']} + {e['faces']} = "
                  f"{e['nodes'] - e['edges'] + e['faces']}")
            for k, f in enumerate(info["faces"]):
                tag = " (outer)" if k == info["outer"] and d.ell else ""
                if k in info["boundary"]:
                    tag = f" (q{info['boundary'].index(k) + 1})"
                print(f"  face {k}{tag}: {' '.join(f) if f else '(isolated node)'}")
        return 0
    _emit(io.dumps(io.diagram_to_json(dual_diagram(d))))
    return 0


def cmd_scaffold(args) -> int:
    s = io.load_scheme(args.scheme) if args.scheme else None
    if args.action == "dualize":
        if s is None and args.size is None:
            raise InputError("dualize needs --scheme or --size")
        size = args.size if args.size is not None else _scheme_obj(s).size
        obj = io.read_json(args.diagram)
        terms = []
        for k, t in enumerate(io._field(obj, "terms", "combination")):
            src = io._field(t, "diagram", f"combination.terms[{k}]")
            d = io.load_diagram(src) if isinstance(src, str) else io.diagram_from_json(src)
            terms.append((io.decode_complex(t.get("coeff", 1)), d))
        out = [{"coeff": io.encode_complex(a), "diagram": io.diagram_to_json(d)}
               for a, d in dualize_combination(terms, size)]
        _emit(io.dumps({"terms": out}))
        return 0
    if s is None:
        raise InputError("--scheme is required")
    d = _diagram_for(args.diagram, s)
    if args.action == "eval":
        base = _scheme_obj(s)
        if args.method == "brute":
            t = eval_bruteforce(d, base, max_entries=args.max_entries)
        else:
            order = args.order.split(",") if args.order else None
            t = eval_elimination(d, base, order, max_intermediate=args.max_intermediate)
        _emit(io.dumps(io.tensor_to_json(t)), args.out)
        return 0
    # verify-duality
    report = verify_duality(d, _translation(s), tol=args.tol, max_intermediate=args.max_intermediate)
    if args.json:
        info = report.as_dict()
        info.pop("timings")  # keeps output byte-stable
        _emit(io.dumps(info))
    else:
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{verdict}: ell={report.ell} n={report.n} scalar={report.scalar:g} "
              f"residual={report.residual:.3e} (tol {report.tolerance:g})")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scaffolds", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="group", required=True)

    p = sub.add_parser("scheme", help="validate a scheme, print its parameters, or dualize it")
    p.add_argument("action", choices=["validate", "params", "dual"])
    p.add_argument("scheme", help="scheme JSON file or builtin:NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("diagram", help="trace faces or build the dual diagram")
    p.add_argument("action", choices=["faces", "dual"])
    p.add_argument("diagram", help="diagram JSON file or builtin:NAME[:labels]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("scaffold", help="evaluate scaffolds and check duality")
    p.add_argument("action", choices=["eval", "verify-duality", "dualize"])
    p.add_argument("diagram", help="diagram (or, for dualize, combination) JSON file or builtin:NAME")
    p.add_argument("--scheme")
    p.add_argument("--size", type=int, help="|X| for dualize when no scheme is given")
    p.add_argument("--method", choices=["brute", "elim"], default="elim")
    p.add_argument("--order", help="comma-separated elimination order")
    p.add_argument("--out")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-entries", type=int, default=DEFAULT_MAX_ENTRIES)
    p.add_argument("--max-intermediate", type=int, default=DEFAULT_MAX_ENTRIES)
    p.set_defaults(func=cmd_scaffold)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        for tag, detail in exc.violations:
            print(f"error: {tag}: {detail}", file=sys.stderr)
        return 2
    except (ScaffoldError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
