"""Command-line front end.

Every command is a pure function of its input files, flags and seed, so
repeated invocations print byte-identical output.  Exit codes: 0 clean,
2 a suite found a violation, 3 undecided or enumeration cap exceeded,
64 bad usage, 65 validation or parse failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import serialize
from .algebra import group_ring, trivial_algebra, InvAlgebra
from .decide import (gbilinear_isometry, isometry_decide, springer_check,
                     summand_enumerate, witt_cancellation_check)
from .darrow import herm_check, q_of_form
from .endoring import herm_classes, quotient_radical, radical
from .errors import (BadUsage, EnumTooLarge, InfiniteField, ParseError,
                     SesqError)
from .exactfield import Field
from .sesqform import (GBilinearForm, SesqForm, gbilinear_to_sesq,
                       left_adjoint, random_form, right_adjoint,
                       sesq_to_gbilinear, unimodular_check)

OK, VIOLATION, UNDECIDED, BAD_USAGE, VALIDATION_FAILED = 0, 2, 3, 64, 65


class Workspace:
    """Registry of named, validated objects plus the global cap and seed."""

    def __init__(self, cap=None, seed=0):
        if cap is None:
            cap = int(os.environ.get("SESQ_CAP", 10 ** 6))
        self.cap = cap
        self.seed = seed
        self.objects = {}

    def register(self, name, obj):
        if name in self.objects:
            raise BadUsage(f"name {name!r} already registered")
        self.objects[name] = obj
        return obj

    def load(self, path, name=None):
        obj = serialize.load(path)
        key = name or os.path.splitext(os.path.basename(path))[0]
        return self.register(key, obj)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadUsage(message)


def _build_parser():
    p = _Parser(prog="sesq", description="exact sesquilinear form toolkit")
    p.add_argument("--json", action="store_true", help="JSON report output")
    p.add_argument("--cap", type=int, default=None,
                   help="enumeration cap (default SESQ_CAP or 10^6)")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate").add_argument("file")
    sub.add_parser("adjoints").add_argument("form")
    sub.add_parser("qobject").add_argument("form")
    sub.add_parser("endoring").add_argument("form")
    sub.add_parser("classes").add_argument("form")

    iso = sub.add_parser("isometry")
    iso.add_argument("a")
    iso.add_argument("b")
    iso.add_argument("--method", choices=["bruteforce", "transfer"],
                     default="bruteforce")

    witt = sub.add_parser("witt")
    witt.add_argument("--field", required=True,
                      help="field or algebra JSON file")
    witt.add_argument("--trials", type=int, default=100)
    witt.add_argument("--seed", type=int, default=0)
    witt.add_argument("--dims", type=int, default=2)

    spr = sub.add_parser("springer")
    spr.add_argument("a")
    spr.add_argument("b")
    spr.add_argument("--deg", type=int, required=True)

    gr = sub.add_parser("groupring")
    gr.add_argument("group", help="group JSON file")
    gr.add_argument("--field", required=True, help="field JSON file")

    sub.add_parser("g2s").add_argument("bilinear")
    sub.add_parser("s2g").add_argument("sesq")
    sub.add_parser("summands").add_argument("form")

    rf = sub.add_parser("random-form")
    rf.add_argument("module")
    rf.add_argument("--seed", type=int, default=0)
    rf.add_argument("--unimodular", action="store_true")
    return p


def _emit(args, data, text):
    if args.json:
        sys.stdout.write(serialize.canonical_dumps(data))
    else:
        sys.stdout.write(text + "\n")


def _load_form(path):
    obj = serialize.load(path)
    if not isinstance(obj, SesqForm):
        raise BadUsage(f"{path} does not contain a form")
    return obj


def _run(args):
    cap = args.cap if args.cap is not None else int(os.environ.get("SESQ_CAP", 10 ** 6))

    if args.command == "validate":
        obj = serialize.load(args.file)
        kind = type(obj).__name__
        _emit(args, {"ok": True, "type": kind}, f"ok: valid {kind}")
        return OK

    if args.command == "adjoints":
        s = _load_form(args.form)
        F = s.module.field
        sl, sr = left_adjoint(s), right_adjoint(s)
        enc = lambda m: [[F.el_to_json(x) for x in row] for row in m]
        data = {"left": enc(sl.mat), "right": enc(sr.mat),
                "unimodular": unimodular_check(s)}
        _emit(args, data,
              f"left adjoint {sl.mat!r}; right adjoint {sr.mat!r}; "
              f"unimodular: {data['unimodular']}")
        return OK

    if args.command == "qobject":
        s = _load_form(args.form)
        M, eta = q_of_form(s)
        data = serialize.object_to_json(M)
        data["eta_hermitian"] = herm_check(M, eta)
        data["eta_unimodular"] = eta.is_unimodular()
        _emit(args, data,
              f"object with {len(M.arrows)} arrow pair(s); eta hermitian: "
              f"{data['eta_hermitian']}, unimodular: {data['eta_unimodular']}")
        return OK

    if args.command == "endoring":
        from .decide import transfer_setup
        s = _load_form(args.form)
        _, _, E = transfer_setup(s)
        F = E.field
        enc = lambda m: [[F.el_to_json(x) for x in row] for row in m]
        data = {"dim": E.dim,
                "unit": [F.el_to_json(x) for x in E.unit],
                "structure": [[[F.el_to_json(x) for x in e] for e in row]
                              for row in E.structure],
                "involution": enc(E.invol),
                "basis": [{"phi": enc(b.phi.mat), "psi": enc(b.psi.mat)}
                          for b in E.basis],
                "radical_dim": len(radical(E, cap))}
        _emit(args, data, f"endomorphism ring of dimension {E.dim}, "
                          f"radical dimension {data['radical_dim']}")
        return OK

    if args.command == "classes":
        from .decide import transfer_setup
        s = _load_form(args.form)
        _, _, E = transfer_setup(s)
        cls = herm_classes(E, cap)
        data = cls.to_json(E.field)
        _emit(args, data,
              f"{len(cls)} class(es); orbit sizes {cls.orbit_sizes}")
        return OK

    if args.command == "isometry":
        a = _load_form(args.a)
        b = _load_form(args.b)
        rep = isometry_decide(a, b, method=args.method, cap=cap)
        _emit(args, rep.to_json(a.module.field),
              f"verdict: {rep.verdict} (method {rep.method}, "
              f"searched {rep.search_size})")
        return UNDECIDED if rep.verdict == "undecided" else OK

    if args.command == "witt":
        base = serialize.load(args.field)
        if isinstance(base, Field):
            A = trivial_algebra(base)
        elif isinstance(base, InvAlgebra):
            A = base
        else:
            raise BadUsage("--field wants a field or algebra JSON file")
        rep = witt_cancellation_check(A, trials=args.trials, seed=args.seed,
                                      dims=args.dims, cap=cap)
        _emit(args, rep.to_json(),
              f"cancellation: {rep.violations} violation(s) "
              f"in {args.trials} trial(s)")
        return OK if rep.ok() else VIOLATION

    if args.command == "springer":
        a = _load_form(args.a)
        b = _load_form(args.b)
        rep = springer_check(a, b, args.deg, cap=cap)
        _emit(args, rep,
              f"degree {args.deg}: base {rep['base']['verdict']}, "
              f"extension {rep['extension']['verdict']}, "
              f"descends: {rep['descends']}")
        if rep["odd_degree"] and not rep["descends"]:
            return VIOLATION
        return OK

    if args.command == "groupring":
        import json as _json
        F = serialize.load(args.field)
        if not isinstance(F, Field):
            raise BadUsage("--field wants a field JSON file")
        with open(args.group, "r", encoding="utf-8") as fh:
            try:
                gjson = _json.load(fh)
            except ValueError as e:
                raise ParseError(str(e))
        A = group_ring(F, gjson)
        sys.stdout.write(serialize.canonical_dumps(serialize.algebra_to_json(A)))
        return OK

    if args.command == "g2s":
        obj = serialize.load(args.bilinear)
        if not isinstance(obj, GBilinearForm):
            raise BadUsage(f"{args.bilinear} does not contain a bilinear form")
        sys.stdout.write(serialize.dumps(gbilinear_to_sesq(obj)))
        return OK

    if args.command == "s2g":
        s = _load_form(args.sesq)
        sys.stdout.write(serialize.dumps(sesq_to_gbilinear(s)))
        return OK

    if args.command == "summands":
        s = _load_form(args.form)
        reps = summand_enumerate(s, cap=cap)
        F = s.module.field
        data = {"count": len(reps),
                "summands": [{"dim": r.dim,
                              "gram": serialize._gram_to_json(F, r.gram)}
                             for r in reps]}
        _emit(args, data,
              f"{len(reps)} summand class(es) with dims "
              f"{[r.dim for r in reps]}")
        return OK

    if args.command == "random-form":
        V = serialize.load(args.module)
        from .amodule import RightModule
        if not isinstance(V, RightModule):
            raise BadUsage(f"{args.module} does not contain a module")
        s = random_form(V, args.seed, require_unimodular=args.unimodular)
        sys.stdout.write(serialize.dumps(s))
        return OK

    raise BadUsage(f"unknown command {args.command!r}")


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except BadUsage as e:
        sys.stderr.write(f"usage error: {e}\n")
        return BAD_USAGE
    except (EnumTooLarge, InfiniteField) as e:
        sys.stderr.write(f"undecided: {e}\n")
        return UNDECIDED
    except ParseError as e:
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return VALIDATION_FAILED
    except SesqError as e:
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return VALIDATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
