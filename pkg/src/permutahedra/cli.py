"""Command-line front end.

JSON goes to stdout, human-readable notes to stderr. Exit status is 0 on
success, 1 on invalid input (including an invalid representation passed to
``validate``), and 2 when two independent computations disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import functionals as fn
from . import genperm, lattice, matroid, solidangle
from .genperm import GenPermRep, InconsistencyError, InvalidRepresentation
from .setfun import (
    SetFunction,
    elements,
    entries_to_json,
    fmt_fraction,
    max_d,
    mobius_transform,
    parse_entries,
    to_fraction,
    zeta_transform,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not an invariant failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(source: str):
    if source == "-":
        text, name = sys.stdin.read(), "<stdin>"
    elif source.lstrip().startswith(("{", "[")):
        text, name = source, "<inline>"
    else:
        try:
            text, name = Path(source).read_text(), source
        except OSError as e:
            raise InputError(f"{source}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{name}:{e.lineno}:{e.colno}: malformed JSON: {e.msg}") from None


def _emit(obj):
    print(json.dumps(obj))


def _emit_lines(rows):
    for r in rows:
        print(json.dumps(r))


def _rational(q: Fraction):
    return int(q) if q.denominator == 1 else fmt_fraction(q)


def _rep(args) -> GenPermRep:
    return GenPermRep.from_json(_load(args.input))


def _valid_rep(args) -> GenPermRep:
    rep = _rep(args)
    return GenPermRep.checked(rep.y)


# ------------------------------------------------------------ subcommands

def cmd_validate(args):
    rep = _rep(args)
    genperm.equivalence_check(rep)
    ok, witness = genperm.validate_y(rep)
    out = {"valid": ok}
    if not ok:
        out["witness"] = witness.to_json()
        print(f"violated: {witness}", file=sys.stderr)
    _emit(out)
    return EXIT_OK if ok else EXIT_INPUT


def cmd_transform(args):
    f = SetFunction.from_json(_load(args.input))
    g = zeta_transform(f) if args.to_z else mobius_transform(f)
    back = mobius_transform(g) if args.to_z else zeta_transform(g)
    if back != f:
        raise InconsistencyError("transform does not round-trip")
    _emit(g.to_json())
    return EXIT_OK


def cmd_vertices(args):
    rep = _valid_rep(args)
    _emit_lines([[_rational(c) for c in v] for v in genperm.vertices(rep.z)])
    return EXIT_OK


def cmd_points(args):
    rep = _valid_rep(args)
    _emit_lines([list(p) for p in genperm.enumerate_lattice_points(rep.z)])
    return EXIT_OK


def cmd_count(args):
    rep = _valid_rep(args)
    n = lattice.count_lattice_points_formula(rep)
    out = {"formula": n}
    if args.oracle:
        o = genperm.count_lattice_points(rep.z)
        out.update(oracle=o, match=o == n)
        _emit(out)
        return EXIT_OK if o == n else EXIT_MISMATCH
    _emit(out)
    return EXIT_OK


def cmd_ehrhart(args):
    rep = _valid_rep(args)
    _emit(lattice.ehrhart_polynomial(rep).to_json())
    return EXIT_OK


def cmd_e1(args):
    rep = _valid_rep(args)
    v = lattice.e1(rep)
    out = {"e1": fmt_fraction(v)}
    if args.oracle:
        poly = lattice.ehrhart_polynomial(rep)
        lin = poly.coeffs[1] if poly.degree >= 1 else Fraction(0)
        out.update(ehrhart=fmt_fraction(lin), match=lin == v)
        _emit(out)
        return EXIT_OK if lin == v else EXIT_MISMATCH
    _emit(out)
    return EXIT_OK


def cmd_functional_rays(args):
    d = args.d
    if not 2 <= d <= max_d():
        raise InputError(f"d must lie in 2..{max_d()}")
    _emit([{"E": elements(E), "T": elements(T)} for E, T in fn.ray_pairs(d)])
    return EXIT_OK


def cmd_functional_decompose(args):
    obj = _load(args.input)
    if "values" in obj:
        phi = fn.SymmetricFunctional(obj["d"], tuple(to_fraction(v) for v in obj["values"]))
        c = fn.decompose_symmetric(phi)
        if fn.combine_f(phi.d, c) != phi:
            raise InconsistencyError("f-basis coordinates do not reconstruct the functional")
        _emit({"c": [fmt_fraction(x) for x in c], "positive": all(x >= 0 for x in c)})
        return EXIT_OK
    phi = fn.LinearFunctional(obj["d"], parse_entries(obj["d"], obj.get("entries", [])))
    coeffs = fn.decompose_positive(phi)
    if coeffs is not None:
        if fn.reconstruct(phi.d, coeffs) != phi:
            raise InconsistencyError("ray coefficients do not reconstruct the functional")
        _emit({"positive": True, "coefficients": [
            {"E": elements(E), "T": elements(T), "c": fmt_fraction(c)}
            for (E, T), c in coeffs.items()]})
        return EXIT_OK
    y = fn.nonpositivity_witness(phi)
    value = fn.eval_functional(phi, y)
    if value >= 0 or not genperm.validate_y(y)[0]:
        raise InconsistencyError("Farkas witness is not a valid negative certificate")
    _emit({"positive": False, "witness": {"y": entries_to_json(y), "value": fmt_fraction(value)}})
    return EXIT_OK


def cmd_functional_certificate(args):
    if args.d < 2:
        raise InputError("d must be at least 2")
    cert = fn.positivity_certificate(args.d)
    _emit(cert.to_json())
    good = cert.all_nonnegative and cert.q_identity_verified and cert.inverse_verified is not False
    return EXIT_OK if good else EXIT_MISMATCH


def _matroid(args):
    M = matroid.from_json(_load(args.input))
    if M.m + 1 > max_d():
        raise InputError(f"ground set of size {M.m} exceeds the cap")
    return M


def cmd_matroid_decompose(args):
    M = _matroid(args)
    if args.independent:
        rep = matroid.independent_polytope_y(M)
    else:
        rep = matroid.matroid_polytope_y(M)
        if rep.z != matroid.base_polytope_z(M):
            raise InconsistencyError("decomposition disagrees with r(E) - r(E - I)")
    if not genperm.validate_y(rep)[0]:
        raise InconsistencyError("matroid decomposition is not a generalized permutahedron")
    _emit(rep.to_json())
    return EXIT_OK


def cmd_matroid_beta(args):
    M = _matroid(args)
    table = matroid.beta_table(M)
    _emit({"beta": matroid.beta(M), "signed_beta": matroid.signed_beta(M),
           "contractions": [{"A": elements(A), "signed_beta": b} for A, b in table.items() if b]})
    return EXIT_OK


def cmd_matroid_inequality(args):
    M = _matroid(args)
    base = matroid.beta_inequality(M)
    indep = matroid.beta_inequality_indep(M)
    base_e1 = lattice.e1(matroid.matroid_polytope_y(M)) if M.m else Fraction(0)
    indep_e1 = lattice.e1(matroid.independent_polytope_y(M))
    match = base == base_e1 and indep == indep_e1
    nonneg = base >= 0 and indep >= 0
    _emit({"base": fmt_fraction(base), "independent": fmt_fraction(indep),
           "match": match, "nonnegative": nonneg})
    return EXIT_OK if match and nonneg else EXIT_MISMATCH


def cmd_solid_angle_demo(args):
    Q = solidangle.q_example()
    ok, _ = genperm.validate_y(Q)
    a1 = solidangle.a1_genperm_d4(Q)
    _emit({"y": entries_to_json(Q.y), "valid": ok, "a1": a1,
           "tetrahedron_a1": solidangle.tetra_linear_coeff(),
           "tolerance": solidangle.TOLERANCE, "negative": a1 < 0})
    print(f"A_1(Q) = {a1:.8f} < 0: the linear solid-angle coefficient of this "
          "3-dimensional generalized permutahedron is negative", file=sys.stderr)
    return EXIT_OK if ok and a1 < 0 else EXIT_MISMATCH


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="permutahedra", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=None, help="cap on worker threads")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp, help_="JSON file, inline JSON, or - for stdin"):
        sp.add_argument("input", help=help_)
        return sp

    with_input(sub.add_parser("validate", help="check a signed Minkowski sum")).set_defaults(func=cmd_validate)

    t = with_input(sub.add_parser("transform", help="zeta / Moebius transform of a set function"))
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-z", action="store_true")
    g.add_argument("--to-y", action="store_true")
    t.set_defaults(func=cmd_transform)

    with_input(sub.add_parser("vertices")).set_defaults(func=cmd_vertices)
    with_input(sub.add_parser("points", help="lattice points, one JSON array per line")).set_defaults(func=cmd_points)
    c = with_input(sub.add_parser("count"))
    c.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    c.set_defaults(func=cmd_count)
    with_input(sub.add_parser("ehrhart")).set_defaults(func=cmd_ehrhart)
    e = with_input(sub.add_parser("e1"))
    e.add_argument("--oracle", action="store_true", help="cross-check against the Ehrhart polynomial")
    e.set_defaults(func=cmd_e1)

    f = sub.add_parser("functional").add_subparsers(dest="action", required=True)
    r = f.add_parser("rays")
    r.add_argument("d", type=int)
    r.set_defaults(func=cmd_functional_rays)
    with_input(f.add_parser("decompose")).set_defaults(func=cmd_functional_decompose)
    ce = f.add_parser("certificate")
    ce.add_argument("d", type=int)
    ce.set_defaults(func=cmd_functional_certificate)

    m = sub.add_parser("matroid").add_subparsers(dest="action", required=True)
    md = with_input(m.add_parser("decompose"))
    md.add_argument("--independent", action="store_true")
    md.set_defaults(func=cmd_matroid_decompose)
    with_input(m.add_parser("beta")).set_defaults(func=cmd_matroid_beta)
    with_input(m.add_parser("inequality")).set_defaults(func=cmd_matroid_inequality)

    s = sub.add_parser("solid-angle").add_subparsers(dest="action", required=True)
    s.add_parser("demo").set_defaults(func=cmd_solid_angle_demo)
    return p


def _set_threads(n):
    if n is None:
        return
    if n < 1:
        raise InputError("--threads must be positive")
    import numba
    numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _set_threads(args.threads)
        return args.func(args)
    except InconsistencyError as e:
        print(f"error: invariant falsified: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except InvalidRepresentation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (KeyError, ValueError, TypeError, OverflowError) as e:
        print(f"error: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
