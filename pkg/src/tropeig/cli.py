"""Command-line front end.

Every subcommand prints one JSON document.  Rationals are written as
strings ("-5/4", "3"), vectors as comma-joined strings, and vertices and
function values are 1-based.  Exit codes: 0 success, 2 invalid input,
3 a generic matrix was required but the input is degenerate.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinat, cones, skewrank, spectral
from .core import TropMatrix, to_rational
from .errors import NonUniqueEigenvector, NotSkew, TropError

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_INVALID, EXIT_DEGENERATE = 0, 2, 3


class InputError(Exception):
    pass


class Degenerate(Exception):
    def __init__(self, doc, message):
        super().__init__(message)
        self.doc = doc


def fmt(q: Fraction) -> str:
    return str(q)


def fmt_vector(x) -> str:
    return ",".join(fmt(v) for v in x)


def parse_vector(text: str) -> tuple:
    return tuple(to_rational(t) for t in text.split(","))


def fmt_matrix(A: TropMatrix) -> list:
    return [[fmt(v) for v in row] for row in A.rows]


def _skew(A: TropMatrix) -> TropMatrix:
    try:
        return skewrank.validate_skew(A)
    except NotSkew as exc:
        i, j = exc.i + 1, exc.j + 1
        raise InputError(f"not skew-symmetric at ({i},{j}): a{i}{j} + a{j}{i} != 0") from exc


def parse_matrix_document(doc) -> TropMatrix:
    """Validate a ``{"n", "matrix", "skew"?}`` document and return the matrix."""
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise InputError("document must be an object with a 'matrix' field")
    rows = doc["matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("'matrix' must be a list of rows")
    for r in rows:
        for v in r:
            if isinstance(v, float) or isinstance(v, bool) or not isinstance(v, (int, str)):
                raise InputError(f"entry {v!r} is not an integer or rational string")
    try:
        A = TropMatrix(rows)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    if "n" in doc and doc["n"] != A.n:
        raise InputError(f"'n' is {doc['n']} but the matrix is {A.n}x{A.n}")
    if doc.get("skew"):
        A = _skew(A)
    return A


def matrix_document(A: TropMatrix, skew=False) -> dict:
    return {"n": A.n, "matrix": fmt_matrix(A), "skew": bool(skew)}


def parse_phi(text: str) -> combinat.ConnectedFunction:
    try:
        images = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"--phi must be a comma-separated list of integers: {text!r}") from exc
    n = len(images)
    if any(not 1 <= v <= n for v in images):
        raise InputError(f"--phi values must lie in 1..{n}")
    return combinat.ConnectedFunction.from_one_based(images)


def _envelope(command, **payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **payload}


def _read_input(path) -> TropMatrix:
    if path is None:
        raise InputError("--input is required")
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read matrix document: {exc}") from exc
    return parse_matrix_document(doc)


def _phi_doc(phi) -> list:
    return phi.one_based()


def cmd_eig(A: TropMatrix) -> dict:
    res = cones.classify(A)
    out = {"n": A.n, "lambda": fmt(res.lam), "degenerate": not res.is_generic}
    if res.eigenvector is not None:
        out["eigenvector"] = fmt_vector(res.eigenvector)
    if not res.is_generic:
        P = spectral.eigenspace(A)
        out["generators"] = [fmt_vector(g) for g in P.generators]
        out["vertices"] = [fmt_vector(v) for v in P.vertices]
    return _envelope("eig", **out)


def cmd_classify(A: TropMatrix, skew=False, require_generic=False) -> dict:
    res = skewrank.classify_skew(_skew(A)) if skew else cones.classify(A)
    out = {"n": A.n, "lambda": fmt(res.lam), "generic": res.is_generic}
    if res.is_generic:
        phi = res.phi
        out.update(
            phi=_phi_doc(phi),
            cycle=[v + 1 for v in phi.cycle()],
            kite=combinat.is_kite(phi),
            anchor={str(i + 1): r + 1 for i, r in sorted(res.anchor.items())},
            eigenvector=fmt_vector(res.eigenvector),
        )
    else:
        out.update(
            tied_rows={str(i + 1): [j + 1 for j in js] for i, js in sorted(res.tied_rows.items())},
            disconnected=res.disconnected,
        )
    doc = _envelope("classify", **out)
    if require_generic and not res.is_generic:
        raise Degenerate(doc, "matrix is degenerate")
    return doc


def cmd_cone(phi) -> dict:
    ineqs = [
        {
            "le": [q.non_edge[0] + 1, q.non_edge[1] + 1],
            "rhs_coeffs": {f"{i + 1},{j + 1}": fmt(c) for (i, j), c in sorted(q.rhs().items())},
        }
        for q in cones.cone_inequalities(phi)
    ]
    return _envelope("cone", n=phi.n, phi=_phi_doc(phi), inequalities=ineqs)


def cmd_enum(n: int, kind="connected", count_only=False) -> dict:
    if n is None or n < 1:
        raise InputError("--n must be a positive integer")
    if kind == "kites":
        if n < 3:
            raise InputError("kites need n >= 3")
        count = combinat.count_kites(n)
    else:
        count = combinat.count_connected(n)
    out = {"n": n, "kind": kind, "count": count}
    if not count_only:
        if n > combinat.ENUMERATE_MAX_N:
            raise InputError(f"listing is limited to n <= {combinat.ENUMERATE_MAX_N}; use --count-only")
        fs = combinat.enumerate_kites(n) if kind == "kites" else combinat.enumerate_connected(n)
        out["functions"] = [_phi_doc(f) for f in fs]
    return _envelope("enum", **out)


def cmd_fvector(n: int) -> dict:
    if n is None or not 1 <= n <= combinat.FVECTOR_MAX_N:
        raise InputError(f"f-vectors are computed for 1 <= n <= {combinat.FVECTOR_MAX_N}")
    return _envelope("fvector", n=n, fvector=list(combinat.sigma_fvector(n)))


def cmd_rank(A: TropMatrix) -> dict:
    S = _skew(A)
    try:
        r = skewrank.rank(S)
    except NonUniqueEigenvector as exc:
        doc = _envelope("rank", n=A.n, degenerate=True)
        raise Degenerate(doc, str(exc)) from exc
    return _envelope(
        "rank",
        n=A.n,
        order=[i + 1 for i in r.order],
        eigenvector=fmt_vector(r.eigenvector),
        ties=[[i + 1 for i in g] for g in r.ties],
    )


def cmd_witness() -> dict:
    w = cones.fan_failure_witness()
    rows = [
        {
            "entry": [p.entry[0] + 1, p.entry[1] + 1],
            "eps": fmt(p.eps),
            "phi": _phi_doc(p.phi) if p.phi else None,
            "eigenvector": fmt_vector(p.eigenvector) if p.eigenvector else None,
            "expected": fmt_vector(p.expected),
            "limit": fmt_vector(p.limit) if p.limit else None,
        }
        for p in w.perturbations
    ]
    return _envelope(
        "witness",
        matrix=fmt_matrix(w.matrix),
        cones=[_phi_doc(phi) for phi in w.cones],
        supports={
            ",".join(map(str, _phi_doc(phi))): sorted([i + 1, j + 1] for i, j in s)
            for phi, s in w.supports.items()
        },
        incomparable=[_phi_doc(phi) for phi in w.incomparable],
        vertices=[fmt_vector(v) for v in w.vertices],
        perturbations=rows,
        verified=w.verified,
    )


def cmd_realize(phi, skew=False) -> dict:
    if skew:
        A = skewrank.realize_kite(phi)
    else:
        A = cones.realize(phi)
    return _envelope("realize", phi=_phi_doc(phi), **matrix_document(A, skew))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["json"], default="json")
    parser = argparse.ArgumentParser(
        prog="tropeig", description=__doc__.splitlines()[0], parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = command("eig", "eigenvalue, eigenvector or eigenpolytope")
    p.add_argument("--input", help="matrix document path, or - for stdin")

    p = command("classify", "combinatorial type of a matrix")
    p.add_argument("--input")
    p.add_argument("--skew", action="store_true", help="require a skew-symmetric input")
    p.add_argument("--require-generic", action="store_true", help="exit 3 on degenerate input")

    p = command("cone", "facet inequalities of a cone")
    p.add_argument("--phi", required=True, help="1-based images, e.g. 2,3,1")

    p = command("enum", "count or list connected functions or kites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["connected", "kites"], default="connected")
    p.add_argument("--count-only", action="store_true")

    p = command("fvector", "f-vector of the complex for n <= 4")
    p.add_argument("--n", type=int, required=True)

    p = command("rank", "tropical ranking of a skew-symmetric matrix")
    p.add_argument("--input")

    command("witness", "the 3x3 fan-failure witness")

    p = command("realize", "a matrix of a given combinatorial type")
    p.add_argument("--phi", required=True)
    p.add_argument("--skew", action="store_true", help="skew-symmetric realizer for a kite")
    return parser


def _dispatch(args) -> dict:
    c = args.command
    if c == "eig":
        return cmd_eig(_read_input(args.input))
    if c == "classify":
        A = _read_input(args.input)
        return cmd_classify(A, skew=args.skew, require_generic=args.require_generic)
    if c == "cone":
        return cmd_cone(parse_phi(args.phi))
    if c == "enum":
        return cmd_enum(args.n, args.kind, args.count_only)
    if c == "fvector":
        return cmd_fvector(args.n)
    if c == "rank":
        return cmd_rank(_read_input(args.input))
    if c == "witness":
        return cmd_witness()
    if c == "realize":
        return cmd_realize(parse_phi(args.phi), skew=args.skew)
    raise InputError(f"unknown command {c}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        doc = _dispatch(args)
    except Degenerate as exc:
        print(json.dumps(exc.doc, indent=2))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (InputError, TropError, ValueError, TypeError) as exc:
        print(json.dumps(_envelope(args.command, error=str(exc))), file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(doc, indent=2))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
