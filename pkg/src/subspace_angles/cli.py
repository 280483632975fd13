"""Command line front end.

Matrices are read from CSV (one row vector per line, no header) or JSON
(``{"rows": [[...], ...]}``); a path of ``-`` reads standard input. Every
command prints one JSON report with sorted keys and 17 significant digits.

Exit codes: 0 success, 2 usage error, 3 unreadable input, 4 the inputs
violate a mathematical precondition.
"""

import argparse
import hashlib
import json
import math
import sys
from dataclasses import asdict

import numpy as np

from .canonical import canonical_bases, synthesize_pair
from .errors import MathError
from .inertia import inertia_split
from .principal import dual_principal_values, principal_decomposition, principal_spectrum
from .subspace import angle_between, make_subspace, project_gram
from .tolerances import DEFAULT

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_MATH = 4


class ParseError(Exception):
    """Malformed matrix input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class _UsageError(Exception):
    pass


def _number(token, line):
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"not a number: {token.strip()!r}", line) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite value {token.strip()!r}", line)
    return value


def _parse_csv(text):
    rows, width = [], None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = [_number(tok, lineno) for tok in line.split(",")]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno)
        rows.append(row)
    if not rows:
        raise ParseError("empty input", 1)
    return np.array(rows)


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("rows"), list) or not doc["rows"]:
        raise ParseError('expected an object with a nonempty "rows" list')
    rows, width = [], None
    for k, row in enumerate(doc["rows"], start=1):
        if not isinstance(row, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in row
        ):
            raise ParseError(f"row {k} is not a list of numbers")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row {k} has {len(row)} entries, expected {width}")
        rows.append([_number(repr(v), None) for v in row])
    if not width:
        raise ParseError("rows are empty")
    return np.array(rows, dtype=float)


def parse_matrix(text):
    """Parse CSV or JSON matrix text; JSON is recognized by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_csv(text)


def _read(path, stdin):
    if path == "-":
        data = stdin.read()
        if isinstance(data, str):
            data = data.encode()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8 text") from None
    return text, hashlib.sha256(data).hexdigest()


def _fmt_float(x):
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize {x}")
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def dumps(obj):
    """Deterministic JSON: sorted keys, floats with 17 significant digits."""
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {dumps(v)}" for k, v in sorted(obj.items()))
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    return json.dumps(str(obj))


def _angle(rad, degrees):
    return math.degrees(rad) if degrees else rad


def _spectrum(spec, degrees):
    angles = [_angle(math.acos(math.sqrt(v)), degrees) for v in spec.values]
    return {
        "values": list(spec.values),
        "multiplicities": list(spec.multiplicities),
        "total": spec.total,
        "angles": angles,
    }


class _Inputs:
    def __init__(self, stdin, tol):
        self.stdin = stdin
        self.tol = tol
        self.echo = {}

    def matrix(self, name, path):
        text, digest = _read(path, self.stdin)
        m = parse_matrix(text)
        self.echo[name] = {"path": path, "rows": m.shape[0], "cols": m.shape[1], "sha256": digest}
        return m

    def subspace(self, name, path):
        m = self.matrix(name, path)
        return make_subspace(m.shape[1], m, self.tol)


def _cmd_angle(args, inp):
    r = angle_between(inp.subspace("a", args.a), inp.subspace("b", args.b))
    out = asdict(r)
    out["phi"] = _angle(r.phi, args.degrees)
    if args.both_angles:
        out["phi_supplement"] = _angle(math.pi - r.phi, args.degrees)
    return out


def _cmd_principal(args, inp):
    s1, s2 = inp.subspace("a", args.a), inp.subspace("b", args.b)
    return _spectrum(principal_spectrum(s1, s2, inp.tol), args.degrees)


def _cmd_decompose(args, inp):
    s1, s2 = inp.subspace("a", args.a), inp.subspace("b", args.b)
    d = principal_decomposition(s1, s2, inp.tol)
    pairs = [
        {"value": v, "first": x.ortho_basis, "second": y.ortho_basis}
        for v, (x, y) in zip(d.spectrum.values, d.pairs)
    ]
    return {
        "spectrum": _spectrum(d.spectrum, args.degrees),
        "pairs": pairs,
        "unmatched_first": None if d.unmatched1 is None else d.unmatched1.ortho_basis,
        "unmatched_second": None if d.unmatched2 is None else d.unmatched2.ortho_basis,
    }


def _cmd_canonical(args, inp):
    cf = canonical_bases(inp.subspace("a", args.a), inp.subspace("b", args.b), inp.tol)
    return {
        "spec": asdict(cf.spec),
        "P": cf.matrixP,
        "sigma": cf.basis_sigma,
        "sigma_star": cf.basis_sigma_star,
        "pi": cf.basis_pi,
        "pi_star": cf.basis_pi_star,
        "sigma_source": cf.sigma_source,
        "pi_source": cf.pi_source,
    }


def _values_arg(tokens):
    out = []
    for tok in tokens:
        for part in tok.split(","):
            if part.strip():
                try:
                    out.append(float(part))
                except ValueError:
                    raise _UsageError(f"--values: not a number: {part!r}") from None
    return out


def _cmd_synthesize(args, inp):
    pair = synthesize_pair(args.n, args.p, args.q, _values_arg(args.values), inp.tol)
    inp.echo["spec"] = {"n": args.n, "p": args.p, "q": args.q}
    return {"first": pair.first.ortho_basis, "second": pair.second.ortho_basis, "dualized": pair.dualized}


def _cmd_dual(args, inp):
    d = dual_principal_values(inp.subspace("a", args.a), inp.subspace("b", args.b), inp.tol)
    return {
        "pair_spectrum": _spectrum(d.pair_spectrum, args.degrees),
        "dual_spectrum": _spectrum(d.dual_spectrum, args.degrees),
        "unit_mult_shift": d.unit_mult_shift,
    }


def _cmd_project(args, inp):
    s = inp.subspace("a", args.a)
    try:
        x = np.array([float(t) for t in args.vector.split(",")])
        inp.echo["vector"] = {"inline": True, "cols": x.size}
    except ValueError:
        x = inp.matrix("vector", args.vector)
        if x.shape[0] != 1:
            raise ParseError(f"vector file must hold one row, got {x.shape[0]}") from None
        x = x[0]
    xp = project_gram(x, s)
    return {"projection": xp, "residual": x - xp}


def _cmd_inertia(args, inp):
    a = inp.matrix("a", args.a)
    r = inertia_split(a, inp.subspace("l", args.l), inp.tol)
    return asdict(r)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="subspace-angles",
        description="Angles, principal values and canonical forms of subspace pairs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degrees", action="store_true", help="report angles in degrees")
    common.add_argument("--both-angles", action="store_true", help="also report pi - phi")
    common.add_argument("--tol-cluster", type=float, help="gap merging principal values")
    common.add_argument("--tol-rank", type=float, help="relative rank threshold")
    common.add_argument("--tol-orth", type=float, help="orthonormality check threshold")

    sub = parser.add_subparsers(dest="command", required=True)
    pair_cmds = {
        "angle": (_cmd_angle, "angle between span(A) and span(B)"),
        "principal": (_cmd_principal, "principal values with multiplicities"),
        "decompose": (_cmd_decompose, "bases of all principal subspace pairs"),
        "canonical": (_cmd_canonical, "canonical matrix and the four canonical bases"),
        "dual": (_cmd_dual, "principal values of the pair and of the complements"),
    }
    for name, (fn, text) in pair_cmds.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--a", required=True, help="rows spanning the first subspace")
        p.add_argument("--b", required=True, help="rows spanning the second subspace")
        p.set_defaults(func=fn)

    p = sub.add_parser("synthesize", parents=[common], help="pair with prescribed principal values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--values", nargs="+", required=True, help="squared cosines, space or comma separated")
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("project", parents=[common], help="orthogonal projection by bordered determinants")
    p.add_argument("--a", required=True, help="rows spanning the subspace")
    p.add_argument("--vector", required=True, help="comma separated entries or a one-row matrix file")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("inertia", parents=[common], help="negative-eigenvalue split of a symmetric form")
    p.add_argument("--a", required=True, help="symmetric nonsingular matrix")
    p.add_argument("--l", required=True, help="rows spanning the subspace")
    p.set_defaults(func=_cmd_inertia)
    return parser


def _tolerances(args):
    changes = {}
    for flag, field in (("tol_cluster", "cluster"), ("tol_rank", "rank"), ("tol_orth", "orth")):
        value = getattr(args, flag)
        if value is not None:
            if not (math.isfinite(value) and value > 0):
                raise _UsageError(f"--{flag.replace('_', '-')} must be positive")
            changes[field] = value
    return DEFAULT.replace(**changes)


def run(argv, stdin=None, stderr=None):
    """Execute one command; returns ``(exit_code, report_text_or_None)``."""
    stdin = sys.stdin if stdin is None else stdin
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    try:
        tol = _tolerances(args)
        inp = _Inputs(stdin, tol)
        result = args.func(args, inp)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE, None
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE, None
    except MathError as exc:
        print(f"precondition failed: {exc}", file=stderr)
        return EXIT_MATH, None
    report = {
        "command": args.command,
        "inputs": inp.echo,
        "result": result,
        "tolerances": asdict(tol),
    }
    return 0, dumps(report)


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text is not None:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
