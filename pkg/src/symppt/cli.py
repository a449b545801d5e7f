"""Command-line interface: ``analyze``, ``generate``, ``bases`` and ``verify``.

Exit codes: 0 success / all criteria pass, 2 some criterion fails, 1 bad input.
Complex numbers are written as ``[re, im]`` pairs.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from math import isclose, sqrt

import numpy as np

from . import __version__
from .correlations import schur_block
from .errors import SymPPTError, ValidationError
from .magic import Convention, basis_family
from .ppt import DEFAULT_TOL, evaluate_criteria
from .states import project_symmetric, spec_from_dict, spec_to_dict
from .tensor import contraction_check, tensor_from_state, validate_density
from .verify import MAX_N, run_suite

SCHEMA_VERSION = "1"
SEED_ENV = "SYMPPT_SEED"

log = logging.getLogger("symppt")


class InputError(Exception):
    pass


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def default_seed() -> int:
    try:
        return int(os.environ.get(SEED_ENV, "0"))
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer")


# --- documents ----------------------------------------------------------------


def matrix_to_pairs(mat: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat, dtype=complex)]


def pairs_to_matrix(rows) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"matrix must be a list of rows of [re, im] pairs: {exc}") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValidationError("matrix must be a list of rows of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


REPRESENTATIONS = ("dicke_matrix", "spec", "computational_matrix")


def load_state(doc: dict, computational: bool = False) -> tuple[np.ndarray, dict]:
    """Turn a state document into ``(rho, echo)``; ``echo`` describes the input."""
    if not isinstance(doc, dict):
        raise ValidationError("state document must be a JSON object")
    present = [k for k in REPRESENTATIONS if k in doc]
    if len(present) != 1:
        raise ValidationError(f"document needs exactly one of {REPRESENTATIONS}, found {present}")
    try:
        n = int(doc["N"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError("document needs an integer field 'N'") from exc
    if not 1 <= n <= MAX_N:
        raise ValidationError(f"N must be between 1 and {MAX_N}, got {n}")
    kind = present[0]
    echo = {"N": n, "representation": kind}
    if kind == "spec":
        spec = spec_from_dict({**doc["spec"], "N": doc["spec"].get("N", n)}, default_seed())
        if spec.n != n:
            raise ValidationError(f"spec N={spec.n} does not match document N={n}")
        echo["spec"] = spec_to_dict(spec)
        rho = spec.density()
    elif kind == "dicke_matrix":
        rho = pairs_to_matrix(doc["dicke_matrix"])
    else:
        if not computational:
            raise ValidationError("computational_matrix input requires --computational")
        big = pairs_to_matrix(doc["computational_matrix"])
        rho, residual = project_symmetric(big, n)
        echo["projection_residual"] = _num(residual)
        if residual > 1e-10:
            log.warning("input is not symmetric; projection residual %.3e", residual)
    return validate_density(rho, n), echo


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- analyze --------------------------------------------------------------------


def build_report(rho: np.ndarray, echo: dict, tol: float, check_similarity: bool, correlations: bool) -> dict:
    n = rho.shape[0] - 1
    report = evaluate_criteria(rho, tol, check_similarity)
    x = tensor_from_state(rho)
    tensor = {
        "X_0": _num(x.at_key((n, 0, 0, 0))),
        "bloch": [_num(x.at_key((n - 1, 1, 0, 0))), _num(x.at_key((n - 1, 0, 1, 0))), _num(x.at_key((n - 1, 0, 0, 1)))],
    }
    if n >= 2:
        tensor["contraction_violation"] = _num(contraction_check(x))
    criteria = []
    for res in report.results:
        entry = {
            "r": res.r,
            "lambda": _num(res.lam),
            "min_eigenvalue": _num(res.min_eigenvalue),
            "verdict": "pass" if res.passed else "fail",
        }
        if res.similarity_residual is not None:
            entry["similarity_residual"] = _num(res.similarity_residual)
        criteria.append(entry)
    corr = []
    if correlations:
        for r in range(1, n // 2 + 1):
            lam = float(np.linalg.eigvalsh(schur_block(x, r))[0])
            corr.append({"r": r, "min_eigenvalue": _num(lam), "verdict": "pass" if lam >= -tol else "fail"})
    overall = report.passed and all(c["verdict"] == "pass" for c in corr)
    return {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "input": echo,
        "tol": tol,
        "tensor": tensor,
        "criteria": criteria,
        "correlations": corr,
        "overall": "pass" if overall else "fail",
        "sufficient": report.sufficient,
    }


def report_text(doc: dict) -> str:
    lines = [f"N = {doc['input']['N']}  ({doc['input']['representation']})"]
    if "spec" in doc["input"]:
        lines.append("spec: " + json.dumps(doc["input"]["spec"]))
    if "projection_residual" in doc["input"]:
        lines.append(f"projection residual: {_fmt(doc['input']['projection_residual'])}")
    t = doc["tensor"]
    lines.append("bloch vector: " + " ".join(_fmt(v) for v in t["bloch"]))
    if "contraction_violation" in t:
        lines.append(f"contraction violation: {_fmt(t['contraction_violation'])}")
    lines.append(f"tolerance: {_fmt(doc['tol'])}")
    for c in doc["criteria"]:
        line = f"T^({c['r']}) >= 0: {c['verdict'].upper()}  min eig {_fmt(c['min_eigenvalue'])}  lambda {_fmt(c['lambda'])}"
        if "similarity_residual" in c:
            line += f"  similarity residual {_fmt(c['similarity_residual'])}"
        lines.append(line)
    for c in doc["correlations"]:
        lines.append(f"C^({c['r']}) >= 0: {c['verdict'].upper()}  min eig {_fmt(c['min_eigenvalue'])}")
    lines.append(f"overall: {doc['overall'].upper()}")
    if doc["sufficient"]:
        lines.append("criterion is necessary and sufficient for classicality at this N")
    else:
        lines.append("criteria are necessary only; passing does not prove classicality")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    rho, echo = load_state(_read_json(args.input), args.computational)
    doc = build_report(rho, echo, args.tol, not args.no_similarity, not args.no_correlations)
    _write(args.output, dumps(doc) if args.format == "json" else report_text(doc))
    return 0 if doc["overall"] == "pass" else 2


# --- generate -------------------------------------------------------------------


def cmd_generate(args) -> int:
    spec = {"kind": args.kind, "N": args.N}
    for name in ("k", "theta", "phi", "m", "seed"):
        value = getattr(args, name)
        if value is not None:
            spec[name] = value
    if args.components is not None:
        try:
            spec["components"] = json.loads(args.components)
        except json.JSONDecodeError as exc:
            raise InputError(f"--components is not valid JSON: {exc}") from exc
    parsed = spec_from_dict(spec, default_seed())
    rho = parsed.density()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "N": parsed.n,
        "dicke_matrix": matrix_to_pairs(rho),
        "generated_from": spec_to_dict(parsed),
    }
    _write(args.output, dumps(doc))
    return 0


# --- bases ----------------------------------------------------------------------

_SURDS = [(1.0, "1"), (0.5, "1/2"), (1 / sqrt(2), "1/√2")]


def format_entry(z: complex, eps: float = 1e-12) -> str:
    """Exact text for 0, ±1, ±1/2, ±1/√2 (optionally times i); decimals otherwise."""
    re, im = z.real, z.imag
    if abs(re) < eps and abs(im) < eps:
        return "0"
    if abs(im) < eps:
        part, imaginary = re, False
    elif abs(re) < eps:
        part, imaginary = im, True
    else:
        return f"{re:.12g}{im:+.12g}i"
    for val, text in _SURDS:
        if isclose(abs(part), val, abs_tol=eps):
            if imaginary:
                text = "i" + text[1:]
            return ("-" if part < 0 else "") + text
    return f"{part:.12g}i" if imaginary else f"{part:.12g}"


def cmd_bases(args) -> int:
    fam = basis_family(args.N, args.convention)
    if args.format == "json":
        doc = {
            "N": fam.n,
            "convention": fam.convention.value,
            "columns": [
                {"label": list(lab), "vector": [[_num(z.real), _num(z.imag)] for z in vec]}
                for lab, vec in zip(fam.labels, fam.vectors)
            ],
        }
        _write(args.output, dumps(doc))
        return 0
    n = fam.n
    lines = [f"N = {n}, convention = {fam.convention.value}; rows are |{'b' * n}>"]
    for lab, vec in zip(fam.labels, fam.vectors):
        terms = [f"{format_entry(z)}|{b:0{n}b}>" for b, z in enumerate(vec) if abs(z) > 1e-12]
        lines.append(f"({''.join(map(str, lab))}): " + "  ".join(terms))
    _write(args.output, "\n".join(lines) + "\n")
    return 0


# --- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.n_max > MAX_N:
        raise InputError(f"--n-max must be <= {MAX_N} (dense 2^N x 2^N matrices); use a smaller value")
    if args.n_max < 2:
        raise InputError("--n-max must be >= 2")
    extra = [load_state(_read_json(path))[0] for path in args.fixture]
    seed = default_seed() if args.seed is None else args.seed
    results = run_suite(args.n_max, args.seeds, args.tol, seed, extra)
    if args.format == "json":
        doc = [
            {"property": p.name, "cases": p.cases, "worst": _num(p.worst), "threshold": p.threshold,
             "verdict": "pass" if p.passed else "fail"}
            for p in results
        ]
        _write(args.output, dumps(doc))
    else:
        lines = [
            f"{p.name:<20} {'PASS' if p.passed else 'FAIL'}  worst {_fmt(p.worst)}  (limit {_fmt(p.threshold)}, {p.cases} cases)"
            for p in results
        ]
        _write(args.output, "\n".join(lines) + "\n")
    return 0 if all(p.passed for p in results) else 2


# --- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symppt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="evaluate PPT and correlation criteria for a state document")
    p.add_argument("input", help="state document (JSON), '-' for stdin")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-similarity", action="store_true", help="skip the R^dagger PT R check")
    p.add_argument("--no-correlations", action="store_true")
    p.add_argument("--computational", action="store_true", help="accept a 2^N computational_matrix input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="write a state document with an explicit Dicke-basis matrix")
    p.add_argument("kind", choices=("coherent", "dicke", "ghz", "mixture", "random_density", "random_classical"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--theta", type=float)
    p.add_argument("--phi", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--components", help="JSON list of [weight, theta, phi]")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bases", help="print Bell / magic basis families")
    p.add_argument("--N", type=int, choices=(2, 4), required=True)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="raw")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("verify", help="run the numerical property suite")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seeds", type=int, default=5, help="random states per N")
    p.add_argument("--seed", type=int, help=f"master seed (default: ${SEED_ENV} or 0)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--fixture", action="append", default=[], help="extra state document to include")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        print("symppt: error: --tol must be positive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (InputError, SymPPTError) as exc:
        print(f"symppt: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
