"""
Input loading and canonical JSON output.

Output is canonical: sorted keys, compact separators, polynomials as
``[[exponent, coefficient], ...]`` with increasing exponents. Dumping a
re-parsed document therefore reproduces it byte for byte.
"""

import json
from pathlib import Path

from .abgrp import FgAbGroup, canonical_form
from .decomp import LATTICE_BASIS_NOTE, AmalgamData, DecompositionReport, LatticePair
from .exactlin import IntMatrix
from .exceptions import InputError
from .forms import ModuleInputForm
from .knots import KnotReport
from .laurent import LaurentPoly, content, format_poly
from .present import LambdaPresentation


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def serialize_poly(p: LaurentPoly) -> list:
    return [[e, c] for e, c in p.terms]


def serialize_matrix(M: IntMatrix) -> list:
    return M.to_rows()


def serialize_presentation(P: LambdaPresentation) -> dict:
    return {
        "relators": P.relators,
        "generators": P.generators,
        "matrix": [[serialize_poly(a) for a in row] for row in P.matrix.to_rows()],
    }


def serialize_group(G: FgAbGroup) -> dict:
    rank, torsion = canonical_form(G)
    return {
        "generators": G.gens,
        "relations": serialize_matrix(G.relations),
        "free_rank": rank,
        "torsion": list(torsion),
        "pretty": str(G),
    }


def serialize_amalgam(A: AmalgamData) -> dict:
    return {
        "B": serialize_group(A.B),
        "U": serialize_group(A.U),
        "f": serialize_matrix(A.f.matrix),
        "g": serialize_matrix(A.g.matrix),
        "reduction_steps": A.reduction_steps,
    }


def serialize_pair(L: LatticePair | None):
    if L is None:
        return None
    return {"d": L.d, "F": serialize_matrix(L.F), "G": serialize_matrix(L.G)}


def _poly_or_none(p):
    return None if p is None else serialize_poly(p)


def serialize_order(delta: LaurentPoly) -> dict:
    nonzero = not delta.is_zero
    return {
        "delta": serialize_poly(delta),
        "pretty": format_poly(delta),
        "degree": delta.deg if nonzero else None,
        "coefficients": delta.coefficients(),
        "content": content(delta),
    }


def serialize_report(report: DecompositionReport) -> dict:
    return {
        "delta": serialize_poly(report.delta),
        "pretty": format_poly(report.delta),
        "degree": report.degree,
        "c0": report.c0,
        "cd": report.cd,
        "content": report.content,
        "amalgam": serialize_amalgam(report.amalgam),
        "nu": list(report.nu),
        "q": report.q,
        "square_presentation": report.square_presentation,
        "lattice": serialize_pair(report.lattice),
        "lattice_error": report.lattice_error,
        "lattice_basis": LATTICE_BASIS_NOTE if report.lattice is not None else None,
        "char_poly": _poly_or_none(report.char_poly),
        "index_f": report.index_f,
        "index_g": report.index_g,
        "pencil": serialize_pair(report.pencil),
        "checks": dict(report.checks),
        "self_checks": dict(report.self_checks),
        "passed": report.passed,
    }


def serialize_knot(report: KnotReport) -> dict:
    data = {
        "alexander": serialize_poly(report.alexander),
        "pretty": format_poly(report.alexander),
        "monic": report.monic,
        "palindromic": report.palindromic,
        "content": report.content,
        "genus": report.genus,
        "pairing_unimodular": report.pairing_unimodular,
        "decomposition": None,
        "seifert_reduction": None,
    }
    if report.decomposition is not None:
        data["decomposition"] = serialize_report(report.decomposition)
    if report.seifert_reduction is not None:
        red = report.seifert_reduction
        data["seifert_reduction"] = {
            "steps": red.steps,
            "B": {"free_rank": red.b_form[0], "torsion": list(red.b_form[1])},
            "U": {"free_rank": red.u_form[0], "torsion": list(red.u_form[1])},
        }
    return data


def parse_document(document, source="<input>"):
    """Validate a decoded JSON document; returns (kind, value)."""
    if not isinstance(document, dict):
        raise InputError(f"{source}: expected a JSON object at the top level")
    form = ModuleInputForm(data=document)
    if not form.is_valid():
        messages = [m for errors in form.errors.values() for m in errors]
        raise InputError(f"{source}: {'; '.join(messages)}")
    return form.module()


def load_input(path):
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path}: not valid UTF-8 at byte {exc.start}") from None
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return parse_document(document, str(path))
