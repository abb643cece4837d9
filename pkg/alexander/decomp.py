"""
Amalgam decompositions of Laurent modules.

A module M is rebuilt as the doubly infinite sum ... B ⊕_U B ⊕_U B ...
with identical amalgamating maps f, g: U -> B; t shifts the copies of B.
``build_initial`` reads B, U, f, g off a shift-normalized presentation,
``reduce`` makes f and g injective, and ``extract_lattice`` turns the
result into a pair of integer matrices F, G with Δ(M) ≐ det(tG - F)
whenever B and U are free.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .abgrp import (
    AbHom, FgAbGroup, canonical_form, compose, free_basis_transport, hom,
    induced_hom, kernel, quotient_by,
)
from .exactlin import IntMatrix, det, lattice_index
from .exceptions import LatticeError, RankMismatch, Singular, StepLimit
from .laurent import (
    LaurentPoly, associated, content, det_laurent, is_palindromic,
    normalize_unit, pencil,
)
from .present import (
    DEFAULT_MAX_MINORS, LambdaPresentation, ShiftNormalization, order,
    shift_normalize, unimodular_scramble,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 1000

CHECK_NAMES = (
    "order_match", "degree_bound", "c0_index", "cd_index", "palindromic", "monic",
)

LATTICE_BASIS_NOTE = (
    "F and G are written in the free basis chosen by the Smith normal form "
    "pivot rule; other bases give conjugate matrices with the same "
    "determinants and characteristic polynomial"
)


@dataclass(frozen=True)
class AmalgamData:
    B: FgAbGroup
    U: FgAbGroup
    f: AbHom
    g: AbHom
    reduction_steps: int = 0
    # (generator index i, shift nu) for each generator of B and of U
    provenance: tuple = ()
    u_provenance: tuple = ()

    def __post_init__(self):
        for h in (self.f, self.g):
            if h.source != self.U or h.target != self.B:
                raise ValueError("f and g must both map U to B")


@dataclass(frozen=True)
class LatticePair:
    d: int
    F: IntMatrix
    G: IntMatrix

    def __post_init__(self):
        for M in (self.F, self.G):
            if (M.rows, M.cols) != (self.d, self.d):
                raise ValueError(f"lattice matrices must be {self.d}x{self.d}")


@dataclass
class DecompositionReport:
    delta: LaurentPoly
    degree: int | None
    c0: int | None
    cd: int | None
    content: int
    amalgam: AmalgamData
    nu: tuple
    q: int
    square_presentation: bool
    lattice: LatticePair | None = None
    lattice_error: str | None = None
    char_poly: LaurentPoly | None = None
    index_f: int | None = None
    index_g: int | None = None
    pencil: LatticePair | None = None
    checks: dict = field(default_factory=dict)
    self_checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """No check (or self-check) came out false; skipped ones are None."""
        results = list(self.checks.values()) + list(self.self_checks.values())
        return all(v is not False for v in results)


def build_initial(N: ShiftNormalization) -> AmalgamData:
    P = N.presentation
    nu = N.nu

    b_index = {}
    provenance = []
    for i, top in enumerate(nu):
        for v in range(top + 1):
            b_index[i, v] = len(provenance)
            provenance.append((i, v))
    u_provenance = [(i, v) for i, top in enumerate(nu) for v in range(top)]

    relations = []
    for row in P.matrix.to_rows():
        rel = [0] * len(provenance)
        for i, a in enumerate(row):
            for v, c in a.terms:
                rel[b_index[i, v]] = c
        relations.append(rel)

    B = FgAbGroup.from_relations(len(provenance), relations)
    U = FgAbGroup.free(len(u_provenance))
    # f raises the index and g keeps it, so that the rows t*g(u) - f(u)
    # read a_{i,v+1} = t*a_{i,v}
    f_cols = [b_index[i, v + 1] for i, v in u_provenance]
    g_cols = [b_index[i, v] for i, v in u_provenance]
    f = hom(U, B, _unit_columns(len(provenance), f_cols))
    g = hom(U, B, _unit_columns(len(provenance), g_cols))
    return AmalgamData(
        B, U, f, g, 0, tuple(provenance), tuple(u_provenance),
    )


def _unit_columns(rows: int, hits: list) -> IntMatrix:
    return IntMatrix.from_rows(
        ([int(hits[j] == i) for j in range(len(hits))] for i in range(rows)),
        len(hits),
    )


def reduce(A: AmalgamData, max_steps: int = DEFAULT_MAX_STEPS) -> AmalgamData:
    """Quotient U by ker f + ker g and B by f(ker g) + g(ker f) until f, g inject."""
    B, U, f, g = A.B, A.U, A.f, A.g
    steps = A.reduction_steps
    while True:
        Kf, incl_f = kernel(f)
        Kg, incl_g = kernel(g)
        if Kf.is_trivial() and Kg.is_trivial():
            break
        if steps - A.reduction_steps >= max_steps:
            raise StepLimit(f"reduction did not settle after {max_steps} steps")
        logger.debug(
            "reduction step %d: ker f = %s, ker g = %s", steps + 1, Kf, Kg,
        )

        u_extra = incl_f.matrix.T.vstack(incl_g.matrix.T)
        b_extra = compose(f, incl_g).matrix.T.vstack(compose(g, incl_f).matrix.T)
        U_new = quotient_by(U, u_extra)[0].simplified()
        B_new = quotient_by(B, b_extra)[0].simplified()
        pU = hom(U, U_new, IntMatrix.identity(U.gens))
        pB = hom(B, B_new, IntMatrix.identity(B.gens))
        f, g = induced_hom(f, pU, pB), induced_hom(g, pU, pB)
        B, U = B_new, U_new
        steps += 1

    return AmalgamData(B, U, f, g, steps, A.provenance, A.u_provenance)


def presentation_from_amalgam(A: AmalgamData) -> LambdaPresentation:
    """B's relations as constant rows, then t*g(u) - f(u) for each generator u."""
    Q = A.B.gens
    rows = [[LaurentPoly.constant(x) for x in A.B.relations.row(i)]
            for i in range(A.B.relations.rows)]
    for j in range(A.U.gens):
        rows.append([
            LaurentPoly({1: gx, 0: -fx})
            for gx, fx in zip(A.g.matrix.col(j), A.f.matrix.col(j))
        ])
    return LambdaPresentation.from_rows(rows, Q)


def presentation_from_pair(L: LatticePair) -> LambdaPresentation:
    """Rows t*g(u) - f(u) over the standard basis: the matrix (tG - F)^T."""
    return LambdaPresentation.from_rows(pencil(L.G, L.F).T.to_rows(), L.d)


def extract_lattice(A: AmalgamData) -> LatticePair:
    if A.B == A.U:
        rank_b, (F, G) = free_basis_transport(A.B, [A.f, A.g])
        rank_u = rank_b
    else:
        rank_b, into_b = free_basis_transport(A.B, [A.f, A.g])
        free_b = FgAbGroup.free(rank_b)
        rank_u, (F, G) = free_basis_transport(
            A.U, [hom(A.U, free_b, M) for M in into_b],
        )
    if rank_b != rank_u:
        raise RankMismatch(f"B has rank {rank_b} but U has rank {rank_u}")
    if det(F) == 0 or det(G) == 0:
        raise Singular(f"det F = {det(F)}, det G = {det(G)}")
    return LatticePair(rank_b, F, G)



def char_poly(L: LatticePair) -> LaurentPoly:
    return normalize_unit(det_laurent(pencil(L.G, L.F)))


def pencil_pair(P: LambdaPresentation) -> LatticePair | None:
    """Read a lattice pair straight off a square linear pencil A0 + t*A1.

    Such a presentation already is an amalgam with B = U = Z^d, F = -A0^T
    and G = A1^T; it only counts when both coefficient matrices are
    nonsingular.
    """
    N = shift_normalize(P)
    Pn = N.presentation
    if not Pn.is_square or N.free_generators or any(v > 1 for v in N.nu):
        return None
    d = Pn.generators
    A0 = IntMatrix(d, d, tuple(a.coeff(0) for a in Pn.matrix.entries))
    A1 = IntMatrix(d, d, tuple(a.coeff(1) for a in Pn.matrix.entries))
    if det(A0) == 0 or det(A1) == 0:
        return None
    return LatticePair(d, A0.T.scaled(-1), A1.T)


def minimal_generators(G: FgAbGroup) -> int:
    rank, torsion = canonical_form(G)
    return rank + len(torsion)


def decompose(
    P: LambdaPresentation,
    max_minors: int = DEFAULT_MAX_MINORS,
    max_steps: int = DEFAULT_MAX_STEPS,
    seed: int | None = None,
    scramble_steps: int = 8,
) -> DecompositionReport:
    delta = order(P, max_minors=max_minors)
    N = shift_normalize(P)
    amalgam = reduce(build_initial(N), max_steps=max_steps)

    nonzero = not delta.is_zero
    report = DecompositionReport(
        delta=delta,
        degree=delta.deg if nonzero else None,
        c0=delta.trailing if nonzero else None,
        cd=delta.leading if nonzero else None,
        content=content(delta),
        amalgam=amalgam,
        nu=N.nu,
        q=minimal_generators(amalgam.U),
        square_presentation=P.without_zero_rows().is_square,
        pencil=pencil_pair(P),
    )

    try:
        report.lattice = extract_lattice(amalgam)
    except LatticeError as exc:
        report.lattice_error = str(exc)
        logger.debug("no lattice pair: %s", exc)
    else:
        report.char_poly = char_poly(report.lattice)
        report.index_f = lattice_index(report.lattice.F)
        report.index_g = lattice_index(report.lattice.G)

    amalgam_order = order(presentation_from_amalgam(amalgam), max_minors=max_minors)
    order_match = associated(delta, amalgam_order)
    if report.char_poly is not None:
        order_match = order_match and associated(delta, report.char_poly)

    lattice = report.lattice is not None
    report.checks = {
        "order_match": order_match,
        "degree_bound": report.degree <= report.q if nonzero else None,
        "c0_index": abs(report.c0) == report.index_f if lattice and nonzero else None,
        "cd_index": abs(report.cd) == report.index_g if lattice and nonzero else None,
        "palindromic": is_palindromic(delta) if nonzero else None,
        "monic": abs(report.c0) == abs(report.cd) == 1 if nonzero else None,
    }
    if seed is not None:
        scrambled = unimodular_scramble(P, seed, steps=scramble_steps)
        report.self_checks["scramble_invariant"] = associated(
            delta, order(scrambled, max_minors=max_minors)
        )
    return report
