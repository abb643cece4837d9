"""
Knot frontend: Seifert matrices, Alexander polynomials and the monic
(fiberedness) screen.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .abgrp import FgAbGroup, canonical_form, hom
from .decomp import (
    DEFAULT_MAX_STEPS, AmalgamData, DecompositionReport, decompose, reduce,
)
from .exactlin import IntMatrix, det
from .laurent import LaurentPoly, content, is_palindromic, pencil
from .present import DEFAULT_MAX_MINORS, LambdaPresentation, order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeifertMatrix:
    V: IntMatrix

    def __post_init__(self):
        if not self.V.is_square or self.V.rows % 2:
            raise ValueError(
                f"a Seifert matrix is square of even size, got {self.V.rows}x{self.V.cols}"
            )

    @classmethod
    def from_rows(cls, rows) -> SeifertMatrix:
        rows = [list(r) for r in rows]
        return cls(IntMatrix.from_rows(rows, len(rows)))

    @property
    def genus(self) -> int:
        return self.V.rows // 2

    def pairing_determinant(self) -> int:
        """det(V - V^T); ±1 for a genuine Seifert pairing."""
        return det(IntMatrix(
            self.V.rows, self.V.cols,
            tuple(a - b for a, b in zip(self.V.entries, self.V.T.entries)),
        ))


@dataclass
class SeifertReduction:
    steps: int
    b_form: tuple
    u_form: tuple


@dataclass
class KnotReport:
    alexander: LaurentPoly
    monic: bool
    palindromic: bool
    content: int
    genus: int
    pairing_unimodular: bool
    decomposition: DecompositionReport | None = None
    seifert_reduction: SeifertReduction | None = None


def seifert_to_presentation(S: SeifertMatrix) -> LambdaPresentation:
    """The square presentation t*V - V^T."""
    n = S.V.rows
    return LambdaPresentation(n, n, pencil(S.V, S.V.T))


def seifert_amalgam(S: SeifertMatrix) -> AmalgamData:
    """Splitting along the Seifert surface: U = B = Z^2g, f = V, g = V^T.

    Its amalgam presentation is exactly t*V - V^T.
    """
    n = S.V.rows
    B = FgAbGroup.free(n)
    U = FgAbGroup.free(n)
    provenance = tuple((i, 0) for i in range(n))
    return AmalgamData(
        B, U, hom(U, B, S.V), hom(U, B, S.V.T), 0, provenance, provenance,
    )


def analyze_knot(
    S: SeifertMatrix,
    with_decomposition: bool = False,
    max_minors: int = DEFAULT_MAX_MINORS,
    max_steps: int = DEFAULT_MAX_STEPS,
    seed: int | None = None,
    scramble_steps: int = 8,
) -> KnotReport:
    pairing = S.pairing_determinant()
    if abs(pairing) != 1:
        logger.warning(
            "det(V - V^T) = %d; V is not the matrix of a Seifert pairing of a knot",
            pairing,
        )
    P = seifert_to_presentation(S)
    delta = order(P, max_minors=max_minors)
    nonzero = not delta.is_zero
    report = KnotReport(
        alexander=delta,
        monic=nonzero and abs(delta.leading) == abs(delta.trailing) == 1,
        palindromic=nonzero and is_palindromic(delta),
        content=content(delta),
        genus=S.genus,
        pairing_unimodular=abs(pairing) == 1,
    )
    if with_decomposition:
        report.decomposition = decompose(
            P, max_minors=max_minors, max_steps=max_steps,
            seed=seed, scramble_steps=scramble_steps,
        )
        reduced = reduce(seifert_amalgam(S), max_steps=max_steps)
        report.seifert_reduction = SeifertReduction(
            steps=reduced.reduction_steps,
            b_form=canonical_form(reduced.B),
            u_form=canonical_form(reduced.U),
        )
    return report
