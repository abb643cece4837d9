"""
Presentations of modules over Z[t, t^-1] and their order.

Rows of a presentation matrix are relators, columns are generators; the
module is the cokernel. The order is the gcd of the maximal (s x s)
minors, returned as the canonical associate.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .exactlin import IntMatrix, rank
from .exceptions import ResourceLimit
from .laurent import (
    ONE, ZERO, LaurentMatrix, LaurentPoly, det_laurent, format_poly, gcd,
    normalize_unit,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_MINORS = 10 ** 6


@dataclass(frozen=True)
class LambdaPresentation:
    relators: int
    generators: int
    matrix: LaurentMatrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.relators, self.generators):
            raise ValueError(
                f"matrix is {self.matrix.rows}x{self.matrix.cols}, expected "
                f"{self.relators}x{self.generators}"
            )

    @classmethod
    def from_rows(cls, rows, generators: int | None = None) -> LambdaPresentation:
        matrix = LaurentMatrix.from_rows(rows, generators)
        return cls(matrix.rows, matrix.cols, matrix)

    @classmethod
    def empty(cls, generators: int = 0) -> LambdaPresentation:
        return cls.from_rows([], generators)

    @property
    def is_square(self) -> bool:
        return self.relators == self.generators

    def without_zero_rows(self) -> LambdaPresentation:
        rows = [r for r in self.matrix.to_rows() if any(r)]
        return LambdaPresentation.from_rows(rows, self.generators)


@dataclass(frozen=True)
class ShiftNormalization:
    presentation: LambdaPresentation
    nu: tuple
    generator_shifts: tuple
    relator_shifts: tuple
    free_generators: tuple = field(default=())


def _eliminate_unit_pivots(rows: list, ncols: int):
    """Strip unit entries together with their row and column.

    A unit entry u clears its column by row operations; every maximal minor
    then either misses its row (and vanishes) or expands to u times a
    maximal minor of the rest. Returns the reduced rows, the remaining
    column count and the product of the stripped units.
    """
    cols = list(range(ncols))
    unit = ONE
    while True:
        pos = next(
            ((i, j) for i, row in enumerate(rows) for j in cols if row[j].is_unit),
            None,
        )
        if pos is None:
            return rows, cols, unit
        i, j = pos
        u = rows[i][j]
        pivot = rows.pop(i)
        inv = u.inverse_unit()
        for row in rows:
            a = row[j]
            if a:
                k = a * inv
                for c in cols:
                    if pivot[c]:
                        row[c] = row[c] - k * pivot[c]
        cols.remove(j)
        unit = unit * u
        logger.debug("eliminated unit pivot %s", format_poly(u))


def _row_key(row):
    # rows that differ by a unit give the same minors up to that unit
    a = next(x for x in row if x)
    sign = -1 if a.leading < 0 else 1
    return tuple(sign * x.shift(-a.ord) for x in row)


def _drop_associate_rows(rows):
    seen = set()
    kept = []
    for row in rows:
        key = _row_key(row)
        if key not in seen:
            seen.add(key)
            kept.append(row)
    return kept


def _evaluate(p: LaurentPoly, t0: int) -> int:
    return sum(c * t0 ** e for e, c in p.terms)


def generic_rank(rows, s: int) -> int:
    """Rank over Q(t) of a Laurent matrix given as nonzero rows.

    Every s x s minor of the row-shifted matrix has degree at most
    s * (largest entry degree), so a nonzero one survives evaluation at one
    of that many + 1 points.
    """
    shifted = []
    for row in rows:
        k = -min(a.ord for a in row if a)
        shifted.append([a.shift(k) for a in row])
    bound = s * max((a.deg for row in shifted for a in row if a), default=0)
    best = 0
    for t0 in range(1, bound + 2):
        values = IntMatrix.from_rows(
            ([_evaluate(a, t0) for a in row] for row in shifted), s,
        )
        best = max(best, rank(values))
        if best == min(s, len(rows)):
            break
    return best


def order(P: LambdaPresentation, max_minors: int = DEFAULT_MAX_MINORS) -> LaurentPoly:
    s = P.generators
    rows = [list(r) for r in P.matrix.to_rows() if any(r)]
    rows, cols, _ = _eliminate_unit_pivots(rows, s)
    rows = [[row[c] for c in cols] for row in rows]
    rows = _drop_associate_rows([r for r in rows if any(r)])
    s = len(cols)
    r = len(rows)
    if s == 0:
        return ONE
    # fewer relators than generators: padding with zero rows kills every minor
    if r < s:
        return ZERO
    if any(not any(row[c] for row in rows) for c in range(s)):
        return ZERO
    if r > s and generic_rank(rows, s) < s:
        return ZERO

    count = comb(r, s)
    if count > max_minors:
        raise ResourceLimit(
            f"order needs C({r}, {s}) = {count} minors, above the cap of {max_minors}"
        )
    logger.debug("order: enumerating up to %d minors of a %dx%d matrix", count, r, s)

    running = ZERO
    for subset in combinations(range(r), s):
        minor = det_laurent(LaurentMatrix.from_rows((rows[i] for i in subset), s))
        running = gcd(running, minor)
        if running == ONE:
            break
    return normalize_unit(running)


def shift_normalize(P: LambdaPresentation) -> ShiftNormalization:
    P = P.without_zero_rows()
    rows = P.matrix.to_rows()

    relator_shifts = []
    for i, row in enumerate(rows):
        k = -min(a.ord for a in row if a)
        relator_shifts.append(k)
        rows[i] = [a.shift(k) for a in row]

    generator_shifts = []
    nu = []
    free = []
    for j in range(P.generators):
        column = [row[j] for row in rows if row[j]]
        if not column:
            free.append(j)
            generator_shifts.append(0)
            nu.append(0)
            continue
        k = -min(a.ord for a in column)
        generator_shifts.append(k)
        for row in rows:
            row[j] = row[j].shift(k)
        nu.append(max(row[j].deg for row in rows if row[j]))

    if free:
        logger.warning("generators %s occur in no relator", free)
    return ShiftNormalization(
        presentation=LambdaPresentation.from_rows(rows, P.generators),
        nu=tuple(nu),
        generator_shifts=tuple(generator_shifts),
        relator_shifts=tuple(relator_shifts),
        free_generators=tuple(free),
    )


def direct_sum(P1: LambdaPresentation, P2: LambdaPresentation) -> LambdaPresentation:
    s1, s2 = P1.generators, P2.generators
    rows = [list(r) + [ZERO] * s2 for r in P1.matrix.to_rows()]
    rows += [[ZERO] * s1 + list(r) for r in P2.matrix.to_rows()]
    return LambdaPresentation.from_rows(rows, s1 + s2)


def block_triangular(
    P1: LambdaPresentation, P2: LambdaPresentation, coupling: LaurentMatrix
) -> LambdaPresentation:
    """[[P1, coupling], [0, P2]]; coupling is r1 x s2."""
    if (coupling.rows, coupling.cols) != (P1.relators, P2.generators):
        raise ValueError("coupling block has the wrong shape")
    rows = [list(P1.matrix.row(i)) + list(coupling.row(i)) for i in range(P1.relators)]
    rows += [[ZERO] * P1.generators + list(r) for r in P2.matrix.to_rows()]
    return LambdaPresentation.from_rows(rows, P1.generators + P2.generators)


def unimodular_scramble(
    P: LambdaPresentation, seed: int, steps: int = 8
) -> LambdaPresentation:
    """Apply a seeded sequence of invertible row and column operations.

    Row operations keep the module; column operations change generators.
    Either way the order only moves by a unit.
    """
    rng = random.Random(seed)
    rows = P.matrix.to_rows()
    r, s = P.relators, P.generators

    for _ in range(steps):
        on_rows = rng.random() < 0.5
        n = r if on_rows else s
        if n == 0:
            continue
        kind = rng.choice(("swap", "negate", "add", "scale"))
        i = rng.randrange(n)
        j = rng.randrange(n)
        k = rng.randint(-2, 2)
        if kind in ("swap", "add") and i == j:
            kind = "scale"

        if on_rows:
            if kind == "swap":
                rows[i], rows[j] = rows[j], rows[i]
            elif kind == "negate":
                rows[i] = [-a for a in rows[i]]
            elif kind == "add":
                rows[j] = [b + a.shift(k) for a, b in zip(rows[i], rows[j])]
            else:
                rows[i] = [a.shift(k) for a in rows[i]]
        else:
            for row in rows:
                if kind == "swap":
                    row[i], row[j] = row[j], row[i]
                elif kind == "negate":
                    row[i] = -row[i]
                elif kind == "add":
                    row[j] = row[j] + row[i].shift(k)
                else:
                    row[i] = row[i].shift(k)

    return LambdaPresentation.from_rows(rows, s)
