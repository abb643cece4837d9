"""
Finitely presented abelian groups and homomorphisms between them.

A group is Z^Q modulo the row lattice of its relation matrix. A
homomorphism is stored on the chosen generators: column j of its matrix is
the image of source generator j written in target generators. Nothing is
silently canonicalized; ``canonical_form`` and ``free_basis`` are explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exactlin import (
    IntMatrix, block_diagonal, kernel_basis, lattice_membership, row_basis,
    snf, unimodular_inverse,
)
from .exceptions import IllDefined, NotFree, NotInduced


@dataclass(frozen=True)
class FgAbGroup:
    gens: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.cols != self.gens:
            raise ValueError(
                f"relations have {self.relations.cols} columns for {self.gens} generators"
            )

    @classmethod
    def free(cls, rank: int) -> FgAbGroup:
        return cls(rank, IntMatrix.zeros(0, rank))

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        return cls(1, IntMatrix.from_rows([[n]]))

    @classmethod
    def from_relations(cls, gens: int, rows: Iterable) -> FgAbGroup:
        return cls(gens, IntMatrix.from_rows(rows, gens))

    def canonical_form(self) -> tuple:
        return canonical_form(self)

    def is_trivial(self) -> bool:
        return canonical_form(self) == (0, ())

    def contains(self, v) -> bool:
        """v (in generator coordinates) is zero in the group."""
        return lattice_membership(self.relations, v) is not None

    def simplified(self) -> FgAbGroup:
        """Same generators, relations replaced by an echelon basis."""
        return FgAbGroup(self.gens, row_basis(self.relations))

    def __str__(self):
        return format_group(*canonical_form(self))


@dataclass(frozen=True)
class AbHom:
    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __call__(self, x) -> tuple:
        return self.matrix.apply(x)


def canonical_form(G: FgAbGroup) -> tuple:
    """(free rank, invariant factors > 1 in divisibility order)."""
    res = snf(G.relations)
    torsion = tuple(d for d in res.invariant_factors if d > 1)
    return res.free_rank, torsion


def format_group(rank: int, torsion) -> str:
    """'Z + Z + Z/2' style text for a (rank, torsion) pair, '0' when trivial."""
    parts = ["Z"] * rank + [f"Z/{d}" for d in torsion]
    return " + ".join(parts) if parts else "0"


def hom(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> AbHom:
    if (matrix.rows, matrix.cols) != (target.gens, source.gens):
        raise ValueError(
            f"hom matrix is {matrix.rows}x{matrix.cols}, expected "
            f"{target.gens}x{source.gens}"
        )
    for i in range(source.relations.rows):
        pushed = matrix.apply(source.relations.row(i))
        if not target.contains(pushed):
            raise IllDefined(
                f"source relation {i} maps to {list(pushed)}, which is nonzero in the target"
            )
    return AbHom(source, target, matrix)


def identity_hom(G: FgAbGroup) -> AbHom:
    return AbHom(G, G, IntMatrix.identity(G.gens))


def compose(h2: AbHom, h1: AbHom) -> AbHom:
    """h2 after h1."""
    if h1.target.gens != h2.source.gens:
        raise ValueError("homomorphisms do not compose")
    return hom(h1.source, h2.target, h2.matrix @ h1.matrix)


def kernel(h: AbHom) -> tuple:
    """(K, incl): K presents ker h, incl embeds it into the source."""
    src, tgt = h.source, h.target
    # x is in the preimage of the target relations iff M x = R^T y for some y
    stacked = h.matrix.hstack(tgt.relations.T.scaled(-1))
    solutions = kernel_basis(stacked)
    preimage = row_basis(solutions.take_cols(range(src.gens)))

    rel_rows = []
    for i in range(src.relations.rows):
        coeffs = lattice_membership(preimage, src.relations.row(i))
        if coeffs is None:
            raise IllDefined(f"source relation {i} is not in the preimage lattice")
        rel_rows.append(coeffs)
    K = FgAbGroup(preimage.rows, IntMatrix.from_rows(rel_rows, preimage.rows))
    return K, AbHom(K, src, preimage.T)


def is_injective(h: AbHom) -> bool:
    K, _ = kernel(h)
    return K.is_trivial()


def image(h: AbHom) -> tuple:
    """(I, incl): I = source / ker h, incl the injective map into the target."""
    K, incl = kernel(h)
    I, _ = quotient_by(h.source, incl.matrix.T)
    return I, hom(I, h.target, h.matrix)


def quotient_by(G: FgAbGroup, extra: IntMatrix) -> tuple:
    if extra.cols != G.gens:
        raise ValueError(f"extra relations have {extra.cols} columns for {G.gens} generators")
    Q = FgAbGroup(G.gens, G.relations.vstack(extra))
    return Q, AbHom(G, Q, IntMatrix.identity(G.gens))


def induced_hom(h: AbHom, src_proj: AbHom, tgt_proj: AbHom) -> AbHom:
    """The map on quotients with induced ∘ src_proj == tgt_proj ∘ h."""
    for proj in (src_proj, tgt_proj):
        if proj.matrix != IntMatrix.identity(proj.source.gens):
            raise ValueError("projections must be quotient maps on the same generators")
    if src_proj.source.gens != h.source.gens or tgt_proj.source.gens != h.target.gens:
        raise ValueError("projections do not match the homomorphism")
    try:
        return hom(src_proj.target, tgt_proj.target, tgt_proj.matrix @ h.matrix)
    except IllDefined as exc:
        raise NotInduced(str(exc)) from None


def homs_equal(h1: AbHom, h2: AbHom) -> bool:
    """Equal as maps: matrices agree modulo the target relations."""
    if h1.matrix.rows != h2.matrix.rows or h1.matrix.cols != h2.matrix.cols:
        return False
    for j in range(h1.matrix.cols):
        diff = [a - b for a, b in zip(h1.matrix.col(j), h2.matrix.col(j))]
        if not h1.target.contains(diff):
            return False
    return True


@dataclass(frozen=True)
class FreeBasis:
    """G ≅ Z^rank: to_free maps generator coordinates to the free basis,
    from_free sends free basis vectors back to generator coordinates."""

    rank: int
    to_free: IntMatrix
    from_free: IntMatrix


def free_basis(G: FgAbGroup) -> FreeBasis:
    res = snf(G.relations)
    torsion = [d for d in res.invariant_factors if d > 1]
    if torsion:
        raise NotFree(f"group {G} has torsion {tuple(torsion)}")
    r = len(res.invariant_factors)
    keep = range(r, G.gens)
    to_free = res.right.T.take_rows(keep)
    from_free = unimodular_inverse(res.right).T.take_cols(keep)
    return FreeBasis(G.gens - r, to_free, from_free)


def free_basis_transport(G: FgAbGroup, homs: Iterable[AbHom]) -> tuple:
    """Rewrite homs into or out of G in a free basis of G."""
    basis = free_basis(G)
    matrices = []
    for h in homs:
        M = h.matrix
        if h.target == G:
            M = basis.to_free @ M
        if h.source == G:
            M = M @ basis.from_free
        if h.target != G and h.source != G:
            raise ValueError("homomorphism neither starts nor ends at the group")
        matrices.append(M)
    return basis.rank, matrices


def amalgamated_sum(f: AbHom, g: AbHom) -> tuple:
    """B ⊕_U B' for f: U -> B and g: U -> B'.

    Returns (S, left, right) where left: B -> S is b -> (b, 0) and
    right: B' -> S is b' -> (0, b').
    """
    if f.source != g.source:
        raise ValueError("amalgamating maps need a common source")
    B, Bp = f.target, g.target
    # one relation (f(u), -g(u)) per generator u of U
    glue = f.matrix.T.hstack(g.matrix.T.scaled(-1))
    relations = block_diagonal(B.relations, Bp.relations).vstack(glue)
    S = FgAbGroup(B.gens + Bp.gens, relations)
    ident = IntMatrix.identity(B.gens + Bp.gens)
    left = hom(B, S, ident.take_cols(range(B.gens)))
    right = hom(Bp, S, ident.take_cols(range(B.gens, B.gens + Bp.gens)))
    return S, left, right
