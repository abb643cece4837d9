from hypothesis import strategies as st

from ..exactlin import IntMatrix, det
from ..laurent import LaurentPoly
from ..present import LambdaPresentation


def int_matrices(max_rows=5, max_cols=5, low=-9, high=9, min_rows=0, min_cols=0):
    return st.tuples(
        st.integers(min_rows, max_rows), st.integers(min_cols, max_cols)
    ).flatmap(lambda shape: st.lists(
        st.lists(st.integers(low, high), min_size=shape[1], max_size=shape[1]),
        min_size=shape[0], max_size=shape[0],
    ).map(lambda rows: IntMatrix.from_rows(rows, shape[1])))


def square_matrices(d, low=-5, high=5):
    return st.lists(
        st.lists(st.integers(low, high), min_size=d, max_size=d),
        min_size=d, max_size=d,
    ).map(lambda rows: IntMatrix.from_rows(rows, d))


@st.composite
def nonsingular_pairs(draw, max_d=4, low=-5, high=5):
    """(F, G), both d x d with nonzero determinant."""
    d = draw(st.integers(1, max_d))
    F = draw(square_matrices(d, low, high).filter(lambda M: det(M) != 0))
    G = draw(square_matrices(d, low, high).filter(lambda M: det(M) != 0))
    return F, G


def laurent_polys(min_exp=-3, max_exp=3, low=-6, high=6, max_terms=4):
    return st.dictionaries(
        st.integers(min_exp, max_exp), st.integers(low, high), max_size=max_terms,
    ).map(LaurentPoly)


def nonzero_laurent_polys(**kwargs):
    return laurent_polys(**kwargs).filter(lambda p: not p.is_zero)


@st.composite
def presentations(draw, max_generators=4, max_relators=5, max_exp=3,
                  min_generators=1, min_relators=0, coeffs=3):
    s = draw(st.integers(min_generators, max_generators))
    r = draw(st.integers(min_relators, max_relators))
    entry = laurent_polys(min_exp=0, max_exp=max_exp, low=-coeffs, high=coeffs, max_terms=3)
    rows = draw(st.lists(
        st.lists(entry, min_size=s, max_size=s), min_size=r, max_size=r,
    ))
    return LambdaPresentation.from_rows(rows, s)


@st.composite
def square_presentations(draw, max_generators=3, max_exp=2):
    s = draw(st.integers(1, max_generators))
    return draw(presentations(
        max_generators=s, min_generators=s, max_relators=s, min_relators=s,
        max_exp=max_exp,
    ))
