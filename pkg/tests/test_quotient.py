import pytest

from czdg import build_ring
from czdg.catalog import all_entries
from czdg.errors import InvalidPresentationError, NotFiniteError, SizeLimitError
from czdg.parser import parse_ring_expr
from czdg.poly import Poly
from czdg.quotient import QuotientRing, evaluate, nonvanishing_generators
from czdg.ring import verify_axioms_auto


def quotient_entries():
    out = []
    for e in all_entries():
        try:
            R = build_ring(e.expr)
        except NotFiniteError:
            continue
        if isinstance(R, QuotientRing):
            out.append(e.expr)
    return out


@pytest.mark.parametrize("expr", quotient_entries())
def test_generators_vanish_and_axioms_hold(expr):
    R = build_ring(expr)
    assert nonvanishing_generators(R) == []
    assert verify_axioms_auto(R).ok


def test_element_of_and_labels():
    R = build_ring("Z4[x]/(x^2 - 2)")
    assert R.order == 16
    x = R.variable("x")
    assert R.label(R.mul(x, x)) == "2"
    X = Poly.variable(0, 1)
    assert R.element_of(X * X * X) == R.mul(R.mul(x, x), x)
    assert R.element_of(X ** 4) == R.zero
    assert evaluate(R, X * X - Poly.constant(2, 1), [x]) == R.zero


def test_labels_are_canonical_polynomials():
    R = build_ring("Z9[x]/(x^2)")
    assert R.order == 81
    assert R.labels[0] == "0" and R.labels[1] == "1"
    assert len(set(R.labels)) == 81


def test_not_finite():
    with pytest.raises(NotFiniteError) as info:
        build_ring("Z2[x,y]/(x^3, xy, x^2)")
    assert "degree bound" in str(info.value)


def test_degree_bound_override():
    assert build_ring("Z2[x]/(x^4)", degree_bound=4).order == 16
    with pytest.raises(InvalidPresentationError):
        build_ring("Z2[x]/(x^4)", degree_bound=3)


def test_size_limit_and_collapse():
    with pytest.raises(SizeLimitError):
        build_ring("Z2[x,y]/(x^7, y^7)")
    with pytest.raises(InvalidPresentationError):
        build_ring("Z4[x]/(x, 1)")
    with pytest.raises(InvalidPresentationError):
        build_ring("Z2[x]/(2x)")


def test_zero_and_one_indices():
    R = build_ring("Z3[x,y]/(x,y)^2")
    assert R.zero == 0 and R.one == 1 and R.order == 27
