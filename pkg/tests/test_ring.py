from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from czdg import build_ring
from czdg.errors import InvalidOrderError, InvalidPrimeError, SizeLimitError
from czdg.ring import (
    CyclicRing,
    TableRing,
    annihilator,
    is_boolean,
    is_field,
    is_integral_domain,
    is_local,
    is_nilpotent,
    is_prime,
    is_reduced,
    make_cyclic,
    make_galois_field,
    make_product,
    prime_power,
    smallest_irreducible,
    units,
    verify_ring_axioms,
    zero_divisors,
)


def phi(n):
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def test_cyclic_basics():
    R = make_cyclic(16)
    assert R.order == 16 and R.add(9, 9) == 2 and R.mul(6, 8) == 0
    assert len(units(R)) == 8
    assert sorted(annihilator(R, 4)) == [0, 4, 8, 12]
    assert sorted(annihilator(R, 14)) == [0, 8]
    with pytest.raises(InvalidOrderError):
        make_cyclic(1)


@pytest.mark.parametrize("n", range(2, 60))
def test_cyclic_predicates_match_number_theory(n):
    R = make_cyclic(n)
    assert len(units(R)) == phi(n)
    assert len(zero_divisors(R)) == n - phi(n)
    assert is_field(R) == is_prime(n) == is_integral_domain(R)
    assert is_local(R) == (prime_power(n) is not None)
    squarefree = all(n % (p * p) for p in range(2, n + 1) if is_prime(p))
    assert is_reduced(R) == squarefree
    assert is_boolean(R) == (n == 2)


@pytest.mark.parametrize("n", [4, 12, 30, 36])
def test_cyclic_predicates_match_table_backend(n):
    C = make_cyclic(n)
    add, mul = C.tables()
    T = TableRing(add, mul, 0, 1, [str(i) for i in range(n)])
    for pred in (is_field, is_local, is_reduced, is_boolean):
        assert pred(C) == pred(T)
    assert [sorted(annihilator(C, x)) for x in range(n)] == [sorted(annihilator(T, x)) for x in range(n)]


@pytest.mark.parametrize("p,k,poly", [(2, 2, [1, 1, 1]), (2, 3, [1, 1, 0, 1]), (3, 2, [1, 0, 1]), (5, 2, [2, 0, 1])])
def test_smallest_irreducible(p, k, poly):
    # coefficients listed constant term first
    assert smallest_irreducible(p, k) == poly


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3), (7, 2)])
def test_galois_fields(p, k):
    F = make_galois_field(p, k)
    assert F.order == p ** k
    assert is_field(F) and len(units(F)) == p ** k - 1
    assert verify_ring_axioms(F).ok
    # multiplicative group is cyclic of order q - 1
    q = p ** k
    assert any(all(F.pow(g, d) != F.one for d in range(1, q - 1)) for g in range(q) if g != F.zero)


def test_galois_field_errors():
    with pytest.raises(InvalidPrimeError):
        make_galois_field(6, 2)


def test_product():
    R = make_product(make_cyclic(4), make_galois_field(2, 2))
    assert R.order == 16
    assert not is_local(R) and not is_reduced(R)
    assert verify_ring_axioms(R).ok
    B = build_ring("Z2 x Z2 x Z2")
    assert is_boolean(B) and B.label(B.order - 1) == "(1,1,1)"
    with pytest.raises(SizeLimitError):
        build_ring("Z64 x Z64 x Z2", max_order=4096)


def test_nilpotent():
    R = make_cyclic(72)
    assert is_nilpotent(R, 6) and not is_nilpotent(R, 4 * 9 + 1)


def test_axiom_check_detects_broken_table():
    R = make_cyclic(6)
    add, mul = (t.copy() for t in R.tables())
    mul[2, 3] = mul[3, 2] = 1
    bad = TableRing(add, mul, 0, 1, [str(i) for i in range(6)])
    rep = verify_ring_axioms(bad)
    assert not rep.ok and rep.witness is not None
    mul2 = R.tables()[1].copy()
    mul2[2, 3] = 1
    rep = verify_ring_axioms(TableRing(add, mul2, 0, 1, [str(i) for i in range(6)]))
    assert not rep.ok and rep.axiom == "multiplicative commutativity"


def test_sampled_mode_is_deterministic():
    R = build_ring("Z2 x Z2 x F4 x Z2")
    a = verify_ring_axioms(R, mode="sampled", samples=500, seed=3)
    b = verify_ring_axioms(R, mode="sampled", samples=500, seed=3)
    assert a.ok and a == b


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(2, 12))
def test_product_units_multiply(a, b):
    R = make_product(make_cyclic(a), make_cyclic(b))
    assert len(units(R)) == phi(a) * phi(b)


@pytest.mark.parametrize("expr", ["Z9", "Z2 x Z2", "F4", "Z4 x F4", "Z9[x]/(3x, x^2 - 6)", "Z2[x,y]/(x,y)^2", "Z72"])
def test_units_and_zero_divisors_partition(expr):
    R = build_ring(expr)
    U, Z = units(R), zero_divisors(R)
    assert len(U & Z) == 0 and len(U | Z) == R.order


def test_predicate_examples():
    assert is_local(build_ring("Z9")) and not is_reduced(build_ring("Z9"))
    B = build_ring("Z2 x Z2")
    assert is_boolean(B) and is_reduced(B) and not is_local(B)
    F = build_ring("F4")
    assert is_field(F) and is_integral_domain(F)
