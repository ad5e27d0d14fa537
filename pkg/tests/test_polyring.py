import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqlr.core import DomainError
from eqlr.polyring import (
    MPoly,
    Y,
    binomial,
    determinant,
    permute_x,
    render,
    render_factors,
    render_paired,
    specialize_y_to_Y,
    x,
    x_degree_leading_term,
    y,
)

ONE = MPoly.const(1)


def test_ring_examples():
    assert (y(6) - y(5)) + (y(5) - y(3)) == y(6) - y(3)
    assert (y(6) - y(5)) * MPoly() == MPoly()
    total = (y(6) - y(5)) + (y(5) - y(3)) + (y(4) - y(2)) + (y(3) - y(1))
    assert total == (y(6) - y(1)) + (y(4) - y(2))
    assert render_paired(total) == "(y6-y1)+(y4-y2)"


def test_determinant_examples():
    ident = [[ONE if r == c else MPoly() for c in range(4)] for r in range(4)]
    assert determinant(ident) == ONE
    assert determinant([[x(1), x(2)], [x(1), x(2)]]) == MPoly()
    assert determinant([[x(1), x(2)], [ONE, ONE]]) == x(1) - x(2)
    with pytest.raises(DomainError):
        determinant([[ONE, ONE]])


def test_specialization_examples():
    assert specialize_y_to_Y(y(6) - y(1), 6) == Y(6) - Y(1)
    assert specialize_y_to_Y(y(7), 6) == MPoly()
    for n in range(1, 8):
        for e in range(1, n + 1):
            for f in range(1, n + 1):
                assert specialize_y_to_Y(binomial(e, f), n) == Y(n + 1 - f) - Y(n + 1 - e)
    with pytest.raises(DomainError):
        specialize_y_to_Y(x(1), 3)


def test_leading_term_examples():
    assert x_degree_leading_term(x(1) ** 2 * x(2) + x(1) * x(2) ** 2) == ((2, 1), ONE)
    assert x_degree_leading_term(x(1) * (y(1) + y(2)) + 1) == ((1,), y(1) + y(2))
    with pytest.raises(DomainError):
        x_degree_leading_term(MPoly())


def test_rendering():
    assert render(MPoly()) == "0"
    assert render(MPoly.const(-2)) == "-2"
    assert render_factors([(6, 3), (4, 2)]) == "(y6-y3)(y4-y2)"
    assert render_factors([(5, 2)], "Y") == "(Y5-Y2)"
    assert render_paired(y(1) * y(2)) is None


def test_serialization_round_trip():
    p = (x(1) - y(2)) ** 3 + 5 * Y(4)
    assert MPoly.from_json(p.to_json()) == p
    assert pickle.loads(pickle.dumps(p)) == p
    assert hash(p) == hash(MPoly.from_json(p.to_json()))


# properties -------------------------------------------------------------

var = st.sampled_from([x(1), x(2), x(3), y(1), y(2), y(5), Y(1), Y(3)])
mono = st.lists(var, max_size=3).map(lambda vs: _prod(vs))
polys = st.lists(st.tuples(st.integers(-3, 3), mono), max_size=4).map(lambda ts: sum((c * m for c, m in ts), MPoly()))
ypolys = st.lists(
    st.tuples(st.integers(-3, 3), st.lists(st.sampled_from([y(1), y(2), y(4), y(7)]), max_size=3).map(lambda vs: _prod(vs))),
    max_size=4,
).map(lambda ts: sum((c * m for c, m in ts), MPoly()))


def _prod(vs):
    out = MPoly.const(1)
    for v in vs:
        out = out * v
    return out


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MPoly()
    assert a * ONE == a
    assert -(-a) == a


@settings(max_examples=40)
@given(st.lists(st.lists(polys, min_size=3, max_size=3), min_size=3, max_size=3), st.permutations([0, 1, 2]))
def test_determinant_sign(m, perm):
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    sign = -1 if inversions % 2 else 1
    assert determinant([m[k] for k in perm]) == sign * determinant(m)


@given(ypolys, ypolys, st.integers(1, 8))
def test_specialization_is_a_ring_homomorphism(a, b, n):
    s = lambda p: specialize_y_to_Y(p, n)  # noqa: E731
    assert s(a + b) == s(a) + s(b)
    assert s(a * b) == s(a) * s(b)
    assert s(MPoly.const(3)) == MPoly.const(3)


@given(st.lists(st.tuples(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_leading_exponent_of_symmetric_polynomials_is_a_partition(terms):
    # symmetrize a random polynomial over S_3
    from itertools import permutations

    base = MPoly()
    for c, a, b, e in terms:
        base = base + c * x(1) ** a * x(2) ** b * x(3) ** e * (y(1) + c)
    sym = sum((permute_x(base, dict(zip((1, 2, 3), p))) for p in permutations((1, 2, 3))), MPoly())
    if not sym:
        return
    alpha, coeff = x_degree_leading_term(sym, 3)
    assert list(alpha) == sorted(alpha, reverse=True)
    assert coeff


def test_nonpositive_y_indices():
    p = y(0) - y(-1)
    assert render(p) == "y[0]-y[-1]"
    assert render_paired(p) == "(y[0]-y[-1])"
    with pytest.raises(DomainError):
        x(0)
    with pytest.raises(DomainError):
        specialize_y_to_Y(p, 4)
