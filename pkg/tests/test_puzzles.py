from collections import Counter

import pytest

from eqlr.core import DomainError, partitions_in_box, size
from eqlr.polyring import MPoly, Y, specialize_y_to_Y, y
from eqlr.puzzles import (
    ONE_UP,
    Puzzle,
    TrapezoidPuzzle,
    check_bijection,
    coefficient_by_puzzles,
    enumerate_puzzles,
    enumerate_trapezoid_puzzles,
    march_ef,
    phi,
    phi_inverse,
    puzzle_factors,
    puzzle_weight,
)
from eqlr.tableaux import BarredTableau, SkewBarredTableau, enumerate_lr_tableaux
from eqlr.weights import c_L_factors, coefficient_by_tableaux, weight_c_L
from worked_examples import N9_TABLEAU_ROWS, N13, N13_TABLEAU_ROWS, n9_puzzle

N4 = dict(lam=(1, 1), mu=(2, 1), nu=(2, 1), n=4, d=2)


def test_single_triangle():
    (P,) = enumerate_puzzles((0,), (0,), (0,), 1, 1)
    assert P.pieces == ((ONE_UP, 0, 0),)
    assert puzzle_weight(P) == ([], MPoly.const(1))


def test_n4_instance():
    Ps = enumerate_puzzles(**N4)
    assert len(Ps) == 2
    assert Counter(tuple(sorted(puzzle_factors(P))) for P in Ps) == Counter([((2, 1), (4, 3)), ((2, 1), (3, 1))])
    c = coefficient_by_puzzles(**N4)
    assert c == (y(4) - y(3)) * (y(2) - y(1)) + (y(3) - y(1)) * (y(2) - y(1))
    C = coefficient_by_puzzles(**N4, flavor="Y")
    assert C == (Y(2) - Y(1)) * (Y(4) - Y(3)) + (Y(4) - Y(2)) * (Y(4) - Y(3))
    assert C == specialize_y_to_Y(c, 4)
    # both puzzles map to the two elements of LR+, and back
    Ls = [L for L in enumerate_lr_tableaux(N4["lam"], N4["mu"], N4["nu"], 2) if all(e > f for e, f in c_L_factors(L))]
    assert sorted(phi(P).key() for P in Ps) == sorted(L.key() for L in Ls)
    for P in Ps:
        assert phi_inverse(phi(P), 4) == P
        assert sorted(c_L_factors(phi(P))) == sorted(puzzle_factors(P))


def test_n9_puzzle():
    P = n9_puzzle()
    P.validate()
    assert (P.lam, P.mu, P.nu) == ((4, 2, 2), (4, 3, 1), (6, 5, 2))
    assert sorted(puzzle_factors(P)) == sorted([(8, 3), (3, 2), (3, 1)])
    assert sorted(puzzle_factors(P, "Y")) == sorted([(7, 2), (8, 7), (9, 7)])
    assert puzzle_weight(P)[1] == (y(8) - y(3)) * (y(3) - y(2)) * (y(3) - y(1))
    assert P in enumerate_puzzles(P.lam, P.mu, P.nu, 9, 3)
    L = phi(P)
    assert L.B == BarredTableau.from_rows(N9_TABLEAU_ROWS, 3)
    assert phi_inverse(L, 9) == P


def test_n9_puzzle_rejects_a_broken_tiling():
    P = n9_puzzle()
    broken = Puzzle(P.n, P.d, P.ne, P.nw, P.s, P.pieces[1:])
    assert not broken.is_valid()
    flipped = Puzzle(P.n, P.d, "100001100", P.nw, P.s, P.pieces)
    assert not flipped.is_valid()


def test_equivariant_piece_weight():
    # one equivariant piece at up(1,3) in a side-7 triangle
    assert march_ef(7, 1, 3) == (6, 3)
    n, e, f = 7, 6, 3
    assert (n + 1 - f, n + 1 - e) == (5, 2)
    # closed form e = n-i, f = n-i-j (negative j below D)
    for n in range(1, 8):
        for j in range(-n, n):
            for i in range(0, n - max(j, 0)):
                assert march_ef(n, i, j) == (n - i, n - i - j)


def test_n13_trapezoid():
    lam, mu, nu, n, d = N13["lam"], N13["mu"], N13["nu"], N13["n"], N13["d"]
    L = SkewBarredTableau(lam, BarredTableau.from_rows(N13_TABLEAU_ROWS, d))
    assert L.is_yamanouchi() and L.unbarred_content() == nu
    fs, w = weight_c_L(L)
    assert w == MPoly()
    with pytest.raises(DomainError):
        phi_inverse(L, n)
    T = phi_inverse(L, n, trapezoid=True)
    T.validate()
    assert T.trapezoid and T.has_one_below()
    assert (T.lam, T.mu, T.nu) == (lam, mu, nu)
    assert sorted(puzzle_factors(T)) == sorted(fs)
    # an equivariant piece bisected by D has e = f
    assert any(j == 0 for i, j in T.equivariant_pieces())
    assert any(e == f for e, f in puzzle_factors(T))
    assert phi(T).key() == L.key()
    assert puzzle_weight(T, "Y")[1] == MPoly()


def test_trapezoids_contain_puzzles():
    # when no 1-triangle fits below D the two enumerations agree
    for lam in partitions_in_box(2, 2):
        for mu in partitions_in_box(2, 2):
            for nu in partitions_in_box(2, 2):
                Ps = enumerate_puzzles(lam, mu, nu, 4, 2)
                Ts = enumerate_trapezoid_puzzles(lam, mu, nu, 4, 2)
                inside = [T for T in Ts if not T.has_one_below()]
                assert len(inside) == len(Ps)
                for T in Ts:
                    if T.has_one_below():
                        assert puzzle_weight(T)[1] == MPoly()
                assert coefficient_by_puzzles(lam, mu, nu, 4, 2, trapezoid=True) == coefficient_by_puzzles(lam, mu, nu, 4, 2)


def test_json_round_trip():
    P = n9_puzzle()
    assert Puzzle.from_json(P.to_json()) == P
    T = enumerate_trapezoid_puzzles((1, 0), (1, 0), (1, 0), 3, 2)[0]
    assert Puzzle.from_json(T.to_json()) == T
    assert TrapezoidPuzzle(T.n, T.d, T.ne, T.nw, T.s, T.pieces) == T


def test_bar_free_tableau_gives_a_piece_free_puzzle():
    lam, mu, nu = (1, 0), (1, 0), (2, 0)
    (L,) = enumerate_lr_tableaux(lam, mu, nu, 2)
    P = phi_inverse(L, 4)
    assert P.equivariant_pieces() == []


def test_shape_errors():
    with pytest.raises(DomainError):
        enumerate_puzzles((3, 0), (0, 0), (3, 0), 4, 2)


@pytest.mark.parametrize("n,d", [(3, 1), (4, 2), (5, 2)])
def test_bijection_exhaustive(n, d):
    box = list(partitions_in_box(d, n - d))
    for lam in box:
        for mu in box:
            for nu in box:
                r = check_bijection(lam, mu, nu, n, d)
                assert r["failures"] == [], (lam, mu, nu, r)
                assert r["LP+"] == r["LR+"] and r["LP"] == r["LR"]
                if size(lam) + size(mu) >= size(nu):
                    assert coefficient_by_puzzles(lam, mu, nu, n, d) == coefficient_by_tableaux(lam, mu, nu, d)
