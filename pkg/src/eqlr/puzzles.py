"""Knutson-Tao puzzles, trapezoid puzzles, their weights and the bijection Phi.

Lattice: the point (i, j) sits at i*(1, 0) + j*(1/2, sqrt(3)/2). The
puzzle triangle has corners (0,0), (n,0), (0,n); a trapezoid puzzle adds
the rhombus 0 <= i <= n, -n <= j <= 0 below the line D (j = 0).

Unit triangles:
    up(i,j)   corners (i,j), (i+1,j), (i,j+1)
    down(i,j) corners (i+1,j), (i,j+1), (i+1,j+1)
Unit edges:
    H(i,j)  (i,j)-(i+1,j)     horizontal
    L(i,j)  (i,j)-(i,j+1)     parallel to the NW side
    R(i,j)  (i+1,j)-(i,j+1)   parallel to the NE side
up(i,j) has edges H(i,j), L(i,j), R(i,j); down(i,j) has H(i,j+1), R(i,j), L(i+1,j).

Every rhombus is anchored at its up triangle:
    UD(i,j) = up(i,j) + down(i,j)     (shares R(i,j)): horizontal edges 1, others 0
    DU(i,j) = up(i,j) + down(i-1,j)   (shares L(i,j)): NE-parallel edges 1, horizontal 0
    V(i,j)  = up(i,j) + down(i,j-1)   (shares H(i,j)): NW-parallel edges 1, NE-parallel 0
    EQ(i,j) = same cells as V: NE-parallel edges 1, NW-parallel 0 (the equivariant piece)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .core import DomainError, in_box, partition_to_word, word_to_partition
from .polyring import MPoly, poly_sum
from .tableaux import BarredTableau, SkewBarredTableau, is_valid_reverse
from .weights import factors_poly

ZERO_UP, ZERO_DOWN, ONE_UP, ONE_DOWN = "0up", "0down", "1up", "1down"
UD, DU, V, EQ = "UD", "DU", "V", "EQ"
KINDS = (ZERO_UP, ZERO_DOWN, ONE_UP, ONE_DOWN, UD, DU, V, EQ)
RHOMBI = (UD, DU, V, EQ)

Tri = tuple[str, int, int]
Edge = tuple[str, int, int]
Placement = tuple[str, int, int]


def piece_cells(kind: str, i: int, j: int) -> tuple[Tri, ...]:
    if kind in (ZERO_UP, ONE_UP):
        return (("u", i, j),)
    if kind in (ZERO_DOWN, ONE_DOWN):
        return (("d", i, j),)
    if kind == UD:
        return (("u", i, j), ("d", i, j))
    if kind == DU:
        return (("u", i, j), ("d", i - 1, j))
    if kind in (V, EQ):
        return (("u", i, j), ("d", i, j - 1))
    raise DomainError(f"unknown piece kind {kind!r}")


def piece_edges(kind: str, i: int, j: int) -> tuple[tuple[Edge, int], ...]:
    """Outer edges of a placed piece with their labels."""
    if kind in (ZERO_UP, ONE_UP):
        b = 1 if kind == ONE_UP else 0
        return ((("H", i, j), b), (("L", i, j), b), (("R", i, j), b))
    if kind in (ZERO_DOWN, ONE_DOWN):
        b = 1 if kind == ONE_DOWN else 0
        return ((("H", i, j + 1), b), (("R", i, j), b), (("L", i + 1, j), b))
    if kind == UD:
        return ((("H", i, j), 1), (("L", i, j), 0), (("H", i, j + 1), 1), (("L", i + 1, j), 0))
    if kind == DU:
        return ((("H", i, j), 0), (("R", i, j), 1), (("H", i - 1, j + 1), 0), (("R", i - 1, j), 1))
    if kind == V:
        return ((("L", i, j), 1), (("R", i, j), 0), (("R", i, j - 1), 0), (("L", i + 1, j - 1), 1))
    if kind == EQ:
        return ((("L", i, j), 0), (("R", i, j), 1), (("R", i, j - 1), 1), (("L", i + 1, j - 1), 0))
    raise DomainError(f"unknown piece kind {kind!r}")


def in_region(tri: Tri, n: int, trapezoid: bool) -> bool:
    o, i, j = tri
    if i < 0:
        return False
    if j >= 0:
        return i + j <= (n - 1 if o == "u" else n - 2)
    return trapezoid and j >= -n and i <= n - 1


def scan_order(n: int, trapezoid: bool) -> list[Tri]:
    """Rows top to bottom, triangles left to right."""
    out = []
    bottom = -n if trapezoid else 0
    for j in range(n - 1, bottom - 1, -1):
        width = n - j if j >= 0 else n
        for i in range(width):
            out.append(("u", i, j))
            if in_region(("d", i, j), n, trapezoid):
                out.append(("d", i, j))
    return out


def boundary_labels(ne: str, nw: str, s: str, trapezoid: bool = False) -> dict[Edge, int]:
    n = len(ne)
    lab: dict[Edge, int] = {}
    for t in range(1, n + 1):
        lab[("R", t - 1, n - t)] = int(ne[t - 1])
    for j in range(n):
        lab[("L", 0, j)] = int(nw[j])
    if trapezoid:
        for j in range(-n, 0):
            lab[("L", 0, j)] = 0
            lab[("L", n, j)] = 0
        for i in range(n):
            lab[("H", i, -n)] = int(s[i])
    else:
        for i in range(n):
            lab[("H", i, 0)] = int(s[i])
    return lab


@dataclass(frozen=True)
class Puzzle:
    n: int
    d: int
    ne: str
    nw: str
    s: str
    pieces: tuple[Placement, ...]
    trapezoid: bool = field(default=False)

    @property
    def bottom(self) -> int:
        return -self.n if self.trapezoid else 0

    @property
    def lam(self) -> tuple[int, ...]:
        return word_to_partition(self.ne)

    @property
    def mu(self) -> tuple[int, ...]:
        return word_to_partition(self.nw)

    @property
    def nu(self) -> tuple[int, ...]:
        return word_to_partition(self.s)

    @cached_property
    def piece_map(self) -> dict[Tri, Placement]:
        out = {}
        for p in self.pieces:
            for t in piece_cells(*p):
                if t in out:
                    raise DomainError(f"triangle {t} covered twice")
                out[t] = p
        return out

    def edge_labels(self) -> dict[Edge, int]:
        lab: dict[Edge, int] = {}
        for p in self.pieces:
            for e, b in piece_edges(*p):
                if lab.get(e, b) != b:
                    raise DomainError(f"edge {e} carries two labels")
                lab[e] = b
        return lab

    def validate(self) -> None:
        """Tiling covers the region exactly and all labels agree, boundary included."""
        cover = self.piece_map
        region = set(scan_order(self.n, self.trapezoid))
        if set(cover) != region:
            raise DomainError("pieces do not tile the region")
        lab = self.edge_labels()
        for e, b in boundary_labels(self.ne, self.nw, self.s, self.trapezoid).items():
            if lab.get(e) != b:
                raise DomainError(f"boundary edge {e} should be {b}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except DomainError:
            return False
        return True

    def equivariant_pieces(self) -> list[tuple[int, int]]:
        return [(i, j) for k, i, j in self.pieces if k == EQ]

    def has_one_below(self) -> bool:
        return any(k in (ONE_UP, ONE_DOWN) and j < 0 for k, i, j in self.pieces)

    def to_json(self) -> dict:
        out = []
        for k, i, j in self.pieces:
            orient = "down" if k in (ZERO_DOWN, ONE_DOWN) else "up"
            out.append({"kind": k, "anchor": {"row": self.n - j, "pos": i + 1, "orient": orient}})
        return {
            "n": self.n,
            "trapezoid": self.trapezoid,
            "boundaries": {"ne": self.ne, "nw": self.nw, "s": self.s},
            "pieces": out,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Puzzle":
        b = data["boundaries"]
        pieces = []
        for p in data["pieces"]:
            a = p["anchor"]
            pieces.append((p["kind"], a["pos"] - 1, data["n"] - a["row"]))
        return cls(data["n"], b["ne"].count("1"), b["ne"], b["nw"], b["s"], tuple(sorted(pieces)), data.get("trapezoid", False))

    def render(self) -> str:
        """One text row per triangle row; 0/1 triangles, R rhombus halves, E equivariant halves."""
        glyph = {ZERO_UP: "0", ZERO_DOWN: "0", ONE_UP: "1", ONE_DOWN: "1", UD: "R", DU: "R", V: "R", EQ: "E"}
        pm = self.piece_map
        lines = []
        for j in range(self.n - 1, self.bottom - 1, -1):
            row = [t for t in scan_order(self.n, self.trapezoid) if t[2] == j]
            text = "".join(glyph[pm[t][0]] if t in pm else "?" for t in row)
            lines.append(" " * (j - self.bottom) + text)
        return "\n".join(lines)


def TrapezoidPuzzle(n, d, ne, nw, s, pieces) -> Puzzle:
    return Puzzle(n, d, ne, nw, s, tuple(sorted(pieces)), True)


# enumeration ----------------------------------------------------------


def _options(tri: Tri, n: int, trapezoid: bool) -> list[Placement]:
    o, i, j = tri
    if o == "u":
        opts = [(ZERO_UP, i, j), (ONE_UP, i, j)]
        if in_region(("d", i, j), n, trapezoid):
            opts.append((UD, i, j))
        if in_region(("d", i, j - 1), n, trapezoid):
            opts.extend([(V, i, j), (EQ, i, j)])
        return opts
    opts = [(ZERO_DOWN, i, j), (ONE_DOWN, i, j)]
    if in_region(("u", i + 1, j), n, trapezoid):
        opts.append((DU, i + 1, j))
    return opts


def _row(n: int, trapezoid: bool, j: int) -> list[Tri]:
    width = n - j if j >= 0 else n
    out = []
    for i in range(width):
        out.append(("u", i, j))
        if in_region(("d", i, j), n, trapezoid):
            out.append(("d", i, j))
    return out


def _row_tilings(n: int, j: int, state: tuple, west: int, east: int, trapezoid: bool):
    """Tilings of row j under a given state, as (pieces, state below).

    A state lists, position by position, the 0/1 label of the horizontal
    edge between two rows or the kind (V or EQ) of the rhombus straddling
    it. west and east are the labels of the two boundary edges of the row.
    Horizontal boundary labels are not checked here.
    """
    row = _row(n, trapezoid, j)
    ups = sum(1 for t in row if t[0] == "u")
    lab: dict[Edge, int] = {("L", 0, j): west}
    if j >= 0:
        lab[("R", n - 1 - j, j)] = east
    else:
        lab[("L", n, j)] = east
    covered: set[Tri] = set()
    for i, st in enumerate(state):
        if isinstance(st, int):
            lab[("H", i, j + 1)] = st
            continue
        covered.add(("d", i, j))
        for e, b in piece_edges(st, i, j + 1):
            lab[e] = b
    chosen: list[Placement] = []
    straddle: dict[int, str] = {}
    out = []

    def rec(k):
        while k < len(row) and row[k] in covered:
            k += 1
        if k == len(row):
            out.append((tuple(chosen), tuple(straddle.get(i, lab.get(("H", i, j))) for i in range(ups))))
            return
        for p in _options(row[k], n, trapezoid):
            cells = piece_cells(*p)
            if any(c in covered for c in cells):
                continue
            edges = piece_edges(*p)
            if any(lab.get(e, b) != b for e, b in edges):
                continue
            new = [e for e, b in edges if e not in lab]
            for e, b in edges:
                lab[e] = b
            covered.update(cells)
            chosen.append(p)
            if p[0] in (V, EQ):
                straddle[p[1]] = p[0]
            rec(k + 1)
            straddle.pop(p[1], None)
            chosen.pop()
            covered.difference_update(cells)
            for e in new:
                del lab[e]

    rec(0)
    return out


@lru_cache(maxsize=None)
def _transitions(n: int, j: int, state: tuple, west: int, east: int, trapezoid: bool):
    # rows below D all look alike, so they share one cache entry
    jj = -1 if j < 0 else j
    out = []
    for pieces, below in _row_tilings(n, jj, state, west, east, trapezoid):
        out.append((tuple((k, i) for k, i, _ in pieces), below))
    return tuple(out)


def _search(n: int, trapezoid: bool, labels: dict[Edge, int], fixed: Sequence[Placement] = ()) -> list[tuple[Placement, ...]]:
    """All tilings with the given boundary labels containing the fixed pieces.

    Row-by-row transfer from the top: the tilings of one row depend only
    on the state above it and on its two boundary labels, and the
    completions below a given state are computed once per search.
    """
    fixed_map: dict[Tri, Placement] = {}
    fixed_rows: dict[int, set] = {}
    for p in fixed:
        for t in piece_cells(*p):
            if t in fixed_map or not in_region(t, n, trapezoid):
                return []
            fixed_map[t] = p
        fixed_rows.setdefault(p[2], set()).add(p)
    bottom = -n if trapezoid else 0
    final = tuple(labels[("H", i, bottom)] for i in range(n))
    memo: dict = {}

    def complete(j, state):
        if j < bottom:
            return [()] if state == final else []
        key = (j, state)
        if key not in memo:
            west = labels[("L", 0, j)]
            east = labels[("R", n - 1 - j, j)] if j >= 0 else labels[("L", n, j)]
            out = []
            need = fixed_rows.get(j, ())
            for rel, below in _transitions(n, j, state, west, east, trapezoid):
                pieces = tuple((k, i, j) for k, i in rel)
                if fixed_map and not _respects(pieces, fixed_map, need):
                    continue
                out.extend(pieces + r for r in complete(j - 1, below))
            memo[key] = out
        return memo[key]

    return sorted(tuple(sorted(ps)) for ps in complete(n - 1, ()))


def _respects(pieces, fixed_map, need) -> bool:
    if not set(need) <= set(pieces):
        return False
    return all(fixed_map.get(c, p) == p for p in pieces for c in piece_cells(*p))


def _words(lam, mu, nu, n, d):
    for name, p in (("lambda", lam), ("mu", mu), ("nu", nu)):
        if not in_box(tuple(p), d, n):
            raise DomainError(f"{name}={tuple(p)} is not in P_{{{d},{n}}}")
    return partition_to_word(lam, n), partition_to_word(mu, n), partition_to_word(nu, n)


def enumerate_puzzles(lam, mu, nu, n, d) -> list[Puzzle]:
    ne, nw, s = _words(lam, mu, nu, n, d)
    labels = boundary_labels(ne, nw, s)
    return [Puzzle(n, d, ne, nw, s, ps) for ps in _search(n, False, labels)]


def enumerate_trapezoid_puzzles(lam, mu, nu, n, d) -> list[Puzzle]:
    ne, nw, s = _words(lam, mu, nu, n, d)
    labels = boundary_labels(ne, nw, s, trapezoid=True)
    return [Puzzle(n, d, ne, nw, s, ps, True) for ps in _search(n, True, labels)]


# weights --------------------------------------------------------------


def march_ef(n: int, i: int, j: int) -> tuple[int, int]:
    """e, f for the equivariant piece anchored at up(i,j), by unit steps.

    From the centre of the piece (midpoint of H(i,j)) walk parallel to the
    NW side, then parallel to the NE side, until reaching the line j = 0
    (the south side, or D for trapezoids). Edges on that line are numbered
    1..n from right to left.
    """
    step = -1 if j > 0 else 1
    # parallel to NW: direction (0, +-1) in lattice coordinates
    a, b = i + 0.5, j
    while b != 0:
        b += step
    e = n - int(a - 0.5)
    # parallel to NE: direction (+-1, -+1)
    a, b = i + 0.5, j
    while b != 0:
        a -= step
        b += step
    f = n - int(a - 0.5)
    return e, f


def puzzle_factors(P: Puzzle, flavor: str = "y") -> list[tuple[int, int]]:
    fs = [march_ef(P.n, i, j) for i, j in P.equivariant_pieces()]
    if flavor == "Y":
        return [(P.n + 1 - f, P.n + 1 - e) for e, f in fs]
    if flavor != "y":
        raise DomainError(f"unknown flavor {flavor!r}")
    return fs


def puzzle_weight(P: Puzzle, flavor: str = "y") -> tuple[list[tuple[int, int]], MPoly]:
    fs = puzzle_factors(P, flavor)
    return fs, factors_poly(fs, flavor)


def coefficient_by_puzzles(lam, mu, nu, n, d, flavor: str = "y", trapezoid: bool = False) -> MPoly:
    enum = enumerate_trapezoid_puzzles if trapezoid else enumerate_puzzles
    return poly_sum(puzzle_weight(P, flavor)[1] for P in enum(lam, mu, nu, n, d))


# the bijection Phi ------------------------------------------------------


class PathError(AssertionError):
    """The 1-paths of a puzzle do not have the expected shape."""


def phi(P: Puzzle) -> SkewBarredTableau:
    """Puzzle -> equivariant LR skew tableau; segment j of path i fills row d+2-i-j with i's."""
    d, n = P.d, P.n
    mu = P.mu
    cells: dict[tuple[int, int], tuple[int, bool]] = {}
    for i, segments in enumerate(_trace(P), start=1):
        if len(segments) != d + 1 - i:
            raise PathError(f"path {i} has {len(segments)} segments, expected {d + 1 - i}")
        for j, seg in enumerate(segments, start=1):
            r = d + 2 - i - j
            for x, h, barred in seg:
                c = n - x - h - (j - 1)
                if not 1 <= c <= mu[r - 1] or (r, c) in cells:
                    raise PathError(f"path {i} puts an entry at invalid cell {(r, c)}")
                cells[(r, c)] = (i, barred)
    B = BarredTableau.from_cells(mu, d, cells)
    if not is_valid_reverse(mu, None, d, {c: v for c, (v, _) in cells.items()}):
        raise PathError("path data does not form a reverse tableau")
    return SkewBarredTableau(P.lam, B)


def _trace(P: Puzzle) -> list[list[list[tuple[int, int, bool]]]]:
    pm = P.piece_map
    n = P.n
    out = []
    for t in [t for t in range(1, n + 1) if P.ne[t - 1] == "1"]:
        x, h = t - 1, n - t
        segments = []
        done = False
        while not done:
            seg = []
            while True:
                pl = pm.get(("u", x, h))
                kind = pl[0] if pl else None
                if kind == DU:
                    seg.append((x, h, False))
                    x -= 1
                elif kind == EQ:
                    seg.append((x, h, True))
                    h -= 1
                elif kind == ONE_UP:
                    break
                else:
                    raise PathError(f"unexpected {kind} on a segment at up({x},{h})")
            segments.append(seg)
            while True:
                if h == P.bottom:
                    done = True
                    break
                pl = pm.get(("d", x, h - 1))
                kind = pl[0] if pl else None
                h -= 1
                if kind == ONE_DOWN:
                    break
                if kind != UD:
                    raise PathError(f"unexpected {kind} on a vertical run at down({x},{h})")
        if P.s[x] != "1":
            raise PathError(f"path ends at S edge {x + 1}, which is labeled 0")
        out.append(segments)
    return out


def path_pieces(L: SkewBarredTableau, n: int, trapezoid: bool = False) -> list[Placement]:
    """The 1-triangles and rhombi along the d paths of Phi^{-1}(L)."""
    d = L.d
    lam, mu = L.lam, L.mu
    ne = partition_to_word(lam, n)
    if not in_box(mu, d, n):
        raise DomainError(f"mu={mu} is not in P_{{{d},{n}}}")
    bottom = -n if trapezoid else 0
    cells = L.B.cells
    pieces: list[Placement] = []
    tops = [t for t in range(1, n + 1) if ne[t - 1] == "1"]
    for i, t in enumerate(tops, start=1):
        x, h = t - 1, n - t
        for j in range(1, d + 2 - i):
            r = d + 2 - i - j
            row = sorted(c for (rr, c), (v, _) in cells.items() if rr == r and v == i)
            start = 1 + sum(1 for (rr, c), (v, _) in cells.items() if rr == r and v > i)
            if j > 1:
                h_new = n - x - (j - 1) - start
                if h_new > h - 1:
                    raise DomainError("tableau is not the image of a puzzle (segments overlap)")
                for k in range(h - 1, h_new, -1):
                    pieces.append((UD, x, k))
                pieces.append((ONE_DOWN, x, h_new))
                h = h_new
            for c in row:
                if n - x - h - (j - 1) != c:
                    raise DomainError("entries of one value in a row must be consecutive")
                if cells[(r, c)][1]:
                    pieces.append((EQ, x, h))
                    h -= 1
                else:
                    pieces.append((DU, x, h))
                    x -= 1
            pieces.append((ONE_UP, x, h))
        for k in range(h - 1, bottom - 1, -1):
            pieces.append((UD, x, k))
    return pieces


def phi_inverse(L: SkewBarredTableau, n: int, trapezoid: bool = False) -> Puzzle:
    """Lay the d paths down and complete the rest of the tiling (which is forced)."""
    d = L.d
    nu = L.unbarred_content()
    ne, nw, s = _words(L.lam, L.mu, nu, n, d)
    fixed = path_pieces(L, n, trapezoid)
    for p in fixed:
        for tri in piece_cells(*p):
            if not in_region(tri, n, trapezoid):
                raise DomainError("tableau needs a 1-triangle below D; use a trapezoid puzzle")
    labels = boundary_labels(ne, nw, s, trapezoid)
    sols = _search(n, trapezoid, labels, fixed)
    if len(sols) != 1:
        raise DomainError(f"expected a unique completion, found {len(sols)}")
    return Puzzle(n, d, ne, nw, s, sols[0], trapezoid)


def check_bijection(lam, mu, nu, n: int, d: int) -> dict:
    """Compare puzzles and tableaux on one instance through Phi.

    LP+ is the set of puzzles, LP that of trapezoid puzzles, LR+ the
    tableaux whose weight factors all have e > f. Returns the four counts
    and a list of failures: empty when Phi maps LP+ onto LR+ and LP onto
    LR, Phi and Phi^{-1} round-trip, and the factor lists agree.
    """
    from .tableaux import enumerate_lr_tableaux
    from .weights import c_L_factors

    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    Ls = enumerate_lr_tableaux(lam, mu, nu, d)
    Ps = enumerate_puzzles(lam, mu, nu, n, d)
    Ts = enumerate_trapezoid_puzzles(lam, mu, nu, n, d)
    lr_plus = [L for L in Ls if all(e > f for e, f in c_L_factors(L))]
    fails = []
    for flavor, puzzles, trap in (("LP", Ps, False), ("LP-trapezoid", Ts, True)):
        keys = []
        for P in puzzles:
            L = phi(P)
            keys.append(L.key())
            if phi_inverse(L, n, trap) != P:
                fails.append(f"{flavor}: Phi^-1(Phi(P)) != P")
            if sorted(puzzle_factors(P)) != sorted(c_L_factors(L)):
                fails.append(f"{flavor}: factor lists differ")
        want = sorted(L.key() for L in (Ls if trap else lr_plus))
        if sorted(keys) != want:
            fails.append(f"{flavor}: image of Phi is not the expected tableau set")
    for L in Ls:
        if phi(phi_inverse(L, n, True)).key() != L.key():
            fails.append("LR: Phi(Phi^-1(L)) != L")
    if len(Ps) != len(lr_plus):
        fails.append("|LP+| != |LR+|")
    if len(Ts) != len(Ls):
        fails.append("|LP| != |LR|")
    return {"LP+": len(Ps), "LR+": len(lr_plus), "LP": len(Ts), "LR": len(Ls), "failures": fails}
