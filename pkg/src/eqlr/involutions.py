"""The involutions s_i on hatted tableaux and the Bad Guy involution.

Hats: 0 none, 1 left, 2 right. For a fixed i an entry of value i (resp.
i+1) is free if its column has no i+1 (resp. i), semi-free if it has
such a partner and one of the two carries a hat, and locked otherwise.
Since columns strictly increase downward, a partner pair is an i sitting
directly on top of an i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DomainError, content, is_partition, sigma_swap
from .tableaux import HAT_LEFT, HAT_NONE, HAT_RIGHT, Cell, HattedTableau

FREE, SEMI, LOCKED = "free", "semi-free", "locked"


@dataclass(frozen=True)
class EntryMap:
    b_l: dict[Cell, Cell]
    b_r: dict[Cell, Cell]


def _partner(cells: dict, cell: Cell, i: int) -> Cell | None:
    r, c = cell
    v = cells[cell][0]
    other = (r - 1, c) if v == i else (r + 1, c)
    want = i + 1 if v == i else i
    if other in cells and cells[other][0] == want:
        return other
    return None


def classify(H: HattedTableau, i: int, min_col: int = 1) -> dict[Cell, str]:
    """Class of every cell of value i or i+1 in columns >= min_col."""
    cells = H.cells
    out = {}
    for cell, (v, h) in cells.items():
        if cell[1] < min_col or v not in (i, i + 1):
            continue
        p = _partner(cells, cell, i)
        if p is None:
            out[cell] = FREE
        elif h != HAT_NONE or cells[p][1] != HAT_NONE:
            out[cell] = SEMI
        else:
            out[cell] = LOCKED
    return out


def free_strings(H: HattedTableau, i: int, min_col: int = 1) -> list[list[Cell]]:
    """Maximal runs of horizontally adjacent free cells, each listed left to right."""
    cls = classify(H, i, min_col)
    runs = []
    for r in range(1, H.d + 1):
        cur: list[Cell] = []
        for c in range(H.mu[r - 1], max(H.kappa[r - 1], min_col - 1), -1):
            if cls.get((r, c)) == FREE:
                cur.append((r, c))
            else:
                if cur:
                    runs.append(cur)
                cur = []
        if cur:
            runs.append(cur)
    return runs


def _transform_string(items: list[list[int]], i: int) -> list[int]:
    """Steps 1 and 2 on one string.

    items[k] = [value, hat] for the k-th entry from the left. Returns the
    permutation perm with perm[k] = index (into items) of the entry now in
    position k; values are updated in place.
    """
    n = len(items)
    pos = list(range(n))  # pos[k] = item index at position k
    movable = [k for k in range(n) if items[k][1] != HAT_RIGHT]
    # 1A: flip values, left hats stay
    for k in movable:
        items[k][0] = 2 * i + 1 - items[k][0]
    # 1B: all i's to the left of all (i+1)'s, relative order kept
    order = [k for k in movable if items[k][0] == i] + [k for k in movable if items[k][0] == i + 1]
    for slot, k in zip(movable, order):
        pos[slot] = k
    # step 2
    rights_i = [pos[k] for k in range(n) if items[pos[k]][1] == HAT_RIGHT and items[pos[k]][0] == i]
    rights_j = [pos[k] for k in range(n) if items[pos[k]][1] == HAT_RIGHT and items[pos[k]][0] == i + 1]
    for a in rights_i:
        p = pos.index(a)
        if p > 0 and items[pos[p - 1]][0] == i + 1:
            pos[p - 1], pos[p] = pos[p], pos[p - 1]
            items[a][0] = i + 1
    for a in reversed(rights_j):
        p = pos.index(a)
        if p < n - 1 and items[pos[p + 1]][0] == i:
            pos[p + 1], pos[p] = pos[p], pos[p + 1]
            items[a][0] = i
    return pos


def apply_s_i(H: HattedTableau, i: int, min_col: int = 1) -> tuple[HattedTableau, EntryMap]:
    """s_i on H, or on the part H_{>j} of H in columns >= min_col = j+1."""
    if not 1 <= i < H.d:
        raise DomainError(f"s_{i} needs 1 <= i <= d-1 (d={H.d})")
    cells = {cell: list(vh) for cell, vh in H.cells.items()}
    moved: dict[Cell, Cell] = {}
    cls = classify(H, i, min_col)
    for run in free_strings(H, i, min_col):
        items = [list(cells[cell]) for cell in run]
        perm = _transform_string(items, i)
        for k, cell in enumerate(run):
            src = perm[k]
            cells[cell] = items[src]
            moved[run[src]] = cell
    # step 3: semi-free pairs trade hats
    for cell, kind in cls.items():
        if kind == SEMI and H.cells[cell][0] == i:
            below = (cell[0] - 1, cell[1])
            cells[cell][1], cells[below][1] = H.cells[below][1], H.cells[cell][1]
            moved[cell] = below
            moved[below] = cell
    out = HattedTableau(H.mu, H.d, tuple((cell, *cells[cell]) for cell, _, _ in H.entries), H.kappa)
    b_l, b_r = {}, {}
    for cell, v, h in H.entries:
        if h == HAT_NONE:
            continue
        target = moved.get(cell, cell)
        (b_l if h == HAT_LEFT else b_r)[cell] = target
    return out, EntryMap(b_l, b_r)


def apply_sigma(word: Sequence[int], H: HattedTableau) -> HattedTableau:
    """sigma H = s_{i1} ... s_{it} H, the rightmost letter acting first."""
    for i in reversed(list(word)):
        H = apply_s_i(H, i)[0]
    return H


def columns_content(H: HattedTableau, j: int) -> tuple[int, ...]:
    """omega(H^u_{<=j}): unhatted content of the columns 1..j."""
    return content((v for (r, c), v, h in H.entries if c <= j and h == HAT_NONE), H.d)


def bad_guy_data(H: HattedTableau, lam: Sequence[int]) -> tuple[int, int] | None:
    """(j, i) for a Bad Guy (j minimal cutoff, i minimal descent violation), else None."""
    lam = tuple(lam)
    width = H.mu[0] if H.d else 0
    for j in range(0, width + 1):
        p = tuple(a + b for a, b in zip(lam, columns_content(H, j)))
        if not is_partition(p):
            for i in range(1, H.d):
                if p[i - 1] < p[i]:
                    return j, i
    return None


def bad_guy_star(H: HattedTableau, lam: Sequence[int]) -> HattedTableau | None:
    data = bad_guy_data(H, lam)
    if data is None:
        return None
    j, i = data
    return apply_s_i(H, i, min_col=j + 1)[0]


def bender_knuth(H: HattedTableau, i: int) -> HattedTableau:
    """Classical Bender-Knuth move on a hat-free tableau (independent of s_i)."""
    if any(h != HAT_NONE for _, _, h in H.entries):
        raise DomainError("bender_knuth expects a hat-free tableau")
    cells = {cell: v for cell, (v, _) in H.cells.items()}
    new = dict(cells)
    for r in range(1, H.d + 1):
        row = [(r, c) for c in range(H.mu[r - 1], H.kappa[r - 1], -1)]  # left to right
        free = []
        for cell in row:
            v = cells[cell]
            if v == i and cells.get((cell[0] - 1, cell[1])) == i + 1:
                continue
            if v == i + 1 and cells.get((cell[0] + 1, cell[1])) == i:
                continue
            if v in (i, i + 1):
                free.append(cell)
        a = sum(1 for cell in free if cells[cell] == i)
        b = len(free) - a
        for k, cell in enumerate(free):
            new[cell] = i if k < b else i + 1
    return HattedTableau(H.mu, H.d, tuple((cell, new[cell], HAT_NONE) for cell, _, _ in H.entries), H.kappa)


# checks ---------------------------------------------------------------


def _prefix_content(H: HattedTableau, cell: Cell) -> tuple[int, ...]:
    """omega(H^u_{<a})."""
    counts = [0] * H.d
    for c, v, h in H.entries:
        if c == cell:
            return tuple(counts)
        if h == HAT_NONE:
            counts[v - 1] += 1
    raise DomainError(f"cell {cell} not in tableau")


def check_s_i_properties(H: HattedTableau, i: int, xi: Sequence[int]) -> list[str]:
    """Names of the properties of s_i that fail on (H, i, xi); empty when all hold.

    Checked: the involution property, (i) values under b_l, (ii) unhatted
    content, (iii) prefix content at b_l(a) in the coordinate |b_l(a)|,
    (iv) e-indices, (v) f-indices under b_r, (vi) d-weights, and that
    b_l, b_r are bijections onto the hatted cells of s_i H.
    """
    from .weights import e_xi, f_index, weight_d_xi_H

    xi = tuple(xi)
    S, m = apply_s_i(H, i)
    bad = []
    if apply_s_i(S, i)[0] != H:
        bad.append("involution")
    swap = {i: i + 1, i + 1: i}
    sxi = sigma_swap(xi, i)
    for a, b in m.b_l.items():
        va, vb = H.cells[a][0], S.cells[b][0]
        if vb != swap.get(va, va):
            bad.append("i")
        if _prefix_content(S, b)[vb - 1] != sigma_swap(_prefix_content(H, a), i)[vb - 1]:
            bad.append("iii")
        if e_xi(sxi, S, b) != e_xi(xi, H, a):
            bad.append("iv")
    for a, b in m.b_r.items():
        if f_index(b, S.cells[b][0], H.d) != f_index(a, H.cells[a][0], H.d):
            bad.append("v")
    if content(S.unhatted_word(), H.d) != sigma_swap(content(H.unhatted_word(), H.d), i):
        bad.append("ii")
    if weight_d_xi_H(sxi, S) != weight_d_xi_H(xi, H):
        bad.append("vi")
    for hat, mp in ((HAT_LEFT, m.b_l), (HAT_RIGHT, m.b_r)):
        if sorted(mp.values()) != sorted(c for c, v, h in S.entries if h == hat):
            bad.append("bijective")
    return sorted(set(bad))


def act(word: Sequence[int], xi: Sequence[int]) -> tuple[int, ...]:
    """sigma . xi for sigma = sigma_{i1} ... sigma_{it}, the rightmost letter first."""
    out = tuple(xi)
    for i in reversed(list(word)):
        out = sigma_swap(out, i)
    return out


def check_sigma_words(H: HattedTableau, words: Sequence[Sequence[int]], xi: Sequence[int]) -> bool:
    """For words all spelling one permutation sigma, check omega((sigma H)^u) =
    sigma omega(H^u) and d_{sigma xi, sigma H} = d_{xi, H} for each word."""
    from .weights import weight_d_xi_H

    w0 = content(H.unhatted_word(), H.d)
    d0 = weight_d_xi_H(xi, H)
    for word in words:
        G = apply_sigma(word, H)
        if content(G.unhatted_word(), H.d) != act(word, w0):
            return False
        if weight_d_xi_H(act(word, xi), G) != d0:
            return False
    return True
