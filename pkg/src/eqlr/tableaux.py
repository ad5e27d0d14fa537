"""Reverse diagrams and the tableau species built on them.

Coordinates are (r, c): r counts rows from the bottom, c counts columns
from the right, both starting at 1. Row r of a reverse diagram of shape
mu/kappa holds the columns kappa_r+1 .. mu_r. Reading order goes through
columns c = 1, 2, ... and, inside a column, from the top down.

In a reverse tableau values weakly increase from left to right along a
row, i.e. value(r, c+1) <= value(r, c), and strictly increase from top
to bottom, i.e. value(r+1, c) < value(r, c).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .core import DomainError, conjugate, content, is_partition, is_yamanouchi

Cell = tuple[int, int]

HAT_NONE, HAT_LEFT, HAT_RIGHT = 0, 1, 2
HAT_NAMES = ("none", "left", "right")


def _check_shape(mu: Sequence[int], kappa: Sequence[int] | None, d: int) -> tuple[tuple, tuple]:
    mu = tuple(mu)
    if len(mu) != d or not is_partition(mu):
        raise DomainError(f"shape {mu} is not a length-{d} partition")
    kappa = tuple(kappa) if kappa else (0,) * d
    if len(kappa) != d or not is_partition(kappa):
        raise DomainError(f"inner shape {kappa} is not a length-{d} partition")
    if any(k > m for k, m in zip(kappa, mu)):
        raise DomainError(f"inner shape {kappa} is not contained in {mu}")
    return mu, kappa


def diagram_cells(mu: Sequence[int], kappa: Sequence[int] | None = None) -> list[Cell]:
    """Cells of the reverse diagram mu/kappa in reading order."""
    d = len(mu)
    kappa = tuple(kappa) if kappa else (0,) * d
    mu_c = conjugate(mu)
    kap_c = conjugate(kappa)
    out = []
    for c in range(1, (mu[0] if d else 0) + 1):
        top = mu_c[c - 1]
        bottom = (kap_c[c - 1] if c <= len(kap_c) else 0) + 1
        for r in range(top, bottom - 1, -1):
            out.append((r, c))
    return out


def reading_index(mu: Sequence[int], kappa: Sequence[int] | None = None) -> dict[Cell, int]:
    return {cell: k for k, cell in enumerate(diagram_cells(mu, kappa))}


def lambda_column_word(lam: Sequence[int]) -> list[int]:
    """Column word of the forced lambda part: rightmost column first, each top down."""
    lc = conjugate(lam)
    word = []
    for j in range(len(lc), 0, -1):
        word.extend(range(1, lc[j - 1] + 1))
    return word


@dataclass(frozen=True)
class BarredTableau:
    """Reverse barred tableau of shape mu/kappa; entries in reading order.

    With sub=True cells may be missing (empty) and no row/column
    condition is imposed; this is the sub-variant B_sub / R_sub.
    """

    mu: tuple[int, ...]
    d: int
    entries: tuple[tuple[Cell, int, bool], ...]
    kappa: tuple[int, ...] = ()
    sub: bool = False

    def __post_init__(self):
        if not self.kappa:
            object.__setattr__(self, "kappa", (0,) * self.d)

    @cached_property
    def cells(self) -> dict[Cell, tuple[int, bool]]:
        return {cell: (v, b) for cell, v, b in self.entries}

    def value(self, cell: Cell) -> int:
        return self.cells[cell][0]

    def barred_cells(self) -> list[Cell]:
        return [cell for cell, _, b in self.entries if b]

    def n_bars(self) -> int:
        return sum(1 for _, _, b in self.entries if b)

    def unbarred_word(self) -> list[int]:
        return [v for _, v, b in self.entries if not b]

    def unbarred_content(self) -> tuple[int, ...]:
        return content(self.unbarred_word(), self.d)

    def strip(self) -> "BarredTableau":
        """Remove all bars (B -> B-tilde)."""
        return BarredTableau(self.mu, self.d, tuple((c, v, False) for c, v, _ in self.entries), self.kappa, self.sub)

    def key(self) -> tuple:
        return tuple((v, b) for _, v, b in self.entries)

    def to_json(self, lam: Sequence[int] | None = None) -> dict:
        return {
            "lambda": list(lam) if lam is not None else None,
            "mu": list(self.mu),
            "kappa": list(self.kappa),
            "cells": [{"r": r, "c": c, "value": v, "barred": b} for (r, c), v, b in self.entries],
        }

    @classmethod
    def from_cells(cls, mu, d, cells: dict[Cell, tuple[int, bool]], kappa=None, sub=False) -> "BarredTableau":
        mu, kappa = _check_shape(mu, kappa, d)
        order = diagram_cells(mu, kappa)
        if not sub and set(cells) != set(order):
            raise DomainError("cells do not match the diagram")
        if set(cells) - set(order):
            raise DomainError("cells outside the diagram")
        entries = tuple((cell, *cells[cell]) for cell in order if cell in cells)
        return cls(mu, d, entries, kappa, sub)

    @classmethod
    def from_rows(cls, rows: Sequence[str], d: int, mu=None, kappa=None) -> "BarredTableau":
        """Build from rows written left to right, bottom row first.

        Tokens are separated by spaces; a trailing '~' marks a bar and '.'
        an empty cell of the inner shape. Example: ["2 2~ 3 4", "1 1~ 3~", "2"].
        """
        toks = [r.split() for r in rows]
        if mu is None:
            mu = tuple(len(t) for t in toks) + (0,) * (d - len(toks))
        cells = {}
        for r, row in enumerate(toks, start=1):
            width = len(row)
            for k, tok in enumerate(row):
                c = width - k
                if tok == ".":
                    continue
                barred = tok.endswith("~")
                cells[(r, c)] = (int(tok.rstrip("~")), barred)
        return cls.from_cells(mu, d, cells, kappa)

    def render(self, unicode: bool = False) -> str:
        return render_rows(self.mu, self.kappa, {c: _tok(v, b, unicode) for c, (v, b) in self.cells.items()})


def _tok(v: int, barred: bool, unicode: bool) -> str:
    if not barred:
        return str(v)
    return str(v) + ("̅" if unicode else "~")


def _width(tok: str) -> int:
    return len(tok) - tok.count("\u0305")


def render_rows(mu, kappa, toks: dict[Cell, str], width: int | None = None) -> str:
    """Rows top to bottom, right justified; '.' for inner-shape cells."""
    d = len(mu)
    w = max([_width(t) for t in toks.values()] + [1]) + 1
    width = width if width is not None else (mu[0] if d else 0)
    lines = []
    for r in range(d, 0, -1):
        if mu[r - 1] == 0:
            continue
        parts = []
        for c in range(width, 0, -1):
            if c > mu[r - 1]:
                parts.append(" " * w)
            elif (r, c) in toks:
                tok = toks[(r, c)]
                parts.append(" " * (w - _width(tok)) + tok)
            else:
                parts.append(".".rjust(w))
        lines.append("".join(parts).rstrip())
    return "\n".join(lines)


def is_valid_reverse(mu, kappa, d, cells: dict[Cell, int]) -> bool:
    """Independent validator: full filling, row-weak, column-strict, values in 1..d."""
    order = diagram_cells(mu, kappa)
    if set(cells) != set(order):
        return False
    for (r, c), v in cells.items():
        if not 1 <= v <= d:
            return False
        left = cells.get((r, c + 1))
        if left is not None and left > v:
            return False
        above = cells.get((r + 1, c))
        if above is not None and above >= v:
            return False
    return True


def _bounds(mu, kappa, d):
    """Per reading-order cell: (cell, above-cell or None, right-cell or None, max value)."""
    kap_c = conjugate(kappa)
    order = diagram_cells(mu, kappa)
    present = set(order)
    out = []
    for r, c in order:
        above = (r + 1, c) if (r + 1, c) in present else None
        right = (r, c - 1) if (r, c - 1) in present else None
        below = r - 1 - (kap_c[c - 1] if c <= len(kap_c) else 0)
        out.append(((r, c), above, right, d - below))
    return out


def _value_fillings(mu, kappa, d) -> Iterator[dict[Cell, int]]:
    plan = _bounds(mu, kappa, d)
    vals: dict[Cell, int] = {}

    def rec(k):
        if k == len(plan):
            yield dict(vals)
            return
        cell, above, right, hi = plan[k]
        lo = vals[above] + 1 if above else 1
        if right:
            hi = min(hi, vals[right])
        for v in range(lo, hi + 1):
            vals[cell] = v
            yield from rec(k + 1)
        vals.pop(cell, None)

    yield from rec(0)


def enumerate_reverse_tableaux(mu, d, kappa=None) -> list[BarredTableau]:
    """R(mu): bar-free reverse tableaux, ordered row by row from the bottom, right to left."""
    mu, kappa = _check_shape(mu, kappa, d)
    order = diagram_cells(mu, kappa)
    out = [BarredTableau(mu, d, tuple((cell, f[cell], False) for cell in order), kappa) for f in _value_fillings(mu, kappa, d)]
    row_major = sorted(order, key=lambda rc: (rc[0], rc[1]))
    out.sort(key=lambda t: tuple(t.cells[cell][0] for cell in row_major))
    return out


def enumerate_barred_tableaux(mu, d, kappa=None) -> list[BarredTableau]:
    """B(mu) (or B(mu/kappa)): every bar pattern on every reverse tableau."""
    mu, kappa = _check_shape(mu, kappa, d)
    order = diagram_cells(mu, kappa)
    out = []
    for f in _value_fillings(mu, kappa, d):
        m = len(order)
        for pattern in range(1 << m):
            out.append(
                BarredTableau(
                    mu, d, tuple((cell, f[cell], bool(pattern >> (m - 1 - k) & 1)) for k, cell in enumerate(order)), kappa
                )
            )
    out.sort(key=BarredTableau.key)
    return out


@dataclass(frozen=True)
class SkewBarredTableau:
    """L = lambda*B. The lambda part is forced (row i is lambda_i unbarred i's)."""

    lam: tuple[int, ...]
    B: BarredTableau

    @property
    def d(self) -> int:
        return self.B.d

    @property
    def mu(self) -> tuple[int, ...]:
        return self.B.mu

    @property
    def kappa(self) -> tuple[int, ...]:
        return self.B.kappa

    @cached_property
    def prefix_contents(self) -> dict[Cell, tuple[int, ...]]:
        """cell a -> content of L^u_{<a}."""
        counts = list(self.lam)
        out = {}
        for cell, v, b in self.B.entries:
            out[cell] = tuple(counts)
            if not b:
                counts[v - 1] += 1
        return out

    def word(self) -> list[int]:
        return lambda_column_word(self.lam) + self.B.unbarred_word()

    def unbarred_content(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.lam, self.B.unbarred_content()))

    def is_yamanouchi(self) -> bool:
        return is_yamanouchi(self.word())

    def key(self) -> tuple:
        return self.B.key()

    def to_json(self) -> dict:
        return self.B.to_json(self.lam)

    def render(self, unicode: bool = False) -> str:
        return self.B.render(unicode)


def unbarred_column_word(L: SkewBarredTableau) -> list[int]:
    return L.word()


def word_prefix_before(L: SkewBarredTableau, cell: Cell) -> list[int]:
    """L^u_{<a}: the unbarred word read strictly before cell a."""
    if cell not in L.B.cells:
        raise DomainError(f"cell {cell} is not a cell of B")
    out = lambda_column_word(L.lam)
    for c, v, b in L.B.entries:
        if c == cell:
            return out
        if not b:
            out.append(v)
    raise AssertionError("unreachable")


def enumerate_lr_tableaux(lam, mu, nu, d, kappa=None) -> list[SkewBarredTableau]:
    """LR^nu_{lambda,mu}: lambda*B with Yamanouchi unbarred word and content nu."""
    lam = tuple(lam)
    nu = tuple(nu)
    mu, kappa = _check_shape(mu, kappa, d)
    if len(lam) != d or not is_partition(lam) or len(nu) != d or not is_partition(nu):
        raise DomainError("lambda and nu must be length-d partitions")
    if any(a > b for a, b in zip(lam, nu)):
        return []
    plan = _bounds(mu, kappa, d)
    need_total = sum(nu) - sum(lam)
    if need_total < 0 or need_total > len(plan):
        return []
    vals: dict[Cell, int] = {}
    bars: dict[Cell, bool] = {}
    counts = list(lam)
    out: list[SkewBarredTableau] = []
    ncell = len(plan)

    def rec(k, placed):
        if k == ncell:
            if tuple(counts) == nu:
                entries = tuple((cell, vals[cell], bars[cell]) for cell, *_ in plan)
                out.append(SkewBarredTableau(lam, BarredTableau(mu, d, entries, kappa)))
            return
        if need_total - placed > ncell - k:
            return
        cell, above, right, hi = plan[k]
        lo = vals[above] + 1 if above else 1
        if right:
            hi = min(hi, vals[right])
        for v in range(lo, hi + 1):
            vals[cell] = v
            i = v - 1
            # unbarred first: keeps reading-order lex output
            if counts[i] < nu[i] and (i == 0 or counts[i] < counts[i - 1]):
                bars[cell] = False
                counts[i] += 1
                rec(k + 1, placed + 1)
                counts[i] -= 1
            bars[cell] = True
            rec(k + 1, placed)
        vals.pop(cell, None)
        bars.pop(cell, None)

    rec(0, 0)
    return out


def candidate_nus(lam, mu, d, kappa=None) -> list[tuple[int, ...]]:
    """All nu = lambda + omega with lambda <= nu, |nu| <= |lambda|+|mu/kappa|, nu_1 <= lambda_1 + mu_1."""
    lam = tuple(lam)
    kappa = tuple(kappa) if kappa else (0,) * d
    budget = sum(mu) - sum(kappa)
    top = lam[0] + (mu[0] if d else 0) if d else 0
    out = []

    def rec(prefix, used):
        k = len(prefix)
        if k == d:
            out.append(tuple(prefix))
            return
        cap = top if k == 0 else prefix[-1]
        for v in range(lam[k], cap + 1):
            if used + v - lam[k] > budget:
                break
            prefix.append(v)
            rec(prefix, used + v - lam[k])
            prefix.pop()

    if d == 0:
        return [()]
    rec([], 0)
    return out


# hatted tableaux ------------------------------------------------------


@dataclass(frozen=True)
class HattedTableau:
    """Reverse tableau whose entries carry a hat: 0 none, 1 left, 2 right."""

    mu: tuple[int, ...]
    d: int
    entries: tuple[tuple[Cell, int, int], ...]
    kappa: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.kappa:
            object.__setattr__(self, "kappa", (0,) * self.d)

    @cached_property
    def cells(self) -> dict[Cell, tuple[int, int]]:
        return {cell: (v, h) for cell, v, h in self.entries}

    def bar_projection(self) -> BarredTableau:
        """H-bar: hats become bars."""
        return BarredTableau(self.mu, self.d, tuple((c, v, h != HAT_NONE) for c, v, h in self.entries), self.kappa)

    def unhatted_word(self) -> list[int]:
        return [v for _, v, h in self.entries if h == HAT_NONE]

    def key(self) -> tuple:
        return tuple((v, h) for _, v, h in self.entries)

    @classmethod
    def from_cells(cls, mu, d, cells: dict[Cell, tuple[int, int]], kappa=None) -> "HattedTableau":
        mu, kappa = _check_shape(mu, kappa, d)
        order = diagram_cells(mu, kappa)
        if set(cells) != set(order):
            raise DomainError("cells do not match the diagram")
        return cls(mu, d, tuple((cell, *cells[cell]) for cell in order), kappa)

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "kappa": list(self.kappa),
            "cells": [{"r": r, "c": c, "value": v, "hat": HAT_NAMES[h]} for (r, c), v, h in self.entries],
        }

    def render(self) -> str:
        pre = ("", "v", "^")
        return render_rows(self.mu, self.kappa, {c: pre[h] + str(v) for c, (v, h) in self.cells.items()})


def enumerate_hatted(mu, d, kappa=None) -> list[HattedTableau]:
    """H(mu): every barred tableau with each bar replaced by a left or right hat."""
    mu, kappa = _check_shape(mu, kappa, d)
    order = diagram_cells(mu, kappa)
    m = len(order)
    out = []
    for f in _value_fillings(mu, kappa, d):
        for code in range(3**m):
            hats = []
            for _ in range(m):
                hats.append(code % 3)
                code //= 3
            out.append(HattedTableau(mu, d, tuple((cell, f[cell], hats[k]) for k, cell in enumerate(order)), kappa))
    out.sort(key=HattedTableau.key)
    return out
