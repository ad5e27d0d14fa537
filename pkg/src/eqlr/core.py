"""Partitions, compositions, boundary words and the Yamanouchi predicate.

Partitions and compositions are plain tuples of ints with explicit length d.
Boundary words are strings over '0'/'1', leftmost character first.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


def is_partition(p: Sequence[int]) -> bool:
    return all(x >= 0 for x in p) and all(p[k] >= p[k + 1] for k in range(len(p) - 1))


def partition(parts: Iterable[int], d: int) -> tuple[int, ...]:
    """Normalize parts to a length-d partition, padding with zeros.

    Raises DomainError if the parts are not weakly decreasing and nonnegative,
    or if more than d of them are nonzero.
    """
    p = list(parts)
    while len(p) > d and p[-1] == 0:
        p.pop()
    if len(p) > d:
        raise DomainError(f"partition {tuple(p)} has more than d={d} parts")
    p += [0] * (d - len(p))
    if not is_partition(p):
        raise DomainError(f"{tuple(p)} is not a partition")
    return tuple(p)


def in_box(p: Sequence[int], d: int, n: int) -> bool:
    """Membership in P_{d,n}: length d and largest part at most n-d."""
    return len(p) == d and is_partition(p) and (d == 0 or p[0] <= n - d)


def size(p: Sequence[int]) -> int:
    return sum(p)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True if inner is a subdiagram of outer (shorter tuples are zero-padded)."""
    m = max(len(outer), len(inner))
    a = tuple(outer) + (0,) * (m - len(outer))
    b = tuple(inner) + (0,) * (m - len(inner))
    return all(x >= y for x, y in zip(a, b))


def rho(d: int) -> tuple[int, ...]:
    return tuple(range(d - 1, -1, -1))


def ones(d: int) -> tuple[int, ...]:
    return (1,) * d


def add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise DomainError(f"length mismatch {len(a)} != {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def prime(m: int, d: int) -> int:
    """m' = d+1-m."""
    if not 1 <= m <= d:
        raise DomainError(f"value {m} outside 1..{d}")
    return d + 1 - m


def content(seq: Iterable[int], d: int) -> tuple[int, ...]:
    """Multiplicities of 1..d in seq."""
    counts = [0] * d
    for v in seq:
        if not 1 <= v <= d:
            raise DomainError(f"value {v} outside 1..{d}")
        counts[v - 1] += 1
    return tuple(counts)


def is_yamanouchi(seq: Iterable[int]) -> bool:
    """Every prefix has at least as many k's as (k+1)'s."""
    counts: dict[int, int] = {}
    for v in seq:
        if v < 1:
            raise DomainError(f"value {v} is not positive")
        c = counts.get(v, 0) + 1
        if v > 1 and c > counts.get(v - 1, 0):
            return False
        counts[v] = c
    return True


def word_to_partition(w: str) -> tuple[int, ...]:
    """lambda_j = number of zeros to the right of the j-th one."""
    if set(w) - {"0", "1"}:
        raise DomainError(f"boundary word {w!r} has letters other than 0/1")
    parts = []
    zeros_right = w.count("0")
    for ch in w:
        if ch == "1":
            parts.append(zeros_right)
        else:
            zeros_right -= 1
    return tuple(parts)


def check_word(w: str, d: int) -> None:
    if set(w) - {"0", "1"}:
        raise DomainError(f"boundary word {w!r} has letters other than 0/1")
    if w.count("1") != d:
        raise DomainError(f"boundary word {w!r} has {w.count('1')} ones, expected {d}")


def partition_to_word(p: Sequence[int], n: int) -> str:
    d = len(p)
    if not in_box(p, d, n):
        raise DomainError(f"{tuple(p)} is not in P_{{{d},{n}}}")
    # the j-th one sits at position n-d-p_j+j (1-based)
    pos = {n - d - p[j] + j for j in range(d)}
    return "".join("1" if k in pos else "0" for k in range(n))


def conjugate(p: Sequence[int]) -> tuple[int, ...]:
    if not p or p[0] == 0:
        return ()
    return tuple(sum(1 for x in p if x > k) for k in range(p[0]))


def sigma_swap(xi: Sequence[int], i: int) -> tuple[int, ...]:
    """Apply the transposition sigma_i (1-based) to a composition."""
    t = list(xi)
    t[i - 1], t[i] = t[i], t[i - 1]
    return tuple(t)


def partitions_in_box(d: int, width: int) -> Iterator[tuple[int, ...]]:
    """All length-d partitions with parts at most width, in lex order."""

    def rec(prefix: list[int], cap: int):
        if len(prefix) == d:
            yield tuple(prefix)
            return
        for v in range(cap + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], width)


def partitions_inside(outer: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All partitions of length len(outer) contained in outer."""
    d = len(outer)

    def rec(prefix: list[int]):
        k = len(prefix)
        if k == d:
            yield tuple(prefix)
            return
        cap = outer[k] if k == 0 else min(outer[k], prefix[-1])
        for v in range(cap + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def all_words(n: int, d: int) -> Iterator[str]:
    for ones_at in combinations(range(n), d):
        s = set(ones_at)
        yield "".join("1" if k in s else "0" for k in range(n))


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse '3,2,1' (or '' for the empty partition) into a tuple."""
    text = text.strip()
    if not text or text in ("0", "()", "[]"):
        return ()
    out = []
    for k, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if not tok.lstrip("-").isdigit():
            raise DomainError(f"cannot parse part {k + 1} ({tok!r}) of {text!r}")
        out.append(int(tok))
    return tuple(out)
