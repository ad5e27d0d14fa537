"""Exact sparse polynomials over Z in the variable families x_i, y_i, Y_i.

A monomial is packed into a single Python int: every variable gets a
32-bit slot from a process-wide registry, so multiplying monomials is
integer addition. The registry only grows, and slot order never leaks
into output: serialization decodes to the canonical (family, index, exp)
order.
"""

from __future__ import annotations

import json
import threading
from typing import Iterable, Iterator, Mapping, Sequence

from .core import DomainError

FAMILIES = ("x", "y", "Y")
_FAMILY_RANK = {f: k for k, f in enumerate(FAMILIES)}

_BITS = 32
_MASK = (1 << _BITS) - 1

_slots: dict[tuple[str, int], int] = {}
_slot_vars: list[tuple[str, int]] = []
_lock = threading.Lock()


def _slot(family: str, index: int) -> int:
    key = (family, index)
    s = _slots.get(key)
    if s is None:
        if family not in _FAMILY_RANK:
            raise DomainError(f"unknown variable family {family!r}")
        # y_i for i <= 0 occur in skew factorial Schur functions
        if index < 1 and family != "y":
            raise DomainError(f"variable index must be >= 1, got {index}")
        with _lock:
            s = _slots.get(key)
            if s is None:
                s = len(_slot_vars)
                _slot_vars.append(key)
                _slots[key] = s
    return s


def _var_key(family: str, index: int, exp: int = 1) -> int:
    return exp << (_BITS * _slot(family, index))


def decode(key: int) -> list[tuple[str, int, int]]:
    """Monomial key -> sorted list of (family, index, exp)."""
    out = []
    s = 0
    while key:
        e = key & _MASK
        if e:
            fam, idx = _slot_vars[s]
            out.append((fam, idx, e))
        key >>= _BITS
        s += 1
    out.sort(key=lambda t: (_FAMILY_RANK[t[0]], t[1]))
    return out


def encode(mono: Iterable[tuple[str, int, int]]) -> int:
    key = 0
    for fam, idx, e in mono:
        if e < 0:
            raise DomainError("negative exponent")
        key += _var_key(fam, idx, e)
    return key


class MPoly:
    """Immutable polynomial: dict from packed monomial to nonzero int."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._t: dict[int, int] = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    # construction ---------------------------------------------------
    @classmethod
    def _raw(cls, t: dict[int, int]) -> "MPoly":
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, family: str, index: int) -> "MPoly":
        return cls._raw({_var_key(family, index): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Iterable[tuple[str, int, int]]]]) -> "MPoly":
        t: dict[int, int] = {}
        for c, mono in terms:
            k = encode(mono)
            t[k] = t.get(k, 0) + c
        return cls._raw({k: c for k, c in t.items() if c})

    # ring operations ------------------------------------------------
    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for k, c in b.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                del t[k]
        return MPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) - c
            if v:
                t[k] = v
            else:
                del t[k]
        return MPoly._raw(t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MPoly()
            return MPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t: dict[int, int] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MPoly._raw({k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power")
        if e and self._t and max(max((x for _, _, x in decode(k)), default=0) for k in self._t) * e > _MASK:
            raise OverflowError("exponent exceeds monomial slot width")
        out = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    # inspection -----------------------------------------------------
    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def terms(self) -> list[tuple[int, list[tuple[str, int, int]]]]:
        """(coeff, monomial) pairs in canonical order."""
        out = [(c, decode(k)) for k, c in self._t.items()]
        out.sort(key=lambda t: [(_FAMILY_RANK[f], i, e) for f, i, e in t[1]])
        return out

    def variables(self) -> set[tuple[str, int]]:
        vs = set()
        for k in self._t:
            for f, i, _ in decode(k):
                vs.add((f, i))
        return vs

    def families(self) -> set[str]:
        return {f for f, _ in self.variables()}

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._t:
            return -1
        return max(sum(e for _, _, e in decode(k)) for k in self._t)

    def is_homogeneous(self) -> bool:
        degs = {sum(e for _, _, e in decode(k)) for k in self._t}
        return len(degs) <= 1

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    # serialization --------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"coeff": c, "monomial": [[f, i, e] for f, i, e in m]} for c, m in self.terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "MPoly":
        return cls.from_terms((d["coeff"], [tuple(v) for v in d["monomial"]]) for d in data)

    def serialize(self) -> bytes:
        return json.dumps(self.to_json(), separators=(",", ":")).encode()

    def __reduce__(self):
        return (MPoly.from_json, (self.to_json(),))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"MPoly({render(self)!r})"


def x(i: int) -> MPoly:
    return MPoly.var("x", i)


def y(i: int) -> MPoly:
    return MPoly.var("y", i)


def Y(i: int) -> MPoly:
    return MPoly.var("Y", i)


ZERO = MPoly()
ONE = MPoly.const(1)


def binomial(e: int, f: int, family: str = "y") -> MPoly:
    """family_e - family_f."""
    return MPoly.var(family, e) - MPoly.var(family, f)


def product(polys: Iterable[MPoly]) -> MPoly:
    out = ONE
    for p in polys:
        out = out * p
        if not out:
            break
    return out


def poly_sum(polys: Iterable[MPoly]) -> MPoly:
    t: dict[int, int] = {}
    for p in polys:
        for k, c in p._t.items():
            t[k] = t.get(k, 0) + c
    return MPoly._raw({k: c for k, c in t.items() if c})


# rendering ----------------------------------------------------------

def _name(family: str, index: int) -> str:
    return f"{family}{index}" if index >= 1 else f"{family}[{index}]"


def _render_mono(mono: list[tuple[str, int, int]]) -> str:
    return "*".join(_name(f, i) + (f"^{e}" if e > 1 else "") for f, i, e in mono)


def render(p: MPoly) -> str:
    """Canonical expanded text, highest degree first, larger indices first."""
    if not p._t:
        return "0"
    terms = [(c, decode(k)) for k, c in p._t.items()]
    terms.sort(
        key=lambda t: (
            -sum(e for _, _, e in t[1]),
            [(-_FAMILY_RANK[f], -i, -e) for f, i, e in t[1]],
        )
    )
    out = []
    for c, m in terms:
        body = _render_mono(m)
        if not body:
            s = str(abs(c))
        elif abs(c) == 1:
            s = body
        else:
            s = f"{abs(c)}*{body}"
        sign = "-" if c < 0 else "+"
        out.append((sign, s))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, s in out[1:]:
        text += sign + s
    return text


def render_factors(factors: Sequence[tuple[int, int]], family: str = "y") -> str:
    """Product of binomials as printed in the paper, e.g. (y8-y3)(y3-y2)."""
    if not factors:
        return "1"
    return "".join(f"({_name(family, e)}-{_name(family, f)})" for e, f in factors)


def render_paired(p: MPoly) -> str | None:
    """Write a linear form with unit coefficients as a sum of binomials.

    Positive variables in descending index order are matched with negative
    variables in ascending index order; returns None when p is not of that
    shape (equal numbers of +1 and -1 linear terms in one family).
    """
    pos, neg = [], []
    fams = set()
    for k, c in p._t.items():
        m = decode(k)
        if len(m) != 1 or m[0][2] != 1 or abs(c) != 1:
            return None
        fams.add(m[0][0])
        (pos if c > 0 else neg).append(m[0][1])
    if not pos or len(pos) != len(neg) or len(fams) != 1:
        return None
    (fam,) = fams
    pos.sort(reverse=True)
    neg.sort()
    return "+".join(f"({_name(fam, e)}-{_name(fam, f)})" for e, f in zip(pos, neg))


# structural operations --------------------------------------------

def determinant(m: Sequence[Sequence[MPoly]]) -> MPoly:
    """Cofactor expansion along rows, memoized over column subsets."""
    d = len(m)
    if any(len(row) != d for row in m):
        raise DomainError("determinant of a non-square matrix")
    if d == 0:
        return ONE
    # dp[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    dp: dict[int, MPoly] = {0: ONE}
    for r in range(d):
        nxt: dict[int, MPoly] = {}
        for mask, val in dp.items():
            if not val:
                continue
            for c in range(d):
                if mask >> c & 1:
                    continue
                entry = m[r][c]
                if not entry:
                    continue
                # sign = (-1)^(number of used columns greater than c)
                sign = -1 if bin(mask >> (c + 1)).count("1") % 2 else 1
                term = entry * val
                if sign < 0:
                    term = -term
                nm = mask | (1 << c)
                nxt[nm] = nxt[nm] + term if nm in nxt else term
        dp = nxt
    return dp.get((1 << d) - 1, ZERO)


def specialize_y_to_Y(p: MPoly, n: int) -> MPoly:
    """y_i -> -Y_{n+1-i} for i <= n, y_i -> 0 for i > n."""
    t: dict[int, int] = {}
    for k, c in p._t.items():
        newk = 0
        sign = 1
        dead = False
        for f, i, e in decode(k):
            if f == "x":
                raise DomainError("specialize_y_to_Y: polynomial contains x variables")
            if f == "y":
                if i < 1:
                    raise DomainError(f"specialize_y_to_Y: y_{i} has no image")
                if i > n:
                    dead = True
                    break
                newk += _var_key("Y", n + 1 - i, e)
                if e % 2:
                    sign = -sign
            else:
                newk += _var_key(f, i, e)
        if dead:
            continue
        t[newk] = t.get(newk, 0) + sign * c
    return MPoly._raw({k: c for k, c in t.items() if c})


def set_family_zero(p: MPoly, family: str) -> MPoly:
    """Substitute 0 for every variable of one family."""
    t: dict[int, int] = {}
    for k, c in p._t.items():
        if any(f == family for f, _, _ in decode(k)):
            continue
        t[k] = t.get(k, 0) + c
    return MPoly._raw(t)


def permute_x(p: MPoly, perm: Mapping[int, int]) -> MPoly:
    """Rename x_i -> x_{perm[i]} (indices missing from perm are fixed)."""
    t: dict[int, int] = {}
    for k, c in p._t.items():
        newk = 0
        for f, i, e in decode(k):
            if f == "x":
                i = perm.get(i, i)
            newk += _var_key(f, i, e)
        t[newk] = t.get(newk, 0) + c
    return MPoly._raw({k: c for k, c in t.items() if c})


def split_x(p: MPoly, d: int) -> dict[tuple[int, ...], MPoly]:
    """Group p by its exponent vector in x_1..x_d.

    Returns {alpha: coefficient polynomial free of x}. Raises if p involves
    x_i with i > d.
    """
    slots = [_slot("x", i) for i in range(1, d + 1)]
    shifts = [_BITS * s for s in slots]
    xmask = 0
    for sh in shifts:
        xmask |= _MASK << sh
    groups: dict[tuple[int, ...], dict[int, int]] = {}
    for k, c in p._t.items():
        alpha = tuple((k >> sh) & _MASK for sh in shifts)
        rest = k & ~xmask
        groups.setdefault(alpha, {})[rest] = c
    out = {a: MPoly._raw(t) for a, t in groups.items()}
    for poly in out.values():
        if "x" in poly.families():
            raise DomainError(f"polynomial involves x_i with i > {d}")
    return out


def join_x(groups: Mapping[tuple[int, ...], MPoly]) -> MPoly:
    """Inverse of split_x."""
    t: dict[int, int] = {}
    for alpha, coeff in groups.items():
        xk = sum(_var_key("x", i + 1, e) for i, e in enumerate(alpha) if e)
        for k, c in coeff._t.items():
            t[k + xk] = t.get(k + xk, 0) + c
    return MPoly._raw({k: c for k, c in t.items() if c})


def x_order_key(alpha: Sequence[int]) -> tuple:
    """Sort key for the oracle order: total degree, then lex with x_1 > x_2 > ..."""
    return (sum(alpha), tuple(alpha))


def x_degree_leading_term(p: MPoly, d: int | None = None) -> tuple[tuple[int, ...], MPoly]:
    if not p:
        raise DomainError("leading term of the zero polynomial")
    if d is None:
        d = max((i for f, i in p.variables() if f == "x"), default=0)
    groups = split_x(p, d)
    alpha = max(groups, key=x_order_key)
    return alpha, groups[alpha]
