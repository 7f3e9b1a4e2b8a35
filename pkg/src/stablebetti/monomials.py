"""Exponent-vector monomials over a fixed ring K[x1, ..., xn].

A monomial is a plain tuple of n non-negative integer exponents. Variables
are 1-based and ordered x1 > x2 > ... > xn, so within a fixed degree the
builtin tuple order coincides with the lexicographic order on monomials:
``sorted(monos, reverse=True)`` is lex-descending. Cross-degree comparison
is deliberately undefined; use :func:`lex_compare`, which rejects it.
"""

from __future__ import annotations

import math
import re
from typing import Iterator

from .errors import (
    BadDegree,
    BadRange,
    DegreeMismatch,
    InvalidMove,
    MonomialSyntaxError,
)

Monomial = tuple[int, ...]

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    """The monomial x_i in n variables (i is 1-based)."""
    if not 1 <= i <= n:
        raise BadRange(f"variable index {i} outside 1..{n}")
    return tuple(1 if t == i - 1 else 0 for t in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple[int, ...]:
    """1-based indices of the variables dividing u."""
    return tuple(i + 1 for i, e in enumerate(u) if e)


def max_index(u: Monomial) -> int:
    """Largest index of a variable dividing u; 0 for the unit monomial."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i + 1
    return 0


def multiply(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def mul_var(u: Monomial, i: int, power: int = 1) -> Monomial:
    """u * x_i**power."""
    if not 1 <= i <= len(u):
        raise BadRange(f"variable index {i} outside 1..{len(u)}")
    return u[: i - 1] + (u[i - 1] + power,) + u[i:]


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v, strict=True))


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Three-way lex comparison within one degree: +1, 0, or -1.

    Raises DegreeMismatch for monomials of different degrees; the order is
    only used degree by degree and silent cross-degree comparison would
    hide bugs.
    """
    if len(u) != len(v):
        raise DegreeMismatch("monomials live in different rings")
    if degree(u) != degree(v):
        raise DegreeMismatch(f"cannot lex-compare degrees {degree(u)} and {degree(v)}")
    if u > v:
        return 1
    if u < v:
        return -1
    return 0


def borel_move(u: Monomial, i: int, j: int) -> Monomial:
    """The exchange u -> x_j * u / x_i with j < i and x_i dividing u."""
    n = len(u)
    if not (1 <= j < i <= n):
        raise InvalidMove(f"need 1 <= j < i <= {n}, got j={j}, i={i}")
    if u[i - 1] == 0:
        raise InvalidMove(f"x{i} does not divide {format_monomial(u)}")
    w = list(u)
    w[i - 1] -= 1
    w[j - 1] += 1
    return tuple(w)


def borel_moves(u: Monomial) -> list[Monomial]:
    """All single exchanges of u, in no particular outer order."""
    out = []
    for i in range(2, len(u) + 1):
        if u[i - 1]:
            for j in range(1, i):
                out.append(borel_move(u, i, j))
    return out


def count_degree(n: int, d: int) -> int:
    return math.comb(n + d - 1, d)


def iter_degree(n: int, d: int) -> Iterator[Monomial]:
    """All degree-d monomials in n variables, lex-descending."""
    if n < 1:
        raise BadRange(f"need n >= 1, got {n}")
    if d < 0:
        raise BadDegree(f"need d >= 0, got {d}")
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in iter_degree(n - 1, d - e):
            yield (e,) + rest


def enumerate_degree(n: int, d: int) -> list[Monomial]:
    return list(iter_degree(n, d))


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x<I>`` / ``x<I>^<E>`` factors joined by ``*``; unit is ``1``.

    Whitespace is ignored. Parsing is strict: I must lie in 1..n and E >= 1.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise MonomialSyntaxError("empty monomial text")
    if compact == "1":
        return unit(n)
    exps = [0] * n
    for factor in compact.split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise MonomialSyntaxError(f"bad factor {factor!r} in {text!r}")
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= idx <= n:
            raise MonomialSyntaxError(f"variable x{idx} outside x1..x{n}")
        if exp < 1:
            raise MonomialSyntaxError(f"exponent must be >= 1 in {factor!r}")
        exps[idx - 1] += exp
    return tuple(exps)


def format_monomial(u: Monomial) -> str:
    """Canonical text: ascending variable index, ^ omitted for exponent 1."""
    parts = []
    for i, e in enumerate(u, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
        elif e < 0:
            raise BadRange(f"negative exponent at x{i}")
    return "*".join(parts) if parts else "1"
