"""Monomial ideals and finite direct sums of them (monomial submodules).

Generators are stored canonically (grouped by ascending degree, lex
descending inside a degree), so structural equality of the dataclasses is
ideal equality. The zero ideal is representable with an empty generator
tuple for plumbing, but the stability predicates reject it and the unit
ideal: neither is a meaningful (strongly) stable ideal here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BadDegree, BadRange, EmptyIdeal, MonomialSyntaxError
from .monomials import (
    Monomial,
    borel_moves,
    degree,
    divides,
    format_monomial,
    iter_degree,
    max_index,
    parse_monomial,
    unit,
)


def canonical_key(u: Monomial) -> tuple:
    """Sort key giving degree-ascending, lex-descending generator order."""
    return (degree(u), tuple(-e for e in u))


def minimalize(n: int, monos) -> tuple[Monomial, ...]:
    """Drop every monomial that is a multiple of another one."""
    items = sorted(set(monos), key=canonical_key)
    kept: list[Monomial] = []
    for u in items:
        if not any(divides(g, u) for g in kept):
            kept.append(u)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, canonically ordered."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise BadRange(f"need n >= 1, got {self.n}")
        for g in self.gens:
            if len(g) != self.n:
                raise BadRange(f"generator {g} has {len(g)} exponents, expected {self.n}")
            if any(e < 0 for e in g):
                raise BadRange(f"negative exponent in {g}")

    @classmethod
    def from_generators(cls, n: int, monos) -> "MonomialIdeal":
        return cls(n, minimalize(n, monos))

    @classmethod
    def from_strings(cls, n: int, texts) -> "MonomialIdeal":
        return cls.from_generators(n, (parse_monomial(t, n) for t in texts))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, u: Monomial) -> bool:
        if len(u) != self.n:
            raise BadRange("monomial lives in a different ring")
        return any(divides(g, u) for g in self.gens)

    def initial_degree(self) -> int:
        if self.is_zero:
            raise EmptyIdeal("the zero ideal has no initial degree")
        return degree(self.gens[0])

    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise EmptyIdeal("the zero ideal has no generators")
        return degree(self.gens[-1])

    def gens_of_degree(self, d: int) -> tuple[Monomial, ...]:
        return tuple(g for g in self.gens if degree(g) == d)

    def graded_slice(self, d: int) -> list[Monomial]:
        """All degree-d monomials of the ideal, lex-descending."""
        if d < 0:
            raise BadDegree(f"need d >= 0, got {d}")
        return [u for u in iter_degree(self.n, d) if self.contains(u)]

    def _stability_violation(self, strong: bool):
        """First failing exchange, or None. Unit/zero ideals always fail."""
        if self.is_zero:
            return (None, 0, 0, None)
        for g in self.gens:
            if g == unit(self.n):
                return (g, 0, 0, None)
            i_range = [max_index(g)] if not strong else [
                i for i in range(2, self.n + 1) if g[i - 1]
            ]
            for i in i_range:
                if i == 0 or g[i - 1] == 0:
                    continue
                for j in range(1, i):
                    moved = list(g)
                    moved[i - 1] -= 1
                    moved[j - 1] += 1
                    if not self.contains(tuple(moved)):
                        return (g, i, j, tuple(moved))
        return None

    def is_stable(self) -> bool:
        """Every generator's exchange at its largest variable stays inside."""
        return self._stability_violation(strong=False) is None

    def is_strongly_stable(self) -> bool:
        """Every generator's exchange at every variable stays inside."""
        return self._stability_violation(strong=True) is None

    def stability_violation(self, strong: bool):
        """(generator, i, j, moved) for the first failing exchange, else None."""
        return self._stability_violation(strong)

    def to_obj(self) -> dict:
        return {"n": self.n, "generators": [format_monomial(g) for g in self.gens]}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(", ", ": "))

    @classmethod
    def from_obj(cls, obj: dict) -> "MonomialIdeal":
        if not isinstance(obj, dict) or "n" not in obj or "generators" not in obj:
            raise MonomialSyntaxError('ideal document needs keys "n" and "generators"')
        n = obj["n"]
        if not isinstance(n, int) or n < 1:
            raise MonomialSyntaxError(f'"n" must be a positive integer, got {n!r}')
        gens = obj["generators"]
        if not isinstance(gens, list) or not all(isinstance(t, str) for t in gens):
            raise MonomialSyntaxError('"generators" must be a list of strings')
        return cls.from_generators(n, (parse_monomial(t, n) for t in gens))

    @classmethod
    def from_json(cls, text: str) -> "MonomialIdeal":
        return cls.from_obj(json.loads(text))


def borel_closure(n: int, monos) -> MonomialIdeal:
    """Smallest strongly stable ideal whose generators contain the input set."""
    seeds = {tuple(u) for u in monos}
    if not seeds:
        raise EmptyIdeal("closure of the empty set is the zero ideal")
    closed: set[Monomial] = set()
    stack = list(seeds)
    while stack:
        u = stack.pop()
        if u in closed:
            continue
        closed.add(u)
        for v in borel_moves(u):
            if v not in closed:
                stack.append(v)
    return MonomialIdeal.from_generators(n, closed)


@dataclass(frozen=True)
class MonomialSubmodule:
    """Direct sum I_1 e_1 + ... + I_m e_m with degree shifts deg(e_h) = f_h.

    Shifts must be non-decreasing. A single ideal is the m = 1 case.
    """

    n: int
    components: tuple[MonomialIdeal, ...]
    shifts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.components:
            raise BadRange("a submodule needs at least one component")
        if not self.shifts:
            object.__setattr__(self, "shifts", (0,) * len(self.components))
        if len(self.shifts) != len(self.components):
            raise BadRange("one shift per component required")
        if any(f < 0 for f in self.shifts):
            raise BadRange("shifts must be non-negative")
        if list(self.shifts) != sorted(self.shifts):
            raise BadRange("shifts must be non-decreasing")
        for c in self.components:
            if c.n != self.n:
                raise BadRange("all components must share the ambient ring")

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> "MonomialSubmodule":
        return cls(ideal.n, (ideal,), (0,))

    @property
    def m(self) -> int:
        return len(self.components)

    def module_generators(self):
        """Triples (component index h, generator u, module degree deg u + f_h)."""
        for h, (ideal, f) in enumerate(zip(self.components, self.shifts)):
            for g in ideal.gens:
                yield h, g, degree(g) + f

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "shifts": list(self.shifts),
            "components": [c.to_obj() for c in self.components],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(", ", ": "))

    @classmethod
    def from_obj(cls, obj: dict) -> "MonomialSubmodule":
        if not isinstance(obj, dict) or "components" not in obj:
            raise MonomialSyntaxError('module document needs a "components" key')
        n = obj.get("n")
        if not isinstance(n, int) or n < 1:
            raise MonomialSyntaxError(f'"n" must be a positive integer, got {n!r}')
        comps = tuple(MonomialIdeal.from_obj(c) for c in obj["components"])
        shifts = tuple(obj.get("shifts") or (0,) * len(comps))
        if "m" in obj and obj["m"] != len(comps):
            raise MonomialSyntaxError('"m" disagrees with the number of components')
        return cls(n, comps, shifts)

    @classmethod
    def from_json(cls, text: str) -> "MonomialSubmodule":
        return cls.from_obj(json.loads(text))


def parse_module_or_ideal(text: str) -> MonomialSubmodule:
    """Accept either an ideal document or a module document."""
    obj = json.loads(text)
    if isinstance(obj, dict) and "components" in obj:
        return MonomialSubmodule.from_obj(obj)
    return MonomialSubmodule.of_ideal(MonomialIdeal.from_obj(obj))
