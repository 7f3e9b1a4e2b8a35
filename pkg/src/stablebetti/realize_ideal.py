"""Decide and construct single ideals with prescribed corners.

A corner spec asks for a strongly stable ideal whose extremal Betti
entries sit exactly at given (homological position, degree) pairs with
given values. Positions are screened first (validate_positions), then
each requested value is measured against the count of admissible peak
generators in its degree: the full peak stratum, minus the lex shadow
cast by the previous corner's block. Two readings of that subtraction
are supported. "strict-paper" subtracts the shadow of the whole previous
window, giving a box of value vectors checkable up front; "coupled"
subtracts only the shadow of the block actually chosen, which depends on
the earlier values and accepts more. A strict-feasible vector is always
coupled-feasible.

Constructors verify their own output (strong stability, exact corner
sequence, generators confined to the corner degrees) before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import Corner, corner_sequence, ek_betti
from .errors import (
    InfeasibleSpec,
    SpecError,
    UncoveredByCharacterization,
    VerificationFailed,
)
from .ideals import MonomialIdeal
from .monomials import (
    Monomial,
    degree,
    format_monomial,
    lex_compare,
    mul_var,
    unit,
    variable,
)
from .segments import LexSegment, lex_shadow, set_difference, stratum

MODE_STRICT = "strict-paper"
MODE_COUPLED = "coupled"
MODES = (MODE_STRICT, MODE_COUPLED)


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise SpecError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass(frozen=True)
class CornerSpec:
    """Requested corner positions (k_i, l_i) and values a_i.

    Positions run in the order corners appear in a table scan: k strictly
    decreasing, degrees strictly increasing, first degree at least 2.
    Malformed data raises SpecError; whether well-formed positions are
    realizable is a separate question (validate_positions, check_values).
    """

    n: int
    corners: tuple[Corner, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise SpecError(f"need n >= 2, got n={self.n}")
        r = len(self.corners)
        if r < 1:
            raise SpecError("need at least one corner")
        if len(self.values) != r:
            raise SpecError(
                f"{r} corners but {len(self.values)} values"
            )
        ks = [c.k for c in self.corners]
        ls = [c.ell for c in self.corners]
        if any(k < 1 for k in ks) or ks[0] > self.n - 1:
            raise SpecError(
                f"homological positions must lie in 1..{self.n - 1}, got {ks}"
            )
        if any(ks[i] <= ks[i + 1] for i in range(r - 1)):
            raise SpecError(f"homological positions must strictly decrease: {ks}")
        if ls[0] < 2:
            raise SpecError(f"the first corner degree must be >= 2, got {ls[0]}")
        if any(ls[i] >= ls[i + 1] for i in range(r - 1)):
            raise SpecError(f"corner degrees must strictly increase: {ls}")
        if any(a < 1 for a in self.values):
            raise SpecError(f"corner values must be positive, got {self.values}")

    @property
    def r(self) -> int:
        return len(self.corners)

    def sub_spec(self, rows, values=None) -> "CornerSpec":
        """The spec restricted to a subsequence of corner rows (0-based)."""
        rows = tuple(rows)
        if values is None:
            values = tuple(self.values[i] for i in rows)
        return CornerSpec(
            self.n, tuple(self.corners[i] for i in rows), tuple(values)
        )

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "corners": [
                {"k": c.k, "l": c.ell, "a": a}
                for c, a in zip(self.corners, self.values)
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "CornerSpec":
        if not isinstance(obj, dict) or "n" not in obj or "corners" not in obj:
            raise SpecError('spec document needs keys "n" and "corners"')
        try:
            corners = tuple(Corner(int(e["k"]), int(e["l"])) for e in obj["corners"])
            values = tuple(int(e["a"]) for e in obj["corners"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed corner entry: {exc}") from exc
        return cls(int(obj["n"]), corners, values)

    @classmethod
    def from_json(cls, text: str) -> "CornerSpec":
        import json

        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"spec is not valid JSON: {exc}") from exc
        return cls.from_obj(obj)


ADMISSIBLE = "admissible"
REJECTED = "rejected"
UNCOVERED = "uncovered"


@dataclass(frozen=True)
class PositionVerdict:
    status: str
    reason: str | None = None

    @property
    def admissible(self) -> bool:
        return self.status == ADMISSIBLE

    def to_obj(self) -> dict:
        return {"status": self.status, "reason": self.reason}


def validate_positions(spec: CornerSpec) -> PositionVerdict:
    """Screen corner positions; rejection is a verdict, not an error.

    With first degree >= 3 every well-formed position sequence passes.
    With first degree 2 a final homological position of 1 falls outside
    the decided cases (UNCOVERED), r can reach at most n-2, and hitting
    that maximum forces the first position to be n-1.
    """
    first = spec.corners[0]
    lastk = spec.corners[-1].k
    if first.ell >= 3:
        return PositionVerdict(ADMISSIBLE)
    if lastk == 1:
        return PositionVerdict(
            UNCOVERED,
            "first corner degree 2 with final homological position 1 is "
            "outside the decided cases",
        )
    if spec.r == spec.n - 2 and first.k != spec.n - 1:
        return PositionVerdict(
            REJECTED,
            f"with first corner degree 2 and {spec.r} corners on {spec.n} "
            f"variables the first homological position must be {spec.n - 1}, "
            f"got {first.k}",
        )
    return PositionVerdict(ADMISSIBLE)


def _require_admissible(spec: CornerSpec) -> None:
    verdict = validate_positions(spec)
    if verdict.status == UNCOVERED:
        raise UncoveredByCharacterization(verdict.reason)
    if verdict.status == REJECTED:
        raise InfeasibleSpec(verdict.reason)


def _tail_index(spec: CornerSpec) -> int:
    """Largest i (1-based) with l_i <= r - i; 0 when there is none.

    Degrees grow and r - i shrinks, so the property holds on a prefix.
    """
    r = spec.r
    t = 0
    for i in range(1, r + 1):
        if spec.corners[i - 1].ell <= r - i:
            t = i
    return t


def _corner_bottom(spec: CornerSpec, i: int, t: int) -> Monomial:
    """Least admissible peak generator for corner i (0-based index)."""
    n = spec.n
    r = spec.r
    ks = [c.k for c in spec.corners]
    ls = [c.ell for c in spec.corners]
    i1 = i + 1
    exps = [0] * n
    if i1 == r:
        exps[ks[r - 1]] = ls[r - 1]  # x_{k_r + 1} ^ l_r
        return tuple(exps)
    if i1 <= t:
        # product over corners r down to r - l_i + 3, then the bridge
        # variable one below x_{k_{r-l_i+2}}, then the peak variable
        for j1 in range(r, r - ls[i] + 2, -1):
            exps[ks[j1 - 1] - 1] += 1
        exps[ks[r - ls[i] + 2 - 1] - 2] += 1
        exps[ks[i]] += 1
        return tuple(exps)
    # i1 in t+1 .. r-1
    for j1 in range(r, i1, -1):
        exps[ks[j1 - 1] - 1] += 1
    exps[ks[i]] += ls[i] - (r - i1)
    return tuple(exps)


@dataclass(frozen=True)
class CornerWindow:
    """One corner's admissible peak-generator window and its cap."""

    corner: Corner
    bottom: Monomial
    size: int  # |A_i|, before the shadow subtraction
    shadow_floor: Monomial | None  # bottom of the subtracted lex segment
    bound: int  # b_i = |A_i \ LexShad(previous window)|

    def to_obj(self) -> dict:
        return {
            "k": self.corner.k,
            "l": self.corner.ell,
            "bottom": format_monomial(self.bottom),
            "window_size": self.size,
            "shadow_floor": (
                None
                if self.shadow_floor is None
                else format_monomial(self.shadow_floor)
            ),
            "bound": self.bound,
        }


@dataclass(frozen=True)
class BoundReport:
    spec: CornerSpec
    t: int
    windows: tuple[CornerWindow, ...]

    @property
    def bounds(self) -> tuple[int, ...]:
        return tuple(w.bound for w in self.windows)

    def to_obj(self) -> dict:
        return {"t": self.t, "windows": [w.to_obj() for w in self.windows]}


def _window_members(spec: CornerSpec) -> list[list[Monomial]]:
    """Per corner, the window A_i: peak-stratum elements down to its bottom."""
    t = _tail_index(spec)
    out = []
    for i, c in enumerate(spec.corners):
        bottom = _corner_bottom(spec, i, t)
        members = []
        for u in stratum(spec.n, c.k, c.ell):
            if lex_compare(u, bottom) < 0:
                break
            members.append(u)
        if not members:
            raise AssertionError("corner window came out empty")
        out.append(members)
    return out


def compute_bounds(spec: CornerSpec) -> BoundReport:
    """Strict value caps b_i for an admissible spec.

    b_1 counts the first window whole; later windows lose the iterated
    shadow of the entire previous window before counting.
    """
    _require_admissible(spec)
    t = _tail_index(spec)
    members = _window_members(spec)
    windows = []
    for i, c in enumerate(spec.corners):
        seg = lex_shadow(spec.n, members[i - 1] if i else [], c.ell)
        avail = set_difference(members[i], seg)
        windows.append(
            CornerWindow(
                corner=c,
                bottom=members[i][-1],
                size=len(members[i]),
                shadow_floor=None if seg.is_empty else seg.bottom,
                bound=len(avail),
            )
        )
    return BoundReport(spec, t, windows)


def coupled_chain(
    spec: CornerSpec, values
) -> tuple[list[int], list[Monomial], int | None]:
    """Sequential admissible counts when each shadow starts at the pick.

    Walks the corners with the given values (a full vector or a prefix):
    at each step the admissible count is the window minus the lex shadow
    of the previously picked least generator, and the pick is the
    values[i]-th admissible element. Returns (bounds, picks, violation);
    violation is the 0-based index of the first value over its bound, or
    None. When values is a proper prefix, bounds carries one extra entry:
    the cap for the next position.
    """
    _require_admissible(spec)
    members = _window_members(spec)
    bounds: list[int] = []
    picks: list[Monomial] = []
    for i in range(spec.r):
        seg = lex_shadow(spec.n, [picks[i - 1]] if i else [], spec.corners[i].ell)
        avail = set_difference(members[i], seg)
        bounds.append(len(avail))
        if i >= len(values):
            break
        if values[i] > len(avail):
            return bounds, picks, i
        picks.append(avail[values[i] - 1])
    return bounds, picks, None


@dataclass(frozen=True)
class ValueVerdict:
    mode: str
    feasible: bool
    requested: tuple[int, ...]
    bounds: tuple[int | None, ...]  # None past a coupled violation
    first_violation: int | None  # 1-based corner index

    def to_obj(self) -> dict:
        return {
            "mode": self.mode,
            "feasible": self.feasible,
            "requested": list(self.requested),
            "bounds": list(self.bounds),
            "first_violation": self.first_violation,
        }


def check_values(spec: CornerSpec, mode: str = MODE_COUPLED) -> ValueVerdict:
    """Judge the requested values against the chosen mode's caps."""
    _check_mode(mode)
    if mode == MODE_STRICT:
        bounds = compute_bounds(spec).bounds
        violation = next(
            (i for i, (a, b) in enumerate(zip(spec.values, bounds)) if a > b),
            None,
        )
        return ValueVerdict(
            mode,
            violation is None,
            spec.values,
            bounds,
            None if violation is None else violation + 1,
        )
    bounds, _picks, violation = coupled_chain(spec, spec.values)
    padded = tuple(bounds) + (None,) * (spec.r - len(bounds))
    return ValueVerdict(
        mode,
        violation is None,
        spec.values,
        padded,
        None if violation is None else violation + 1,
    )


@dataclass(frozen=True)
class IdealRealization:
    spec: CornerSpec
    mode: str
    ideal: MonomialIdeal
    picks: tuple[Monomial, ...]  # least generator chosen per corner degree
    blocks: tuple[tuple[Monomial, ...], ...]  # generators per corner degree
    bound_report: BoundReport
    strict_verdict: ValueVerdict
    coupled_verdict: ValueVerdict

    def to_obj(self) -> dict:
        return {
            "spec": self.spec.to_obj(),
            "mode": self.mode,
            "witness": self.ideal.to_obj(),
            "picks": [format_monomial(u) for u in self.picks],
            "blocks": [
                [format_monomial(u) for u in block] for block in self.blocks
            ],
            "bounds": self.bound_report.to_obj(),
            "verdicts": {
                MODE_STRICT: self.strict_verdict.to_obj(),
                MODE_COUPLED: self.coupled_verdict.to_obj(),
            },
        }


def _verify_realization(
    ideal: MonomialIdeal, spec: CornerSpec, planned: list[Monomial]
) -> None:
    if set(ideal.gens) != set(planned):
        raise VerificationFailed(
            "constructed generators are not minimal as planned"
        )
    if not ideal.is_strongly_stable():
        raise VerificationFailed("constructed ideal is not strongly stable")
    allowed = {c.ell for c in spec.corners}
    if any(degree(g) not in allowed for g in ideal.gens):
        raise VerificationFailed(
            "constructed ideal has generators outside the corner degrees"
        )
    got = corner_sequence(ek_betti(ideal))
    want = list(zip(spec.corners, spec.values))
    if got != want:
        raise VerificationFailed(
            "constructed ideal has corner sequence "
            + str([((c.k, c.ell), v) for c, v in got])
            + ", wanted "
            + str([((c.k, c.ell), v) for c, v in want])
        )


def construct_ideal(spec: CornerSpec, mode: str = MODE_COUPLED) -> IdealRealization:
    """Build and verify a witness ideal for a feasible spec.

    The generators in the first corner degree run from x1^l1 down to the
    picked least peak generator, within max variable index k_1 + 1; each
    later degree runs from just below the previous pick's shadow down to
    its own pick, within max index k_i + 1. Output is checked for strong
    stability, exact corner sequence, and generation confined to the
    corner degrees; a mismatch raises VerificationFailed.
    """
    _check_mode(mode)
    strict_verdict = check_values(spec, MODE_STRICT)
    coupled_verdict = check_values(spec, MODE_COUPLED)
    verdict = strict_verdict if mode == MODE_STRICT else coupled_verdict
    if not verdict.feasible:
        i = verdict.first_violation
        raise InfeasibleSpec(
            f"corner {i} requests {spec.values[i - 1]} but the {mode} cap "
            f"is {verdict.bounds[i - 1]}"
        )
    report = compute_bounds(spec)
    _bounds, picks, violation = coupled_chain(spec, spec.values)
    if violation is not None:
        # strict acceptance always implies coupled acceptance
        raise InfeasibleSpec(
            f"corner {violation + 1} has no admissible pick in coupled mode"
        )
    blocks: list[tuple[Monomial, ...]] = []
    for i, c in enumerate(spec.corners):
        bounded = stratum(spec.n, c.k, c.ell, bounded=True)
        if i == 0:
            block = [v for v in bounded if lex_compare(v, picks[0]) >= 0]
        else:
            delta = c.ell - spec.corners[i - 1].ell
            floor = mul_var(picks[i - 1], spec.n, delta)
            block = [
                v
                for v in bounded
                if lex_compare(v, floor) < 0 and lex_compare(v, picks[i]) >= 0
            ]
        blocks.append(tuple(block))
    planned = [g for block in blocks for g in block]
    ideal = MonomialIdeal.from_generators(spec.n, planned)
    _verify_realization(ideal, spec, planned)
    return IdealRealization(
        spec,
        mode,
        ideal,
        tuple(picks),
        tuple(blocks),
        report,
        strict_verdict,
        coupled_verdict,
    )


def construct_degree2_chain(spec: CornerSpec) -> MonomialIdeal:
    """Closed-form witness for first degree 2 and every value equal to 1.

    The generators come in one lex segment per corner degree: an initial
    segment from x1^2, then for each corner up to the crossover index s =
    max{i : i <= k_i + 1} a two-ended segment whose prefix accumulates
    the degree jumps on successive variables, and past the crossover a
    single generator per corner. Output is verified like construct_ideal.
    """
    if spec.corners[0].ell != 2:
        raise SpecError("the chain constructor needs first corner degree 2")
    if any(a != 1 for a in spec.values):
        raise SpecError("the chain constructor needs every corner value 1")
    _require_admissible(spec)
    n = spec.n
    r = spec.r
    ks = [c.k for c in spec.corners]
    ls = [c.ell for c in spec.corners]
    s = max(i for i in range(1, r + 1) if i <= ks[i - 1] + 1)
    blocks: list[list[Monomial]] = []
    top = mul_var(unit(n), 1, 2)
    blocks.append(
        LexSegment(n, top, mul_var(variable(n, 1), ks[0] + 1)).materialize()
    )
    for i1 in range(2, s + 1):
        prefix = [0] * n
        for j1 in range(2, i1):
            prefix[j1 - 1] = ls[j1 - 1] - ls[j1 - 2]
        jump = ls[i1 - 1] - ls[i1 - 2]
        top = list(prefix)
        top[i1 - 1] += jump + 2
        bottom = list(prefix)
        bottom[i1 - 1] += jump + 1
        bottom[ks[i1 - 1]] += 1
        blocks.append(
            LexSegment(n, tuple(top), tuple(bottom)).materialize()
        )
    for i1 in range(s + 1, r + 1):
        k = ks[i1 - 1]
        exps = [0] * n
        for j1 in range(2, k):
            exps[j1 - 1] = ls[j1 - 1] - ls[j1 - 2]
        exps[k - 1] += ls[k - 1] - ls[k - 2] - 1
        exps[k] += 3 + ls[i1 - 1] - ls[k - 1]
        blocks.append([tuple(exps)])
    planned = [g for block in blocks for g in block]
    ideal = MonomialIdeal.from_generators(n, planned)
    _verify_realization(ideal, spec, planned)
    return ideal
