import json
import random

import pytest

from stablebetti import (
    Corner,
    CornerSpec,
    InfeasibleSpec,
    MODE_COUPLED,
    MODE_STRICT,
    MonomialIdeal,
    SpecError,
    UncoveredByCharacterization,
    check_values,
    compute_bounds,
    construct_degree2_chain,
    construct_ideal,
    corner_sequence,
    coupled_chain,
    ek_betti,
    format_monomial,
    validate_positions,
)


def spec(n, pairs, values):
    return CornerSpec(n, tuple(Corner(k, l) for k, l in pairs), tuple(values))


def test_spec_validation():
    good = spec(6, [(5, 2), (3, 3)], [1, 2])
    assert good.r == 2
    for bad in [
        lambda: spec(1, [(1, 2)], [1]),
        lambda: spec(4, [], []),
        lambda: spec(4, [(4, 2)], [1]),  # k must stay below n
        lambda: spec(4, [(0, 2)], [1]),
        lambda: spec(4, [(2, 1)], [1]),  # first degree at least 2
        lambda: spec(4, [(3, 2), (3, 3)], [1, 1]),  # k strictly decreasing
        lambda: spec(4, [(3, 3), (2, 3)], [1, 1]),  # l strictly increasing
        lambda: spec(4, [(3, 3), (2, 2)], [1, 1]),
        lambda: spec(4, [(3, 2)], [0]),
        lambda: spec(4, [(3, 2)], [1, 1]),
    ]:
        with pytest.raises(SpecError):
            bad()


def test_spec_json_round_trip():
    s = spec(6, [(5, 2), (3, 3)], [1, 2])
    assert CornerSpec.from_obj(s.to_obj()) == s
    assert CornerSpec.from_json(json.dumps(s.to_obj())) == s
    with pytest.raises(SpecError):
        CornerSpec.from_json("not json")
    with pytest.raises(SpecError):
        CornerSpec.from_obj({"n": 4})


def test_sub_spec():
    s = spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1])
    sub = s.sub_spec((0, 2))
    assert sub.corners == (Corner(5, 2), Corner(2, 5))
    assert sub.values == (1, 1)
    override = s.sub_spec((1,), values=(7,))
    assert override.values == (7,)


def test_validate_positions_branches():
    assert validate_positions(spec(6, [(5, 3)], [1])).admissible
    assert validate_positions(spec(6, [(5, 2), (3, 3)], [1, 1])).admissible
    uncovered = validate_positions(spec(3, [(1, 2)], [1]))
    assert uncovered.status == "uncovered"
    assert validate_positions(spec(4, [(2, 2), (1, 3)], [1, 1])).status == "uncovered"
    assert validate_positions(spec(5, [(3, 2), (2, 3), (1, 4)], [1, 1, 1])).status == "uncovered"
    # r = n - 2 with final position >= 2 forces the first position to be
    # n - 1 arithmetically, so the longest first-degree-2 chains pass
    maxed = validate_positions(spec(5, [(4, 2), (3, 3), (2, 4)], [1, 1, 1]))
    assert maxed.admissible
    assert validate_positions(spec(5, [(3, 2), (2, 3)], [1, 1])).admissible


def test_bounds_three_corner_fixture():
    report = compute_bounds(spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1]))
    assert report.bounds == (1, 3, 1)
    assert report.t == 1
    bottoms = [format_monomial(w.bottom) for w in report.windows]
    assert bottoms == ["x1*x6", "x2*x4^2", "x3^5"]


def test_bounds_two_corner_fixture():
    report = compute_bounds(spec(6, [(5, 2), (2, 5)], [2, 1]))
    assert report.bounds == (2, 1)
    bottoms = [format_monomial(w.bottom) for w in report.windows]
    assert bottoms == ["x2*x6", "x3^5"]


def test_coupled_chain_prefix_and_violation():
    s = spec(6, [(3, 3), (2, 5)], [4, 2])
    bounds, picks, violation = coupled_chain(s, s.values)
    assert violation is None
    assert bounds == [7, 5]
    assert [format_monomial(u) for u in picks] == ["x1*x4^2", "x2^3*x3^2"]
    # a prefix yields the cap for the next corner
    bounds, picks, violation = coupled_chain(s, (4,))
    assert bounds == [7, 5] and len(picks) == 1
    # an oversized request reports the 0-based violating index
    bounds, picks, violation = coupled_chain(s, (8, 1))
    assert violation == 0


def test_check_values_modes_disagree_on_fixture():
    s = spec(6, [(3, 3), (2, 5)], [4, 2])
    strict = check_values(s, MODE_STRICT)
    coupled = check_values(s, MODE_COUPLED)
    assert not strict.feasible
    assert strict.bounds == (7, 1)
    assert strict.first_violation == 2
    assert coupled.feasible
    assert coupled.bounds == (7, 5)
    assert coupled.first_violation is None


def test_strict_acceptance_implies_coupled_acceptance():
    rng = random.Random(23)
    tried = 0
    while tried < 80:
        n = rng.randint(3, 6)
        r = rng.randint(1, min(3, n - 1))
        ls, ks = set(), set()
        while len(ls) < r:
            ls.add(rng.randint(2, 6))
        while len(ks) < r:
            ks.add(rng.randint(1, n - 1))
        pairs = list(zip(sorted(ks, reverse=True), sorted(ls)))
        probe = spec(n, pairs, [1] * r)
        if not validate_positions(probe).admissible:
            continue
        bounds = compute_bounds(probe).bounds
        if any(b < 1 for b in bounds):
            continue
        values = tuple(rng.randint(1, b) for b in bounds)
        s = spec(n, pairs, values)
        assert check_values(s, MODE_STRICT).feasible
        assert check_values(s, MODE_COUPLED).feasible
        tried += 1


def test_construct_ideal_three_corner_fixture():
    s = spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1])
    out = construct_ideal(s)
    assert out.ideal == MonomialIdeal.from_strings(6, [
        "x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6",
        "x2^3", "x2^2*x3", "x2^2*x4", "x2*x3^2", "x2*x3*x4", "x2*x4^2",
        "x3^5",
    ])
    assert [format_monomial(u) for u in out.picks] == [
        "x1*x6", "x2*x4^2", "x3^5",
    ]
    assert [len(b) for b in out.blocks] == [6, 6, 1]
    assert out.strict_verdict.feasible and out.coupled_verdict.feasible


def test_construct_ideal_same_witness_in_both_modes():
    s = spec(6, [(5, 2), (2, 5)], [2, 1])
    assert construct_ideal(s, MODE_STRICT).ideal == construct_ideal(s, MODE_COUPLED).ideal


def test_construct_ideal_infeasible_value():
    s = spec(6, [(5, 2)], [7])  # the whole peak stratum only has 6 monomials
    with pytest.raises(InfeasibleSpec):
        construct_ideal(s)


def test_construct_ideal_uncovered_positions():
    s = spec(3, [(1, 2)], [1])
    with pytest.raises(UncoveredByCharacterization):
        construct_ideal(s)


def test_construct_ideal_strict_mode_rejects_coupled_only_values():
    s = spec(6, [(3, 3), (2, 5)], [4, 2])
    with pytest.raises(InfeasibleSpec):
        construct_ideal(s, MODE_STRICT)
    assert construct_ideal(s, MODE_COUPLED).ideal.is_strongly_stable()


def test_chain_constructor_simple_segment():
    out = construct_degree2_chain(spec(4, [(2, 2)], [1]))
    assert out == MonomialIdeal.from_strings(4, ["x1^2", "x1*x2", "x1*x3"])


def test_chain_constructor_validation():
    with pytest.raises(SpecError):
        construct_degree2_chain(spec(4, [(2, 3)], [1]))
    with pytest.raises(SpecError):
        construct_degree2_chain(spec(4, [(2, 2), (1, 3)], [2, 1]))
    with pytest.raises(UncoveredByCharacterization):
        construct_degree2_chain(spec(4, [(1, 2)], [1]))


def test_chain_constructor_two_corners():
    out = construct_degree2_chain(spec(4, [(3, 2), (2, 4)], [1, 1]))
    seq = corner_sequence(ek_betti(out))
    assert [(c.k, c.ell) for c, _v in seq] == [(3, 2), (2, 4)]
    assert [v for _c, v in seq] == [1, 1]
