import pytest

from stablebetti import (
    Corner,
    CornerSpec,
    InfeasibleSpec,
    MODE_STRICT,
    MonomialIdeal,
    MonomialSubmodule,
    SpecError,
    UncoveredByCharacterization,
    VerificationFailed,
    column_bounds,
    construct_module,
    corner_matrix,
    corner_sequence,
    ek_betti,
    filler_ideal,
    find_corner_matrix,
    normalize_module,
    realize_module,
    validate_corner_matrix,
    validate_module_spec,
)


def spec(n, pairs, values):
    return CornerSpec(n, tuple(Corner(k, l) for k, l in pairs), tuple(values))


def test_validate_module_spec_delegates_for_single_component():
    assert validate_module_spec(spec(6, [(5, 3)], [1]), 1).admissible
    assert validate_module_spec(spec(3, [(1, 2)], [1]), 1).status == "uncovered"
    with pytest.raises(SpecError):
        validate_module_spec(spec(6, [(5, 3)], [1]), 0)


def test_validate_module_spec_value_range():
    # single corner (2,2): per-component stratum size C(3,1) = 3
    assert validate_module_spec(spec(4, [(2, 2)], [6]), 2).admissible
    verdict = validate_module_spec(spec(4, [(2, 2)], [7]), 2)
    assert not verdict.admissible
    assert verdict.status == "rejected"
    # positions that the single-ideal rules exclude are fine for m > 1
    assert validate_module_spec(spec(3, [(1, 2)], [2]), 2).admissible


def test_column_bounds_match_single_ideal_bounds():
    s = spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1])
    assert column_bounds(s, (0, 1, 2)) == (1, 3, 1)
    assert column_bounds(s, (1,)) == (10,)  # lone corner: full peak stratum
    assert column_bounds(s, (0, 2)) == (2, 1)


def test_find_corner_matrix_frozen_single_corner():
    matrix = find_corner_matrix(spec(4, [(2, 2)], [6]), 2)
    assert matrix == ((3, 3),)
    matrix = find_corner_matrix(spec(4, [(2, 2)], [4]), 2)
    assert matrix == ((3, 1),)


def test_find_corner_matrix_prefers_full_pattern_first_column():
    matrix = find_corner_matrix(spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1]), 2)
    assert matrix == ((1, 0), (3, 0), (1, 0))


def test_find_corner_matrix_infeasible_and_budget():
    with pytest.raises(InfeasibleSpec) as err:
        find_corner_matrix(spec(4, [(2, 2)], [7]), 2)
    assert not err.value.exhausted_budget
    with pytest.raises(InfeasibleSpec) as err:
        find_corner_matrix(
            spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1]), 3, node_budget=2
        )
    assert err.value.exhausted_budget
    with pytest.raises(UncoveredByCharacterization):
        find_corner_matrix(spec(3, [(1, 2)], [1]), 1)


def test_validate_corner_matrix_catches_bad_shapes_and_sums():
    s = spec(6, [(5, 2), (3, 3)], [1, 2])
    ok, reason = validate_corner_matrix(s, ((1,), (2,)))
    assert ok and reason is None
    assert not validate_corner_matrix(s, ((1,),))[0]  # row count
    assert not validate_corner_matrix(s, ((1, 0), (2,)))[0]  # ragged
    assert not validate_corner_matrix(s, ((2,), (2,)))[0]  # row sum
    assert not validate_corner_matrix(s, ((1,), (-2,)))[0]
    # per-column position screening: a column carrying a chain that
    # starts in degree 2 and ends at position 1 is uncovered
    s2 = spec(4, [(3, 2), (1, 3)], [1, 1])
    ok, reason = validate_corner_matrix(s2, ((1,), (1,)))
    assert not ok
    assert "position screening" in reason


def test_validate_corner_matrix_checks_mode_bounds():
    s = spec(6, [(3, 3), (2, 5)], [4, 2])
    assert validate_corner_matrix(s, ((4,), (2,)))[0]  # coupled default
    ok, reason = validate_corner_matrix(s, ((4,), (2,)), MODE_STRICT)
    assert not ok
    assert "strict cap" in reason


def test_filler_ideal_is_corner_invisible():
    filler = filler_ideal(6, 2, 2)
    assert filler == MonomialIdeal.from_strings(6, ["x1", "x2", "x3"])
    filler5 = filler_ideal(6, 5, 3)
    assert filler5.max_gen_degree() == 4
    assert filler5.is_strongly_stable()
    anchor = MonomialIdeal.from_strings(6, [
        "x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6",
        "x2^2", "x2*x3", "x2*x4", "x2*x5", "x2*x6", "x3^5",
    ])
    alone = corner_sequence(ek_betti(anchor))
    padded = MonomialSubmodule(6, (anchor, filler_ideal(6, 2, 2)))
    assert corner_sequence(ek_betti(padded)) == alone


def test_construct_module_round_trip():
    s = spec(6, [(5, 2), (3, 3), (2, 5)], [1, 3, 1])
    matrix = ((1, 0), (3, 0), (1, 0))
    out = construct_module(s, matrix)
    assert out.matrix == matrix
    assert out.columns[1] is None  # filler column
    assert corner_matrix(out.module).rows == matrix
    with pytest.raises(InfeasibleSpec):
        construct_module(s, ((1,), (3,), (2,)))  # bad row sum
    with pytest.raises(InfeasibleSpec):
        construct_module(
            spec(6, [(3, 3), (2, 5)], [4, 2]), ((4,), (2,)), MODE_STRICT
        )  # entry above its strict cap


def test_realize_module_two_columns_with_split():
    s = spec(4, [(2, 2)], [5])
    out = realize_module(s, 2)
    assert out.matrix == ((3, 2),)
    assert [sum(row) for row in out.matrix] == [5]
    assert corner_sequence(ek_betti(out.module)) == [(Corner(2, 2), 5)]


def test_normalize_module_fixpoint(bundle3):
    res = normalize_module(bundle3)
    assert res.rebuilt == ()
    assert res.module == bundle3


def test_normalize_module_rebuilds_offending_component(bundle4):
    before = corner_sequence(ek_betti(bundle4))
    res = normalize_module(bundle4)
    assert res.rebuilt == (4,)
    assert corner_sequence(ek_betti(res.module)) == before
    view = corner_matrix(res.module)
    assert view.rows == corner_matrix(bundle4).rows
    rebuilt = res.module.components[3]
    own = corner_sequence(ek_betti(rebuilt))
    assert own == [(Corner(3, 3), 3)]


def test_normalize_module_requires_unshifted_components():
    ideal = MonomialIdeal.from_strings(3, ["x1^2", "x1*x2", "x1*x3"])
    module = MonomialSubmodule(3, (ideal, ideal), (0, 1))
    with pytest.raises(SpecError):
        normalize_module(module)
