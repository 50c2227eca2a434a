"""Tests for the chord-model surface module.

Frozen intersection numbers below were derived independently of the
implementation: small cases by hand-enumerated chord drawings, and the
genus-1 table against the classical fact that arcs on a once-punctured
torus correspond to rational slopes with minimal crossing number
|ps - qr| - 1 for slopes p/q and r/s (the arc complex is the Farey graph,
so Farey-adjacent slopes give disjoint arcs).
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from disklab.errors import InvalidConfigError, MalformedFileError, ResourceCapError
from disklab.surface import (
    SIDE_A,
    SIDE_B,
    arc_intersection,
    arcs_from_json_obj,
    arcs_to_json_obj,
    build_punctured_model,
    build_tubed_surface,
    canonical_code,
    enumerate_arcs,
    is_embeddable,
    min_crossings_exact,
    opposite_side,
    reverse_code,
    side_word,
    solo_drawings,
    surface_from_json_obj,
    surface_to_json_obj,
    tube_side,
    validate_code,
)


# -- punctured model ----------------------------------------------------------


def test_model_word_structure():
    m = build_punctured_model(2)
    assert m.word == (
        (0, 1), (1, 1), (0, -1), (1, -1),
        (2, 1), (3, 1), (2, -1), (3, -1),
    )
    assert m.pairs == 4


def test_model_validation():
    with pytest.raises(InvalidConfigError):
        build_punctured_model(0)
    with pytest.raises(InvalidConfigError):
        build_punctured_model(1, feet=3)
    with pytest.raises(InvalidConfigError):
        build_punctured_model(1, feet=-1)


def test_foot_positions_distinct():
    m = build_punctured_model(1, feet=2)
    assert len(set(m.foot_positions)) == 2


# -- codes --------------------------------------------------------------------


def test_validate_code_rejections():
    with pytest.raises(InvalidConfigError):
        validate_code((), 1)
    with pytest.raises(InvalidConfigError):
        validate_code((0,), 1)
    with pytest.raises(InvalidConfigError):
        validate_code((3,), 1)  # out of range for genus 1
    with pytest.raises(InvalidConfigError):
        validate_code((1, -1), 1)  # not reduced


def test_reverse_and_canonical():
    assert reverse_code((1, -2)) == (2, -1)
    assert canonical_code((1,)) == (-1,)
    assert canonical_code((-1,)) == (-1,)
    assert canonical_code((1, 2)) == (-2, -1)
    # canonical is idempotent and reversal-invariant
    for code in [(-1,), (2,), (1, -2), (-2, 1), (-1, 2, -1)]:
        c = canonical_code(code)
        assert canonical_code(c) == c
        assert canonical_code(reverse_code(code)) == c


# -- enumeration (frozen values) ----------------------------------------------


def test_enumerate_empty_at_zero():
    assert enumerate_arcs(build_punctured_model(1), 0) == []


def test_enumerate_genus1_k1_exactly_two_classes():
    assert enumerate_arcs(build_punctured_model(1), 1) == [(-2,), (-1,)]


def test_enumerate_genus1_k2_frozen():
    # Hand enumeration: six canonical reduced length-2 codes, of which
    # (-1,-1)/(-2,-2) (non-primitive wrap) and (-1,-2) (kinked crossing
    # order) admit no embedded drawing.
    assert enumerate_arcs(build_punctured_model(1), 2) == [
        (-2,), (-1,), (-2, -1), (-2, 1), (1, -2),
    ]


def test_enumerate_genus2_k1():
    assert enumerate_arcs(build_punctured_model(2), 1) == [(-4,), (-3,), (-2,), (-1,)]


def test_enumerate_regression_counts():
    assert len(enumerate_arcs(build_punctured_model(1), 3)) == 13
    assert len(enumerate_arcs(build_punctured_model(1), 4)) == 22
    assert len(enumerate_arcs(build_punctured_model(2), 3)) == 54


def test_enumerate_monotone_and_canonical():
    m = build_punctured_model(1)
    k1 = enumerate_arcs(m, 1)
    k2 = enumerate_arcs(m, 2)
    k3 = enumerate_arcs(m, 3)
    assert set(k1) <= set(k2) <= set(k3)
    for code in k3:
        assert canonical_code(code) == code
    assert k3 == sorted(k3, key=lambda c: (len(c), c))


def test_enumerate_resource_cap():
    with pytest.raises(ResourceCapError) as exc:
        enumerate_arcs(build_punctured_model(2), 4, max_classes=10)
    assert exc.value.cap_name == "max_arc_classes"
    assert exc.value.limit == 10


# -- embeddability (frozen values) ---------------------------------------------


@pytest.mark.parametrize(
    "code, expected",
    [
        ((-1,), True),
        ((-2,), True),
        ((1, 1), False),      # non-primitive double wrap
        ((-1, -1), False),
        ((-2, -2), False),
        ((-1, -2), False),    # kinked crossing order
        ((-2, -1), True),     # slope -1 diagonal
        ((-2, 1), True),      # slope +1 diagonal
        ((1, -2), True),
        ((-1, 2, -1), True),  # slope +2
        ((-1, -2, -1), False),
    ],
)
def test_embeddability_frozen(code, expected):
    assert is_embeddable(1, code) is expected


def test_solo_drawings_nonempty_for_embeddable():
    assert solo_drawings(1, (-2, -1))
    assert solo_drawings(1, (1, 1)) == ()


# -- intersection numbers (frozen oracle table) ---------------------------------

# Slope dictionary (verified by geometric trace):
#   (-1,) ~ infinity=(0,1); (-2,) ~ 0=(1,0); (-2,1) ~ +1=(1,1);
#   (-2,-1) ~ -1=(1,-1); (-1,2,-1) ~ +2=(1,2).
FAREY_TABLE = [
    ((-1,), (-2,), 0),          # det 1
    ((-1,), (-2, -1), 0),       # det 1
    ((-2,), (-2, -1), 0),       # det 1
    ((-2,), (-2, 1), 0),        # det 1
    ((-1,), (1, -2), 0),        # det 1
    ((-2, -1), (-2, 1), 1),     # det 2
    ((-2, -1), (1, -2), 1),     # det 2
    ((-1, 2, -1), (-1,), 0),    # det 1
    ((-1, 2, -1), (-2, 1), 0),  # det 1
    ((-1, 2, -1), (-2,), 1),    # det 2
    ((-1, 2, -1), (-2, -1), 2), # det 3
]


@pytest.mark.parametrize("a, b, expected", FAREY_TABLE)
def test_intersection_farey_oracle(a, b, expected):
    assert min_crossings_exact(1, a, b) == expected
    assert min_crossings_exact(1, b, a) == expected


def test_intersection_diagonal_zero():
    m = build_punctured_model(1)
    for code in enumerate_arcs(m, 3):
        assert arc_intersection(code, code, m) == 0


def test_intersection_parallel_copies_any_form():
    # The same class handed in as a non-canonical code still reads as parallel.
    m = build_punctured_model(1)
    assert arc_intersection((1,), (-1,), m) == 0
    assert arc_intersection((1, 2), (-2, -1), m) == 0


def test_intersection_symmetric_over_catalog():
    m = build_punctured_model(1)
    arcs = enumerate_arcs(m, 3)
    for a, b in itertools.combinations(arcs, 2):
        assert arc_intersection(a, b, m) == arc_intersection(b, a, m)


def test_intersection_diagonal_and_symmetry_k4():
    m = build_punctured_model(1)
    arcs = enumerate_arcs(m, 4)
    for code in arcs:
        assert arc_intersection(code, code, m) == 0
    for a, b in list(itertools.combinations(arcs, 2))[:60]:
        assert arc_intersection(a, b, m) == arc_intersection(b, a, m)


def test_intersection_budget_is_upper_bound():
    m = build_punctured_model(1)
    exact = min_crossings_exact(1, (-2, -1), (-2, 1))
    budgeted = arc_intersection((-2, -1), (-2, 1), m, budget=1)
    assert budgeted >= exact


def test_intersection_rejects_non_embeddable():
    m = build_punctured_model(1)
    with pytest.raises(InvalidConfigError):
        arc_intersection((1, 1), (-1,), m)


def test_intersection_genus2_cross_handle():
    m = build_punctured_model(2)
    assert arc_intersection((-1,), (-3,), m) == 0
    assert arc_intersection((-1,), (-4,), m) == 0
    assert arc_intersection((-1,), (-2,), m) == 0


# -- tubed surfaces -------------------------------------------------------------


def test_tube_sides_alternate():
    assert tube_side(1) == SIDE_B
    assert tube_side(2) == SIDE_A
    assert tube_side(3) == SIDE_B
    assert opposite_side(SIDE_A) == SIDE_B


def test_build_tubed_surface_f1():
    s = build_tubed_surface(1, 1)
    assert s.genus_total == 2
    assert s.w_side == SIDE_B
    assert s.v_side == SIDE_A
    r = s.region(1)
    assert r.block_side == SIDE_A
    assert r.own_tube_side == SIDE_B
    assert r.feet_bottom == () and r.feet_top == ()
    assert s.region_model(1).feet == 0


def test_build_tubed_surface_f2():
    s = build_tubed_surface(1, 2)
    assert s.genus_total == 3
    assert s.w_side == SIDE_A
    r1, r2 = s.region(1), s.region(2)
    assert r1.feet_top == (2,) and r1.feet_bottom == ()
    assert r2.feet_bottom == (1,) and r2.feet_top == ()
    assert r1.block_side == SIDE_A and r2.block_side == SIDE_B
    assert s.region_model(1).feet == 1


def test_build_tubed_surface_f3_interior_region():
    s = build_tubed_surface(2, 3)
    assert s.genus_total == 8
    assert s.w_side == SIDE_B
    r2 = s.region(2)
    assert r2.feet_bottom == (1,) and r2.feet_top == (3,)
    assert r2.feet_count == 2
    assert s.region_model(2).feet == 2
    # block and own tube on opposite sides; consecutive regions alternate
    for r in s.regions:
        assert r.block_side == opposite_side(r.own_tube_side)
    sides = [r.block_side for r in s.regions]
    assert all(x != y for x, y in zip(sides, sides[1:]))


def test_build_tubed_surface_validation():
    with pytest.raises(InvalidConfigError):
        build_tubed_surface(0, 1)
    with pytest.raises(InvalidConfigError):
        build_tubed_surface(1, 0)
    s = build_tubed_surface(1, 2)
    with pytest.raises(InvalidConfigError):
        s.region(3)


# -- JSON -----------------------------------------------------------------------


def test_surface_json_roundtrip():
    s = build_tubed_surface(2, 3)
    obj = surface_to_json_obj(s)
    assert surface_from_json_obj(obj) == s


def test_surface_json_rejects_tampering():
    obj = surface_to_json_obj(build_tubed_surface(1, 2))
    obj["regions"][1]["feet_bottom"] = [2]
    with pytest.raises(MalformedFileError) as exc:
        surface_from_json_obj(obj)
    assert "regions[1]" in exc.value.location


def test_surface_json_rejects_bad_kind():
    with pytest.raises(MalformedFileError):
        surface_from_json_obj({"kind": "nope"})


def test_arcs_json_roundtrip():
    m = build_punctured_model(1)
    arcs = enumerate_arcs(m, 2)
    obj = arcs_to_json_obj(1, 2, arcs)
    assert arcs_from_json_obj(obj) == (1, 2, arcs)


def test_arcs_json_rejects_non_canonical():
    obj = arcs_to_json_obj(1, 1, [(-2,), (-1,)])
    obj["classes"][0] = [2]
    with pytest.raises(MalformedFileError) as exc:
        arcs_from_json_obj(obj)
    assert "classes[0]" in exc.value.location


def test_arcs_json_rejects_disorder():
    obj = arcs_to_json_obj(1, 1, [(-2,), (-1,)])
    obj["classes"] = [[-1], [-2]]
    with pytest.raises(MalformedFileError):
        arcs_from_json_obj(obj)


# -- hypothesis properties --------------------------------------------------------


@st.composite
def reduced_codes(draw, genus=1, max_len=3):
    top = 2 * genus
    letters = [x for x in range(-top, top + 1) if x != 0]
    length = draw(st.integers(1, max_len))
    code = [draw(st.sampled_from(letters))]
    for _ in range(length - 1):
        nxt = draw(st.sampled_from([x for x in letters if x != -code[-1]]))
        code.append(nxt)
    return tuple(code)


@given(reduced_codes())
@settings(max_examples=60, deadline=None)
def test_canonical_involution_property(code):
    c = canonical_code(code)
    assert canonical_code(c) == c
    assert canonical_code(reverse_code(code)) == c
    assert c <= tuple(code) or c <= reverse_code(code)


@given(reduced_codes(max_len=2), reduced_codes(max_len=2))
@settings(max_examples=40, deadline=None)
def test_intersection_symmetry_property(a, b):
    m = build_punctured_model(1)
    if not is_embeddable(1, a) or not is_embeddable(1, b):
        return
    assert arc_intersection(a, b, m) == arc_intersection(b, a, m)
