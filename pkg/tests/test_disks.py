"""Tests for disk descriptors, the disjointness calculus, and catalogs."""

import copy
import itertools

import pytest

from disklab.disks import (
    SELF_PARTNER,
    BandSum,
    CatalogConfig,
    DiskCatalog,
    Meridian,
    VerticalDisk,
    build_disk_catalog,
    catalog_from_json_obj,
    catalog_to_json_obj,
    classify_type,
    config_from_json_obj,
    config_to_json_obj,
    disk_from_json_obj,
    disk_key,
    disk_regions,
    disk_side,
    disk_to_json_obj,
    disk_tubes,
    disk_variant,
    disks_disjoint,
    distinguished_disk,
    meets_distinguished,
    project_disk,
    resolve_partner,
    validate_disk,
)
from disklab.errors import InvalidConfigError, MalformedFileError
from disklab.flagcomplex import canonical_json
from disklab.surface import SIDE_A, SIDE_B, build_tubed_surface


@pytest.fixture(scope="module")
def f2():
    return build_tubed_surface(1, 2)


@pytest.fixture(scope="module")
def f3():
    return build_tubed_surface(1, 3)


@pytest.fixture(scope="module")
def cat2(f2):
    return build_disk_catalog(f2, CatalogConfig(arc_bound=3))


@pytest.fixture(scope="module")
def cat3(f3):
    return build_disk_catalog(f3, CatalogConfig(arc_bound=3))


# -- descriptors -----------------------------------------------------------------


def test_keys_and_variants():
    m = Meridian(2)
    v = VerticalDisk(1, (-2,))
    b = BandSum(1, v, (-2, 1), 2)
    assert m.key == "M(2)"
    assert v.key == "V(1;-2)"
    assert b.key == "B(1;V(1;-2);-2,1;2)"
    assert disk_variant(m) == "meridian"
    assert disk_variant(v) == "vertical"
    assert disk_variant(b) == "bandsum"
    assert disk_key(b) == b.key


def test_arc_canonicalized_on_construction():
    assert VerticalDisk(1, (2,)).arc == (-2,)
    assert VerticalDisk(1, (1, 2)).key == VerticalDisk(1, (-2, -1)).key
    assert BandSum(1, SELF_PARTNER, (1,), 1).band == (-1,)


def test_descriptor_validation():
    with pytest.raises(InvalidConfigError):
        Meridian(0)
    with pytest.raises(InvalidConfigError):
        VerticalDisk(1, ())
    with pytest.raises(InvalidConfigError):
        VerticalDisk(1, (0,))
    with pytest.raises(InvalidConfigError):
        BandSum(1, SELF_PARTNER, (-1,), 0)
    with pytest.raises(InvalidConfigError):
        BandSum(1, "other", (-1,), 1)


def test_validate_disk_against_surface(f2):
    with pytest.raises(InvalidConfigError):
        validate_disk(Meridian(3), f2)
    with pytest.raises(InvalidConfigError):
        validate_disk(VerticalDisk(3, (-1,)), f2)
    with pytest.raises(InvalidConfigError):
        validate_disk(VerticalDisk(1, (-3,)), f2)  # out of range for genus 1
    # partner on the opposite side from its base is rejected
    with pytest.raises(InvalidConfigError):
        validate_disk(BandSum(1, VerticalDisk(1, (-2,)), (-2,), 1), f2)


def test_resolve_partner():
    assert resolve_partner(BandSum(2, SELF_PARTNER, (-1,), 1)) == Meridian(2)
    v = VerticalDisk(2, (-2,))
    assert resolve_partner(BandSum(1, v, (-1,), 1)) is v


def test_footprints():
    assert disk_tubes(Meridian(3)) == frozenset({3})
    assert disk_regions(Meridian(3)) == frozenset()
    assert disk_tubes(VerticalDisk(2, (-2,))) == frozenset({2})
    assert disk_regions(VerticalDisk(2, (-2,))) == frozenset({2})
    b = BandSum(1, VerticalDisk(2, (-2,)), (-2,), 1)
    assert disk_tubes(b) == frozenset({1, 2})
    assert disk_regions(b) == frozenset({1, 2})
    nested = BandSum(3, BandSum(3, SELF_PARTNER, (-1,), 1), (-2,), 2)
    assert disk_tubes(nested) == frozenset({3})


def test_sides():
    # odd tubes on side B, even on side A; vertical disks opposite their tube
    assert disk_side(Meridian(1)) == SIDE_B
    assert disk_side(Meridian(2)) == SIDE_A
    assert disk_side(VerticalDisk(1, (-2,))) == SIDE_A
    assert disk_side(VerticalDisk(2, (-2,))) == SIDE_B
    assert disk_side(BandSum(2, SELF_PARTNER, (-1,), 1)) == SIDE_A


# -- classification (frozen type tables) -------------------------------------------


F2_TYPE_TABLE = [
    (Meridian(2), "T1"),
    (Meridian(1), "T4"),
    (VerticalDisk(1, (-2,)), "T2"),
    (VerticalDisk(2, (-2,)), "T3"),
    (BandSum(2, SELF_PARTNER, (-2,), 1), "T2"),
    (BandSum(1, SELF_PARTNER, (-2,), 1), "T4"),
    (BandSum(1, VerticalDisk(2, (-2,)), (-2,), 1), "T3"),
]

F3_TYPE_TABLE = [
    (Meridian(3), "T1"),
    (Meridian(1), "T2"),
    (VerticalDisk(2, (-2,)), "T2"),
    (BandSum(1, SELF_PARTNER, (-2,), 1), "T2"),
    (BandSum(1, VerticalDisk(2, (-2,)), (-2,), 1), "T2"),
    (BandSum(3, SELF_PARTNER, (-2,), 1), "T2"),
    (BandSum(3, Meridian(1), (-2,), 1), "T2"),
    (Meridian(2), "T4"),
    (VerticalDisk(1, (-2,)), "T4"),
    (BandSum(2, SELF_PARTNER, (-2,), 1), "T4"),
    (BandSum(2, VerticalDisk(1, (-2,)), (-2,), 1), "T4"),
    (VerticalDisk(3, (-2,)), "T3"),
    (BandSum(2, VerticalDisk(3, (-2,)), (-2,), 1), "T3"),
].copy()


@pytest.mark.parametrize("disk, expected", F2_TYPE_TABLE, ids=lambda x: getattr(x, "key", x))
def test_classify_f2(f2, disk, expected):
    assert classify_type(disk, f2) == expected


@pytest.mark.parametrize("disk, expected", F3_TYPE_TABLE, ids=lambda x: getattr(x, "key", x))
def test_classify_f3(f3, disk, expected):
    assert classify_type(disk, f3) == expected


def test_partition_exactly_one_type(f2, cat2, f3, cat3):
    for surface, catalog in [(f2, cat2), (f3, cat3)]:
        types = [classify_type(d, surface) for d in catalog.disks]
        assert all(t in ("T1", "T2", "T3", "T4") for t in types)
        assert types.count("T1") == 1
        top = distinguished_disk(surface)
        assert classify_type(top, surface) == "T1"


def test_type_counts_frozen(f2, cat2, f3, cat3):
    from collections import Counter

    assert Counter(classify_type(d, f2) for d in cat2.disks) == {
        "T1": 1, "T2": 22, "T3": 14, "T4": 9,
    }
    assert Counter(classify_type(d, f3) for d in cat3.disks) == {
        "T1": 1, "T2": 43, "T3": 14, "T4": 23,
    }


def test_meets_distinguished(f2):
    assert meets_distinguished(VerticalDisk(2, (-2,)), f2)
    assert meets_distinguished(BandSum(2, SELF_PARTNER, (-2,), 1), f2)
    assert not meets_distinguished(Meridian(1), f2)
    assert not meets_distinguished(VerticalDisk(1, (-2,)), f2)


# -- disjointness -------------------------------------------------------------------


def test_disjoint_coverage_pairs_f2(f2):
    g = VerticalDisk(2, (-2,))
    a = VerticalDisk(1, (-2,))
    pairs = [
        (Meridian(2), Meridian(1)),
        (g, a),
        (g, BandSum(1, g, (-2,), 1)),
        (BandSum(2, SELF_PARTNER, (-2,), 1), Meridian(1)),
        (a, BandSum(2, SELF_PARTNER, (-2,), 1)),
        (BandSum(1, SELF_PARTNER, (-2,), 1), BandSum(1, SELF_PARTNER, (-2,), 2)),
    ]
    for x, y in pairs:
        assert disks_disjoint(x, y, f2), (x.key, y.key)


def test_disjoint_coverage_pairs_f3(f3):
    pairs = [
        (Meridian(3), Meridian(1)),
        (VerticalDisk(3, (-2,)), VerticalDisk(1, (-2,))),
        (VerticalDisk(3, (-2,)), BandSum(2, VerticalDisk(3, (-2,)), (-2,), 1)),
        (Meridian(1), Meridian(2)),
        (Meridian(1), VerticalDisk(2, (-2,))),
        (Meridian(2), VerticalDisk(1, (-2,))),
    ]
    for x, y in pairs:
        assert disks_disjoint(x, y, f3), (x.key, y.key)


def test_not_disjoint_cases(f2, f3):
    assert not disks_disjoint(VerticalDisk(2, (-2,)), Meridian(2), f2)
    assert not disks_disjoint(VerticalDisk(1, (-2,)), Meridian(1), f2)
    assert not disks_disjoint(VerticalDisk(2, (-2,)), BandSum(2, SELF_PARTNER, (-2,), 1), f2)
    assert not disks_disjoint(Meridian(3), BandSum(3, Meridian(1), (-2,), 1), f3)
    # same-region vertical disks with crossing arcs
    assert not disks_disjoint(VerticalDisk(1, (-2, -1)), VerticalDisk(1, (-2, 1)), f2)


def test_disjoint_same_region_compatible_arcs(f2):
    # Farey-adjacent slopes give disjoint arcs, hence disjoint vertical disks.
    assert disks_disjoint(VerticalDisk(1, (-2,)), VerticalDisk(1, (-1,)), f2)
    assert disks_disjoint(VerticalDisk(1, (-2,)), VerticalDisk(1, (-2, -1)), f2)


def test_disjoint_reflexive_and_symmetric(f2, cat2):
    for d in cat2.disks:
        assert disks_disjoint(d, d, f2)
    for x, y in itertools.combinations(cat2.disks, 2):
        assert disks_disjoint(x, y, f2) == disks_disjoint(y, x, f2)


def test_f1_all_vertical_disks_meet_the_meridian():
    for genus in (1, 2):
        surface = build_tubed_surface(genus, 1)
        top = Meridian(1)
        for k in range(1, 5):
            catalog = build_disk_catalog(surface, CatalogConfig(arc_bound=k))
            assert catalog.band_sums() == []
            verticals = catalog.vertical_disks()
            assert verticals, (genus, k)
            for v in verticals:
                assert not disks_disjoint(v, top, surface), v.key


# -- projection ----------------------------------------------------------------------


def test_project_disk_valid(f2, f3):
    assert project_disk(Meridian(1), f2) == Meridian(1)
    b = BandSum(1, SELF_PARTNER, (-2,), 1)
    assert project_disk(b, f2) == b
    assert project_disk(VerticalDisk(2, (-2,)), f3) == VerticalDisk(2, (-2,))


def test_project_disk_rejections(f2):
    for d in [
        Meridian(2),                          # T1
        VerticalDisk(2, (-2,)),               # T3
        BandSum(2, SELF_PARTNER, (-2,), 1),   # T2 meeting the top meridian
    ]:
        with pytest.raises(InvalidConfigError):
            project_disk(d, f2)
    with pytest.raises(InvalidConfigError):
        project_disk(Meridian(1), build_tubed_surface(1, 1))


# -- catalogs --------------------------------------------------------------------------


def test_catalog_sizes_frozen(cat2, cat3):
    assert len(cat2.disks) == 46
    assert len(cat3.disks) == 81
    g2 = build_disk_catalog(build_tubed_surface(2, 2), CatalogConfig(arc_bound=3))
    assert len(g2.disks) == 46
    f1 = build_disk_catalog(build_tubed_surface(1, 1), CatalogConfig(arc_bound=3))
    assert len(f1.disks) == 7  # meridian + six vertical disks


def test_catalog_sorted_and_unique(cat2, cat3):
    for cat in (cat2, cat3):
        keys = cat.keys()
        assert len(set(keys)) == len(keys)
        assert cat.meridians()[0].key == "M(1)"


def test_catalog_contains_expected_families(cat3, f3):
    keys = set(cat3.keys())
    assert {"M(1)", "M(2)", "M(3)"} <= keys
    assert "V(1;-2)" in keys and "V(3;-2)" in keys
    assert "B(3;M(1);-2;1)" in keys  # lower same-parity meridian partner
    assert "B(2;V(3;-2);-2;1)" in keys  # same-side vertical partner
    assert "B(1;B(1;self;-2;1);-2;2)" in keys  # depth-2 self partner
    # no opposite-parity meridian partners
    assert not any(k.startswith("B(2;M(") for k in keys)
    assert not any(k.startswith("B(3;M(2)") for k in keys)


def test_catalog_depth_and_copies_knobs(f2):
    shallow = build_disk_catalog(f2, CatalogConfig(arc_bound=3, bandsum_depth=1))
    assert not any(
        disk_variant(d) == "bandsum" and isinstance(d.partner, BandSum) for d in shallow.disks
    )
    none = build_disk_catalog(f2, CatalogConfig(arc_bound=3, bandsum_depth=0))
    assert none.band_sums() == []
    single = build_disk_catalog(f2, CatalogConfig(arc_bound=3, copies=(1,)))
    assert all(d.copies == 1 for d in single.band_sums())


def test_catalog_arc_classes_full_enumeration(cat2):
    # the catalog caps vertical disks at 6 per region but keeps all 13 classes
    assert len(cat2.arc_classes[1]) == 13
    assert len([d for d in cat2.vertical_disks() if d.region == 1]) == 6


def test_catalog_deterministic(f2):
    a = build_disk_catalog(f2, CatalogConfig(arc_bound=3))
    b = build_disk_catalog(f2, CatalogConfig(arc_bound=3))
    assert a.keys() == b.keys()
    assert canonical_json(catalog_to_json_obj(a)) == canonical_json(catalog_to_json_obj(b))


def test_config_validation():
    with pytest.raises(InvalidConfigError):
        CatalogConfig(arc_bound=-1)
    with pytest.raises(InvalidConfigError):
        CatalogConfig(arc_bound=3, bandsum_depth=5)
    with pytest.raises(InvalidConfigError):
        CatalogConfig(arc_bound=3, copies=())
    with pytest.raises(InvalidConfigError):
        CatalogConfig(arc_bound=3, copies=(0,))


# -- JSON -------------------------------------------------------------------------------


def test_disk_json_roundtrip():
    disks = [
        Meridian(2),
        VerticalDisk(1, (-2, 1)),
        BandSum(3, Meridian(1), (-1,), 2),
        BandSum(1, BandSum(1, SELF_PARTNER, (-2,), 1), (-1,), 1),
    ]
    for d in disks:
        assert disk_from_json_obj(disk_to_json_obj(d)) == d


def test_disk_json_rejections():
    with pytest.raises(MalformedFileError):
        disk_from_json_obj({"variant": "nope"})
    with pytest.raises(MalformedFileError):
        disk_from_json_obj({"variant": "meridian", "index": 0})
    with pytest.raises(MalformedFileError):
        disk_from_json_obj({"variant": "vertical", "region": 1, "arc": "x"})


def test_config_json_roundtrip():
    cfg = CatalogConfig(arc_bound=3, copies=(1, 2))
    assert config_from_json_obj(config_to_json_obj(cfg)) == cfg
    with pytest.raises(MalformedFileError):
        config_from_json_obj({"arc_bound": 3})


def test_catalog_json_roundtrip(cat2):
    obj = catalog_to_json_obj(cat2)
    rebuilt = catalog_from_json_obj(obj)
    assert rebuilt.keys() == cat2.keys()
    assert canonical_json(catalog_to_json_obj(rebuilt)) == canonical_json(obj)


def test_catalog_json_tamper_detection(cat2):
    obj = catalog_to_json_obj(cat2)

    def expect(mutate, fragment):
        bad = copy.deepcopy(obj)
        mutate(bad)
        with pytest.raises(MalformedFileError) as exc:
            catalog_from_json_obj(bad)
        assert fragment in exc.value.location

    expect(lambda o: o.__setitem__("kind", "x"), "kind")
    expect(lambda o: o["disks"].pop(0), "disks")
    expect(lambda o: o["disks"][3].__setitem__("type", "T1"), "disks[3]")
    expect(lambda o: o["disks"][0].__setitem__("index", 5), "disks[0]")
    expect(lambda o: o["arc_classes"]["1"].pop(0), "arc_classes")
