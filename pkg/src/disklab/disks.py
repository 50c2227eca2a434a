"""Compressing-disk descriptors for tubed surfaces.

A tubed surface splits its ambient space into two handlebodies, one on
each side.  The catalog tracks three families of compressing disks by
finite combinatorial descriptors:

* ``Meridian(i)``: the meridian disk of solid tube ``i``.
* ``VerticalDisk(r, arc)``: the vertical disk in region ``r`` swept out by
  an essential embedded arc.  Its boundary runs over tube ``r``'s annulus,
  so its tube footprint is ``{r}``.
* ``BandSum(i, partner, band, copies)``: pushed-off copies of meridian
  ``i`` band-summed to a parallel pushed copy of ``partner`` along
  ``copies`` parallel bands whose core arc has class ``band`` in region
  ``i``.  Partners lie on the same side as the base meridian.

Disjointness is decided conservatively at the footprint level: a meridian
meets exactly the disks whose tube footprint contains its index, arcs in a
common region are compared by exact chord crossing numbers, and disjoint
strata (distinct regions, bands versus meridians, parallel pushed copies)
separate everything else.  ``disks_disjoint`` returns ``True`` only when
this calculus certifies disjoint representatives; a ``True`` is therefore
a proof of disjointness while a ``False`` may be conservative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidConfigError, MalformedFileError
from .surface import (
    DEFAULT_MAX_ARC_CLASSES,
    DEFAULT_MERGE_BUDGET,
    ArcCode,
    TubedSurface,
    arc_intersection,
    build_tubed_surface,
    canonical_code,
    enumerate_arcs,
    opposite_side,
    tube_side,
    validate_code,
)

SELF_PARTNER = "self"

TYPE_LABELS = ("T1", "T2", "T3", "T4")


def _clean_arc(arc) -> ArcCode:
    if not isinstance(arc, (tuple, list)) or not arc:
        raise InvalidConfigError(f"arc code must be a nonempty sequence, got {arc!r}")
    out = []
    for x in arc:
        if not isinstance(x, int) or isinstance(x, bool) or x == 0:
            raise InvalidConfigError(f"arc code entries must be nonzero integers, got {arc!r}")
        out.append(x)
    return canonical_code(tuple(out))


@dataclass(frozen=True)
class Meridian:
    """Meridian disk of solid tube ``index``."""

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise InvalidConfigError(f"meridian index must be a positive integer, got {self.index!r}")

    @property
    def key(self) -> str:
        return f"M({self.index})"


@dataclass(frozen=True)
class VerticalDisk:
    """Vertical disk over an embedded essential arc in one region."""

    region: int
    arc: ArcCode

    def __post_init__(self):
        if not isinstance(self.region, int) or self.region < 1:
            raise InvalidConfigError(f"region index must be a positive integer, got {self.region!r}")
        object.__setattr__(self, "arc", _clean_arc(self.arc))

    @property
    def key(self) -> str:
        return f"V({self.region};{','.join(map(str, self.arc))})"


@dataclass(frozen=True)
class BandSum:
    """Pushed copies of meridian ``base`` band-summed to a partner disk."""

    base: int
    partner: Union[str, "Disk"]
    band: ArcCode
    copies: int

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 1:
            raise InvalidConfigError(f"band-sum base must be a positive integer, got {self.base!r}")
        if not isinstance(self.copies, int) or self.copies < 1:
            raise InvalidConfigError(f"band-sum copies must be a positive integer, got {self.copies!r}")
        if self.partner != SELF_PARTNER and not isinstance(self.partner, (Meridian, VerticalDisk, BandSum)):
            raise InvalidConfigError(
                f"band-sum partner must be {SELF_PARTNER!r} or a disk descriptor, got {self.partner!r}"
            )
        object.__setattr__(self, "band", _clean_arc(self.band))

    @property
    def key(self) -> str:
        partner_key = SELF_PARTNER if self.partner == SELF_PARTNER else self.partner.key
        return f"B({self.base};{partner_key};{','.join(map(str, self.band))};{self.copies})"


Disk = Union[Meridian, VerticalDisk, BandSum]


def disk_key(d: Disk) -> str:
    return d.key


def disk_variant(d: Disk) -> str:
    if isinstance(d, Meridian):
        return "meridian"
    if isinstance(d, VerticalDisk):
        return "vertical"
    if isinstance(d, BandSum):
        return "bandsum"
    raise InvalidConfigError(f"not a disk descriptor: {d!r}")


def resolve_partner(bs: BandSum) -> Disk:
    """The partner descriptor, with ``'self'`` resolved to the base meridian."""
    if bs.partner == SELF_PARTNER:
        return Meridian(bs.base)
    return bs.partner


def disk_side(d: Disk) -> str:
    """Which handlebody side the disk lives in (:data:`SIDE_A`/:data:`SIDE_B`)."""
    if isinstance(d, Meridian):
        return tube_side(d.index)
    if isinstance(d, VerticalDisk):
        # Vertical disks live in the block of their region, opposite the tube.
        return opposite_side(tube_side(d.region))
    if isinstance(d, BandSum):
        return tube_side(d.base)
    raise InvalidConfigError(f"not a disk descriptor: {d!r}")


def disk_tubes(d: Disk) -> frozenset:
    """Indices of solid tubes the disk's boundary runs over."""
    if isinstance(d, Meridian):
        return frozenset({d.index})
    if isinstance(d, VerticalDisk):
        return frozenset({d.region})
    if isinstance(d, BandSum):
        return frozenset({d.base}) | disk_tubes(resolve_partner(d))
    raise InvalidConfigError(f"not a disk descriptor: {d!r}")


def disk_regions(d: Disk) -> frozenset:
    """Indices of regions in which the disk's boundary carries arcs."""
    if isinstance(d, Meridian):
        return frozenset()
    if isinstance(d, VerticalDisk):
        return frozenset({d.region})
    if isinstance(d, BandSum):
        return frozenset({d.base}) | disk_regions(resolve_partner(d))
    raise InvalidConfigError(f"not a disk descriptor: {d!r}")


def validate_disk(d: Disk, surface: TubedSurface) -> None:
    """Check that a descriptor is well formed on the given surface."""
    m = surface.tubes
    g = surface.genus_base
    if isinstance(d, Meridian):
        if d.index > m:
            raise InvalidConfigError(f"meridian index {d.index} exceeds tube count {m}")
        return
    if isinstance(d, VerticalDisk):
        if d.region > m:
            raise InvalidConfigError(f"vertical-disk region {d.region} exceeds tube count {m}")
        validate_code(d.arc, g)
        return
    if isinstance(d, BandSum):
        if d.base > m:
            raise InvalidConfigError(f"band-sum base {d.base} exceeds tube count {m}")
        validate_code(d.band, g)
        partner = resolve_partner(d)
        validate_disk(partner, surface)
        if disk_side(partner) != disk_side(d):
            raise InvalidConfigError(
                f"band-sum partner {partner.key} lies on the opposite side from base meridian {d.base}"
            )
        return
    raise InvalidConfigError(f"not a disk descriptor: {d!r}")


# -- disjointness calculus -----------------------------------------------------


def _arcs_disjoint(x: ArcCode, y: ArcCode, region: int, surface: TubedSurface, budget) -> bool:
    model = surface.region_model(region)
    return arc_intersection(x, y, model, budget=budget) == 0


def _band_vs_disk(region: int, arc: ArcCode, d: Disk, surface: TubedSurface, budget) -> bool:
    # Parallel band arcs in `region` against the constituents of `d`.  Bands
    # stay in the block of their region, so they never meet a meridian.
    if isinstance(d, Meridian):
        return True
    if isinstance(d, VerticalDisk):
        if d.region != region:
            return True
        return _arcs_disjoint(arc, d.arc, region, surface, budget)
    if d.base == region and not _arcs_disjoint(arc, d.band, region, surface, budget):
        return False
    return _band_vs_disk(region, arc, resolve_partner(d), surface, budget)


def _disjoint(a: Disk, b: Disk, surface: TubedSurface, budget) -> bool:
    if a.key == b.key:
        # Identical descriptors denote parallel pushed copies.
        return True
    rank = {"meridian": 0, "vertical": 1, "bandsum": 2}
    if rank[disk_variant(a)] > rank[disk_variant(b)]:
        a, b = b, a
    if isinstance(a, Meridian):
        if isinstance(b, Meridian):
            return True
        return a.index not in disk_tubes(b)
    if isinstance(a, VerticalDisk):
        if isinstance(b, VerticalDisk):
            if a.region != b.region:
                return True
            return _arcs_disjoint(a.arc, b.arc, a.region, surface, budget)
        return (
            _disjoint(Meridian(b.base), a, surface, budget)
            and _disjoint(resolve_partner(b), a, surface, budget)
            and _band_vs_disk(b.base, b.band, a, surface, budget)
        )
    # Both band sums.  Bases are parallel pushed copies of meridians and stay
    # disjoint from each other even when the index coincides (nesting).
    pa, pb = resolve_partner(a), resolve_partner(b)
    if not _disjoint(Meridian(a.base), pb, surface, budget):
        return False
    if not _disjoint(Meridian(b.base), pa, surface, budget):
        return False
    if not _disjoint(pa, pb, surface, budget):
        return False
    if not _band_vs_disk(a.base, a.band, pb, surface, budget):
        return False
    if not _band_vs_disk(b.base, b.band, pa, surface, budget):
        return False
    if a.base == b.base and not _arcs_disjoint(a.band, b.band, a.base, surface, budget):
        return False
    return True


def disks_disjoint(a: Disk, b: Disk, surface: TubedSurface, budget=DEFAULT_MERGE_BUDGET) -> bool:
    """``True`` iff the calculus certifies disjoint representatives of a and b."""
    validate_disk(a, surface)
    validate_disk(b, surface)
    return _disjoint(a, b, surface, budget)


# -- classification and projection ----------------------------------------------


def distinguished_disk(surface: TubedSurface) -> Meridian:
    """The top meridian: the unique cataloged disk of type T1."""
    return Meridian(surface.tubes)


def classify_type(d: Disk, surface: TubedSurface, budget=DEFAULT_MERGE_BUDGET) -> str:
    """Partition disks into T1-T4 by side and incidence with the top meridian.

    T1: the top meridian itself.  T2: any other disk on the same side as the
    top meridian.  T3: opposite-side disks meeting the top meridian (their
    tube footprint reaches the top tube).  T4: opposite-side disks disjoint
    from it.
    """
    validate_disk(d, surface)
    e = distinguished_disk(surface)
    if d.key == e.key:
        return "T1"
    if disk_side(d) == surface.w_side:
        return "T2"
    if _disjoint(d, e, surface, budget):
        return "T4"
    return "T3"


def meets_distinguished(d: Disk, surface: TubedSurface, budget=DEFAULT_MERGE_BUDGET) -> bool:
    """Whether the disk's footprint forces intersection with the top meridian."""
    validate_disk(d, surface)
    return not _disjoint(d, distinguished_disk(surface), surface, budget)


def project_disk(d: Disk, surface: TubedSurface, budget=DEFAULT_MERGE_BUDGET) -> Disk:
    """Re-home a disk that avoids the top tube onto the one-tube-smaller surface.

    Valid only for disks of type T4, or type T2 disjoint from the top
    meridian.  Such a disk's footprint avoids tube and region ``m``, so the
    same descriptor denotes an isotopic disk on the surface with ``m - 1``
    tubes.
    """
    if surface.tubes < 2:
        raise InvalidConfigError("projection needs at least two tubes")
    t = classify_type(d, surface, budget)
    if t == "T1" or t == "T3":
        raise InvalidConfigError(f"disk {d.key} of type {t} meets the top tube and cannot be projected")
    if t == "T2" and meets_distinguished(d, surface, budget):
        raise InvalidConfigError(
            f"disk {d.key} of type T2 meets the top meridian; surgery is required before projection"
        )
    m = surface.tubes
    assert m not in disk_tubes(d), d.key
    assert m not in disk_regions(d), d.key
    return d


# -- catalogs --------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogConfig:
    """Finite truncation knobs for the disk catalog.

    ``arc_bound`` caps arc-code length; the remaining knobs bound how many
    cataloged disks are spun out of each enumeration (full arc enumerations
    are preserved separately on the catalog).
    """

    arc_bound: int
    bandsum_depth: int = 2
    max_vd_arcs_per_region: int = 6
    max_band_arcs: int = 2
    max_partner_arcs: int = 2
    copies: tuple = (1, 2)
    merge_budget: int = DEFAULT_MERGE_BUDGET
    max_arc_classes: int = DEFAULT_MAX_ARC_CLASSES

    def __post_init__(self):
        if not isinstance(self.arc_bound, int) or self.arc_bound < 0:
            raise InvalidConfigError(f"arc_bound must be a nonnegative integer, got {self.arc_bound!r}")
        if self.bandsum_depth not in (0, 1, 2):
            raise InvalidConfigError(f"bandsum_depth must be 0, 1, or 2, got {self.bandsum_depth!r}")
        for name in ("max_vd_arcs_per_region", "max_band_arcs", "max_partner_arcs"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise InvalidConfigError(f"{name} must be a nonnegative integer, got {v!r}")
        object.__setattr__(self, "copies", tuple(self.copies))
        if not self.copies or any(not isinstance(c, int) or c < 1 for c in self.copies):
            raise InvalidConfigError(f"copies must be a nonempty tuple of positive integers, got {self.copies!r}")


def _disk_sort_key(d: Disk):
    # Sort comparisons never cross the leading variant rank, so each variant
    # may use its own tuple shape.  Arc codes sort as tuples, matching the
    # order arc enumeration produces them in.
    if isinstance(d, Meridian):
        return (0, d.index)
    if isinstance(d, VerticalDisk):
        return (1, d.region, len(d.arc), d.arc)
    partner_rank = {"self": 0, "meridian": 1, "vertical": 2, "bandsum": 3}
    pk = SELF_PARTNER if d.partner == SELF_PARTNER else disk_variant(d.partner)
    partner_key = "" if d.partner == SELF_PARTNER else d.partner.key
    return (2, d.base, partner_rank[pk], partner_key, len(d.band), d.band, d.copies)


@dataclass(frozen=True)
class DiskCatalog:
    surface: TubedSurface
    config: CatalogConfig
    disks: tuple
    arc_classes: dict = field(compare=False)

    def keys(self):
        return [d.key for d in self.disks]

    def by_key(self) -> dict:
        return {d.key: d for d in self.disks}

    def meridians(self):
        return [d for d in self.disks if isinstance(d, Meridian)]

    def vertical_disks(self):
        return [d for d in self.disks if isinstance(d, VerticalDisk)]

    def band_sums(self):
        return [d for d in self.disks if isinstance(d, BandSum)]


def build_disk_catalog(surface: TubedSurface, config: CatalogConfig) -> DiskCatalog:
    """Enumerate the finite disk catalog for a tubed surface.

    Meridians of all tubes; vertical disks over the first
    ``max_vd_arcs_per_region`` arc classes of each region; and, when the
    surface has at least two tubes and ``bandsum_depth >= 1``, band sums of
    each meridian with same-side partners: itself, the leading vertical
    disks of same-side regions, and lower meridians of the same parity.
    ``bandsum_depth == 2`` additionally admits the base's simplest
    self-band-sum as a partner.
    """
    m = surface.tubes
    arc_classes = {
        r: tuple(enumerate_arcs(surface.region_model(r), config.arc_bound, max_classes=config.max_arc_classes))
        for r in range(1, m + 1)
    }
    disks = [Meridian(i) for i in range(1, m + 1)]
    for r in range(1, m + 1):
        for arc in arc_classes[r][: config.max_vd_arcs_per_region]:
            disks.append(VerticalDisk(r, arc))
    if m >= 2 and config.bandsum_depth >= 1:
        for i in range(1, m + 1):
            bands = arc_classes[i][: config.max_band_arcs]
            if not bands:
                continue
            partners = [SELF_PARTNER]
            side = tube_side(i)
            for r in range(1, m + 1):
                if surface.region(r).block_side == side:
                    for arc in arc_classes[r][: config.max_partner_arcs]:
                        partners.append(VerticalDisk(r, arc))
            for j in range(i - 2, 0, -2):
                partners.append(Meridian(j))
            if config.bandsum_depth >= 2:
                partners.append(BandSum(i, SELF_PARTNER, bands[0], 1))
            for partner in partners:
                for band in bands:
                    for c in config.copies:
                        disks.append(BandSum(i, partner, band, c))
    disks.sort(key=_disk_sort_key)
    for d in disks:
        validate_disk(d, surface)
    return DiskCatalog(surface=surface, config=config, disks=tuple(disks), arc_classes=arc_classes)


# -- JSON -------------------------------------------------------------------------


def config_to_json_obj(config: CatalogConfig) -> dict:
    return {
        "arc_bound": config.arc_bound,
        "bandsum_depth": config.bandsum_depth,
        "max_vd_arcs_per_region": config.max_vd_arcs_per_region,
        "max_band_arcs": config.max_band_arcs,
        "max_partner_arcs": config.max_partner_arcs,
        "copies": list(config.copies),
        "merge_budget": config.merge_budget,
        "max_arc_classes": config.max_arc_classes,
    }


def config_from_json_obj(obj, source: str = "config") -> CatalogConfig:
    if not isinstance(obj, dict):
        raise MalformedFileError(source, "catalog config must be an object")
    fields = (
        "arc_bound", "bandsum_depth", "max_vd_arcs_per_region", "max_band_arcs",
        "max_partner_arcs", "copies", "merge_budget", "max_arc_classes",
    )
    kwargs = {}
    for name in fields:
        if name not in obj:
            raise MalformedFileError(f"{source}.{name}", "missing catalog config field")
        kwargs[name] = obj[name]
    if not isinstance(kwargs["copies"], list):
        raise MalformedFileError(f"{source}.copies", "copies must be a list")
    kwargs["copies"] = tuple(kwargs["copies"])
    try:
        return CatalogConfig(**kwargs)
    except InvalidConfigError as exc:
        raise MalformedFileError(source, str(exc)) from exc


def disk_to_json_obj(d: Disk) -> dict:
    if isinstance(d, Meridian):
        return {"variant": "meridian", "index": d.index}
    if isinstance(d, VerticalDisk):
        return {"variant": "vertical", "region": d.region, "arc": list(d.arc)}
    if isinstance(d, BandSum):
        partner = SELF_PARTNER if d.partner == SELF_PARTNER else disk_to_json_obj(d.partner)
        return {
            "variant": "bandsum",
            "base": d.base,
            "partner": partner,
            "band": list(d.band),
            "copies": d.copies,
        }
    raise InvalidConfigError(f"not a disk descriptor: {d!r}")


def disk_from_json_obj(obj, source: str = "disk") -> Disk:
    if not isinstance(obj, dict):
        raise MalformedFileError(source, "disk must be an object")
    variant = obj.get("variant")
    try:
        if variant == "meridian":
            return Meridian(obj.get("index"))
        if variant == "vertical":
            arc = obj.get("arc")
            if not isinstance(arc, list):
                raise MalformedFileError(f"{source}.arc", "arc must be a list of integers")
            return VerticalDisk(obj.get("region"), tuple(arc))
        if variant == "bandsum":
            raw_partner = obj.get("partner")
            if raw_partner == SELF_PARTNER:
                partner = SELF_PARTNER
            else:
                partner = disk_from_json_obj(raw_partner, source=f"{source}.partner")
            band = obj.get("band")
            if not isinstance(band, list):
                raise MalformedFileError(f"{source}.band", "band must be a list of integers")
            return BandSum(obj.get("base"), partner, tuple(band), obj.get("copies"))
    except InvalidConfigError as exc:
        raise MalformedFileError(source, str(exc)) from exc
    raise MalformedFileError(f"{source}.variant", f"unknown disk variant {variant!r}")


def catalog_to_json_obj(catalog: DiskCatalog) -> dict:
    surface = catalog.surface
    entries = []
    for d in catalog.disks:
        obj = disk_to_json_obj(d)
        obj["key"] = d.key
        obj["side"] = disk_side(d)
        obj["type"] = classify_type(d, surface, catalog.config.merge_budget)
        entries.append(obj)
    return {
        "kind": "disk_catalog",
        "genus": surface.genus_base,
        "tubes": surface.tubes,
        "config": config_to_json_obj(catalog.config),
        "arc_classes": {str(r): [list(c) for c in codes] for r, codes in sorted(catalog.arc_classes.items())},
        "disks": entries,
    }


def catalog_from_json_obj(obj, source: str = "disks") -> DiskCatalog:
    if not isinstance(obj, dict):
        raise MalformedFileError(source, "disk catalog must be an object")
    if obj.get("kind") != "disk_catalog":
        raise MalformedFileError(f"{source}.kind", f"expected 'disk_catalog', got {obj.get('kind')!r}")
    genus = obj.get("genus")
    tubes = obj.get("tubes")
    if not isinstance(genus, int) or genus < 1:
        raise MalformedFileError(f"{source}.genus", f"genus must be a positive integer, got {genus!r}")
    if not isinstance(tubes, int) or tubes < 1:
        raise MalformedFileError(f"{source}.tubes", f"tubes must be a positive integer, got {tubes!r}")
    config = config_from_json_obj(obj.get("config"), source=f"{source}.config")
    try:
        surface = build_tubed_surface(genus, tubes)
        rebuilt = build_disk_catalog(surface, config)
    except InvalidConfigError as exc:
        raise MalformedFileError(source, str(exc)) from exc
    raw_disks = obj.get("disks")
    if not isinstance(raw_disks, list):
        raise MalformedFileError(f"{source}.disks", "disks must be a list")
    if len(raw_disks) != len(rebuilt.disks):
        raise MalformedFileError(
            f"{source}.disks",
            f"catalog lists {len(raw_disks)} disks but the declared config yields {len(rebuilt.disks)}",
        )
    for i, (raw, expected) in enumerate(zip(raw_disks, rebuilt.disks)):
        loc = f"{source}.disks[{i}]"
        parsed = disk_from_json_obj(raw, source=loc)
        if parsed.key != expected.key:
            raise MalformedFileError(loc, f"expected disk {expected.key}, got {parsed.key}")
        if isinstance(raw, dict):
            if "key" in raw and raw["key"] != expected.key:
                raise MalformedFileError(f"{loc}.key", f"key {raw['key']!r} does not match descriptor {expected.key}")
            if "side" in raw and raw["side"] != disk_side(expected):
                raise MalformedFileError(f"{loc}.side", f"side {raw['side']!r} does not match {disk_side(expected)}")
            expected_type = classify_type(expected, surface, config.merge_budget)
            if "type" in raw and raw["type"] != expected_type:
                raise MalformedFileError(f"{loc}.type", f"type {raw['type']!r} does not match {expected_type}")
    raw_arcs = obj.get("arc_classes")
    if not isinstance(raw_arcs, dict):
        raise MalformedFileError(f"{source}.arc_classes", "arc_classes must be an object")
    for r, codes in rebuilt.arc_classes.items():
        raw_codes = raw_arcs.get(str(r))
        if raw_codes != [list(c) for c in codes]:
            raise MalformedFileError(
                f"{source}.arc_classes.{r}", "arc classes do not match the declared configuration"
            )
    return rebuilt
