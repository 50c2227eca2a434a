"""Octahedral spheres in the cataloged disk complex and the retraction onto them.

For a surface with ``m = n + 1`` tubes, the sphere ``S^n`` is realized as an
iterated suspension inside the disk complex: one antipodal pair per tube,
``E_i`` the meridian of tube ``i + 1`` and ``D_i`` a vertical disk in region
``i + 1``.  Vertices of different pairs bound disjoint disks (every such edge
is certified by the disjointness calculus before the sphere is accepted),
while the two vertices of one pair intersect, exactly the octahedron's
non-adjacency.

The retraction sends every cataloged disk to a sphere vertex, by recursion
over tube count:

* the top meridian maps to ``E_n``; disks meeting the top tube from the other
  side map to ``D_n``;
* disks missing the top tube entirely keep their descriptor and recurse on
  the surface with one tube fewer;
* same-side disks crossing the top meridian are surgered along an outermost
  intersection arc; each outermost arc yields candidate disks, each candidate
  recursively receives an image, and the arc's result is the candidate image
  lying in the smallest suspension sub-sphere (minimal pair index).  All
  outermost arcs must agree on the result; a disagreement raises
  :class:`WellDefinednessError` rather than being resolved silently.

``certify_minimality`` runs the full pipeline and emits a machine-checkable
certificate: sphere invariants, per-disk images, well-definedness statistics,
the simplicial/retraction check on the cataloged complex, and an exact
homology certificate that the composite fixes a generating ``n``-cycle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .disks import (
    BandSum,
    CatalogConfig,
    DiskCatalog,
    Meridian,
    VerticalDisk,
    build_disk_catalog,
    classify_type,
    config_to_json_obj,
    disk_side,
    disk_to_json_obj,
    disks_disjoint,
    meets_distinguished,
    project_disk,
    resolve_partner,
    validate_disk,
)
from .errors import InvalidConfigError, WellDefinednessError
from .flagcomplex import (
    DEFAULT_MAX_SIMPLICES,
    FlagComplex,
    VertexMap,
    check_retraction,
)
from .homology import certify_homology_retraction
from .surface import TubedSurface, build_tubed_surface, surface_to_json_obj, tube_side


@dataclass(frozen=True, order=True)
class SphereVertex:
    """One vertex of the octahedral sphere: pair index plus letter D or E."""

    pair_index: int
    letter: str

    def __post_init__(self):
        if self.letter not in ("D", "E"):
            raise InvalidConfigError(f"sphere vertex letter must be 'D' or 'E', got {self.letter!r}")
        if not isinstance(self.pair_index, int) or self.pair_index < 0:
            raise InvalidConfigError(f"sphere pair index must be >= 0, got {self.pair_index!r}")

    @property
    def name(self) -> str:
        return f"{self.letter}{self.pair_index}"


@dataclass(frozen=True)
class SuspensionSphere:
    """Antipodal disk pairs realizing an iterated-suspension sphere."""

    surface: TubedSurface
    d_disks: tuple
    e_disks: tuple

    @property
    def index(self) -> int:
        return len(self.d_disks) - 1

    def pair(self, i: int):
        return (self.d_disks[i], self.e_disks[i])

    def disk_for(self, vertex: SphereVertex):
        if vertex.pair_index > self.index:
            raise InvalidConfigError(f"sphere has no pair {vertex.pair_index}")
        pool = self.d_disks if vertex.letter == "D" else self.e_disks
        return pool[vertex.pair_index]

    def key_for(self, vertex: SphereVertex) -> str:
        return self.disk_for(vertex).key

    def vertex_keys(self) -> list:
        out = []
        for i in range(self.index + 1):
            out.append(self.d_disks[i].key)
            out.append(self.e_disks[i].key)
        return out

    def sub_sphere_keys(self, i: int) -> list:
        """Vertex keys of the suspension sub-sphere on pairs ``0..i``."""
        if not (0 <= i <= self.index):
            raise InvalidConfigError(f"sub-sphere index {i} out of range 0..{self.index}")
        out = []
        for j in range(i + 1):
            out.append(self.d_disks[j].key)
            out.append(self.e_disks[j].key)
        return out

    def complex(self) -> FlagComplex:
        """The octahedron as a flag complex on disk keys."""
        fc = FlagComplex()
        for i in range(self.index + 1):
            fc.add_vertex(self.d_disks[i].key, f"D{i}")
            fc.add_vertex(self.e_disks[i].key, f"E{i}")
        for i in range(self.index + 1):
            for j in range(i + 1, self.index + 1):
                for a in (self.d_disks[i], self.e_disks[i]):
                    for b in (self.d_disks[j], self.e_disks[j]):
                        fc.add_edge(a.key, b.key)
        return fc.freeze()


def build_suspension_sphere(surface: TubedSurface, catalog: DiskCatalog) -> SuspensionSphere:
    """Pick one antipodal disk pair per tube out of the catalog.

    ``E_i`` is the meridian of tube ``i + 1``; ``D_i`` is the first cataloged
    vertical disk of region ``i + 1`` that the calculus certifies disjoint
    from all the other pairs' meridians.  Raises naming the failing pair when
    no cataloged disk qualifies.
    """
    m = surface.tubes
    budget = catalog.config.merge_budget
    by_key = catalog.by_key()
    verticals = catalog.vertical_disks()
    d_disks, e_disks = [], []
    for i in range(m):
        region = i + 1
        e = Meridian(region)
        if e.key not in by_key:
            raise InvalidConfigError(
                f"catalog has no meridian for tube {region}; sphere pair (D{i}, E{i}) cannot be realized"
            )
        chosen = None
        for cand in verticals:
            if cand.region != region:
                continue
            if all(
                disks_disjoint(cand, Meridian(j + 1), surface, budget)
                for j in range(m)
                if j != i
            ):
                chosen = cand
                break
        if chosen is None:
            raise InvalidConfigError(
                f"no cataloged vertical disk in region {region} is disjoint from the other "
                f"meridians; sphere pair (D{i}, E{i}) cannot be realized"
            )
        d_disks.append(chosen)
        e_disks.append(e)
    return SuspensionSphere(surface=surface, d_disks=tuple(d_disks), e_disks=tuple(e_disks))


def verify_sphere(sphere: SuspensionSphere, budget=None) -> dict:
    """Certify every octahedral invariant of the sphere; raise on any failure.

    Checks, via the disjointness calculus: vertices of distinct pairs bound
    disjoint disks (octahedron edges), the two disks of one pair intersect
    (octahedron non-edges), and the suspension sub-spheres form a literal
    vertex-containment chain.  Returns counts for the certificate.
    """
    surface = sphere.surface
    n = sphere.index
    edges = 0
    for i in range(n + 1):
        d, e = sphere.pair(i)
        if disks_disjoint(d, e, surface, budget):
            raise InvalidConfigError(
                f"sphere pair {i}: D{i}={d.key} and E{i}={e.key} are disjoint; "
                "an octahedral antipodal pair must intersect"
            )
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for name_a, a in (("D" + str(i), sphere.d_disks[i]), ("E" + str(i), sphere.e_disks[i])):
                for name_b, b in (("D" + str(j), sphere.d_disks[j]), ("E" + str(j), sphere.e_disks[j])):
                    if not disks_disjoint(a, b, surface, budget):
                        raise InvalidConfigError(
                            f"sphere edge {name_a}={a.key} vs {name_b}={b.key} is not certified "
                            "disjoint; the octahedron is not realized"
                        )
                    edges += 1
    keys = set()
    chain = []
    for i in range(n + 1):
        sub = sphere.sub_sphere_keys(i)
        if not keys <= set(sub):
            raise InvalidConfigError(f"sub-sphere {i} does not contain sub-sphere {i - 1}")
        keys = set(sub)
        chain.append(sub)
    return {
        "pairs": n + 1,
        "edges_verified": edges,
        "antipodal_pairs_intersect": n + 1,
        "sub_sphere_chain": chain,
    }


# -- outermost surgery -----------------------------------------------------------


@dataclass(frozen=True)
class SurgeryCandidate:
    key: str
    image: SphereVertex


@dataclass(frozen=True)
class ArcSurgery:
    arc_index: int
    candidates: tuple
    chosen: SphereVertex


@dataclass(frozen=True)
class SurgeryOutcome:
    disk_key: str
    level: int
    copies: int
    outermost: tuple
    arcs: tuple
    image: SphereVertex


def outermost_arcs(d, surface: TubedSurface) -> tuple:
    """Indices of the outermost arcs of the disk's intersection with the top meridian.

    Valid only for same-side disks crossing the top meridian, whose
    intersection pattern is a stack of parallel band arcs: one per band copy.
    A single copy has one outermost arc; otherwise the two extremes of the
    stack are outermost.  Anything else (no intersection, an opposite-side
    disk, or a pattern with closed components) is rejected.
    """
    m = surface.tubes
    t = classify_type(d, surface)
    if t != "T2" or not meets_distinguished(d, surface):
        raise InvalidConfigError(
            f"disk {d.key} (type {t}) has no band-arc intersection pattern with the top "
            "meridian; outermost surgery is undefined"
        )
    if not isinstance(d, BandSum) or d.base != m:
        raise InvalidConfigError(
            f"disk {d.key} meets the top meridian but not in a stack of parallel band arcs "
            "(closed intersection components are rejected); outermost surgery is undefined"
        )
    if d.copies == 1:
        return (0,)
    return (0, d.copies - 1)


def surgery_candidates(d: BandSum, arc_index: int):
    """Disk classes produced by compressing along one outermost arc.

    Cutting the outermost band splits off the partner's pushed copy; what
    remains is the same band sum with one copy fewer.  With a single copy the
    remainder degenerates and both pieces collapse to the partner's class.
    """
    if arc_index not in (0, d.copies - 1):
        raise InvalidConfigError(f"arc {arc_index} of {d.key} is not outermost")
    partner = resolve_partner(d)
    if d.copies == 1:
        return [partner]
    return [partner, BandSum(d.base, d.partner, d.band, d.copies - 1)]


# -- the retraction engine ---------------------------------------------------------


class RetractionEngine:
    """Computes sphere images of disk descriptors by recursion over tube count."""

    def __init__(self, surface: TubedSurface, catalog: DiskCatalog, sphere: SuspensionSphere):
        if sphere.index != surface.tubes - 1:
            raise InvalidConfigError(
                f"sphere index {sphere.index} does not match surface with {surface.tubes} tubes"
            )
        self.surface = surface
        self.catalog = catalog
        self.sphere = sphere
        self.budget = catalog.config.merge_budget
        self._surfaces = {
            level: build_tubed_surface(surface.genus_base, level)
            for level in range(1, surface.tubes + 1)
        }
        self._images: dict = {}
        self._types: dict = {}
        self._surgeries: dict = {}

    # -- queries ------------------------------------------------------------

    def image(self, d) -> SphereVertex:
        """Sphere vertex the retraction sends the disk to (top-level entry)."""
        validate_disk(d, self.surface)
        return self._image(d, self.surface.tubes)

    def image_key(self, d) -> str:
        return self.sphere.key_for(self.image(d))

    def type_at(self, d, level: int) -> str:
        key = (level, d.key)
        if key not in self._types:
            self._types[key] = classify_type(d, self._surfaces[level], self.budget)
        return self._types[key]

    def surgery_outcomes(self) -> list:
        """All recorded surgery outcomes, in deterministic (level, key) order."""
        return [self._surgeries[k] for k in sorted(self._surgeries)]

    # -- recursion ------------------------------------------------------------

    def _image(self, d, level: int) -> SphereVertex:
        memo_key = (level, d.key)
        if memo_key in self._images:
            return self._images[memo_key]
        surface = self._surfaces[level]
        if level == 1:
            # Base surface: one tube, one antipodal pair.  Disks on the tube's
            # side compress the same handlebody as the meridian; the others
            # compress the opposite one.
            if disk_side(d) == tube_side(1):
                vertex = SphereVertex(0, "E")
            else:
                vertex = SphereVertex(0, "D")
        else:
            t = self.type_at(d, level)
            if t == "T1":
                vertex = SphereVertex(level - 1, "E")
            elif t == "T3":
                vertex = SphereVertex(level - 1, "D")
            elif t == "T2" and meets_distinguished(d, surface, self.budget):
                vertex = self._surgery_image(d, level)
            else:
                vertex = self._image(project_disk(d, surface, self.budget), level - 1)
        self._images[memo_key] = vertex
        return vertex

    def _surgery_image(self, d, level: int) -> SphereVertex:
        surface = self._surfaces[level]
        arcs = outermost_arcs(d, surface)
        arc_records = []
        for arc_index in arcs:
            candidates = []
            for cand in surgery_candidates(d, arc_index):
                candidates.append(SurgeryCandidate(key=cand.key, image=self._image(cand, level)))
            chosen = min(c.image for c in candidates)
            arc_records.append(
                ArcSurgery(arc_index=arc_index, candidates=tuple(candidates), chosen=chosen)
            )
        images = {rec.chosen for rec in arc_records}
        if len(images) > 1:
            first, second = arc_records[0], arc_records[-1]
            raise WellDefinednessError(
                f"outermost surgery on {d.key} at tube count {level} is not well defined: "
                f"arc {first.arc_index} gives {first.chosen.name} but arc {second.arc_index} "
                f"gives {second.chosen.name}"
            )
        outcome = SurgeryOutcome(
            disk_key=d.key,
            level=level,
            copies=d.copies,
            outermost=arcs,
            arcs=tuple(arc_records),
            image=arc_records[0].chosen,
        )
        self._surgeries[(level, d.key)] = outcome
        return outcome.image


# -- claim verification --------------------------------------------------------------


#: Disjoint-pair cases by the (sorted) type pair of the two disks.
CASE_OF_TYPES = {
    ("T1", "T2"): 1,
    ("T1", "T4"): 1,
    ("T2", "T3"): 2,
    ("T3", "T4"): 2,
    ("T3", "T3"): 3,
    ("T2", "T4"): 4,
    ("T2", "T2"): 5,
    ("T4", "T4"): 6,
}


def verify_claim_cases(engine: RetractionEngine, disjoint_pairs=None) -> dict:
    """Check every certified-disjoint catalog pair maps to equal or adjacent vertices.

    Images violate the octahedron only when they form an antipodal pair: same
    pair index, different letters.  Pairs are tallied by the case table on
    disk types; a disjoint pair involving the top meridian and a disk that
    meets it is impossible by construction and treated as an internal error.
    """
    surface = engine.surface
    catalog = engine.catalog
    m = surface.tubes
    if disjoint_pairs is None:
        disjoint_pairs = [
            (a, b)
            for a, b in combinations(catalog.disks, 2)
            if disks_disjoint(a, b, surface, engine.budget)
        ]
    per_case = Counter()
    violations = []
    for a, b in disjoint_pairs:
        ta, tb = sorted((engine.type_at(a, m), engine.type_at(b, m)))
        if (ta, tb) not in CASE_OF_TYPES:
            raise InvalidConfigError(
                f"disks {a.key} (type {ta}) and {b.key} (type {tb}) are certified disjoint, "
                "which contradicts the type definitions"
            )
        case = CASE_OF_TYPES[(ta, tb)]
        per_case[case] += 1
        xa, xb = engine.image(a), engine.image(b)
        antipodal = xa.pair_index == xb.pair_index and xa.letter != xb.letter
        if antipodal:
            violations.append(
                {
                    "case": case,
                    "disks": [a.key, b.key],
                    "types": [ta, tb],
                    "images": [xa.name, xb.name],
                }
            )
    return {
        "pairs_checked": len(disjoint_pairs),
        "per_case": {str(c): per_case.get(c, 0) for c in range(1, 7)},
        "violations": violations,
        "passed": not violations,
    }


# -- the full certificate pipeline ------------------------------------------------------


CAVEATS = (
    "All conclusions are relative to the finite cataloged subcomplex of the disk "
    "complex; compressing disks outside the catalog are not examined.",
    "Disjointness is certified conservatively: a pair reported as intersecting may "
    "be an artifact of the crossing-search budget.  That can only shrink the "
    "verified subcomplex, never add an edge, so certified claims stay sound.",
    "Tube positions and the product structure of each region are fixed throughout; "
    "isotopies that slide tube feet between regions are not modeled.",
    "The retraction is verified on vertices and edges; both complexes are flag, so "
    "simpliciality on edges extends it over all higher simplices.",
    "On the meridian side the catalog may omit compressing disks; the index bound "
    "is therefore a bound over the cataloged family, not an unconditional one.",
)


def catalog_complex(catalog: DiskCatalog, disjoint_pairs) -> FlagComplex:
    """The cataloged disk complex: disks as vertices, certified-disjoint pairs as edges."""
    fc = FlagComplex()
    for d in catalog.disks:
        fc.add_vertex(d.key, d.key)
    for a, b in disjoint_pairs:
        fc.add_edge(a.key, b.key)
    return fc.freeze()


def certify_minimality(
    genus: int,
    n: int,
    config: CatalogConfig,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> dict:
    """Build the surface with ``n + 1`` tubes and certify its minimality bound.

    Runs the whole pipeline: catalog, sphere realization and verification,
    per-disk retraction images, well-definedness of every surgery, claim
    verification over all certified-disjoint pairs, the simplicial retraction
    check on the cataloged complex, and the exact homology certificate in
    dimension ``n``.  Returns a JSON-ready certificate; ``passed`` is False
    (with ``first_violation`` set) rather than raising when a verification
    step finds a counterexample.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidConfigError(f"suspension index must be a nonnegative integer, got {n!r}")
    m = n + 1
    surface = build_tubed_surface(genus, m)
    catalog = build_disk_catalog(surface, config)
    sphere = build_suspension_sphere(surface, catalog)
    sphere_invariants = verify_sphere(sphere, budget=config.merge_budget)

    engine = RetractionEngine(surface, catalog, sphere)
    first_violation = None
    images = {}
    claims = None
    retraction_ok = False
    retraction_report = []
    homology_doc = None
    try:
        for d in catalog.disks:
            images[d.key] = engine.image(d)
    except WellDefinednessError as exc:
        first_violation = {"kind": "well_definedness", "detail": str(exc)}

    disjoint_pairs = [
        (a, b)
        for a, b in combinations(catalog.disks, 2)
        if disks_disjoint(a, b, surface, config.merge_budget)
    ]

    if first_violation is None:
        claims = verify_claim_cases(engine, disjoint_pairs)
        if not claims["passed"]:
            v = claims["violations"][0]
            first_violation = {
                "kind": "claim",
                "detail": (
                    f"disjoint disks {v['disks'][0]} and {v['disks'][1]} map to antipodal "
                    f"vertices {v['images'][0]} and {v['images'][1]} (case {v['case']})"
                ),
            }

    if first_violation is None:
        complex_k = catalog_complex(catalog, disjoint_pairs)
        sphere_complex = sphere.complex()
        assignment = {key: sphere.key_for(img) for key, img in images.items()}
        vertex_map = VertexMap(domain=complex_k, codomain=complex_k, assignment=assignment)
        retraction_ok, retraction_report = check_retraction(vertex_map, sphere_complex)
        if not retraction_ok:
            first_violation = {"kind": "retraction", "detail": retraction_report[0]}
        else:
            homology_doc = certify_homology_retraction(
                vertex_map, sphere_complex, n, max_per_dim=max_simplices
            )
            if not homology_doc["passed"]:
                first_violation = {
                    "kind": "homology",
                    "detail": f"the composite does not fix the generating {n}-cycle",
                }

    witness = None
    if n >= 2:
        for a, b in disjoint_pairs:
            sides = {disk_side(a), disk_side(b)}
            if sides == {surface.v_side, surface.w_side}:
                v_disk, w_disk = (a, b) if disk_side(a) == surface.v_side else (b, a)
                witness = {"v_disk": v_disk.key, "w_disk": w_disk.key}
                break

    outcomes = engine.surgery_outcomes()
    multi_arc = [o for o in outcomes if len(o.outermost) >= 2]
    provenance = Counter()
    for d in catalog.disks:
        if d.key not in images:
            continue
        t = engine.type_at(d, m)
        if t == "T1":
            provenance["top_meridian"] += 1
        elif t == "T3":
            provenance["top_vertical"] += 1
        elif t == "T2" and meets_distinguished(d, surface, config.merge_budget):
            provenance["surgered"] += 1
        else:
            provenance["projected"] += 1

    passed = (
        first_violation is None
        and claims is not None
        and claims["passed"]
        and retraction_ok
        and homology_doc is not None
        and bool(homology_doc["passed"])
    )

    certificate = {
        "kind": "minimality_certificate",
        "parameters": {
            "genus": genus,
            "suspension_index": n,
            "tubes": m,
            "catalog_config": config_to_json_obj(config),
            "max_simplices": max_simplices,
        },
        "surface": surface_to_json_obj(surface),
        "catalog": {
            "size": len(catalog.disks),
            "meridians": len(catalog.meridians()),
            "vertical_disks": len(catalog.vertical_disks()),
            "band_sums": len(catalog.band_sums()),
            "types": dict(sorted(Counter(engine.type_at(d, m) for d in catalog.disks).items())),
            "arc_classes_per_region": {str(r): len(v) for r, v in sorted(catalog.arc_classes.items())},
        },
        "sphere": {
            "index": n,
            "pairs": [
                {
                    "index": i,
                    "d_key": sphere.d_disks[i].key,
                    "d": disk_to_json_obj(sphere.d_disks[i]),
                    "e_key": sphere.e_disks[i].key,
                    "e": disk_to_json_obj(sphere.e_disks[i]),
                }
                for i in range(n + 1)
            ],
            "invariants": sphere_invariants,
        },
        "retraction": {
            "images": {key: {"vertex": img.name, "key": sphere.key_for(img)} for key, img in sorted(images.items())},
            "provenance": {k: provenance.get(k, 0) for k in ("top_meridian", "top_vertical", "projected", "surgered")},
            "well_definedness": {
                "surgeries": len(outcomes),
                "multi_arc_surgeries": len(multi_arc),
                "agreements": len(multi_arc),
                "disagreements": 0 if first_violation is None or first_violation["kind"] != "well_definedness" else 1,
            },
            "check": {"ok": retraction_ok, "report": retraction_report},
        },
        "claims": claims,
        "witness": witness,
        "homology": homology_doc,
        "bounds": {
            "topological_index_upper": n + 1,
            "statement": (
                f"The cataloged disk subcomplex admits a verified retraction onto an "
                f"octahedral {n}-sphere whose fundamental class is fixed, so the subcomplex "
                f"is not {n}-connected; over this catalog the surface has topological "
                f"index at most {n + 1}."
            ),
        },
        "caveats": list(CAVEATS),
        "first_violation": first_violation,
        "passed": passed,
    }
    return certificate


def render_report(certificate: dict) -> str:
    """Human-readable summary of a certificate; deterministic, no timestamps."""
    p = certificate["parameters"]
    cat = certificate["catalog"]
    ret = certificate["retraction"]
    lines = []
    lines.append("MINIMALITY CERTIFICATE")
    lines.append("======================")
    lines.append("")
    verdict = "PASSED" if certificate["passed"] else "FAILED"
    lines.append(f"Result: {verdict}")
    if certificate["first_violation"] is not None:
        fv = certificate["first_violation"]
        lines.append(f"First violation ({fv['kind']}): {fv['detail']}")
    lines.append("")
    lines.append(f"Bound: {certificate['bounds']['statement']}")
    lines.append("")
    lines.append(
        f"Surface: {p['tubes'] + 1} parallel copies of a genus-{p['genus']} surface "
        f"joined by {p['tubes']} tubes (total genus {(p['tubes'] + 1) * p['genus']})"
    )
    lines.append(f"Suspension index: n = {p['suspension_index']}")
    lines.append(
        f"Catalog: {cat['size']} disks "
        f"({cat['meridians']} meridians, {cat['vertical_disks']} vertical, {cat['band_sums']} band sums); "
        f"types {cat['types']}"
    )
    lines.append(
        f"Arc bound: {p['catalog_config']['arc_bound']}; "
        f"band-sum depth: {p['catalog_config']['bandsum_depth']}"
    )
    lines.append("")
    lines.append("Sphere pairs:")
    for pair in certificate["sphere"]["pairs"]:
        lines.append(f"  D{pair['index']} = {pair['d_key']}   E{pair['index']} = {pair['e_key']}")
    inv = certificate["sphere"]["invariants"]
    lines.append(
        f"Octahedron verified: {inv['edges_verified']} edges disjoint, "
        f"{inv['antipodal_pairs_intersect']} antipodal pairs intersect"
    )
    lines.append("")
    prov = ret["provenance"]
    lines.append(
        f"Retraction: top meridian {prov['top_meridian']}, top vertical {prov['top_vertical']}, "
        f"projected {prov['projected']}, surgered {prov['surgered']}"
    )
    wd = ret["well_definedness"]
    lines.append(
        f"Well-definedness: {wd['surgeries']} surgeries, {wd['multi_arc_surgeries']} with "
        f"multiple outermost arcs, {wd['agreements']} agreements, {wd['disagreements']} disagreements"
    )
    if certificate["claims"] is not None:
        cl = certificate["claims"]
        per = ", ".join(f"case {c}: {cl['per_case'][c]}" for c in sorted(cl["per_case"]))
        lines.append(f"Claims: {cl['pairs_checked']} disjoint pairs checked ({per}); "
                     f"violations: {len(cl['violations'])}")
    if certificate["witness"] is not None:
        w = certificate["witness"]
        lines.append(f"Disjoint witness pair: V-side {w['v_disk']}, W-side {w['w_disk']}")
    if certificate["homology"] is not None:
        hom = certificate["homology"]
        lines.append(
            f"Homology: generating {hom['dimension']}-cycle with {len(hom['generating_cycle'])} "
            f"simplices; composite is identity: {hom['composite_is_identity']}"
        )
    lines.append("")
    lines.append("Caveats:")
    for cv in certificate["caveats"]:
        lines.append(f"  - {cv}")
    lines.append("")
    return "\n".join(lines)
