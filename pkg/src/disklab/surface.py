"""Chord-model surfaces: punctured blocks, arc classes, and tubed surfaces.

A once-punctured genus-g surface is cut along 2g loops based at a single
point of the puncture boundary.  The resulting disk has boundary

    [station][side 0][side 1] ... [side 4g-1]

where the station segment carries every arc endpoint and side ``4h..4h+3``
carries the identification word ``(pair 2h, +), (pair 2h+1, +),
(pair 2h, -), (pair 2h+1, -)``.  Side ``(p, +)`` at parameter t is glued to
side ``(p, -)`` at parameter 1-t, so the minus side lists its slots in the
reverse of the plus-side order.

An arc class is a reduced code: a tuple of signed crossings, entry ``x``
crossing pair ``|x|-1`` arriving on the sign(x) side.  Crossing numbers are
computed by exhaustive search over drawings: endpoint orderings at the
station, slot orderings on each side (one order chosen on the plus side,
mirrored on the minus side), and chord interleaving counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from disklab.errors import InvalidConfigError, MalformedFileError, ResourceCapError

ArcCode = tuple[int, ...]

SIDE_A = "A"
SIDE_B = "B"

DEFAULT_MAX_ARC_CLASSES = 100_000
DEFAULT_MERGE_BUDGET = 20_000


def opposite_side(side: str) -> str:
    if side == SIDE_A:
        return SIDE_B
    if side == SIDE_B:
        return SIDE_A
    raise InvalidConfigError(f"unknown side {side!r}")


# -- punctured block model ----------------------------------------------------


def side_word(genus: int) -> tuple[tuple[int, int], ...]:
    """Identification word: for each handle h, sides (2h,+),(2h+1,+),(2h,-),(2h+1,-)."""
    word: list[tuple[int, int]] = []
    for h in range(genus):
        word.extend([(2 * h, 1), (2 * h + 1, 1), (2 * h, -1), (2 * h + 1, -1)])
    return tuple(word)


@dataclass(frozen=True)
class PuncturedSurfaceModel:
    """A once-punctured genus-g block with 0, 1, or 2 marked feet.

    Feet are marked boundary disks at fixed reference positions adjacent to
    side 0, disjoint from the polygon corners.  Arcs are based at the
    puncture (the station segment) and avoid all feet by construction:
    chord representatives never route through the reference positions, so
    feet are bookkeeping and never enter the crossing search.
    """

    genus: int
    feet: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise InvalidConfigError(f"genus must be >= 1, got {self.genus}")
        if self.feet not in (0, 1, 2):
            raise InvalidConfigError(f"feet must be 0, 1, or 2, got {self.feet}")

    @property
    def word(self) -> tuple[tuple[int, int], ...]:
        return side_word(self.genus)

    @property
    def foot_positions(self) -> tuple[str, ...]:
        """Reference positions, distinct and disjoint from polygon corners."""
        return tuple(f"adjacent_to_side_0_slot_{i}" for i in range(self.feet))

    @property
    def pairs(self) -> int:
        return 2 * self.genus


def build_punctured_model(genus: int, feet: int = 0) -> PuncturedSurfaceModel:
    return PuncturedSurfaceModel(genus=genus, feet=feet)


# -- arc codes ----------------------------------------------------------------


def validate_code(code: ArcCode, genus: int) -> None:
    if not isinstance(code, tuple) or len(code) == 0:
        raise InvalidConfigError(f"arc code must be a nonempty tuple, got {code!r}")
    top = 2 * genus
    for x in code:
        if not isinstance(x, int) or x == 0 or abs(x) > top:
            raise InvalidConfigError(
                f"arc code entry {x!r} out of range for genus {genus} (|x| in 1..{top})"
            )
    for a, b in zip(code, code[1:]):
        if a == -b:
            raise InvalidConfigError(f"arc code {code!r} is not reduced at {a}, {b}")


def reverse_code(code: ArcCode) -> ArcCode:
    """The same arc traversed backwards: reversed order, flipped signs."""
    return tuple(-x for x in reversed(code))


def canonical_code(code: ArcCode) -> ArcCode:
    """Canonical form under traversal reversal: lexicographic minimum."""
    return min(tuple(code), reverse_code(code))


# -- drawings and crossings ---------------------------------------------------
#
# A drawing of a set of arcs assigns: an order of endpoint tokens inside the
# station block, and for each pair p an order of the plus-side slots (one per
# crossing of pair p, across all arcs).  Positions on the boundary cycle are
# then fixed and chords cross exactly when their endpoints interleave.


def _entries(code: ArcCode) -> list[tuple[int, int]]:
    return [(abs(x) - 1, 1 if x > 0 else -1) for x in code]


def _side_index(genus: int) -> dict[tuple[int, int], int]:
    return {ps: i for i, ps in enumerate(side_word(genus))}


def _chord_endpoints(
    genus: int, codes: dict[int, ArcCode]
) -> dict[int, list[tuple[tuple, tuple]]]:
    """Chords of each arc as pairs of abstract boundary points.

    Points are ("st", (arc, 0|1)) for endpoints and (side_index, (arc, entry))
    for crossing slots.
    """
    sidx = _side_index(genus)
    chords: dict[int, list[tuple[tuple, tuple]]] = {}
    for j, code in codes.items():
        pts: list[tuple[tuple, tuple]] = []
        prev: tuple = ("st", (j, 0))
        for idx, (p, s) in enumerate(_entries(code)):
            arrive = (sidx[(p, s)], (j, idx))
            pts.append((prev, arrive))
            prev = (sidx[(p, -s)], (j, idx))
        pts.append((prev, ("st", (j, 1))))
        chords[j] = pts
    return chords


def _positions(
    genus: int,
    station_order: tuple[tuple[int, int], ...],
    plus_orders: dict[int, tuple[tuple[int, int], ...]],
) -> dict[tuple, int]:
    """Assign cyclic positions to every boundary point of a drawing."""
    pos: dict[tuple, int] = {}
    counter = 0
    for token in station_order:
        pos[("st", token)] = counter
        counter += 1
    for side_i, (p, s) in enumerate(side_word(genus)):
        slots = plus_orders.get(p, ())
        ordered = slots if s == 1 else tuple(reversed(slots))
        for crossing in ordered:
            pos[(side_i, crossing)] = counter
            counter += 1
    return pos


def _crossings(
    pos: dict[tuple, int],
    chords_a: list[tuple[tuple, tuple]],
    chords_b: list[tuple[tuple, tuple]],
    stop_at: int | None = None,
) -> int:
    """Count interleaving chord pairs between the two lists."""
    spans_a = []
    for u, v in chords_a:
        x, y = pos[u], pos[v]
        spans_a.append((x, y) if x < y else (y, x))
    count = 0
    for u, v in chords_b:
        p, q = pos[u], pos[v]
        for x, y in spans_a:
            if (x < p < y) != (x < q < y):
                count += 1
                if stop_at is not None and count >= stop_at:
                    return count
    return count


@lru_cache(maxsize=None)
def solo_drawings(
    genus: int, code: ArcCode
) -> tuple[tuple[tuple[tuple[int, int], ...], tuple[tuple[tuple[int, int], ...], ...]], ...]:
    """All drawings of a single arc with zero self-crossings.

    Each drawing is (station_order, per_pair_orders) where per_pair_orders
    lists, for pair p in 0..2g-1, the plus-side slot order of this arc's
    pair-p crossings.  An empty result means the code admits no embedded
    representative.
    """
    validate_code(code, genus)
    entries = _entries(code)
    by_pair: dict[int, list[tuple[int, int]]] = {}
    for idx, (p, _s) in enumerate(entries):
        by_pair.setdefault(p, []).append((0, idx))
    chords = _chord_endpoints(genus, {0: code})[0]
    out = []
    endpoint_orders = [((0, 0), (0, 1)), ((0, 1), (0, 0))]
    pair_ids = sorted(by_pair)
    pair_perm_lists = [list(permutations(by_pair[p])) for p in pair_ids]

    def rec(i: int, chosen: dict[int, tuple]) -> None:
        if i == len(pair_ids):
            for st in endpoint_orders:
                pos = _positions(genus, st, chosen)
                if _crossings(pos, chords, chords, stop_at=1) == 0:
                    out.append((st, tuple(chosen.get(p, ()) for p in range(2 * genus))))
            return
        for perm in pair_perm_lists[i]:
            chosen[pair_ids[i]] = perm
            rec(i + 1, chosen)
        del chosen[pair_ids[i]]

    rec(0, {})
    return tuple(out)


def is_embeddable(genus: int, code: ArcCode) -> bool:
    return bool(solo_drawings(genus, canonical_code(code)))


def _shuffles(xs: tuple, ys: tuple):
    """All interleavings of xs and ys preserving each sequence's order."""
    n, m = len(xs), len(ys)
    if n == 0:
        yield tuple(ys)
        return
    if m == 0:
        yield tuple(xs)
        return
    for picks in combinations(range(n + m), n):
        merged: list = []
        xi = 0
        yi = 0
        pickset = set(picks)
        for i in range(n + m):
            if i in pickset:
                merged.append(xs[xi])
                xi += 1
            else:
                merged.append(ys[yi])
                yi += 1
        yield tuple(merged)


_PAIR_CACHE: dict[tuple, int] = {}


def _relabel(drawing, arc_id: int):
    """Re-tag a solo drawing's tokens with a fresh arc id."""
    st, orders = drawing
    st2 = tuple((arc_id, e) for (_j, e) in st)
    orders2 = tuple(tuple((arc_id, idx) for (_j, idx) in per) for per in orders)
    return st2, orders2


def arc_intersection(
    a: ArcCode,
    b: ArcCode,
    m: PuncturedSurfaceModel,
    budget: int | None = DEFAULT_MERGE_BUDGET,
) -> int:
    """Minimal crossing number between straightened representatives.

    Exhaustive search over endpoint orderings on the boundary and slot
    orderings of identified chords, minimizing cross-arc interleavings.
    Symmetric; zero on the diagonal.  With a finite ``budget`` the search
    stops after that many drawings and returns the smallest count seen — an
    upper bound, so callers asserting disjointness must require 0.
    """
    g = m.genus
    ca, cb = canonical_code(a), canonical_code(b)
    if ca == cb:
        return 0
    if ca > cb:
        ca, cb = cb, ca
    key = (g, ca, cb, budget)
    if key in _PAIR_CACHE:
        return _PAIR_CACHE[key]

    solos_a = [_relabel(d, 0) for d in solo_drawings(g, ca)]
    solos_b = [_relabel(d, 1) for d in solo_drawings(g, cb)]
    if not solos_a or not solos_b:
        raise InvalidConfigError(
            f"arc codes must be embeddable; got {ca!r} / {cb!r} with no embedded drawing"
        )
    chords = _chord_endpoints(g, {0: ca, 1: cb})
    best: int | None = None
    examined = 0
    for sa, orders_a in solos_a:
        for sb, orders_b in solos_b:
            for st in _shuffles(sa, sb):
                pair_merge_lists = [
                    list(_shuffles(orders_a[p], orders_b[p])) for p in range(2 * g)
                ]

                def walk(p: int, chosen: list) -> bool:
                    nonlocal best, examined
                    if p == 2 * g:
                        examined += 1
                        plus = {i: chosen[i] for i in range(2 * g)}
                        pos = _positions(g, st, plus)
                        stop = best if best is not None else None
                        n = _crossings(pos, chords[0], chords[1], stop_at=stop)
                        if best is None or n < best:
                            best = n
                        if best == 0:
                            return True
                        return budget is not None and examined >= budget
                    for merged in pair_merge_lists[p]:
                        chosen.append(merged)
                        done = walk(p + 1, chosen)
                        chosen.pop()
                        if done:
                            return True
                    return False

                if walk(0, []):
                    if best == 0 or (budget is not None and examined >= budget):
                        _PAIR_CACHE[key] = best
                        return best
    assert best is not None
    _PAIR_CACHE[key] = best
    return best


def min_crossings_exact(genus: int, a: ArcCode, b: ArcCode) -> int:
    """Exhaustive (budget-free) minimum; intended for small test codes."""
    return arc_intersection(a, b, build_punctured_model(genus), budget=None)


# -- arc enumeration ----------------------------------------------------------


def enumerate_arcs(
    m: PuncturedSurfaceModel,
    k: int,
    max_classes: int = DEFAULT_MAX_ARC_CLASSES,
) -> list[ArcCode]:
    """Canonical embeddable arc classes of code length <= k.

    Reduced codes over the 4g signed letters, deduplicated under traversal
    reversal, filtered to codes admitting an embedded drawing, in
    deterministic (length, lexicographic) order.  Raises the resource-cap
    error if the canonical candidate count exceeds ``max_classes``.
    """
    if k < 0:
        raise InvalidConfigError(f"arc bound must be >= 0, got {k}")
    g = m.genus
    letters = [x for x in range(-2 * g, 2 * g + 1) if x != 0]
    seen: set[ArcCode] = set()

    def grow(prefix: tuple[int, ...]) -> None:
        if prefix:
            canon = canonical_code(prefix)
            if canon not in seen:
                seen.add(canon)
                if len(seen) > max_classes:
                    raise ResourceCapError(
                        "max_arc_classes",
                        f"genus {g}, length bound {k}",
                        max_classes,
                    )
        if len(prefix) == k:
            return
        for x in letters:
            if prefix and prefix[-1] == -x:
                continue
            grow(prefix + (x,))

    grow(())
    embeddable = [c for c in sorted(seen, key=lambda c: (len(c), c)) if is_embeddable(g, c)]
    return embeddable


# -- tubed surfaces -----------------------------------------------------------


def tube_side(i: int) -> str:
    """Tubes alternate sides; tube 1 is on side B."""
    if i < 1:
        raise InvalidConfigError(f"tube index must be >= 1, got {i}")
    return SIDE_B if i % 2 == 1 else SIDE_A


@dataclass(frozen=True)
class Region:
    """The product block between copies index-1 and index, containing tube index.

    The block is punctured by its own tube; feet mark where *adjacent*
    tubes attach to the block's horizontal boundary copies.
    """

    index: int
    block_side: str
    own_tube_side: str
    feet_bottom: tuple[int, ...]
    feet_top: tuple[int, ...]

    @property
    def feet_count(self) -> int:
        return len(self.feet_bottom) + len(self.feet_top)


@dataclass(frozen=True)
class TubedSurface:
    """m+1 parallel copies of a genus-g surface joined by m unknotted tubes.

    Region i (1-based) sits between copies i-1 and i and contains solid
    tube i; the block and its own tube lie on opposite sides, and
    consecutive regions alternate.
    """

    genus_base: int
    tubes: int
    regions: tuple[Region, ...]

    @property
    def genus_total(self) -> int:
        return (self.tubes + 1) * self.genus_base

    @property
    def w_side(self) -> str:
        """The side of the last tube."""
        return tube_side(self.tubes)

    @property
    def v_side(self) -> str:
        return opposite_side(self.w_side)

    def region(self, index: int) -> Region:
        if not 1 <= index <= self.tubes:
            raise InvalidConfigError(
                f"region index {index} out of range 1..{self.tubes}"
            )
        return self.regions[index - 1]

    def region_model(self, index: int) -> PuncturedSurfaceModel:
        return build_punctured_model(self.genus_base, self.region(index).feet_count)


def build_tubed_surface(genus: int, tubes: int) -> TubedSurface:
    if genus < 1:
        raise InvalidConfigError(f"genus must be >= 1, got {genus}")
    if tubes < 1:
        raise InvalidConfigError(f"tube count must be >= 1, got {tubes}")
    regions = []
    for r in range(1, tubes + 1):
        own = tube_side(r)
        regions.append(
            Region(
                index=r,
                block_side=opposite_side(own),
                own_tube_side=own,
                feet_bottom=(r - 1,) if r >= 2 else (),
                feet_top=(r + 1,) if r + 1 <= tubes else (),
            )
        )
    return TubedSurface(genus_base=genus, tubes=tubes, regions=tuple(regions))


# -- JSON ---------------------------------------------------------------------


def surface_to_json_obj(s: TubedSurface) -> dict:
    return {
        "kind": "tubed_surface",
        "genus_base": s.genus_base,
        "tubes": s.tubes,
        "genus_total": s.genus_total,
        "w_side": s.w_side,
        "v_side": s.v_side,
        "regions": [
            {
                "index": r.index,
                "block_side": r.block_side,
                "own_tube_side": r.own_tube_side,
                "feet_bottom": list(r.feet_bottom),
                "feet_top": list(r.feet_top),
            }
            for r in s.regions
        ],
    }


def surface_from_json_obj(obj, source: str = "surface") -> TubedSurface:
    if not isinstance(obj, dict):
        raise MalformedFileError(source, "expected an object")
    if obj.get("kind") != "tubed_surface":
        raise MalformedFileError(f"{source}.kind", "expected 'tubed_surface'")
    genus = obj.get("genus_base")
    tubes = obj.get("tubes")
    if not isinstance(genus, int) or genus < 1:
        raise MalformedFileError(f"{source}.genus_base", "expected an int >= 1")
    if not isinstance(tubes, int) or tubes < 1:
        raise MalformedFileError(f"{source}.tubes", "expected an int >= 1")
    built = build_tubed_surface(genus, tubes)
    regions = obj.get("regions")
    if not isinstance(regions, list) or len(regions) != tubes:
        raise MalformedFileError(f"{source}.regions", f"expected a list of {tubes} regions")
    for i, entry in enumerate(regions):
        loc = f"{source}.regions[{i}]"
        if not isinstance(entry, dict):
            raise MalformedFileError(loc, "expected an object")
        want = built.regions[i]
        got = (
            entry.get("index"),
            entry.get("block_side"),
            entry.get("own_tube_side"),
            entry.get("feet_bottom"),
            entry.get("feet_top"),
        )
        expect = (
            want.index,
            want.block_side,
            want.own_tube_side,
            list(want.feet_bottom),
            list(want.feet_top),
        )
        if got != expect:
            raise MalformedFileError(loc, f"inconsistent region data; expected {expect}")
    return built


def arcs_to_json_obj(genus: int, k: int, arcs: list[ArcCode]) -> dict:
    return {
        "kind": "arc_catalog",
        "genus": genus,
        "arc_bound": k,
        "classes": [list(code) for code in arcs],
    }


def arcs_from_json_obj(obj, source: str = "arcs") -> tuple[int, int, list[ArcCode]]:
    if not isinstance(obj, dict):
        raise MalformedFileError(source, "expected an object")
    if obj.get("kind") != "arc_catalog":
        raise MalformedFileError(f"{source}.kind", "expected 'arc_catalog'")
    genus = obj.get("genus")
    k = obj.get("arc_bound")
    if not isinstance(genus, int) or genus < 1:
        raise MalformedFileError(f"{source}.genus", "expected an int >= 1")
    if not isinstance(k, int) or k < 0:
        raise MalformedFileError(f"{source}.arc_bound", "expected an int >= 0")
    raw = obj.get("classes")
    if not isinstance(raw, list):
        raise MalformedFileError(f"{source}.classes", "expected a list")
    out: list[ArcCode] = []
    for i, entry in enumerate(raw):
        loc = f"{source}.classes[{i}]"
        if not isinstance(entry, list) or not all(isinstance(x, int) for x in entry):
            raise MalformedFileError(loc, "expected a list of ints")
        code = tuple(entry)
        try:
            validate_code(code, genus)
        except InvalidConfigError as exc:
            raise MalformedFileError(loc, str(exc)) from exc
        if canonical_code(code) != code:
            raise MalformedFileError(loc, f"code {code!r} is not canonical")
        out.append(code)
    if out != sorted(out, key=lambda c: (len(c), c)):
        raise MalformedFileError(f"{source}.classes", "classes are not in catalog order")
    return genus, k, out
