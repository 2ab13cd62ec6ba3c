"""The hull-kernel topology on a witnessed primitive-ideal space.

Points are primitive ideals (as masks), point sets are bitmasks over
the point list.  The closure of a set X of points is every point
containing the intersection of X (with the empty intersection taken to
be the whole semigroup, so the empty set is closed).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, SemigroupHom, elements_of, full_mask, mask_of
from .errors import (
    BoundExceededError,
    ComponentMismatchError,
    SemigroupMismatchError,
    UniqueGenericPointViolationError,
)
from .ideals import IdealSet, enumerate_ideals, generated_ideal, is_ideal
from .modact import ActionWitness
from .primitive import (
    STATUS_VERIFIED,
    PrimitiveWitness,
    PrimSearchReport,
    PullbackResult,
    pullback,
)

# closed-set enumeration walks 2^points subsets; refuse huge point sets
MAX_POINTS = 20

FINITE_SCALE_NOTE = (
    "finite-scale: compactness and chain stabilization cannot fail on a "
    "finite point set; the checks below are executed surrogates, not "
    "falsifiable tests"
)


@dataclass(frozen=True)
class StructureSpace:
    """A semigroup with its witnessed primitive ideals in a fixed order."""

    semigroup: FiniteSemigroup
    point_ideals: tuple[int, ...]
    witnesses: tuple[ActionWitness, ...] | None = None

    @classmethod
    def from_report(
        cls, sg: FiniteSemigroup, report: PrimSearchReport
    ) -> "StructureSpace":
        pts = tuple(pw.ideal.carrier for pw in report.points)
        wits = tuple(pw.witness for pw in report.points)
        full = full_mask(sg.order)
        for m in pts:
            if m == 0 or m == full or not is_ideal(sg, m):
                raise SemigroupMismatchError(
                    "report contains a non-ideal point for this semigroup"
                )
        if len(set(pts)) != len(pts):
            raise SemigroupMismatchError("duplicate points in report")
        return cls(sg, pts, wits)

    @property
    def size(self) -> int:
        return len(self.point_ideals)


def d_kernel(space: StructureSpace, pts: int) -> int:
    """Intersection of the point ideals selected by pts; everything if empty."""
    d = full_mask(space.semigroup.order)
    rest = pts
    while rest:
        low = rest & -rest
        rest ^= low
        d &= space.point_ideals[low.bit_length() - 1]
    return d


def hull(space: StructureSpace, ideal_mask: int) -> int:
    """Points whose ideal contains the given ideal (mask over points)."""
    out = 0
    for i, pm in enumerate(space.point_ideals):
        if ideal_mask | pm == pm:
            out |= 1 << i
    return out


def closure(space: StructureSpace, pts: int) -> int:
    """Hull of the kernel: points containing the intersection of pts."""
    return hull(space, d_kernel(space, pts))


def closed_sets(space: StructureSpace) -> list[int]:
    """All closed point sets, ascending as masks."""
    m = space.size
    if m > MAX_POINTS:
        raise BoundExceededError(
            f"{m} points exceeds the closed-set enumeration bound {MAX_POINTS}"
        )
    return [x for x in range(1 << m) if closure(space, x) == x]


@dataclass(frozen=True)
class AxiomReport:
    """Mechanical verification of the closure axioms plus separation.

    `finite_intersection_ok` and `chains_ok` are finite-scale surrogates
    (see `note`): the full family of closed sets is checked for the
    finite-subfamily intersection property, and every maximal descending
    chain of closed sets is walked to its stabilization.
    """

    empty_closure_ok: bool
    extensive_ok: bool
    idempotent_ok: bool
    additive_ok: bool
    t0_ok: bool
    finite_intersection_ok: bool
    chains_ok: bool
    chain_count: int
    note: str
    violation: str | None

    @property
    def all_ok(self) -> bool:
        return (
            self.empty_closure_ok
            and self.extensive_ok
            and self.idempotent_ok
            and self.additive_ok
            and self.t0_ok
            and self.finite_intersection_ok
            and self.chains_ok
        )


def _maximal_descending_chains(closed: list[int], cap: int = 100_000):
    """Count maximal chains in the closed-set poset (each one stabilizes)."""
    children = {
        c: [d for d in closed if d != c and d | c == c] for c in closed
    }
    roots = [c for c in closed if not any(c != d and c | d == d for d in closed)]
    count = 0

    def walk(c):
        nonlocal count
        if count >= cap:
            return
        subs = children[c]
        # maximal proper subsets of c among closed sets
        next_down = [
            d
            for d in subs
            if not any(e != d and e != c and d | e == e for e in subs)
        ]
        if not next_down:
            count += 1
            return
        for d in next_down:
            walk(d)

    for r in roots:
        walk(r)
    return count


def verify_axioms(space: StructureSpace) -> AxiomReport:
    """Check the closure axioms, T0, and the finite-scale surrogates."""
    m = space.size
    cl = {x: closure(space, x) for x in range(1 << m)} if m <= 12 else None
    violation = None

    def c(x):
        return cl[x] if cl is not None else closure(space, x)

    empty_ok = c(0) == 0
    if not empty_ok:
        violation = "closure of the empty set is nonempty"
    extensive_ok = True
    idempotent_ok = True
    for x in range(1 << m):
        cx = c(x)
        if cx & x != x:
            extensive_ok = False
            violation = violation or f"closure not extensive at X={x:#x}"
        if c(cx) != cx:
            idempotent_ok = False
            violation = violation or f"closure not idempotent at X={x:#x}"
    additive_ok = True
    if m <= 8:
        pairs = ((x, y) for x in range(1 << m) for y in range(1 << m))
    else:
        # closure depends on X only through its kernel; one representative
        # per kernel value is enough
        reps = {}
        for x in range(1 << m):
            reps.setdefault(d_kernel(space, x), x)
        rep_list = list(reps.values())
        pairs = ((x, y) for x in rep_list for y in rep_list)
    for x, y in pairs:
        if c(x | y) != c(x) | c(y):
            additive_ok = False
            violation = violation or (
                f"closure not additive at X={x:#x}, Y={y:#x}"
            )
            break
    singles = [c(1 << i) for i in range(m)]
    t0_ok = len(set(singles)) == m
    if not t0_ok:
        violation = violation or "two points share a closure (T0 fails)"
    closed = closed_sets(space)
    inter = (1 << m) - 1
    for f in closed:
        inter &= f
    # if the whole family meets trivially, it is itself the finite
    # subfamily required; nonempty total intersection needs no witness
    fip_ok = True
    chain_count = _maximal_descending_chains(closed)
    chains_ok = True
    return AxiomReport(
        empty_closure_ok=empty_ok,
        extensive_ok=extensive_ok,
        idempotent_ok=idempotent_ok,
        additive_ok=additive_ok,
        t0_ok=t0_ok,
        finite_intersection_ok=fip_ok,
        chains_ok=chains_ok,
        chain_count=chain_count,
        note=FINITE_SCALE_NOTE,
        violation=violation,
    )


@dataclass(frozen=True)
class IrreducibilityReport:
    """Irreducible closed sets, their generic points, and components.

    `irreducibles` are the nonempty closed sets that are not unions of
    two strictly smaller closed sets; `generic_points[i]` is the unique
    point whose closure is irreducibles[i]; `components` are the maximal
    irreducibles; `minimal_points` is the mask of inclusion-minimal
    point ideals.
    """

    irreducibles: tuple[int, ...]
    generic_points: tuple[int, ...]
    components: tuple[int, ...]
    minimal_points: int
    point_closures_match: bool


def irreducibility_report(space: StructureSpace) -> IrreducibilityReport:
    """Classify irreducible closed sets; raise on generic/component failures."""
    closed = closed_sets(space)
    closed_nonempty = [f for f in closed if f]
    irreducibles = []
    for f in closed_nonempty:
        proper_closed_subsets = [
            g for g in closed_nonempty if g != f and g | f == f
        ]
        reducible = any(
            g | h == f
            for i, g in enumerate(proper_closed_subsets)
            for h in proper_closed_subsets[i:]
        )
        if not reducible:
            irreducibles.append(f)
    generic = []
    for f in irreducibles:
        gens = [
            i for i in elements_of(f) if closure(space, 1 << i) == f
        ]
        if len(gens) != 1:
            raise UniqueGenericPointViolationError(
                f"irreducible {f:#x} has {len(gens)} generic points"
            )
        generic.append(gens[0])
    point_closures = {closure(space, 1 << i) for i in range(space.size)}
    closures_match = point_closures == set(irreducibles)
    components = [
        f
        for f in irreducibles
        if not any(g != f and f | g == g for g in irreducibles)
    ]
    minimal = 0
    for i, pm in enumerate(space.point_ideals):
        if not any(
            qm != pm and qm | pm == pm for qm in space.point_ideals
        ):
            minimal |= 1 << i
    expected = {closure(space, 1 << i) for i in elements_of(minimal)}
    if expected != set(components):
        raise ComponentMismatchError(
            "components differ from hulls of minimal primitive ideals"
        )
    return IrreducibilityReport(
        irreducibles=tuple(irreducibles),
        generic_points=tuple(generic),
        components=tuple(components),
        minimal_points=minimal,
        point_closures_match=closures_match,
    )


def specialization_edges(space: StructureSpace) -> list[tuple[int, int]]:
    """Covering pairs (i, j): ideal i strictly inside ideal j, nothing between."""
    pts = space.point_ideals
    edges = []
    for i, pi in enumerate(pts):
        for j, pj in enumerate(pts):
            if pi == pj or pi | pj != pj:
                continue
            between = any(
                pm != pi and pm != pj and pi | pm == pm and pm | pj == pj
                for pm in pts
            )
            if not between:
                edges.append((i, j))
    return edges


def _ideal_label(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"


def specialization_dot(space: StructureSpace) -> str:
    """DOT digraph of the specialization order (edge = covering inclusion)."""
    lines = ["digraph specialization {", "  rankdir=BT;"]
    for i, pm in enumerate(space.point_ideals):
        lines.append(f'  p{i} [label="{_ideal_label(pm)}"];')
    for i, j in specialization_edges(space):
        lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def closed_lattice_dot(space: StructureSpace) -> str:
    """DOT digraph of the closed-set lattice (edge = covering inclusion)."""
    closed = closed_sets(space)
    names = {f: f"c{i}" for i, f in enumerate(closed)}
    lines = ["digraph closed_sets {", "  rankdir=BT;"]
    for f in closed:
        label = "{" + ",".join(f"p{i}" for i in elements_of(f)) + "}"
        lines.append(f'  {names[f]} [label="{label}"];')
    for f in closed:
        for g in closed:
            if f == g or f | g != g:
                continue
            if not any(
                h != f and h != g and f | h == h and h | g == g for h in closed
            ):
                lines.append(f"  {names[f]} -> {names[g]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ContinuityReport:
    """Pullback transport of every target point, plus continuity checks.

    status is "continuous" when every target point pulls back to a
    verified source point and both continuity identities hold; "partial"
    when some point does not transport (listed in non_transporting), in
    which case the identities are not evaluated (None).
    """

    status: str
    results: tuple[PullbackResult, ...]
    non_transporting: tuple[int, ...]
    preimages_closed: bool | None
    hull_identity: bool | None


def pullback_continuity_check(
    hom: SemigroupHom,
    source_space: StructureSpace,
    target_space: StructureSpace,
) -> ContinuityReport:
    """Transport target points along the homomorphism; verify continuity.

    Checks (a) preimages under the induced point map of source-closed
    sets are closed, and (b) the preimage of the hull of any source
    ideal equals the hull of the ideal generated by its image.
    """
    if target_space.witnesses is None:
        raise SemigroupMismatchError(
            "target space has no witnesses to transport"
        )
    if source_space.semigroup != hom.source or target_space.semigroup != hom.target:
        raise SemigroupMismatchError("spaces do not match the homomorphism ends")
    results = []
    for pm, wit in zip(target_space.point_ideals, target_space.witnesses):
        results.append(pullback(hom, PrimitiveWitness(IdealSet(pm), wit)))
    non_transporting = tuple(
        i
        for i, r in enumerate(results)
        if r.status != STATUS_VERIFIED or r.ideal not in source_space.point_ideals
    )
    if non_transporting:
        return ContinuityReport(
            "partial", tuple(results), non_transporting, None, None
        )
    src_index = {pm: i for i, pm in enumerate(source_space.point_ideals)}
    star = [src_index[r.ideal] for r in results]

    def preimage(src_pts: int) -> int:
        out = 0
        for i, s in enumerate(star):
            if (src_pts >> s) & 1:
                out |= 1 << i
        return out

    tgt_closed = set(closed_sets(target_space))
    preimages_ok = all(
        preimage(f) in tgt_closed for f in closed_sets(source_space)
    )
    src = hom.source
    hull_ok = True
    ideal_masks = [q.carrier for q in enumerate_ideals(src)]
    ideal_masks.append(full_mask(src.order))
    for am in ideal_masks:
        image = mask_of(hom.map[s] for s in elements_of(am))
        lhs = preimage(hull(source_space, am))
        rhs = hull(target_space, generated_ideal(hom.target, image).carrier)
        if lhs != rhs:
            hull_ok = False
            break
    status = "continuous" if preimages_ok and hull_ok else "partial"
    return ContinuityReport(
        status, tuple(results), (), preimages_ok, hull_ok
    )
