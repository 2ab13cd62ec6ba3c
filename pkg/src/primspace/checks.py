"""Proposition suites per semigroup, and the corpus sweep behind `check`.

Every mechanically proven statement about ideals, primitive ideals, and
the structure space is re-verified here on concrete semigroups.  A
failing suite entry means an implementation bug (the statements hold),
which is exactly why the sweep exists.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import (
    FiniteSemigroup,
    canonical_form_with_perm,
    elements_of,
    enumerate_semigroups,
    full_mask,
)
from .errors import (
    ComponentMismatchError,
    UniqueGenericPointViolationError,
)
from .ideals import (
    VARIANT_GENERATED,
    VARIANT_SET_PRODUCT,
    IdealSet,
    enumerate_ideals,
    generated_ideal,
    is_ideal,
    is_prime,
    is_prime_by_ideal_pairs,
    maximal_ideals,
    prime_ideals,
    product_containment_check,
    sxs_union_form,
    xsx_union_form,
)
from .modact import ActionWitness, annihilator
from .primitive import (
    PrimitiveWitness,
    PrimSearchReport,
    default_catalog,
    primitive_implies_prime_check,
    search_primitives,
    verify_primitive_witness,
)
from .registry import REGISTRY, label_index
from .topology import (
    AxiomReport,
    IrreducibilityReport,
    StructureSpace,
    closed_sets,
    irreducibility_report,
    verify_axioms,
)

SUITE_NAMES = (
    "ideal_product_containment",
    "prime_criterion_equivalence",
    "annihilators_are_ideals",
    "primitive_ideals_are_prime",
    "witness_soundness",
    "closure_axioms",
    "t0_separation",
    "compactness_finite_scale",
    "chains_finite_scale",
    "irreducibles_unique_generic",
    "components_minimal_hulls",
    "generated_ideal_closed_form",
)

# suites that cannot fail on a finite point set but are executed anyway
FINITE_SCALE_SUITES = ("compactness_finite_scale", "chains_finite_scale")

# above this order the closed-form comparison uses singleton generators
# only and the generated-product primality variant is skipped (both are
# exhaustive on the sweep corpus, which stops at order 5)
EXHAUSTIVE_ORDER = 8


@dataclass
class SemigroupAnalysis:
    """Everything `analyze` reports for one semigroup."""

    semigroup: FiniteSemigroup
    ideals: list[IdealSet]
    primes: list[IdealSet]
    maximals: list[IdealSet]
    prim: PrimSearchReport
    space: StructureSpace
    closed_set_count: int
    axioms: AxiomReport
    irreducibility: IrreducibilityReport | None
    irreducibility_error: str | None
    suite: dict[str, bool]
    xsx_mismatch_count: int
    xsx_generators_checked: int
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(self.suite.values())


def _closed_form_stats(sg: FiniteSemigroup, exhaustive: bool):
    """Compare the fixpoint ideal against both one-step union forms.

    Returns (sxs_ok, xsx_mismatches, generators_checked).  The SXS form
    must always agree; XSX mismatches are counted, not failed.
    """
    n = sg.order
    if exhaustive:
        gens = range(1, 1 << n)
    else:
        gens = (1 << i for i in range(n))
    sxs_ok = True
    xsx_bad = 0
    checked = 0
    for x in gens:
        checked += 1
        fix = generated_ideal(sg, x).carrier
        if sxs_union_form(sg, x) != fix:
            sxs_ok = False
        if xsx_union_form(sg, x) != fix:
            xsx_bad += 1
    return sxs_ok, xsx_bad, checked


def _prime_equivalence_ok(sg: FiniteSemigroup, with_generated: bool) -> bool:
    for q in enumerate_ideals(sg):
        elem = is_prime(sg, q)
        if is_prime_by_ideal_pairs(sg, q, VARIANT_SET_PRODUCT) != elem:
            return False
        if with_generated and (
            is_prime_by_ideal_pairs(sg, q, VARIANT_GENERATED) != elem
        ):
            return False
    return True


def analyze_semigroup(
    sg: FiniteSemigroup,
    bounds=None,
    budget: int | None = None,
    prim_report: PrimSearchReport | None = None,
) -> SemigroupAnalysis:
    """Full inventory plus proposition suite for one semigroup.

    A precomputed `prim_report` (for example transported from an
    isomorphic semigroup) is accepted and re-verified by the suite.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    ideals = enumerate_ideals(sg)
    primes = prime_ideals(sg)
    maximals = maximal_ideals(sg)
    timings["ideals"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if prim_report is None:
        prim_report = search_primitives(sg, bounds, budget)
    timings["primitive_search"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    space = StructureSpace.from_report(sg, prim_report)
    axioms = verify_axioms(space)
    n_closed = len(closed_sets(space))
    irr = None
    irr_error = None
    try:
        irr = irreducibility_report(space)
    except (UniqueGenericPointViolationError, ComponentMismatchError) as exc:
        irr_error = f"{type(exc).__name__}: {exc}"
    timings["topology"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    exhaustive = sg.order <= EXHAUSTIVE_ORDER
    sxs_ok, xsx_bad, checked = _closed_form_stats(sg, exhaustive)
    full = full_mask(sg.order)
    ann_ok = True
    sound = True
    for pw in prim_report.points:
        ann = annihilator(sg, pw.witness)
        if ann != 0 and ann != full and not is_ideal(sg, ann):
            ann_ok = False
        if not verify_primitive_witness(sg, pw):
            sound = False
    suite = {
        "ideal_product_containment": product_containment_check(sg),
        "prime_criterion_equivalence": _prime_equivalence_ok(sg, exhaustive),
        "annihilators_are_ideals": ann_ok,
        "primitive_ideals_are_prime": primitive_implies_prime_check(
            sg, prim_report
        ),
        "witness_soundness": sound,
        "closure_axioms": (
            axioms.empty_closure_ok
            and axioms.extensive_ok
            and axioms.idempotent_ok
            and axioms.additive_ok
        ),
        "t0_separation": axioms.t0_ok,
        "compactness_finite_scale": axioms.finite_intersection_ok,
        "chains_finite_scale": axioms.chains_ok,
        "irreducibles_unique_generic": irr is not None
        and irr.point_closures_match,
        "components_minimal_hulls": irr is not None,
        "generated_ideal_closed_form": sxs_ok,
    }
    timings["suite"] = time.perf_counter() - t0
    return SemigroupAnalysis(
        semigroup=sg,
        ideals=ideals,
        primes=primes,
        maximals=maximals,
        prim=prim_report,
        space=space,
        closed_set_count=n_closed,
        axioms=axioms,
        irreducibility=irr,
        irreducibility_error=irr_error,
        suite=suite,
        xsx_mismatch_count=xsx_bad,
        xsx_generators_checked=checked,
        timings=timings,
    )


def transport_report(
    sg: FiniteSemigroup,
    canon_report: PrimSearchReport,
    perm,
) -> PrimSearchReport:
    """Carry a search report from relabel(sg, perm) back to sg.

    If phi(i) = perm[i] is the isomorphism onto the canonical table, a
    witness rho over the canonical semigroup transports to
    rho'[i] = rho[perm[i]] and an ideal q to {i : perm[i] in q}.  Only
    relabelings are sound here: transposes (anti-isomorphisms) do not
    transport one-sided module structure.
    """

    def pull_mask(canon_mask: int) -> int:
        out = 0
        for i in range(sg.order):
            if (canon_mask >> perm[i]) & 1:
                out |= 1 << i
        return out

    points = []
    for pw in canon_report.points:
        wit = pw.witness
        rho = tuple(wit.rho[perm[i]] for i in range(sg.order))
        points.append(
            PrimitiveWitness(
                IdealSet(pull_mask(pw.ideal.carrier)),
                ActionWitness(wit.space, rho),
            )
        )
    points.sort(key=lambda pw: pw.ideal.carrier)
    unwitnessed = tuple(
        IdealSet(pull_mask(q.carrier)) for q in canon_report.unwitnessed_primes
    )
    unwitnessed = tuple(sorted(unwitnessed, key=lambda q: q.carrier))
    return PrimSearchReport(
        tuple(points), canon_report.bounds, canon_report.budget, unwitnessed
    )


def _search_canon(args):
    """Worker for the sweep: search one canonical table. Top level for pickling."""
    table, bounds, budget = args
    sg = FiniteSemigroup(len(table), table)
    return table, search_primitives(sg, bounds, budget)


@dataclass
class SweepReport:
    """Aggregate result of `check`: per-proposition pass counts and failures."""

    max_order: int
    dedup: str
    bounds: tuple
    budget: int
    counts_by_order: dict[int, int]
    checked: dict[str, int]
    passed: dict[str, int]
    violations: list[str]
    r15: dict
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def r15_formula_comparison() -> dict:
    """Compare ideal-generation formulas on the R15 example, singleton X.

    The fixpoint and the SXS union must agree everywhere; the XSX union
    is expected to fall short, with X = {x} missing exactly {sxs}.
    """
    sg = REGISTRY["R15"]
    from .registry import LABELS

    labels = LABELS["R15"]
    mismatches = []
    sxs_ok = True
    for i in range(sg.order):
        x = 1 << i
        fix = generated_ideal(sg, x).carrier
        if sxs_union_form(sg, x) != fix:
            sxs_ok = False
        xsx = xsx_union_form(sg, x)
        if xsx != fix:
            missing = [labels[e] for e in elements_of(fix & ~xsx)]
            mismatches.append({"generator": labels[i], "missing": missing})
    x_mask = 1 << label_index("R15", "x")
    fix = generated_ideal(sg, x_mask).carrier
    xsx = xsx_union_form(sg, x_mask)
    return {
        "order": sg.order,
        "sxs_form_matches_fixpoint": sxs_ok,
        "xsx_mismatch_count": len(mismatches),
        "xsx_mismatches": mismatches,
        "generator_x": {
            "fixpoint_size": fix.bit_count(),
            "xsx_union_size": xsx.bit_count(),
            "missing": [labels[e] for e in elements_of(fix & ~xsx)],
        },
    }


def run_sweep(
    max_order: int,
    dedup: str = "none",
    bounds=None,
    budget: int | None = None,
    jobs: int = 1,
    max_enum_order: int | None = None,
) -> SweepReport:
    """Run every proposition suite over every semigroup of order <= max_order.

    Primitive searches are done once per isomorphism class (canonical
    table without transpose) and transported back along the relabeling;
    each transported witness is then re-verified on the labeled
    semigroup by the suite itself.
    """
    if bounds is None:
        bounds = default_catalog()
    bounds = tuple(bounds)
    if budget is None:
        from .modact import DEFAULT_BUDGET

        budget = DEFAULT_BUDGET
    started = time.perf_counter()
    kwargs = {}
    if max_enum_order is not None:
        kwargs["max_order"] = max_enum_order
    semigroups: list[FiniteSemigroup] = []
    counts: dict[int, int] = {}
    for order in range(1, max_order + 1):
        group = list(enumerate_semigroups(order, dedup=dedup, **kwargs))
        counts[order] = len(group)
        semigroups.extend(group)
    # one primitive search per isomorphism class
    perms: list[tuple] = []
    canon_tables: list[tuple] = []
    for sg in semigroups:
        canon, perm = canonical_form_with_perm(sg.table)
        canon_tables.append(canon)
        perms.append(perm)
    unique = sorted(set(canon_tables))
    work = [(t, bounds, budget) for t in unique]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            searched = dict(pool.map(_search_canon, work))
    else:
        searched = dict(_search_canon(w) for w in work)
    checked = {name: 0 for name in SUITE_NAMES}
    passed = {name: 0 for name in SUITE_NAMES}
    violations: list[str] = []
    for sg, canon, perm in zip(semigroups, canon_tables, perms):
        report = transport_report(sg, searched[canon], perm)
        analysis = analyze_semigroup(sg, bounds, budget, prim_report=report)
        for name, ok in analysis.suite.items():
            checked[name] += 1
            if ok:
                passed[name] += 1
            elif len(violations) < 50:
                violations.append(f"order {sg.order} table {sg.table}: {name}")
    return SweepReport(
        max_order=max_order,
        dedup=dedup,
        bounds=bounds,
        budget=budget,
        counts_by_order=counts,
        checked=checked,
        passed=passed,
        violations=violations,
        r15=r15_formula_comparison(),
        elapsed=time.perf_counter() - started,
    )
