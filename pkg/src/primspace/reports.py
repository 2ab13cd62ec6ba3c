"""Report assembly: JSON (schema-versioned) and text renderings.

All JSON payloads carry "schema": 1.  Ideals serialize as sorted element
index arrays, witnesses as {"p", "k", "rho"}.  Output is deterministic
for fixed inputs and flags, except for the "timings" block.
"""

from __future__ import annotations

from .core import elements_of
from .checks import FINITE_SCALE_SUITES, SemigroupAnalysis, SweepReport
from .tableio import SCHEMA_VERSION, table_to_json, witness_to_json
from .topology import ContinuityReport, StructureSpace


def _ideal_json(q) -> list[int]:
    return elements_of(q.carrier if hasattr(q, "carrier") else q)


def _space_json(analysis: SemigroupAnalysis) -> dict:
    space = analysis.space
    irr = analysis.irreducibility
    point_index = {pm: i for i, pm in enumerate(space.point_ideals)}
    out = {
        "points": [elements_of(pm) for pm in space.point_ideals],
        "closed_set_count": analysis.closed_set_count,
        "t0": analysis.axioms.t0_ok,
        "finite_scale_note": analysis.axioms.note,
        "chain_count": analysis.axioms.chain_count,
    }
    if irr is not None:
        out["components"] = [
            sorted(point_index[pm] for pm in _points_of(space, comp))
            for comp in irr.components
        ]
        out["minimal_points"] = elements_of(irr.minimal_points)
        out["generic_points"] = list(irr.generic_points)
        out["irreducible_count"] = len(irr.irreducibles)
    else:
        out["irreducibility_error"] = analysis.irreducibility_error
    return out


def _points_of(space: StructureSpace, pts_mask: int):
    return [space.point_ideals[i] for i in elements_of(pts_mask)]


def analysis_to_json(analysis: SemigroupAnalysis) -> dict:
    sg = analysis.semigroup
    prim = analysis.prim
    prim_ideal_masks = {pw.ideal.carrier for pw in prim.points}
    prime_masks = {q.carrier for q in analysis.primes}
    # internal consistency: witnessed points must be among the primes
    assert prim_ideal_masks <= prime_masks
    return {
        "schema": SCHEMA_VERSION,
        "semigroup": {**table_to_json(sg), "identity": sg.identity},
        "ideals": [_ideal_json(q) for q in analysis.ideals],
        "primes": [_ideal_json(q) for q in analysis.primes],
        "maximals": [_ideal_json(q) for q in analysis.maximals],
        "prim": {
            "bounds": [{"p": s.p, "k": s.k} for s in prim.bounds],
            "budget": prim.budget,
            "points": [
                {
                    "ideal": _ideal_json(pw.ideal),
                    "witness": witness_to_json(pw.witness),
                }
                for pw in prim.points
            ],
            "unwitnessed_primes": [
                _ideal_json(q) for q in prim.unwitnessed_primes
            ],
        },
        "space": _space_json(analysis),
        "checks": dict(analysis.suite),
        "closed_form_comparison": {
            "generators_checked": analysis.xsx_generators_checked,
            "xsx_mismatch_count": analysis.xsx_mismatch_count,
        },
        "timings": dict(analysis.timings),
    }


def _fmt_set(mask_or_list) -> str:
    elems = (
        elements_of(mask_or_list)
        if isinstance(mask_or_list, int)
        else list(mask_or_list)
    )
    return "{" + ",".join(str(e) for e in elems) + "}"


def analysis_to_text(analysis: SemigroupAnalysis) -> str:
    sg = analysis.semigroup
    lines = []
    ident = "none" if sg.identity is None else str(sg.identity)
    lines.append(f"semigroup: order {sg.order}, identity {ident}")
    for q_name, qs in (
        ("proper two-sided ideals", analysis.ideals),
        ("prime ideals", analysis.primes),
        ("maximal ideals", analysis.maximals),
    ):
        shown = " ".join(_fmt_set(q.carrier) for q in qs) or "none"
        lines.append(f"{q_name} ({len(qs)}): {shown}")
    prim = analysis.prim
    bounds = " ".join(f"(p={s.p},k={s.k})" for s in prim.bounds)
    lines.append(f"primitive search bounds: {bounds}, budget {prim.budget}")
    lines.append(f"primitive ideals witnessed ({len(prim.points)}):")
    for pw in prim.points:
        w = pw.witness
        lines.append(
            f"  {_fmt_set(pw.ideal.carrier)}  p={w.space.p} k={w.space.k} "
            f"rho={[[list(r) for r in m] for m in w.rho]}"
        )
    unw = " ".join(_fmt_set(q.carrier) for q in prim.unwitnessed_primes)
    lines.append(f"unwitnessed primes: {unw or 'none'}")
    ax = analysis.axioms
    lines.append(
        f"structure space: {analysis.space.size} points, "
        f"{analysis.closed_set_count} closed sets, "
        f"T0 {'yes' if ax.t0_ok else 'NO'}"
    )
    irr = analysis.irreducibility
    if irr is not None:
        point_index = {
            pm: i for i, pm in enumerate(analysis.space.point_ideals)
        }
        comps = " ".join(
            _fmt_set(
                sorted(
                    point_index[pm] for pm in _points_of(analysis.space, c)
                )
            )
            for c in irr.components
        )
        lines.append(
            f"  components (point indices): {comps or 'none'}; "
            f"minimal points: {_fmt_set(irr.minimal_points)}"
        )
    else:
        lines.append(f"  irreducibility FAILED: {analysis.irreducibility_error}")
    lines.append(f"  {ax.note}")
    lines.append(
        f"  finite-scale surrogates: finite intersection ok, "
        f"{ax.chain_count} maximal chains stabilize"
    )
    n_pass = sum(1 for v in analysis.suite.values() if v)
    lines.append(f"proposition checks: {n_pass}/{len(analysis.suite)} passed")
    for name, ok in analysis.suite.items():
        note = " [finite-scale]" if name in FINITE_SCALE_SUITES else ""
        lines.append(f"  {'pass' if ok else 'FAIL'}  {name}{note}")
    lines.append(
        f"closed-form comparison: {analysis.xsx_mismatch_count} XSX "
        f"mismatches over {analysis.xsx_generators_checked} generators"
    )
    return "\n".join(lines) + "\n"


def sweep_to_json(report: SweepReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "max_order": report.max_order,
        "dedup": report.dedup,
        "bounds": [{"p": s.p, "k": s.k} for s in report.bounds],
        "budget": report.budget,
        "semigroup_counts": {str(k): v for k, v in report.counts_by_order.items()},
        "propositions": {
            name: {"checked": report.checked[name], "passed": report.passed[name]}
            for name in report.checked
        },
        "finite_scale_suites": list(FINITE_SCALE_SUITES),
        "violations": list(report.violations),
        "r15_formula_comparison": report.r15,
        "elapsed_seconds": report.elapsed,
    }


def sweep_to_text(report: SweepReport) -> str:
    lines = []
    counts = " ".join(
        f"order {k}: {v}" for k, v in sorted(report.counts_by_order.items())
    )
    lines.append(
        f"checked semigroups up to order {report.max_order} "
        f"(dedup={report.dedup}): {counts}"
    )
    bounds = " ".join(f"(p={s.p},k={s.k})" for s in report.bounds)
    lines.append(f"bounds: {bounds}, budget {report.budget}")
    for name in report.checked:
        note = " [finite-scale]" if name in FINITE_SCALE_SUITES else ""
        ok = report.passed[name] == report.checked[name]
        lines.append(
            f"  {'pass' if ok else 'FAIL'}  {name}: "
            f"{report.passed[name]}/{report.checked[name]}{note}"
        )
    r15 = report.r15
    gx = r15["generator_x"]
    lines.append(
        "R15 formula comparison: "
        f"SXS union matches fixpoint: {r15['sxs_form_matches_fixpoint']}; "
        f"XSX union falls short on {r15['xsx_mismatch_count']} of "
        f"{r15['order']} singleton generators"
    )
    lines.append(
        f"  generator x: fixpoint {gx['fixpoint_size']} elements, "
        f"XSX union {gx['xsx_union_size']}, missing {gx['missing']}"
    )
    if report.violations:
        lines.append("violations:")
        for v in report.violations:
            lines.append(f"  {v}")
    else:
        lines.append("no violations")
    lines.append(f"elapsed: {report.elapsed:.2f}s")
    return "\n".join(lines) + "\n"


def continuity_to_json(report: ContinuityReport, hom) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "source": table_to_json(hom.source),
        "target": table_to_json(hom.target),
        "map": list(hom.map),
        "status": report.status,
        "points": [
            {
                "ideal": elements_of(r.ideal),
                "status": r.status,
                "transported": witness_to_json(r.transported),
            }
            for r in report.results
        ],
        "non_transporting": list(report.non_transporting),
        "preimages_closed": report.preimages_closed,
        "hull_identity": report.hull_identity,
    }


def continuity_to_text(report: ContinuityReport, hom) -> str:
    lines = [
        f"homomorphism: order {hom.source.order} -> order {hom.target.order}, "
        f"map {list(hom.map)}",
        f"status: {report.status}",
    ]
    for i, r in enumerate(report.results):
        lines.append(
            f"  target point {i}: preimage {_fmt_set(r.ideal)}, {r.status}"
        )
    if report.non_transporting:
        lines.append(f"non-transporting points: {list(report.non_transporting)}")
    if report.preimages_closed is not None:
        lines.append(f"closed-set preimages closed: {report.preimages_closed}")
        lines.append(f"hull identity: {report.hull_identity}")
    return "\n".join(lines) + "\n"
