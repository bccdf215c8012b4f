"""Operation registry shared by the HTTP app and the CLI.

Each operation pairs a request model with a handler returning a JSON-ready
report dict and a `passed` predicate on that report.  The CLI dispatches
in-process through this table; the FastAPI app mounts one POST route per
entry, so both front ends stay in lockstep by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .. import arithmetic, covers, curve, presentations, zmod
from ..fields import PrimeField
from . import schemas


@dataclass(frozen=True)
class Operation:
    name: str
    path: str
    request_model: type
    handler: Callable
    passed: Callable[[dict], bool]
    summary: str


def _always(report: dict) -> bool:
    return True


def _conclusion(expected: str) -> Callable[[dict], bool]:
    def check(report: dict) -> bool:
        return report.get("conclusion") == expected

    return check


def handle_genus(req: schemas.GenusRequest) -> dict:
    return {"g": req.g, "k": req.k, "cover_genus": arithmetic.cover_genus(req.g, req.k)}


def handle_base_genus(req: schemas.BaseGenusRequest) -> dict:
    g = arithmetic.base_genus_from_cover(req.k, req.cover_genus)
    return {"k": req.k, "cover_genus": req.cover_genus, "base_genus": g, "found": g is not None}


def handle_hurwitz(req: schemas.HurwitzRequest) -> dict:
    return {"cover_genus": req.cover_genus, "bound": arithmetic.hurwitz_bound(req.cover_genus)}


def handle_aut_order(req: schemas.AutOrderRequest) -> dict:
    return arithmetic.aut_order(req.base_aut, req.g, req.k).to_dict()


def handle_sylow(req: schemas.SylowRequest) -> dict:
    return arithmetic.sylow_uniqueness_certificate(req.g, req.p, req.r).to_dict()


def handle_hyperelliptic(req: schemas.HyperellipticRequest) -> dict:
    return arithmetic.hyperelliptic_exclusion(req.g, req.k).to_dict()


def handle_homology(req: schemas.HomologyRequest) -> dict:
    pres = presentations.GroupPresentation.from_dict(req.presentation.model_dump())
    inv = presentations.homology_mod_k(pres, req.k)
    return {
        "presentation_label": pres.label,
        "generator_count": pres.generator_count,
        "k": req.k,
        "invariants": inv.to_dict(),
        "order": inv.order,
    }


def handle_chain_check(req: schemas.ChainCheckRequest) -> dict:
    return presentations.hyperelliptic_chain_check(req.g).to_dict()


def handle_teichmuller(req: schemas.TeichmullerRequest) -> dict:
    dim = arithmetic.teichmuller_dimension(req.genus, req.cone_count)
    return {"genus": req.genus, "cone_count": req.cone_count, "dimension": dim}


def handle_build_presentation(req: schemas.BuildPresentationRequest) -> dict:
    if req.kind == "surface":
        pres = presentations.surface_presentation(req.genus)
    else:
        pres = presentations.orbifold_presentation(
            req.genus, req.cone_orders, allow_triangular=req.allow_triangular
        )
    return pres.to_dict()


def _curve_from(req) -> curve.FermatCurve:
    return curve.FermatCurve(req.g, PrimeField(req.q), tuple(req.lambdas))


def handle_curve_verify(req: schemas.CurveRequest) -> dict:
    return curve.verify_curve(_curve_from(req), budget=req.budget).to_dict()


def handle_curve_points(req: schemas.CurveRequest) -> dict:
    model = _curve_from(req)
    points = curve.enumerate_points(model, budget=req.budget)
    return {"curve": model.to_dict(), "point_count": len(points), "points": [list(p) for p in points]}


def handle_fixed_points(req: schemas.CurveRequest) -> dict:
    return curve.fixed_point_classes(_curve_from(req), budget=req.budget).to_dict()


def handle_free_subgroup(req: schemas.CurveRequest) -> dict:
    return curve.free_index_two_subgroup(_curve_from(req), budget=req.budget).to_dict()


def handle_case_a(req: schemas.CaseARequest) -> dict:
    lams = tuple(Fraction(str(l)) for l in req.lambdas)
    report = curve.case_a_involution(
        req.g,
        lams,
        sign_choices=req.sign_choices,
        num_primes=req.num_primes,
        lower=req.lower,
        sample_count=req.samples,
        seed=req.seed,
        search_limit=req.search_limit,
    )
    return report.to_dict()


def handle_case_b(req: schemas.CaseBRequest) -> dict:
    report = curve.case_b_involution(
        req.g, tuple(req.lambdas), req.q, sample_count=req.samples, seed=req.seed
    )
    return report.to_dict()


def handle_kernel(req: schemas.KernelRequest) -> dict:
    rows = tuple(tuple(x % req.k for x in row) for row in req.theta)
    theta = zmod.ResidueMatrix(rows, req.k)
    kernel = covers.kernel_of_surjection(theta)
    n, m = len(rows), len(rows[0])
    return {
        "k": req.k,
        "target_rank": n,
        "source_rank": m,
        "kernel": kernel.to_dict(),
        "kernel_order": kernel.order,
        "order_complements_image": kernel.order * req.k ** n == req.k ** m,
    }


def handle_fiber_check(req: schemas.FiberCheckRequest) -> dict:
    return covers.fiber_product_check(req.g, req.k, budget=req.budget).to_dict()


def handle_gilman(req: schemas.GilmanRequest) -> dict:
    action = covers.gilman_action(req.p, req.r)
    out = action.to_dict()
    out["order_verified"] = True
    if req.k is not None:
        reduced = action.reduced(req.k)
        out["k"] = req.k
        out["reduced_rows"] = [list(row) for row in reduced.rows]
        out["order_mod_k"] = zmod.matrix_order(reduced)
    return out


def handle_closure(req: schemas.ClosureRequest) -> dict:
    action = covers.gilman_action(req.p, req.r).reduced(req.k)
    ambient = (req.p - 1) * (req.r - 2)
    kernel = zmod.subgroup_from_rows(
        tuple(tuple(x % req.k for x in row) for row in req.kernel_basis), ambient, req.k
    )
    report = covers.galois_closure(kernel, action, req.p, crosscheck_budget=req.crosscheck_budget)
    out = report.to_dict()
    out["r"] = req.r
    return out


def handle_s_values(req: schemas.SValuesRequest) -> dict:
    return covers.invariant_s_values(req.k, req.p, req.r, budget=req.budget).to_dict()


def handle_lift_exponent(req: schemas.LiftExponentRequest) -> dict:
    return covers.order_p_lift_exponent(req.k, req.p).to_dict()


OPERATIONS: dict[str, Operation] = {
    op.name: op
    for op in (
        Operation(
            "genus", "/genus", schemas.GenusRequest, handle_genus, _always,
            "Genus of the mod-k homology cover",
        ),
        Operation(
            "base-genus", "/base-genus", schemas.BaseGenusRequest, handle_base_genus,
            lambda r: r["found"],
            "Invert the cover genus formula",
        ),
        Operation(
            "hurwitz", "/hurwitz", schemas.HurwitzRequest, handle_hurwitz, _always,
            "Conformal automorphism bound 84(genus-1)",
        ),
        Operation(
            "aut-order", "/aut-order", schemas.AutOrderRequest, handle_aut_order,
            lambda r: r["forms_agree"],
            "Order of the lifted automorphism group",
        ),
        Operation(
            "sylow-cert", "/sylow-cert", schemas.SylowRequest, handle_sylow,
            _conclusion("unique"),
            "Sylow normality certificate",
        ),
        Operation(
            "hyperelliptic-cert", "/hyperelliptic-cert", schemas.HyperellipticRequest,
            handle_hyperelliptic, _conclusion("non-hyperelliptic"),
            "Rule out a hyperelliptic homology cover",
        ),
        Operation(
            "homology", "/homology", schemas.HomologyRequest, handle_homology, _always,
            "Mod-k homology of a finite presentation",
        ),
        Operation(
            "chain-check", "/chain-check", schemas.ChainCheckRequest, handle_chain_check,
            lambda r: r["passed"],
            "Index chain identity for the hyperelliptic orbifold",
        ),
        Operation(
            "teich-dim", "/teich-dim", schemas.TeichmullerRequest, handle_teichmuller, _always,
            "Deformation space dimension of a signature",
        ),
        Operation(
            "presentation", "/presentation", schemas.BuildPresentationRequest,
            handle_build_presentation, _always,
            "Emit a surface or orbifold presentation as JSON",
        ),
        Operation(
            "curve-verify", "/curve/verify", schemas.CurveRequest, handle_curve_verify,
            _conclusion("verified"),
            "Structural checks on the quadric curve model",
        ),
        Operation(
            "curve-points", "/curve/points", schemas.CurveRequest, handle_curve_points, _always,
            "Enumerate the rational points",
        ),
        Operation(
            "curve-fixed-points", "/curve/fixed-points", schemas.CurveRequest,
            handle_fixed_points, _conclusion("fixed-classes-verified"),
            "Sign classes with fixed points",
        ),
        Operation(
            "curve-free-subgroup", "/curve/free-subgroup", schemas.CurveRequest,
            handle_free_subgroup, _conclusion("unique-free-index-two"),
            "The unique free index-two sign subgroup",
        ),
        Operation(
            "curve-case-a", "/curve/case-a", schemas.CaseARequest, handle_case_a,
            _conclusion("fixed-point-exists"),
            "Fixed point of the case-A lift at splitting primes",
        ),
        Operation(
            "curve-case-b", "/curve/case-b", schemas.CaseBRequest, handle_case_b,
            _conclusion("no-involutive-lift"),
            "Case-B lift squares to a_2, not the identity",
        ),
        Operation(
            "cover-kernel", "/cover/kernel", schemas.KernelRequest, handle_kernel, _always,
            "Kernel subgroup of a surjection Z_k^m -> Z_k^n",
        ),
        Operation(
            "cover-fiber-check", "/cover/fiber-check", schemas.FiberCheckRequest,
            handle_fiber_check, _conclusion("fiber-product-verified"),
            "Fiber product structure of the coordinate quotients",
        ),
        Operation(
            "cover-gilman", "/cover/gilman", schemas.GilmanRequest, handle_gilman, _always,
            "Cone rotation matrix on orbifold homology",
        ),
        Operation(
            "cover-closure", "/cover/closure", schemas.ClosureRequest, handle_closure,
            lambda r: r["constraint_ok"] and r["cross_check"] in ("confirmed", "skipped-budget"),
            "Deck group of the Galois closure",
        ),
        Operation(
            "cover-s-values", "/cover/s-values", schemas.SValuesRequest, handle_s_values,
            lambda r: r["congruence_ok"],
            "Ranks of elementary invariant subgroups",
        ),
        Operation(
            "cover-lift-exponent", "/cover/lift-exponent", schemas.LiftExponentRequest,
            handle_lift_exponent, _always,
            "Multiplier giving order-p preimage elements",
        ),
    )
}
