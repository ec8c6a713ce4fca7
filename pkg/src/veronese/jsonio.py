"""JSON encodings for the report and certificate types.

Every document carries schema_version; variables and index tuples are
encoded as arrays of ints, monomials as [variable, exponent] pair
arrays, binomials as {plus, minus, text}.
"""

from __future__ import annotations

from typing import Optional

from .cohomology import CohomologyTable
from .combinatorics import (
    VeroneseParams,
    exponent_vectors,
    index_tuples,
    integer_ring,
)
from .geometry import FiberReport, JacobianReport
from .gluing import FreeNode, GluedNode, GluingTree, GluingWitness
from .polys import Monomial, Poly
from .sci import FrobeniusReport, PointSetReport, SciCertificate
from .toric import RewriteCertificate, RewriteStep, TypeStarBinomial

SCHEMA_VERSION = 1


def params_obj(params: VeroneseParams) -> dict:
    return {"n": params.n, "p": params.p, "h": params.h, "q": params.q}


def params_from_obj(obj: dict) -> VeroneseParams:
    return VeroneseParams(int(obj["n"]), int(obj["p"]), int(obj["h"]))


def monomial_obj(m: Monomial) -> list:
    return [[list(v), e] for v, e in m.items()]


def monomial_from_obj(ring, obj) -> Monomial:
    return ring.monomial([(tuple(v), int(e)) for v, e in obj])


def binomial_obj(g: Poly) -> dict:
    # coefficient 1 is a plus term; any other unit (-1 over the integers,
    # r-1 over a prime field) counts as minus.  Over F_2 both terms land
    # in plus, which is the honest reading there.
    plus, minus = [], []
    for m, c in g.terms().items():
        (plus if c == g.ring.field.one else minus).append(m)
    return {
        "plus": [monomial_obj(m) for m in plus],
        "minus": [monomial_obj(m) for m in minus],
        "text": g.text(),
    }


def binomial_from_obj(ring, obj) -> Poly:
    total = ring.zero()
    for m in obj["plus"]:
        total = total + monomial_from_obj(ring, m).as_poly()
    for m in obj["minus"]:
        total = total - monomial_from_obj(ring, m).as_poly()
    return total


def enumeration_obj(params: VeroneseParams) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(params),
        "cardinality": params.cardinality(),
        "elements": [
            {"tuple": list(t), "exponent": list(a)}
            for t, a in zip(index_tuples(params), exponent_vectors(params))
        ],
    }


def generators_obj(params: VeroneseParams, gens) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(params),
        "count": len(gens),
        "binomials": [binomial_obj(g) for g in gens],
    }


def certificate_obj(cert: SciCertificate) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(cert.params),
        "count": len(cert.binomials),
        "binomials": [binomial_obj(g) for g in cert.binomials],
    }


def type_star_from_obj(obj: dict) -> TypeStarBinomial:
    params = params_from_obj(obj["params"] if "params" in obj else obj)
    blocks = tuple(tuple(b) for b in obj["blocks"])
    sigma = tuple(int(x) for x in obj["sigma"])
    return TypeStarBinomial(params, blocks, sigma)


def rewrite_obj(cert: RewriteCertificate, binomial: Optional[Poly] = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(cert.params),
        "input": binomial_obj(binomial) if binomial is not None else None,
        "steps": [
            {
                "quadratic": binomial_obj(st.quadratic),
                "cofactor": monomial_obj(st.cofactor),
                "sign": st.sign,
            }
            for st in cert.steps
        ],
    }


def rewrite_from_obj(obj: dict) -> RewriteCertificate:
    params = params_from_obj(obj["params"])
    ring = integer_ring(params)
    steps = tuple(
        RewriteStep(
            binomial_from_obj(ring, st["quadratic"]),
            monomial_from_obj(ring, st["cofactor"]),
            int(st["sign"]),
        )
        for st in obj["steps"]
    )
    return RewriteCertificate(params, steps)


def frobenius_obj(report: FrobeniusReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(report.params),
        "k_max": report.k_max,
        "success": report.success,
        "witnesses": [
            {"generator": binomial_obj(g), "k": k} for g, k in report.entries
        ],
    }


def points_obj(report: PointSetReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(report.params),
        "r": report.r,
        "set": report.set_label,
        "mode": report.mode,
        "count_V": report.count_image,
        "count_zero_set": report.count_zero_set,
        "witness": list(report.witness) if report.witness is not None else None,
    }


def witness_obj(w: GluingWitness) -> dict:
    return {
        "alpha": list(w.alpha),
        "s": w.s,
        "rep1": list(w.rep1),
        "rep2": list(w.rep2),
    }


def tree_obj(tree: GluingTree) -> dict:
    if isinstance(tree, FreeNode):
        return {
            "type": "free",
            "generators": [list(g) for g in tree.gens.gens],
        }
    assert isinstance(tree, GluedNode)
    return {
        "type": "glued",
        "generators": [list(g) for g in tree.gens.gens],
        "witness": witness_obj(tree.witness),
        "left": tree_obj(tree.left),
        "right": tree_obj(tree.right),
    }


def gluing_obj(params: VeroneseParams, tree: GluingTree) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(params),
        "tree": tree_obj(tree),
    }


def jacobian_obj(report: JacobianReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(report.params),
        "r": report.r,
        "point": list(report.point),
        "rank": report.rank,
        "triangular_ok": report.triangular_ok,
        "diagonal_value": report.diagonal_value,
        "permutation": list(report.permutation),
    }


def fiber_obj(report: FiberReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": params_obj(report.params),
        "r": report.r,
        "u": list(report.u),
        "fiber": [list(v) for v in report.fiber],
        "orbit": [list(v) for v in report.orbit],
        "roots_of_unity": list(report.roots_of_unity),
        "equal": report.equal,
    }


def cohomology_obj(table: CohomologyTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "q": table.action.q,
        "a": table.action.a,
        "orders": {str(i): o for i, o in table.as_dict().items()},
        "difference_element": table.difference,
        "norm_element": table.norm,
    }
