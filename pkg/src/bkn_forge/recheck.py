"""Independent re-verification of the certificates embedded in a JSON report.

Only the exact-lattice and cone modules are used: witness matrices are
checked against the stored root data directly, and cone-equality witnesses
are recombined exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .cones import ConeEqualityCertificate, RationalCone, cone_from_generators, cones_equal, dual_cone
from .lattice import IntMatrix, dot, is_unimodular, quotient_structure
from .serialize import InputError, decode_fraction, decode_matrix, decode_vector


@dataclass(frozen=True)
class RecheckItem:
    name: str
    ok: bool
    detail: str = ""


def _datum(obj: Any, loc: str) -> tuple[int, list[tuple], list[tuple]]:
    if not isinstance(obj, dict) or "rank" not in obj:
        raise InputError(loc, "expected a root datum")
    r = obj["rank"]
    roots = [decode_vector(v, f"{loc}.roots[{i}]", r) for i, v in enumerate(obj["roots"])]
    coroots = [decode_vector(v, f"{loc}.coroots[{i}]", r) for i, v in enumerate(obj["coroots"])]
    return r, roots, coroots


def iso_holds(M: IntMatrix, d1, d2) -> bool:
    """M carries roots to roots bijectively and M^T carries matching coroots back."""
    r1, roots1, coroots1 = d1
    r2, roots2, coroots2 = d2
    if M.rows != r2 or M.cols != r1 or r1 != r2 or not is_unimodular(M):
        return False
    if len(roots1) != len(roots2):
        return False
    index = {tuple(a): i for i, a in enumerate(roots2)}
    MT = M.T
    seen = set()
    for a, c in zip(roots1, coroots1):
        j = index.get(M.apply(a))
        if j is None or j in seen or MT.apply(coroots2[j]) != tuple(c):
            return False
        seen.add(j)
    return True


def _cone(gens: Any, rank: int, loc: str) -> RationalCone:
    return RationalCone(rank, tuple(decode_vector(g, f"{loc}[{i}]", rank) for i, g in enumerate(gens)))


def _recheck_cone_certificate(cert: dict, A: RationalCone, B: RationalCone) -> bool:
    def pairs(key):
        return tuple((decode_vector(p["target"], f"$.{key}"),
                      tuple(decode_fraction(x, f"$.{key}") for x in p["coefficients"])) for p in cert[key])
    return ConeEqualityCertificate(pairs("forward"), pairs("backward")).check(A, B)


def recheck_report(rep: dict) -> list[RecheckItem]:
    out: list[RecheckItem] = []
    certs = rep.get("certificates", {})
    bkn = certs.get("bkn")
    if bkn is not None:
        h = _datum(bkn["h_rho"], "$.certificates.bkn.h_rho")
        hd = _datum(bkn["h_rho_dual"], "$.certificates.bkn.h_rho_dual")
        out.append(RecheckItem("h_rho_dual_is_dual", h[0] == hd[0] and h[1] == hd[2] and h[2] == hd[1]))
        weights = [decode_vector(w["weight"], "$.weights") for w in bkn["rho_fp_weights"]]
        out.append(RecheckItem("rho_fp_kernel_trivial", quotient_structure(hd[0], weights).is_trivial))
        cov = decode_vector(bkn["d_fp_covector"], "$.d_fp_covector")
        out.append(RecheckItem("scalar_central_cocharacter", all(dot(w, cov) == 1 for w in weights)))
        pi1 = quotient_structure(h[0], h[2]) if h[2] else None
        out.append(RecheckItem("derived_simply_connected", pi1 is None or not pi1.torsion))
        d = decode_vector(bkn["d_fp"], "$.d_fp")
        out.append(RecheckItem("d_fp_kills_coroots", all(dot(d, c) == 0 for c in h[2])))
        bkn_data = (h, hd)
    else:
        bkn_data = None

    cls = certs.get("classification", {})
    for key in ("product_witness", "h_rho_witness", "h_rho_isomorphism"):
        if key in cls and bkn_data:
            M = decode_matrix(cls[key]["matrix"], f"$.classification.{key}.matrix")
            tgt = _datum(cls[key]["target"], f"$.classification.{key}.target")
            out.append(RecheckItem(key, iso_holds(M, bkn_data[0], tgt)))
    if "quotient_presentation" in cls and bkn_data:
        qp = cls["quotient_presentation"]
        qd = _datum(qp["datum"], "$.classification.quotient_presentation.datum")
        M = decode_matrix(qp["comparison"], "$.classification.quotient_presentation.comparison")
        out.append(RecheckItem("quotient_presentation", iso_holds(M, bkn_data[1], qd)))
        if "dual_isomorphism" in cls:
            M2 = decode_matrix(cls["dual_isomorphism"]["matrix"], "$.dual_isomorphism.matrix")
            tgt = _datum(cls["dual_isomorphism"]["target"], "$.dual_isomorphism.target")
            out.append(RecheckItem("dual_isomorphism", iso_holds(M2, qd, tgt)))

    mon = certs.get("monoids")
    if mon is not None and bkn_data:
        rank = bkn_data[0][0]
        xl = _cone(mon["xi_lambda"], rank, "$.monoids.xi_lambda")
        xrd = _cone(mon["xi_rho_dual"], rank, "$.monoids.xi_rho_dual")
        xr = _cone(mon["xi_rho"], rank, "$.monoids.xi_rho")
        raw = [(1,) + (0,) * (rank - 1)] + [
            (int(g["pairing"]),) + decode_vector(g["weight"], "$.monoids.xi_lambda_raw") for g in mon["xi_lambda_raw"]]
        out.append(RecheckItem("xi_lambda_from_generators",
                               cone_from_generators(raw, rank).generators == xl.generators))
        weights = [decode_vector(w["weight"], "$.weights") for w in bkn["rho_fp_weights"]]
        out.append(RecheckItem("xi_rho_from_weights", cones_equal(cone_from_generators(weights, rank), xr).equal))
        out.append(RecheckItem("xi_rho_dual_nonnegative",
                               all(dot(u, v) >= 0 for u in xrd.generators for v in xr.generators)))
        out.append(RecheckItem("xi_rho_dual_is_full_dual",
                               cones_equal(dual_cone(cone_from_generators(xr.generators, rank)), xrd).equal))
        cmp = mon["comparison"]
        if cmp.get("equal"):
            out.append(RecheckItem("cone_equality_witnesses", _recheck_cone_certificate(cmp, xl, xrd)))
        else:
            out.append(RecheckItem("cone_equality_witnesses", False, "report records unequal cones"))
    return out
