"""JSON-ready dicts for the result types, and the inverse direction.

Eigenvalues and polynomial coefficients are written as decimal strings so
big integers survive any JSON reader; polynomials are constant term first.
"""
from __future__ import annotations

from typing import Any

from .graphs import CliqueDecomposition, Variant
from .groups import Family, GroupSpec, PARAM_NAMES
from .poly import IntPolynomial
from .spectra import ExactSpectrum, MatrixKind, approx_roots
from .verifier import (ConsistencyEntry, EigenbasisCheck, EigenbasisEntry, InstanceError,
                       IntegralityEntry, SpectrumEntry, StructureEntry, VerificationReport)

SCHEMA_VERSION = 1


def poly_to_list(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def poly_from_list(coeffs: list[str]) -> IntPolynomial:
    return IntPolynomial(tuple(int(c) for c in coeffs))


def spectrum_to_dict(s: ExactSpectrum, *, approx: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {
        "dimension": s.dimension,
        "integral": not s.residuals,
        "eigenvalues": [{"value": str(v), "multiplicity": m} for v, m in s.eigenvalues],
        "residuals": [],
    }
    for f, m in s.residuals:
        item: dict[str, Any] = {"coefficients": poly_to_list(f), "multiplicity": m, "text": str(f)}
        if approx:
            item["approximate_roots"] = {"approximate": True, "values": approx_roots(f)}
        out["residuals"].append(item)
    return out


def spectrum_from_dict(d: dict[str, Any]) -> ExactSpectrum:
    return ExactSpectrum.build(
        [(int(e["value"]), int(e["multiplicity"])) for e in d["eigenvalues"]],
        [(poly_from_list(r["coefficients"]), int(r["multiplicity"])) for r in d["residuals"]],
    )


def spec_to_dict(spec: GroupSpec) -> dict[str, Any]:
    return {"family": spec.family.value, "params": spec.param_dict}


def spec_from_dict(d: dict[str, Any]) -> GroupSpec:
    family = Family(d["family"])
    return GroupSpec(family, tuple(d["params"][n] for n in PARAM_NAMES[family]))


def report_to_dict(r: VerificationReport, *, approx: bool = False) -> dict[str, Any]:
    s = r.structure
    return {
        "spec": spec_to_dict(r.spec),
        "group_order": r.group_order,
        "all_match": r.all_match,
        "degenerate": r.degenerate,
        "explanation": r.explanation,
        "structure": {
            "computed": list(s.computed.parts),
            "claimed": list(s.claimed.parts),
            "match": s.match,
            "centralizer_count": s.centralizer_count,
            "implied_count": s.implied_count,
            "cardinalities": [list(c) for c in s.cardinalities],
        },
        "spectra": [
            {
                "variant": e.variant.value,
                "kind": e.kind.value,
                "match": e.match,
                "oracle": spectrum_to_dict(e.oracle, approx=approx),
                "closed_form": spectrum_to_dict(e.closed_form, approx=approx),
            }
            for e in r.spectra
        ],
        "integrality": [
            {"variant": e.variant.value, "kind": e.kind.value, "rule": e.rule,
             "claimed": e.claimed, "computed": e.computed, "match": e.match}
            for e in r.integrality
        ],
        "eigenbasis": [
            {"variant": e.variant.value, "verified": e.check.verified, "orthogonal": e.check.orthogonal,
             "count_ok": e.check.count_ok, "within_family_orthogonal": e.check.within_family_orthogonal,
             "on_claimed_structure": e.on_claimed_structure}
            for e in r.eigenbasis
        ],
        "consistency": {"trace_identities": r.consistency.trace_identities,
                        "complement_transfer": r.consistency.complement_transfer},
        "notes": list(r.notes),
    }


def report_from_dict(d: dict[str, Any]) -> VerificationReport:
    s = d["structure"]
    return VerificationReport(
        spec=spec_from_dict(d["spec"]),
        group_order=d["group_order"],
        structure=StructureEntry(CliqueDecomposition(tuple(s["computed"])),
                                 CliqueDecomposition(tuple(s["claimed"])),
                                 tuple(tuple(c) for c in s["cardinalities"])),
        spectra=tuple(
            SpectrumEntry(Variant(e["variant"]), MatrixKind(e["kind"]),
                          spectrum_from_dict(e["oracle"]), spectrum_from_dict(e["closed_form"]))
            for e in d["spectra"]
        ),
        integrality=tuple(
            IntegralityEntry(Variant(e["variant"]), MatrixKind(e["kind"]), e["rule"], e["claimed"], e["computed"])
            for e in d["integrality"]
        ),
        eigenbasis=tuple(
            EigenbasisEntry(Variant(e["variant"]),
                            EigenbasisCheck(e["verified"], e["orthogonal"], e["count_ok"],
                                            e["within_family_orthogonal"]),
                            e["on_claimed_structure"])
            for e in d["eigenbasis"]
        ),
        consistency=ConsistencyEntry(d["consistency"]["trace_identities"], d["consistency"]["complement_transfer"]),
        degenerate=d["degenerate"],
        explanation=d["explanation"],
        notes=tuple(d["notes"]),
    )


def error_to_dict(e: InstanceError) -> dict[str, Any]:
    return {"family": e.family.value, "params": list(e.params), "error": e.error, "type": e.kind}


def document(command: dict[str, Any], payload: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}
