"""Command line front end: structure, spectrum and verify subcommands.

Exit codes: 0 success (degenerate parameters are flagged, not failed),
1 a mismatch on a non-degenerate instance, 2 invalid parameters,
3 group order above the budget.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import closed_forms as cf
from .errors import BudgetExceeded, InvalidParams
from .graphs import (Variant, centralizer_graph, clique_decomposition, multipartite_decomposition,
                     claimed_structure)
from .groups import PARAM_NAMES, Family, GroupSpec, build_group
from .serialize import document, error_to_dict, report_to_dict, spec_to_dict, spectrum_to_dict
from .spectra import MatrixKind, spectrum_of
from .verifier import (ALL_KINDS, ALL_VARIANTS, InstanceError, VerificationReport, budget_from_env,
                       known_degeneracy, q_independence, sweep)

FAMILY_ALIASES = {
    "quaternion": Family.GeneralizedQuaternion, "q": Family.GeneralizedQuaternion,
    "dihedral": Family.Dihedral, "d": Family.Dihedral,
    "quasidihedral": Family.Quasidihedral, "qd": Family.Quasidihedral,
    "metacyclic": Family.Metacyclic, "m": Family.Metacyclic,
    "psl": Family.ProjectiveSpecialLinear,
}
KIND_ALIASES = {
    "adjacency": MatrixKind.Adjacency, "a": MatrixKind.Adjacency,
    "laplacian": MatrixKind.Laplacian, "l": MatrixKind.Laplacian,
    "signless": MatrixKind.SignlessLaplacian, "signless_laplacian": MatrixKind.SignlessLaplacian,
    "signless-laplacian": MatrixKind.SignlessLaplacian, "q": MatrixKind.SignlessLaplacian,
}
VARIANT_ALIASES = {"centralizer": Variant.Centralizer, "cocentralizer": Variant.CoCentralizer,
                   "co-centralizer": Variant.CoCentralizer}


def parse_range(text: str) -> list[int]:
    """'5' -> [5]; '3..7' -> [3, 4, 5, 6, 7]; '3,5,9' -> [3, 5, 9]."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            a, b = int(lo), int(hi)
            if a > b:
                raise argparse.ArgumentTypeError(f"empty range {piece!r}")
            out.extend(range(a, b + 1))
        else:
            out.append(int(piece))
    return out


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=sorted(FAMILY_ALIASES))
    for name in ("n", "p", "q", "k"):
        p.add_argument(f"--{name}", type=parse_range, help=f"family parameter {name} (a..b allowed for verify)")
    p.add_argument("--budget", type=int, default=None, help="maximum group order (default $SPECTRA_BUDGET or 100000)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="centspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("structure", help="computed vs claimed clique structure")
    _add_common(s)
    s.add_argument("--variant", default="centralizer", choices=sorted(VARIANT_ALIASES))

    sp = sub.add_parser("spectrum", help="one exact spectrum from the oracle or the closed form")
    _add_common(sp)
    sp.add_argument("--variant", default="centralizer", choices=sorted(VARIANT_ALIASES))
    sp.add_argument("--kind", default="adjacency", choices=sorted(KIND_ALIASES))
    sp.add_argument("--source", default="oracle", choices=["oracle", "closed-form"])
    sp.add_argument("--approx", action="store_true", help="add floating approximations of residual roots")

    v = sub.add_parser("verify", help="full verification for one instance or a parameter sweep")
    _add_common(v)
    v.add_argument("--variant", default="all", choices=["all"] + sorted(VARIANT_ALIASES))
    v.add_argument("--kind", default="all", choices=["all"] + sorted(KIND_ALIASES))
    v.add_argument("--format", default="json", choices=["json", "csv"])
    v.add_argument("--approx", action="store_true")
    return parser


def _ranges(args: argparse.Namespace, family: Family) -> dict[str, list[int]]:
    out = {}
    for name in PARAM_NAMES[family]:
        values = getattr(args, name)
        if values is None:
            raise InvalidParams(f"--{name} is required for family {family.value}")
        out[name] = values
    return out


def _single_spec(args: argparse.Namespace) -> GroupSpec:
    family = FAMILY_ALIASES[args.family]
    ranges = _ranges(args, family)
    if any(len(v) != 1 for v in ranges.values()):
        raise InvalidParams(f"{args.command} takes single parameter values, not ranges")
    return GroupSpec(family, tuple(v[0] for v in ranges.values()))


def _check_budget(spec: GroupSpec, budget: int) -> None:
    if spec.expected_order > budget:
        raise BudgetExceeded(f"{spec} has order {spec.expected_order} > budget {budget}")


def cmd_structure(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    spec = _single_spec(args)
    _check_budget(spec, args.budget)
    variant = VARIANT_ALIASES[args.variant]
    graph = centralizer_graph(build_group(spec))
    if variant is Variant.Centralizer:
        computed, reading = clique_decomposition(graph), "clique_union"
    else:
        computed, reading = multipartite_decomposition(graph.complement()), "complete_multipartite"
    claimed = claimed_structure(spec, variant)
    payload = {
        "spec": spec_to_dict(spec),
        "variant": variant.value,
        "reading": reading,
        "computed": list(computed.parts),
        "claimed": list(claimed.parts),
        "match": computed == claimed,
        "degenerate": known_degeneracy(spec),
    }
    return payload, 0


def cmd_spectrum(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    spec = _single_spec(args)
    _check_budget(spec, args.budget)
    variant = VARIANT_ALIASES[args.variant]
    kind = KIND_ALIASES[args.kind]
    if args.source == "oracle":
        graph = centralizer_graph(build_group(spec))
        if variant is Variant.CoCentralizer:
            graph = graph.complement()
        s = spectrum_of(graph, kind)
    else:
        s = cf.family_spectrum(spec, variant, kind)
    payload = {
        "spec": spec_to_dict(spec),
        "variant": variant.value,
        "kind": kind.value,
        "source": args.source,
        "spectrum": spectrum_to_dict(s, approx=args.approx),
    }
    return payload, 0


def _csv_rows(results: Sequence[VerificationReport | InstanceError]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "params", "variant", "kind", "oracle", "closed_form", "spectrum_match",
                "structure_match", "integrality_rule", "integrality_claimed", "integrality_computed",
                "integrality_match", "degenerate", "error"])
    for r in results:
        if isinstance(r, InstanceError):
            params = " ".join(map(str, r.params))
            w.writerow([r.family.value, params, "", "", "", "", "", "", "", "", "", "", "", r.error])
            continue
        params = " ".join(f"{k}={v}" for k, v in r.spec.param_dict.items())
        integ = {(e.variant, e.kind): e for e in r.integrality}
        for e in r.spectra:
            ie = integ[(e.variant, e.kind)]
            w.writerow([r.spec.family.value, params, e.variant.value, e.kind.value, str(e.oracle),
                        str(e.closed_form), e.match, r.structure.match, ie.rule, ie.claimed,
                        ie.computed, ie.match, r.degenerate, ""])
    return buf.getvalue()


def cmd_verify(args: argparse.Namespace) -> tuple[dict[str, Any] | str, int]:
    family = FAMILY_ALIASES[args.family]
    ranges = _ranges(args, family)
    variants = ALL_VARIANTS if args.variant == "all" else (VARIANT_ALIASES[args.variant],)
    kinds = ALL_KINDS if args.kind == "all" else (KIND_ALIASES[args.kind],)
    results = sweep(family, ranges, variants=variants, kinds=kinds, budget=args.budget)
    reports = [r for r in results if isinstance(r, VerificationReport)]
    errors = [r for r in results if isinstance(r, InstanceError)]

    if len(results) == 1 and errors:
        # a single instance that could not run maps onto the error exit codes
        err = errors[0]
        raise (BudgetExceeded if err.kind == "BudgetExceeded" else InvalidParams)(err.error)

    mismatches = [str(r.spec) for r in reports if r.genuine_mismatch]
    code = 1 if mismatches else 0
    if args.format == "csv":
        return _csv_rows(results), code

    summary: dict[str, Any] = {
        "instances": len(results),
        "all_match": not mismatches and not errors and all(r.all_match for r in reports),
        "genuine_mismatches": mismatches,
        "degenerate": [{"spec": str(r.spec), "explanation": r.explanation} for r in reports if r.degenerate],
        "errors": [error_to_dict(e) for e in errors],
    }
    if family is Family.Metacyclic:
        qi = q_independence(reports)
        summary["q_independence"] = {str(p): same for p, same in qi.items()}
        summary["notes"] = [f"p={p}: reports {'identical' if same else 'DIFFER'} across q"
                            for p, same in qi.items()]
    payload = {"summary": summary, "reports": [report_to_dict(r, approx=args.approx) for r in reports]}
    return payload, code


COMMANDS = {"structure": cmd_structure, "spectrum": cmd_spectrum, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = budget_from_env()
    echo = {k: v for k, v in vars(args).items() if v is not None}
    try:
        payload, code = COMMANDS[args.command](args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        json.dump(document(echo, payload), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
