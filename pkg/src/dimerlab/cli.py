"""Command-line front end: ``dimerlab <command> <input> [options]``.

Inputs are either a fixture name (looked up in ``$DIMERLAB_FIXTURES`` or the
bundled fixture directory) or a path to a JSON file.  Exit codes: 0 success,
1 validation or structural failure, 2 usage error or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable

from .center import (
    DEFAULT_DEG_BOUND,
    DEFAULT_POWER_BOUND,
    DimerModel,
    MonomialModel,
    StructuralError,
    center_report,
    krull_dimensions,
    nonnoetherian_witness,
    reduced_center_bound,
    verify_dimension_chain,
    witness_chain,
    witness_chain_dict,
)
from .contraction import Contraction, ContractionError, check_relations_preserved, contract, is_cyclic, tau_bar
from .matchings import perfect_matchings, simple_matchings
from .monomials import format_monomial
from .paths import DEFAULT_BUDGET, find_non_cancellative_pair, vertex_simple_cycles
from .tiling import DimerQuiver, TilingParseError, homology_class, tiling_from_dict, validate

COMMANDS = (
    "validate",
    "matchings",
    "cycles",
    "contract",
    "check-cyclic",
    "center-report",
    "krull",
    "locus",
    "witness",
    "chain",
)
MONOMIAL_COMMANDS = {"center-report", "krull", "locus", "witness", "chain"}


class UsageError(Exception):
    pass


def fixture_dir() -> Path:
    env = os.environ.get("DIMERLAB_FIXTURES")
    return Path(env) if env else Path(__file__).parent / "fixtures"


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


def load_input(ref: str) -> dict:
    path = Path(ref)
    if not path.is_file():
        path = fixture_dir() / f"{ref}.json"
        if not path.is_file():
            raise UsageError(f"unknown fixture or unreadable file: {ref} (fixtures: {', '.join(fixture_names())})")
    try:
        return json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def resolve_contraction(q: DimerQuiver, spec: str | None) -> Contraction:
    if spec is None or spec == "":
        return contract(q, [])
    if spec in q.contractions:
        return contract(q, q.contractions[spec])
    try:
        ids = [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError:
        names = ", ".join(sorted(q.contractions)) or "none"
        raise UsageError(f"unknown contraction {spec!r} (named sets: {names})") from None
    for aid in ids:
        if aid not in q.arrow_by_id:
            raise UsageError(f"unknown arrow id {aid} in --contract")
    return contract(q, ids)


def _mono(g, coords) -> str:
    return format_monomial(g, coords)


# -- command bodies: each returns (exit code, json document, text lines) ------


def cmd_validate(q: DimerQuiver, args) -> tuple[int, dict, list[str]]:
    report = validate(q)
    passed = sum(1 for c in report.checks if c.ok)
    lines = [f"{q.name}: {'ok' if report.ok else 'INVALID'} ({passed}/{len(report.checks)} checks)"]
    for c in report.failures():
        detail = f" {c.detail}" if c.detail else ""
        lines.append(f"  FAIL {c.name} [{c.location}]{detail}")
    return (0 if report.ok else 1), {"name": q.name, **report.to_dict()}, lines


def cmd_matchings(q: DimerQuiver, args) -> tuple[int, dict, list[str]]:
    perfect = perfect_matchings(q)
    simple = simple_matchings(q)
    doc = {
        "name": q.name,
        "perfect": [d.sorted_arrows() for d in perfect],
        "simple": [d.sorted_arrows() for d in simple],
    }
    lines = [f"{q.name}: {len(perfect)} perfect, {len(simple)} simple"]
    simple_sets = {d.arrows for d in simple}
    for d in perfect:
        labels = " ".join(q.label(a) for a in d.sorted_arrows())
        tag = " simple" if d.arrows in simple_sets else ""
        lines.append(f"  {d.sorted_arrows()} {labels}{tag}")
    return 0, doc, lines


def cmd_cycles(q: DimerQuiver, args) -> tuple[int, dict, list[str]]:
    simple = simple_matchings(q)
    cycles = []
    lines = [f"{q.name}: vertex-simple cycles"]
    for p in vertex_simple_cycles(q):
        entry = {
            "base": p.base,
            "arrows": list(p.arrows),
            "homology": list(homology_class(q, p)),
            "tau": list(tau_bar(q, p, simple)),
        }
        cycles.append(entry)
        labels = " ".join(q.label(a) for a in p.arrows)
        lines.append(f"  at {p.base}: {labels}  homology {tuple(entry['homology'])}  tau {tuple(entry['tau'])}")
    verdict = find_non_cancellative_pair(q, args.len_bound, args.budget)
    lines.append(f"cancellativity: {verdict.status}")
    if verdict.witness is not None:
        lines.append(f"  witness: {json.dumps(verdict.witness, sort_keys=True)}")
    return 0, {"name": q.name, "cycles": cycles, "cancellativity": verdict.to_dict()}, lines


def cmd_contract(q: DimerQuiver, args) -> tuple[int, dict, list[str]]:
    c = resolve_contraction(q, args.contract)
    relations = check_relations_preserved(c, args.budget)
    doc = {
        "source": q.name,
        "contracted_arrows": sorted(c.contracted_arrows),
        "vertex_map": list(c.vertex_map),
        "arrow_map": {str(k): v for k, v in sorted(c.arrow_map.items())},
        "target": c.target.to_dict(),
        "relations": relations.to_dict(),
    }
    lines = [
        f"{q.name}: contract {sorted(c.contracted_arrows)}",
        f"  target: {c.target.vertices} vertices, {len(c.target.arrows)} arrows, {len(c.target.faces)} faces",
        f"  vertex map: {list(c.vertex_map)}",
        f"  relations preserved: {relations.ok}",
    ]
    return 0, doc, lines


def cmd_check_cyclic(q: DimerQuiver, args) -> tuple[int, dict, list[str]]:
    c = resolve_contraction(q, args.contract)
    verdict = is_cyclic(c, args.len_bound, args.budget)
    doc = {"source": q.name, "contracted_arrows": sorted(c.contracted_arrows), **verdict.to_dict()}
    lines = [f"{q.name}: {verdict.verdict}"]
    if "reason" in verdict.evidence:
        lines.append(f"  reason: {verdict.evidence['reason']}")
    if "witness_generator" in verdict.evidence:
        g = verdict.evidence["witness_generator"]
        lines.append(f"  witness: {_mono(g, c.coords)} on the {verdict.evidence['witness_side']} side")
    return 0, doc, lines


def _model(doc: dict, q: DimerQuiver | None, args):
    if q is None:
        return MonomialModel.from_dict(doc), None
    c = resolve_contraction(q, args.contract)
    return DimerModel(c, args.len_bound_center), c


def cmd_center_report(doc: dict, q: DimerQuiver | None, args) -> tuple[int, dict, list[str]]:
    model, c = _model(doc, q, args)
    cyclic = None
    if c is not None and not c.is_identity:
        cyclic = is_cyclic(c, args.len_bound, args.budget).to_dict()
    report = center_report(model, args.deg_bound, args.power_bound, cyclic)
    out = report.to_dict()
    coords = report.coords
    lines = [
        f"{report.name}: center report ({out['claims']['R_trunc']})",
        f"  coords: {' '.join(coords)}",
        f"  S generators: {', '.join(_mono(g, coords) for g in report.S.gens)}",
        f"  sigma: {_mono(report.sigma, coords)}",
        f"  R_trunc: {len(out['R_trunc'])} monomials",
        f"  Zhat_trunc = R_trunc: {out['Zhat_equals_R']}",
        f"  dimS {report.dims.dimS}, dimR_est {report.dims.dimR_est}, frac_equal {report.dims.frac_equal}",
    ]
    if report.witness is None:
        lines.append("  no nonnoetherian witness in window")
    else:
        lines.append(f"  witness h = {_mono(report.witness.h, coords)}")
        lines.append(f"  ght {report.fiber.ght}, gdim {report.fiber.gdim}")
    if cyclic is not None:
        lines.append(f"  contraction: {cyclic['verdict']}")
    return 0, out, lines


def _pieces(doc: dict, q: DimerQuiver | None, args):
    model, _ = _model(doc, q, args)
    R = model.r_truncation(args.deg_bound)
    zhat = reduced_center_bound(model.S, R, model.sigma, args.deg_bound)
    return model, R, zhat


def cmd_krull(doc: dict, q: DimerQuiver | None, args) -> tuple[int, dict, list[str]]:
    model, R, zhat = _pieces(doc, q, args)
    d = krull_dimensions(model, R, zhat)
    out = {
        "name": model.name,
        "dimS": d.dimS,
        "dimR_est": d.dimR_est,
        "dimZhat_est": d.dimZhat_est,
        "frac_equal": d.frac_equal,
        "transcription_error": d.transcription_error,
        "claim": f"window(deg={args.deg_bound})",
    }
    lines = [f"{model.name}: dimS {d.dimS}, dimR_est {d.dimR_est}, dimZhat_est {d.dimZhat_est}, frac_equal {d.frac_equal}"]
    if d.transcription_error:
        lines.append(f"  WARNING: expected dimS {d.expected_dimS}; check the tiling transcription")
    return 0, out, lines


def cmd_locus(doc: dict, q: DimerQuiver | None, args) -> tuple[int, dict, list[str]]:
    report = center_report(_model(doc, q, args)[0], args.deg_bound, args.power_bound)
    out = report.to_dict()
    fiber = out.get("special_fiber")
    lines = [f"{report.name}: special fibre"]
    if fiber is None:
        lines.append("  noetherian within window; nothing to report")
        return 0, {"name": report.name, "noetherian": True}, lines
    coords = report.coords
    lines.append(f"  m0 generators: {', '.join(_mono(g, coords) for g in report.fiber.m0_gens)}")
    lines.append(f"  ght {fiber['ght']}, gdim {fiber['gdim']}, dimR {fiber['dimR']}")
    lines.append(f"  U nonempty {fiber['U']['nonempty']}, dense {fiber['U']['dense']}, coincide {fiber['U']['coincides_with_zhat_side']}")
    return 0, {"name": report.name, "noetherian": False, **fiber}, lines


def cmd_witness(doc: dict, q: DimerQuiver | None, args) -> tuple[int, dict, list[str]]:
    model, R, _ = _pieces(doc, q, args)
    w = nonnoetherian_witness(model, R, args.power_bound)
    if w is None:
        return 0, {"name": model.name, "witness": None}, [f"{model.name}: no witness within window"]
    out = {
        "name": model.name,
        "witness": {
            "h": list(w.h),
            "text": _mono(w.h, model.coords),
            "s_decomposition": list(w.s_decomposition),
            "powers_checked": list(w.powers_checked),
        },
    }
    return 0, out, [f"{model.name}: h = {_mono(w.h, model.coords)}, powers 1..{args.power_bound} outside R"]


def cmd_chain(doc: dict, q: DimerQuiver | None, args) -> tuple[int, dict, list[str]]:
    model, c = _model(doc, q, args)
    out: dict = {"name": model.name}
    lines = [f"{model.name}: chains"]
    if c is not None:
        chain = verify_dimension_chain(c.target, max_len=args.chain_len)
        out["dimension_chain"] = chain.to_dict()
        lines.append(f"  dimension chain: {chain.status}")
        if chain.status != "inconclusive":
            lines.append(f"    n1 {chain.n1}, n2 {chain.n2}, rank T {chain.rank_T}, localized equal {chain.localized_equal}")
    R = model.r_truncation(args.deg_bound)
    w = nonnoetherian_witness(model, R, args.power_bound)
    if w is None:
        out["witness_chain"] = None
        lines.append("  no witness; no ascending chain")
    else:
        wc = witness_chain(model, w.h, args.power_bound)
        out["witness_chain"] = None if wc is None else witness_chain_dict(wc)
        if wc is not None:
            hs = ", ".join(_mono(h, model.coords) for h in wc.h)
            lines.append(f"  witness chain: {hs}; last not generated: {wc.last_not_generated}")
    return 0, out, lines


DIMER_ONLY: dict[str, Callable] = {
    "validate": cmd_validate,
    "matchings": cmd_matchings,
    "cycles": cmd_cycles,
    "contract": cmd_contract,
    "check-cyclic": cmd_check_cyclic,
}
CENTER: dict[str, Callable] = {
    "center-report": cmd_center_report,
    "krull": cmd_krull,
    "locus": cmd_locus,
    "witness": cmd_witness,
    "chain": cmd_chain,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dimerlab", description="Dimer quivers, contractions and center geometry.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="fixture name or path to a JSON file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--contract", help="named arrow set from the fixture, or comma-separated arrow ids")
    p.add_argument("--len-bound", type=int, default=None, help="path length bound for cancellativity (default 2*max face length)")
    p.add_argument("--center-len-bound", dest="len_bound_center", type=int, default=None,
                   help="cycle length bound for the homotopy center (default 3*arrows)")
    p.add_argument("--chain-len", type=int, default=None, help="cycle length bound for the dimension chain")
    p.add_argument("--deg-bound", type=int, default=DEFAULT_DEG_BOUND)
    p.add_argument("--power-bound", type=int, default=DEFAULT_POWER_BOUND)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="rewrite state budget")
    return p


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("deg_bound", "power_bound", "budget"):
            if getattr(args, name) < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        doc = load_input(args.input)
        if doc.get("kind") == "monomial":
            if args.command not in MONOMIAL_COMMANDS:
                raise UsageError(f"{args.command} needs a dimer quiver; {args.input} is a monomial model")
            q = None
        else:
            q = tiling_from_dict(doc)
        if q is not None and args.command != "validate":
            report = validate(q)
            if not report.ok:
                bad = report.failures()[0]
                print(f"invalid dimer quiver: {bad.name} at {bad.location}", file=err)
                return 1
        if args.command in DIMER_ONLY:
            code, payload, lines = DIMER_ONLY[args.command](q, args)
        else:
            code, payload, lines = CENTER[args.command](doc, q, args)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"dimerlab: error: {exc}", file=err)
        return 2
    except TilingParseError as exc:
        print(f"dimerlab: error: {exc}", file=err)
        return 2
    except (ContractionError, StructuralError) as exc:
        print(f"dimerlab: {exc}", file=err)
        return 1
    if args.json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
