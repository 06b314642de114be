"""Command-line interface for marked sets over strongly stable ideals.

Exit codes: 0 success, 1 a tested property is false (e.g. not a marked
basis), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .equations import (
    NotATruncation,
    embedding_report,
    groebner_stratum_equations,
    marked_scheme_equations,
    stratum_membership_demo,
)
from .hilbert import hilbert_data
from .ideals import MonomialIdeal, NotStronglyStable, StableIdeal, exchange_violation
from .marked import (
    MarkedSet,
    MarkedSetError,
    Reducer,
    STRATEGIES,
    auxiliary_basis,
    generic_parameters,
    is_marked_basis,
    obstructions,
    parse_marked_set,
)
from .monomials import TermOrder, format_monomial, parse_monomial
from .polys import format_polynomial, parse_polynomial
from .rings import parse_ring, ring_to_string


class InputError(Exception):
    pass


# -- input helpers ----------------------------------------------------------


def _read_source(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def load_monomial_ideal(text: str, nvars: int | None) -> MonomialIdeal:
    raw = _read_source(text).strip()
    if raw.startswith("{"):
        data = json.loads(raw)
        return MonomialIdeal(int(data["vars"]), tuple(tuple(g) for g in data["generators"]))
    if nvars is None:
        raise InputError("--vars is required for the text ideal syntax")
    gens = [parse_monomial(t, nvars) for t in raw.replace("\n", ",").split(",") if t.strip()]
    return MonomialIdeal(nvars, tuple(gens))


def load_ideal(args) -> StableIdeal:
    base = load_monomial_ideal(args.ideal, args.vars)
    return StableIdeal(base.nvars, base.generators)


def load_marked(args, J: StableIdeal) -> MarkedSet:
    if not args.marked:
        raise InputError("--marked PATH is required")
    raw = _read_source("@" + args.marked if not args.marked.startswith("@") else args.marked)
    if raw.lstrip().startswith("{"):
        data = json.loads(raw)
        ring = _ring(args, J) if args.ring else None
        F = MarkedSet.from_json(data, ring)
        if F.ideal != J:
            raise InputError(f"marked set heads {F.ideal} do not match the ideal {J}")
        return F
    return parse_marked_set(raw, J, _ring(args, J))


def _ring(args, J: StableIdeal):
    text = args.ring or "ZZ"
    params = generic_parameters(J) if text.replace(" ", "") == "ZZ[C]" else None
    return parse_ring(text, params)


# -- commands ---------------------------------------------------------------


def cmd_check(args):
    base = load_monomial_ideal(args.ideal, args.vars)
    bad = exchange_violation(base) if not base.is_zero() else None
    report = {
        "generators": [format_monomial(g) for g in base.generators],
        "vars": base.nvars,
        "max_degree": max((sum(g) for g in base.generators), default=0),
        "strongly_stable": bad is None and not base.is_zero() and not base.is_unit(),
    }
    if not report["strongly_stable"]:
        report.update(saturated=None, m_truncation=None)
        if bad is not None:
            message = str(NotStronglyStable(*bad))
        else:
            message = "the zero and unit ideals are not allowed"
        report["error"] = message
        return report, 2, _kv
    J = StableIdeal(base.nvars, base.generators)
    witness = J.truncation_witness()
    report["saturated"] = J.is_saturated()
    report["m_truncation"] = (
        None if witness is None else {"saturation": str(witness[0]), "m": witness[1]}
    )
    return report, 0, _kv


def _kv(report: dict) -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, bool) or v is None:
            v = json.dumps(v)
        elif isinstance(v, list):
            v = ",".join(map(str, v))
        elif isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items())
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def cmd_sous_escalier(args):
    J = load_ideal(args)
    monos = J.sous_escalier(args.degree)
    data = {"degree": args.degree, "monomials": [list(m) for m in monos]}
    return data, 0, lambda d: ",".join(format_monomial(m) for m in monos)


def cmd_star_decompose(args):
    J = load_ideal(args)
    m = parse_monomial(args.monomial, J.nvars)
    try:
        g, d = J.star_decompose(m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    data = {"monomial": list(m), "generator": list(g), "cofactor": list(d)}
    return data, 0, lambda _: f"generator: {format_monomial(g)}\ncofactor: {format_monomial(d)}"


def cmd_truncate(args):
    J = load_ideal(args).truncate(args.degree)
    return J.to_json(), 0, lambda _: str(J)


def cmd_hilbert(args):
    J = load_ideal(args)
    h = hilbert_data(J)
    data = h.to_json()

    def text(_):
        return (
            f"hilbert polynomial: {h.polynomial}\n"
            f"gotzmann number: {h.gotzmann_number}\nrho: {h.rho}"
        )

    return data, 0, text


def cmd_reduce(args):
    J = load_ideal(args)
    F = load_marked(args, J)
    h = parse_polynomial(args.polynomial, J.nvars, F.ring)
    trace = [] if args.trace else None
    rem = Reducer(F).reduce(h, strategy=args.strategy, trace=trace)
    out = format_polynomial(rem, F.ring)
    data = {"remainder": out, "ring": ring_to_string(F.ring)}
    if trace is not None:
        data["trace"] = [step.describe(F.ring) for step in trace]

    def text(d):
        return "\n".join(d.get("trace", []) + [out])

    return data, 0, text


def cmd_basis_test(args):
    J = load_ideal(args)
    F = load_marked(args, J)
    cert = is_marked_basis(F)
    witnesses = [
        {"ek": pair.label(), "remainder": format_polynomial(r, F.ring)} for pair, r in cert.witnesses
    ]
    data = {"basis": cert.basis, "ring": ring_to_string(F.ring), "witnesses": witnesses}

    def text(d):
        lines = [f"basis: {json.dumps(cert.basis)}"]
        lines += [f"witness {w['ek']}: {w['remainder']}" for w in witnesses]
        return "\n".join(lines)

    return data, 0 if cert.basis else 1, text


def cmd_aux_basis(args):
    J = load_ideal(args)
    F = load_marked(args, J)
    aux = auxiliary_basis(F, args.degree)
    rows = [(format_monomial(g), format_polynomial(f.poly(), F.ring)) for g, f in aux.polys.items()]
    data = {"degree": args.degree, "polys": [{"head": h, "poly": p} for h, p in rows]}
    return data, 0, lambda _: "\n".join(f"f~[{h}] = {p}" for h, p in rows)


def cmd_obstructions(args):
    J = load_ideal(args)
    F = load_marked(args, J)
    degrees = [args.degree] if args.degree is not None else range(J.min_degree, J.max_degree + 2)
    red = Reducer(F)
    per_degree = []
    for s in degrees:
        mod = obstructions(F, s, red)
        per_degree.append(
            {
                "degree": s,
                "sources": [f"{a.label()} - {b.label()}" for a, b in mod.sources],
                "remainders": [format_polynomial(r, F.ring) for r in mod.remainders],
                "generators": [format_polynomial(r, F.ring) for r in mod.generators],
            }
        )
    zero = all(not d["generators"] for d in per_degree)

    def text(_):
        lines = []
        for d in per_degree:
            lines.append(f"s={d['degree']}: " + (", ".join(d["generators"]) or "0"))
        return "\n".join(lines)

    return {"degrees": per_degree, "zero": zero}, 0, text


def cmd_mf_equations(args):
    J = load_ideal(args)
    eqs = marked_scheme_equations(J, jobs=args.jobs)
    return eqs.to_json(), 0, lambda _: eqs.to_text()


def cmd_gs_equations(args):
    J = load_ideal(args)
    try:
        st = groebner_stratum_equations(J, TermOrder.parse(args.order), jobs=args.jobs)
    except NotATruncation as exc:
        raise InputError(str(exc)) from exc
    return st.to_json(), 0, lambda _: st.to_text()


def cmd_embedding_report(args):
    J = load_ideal(args)
    rng = None
    if args.start is not None or args.stop is not None:
        if args.start is None or args.stop is None:
            raise InputError("give both --from and --to")
        rng = (args.start, args.stop)
    try:
        rep = embedding_report(J, rng)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return rep.to_json(), 0, lambda _: rep.to_text()


def cmd_stratum_members(args):
    J = load_ideal(args)
    found = stratum_membership_demo(J, marked_scheme_equations(J, jobs=args.jobs))
    data = {"params": [p.bracket() for p in found]}
    return data, 0, lambda _: "\n".join(p.subscript() for p in found) or "(none)"


COMMANDS = {
    "check": (cmd_check, "validate an ideal"),
    "sous-escalier": (cmd_sous_escalier, "monomials outside the ideal in one degree"),
    "star-decompose": (cmd_star_decompose, "the unique generator times cofactor split"),
    "truncate": (cmd_truncate, "truncation in degrees >= m"),
    "hilbert": (cmd_hilbert, "Hilbert polynomial, Gotzmann number and rho"),
    "reduce": (cmd_reduce, "remainder of a polynomial by a marked set"),
    "basis-test": (cmd_basis_test, "is a marked set a marked basis"),
    "aux-basis": (cmd_aux_basis, "the induced marked set on J_s"),
    "obstructions": (cmd_obstructions, "generators of I ∩ <N(J)> per degree"),
    "mf-equations": (cmd_mf_equations, "equations of the marked scheme"),
    "gs-equations": (cmd_gs_equations, "equations of the Groebner stratum"),
    "embedding-report": (cmd_embedding_report, "truncation degrees and open charts"),
    "stratum-members": (cmd_stratum_members, "parameters that are generators on their own"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="markedschemes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("ideal", help="e.g. 'x2^2,x2*x1,x1^3', JSON, or @file")
        p.add_argument("--vars", type=int, help="number of variables x0..xn")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--jobs", type=int, default=1)
        if name in ("sous-escalier", "truncate", "aux-basis"):
            p.add_argument("--degree", type=int, required=True)
        if name == "obstructions":
            p.add_argument("--degree", type=int, help="default: every degree up to m+1")
        if name == "star-decompose":
            p.add_argument("monomial")
        if name in ("reduce", "basis-test", "aux-basis", "obstructions"):
            p.add_argument("--marked", help="marked set file (JSON or one polynomial per line)")
            p.add_argument("--ring", help="ZZ, QQ, ZZ/p, ZZ[C] or ZZ[t,...]; default ZZ")
        if name == "reduce":
            p.add_argument("polynomial")
            p.add_argument("--trace", action="store_true")
            p.add_argument("--strategy", choices=STRATEGIES, default="deglex")
        if name == "gs-equations":
            p.add_argument("--order", default="deglex", help="lex, deglex or degrevlex")
        if name == "embedding-report":
            p.add_argument("--from", dest="start", type=int)
            p.add_argument("--to", dest="stop", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.vars is not None and args.vars < 1:
        print("error: --vars must be positive", file=sys.stderr)
        return 2
    handler = COMMANDS[args.command][0]
    try:
        data, code, render = handler(args)
    except (InputError, MarkedSetError, NotStronglyStable, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        out = json.dumps(data, sort_keys=True, indent=2)
    else:
        out = render(data)
    if args.output:
        Path(args.output).write_text(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
