"""Command-line front end.

Exit codes: 0 success (checked claims hold), 1 a checked claim failed,
2 usage or parse error, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import closure, core, graphs, persistence, primes, resolution
from .io import IdealParseError, format_ideal, ideal_to_json, read_ideal

SCHEMA = "monideal.report/1"

# global flags may appear before or after the subcommand, so their defaults
# are filled in after parsing
GLOBAL_DEFAULTS = {"json": False, "seed": 0, "threads": 1}

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class ClaimFailed(Exception):
    pass


def _emit(args, result, text):
    if args.json:
        payload = {"schema": SCHEMA, "command": args.cmd_name, "result": result}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text.rstrip("\n"))


def _ideal_result(args, I):
    _emit(args, {"ideal": ideal_to_json(I)}, format_ideal(I))


def _power_of(args, I):
    k = getattr(args, "k", None) or 1
    if k < 1:
        raise ValueError("-k must be at least 1")
    return core.power(I, k)


# -- subcommands -------------------------------------------------------------

def cmd_power(args):
    _ideal_result(args, _power_of(args, read_ideal(args.file)))


def cmd_colon(args):
    _ideal_result(args, core.colon_ideal(read_ideal(args.file_a), read_ideal(args.file_b)))


def cmd_intersect(args):
    _ideal_result(args, core.intersect(read_ideal(args.file_a), read_ideal(args.file_b)))


def cmd_radical(args):
    _ideal_result(args, core.radical(read_ideal(args.file)))


def cmd_closure(args):
    _ideal_result(args, closure.integral_closure(read_ideal(args.file)))


def cmd_ass(args):
    I = _power_of(args, read_ideal(args.file))
    rep = primes.associated_primes(I, args.method, threads=args.threads)
    listed = [str(p) for p in rep.primes]
    _emit(args, {"method": rep.method, "k": args.k or 1, "primes": listed},
          f"# Ass via {rep.method}\n" + "\n".join(listed))


def cmd_irrdec(args):
    I = _power_of(args, read_ideal(args.file))
    comps = [str(c) for c in primes.irreducible_decomposition(I)]
    _emit(args, {"k": args.k or 1, "components": comps}, "\n".join(comps))


def cmd_depth(args):
    I = _power_of(args, read_ideal(args.file))
    m_ass, witness = primes.maximal_ideal_associated(I)
    result = {"k": args.k or 1, "maximal_ideal_associated": m_ass,
              "witness": I.ring.format_monomial(witness) if witness else None}
    if args.exact:
        table = resolution.betti_numbers(I, cap=args.cap)
        depth = I.n - table.projective_dimension()
        result.update(depth=depth, exact=True,
                      betti_totals={str(i): v for i, v in table.totals().items()})
        if (depth == 0) != m_ass:
            raise ClaimFailed("exact depth disagrees with the maximal-ideal criterion")
        text = f"depth R/I^{args.k or 1} = {depth}"
    else:
        result.update(depth="0" if m_ass else ">=1", exact=False)
        text = f"depth R/I^{args.k or 1} {'= 0' if m_ass else '>= 1'} (Ass criterion)"
    _emit(args, result, text)


def cmd_persist(args):
    I = read_ideal(args.file)
    rep = persistence.persistence_report(I, kmax=args.kmax, audit=args.audit,
                                         exact_depth=args.exact_depth, threads=args.threads,
                                         cap=args.cap)
    lines = []
    for r in rep.records:
        lines.append(f"k={r.k}: {r.generators} generators, |Ass|={len(r.ass)}, "
                     f"strong={'yes' if r.strong else 'NO'}, "
                     f"Ass(I^k)<=Ass(I^(k+1))={'yes' if r.ass_contained else 'NO'}, "
                     f"depth {r.depth}")
    lines.append(f"strong persistence violations: {rep.strong_violations or 'none'}")
    lines.append(f"persistence violations: {rep.ass_violations or 'none'}")
    lines.append(f"Ass(I^2) not inside Ass(I^k) at: {rep.q2_failures or 'none'}")
    lines.append(f"depth increases at: {rep.depth_increases or 'none'}")
    if rep.consistency_errors:
        lines.extend("CONSISTENCY: " + e for e in rep.consistency_errors)
    _emit(args, rep.to_dict(), "\n".join(lines))
    if rep.consistency_errors:
        raise ClaimFailed("internal consistency checks failed")
    if args.expect_persistent and (rep.strong_violations or rep.ass_violations):
        raise ClaimFailed("violations found where none were expected")


def cmd_graph(args):
    with open(args.gfile, encoding="utf-8") as fh:
        G = graphs.parse_graph(fh.read())
    if args.action == "cover":
        _ideal_result(args, graphs.cover_ideal(G))
        return
    if args.action == "fhv":
        J2 = core.power(graphs.cover_ideal(G), 2)
        ok = graphs.fhv_square_decomposition(G) == J2
        cycles = graphs.induced_odd_cycles(G)
        _emit(args, {"equal": ok, "induced_odd_cycles": [list(c) for c in cycles],
                     "components": len(G.edges) + len(cycles)},
              f"decomposition = J^2: {'PASS' if ok else 'FAIL'}")
        if not ok:
            raise ClaimFailed("decomposition differs from J^2")
        return
    res = graphs.verify_p1(G)
    _emit(args, {"closed": res.closed, "colon_ok": res.colon_ok},
          f"J^2 integrally closed: {'PASS' if res.closed else 'FAIL'}\n"
          f"(J^3 : J) = J^2: {'PASS' if res.colon_ok else 'FAIL'}")
    if not res.ok():
        raise ClaimFailed("cover ideal check failed")


def cmd_paper_example(args):
    rep = persistence.run_paper_example(kmax=args.kmax, exact_depth=args.exact_depth,
                                        audit=args.audit, strict=False)
    lines = [f"({c}) {'PASS' if ok else 'FAIL'}  {desc}  [{detail}]"
             for c, (ok, desc, detail) in sorted(rep.clauses.items())]
    for k, a in sorted(rep.ass.items()):
        lines.append(f"Ass(I^{k}): {' '.join(str(p) for p in a.primes)}")
    _emit(args, rep.to_dict(), "\n".join(lines))
    if not rep.passed:
        raise ClaimFailed("a clause of the 7-variable example failed")


def cmd_degree2(args):
    s = persistence.check_degree2_theorem(args.seed, args.trials, args.nmax, args.kmax)
    _emit(args, s.to_dict(),
          f"{s.trials} random ideals with deg <= 2, k <= {s.kmax}: {'PASS' if s.passed else 'FAIL'}")
    if not s.passed:
        raise ClaimFailed("strong persistence failed for a degree <= 2 ideal")


# -- parser ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="stable machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="monideal", parents=[common],
                                description="Monomial ideals and persistence of their powers.")
    sub = p.add_subparsers(dest="cmd_name", required=True)

    def add(name, func, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=func)
        return sp

    sp = add("power", cmd_power, help="print I^K")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, required=True)
    for name, func in (("colon", cmd_colon), ("intersect", cmd_intersect)):
        sp = add(name, func, help=f"{name} of two ideals")
        sp.add_argument("file_a")
        sp.add_argument("file_b")
    add("radical", cmd_radical).add_argument("file")
    add("closure", cmd_closure, help="integral closure").add_argument("file")

    sp = add("ass", cmd_ass, help="associated primes of I or I^K")
    sp.add_argument("file")
    sp.add_argument("--method", choices=["witness", "decomp"], default="witness")
    sp.add_argument("-k", type=int)
    sp = add("irrdec", cmd_irrdec, help="irredundant irreducible decomposition")
    sp.add_argument("file")
    sp.add_argument("-k", type=int)
    sp = add("depth", cmd_depth, help="depth of R/I^K")
    sp.add_argument("file")
    sp.add_argument("-k", type=int)
    sp.add_argument("--exact", action="store_true", help="compute Betti numbers")
    sp.add_argument("--cap", type=int, default=resolution.DEFAULT_CAP, help="lcm lattice size limit")

    sp = add("persist", cmd_persist, help="persistence report up to kmax")
    sp.add_argument("file")
    sp.add_argument("--kmax", type=int, default=persistence.DEFAULT_KMAX)
    sp.add_argument("--audit", action="store_true", help="recompute Ass by decomposition")
    sp.add_argument("--exact-depth", action="store_true")
    sp.add_argument("--cap", type=int, default=resolution.DEFAULT_CAP, help="lcm lattice size limit")
    sp.add_argument("--expect-persistent", action="store_true",
                    help="exit 1 if any violation is found")

    sp = add("graph", cmd_graph, help="cover ideal checks for a graph file")
    sp.add_argument("action", choices=["cover", "fhv", "p1"])
    sp.add_argument("gfile")

    sp = add("paper-example", cmd_paper_example, help="verify the 7-variable counterexample")
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--audit", action="store_true")
    sp.add_argument("--exact-depth", action="store_true")

    sp = add("degree2", cmd_degree2, help="random check of strong persistence for deg <= 2")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--nmax", type=int, default=6)
    sp.add_argument("--kmax", type=int, default=3)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name, value in GLOBAL_DEFAULTS.items():
            if not hasattr(args, name):
                setattr(args, name, value)
        if args.threads < 1:
            parser.error("--threads must be positive")
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return exc.code
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            args.func(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    except ClaimFailed as exc:
        print(f"claim failed: {exc}", file=sys.stderr)
        return EXIT_CLAIM
    except persistence.ExampleClaimError as exc:
        print(f"claim failed: {exc}", file=sys.stderr)
        return EXIT_CLAIM
    except resolution.LatticeCapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (IdealParseError, graphs.GraphFormatError, core.RingMismatchError, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
