"""Finite scans of the (strong) persistence properties of powers.

``strong persistence`` means ``(I^(k+1) : I) == I^k``; ``persistence`` means
``Ass(I^k) <= Ass(I^(k+1))``. Both are checked for ``k <= kmax`` only. Nothing
here decides the stable set ``Ass(I^k)`` for large ``k``.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from .closure import is_integrally_closed
from .core import (
    MonomialIdeal,
    Ring,
    colon_ideal,
    colon_monomial,
    degree,
    power,
    subset,
    support,
)
from .io import format_ideal, ideal_to_json
from .primes import (
    DECOMPOSITION,
    WITNESS,
    associated_primes,
    associated_primes_decomp,
    maximal_ideal_associated,
)
from .resolution import DEFAULT_CAP, Depth, LatticeCapExceeded, depth_quotient
from .sampling import random_degree2_ideal

DEFAULT_KMAX = 4

# generators of the 7-variable counterexample, as 1-based variable index lists
SEVEN_VARIABLE_GENERATORS = (
    (1, 4, 5, 7), (2, 3, 6), (2, 3, 7), (2, 4, 5), (2, 4, 7), (2, 5, 6),
    (3, 4, 5), (3, 4, 6), (3, 5, 7), (4, 6, 7), (5, 6, 7),
)


def paper_example_ideal() -> MonomialIdeal:
    R = Ring.standard(7)
    gens = []
    for idx in SEVEN_VARIABLE_GENERATORS:
        e = [0] * 7
        for i in idx:
            e[i - 1] = 1
        gens.append(tuple(e))
    return MonomialIdeal(R, gens)


def ideal_fingerprint(I: MonomialIdeal) -> str:
    """Short sha256 of the canonical text form; pins a fixture in reports."""
    return hashlib.sha256(format_ideal(I).encode()).hexdigest()[:16]


def _require_proper(I):
    if I.is_zero() or I.is_unit():
        raise ValueError("need a proper nonzero ideal")


class _Powers:
    """Lazily computed powers ``I^k`` (k >= 1), shared by the scans."""

    def __init__(self, I):
        self.I = I
        self._p = {1: I}

    def __getitem__(self, k):
        if k not in self._p:
            self._p[k] = self[k - 1] * self.I
        return self._p[k]


def _primes_str(report):
    return [str(p) for p in report.primes]


def strong_persistence_scan(I: MonomialIdeal, kmax: int, _powers=None) -> list:
    """Every ``k <= kmax`` with ``(I^(k+1) : I) != I^k``."""
    _require_proper(I)
    P = _powers or _Powers(I)
    return [k for k in range(1, kmax + 1) if colon_ideal(P[k + 1], I) != P[k]]


@dataclass
class AssScan:
    ass: dict                 # k -> AssReport for k = 1..kmax+1
    violations: list          # k with Ass(I^k) not inside Ass(I^(k+1))
    q2: dict                  # k -> Ass(I^2) <= Ass(I^k), for 2 <= k <= kmax


def ass_persistence_scan(I: MonomialIdeal, kmax: int, method: str = WITNESS,
                         threads: int = 1, _powers=None) -> AssScan:
    """Ass-chain scan: containments ``Ass(I^k) <= Ass(I^(k+1))`` for ``k <= kmax``.

    Also reports, for ``2 <= k <= kmax``, whether ``Ass(I^2)`` is
    contained in ``Ass(I^k)``.
    """
    _require_proper(I)
    P = _powers or _Powers(I)
    ass = {k: associated_primes(P[k], method, threads=threads) for k in range(1, kmax + 2)}
    sets = {k: ass[k].as_sets() for k in ass}
    violations = [k for k in range(1, kmax + 1) if not sets[k] <= sets[k + 1]]
    q2 = {k: sets[2] <= sets[k] for k in range(2, kmax + 1)}
    return AssScan(ass, violations, q2)


@dataclass
class PowerRecord:
    k: int
    generators: int
    ass: list
    strong: bool              # (I^(k+1) : I) == I^k
    ass_contained: bool       # Ass(I^k) <= Ass(I^(k+1))
    m_associated: bool
    depth: Depth
    audit_ok: bool = None     # witness and decomposition Ass agree (None: not audited)

    def to_dict(self):
        return {
            "k": self.k,
            "generators": self.generators,
            "ass": self.ass,
            "strong_persistence": self.strong,
            "ass_contained_in_next": self.ass_contained,
            "maximal_ideal_associated": self.m_associated,
            "depth": str(self.depth),
            "depth_exact": self.depth.exact,
            "audit_ok": self.audit_ok,
        }


@dataclass
class PersistenceReport:
    ideal: MonomialIdeal
    kmax: int
    records: list = field(default_factory=list)
    strong_violations: list = field(default_factory=list)
    ass_violations: list = field(default_factory=list)
    q2_failures: list = field(default_factory=list)
    depth_increases: list = field(default_factory=list)
    consistency_errors: list = field(default_factory=list)

    @property
    def consistent(self):
        return not self.consistency_errors

    def to_dict(self):
        return {
            "ideal": ideal_to_json(self.ideal),
            "fingerprint": ideal_fingerprint(self.ideal),
            "kmax": self.kmax,
            "records": [r.to_dict() for r in self.records],
            "strong_persistence_violations": self.strong_violations,
            "persistence_violations": self.ass_violations,
            "ass2_not_contained_at": self.q2_failures,
            "depth_increases_at": self.depth_increases,
            "consistency_errors": self.consistency_errors,
            "asymptotic_note": f"finite scan only; nothing is claimed for k > {self.kmax + 1}",
        }


def persistence_report(I: MonomialIdeal, kmax: int = DEFAULT_KMAX, audit: bool = False,
                       exact_depth: bool = False, threads: int = 1,
                       cap: int = DEFAULT_CAP) -> PersistenceReport:
    """Per-power record of Ass, strong persistence, Ass containment and depth.

    Consistency checks run on every scan and land in ``consistency_errors``:
    ``I^k <= (I^(k+1) : I)``; strong persistence at ``k`` implies Ass
    containment at ``k``; depth 0 exactly when the maximal ideal is
    associated (when depth is exact); and, with ``audit``, agreement of the
    two Ass algorithms.
    """
    _require_proper(I)
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    P = _Powers(I)
    scan = ass_persistence_scan(I, kmax, WITNESS, threads=threads, _powers=P)
    rep = PersistenceReport(I, kmax)
    full = I.n
    for k in range(1, kmax + 1):
        colon = colon_ideal(P[k + 1], I)
        strong = colon == P[k]
        if not subset(P[k], colon):
            rep.consistency_errors.append(f"k={k}: I^k not contained in (I^(k+1):I)")
        contained = k not in scan.violations
        if strong and not contained:
            rep.consistency_errors.append(f"k={k}: strong persistence without Ass containment")
        m_ass = any(len(p.vars) == full for p in scan.ass[k].primes)
        if exact_depth:
            try:
                depth = Depth(depth_quotient(P[k], cap=cap), True)
            except LatticeCapExceeded:
                depth = Depth(0 if m_ass else 1, False)
            if depth.exact and (depth.value == 0) != m_ass:
                rep.consistency_errors.append(f"k={k}: depth 0 disagrees with m in Ass")
        else:
            depth = Depth(0 if m_ass else 1, False)
        audit_ok = None
        if audit:
            audit_ok = associated_primes_decomp(P[k]).as_sets() == scan.ass[k].as_sets()
            if not audit_ok:
                rep.consistency_errors.append(f"k={k}: witness and decomposition Ass differ")
        rep.records.append(PowerRecord(k, len(P[k]), _primes_str(scan.ass[k]), strong,
                                       contained, m_ass, depth, audit_ok))
        if not strong:
            rep.strong_violations.append(k)
    rep.ass_violations = list(scan.violations)
    rep.q2_failures = [k for k, ok in sorted(scan.q2.items()) if not ok]
    for prev, nxt in zip(rep.records, rep.records[1:]):
        a, b = prev.depth, nxt.depth
        if (a.exact or a.value == 0) and b.value > a.value:
            rep.depth_increases.append(prev.k)
    return rep


# ---------------------------------------------------------------------------
# checks of identities that always hold


@dataclass
class Degree2Summary:
    passed: bool
    trials: int
    seed: int
    kmax: int
    counterexample: dict = None

    def to_dict(self):
        return {"passed": self.passed, "trials": self.trials, "seed": self.seed,
                "kmax": self.kmax, "counterexample": self.counterexample}


def check_degree2_theorem(seed: int, trials: int, n_max: int, kmax: int) -> Degree2Summary:
    """Strong persistence up to ``kmax`` on random ideals with ``deg(I) <= 2``.

    Ring sizes are drawn uniformly from ``2..n_max``; see
    :mod:`monideal.sampling` for the ideal distribution.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, max(2, n_max))
        I = random_degree2_ideal(rng, n)
        assert degree(I) <= 2
        bad = strong_persistence_scan(I, kmax)
        if bad:
            return Degree2Summary(False, trials, seed, kmax,
                                  {"ideal": ideal_to_json(I), "violations": bad})
    return Degree2Summary(True, trials, seed, kmax)


def check_lemma_l2(t: int, J: MonomialIdeal, k: int) -> bool:
    """``(x^(k+1) J : x_i) == x^k J`` for ``x = (x_1..x_t)`` and every ``i <= t``.

    ``x_1..x_t`` are the first ``t`` variables of ``J``'s ring and must not
    divide any generator of ``J``.
    """
    if k < 1 or t < 1 or t > J.n:
        raise ValueError("need k >= 1 and 1 <= t <= n")
    if support(J) & set(range(t)):
        raise ValueError("x_1..x_t must lie outside the support of J")
    R = J.ring
    xs = MonomialIdeal(R, [R.var(i) for i in range(t)])
    lhs_base = power(xs, k + 1) * J
    rhs = power(xs, k) * J
    return all(colon_monomial(lhs_base, R.var(i)) == rhs for i in range(t))


@dataclass
class C1Result:
    hypothesis_met: bool
    holds: bool
    failures: list = field(default_factory=list)

    def to_dict(self):
        return {"hypothesis_met": self.hypothesis_met, "holds": self.holds,
                "failures": self.failures}


def check_corollary_c1(I: MonomialIdeal, kmax: int, method: str = WITNESS) -> C1Result:
    """If ``I`` is square-free with ``I^2`` integrally closed, check ``Ass(I^2) <= Ass(I^k)``.

    When ``I^2`` is not integrally closed the result is vacuous:
    ``hypothesis_met`` is false and ``holds`` is true.
    """
    if not I.is_squarefree():
        raise ValueError("this check needs a square-free ideal")
    _require_proper(I)
    P = _Powers(I)
    if not is_integrally_closed(P[2]):
        return C1Result(False, True)
    base = associated_primes(P[2], method).as_sets()
    failures = [k for k in range(3, kmax + 1) if not base <= associated_primes(P[k], method).as_sets()]
    return C1Result(True, not failures, failures)


# ---------------------------------------------------------------------------
# the counterexample


class ExampleClaimError(AssertionError):
    """A clause of the counterexample failed."""


@dataclass
class ExampleReport:
    ideal: MonomialIdeal
    kmax: int
    clauses: dict             # clause letter -> (passed, description, detail)
    ass: dict                 # k -> AssReport
    depths: dict              # k -> Depth
    witness: tuple            # w with (I^2 : w) = m

    @property
    def passed(self):
        return all(ok for ok, _, _ in self.clauses.values())

    def to_dict(self):
        return {
            "ideal": ideal_to_json(self.ideal),
            "fingerprint": ideal_fingerprint(self.ideal),
            "kmax": self.kmax,
            "clauses": {c: {"passed": ok, "claim": desc, "detail": detail}
                        for c, (ok, desc, detail) in sorted(self.clauses.items())},
            "ass": {str(k): _primes_str(v) for k, v in sorted(self.ass.items())},
            "depth": {str(k): str(d) for k, d in sorted(self.depths.items())},
            "depth_exact": all(d.exact for d in self.depths.values()),
            "witness_I2": self.ideal.ring.format_monomial(self.witness) if self.witness else None,
            "union_of_ass": [str(p) for p in sorted(set().union(*(a.primes for a in self.ass.values())),
                                                     key=lambda p: (len(p.vars), p.vars))],
            "passed": self.passed,
            "asymptotic_note": (f"Ass(I^k) listed for k <= {self.kmax}; the stable set is not "
                                "computed, so the union-versus-stable comparison is only visible "
                                "within this range"),
        }


def _colon_detail(colon, target):
    extra = [g for g in colon.gens if g not in target]
    if not extra:
        return "colon equals I^2"
    fmt = colon.ring.format_monomial
    if len(extra) == 1:
        return f"the generator {fmt(extra[0])} of (I^3 : I) lies outside I^2"
    return f"{len(extra)} generators of (I^3 : I) lie outside I^2, e.g. {fmt(extra[0])}"


def run_paper_example(kmax: int = 3, exact_depth: bool = False, audit: bool = False,
                      strict: bool = True) -> ExampleReport:
    """Verify the 7-variable counterexample.

    Clauses: (a) m in Ass(I^2); (b) m not in Ass(I^3); (c) (I^3 : I) != I^2;
    (d) Ass(I^2) not inside Ass(I^3); (e) depth R/I^2 = 0 and depth R/I^3 >= 1;
    (f) Ass(I^k) listed for k <= kmax. With ``strict`` a failing clause
    raises :class:`ExampleClaimError` naming it.
    """
    kmax = max(kmax, 3)
    I = paper_example_ideal()
    P = _Powers(I)
    ass = {k: associated_primes(P[k], WITNESS) for k in range(1, kmax + 1)}
    if audit:
        for k in range(1, kmax + 1):
            if associated_primes_decomp(P[k]).as_sets() != ass[k].as_sets():
                raise ExampleClaimError(f"audit: Ass algorithms disagree at k={k}")
    m_in2, witness = maximal_ideal_associated(P[2])
    m_in3, _ = maximal_ideal_associated(P[3])
    depths = {}
    for k in (2, 3):
        if exact_depth:
            depths[k] = Depth(depth_quotient(P[k]), True)
        else:
            depths[k] = Depth(0 if maximal_ideal_associated(P[k])[0] else 1, False)
    colon = colon_ideal(P[3], I)
    s2, s3 = ass[2].as_sets(), ass[3].as_sets()
    clauses = {
        "a": (m_in2, "m in Ass(I^2)",
              f"witness {I.ring.format_monomial(witness)}" if witness else "no witness"),
        "b": (not m_in3, "m not in Ass(I^3)", "witness box exhausted" if not m_in3 else "witness found"),
        "c": (colon != P[2], "(I^3 : I) != I^2", _colon_detail(colon, P[2])),
        "d": (not s2 <= s3, "Ass(I^2) not contained in Ass(I^3)",
              "missing: " + ", ".join(sorted(str(p) for p in s2 - s3))),
        "e": (depths[2].value == 0 and depths[3].value >= 1,
              "depth R/I^2 = 0 and depth R/I^3 >= 1",
              f"depth R/I^2 {depths[2].relation()}, depth R/I^3 {depths[3].relation()}"),
        "f": (True, "Ass(I^k) listed for k <= kmax",
              "; ".join(f"k={k}: {len(ass[k].primes)} primes" for k in sorted(ass))),
    }
    report = ExampleReport(I, kmax, clauses, ass, depths, witness)
    if strict:
        for c, (ok, desc, detail) in sorted(clauses.items()):
            if not ok:
                raise ExampleClaimError(f"clause ({c}) failed: {desc} [{detail}]")
    return report


__all__ = [
    "DECOMPOSITION", "WITNESS", "DEFAULT_KMAX", "SEVEN_VARIABLE_GENERATORS",
    "paper_example_ideal", "strong_persistence_scan", "ass_persistence_scan",
    "persistence_report", "check_degree2_theorem", "check_lemma_l2",
    "check_corollary_c1", "run_paper_example", "ExampleClaimError",
]
