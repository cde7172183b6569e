"""Accuracy harness: stratified problem corpora and method-vs-reference error
measurement.

The reference solver carries 120 bits of precision (well over twice the
53-bit working precision) through numerically stable formulas:

    c^2   = (a - b)^2 + 4ab sin^2(omega/2)        (no cancellation)
    theta = atan2(2ab sin(omega), b^2 + c^2 - a^2)
    phi   = atan2(2ab sin(omega), a^2 + c^2 - b^2)

and rounds to double only at the end. The measured gaps between the two
double-precision methods are experimental observations about this artifact,
nothing more.
"""

import math
import random
import statistics
from dataclasses import dataclass
from typing import Optional, Sequence

import gmpy2

from .errors import DomainError
from .solver import SasProblem, TriangleSolution, _sine_ratio_residual, solve_sas_cosines, solve_sas_sines

REGIMES = ("well_conditioned", "thin_isoceles", "near_straight", "extreme_ratio")

_REF_PRECISION_BITS = 120
_REF_CTX = gmpy2.context(precision=_REF_PRECISION_BITS)


@dataclass(frozen=True)
class CorpusSpec:
    regime: str
    count: int
    seed: int

    def __post_init__(self) -> None:
        if self.regime not in REGIMES:
            raise DomainError(f"unknown regime {self.regime!r}; expected one of {REGIMES}")
        if self.count < 1:
            raise DomainError(f"count must be >= 1, got {self.count}")


def _log_uniform(rng: random.Random, lo: float, hi: float) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def generate_corpus(spec: CorpusSpec) -> list[SasProblem]:
    """Deterministic stratified corpus for one regime (fixed seed, fixed order)."""
    rng = random.Random(spec.seed)
    problems = []
    for _ in range(spec.count):
        if spec.regime == "well_conditioned":
            a = rng.uniform(0.1, 10.0)
            b = rng.uniform(0.1, 10.0)
            omega = rng.uniform(10.0, 170.0)
        elif spec.regime == "thin_isoceles":
            b = rng.uniform(0.5, 2.0)
            a = b * (1.0 + rng.uniform(-1e-6, 1e-6))
            omega = _log_uniform(rng, 1e-6, 1e-2)
        elif spec.regime == "near_straight":
            a = rng.uniform(0.1, 10.0)
            b = rng.uniform(0.1, 10.0)
            omega = 180.0 - _log_uniform(rng, 1e-9, 1.0)
        else:  # extreme_ratio
            b = rng.uniform(0.5, 2.0)
            a = b * _log_uniform(rng, 1e6, 1e12)
            omega = rng.uniform(10.0, 170.0)
        problems.append(SasProblem(a=a, b=b, omega_deg=omega))
    return problems


def reference_solution(problem: SasProblem) -> TriangleSolution:
    """Solve in 120-bit arithmetic, rounding the results to double at the end."""
    with gmpy2.context(_REF_CTX):
        a = gmpy2.mpfr(problem.a)
        b = gmpy2.mpfr(problem.b)
        deg = gmpy2.const_pi() / 180
        w = gmpy2.mpfr(problem.omega_deg) * deg
        half_sin = gmpy2.sin(w / 2)
        c = gmpy2.sqrt((a - b) ** 2 + 4 * a * b * half_sin**2)
        if not c > 0:
            raise DomainError("degenerate problem: zero third side")
        y = 2 * a * b * gmpy2.sin(w)
        theta = gmpy2.atan2(y, b * b + c * c - a * a) / deg
        phi = gmpy2.atan2(y, a * a + c * c - b * b) / deg
        c_f, theta_f, phi_f = float(c), float(theta), float(phi)
    return TriangleSolution(
        a=problem.a,
        b=problem.b,
        c=c_f,
        theta_deg=theta_f,
        phi_deg=phi_f,
        omega_deg=problem.omega_deg,
        method="reference",
        residual=_sine_ratio_residual(
            problem.a, problem.b, c_f, theta_f, phi_f, problem.omega_deg
        ),
    )


@dataclass(frozen=True)
class MethodErrors:
    """Relative errors of one method's outputs against the reference."""

    c_rel: float
    theta_rel: float
    phi_rel: float


@dataclass(frozen=True)
class ComparisonRecord:
    a: float
    b: float
    omega_deg: float
    regime: Optional[str]
    sines: Optional[MethodErrors]
    cosines: Optional[MethodErrors]
    sines_failure: Optional[str] = None
    cosines_failure: Optional[str] = None
    reference_failure: Optional[str] = None


@dataclass(frozen=True)
class ComparisonReport:
    records: list[ComparisonRecord]
    aggregates: dict

    @staticmethod
    def aggregate(records: Sequence[ComparisonRecord]) -> dict:
        """Per-regime, per-method max/median of each relative error column."""
        out: dict = {}
        by_regime: dict = {}
        for rec in records:
            by_regime.setdefault(rec.regime or "unlabeled", []).append(rec)
        for regime in sorted(by_regime):
            recs = by_regime[regime]
            regime_out = {"count": len(recs)}
            for method in ("sines", "cosines"):
                errs = [getattr(r, method) for r in recs if getattr(r, method) is not None]
                failures = sum(1 for r in recs if getattr(r, f"{method}_failure") is not None)
                stats = {"solved": len(errs), "failures": failures}
                for field in ("c_rel", "theta_rel", "phi_rel"):
                    vals = [getattr(e, field) for e in errs]
                    stats[f"max_{field}"] = max(vals) if vals else None
                    stats[f"median_{field}"] = statistics.median(vals) if vals else None
                regime_out[method] = stats
            out[regime] = regime_out
        return out

    def to_dict(self) -> dict:
        return {
            "aggregates": self.aggregates,
            "records": [
                {
                    "a": r.a,
                    "b": r.b,
                    "omega_deg": r.omega_deg,
                    "regime": r.regime,
                    "sines": None if r.sines is None else vars(r.sines),
                    "cosines": None if r.cosines is None else vars(r.cosines),
                    "sines_failure": r.sines_failure,
                    "cosines_failure": r.cosines_failure,
                    "reference_failure": r.reference_failure,
                }
                for r in self.records
            ],
        }


def _errors_against(ref: TriangleSolution, sol: TriangleSolution) -> MethodErrors:
    return MethodErrors(
        c_rel=abs(sol.c - ref.c) / ref.c,
        theta_rel=abs(sol.theta_deg - ref.theta_deg) / ref.theta_deg,
        phi_rel=abs(sol.phi_deg - ref.phi_deg) / ref.phi_deg,
    )


def compare_methods(
    problems: Sequence[SasProblem], regime: Optional[str] = None
) -> ComparisonReport:
    """Run both double-precision methods and the reference on every problem.

    Individual solver failures become per-record annotations, never an abort.
    """
    if not problems:
        raise DomainError("compare_methods requires a non-empty problem list")
    records = []
    for p in problems:
        sines = cosines = None
        sines_failure = cosines_failure = reference_failure = None
        try:
            ref = reference_solution(p)
        except DomainError as exc:
            reference_failure = str(exc)
            ref = None
        if ref is not None:
            try:
                sines = _errors_against(ref, solve_sas_sines(p))
            except DomainError as exc:
                sines_failure = str(exc)
            try:
                cosines = _errors_against(ref, solve_sas_cosines(p))
            except DomainError as exc:
                cosines_failure = str(exc)
        records.append(
            ComparisonRecord(
                a=p.a,
                b=p.b,
                omega_deg=p.omega_deg,
                regime=regime,
                sines=sines,
                cosines=cosines,
                sines_failure=sines_failure,
                cosines_failure=cosines_failure,
                reference_failure=reference_failure,
            )
        )
    return ComparisonReport(records=records, aggregates=ComparisonReport.aggregate(records))


def compare_regimes(count: int, seed: int, regimes: Sequence[str] = REGIMES) -> ComparisonReport:
    """One merged report covering several regimes, count problems each."""
    records: list[ComparisonRecord] = []
    for regime in regimes:
        corpus = generate_corpus(CorpusSpec(regime=regime, count=count, seed=seed))
        records.extend(compare_methods(corpus, regime=regime).records)
    return ComparisonReport(records=records, aggregates=ComparisonReport.aggregate(records))
