"""Differential testing of the three decision procedures.

The harness samples coefficient space (including every degenerate stratum
the case analysis branches on), runs all deciders on each sample, attacks
PSD verdicts with an exact point sweep, confirms NotPSD verdicts with
witness search, and classifies closed-form disagreements.  Structural and
oracle verdicts rest on proven equivalences, so a disagreement between
them can only be an implementation bug and aborts the run; closed-form
disagreements are findings, not errors, and are tallied.

Reports are JSON Lines (one record per sample) plus a JSON summary.
Records are byte-deterministic for a fixed configuration; the summary
additionally carries the elapsed wall time, which is excluded from any
determinism comparison.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import kernels
from .decider import (
    decide_closed_form,
    decide_oracle,
    decide_structural,
    eval_polys,
    find_witness,
    DEFAULT_WITNESS_BUDGET,
)
from .form import CyclicParams, eval_form, radicand
from .quartic_rules import SpecialQuartic, discriminants
from .scalars import format_rational

__all__ = [
    "STRATA",
    "FuzzConfig",
    "DiscrepancyReport",
    "stratum_sampler",
    "sample_falsifier",
    "fuzz_compare",
]

STRATA = ("generic", "R_zero", "f3_zero", "f1_zero", "f5_zero_near", "case1_boundary")

_FALSIFIER_FACES = (1, 2, 4, 8, 16, 32, 64, 128)


@dataclass(frozen=True)
class FuzzConfig:
    sample_count: int = 200
    coefficient_range: tuple[Fraction, Fraction] = (Fraction(-1000), Fraction(1000))
    denominator_bound: int = 64
    seed: int = 0
    strata: tuple[str, ...] = ("generic",)
    falsifier_budget: int = 4000
    witness_budget: int = DEFAULT_WITNESS_BUDGET

    def __post_init__(self):
        lo, hi = (Fraction(v) for v in self.coefficient_range)
        if not lo < hi:
            raise ValueError("coefficient_range must satisfy lo < hi")
        object.__setattr__(self, "coefficient_range", (lo, hi))
        object.__setattr__(self, "strata", tuple(self.strata))
        if self.sample_count < 1:
            raise ValueError("sample_count must be positive")
        if self.denominator_bound < 1:
            raise ValueError("denominator_bound must be positive")
        for stratum in self.strata:
            if stratum not in STRATA:
                raise ValueError(f"unknown stratum {stratum!r}")

    def to_dict(self) -> dict:
        return {
            "sample_count": self.sample_count,
            "coefficient_range": [str(v) for v in self.coefficient_range],
            "denominator_bound": self.denominator_bound,
            "seed": self.seed,
            "strata": list(self.strata),
            "falsifier_budget": self.falsifier_budget,
            "witness_budget": self.witness_budget,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FuzzConfig":
        kwargs = dict(data)
        if "coefficient_range" in kwargs:
            lo, hi = kwargs["coefficient_range"]
            kwargs["coefficient_range"] = (Fraction(str(lo)), Fraction(str(hi)))
        if "strata" in kwargs:
            kwargs["strata"] = tuple(kwargs["strata"])
        return cls(**kwargs)


@dataclass
class DiscrepancyReport:
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in self.records)

    def write_jsonl(self, path: str) -> None:
        with open(path, "w") as handle:
            handle.write(self.to_jsonl())


def _random_rational(rng: random.Random, lo: Fraction, hi: Fraction, den_bound: int) -> Fraction:
    """Bounded-denominator rational, magnitude log-uniform up to the range."""
    den = rng.randint(1, den_bound)
    scale = Fraction(10 ** rng.randint(0, 3))
    lo_eff = max(lo, -scale)
    hi_eff = min(hi, scale)
    lo_num = math.ceil(lo_eff * den)
    hi_num = math.floor(hi_eff * den)
    if lo_num > hi_num:
        lo_num, hi_num = math.ceil(lo * den), math.floor(hi * den)
    return Fraction(rng.randint(lo_num, hi_num), den)


def stratum_sampler(
    stratum: str,
    rng: random.Random,
    coefficient_range: tuple[Fraction, Fraction] = (Fraction(-1000), Fraction(1000)),
    denominator_bound: int = 64,
) -> CyclicParams:
    """Draw one parameter point lying exactly on the requested stratum."""
    lo, hi = coefficient_range

    def draw() -> Fraction:
        return _random_rational(rng, lo, hi, denominator_bound)

    if stratum == "generic":
        return CyclicParams(draw(), draw(), draw(), draw())
    if stratum == "R_zero":
        k, m = draw(), draw()
        return CyclicParams(k, (4 * k + 2 * m - 8) / 2, m, m)
    if stratum == "f3_zero":
        k, l, m = draw(), draw(), draw()
        return CyclicParams(k, l, m, -1 - k - l - m)
    if stratum == "f1_zero":
        k, l, m = draw(), draw(), draw()
        return CyclicParams(k, l, m, 2 + k - m)
    if stratum == "f5_zero_near":
        batch = [CyclicParams(draw(), draw(), draw(), draw()) for _ in range(32)]
        return min(batch, key=lambda c: (abs(eval_polys(c).f5), c.k, c.l, c.m, c.n))
    if stratum == "case1_boundary":
        m = draw()
        gap = abs(draw()) + Fraction(1, denominator_bound)
        k = (m * m + 8) / 4 - gap  # makes g2 = -4*gap < 0 exactly
        return CyclicParams(k, (4 * k + 2 * m - 8) / 2, m, m)
    raise ValueError(f"unknown stratum {stratum!r}")


def sample_falsifier(
    c: CyclicParams, budget: int
) -> Optional[tuple[Fraction, Fraction, Fraction]]:
    """Deterministic sweep of rational points on the unit cube surface.

    Scans the face x = 1 with denominators doubling up to the budget; by
    the cyclic and sign symmetries of F this face covers the whole surface
    max(|x|,|y|,|z|) = 1.  Returns the first point with F < 0 exactly.
    """
    point, _ = kernels.find_negative_on_faces(c, _FALSIFIER_FACES, budget, dyadic=True)
    return point


def _in_erratum_region(c: CyclicParams, polys) -> bool:
    return (
        polys.g4 == 0
        and polys.f2 == 0
        and polys.g1 > 0
        and polys.g3 >= 0
        and polys.g2 < 0
        and c.k + c.m - 1 < 0
    )


def _classify_disagreement(c: CyclicParams, polys, rad: Fraction) -> str:
    if _in_erratum_region(c, polys):
        return "erratum-region"
    if (
        polys.f5 == 0
        or polys.f6 == 0
        or polys.f7 == 0
        or polys.f3 == 0
        or polys.f1 == 0
        or rad == 0
    ):
        return "boundary"
    return "unexplained"


def _params_dict(c: CyclicParams) -> dict:
    return {name: format_rational(getattr(c, name)) for name in ("k", "l", "m", "n")}


def _polys_dict(polys) -> dict:
    return {
        name: format_rational(getattr(polys, name))
        for name in ("f1", "f2", "f3", "f4", "f5", "f6", "f7", "g1", "g2", "g3", "g4")
    }


def fuzz_compare(cfg: FuzzConfig, record_sink=None) -> DiscrepancyReport:
    """Run the differential comparison; deterministic given the config.

    A structural-vs-oracle disagreement, or an exact negative point found
    on a structurally-PSD sample, raises AssertionError: both can only be
    implementation bugs.  Everything else is reported as data.

    ``record_sink``, when given, receives each record dict as soon as it is
    produced, so a crashed or aborted run still leaves salvageable JSONL
    output behind.
    """
    started = time.monotonic()
    records: list[dict] = []
    strata_counts = {s: 0 for s in cfg.strata}
    closed_tally = {
        variant: {"agree": 0, "erratum-region": 0, "boundary": 0, "unexplained": 0}
        for variant in ("theorem", "proof", "corrected")
    }
    identity_checked = 0
    identity_holds = {"d2": 0, "d3": 0, "d4": 0}
    boundary_tally = {"f5_zero": 0, "f6_zero": 0, "f7_zero": 0}
    theorem_proof_disagreements = 0
    psd_count = 0
    witness_failures = 0
    erratum_hits = 0

    for index in range(cfg.sample_count):
        stratum = cfg.strata[index % len(cfg.strata)]
        rng = random.Random(cfg.seed ^ index)
        c = stratum_sampler(stratum, rng, cfg.coefficient_range, cfg.denominator_bound)
        strata_counts[stratum] += 1

        polys = eval_polys(c)
        rad = radicand(c)
        structural = decide_structural(c)
        oracle = decide_oracle(c)
        if structural.is_psd != oracle.is_psd:
            raise AssertionError(
                f"structural/oracle disagreement at {c}: "
                f"{structural.is_psd} vs {oracle.is_psd}"
            )
        closed = {
            variant: decide_closed_form(c, variant)
            for variant in ("theorem", "proof", "corrected")
        }

        witness = None
        witness_value = None
        witness_exhausted = False
        falsifier_checked = 0
        if structural.is_psd:
            psd_count += 1
            attack, falsifier_checked = kernels.find_negative_on_faces(
                c, _FALSIFIER_FACES, cfg.falsifier_budget, dyadic=True
            )
            if attack is not None:
                raise AssertionError(
                    f"falsifier refuted a PSD verdict at {c}: point {attack}"
                )
        else:
            witness = find_witness(c, cfg.witness_budget)
            if witness is None:
                witness_exhausted = True
                witness_failures += 1
            else:
                witness_value = eval_form(c, *witness)

        disagreements = {}
        for variant, verdict in closed.items():
            if verdict.is_psd == structural.is_psd:
                disagreements[variant] = "agree"
                closed_tally[variant]["agree"] += 1
            else:
                kind = _classify_disagreement(c, polys, rad)
                disagreements[variant] = kind
                closed_tally[variant][kind] += 1

        if closed["theorem"].is_psd != closed["proof"].is_psd:
            theorem_proof_disagreements += 1
        if _in_erratum_region(c, polys):
            erratum_hits += 1
        if polys.f5 == 0:
            boundary_tally["f5_zero"] += 1
        if polys.f6 == 0:
            boundary_tally["f6_zero"] += 1
        if polys.f7 == 0:
            boundary_tally["f7_zero"] += 1

        if polys.f1 != 0:
            # exact proportionality between the clause polynomials and the
            # discriminants of g: D2 = 108*f1^2*f6, D3 = 324*f1^2*f7,
            # D4 = 104976*f1^2*f3*f5
            quartic = SpecialQuartic(
                a0=3 * polys.f1,
                a1_squared=rad,
                a1_sign=-1 if rad > 0 else 0,
                a2=3 * (4 + c.m + c.n - c.l),
                a4=polys.f3,
            )
            _, d2, d3, d4 = discriminants(quartic)
            identity_checked += 1
            if d2 == 108 * polys.f1 ** 2 * polys.f6:
                identity_holds["d2"] += 1
            if d3 == 324 * polys.f1 ** 2 * polys.f7:
                identity_holds["d3"] += 1
            if d4 == 104976 * polys.f1 ** 2 * polys.f3 * polys.f5:
                identity_holds["d4"] += 1

        record = {
            "index": index,
            "stratum": stratum,
            "params": _params_dict(c),
            "R": format_rational(rad),
            "polys": _polys_dict(polys),
            "verdicts": {
                "structural": {
                    "is_psd": structural.is_psd,
                    "fired_clause": structural.fired_clause,
                },
                "oracle": {
                    "is_psd": oracle.is_psd,
                    "fired_clause": oracle.fired_clause,
                },
                **{
                    f"closed_{variant}": {
                        "is_psd": verdict.is_psd,
                        "fired_clause": verdict.fired_clause,
                    }
                    for variant, verdict in closed.items()
                },
            },
            "witness": [format_rational(v) for v in witness] if witness else None,
            "witness_value": format_rational(witness_value)
            if witness_value is not None
            else None,
            "witness_budget_exhausted": witness_exhausted,
            "falsifier_checked": falsifier_checked,
            "closed_form_disagreements": disagreements,
        }
        records.append(record)
        if record_sink is not None:
            record_sink(record)

    summary = {
        "config": cfg.to_dict(),
        "kernel": kernels.IMPLEMENTATION,
        "samples": cfg.sample_count,
        "strata_counts": strata_counts,
        "structural_oracle_disagreements": 0,
        "falsifier_hits_on_psd": 0,
        "psd_count": psd_count,
        "notpsd_count": cfg.sample_count - psd_count,
        "witness_failures": witness_failures,
        "erratum_hits": erratum_hits,
        "closed_form": closed_tally,
        "theorem_proof_disagreements": theorem_proof_disagreements,
        "discriminant_identities": {
            "checked": identity_checked,
            "holds": identity_holds,
        },
        "boundary_tallies": boundary_tally,
        "elapsed_seconds": round(time.monotonic() - started, 3),
    }
    return DiscrepancyReport(records=records, summary=summary)
