"""Invariant suites run by ``hilb3 verify``.

Each suite walks every case up to ``max_n`` and records mismatches as
``(case id, expected, actual)``.  Output is deterministic: cases are visited
in canonical order and nothing time- or scheduling-dependent is reported.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ._parallel import pmap
from .localization import generic_subtorus, weighted_euler_hilb
from .partitions import MonomialIdeal, enumerate_partitions, format_ideal, iter_ideals, partition_count
from .series import dt_series, macmahon_series, stratification_sum
from .tangent import (WeightMultiset, ZeroWeightError, check_diagonal_free, check_parity,
                      check_weight_cone, tangent_character)

STRATA_CHI = range(-5, 6)


@dataclass
class VerificationOutcome:
    suite: str
    max_n: int
    cases_checked: int = 0
    failures: list[tuple[str, object, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, actual):
        self.cases_checked += 1
        if expected != actual:
            self.failures.append((case, expected, actual))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "cases_checked": self.cases_checked,
            "ok": self.ok,
            "failures": [{"case": c, "expected": e, "actual": a} for c, e, a in self.failures],
        }


def _ideals_upto(max_n: int) -> list[MonomialIdeal]:
    return [I for n in range(1, max_n + 1) for I in iter_ideals(n)]


def _characters(max_n: int, threads) -> list[tuple[MonomialIdeal, WeightMultiset]]:
    ideals = _ideals_upto(max_n)
    return list(zip(ideals, pmap(tangent_character, ideals, threads)))


def _case(ideal: MonomialIdeal) -> str:
    return f"n={ideal.colength} I={format_ideal(ideal)}"


def suite_count(max_n: int, threads=1) -> VerificationOutcome:
    out = VerificationOutcome("count", max_n)
    mac = macmahon_series(max_n)
    for n in range(max_n + 1):
        enumerated = len(enumerate_partitions(n))
        out.check(f"n={n} enumerate/macmahon", mac[n], enumerated)
        out.check(f"n={n} enumerate/partition_count", partition_count(n), enumerated)
    return out


def suite_parity(max_n: int, threads=1) -> VerificationOutcome:
    out = VerificationOutcome("parity", max_n)
    for ideal, ch in _characters(max_n, threads):
        try:
            ok = check_parity(ideal, ch)
        except ZeroWeightError as exc:
            ok = str(exc)
        out.check(_case(ideal), True, ok)
    return out


def suite_cone(max_n: int, threads=1) -> VerificationOutcome:
    out = VerificationOutcome("cone", max_n)
    for ideal, ch in _characters(max_n, threads):
        out.check(_case(ideal), True, check_weight_cone(ideal, ch))
    return out


def suite_diagonal(max_n: int, threads=1) -> VerificationOutcome:
    """Per-ideal diagonal freeness, plus one generic subtorus per colength."""
    out = VerificationOutcome("diagonal", max_n)
    by_n: dict[int, set] = {}
    for ideal, ch in _characters(max_n, threads):
        ok = check_diagonal_free(ideal, ch)
        out.check(_case(ideal), True, ok)
        if ok:
            by_n.setdefault(ideal.colength, set()).update(ch.weights())
    for n, weights in sorted(by_n.items()):
        lam = generic_subtorus(weights)
        out.check(f"n={n} generic subtorus", True, all(lam.pair(w) != 0 for w in weights))
    return out


def suite_strata(max_n: int, threads=1) -> VerificationOutcome:
    out = VerificationOutcome("strata", max_n)
    for chi in STRATA_CHI:
        dt = dt_series(chi, max_n)
        for n in range(max_n + 1):
            out.check(f"chi={chi} n={n}", dt[n], stratification_sum(chi, n))
    return out


def suite_fnu(max_n: int, threads=1) -> VerificationOutcome:
    out = VerificationOutcome("fnu", max_n)
    dt = dt_series(1, max_n)
    for n in range(max_n + 1):
        res = weighted_euler_hilb(n, threads)
        out.check(f"n={n} M(-t)", dt[n], res.weighted_euler)
        out.check(f"n={n} (-1)^n p_n", (-1) ** n * partition_count(n), res.weighted_euler)
    return out


SUITES: dict[str, Callable[..., VerificationOutcome]] = {
    "count": suite_count,
    "parity": suite_parity,
    "cone": suite_cone,
    "diagonal": suite_diagonal,
    "strata": suite_strata,
    "fnu": suite_fnu,
}


def run_suite(name: str, max_n: int, threads=1) -> list[VerificationOutcome]:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if name == "all":
        return [fn(max_n, threads) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](max_n, threads)]
