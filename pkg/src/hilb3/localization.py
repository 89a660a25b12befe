"""Weighted Euler characteristics of Hilb^n(A^3) as signed sums over torus-fixed points.

Each fixed point is a monomial ideal and contributes ``(-1)^dim T`` where
``T`` is its Zariski tangent space.  A single one-parameter subgroup of the
Calabi-Yau torus ``T_0 = {t1 t2 t3 = 1}`` pairing nontrivially with every
tangent weight at every fixed point certifies that all fixed points are
isolated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Iterable, Iterator

from ._parallel import pmap
from .partitions import MonomialIdeal, iter_ideals, partition_count
from .tangent import Weight, check_diagonal_free, tangent_character

__all__ = [
    "LocalizationResult",
    "NoGenericSubtorusError",
    "OneParamSubgroup",
    "generic_subtorus",
    "nu_at_fixed_point",
    "spiral",
    "weighted_euler_hilb",
    "weighted_euler_stratum",
]


class NoGenericSubtorusError(ValueError):
    def __init__(self, weight=None):
        msg = "no generic subtorus exists"
        if weight is not None:
            msg += f" (weight {tuple(weight)} is a multiple of (1,1,1))"
        super().__init__(msg)


@dataclass(frozen=True)
class OneParamSubgroup:
    lam: tuple[int, int, int]

    def __post_init__(self):
        lam = tuple(int(c) for c in self.lam)
        if len(lam) != 3 or sum(lam) != 0:
            raise ValueError(f"{lam} does not land in T_0 (coordinates must sum to 0)")
        if lam == (0, 0, 0):
            raise ValueError("the trivial subgroup is not allowed")
        object.__setattr__(self, "lam", lam)

    def pair(self, w: Weight) -> int:
        return w[0] * self.lam[0] + w[1] * self.lam[1] + w[2] * self.lam[2]


def spiral() -> Iterator[tuple[int, int]]:
    """Nonzero integer points ring by ring (max-norm k = 1, 2, ...).

    Each ring starts at ``(k, -k)`` and runs counterclockwise:
    up the side a = k, left along b = k, down a = -k, right along b = -k.
    """
    for k in count(1):
        for b in range(-k, k + 1):
            yield (k, b)
        for a in range(k - 1, -k - 1, -1):
            yield (a, k)
        for b in range(k - 1, -k - 1, -1):
            yield (-k, b)
        for a in range(-k + 1, k):
            yield (a, -k)


def generic_subtorus(weights: Iterable[Weight]) -> OneParamSubgroup:
    """First ``(a, b, -a-b)`` along :func:`spiral` pairing nontrivially with every weight."""
    ws = {tuple(w) for w in weights}
    for w in ws:
        if w[0] == w[1] == w[2]:
            raise NoGenericSubtorusError(w)
    # <w, (a, b, -a-b)> = (w1 - w3) a + (w2 - w3) b; each weight kills one line
    lines = {(w[0] - w[2], w[1] - w[2]) for w in ws}
    for a, b in spiral():
        if all(p * a + q * b != 0 for p, q in lines):
            return OneParamSubgroup((a, b, -a - b))
    raise AssertionError("unreachable")


def nu_at_fixed_point(ideal: MonomialIdeal) -> int:
    """Behrend function value (-1)^dim T at an isolated fixed point."""
    ch = tangent_character(ideal)
    if not check_diagonal_free(ideal, ch):
        raise NoGenericSubtorusError(next(w for w in ch.weights() if w[0] == w[1] == w[2]))
    return -1 if ch.total_dim % 2 else 1


@dataclass(frozen=True)
class LocalizationResult:
    n: int
    fixed_point_count: int
    weighted_euler: int
    per_point: tuple[tuple[MonomialIdeal, int], ...] = field(repr=False)
    subgroup: OneParamSubgroup | None = None

    def to_json(self, per_point: bool = False) -> dict:
        out = {
            "n": self.n,
            "weighted_euler": self.weighted_euler,
            "fixed_point_count": self.fixed_point_count,
        }
        if per_point:
            out["subgroup"] = list(self.subgroup.lam) if self.subgroup else None
            out["per_point"] = [
                {"generators": [list(g) for g in ideal.generators], "sign": sign}
                for ideal, sign in self.per_point
            ]
        return out


def _point_data(ideal: MonomialIdeal) -> tuple[int, list[Weight]]:
    if ideal.generators == ((0, 0, 0),):
        # Hilb^0 is a reduced point
        return 1, []
    ch = tangent_character(ideal)
    if not check_diagonal_free(ideal, ch):
        raise NoGenericSubtorusError()
    return (-1 if ch.total_dim % 2 else 1), ch.weights()


def weighted_euler_hilb(n: int, threads: int | None = 1) -> LocalizationResult:
    if n < 0:
        raise ValueError("n must be nonnegative")
    ideals = list(iter_ideals(n))
    data = pmap(_point_data, ideals, threads)
    all_weights = {w for _, ws in data for w in ws}
    lam = generic_subtorus(all_weights)
    signs = tuple(s for s, _ in data)
    return LocalizationResult(
        n=n,
        fixed_point_count=len(ideals),
        weighted_euler=sum(signs),
        per_point=tuple(zip(ideals, signs)),
        subgroup=lam,
    )


def weighted_euler_stratum(n: int, selector: Callable[[MonomialIdeal], bool]) -> int:
    """Weighted Euler characteristic of the invariant locus cut out by ``selector``.

    The locus is represented by its fixed points, each contributing its
    sign (-1)^dim T; the parity lemma makes this (-1)^n times the count.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(_point_data(ideal)[0] for ideal in iter_ideals(n) if selector(ideal))


def expected_weighted_euler(n: int) -> int:
    return (-1) ** n * partition_count(n)
