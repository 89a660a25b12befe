"""Zariski tangent space Hom_A(I, A/I) of Hilb^n(A^3) at a monomial ideal.

A homomorphism ``phi: I -> A/I`` is determined by the images of the minimal
generators ``m_g``, subject to the pairwise (Taylor) syzygies

    (L / m_g) phi(m_g) = (L / m_g') phi(m_g')   in A/I,   L = lcm(m_g, m_g').

The torus ``T = G_m^3`` grades everything by Z^3.  A homomorphism of weight
``w`` sends ``m_g`` to ``c_g x^(deg m_g + w)``, so each weight space is the
kernel of a small matrix in the unknowns ``c_g``.  :func:`dense_tangent_dim_oracle`
computes the same dimension without the grading, as an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from ._parallel import pmap
from .linalg import nullity, rank
from .partitions import Exponent, MonomialIdeal, quotient_basis

Weight = tuple[int, int, int]

__all__ = [
    "TangentReport",
    "Weight",
    "WeightMultiset",
    "ZeroWeightError",
    "check_diagonal_free",
    "check_parity",
    "check_weight_cone",
    "dense_tangent_dim_oracle",
    "syzygy_pairs",
    "tangent_character",
    "tangent_dim",
    "tangent_report",
]


class ZeroWeightError(ValueError):
    def __init__(self):
        super().__init__("zero weight: fixed point not isolated under T")


@dataclass(frozen=True)
class WeightMultiset:
    """Character of a T-representation: weights with positive multiplicities, sorted."""

    counts: tuple[tuple[Weight, int], ...] = ()

    def __post_init__(self):
        merged: dict[Weight, int] = {}
        for w, m in self.counts:
            w = tuple(int(c) for c in w)
            if len(w) != 3:
                raise ValueError(f"weight {w} is not a triple")
            if m < 1:
                raise ValueError(f"multiplicity of {w} must be positive, got {m}")
            merged[w] = merged.get(w, 0) + int(m)
        object.__setattr__(self, "counts", tuple(sorted(merged.items())))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Weight, int]) -> "WeightMultiset":
        return cls(tuple((w, m) for w, m in mapping.items() if m))

    @property
    def total_dim(self) -> int:
        return sum(m for _, m in self.counts)

    def weights(self) -> list[Weight]:
        return [w for w, _ in self.counts]

    def __iter__(self) -> Iterator[Weight]:
        """Each weight repeated by its multiplicity."""
        for w, m in self.counts:
            for _ in range(m):
                yield w

    def __getitem__(self, w: Weight) -> int:
        return dict(self.counts).get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self.counts)

    def permuted(self, perm) -> "WeightMultiset":
        return WeightMultiset(tuple((tuple(w[p] for p in perm), m) for w, m in self.counts))


def _add(a: Exponent, b: Exponent) -> Exponent:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def syzygy_pairs(ideal: MonomialIdeal) -> list[tuple[int, int, Exponent]]:
    """All ``(g, g', lcm)`` with ``g < g'`` indexing ``ideal.generators``."""
    gens = ideal.generators
    return [(i, j, tuple(max(a, b) for a, b in zip(gens[i], gens[j])))
            for i in range(len(gens)) for j in range(i + 1, len(gens))]


def _standard_set(ideal: MonomialIdeal) -> set[Exponent]:
    std = set(ideal.standard_monomials())
    if not std:
        raise ValueError("unit ideal has no tangent theory here")
    return std


def weight_space_dim(ideal: MonomialIdeal, w: Weight, *, _std=None, _pairs=None) -> int:
    """Dimension of the weight-``w`` part of Hom(I, A/I)."""
    std = _standard_set(ideal) if _std is None else _std
    pairs = syzygy_pairs(ideal) if _pairs is None else _pairs
    col = {}
    for g, m in enumerate(ideal.generators):
        if _add(m, w) in std:
            col[g] = len(col)
    if not col:
        return 0
    rows = []
    for g, h, lcm in pairs:
        if _add(lcm, w) not in std:
            continue
        row = {}
        if g in col:
            row[col[g]] = 1
        if h in col:
            row[col[h]] = -1
        if row:
            rows.append(row)
    return nullity(rows, len(col))


def tangent_character(ideal: MonomialIdeal) -> WeightMultiset:
    std = _standard_set(ideal)
    pairs = syzygy_pairs(ideal)
    candidates = {_sub(b, m) for b in std for m in ideal.generators}
    dims = {}
    for w in sorted(candidates):
        d = weight_space_dim(ideal, w, _std=std, _pairs=pairs)
        if d:
            dims[w] = d
    return WeightMultiset.from_mapping(dims)


def tangent_dim(ideal: MonomialIdeal) -> int:
    return tangent_character(ideal).total_dim


def dense_tangent_dim_oracle(ideal: MonomialIdeal) -> int:
    """Kernel dimension of the ungraded syzygy-defect map, by dense elimination.

    Columns are ``(generator, basis monomial)``; rows are ``(pair, basis
    monomial)``.  Shares nothing with the graded route except the
    elimination routine.
    """
    basis = quotient_basis(ideal)
    if not basis:
        raise ValueError("unit ideal has no tangent theory here")
    pos = {b: k for k, b in enumerate(basis)}
    gens = ideal.generators
    nb = len(basis)
    pairs = syzygy_pairs(ideal)
    ncols = len(gens) * nb
    matrix = [[0] * ncols for _ in range(len(pairs) * nb)]
    for p, (g, h, lcm) in enumerate(pairs):
        for gen, sign in ((g, 1), (h, -1)):
            shift = _sub(lcm, gens[gen])
            for k, b in enumerate(basis):
                target = pos.get(_add(b, shift))
                if target is not None:
                    matrix[p * nb + target][gen * nb + k] += sign
    return ncols - rank(matrix)


def check_weight_cone(ideal: MonomialIdeal, character: WeightMultiset | None = None) -> bool:
    """No tangent weight lies in the closed positive or open negative octant."""
    character = tangent_character(ideal) if character is None else character
    for w in character.weights():
        if min(w) >= 0 or max(w) < 0:
            return False
    return True


def check_diagonal_free(ideal: MonomialIdeal, character: WeightMultiset | None = None) -> bool:
    """No tangent weight is an integer multiple of (1, 1, 1)."""
    character = tangent_character(ideal) if character is None else character
    return not any(w[0] == w[1] == w[2] for w in character.weights())


def check_parity(ideal: MonomialIdeal, character: WeightMultiset | None = None) -> bool:
    """``(-1)^dim T = (-1)^n``.

    With every weight nonzero, prod(-w_i) / prod(w_i) is (-1)^d as a rational
    function on T, so the sign identity reduces to ``d = n (mod 2)``.
    """
    character = tangent_character(ideal) if character is None else character
    if any(w == (0, 0, 0) for w in character.weights()):
        raise ZeroWeightError()
    return (character.total_dim - ideal.colength) % 2 == 0


@dataclass(frozen=True)
class TangentReport:
    ideal: MonomialIdeal
    character: WeightMultiset
    dim: int
    parity_ok: bool
    cone_ok: bool
    diagonal_free: bool

    def to_json(self) -> dict:
        return {
            "n": self.ideal.colength,
            "generators": [list(g) for g in self.ideal.generators],
            "dim": self.dim,
            "weights": [[*w, m] for w, m in self.character.counts],
            "parity_ok": self.parity_ok,
            "cone_ok": self.cone_ok,
            "diagonal_free": self.diagonal_free,
        }


def tangent_report(ideal: MonomialIdeal) -> TangentReport:
    ch = tangent_character(ideal)
    return TangentReport(
        ideal=ideal,
        character=ch,
        dim=ch.total_dim,
        parity_ok=check_parity(ideal, ch),
        cone_ok=check_weight_cone(ideal, ch),
        diagonal_free=check_diagonal_free(ideal, ch),
    )


def tangent_reports(ideals: Iterable[MonomialIdeal], threads: int | None = 1) -> list[TangentReport]:
    return pmap(tangent_report, ideals, threads)
