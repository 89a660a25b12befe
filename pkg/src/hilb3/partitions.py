"""Plane partitions and monomial ideals of finite colength in k[x, y, z].

A plane partition is stored as its height map: a tuple of rows, row ``i``
holding the heights ``h(i, 0) >= h(i, 1) >= ...`` (all positive).  Its boxes
are the exponent vectors ``(i, j, c)`` with ``c < h(i, j)``; the complement of
the box set is the set of exponents of a monomial ideal, and the boxes are
its standard monomials.

Canonical order of partitions of a fixed size is Python tuple order on the
height map, i.e. row-major lexicographic with rows compared as tuples.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Exponent = tuple[int, int, int]

__all__ = [
    "Exponent",
    "InfiniteColengthError",
    "MonomialIdeal",
    "PlanePartition",
    "enumerate_partitions",
    "format_ideal",
    "from_ideal",
    "iter_partitions",
    "iter_ideals",
    "parse_ideal",
    "partition_count",
    "quotient_basis",
    "to_ideal",
]

_UNIT = (0, 0, 0)
_AXES = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class InfiniteColengthError(ValueError):
    def __init__(self, msg: str = "infinite colength"):
        super().__init__(msg)


@dataclass(frozen=True, order=True)
class PlanePartition:
    heights: tuple[tuple[int, ...], ...] = ()
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(h) for h in row) for row in self.heights)
        prev: tuple[int, ...] | None = None
        for row in rows:
            if not row:
                raise ValueError("empty row in height map")
            if any(h <= 0 for h in row):
                raise ValueError("heights must be positive")
            if any(row[j + 1] > row[j] for j in range(len(row) - 1)):
                raise ValueError(f"row {row} is not weakly decreasing")
            if prev is not None:
                if len(row) > len(prev) or any(a > b for a, b in zip(row, prev)):
                    raise ValueError(f"row {row} exceeds the row above it")
            prev = row
        object.__setattr__(self, "heights", rows)
        object.__setattr__(self, "size", sum(map(sum, rows)))

    def height(self, i: int, j: int) -> int:
        if 0 <= i < len(self.heights) and 0 <= j < len(self.heights[i]):
            return self.heights[i][j]
        return 0

    def __contains__(self, box) -> bool:
        a, b, c = box
        return a >= 0 and b >= 0 and 0 <= c < self.height(a, b)

    def boxes(self) -> list[Exponent]:
        return [(i, j, c)
                for i, row in enumerate(self.heights)
                for j, h in enumerate(row)
                for c in range(h)]

    @classmethod
    def from_boxes(cls, boxes: Iterable[Sequence[int]]) -> "PlanePartition":
        """Build from a box set; raises ValueError unless it is a staircase."""
        box_set = {tuple(b) for b in boxes}
        hmap: dict[tuple[int, int], int] = {}
        for a, b, c in box_set:
            if min(a, b, c) < 0:
                raise ValueError(f"negative box {(a, b, c)}")
            hmap[a, b] = max(hmap.get((a, b), 0), c + 1)
        if not hmap:
            return cls(())
        nrows = 1 + max(a for a, _ in hmap)
        rows = []
        for a in range(nrows):
            ncols = 1 + max((b for r, b in hmap if r == a), default=-1)
            rows.append(tuple(hmap.get((a, b), 0) for b in range(ncols)))
        if any(not r or 0 in r for r in rows):
            raise ValueError("box set is not closed under decreasing coordinates")
        pp = cls(tuple(rows))
        if pp.size != len(box_set):
            raise ValueError("box set is not closed under decreasing coordinates")
        return pp

    def to_json(self) -> dict:
        ideal = to_ideal(self)
        return {
            "n": self.size,
            "generators": [list(g) for g in ideal.generators],
            "heights": [list(r) for r in self.heights],
        }


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain in N^3).

    The unit ideal is the single generator ``(0, 0, 0)``.  Ideals of infinite
    colength can be built, but every operation that needs the quotient raises
    :class:`InfiniteColengthError` on them.
    """

    generators: tuple[Exponent, ...]

    def __post_init__(self):
        gens = sorted({tuple(int(e) for e in g) for g in self.generators})
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if len(g) != 3 or min(g) < 0:
                raise ValueError(f"bad exponent vector {g}")
        for g in gens:
            for h in gens:
                if g != h and _divides(g, h):
                    raise ValueError(f"generators not minimal: {g} divides {h}")
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def generated_by(cls, exponents: Iterable[Sequence[int]]) -> "MonomialIdeal":
        """Ideal generated by arbitrary monomials; non-minimal ones are dropped."""
        exps = {tuple(e) for e in exponents}
        minimal = [e for e in exps if not any(f != e and _divides(f, e) for f in exps)]
        return cls(tuple(minimal))

    def __contains__(self, exponent) -> bool:
        return any(_divides(g, exponent) for g in self.generators)

    def is_standard(self, exponent: Sequence[int]) -> bool:
        """True for a nonnegative exponent vector outside the ideal."""
        return min(exponent) >= 0 and exponent not in self

    def pure_powers(self) -> tuple[int, int, int] | None:
        """Smallest ``(a, b, c)`` with x^a, y^b, z^c in the ideal, or None."""
        out = []
        for axis in range(3):
            pure = [g[axis] for g in self.generators
                    if all(g[k] == 0 for k in range(3) if k != axis)]
            if not pure:
                return None
            out.append(min(pure))
        return tuple(out)

    @property
    def is_finite_colength(self) -> bool:
        return self.pure_powers() is not None

    def standard_monomials(self) -> list[Exponent]:
        bounds = self.pure_powers()
        if bounds is None:
            raise InfiniteColengthError()
        a, b, c = bounds
        return [(i, j, k)
                for i in range(a) for j in range(b) for k in range(c)
                if (i, j, k) not in self]

    @property
    def colength(self) -> int:
        return len(self.standard_monomials())

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Relabel axes: new coordinate ``k`` is old coordinate ``perm[k]``."""
        return MonomialIdeal(tuple(tuple(g[p] for p in perm) for g in self.generators))

    def to_json(self) -> dict:
        return {"n": self.colength, "generators": [list(g) for g in self.generators]}

    def __str__(self) -> str:
        return format_ideal(self, style="monomial")


def to_ideal(pp: PlanePartition) -> MonomialIdeal:
    if pp.size == 0:
        return MonomialIdeal((_UNIT,))
    gens = set()
    for box in pp.boxes():
        for e in _AXES:
            cand = (box[0] + e[0], box[1] + e[1], box[2] + e[2])
            if cand in pp:
                continue
            # minimal non-box: every one-step decrease lands in the box set
            if all(cand[k] == 0 or
                   (cand[0] - _AXES[k][0], cand[1] - _AXES[k][1], cand[2] - _AXES[k][2]) in pp
                   for k in range(3)):
                gens.add(cand)
    return MonomialIdeal(tuple(gens))


def from_ideal(ideal: MonomialIdeal) -> PlanePartition:
    return PlanePartition.from_boxes(ideal.standard_monomials())


def quotient_basis(ideal: MonomialIdeal) -> list[Exponent]:
    """Standard monomials, graded by total degree, x-heaviest first within a degree."""
    return sorted(ideal.standard_monomials(), key=lambda e: (sum(e), -e[0], -e[1], -e[2]))


# -- enumeration --------------------------------------------------------------

def _rows(bound: tuple[int, ...] | None, budget: int) -> Iterator[tuple[int, ...]]:
    """Nonempty weakly decreasing rows under ``bound`` with sum <= budget, lex order."""

    def cap(j: int) -> int:
        if bound is None:
            return budget
        return bound[j] if j < len(bound) else 0

    def grow(prefix: tuple[int, ...], left: int) -> Iterator[tuple[int, ...]]:
        if prefix:
            yield prefix
        j = len(prefix)
        top = min(cap(j), left, prefix[-1] if prefix else left)
        for v in range(1, top + 1):
            yield from grow(prefix + (v,), left - v)

    yield from grow((), budget)


def iter_partitions(n: int) -> Iterator[PlanePartition]:
    """Stream plane partitions of ``n`` in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def extend(rows: tuple, prev, left: int):
        if left == 0:
            yield rows
            return
        for row in _rows(prev, left):
            yield from extend(rows + (row,), row, left - sum(row))

    for rows in extend((), None, n):
        yield PlanePartition(rows)


def enumerate_partitions(n: int) -> list[PlanePartition]:
    return list(iter_partitions(n))


def iter_ideals(n: int) -> Iterator[MonomialIdeal]:
    """Monomial ideals of colength ``n``, in the canonical partition order."""
    return (to_ideal(pp) for pp in iter_partitions(n))


@lru_cache(maxsize=None)
def _sigma2(k: int) -> int:
    return sum(d * d for d in range(1, k + 1) if k % d == 0)


_counts: list[int] = [1]


def partition_count(n: int) -> int:
    """Number of plane partitions of ``n``.

    Uses ``n p_n = sum_{k=1}^n sigma_2(k) p_{n-k}``, the logarithmic derivative
    of the product formula; independent of both the enumerator and the series
    module.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_counts) <= n:
        m = len(_counts)
        total = sum(_sigma2(k) * _counts[m - k] for k in range(1, m + 1))
        q, r = divmod(total, m)
        assert r == 0
        _counts.append(q)
    return _counts[n]


# -- text format --------------------------------------------------------------

_VAR = {"x": 0, "y": 1, "z": 2}
_MONO_FACTOR = re.compile(r"^([xyz])(?:\^(\d+))?$")


def _parse_monomial(tok: str) -> Exponent:
    if tok == "1":
        return _UNIT
    exp = [0, 0, 0]
    for factor in tok.replace(" ", "").split("*"):
        m = _MONO_FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r} in {tok!r}")
        exp[_VAR[m.group(1)]] += int(m.group(2) or 1)
    return tuple(exp)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``"2,0,0;0,1,0;0,0,1"`` or ``"x^2;y;z"`` (one generator per ``;``)."""
    toks = [t.strip() for t in text.strip().split(";")]
    if not toks or any(not t for t in toks):
        raise ValueError(f"empty generator in ideal {text!r}")
    gens = []
    for tok in toks:
        if "," in tok:
            parts = [p.strip() for p in tok.split(",")]
            if len(parts) != 3 or not all(re.fullmatch(r"\d+", p) for p in parts):
                raise ValueError(f"bad exponent triple {tok!r}")
            gens.append(tuple(int(p) for p in parts))
        else:
            gens.append(_parse_monomial(tok))
    return MonomialIdeal.generated_by(gens)


def _monomial_str(e: Exponent) -> str:
    if e == _UNIT:
        return "1"
    parts = []
    for name, k in zip("xyz", e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_ideal(ideal: MonomialIdeal, style: str = "triple") -> str:
    if style == "triple":
        return ";".join(",".join(map(str, g)) for g in ideal.generators)
    if style == "monomial":
        return ";".join(_monomial_str(g) for g in ideal.generators)
    raise ValueError(f"unknown style {style!r}")
