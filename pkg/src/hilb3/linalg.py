"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows; rows may be dense sequences or sparse
``{column: value}`` dicts.  Entries are converted to :class:`Fraction`, so no
rounding ever happens.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

Row = Union[Sequence, Mapping[int, object]]


def _sparse(row: Row) -> dict[int, Fraction]:
    items = row.items() if isinstance(row, Mapping) else enumerate(row)
    return {c: Fraction(v) for c, v in items if v != 0}


def row_echelon(rows: Sequence[Row]) -> list[tuple[int, dict[int, Fraction]]]:
    """Reduced echelon form as ``(pivot column, row)`` pairs, pivots normalized to 1."""
    basis: list[tuple[int, dict[int, Fraction]]] = []
    for raw in rows:
        r = _sparse(raw)
        for piv, b in basis:
            f = r.get(piv)
            if f:
                for c, v in b.items():
                    nv = r.get(c, 0) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
        if not r:
            continue
        piv = min(r)
        inv = 1 / r[piv]
        r = {c: v * inv for c, v in r.items()}
        # keep earlier rows reduced against the new pivot
        for _, b in basis:
            f = b.get(piv)
            if f:
                for c, v in r.items():
                    nv = b.get(c, 0) - f * v
                    if nv:
                        b[c] = nv
                    else:
                        b.pop(c, None)
        basis.append((piv, r))
    basis.sort(key=lambda pr: pr[0])
    return basis


def rank(rows: Sequence[Row]) -> int:
    return len(row_echelon(rows))


def nullity(rows: Sequence[Row], ncols: int) -> int:
    """Dimension of ``{v : M v = 0}`` for an ``len(rows) x ncols`` matrix."""
    return ncols - rank(rows)


def nullspace(rows: Sequence[Row], ncols: int) -> list[list[Fraction]]:
    """A basis of the right kernel, one vector per free column."""
    ech = row_echelon(rows)
    pivots = {p for p, _ in ech}
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for p, r in ech:
            v[p] = -r.get(free, Fraction(0))
        out.append(v)
    return out
