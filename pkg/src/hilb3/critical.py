"""Critical loci Z(df) of functions invariant under a diagonal G_m-action on A^n.

``f`` is invariant when every monomial has weighted degree zero for the
variable weights ``r``.  If moreover all ``r_i`` are nonzero and
``f`` lies in the cube of the maximal ideal, the origin is an isolated fixed
point with ``dim T = n``, the Milnor fiber carries a free circle action, and
the Behrend function there is ``(-1)^n``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import rank

__all__ = [
    "NotInvariantError",
    "NotIsolatedError",
    "NotInMCubedError",
    "QuasiHomogPoly",
    "hessian_matrix",
    "hessian_tangent_dim",
    "in_m_cubed",
    "is_invariant",
    "jacobian_generators",
    "nu_isolated",
    "parse_poly",
    "parse_weights",
]


class NotIsolatedError(ValueError):
    def __init__(self):
        super().__init__("fixed point not isolated (some weight r_i is 0)")


class NotInvariantError(ValueError):
    def __init__(self, exponent=None):
        msg = "polynomial is not invariant under the G_m-action"
        if exponent is not None:
            msg += f" (monomial {exponent} has nonzero weighted degree)"
        super().__init__(msg)


class NotInMCubedError(ValueError):
    def __init__(self):
        super().__init__("tangent space not all of ambient space: f is not in m^3; "
                         "use hessian_tangent_dim")


@dataclass(frozen=True)
class QuasiHomogPoly:
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        weights = tuple(int(r) for r in self.weights)
        n = len(weights)
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        merged: dict[tuple[int, ...], Fraction] = {}
        for e, c in items:
            e = tuple(int(k) for k in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            if min(e, default=0) < 0:
                raise ValueError(f"negative exponent {e}")
            merged[e] = merged.get(e, Fraction(0)) + Fraction(c)
        clean = tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "weights", weights)

    @property
    def num_vars(self) -> int:
        return len(self.weights)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return dict(self.terms).get(tuple(exponent), Fraction(0))

    def weighted_degree(self, exponent: Sequence[int]) -> int:
        return sum(e * r for e, r in zip(exponent, self.weights))

    def weighted_degrees(self) -> set[int]:
        return {self.weighted_degree(e) for e, _ in self.terms}

    def scale(self, c) -> "QuasiHomogPoly":
        c = Fraction(c)
        return QuasiHomogPoly(tuple((e, v * c) for e, v in self.terms), self.weights)

    def derivative(self, i: int) -> "QuasiHomogPoly":
        out = []
        for e, c in self.terms:
            if e[i]:
                d = list(e)
                d[i] -= 1
                out.append((tuple(d), c * e[i]))
        return QuasiHomogPoly(tuple(out), self.weights)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return format_poly(self)


def is_invariant(f: QuasiHomogPoly) -> bool:
    return all(f.weighted_degree(e) == 0 for e, _ in f.terms)


def in_m_cubed(f: QuasiHomogPoly) -> bool:
    return all(sum(e) >= 3 for e, _ in f.terms)


def jacobian_generators(f: QuasiHomogPoly) -> list[QuasiHomogPoly]:
    """Partial derivatives; for invariant f the i-th is homogeneous of weight -r_i."""
    return [f.derivative(i) for i in range(f.num_vars)]


def hessian_matrix(f: QuasiHomogPoly) -> list[list[Fraction]]:
    """Second derivatives of f at the origin (only the quadratic part matters)."""
    n = f.num_vars
    h = [[Fraction(0)] * n for _ in range(n)]
    for e, c in f.terms:
        if sum(e) != 2:
            continue
        idx = [i for i in range(n) for _ in range(e[i])]
        i, j = idx
        if i == j:
            h[i][i] += 2 * c
        else:
            h[i][j] += c
            h[j][i] += c
    return h


def hessian_tangent_dim(f: QuasiHomogPoly) -> int:
    """dim of the Zariski tangent space of Z(df) at the origin: n - rank Hess_0(f)."""
    return f.num_vars - rank(hessian_matrix(f))


def nu_isolated(f: QuasiHomogPoly) -> int:
    """Behrend function of Z(df) at the origin: (-1)^n for invariant f in m^3."""
    if any(r == 0 for r in f.weights):
        raise NotIsolatedError()
    if not in_m_cubed(f):
        raise NotInMCubedError()
    for e, _ in f.terms:
        if f.weighted_degree(e) != 0:
            raise NotInvariantError(e)
    return (-1) ** f.num_vars


# -- text format --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _variable_index(name: str, n: int) -> int:
    if n <= 3 and name in ("x", "y", "z"):
        idx = "xyz".index(name)
    else:
        m = re.fullmatch(r"x(\d+)", name)
        if not m:
            raise ValueError(f"unknown variable {name!r}")
        idx = int(m.group(1)) - 1
    if not 0 <= idx < n:
        raise ValueError(f"variable {name!r} out of range for {n} variables")
    return idx


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("var", name))
        elif sym in "+-*/^":
            out.append(("op", sym))
        else:
            raise ValueError(f"unexpected token {sym!r}")
        pos = m.end()
    return out


def parse_poly(text: str, weights: Sequence[int]) -> QuasiHomogPoly:
    """Parse ``"2*x^2*y - x*z^3"``; variables x1..xn, or x, y, z when n <= 3."""
    n = len(weights)
    toks = _tokens(text)
    if not toks:
        raise ValueError("empty polynomial")
    terms: dict[tuple[int, ...], Fraction] = {}
    i = 0

    def expect_int(where: str) -> int:
        nonlocal i
        if i >= len(toks) or toks[i][0] != "num":
            got = toks[i][1] if i < len(toks) else "end of input"
            raise ValueError(f"expected integer {where}, got {got!r}")
        i += 1
        return int(toks[i - 1][1])

    sign = 1
    if toks[0] == ("op", "-"):
        sign, i = -1, 1
    elif toks[0] == ("op", "+"):
        i = 1
    while True:
        coeff = Fraction(sign)
        exp = [0] * n
        while True:
            if i >= len(toks):
                raise ValueError("polynomial ends with an operator")
            kind, val = toks[i]
            if kind == "num":
                i += 1
                c = Fraction(int(val))
                if i < len(toks) and toks[i] == ("op", "/"):
                    i += 1
                    den = expect_int("after '/'")
                    if den == 0:
                        raise ValueError("division by zero")
                    c /= den
                coeff *= c
            elif kind == "var":
                i += 1
                k = _variable_index(val, n)
                power = 1
                if i < len(toks) and toks[i] == ("op", "^"):
                    i += 1
                    power = expect_int(f"as exponent of {val!r}")
                exp[k] += power
            else:
                raise ValueError(f"unexpected token {val!r}")
            if i < len(toks) and toks[i] == ("op", "*"):
                i += 1
                continue
            break
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
        if i >= len(toks):
            break
        kind, val = toks[i]
        if (kind, val) == ("op", "+"):
            sign = 1
        elif (kind, val) == ("op", "-"):
            sign = -1
        else:
            raise ValueError(f"unexpected token {val!r}")
        i += 1
    return QuasiHomogPoly(tuple(terms.items()), tuple(weights))


def parse_weights(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    out = []
    for p in parts:
        if not re.fullmatch(r"[+-]?\d+", p):
            raise ValueError(f"bad weight {p!r}")
        out.append(int(p))
    if not out:
        raise ValueError("no weights given")
    return tuple(out)


def format_poly(f: QuasiHomogPoly) -> str:
    if f.is_zero():
        return "0"
    names = list("xyz") if f.num_vars <= 3 else [f"x{i + 1}" for i in range(f.num_vars)]
    pieces = []
    for e, c in sorted(f.terms, key=lambda t: (-sum(t[0]), tuple(-k for k in t[0]))):
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in pieces[1:]:
        out += f" {s} {body}"
    return out
