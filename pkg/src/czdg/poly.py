"""Sparse multivariate polynomials with integer coefficients.

A :class:`Poly` stores a mapping from exponent vectors to nonzero integer
coefficients. Variables are positional; names live with whoever owns the
polynomial (a presentation or an AST node).
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def monomial_key(m: Monomial) -> tuple:
    """Sort key for graded-lex order (total degree first, then exponents)."""
    return (sum(m), m)


class Poly:
    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, int], nvars: int):
        clean = {}
        for mono, c in terms.items():
            if len(mono) != nvars:
                raise ValueError(f"exponent vector {mono} does not have length {nvars}")
            if c:
                clean[tuple(mono)] = int(c)
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def constant(cls, c: int, nvars: int) -> "Poly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Poly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({mono: 1}, nvars)

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self.nvars)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self._terms.items()}, self.nvars)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def reduce_mod(self, n: int) -> "Poly":
        return Poly({m: c % n for m, c in self._terms.items()}, self.nvars)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        names = default_names(self.nvars)
        return f"Poly({format_poly(self, names)!r})"


def default_names(nvars: int) -> list[str]:
    base = ["x", "y", "z", "w", "u", "v", "t", "s"]
    if nvars <= len(base):
        return base[:nvars]
    return [f"x{i}" for i in range(nvars)]


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts)


def format_poly(p: Poly, names: Sequence[str]) -> str:
    """Render in descending graded-lex order, e.g. ``x^2 - 2x + 1``."""
    if p.is_zero():
        return "0"
    out = []
    for i, mono in enumerate(sorted(p._terms, key=monomial_key, reverse=True)):
        c = p._terms[mono]
        body = format_monomial(mono, names)
        mag = abs(c)
        if body:
            text = body if mag == 1 else f"{mag}{body}"
        else:
            text = str(mag)
        if i == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(out)


def ideal_power(gens: Iterable[Poly], m: int) -> list[Poly]:
    """All degree-``m`` products of ``gens`` (multiset choose), deduplicated in order."""
    gens = list(gens)
    seen: set[Poly] = set()
    out: list[Poly] = []
    for combo in combinations_with_replacement(range(len(gens)), m):
        prod = Poly.constant(1, gens[0].nvars)
        for idx in combo:
            prod = prod * gens[idx]
        if prod not in seen and not prod.is_zero():
            seen.add(prod)
            out.append(prod)
    return out


def monomials_up_to(nvars: int, degree: int) -> list[Monomial]:
    """Every exponent vector of total degree <= ``degree``."""
    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    return out
