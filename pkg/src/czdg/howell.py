"""Howell normal form of submodules of (Z/NZ)^m.

Over Z/NZ an ordinary echelon form does not give canonical coset
representatives, because a row can have a zero-divisor pivot whose
multiples vanish in the pivot column but not further right. The Howell
form adds those "annihilator" rows back in, which yields the property
that for every column ``c`` the rows whose pivot lies at or right of
``c`` span exactly the submodule of vectors that are zero left of ``c``.
With that property, reducing a vector row by row gives a unique residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def unit_normalizer(a: int, n: int) -> int:
    """A unit ``u`` mod ``n`` with ``u*a ≡ gcd(a, n) (mod n)``."""
    a %= n
    if a == 0:
        return 1
    g = gcd(a, n)
    m = n // g
    if m == 1:
        return 1
    u = pow(a // g, -1, m)
    while gcd(u, n) != 1:
        u += m
    return u % n


@dataclass(frozen=True)
class HowellForm:
    """Rows in Howell normal form, each paired with its pivot column.

    Pivot entries are positive divisors of ``modulus``; entries above a
    pivot are reduced into ``[0, pivot)``.
    """

    modulus: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    def pivot_value(self, col: int) -> int | None:
        for row, c in zip(self.rows, self.pivots):
            if c == col:
                return row[c]
        return None

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``vec`` modulo the row span."""
        n = self.modulus
        v = [x % n for x in vec]
        for row, c in zip(self.rows, self.pivots):
            q = v[c] // row[c]
            if q:
                for j in range(c, self.ncols):
                    if row[j]:
                        v[j] = (v[j] - q * row[j]) % n
        return tuple(v)

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def quotient_size(self) -> int:
        """Number of cosets of the row span in (Z/NZ)^ncols."""
        size = 1
        pivot_cols = set(self.pivots)
        for c in range(self.ncols):
            size *= self.pivot_value(c) if c in pivot_cols else self.modulus
        return size


def howell_form(rows: Iterable[Sequence[int]], modulus: int, ncols: int) -> HowellForm:
    """Compute the Howell normal form of the span of ``rows`` over Z/``modulus``Z."""
    n = modulus
    work = [[x % n for x in r] for r in rows]
    work = [r for r in work if any(r)]
    out_rows: list[list[int]] = []
    out_pivots: list[int] = []

    for c in range(ncols):
        pivot = None
        rest: list[list[int]] = []
        for row in work:
            if row[c] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            a, b = pivot[c], row[c]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            new_pivot = [(s * x + t * y) % n for x, y in zip(pivot, row)]
            killed = [(bg * x - ag * y) % n for x, y in zip(pivot, row)]
            pivot = new_pivot
            if any(killed):
                rest.append(killed)
        if pivot is None:
            work = rest
            continue
        u = unit_normalizer(pivot[c], n)
        pivot = [(u * x) % n for x in pivot]
        p = pivot[c]
        # multiples of the pivot row that vanish in column c must stay in the span
        ann = [((n // p) * x) % n for x in pivot]
        if any(ann):
            rest.append(ann)
        out_rows.append(pivot)
        out_pivots.append(c)
        work = rest

    # reduce entries above each pivot into [0, pivot)
    for j, (row_j, c) in enumerate(zip(out_rows, out_pivots)):
        p = row_j[c]
        for i in range(j):
            q = out_rows[i][c] // p
            if q:
                out_rows[i] = [(x - q * y) % n for x, y in zip(out_rows[i], row_j)]

    return HowellForm(
        modulus=n,
        ncols=ncols,
        rows=tuple(tuple(r) for r in out_rows),
        pivots=tuple(out_pivots),
    )
