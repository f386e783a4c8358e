"""Finite commutative rings with unity.

Elements are the integers ``0 .. order-1``. Two backends exist:

* :class:`CyclicRing` does arithmetic mod ``n`` directly and never builds a
  table, so scans over large ``Z_n`` stay cheap.
* :class:`TableRing` stores full addition and multiplication tables as numpy
  arrays. Products, quotients and Galois fields are all table-backed.

Element subsets (annihilators, unit groups, zero-divisor sets) are
:class:`ElementSet` values backed by an int bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, isqrt
from typing import Iterator

import numpy as np

from .errors import InvalidOrderError, InvalidPrimeError, SizeLimitError

DEFAULT_MAX_ORDER = 4096
CYCLIC_SCAN_LIMIT = 100_000
EXHAUSTIVE_AXIOM_LIMIT = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``k >= 1``, else ``None``."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
    return None


def _mask_from_indices(indices: np.ndarray, order: int) -> int:
    bits = np.zeros(order, dtype=bool)
    bits[indices] = True
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


@dataclass(frozen=True)
class ElementSet:
    """A subset of a ring's elements stored as a bitmask over indices."""

    ring: "FiniteRing" = field(repr=False, compare=False)
    mask: int

    @classmethod
    def from_iterable(cls, ring: "FiniteRing", items) -> "ElementSet":
        mask = 0
        for i in items:
            mask |= 1 << i
        return cls(ring, mask)

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def members(self) -> list[int]:
        return list(self)

    def labels(self) -> list[str]:
        return [self.ring.label(i) for i in self]

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.ring, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.ring, self.mask & other.mask)

    def without(self, x: int) -> "ElementSet":
        return ElementSet(self.ring, self.mask & ~(1 << x))


class FiniteRing:
    """Common interface. Subclasses provide ``add``, ``mul``, ``neg`` and labels."""

    order: int
    zero: int = 0
    one: int
    presentation: object = None

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def label(self, i: int) -> str:
        raise NotImplementedError

    @property
    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.order)]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Full ``(add, mul)`` tables; built on demand for arithmetic backends."""
        raise NotImplementedError

    def pow(self, a: int, k: int) -> int:
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # bitmask queries; TableRing/CyclicRing override with vectorised versions
    def annihilator_mask(self, x: int) -> int:
        return ElementSet.from_iterable(
            self, (y for y in range(self.order) if self.mul(x, y) == self.zero)
        ).mask

    def is_unit(self, x: int) -> bool:
        return any(self.mul(x, y) == self.one for y in range(self.order))

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def __repr__(self) -> str:
        from .parser import format_ring_expr

        if self.presentation is not None:
            return f"<{type(self).__name__} {format_ring_expr(self.presentation)} order={self.order}>"
        return f"<{type(self).__name__} order={self.order}>"


class CyclicRing(FiniteRing):
    """Z_n with direct modular arithmetic."""

    def __init__(self, n: int, presentation=None):
        self.n = n
        self.order = n
        self.zero = 0
        self.one = 1 % n
        self.presentation = presentation
        self._tables = None

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def label(self, i):
        return str(i)

    def index_of(self, label):
        return int(label) % self.n

    def tables(self):
        if self._tables is None:
            if self.n > DEFAULT_MAX_ORDER:
                raise SizeLimitError(f"refusing to tabulate Z_{self.n}")
            r = np.arange(self.n, dtype=np.int64)
            self._tables = (
                ((r[:, None] + r[None, :]) % self.n).astype(np.int32),
                ((r[:, None] * r[None, :]) % self.n).astype(np.int32),
            )
        return self._tables

    def annihilator_mask(self, x):
        # ann(x) is the set of multiples of n / gcd(x, n)
        step = self.n // gcd(x, self.n)
        return ((1 << self.n) - 1) // ((1 << step) - 1)

    def is_unit(self, x):
        return gcd(x, self.n) == 1


class TableRing(FiniteRing):
    """A ring given by explicit addition and multiplication tables.

    The constructor performs no validation; run :func:`verify_ring_axioms`
    on anything not produced by a trusted constructor.
    """

    def __init__(self, add_table, mul_table, zero: int, one: int, labels, presentation=None):
        self.add_table = np.asarray(add_table, dtype=np.int32)
        self.mul_table = np.asarray(mul_table, dtype=np.int32)
        self.order = int(self.add_table.shape[0])
        self.zero = zero
        self.one = one
        self._labels = list(labels)
        self.presentation = presentation
        self._neg = None

    def add(self, a, b):
        return int(self.add_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        if self._neg is None:
            self._neg = np.argmax(self.add_table == self.zero, axis=1)
        return int(self._neg[a])

    def label(self, i):
        return self._labels[i]

    @property
    def labels(self):
        return list(self._labels)

    def index_of(self, label):
        return self._labels.index(label)

    def tables(self):
        return self.add_table, self.mul_table

    @cached_property
    def _ann_masks(self) -> list[int]:
        zero_rows = self.mul_table == self.zero
        return [_mask_from_indices(np.flatnonzero(zero_rows[x]), self.order) for x in range(self.order)]

    def annihilator_mask(self, x):
        return self._ann_masks[x]

    def is_unit(self, x):
        return bool(np.any(self.mul_table[x] == self.one))


def make_cyclic(n: int) -> CyclicRing:
    from .parser import Cyclic

    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"Z_n needs n >= 2, got {n!r}")
    return CyclicRing(n, presentation=Cyclic(n))


def make_product(lhs: FiniteRing, rhs: FiniteRing, max_order: int = DEFAULT_MAX_ORDER,
                 presentation=None) -> TableRing:
    """Direct product with element ``(a, b)`` encoded as ``a*|rhs| + b``."""
    from .parser import Product

    n, m = lhs.order, rhs.order
    if n * m > max_order:
        raise SizeLimitError(f"product order {n * m} exceeds max order {max_order}")
    la, lm = lhs.tables()
    ra, rm = rhs.tables()
    add = (la[:, None, :, None] * m + ra[None, :, None, :]).reshape(n * m, n * m)
    mul = (lm[:, None, :, None] * m + rm[None, :, None, :]).reshape(n * m, n * m)
    labels = [f"({a},{b})" for a in lhs.labels for b in rhs.labels]
    if presentation is None:
        presentation = Product((lhs.presentation, rhs.presentation))
    return TableRing(add, mul, lhs.zero * m + rhs.zero, lhs.one * m + rhs.one, labels, presentation)


def make_galois_field(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> TableRing:
    """F_{p^k} as Z_p[x] modulo the smallest monic irreducible of degree ``k``."""
    from .parser import GaloisField
    from .poly import Poly
    from .quotient import QuotientPresentation, make_quotient

    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    if k < 1:
        raise InvalidOrderError(f"extension degree must be >= 1, got {k}")
    if p**k > max_order:
        raise SizeLimitError(f"F_{p}^{k} has order {p**k} > max order {max_order}")
    coeffs = smallest_irreducible(p, k)
    f = Poly({(i,): c for i, c in enumerate(coeffs)}, 1)
    pres = QuotientPresentation(modulus=p, variables=("x",), generators=(f,))
    ring = make_quotient(pres, max_order=max_order)
    ring.presentation = GaloisField(p, k)
    return ring


# --- univariate helpers over Z_p; coefficient lists are lowest degree first ---

def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        q = (a[-1] * inv) % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - q * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, d: int):
    for code in range(p**d):
        coeffs = []
        for _ in range(d):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    d = len(coeffs) - 1
    for fd in range(1, d // 2 + 1):
        for f in _monic_polys(p, fd):
            if not _poly_mod(coeffs, f, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``k`` over Z_p.

    Candidates are ordered by their coefficient vector read from degree
    ``k-1`` down to the constant term.
    """
    for coeffs in _monic_polys(p, k):
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z_{p}")


# --- element classification ---

def units(R: FiniteRing) -> ElementSet:
    return ElementSet.from_iterable(R, (x for x in range(R.order) if R.is_unit(x)))


def zero_divisors(R: FiniteRing) -> ElementSet:
    """Z(R), including 0: every ``x`` with ``x*y == 0`` for some nonzero ``y``."""
    zero_bit = 1 << R.zero
    out = []
    for x in range(R.order):
        if R.annihilator_mask(x) & ~zero_bit:
            out.append(x)
    return ElementSet.from_iterable(R, out)


def nonzero_zero_divisors(R: FiniteRing) -> ElementSet:
    return zero_divisors(R).without(R.zero)


def annihilator(R: FiniteRing, x: int) -> ElementSet:
    return ElementSet(R, R.annihilator_mask(x))


def is_field(R: FiniteRing) -> bool:
    return len(units(R)) == R.order - 1


def is_integral_domain(R: FiniteRing) -> bool:
    return len(nonzero_zero_divisors(R)) == 0


def is_boolean(R: FiniteRing) -> bool:
    return all(R.mul(a, a) == a for a in range(R.order))


def is_nilpotent(R: FiniteRing, a: int) -> bool:
    # the nilpotency index never exceeds the ring order, so squaring up past it suffices
    x, reach = a, 1
    while reach < R.order:
        x = R.mul(x, x)
        reach *= 2
    return x == R.zero


def is_reduced(R: FiniteRing) -> bool:
    if isinstance(R, CyclicRing):
        n = R.n
        return all(n % (d * d) for d in range(2, isqrt(n) + 1))
    return not any(is_nilpotent(R, a) for a in range(R.order) if a != R.zero)


def is_local(R: FiniteRing) -> bool:
    """Non-units closed under addition (equivalently, they form the unique maximal ideal)."""
    if isinstance(R, CyclicRing):
        return prime_power(R.n) is not None
    nonunits = np.array([x for x in range(R.order) if not R.is_unit(x)], dtype=np.int64)
    add, _ = R.tables()
    is_nonunit = np.zeros(R.order, dtype=bool)
    is_nonunit[nonunits] = True
    sums = add[np.ix_(nonunits, nonunits)]
    return bool(is_nonunit[sums].all())


def ring_flags(R: FiniteRing) -> dict[str, bool]:
    return {
        "is_local": is_local(R),
        "is_field": is_field(R),
        "is_reduced": is_reduced(R),
        "is_boolean": is_boolean(R),
        "is_integral_domain": is_integral_domain(R),
    }


# --- axiom verification ---

@dataclass
class AxiomReport:
    ok: bool
    mode: str
    checked: int
    axiom: str | None = None
    witness: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"ring axioms hold ({self.mode}, {self.checked} checks)"
        return f"axiom '{self.axiom}' fails at {self.witness} ({self.mode})"


def _first_violation(bad: np.ndarray):
    idx = np.argwhere(bad)
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def verify_ring_axioms(R: FiniteRing, mode: str = "exhaustive", samples: int = 20000,
                       seed: int = 0) -> AxiomReport:
    """Check the commutative-ring-with-unity axioms on ``R``.

    ``exhaustive`` scans every triple (O(n^3), vectorised row by row);
    ``sampled`` checks ``samples`` uniformly random triples drawn with a
    fixed ``seed``. Violations are reported, not raised.
    """
    add, mul = R.tables()
    n = R.order
    z, e = R.zero, R.one
    r = np.arange(n)

    if z == e:
        return AxiomReport(False, mode, 0, "one != zero", (z,))

    pair_checks = [
        ("additive commutativity", add != add.T),
        ("multiplicative commutativity", mul != mul.T),
    ]
    for name, bad in pair_checks:
        w = _first_violation(bad)
        if w is not None:
            return AxiomReport(False, mode, 0, name, w)
    w = _first_violation(add[z] != r)
    if w is not None:
        return AxiomReport(False, mode, 0, "additive identity", w)
    w = _first_violation(mul[e] != r)
    if w is not None:
        return AxiomReport(False, mode, 0, "multiplicative identity", w)
    w = _first_violation(~(add == z).any(axis=1))
    if w is not None:
        return AxiomReport(False, mode, 0, "additive inverse", w)
    checked = 2 * n * n + 3 * n

    if mode == "exhaustive":
        for a in range(n):
            checks = (
                ("additive associativity", add[add[a]][:, r] != add[a][add]),
                ("multiplicative associativity", mul[mul[a]][:, r] != mul[a][mul]),
                ("distributivity", mul[a][add] != add[mul[a][:, None], mul[a][None, :]]),
            )
            for name, bad in checks:
                w = _first_violation(bad)
                if w is not None:
                    return AxiomReport(False, mode, checked, name, (a, *w))
            checked += 3 * n * n
        return AxiomReport(True, mode, checked)

    if mode == "sampled":
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        checks = (
            ("additive associativity", add[add[a, b], c] != add[a, add[b, c]]),
            ("multiplicative associativity", mul[mul[a, b], c] != mul[a, mul[b, c]]),
            ("distributivity", mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]),
        )
        for name, bad in checks:
            hits = np.flatnonzero(bad)
            if len(hits):
                i = hits[0]
                return AxiomReport(False, mode, checked, name, (int(a[i]), int(b[i]), int(c[i])))
        return AxiomReport(True, mode, checked + 3 * samples)

    raise ValueError(f"unknown mode {mode!r}")


def verify_axioms_auto(R: FiniteRing, **kw) -> AxiomReport:
    mode = "exhaustive" if R.order <= EXHAUSTIVE_AXIOM_LIMIT else "sampled"
    return verify_ring_axioms(R, mode, **kw)
