"""Finite quotients Z_N[x_1..x_k] / I by truncated-monomial linear algebra.

Polynomials of total degree <= D are coefficient vectors over the monomial
basis (highest degree first). The ideal is approximated by the Z_N-span of
every shift ``g*m`` of a generator that stays within degree D; its Howell
form then gives a canonical residue for every vector. The quotient is
finite once every degree-D monomial reduces to lower-degree terms, and in
that case ring elements are the canonical residues supported on degrees
< D. Multiplication multiplies residues as polynomials, rewrites monomials
of degree >= D with the degree-D rules, and reduces again.

Nothing here proves the truncation is faithful; the constructed tables are
certified afterwards by the ring-axiom check plus a check that every
generator evaluates to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .errors import InvalidPresentationError, NotFiniteError, SizeLimitError
from .howell import HowellForm, howell_form
from .poly import Monomial, Poly, format_poly, monomial_key, monomials_up_to
from .ring import DEFAULT_MAX_ORDER, TableRing, verify_axioms_auto


@dataclass(frozen=True)
class QuotientPresentation:
    modulus: int
    variables: tuple[str, ...]
    generators: tuple[Poly, ...]
    degree_bound: int | None = None

    def max_degree(self) -> int:
        return max(g.degree() for g in self.generators)

    def effective_degree_bound(self) -> int:
        if self.degree_bound is not None:
            return self.degree_bound
        return default_degree_bound(self.generators)


def default_degree_bound(generators) -> int:
    return 2 * max(g.degree() for g in generators) + 2


class QuotientRing(TableRing):
    """A table-backed ring that remembers how its elements map to polynomials."""

    def __init__(self, add_table, mul_table, labels, presentation, *, quotient: QuotientPresentation,
                 basis: list[Monomial], vectors: np.ndarray, reducer: "_Reducer"):
        super().__init__(add_table, mul_table, 0, 1, labels, presentation)
        self.quotient = quotient
        self.basis = basis
        self.vectors = vectors
        self._reducer = reducer

    def element_of(self, poly: Poly) -> int:
        """Index of the residue class of ``poly``."""
        return self._reducer.index_of_poly(poly)

    def variable(self, name: str) -> int:
        i = self.quotient.variables.index(name)
        return self.element_of(Poly.variable(i, len(self.quotient.variables)))


def evaluate(R, poly: Poly, var_elements: list[int]) -> int:
    """Evaluate ``poly`` in ``R`` using only the ring's own add/mul tables."""
    acc = R.zero
    for mono, c in poly.items():
        term = R.one
        for v, e in zip(var_elements, mono):
            term = R.mul(term, R.pow(v, e))
        scaled = R.zero
        for _ in range(c % R.order if c >= 0 else (-c) % R.order):
            scaled = R.add(scaled, term)
        if c < 0:
            scaled = R.neg(scaled)
        acc = R.add(acc, scaled)
    return acc


class _Reducer:
    """Canonical-residue machinery shared by construction and ``element_of``."""

    def __init__(self, pres: QuotientPresentation, max_order: int):
        N = pres.modulus
        nv = len(pres.variables)
        D = pres.effective_degree_bound()
        if D < pres.max_degree():
            raise InvalidPresentationError(
                f"degree bound {D} is below the generator degree {pres.max_degree()}"
            )
        self.N, self.nv, self.D = N, nv, D
        self.names = list(pres.variables)

        monos = sorted(monomials_up_to(nv, D), key=monomial_key, reverse=True)
        self.columns = monos
        self.col_of = {m: i for i, m in enumerate(monos)}

        rows = []
        for g in pres.generators:
            dg = g.degree()
            for m in monomials_up_to(nv, D - dg):
                vec = [0] * len(monos)
                for gm, c in g.items():
                    vec[self.col_of[tuple(a + b for a, b in zip(gm, m))]] += c
                rows.append(vec)
        self.howell: HowellForm = howell_form(rows, N, len(monos))

        # degree-D monomials must fall to lower degree: that is the finiteness witness
        self.top = [m for m in monos if sum(m) == D]
        self.first_low = len(self.top)
        self.rules: dict[Monomial, np.ndarray] = {}
        for m in self.top:
            vec = [0] * len(monos)
            vec[self.col_of[m]] = 1
            red = self.howell.reduce(vec)
            if any(red[: self.first_low]):
                raise NotFiniteError(
                    f"quotient not finite at this degree bound: {format_poly(Poly({m: 1}, nv), self.names)} "
                    f"does not reduce below degree {D} (D={D}; try raising the degree bound)"
                )
            self.rules[m] = np.array(red[self.first_low:], dtype=np.int64)

        self.basis = monos[self.first_low:]
        nb = len(self.basis)
        self.basis_index = {m: i for i, m in enumerate(self.basis)}
        # Howell rows whose pivots lie in the low-degree block span the relations there
        self.low_rows = []
        for row, c in zip(self.howell.rows, self.howell.pivots):
            if c >= self.first_low:
                self.low_rows.append((c - self.first_low, np.array(row[self.first_low:], dtype=np.int64)))
        pivot_val = {c: int(r[c]) for c, r in self.low_rows}
        self.ranges = [pivot_val.get(i, N) for i in range(nb)]

        order = prod(self.ranges)
        if order > max_order:
            raise SizeLimitError(f"quotient has order {order} > max order {max_order}")
        if self.ranges[self.basis_index[(0,) * nv]] == 1:
            raise InvalidPresentationError("presentation collapses to the zero ring")
        self.order = order

        # mixed-radix encoding: constant term is the least significant digit
        self.digit_order = sorted(range(nb), key=lambda i: monomial_key(self.basis[i]))
        self.weights = np.zeros(nb, dtype=np.int64)
        w = 1
        for i in self.digit_order:
            self.weights[i] = w
            w *= self.ranges[i]

        self._mono_cache: dict[Monomial, np.ndarray] = {}

    # vectors over the low-degree basis -------------------------------------------------
    def reduce_rows(self, V: np.ndarray) -> np.ndarray:
        N = self.N
        V = V % N
        for c, row in self.low_rows:
            q = V[..., c] // row[c]
            V = (V - q[..., None] * row) % N
        return V

    def encode(self, V: np.ndarray) -> np.ndarray:
        return V @ self.weights

    def monomial_vector(self, m: Monomial) -> np.ndarray:
        """Unreduced-but-low-degree vector equal to monomial ``m`` in the quotient."""
        hit = self._mono_cache.get(m)
        if hit is not None:
            return hit
        d = sum(m)
        nb = len(self.basis)
        if d < self.D:
            out = np.zeros(nb, dtype=np.int64)
            out[self.basis_index[m]] = 1
        else:
            # split off a degree-D factor greedily from the first variable onward
            top, need = [], self.D
            for e in m:
                take = min(e, need)
                top.append(take)
                need -= take
            top = tuple(top)
            rest = tuple(a - b for a, b in zip(m, top))
            out = np.zeros(nb, dtype=np.int64)
            for i, c in enumerate(self.rules[top]):
                if c:
                    b = self.basis[i]
                    out += c * self.monomial_vector(tuple(x + y for x, y in zip(b, rest)))
            out %= self.N
        self._mono_cache[m] = out
        return out

    def vector_of_poly(self, poly: Poly) -> np.ndarray:
        acc = np.zeros(len(self.basis), dtype=np.int64)
        for m, c in poly.items():
            acc += (c % self.N) * self.monomial_vector(m)
        return self.reduce_rows(acc)

    def index_of_poly(self, poly: Poly) -> int:
        return int(self.encode(self.vector_of_poly(poly)))

    def elements(self) -> np.ndarray:
        nb = len(self.basis)
        E = np.zeros((self.order, nb), dtype=np.int64)
        ranges_in_digit_order = [range(self.ranges[i]) for i in self.digit_order]
        # itertools.product varies its last factor fastest; reverse so digit 0 is fastest
        for k, digits in enumerate(product(*reversed(ranges_in_digit_order))):
            for i, d in zip(reversed(self.digit_order), digits):
                E[k, i] = d
        return E

    def label(self, vec) -> str:
        nv = self.nv
        terms = {self.basis[i]: int(c) for i, c in enumerate(vec) if c}
        return format_poly(Poly(terms, nv), self.names)


def make_quotient(pres: QuotientPresentation, max_order: int = DEFAULT_MAX_ORDER,
                  presentation=None, verify: bool = True) -> QuotientRing:
    """Construct the finite ring Z_N[vars]/(generators).

    Raises :class:`NotFiniteError` when some degree-D monomial does not
    reduce (raise ``degree_bound``), :class:`SizeLimitError` above
    ``max_order``, and :class:`InvalidPresentationError` if the result
    fails axiom verification or a generator does not vanish.
    """
    from .parser import Quotient

    if pres.modulus < 2:
        raise InvalidPresentationError(f"coefficient modulus must be >= 2, got {pres.modulus}")
    if not pres.generators:
        raise InvalidPresentationError("a quotient needs at least one generator")
    if len(set(pres.variables)) != len(pres.variables):
        raise InvalidPresentationError("duplicate variable names")
    gens = tuple(g.reduce_mod(pres.modulus) for g in pres.generators)
    for g, orig in zip(gens, pres.generators):
        if g.is_zero():
            raise InvalidPresentationError(
                f"generator {format_poly(orig, pres.variables)} vanishes mod {pres.modulus}"
            )
    pres_reduced = QuotientPresentation(pres.modulus, tuple(pres.variables), gens, pres.degree_bound)
    red = _Reducer(pres_reduced, max_order)

    E = red.elements()
    n, nb = E.shape
    assert np.array_equal(red.encode(E), np.arange(n)), "element encoding is not a bijection"

    add = red.encode(red.reduce_rows(E[:, None, :] + E[None, :, :])).astype(np.int32)

    T = np.zeros((nb, nb, nb), dtype=np.int64)
    for i, mi in enumerate(red.basis):
        for j, mj in enumerate(red.basis):
            T[i, j] = red.monomial_vector(tuple(a + b for a, b in zip(mi, mj)))
    mul = np.zeros((n, n), dtype=np.int32)
    left = np.einsum("ai,ijk->ajk", E, T) % red.N
    chunk = max(1, 4_000_000 // max(1, n * nb))
    for s in range(0, n, chunk):
        block = np.einsum("bj,ajk->abk", E, left[s:s + chunk]) % red.N
        mul[s:s + chunk] = red.encode(red.reduce_rows(block))

    labels = [red.label(E[k]) for k in range(n)]
    if presentation is None:
        presentation = Quotient(pres.modulus, tuple(pres.variables), tuple(pres.generators))
    ring = QuotientRing(add, mul, labels, presentation, quotient=pres_reduced,
                        basis=red.basis, vectors=E, reducer=red)

    if verify:
        report = verify_axioms_auto(ring)
        if not report.ok:
            raise InvalidPresentationError(f"constructed tables are not a ring: {report}")
        bad = nonvanishing_generators(ring)
        if bad:
            raise InvalidPresentationError(f"generators do not vanish: {bad}")
    return ring


def nonvanishing_generators(ring: QuotientRing) -> list[str]:
    """Generators whose evaluation through the ring tables is nonzero."""
    pres = ring.quotient
    var_elements = [ring.variable(v) for v in pres.variables]
    return [
        format_poly(g, pres.variables)
        for g in pres.generators
        if evaluate(ring, g, var_elements) != ring.zero
    ]
