"""Turn ring expressions (text or AST) into constructed rings."""

from __future__ import annotations

from .errors import SizeLimitError
from .parser import Cyclic, GaloisField, Product, Quotient, RingExpr, parse_ring_expr
from .quotient import QuotientPresentation, make_quotient
from .ring import (
    CYCLIC_SCAN_LIMIT,
    DEFAULT_MAX_ORDER,
    FiniteRing,
    make_cyclic,
    make_galois_field,
    make_product,
)


def build_ring(expr: RingExpr | str, max_order: int = DEFAULT_MAX_ORDER,
               degree_bound: int | None = None) -> FiniteRing:
    """Construct the ring denoted by ``expr``.

    ``degree_bound`` overrides the default truncation degree for every
    quotient inside the expression.
    """
    if isinstance(expr, str):
        expr = parse_ring_expr(expr)
    if isinstance(expr, Cyclic):
        if expr.n > max(max_order, CYCLIC_SCAN_LIMIT):
            raise SizeLimitError(f"Z_{expr.n} exceeds the cyclic ring cap")
        return make_cyclic(expr.n)
    if isinstance(expr, GaloisField):
        return make_galois_field(expr.p, expr.k, max_order=max_order)
    if isinstance(expr, Quotient):
        pres = QuotientPresentation(
            modulus=expr.modulus,
            variables=expr.variables,
            generators=expr.expanded_generators,
            degree_bound=degree_bound,
        )
        return make_quotient(pres, max_order=max_order, presentation=expr)
    if isinstance(expr, Product):
        total = 1
        for f in expr.factors:
            total *= _order_hint(f)
        if total > max_order:
            raise SizeLimitError(f"product order {total} exceeds max order {max_order}")
        parts = [build_ring(f, max_order, degree_bound) for f in expr.factors]
        acc = parts[0]
        for nxt in parts[1:]:
            acc = make_product(acc, nxt, max_order=max_order)
        acc.presentation = expr
        if len(parts) > 2:
            # nested pairing gives labels like ((a,b),c); flatten to (a,b,c)
            acc._labels = [_flatten_label(lbl, len(parts)) for lbl in acc._labels]
        return acc
    raise TypeError(f"not a ring expression: {expr!r}")


def _order_hint(e: RingExpr) -> int:
    if isinstance(e, Cyclic):
        return e.n
    if isinstance(e, GaloisField):
        return e.order
    if isinstance(e, Product):
        out = 1
        for f in e.factors:
            out *= _order_hint(f)
        return out
    return 1  # quotient orders are only known after construction


def _flatten_label(label: str, depth: int) -> str:
    for _ in range(depth - 2):
        if label.startswith("(("):
            close = _matching(label, 1)
            label = "(" + label[2:close] + label[close + 1:]
    return label


def _matching(s: str, start: int) -> int:
    depth = 0
    for i in range(start, len(s)):
        if s[i] == "(":
            depth += 1
        elif s[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise ValueError(f"unbalanced label {s!r}")
