"""Named ring presentations and default ring families.

Each :class:`CatalogEntry` pairs the conventional name of a ring with an
expression this package can parse. Expected values are the published
claims; whether they hold is decided by :mod:`czdg.verifier`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import is_prime, prime_power

INF = "infinity"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: str
    order: int | None = None
    mdim: int | str | None = None
    vertices: int | None = None


def _e(name, expr=None, **kw) -> CatalogEntry:
    return CatalogEntry(name, expr if expr is not None else name, **kw)


# local rings of order p^2 for p = 2, 3, 5
LOCAL_P2 = [
    entry
    for p in (2, 3, 5)
    for entry in (
        _e(f"F_{p * p}", f"F{p * p}", order=p * p, mdim="undefined"),
        _e(f"Z_{p * p}", f"Z{p * p}", order=p * p, mdim=0),
        _e(f"F_{p}[x]/(x^2)", f"Z{p}[x]/(x^2)", order=p * p, mdim=0),
    )
]

LOCAL_P3_MDIM_1 = [
    _e("Z_8", "Z8", order=8, mdim=1),
    _e("Z_27", "Z27", order=27, mdim=1),
    _e("Z_2[x]/(x^3)", "Z2[x]/(x^3)", order=8, mdim=1),
    _e("Z_3[x]/(x^3)", "Z3[x]/(x^3)", order=27, mdim=1),
    _e("Z_4[x]/(2x, x^2 - 2)", "Z4[x]/(2x, x^2 - 2)", order=8, mdim=1),
    _e("Z_9[x]/(3x, x^2 - 3)", "Z9[x]/(3x, x^2 - 3)", order=27, mdim=1),
    _e("Z_9[x]/(3x, x^2 - 6)", "Z9[x]/(3x, x^2 - 6)", order=27, mdim=1),
]

LOCAL_MDIM_0 = [
    _e("Z_2[x,y]/(x,y)^2", "Z2[x,y]/(x,y)^2", order=8, mdim=0),
    _e("Z_4[x]/(2x, x^2)", "Z4[x]/(2x, x^2)", order=8, mdim=0),
    _e("Z_9[x]/(3x, x^2)", "Z9[x]/(3x, x^2)", order=27, mdim=0),
    _e("Z_3[x,y]/(x,y)^2", "Z3[x,y]/(x,y)^2", order=27, mdim=0),
    _e("F_4[x]/(x^2)", "Z2[t,x]/(t^2 + t + 1, x^2)", order=16, mdim=0),
    _e("Z_2[x,y,z]/(x,y,z)^2", "Z2[x,y,z]/(x,y,z)^2", order=16, mdim=0),
    _e("Z_4[x]/(x^2 + x + 1)", "Z4[x]/(x^2 + x + 1)", order=16, mdim=0),
]

# a published spelling "(x^3, xy, x^2)" of the second ring leaves y unbounded
LOCAL_16_MDIM_1 = [
    _e("Z_2[x]/(x^4)", "Z2[x]/(x^4)", order=16, mdim=1),
    _e("Z_2[x,y]/(x^3, xy, y^2)", "Z2[x,y]/(x^3, xy, y^2)", order=16, mdim=1),
    _e("Z_4[x]/(2x, x^3 - 2)", "Z4[x]/(2x, x^3 - 2)", order=16, mdim=1),
    _e("Z_4[x]/(x^2 - 2)", "Z4[x]/(x^2 - 2)", order=16, mdim=1),
    _e("Z_8[x]/(2x, x^2)", "Z8[x]/(2x, x^2)", order=16, mdim=1),
    _e("Z_16", "Z16", order=16, mdim=1),
    _e("Z_4[x]/(x^2 - 2x - 2)", "Z4[x]/(x^2 - 2x - 2)", order=16, mdim=1),
    _e("Z_8[x]/(2x, x^2 - 2)", "Z8[x]/(2x, x^2 - 2)", order=16, mdim=1),
    _e("Z_4[x]/(x^2 - 2x)", "Z4[x]/(x^2 - 2x)", order=16, mdim=1),
]

LOCAL_16_X2_SPELLING = _e("Z_2[x,y]/(x^3, xy, x^2)", "Z2[x,y]/(x^3, xy, x^2)", order=16, mdim=1)

LOCAL_16_MDIM_INF = [
    _e("Z_4[x]/(x^2)", "Z4[x]/(x^2)", order=16, mdim=INF),
    _e("Z_2[x,y]/(x^2, y^2)", "Z2[x,y]/(x^2, y^2)", order=16, mdim=INF),
    _e("Z_2[x,y]/(x^2 - y^2, xy)", "Z2[x,y]/(x^2 - y^2, xy)", order=16, mdim=INF),
]

LOCAL_P3_AND_16 = LOCAL_P3_MDIM_1 + LOCAL_MDIM_0 + LOCAL_16_MDIM_1 + LOCAL_16_MDIM_INF

# rings realising compressed graphs on 3, 4 and 5 vertices
REALIZED_3_VERTICES = [_e("Z_16", "Z16", vertices=3, mdim=1)]
REALIZED_4_VERTICES = [
    _e("Z_4 x F_4", "Z4 x F4", vertices=4),
    _e("Z_4[x]/(x^2)", "Z4[x]/(x^2)", vertices=4),
]
INTEGER_QUOTIENT_EXCLUDED = "Z[x,y]/(x^3, xy)"
REALIZED_5_VERTICES = [
    _e("Z_9[x]/(x^2)", "Z9[x]/(x^2)", vertices=5, mdim=INF),
    _e("Z_64", "Z64", vertices=5, mdim=INF),
    _e("Z_3[x,y]/(xy, x^3, y^3, x^2 - y^2)", "Z3[x,y]/(xy, x^3, y^3, x^2 - y^2)", vertices=5, mdim=INF),
    _e("Z_8[x,y]/(x^2, y^2, 4x, 4y, 2xy)", "Z8[x,y]/(x^2, y^2, 4x, 4y, 2xy)", vertices=5, mdim=INF),
]

K11_LOCAL_RINGS = [
    _e("Z_8", "Z8"),
    _e("Z_27", "Z27"),
    _e("Z_2[x]/(x^3)", "Z2[x]/(x^3)"),
    _e("Z_4[x]/(2x, x^2 - 2)", "Z4[x]/(2x, x^2 - 2)"),
    _e("Z_2[x,y]/(x^3, xy, y^2)", "Z2[x,y]/(x^3, xy, y^2)"),
    _e("Z_8[x]/(2x, x^2)", "Z8[x]/(2x, x^2)"),
    _e("Z_4[x]/(x^3, 2x^2, 2x)", "Z4[x]/(x^3, 2x^2, 2x)"),
    _e("Z_9[x]/(3x, x^2 - 6)", "Z9[x]/(3x, x^2 - 6)"),
    _e("Z_9[x]/(3x, x^2 - 3)", "Z9[x]/(3x, x^2 - 3)"),
    _e("Z_3[x]/(x^3)", "Z3[x]/(x^3)"),
]
K11_PRODUCT_FIELDS = ["Z2", "Z3", "F4"]

SINGLE_VERTEX_RINGS = [_e("Z_4", "Z4", mdim=0), _e("Z_9", "Z9", mdim=0), _e("Z_2[x]/(x^2)", "Z2[x]/(x^2)", mdim=0)]


def field_expr(q: int) -> str:
    """Expression for the field of order ``q`` (a prime power)."""
    p, k = prime_power(q)
    return f"Z{q}" if k == 1 else f"F{q}"


def field_orders(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q) is not None]


def field_products(max_order: int = 64, factors: int = 2) -> list[str]:
    """Products of ``factors`` fields with nondecreasing orders and total order <= ``max_order``."""
    qs = field_orders(max_order)
    out: list[str] = []

    def rec(start: int, prefix: list[int], total: int):
        if len(prefix) == factors:
            out.append(" x ".join(field_expr(q) for q in prefix))
            return
        for i in range(start, len(qs)):
            if total * qs[i] > max_order:
                break
            rec(i, prefix + [qs[i]], total * qs[i])

    rec(0, [], 1)
    return out


def cyclic_family(lo: int, hi: int, composite_only: bool = False) -> list[str]:
    return [f"Z{n}" for n in range(lo, hi + 1) if not (composite_only and is_prime(n))]


def all_entries() -> list[CatalogEntry]:
    seen: set[str] = set()
    out = []
    groups = [LOCAL_P2, LOCAL_P3_AND_16, [LOCAL_16_X2_SPELLING], REALIZED_3_VERTICES, REALIZED_4_VERTICES, REALIZED_5_VERTICES, K11_LOCAL_RINGS,
              SINGLE_VERTEX_RINGS]
    for group in groups:
        for e in group:
            if e.expr not in seen:
                seen.add(e.expr)
                out.append(e)
    return out


def catalog_expressions() -> list[str]:
    """Every expression string the package ships, used for round-trip checks."""
    exprs = [e.expr for e in all_entries()]
    exprs += [f"{L.expr} x {F}" for L in K11_LOCAL_RINGS for F in K11_PRODUCT_FIELDS]
    exprs += field_products(64, 2) + field_products(64, 3)
    exprs += ["GF(2,1)", "GF(3,2)", "F8", "Z2 x (Z2 x Z2)", "(Z2 x Z3) x Z5"]
    return exprs
