"""Executable checks of the published claims over enumerated ring families.

Each ``check_*`` function returns a :class:`ClaimReport` holding one
:class:`Instance` per ring examined. Verdicts are ``pass``, ``fail`` or
``erratum-expected``. A known misprint is only ``erratum-expected`` when
the computed value matches the value recorded in :data:`ERRATA`; if it
ever stops reproducing, the instance fails.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable

from . import catalog
from .construct import build_ring
from .errors import CzdgError, NotFiniteError
from .graphs import SimpleGraph, annihilator_classes, compressed_graph, zero_divisor_graph
from .invariants import (
    INF,
    MdimResult,
    classify_named,
    complete_bipartite_parts,
    diameter,
    girth,
    is_connected,
    is_isomorphic,
    is_regular,
    multiset_dimension,
)
from .parser import format_ring_expr, parse_ring_expr
from .ring import (
    FiniteRing,
    annihilator,
    is_boolean,
    is_integral_domain,
    is_local,
    is_prime,
    is_reduced,
    nonzero_zero_divisors,
    prime_power,
    zero_divisors,
)

PASS, FAIL, ERRATUM = "pass", "fail", "erratum-expected"


@dataclass(frozen=True)
class Erratum:
    key: str
    claim: str
    ring: str
    printed: str
    computed: str
    explanation: str


ERRATA: dict[tuple[str, str], Erratum] = {
    (e.claim, e.ring): e
    for e in [
        Erratum("z16-ann14", "z16-example", "ann(14) in Z16", "{0, 6, 8}", "{0, 8}",
                "14*6 = 84 = 4 mod 16, so 6 does not annihilate 14"),
        Erratum("z16-classes", "z16-example", "classes of Z16", "4 classes [2],[4],[8],[14]",
                "3 classes [2],[4],[8]",
                "ann(14) = ann(2) merges [14] into [2]; Γ_E(Z16) is P_3"),
        Erratum("x2-y2-spelling", "3.2", "Z2[x,y]/(x^3, xy, x^2)", "order=16, mdim=1", "not finite",
                "no relation bounds y; the y^2 spelling is checked instead"),
        Erratum("integer-quotient", "3.4-3.6", "Z[x,y]/(x^3, xy)", "4 vertices", "not constructible",
                "integer coefficients give an infinite ring"),
        Erratum("z8-2x-order", "3.2", "Z8[x]/(2x, x^2 - 2)", "order=16, mdim=1", "order=8, mdim=1",
                "2x = 0 and x^2 = 2 force 4 = 2x^2 = 0, so the ring is Z4[x]/(2x, x^2 - 2)"),
        Erratum("z4-x2-2x-mdim", "3.2", "Z4[x]/(x^2 - 2x)", "order=16, mdim=1", "order=16, mdim=infinity",
                "Γ_E is a triangle [x],[2x],[x+2] with [2] pendant on [2x]; the paw has no m-resolving set"),
        Erratum("regular-k2", "structural", "Γ_E = K_2", "not regular", "K_2 (1-regular)",
                 "K_2 is 1-regular; the non-regularity claim only holds from 3 vertices"),
        Erratum("z2xz2-complete", "2.1", "Z2 x Z2", "mdim=0", "mdim=1",
                "Γ(Z2 x Z2) = K_2 is complete but its two vertices lie in different classes"),
    ]
}


@dataclass
class Instance:
    claim: str
    ring: str
    expected: str
    computed: str
    verdict: str
    note: str = ""
    witness: dict | None = None


@dataclass
class ClaimReport:
    claim_id: str
    title: str
    family: str
    instances: list[Instance] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return len(self.instances)

    def count(self, verdict: str) -> int:
        return sum(1 for i in self.instances if i.verdict == verdict)

    @property
    def failures(self) -> list[Instance]:
        return [i for i in self.instances if i.verdict == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ring: str, expected, computed, holds: bool, note: str = "",
               witness: dict | None = None, erratum_key: str | None = None) -> Instance:
        expected, computed = str(expected), str(computed)
        err = ERRATA.get((self.claim_id, erratum_key or ring))
        if err is not None:
            if computed == err.computed:
                verdict, note = ERRATUM, f"{err.key}: {err.explanation}"
            else:
                verdict = FAIL
                note = f"registered erratum {err.key} did not reproduce (recorded {err.computed})"
        else:
            verdict = PASS if holds else FAIL
        inst = Instance(self.claim_id, ring, expected, computed, verdict, note,
                        witness if verdict == FAIL else None)
        if verdict == FAIL and inst.witness is None:
            inst.witness = {"ring": ring, "computed": computed}
        self.instances.append(inst)
        return inst


# --- cached per-ring analysis ------------------------------------------------------------

class RingAnalysis:
    """Lazily computed invariants of one ring."""

    def __init__(self, expr: str, ctx: "Context"):
        self.expr = expr
        self.ctx = ctx

    @cached_property
    def ring(self) -> FiniteRing:
        return build_ring(self.expr, degree_bound=self.ctx.degree_bound)

    @cached_property
    def zdg(self) -> SimpleGraph:
        return zero_divisor_graph(self.ring)

    @cached_property
    def partition(self):
        return annihilator_classes(self.ring)

    @cached_property
    def czdg(self) -> SimpleGraph | None:
        return compressed_graph(self.ring, self.partition)

    @cached_property
    def mdim(self) -> MdimResult:
        if self.czdg is None:
            return MdimResult.undefined()
        return multiset_dimension(self.czdg, work_limit=self.ctx.work_limit)

    @cached_property
    def diam_e(self):
        return None if self.czdg is None else diameter(self.czdg)

    @cached_property
    def girth_e(self):
        return None if self.czdg is None else girth(self.czdg)

    @cached_property
    def diam_zdg(self):
        return diameter(self.zdg)

    @cached_property
    def is_domain(self) -> bool:
        return is_integral_domain(self.ring)

    @cached_property
    def reduced(self) -> bool:
        return is_reduced(self.ring)

    def summary(self) -> dict:
        out = {"ring": self.expr, "order": self.ring.order, "mdim": str(self.mdim)}
        if self.czdg is not None:
            out["czdg_vertices"] = self.czdg.n
            out["czdg_edges"] = [list(e) for e in self.czdg.edges()]
            out["czdg_labels"] = self.czdg.labels
        return out


@dataclass
class VerifyConfig:
    max_n: int = 200
    max_p: int = 31
    degree_bound: int | None = None
    field_product_order: int = 64
    work_limit: int = 2**24


class Context:
    def __init__(self, config: VerifyConfig | None = None):
        self.config = config or VerifyConfig()
        self.degree_bound = self.config.degree_bound
        self.work_limit = self.config.work_limit
        self._cache: dict[str, RingAnalysis] = {}

    def get(self, expr: str) -> RingAnalysis:
        key = format_ring_expr(parse_ring_expr(expr))
        if key not in self._cache:
            self._cache[key] = RingAnalysis(key, self)
        return self._cache[key]

    def default_family(self) -> list[str]:
        c = self.config
        fam = catalog.cyclic_family(4, c.max_n)
        fam += [e.expr for e in catalog.all_entries() if e is not catalog.LOCAL_16_X2_SPELLING]
        fam += catalog.field_products(c.field_product_order, 2)
        fam += catalog.field_products(c.field_product_order, 3)
        seen, out = set(), []
        for e in fam:
            key = format_ring_expr(parse_ring_expr(e))
            if key not in seen:
                seen.add(key)
                out.append(key)
        return out

    def buildable(self, exprs: Iterable[str]) -> list[RingAnalysis]:
        out = []
        for e in exprs:
            a = self.get(e)
            try:
                a.ring
            except CzdgError:
                continue
            out.append(a)
        return out


def _ctx(ctx: Context | None) -> Context:
    return ctx if ctx is not None else Context()


def _family(ctx: Context, rings: Iterable[str] | None) -> list[RingAnalysis]:
    return ctx.buildable(rings if rings is not None else ctx.default_family())


def _mdim_str(m: MdimResult) -> str:
    return str(m)


def _fmt(v) -> str:
    if v is None:
        return "undefined"
    return "infinity" if v == INF else str(v)


# --- suites ------------------------------------------------------------------------------

def check_z16_example(ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("z16-example", "worked example: annihilators and classes of Z16", "Z16")
    a = ctx.get("Z16")
    R = a.ring
    printed = {2: {8}, 4: {4, 8, 12}, 6: {8}, 8: {2, 4, 6, 8, 10, 12, 14}, 10: {8}, 12: {4, 8, 12},
               14: {6, 8}}
    verts = [int(l) for l in a.zdg.labels]
    rep.record("Z(Z16)*", [2, 4, 6, 8, 10, 12, 14], verts, verts == [2, 4, 6, 8, 10, 12, 14])
    for x, ann in printed.items():
        expected = sorted(ann | {0})
        computed = sorted(annihilator(R, x))
        rep.record(f"ann({x}) in Z16", _set_str(expected), _set_str(computed), expected == computed)
    labels = a.czdg.labels
    rep.record("classes of Z16", "4 classes [2],[4],[8],[14]",
               f"{len(labels)} classes " + ",".join(f"[{l}]" for l in labels), len(labels) == 4)
    rep.findings.append("printed annihilators omit 0; 0 is added before comparing")
    return rep


def _set_str(xs) -> str:
    return "{" + ", ".join(str(x) for x in xs) + "}"


def check_prop_2_1(rings: Iterable[str] | None = None, ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("2.1", "Mdim(Γ_E(R)) = 0 iff Γ(R) is complete", "rings with Z*(R) nonempty")
    for a in _family(ctx, rings):
        if a.is_domain:
            continue
        complete = a.zdg.is_complete()
        zero = a.mdim == MdimResult.finite(0)
        rep.record(a.expr, f"Γ complete={complete} => mdim{'=' if complete else '!='}0",
                   f"mdim={a.mdim}", complete == zero, witness=a.summary())
    return rep


def check_prop_2_2(rings: Iterable[str] | None = None, ctx: Context | None = None) -> ClaimReport:
    """Forward direction only: Γ(R) complete bipartite implies Mdim(Γ_E(R)) = 1.

    The claim's hypothesis asks for a part of size >= 2; K_{1,1} instances
    are covered only for the Boolean ring Z2 x Z2. Rings with Mdim 1 whose
    Γ(R) is not complete bipartite are logged as converse counterexamples.
    """
    ctx = _ctx(ctx)
    rep = ClaimReport("2.2", "Γ(R) ≅ K_{m,n} implies Mdim(Γ_E(R)) = 1", "rings with Z*(R) nonempty")
    converse: list[str] = []
    for a in _family(ctx, rings):
        if a.is_domain:
            continue
        parts = complete_bipartite_parts(a.zdg)
        one = a.mdim == MdimResult.finite(1)
        if parts is not None and max(parts) >= 2:
            rep.record(a.expr, "mdim=1", f"Γ=K{parts}, mdim={a.mdim}", one, witness=a.summary())
        elif parts == (1, 1):
            if a.ring.order == 4 and is_boolean(a.ring):
                same = is_isomorphic(a.zdg, a.czdg)
                rep.record(a.expr, "mdim=1 and Γ ≅ Γ_E", f"mdim={a.mdim}, Γ≅Γ_E={same}", one and same,
                           witness=a.summary())
            else:
                rep.findings.append(f"{a.expr}: Γ(R) = K_(1,1) outside the hypothesis; mdim={a.mdim}")
        elif one:
            converse.append(a.expr)
    if converse:
        shown = ", ".join(converse[:5]) + (", ..." if len(converse) > 5 else "")
        rep.findings.append(f"converse fails on {len(converse)} rings with mdim 1 and Γ(R) not complete "
                            f"bipartite: {shown}")
    return rep


def check_thm_3_1(rings: Iterable[str] | None = None, ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    if rings is None:
        rings = ctx.default_family() + [f"Z{p}" for p in range(2, ctx.config.max_p + 1) if is_prime(p)]
        rings += ["F4", "F8", "F9", "F16", "F25", "F27"]
    rep = ClaimReport("thm3.1", "Mdim(Γ_E(R)) undefined iff R is an integral domain", "default family + fields")
    seen = set()
    for a in _family(ctx, rings):
        if a.expr in seen:
            continue
        seen.add(a.expr)
        undefined = a.mdim.kind == "undefined"
        rep.record(a.expr, f"domain={a.is_domain} => mdim {'undefined' if a.is_domain else 'defined'}",
                   f"mdim={a.mdim}", a.is_domain == undefined, witness=a.summary())
    return rep


def check_prop_3_1(ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("3.1", "local rings of order p^2: Mdim undefined or 0", "F_{p^2}, Z_{p^2}, F_p[x]/(x^2), p=2,3,5")
    for e in catalog.LOCAL_P2:
        a = ctx.get(e.expr)
        computed = f"order={a.ring.order}, mdim={a.mdim}"
        expected = f"order={e.order}, mdim={e.mdim}"
        rep.record(a.expr, expected, computed, computed == expected, witness=a.summary())
    return rep


def check_prop_3_2(ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("3.2", "local rings of order p^3 and 16: Mdim in {0, 1, infinity}",
                      "named presentations of orders 8, 27, 16")
    for e in catalog.LOCAL_P3_AND_16 + [catalog.LOCAL_16_X2_SPELLING]:
        expected = f"order={e.order}, mdim={e.mdim}"
        a = ctx.get(e.expr)
        try:
            R = a.ring
        except NotFiniteError as exc:
            rep.record(a.expr, expected, "not finite", False, note=str(exc))
            continue
        computed = f"order={R.order}, mdim={a.mdim}"
        rep.record(a.expr, expected, computed, computed == expected, witness=a.summary())
    rep.findings.append("F_4[x]/(x^2) is built as Z2[t,x]/(t^2 + t + 1, x^2)")
    return rep


def check_prop_3_3(p_list: Iterable[int] | None = None, ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    if p_list is None:
        p_list = [p for p in range(2, ctx.config.max_p + 1) if is_prime(p)]
    rep = ClaimReport("3.3", "Mdim(Γ_E(Z_2p)) = 1 for p > 2 and Mdim(Γ_E(Z_p^2)) = 0", "primes p")
    for p in p_list:
        if p > 2:
            a = ctx.get(f"Z{2 * p}")
            rep.record(a.expr, "mdim=1", f"mdim={a.mdim}", a.mdim == MdimResult.finite(1), witness=a.summary())
        a = ctx.get(f"Z{p * p}")
        rep.record(a.expr, "mdim=0", f"mdim={a.mdim}", a.mdim == MdimResult.finite(0), witness=a.summary())
    return rep


def check_props_3_4_to_3_6(ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("3.4-3.6", "realizable Γ_E on 3/4/5 vertices: Mdim 1 / {1, infinity} / infinity",
                      "rings realising 3-, 4- and 5-vertex graphs")
    allowed = {3: {"1"}, 4: {"1", "infinity"}, 5: {"infinity"}}
    split = []
    for e in catalog.REALIZED_3_VERTICES + catalog.REALIZED_4_VERTICES + catalog.REALIZED_5_VERTICES:
        a = ctx.get(e.expr)
        n = a.czdg.n
        expected = f"vertices={e.vertices}, mdim in {sorted(allowed[e.vertices])}"
        ok = n == e.vertices and str(a.mdim) in allowed[e.vertices]
        rep.record(a.expr, expected, f"vertices={n}, mdim={a.mdim}", ok, witness=a.summary())
        if e.vertices == 4:
            split.append(f"{a.expr} -> {a.mdim}")
    rep.record(catalog.INTEGER_QUOTIENT_EXCLUDED, "vertices=4", "not constructible", False)
    rep.findings.append("4-vertex split: " + "; ".join(split))
    return rep


def check_thm_4_1_and_cor_4_1(rings: Iterable[str] | None = None, ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("4.1", "girth(Γ_E) infinite: reduced => Mdim 1; listed local rings => Γ_E ≅ K_{1,1}",
                      "reduced non-domains of the default family + listed rings")
    for a in _family(ctx, rings):
        if a.is_domain or not a.reduced or a.girth_e != INF:
            continue
        rep.record(a.expr, "mdim=1", f"mdim={a.mdim}", a.mdim == MdimResult.finite(1), witness=a.summary())
    for e in catalog.SINGLE_VERTEX_RINGS:
        a = ctx.get(e.expr)
        rep.record(a.expr, "mdim=0", f"mdim={a.mdim}", a.mdim == MdimResult.finite(0), witness=a.summary())
    k11 = SimpleGraph.from_edges(2, [(0, 1)])
    for e in catalog.K11_LOCAL_RINGS:
        a = ctx.get(e.expr)
        iso = a.czdg is not None and is_isomorphic(a.czdg, k11)
        ok = iso and a.mdim == MdimResult.finite(1) and a.girth_e == INF
        rep.record(a.expr, "Γ_E ≅ K_(1,1), girth=infinity, mdim=1",
                   f"Γ_E ≅ K_(1,1)={iso}, girth={_fmt(a.girth_e)}, mdim={a.mdim}", ok, witness=a.summary())
        for F in catalog.K11_PRODUCT_FIELDS:
            b = ctx.get(f"{e.expr} x {F}")
            try:
                G = b.czdg
            except CzdgError as exc:
                rep.findings.append(f"{b.expr}: not built ({exc})")
                continue
            rep.findings.append(
                f"{b.expr}: reduced={b.reduced}, Γ_E has {G.n} vertices, girth={_fmt(b.girth_e)}, mdim={b.mdim}"
            )
    return rep


def _is_field_product(a: RingAnalysis) -> bool:
    e = parse_ring_expr(a.expr)
    from .parser import Cyclic, GaloisField, Product

    return (isinstance(e, Product) and len(e.factors) == 2
            and all(isinstance(f, GaloisField) or (isinstance(f, Cyclic) and is_prime(f.n)) for f in e.factors))


def field_pair_family(orders: Iterable[int] = (2, 3, 4, 5, 7, 8, 9)) -> list[str]:
    orders = list(orders)
    return [f"{catalog.field_expr(q1)} x {catalog.field_expr(q2)}" for q1 in orders for q2 in orders]


def check_thm_4_2(rings: Iterable[str] | None = None, ctx: Context | None = None,
                  field_pairs: Iterable[str] | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("4.2", "Mdim versus diameter of Γ_E and Γ", "default family + field pairs")
    fam = _family(ctx, rings)
    pairs = field_pairs if field_pairs is not None else field_pair_family()
    for a in ctx.buildable(pairs):
        ok = a.mdim == MdimResult.finite(1) and a.diam_e == 1
        rep.record(a.expr, "(a) mdim=diam=1", f"mdim={a.mdim}, diam={_fmt(a.diam_e)}", ok,
                   erratum_key=None, witness=a.summary())
    for a in fam:
        if a.is_domain:
            continue
        zero = a.mdim == MdimResult.finite(0)
        rep.record(a.expr, "(b) mdim=0 <=> diam(Γ_E)=0", f"mdim={a.mdim}, diam={_fmt(a.diam_e)}",
                   zero == (a.diam_e == 0), witness=a.summary())
        Z = zero_divisors(a.ring).members()
        R = a.ring
        if len(Z) >= 2 and all(R.mul(x, y) == R.zero for x in Z for y in Z):
            rep.record(a.expr, "(c) Z(R)^2=0 => mdim=0", f"mdim={a.mdim}", zero, witness=a.summary())
        d = a.diam_zdg
        if R.order == 4 and is_boolean(R):
            rep.record(a.expr, "(d) excluded ring", f"mdim={a.mdim}, diam(Γ)={_fmt(d)}", True,
                       note="excluded by hypothesis: Γ = K_2 yet mdim 1")
        else:
            rep.record(a.expr, "(d) mdim=0 <=> diam(Γ) in {0,1}", f"mdim={a.mdim}, diam(Γ)={_fmt(d)}",
                       zero == (d in (0, 1)), witness=a.summary())
    return rep


def check_structural_properties(rings: Iterable[str] | None = None, ctx: Context | None = None) -> ClaimReport:
    ctx = _ctx(ctx)
    rep = ClaimReport("structural", "Γ_E connected, girth in {3, infinity}, not regular, diam <= 3",
                      "default family")
    max_diam = 0
    reduced_seen: list[RingAnalysis] = []
    for a in _family(ctx, rings):
        if a.is_domain:
            continue
        G = a.czdg
        problems = []
        if not is_connected(G):
            problems.append("disconnected")
        if a.girth_e not in (3, INF):
            problems.append(f"girth {a.girth_e}")
        if G.n >= 3 and is_regular(G):
            problems.append("regular")
        if G.n == 2:
            rep.record(a.expr, "not regular", "K_2 (1-regular)", False, erratum_key="Γ_E = K_2")
        if a.diam_e > 3:
            problems.append(f"diam {a.diam_e}")
        if a.diam_e > a.diam_zdg:
            problems.append("diam(Γ_E) > diam(Γ)")
        if G.n >= 3 and G.is_complete():
            problems.append("complete on >= 3 vertices")
        if is_local(a.ring) and prime_power(a.ring.order) is None:
            problems.append("local ring of non-prime-power order")
        problems += _compression_problems(a)
        max_diam = max(max_diam, a.diam_e)
        computed = "ok" if not problems else "; ".join(problems)
        rep.record(a.expr, "ok", computed, not problems, witness=a.summary())
        if a.reduced:
            reduced_seen.append(a)

    # reduced rings with isomorphic zero-divisor graphs share Mdim(Γ_E)
    small = [a for a in reduced_seen if a.zdg.n <= 16]
    for a, b in combinations(small, 2):
        if a.zdg.n != b.zdg.n or not is_isomorphic(a.zdg, b.zdg):
            continue
        rep.record(f"{a.expr} ~ {b.expr}", "equal mdim", f"{a.mdim} vs {b.mdim}", a.mdim == b.mdim)
    rep.findings.append(f"maximum diam(Γ_E) observed: {max_diam}")
    return rep


def _compression_problems(a: RingAnalysis) -> list[str]:
    R, G, part, zdg = a.ring, a.czdg, a.partition, a.zdg
    verts = nonzero_zero_divisors(R).members()
    for u, v in zdg.edges():
        cu, cv = part.class_of[verts[u]], part.class_of[verts[v]]
        if cu != cv and not G.has_edge(cu, cv):
            return [f"edge {zdg.labels[u]}-{zdg.labels[v]} lost in compression"]
    return []


# --- aggregate --------------------------------------------------------------------------

SUITES: dict[str, Callable[[Context], ClaimReport]] = {
    "z16-example": lambda c: check_z16_example(c),
    "2.1": lambda c: check_prop_2_1(ctx=c),
    "2.2": lambda c: check_prop_2_2(ctx=c),
    "thm3.1": lambda c: check_thm_3_1(ctx=c),
    "3.1": lambda c: check_prop_3_1(c),
    "3.2": lambda c: check_prop_3_2(c),
    "3.3": lambda c: check_prop_3_3(ctx=c),
    "3.4-3.6": lambda c: check_props_3_4_to_3_6(c),
    "4.1": lambda c: check_thm_4_1_and_cor_4_1(ctx=c),
    "4.2": lambda c: check_thm_4_2(ctx=c),
    "structural": lambda c: check_structural_properties(ctx=c),
}


@dataclass
class AggregateReport:
    suites: list[ClaimReport]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    @property
    def errata(self) -> list[Instance]:
        return [i for s in self.suites for i in s.instances if i.verdict == ERRATUM]

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 5

    def to_text(self) -> str:
        lines = []
        for s in self.suites:
            lines.append(f"== {s.claim_id}: {s.title} ==")
            lines.append(f"family: {s.family}")
            lines.append(f"instances: {s.checked}  pass: {s.count(PASS)}  fail: {s.count(FAIL)}  "
                         f"erratum: {s.count(ERRATUM)}")
            for i in s.failures:
                lines.append(f"  FAIL {i.ring}: expected {i.expected}; computed {i.computed}")
                if i.note:
                    lines.append(f"       {i.note}")
            for f in s.findings:
                lines.append(f"  finding: {f}")
        lines.append("== errata ==")
        if not self.errata:
            lines.append("  (none)")
        groups: dict[str, list[Instance]] = {}
        for i in self.errata:
            groups.setdefault(i.note, []).append(i)
        for note, items in groups.items():
            i = items[0]
            lines.append(f"  [{i.claim}] {i.ring}: printed {i.expected}; computed {i.computed}")
            if len(items) > 1:
                lines.append(f"       and {len(items) - 1} more rings of the same kind")
            lines.append(f"       {note}")
        total = sum(s.checked for s in self.suites)
        fails = sum(s.count(FAIL) for s in self.suites)
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(f"summary: {len(self.suites)} suites, {total} instances, {fails} failures, "
                     f"{len(self.errata)} errata -> {verdict}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "ok": self.ok,
            "suites": [
                {
                    "claim": s.claim_id,
                    "title": s.title,
                    "family": s.family,
                    "records": [asdict(i) for i in s.instances],
                    "findings": s.findings,
                }
                for s in self.suites
            ],
            "errata": [asdict(i) for i in self.errata],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def run_suites(names: Iterable[str], config: VerifyConfig | None = None) -> AggregateReport:
    ctx = Context(config)
    names = list(names)
    for n in names:
        if n not in SUITES:
            raise KeyError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or all")
    return AggregateReport([SUITES[n](ctx) for n in names])


def run_all(config: VerifyConfig | None = None) -> AggregateReport:
    return run_suites(list(SUITES), config)
