"""Ring-expression grammar: parsing to an AST and canonical formatting.

Grammar::

    ring     := product | atom
    product  := atom ( "x" atom )+      # "x" surrounded by whitespace; "×" also accepted
    atom     := "Z" int | "GF(" int "," int ")" | "F" int | quotient | "(" ring ")"
    quotient := "Z" int "[" var ("," var)* "]" "/" "(" polylist ")" [ "^" int ]
    polylist := poly ("," poly)*
    poly     := ["+"|"-"] term (("+"|"-") term)*
    term     := [int] [ "*" ] factor* | int
    factor   := var [ "^" int ]         # juxtaposition multiplies: "2xy^2"
    var      := lowercase letter followed by optional digits

``F q`` means GF(p, k) when ``q = p^k`` with ``k >= 2`` and ``Z p`` when
``q`` is prime. An exponent after the ideal's closing parenthesis, as in
``(x,y)^2``, denotes an ideal power.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import RingParseError
from .poly import Poly, format_poly, ideal_power
from .ring import is_prime, prime_power


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class GaloisField:
    p: int
    k: int

    @property
    def order(self) -> int:
        return self.p**self.k


@dataclass(frozen=True)
class Quotient:
    modulus: int
    variables: tuple[str, ...]
    generators: tuple[Poly, ...]
    ideal_power: int | None = None

    @property
    def expanded_generators(self) -> tuple[Poly, ...]:
        if self.ideal_power is None:
            return self.generators
        return tuple(ideal_power(self.generators, self.ideal_power))


@dataclass(frozen=True)
class Product:
    factors: tuple["RingExpr", ...]


RingExpr = Union[Cyclic, GaloisField, Quotient, Product]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.orig = text
        self.i = 0

    # -- low level -------------------------------------------------------------------
    def error(self, msg: str, pos: int | None = None):
        raise RingParseError(msg, self.i if pos is None else pos)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, s: str):
        self.skip_ws()
        if not self.text.startswith(s, self.i):
            found = self.peek() or "end of input"
            self.error(f"expected {s!r}, found {found!r}")
        self.i += len(s)

    def integer(self) -> int:
        self.skip_ws()
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            self.error(f"expected integer, found {self.peek() or 'end of input'!r}")
        return int(self.text[start:self.i])

    # -- rings -----------------------------------------------------------------------
    def parse(self) -> RingExpr:
        expr = self.ring()
        self.skip_ws()
        if self.i != len(self.text):
            self.error(f"unexpected {self.peek()!r}")
        return expr

    def at_product_sep(self) -> bool:
        """True before a product operator: spaced "x", or "×" with optional spaces."""
        text, j = self.text, self.i
        while j < len(text) and text[j].isspace():
            j += 1
        if j < len(text) and text[j] == "×":
            return True
        if j == self.i or j >= len(text) or text[j] != "x":
            return False
        return j + 1 < len(text) and text[j + 1].isspace()

    def ring(self) -> RingExpr:
        factors = [self.atom()]
        while self.at_product_sep():
            self.skip_ws()
            self.i += 1
            factors.append(self.atom())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def atom(self) -> RingExpr:
        self.skip_ws()
        start = self.i
        c = self.peek()
        if c == "(":
            self.i += 1
            inner = self.ring()
            self.expect(")")
            return inner
        if self.text.startswith("GF(", self.i):
            self.i += 3
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if not is_prime(p):
                self.error(f"GF characteristic {p} is not prime", start)
            if k < 1:
                self.error("GF extension degree must be >= 1", start)
            return GaloisField(p, k)
        if c == "F":
            self.i += 1
            q = self.integer()
            pk = prime_power(q)
            if pk is None:
                self.error(f"F{q}: {q} is not a prime power", start)
            p, k = pk
            return Cyclic(p) if k == 1 else GaloisField(p, k)
        if c == "Z":
            self.i += 1
            n = self.integer()
            if n < 2:
                self.error(f"Z{n}: modulus must be >= 2", start)
            if self.peek() == "[":
                return self.quotient(n)
            return Cyclic(n)
        self.error(f"expected a ring, found {c or 'end of input'!r}")

    def variable(self) -> str:
        self.skip_ws()
        start = self.i
        if not ("a" <= self.peek() <= "z"):
            self.error(f"expected variable, found {self.peek() or 'end of input'!r}")
        self.i += 1
        while self.peek().isdigit():
            self.i += 1
        return self.text[start:self.i]

    def quotient(self, n: int) -> Quotient:
        self.expect("[")
        names = [self.variable()]
        pos = [self.i]
        while True:
            self.skip_ws()
            if self.peek() == ",":
                self.i += 1
                names.append(self.variable())
                pos.append(self.i)
                continue
            break
        self.expect("]")
        for k, name in enumerate(names):
            if name in names[:k]:
                self.error(f"duplicate variable {name!r}", pos[k] - len(name))
        self.expect("/")
        self.expect("(")
        gens = [self.poly(names)]
        while True:
            self.skip_ws()
            if self.peek() == ",":
                self.i += 1
                gens.append(self.poly(names))
                continue
            break
        self.expect(")")
        power = None
        save = self.i
        self.skip_ws()
        if self.peek() != "^":
            self.i = save  # leave the whitespace for a product separator
        else:
            self.i += 1
            power = self.integer()
            if power < 1:
                self.error("ideal power must be >= 1")
        return Quotient(n, tuple(names), tuple(gens), power)

    # -- polynomials -----------------------------------------------------------------
    def poly(self, names: list[str]) -> Poly:
        nv = len(names)
        self.skip_ws()
        start = self.i
        total = Poly({}, nv)
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        total = total + self.term(names) * sign
        while True:
            self.skip_ws()
            c = self.peek()
            if c and c in "+-":
                self.i += 1
                total = total + self.term(names) * (-1 if c == "-" else 1)
            else:
                break
        if total.is_zero():
            self.error("zero polynomial in ideal generators", start)
        return total

    def term(self, names: list[str]) -> Poly:
        nv = len(names)
        self.skip_ws()
        coeff = 1
        seen_any = False
        if self.peek().isdigit():
            coeff = self.integer()
            seen_any = True
            self.skip_ws()
            if self.peek() == "*":
                self.i += 1
                self.skip_ws()
                if not ("a" <= self.peek() <= "z"):
                    self.error("expected variable after '*'")
        exps = [0] * nv
        while "a" <= self.peek() <= "z":
            start = self.i
            name = self.variable()
            if name not in names:
                self.error(f"unknown variable {name!r}", start)
            e = 1
            if self.peek() == "^":
                self.i += 1
                e = self.integer()
            exps[names.index(name)] += e
            seen_any = True
            self.skip_ws()
            if self.peek() == "*":
                self.i += 1
                self.skip_ws()
        if not seen_any:
            self.error(f"expected term, found {self.peek() or 'end of input'!r}")
        return Poly({tuple(exps): coeff}, nv)


def parse_ring_expr(text: str) -> RingExpr:
    """Parse a ring expression, raising :class:`RingParseError` with a position on failure."""
    if not isinstance(text, str):
        raise RingParseError("ring expression must be a string", 0)
    return _Parser(text).parse()


def format_ring_expr(e: RingExpr) -> str:
    """Canonical text form; ``parse_ring_expr(format_ring_expr(e)) == e``."""
    if isinstance(e, Cyclic):
        return f"Z{e.n}"
    if isinstance(e, GaloisField):
        return f"GF({e.p},{e.k})" if e.k == 1 else f"F{e.order}"
    if isinstance(e, Quotient):
        gens = ", ".join(format_poly(g, e.variables) for g in e.generators)
        power = f"^{e.ideal_power}" if e.ideal_power is not None else ""
        return f"Z{e.modulus}[{','.join(e.variables)}]/({gens}){power}"
    if isinstance(e, Product):
        parts = []
        for f in e.factors:
            s = format_ring_expr(f)
            parts.append(f"({s})" if isinstance(f, Product) else s)
        return " x ".join(parts)
    raise TypeError(f"not a ring expression: {e!r}")
