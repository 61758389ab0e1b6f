"""Sparse multivariate polynomials over an exact field.

A polynomial is a dict mapping exponent tuples (one entry per registered
variable) to nonzero coefficients.  The variable registry is explicit and
ordered; all operands of a binary operation must share the same ring
(same registry, same field).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    ParseSyntaxError,
    UnknownVariable,
)
from .fields import FieldConfig

Monomial = tuple  # tuple[int, ...], one exponent per registered variable


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative monomial order: grevlex, lex, or a block order.

    ``Block(k)`` compares the leading k exponents by grevlex first and the
    trailing block by grevlex on ties, which makes the leading block an
    elimination block.
    """

    kind: str = "grevlex"  # grevlex | lex | block
    block: int = 0

    def key(self):
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "grevlex":
            def k(e):
                return (sum(e), tuple(-x for x in reversed(e)))
            return k
        if self.kind == "block":
            b = self.block
            def k(e):
                head, tail = e[:b], e[b:]
                return (
                    sum(head),
                    tuple(-x for x in reversed(head)),
                    sum(tail),
                    tuple(-x for x in reversed(tail)),
                )
            return k
        raise ValueError(f"unknown order kind {self.kind!r}")


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


class PolyRing:
    """Ordered variable registry bound to a coefficient field."""

    __slots__ = ("names", "field", "ops", "nvars", "index", "_zero_mono")

    def __init__(self, names, field: FieldConfig):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ParseSyntaxError(f"duplicate variable names in {names}")
        self.names = names
        self.field = field
        self.ops = field.ops
        self.nvars = len(names)
        self.index = {n: i for i, n in enumerate(names)}
        self._zero_mono = (0,) * len(names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"PolyRing({','.join(self.names)})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self._zero_mono: self.ops.one})

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {self._zero_mono: c} if c != 0 else {})

    def from_int(self, n: int) -> "Polynomial":
        return self.const(self.ops.from_int(n))

    def var(self, name: str) -> "Polynomial":
        if name not in self.index:
            raise UnknownVariable(f"{name!r} not in registry {self.names}")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): self.ops.one})

    def gens(self):
        return [self.var(n) for n in self.names]


class Polynomial:
    """Immutable sparse polynomial; ``terms`` never stores zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def degree_in(self, idx: int) -> int:
        return max((m[idx] for m in self.terms), default=0)

    def variables_used(self) -> set:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring and self.ring != other.ring:
            if self.ring.field != other.ring.field:
                raise FieldMismatch("operands live over different fields")
            raise DimensionMismatch(
                f"operands have different registries: {self.ring.names} vs {other.ring.names}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        ops = self.ring.ops
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = ops.add(out.get(m, ops.zero), c)
            if acc == 0:
                out.pop(m, None)
            else:
                out[m] = acc
        return Polynomial(self.ring, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        ops = self.ring.ops
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = ops.sub(out.get(m, ops.zero), c)
            if acc == 0:
                out.pop(m, None)
            else:
                out[m] = acc
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        ops = self.ring.ops
        return Polynomial(self.ring, {m: ops.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        ops = self.ring.ops
        mul, add = ops.mul, ops.add
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ma, ca in a.items():
            for mb, cb in b.items():
                mm = tuple(x + y for x, y in zip(ma, mb))
                acc = add(out.get(mm, ops.zero), mul(ca, cb))
                if acc == 0:
                    out.pop(mm, None)
                else:
                    out[mm] = acc
        return Polynomial(self.ring, out)

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return self.ring.zero()
        mul = self.ring.ops.mul
        return Polynomial(self.ring, {m: mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        if c == 0:
            return self.ring.zero()
        mul = self.ring.ops.mul
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(m, mono)): mul(c, v) for m, v in self.terms.items()},
        )

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self, var) -> "Polynomial":
        """Formal partial derivative with respect to a registered variable."""
        ring = self.ring
        if isinstance(var, str):
            if var not in ring.index:
                raise UnknownVariable(f"{var!r} not in registry {ring.names}")
            idx = ring.index[var]
        else:
            idx = var
        ops = ring.ops
        out: dict = {}
        for m, c in self.terms.items():
            e = m[idx]
            if e == 0:
                continue
            mm = m[:idx] + (e - 1,) + m[idx + 1:]
            acc = ops.add(out.get(mm, ops.zero), ops.mul(ops.from_int(e), c))
            if acc == 0:
                out.pop(mm, None)
            else:
                out[mm] = acc
        return Polynomial(ring, out)

    def evaluate(self, point):
        """Evaluate at a full point (one scalar per registered variable)."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, registry has {ring.nvars}"
            )
        ops = ring.ops
        acc = ops.zero
        for m, c in self.terms.items():
            val = c
            for x, e in zip(point, m):
                if e:
                    val = ops.mul(val, _scalar_pow(ops, x, e))
            acc = ops.add(acc, val)
        return acc

    def eval_partial(self, assignments: dict) -> "Polynomial":
        """Substitute scalars for a subset of variables (indices -> values)."""
        ops = self.ring.ops
        out: dict = {}
        for m, c in self.terms.items():
            val = c
            mm = list(m)
            for idx, x in assignments.items():
                e = m[idx]
                if e:
                    val = ops.mul(val, _scalar_pow(ops, x, e))
                mm[idx] = 0
            if val == 0:
                continue
            key = tuple(mm)
            acc = ops.add(out.get(key, ops.zero), val)
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
        return Polynomial(self.ring, out)

    def map_ring(self, new_ring: PolyRing, var_map) -> "Polynomial":
        """Reindex into another ring; ``var_map[i]`` is the new index of old
        variable i.  Every used variable must be mapped."""
        out: dict = {}
        width = new_ring.nvars
        for m, c in self.terms.items():
            e = [0] * width
            for i, k in enumerate(m):
                if k:
                    j = var_map[i]
                    if j is None:
                        raise UnknownVariable(
                            f"variable {self.ring.names[i]!r} has no image"
                        )
                    e[j] += k
            key = tuple(e)
            if key in out:
                acc = new_ring.ops.add(out[key], c)
                if acc == 0:
                    del out[key]
                else:
                    out[key] = acc
            else:
                out[key] = c
        return Polynomial(new_ring, out)

    def subst(self, images) -> "Polynomial":
        """Full substitution: ``images[i]`` (a Polynomial in the target ring)
        replaces variable i.  Exponential in degree, meant for small inputs."""
        target = images[0].ring
        out = target.zero()
        one = target.one()
        for m, c in self.terms.items():
            term = one.scale(c)
            for i, e in enumerate(m):
                if e:
                    term = term * (images[i] ** e)
            out = out + term
        return out

    # -- printing -----------------------------------------------------------

    def __repr__(self):
        return poly_to_str(self)


def _scalar_pow(ops, x, e: int):
    acc = ops.one
    base = x
    while e:
        if e & 1:
            acc = ops.mul(acc, base)
        e >>= 1
        if e:
            base = ops.mul(base, base)
    return acc


def poly_to_str(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if p.is_zero():
        return "0"
    key = order.key()
    parts = []
    for m in sorted(p.terms, key=key, reverse=True):
        c = p.terms[m]
        factors = [
            n if e == 1 else f"{n}^{e}"
            for n, e in zip(p.ring.names, m)
            if e
        ]
        cs = str(p.ring.ops.to_json(c))
        if factors and cs == "1":
            parts.append("*".join(factors))
        elif factors:
            parts.append(cs + "*" + "*".join(factors))
        else:
            parts.append(cs)
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Parser for the polynomial text grammar:
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := coeff | var | var '^' uint | '(' expr ')'
#   coeff  := optionally signed integer or a/b rational literal
# ---------------------------------------------------------------------------

_TOKEN_CHARS = set("+-*^/() \t\n")


def _tokenize(src: str):
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\n":
            i += 1
            continue
        if ch in "+-*^/()":
            tokens.append(ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", int(src[i:j])))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("name", src[i:j]))
            i = j
            continue
        raise ParseSyntaxError(f"bad character {ch!r} at position {i}")
    return tokens


class _Parser:
    def __init__(self, tokens, ring: PolyRing):
        self.toks = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise ParseSyntaxError("unexpected end of input")
        self.pos += 1
        return t

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        elif self.peek() == "+":
            self.take()
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        t = self.take()
        if t == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ParseSyntaxError("expected ')'")
            return inner
        if t == "-":
            # signed coefficient literal, e.g. "2 * -3" is rejected; the
            # grammar admits a sign only immediately before a number
            nxt = self.take()
            if isinstance(nxt, tuple) and nxt[0] == "int":
                return self._coeff(-nxt[1])
            raise ParseSyntaxError("dangling '-'")
        if isinstance(t, tuple) and t[0] == "int":
            return self._coeff(t[1])
        if isinstance(t, tuple) and t[0] == "name":
            name = t[1]
            if name not in self.ring.index:
                raise UnknownVariable(f"{name!r} not in registry {self.ring.names}")
            p = self.ring.var(name)
            if self.peek() == "^":
                self.take()
                e = self.take()
                if not (isinstance(e, tuple) and e[0] == "int"):
                    raise ParseSyntaxError("exponent must be an unsigned integer")
                p = p ** e[1]
            return p
        raise ParseSyntaxError(f"unexpected token {t!r}")

    def _coeff(self, num: int) -> Polynomial:
        den = 1
        if self.peek() == "/":
            self.take()
            d = self.take()
            if not (isinstance(d, tuple) and d[0] == "int") or d[1] == 0:
                raise ParseSyntaxError("malformed rational literal")
            den = d[1]
        c = self.ring.ops.from_fraction(num, den)
        return self.ring.const(c)


def parse_poly(src: str, ring: PolyRing) -> Polynomial:
    """Parse polynomial text in the grammar above into ``ring``."""
    tokens = _tokenize(src)
    if not tokens:
        raise ParseSyntaxError("empty input")
    p = _Parser(tokens, ring)
    result = p.expr()
    if p.pos != len(tokens):
        raise ParseSyntaxError(f"trailing tokens at position {p.pos}")
    return result


@lru_cache(maxsize=None)
def _cached_names(prefix: str, count: int):
    return tuple(f"{prefix}{i}" for i in range(count))


def coordinate_ring(n_plus_1: int, field: FieldConfig, prefix: str = "x") -> PolyRing:
    """Ring of homogeneous coordinates x0..xN for an ambient P^N."""
    return PolyRing(_cached_names(prefix, n_plus_1), field)


def fresh_name(base: str, used) -> str:
    if base not in used:
        return base
    i = 0
    while f"{base}_{i}" in used:
        i += 1
    return f"{base}_{i}"
