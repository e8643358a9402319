"""Exact sparse univariate polynomials over the integers.

``IntPoly`` stores a canonical ``{exponent: coefficient}`` map with no zero
coefficients. Instances are immutable and hashable, so they can be cached and
shared freely between threads.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd as _igcd
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .errors import BothZero, DivisorZero, KFibError, NotDivisible

__all__ = [
    "IntPoly",
    "add",
    "mul_monomial",
    "mul",
    "divide_exact",
    "eval_rational",
    "derivative",
    "content_and_gcd",
    "are_coprime",
    "parse",
]


class IntPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c = clean.get(e, 0) + int(c)
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> IntPoly:
        # caller guarantees canonical form
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, c: int, e: int = 0) -> IntPoly:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return cls._raw({e: c} if c else {})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> IntPoly:
        """Build from a dense ascending coefficient list."""
        return cls._raw({e: int(c) for e, c in enumerate(coeffs) if c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int | None:
        """Highest exponent; ``None`` for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> int | None:
        """Lowest exponent; ``None`` for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def leading_term(self) -> tuple[int, int]:
        d = self.degree
        if d is None:
            raise ValueError("zero polynomial has no leading term")
        return self._terms[d], d

    def lowest_term(self) -> tuple[int, int]:
        v = self.valuation
        if v is None:
            raise ValueError("zero polynomial has no lowest term")
        return self._terms[v], v

    def dense(self) -> list[int]:
        """Ascending dense coefficient list; empty for zero."""
        if not self._terms:
            return []
        out = [0] * (self.degree + 1)
        for e, c in self._terms.items():
            out[e] = c
        return out

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = _igcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self._terms:
            return self
        g = self.content()
        if self.leading_term()[0] < 0:
            g = -g
        return IntPoly._raw({e: c // g for e, c in self._terms.items()})

    # -- algebra ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> IntPoly:
        return IntPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> IntPoly:
        if m < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while m:
            if m & 1:
                result = mul(result, base)
            m >>= 1
            if m:
                base = mul(base, base)
        return result

    def __call__(self, x):
        """Horner evaluation at any numeric ``x`` (exact for int/Fraction)."""
        if not self._terms:
            return 0 * x
        acc = 0
        prev = None
        for e in sorted(self._terms, reverse=True):
            if prev is not None:
                acc = acc * x ** (prev - e)
            acc = acc + self._terms[e]
            prev = e
        return acc * x ** prev if prev else acc

    def shift(self, e: int) -> IntPoly:
        """Multiply by x^e."""
        return mul_monomial(self, 1, e)

    def substitute_power(self, k: int) -> IntPoly:
        """Return p(x^k)."""
        return IntPoly._raw({e * k: c for e, c in self._terms.items()})

    def compress(self, k: int, offset: int = 0) -> IntPoly:
        """Inverse of ``substitute_power`` after removing ``x^offset``.

        Every exponent must be congruent to ``offset`` mod ``k``.
        """
        out = {}
        for e, c in self._terms.items():
            t = e - offset
            if t < 0 or t % k:
                raise ValueError(f"exponent {e} is not {offset} mod {k}")
            out[t // k] = c
        return IntPoly._raw(out)

    def reduce_mod_xk_plus_1(self, k: int) -> IntPoly:
        """Remainder of division by x^k + 1, using x^k = -1."""
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            q, r = divmod(e, k)
            out[r] = out.get(r, 0) + (-c if q & 1 else c)
        return IntPoly._raw({e: c for e, c in out.items() if c})

    # -- text / json --------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntPoly({render(self)!r})"

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, str] | str) -> IntPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls((int(e), int(c)) for e, c in obj.items())


def _coerce(value):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.monomial(value, 0)
    return NotImplemented


ZERO = IntPoly._raw({})
ONE = IntPoly._raw({0: 1})
X = IntPoly._raw({1: 1})


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out = dict(a._terms)
    for e, c in b._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return IntPoly._raw(out)


def mul_monomial(p: IntPoly, c: int, e: int) -> IntPoly:
    """Return c * x^e * p."""
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    if not c:
        return ZERO
    return IntPoly._raw({a + e: c * v for a, v in p._terms.items()})


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a._terms or not b._terms:
        return ZERO
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    for eb, cb in b._terms.items():
        for ea, ca in a._terms.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return IntPoly._raw({e: c for e, c in out.items() if c})


def divide_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return q with a == b*q, or raise NotDivisible.

    Never returns a truncated quotient.
    """
    if not b._terms:
        raise DivisorZero("division by the zero polynomial")
    if not a._terms:
        return ZERO
    lc_b, db = b.leading_term()
    da = a.degree
    if da < db:
        raise NotDivisible(f"deg {da} < deg {db}")
    # quick reject: the lowest terms must divide as well
    va, vb = a.valuation, b.valuation
    if va < vb or a._terms[va] % b._terms[vb]:
        raise NotDivisible("lowest terms do not divide")
    rem = dict(a._terms)
    lower = [(e - db, c) for e, c in b._terms.items() if e != db]
    quot: dict[int, int] = {}
    for e in range(da, db - 1, -1):
        c = rem.pop(e, 0)
        if not c:
            continue
        t, m = divmod(c, lc_b)
        if m:
            raise NotDivisible(f"leading coefficient {lc_b} does not divide {c}")
        s = e - db
        quot[s] = t
        for off, cb in lower:
            f = e + off
            v = rem.get(f, 0) - t * cb
            if v:
                rem[f] = v
            else:
                rem.pop(f, None)
    if rem:
        raise NotDivisible("nonzero remainder")
    return IntPoly._raw(quot)


def eval_rational(p: IntPoly, x) -> Fraction:
    """Exact evaluation at a rational point."""
    if not isinstance(x, Rational):
        x = Fraction(x)
    return Fraction(p(Fraction(x)))


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly._raw({e - 1: e * c for e, c in p._terms.items() if e})


# -- gcd ------------------------------------------------------------------


def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive_dense(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = _igcd(g, c)
        if g == 1:
            return a
    return [c // g for c in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense ascending lists."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        s = da - db
        a = [c * lb for c in a]
        for i, cb in enumerate(b):
            a[i + s] -= la * cb
        _strip(a)
    return a


def content_and_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd over Q, returned primitive over Z with positive leading coefficient.

    Uses the primitive pseudo-remainder sequence.
    """
    if not a and not b:
        raise BothZero("gcd of two zero polynomials")
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    # powers of x are handled directly so the PRS runs on smaller inputs
    v = min(a.valuation, b.valuation)
    u = _primitive_dense(a.dense()[a.valuation:])
    w = _primitive_dense(b.dense()[b.valuation:])
    if len(u) < len(w):
        u, w = w, u
    while w:
        r = _strip(_prem(u, w))
        u, w = w, (_primitive_dense(r) if r else r)
    g = IntPoly.from_coeffs(u).primitive()
    if len(g) == 1 and g.degree == 0:
        g = ONE
    return g.shift(v)


# Coprimality certificate: if gcd(a mod p, b mod p) is constant and p divides
# neither leading coefficient, the gcd over Q is constant as well.
_CERT_PRIMES = (2147483647, 2147483629, 2147483587)


def _gcd_degree_mod_p(a: list[int], b: list[int], p: int) -> int:
    a = _strip([c % p for c in a])
    b = _strip([c % p for c in b])
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            f = a[-1] * inv % p
            s = len(a) - 1 - db
            for i in range(db + 1):
                a[i + s] = (a[i + s] - f * b[i]) % p
            _strip(a)
        a, b = b, a
    return len(a) - 1


def are_coprime(a: IntPoly, b: IntPoly) -> bool:
    """True iff gcd(a, b) over Q is a nonzero constant."""
    if not a and not b:
        raise BothZero("coprimality of two zero polynomials")
    if not a or not b:
        return (a or b).degree == 0
    da, db = a.dense(), b.dense()
    for p in _CERT_PRIMES:
        if da[-1] % p and db[-1] % p:
            if _gcd_degree_mod_p(da, db, p) == 0:
                return True
            break
    return content_and_gcd(a, b).degree == 0


# -- text -----------------------------------------------------------------


def _term_text(c: int, e: int) -> str:
    mag = abs(c)
    if e == 0:
        return str(mag)
    xs = "x" if e == 1 else f"x^{e}"
    return xs if mag == 1 else f"{mag}{xs}"


def render(p: IntPoly) -> str:
    """Ascending text form, e.g. ``1 + 2x^3 + x^6`` or ``-3x - 4x^5 - x^9``."""
    if not p._terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(sorted(p._terms.items())):
        t = _term_text(c, e)
        if i == 0:
            out.append(("-" if c < 0 else "") + t)
        else:
            out.append((" - " if c < 0 else " + ") + t)
    return "".join(out)


def render_compact(p: IntPoly) -> str:
    """Table style: ``1 +2x^3 +x^6``."""
    if not p._terms:
        return "0"
    items = sorted(p._terms.items())
    out = []
    for i, (e, c) in enumerate(items):
        t = _term_text(c, e)
        if i == 0:
            out.append(("-" if c < 0 else "") + t)
        else:
            out.append((" -" if c < 0 else " +") + t)
    return "".join(out)


class ParseError(KFibError, ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*^()]))")


def _tokenize(text: str) -> list[str]:
    text = text.replace("{", "").replace("}", "").replace("**", "^")
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self) -> IntPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            acc = acc + self.term() * sign
        return acc

    def term(self) -> IntPoly:
        acc = self.factor()
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                acc = acc * self.factor()
            elif t is not None and (t == "x" or t == "(" or t.isdigit()):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> IntPoly:
        t = self.take()
        if t is None:
            raise ParseError("unexpected end of input")
        if t.isdigit():
            base = IntPoly.monomial(int(t))
        elif t == "x":
            base = X
        elif t == "(":
            base = self.expr()
            if self.take() != ")":
                raise ParseError("missing ')'")
        else:
            raise ParseError(f"unexpected token {t!r}")
        if self.peek() == "^":
            self.take()
            e = self.take()
            if e is None or not e.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            base = base ** int(e)
        return base


def parse(text: str) -> IntPoly:
    """Parse ``1 + 2x^3 + x^6``, ``-x^9-4x^5-3x`` or products such as
    ``x^2(1+x^3)^2(6 +4x^3 +x^6)``."""
    p = _Parser(_tokenize(text))
    if p.peek() is None:
        raise ParseError("empty input")
    out = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input at token {p.peek()!r}")
    return out
