"""Exact sparse multivariate polynomials over the rationals.

All coefficients are ``fractions.Fraction`` so every equality test in the
package is exact.  Variables live in an append-only registry that hands out
stable integer ids, letting polynomials built in different modules compose.
Monomial orders are block orders with degree-reverse-lexicographic
comparison inside each block; a single block gives plain degrevlex and a
leading singleton block gives the elimination orders used downstream.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import kernel
from .errors import ForeignVariable, MalformedSyntax, MismatchedRegistry

Rational = Fraction

NEG_INF = float("-inf")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class VariableRegistry:
    """Append-only mapping between variable names and integer ids."""

    def __init__(self):
        self._names = []
        self._ids = {}

    def var(self, name: str) -> int:
        """Id of ``name``, creating the variable on first use."""
        vid = self._ids.get(name)
        if vid is None:
            if not _IDENT.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
            vid = len(self._names)
            self._names.append(name)
            self._ids[name] = vid
        return vid

    def lookup(self, name: str) -> int:
        vid = self._ids.get(name)
        if vid is None:
            raise KeyError(name)
        return vid

    def name(self, vid: int) -> str:
        return self._names[vid]

    def __len__(self):
        return len(self._names)

    def __contains__(self, name):
        return name in self._ids


#: Default registry shared by every module in the package.
REGISTRY = VariableRegistry()

#: Distinguished variable carrying the one-variable recurrence family and
#: the isolated variable of the two-generator case study.
CHEB_VAR = "x"


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c)!r}")


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_t", "registry")

    def __init__(self, terms=(), registry: VariableRegistry = None):
        self.registry = registry if registry is not None else REGISTRY
        t = {}
        for mono, c in dict(terms).items():
            c = _coeff(c)
            if c:
                t[mono] = c
        self._t = t

    @classmethod
    def _raw(cls, terms: dict, registry) -> "Poly":
        p = cls.__new__(cls)
        p._t = terms
        p.registry = registry
        return p

    @classmethod
    def zero(cls, registry=None) -> "Poly":
        return cls._raw({}, registry if registry is not None else REGISTRY)

    @classmethod
    def const(cls, c, registry=None) -> "Poly":
        c = _coeff(c)
        reg = registry if registry is not None else REGISTRY
        return cls._raw({(): c} if c else {}, reg)

    @classmethod
    def one(cls, registry=None) -> "Poly":
        return cls.const(1, registry)

    @classmethod
    def variable(cls, name: str, registry=None) -> "Poly":
        reg = registry if registry is not None else REGISTRY
        vid = reg.var(name)
        return cls._raw({((vid, 1),): Fraction(1)}, reg)

    # -- inspection ----------------------------------------------------

    def terms(self):
        """Iterable of (monomial, coefficient) pairs (no fixed order)."""
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and () in self._t)

    def constant_term(self) -> Fraction:
        return self._t.get((), Fraction(0))

    def variables(self):
        """Sorted ids of the variables that actually occur."""
        seen = set()
        for m in self._t:
            for vid, _ in m:
                seen.add(vid)
        return sorted(seen)

    def total_degree(self):
        if not self._t:
            return NEG_INF
        return max(kernel.mono_deg(m) for m in self._t)

    def degree_in(self, v):
        """Largest exponent of ``v`` (a name or id); -inf for the zero poly."""
        vid = self.registry.lookup(v) if isinstance(v, str) else v
        if not self._t:
            return NEG_INF
        best = 0
        for m in self._t:
            for w, e in m:
                if w == vid and e > best:
                    best = e
        return best

    def coefficient_in(self, v, k: int) -> "Poly":
        """Coefficient of ``v**k`` as a polynomial in the other variables."""
        vid = self.registry.lookup(v) if isinstance(v, str) else v
        out = {}
        for m, c in self._t.items():
            e = 0
            rest = []
            for w, ee in m:
                if w == vid:
                    e = ee
                else:
                    rest.append((w, ee))
            if e == k:
                out[tuple(rest)] = c
        return Poly._raw(out, self.registry)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Poly"):
        if self.registry is not other.registry:
            raise MismatchedRegistry("operands from different registries")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.registry)
        elif not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return Poly._raw(kernel.poly_add(self._t, other._t), self.registry)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._t.items()}, self.registry)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.registry)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            return Poly._raw(kernel.poly_scale(self._t, c), self.registry)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return Poly._raw(kernel.poly_mul(self._t, other._t), self.registry)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined for Poly")
        result = Poly.one(self.registry)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.registry)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.registry is other.registry and self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def substitute(self, assignment) -> "Poly":
        """Image under the ring map sending each assigned variable.

        ``assignment`` maps variable names or ids to Poly / exact numbers;
        unassigned variables pass through unchanged.
        """
        amap = {}
        for key, val in assignment.items():
            vid = self.registry.lookup(key) if isinstance(key, str) else key
            if not isinstance(val, Poly):
                val = Poly.const(val, self.registry)
            self._check(val)
            amap[vid] = val
        out = {}
        for m, c in self._t.items():
            fixed = []
            factors = []
            for vid, e in m:
                if vid in amap:
                    factors.append((amap[vid], e))
                else:
                    fixed.append((vid, e))
            term = {tuple(fixed): c}
            for p, e in factors:
                term = kernel.poly_mul(term, (p ** e)._t)
            out = kernel.poly_add(out, term)
        return Poly._raw(out, self.registry)

    # -- rendering -----------------------------------------------------

    def _sorted_terms(self):
        return sorted(
            self._t.items(),
            key=lambda kv: (kernel.mono_deg(kv[0]), kv[0]),
            reverse=True,
        )

    def render(self) -> str:
        """Human-readable form like ``3/2*x^2*y - 1``."""
        if not self._t:
            return "0"
        reg = self.registry
        chunks = []
        for m, c in self._sorted_terms():
            factors = []
            for vid, e in m:
                name = reg.name(vid)
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()})"


class MonomialOrder:
    """Block order; degrevlex inside each block, leftmost block dominates."""

    __slots__ = ("blocks", "slots", "width", "registry")

    def __init__(self, blocks, registry=None):
        self.registry = registry if registry is not None else REGISTRY
        cleaned = tuple(tuple(b) for b in blocks if b)
        if not cleaned:
            raise ValueError("monomial order needs at least one variable")
        seen = set()
        for b in cleaned:
            for vid in b:
                if vid in seen:
                    raise ValueError("variable repeated across blocks")
                seen.add(vid)
        self.blocks = cleaned
        slots = {}
        base = 0
        for b in cleaned:
            n = len(b)
            for i, vid in enumerate(b):
                slots[vid] = (base, base + 1 + (n - 1 - i))
            base += 1 + n
        self.slots = slots
        self.width = base

    def key(self, mono):
        try:
            return kernel.mono_key(mono, self.slots, self.width)
        except KeyError as exc:
            name = self.registry.name(exc.args[0])
            raise ForeignVariable(
                f"variable {name!r} is not part of this monomial order"
            ) from None

    def sorted_terms(self, p: Poly):
        return sorted(p.terms(), key=lambda kv: self.key(kv[0]), reverse=True)

    def leading(self, p: Poly):
        """(monomial, coefficient) of the leading term; p must be nonzero."""
        it = iter(p.terms())
        best_m, best_c = next(it)
        best_k = self.key(best_m)
        for m, c in it:
            k = self.key(m)
            if k > best_k:
                best_k, best_m, best_c = k, m, c
        return best_m, best_c

    def monic(self, p: Poly) -> Poly:
        if p.is_zero():
            return p
        _, c = self.leading(p)
        return p * (Fraction(1) / c)

    def descriptor(self) -> dict:
        reg = self.registry
        return {
            "type": "block_degrevlex",
            "blocks": [[reg.name(v) for v in b] for b in self.blocks],
        }

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)


def degrevlex(vids, registry=None) -> MonomialOrder:
    return MonomialOrder((tuple(vids),), registry)


def block_order(*blocks, registry=None) -> MonomialOrder:
    return MonomialOrder(blocks, registry)


# -- parsing -----------------------------------------------------------

_NUM = re.compile(r"[0-9]+(/[0-9]+)?")


def parse_poly(text: str, registry=None) -> Poly:
    """Parse the rendering format back into a Poly (test fixtures, CLI)."""
    reg = registry if registry is not None else REGISTRY
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_factor():
        nonlocal pos
        skip_ws()
        m = _NUM.match(text, pos)
        if m:
            pos = m.end()
            return Poly.const(Fraction(m.group()), reg)
        m = _IDENT.match(text, pos)
        if not m:
            raise MalformedSyntax("expected a number or variable", pos)
        pos = m.end()
        p = Poly.variable(m.group(), reg)
        skip_ws()
        if pos < n and text[pos] == "^":
            pos += 1
            skip_ws()
            me = re.compile(r"-?[0-9]+").match(text, pos)
            if not me:
                raise MalformedSyntax("expected an integer exponent", pos)
            e = int(me.group())
            if e < 0:
                raise MalformedSyntax("negative exponents not allowed", pos)
            pos = me.end()
            p = p ** e
        return p

    def parse_term():
        nonlocal pos
        p = parse_factor()
        skip_ws()
        while pos < n and text[pos] == "*":
            pos += 1
            p = p * parse_factor()
            skip_ws()
        return p

    skip_ws()
    sign = 1
    if pos < n and text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    total = parse_term() * sign
    skip_ws()
    while pos < n:
        if text[pos] == "+":
            sign = 1
        elif text[pos] == "-":
            sign = -1
        else:
            raise MalformedSyntax("expected '+' or '-'", pos)
        pos += 1
        total = total + parse_term() * sign
        skip_ws()
    return total


# -- the recurrence family ---------------------------------------------


def _cheb_coeffs(n: int):
    """Integer coefficient list (index = power) of the n-th family member."""
    if n >= 0:
        prev, cur = [], [1]  # members 0 and 1
        if n == 0:
            return prev
        for _ in range(n - 1):
            nxt = [0, 0] + [0] * len(cur)
            for i, c in enumerate(cur):
                nxt[i + 1] += 2 * c
            for i, c in enumerate(prev):
                nxt[i] -= c
            while nxt and nxt[-1] == 0:
                nxt.pop()
            prev, cur = cur, nxt
        return cur
    # Walk the recurrence downwards from members 1 and 0.
    above, cur = [1], []
    for _ in range(-n):
        below = [0, 0] + [0] * len(cur)
        for i, c in enumerate(cur):
            below[i + 1] += 2 * c
        for i, c in enumerate(above):
            below[i] -= c
        while below and below[-1] == 0:
            below.pop()
        above, cur = cur, below
    return cur


def chebyshev_like(n: int, registry=None) -> Poly:
    """Member n of the family with P(0)=0, P(1)=1, 2x*P(n)=P(n-1)+P(n+1).

    Defined for every integer n; univariate in the distinguished variable.
    """
    reg = registry if registry is not None else REGISTRY
    vid = reg.var(CHEB_VAR)
    out = {}
    for i, c in enumerate(_cheb_coeffs(n)):
        if c:
            mono = () if i == 0 else ((vid, i),)
            out[mono] = Fraction(c)
    return Poly._raw(out, reg)
