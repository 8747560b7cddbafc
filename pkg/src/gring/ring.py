"""Quotient rings presented by reduced Groebner bases.

``build_KF(n)`` constructs the commutative coordinate ring of the rank-n
free group on generators ``lam_i`` (symmetrized generators), ``m_ij``
(pairwise products, i<j) and ``w_ijk`` (triple products, i<j<k).  The
symmetry rewrites are enforced structurally: ``m(i,i)`` is the polynomial
``1 - lam_i^2`` and ``w`` with a repeated index is zero, so only canonical
symbols ever appear as variables.  The defining relations are instantiated
over canonical index tuples only; tests check exhaustively that every raw
instance reduces to zero modulo them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .errors import ForeignVariable, NotAUnit
from .groebner import GroebnerBasis, buchberger, groebner_with_cofactors
from .poly import (
    REGISTRY,
    MonomialOrder,
    Poly,
    VariableRegistry,
    block_order,
    degrevlex,
)


def _perm_sign(seq):
    """Sign of the permutation sorting ``seq`` ascending; 0 on repeats."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return 0
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class QuotientRing:
    """A polynomial ring modulo the ideal of a reduced Groebner basis.

    Elements are represented by their normal forms, so two ring elements
    are equal iff their representatives are equal as polynomials.
    """

    def __init__(self, vids, relations, order=None, registry=None, label=""):
        self.registry = registry if registry is not None else REGISTRY
        self.vids = tuple(vids)
        self.order = order if order is not None else degrevlex(
            self.vids, self.registry
        )
        self.label = label
        self.gb = buchberger(list(relations), self.order)

    @property
    def relation_polys(self):
        return self.gb.polys

    def var_names(self):
        return [self.registry.name(v) for v in self.vids]

    def nf(self, p: Poly) -> Poly:
        return self.gb.normal_form(p)

    def is_zero(self, p: Poly) -> bool:
        return self.nf(p).is_zero()

    def ideal_gb(self, gens, deadline=None) -> GroebnerBasis:
        """Reduced basis of <gens> + defining relations, in the ring order."""
        return buchberger(
            list(gens) + list(self.gb.polys), self.order, deadline=deadline
        )

    def vdim(self):
        """Dimension over the rationals as a vector space; None if infinite.

        Counts the staircase monomials (those divisible by no leading
        monomial of the relation basis).
        """
        from . import kernel

        leads = self.gb.leading_monomials()
        if any(lm == () for lm in leads):
            return 0
        caps = {}
        for v in self.vids:
            cap = None
            for lm in leads:
                if len(lm) == 1 and lm[0][0] == v:
                    e = lm[0][1]
                    cap = e if cap is None else min(cap, e)
            if cap is None:
                return None  # no pure power of v leads: infinite dimension
            caps[v] = cap
        count = 0
        ranges = [range(caps[v]) for v in self.vids]
        for exps in product(*ranges):
            mono = tuple(
                (v, e) for v, e in zip(self.vids, exps) if e
            )
            if all(kernel.mono_div(mono, lm) is None for lm in leads):
                count += 1
        return count

    def describe(self) -> dict:
        return {
            "label": self.label,
            "variables": self.var_names(),
            "order": self.order.descriptor(),
            "relations": [p.render() for p in self.gb.polys],
        }


def is_whole_ring(gens, ambient: QuotientRing, deadline=None) -> bool:
    """True iff 1 lies in <gens> plus the ambient relations."""
    return ambient.ideal_gb(gens, deadline=deadline).is_unit_ideal()


def ideal_contains(gens, p: Poly, ambient: QuotientRing) -> bool:
    return ambient.ideal_gb(gens).contains(p)


def ideal_equal(gens_a, gens_b, ambient: QuotientRing) -> bool:
    ga = ambient.ideal_gb(gens_a)
    gbs = ambient.ideal_gb(gens_b)
    return ga.polys == gbs.polys


def invert(elem: Poly, ambient: QuotientRing) -> Poly:
    """Inverse of ``elem`` modulo the ambient relations.

    Runs the cofactor-tracking basis computation on relations + elem; the
    element is a unit iff 1 lands in that ideal, and the cofactor of
    ``elem`` in the expression of 1 is the inverse.  Raises NotAUnit
    otherwise.
    """
    gens = list(ambient.gb.polys) + [elem]
    basis, reps = groebner_with_cofactors(gens, ambient.order)
    for b, rep in zip(basis, reps):
        if b.is_constant() and not b.is_zero():
            c = b.constant_term()
            inv = rep[-1] * (Fraction(1) / c)
            inv = ambient.nf(inv)
            residue = ambient.nf(elem * inv - Poly.one(ambient.registry))
            if not residue.is_zero():
                raise AssertionError("cofactor certificate failed to verify")
            return inv
    raise NotAUnit(f"{elem.render()} is not a unit in {ambient.label or 'ring'}")


class KFRing(QuotientRing):
    """Coordinate ring of the free group of rank n in canonical symbols."""

    def __init__(self, n: int, registry=None):
        if n < 1:
            raise ValueError("generator count must be at least 1")
        reg = registry if registry is not None else REGISTRY
        self.registry = reg  # needed by the symbol helpers below
        self.n = n
        self._lam = {}
        self._m = {}
        self._w = {}
        symbol_of = {}
        lam_vids = []
        for i in range(1, n + 1):
            vid = reg.var(f"lam{i}")
            self._lam[i] = vid
            lam_vids.append(vid)
            symbol_of[vid] = ("lam", (i,))
        m_vids = []
        for i, j in combinations(range(1, n + 1), 2):
            vid = reg.var(f"m{i}{j}")
            self._m[(i, j)] = vid
            m_vids.append(vid)
            symbol_of[vid] = ("m", (i, j))
        w_vids = []
        for i, j, k in combinations(range(1, n + 1), 3):
            vid = reg.var(f"w{i}{j}{k}")
            self._w[(i, j, k)] = vid
            w_vids.append(vid)
            symbol_of[vid] = ("w", (i, j, k))
        self.symbol_of = symbol_of
        base = tuple(lam_vids + m_vids)
        if w_vids:
            order = block_order(tuple(w_vids), base, registry=reg)
        else:
            order = degrevlex(base, reg)
        relations = self._relation_instances(reg)
        super().__init__(
            tuple(lam_vids + m_vids + w_vids),
            relations,
            order=order,
            registry=reg,
            label=f"K[F{n}]",
        )

    # -- canonical symbols ----------------------------------------------

    def lam(self, i: int) -> Poly:
        if not 1 <= i <= self.n:
            raise ForeignVariable(f"generator index {i} out of range")
        return Poly._raw(
            {((self._lam[i], 1),): Fraction(1)}, self.registry
        )

    def m(self, i: int, j: int) -> Poly:
        """Canonical pairwise symbol: m(i,i) rewrites to 1 - lam_i^2."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ForeignVariable("pair index out of range")
        if i == j:
            one = Poly.one(self.registry)
            li = self.lam(i)
            return one - li * li
        if i > j:
            i, j = j, i
        return Poly._raw({((self._m[(i, j)], 1),): Fraction(1)}, self.registry)

    def w(self, i: int, j: int, k: int) -> Poly:
        """Fully alternating triple symbol as a signed canonical variable."""
        sign, p = self.w_signed(i, j, k)
        return p if sign >= 0 else -p

    def w_signed(self, i: int, j: int, k: int):
        """(sign, canonical variable Poly); sign 0 with zero Poly on repeats."""
        for idx in (i, j, k):
            if not 1 <= idx <= self.n:
                raise ForeignVariable("triple index out of range")
        sign = _perm_sign((i, j, k))
        if sign == 0:
            return 0, Poly.zero(self.registry)
        key = tuple(sorted((i, j, k)))
        p = Poly._raw({((self._w[key], 1),): Fraction(1)}, self.registry)
        return sign, p

    def split_w(self, p: Poly):
        """Split a normal form as plain + sum over triples of w_T * rest.

        Normal forms have total degree at most one in the w symbols (any
        pair of them leads a defining relation), so the decomposition is a
        plain term split.  Returns (w_free_poly, {triple: cofactor_poly}).
        """
        if not self._w:
            return p, {}
        w_vids = {vid: t for t, vid in self._w.items()}
        plain = {}
        by_triple = {}
        for mono, c in p.terms():
            hit = None
            rest = []
            for vid, e in mono:
                if vid in w_vids:
                    if hit is not None or e != 1:
                        raise AssertionError(
                            "normal form has degree >= 2 in the w symbols"
                        )
                    hit = w_vids[vid]
                else:
                    rest.append((vid, e))
            if hit is None:
                plain[mono] = c
            else:
                by_triple.setdefault(hit, {})[tuple(rest)] = c
        plain_p = Poly._raw(plain, self.registry)
        cof = {
            t: Poly._raw(d, self.registry) for t, d in by_triple.items()
        }
        return plain_p, cof

    # -- defining relations ----------------------------------------------

    def _raw_r3(self, i, j, k, l, s) -> Poly:
        """Alternating sum tying triple symbols to pairwise ones."""
        return (
            self.w(j, k, l) * self.m(i, s)
            - self.w(i, k, l) * self.m(j, s)
            + self.w(i, j, l) * self.m(k, s)
            - self.w(i, j, k) * self.m(l, s)
        )

    def _raw_r4(self, t1, t2) -> Poly:
        """Product of two triple symbols minus the pairwise determinant."""
        i, j, k = t1
        l, s, t = t2
        det = (
            self.m(i, l) * (self.m(j, s) * self.m(k, t) - self.m(j, t) * self.m(k, s))
            - self.m(i, s) * (self.m(j, l) * self.m(k, t) - self.m(j, t) * self.m(k, l))
            + self.m(i, t) * (self.m(j, l) * self.m(k, s) - self.m(j, s) * self.m(k, l))
        )
        return self.w(i, j, k) * self.w(l, s, t) - det

    def _relation_instances(self, reg):
        rels = []
        idx = range(1, self.n + 1)
        for quad in combinations(idx, 4):
            for s in idx:
                p = self._raw_r3(*quad, s)
                if not p.is_zero():
                    rels.append(p)
        triples = list(combinations(idx, 3))
        for a in range(len(triples)):
            for b in range(a, len(triples)):
                p = self._raw_r4(triples[a], triples[b])
                if not p.is_zero():
                    rels.append(p)
        return rels


_KF_CACHE = {}


def build_KF(n: int, registry=None) -> KFRing:
    """The rank-n coordinate ring; cached per registry."""
    reg = registry if registry is not None else REGISTRY
    key = (id(reg), n)
    ring = _KF_CACHE.get(key)
    if ring is None:
        ring = KFRing(n, reg)
        _KF_CACHE[key] = ring
    return ring


def canonical_m(ring: KFRing, i: int, j: int) -> Poly:
    return ring.m(i, j)


def canonical_w(ring: KFRing, i: int, j: int, k: int):
    return ring.w_signed(i, j, k)
