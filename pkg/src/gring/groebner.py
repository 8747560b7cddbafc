"""Buchberger's algorithm with sugar selection, and normal-form queries.

Basis elements are kept monic over the rationals throughout; reducers are
pruned and sorted by leading monomial, and candidate pairs are filtered by
the product and chain criteria.  Coefficients stay exact, so equality of
ideals and normal forms are exact statements.
"""

from __future__ import annotations

import time
from bisect import insort
from fractions import Fraction
from heapq import heapify, heappop, heappush

from . import kernel
from .errors import GroebnerTimeout
from .poly import MonomialOrder, Poly


class GroebnerBasis:
    """A reduced Groebner basis: monic, pairwise tail-reduced, sorted."""

    __slots__ = ("polys", "order", "reduced", "_nd_reducers")

    def __init__(self, polys, order: MonomialOrder, reduced: bool = True):
        self.polys = tuple(polys)
        self.order = order
        self.reduced = reduced
        self._nd_reducers = None

    def _reducers(self):
        if self._nd_reducers is None:
            reds = []
            for p in self.polys:
                lm, lc = self.order.leading(p)
                assert lc == 1
                tail = {
                    m: (c.numerator, c.denominator)
                    for m, c in p._t.items()
                    if m != lm
                }
                reds.append((lm, tail))
            self._nd_reducers = reds
        return self._nd_reducers

    def normal_form(self, p: Poly) -> Poly:
        """Unique remainder of p; zero iff p lies in the ideal."""
        if not self.polys or p.is_zero():
            return p
        order = self.order
        r = kernel.reduce_nd(
            kernel.nd_from_frac(p._t),
            self._reducers(),
            order.slots,
            order.width,
        )
        return Poly._raw(kernel.nd_to_frac(r), p.registry)

    def contains(self, p: Poly) -> bool:
        return self.normal_form(p).is_zero()

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and not (
            self.polys[0].is_zero()
        )

    def leading_monomials(self):
        return tuple(self.order.leading(p)[0] for p in self.polys)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.polys == other.polys
        )

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def descriptor(self) -> dict:
        return {
            "order": self.order.descriptor(),
            "generators": [p.render() for p in self.polys],
        }


def buchberger(gens, order: MonomialOrder, deadline=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``deadline`` is an optional ``time.monotonic()`` value; exceeding it
    raises GroebnerTimeout.  The zero ideal yields an empty basis.
    """
    slots, width = order.slots, order.width
    registry = order.registry

    basis = []  # append-only: (lead_mono, monic dict, sugar, lead_key)
    reducers = []  # sorted [(lead_key, lead_mono, tail)], leads pairwise
    # non-divisible: new elements are normal forms, old leads divisible by
    # a new lead get pruned
    pairs = []  # heap of (sugar, lcm_key, i, j); stale entries skipped
    pending = set()

    def reduce_full(d):
        if not reducers:
            return d
        return kernel.reduce_nd(
            d, [(lm, tail) for _, lm, tail in reducers], slots, width
        )

    def add_element(d):
        """Monic-normalize, install as basis element, update pair queue."""
        lm = max(d, key=lambda m: kernel.mono_key(m, slots, width))
        d = kernel.nd_monic(d, lm)
        k = len(basis)
        key_k = kernel.mono_key(lm, slots, width)
        sugar_k = max(kernel.mono_deg(m) for m in d)
        basis.append((lm, d, sugar_k, key_k))
        for i in range(k):
            lmi, _, sugar_i, _ = basis[i]
            if kernel.mono_coprime(lmi, lm):
                continue  # product criterion: the S-pair reduces to zero
            lcm = kernel.mono_lcm(lmi, lm)
            dl = kernel.mono_deg(lcm)
            sug = max(
                sugar_i + dl - kernel.mono_deg(lmi),
                sugar_k + dl - kernel.mono_deg(lm),
            )
            heappush(pairs, (sug, kernel.mono_key(lcm, slots, width), i, k))
            pending.add((i, k))
        # the new lead retires any reducer it divides (stale entries keep
        # serving the pair bookkeeping, just not reductions)
        keep = [e for e in reducers if kernel.mono_div(e[1], lm) is None]
        if len(keep) != len(reducers):
            reducers[:] = keep
        insort(
            reducers,
            (key_k, lm, {m: c for m, c in d.items() if m != lm}),
        )

    seeds = sorted(
        (g for g in gens if not g.is_zero()),
        key=lambda g: order.key(order.leading(g)[0]),
    )
    for g in seeds:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerTimeout("basis computation exceeded its deadline")
        r = reduce_full(kernel.nd_from_frac(g._t))
        if r:
            add_element(r)

    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerTimeout("basis computation exceeded its deadline")
        _, _, i, j = heappop(pairs)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lmi, di, _, _ = basis[i]
        lmj, dj, _, _ = basis[j]
        lcm = kernel.mono_lcm(lmi, lmj)
        skip = False
        for t in range(len(basis)):
            if t == i or t == j:
                continue
            if kernel.mono_div(lcm, basis[t][0]) is None:
                continue
            a, b = (i, t) if i < t else (t, i)
            c, e = (j, t) if j < t else (t, j)
            if (a, b) not in pending and (c, e) not in pending:
                skip = True  # chain criterion
                break
        if skip:
            continue
        qi = kernel.mono_div(lcm, lmi)
        qj = kernel.mono_div(lcm, lmj)
        s = kernel.nd_sub(
            {kernel.mono_mul(m, qi): c for m, c in di.items()},
            {kernel.mono_mul(m, qj): c for m, c in dj.items()},
        )
        if not s:
            continue
        r = reduce_full(s)
        if r:
            add_element(r)

    # The surviving reducers are a minimal basis; tail-reduce to make the
    # result canonical.  Leads are pairwise non-divisible, so reduction
    # never touches a lead and the elements stay monic and nonzero.
    final = []
    for _, lm, tail in reducers:
        d = dict(tail)
        d[lm] = (1, 1)
        final.append((lm, d))
    changed = True
    while changed:
        changed = False
        for i in range(len(final)):
            others = [
                (lm, {m: c for m, c in d.items() if m != lm})
                for j, (lm, d) in enumerate(final)
                if j != i
            ]
            r = kernel.reduce_nd(final[i][1], others, slots, width)
            if r != final[i][1]:
                changed = True
                final[i] = (final[i][0], r)
    polys = [
        Poly._raw(kernel.nd_to_frac(d), registry) for _, d in final
    ]
    polys.sort(key=lambda p: order.key(order.leading(p)[0]))
    return GroebnerBasis(polys, order)


def ideal_equal(gens_a, gens_b, order: MonomialOrder) -> bool:
    """Equality of the generated ideals via equality of reduced bases."""
    return buchberger(gens_a, order).polys == buchberger(gens_b, order).polys


# -- extended computation with cofactor tracking ------------------------


def _cof_reduce(p, rep, basis, order):
    """Fully reduce p tracking its expression over the original input.

    ``basis`` holds (lead, lead_coeff, poly_dict, rep) in rational form.
    Returns the reduced dict and updated rep (list of cofactor dicts).
    """
    slots, width = order.slots, order.width
    work = dict(p)
    out = {}
    rep = [dict(r) for r in rep]
    cache = {}
    heap = []
    for m in work:
        k = kernel.mono_neg_key(m, slots, width)
        cache[m] = k
        heap.append((k, m))
    heapify(heap)
    while heap:
        _, m = heappop(heap)
        c = work.get(m)
        if not c:
            continue
        hit = None
        for lm, lc, d, brep in basis:
            q = kernel.mono_div(m, lm)
            if q is not None:
                hit = (q, lm, lc, d, brep)
                break
        del work[m]
        if hit is None:
            out[m] = c
            continue
        q, lm, lc, d, brep = hit
        factor = c / lc
        for tm, tc in d.items():
            if tm == lm:
                continue  # the lead cancels m exactly
            nm = kernel.mono_mul(tm, q)
            prev = work.get(nm)
            if prev is None:
                v = -factor * tc
                if v:
                    work[nm] = v
                    k = cache.get(nm)
                    if k is None:
                        k = kernel.mono_neg_key(nm, slots, width)
                        cache[nm] = k
                    heappush(heap, (k, nm))
            else:
                v = prev - factor * tc
                if v:
                    work[nm] = v
                else:
                    del work[nm]
        for gi, gr in enumerate(brep):
            if not gr:
                continue
            scaled = kernel.poly_mul_mono(gr, q, -factor)
            rep[gi] = kernel.poly_add(rep[gi], scaled)
    return out, rep


def groebner_with_cofactors(gens, order: MonomialOrder):
    """Groebner basis plus, for each element, cofactors over ``gens``.

    Returns (basis_polys, reps) with basis_polys[k] == sum over i of
    reps[k][i] * gens[i].  Stops early once a nonzero constant enters the
    basis, which is all the unit-certificate path needs.
    """
    slots, width = order.slots, order.width
    registry = order.registry
    n = len(gens)
    basis = []  # (lead, lead_coeff, dict, rep)

    def add(d, rep):
        lm = max(d, key=lambda m: kernel.mono_key(m, slots, width))
        basis.append((lm, d[lm], d, rep))
        return lm

    pairs = []
    pending = set()

    def queue_pairs(k):
        lmk = basis[k][0]
        for i in range(k):
            lmi = basis[i][0]
            if kernel.mono_coprime(lmi, lmk):
                continue
            lcm = kernel.mono_lcm(lmi, lmk)
            heappush(
                pairs,
                (
                    kernel.mono_deg(lcm),
                    kernel.mono_key(lcm, slots, width),
                    i,
                    k,
                ),
            )
            pending.add((i, k))

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        rep = [{} for _ in range(n)]
        rep[i] = {(): Fraction(1)}
        d = dict(g._t)
        r, rrep = _cof_reduce(d, rep, basis, order)
        if r:
            add(r, rrep)
            queue_pairs(len(basis) - 1)
            if len(r) == 1 and () in r:
                return _cof_finish(basis, registry)

    while pairs:
        _, _, i, j = heappop(pairs)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lmi, lci, di, repi = basis[i]
        lmj, lcj, dj, repj = basis[j]
        lcm = kernel.mono_lcm(lmi, lmj)
        qi = kernel.mono_div(lcm, lmi)
        qj = kernel.mono_div(lcm, lmj)
        s = kernel.poly_add(
            kernel.poly_mul_mono(di, qi, Fraction(1) / lci),
            kernel.poly_mul_mono(dj, qj, Fraction(-1) / lcj),
        )
        rep = [
            kernel.poly_add(
                kernel.poly_mul_mono(repi[t], qi, Fraction(1) / lci),
                kernel.poly_mul_mono(repj[t], qj, Fraction(-1) / lcj),
            )
            for t in range(n)
        ]
        if not s:
            continue
        r, rrep = _cof_reduce(s, rep, basis, order)
        if r:
            add(r, rrep)
            queue_pairs(len(basis) - 1)
            if len(r) == 1 and () in r:
                return _cof_finish(basis, registry)

    return _cof_finish(basis, registry)


def _cof_finish(basis, registry):
    polys = []
    reps = []
    for lm, lc, d, rep in basis:
        inv = Fraction(1) / Fraction(lc)
        polys.append(Poly._raw({m: c * inv for m, c in d.items()}, registry))
        reps.append(
            [Poly._raw({m: c * inv for m, c in r.items()}, registry) for r in rep]
        )
    return polys, reps
