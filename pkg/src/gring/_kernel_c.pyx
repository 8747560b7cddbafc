# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``: identical algorithms, typed loops.

Both kernels must produce bit-identical results; ``gring.kernel`` picks
this one when it is importable and tests cross-check the two.
"""

from heapq import heapify, heappop, heappush
from math import gcd

IMPLEMENTATION = "cython"


cpdef tuple mono_mul(tuple a, tuple b):
    if not a:
        return b
    if not b:
        return a
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef list out = []
    cdef tuple pa, pb
    while i < la and j < lb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        if pa[0] == pb[0]:
            out.append((pa[0], pa[1] + pb[1]))
            i += 1
            j += 1
        elif pa[0] < pb[0]:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef mono_div(tuple a, tuple b):
    """a/b as a monomial, or None when b does not divide a."""
    if not b:
        return a
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef list out = []
    cdef tuple pa, pb
    while j < lb:
        if i >= la:
            return None
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        if pa[0] < pb[0]:
            out.append(pa)
            i += 1
        elif pa[0] > pb[0]:
            return None
        else:
            if pa[1] < pb[1]:
                return None
            if pa[1] > pb[1]:
                out.append((pa[0], pa[1] - pb[1]))
            i += 1
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef list out = []
    cdef tuple pa, pb
    while i < la and j < lb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        if pa[0] == pb[0]:
            out.append(pa if pa[1] >= pb[1] else pb)
            i += 1
            j += 1
        elif pa[0] < pb[0]:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef tuple pa, pb
    while i < la and j < lb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        if pa[0] == pb[0]:
            return False
        if pa[0] < pb[0]:
            i += 1
        else:
            j += 1
    return True


cpdef mono_deg(tuple a):
    cdef Py_ssize_t i
    d = 0
    for i in range(len(a)):
        d += (<tuple>a[i])[1]
    return d


cpdef tuple mono_key(tuple m, dict slots, Py_ssize_t width):
    cdef list k = [0] * width
    cdef tuple pair, slot
    cdef Py_ssize_t i
    for i in range(len(m)):
        pair = <tuple>m[i]
        slot = <tuple>slots[pair[0]]
        k[<Py_ssize_t>slot[0]] = k[<Py_ssize_t>slot[0]] + pair[1]
        k[<Py_ssize_t>slot[1]] = -pair[1]
    return tuple(k)


cpdef tuple mono_neg_key(tuple m, dict slots, Py_ssize_t width):
    cdef list k = [0] * width
    cdef tuple pair, slot
    cdef Py_ssize_t i
    for i in range(len(m)):
        pair = <tuple>m[i]
        slot = <tuple>slots[pair[0]]
        k[<Py_ssize_t>slot[0]] = k[<Py_ssize_t>slot[0]] - pair[1]
        k[<Py_ssize_t>slot[1]] = pair[1]
    return tuple(k)


cpdef dict poly_add(dict p, dict q):
    cdef dict out = dict(p)
    for m, c in q.items():
        prev = out.get(m)
        if prev is None:
            out[m] = c
        else:
            s = prev + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


cpdef dict poly_mul(dict p, dict q):
    if len(p) > len(q):
        p, q = q, p
    cdef dict out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            nm = mono_mul(<tuple>m1, <tuple>m2)
            prev = out.get(nm)
            if prev is None:
                out[nm] = c1 * c2
            else:
                s = prev + c1 * c2
                if s:
                    out[nm] = s
                else:
                    del out[nm]
    return out


cpdef dict poly_scale(dict p, c):
    if not c:
        return {}
    cdef dict out = {}
    for m, v in p.items():
        out[m] = v * c
    return out


cpdef dict poly_mul_mono(dict p, tuple mono, coeff):
    cdef dict out = {}
    for m, v in p.items():
        out[mono_mul(<tuple>m, mono)] = v * coeff
    return out


def nd_from_frac(dict p):
    """Fraction-coefficient dict -> normalized (num, den) pair dict."""
    cdef dict out = {}
    for m, c in p.items():
        out[m] = (c.numerator, c.denominator)
    return out


def nd_to_frac(dict p):
    from fractions import Fraction
    cdef dict out = {}
    for m, nd in p.items():
        out[m] = Fraction((<tuple>nd)[0], (<tuple>nd)[1])
    return out


cpdef dict nd_monic(dict p, tuple lead_mono):
    """Divide through by the coefficient of ``lead_mono``; den stays > 0."""
    cdef tuple lead = <tuple>p[lead_mono]
    ln = lead[0]
    ld = lead[1]
    if ln == 1 and ld == 1:
        return p
    cdef dict out = {}
    cdef tuple nd
    for m, v in p.items():
        nd = <tuple>v
        n = nd[0]
        d = nd[1]
        g1 = gcd(n, ln)
        g2 = gcd(ld, d)
        num = (n // g1) * (ld // g2)
        den = (d // g2) * (ln // g1)
        if den < 0:
            num = -num
            den = -den
        out[m] = (num, den)
    return out


cpdef dict nd_sub(dict p, dict q):
    """p - q on (num, den) pair dicts."""
    cdef dict out = dict(p)
    cdef tuple nd, pv
    for m, v in q.items():
        nd = <tuple>v
        bn = nd[0]
        bd = nd[1]
        prev = out.get(m)
        if prev is None:
            out[m] = (-bn, bd)
            continue
        pv = <tuple>prev
        an = pv[0]
        ad = pv[1]
        g = gcd(ad, bd)
        num = an * (bd // g) - bn * (ad // g)
        if num == 0:
            del out[m]
            continue
        den = ad * (bd // g)
        g2 = gcd(num, den)
        if g2 > 1:
            num //= g2
            den //= g2
        out[m] = (num, den)
    return out


cpdef dict reduce_nd(dict p, list reducers, dict slots, Py_ssize_t width):
    """Full normal form over normalized (num, den) integer pairs.

    Monic reducers sorted by ascending lead; the first divisor in list
    order wins.  A divisor's lead never exceeds the term it divides, so
    the scan stops at the first reducer ordered above the current term.
    """
    cdef dict work = dict(p)
    cdef dict out = {}
    if not work:
        return out
    cdef list red_neg_keys = [
        mono_neg_key(<tuple>(<tuple>r)[0], slots, width) for r in reducers
    ]
    cdef dict cache = {}
    cdef list heap = []
    cdef tuple m, nm, nk, item, cpair, tpair
    cdef Py_ssize_t ri, nred = len(reducers)
    cdef dict tail
    cdef tuple red
    for m in work:
        k = mono_neg_key(m, slots, width)
        cache[m] = k
        heap.append((k, m))
    heapify(heap)
    while heap:
        item = <tuple>heappop(heap)
        nk = <tuple>item[0]
        m = <tuple>item[1]
        c = work.get(m)
        if c is None:
            continue
        quotient = None
        tail = None
        for ri in range(nred):
            if <tuple>red_neg_keys[ri] < nk:
                break  # this and all later leads are bigger than m
            red = <tuple>reducers[ri]
            q = mono_div(m, <tuple>red[0])
            if q is not None:
                quotient = q
                tail = <dict>red[1]
                break
        del work[m]
        if quotient is None:
            out[m] = c
            continue
        cpair = <tuple>c
        cn = cpair[0]
        cd = cpair[1]
        for tm, tc in tail.items():
            nm = mono_mul(<tuple>tm, <tuple>quotient)
            tpair = <tuple>tc
            tn = tpair[0]
            td = tpair[1]
            g1 = gcd(cn, td)
            g2 = gcd(tn, cd)
            dn = (cn // g1) * (tn // g2)  # delta = c*t; subtracted below
            dd = (cd // g2) * (td // g1)
            prev = work.get(nm)
            if prev is None:
                work[nm] = (-dn, dd)
                k = cache.get(nm)
                if k is None:
                    k = mono_neg_key(nm, slots, width)
                    cache[nm] = k
                heappush(heap, (k, nm))
            else:
                tpair = <tuple>prev
                pn = tpair[0]
                pd = tpair[1]
                g = gcd(pd, dd)
                num = pn * (dd // g) - dn * (pd // g)
                if num == 0:
                    del work[nm]
                    continue
                den = pd * (dd // g)
                g2 = gcd(num, den)
                if g2 > 1:
                    num //= g2
                    den //= g2
                work[nm] = (num, den)
    return out
