"""The compiled kernel must agree with the pure-Python twin exactly."""

import random
from fractions import Fraction

import pytest

from gring import _kernel_py

try:
    from gring import _kernel_c
except ImportError:
    _kernel_c = None

needs_ext = pytest.mark.skipif(
    _kernel_c is None, reason="compiled kernel not built"
)


def _rand_mono(rng, nvars=4, max_exp=4):
    vids = sorted(rng.sample(range(nvars), rng.randint(0, nvars)))
    return tuple((v, rng.randint(1, max_exp)) for v in vids)


def _rand_frac_poly(rng, terms=6):
    return {
        _rand_mono(rng): Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5))
        for _ in range(terms)
    }


SLOTS = {v: (0, 1 + (3 - v)) for v in range(4)}  # one degrevlex block
WIDTH = 5


@needs_ext
def test_mono_ops_agree():
    rng = random.Random(5)
    for _ in range(300):
        a, b = _rand_mono(rng), _rand_mono(rng)
        assert _kernel_c.mono_mul(a, b) == _kernel_py.mono_mul(a, b)
        assert _kernel_c.mono_div(a, b) == _kernel_py.mono_div(a, b)
        assert _kernel_c.mono_lcm(a, b) == _kernel_py.mono_lcm(a, b)
        assert _kernel_c.mono_coprime(a, b) == _kernel_py.mono_coprime(a, b)
        assert _kernel_c.mono_deg(a) == _kernel_py.mono_deg(a)
        assert _kernel_c.mono_key(a, SLOTS, WIDTH) == _kernel_py.mono_key(
            a, SLOTS, WIDTH
        )
        assert _kernel_c.mono_neg_key(a, SLOTS, WIDTH) == _kernel_py.mono_neg_key(
            a, SLOTS, WIDTH
        )


@needs_ext
def test_poly_ops_agree():
    rng = random.Random(6)
    for _ in range(100):
        p, q = _rand_frac_poly(rng), _rand_frac_poly(rng)
        assert _kernel_c.poly_add(p, q) == _kernel_py.poly_add(p, q)
        assert _kernel_c.poly_mul(p, q) == _kernel_py.poly_mul(p, q)
        mono = _rand_mono(rng)
        c = Fraction(3, 7)
        assert _kernel_c.poly_mul_mono(p, mono, c) == _kernel_py.poly_mul_mono(
            p, mono, c
        )


def _mk_reducers_nd(rng, k=3):
    reds = []
    for _ in range(k):
        p = _rand_frac_poly(rng, terms=4)
        if not p:
            continue
        lm = max(p, key=lambda m: _kernel_py.mono_key(m, SLOTS, WIDTH))
        lc = p.pop(lm)
        tail = {m: (q.numerator, q.denominator) for m, q in
                ((m, c / lc) for m, c in p.items())}
        reds.append((lm, tail))
    # the reduction loops expect ascending leads
    reds.sort(key=lambda r: _kernel_py.mono_key(r[0], SLOTS, WIDTH))
    return reds


@needs_ext
def test_nd_helpers_agree():
    rng = random.Random(12)
    for _ in range(80):
        p = _rand_frac_poly(rng, terms=6)
        q = _rand_frac_poly(rng, terms=6)
        pn = _kernel_py.nd_from_frac(p)
        assert _kernel_c.nd_from_frac(p) == pn
        assert _kernel_c.nd_to_frac(pn) == _kernel_py.nd_to_frac(pn) == p
        qn = _kernel_py.nd_from_frac(q)
        assert _kernel_c.nd_sub(pn, qn) == _kernel_py.nd_sub(pn, qn)
        if pn:
            lm = max(pn, key=lambda m: _kernel_py.mono_key(m, SLOTS, WIDTH))
            assert _kernel_c.nd_monic(pn, lm) == _kernel_py.nd_monic(pn, lm)


@needs_ext
def test_reduce_nd_agrees():
    rng = random.Random(7)
    for _ in range(60):
        reds = _mk_reducers_nd(rng)
        p = _kernel_py.nd_from_frac(_rand_frac_poly(rng, terms=8))
        a = _kernel_c.reduce_nd(p, reds, SLOTS, WIDTH)
        b = _kernel_py.reduce_nd(p, reds, SLOTS, WIDTH)
        assert a == b


@needs_ext
def test_backend_reports_cython_when_available(monkeypatch):
    import gring.kernel as k

    assert k.backend() in ("cython", "python")
