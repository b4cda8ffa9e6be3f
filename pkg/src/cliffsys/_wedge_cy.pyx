# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _wedge_py: wedge accumulation over bitmask monomials.

Masks must fit in 64 bits and coefficients in 31 bits; anything larger
raises and the caller falls back to the pure-Python kernel.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libc.stdint cimport uint64_t, int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

DEF COEFF_BITS = 31
cdef int64_t COEFF_LIMIT = (<int64_t>1) << COEFF_BITS
cdef int64_t ACC_LIMIT = (<int64_t>1) << 62


cdef inline bint _merge_sign_neg(uint64_t ma, uint64_t mb) nogil:
    cdef int s = 0
    cdef uint64_t t = mb
    cdef uint64_t low
    cdef int idx
    while t:
        low = t & (~t + 1)
        idx = __builtin_popcountll(low - 1)
        s ^= __builtin_popcountll(ma >> (idx + 1)) & 1
        t ^= low
    return s != 0


def merge_sign(ma, mb):
    cdef uint64_t a = ma
    cdef uint64_t b = mb
    return -1 if _merge_sign_neg(a, b) else 1


cdef int _load(list terms, vector[uint64_t]* masks, vector[int64_t]* coeffs) except -1:
    cdef uint64_t m
    cdef int64_t v
    for mask_obj, coeff_obj in terms:
        m = mask_obj
        v = coeff_obj
        if v >= COEFF_LIMIT or v <= -COEFF_LIMIT:
            raise OverflowError("coefficient out of compiled-kernel range")
        masks.push_back(m)
        coeffs.push_back(v)
    return 0


cdef class Accumulator:
    """Mutable term accumulator shared across many wedge operations."""

    cdef unordered_map[uint64_t, int64_t] acc

    def add_product(self, list ta, list tb):
        cdef vector[uint64_t] ma_v, mb_v
        cdef vector[int64_t] ca_v, cb_v
        _load(ta, &ma_v, &ca_v)
        _load(tb, &mb_v, &cb_v)
        cdef size_t i, j, na = ma_v.size(), nb = mb_v.size()
        cdef uint64_t ma, mb
        cdef int64_t ca, v, updated
        cdef bint overflow = False
        with nogil:
            for i in range(na):
                ma = ma_v[i]
                ca = ca_v[i]
                for j in range(nb):
                    mb = mb_v[j]
                    if ma & mb:
                        continue
                    v = ca * cb_v[j]
                    if _merge_sign_neg(ma, mb):
                        v = -v
                    updated = self.acc[ma | mb] + v
                    if updated >= ACC_LIMIT or updated <= -ACC_LIMIT:
                        overflow = True
                        break
                    self.acc[ma | mb] = updated
                if overflow:
                    break
        if overflow:
            raise OverflowError("accumulator out of compiled-kernel range")

    def add_square(self, list ta):
        cdef vector[uint64_t] ma_v
        cdef vector[int64_t] ca_v
        _load(ta, &ma_v, &ca_v)
        cdef size_t i, j, n = ma_v.size()
        cdef uint64_t ma, mb
        cdef int64_t ca2, v, updated
        cdef bint overflow = False
        with nogil:
            for i in range(n):
                ma = ma_v[i]
                ca2 = 2 * ca_v[i]
                for j in range(i + 1, n):
                    mb = ma_v[j]
                    if ma & mb:
                        continue
                    v = ca2 * ca_v[j]
                    if _merge_sign_neg(ma, mb):
                        v = -v
                    updated = self.acc[ma | mb] + v
                    if updated >= ACC_LIMIT or updated <= -ACC_LIMIT:
                        overflow = True
                        break
                    self.acc[ma | mb] = updated
                if overflow:
                    break
        if overflow:
            raise OverflowError("accumulator out of compiled-kernel range")

    def add_terms(self, list pairs):
        cdef vector[uint64_t] m_v
        cdef vector[int64_t] c_v
        _load(pairs, &m_v, &c_v)
        cdef size_t i
        cdef int64_t updated
        for i in range(m_v.size()):
            updated = self.acc[m_v[i]] + c_v[i]
            if updated >= ACC_LIMIT or updated <= -ACC_LIMIT:
                raise OverflowError("accumulator out of compiled-kernel range")
            self.acc[m_v[i]] = updated

    def items(self):
        out = []
        cdef unordered_map[uint64_t, int64_t].iterator it = self.acc.begin()
        while it != self.acc.end():
            if deref(it).second != 0:
                out.append((deref(it).first, deref(it).second))
            inc(it)
        return out


def wedge_terms(list ta, list tb):
    """Accumulated product terms of two term lists [(mask, coeff), ...]."""
    acc = Accumulator()
    acc.add_product(ta, tb)
    return acc.items()


def square_terms(list ta):
    """Terms of t ^ t for an even-degree term list (cross terms doubled)."""
    acc = Accumulator()
    acc.add_square(ta)
    return acc.items()


def signed_perm_action(list terms, perm, signs):
    """Derivation action: replace letter i by perm[i] with factor -signs[i]."""
    cdef vector[uint64_t] m_v
    cdef vector[int64_t] c_v
    _load(terms, &m_v, &c_v)
    cdef int n = len(perm)
    if n > 64:
        raise OverflowError("order out of compiled-kernel range")
    cdef vector[int] p_v, s_v
    for i_obj in perm:
        p_v.push_back(i_obj)
    for s_obj in signs:
        s_v.push_back(s_obj)
    cdef unordered_map[uint64_t, int64_t] acc
    cdef size_t idx
    cdef uint64_t mask, m, low, without, jbit, between, key
    cdef int64_t c, factor, updated
    cdef int i, j, lo, hi
    cdef bint overflow = False
    with nogil:
        for idx in range(m_v.size()):
            mask = m_v[idx]
            c = c_v[idx]
            m = mask
            while m:
                low = m & (~m + 1)
                m ^= low
                i = __builtin_popcountll(low - 1)
                j = p_v[i]
                factor = -s_v[i]
                if j == i:
                    key = mask
                else:
                    without = mask ^ low
                    jbit = (<uint64_t>1) << j
                    if without & jbit:
                        continue
                    if i < j:
                        lo = i
                        hi = j
                    else:
                        lo = j
                        hi = i
                    between = (((<uint64_t>1) << hi) - 1) ^ (((<uint64_t>1) << (lo + 1)) - 1)
                    if __builtin_popcountll(without & between) & 1:
                        factor = -factor
                    key = without | jbit
                updated = acc[key] + c * factor
                if updated >= ACC_LIMIT or updated <= -ACC_LIMIT:
                    overflow = True
                    break
                acc[key] = updated
            if overflow:
                break
    if overflow:
        raise OverflowError("accumulator out of compiled-kernel range")
    out = []
    cdef unordered_map[uint64_t, int64_t].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out.append((deref(it).first, deref(it).second))
        inc(it)
    return out
