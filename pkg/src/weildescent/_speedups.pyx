# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Buchberger kernel; same contract as the pure-Python twin.

Coefficients stay opaque Python objects (exact number-field elements); the
speedup comes from compiling the monomial bookkeeping and reduction loops.
"""

import heapq

from .errors import ResourceLimit

IMPL = "cython"


cdef object _key_fn(order):
    kind, split = order
    if kind == "lex":
        return lambda e: e
    if kind == "grevlex":
        return _grevlex_key
    k = split
    def block_key(e):
        return _grevlex_key(e[:k]) + _grevlex_key(e[k:])
    return block_key


cdef tuple _grevlex_key(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef long total = 0
    out = [0] * (n + 1)
    for i in range(n):
        total += <long> e[i]
        out[n - i] = -(<long> e[i])
    out[0] = total
    return tuple(out)


cdef bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i
    for i in range(len(a)):
        if <long> a[i] > <long> b[i]:
            return False
    return True


cdef tuple _mono_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] - <long> b[i]
    return tuple(out)


cdef tuple _mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] if <long> a[i] > <long> b[i] else b[i]
    return tuple(out)


cdef tuple _mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] + <long> b[i]
    return tuple(out)


cdef inline void _spend(list budget, long amount=1) except *:
    budget[0] -= amount
    if budget[0] < 0:
        raise ResourceLimit("reduction budget exceeded")


cdef dict _make_monic(dict terms, keyf):
    lead = max(terms, key=keyf)
    inv = terms[lead].inverse()
    return {m: c * inv for m, c in terms.items()}


cdef dict _reduce(dict f, list basis, keyf, list budget, bint full=True):
    cdef dict h = dict(f)
    cdef dict remainder = {}
    cdef dict bt
    cdef tuple bm, lead, shift, mm
    while h:
        lead = max(h, key=keyf)
        hit_m = None
        hit_t = None
        for bm, bt in basis:
            if _divides(bm, lead):
                hit_m = bm
                hit_t = bt
                break
        if hit_m is None:
            if not full:
                remainder.update(h)
                return remainder
            remainder[lead] = h.pop(lead)
            continue
        _spend(budget)
        shift = _mono_sub(lead, hit_m)
        c = h[lead]
        for m, cc in (<dict> hit_t).items():
            mm = _mono_mul(shift, <tuple> m)
            cur = h.get(mm)
            prod = c * cc
            nxt = prod.__neg__() if cur is None else cur - prod
            if nxt.is_zero():
                h.pop(mm, None)
            else:
                h[mm] = nxt
    return remainder


def normal_form(f, basis_polys, order, budget):
    """Full remainder of f modulo a (Groebner) basis."""
    keyf = _key_fn(order)
    cdef list basis = []
    for terms in basis_polys:
        if not terms:
            continue
        monic = _make_monic(terms, keyf)
        basis.append((max(monic, key=keyf), monic))
    return _reduce(f, basis, keyf, budget)


def buchberger(gens, order, budget):
    """Reduced, monic Groebner basis of the given generators.

    Degree-ordered pair queue with the product and chain criteria.
    Deterministic: identical inputs produce identical output lists.
    """
    keyf = _key_fn(order)
    cdef list basis = []
    for terms in gens:
        if terms:
            monic = _make_monic(terms, keyf)
            lead = max(monic, key=keyf)
            basis.append((lead, monic))
    basis.sort(key=lambda bt: keyf(bt[0]))

    pending = set()
    heap = []

    def push_pairs(j):
        lj = basis[j][0]
        for i in range(j):
            li = basis[i][0]
            lcm = _mono_lcm(li, lj)
            pending.add((i, j))
            heapq.heappush(heap, (sum(lcm), keyf(lcm), i, j, lcm))

    cdef Py_ssize_t j
    for j in range(len(basis)):
        push_pairs(j)

    cdef Py_ssize_t i, k
    cdef tuple li, lj, lcm, mm
    cdef dict ti, tj, spoly, rem
    cdef bint skip
    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        li, ti = basis[i]
        lj, tj = basis[j]
        if _mono_mul(li, lj) == lcm:
            continue  # product criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(basis[k][0], lcm):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue  # chain criterion
        _spend(budget)
        spoly = {}
        for m, c in ti.items():
            spoly[_mono_mul(_mono_sub(lcm, li), <tuple> m)] = c
        for m, c in tj.items():
            mm = _mono_mul(_mono_sub(lcm, lj), <tuple> m)
            cur = spoly.get(mm)
            nxt = -c if cur is None else cur - c
            if nxt.is_zero():
                spoly.pop(mm, None)
            else:
                spoly[mm] = nxt
        rem = _reduce(spoly, basis, keyf, budget)
        if rem:
            monic = _make_monic(rem, keyf)
            basis.append((max(monic, key=keyf), monic))
            push_pairs(len(basis) - 1)

    return _interreduce(basis, keyf, budget)


cdef list _interreduce(list basis, keyf, list budget):
    cdef Py_ssize_t idx, jdx
    basis = sorted(basis, key=lambda bt: keyf(bt[0]))
    kept = []
    for idx in range(len(basis)):
        lead = basis[idx][0]
        redundant = False
        for jdx in range(len(basis)):
            if jdx == idx:
                continue
            l2 = basis[jdx][0]
            if _divides(l2, lead) and (l2 != lead or jdx < idx):
                redundant = True
                break
        if not redundant:
            kept.append(basis[idx])
    out = []
    for idx in range(len(kept)):
        others = [kept[jdx] for jdx in range(len(kept)) if jdx != idx]
        rem = _reduce(kept[idx][1], others, keyf, budget)
        if rem:
            out.append(_make_monic(rem, keyf))
    out.sort(key=lambda t: keyf(max(t, key=keyf)))
    return out
