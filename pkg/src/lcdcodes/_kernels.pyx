# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops over encoded field elements.

Elements are int64 codes in [0, q); arithmetic goes through the exp/log/Zech
tables of the owning FieldSpec. Signatures mirror ``_pure``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef struct FT:
    const int64_t* exp
    const int64_t* log
    const int64_t* zech
    const int64_t* addtab
    int64_t p
    int64_t q
    int64_t qm1
    int64_t half
    bint prime


cdef inline int64_t f_add(const FT* t, int64_t a, int64_t b) nogil:
    cdef int64_t la, n, z
    if t.prime:
        a += b
        return a - t.p if a >= t.p else a
    if t.addtab != NULL:
        return t.addtab[a * t.q + b]
    if a == 0:
        return b
    if b == 0:
        return a
    la = t.log[a]
    n = t.log[b] - la
    if n < 0:
        n += t.qm1
    z = t.zech[n]
    if z < 0:
        return 0
    return t.exp[la + z]


cdef inline int64_t f_neg(const FT* t, int64_t a) nogil:
    if a == 0:
        return 0
    if t.prime:
        return t.p - a
    if t.p == 2:
        return a
    return t.exp[t.log[a] + t.half]


cdef inline int64_t f_mul(const FT* t, int64_t a, int64_t b) nogil:
    if a == 0 or b == 0:
        return 0
    if t.prime:
        return (a * b) % t.p
    return t.exp[t.log[a] + t.log[b]]


cdef inline int64_t f_inv(const FT* t, int64_t a) nogil:
    cdef int64_t e = t.qm1 - t.log[a]
    if e == t.qm1:
        e = 0
    return t.exp[e]


cdef class _Tables:
    cdef FT ft
    cdef object keep

    def __init__(self, F, with_add=False):
        exp = np.ascontiguousarray(F.exp_np, dtype=np.int64)
        log = np.ascontiguousarray(F.log_np, dtype=np.int64)
        zech = np.ascontiguousarray(F.zech_np, dtype=np.int64)
        addtab = None
        if with_add and F.m > 1 and F.q <= 1024:
            addtab = np.ascontiguousarray(F.add_table(), dtype=np.int64)
        self.keep = (exp, log, zech, addtab)
        cdef int64_t[::1] e = exp
        cdef int64_t[::1] l = log
        cdef int64_t[::1] z = zech
        cdef int64_t[::1] ad
        self.ft.exp = &e[0]
        self.ft.log = &l[0]
        self.ft.zech = &z[0]
        self.ft.addtab = NULL
        if addtab is not None:
            ad = addtab
            self.ft.addtab = &ad[0]
        self.ft.p = F.p
        self.ft.q = F.q
        self.ft.qm1 = F.q - 1
        self.ft.half = (F.q - 1) // 2 if F.p != 2 else 0
        self.ft.prime = F.m == 1


_cache = {}


cdef _Tables _tables(F, bint with_add=False):
    key = (F, with_add)
    t = _cache.get(key)
    if t is None:
        t = _Tables(F, with_add)
        _cache[key] = t
    return t


def rref(A, F):
    """Reduced row echelon form; returns (R, pivot_cols)."""
    cdef _Tables tb = _tables(F)
    cdef const FT* t = &tb.ft
    R = np.array(A, dtype=np.int64, order="C", copy=True)
    cdef int64_t[:, ::1] M = R
    cdef Py_ssize_t rows = M.shape[0], cols = M.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, piv
    cdef int64_t tmp, s, f
    pivots = []
    for col in range(cols):
        if row == rows:
            break
        piv = -1
        for i in range(row, rows):
            if M[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(cols):
                tmp = M[row, j]
                M[row, j] = M[piv, j]
                M[piv, j] = tmp
        s = f_inv(t, M[row, col])
        if s != 1:
            for j in range(col, cols):
                M[row, j] = f_mul(t, M[row, j], s)
        for i in range(rows):
            if i != row and M[i, col] != 0:
                f = f_neg(t, M[i, col])
                for j in range(col, cols):
                    if M[row, j] != 0:
                        M[i, j] = f_add(t, M[i, j], f_mul(t, f, M[row, j]))
        pivots.append(col)
        row += 1
    return R, pivots


def det(A, F):
    cdef _Tables tb = _tables(F)
    cdef const FT* t = &tb.ft
    W = np.array(A, dtype=np.int64, order="C", copy=True)
    cdef int64_t[:, ::1] M = W
    cdef Py_ssize_t n = M.shape[0], col, i, j, piv
    cdef int64_t d = 1, tmp, s, f
    for col in range(n):
        piv = -1
        for i in range(col, n):
            if M[i, col] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != col:
            for j in range(col, n):
                tmp = M[col, j]
                M[col, j] = M[piv, j]
                M[piv, j] = tmp
            d = f_neg(t, d)
        d = f_mul(t, d, M[col, col])
        s = f_inv(t, M[col, col])
        for i in range(col + 1, n):
            if M[i, col] != 0:
                f = f_neg(t, f_mul(t, M[i, col], s))
                for j in range(col, n):
                    if M[col, j] != 0:
                        M[i, j] = f_add(t, M[i, j], f_mul(t, f, M[col, j]))
    return int(d)


def matmul(A, B, F):
    cdef _Tables tb = _tables(F)
    cdef const FT* t = &tb.ft
    cdef const int64_t[:, ::1] X = np.ascontiguousarray(A, dtype=np.int64)
    cdef const int64_t[:, ::1] Y = np.ascontiguousarray(B, dtype=np.int64)
    cdef Py_ssize_t r = X.shape[0], inner = X.shape[1], c = Y.shape[1], i, j, l
    out = np.zeros((r, c), dtype=np.int64)
    cdef int64_t[:, ::1] Z = out
    cdef int64_t acc, x
    for i in range(r):
        for l in range(inner):
            x = X[i, l]
            if x == 0:
                continue
            for j in range(c):
                if Y[l, j] != 0:
                    Z[i, j] = f_add(t, Z[i, j], f_mul(t, x, Y[l, j]))
    return out


def min_weight(G, F, long stop_at=1):
    """Minimum nonzero weight of the row space of full-rank G.

    One message per projective class (first nonzero coordinate = 1); the
    free tail is walked in modular q-ary Gray order so each step adds a
    single precomputed row difference. Returns (weight, classes_visited).
    """
    cdef _Tables tb = _tables(F, True)
    cdef const FT* t = &tb.ft
    cdef const int64_t[:, ::1] Gm = np.ascontiguousarray(G, dtype=np.int64)
    cdef Py_ssize_t k = Gm.shape[0], n = Gm.shape[1]
    cdef int64_t q = t.q
    cdef Py_ssize_t r, v, j, lead, i, free
    # D[r, v, :] = (elem(v+1 mod q) - elem(v)) * G[r, :]
    Darr = np.zeros((k, q, n), dtype=np.int64)
    cdef int64_t[:, :, ::1] D = Darr
    cdef int64_t delta
    for r in range(k):
        for v in range(q):
            delta = f_add(t, (v + 1) % q, f_neg(t, v))
            for j in range(n):
                D[r, v, j] = f_mul(t, delta, Gm[r, j])
    cw_arr = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] cw = cw_arr
    dig_arr = np.zeros(k, dtype=np.int64)
    cnt_arr = np.zeros(k + 1, dtype=np.int64)
    cdef int64_t[::1] dig = dig_arr
    cdef int64_t[::1] cnt = cnt_arr
    cdef long best = n + 1, w
    cdef long long visited = 0
    cdef int64_t c
    cdef const int64_t* drow
    cdef int64_t* cwp = &cw[0]
    with nogil:
        for lead in range(k):
            free = k - 1 - lead
            w = 0
            for j in range(n):
                cw[j] = Gm[lead, j]
                if cw[j] != 0:
                    w += 1
            visited += 1
            if w < best:
                best = w
            if best <= stop_at:
                break
            for i in range(free + 1):
                dig[i] = 0
                cnt[i] = 0
            while True:
                # odometer over base-q counter; the carried-to slot is the Gray digit
                i = 0
                cnt[0] += 1
                while i < free and cnt[i] == q:
                    cnt[i] = 0
                    i += 1
                    cnt[i] += 1
                if i == free:
                    break
                r = lead + 1 + i
                v = dig[i]
                drow = &D[r, v, 0]
                w = 0
                if t.addtab != NULL:
                    for j in range(n):
                        c = t.addtab[cwp[j] * q + drow[j]]
                        cwp[j] = c
                        w += c != 0
                else:
                    for j in range(n):
                        c = f_add(t, cwp[j], drow[j])
                        cwp[j] = c
                        w += c != 0
                dig[i] = v + 1 if v + 1 < q else 0
                visited += 1
                if w < best:
                    best = w
                    if best <= stop_at:
                        break
            if best <= stop_at:
                break
    return int(best), int(visited)
