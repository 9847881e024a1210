# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def local_codes(table, inverse, int nvars, word_start, word_var, word_exp,
                vgen_start, lookup, lookup_start, mult, int identity=0):
    cdef int[:, ::1] tab = np.ascontiguousarray(table, dtype=np.int32)
    cdef int[::1] inv = np.ascontiguousarray(inverse, dtype=np.int32)
    cdef long long[::1] ws = np.ascontiguousarray(word_start, dtype=np.int64)
    cdef int[::1] wv = np.ascontiguousarray(word_var, dtype=np.int32)
    cdef int[::1] we = np.ascontiguousarray(word_exp, dtype=np.int32)
    cdef long long[::1] vs = np.ascontiguousarray(vgen_start, dtype=np.int64)
    cdef int[::1] lk = np.ascontiguousarray(lookup, dtype=np.int32)
    cdef long long[::1] ls = np.ascontiguousarray(lookup_start, dtype=np.int64)
    cdef long long[::1] mu = np.ascontiguousarray(mult, dtype=np.int64)
    cdef int n = tab.shape[0]
    cdef int nvert = vs.shape[0] - 1
    cdef long long total = 1
    cdef int j
    for j in range(nvars):
        total *= n
    out_arr = np.zeros(total, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef int[::1] digits = np.zeros(max(nvars, 1), dtype=np.int32)
    cdef long long t, code, scale, res
    cdef long long w, p
    cdef int v, acc, g
    for t in range(total):
        res = 0
        for v in range(nvert):
            code = 0
            scale = 1
            for w in range(vs[v], vs[v + 1]):
                acc = identity
                for p in range(ws[w], ws[w + 1]):
                    g = digits[wv[p]]
                    if we[p] < 0:
                        g = inv[g]
                    acc = tab[acc, g]
                code += acc * scale
                scale *= n
            res += lk[ls[v] + code] * mu[v]
        out[t] = res
        # odometer increment
        for j in range(nvars):
            digits[j] += 1
            if digits[j] < n:
                break
            digits[j] = 0
    return out_arr


def conj_canon(table, inverse, tuples, var_comp, int ncomp):
    cdef int[:, ::1] tab = np.ascontiguousarray(table, dtype=np.int32)
    cdef int[::1] inv = np.ascontiguousarray(inverse, dtype=np.int32)
    src = np.ascontiguousarray(tuples, dtype=np.int64)
    cdef long long[:, ::1] tup = src
    cdef int[::1] comp = np.ascontiguousarray(var_comp, dtype=np.int32)
    cdef int m = tup.shape[0]
    cdef int k = tup.shape[1]
    cdef int n = tab.shape[0]
    best_arr = src.copy()
    cdef long long[:, ::1] best = best_arr
    stab_arr = np.ones(m, dtype=np.int64)
    cdef long long[::1] stab = stab_arr
    cdef long long[::1] cand = np.zeros(max(k, 1), dtype=np.int64)
    cdef int i, c, h, j, has, equal, cmp
    cdef long long count
    for i in range(m):
        for c in range(ncomp):
            has = 0
            count = 0
            for h in range(n):
                equal = 1
                cmp = 0
                for j in range(k):
                    if comp[j] != c:
                        continue
                    has = 1
                    cand[j] = tab[tab[h, tup[i, j]], inv[h]]
                    if cand[j] != tup[i, j]:
                        equal = 0
                    if cmp == 0:
                        if cand[j] < best[i, j]:
                            cmp = -1
                        elif cand[j] > best[i, j]:
                            cmp = 1
                count += equal
                if cmp < 0:
                    for j in range(k):
                        if comp[j] == c:
                            best[i, j] = cand[j]
            stab[i] *= count if has else n
    return best_arr, stab_arr
