"""Reference implementation of the enumeration kernels (numpy, no compilation).

Both functions work on group elements encoded as ``0..n-1`` with a
multiplication table.  A *word* is a product of variables or their inverses;
words are stored in CSR form (``word_start``, ``word_var``, ``word_exp``).
"""
from __future__ import annotations

import numpy as np


def local_codes(table, inverse, nvars, word_start, word_var, word_exp,
                vgen_start, lookup, lookup_start, mult, identity=0):
    """Mixed-radix code of the local invariants for every tuple in ``G^nvars``.

    Tuple ``t`` assigns variable ``j`` the element ``(t // n**j) % n``.  For
    vertex ``v`` the words ``vgen_start[v]:vgen_start[v+1]`` give its link
    holonomies; their base-``n`` code indexes ``lookup`` (offset
    ``lookup_start[v]``) to get a class index, weighted by ``mult[v]``.
    """
    table = np.asarray(table)
    inverse = np.asarray(inverse)
    n = table.shape[0]
    total = n ** nvars
    idx = np.arange(total, dtype=np.int64)
    digits = [(idx // n ** j) % n for j in range(nvars)]
    out = np.zeros(total, dtype=np.int64)
    for v in range(len(vgen_start) - 1):
        code = np.zeros(total, dtype=np.int64)
        scale = 1
        for w in range(vgen_start[v], vgen_start[v + 1]):
            acc = np.full(total, identity, dtype=np.int64)
            for p in range(word_start[w], word_start[w + 1]):
                g = digits[word_var[p]]
                if word_exp[p] < 0:
                    g = inverse[g]
                acc = table[acc, g]
            code += acc * scale
            scale *= n
        out += np.asarray(lookup)[lookup_start[v] + code] * mult[v]
    return out


def conj_canon(table, inverse, tuples, var_comp, ncomp):
    """Least conjugate of each tuple, one conjugator per component, and stabilizer orders."""
    table = np.asarray(table)
    inverse = np.asarray(inverse)
    tuples = np.asarray(tuples, dtype=np.int64)
    m, k = tuples.shape
    n = table.shape[0]
    best = tuples.copy()
    stab = np.ones(m, dtype=np.int64)
    for c in range(ncomp):
        cols = [j for j in range(k) if var_comp[j] == c]
        if not cols:
            stab *= n
            continue
        sub = tuples[:, cols]
        count = np.zeros(m, dtype=np.int64)
        cur = sub.copy()
        for h in range(n):
            conj = table[table[h, sub], inverse[h]]
            count += np.all(conj == sub, axis=1)
            # lexicographic minimum, column by column
            less = np.zeros(m, dtype=bool)
            undecided = np.ones(m, dtype=bool)
            for j in range(len(cols)):
                less |= undecided & (conj[:, j] < cur[:, j])
                undecided &= conj[:, j] == cur[:, j]
            cur[less] = conj[less]
        best[:, cols] = cur
        stab *= count
    return best, stab
