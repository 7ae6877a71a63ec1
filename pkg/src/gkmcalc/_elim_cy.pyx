# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer row reduction core.

Line-for-line twin of gkmcalc._elim_py: the same fraction-free
Gauss-Jordan with gcd normalization over arbitrary-precision Python
integers.  Entries stay Python ints (exactness over speed), so the win
comes from typed loop indexing and the removal of interpreter dispatch
in the inner row updates.  Output is bit-identical to the pure core.
"""

from math import gcd

BACKEND_NAME = "compiled"


cdef void _primitive(list row, Py_ssize_t start):
    cdef Py_ssize_t j, n = len(row)
    g = 0
    for j in range(start, n):
        v = row[j]
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for j in range(start, n):
            row[j] = row[j] // g


def reduce_int_rows(rows, Py_ssize_t ncols, bint rank_only=False):
    """Integer-normalized reduced row echelon form (see _elim_py)."""
    cdef list work = []
    cdef list row, prow
    cdef Py_ssize_t i, j, c, r, k, nrows, best, start
    cdef Py_ssize_t npiv
    for row_obj in rows:
        row = <list> row_obj if isinstance(row_obj, list) else list(row_obj)
        for j in range(ncols):
            if row[j]:
                work.append(row)
                break
    for i in range(len(work)):
        row = work[i]
        _primitive(row, 0)
        for j in range(ncols):
            v = row[j]
            if v:
                if v < 0:
                    for k in range(j, ncols):
                        row[k] = -row[k]
                break
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            row = work[i]
            v = row[c]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != r:
            work[r], work[best] = work[best], work[r]
        prow = work[r]
        if prow[c] < 0:
            for j in range(c, ncols):
                prow[j] = -prow[j]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = work[i]
            f = row[c]
            if not f:
                continue
            if piv == 1:
                for j in range(c, ncols):
                    row[j] = row[j] - f * prow[j]
            else:
                for j in range(c, ncols):
                    row[j] = piv * row[j] - f * prow[j]
            _primitive(row, c + 1)
            row[c] = 0
        pivots.append(c)
        r += 1
    del work[r:]
    if rank_only:
        return work, pivots
    npiv = len(pivots)
    for k in range(npiv - 1, 0, -1):
        prow = work[k]
        c = pivots[k]
        piv = prow[c]
        for i in range(k):
            row = work[i]
            f = row[c]
            if not f:
                continue
            start = pivots[i]
            if piv == 1:
                for j in range(c, ncols):
                    row[j] = row[j] - f * prow[j]
            else:
                for j in range(start, c):
                    row[j] = piv * row[j]
                for j in range(c, ncols):
                    row[j] = piv * row[j] - f * prow[j]
            _primitive(row, start)
            row[c] = 0
    return work, pivots
