# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels over rank-compressed interval endpoints.

Same contracts as ``_kernels_py``; inputs are sequences of Python ints that
fit in a signed 64-bit integer (ranks always do).
"""
from libc.stdlib cimport malloc, free, qsort


cdef int _cmp_ll(const void *a, const void *b) noexcept nogil:
    cdef long long x = (<long long *>a)[0]
    cdef long long y = (<long long *>b)[0]
    return (x > y) - (x < y)


cdef long long *_copy_in(seq, Py_ssize_t n) except NULL:
    cdef long long *buf = <long long *>malloc((n if n > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def max_overlap(lo, hi):
    cdef Py_ssize_t n = len(lo), i
    cdef long long *ev = <long long *>malloc((2 * n + 1) * sizeof(long long))
    if ev == NULL:
        raise MemoryError()
    cdef long long cur = 0, best = 0
    try:
        for i in range(n):
            ev[2 * i] = 2 * <long long>lo[i]
            ev[2 * i + 1] = 2 * <long long>hi[i] + 1
        with nogil:
            qsort(ev, 2 * n, sizeof(long long), _cmp_ll)
            for i in range(2 * n):
                if ev[i] & 1:
                    cur -= 1
                else:
                    cur += 1
                    if cur > best:
                        best = cur
    finally:
        free(ev)
    return best


def first_conflict(lo, hi, colors):
    cdef Py_ssize_t n = len(lo), i, j, p, k
    order = sorted(range(n), key=lambda t: (colors[t], lo[t]))
    cdef long long *a = _copy_in(lo, n)
    cdef long long *b = NULL
    cdef long long *c = NULL
    cdef long long *idx = NULL
    cdef long long reach = 0
    cdef bint clash = False
    cdef Py_ssize_t fi = -1, fj = -1
    try:
        b = _copy_in(hi, n)
        c = _copy_in(colors, n)
        idx = _copy_in(order, n)
        with nogil:
            # per color, in left order: a clash exists iff some left endpoint
            # falls within the running max right end
            for p in range(n):
                k = idx[p]
                if p > 0 and c[idx[p - 1]] == c[k]:
                    if a[k] <= reach:
                        clash = True
                        break
                    if b[k] > reach:
                        reach = b[k]
                else:
                    reach = b[k]
            if clash:
                for i in range(n):
                    for j in range(i + 1, n):
                        if c[i] == c[j] and a[i] <= b[j] and a[j] <= b[i]:
                            fi = i
                            fj = j
                            break
                    if fi >= 0:
                        break
    finally:
        free(a)
        free(b)
        free(c)
        free(idx)
    if fi < 0:
        return None
    return (fi, fj)


def greedy_by_left(lo, hi):
    cdef Py_ssize_t n = len(lo), k, p, c, used = 0
    order = sorted(range(n), key=lambda t: (lo[t], t))
    cdef long long *a = _copy_in(lo, n)
    cdef long long *b = NULL
    cdef long long *idx = NULL
    cdef long long *last_end = NULL
    cdef long long *out = NULL
    try:
        b = _copy_in(hi, n)
        idx = _copy_in(order, n)
        last_end = <long long *>malloc((n + 1) * sizeof(long long))
        out = <long long *>malloc((n + 1) * sizeof(long long))
        if last_end == NULL or out == NULL:
            raise MemoryError()
        with nogil:
            for p in range(n):
                k = idx[p]
                for c in range(used + 1):
                    if c == used:
                        last_end[c] = b[k]
                        out[k] = c
                        used += 1
                        break
                    if last_end[c] < a[k]:
                        last_end[c] = b[k]
                        out[k] = c
                        break
        result = [out[k] for k in range(n)]
    finally:
        free(a)
        free(b)
        free(idx)
        free(last_end)
        free(out)
    return result


def first_fit_replay(lo, hi):
    cdef Py_ssize_t n = len(lo), i, j, c
    cdef long long *a = _copy_in(lo, n)
    cdef long long *b = NULL
    cdef long long *out = NULL
    cdef char *used = NULL
    try:
        b = _copy_in(hi, n)
        out = <long long *>malloc((n + 1) * sizeof(long long))
        used = <char *>malloc(n + 1)
        if out == NULL or used == NULL:
            raise MemoryError()
        with nogil:
            for i in range(n):
                for c in range(i + 1):
                    used[c] = 0
                for j in range(i):
                    if a[j] <= b[i] and a[i] <= b[j] and out[j] <= i:
                        used[out[j]] = 1
                c = 0
                while used[c]:
                    c += 1
                out[i] = c
        result = [out[k] for k in range(n)]
    finally:
        free(a)
        free(b)
        free(out)
        free(used)
    return result
