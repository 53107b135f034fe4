# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Levenshtein kernels (see ``_distance_py`` for the reference)."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint32_t

NAME = "cython"


cdef inline int _min3(int a, int b, int c) noexcept nogil:
    if b < a:
        a = b
    if c < a:
        a = c
    return a


cdef int _bounded(const uint32_t* a, int m, const uint32_t* b, int n, int k,
                  int* prev, int* cur) noexcept nogil:
    cdef int cap = k + 1
    cdef int i, j, lo, hi, v, row_min
    cdef uint32_t ca
    cdef int* tmp
    if m - n > k or n - m > k:
        return cap
    if m == 0 or n == 0:
        return m if m > n else n
    for j in range(n + 1):
        prev[j] = j if j < cap else cap
    for i in range(1, m + 1):
        ca = a[i - 1]
        lo = i - k if i > k else 1
        hi = i + k if i + k < n else n
        cur[lo - 1] = i if (lo == 1 and i < cap) else cap
        row_min = cur[lo - 1]
        for j in range(lo, hi + 1):
            v = _min3(prev[j - 1] + (ca != b[j - 1]), prev[j] + 1, cur[j - 1] + 1)
            if v > cap:
                v = cap
            cur[j] = v
            if v < row_min:
                row_min = v
        if hi < n:
            cur[hi + 1] = cap
        if row_min > k:
            return cap
        tmp = prev
        prev = cur
        cur = tmp
    return prev[n] if prev[n] <= k else cap


cdef uint32_t* _codes(str s, Py_ssize_t* length) except NULL:
    cdef Py_ssize_t i, n = len(s)
    cdef uint32_t* buf = <uint32_t*> malloc((n + 1) * sizeof(uint32_t))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = <uint32_t> s[i]
    length[0] = n
    return buf


def levenshtein(str a, str b):
    if a == b:
        return 0
    k = max(len(a), len(b))
    return bounded_levenshtein(a, b, k)


def bounded_levenshtein(str a, str b, int k):
    cdef Py_ssize_t m, n
    cdef uint32_t* ca = _codes(a, &m)
    cdef uint32_t* cb = NULL
    cdef int* rows = NULL
    cdef int d
    try:
        cb = _codes(b, &n)
        rows = <int*> malloc(2 * (n + 1) * sizeof(int))
        if rows == NULL:
            raise MemoryError()
        with nogil:
            d = _bounded(ca, <int> m, cb, <int> n, k, rows, rows + n + 1)
        return d
    finally:
        free(ca)
        free(cb)
        free(rows)


cdef int _band_row(const uint32_t* q, int m, uint32_t ch, int i, int k,
                   const int* prev, int* cur) noexcept nogil:
    """Fill row ``i`` of the banded table; return the row minimum."""
    cdef int cap = k + 1
    cdef int lo = i - k if i > k else 1
    cdef int hi = i + k if i + k < m else m
    cdef int j, v, row_min
    cur[lo - 1] = i if (lo == 1 and i < cap) else cap
    row_min = cur[lo - 1]
    for j in range(lo, hi + 1):
        v = _min3(prev[j - 1] + (ch != q[j - 1]), prev[j] + 1, cur[j - 1] + 1)
        if v > cap:
            v = cap
        cur[j] = v
        if v < row_min:
            row_min = v
    if hi < m:
        cur[hi + 1] = cap
    return row_min


def scan_bucket(str query, words, const uint32_t[:, ::1] codes, int k):
    """``(position, distance)`` for each packed row within ``k`` of query.

    Rows must be sorted: table rows for a prefix shared with the previous
    word are reused, and words extending a prefix already beyond ``k`` are
    skipped.
    """
    cdef Py_ssize_t m, count = codes.shape[0]
    cdef int n = <int> codes.shape[1]
    cdef int cap = k + 1
    cdef Py_ssize_t r, hits = 0
    cdef int i, j, lcp, valid = 0, dead, width, row_min, d
    cdef uint32_t* q = _codes(query, &m)
    cdef int* table = NULL
    cdef int* found = NULL
    cdef const uint32_t* word
    cdef const uint32_t* last
    try:
        if m - n > k or n - m > k or n == 0:
            return []
        width = <int> m + 1
        table = <int*> malloc((n + 1) * width * sizeof(int))
        found = <int*> malloc(2 * (count + 1) * sizeof(int))
        if table == NULL or found == NULL:
            raise MemoryError()
        with nogil:
            for j in range(width):
                table[j] = j if j < cap else cap
            dead = n + 1
            last = NULL
            for r in range(count):
                word = &codes[r, 0]
                lcp = 0
                if last != NULL:
                    while lcp < n and word[lcp] == last[lcp]:
                        lcp += 1
                last = word
                if dead <= lcp:
                    continue
                if valid > lcp:
                    valid = lcp
                dead = n + 1
                for i in range(valid + 1, n + 1):
                    row_min = _band_row(q, <int> m, word[i - 1], i, k,
                                        table + (i - 1) * width, table + i * width)
                    if row_min > k:
                        dead = i
                        break
                if dead <= n:
                    valid = dead
                    continue
                valid = n
                d = table[n * width + m]
                if d <= k:
                    found[2 * hits] = <int> r
                    found[2 * hits + 1] = d
                    hits += 1
        return [(found[2 * r], found[2 * r + 1]) for r in range(hits)]
    finally:
        free(q)
        free(table)
        free(found)
