"""Pure-Python Levenshtein kernels.

Mirrors the interface of the compiled ``_distance_ext`` module so either can
back :mod:`lexnorm.distance`.
"""

NAME = "python"


def levenshtein(a, b):
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def bounded_levenshtein(a, b, k):
    """Levenshtein distance if it is at most ``k``, else ``k + 1``.

    Only the diagonal band of width ``2k + 1`` is filled; the scan stops as
    soon as a whole band row exceeds ``k``.
    """
    m, n = len(a), len(b)
    cap = k + 1
    if abs(m - n) > k:
        return cap
    if m == 0 or n == 0:
        return max(m, n)
    prev = [j if j < cap else cap for j in range(n + 1)]
    cur = [cap] * (n + 1)
    for i in range(1, m + 1):
        ca = a[i - 1]
        lo = i - k if i > k else 1
        hi = i + k if i + k < n else n
        cur[lo - 1] = i if (lo == 1 and i < cap) else cap
        row_min = cur[lo - 1]
        for j in range(lo, hi + 1):
            v = prev[j - 1] + (ca != b[j - 1])
            t = prev[j] + 1
            if t < v:
                v = t
            t = cur[j - 1] + 1
            if t < v:
                v = t
            if v > cap:
                v = cap
            cur[j] = v
            if v < row_min:
                row_min = v
        if hi < n:
            cur[hi + 1] = cap
        if row_min > k:
            return cap
        prev, cur = cur, prev
    return prev[n] if prev[n] <= k else cap


def _band_row(query, ch, i, k, prev):
    m = len(query)
    cap = k + 1
    lo = i - k if i > k else 1
    hi = i + k if i + k < m else m
    cur = [cap] * (m + 1)
    cur[lo - 1] = i if (lo == 1 and i < cap) else cap
    for j in range(lo, hi + 1):
        v = prev[j - 1] + (ch != query[j - 1])
        t = prev[j] + 1
        if t < v:
            v = t
        t = cur[j - 1] + 1
        if t < v:
            v = t
        cur[j] = v if v < cap else cap
    return cur, min(cur[lo - 1:hi + 1])


def scan_bucket(query, words, codes, k):
    """Return ``(position, distance)`` for every word within ``k`` of query.

    ``words`` must be sorted and of equal length. Table rows for a prefix
    shared with the previous word are reused, and words extending a prefix
    already beyond ``k`` are skipped. ``codes`` (the compiled kernel's packed
    form of ``words``) is unused.
    """
    if not words:
        return []
    n, m = len(words[0]), len(query)
    cap = k + 1
    if abs(n - m) > k:
        return []
    table = [[j if j < cap else cap for j in range(m + 1)]]
    out = []
    last = ""
    dead = n + 1
    for pos, word in enumerate(words):
        lcp = 0
        while lcp < n and lcp < len(last) and word[lcp] == last[lcp]:
            lcp += 1
        last = word
        if dead <= lcp:
            continue
        del table[lcp + 1:]
        dead = n + 1
        for i in range(len(table), n + 1):
            row, row_min = _band_row(query, word[i - 1], i, k, table[i - 1])
            table.append(row)
            if row_min > k:
                dead = i
                break
        if dead > n and table[n][m] <= k:
            out.append((pos, table[n][m]))
    return out
