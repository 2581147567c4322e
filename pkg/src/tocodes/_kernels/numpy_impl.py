"""Pure-numpy versions of the kernels in ``numba_impl``.

Same signatures and results; the algorithms are vectorized rather than
transliterated, which makes each side a check on the other.
"""

import numpy as np


def _pow3(m):
    return 3 ** np.arange(m, dtype=np.int64)


def _digits(values, m):
    return (np.asarray(values, dtype=np.int64)[..., None] // _pow3(m)) % 3


def _plus_one(v):
    d0 = v % 3
    return v - d0 + (d0 + 1) % 3


def exp_sequence(m, prim, count):
    """Powers of alpha by repeated doubling: the next block of L powers is the
    current block times alpha^L, a GF(3)-linear map on digit vectors."""
    prim = np.asarray(prim, dtype=np.int64)
    pow3 = _pow3(m)

    def times_alpha(d):
        top = d[m - 1]
        out = np.concatenate(([0], d[:-1]))
        return (out - top * prim[:m]) % 3

    rows = np.zeros((1, m), dtype=np.int64)
    rows[0, 0] = 1
    while rows.shape[0] < count:
        L = rows.shape[0]
        g = times_alpha(rows[-1])  # alpha^L
        basis = np.empty((m, m), dtype=np.int64)
        for j in range(m):
            basis[j] = g
            g = times_alpha(g)
        take = min(L, count - L)
        rows = np.vstack((rows, (rows[:take] @ basis) % 3))
    return rows[:count] @ pow3


def condition_witnesses(powtab, neg):
    q = powtab.shape[0]
    x = np.arange(q, dtype=np.int64)
    lhs = powtab[_plus_one(x)]
    rhs = _plus_one(powtab)
    c3 = lhs == rhs
    c3[0] = False
    c2 = lhs == neg[rhs]
    c2[:2] = False
    w2 = int(np.argmax(c2)) if c2.any() else -1
    w3 = int(np.argmax(c3)) if c3.any() else -1
    return w2, w3


def uniformity_all_shifts(powtab, m, cap):
    q = powtab.shape[0]
    pow3 = _pow3(m)
    dx = _digits(np.arange(q), m)
    dp = _digits(powtab, m)
    best = 0
    for a in range(1, q):
        shifted = ((dx + dx[a]) % 3) @ pow3
        diff = ((dp[shifted] - dp) % 3) @ pow3
        best = max(best, int(np.bincount(diff, minlength=q).max()))
        if cap >= 0 and best > cap:
            return best
    return best


def uniformity_unit_shift(powtab, m):
    q = powtab.shape[0]
    pow3 = _pow3(m)
    x = np.arange(q, dtype=np.int64)
    diff = ((_digits(powtab[_plus_one(x)], m) - _digits(powtab, m)) % 3) @ pow3
    return int(np.bincount(diff, minlength=q).max())


def weight_distribution(gen, chunk=1 << 14):
    """Row-space weights by chunked message @ gen products."""
    gen = np.asarray(gen, dtype=np.int64)
    k, n = gen.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 3**k
    for start in range(0, total, chunk):
        msgs = _digits(np.arange(start, min(total, start + chunk)), k)
        words = (msgs @ gen) % 3
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    return counts
