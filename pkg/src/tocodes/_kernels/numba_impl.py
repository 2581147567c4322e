"""numba-compiled inner loops.

Field elements are integer encodings sum(d_i * 3^i) of their polynomial-basis
digits.  Every function here has a twin with the same signature in
``numpy_impl``; the two are checked against each other in the test suite.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _plus_one(v):
    d0 = v % 3
    return v - d0 + (d0 + 1) % 3


@njit(cache=True)
def _add(a, b, m):
    out = 0
    p = 1
    for _ in range(m):
        out += ((a % 3 + b % 3) % 3) * p
        a //= 3
        b //= 3
        p *= 3
    return out


@njit(cache=True)
def _sub(a, b, m):
    out = 0
    p = 1
    for _ in range(m):
        out += ((a % 3 - b % 3 + 3) % 3) * p
        a //= 3
        b //= 3
        p *= 3
    return out


@njit(cache=True)
def exp_sequence(m, prim, count):
    """Encodings of alpha^0 .. alpha^(count-1), alpha a root of ``prim``.

    ``prim`` holds the m+1 coefficients of a monic polynomial, low-to-high.
    """
    out = np.empty(count, dtype=np.int64)
    digits = np.zeros(m, dtype=np.int64)
    digits[0] = 1
    pow3 = np.empty(m, dtype=np.int64)
    p = 1
    for i in range(m):
        pow3[i] = p
        p *= 3
    for t in range(count):
        v = 0
        for i in range(m):
            v += digits[i] * pow3[i]
        out[t] = v
        top = digits[m - 1]
        for i in range(m - 1, 0, -1):
            digits[i] = digits[i - 1]
        digits[0] = 0
        if top:
            for i in range(m):
                digits[i] = (digits[i] - top * prim[i]) % 3
    return out


@njit(cache=True)
def condition_witnesses(powtab, neg):
    """Smallest roots of the two weight-3 equations, -1 when absent.

    Returns ``(w2, w3)``: w2 is the least x not in {0, 1} with
    (x+1)^e + x^e + 1 = 0, w3 the least x != 0 with (x+1)^e - x^e - 1 = 0.
    ``powtab[x]`` is x^e and ``neg[x]`` is -x, both by encoding.
    """
    q = powtab.shape[0]
    w2 = -1
    w3 = -1
    for x in range(1, q):
        lhs = powtab[_plus_one(x)]
        rhs = _plus_one(powtab[x])
        if w3 < 0 and lhs == rhs:
            w3 = x
        if w2 < 0 and x != 1 and lhs == neg[rhs]:
            w2 = x
        if w2 >= 0 and w3 >= 0:
            break
    return w2, w3


@njit(cache=True)
def uniformity_all_shifts(powtab, m, cap):
    """max over a != 0, b of #{x : (x+a)^e - x^e = b}; stops once the max exceeds ``cap`` (cap < 0: never)."""
    q = powtab.shape[0]
    counts = np.zeros(q, dtype=np.int64)
    best = 0
    for a in range(1, q):
        counts[:] = 0
        for x in range(q):
            b = _sub(powtab[_add(x, a, m)], powtab[x], m)
            counts[b] += 1
            if counts[b] > best:
                best = counts[b]
        if cap >= 0 and best > cap:
            return best
    return best


@njit(cache=True)
def uniformity_unit_shift(powtab, m):
    """max over b of #{x : (x+1)^e - x^e = b}."""
    q = powtab.shape[0]
    counts = np.zeros(q, dtype=np.int64)
    for x in range(q):
        counts[_sub(powtab[_plus_one(x)], powtab[x], m)] += 1
    return counts.max()


@njit(cache=True)
def weight_distribution(gen):
    """Hamming-weight counts of the row space of ``gen`` (k x n over GF(3)).

    Messages are visited in modular ternary Gray order: step t adds row
    v_3(t) once, so each step costs O(n).
    """
    k, n = gen.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    word = np.zeros(n, dtype=np.int64)
    weight = 0
    counts[0] = 1
    total = 1
    for _ in range(k):
        total *= 3
    for t in range(1, total):
        i = 0
        s = t
        while s % 3 == 0:
            s //= 3
            i += 1
        for j in range(n):
            g = gen[i, j]
            if g:
                old = word[j]
                new = (old + g) % 3
                word[j] = new
                if old == 0:
                    weight += 1
                elif new == 0:
                    weight -= 1
        counts[weight] += 1
    return counts
