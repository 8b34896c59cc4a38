# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled level-propagation kernels; same contract as _pykernels."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int16_t, int32_t, int64_t, uint8_t

cnp.import_array()

NAME = "cython"


cdef inline int64_t _imin(int64_t a, int64_t b) nogil:
    return a if a < b else b


def propagate(const uint8_t[::1] y, int64_t p, int64_t q, int level, state):
    cdef const int64_t[::1] llen = state[0]
    cdef const int64_t[::1] lwt = state[1]
    cdef const int16_t[::1] lorg = state[2]
    cdef const int32_t[::1] lform = state[3]
    cdef const int64_t[::1] plen = state[4]
    cdef const int64_t[::1] pwt = state[5]
    cdef const int16_t[::1] porg = state[6]
    cdef const int32_t[::1] pform = state[7]

    cdef Py_ssize_t M = y.shape[0], t
    cdef int64_t N = 0, r, j, i, pos, ln, wt, olen
    cdef int64_t m = _imin(p, q)
    for t in range(M):
        N += (q if y[t] else p) + 1

    n_len_a = np.zeros(N, dtype=np.int64)
    n_wt_a = np.zeros(N, dtype=np.int64)
    n_org_a = np.empty(N, dtype=np.int16)
    n_form_a = np.empty(N, dtype=np.int32)
    m_len_a = np.zeros(N, dtype=np.int64)
    m_wt_a = np.zeros(N, dtype=np.int64)
    m_org_a = np.full(N, -1, dtype=np.int16)
    m_form_a = np.full(N, -1, dtype=np.int32)
    cdef int64_t[::1] n_len = n_len_a
    cdef int64_t[::1] n_wt = n_wt_a
    cdef int16_t[::1] n_org = n_org_a
    cdef int32_t[::1] n_form = n_form_a
    cdef int64_t[::1] m_len = m_len_a
    cdef int64_t[::1] m_wt = m_wt_a
    cdef int16_t[::1] m_org = m_org_a
    cdef int32_t[::1] m_form = m_form_a
    cdef int16_t lev = level

    with nogil:
        pos = 0
        for t in range(M):
            r = q if y[t] else p
            for j in range(r):
                i = pos + j
                if (r & 1) and j == (r - 1) // 2:
                    ln = llen[t]
                    if ln > 0:
                        wt = lwt[t]
                        n_len[i] = 2 * m + 1 + (p + 1) * (ln - wt) + (q + 1) * wt
                        n_wt[i] = ln + 1
                    n_org[i] = lorg[t]
                    n_form[i] = lform[t]
                else:
                    olen = 2 * _imin(j, r - 1 - j) + 1
                    n_len[i] = olen
                    n_org[i] = lev
                    n_form[i] = <int32_t>olen
            for j in range(r - 1):
                i = pos + j
                if not (r & 1) and j == r // 2 - 1:
                    ln = llen[t]
                    if ln > 0:
                        wt = lwt[t]
                        m_len[i] = 2 * m + 1 + (p + 1) * (ln - wt) + (q + 1) * wt
                        m_wt[i] = ln + 1
                    m_org[i] = lorg[t]
                    m_form[i] = lform[t]
                else:
                    olen = 2 * _imin(j + 1, r - 1 - j)
                    m_len[i] = olen
                    m_org[i] = lev
                    m_form[i] = <int32_t>olen
            i = pos + r
            if t == M - 1:
                n_org[i] = lev
                n_form[i] = -1
            elif y[t] != y[t + 1]:
                n_len[i] = 2 * m + 1
                n_wt[i] = 1
                n_org[i] = lev
                n_form[i] = 0
            else:
                ln = plen[t]
                if ln > 0:
                    wt = pwt[t]
                    n_len[i] = 2 * m + 1 + (p + 1) * (ln - wt) + (q + 1) * wt
                    n_wt[i] = ln + 1
                n_org[i] = porg[t]
                n_form[i] = pform[t]
            pos += r + 1
    return n_len_a, n_wt_a, n_org_a, n_form_a, m_len_a, m_wt_a, m_org_a, m_form_a


def finalize(const uint8_t[::1] x, state):
    cdef const int64_t[::1] llen = state[0]
    cdef const int16_t[::1] lorg = state[2]
    cdef const int32_t[::1] lform = state[3]
    cdef const int64_t[::1] plen = state[4]
    cdef const int16_t[::1] porg = state[6]
    cdef const int32_t[::1] pform = state[7]
    cdef Py_ssize_t N = x.shape[0], i, k
    cdef Py_ssize_t total = N
    for i in range(N - 1):
        if x[i] == 0 and x[i + 1] == 0:
            total += 1

    pos_a = np.empty(total, dtype=np.int64)
    kind_a = np.empty(total, dtype=np.uint8)
    length_a = np.empty(total, dtype=np.int64)
    origin_a = np.empty(total, dtype=np.int16)
    form_a = np.empty(total, dtype=np.int32)
    flagged_a = np.empty(total, dtype=np.bool_)
    cdef int64_t[::1] pos = pos_a
    cdef uint8_t[::1] kind = kind_a
    cdef int64_t[::1] length = length_a
    cdef int16_t[::1] origin = origin_a
    cdef int32_t[::1] form = form_a
    cdef uint8_t[::1] flagged = flagged_a.view(np.uint8)
    cdef int64_t avail, ln

    with nogil:
        k = 0
        for i in range(N):
            avail = _imin(i, N - 1 - i)
            ln = llen[i]
            pos[k] = i + 1
            kind[k] = x[i]
            origin[k] = lorg[i]
            form[k] = lform[i]
            if ln > 0 and (ln - 1) // 2 < avail:
                length[k] = ln
                flagged[k] = 0
            else:
                length[k] = 2 * avail + 1
                flagged[k] = 1
            k += 1
            if i + 1 < N and x[i] == 0 and x[i + 1] == 0:
                avail = _imin(i, N - 2 - i)
                ln = plen[i]
                pos[k] = i + 1
                kind[k] = 2
                origin[k] = porg[i]
                form[k] = pform[i]
                if ln > 0 and (ln - 2) // 2 < avail:
                    length[k] = ln
                    flagged[k] = 0
                else:
                    length[k] = 2 * avail + 2
                    flagged[k] = 1
                k += 1
    return pos_a, kind_a, length_a, origin_a, form_a, flagged_a


def seed_radii(const uint8_t[::1] x):
    """Maximal palindrome length at every letter and every equal-letter pair, clipped at the edges."""
    cdef Py_ssize_t n = x.shape[0], i, k, l, r
    d1_a = np.zeros(n, dtype=np.int64)
    d2_a = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] d1 = d1_a
    cdef int64_t[::1] d2 = d2_a
    with nogil:
        l, r = 0, -1
        for i in range(n):
            k = 1 if i > r else _imin(d1[l + r - i], r - i + 1)
            while i - k >= 0 and i + k < n and x[i - k] == x[i + k]:
                k += 1
            d1[i] = k
            if i + k - 1 > r:
                l, r = i - k + 1, i + k - 1
        l, r = 0, -1
        for i in range(n):
            k = 0 if i > r else _imin(d2[l + r - i + 1], r - i + 1)
            while i - k - 1 >= 0 and i + k < n and x[i - k - 1] == x[i + k]:
                k += 1
            d2[i] = k
            if i + k - 1 > r:
                l, r = i - k, i + k - 1
    llen = 2 * d1_a - 1
    plen = np.zeros(n, dtype=np.int64)
    if n > 1:
        plen[:-1] = 2 * d2_a[1:n]
    return llen, plen
