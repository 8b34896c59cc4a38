"""Vectorised numpy kernels; fallback when the Cython extension is absent.

A level state is a tuple of eight arrays indexed by 0-based position:
``(llen, lwt, lorg, lform, plen, pwt, porg, pform)``.  The ``l*`` arrays
describe the letter center at each position, the ``p*`` arrays the
two-letter center starting there.  ``len`` is the ideal (infinite-context)
maximal palindrome length, 0 when unknown; ``wt`` its number of b's.
"""
import numpy as np

NAME = "python"


def _reflect(ln, wt, p, q, m):
    known = ln > 0
    new_len = np.where(known, 2 * m + 1 + (p + 1) * (ln - wt) + (q + 1) * wt, 0)
    new_wt = np.where(known, ln + 1, 0)
    return new_len, new_wt


def propagate(y, p, q, level, state):
    """Level state of alpha_(p,q)(y) from the state of y."""
    llen, lwt, lorg, lform, plen, pwt, porg, pform = state
    M = len(y)
    m = min(p, q)
    r = np.where(y == 1, q, p).astype(np.int64)
    blen = r + 1
    ends = np.cumsum(blen)
    N = int(ends[-1])
    starts = ends - blen
    bid = np.repeat(np.arange(M, dtype=np.int64), blen)
    off = np.arange(N, dtype=np.int64) - starts[bid]
    rr = r[bid]

    n_len = np.zeros(N, dtype=np.int64)
    n_wt = np.zeros(N, dtype=np.int64)
    n_org = np.full(N, level, dtype=np.int16)
    n_form = np.full(N, -1, dtype=np.int32)

    run = off < rr
    odd = (rr & 1) == 1
    mid = run & odd & (off == (rr - 1) // 2)
    orig = run & ~mid
    olen = 2 * np.minimum(off, rr - 1 - off) + 1
    n_len[orig] = olen[orig]
    n_form[orig] = olen[orig]
    src = bid[mid]
    n_len[mid], n_wt[mid] = _reflect(llen[src], lwt[src], p, q, m)
    n_org[mid] = lorg[src]
    n_form[mid] = lform[src]

    bpos = starts + r
    nxt = np.empty(M, dtype=y.dtype)
    nxt[:-1] = y[1:]
    last = np.zeros(M, dtype=bool)
    last[-1] = True
    differ = ~last & (y != nxt)
    same = ~last & (y == nxt)
    n_len[bpos[differ]] = 2 * m + 1
    n_wt[bpos[differ]] = 1
    n_form[bpos[differ]] = 0
    ts = np.flatnonzero(same)
    dst = bpos[ts]
    n_len[dst], n_wt[dst] = _reflect(plen[ts], pwt[ts], p, q, m)
    n_org[dst] = porg[ts]
    n_form[dst] = pform[ts]

    m_len = np.zeros(N, dtype=np.int64)
    m_wt = np.zeros(N, dtype=np.int64)
    m_org = np.full(N, -1, dtype=np.int16)
    m_form = np.full(N, -1, dtype=np.int32)
    prun = off <= rr - 2
    pmid = prun & ~odd & (off == rr // 2 - 1)
    porig = prun & ~pmid
    pl = 2 * np.minimum(off + 1, rr - 1 - off)
    m_len[porig] = pl[porig]
    m_form[porig] = pl[porig]
    m_org[porig] = level
    src = bid[pmid]
    m_len[pmid], m_wt[pmid] = _reflect(llen[src], lwt[src], p, q, m)
    m_org[pmid] = lorg[src]
    m_form[pmid] = lform[src]
    return n_len, n_wt, n_org, n_form, m_len, m_wt, m_org, m_form


def finalize(x, state):
    """Occurrence columns for every center of ``x``, ordered by midpoint.

    Returns ``(position, kind, length, origin, form, flagged)`` with 1-based
    positions, kind 0 = a, 1 = b, 2 = aa, and lengths clipped at the word
    boundary for flagged centers.
    """
    llen, _, lorg, lform, plen, _, porg, pform = state
    N = len(x)
    idx = np.arange(N, dtype=np.int64)
    valid = np.zeros(N, dtype=bool)
    if N > 1:
        valid[:-1] = (x[:-1] == 0) & (x[1:] == 0)
    before = np.cumsum(valid) - valid
    total = N + int(before[-1] + valid[-1]) if N else 0

    pos = np.empty(total, dtype=np.int64)
    kind = np.empty(total, dtype=np.uint8)
    length = np.empty(total, dtype=np.int64)
    origin = np.empty(total, dtype=np.int16)
    form = np.empty(total, dtype=np.int32)
    flagged = np.empty(total, dtype=bool)

    li = idx + before
    avail = np.minimum(idx, N - 1 - idx)
    done = (llen > 0) & ((llen - 1) // 2 < avail)
    pos[li] = idx + 1
    kind[li] = x
    length[li] = np.where(done, llen, 2 * avail + 1)
    origin[li] = lorg
    form[li] = lform
    flagged[li] = ~done

    pi_ = idx[valid]
    dst = li[valid] + 1
    avail = np.minimum(pi_, N - 2 - pi_)
    ln = plen[valid]
    done = (ln > 0) & ((ln - 2) // 2 < avail)
    pos[dst] = pi_ + 1
    kind[dst] = 2
    length[dst] = np.where(done, ln, 2 * avail + 2)
    origin[dst] = porg[valid]
    form[dst] = pform[valid]
    flagged[dst] = ~done
    return pos, kind, length, origin, form, flagged


def seed_radii(x):
    """Maximal palindrome length at every letter and every equal-letter pair, clipped at the edges."""
    s = x.tolist()
    n = len(s)
    d1 = [0] * n
    d2 = [0] * (n + 1)
    lo, hi = 0, -1
    for i in range(n):
        k = 1 if i > hi else min(d1[lo + hi - i], hi - i + 1)
        while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
            k += 1
        d1[i] = k
        if i + k - 1 > hi:
            lo, hi = i - k + 1, i + k - 1
    lo, hi = 0, -1
    for i in range(n):
        k = 0 if i > hi else min(d2[lo + hi - i + 1], hi - i + 1)
        while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
            k += 1
        d2[i] = k
        if i + k - 1 > hi:
            lo, hi = i - k, i + k - 1
    llen = 2 * np.array(d1, dtype=np.int64) - 1
    plen = np.zeros(n, dtype=np.int64)
    if n > 1:
        plen[:-1] = 2 * np.array(d2[1:n], dtype=np.int64)
    return llen, plen
