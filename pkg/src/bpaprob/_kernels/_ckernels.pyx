# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same signatures and semantics as ``_pykernels``."""

from array import array

from libc.math cimport log, fabs, ceil, floor, INFINITY

cdef enum:
    MAXN = 32

cdef double FEAS_EPS = 1e-12
cdef double TIE_EPS = 1e-12


cdef inline double _h(double x) nogil:
    return -x * log(x) if x > 0.0 else 0.0


cdef int _load(seq, double* out) except -1:
    cdef Py_ssize_t n = len(seq)
    if n > MAXN - 1:
        raise ValueError("vector too long for compiled kernels")
    for i in range(n):
        out[i] = <double>seq[i]
    return <int>n


def entropy_nats(p):
    cdef double s = 0.0
    cdef double x
    for v in p:
        x = v
        if x > 0.0:
            s -= x * log(x)
    return s


def waterfill(lower, upper, int max_iter=200, double tol=1e-12):
    cdef double l[MAXN]
    cdef double u[MAXN]
    cdef int n = _load(lower, l)
    _load(upper, u)
    cdef double lo = l[0], hi = u[0], c, s, fixed, c2
    cdef int i, it = 0, nfree
    cdef bint ok
    for i in range(n):
        if l[i] < lo:
            lo = l[i]
        if u[i] > hi:
            hi = u[i]
    c = 0.5 * (lo + hi)
    while it < max_iter:
        it += 1
        c = 0.5 * (lo + hi)
        s = 0.0
        for i in range(n):
            s += l[i] if c < l[i] else (u[i] if c > u[i] else c)
        if fabs(s - 1.0) <= tol:
            break
        if s < 1.0:
            lo = c
        else:
            hi = c
    fixed = 0.0
    nfree = 0
    for i in range(n):
        if l[i] < c < u[i]:
            nfree += 1
        else:
            fixed += l[i] if c <= l[i] else u[i]
    if nfree:
        c2 = (1.0 - fixed) / nfree
        ok = True
        for i in range(n):
            if l[i] < c < u[i] and not (l[i] <= c2 <= u[i]):
                ok = False
                break
        if ok:
            c = c2
    return [l[i] if c < l[i] else (u[i] if c > u[i] else c) for i in range(n)], it


cdef struct VState:
    int n
    int j
    int m
    int others[MAXN]
    double lo[MAXN]
    double hi[MAXN]
    double suf_lo[MAXN + 1]
    double suf_hi[MAXN + 1]
    double suf_h[MAXN + 1]
    double need_lo
    double need_hi
    double hj
    double p[MAXN]
    double best_p[MAXN]
    double best_h
    bint have_best
    long long visited


cdef bint _lex_less(double* a, double* b, int n) nogil:
    for i in range(n):
        if a[i] < b[i]:
            return True
        if a[i] > b[i]:
            return False
    return False


cdef void _vrec(VState* st, int k, double s, double h) nogil:
    cdef double r, tot, v
    cdef int i
    if s + st.suf_lo[k] > st.need_hi + FEAS_EPS or s + st.suf_hi[k] < st.need_lo - FEAS_EPS:
        return
    if h + st.suf_h[k] + st.hj > st.best_h + TIE_EPS:
        return
    if k == st.m:
        r = 1.0 - s
        if r < st.lo[st.j] - FEAS_EPS or r > st.hi[st.j] + FEAS_EPS:
            return
        if r < 0.0:
            r = 0.0
        st.p[st.j] = r
        st.visited += 1
        tot = h + _h(r)
        if not st.have_best or tot < st.best_h - TIE_EPS:
            st.best_h = tot
            st.have_best = True
            for i in range(st.n):
                st.best_p[i] = st.p[i]
        elif tot <= st.best_h + TIE_EPS and _lex_less(st.p, st.best_p, st.n):
            if tot < st.best_h:
                st.best_h = tot
            for i in range(st.n):
                st.best_p[i] = st.p[i]
        return
    i = st.others[k]
    v = st.lo[i]
    st.p[i] = v
    _vrec(st, k + 1, s + v, h + _h(v))
    if st.hi[i] != st.lo[i]:
        v = st.hi[i]
        st.p[i] = v
        _vrec(st, k + 1, s + v, h + _h(v))


def min_entropy_vertex(lower, upper):
    cdef VState st
    cdef double hmin[MAXN]
    cdef int n = _load(lower, st.lo)
    _load(upper, st.hi)
    cdef int i, j, k, m
    st.n = n
    st.best_h = INFINITY
    st.have_best = False
    st.visited = 0
    for i in range(n):
        hmin[i] = min(_h(st.lo[i]), _h(st.hi[i]))
        st.p[i] = 0.0
    with nogil:
        for j in range(n):
            m = 0
            for i in range(n):
                if i != j:
                    st.others[m] = i
                    m += 1
            st.m = m
            st.j = j
            st.suf_lo[m] = 0.0
            st.suf_hi[m] = 0.0
            st.suf_h[m] = 0.0
            for k in range(m - 1, -1, -1):
                i = st.others[k]
                st.suf_lo[k] = st.suf_lo[k + 1] + st.lo[i]
                st.suf_hi[k] = st.suf_hi[k + 1] + st.hi[i]
                st.suf_h[k] = st.suf_h[k + 1] + hmin[i]
            st.need_lo = 1.0 - st.hi[j]
            st.need_hi = 1.0 - st.lo[j]
            st.hj = hmin[j]
            _vrec(&st, 0, 0.0, 0.0)
    vec = [st.best_p[i] for i in range(n)]
    return vec, entropy_nats(vec), st.visited


def grid_search(lower, upper, double step, double target):
    cdef double l[MAXN]
    cdef double u[MAXN]
    cdef int n = _load(lower, l)
    _load(upper, u)
    if n > 8:
        raise ValueError("grid search supports at most 8 coordinates")
    cdef double eps = 1e-9
    cdef long klo[8]
    cdef long khi[8]
    cdef long k[8]
    cdef long best_k[8]
    cdef double hpart[9]
    cdef long ksum[9]
    cdef long kmax = 0, a, b, kk, t
    cdef int d, last = n - 1, i
    cdef double sum_lo = (1.0 - step / 2.0) / step - eps
    cdef double sum_hi = (1.0 + step / 2.0) / step + eps
    cdef double best_gap = INFINITY, tot, h, g, q
    cdef long long count = 0
    cdef bint found = False
    cdef double[::1] qlog
    for i in range(n):
        klo[i] = <long>ceil((l[i] - eps) / step)
        if klo[i] < 0:
            klo[i] = 0
        khi[i] = <long>floor((u[i] + eps) / step)
        if khi[i] > kmax:
            kmax = khi[i]
    qlog = array("d", [0.0]) * (kmax + 2)
    for t in range(kmax + 2):
        q = t * step
        qlog[t] = -q * log(q) if q > 0.0 else 0.0
    # iterative odometer over the first n-1 coordinates
    hpart[0] = 0.0
    ksum[0] = 0
    d = 0
    if last > 0:
        k[0] = klo[0] - 1
    with nogil:
        while True:
            if d == last:
                a = <long>ceil(sum_lo - ksum[last])
                if a < klo[last]:
                    a = klo[last]
                b = <long>floor(sum_hi - ksum[last])
                if b > khi[last]:
                    b = khi[last]
                kk = a
                while kk <= b:
                    count += 1
                    tot = (ksum[last] + kk) * step
                    h = (hpart[last] + qlog[kk]) / tot + log(tot)
                    g = fabs(target - h)
                    if g < best_gap:
                        best_gap = g
                        found = True
                        for i in range(last):
                            best_k[i] = k[i]
                        best_k[last] = kk
                    kk += 1
                if last == 0:
                    break
                d -= 1
                continue
            k[d] += 1
            if k[d] > khi[d] or ksum[d] + k[d] > sum_hi:
                if d == 0:
                    break
                d -= 1
                continue
            ksum[d + 1] = ksum[d] + k[d]
            hpart[d + 1] = hpart[d] + qlog[k[d]]
            d += 1
            if d < last:
                k[d] = klo[d] - 1
    if not found:
        return None, INFINITY, count
    tot = 0.0
    for i in range(n):
        tot += best_k[i]
    tot *= step
    return [best_k[i] * step / tot for i in range(n)], best_gap, count


def segment_bisect(start, end, double target, double tol, int max_iter=200):
    cdef double a[MAXN]
    cdef double b[MAXN]
    cdef double p[MAXN]
    cdef int n = _load(start, a)
    _load(end, b)
    cdef double lo = 0.0, hi = 1.0, t, h
    cdef int i, it
    for i in range(n):
        p[i] = b[i]
    for it in range(1, max_iter + 1):
        t = 0.5 * (lo + hi)
        h = 0.0
        for i in range(n):
            p[i] = a[i] + t * (b[i] - a[i])
            if p[i] > 0.0:
                h -= p[i] * log(p[i])
        if fabs(h - target) <= tol:
            return [p[i] for i in range(n)], it, True
        if h >= target:
            hi = t
        else:
            lo = t
    return [p[i] for i in range(n)], max_iter, False
