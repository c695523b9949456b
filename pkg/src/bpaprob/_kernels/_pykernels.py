"""Pure-Python kernels. Reference behaviour for the compiled twin in
``_ckernels.pyx``; both modules expose identical signatures.

All entropies here are in nats.
"""

from __future__ import annotations

import math
from math import log

FEAS_EPS = 1e-12
TIE_EPS = 1e-12


def _h(x):
    return -x * log(x) if x > 0.0 else 0.0


def entropy_nats(p):
    s = 0.0
    for x in p:
        if x > 0.0:
            s -= x * log(x)
    return s


def waterfill(lower, upper, max_iter=200, tol=1e-12):
    """Clamp-to-level maximizer of entropy over ``{lower <= p <= upper, sum p = 1}``.

    Returns ``(p, iterations)``.
    """
    n = len(lower)
    lo = min(lower)
    hi = max(upper)
    c = 0.5 * (lo + hi)
    it = 0
    while it < max_iter:
        it += 1
        c = 0.5 * (lo + hi)
        s = 0.0
        for i in range(n):
            s += lower[i] if c < lower[i] else (upper[i] if c > upper[i] else c)
        if abs(s - 1.0) <= tol:
            break
        if s < 1.0:
            lo = c
        else:
            hi = c
    # solve the level exactly on the active set found by bisection
    fixed = 0.0
    nfree = 0
    for i in range(n):
        if lower[i] < c < upper[i]:
            nfree += 1
        else:
            fixed += lower[i] if c <= lower[i] else upper[i]
    if nfree:
        c2 = (1.0 - fixed) / nfree
        ok = True
        for i in range(n):
            if lower[i] < c < upper[i] and not lower[i] <= c2 <= upper[i]:
                ok = False
                break
        if ok:
            c = c2
    p = [lower[i] if c < lower[i] else (upper[i] if c > upper[i] else c) for i in range(n)]
    return p, it


def min_entropy_vertex(lower, upper):
    """Exact minimum of entropy over the vertices of the box-simplex polytope.

    A vertex has every coordinate but one (``j``) at a bound. Branch and bound
    over bound assignments, pruned by sum feasibility and by an entropy lower
    bound. Ties within ``TIE_EPS`` go to the lexicographically smallest vector.
    Returns ``(p, entropy, leaves_visited)``.
    """
    n = len(lower)
    best = [math.inf, None]
    visited = 0
    hmin = [min(_h(lower[i]), _h(upper[i])) for i in range(n)]
    p = [0.0] * n

    for j in range(n):
        others = [i for i in range(n) if i != j]
        m = len(others)
        suf_lo = [0.0] * (m + 1)
        suf_hi = [0.0] * (m + 1)
        suf_h = [0.0] * (m + 1)
        for k in range(m - 1, -1, -1):
            i = others[k]
            suf_lo[k] = suf_lo[k + 1] + lower[i]
            suf_hi[k] = suf_hi[k + 1] + upper[i]
            suf_h[k] = suf_h[k + 1] + hmin[i]
        need_lo = 1.0 - upper[j]
        need_hi = 1.0 - lower[j]
        lj, uj, hj = lower[j], upper[j], hmin[j]

        def rec(k, s, h):
            nonlocal visited
            if s + suf_lo[k] > need_hi + FEAS_EPS or s + suf_hi[k] < need_lo - FEAS_EPS:
                return
            if h + suf_h[k] + hj > best[0] + TIE_EPS:
                return
            if k == m:
                r = 1.0 - s
                if r < lj - FEAS_EPS or r > uj + FEAS_EPS:
                    return
                r = r if r > 0.0 else 0.0
                p[j] = r
                visited += 1
                tot = h + _h(r)
                if tot < best[0] - TIE_EPS:
                    best[0], best[1] = tot, list(p)
                elif tot <= best[0] + TIE_EPS and p < best[1]:
                    best[0], best[1] = min(tot, best[0]), list(p)
                return
            i = others[k]
            v = lower[i]
            p[i] = v
            rec(k + 1, s + v, h + _h(v))
            if upper[i] != lower[i]:
                v = upper[i]
                p[i] = v
                rec(k + 1, s + v, h + _h(v))

        rec(0, 0.0, 0.0)

    vec = best[1]
    return vec, entropy_nats(vec), visited


def grid_search(lower, upper, step, target):
    """Brute-force scan of grid points ``k * step`` inside the box whose sum is
    within ``step / 2`` of one. Each candidate is renormalized before its
    entropy is compared with ``target``. Returns ``(p, gap, count)``;
    ``p`` is None when no grid point lies in the box.
    """
    n = len(lower)
    eps = 1e-9
    klo = [max(0, math.ceil((lower[i] - eps) / step)) for i in range(n)]
    khi = [math.floor((upper[i] + eps) / step) for i in range(n)]
    sum_lo = (1.0 - step / 2.0) / step - eps
    sum_hi = (1.0 + step / 2.0) / step + eps
    best_gap = math.inf
    best_k = None
    count = 0
    k = [0] * n
    last = n - 1
    qlog = [0.0] * (max(khi) + 2 if khi else 1)
    for t in range(len(qlog)):
        q = t * step
        qlog[t] = -q * log(q) if q > 0.0 else 0.0

    def rec(d, ksum, hpart):
        nonlocal best_gap, best_k, count
        if d == last:
            a = max(klo[last], math.ceil(sum_lo - ksum))
            b = min(khi[last], math.floor(sum_hi - ksum))
            for kk in range(a, b + 1):
                count += 1
                tot = (ksum + kk) * step
                h = (hpart + qlog[kk]) / tot + log(tot)
                g = abs(target - h)
                if g < best_gap:
                    best_gap = g
                    k[last] = kk
                    best_k = list(k)
            return
        for kk in range(klo[d], khi[d] + 1):
            if ksum + kk > sum_hi:
                break
            k[d] = kk
            rec(d + 1, ksum + kk, hpart + qlog[kk])

    rec(0, 0, 0.0)
    if best_k is None:
        return None, math.inf, count
    tot = sum(best_k) * step
    return [kk * step / tot for kk in best_k], best_gap, count


def segment_bisect(start, end, target, tol, max_iter=200):
    """Point on ``start -> end`` whose entropy equals ``target``.

    Entropy is concave along the segment, below ``target`` at ``start`` and
    above it at ``end``, so ``entropy >= target`` switches once from false to
    true. Returns ``(p, iterations, converged)``.
    """
    n = len(start)
    lo, hi = 0.0, 1.0
    p = list(end)
    for it in range(1, max_iter + 1):
        t = 0.5 * (lo + hi)
        p = [start[i] + t * (end[i] - start[i]) for i in range(n)]
        h = entropy_nats(p)
        if abs(h - target) <= tol:
            return p, it, True
        if h >= target:
            hi = t
        else:
            lo = t
    return p, max_iter, False
