"""Numba-compiled inner loops over CSR arrays.

Everything here is deterministic given its integer seed: randomness comes
from numba's MT19937 stream, reseeded at each entry point. The two-key
binary heaps break ties exactly as the callers document (primary key
ascending, then vertex id ascending), which keeps runs reproducible.
"""

from __future__ import annotations

import numpy as np
from numba import njit


# ---------------------------------------------------------------------------
# heap with (key, id) entries; pops the lexicographic minimum
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _heap_less(hk, hv, i, j):
    if hk[i] != hk[j]:
        return hk[i] < hk[j]
    return hv[i] < hv[j]


@njit(cache=True)
def _heap_push(hk, hv, size, key, val):
    hk[size] = key
    hv[size] = val
    i = size
    while i > 0:
        parent = (i - 1) >> 1
        if _heap_less(hk, hv, i, parent):
            hk[i], hk[parent] = hk[parent], hk[i]
            hv[i], hv[parent] = hv[parent], hv[i]
            i = parent
        else:
            break
    return size + 1


@njit(cache=True)
def _heap_pop(hk, hv, size):
    key = hk[0]
    val = hv[0]
    size -= 1
    hk[0] = hk[size]
    hv[0] = hv[size]
    i = 0
    while True:
        left = 2 * i + 1
        if left >= size:
            break
        small = left
        right = left + 1
        if right < size and _heap_less(hk, hv, right, left):
            small = right
        if _heap_less(hk, hv, small, i):
            hk[i], hk[small] = hk[small], hk[i]
            hv[i], hv[small] = hv[small], hv[i]
            i = small
        else:
            break
    return key, val, size


# ---------------------------------------------------------------------------
# deletion bookkeeping
# ---------------------------------------------------------------------------


@njit(cache=True)
def delete_vertices(indptr, indices, alive, live_degree, verts):
    for i in range(verts.shape[0]):
        alive[verts[i]] = False
    for i in range(verts.shape[0]):
        u = verts[i]
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if alive[v]:
                live_degree[v] -= 1


@njit(cache=True)
def degree_cascade(indptr, indices, alive, live_degree, threshold, queue, qhead, qtail, in_queue, max_removals):
    """Pop queued vertices, delete them, and enqueue neighbors that drop
    below the threshold. Stops after ``max_removals`` so the caller can
    check its deadline between chunks."""
    removed = np.empty(max_removals, np.int64)
    cnt = 0
    while qhead < qtail and cnt < max_removals:
        u = queue[qhead]
        qhead += 1
        if not alive[u]:
            continue
        alive[u] = False
        removed[cnt] = u
        cnt += 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if alive[v]:
                live_degree[v] -= 1
                if live_degree[v] < threshold and not in_queue[v]:
                    in_queue[v] = True
                    queue[qtail] = v
                    qtail += 1
    return removed[:cnt].copy(), qhead, qtail


# ---------------------------------------------------------------------------
# upper bounds: smallest-last greedy and DSatur
# ---------------------------------------------------------------------------


@njit(cache=True)
def degeneracy_color_core(indptr, indices, alive, live_degree, n_alive, ub, usedcol):
    """Peel minimum-uncolored-degree vertices (ties: smaller id), then color
    in reverse peel order with the smallest feasible color.

    Returns (ok, colors, count); ok == 0 means the usedcol + count >= ub
    early exit fired and colors must be ignored.
    """
    n = alive.shape[0]
    udeg = live_degree.copy()
    cap = n_alive + indices.shape[0] + 1
    hk = np.empty(cap, np.int64)
    hv = np.empty(cap, np.int64)
    hsize = 0
    for u in range(n):
        if alive[u]:
            hsize = _heap_push(hk, hv, hsize, udeg[u], u)
    order = np.empty(n_alive, np.int64)
    peeled = np.zeros(n, np.bool_)
    cnt = 0
    while cnt < n_alive:
        key, u, hsize = _heap_pop(hk, hv, hsize)
        if peeled[u] or key != udeg[u]:
            continue
        peeled[u] = True
        order[cnt] = u
        cnt += 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if alive[v] and not peeled[v]:
                udeg[v] -= 1
                hsize = _heap_push(hk, hv, hsize, udeg[v], v)

    colors = np.full(n, -1, np.int64)
    mark = np.full(n_alive + 2, -1, np.int64)
    col_cnt = 0
    for i in range(n_alive - 1, -1, -1):
        u = order[i]
        for j in range(indptr[u], indptr[u + 1]):
            c = colors[indices[j]]
            if c >= 0:
                mark[c] = u
        c = 0
        while mark[c] == u:
            c += 1
        colors[u] = c
        if c == col_cnt:
            col_cnt += 1
            if usedcol + col_cnt >= ub:
                return 0, colors, col_cnt
    return 1, colors, col_cnt


@njit(cache=True, inline="always")
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _count_feasible(row, col_cnt):
    """Open colors not forbidden in the bitset row."""
    full = col_cnt >> 6
    rem = col_cnt & 63
    feas = 0
    for w in range(full):
        feas += 64 - _popcount64(row[w])
    if rem > 0:
        m = (np.uint64(1) << np.uint64(rem)) - np.uint64(1)
        feas += rem - _popcount64(row[full] & m)
    return feas


@njit(cache=True)
def _pick_free_color(row, col_cnt, r):
    """The r-th (0-based) open color whose bit is clear in the row."""
    c = 0
    while c < col_cnt:
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        if row[w] & bit == np.uint64(0):
            if r == 0:
                return c
            r -= 1
        c += 1
    return -1


@njit(cache=True)
def dsatur_color_core(indptr, indices, alive, live_degree, n_alive, ub, usedcol, seed):
    """DSatur: color the max-saturation vertex (ties: larger live degree,
    then smaller id) with a uniformly random feasible open color, opening a
    new color only when forced. Same early exit as the greedy colorer."""
    np.random.seed(seed)
    n = alive.shape[0]
    nn = np.int64(n + 1)
    colors = np.full(n, -1, np.int64)
    sat = np.zeros(n, np.int64)
    words = 4
    nbits = np.zeros((n, words), np.uint64)

    cap = n_alive + indices.shape[0] + 1
    hk = np.empty(cap, np.int64)
    hv = np.empty(cap, np.int64)
    hsize = 0
    for u in range(n):
        if alive[u]:
            key = np.int64(n) * nn + np.int64(n - live_degree[u])
            hsize = _heap_push(hk, hv, hsize, key, u)

    col_cnt = 0
    colored = 0
    while colored < n_alive:
        key, u, hsize = _heap_pop(hk, hv, hsize)
        if colors[u] >= 0:
            continue
        if key != np.int64(n - sat[u]) * nn + np.int64(n - live_degree[u]):
            continue
        feas = _count_feasible(nbits[u], col_cnt)
        if feas == 0:
            c = col_cnt
            col_cnt += 1
            if usedcol + col_cnt >= ub:
                return 0, colors, col_cnt
            if col_cnt > words * 64:
                grown = np.zeros((n, words * 2), np.uint64)
                grown[:, :words] = nbits
                nbits = grown
                words *= 2
        else:
            r = np.random.randint(0, feas)
            c = _pick_free_color(nbits[u], col_cnt, r)
        colors[u] = c
        colored += 1
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if alive[v] and colors[v] < 0:
                if nbits[v, w] & bit == np.uint64(0):
                    nbits[v, w] |= bit
                    sat[v] += 1
                    nkey = np.int64(n - sat[v]) * nn + np.int64(n - live_degree[v])
                    hsize = _heap_push(hk, hv, hsize, nkey, v)
    return 1, colors, col_cnt


# ---------------------------------------------------------------------------
# lower bound: randomized maximal clique growth
# ---------------------------------------------------------------------------


@njit(cache=True)
def find_clique_core(indptr, indices, alive, n_alive, n_seeds, sample_size, lb, usedcol, seed):
    """Grow one maximal clique per random seed vertex, sampling up to
    sample_size candidates per step and keeping the one with the largest
    candidate-neighborhood overlap (ties: smaller id). A seed is abandoned
    once clique + candidates + usedcol can no longer beat lb."""
    np.random.seed(seed)
    n = alive.shape[0]
    alive_list = np.empty(n_alive, np.int64)
    k = 0
    for u in range(n):
        if alive[u]:
            alive_list[k] = u
            k += 1
    for i in range(n_seeds):
        j = i + np.random.randint(0, n_alive - i)
        tmp = alive_list[i]
        alive_list[i] = alive_list[j]
        alive_list[j] = tmp

    cand = np.empty(n_alive, np.int64)
    in_cand = np.zeros(n, np.int64)
    stamp = 0
    cur = np.empty(n_alive + 1, np.int64)
    best = np.empty(n_alive + 1, np.int64)
    best_len = 0

    for s in range(n_seeds):
        u0 = alive_list[s]
        cur[0] = u0
        cur_len = 1
        stamp += 1
        csize = 0
        for j in range(indptr[u0], indptr[u0 + 1]):
            v = indices[j]
            if alive[v]:
                cand[csize] = v
                csize += 1
                in_cand[v] = stamp
        while csize > 0 and cur_len + csize + usedcol > lb:
            snum = sample_size if csize > sample_size else csize
            best_v = -1
            best_score = -1
            for t in range(snum):
                jj = t + np.random.randint(0, csize - t)
                tmp = cand[t]
                cand[t] = cand[jj]
                cand[jj] = tmp
                x = cand[t]
                score = 0
                for j in range(indptr[x], indptr[x + 1]):
                    if in_cand[indices[j]] == stamp:
                        score += 1
                if score > best_score or (score == best_score and x < best_v):
                    best_score = score
                    best_v = x
            v = best_v
            cur[cur_len] = v
            cur_len += 1
            stamp += 1
            nsize = 0
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if in_cand[w] == stamp - 1:
                    cand[nsize] = w
                    nsize += 1
                    in_cand[w] = stamp
            csize = nsize
        if cur_len + usedcol > lb:
            lb = cur_len + usedcol
        if cur_len > best_len:
            best_len = cur_len
            for t in range(cur_len):
                best[t] = cur[t]
    return lb, best[:best_len].copy()


# ---------------------------------------------------------------------------
# independent set extraction
# ---------------------------------------------------------------------------


@njit(cache=True)
def extract_independent_set_core(indptr, indices, alive, live_degree, n_alive, p100, seed):
    """Repeatedly take the candidate with the largest candidate-restricted
    degree (ties: smaller id); skip it with probability p100/100, otherwise
    keep it and drop its neighbors. Forces the last popped vertex in if
    every pick was skipped."""
    np.random.seed(seed)
    n = alive.shape[0]
    in_cand = alive.copy()
    cdeg = live_degree.copy()
    p = p100 / 100.0

    cap = n_alive + indices.shape[0] + 1
    hk = np.empty(cap, np.int64)
    hv = np.empty(cap, np.int64)
    hsize = 0
    for u in range(n):
        if in_cand[u]:
            hsize = _heap_push(hk, hv, hsize, np.int64(n - cdeg[u]), u)

    result = np.empty(n_alive, np.int64)
    rlen = 0
    last_popped = -1
    remaining = n_alive
    while remaining > 0:
        key, v, hsize = _heap_pop(hk, hv, hsize)
        if not in_cand[v] or key != np.int64(n - cdeg[v]):
            continue
        in_cand[v] = False
        remaining -= 1
        last_popped = v
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if in_cand[w]:
                cdeg[w] -= 1
                hsize = _heap_push(hk, hv, hsize, np.int64(n - cdeg[w]), w)
        take = True
        if p100 > 0:
            take = np.random.random() > p
        if take:
            result[rlen] = v
            rlen += 1
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if in_cand[w]:
                    in_cand[w] = False
                    remaining -= 1
                    for jj in range(indptr[w], indptr[w + 1]):
                        x = indices[jj]
                        if in_cand[x]:
                            cdeg[x] -= 1
                            hsize = _heap_push(hk, hv, hsize, np.int64(n - cdeg[x]), x)
    if rlen == 0:
        result[0] = last_popped
        rlen = 1
    return result[:rlen].copy()


# ---------------------------------------------------------------------------
# reconstruction helper
# ---------------------------------------------------------------------------


@njit(cache=True)
def assign_smallest_free(indptr, indices, colors, verts, k, mark):
    """Give each vertex (in order) the smallest color its colored neighbors
    leave open, opening a fresh color only when all k are blocked.
    ``mark`` must be an int64 scratch array of length > n, filled with -1
    on first use; it is stamped with vertex ids and can be reused."""
    for i in range(verts.shape[0]):
        u = verts[i]
        for j in range(indptr[u], indptr[u + 1]):
            c = colors[indices[j]]
            if c >= 0:
                mark[c] = u
        c = 0
        while c < k and mark[c] == u:
            c += 1
        colors[u] = c
        if c == k:
            k += 1
    return k
