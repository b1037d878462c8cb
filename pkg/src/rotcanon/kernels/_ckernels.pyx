# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` function by function."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

cdef enum:
    CMP_NONE = 0
    CMP_MIN = 1
    CMP_EQ = 2


cdef int* _to_c(object seq, Py_ssize_t size) except NULL:
    cdef int* buf = <int*> malloc((size if size > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


cdef int _count_faces(int* rot, int m2, char* seen):
    cdef int d, e, faces = 0
    memset(seen, 0, m2)
    for d in range(m2):
        if seen[d]:
            continue
        faces += 1
        e = d
        while not seen[e]:
            seen[e] = 1
            e = rot[e ^ 1]
    return faces


def count_faces(rot):
    cdef Py_ssize_t m2 = len(rot)
    cdef int* r = _to_c(rot, m2)
    cdef char* seen = <char*> malloc(m2 + 1)
    cdef int res
    try:
        res = _count_faces(r, <int> m2, seen)
    finally:
        free(r)
        free(seen)
    return res


def code_walk(start, rot, tail, head, dist, int n, target, int mode):
    cdef Py_ssize_t m2 = len(rot)
    cdef int* r = _to_c(rot, m2)
    cdef int* tl = _to_c(tail, m2)
    cdef int* hd = _to_c(head, m2)
    cdef int* ds = _to_c(dist, <Py_ssize_t> n * n)
    cdef int* tg = NULL
    cdef char* in_tree = <char*> calloc((m2 >> 1) + 1, 1)
    cdef int* rank = <int*> calloc(n + 1, sizeof(int))
    cdef int* code = <int*> malloc((2 * m2 + 4) * sizeof(int))
    cdef int* darts = <int*> malloc((m2 + 2) * sizeof(int))
    cdef int st = start
    cdef int a, s, w, dw, k, x, rk, t, nxt, pos, steps, side
    cdef bint less = False, lost = False
    try:
        if mode != CMP_NONE:
            tg = _to_c(target, 2 * m2)
        s = tl[st]
        a = st
        while True:
            in_tree[a >> 1] = 1
            a = r[a]
            if a == st:
                break
        for w in range(n):
            dw = ds[s * n + w]
            if dw < 2:
                continue
            a = st
            for k in range(dw - 1):
                while ds[tl[a] * n + w] <= ds[hd[a] * n + w]:
                    a = r[a]
                a = r[a ^ 1]
            while hd[a] != w:
                a = r[a]
            in_tree[a >> 1] = 1

        nxt = 1
        pos = 0
        steps = 0
        a = st
        while True:
            for side in range(2):
                x = tl[a] if side == 0 else hd[a]
                rk = rank[x]
                if rk == 0:
                    rk = nxt
                    rank[x] = nxt
                    nxt += 1
                if mode != CMP_NONE and not less:
                    t = tg[pos]
                    if rk != t:
                        if mode == CMP_EQ or rk > t:
                            lost = True
                            break
                        less = True
                code[pos] = rk
                pos += 1
            if lost:
                break
            darts[steps] = a
            steps += 1
            if in_tree[a >> 1]:
                a = r[a ^ 1]
            else:
                a = r[a]
            if a == st or steps > m2:
                break
        if lost:
            return None
        return [code[k] for k in range(pos)], [darts[k] for k in range(steps)]
    finally:
        free(r)
        free(tl)
        free(hd)
        free(ds)
        if tg != NULL:
            free(tg)
        free(in_tree)
        free(rank)
        free(code)
        free(darts)


cdef bint _connected_rest(int n, int* off, int* nb, char* removed, int remaining,
                          char* seen, int* stack):
    cdef int start = 0, top = 0, count = 1, v, u, k
    if remaining == 0:
        return True
    while removed[start]:
        start += 1
    memset(seen, 0, n)
    seen[start] = 1
    stack[top] = start
    top = 1
    while top > 0:
        top -= 1
        v = stack[top]
        for k in range(off[v], off[v + 1]):
            u = nb[k]
            if not seen[u] and not removed[u]:
                seen[u] = 1
                count += 1
                stack[top] = u
                top += 1
    return count == remaining


def connectivity_level(int n, offsets, nbrs):
    cdef int* off = _to_c(offsets, n + 1)
    cdef int* nb = _to_c(nbrs, len(nbrs))
    cdef char* removed = <char*> calloc(n + 1, 1)
    cdef char* seen = <char*> calloc(n + 1, 1)
    cdef int* stack = <int*> malloc((n + 1) * sizeof(int))
    cdef int v, u
    try:
        if n == 0 or not _connected_rest(n, off, nb, removed, n, seen, stack):
            return 0
        if n <= 1:
            return 0
        if n <= 2:
            return 1
        for v in range(n):
            removed[v] = 1
            if not _connected_rest(n, off, nb, removed, n - 1, seen, stack):
                return 1
            removed[v] = 0
        if n <= 3:
            return 2
        for v in range(n):
            removed[v] = 1
            for u in range(v + 1, n):
                removed[u] = 1
                if not _connected_rest(n, off, nb, removed, n - 2, seen, stack):
                    return 2
                removed[u] = 0
            removed[v] = 0
        return 3
    finally:
        free(off)
        free(nb)
        free(removed)
        free(seen)
        free(stack)


cdef struct Search:
    int m2
    int target
    int mode
    int max_results
    int n_results
    long long nodes
    long long max_nodes
    bint prune
    int* tail
    int* deg
    int* fan_off
    int* fan_flat
    char* adj
    int n
    int* rot
    char* used
    char* closed
    int* onface
    int* stack
    int top
    int fstart


cdef inline void _push(Search* S, int e):
    S.stack[S.top] = e
    S.top += 1
    S.onface[S.tail[e]] += 1


cdef inline void _pop(Search* S):
    S.top -= 1
    S.onface[S.tail[S.stack[S.top]]] -= 1


cdef bint _closes_early(Search* S, int x, int c):
    cdef int y = c, cnt = 1
    while S.rot[y] >= 0:
        y = S.rot[y]
        cnt += 1
    return y == x and cnt < S.deg[x]


cdef bint _admissible(Search* S, int e, int s):
    cdef int w = S.tail[e ^ 1], v, k, u
    if w == s or S.mode < 1:
        return True
    if S.onface[w]:
        return False
    if S.mode >= 2:
        v = S.tail[e]
        for k in range(S.fan_off[w], S.fan_off[w + 1]):
            u = S.tail[S.fan_flat[k] ^ 1]
            if S.onface[u] and u != v and u != s:
                return False
    return True


cdef int _close(Search* S, list results, int nclosed, int cdarts) except -1:
    cdef int k, d0, old, stop
    nclosed += 1
    cdarts += S.top - S.fstart
    if cdarts == S.m2:
        if nclosed == S.target:
            results.append([S.rot[k] for k in range(S.m2)])
            S.n_results += 1
        return S.n_results >= S.max_results
    if S.prune and nclosed + (S.m2 - cdarts) // 3 < S.target:
        return 0
    old = S.fstart
    for k in range(old, S.top):
        S.closed[S.stack[k]] = 1
        S.onface[S.tail[S.stack[k]]] -= 1
    S.fstart = S.top
    d0 = 0
    while S.closed[d0]:
        d0 += 1
    _push(S, d0)
    stop = _extend(S, results, d0, d0, nclosed, cdarts)
    _pop(S)
    S.fstart = old
    for k in range(old, S.top):
        S.closed[S.stack[k]] = 0
        S.onface[S.tail[S.stack[k]]] += 1
    return stop


cdef int _extend(Search* S, list results, int d0, int e, int nclosed, int cdarts) except -1:
    cdef int s = S.tail[d0], pushed = 0, stop = 0, x, r, w, flen, k, c, lo, hi
    cdef int single = -1
    cdef bint simple = S.mode >= 1, induced = S.mode >= 2
    S.nodes += 1
    if S.nodes > S.max_nodes:
        return 1
    while True:
        x = e ^ 1
        r = S.rot[x]
        w = S.tail[x]
        flen = S.top - S.fstart
        if r >= 0:
            if r == d0:
                stop = _close(S, results, nclosed, cdarts)
                break
            if simple and w == s:
                break
            if induced and flen >= 2 and S.adj[w * S.n + s] and S.tail[r ^ 1] != s:
                break
            if not _admissible(S, r, s):
                break
            _push(S, r)
            pushed += 1
            e = r
            continue
        if S.prune and nclosed + 1 + (S.m2 - cdarts - (flen if flen > 3 else 3)) // 3 < S.target:
            break
        lo = S.fan_off[w]
        hi = S.fan_off[w + 1]
        if simple and w == s:
            single = d0
        elif induced and flen >= 2 and S.adj[w * S.n + s]:
            # a chord back to the start vertex must close the face now
            for k in range(lo, hi):
                if S.tail[S.fan_flat[k] ^ 1] == s:
                    single = S.fan_flat[k]
        if single >= 0:
            lo = 0
            hi = 1
        for k in range(lo, hi):
            c = single if single >= 0 else S.fan_flat[k]
            if c == x or S.used[c] or _closes_early(S, x, c):
                continue
            if c != d0 and not _admissible(S, c, s):
                continue
            S.rot[x] = c
            S.used[c] = 1
            if c == d0:
                stop = _close(S, results, nclosed, cdarts)
            else:
                _push(S, c)
                stop = _extend(S, results, d0, c, nclosed, cdarts)
                _pop(S)
            S.rot[x] = -1
            S.used[c] = 0
            if stop:
                break
        break
    for k in range(pushed):
        _pop(S)
    return stop


def planar_rotations(fans, int m2, int target, int max_results, long long max_nodes, int face_mode=0):
    cdef Search S
    cdef Py_ssize_t nv = len(fans), i, total = 0
    cdef int p, kdeg, d, v
    cdef list results = []
    if m2 == 0:
        return [[]], True
    for fan in fans:
        total += len(fan)
    S.m2 = m2
    S.n = <int> nv
    S.target = target
    S.mode = face_mode
    S.max_results = max_results
    S.n_results = 0
    S.nodes = 0
    S.max_nodes = max_nodes
    S.prune = m2 > 2
    S.tail = <int*> malloc(m2 * sizeof(int))
    S.deg = <int*> malloc(m2 * sizeof(int))
    S.fan_off = <int*> malloc((nv + 1) * sizeof(int))
    S.fan_flat = <int*> malloc((total + 1) * sizeof(int))
    S.adj = <char*> calloc(nv * nv + 1, 1)
    S.rot = <int*> malloc(m2 * sizeof(int))
    S.used = <char*> calloc(m2, 1)
    S.closed = <char*> calloc(m2, 1)
    S.onface = <int*> calloc(nv + 1, sizeof(int))
    S.stack = <int*> malloc((m2 + 1) * sizeof(int))
    S.top = 0
    S.fstart = 0
    try:
        total = 0
        for i in range(nv):
            S.fan_off[i] = total
            fan = fans[i]
            kdeg = len(fan)
            for p in range(kdeg):
                d = fan[p]
                S.fan_flat[total + p] = d
                S.tail[d] = <int> i
                S.deg[d] = kdeg
            total += kdeg
        S.fan_off[nv] = total
        for d in range(m2):
            S.rot[d] = -1
            S.adj[S.tail[d] * nv + S.tail[d ^ 1]] = 1
        for v in range(nv):
            kdeg = S.fan_off[v + 1] - S.fan_off[v]
            if 0 < kdeg <= 2:
                for p in range(kdeg):
                    d = S.fan_flat[S.fan_off[v] + (p + 1) % kdeg]
                    S.rot[S.fan_flat[S.fan_off[v] + p]] = d
                    S.used[d] = 1
        _push(&S, 0)
        _extend(&S, results, 0, 0, 0, 0)
        return results, S.nodes <= S.max_nodes
    finally:
        free(S.tail)
        free(S.deg)
        free(S.fan_off)
        free(S.fan_flat)
        free(S.adj)
        free(S.rot)
        free(S.used)
        free(S.closed)
        free(S.onface)
        free(S.stack)
