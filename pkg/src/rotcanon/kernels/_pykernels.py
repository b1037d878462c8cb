"""Pure-Python hot kernels.

All kernels work on integer-indexed darts: edge ``k`` owns darts ``2k`` and
``2k + 1`` which are reverses of each other, so ``rev(d) == d ^ 1``.
``rot[d]`` is the successor of dart ``d`` in the fan around its tail.
Distance tables are flattened row-major ``n * n`` arrays with ``-1`` for
unreachable pairs.

The compiled module ``_ckernels`` implements the same functions with the same
signatures and must return identical results.
"""

CMP_NONE = 0
CMP_MIN = 1
CMP_EQ = 2


def count_faces(rot):
    """Number of orbits of the face permutation ``d -> rot[d ^ 1]``."""
    m2 = len(rot)
    seen = bytearray(m2)
    faces = 0
    for d in range(m2):
        if seen[d]:
            continue
        faces += 1
        e = d
        while not seen[e]:
            seen[e] = 1
            e = rot[e ^ 1]
    return faces


def code_walk(start, rot, tail, head, dist, n, target, mode):
    """Canonical spanning tree, edge list and first-occurrence renaming.

    Returns ``(code, darts)`` where ``code`` is the flattened list of ranks
    (two per dart) and ``darts`` the traversal order, or ``None`` when
    ``mode`` requests early abort and the code is known to lose against
    ``target`` (``CMP_MIN``: lexicographically larger; ``CMP_EQ``: different).
    A ``darts`` list shorter or longer than ``len(rot)`` signals a corrupt
    rotation; the caller checks it.
    """
    m2 = len(rot)
    in_tree = bytearray(m2 >> 1)
    s = tail[start]

    a = start
    while True:
        in_tree[a >> 1] = 1
        a = rot[a]
        if a == start:
            break

    base_s = s * n
    for w in range(n):
        dw = dist[base_s + w]
        if dw < 2:
            continue
        a = start
        for _ in range(dw - 1):
            while dist[tail[a] * n + w] <= dist[head[a] * n + w]:
                a = rot[a]
            a = rot[a ^ 1]
        while head[a] != w:
            a = rot[a]
        in_tree[a >> 1] = 1

    rank = [0] * n
    nxt = 1
    code = []
    darts = []
    pos = 0
    less = False
    a = start
    steps = 0
    while True:
        for x in (tail[a], head[a]):
            r = rank[x]
            if r == 0:
                r = rank[x] = nxt
                nxt += 1
            if mode and not less:
                t = target[pos]
                if r != t:
                    if mode == CMP_EQ or r > t:
                        return None
                    less = True
            code.append(r)
            pos += 1
        darts.append(a)
        steps += 1
        if in_tree[a >> 1]:
            a = rot[a ^ 1]
        else:
            a = rot[a]
        if a == start or steps > m2:
            break
    return code, darts


def connectivity_level(n, offsets, nbrs):
    """Vertex connectivity capped at 3, by exhaustive removal.

    ``nbrs[offsets[v]:offsets[v + 1]]`` lists the neighbours of ``v``.
    """
    removed = bytearray(n)

    def connected_rest(remaining):
        if remaining == 0:
            return True
        start = 0
        while removed[start]:
            start += 1
        seen = bytearray(n)
        seen[start] = 1
        stack = [start]
        count = 1
        while stack:
            v = stack.pop()
            for k in range(offsets[v], offsets[v + 1]):
                u = nbrs[k]
                if not seen[u] and not removed[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        return count == remaining

    if n == 0 or not connected_rest(n):
        return 0
    if n <= 1:
        return 0
    if n <= 2:
        return 1
    for v in range(n):
        removed[v] = 1
        ok = connected_rest(n - 1)
        removed[v] = 0
        if not ok:
            return 1
    if n <= 3:
        return 2
    for v in range(n):
        removed[v] = 1
        for u in range(v + 1, n):
            removed[u] = 1
            ok = connected_rest(n - 2)
            removed[u] = 0
            if not ok:
                removed[v] = 0
                return 2
        removed[v] = 0
    return 3


FACES_ANY = 0
FACES_SIMPLE = 1
FACES_INDUCED = 2


def planar_rotations(fans, m2, target, max_results, max_nodes, face_mode=FACES_ANY):
    """Enumerate rotations with ``target`` faces by face-driven backtracking.

    ``fans[v]`` lists the darts leaving vertex ``v``. Faces are traced one at
    a time; whenever a face walk reaches a dart whose successor is undecided,
    each admissible successor is tried. Fans of degree <= 2 are forced.
    Faces of a simple graph with more than one edge have length >= 3, so a
    branch is cut once the closed faces plus a third of the remaining darts
    fall short of ``target``. ``face_mode`` adds structural cuts that are
    valid for planar rotations only: ``FACES_SIMPLE`` (2-connected input, no
    face revisits a vertex) and ``FACES_INDUCED`` (3-connected input, every
    face is a chordless cycle). Returns ``(results, complete)`` where
    ``complete`` is False when the node budget ran out.
    """
    n = len(fans)
    tail = [0] * m2
    for v, fan in enumerate(fans):
        for d in fan:
            tail[d] = v
    deg = [len(fans[tail[d]]) for d in range(m2)]
    nbrs = [{tail[d ^ 1] for d in fan} for fan in fans]
    rot = [-1] * m2
    used = bytearray(m2)
    for fan in fans:
        k = len(fan)
        if 0 < k <= 2:
            for p in range(k):
                rot[fan[p]] = fan[(p + 1) % k]
                used[fan[(p + 1) % k]] = 1
    closed = bytearray(m2)
    onface = [0] * n
    face = []
    results = []
    nodes = [0]
    prune = m2 > 2
    simple = face_mode >= FACES_SIMPLE
    induced = face_mode >= FACES_INDUCED

    def dart_to(w, s):
        for d in fans[w]:
            if tail[d ^ 1] == s:
                return d
        return -1

    def closes_early(x, c):
        y = c
        cnt = 1
        while rot[y] >= 0:
            y = rot[y]
            cnt += 1
        return y == x and cnt < deg[x]

    def admissible(e, s):
        w = tail[e ^ 1]
        if w == s or not simple:
            return True
        if onface[w]:
            return False
        if induced:
            v = tail[e]
            for u in nbrs[w]:
                if onface[u] and u != v and u != s:
                    return False
        return True

    def push(e):
        face.append(e)
        onface[tail[e]] += 1

    def pop():
        e = face.pop()
        onface[tail[e]] -= 1

    def close(nclosed, cdarts):
        nclosed += 1
        cdarts += len(face)
        if cdarts == m2:
            if nclosed == target:
                results.append(list(rot))
            return len(results) >= max_results
        if prune and nclosed + (m2 - cdarts) // 3 < target:
            return False
        saved = face[:]
        for e in saved:
            closed[e] = 1
            onface[tail[e]] -= 1
        face.clear()
        d0 = 0
        while closed[d0]:
            d0 += 1
        push(d0)
        stop = extend(d0, d0, nclosed, cdarts)
        pop()
        for e in saved:
            closed[e] = 0
            onface[tail[e]] += 1
        face[:] = saved
        return stop

    def extend(d0, e, nclosed, cdarts):
        nodes[0] += 1
        if nodes[0] > max_nodes:
            return True
        s = tail[d0]
        pushed = 0
        stop = False
        while True:
            x = e ^ 1
            r = rot[x]
            if r >= 0:
                if r == d0:
                    stop = close(nclosed, cdarts)
                    break
                if simple and tail[x] == s:
                    break
                if induced and len(face) >= 2 and s in nbrs[tail[x]] and tail[r ^ 1] != s:
                    break
                if not admissible(r, s):
                    break
                push(r)
                pushed += 1
                e = r
                continue
            if prune and nclosed + 1 + (m2 - cdarts - max(len(face), 3)) // 3 < target:
                break
            w = tail[x]
            if simple and w == s:
                cands = (d0,)
            elif induced and len(face) >= 2 and s in nbrs[w]:
                # a chord back to the start vertex must close the face now
                cands = (dart_to(w, s),)
            else:
                cands = fans[w]
            for c in cands:
                if c == x:
                    continue
                if used[c] or closes_early(x, c):
                    continue
                if c != d0 and not admissible(c, s):
                    continue
                rot[x] = c
                used[c] = 1
                if c == d0:
                    stop = close(nclosed, cdarts)
                else:
                    push(c)
                    stop = extend(d0, c, nclosed, cdarts)
                    pop()
                rot[x] = -1
                used[c] = 0
                if stop:
                    break
            break
        for _ in range(pushed):
            pop()
        return stop

    if m2 == 0:
        return [[]], True
    push(0)
    extend(0, 0, 0, 0)
    pop()
    return results, nodes[0] <= max_nodes
