"""Hot numeric kernels with two interchangeable implementations.

Every kernel exists as an explicit-loop version, compiled with numba when
available, and a vectorised pure-numpy version.  The public functions at the
bottom dispatch on :data:`eccspectra._accel.USE_NUMBA`; both variants are
importable directly (``*_loops`` / ``*_numpy``) for cross-checking and
benchmarking.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

# ---------------------------------------------------------------------------
# all-pairs BFS
# ---------------------------------------------------------------------------


def _bfs_loops(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[s, v] < 0:
                    dist[s, v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


def _bfs_numpy(indptr, indices, n):
    adj = np.zeros((n, n), dtype=np.int64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=np.int64)
    reached = frontier.astype(bool)
    step = 0
    while frontier.any():
        step += 1
        nxt = (frontier @ adj > 0) & ~reached
        dist[nxt] = step
        reached |= nxt
        frontier = nxt.astype(np.int64)
    return dist


# ---------------------------------------------------------------------------
# cyclic Jacobi
# ---------------------------------------------------------------------------


def _rotation(app, aqq, apq):
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    elif theta >= 0.0:
        t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
    else:
        t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    return t, c, t * c


def _jacobi_loops(a, rel_tol, max_sweeps):
    n = a.shape[0]
    a = a.copy()
    fro = np.sqrt(np.sum(a * a))
    off = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            off += a[i, j] * a[i, j]
    off = np.sqrt(2.0 * off)
    sweeps = 0
    while off > rel_tol * fro and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                t, c, s = _rotation(a[p, p], a[q, q], apq)
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[p, k] = a[k, p]
                        a[k, q] = s * akp + c * akq
                        a[q, k] = a[k, q]
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = np.sqrt(2.0 * off)
    values = np.empty(n)
    for i in range(n):
        values[i] = a[i, i]
    return values, sweeps, off, off <= rel_tol * fro


def _offdiag_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi_numpy(a, rel_tol, max_sweeps):
    n = a.shape[0]
    a = np.array(a, dtype=np.float64, copy=True)
    fro = float(np.linalg.norm(a))
    off = _offdiag_norm(a)
    sweeps = 0
    while off > rel_tol * fro and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                t, c, s = _rotation(app, aqq, apq)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
        off = _offdiag_norm(a)
    return np.diag(a).copy(), sweeps, off, off <= rel_tol * fro


# ---------------------------------------------------------------------------
# shifted power iteration
# ---------------------------------------------------------------------------


def _power_loops(a, shift, tol, max_iter):
    n = a.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    y = np.empty(n)
    it = 0
    converged = False
    while it < max_iter:
        it += 1
        norm = 0.0
        for i in range(n):
            acc = shift * x[i]
            for j in range(n):
                acc += a[i, j] * x[j]
            y[i] = acc
            norm += acc * acc
        norm = np.sqrt(norm)
        change = 0.0
        for i in range(n):
            y[i] /= norm
            change += (y[i] - x[i]) * (y[i] - x[i])
            x[i] = y[i]
        if np.sqrt(change) <= tol:
            converged = True
            break
    value = 0.0
    for i in range(n):
        acc = 0.0
        for j in range(n):
            acc += a[i, j] * x[j]
        value += x[i] * acc
    return value, x, it, converged


def _power_numpy(a, shift, tol, max_iter):
    n = a.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    converged = False
    it = 0
    while it < max_iter:
        it += 1
        y = a @ x + shift * x
        y /= np.linalg.norm(y)
        change = np.linalg.norm(y - x)
        x = y
        if change <= tol:
            converged = True
            break
    return float(x @ a @ x), x, it, converged


# ---------------------------------------------------------------------------
# determinant by elimination with partial pivoting
# ---------------------------------------------------------------------------


def _det_loops(a):
    n = a.shape[0]
    m = a.copy()
    det = 1.0
    for k in range(n):
        piv = k
        big = abs(m[k, k])
        for i in range(k + 1, n):
            if abs(m[i, k]) > big:
                big = abs(m[i, k])
                piv = i
        if big == 0.0:
            return 0.0
        if piv != k:
            for j in range(n):
                tmp = m[k, j]
                m[k, j] = m[piv, j]
                m[piv, j] = tmp
            det = -det
        det *= m[k, k]
        for i in range(k + 1, n):
            f = m[i, k] / m[k, k]
            for j in range(k, n):
                m[i, j] -= f * m[k, j]
    return det


def _det_numpy(a):
    m = np.array(a, dtype=np.float64, copy=True)
    n = m.shape[0]
    det = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(m[k:, k])))
        if m[piv, k] == 0.0:
            return 0.0
        if piv != k:
            m[[k, piv]] = m[[piv, k]]
            det = -det
        det *= m[k, k]
        m[k + 1:, k:] -= np.outer(m[k + 1:, k] / m[k, k], m[k, k:])
    return float(det)


# ---------------------------------------------------------------------------
# Pruefer enumeration with an integer AHU code per labelled tree
# ---------------------------------------------------------------------------
#
# Code of a rooted subtree: bit 1, the children's codes in ascending
# (length, value) order, bit 0.  Two centres: the smaller of both rootings.
# Exact for n <= 31 (2n bits in an int64).


def _rooted_int_code(n, head, nxt, to, root, order, parent, val, length, buf_len, buf_val):
    parent[root] = -1
    order[0] = root
    h = 0
    t = 1
    while h < t:
        u = order[h]
        h += 1
        e = head[u]
        while e >= 0:
            v = to[e]
            if v != parent[u]:
                parent[v] = u
                order[t] = v
                t += 1
            e = nxt[e]
    for idx in range(n - 1, -1, -1):
        u = order[idx]
        k = 0
        e = head[u]
        while e >= 0:
            v = to[e]
            if v != parent[u]:
                # insertion sort by (length, value)
                j = k
                while j > 0 and (buf_len[j - 1] > length[v] or (buf_len[j - 1] == length[v] and buf_val[j - 1] > val[v])):
                    buf_len[j] = buf_len[j - 1]
                    buf_val[j] = buf_val[j - 1]
                    j -= 1
                buf_len[j] = length[v]
                buf_val[j] = val[v]
                k += 1
            e = nxt[e]
        code = np.int64(1)
        size = 1
        for j in range(k):
            code = (code << buf_len[j]) | buf_val[j]
            size += buf_len[j]
        val[u] = code << 1
        length[u] = size + 1
    return val[root]


def _prufer_codes_loops(n):
    total = n ** (n - 2)
    out = np.empty(total, dtype=np.int64)
    seq = np.zeros(max(n - 2, 1), dtype=np.int64)
    degree = np.empty(n, dtype=np.int64)
    head = np.empty(n, dtype=np.int64)
    nxt = np.empty(2 * (n - 1), dtype=np.int64)
    to = np.empty(2 * (n - 1), dtype=np.int64)
    deg2 = np.empty(n, dtype=np.int64)
    removed = np.empty(n, dtype=np.bool_)
    layer = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    val = np.empty(n, dtype=np.int64)
    length = np.empty(n, dtype=np.int64)
    buf_len = np.empty(n, dtype=np.int64)
    buf_val = np.empty(n, dtype=np.int64)
    for idx in range(total):
        r = idx
        for i in range(n - 3, -1, -1):
            seq[i] = r % n
            r //= n
        for v in range(n):
            degree[v] = 1
            head[v] = -1
        for i in range(n - 2):
            degree[seq[i]] += 1
        ne = 0
        for i in range(n - 2):
            leaf = 0
            while degree[leaf] != 1:
                leaf += 1
            x = seq[i]
            to[ne] = x
            nxt[ne] = head[leaf]
            head[leaf] = ne
            ne += 1
            to[ne] = leaf
            nxt[ne] = head[x]
            head[x] = ne
            ne += 1
            degree[leaf] -= 1
            degree[x] -= 1
        u = -1
        w = -1
        for v in range(n):
            if degree[v] == 1:
                if u < 0:
                    u = v
                else:
                    w = v
        to[ne] = w
        nxt[ne] = head[u]
        head[u] = ne
        ne += 1
        to[ne] = u
        nxt[ne] = head[w]
        head[w] = ne
        # centres by leaf peeling
        remaining = n
        cnt = 0
        for v in range(n):
            removed[v] = False
            d = 0
            e = head[v]
            while e >= 0:
                d += 1
                e = nxt[e]
            deg2[v] = d
            if d <= 1:
                layer[cnt] = v
                cnt += 1
        while remaining > 2:
            new_cnt = 0
            for i in range(cnt):
                v = layer[i]
                removed[v] = True
                remaining -= 1
            for i in range(cnt):
                v = layer[i]
                e = head[v]
                while e >= 0:
                    y = to[e]
                    if not removed[y]:
                        deg2[y] -= 1
                        if deg2[y] == 1:
                            order[new_cnt] = y
                            new_cnt += 1
                    e = nxt[e]
            for i in range(new_cnt):
                layer[i] = order[i]
            cnt = new_cnt
        c1 = -1
        c2 = -1
        for v in range(n):
            if not removed[v]:
                if c1 < 0:
                    c1 = v
                else:
                    c2 = v
        best = _rooted_int_code(n, head, nxt, to, c1, order, parent, val, length, buf_len, buf_val)
        if c2 >= 0:
            other = _rooted_int_code(n, head, nxt, to, c2, order, parent, val, length, buf_len, buf_val)
            if other < best:
                best = other
        out[idx] = best
    return out


def _decode_batch(seq, n):
    """Adjacency stack ``(B, n, n)`` of the trees with Pruefer sequences ``seq``."""
    b = seq.shape[0]
    rows = np.arange(b)
    adj = np.zeros((b, n, n), dtype=bool)
    deg = np.ones((b, n), dtype=np.int64)
    for k in range(n - 2):
        deg[rows, seq[:, k]] += 1
    for k in range(n - 2):
        x = seq[:, k]
        leaf = np.argmax(deg == 1, axis=1)
        adj[rows, leaf, x] = adj[rows, x, leaf] = True
        deg[rows, leaf] -= 1
        deg[rows, x] -= 1
    ones = deg == 1
    u = np.argmax(ones, axis=1)
    w = n - 1 - np.argmax(ones[:, ::-1], axis=1)
    adj[rows, u, w] = adj[rows, w, u] = True
    return adj


def _centres_batch(adj):
    """One or two centres per tree by simultaneous leaf peeling; -1 when absent."""
    b, n, _ = adj.shape
    alive = np.ones((b, n), dtype=bool)
    deg = adj.sum(axis=2)
    while True:
        busy = alive.sum(axis=1) > 2
        if not busy.any():
            break
        leaves = alive & (deg <= 1) & busy[:, None]
        alive &= ~leaves
        deg -= (adj & leaves[:, None, :]).sum(axis=2)
    c1 = np.argmax(alive, axis=1)
    c2 = n - 1 - np.argmax(alive[:, ::-1], axis=1)
    return c1, np.where(c2 != c1, c2, -1)


def _rooted_codes_batch(adj, root):
    b, n, _ = adj.shape
    rows = np.arange(b)
    depth = np.full((b, n), -1, dtype=np.int64)
    depth[rows, root] = 0
    frontier = depth == 0
    level = 0
    while True:
        frontier = (adj & frontier[:, None, :]).any(axis=2) & (depth < 0)
        if not frontier.any():
            break
        level += 1
        depth[frontier] = level
    parent = np.argmax(adj & (depth[:, None, :] == depth[:, :, None] - 1), axis=2)
    flat_parent = (rows[:, None] * n + parent).ravel()
    flat_depth = depth.ravel()
    # every vertex starts as a leaf, code "10"
    val = np.full(b * n, 2, dtype=np.int64)
    length = np.full(b * n, 2, dtype=np.int64)
    for lv in range(level, 0, -1):
        sel = np.flatnonzero(flat_depth == lv)
        # one sort orders children by parent, then by (length, value);
        # codes of n <= 9 vertices fit in 18 bits, lengths in 5
        packed = np.sort((flat_parent[sel] << 23) | (length[sel] << 18) | val[sel])
        group = packed >> 23
        ln = (packed >> 18) & 0x1F
        vl = packed & 0x3FFFF
        starts = np.flatnonzero(np.r_[True, group[1:] != group[:-1]])
        total = np.add.reduceat(ln, starts)
        csum = np.cumsum(ln)
        before = np.repeat(csum[starts] - ln[starts], np.diff(np.r_[starts, len(ln)]))
        suffix = np.repeat(total, np.diff(np.r_[starts, len(ln)])) - (csum - before)
        body = np.add.reduceat(vl << suffix, starts)
        g = group[starts]
        val[g] = ((np.int64(1) << total) | body) << 1
        length[g] = total + 2
    return val[rows * n + root]


def _prufer_codes_numpy(n, chunk=100_000):
    total = n ** (n - 2)
    out = np.empty(total, dtype=np.int64)
    weights = n ** np.arange(n - 3, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        seq = (idx[:, None] // weights[None, :]) % n
        adj = _decode_batch(seq, n)
        c1, c2 = _centres_batch(adj)
        best = _rooted_codes_batch(adj, c1)
        two = c2 >= 0
        if two.any():
            other = _rooted_codes_batch(adj[two], c2[two])
            best[two] = np.minimum(best[two], other)
        out[start : start + len(idx)] = best
    return out


def prufer_decode(seq, n):
    """Edge list of the labelled tree on ``n`` vertices with Pruefer sequence ``seq``."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return edges


def prufer_unrank(idx, n):
    seq = []
    for _ in range(n - 2):
        seq.append(idx % n)
        idx //= n
    return tuple(reversed(seq))


if USE_NUMBA:
    _rotation = njit(cache=True)(_rotation)
    _rooted_int_code = njit(cache=True)(_rooted_int_code)
    _bfs_loops = njit(cache=True)(_bfs_loops)
    _jacobi_loops = njit(cache=True)(_jacobi_loops)
    _power_loops = njit(cache=True)(_power_loops)
    _det_loops = njit(cache=True)(_det_loops)
    _prufer_codes_loops = njit(cache=True)(_prufer_codes_loops)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def bfs_all_pairs(indptr, indices, n):
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    if USE_NUMBA:
        return _bfs_loops(indptr, indices, n)
    return _bfs_numpy(indptr, indices, n)


def jacobi_eigenvalues(a, rel_tol=1e-12, max_sweeps=100):
    """Returns ``(values, sweeps, offdiag_norm, converged)``; values unsorted."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    if USE_NUMBA:
        return _jacobi_loops(a, rel_tol, max_sweeps)
    return _jacobi_numpy(a, rel_tol, max_sweeps)


def power_iteration(a, shift, tol=1e-12, max_iter=200_000):
    a = np.ascontiguousarray(a, dtype=np.float64)
    if USE_NUMBA:
        return _power_loops(a, float(shift), tol, max_iter)
    return _power_numpy(a, float(shift), tol, max_iter)


def det_partial_pivot(a):
    a = np.ascontiguousarray(a, dtype=np.float64)
    if USE_NUMBA:
        return float(_det_loops(a))
    return _det_numpy(a)


def prufer_class_representatives(n):
    """One Pruefer index per isomorphism class of labelled trees on ``n`` vertices."""
    codes = _prufer_codes_loops(n) if USE_NUMBA else _prufer_codes_numpy(n)
    _, first = np.unique(codes, return_index=True)
    return sorted(int(i) for i in first)
