# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels for digraphs with at most 64 vertices.

Mirrors ``_pykernels`` exactly (same refinement order, same tie-breaks),
so certificates and search output are identical across backends.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memset
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

ctypedef uint64_t u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"
MAX_N = 64

DEF NMAX = 64


cdef inline int popc(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline u64 bit(int v) noexcept nogil:
    return (<u64>1) << v


cdef double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef void _load(object seq, int n, u64 *rows) except *:
    cdef int u
    for u in range(n):
        rows[u] = <u64>seq[u]


cdef void _transpose(const u64 *rows, int n, u64 *cols) noexcept nogil:
    cdef int u, v
    cdef u64 r
    memset(cols, 0, n * sizeof(u64))
    for u in range(n):
        r = rows[u]
        while r:
            v = ctz(r)
            r &= r - 1
            cols[v] |= bit(u)


# ---------------------------------------------------------------------------
# geodecity

cdef bint _geodetic_ok(const u64 *rows, int n, int k) noexcept nogil:
    cdef int s, t, w
    cdef u64 seen, frontier, nxt, f, row
    for s in range(n):
        seen = bit(s)
        frontier = seen
        for t in range(k):
            nxt = 0
            f = frontier
            while f:
                w = ctz(f)
                f &= f - 1
                row = rows[w]
                if row & (seen | nxt):
                    return False
                nxt |= row
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
    return True


cdef bint _escape_ok(const u64 *rows, const u64 *cols, int i, int n, int k) noexcept nogil:
    cdef int side, u, t, w, total, escaped
    cdef u64 dead, frontier, nxt, f
    cdef const u64 *nbr
    for side in range(2):
        nbr = rows if side == 0 else cols
        dead = 0
        for w in range(i):
            if not nbr[w]:
                dead |= bit(w)
        if not dead:
            continue
        for u in range(i):
            frontier = bit(u)
            total = 1
            escaped = 0
            for t in range(k):
                escaped += popc(frontier & dead)
                nxt = 0
                f = frontier
                while f:
                    w = ctz(f)
                    f &= f - 1
                    nxt |= nbr[w]
                total += popc(nxt) + escaped
                frontier = nxt
            if total > n:
                return False
    return True


cdef bint _is_strong(const u64 *rows, const u64 *cols, int n) noexcept nogil:
    cdef int side, w
    cdef u64 full, seen, frontier, nxt, f
    cdef const u64 *nbr
    if n <= 1:
        return True
    full = (~(<u64>0)) if n == 64 else (bit(n) - 1)
    for side in range(2):
        nbr = rows if side == 0 else cols
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                w = ctz(f)
                f &= f - 1
                nxt |= nbr[w]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            return False
    return True


def geodetic_ok(rows, int n, int k):
    cdef u64 buf[NMAX]
    _load(rows, n, buf)
    return _geodetic_ok(buf, n, k)


def escape_ok(rows, cols, int i, int n, int k):
    cdef u64 r[NMAX]
    cdef u64 c[NMAX]
    _load(rows, i, r)
    _load(cols, i, c)
    return _escape_ok(r, c, i, n, k)


def is_strong(rows, cols, int n):
    cdef u64 r[NMAX]
    cdef u64 c[NMAX]
    _load(rows, n, r)
    _load(cols, n, c)
    return _is_strong(r, c, n)


def transpose(rows, int n):
    cdef u64 r[NMAX]
    cdef u64 c[NMAX]
    _load(rows, n, r)
    _transpose(r, n, c)
    return [c[u] for u in range(n)]


# ---------------------------------------------------------------------------
# canonical labelling

cdef struct Canon:
    int n
    u64 rows[NMAX]
    u64 cols[NMAX]
    bint have_first
    u64 first_cert[NMAX]
    int first_lab[NMAX]
    int first_path[NMAX]
    int first_depth
    u64 best_cert[NMAX]
    int best_lab[NMAX]
    int best_path[NMAX]
    int best_depth
    int *gens
    int ngens
    int capgens


cdef void _refine(Canon *c, int *lab, char *ptn) noexcept nogil:
    cdef int n = c.n
    cdef int ws, we, cs, ce, p, q, x, tk, tx
    cdef u64 wmask
    cdef bint split
    cdef int keys[NMAX]
    cdef int verts[NMAX]
    while True:
        split = False
        ws = 0
        while ws < n:
            we = ws
            while not ptn[we]:
                we += 1
            wmask = 0
            for p in range(ws, we + 1):
                wmask |= bit(lab[p])
            cs = 0
            while cs < n:
                ce = cs
                while not ptn[ce]:
                    ce += 1
                if ce > cs:
                    for p in range(cs, ce + 1):
                        x = lab[p]
                        keys[p] = popc(c.rows[x] & wmask) * 65 + popc(c.cols[x] & wmask)
                        verts[p] = x
                    # insertion sort by (key, vertex)
                    for p in range(cs + 1, ce + 1):
                        tk = keys[p]
                        tx = verts[p]
                        q = p - 1
                        while q >= cs and (keys[q] > tk or (keys[q] == tk and verts[q] > tx)):
                            keys[q + 1] = keys[q]
                            verts[q + 1] = verts[q]
                            q -= 1
                        keys[q + 1] = tk
                        verts[q + 1] = tx
                    if keys[cs] != keys[ce]:
                        split = True
                        for p in range(cs, ce + 1):
                            lab[p] = verts[p]
                            if p < ce and keys[p] != keys[p + 1]:
                                ptn[p] = 1
                cs = ce + 1
            if split:
                break
            ws = we + 1
        if not split:
            return


cdef int _cert_cmp(const u64 *a, const u64 *b, int n) noexcept nogil:
    cdef int p
    for p in range(n):
        if a[p] != b[p]:
            return -1 if a[p] < b[p] else 1
    return 0


cdef void _leaf_cert(Canon *c, const int *lab, u64 *cert) noexcept nogil:
    cdef int inv[NMAX]
    cdef int p, w
    cdef u64 r, out
    for p in range(c.n):
        inv[lab[p]] = p
    for p in range(c.n):
        r = c.rows[lab[p]]
        out = 0
        while r:
            w = ctz(r)
            r &= r - 1
            out |= bit(inv[w])
        cert[p] = out


cdef int _add_gen(Canon *c, const int *src, const int *dst) except -1:
    cdef int p
    cdef int *g
    if c.ngens == c.capgens:
        c.capgens = c.capgens * 2 if c.capgens else 16
        g = <int *>realloc(c.gens, c.capgens * NMAX * sizeof(int))
        if g == NULL:
            raise MemoryError()
        c.gens = g
    g = c.gens + c.ngens * NMAX
    for p in range(c.n):
        g[src[p]] = dst[p]
    c.ngens += 1
    return 0


cdef inline int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(int *parent, int a, int b) noexcept nogil:
    a = _find(parent, a)
    b = _find(parent, b)
    if a != b:
        if a < b:
            parent[b] = a
        else:
            parent[a] = b


cdef void _stab_orbits(Canon *c, const int *path, int depth, int *parent) noexcept nogil:
    cdef int g, j, a
    cdef int *gen
    cdef bint fixes
    for a in range(c.n):
        parent[a] = a
    for g in range(c.ngens):
        gen = c.gens + g * NMAX
        fixes = True
        for j in range(depth):
            if gen[path[j]] != path[j]:
                fixes = False
                break
        if fixes:
            for a in range(c.n):
                _union(parent, a, gen[a])


cdef inline int _common(const int *a, int da, const int *b, int db) noexcept nogil:
    cdef int i = 0
    while i < da and i < db and a[i] == b[i]:
        i += 1
    return i


cdef int _csearch(Canon *c, const int *lab0, const char *ptn0, int *path, int depth) except -2:
    cdef int n = c.n
    cdef int lab[NMAX]
    cdef char ptn[NMAX]
    cdef int clab[NMAX]
    cdef char cptn[NMAX]
    cdef u64 cert[NMAX]
    cdef int parent[NMAX]
    cdef int cell[NMAX]
    cdef int explored[NMAX]
    cdef int nexp = 0
    cdef int p, q, s, e, ts, te, size, csize, w, j, ret, cmp, rw, gens_seen
    cdef bint skip, discrete
    memcpy(lab, lab0, n * sizeof(int))
    memcpy(ptn, ptn0, n * sizeof(char))

    discrete = True
    for p in range(n):
        if not ptn[p]:
            discrete = False
            break
    if discrete:
        _leaf_cert(c, lab, cert)
        if not c.have_first:
            c.have_first = True
            memcpy(c.first_cert, cert, n * sizeof(u64))
            memcpy(c.first_lab, lab, n * sizeof(int))
            memcpy(c.first_path, path, depth * sizeof(int))
            c.first_depth = depth
            memcpy(c.best_cert, cert, n * sizeof(u64))
            memcpy(c.best_lab, lab, n * sizeof(int))
            memcpy(c.best_path, path, depth * sizeof(int))
            c.best_depth = depth
            return -1
        if _cert_cmp(cert, c.first_cert, n) == 0:
            _add_gen(c, c.first_lab, lab)
            return _common(path, depth, c.first_path, c.first_depth)
        cmp = _cert_cmp(cert, c.best_cert, n)
        if cmp < 0:
            memcpy(c.best_cert, cert, n * sizeof(u64))
            memcpy(c.best_lab, lab, n * sizeof(int))
            memcpy(c.best_path, path, depth * sizeof(int))
            c.best_depth = depth
            return -1
        if cmp == 0:
            _add_gen(c, c.best_lab, lab)
            return _common(path, depth, c.best_path, c.best_depth)
        return -1

    # first smallest non-singleton cell
    ts = -1
    te = -1
    size = n + 1
    s = 0
    while s < n:
        e = s
        while not ptn[e]:
            e += 1
        csize = e - s + 1
        if 1 < csize < size:
            ts = s
            te = e
            size = csize
        s = e + 1
    for p in range(size):
        cell[p] = lab[ts + p]
    # ascending vertex order
    for p in range(1, size):
        w = cell[p]
        q = p - 1
        while q >= 0 and cell[q] > w:
            cell[q + 1] = cell[q]
            q -= 1
        cell[q + 1] = w

    gens_seen = -1
    for j in range(size):
        w = cell[j]
        if nexp:
            if gens_seen != c.ngens:
                _stab_orbits(c, path, depth, parent)
                gens_seen = c.ngens
            rw = _find(parent, w)
            skip = False
            for q in range(nexp):
                if _find(parent, explored[q]) == rw:
                    skip = True
                    break
            if skip:
                continue
        explored[nexp] = w
        nexp += 1
        # individualise w at the front of its cell
        memcpy(clab, lab, n * sizeof(int))
        memcpy(cptn, ptn, n * sizeof(char))
        q = ts + 1
        for p in range(ts, te + 1):
            if lab[p] != w:
                clab[q] = lab[p]
                q += 1
        clab[ts] = w
        cptn[ts] = 1
        _refine(c, clab, cptn)
        path[depth] = w
        ret = _csearch(c, clab, cptn, path, depth + 1)
        if ret != -1 and ret < depth:
            return ret
    return -1


cdef int _canon(const u64 *rows, int n, Canon *c, int *order, u64 *cert, int *orbits) except -1:
    """Fill order/cert/orbits; caller owns ``c`` and must free ``c.gens``."""
    cdef int lab[NMAX]
    cdef char ptn[NMAX]
    cdef int path[NMAX]
    cdef int p, g
    cdef int *gen
    c.n = n
    memcpy(c.rows, rows, n * sizeof(u64))
    _transpose(c.rows, n, c.cols)
    c.have_first = False
    c.ngens = 0
    for p in range(n):
        lab[p] = p
        ptn[p] = 0
    if n:
        ptn[n - 1] = 1
    _refine(c, lab, ptn)
    _csearch(c, lab, ptn, path, 0)
    memcpy(order, c.best_lab, n * sizeof(int))
    memcpy(cert, c.best_cert, n * sizeof(u64))
    for p in range(n):
        orbits[p] = p
    for g in range(c.ngens):
        gen = c.gens + g * NMAX
        for p in range(n):
            _union(orbits, p, gen[p])
    for p in range(n):
        orbits[p] = _find(orbits, p)
    return 0


def canonical_labeling(rows, int n):
    """Return ``(order, cert, orbits)``; see ``_pykernels.canonical_labeling``."""
    cdef u64 buf[NMAX]
    cdef int order[NMAX]
    cdef u64 cert[NMAX]
    cdef int orbits[NMAX]
    cdef Canon *c
    if n > NMAX:
        raise ValueError("compiled kernels support at most 64 vertices")
    if n == 0:
        return [], (), []
    _load(rows, n, buf)
    c = <Canon *>malloc(sizeof(Canon))
    if c == NULL:
        raise MemoryError()
    c.gens = NULL
    c.capgens = 0
    try:
        _canon(buf, n, c, order, cert, orbits)
    finally:
        free(c.gens)
        free(c)
    return ([order[p] for p in range(n)], tuple([cert[p] for p in range(n)]),
            [orbits[p] for p in range(n)])


# ---------------------------------------------------------------------------
# vertex-augmentation search

class BudgetExceeded(Exception):
    pass


cdef struct Frame:
    u64 rows[NMAX]
    u64 cols[NMAX]
    int i
    int m
    int deg[NMAX]
    int outd[NMAX]
    int ind[NMAX]
    int lo
    int hi
    u64 out_ball[NMAX]
    u64 in_ball[NMAX]
    u64 out_ball2[NMAX]
    u64 in_ball2[NMAX]
    u64 forced_a
    u64 forced_b
    bint trivial
    bint last


cdef void _balls(const u64 *nbr, int i, int radius, u64 *out) noexcept nogil:
    cdef int u, t, w
    cdef u64 ball, frontier, nxt, f
    for u in range(i):
        ball = bit(u)
        frontier = ball
        for t in range(radius):
            nxt = 0
            f = frontier
            while f:
                w = ctz(f)
                f &= f - 1
                nxt |= nbr[w]
            frontier = nxt
            ball |= nxt
        out[u] = ball


cdef class Searcher:
    cdef int n, k, dout, din, stop_level
    cdef bint nss, strong, escape
    cdef int floor[NMAX + 1]
    cdef long long max_nodes
    cdef double deadline
    cdef public long long nodes
    cdef long long work
    cdef public list results
    cdef set final_seen
    cdef Canon *canon

    def __cinit__(self):
        self.canon = <Canon *>malloc(sizeof(Canon))
        if self.canon == NULL:
            raise MemoryError()
        self.canon.gens = NULL
        self.canon.capgens = 0

    def __dealloc__(self):
        if self.canon != NULL:
            free(self.canon.gens)
            free(self.canon)

    def __init__(self, int n, int k, floor, int dout=0, int din=0, bint no_sources_sinks=False,
                 bint strong=False, bint escape=False, long long max_nodes=0,
                 double deadline=0.0, int stop_level=0):
        cdef int j
        if n > NMAX:
            raise ValueError("compiled search supports at most 64 vertices")
        self.n = n
        self.k = k
        for j in range(n + 1):
            self.floor[j] = floor[j]
        self.dout = dout if dout > 0 else n
        self.din = din if din > 0 else n
        self.nss = no_sources_sinks or strong
        self.strong = strong
        self.escape = escape
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.stop_level = stop_level if stop_level > 0 else n + 1
        self.nodes = 0
        self.work = 0
        self.results = []
        self.final_seen = set()

    cdef int _poll(self) except -1:
        # rejected candidates never tick, so the clock is also read here
        self.work += 1
        if self.deadline and (self.work & 4095) == 0 and _now() > self.deadline:
            raise BudgetExceeded("time budget exceeded")
        return 0

    cdef int _tick(self) except -1:
        self.nodes += 1
        if self.max_nodes and self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget exceeded")
        if self.deadline and (self.nodes & 1023) == 0 and _now() > self.deadline:
            raise BudgetExceeded("time budget exceeded")
        return 0

    def run(self, rows, int i):
        cdef u64 r[NMAX]
        cdef u64 c[NMAX]
        cdef int order[NMAX]
        cdef u64 cert[NMAX]
        cdef int orbits[NMAX]
        cdef int m = 0, u
        cdef bint trivial = True
        _load(rows, i, r)
        _transpose(r, i, c)
        for u in range(i):
            m += popc(r[u])
        _canon(r, i, self.canon, order, cert, orbits)
        for u in range(i):
            if orbits[u] != u:
                trivial = False
        self._dfs(r, c, i, m, trivial)
        return self.results

    cdef int _dfs(self, const u64 *rows, const u64 *cols, int i, int m, bint trivial) except -1:
        cdef Frame fr
        cdef int w, mind
        cdef object seen
        self._tick()
        if i == self.stop_level:
            self.results.append(tuple([rows[w] for w in range(i)]))
            return 0
        if i == self.n:
            return 0
        memcpy(fr.rows, rows, i * sizeof(u64))
        memcpy(fr.cols, cols, i * sizeof(u64))
        fr.i = i
        fr.m = m
        mind = 1 << 20
        for w in range(i):
            fr.outd[w] = popc(rows[w])
            fr.ind[w] = popc(cols[w])
            fr.deg[w] = fr.outd[w] + fr.ind[w]
            if fr.deg[w] < mind:
                mind = fr.deg[w]
        fr.hi = mind + 1 if i else 0
        if self.dout + self.din < fr.hi:
            fr.hi = self.dout + self.din
        fr.lo = self.floor[i + 1] - m
        if fr.lo < 0:
            fr.lo = 0
        fr.last = i + 1 == self.n
        if self.nss and fr.last and fr.lo < 2:
            fr.lo = 2
        if fr.lo > fr.hi:
            return 0
        _balls(rows, i, self.k - 1, fr.out_ball)
        _balls(cols, i, self.k - 1, fr.in_ball)
        _balls(rows, i, self.k - 2, fr.out_ball2)
        _balls(cols, i, self.k - 2, fr.in_ball2)
        fr.forced_a = 0
        fr.forced_b = 0
        if self.nss and fr.last:
            for w in range(i):
                if not cols[w]:
                    fr.forced_a |= bit(w)
                if not rows[w]:
                    fr.forced_b |= bit(w)
        fr.trivial = trivial
        seen = set()
        self._choose(&fr, seen, 0, 0, 0, 0, 0, 0, 0)
        return 0

    cdef int _choose(self, Frame *fr, object seen, int idx, u64 amask, u64 bmask,
                     int na, int nb, u64 ua, u64 ub) except -1:
        cdef int i = fr.i
        cdef int cnt = na + nb
        cdef u64 b
        if idx == i:
            self._poll()
            if cnt >= fr.lo:
                self._child(fr, seen, amask, bmask, cnt)
            return 0
        if cnt + (i - idx) < fr.lo:
            return 0
        b = bit(idx)
        if not (b & (fr.forced_a | fr.forced_b)):
            self._choose(fr, seen, idx + 1, amask, bmask, na, nb, ua, ub)
        if cnt >= fr.hi:
            return 0
        if (na < self.dout and fr.ind[idx] < self.din and not (b & fr.forced_b)
                and not (fr.out_ball[idx] & ua) and not (fr.out_ball2[idx] & bmask)):
            self._choose(fr, seen, idx + 1, amask | b, bmask, na + 1, nb,
                         ua | fr.out_ball[idx], ub)
        if (nb < self.din and fr.outd[idx] < self.dout and not (b & fr.forced_a)
                and not (fr.in_ball[idx] & ub) and not (fr.in_ball2[idx] & amask)):
            self._choose(fr, seen, idx + 1, amask, bmask | b, na, nb + 1, ua,
                         ub | fr.in_ball[idx])
        return 0

    cdef int _child(self, Frame *fr, object seen, u64 amask, u64 bmask, int delta) except -1:
        cdef int i = fr.i
        cdef int n1 = i + 1
        cdef u64 touched = amask | bmask
        cdef u64 rows[NMAX]
        cdef u64 cols[NMAX]
        cdef int cdeg[NMAX]
        cdef int low[NMAX]
        cdef int nlow, w, p, m1, c
        cdef int key0, key1, key2, b0, b1, b2
        cdef int k0[NMAX]
        cdef int k1[NMAX]
        cdef int k2[NMAX]
        cdef u64 f
        cdef int order[NMAX]
        cdef u64 cert[NMAX]
        cdef int orbits[NMAX]
        cdef int pos[NMAX]
        cdef bytes key
        cdef bint trivial
        for w in range(i):
            if fr.deg[w] + <int>((touched >> w) & 1) < delta:
                return 0
        memcpy(rows, fr.rows, i * sizeof(u64))
        memcpy(cols, fr.cols, i * sizeof(u64))
        rows[i] = amask
        cols[i] = bmask
        f = bmask
        while f:
            w = ctz(f)
            f &= f - 1
            rows[w] |= bit(i)
        f = amask
        while f:
            w = ctz(f)
            f &= f - 1
            cols[w] |= bit(i)
        if not _geodetic_ok(rows, n1, self.k):
            return 0
        if self.nss and self.escape and not _escape_ok(rows, cols, n1, self.n, self.k):
            return 0
        m1 = fr.m + delta
        if fr.last:
            if m1 < self.floor[n1]:
                return 0
            if self.strong and not _is_strong(rows, cols, n1):
                return 0
            if self.nss:
                for w in range(n1):
                    if rows[w] == 0 or cols[w] == 0:
                        return 0
            self._tick()
            _canon(rows, n1, self.canon, order, cert, orbits)
            key = (<char *>cert)[:n1 * sizeof(u64)]
            if key not in self.final_seen:
                self.final_seen.add(key)
                self.results.append(tuple([rows[w] for w in range(n1)]))
            return 0
        nlow = 0
        for w in range(n1):
            cdeg[w] = popc(rows[w]) + popc(cols[w])
            if cdeg[w] == delta:
                low[nlow] = w
                nlow += 1
        if nlow > 1:
            for p in range(nlow):
                w = low[p]
                k0[p] = popc(rows[w])
                key1 = 0
                f = rows[w]
                while f:
                    c = ctz(f)
                    f &= f - 1
                    key1 += cdeg[c]
                key2 = 0
                f = cols[w]
                while f:
                    c = ctz(f)
                    f &= f - 1
                    key2 += cdeg[c]
                k1[p] = key1
                k2[p] = key2
            b0 = k0[0]
            b1 = k1[0]
            b2 = k2[0]
            for p in range(1, nlow):
                if (k0[p] < b0 or (k0[p] == b0 and (k1[p] < b1 or (k1[p] == b1 and k2[p] < b2)))):
                    b0 = k0[p]
                    b1 = k1[p]
                    b2 = k2[p]
            # the new vertex is last in ``low``
            if not (k0[nlow - 1] == b0 and k1[nlow - 1] == b1 and k2[nlow - 1] == b2):
                return 0
            c = 0
            for p in range(nlow):
                if k0[p] == b0 and k1[p] == b1 and k2[p] == b2:
                    low[c] = low[p]
                    c += 1
            nlow = c
        _canon(rows, n1, self.canon, order, cert, orbits)
        if nlow > 1:
            for p in range(n1):
                pos[order[p]] = p
            c = low[0]
            for p in range(1, nlow):
                if pos[low[p]] < pos[c]:
                    c = low[p]
            if orbits[c] != orbits[i]:
                return 0
        if not fr.trivial:
            key = (<char *>cert)[:n1 * sizeof(u64)]
            if key in seen:
                return 0
            seen.add(key)
        trivial = True
        for w in range(n1):
            if orbits[w] != w:
                trivial = False
                break
        self._dfs(rows, cols, n1, m1, trivial)
        return 0


def search(root_rows, int root_n, int n, int k, floor, int dout, int din,
           bint no_sources_sinks, bint strong, bint escape, long long max_nodes,
           double deadline, int stop_level):
    """Run one subtree; return ``(result_rows, nodes, status)``."""
    s = Searcher(n, k, floor, dout, din, no_sources_sinks, strong, escape,
                 max_nodes, deadline, stop_level)
    try:
        s.run(root_rows, root_n)
        status = "complete"
    except BudgetExceeded as exc:
        status = str(exc)
    return s.results, s.nodes, status
