"""Pure-Python hot kernels.

This module is the fallback used when the compiled extension is missing
and for digraphs too large for 64-bit rows.  ``_ckernels.pyx`` implements
the same algorithms with the same tie-breaking, so both backends return
identical certificates and identical search results.
"""

from __future__ import annotations

import time

BACKEND = "python"
MAX_N = None


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transpose(rows, n):
    cols = [0] * n
    for u in range(n):
        bit = 1 << u
        for v in _bits(rows[u]):
            cols[v] |= bit
    return cols


# ---------------------------------------------------------------------------
# geodecity


def geodetic_ok(rows, n, k):
    """True iff every ordered pair has at most one walk of length <= k."""
    for s in range(n):
        seen = 1 << s
        frontier = seen
        for _ in range(k):
            nxt = 0
            for w in _bits(frontier):
                row = rows[w]
                if row & (seen | nxt):
                    return False
                nxt |= row
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
    return True


def first_violation(rows, n, k):
    """Return two distinct walks with common ends and length <= k, or None."""
    for s in range(n):
        parent = {s: None}
        seen = 1 << s
        frontier = [s]
        for _ in range(k):
            nxt_mask = 0
            nxt = []
            for w in frontier:
                for y in _bits(rows[w]):
                    if (seen | nxt_mask) >> y & 1:
                        return _trace(parent, y), _trace(parent, w) + [y]
                    nxt_mask |= 1 << y
                    parent[y] = w
                    nxt.append(y)
            if not nxt:
                break
            seen |= nxt_mask
            frontier = nxt
    return None


def _trace(parent, v):
    walk = [v]
    while parent[walk[-1]] is not None:
        walk.append(parent[walk[-1]])
    walk.reverse()
    return walk


def escape_ok(rows, cols, i, n, k):
    """Necessary condition for extending to a sink- and source-free order n.

    For each vertex, walks of length <= k in the final digraph end at
    distinct vertices.  Walks stuck at a sink of the partial digraph must
    leave it, and every escaped walk keeps extending, which lower-bounds
    the size of each out-tree (and, on the converse, each in-tree).
    """
    for nbr in (rows, cols):
        dead = 0
        for w in range(i):
            if not nbr[w]:
                dead |= 1 << w
        if not dead:
            # walk counts inside the partial digraph are already bounded by i
            continue
        for u in range(i):
            frontier = 1 << u
            total = 1
            escaped = 0
            for _ in range(k):
                escaped += (frontier & dead).bit_count()
                nxt = 0
                for w in _bits(frontier):
                    nxt |= nbr[w]
                total += nxt.bit_count() + escaped
                frontier = nxt
            if total > n:
                return False
    return True


def is_strong(rows, cols, n):
    if n <= 1:
        return True
    full = (1 << n) - 1
    for nbr in (rows, cols):
        seen = frontier = 1
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= nbr[w]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical labelling


def _refine(cells, rows, cols):
    """Refine an ordered partition (list of vertex lists) to an equitable one.

    Cells are split by (out-count, in-count) into a splitter cell; sub-cells
    are ordered by increasing key.  After any pass that splits something the
    scan restarts from the first splitter.
    """
    while True:
        split = False
        for wi in range(len(cells)):
            wmask = 0
            for x in cells[wi]:
                wmask |= 1 << x
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                keyed = sorted(
                    ((rows[x] & wmask).bit_count() * 65 + (cols[x] & wmask).bit_count(), x)
                    for x in cell
                )
                if keyed[0][0] == keyed[-1][0]:
                    out.append(cell)
                    continue
                split = True
                cur = [keyed[0][1]]
                for (ka, _), (kb, xb) in zip(keyed, keyed[1:]):
                    if kb != ka:
                        out.append(cur)
                        cur = []
                    cur.append(xb)
                out.append(cur)
            if split:
                cells = out
                break
        if not split:
            return cells


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class _Canon:
    def __init__(self, rows, n):
        self.rows = rows
        self.cols = transpose(rows, n)
        self.n = n
        self.first = None  # (cert, lab, path)
        self.best = None
        self.gens = []

    def leaf_cert(self, lab):
        inv = [0] * self.n
        for p, v in enumerate(lab):
            inv[v] = p
        cert = []
        for v in lab:
            r = 0
            for w in _bits(self.rows[v]):
                r |= 1 << inv[w]
            cert.append(r)
        return tuple(cert)

    def add_gen(self, src_lab, lab):
        gen = [0] * self.n
        for a, b in zip(src_lab, lab):
            gen[a] = b
        self.gens.append(gen)

    def search(self, cells, path):
        """Explore the subtree at ``cells``; return a backjump depth or -1."""
        if len(cells) == self.n:
            lab = [c[0] for c in cells]
            cert = self.leaf_cert(lab)
            if self.first is None:
                self.first = self.best = (cert, lab, path)
                return -1
            if cert == self.first[0]:
                self.add_gen(self.first[1], lab)
                return _common_prefix(path, self.first[2])
            if cert < self.best[0]:
                self.best = (cert, lab, path)
                return -1
            if cert == self.best[0]:
                self.add_gen(self.best[1], lab)
                return _common_prefix(path, self.best[2])
            return -1

        target = 0
        size = self.n + 1
        for ci, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = ci, len(cell)
        depth = len(path)
        explored = []
        for w in sorted(cells[target]):
            if explored:
                uf = self.stabiliser_orbits(path)
                rw = uf.find(w)
                if any(uf.find(x) == rw for x in explored):
                    continue
            explored.append(w)
            rest = [x for x in cells[target] if x != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            ret = self.search(_refine(child, self.rows, self.cols), path + [w])
            if ret != -1 and ret < depth:
                return ret
        return -1

    def stabiliser_orbits(self, path):
        uf = _UnionFind(self.n)
        for gen in self.gens:
            if all(gen[v] == v for v in path):
                for a, b in enumerate(gen):
                    uf.union(a, b)
        return uf


def _common_prefix(a, b):
    i = 0
    for x, y in zip(a, b):
        if x != y:
            break
        i += 1
    return i


def canonical_labeling(rows, n):
    """Return ``(order, cert, orbits)``.

    ``order[p]`` is the vertex placed at canonical position ``p``; ``cert``
    is the tuple of relabelled rows (the lexicographically least over the
    search tree); ``orbits[v]`` is the least vertex in the automorphism
    orbit of ``v``.
    """
    if n == 0:
        return [], (), []
    c = _Canon(rows, n)
    c.search(_refine([list(range(n))], rows, c.cols), [])
    uf = _UnionFind(n)
    for gen in c.gens:
        for a, b in enumerate(gen):
            uf.union(a, b)
    cert, lab, _ = c.best
    return list(lab), cert, [uf.find(v) for v in range(n)]


# ---------------------------------------------------------------------------
# vertex-augmentation search


class BudgetExceeded(Exception):
    pass


def _balls(nbr, i, radius):
    """Vertices reachable by walks of length 0..radius from each vertex."""
    out = []
    for u in range(i):
        ball = frontier = 1 << u
        for _ in range(radius):
            nxt = 0
            for w in _bits(frontier):
                nxt |= nbr[w]
            frontier = nxt
            ball |= nxt
        out.append(ball)
    return out


def _deletion_key(rows, cols, v, deg):
    # label-invariant tie-break among minimum-degree vertices
    outs = sum(deg[w] for w in _bits(rows[v]))
    ins = sum(deg[w] for w in _bits(cols[v]))
    return (rows[v].bit_count(), outs, ins)


class Searcher:
    """Canonical vertex augmentation restricted to a size chain.

    ``floor[i]`` is the least number of arcs an order-``i`` intermediate
    digraph may carry; the deleted vertex is always one of minimum total
    degree, so every ancestor of a qualifying digraph respects the chain.
    """

    def __init__(self, n, k, floor, *, dout=0, din=0, no_sources_sinks=False,
                 strong=False, escape=False, max_nodes=0, deadline=0.0,
                 stop_level=0):
        self.n = n
        self.k = k
        self.floor = list(floor)
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

    def run(self, rows, i):
        rows = list(rows)
        cols = transpose(rows, i)
        trivial = all(o == v for v, o in enumerate(canonical_labeling(rows, i)[2]))
        self._dfs(rows, cols, i, sum(r.bit_count() for r in rows), trivial)
        return self.results

    def _tick(self):
        self.nodes += 1
        if self.max_nodes and self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget exceeded")
        if self.deadline and (self.nodes & 1023) == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exceeded")

    def _poll(self):
        # rejected candidates never tick, so the clock is also read here
        self.work += 1
        if self.deadline and (self.work & 4095) == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exceeded")

    def _dfs(self, rows, cols, i, m, trivial_aut):
        self._tick()
        if i == self.stop_level:
            self.results.append(tuple(rows))
            return
        if i == self.n:
            return
        n, k = self.n, self.k
        deg = [rows[w].bit_count() + cols[w].bit_count() for w in range(i)]
        outd = [rows[w].bit_count() for w in range(i)]
        ind = [cols[w].bit_count() for w in range(i)]
        need = self.floor[i + 1] - m
        hi = min(deg) + 1 if i else 0
        hi = min(hi, self.dout + self.din)
        lo = max(need, 0)
        last = i + 1 == n
        if self.nss and last:
            lo = max(lo, 2)
        if lo > hi:
            return
        out_ball = _balls(rows, i, k - 1)
        in_ball = _balls(cols, i, k - 1)
        out_ball2 = _balls(rows, i, k - 2)
        in_ball2 = _balls(cols, i, k - 2)
        forced_a = forced_b = 0
        if self.nss and last:
            for w in range(i):
                if not cols[w]:
                    forced_a |= 1 << w
                if not rows[w]:
                    forced_b |= 1 << w
        seen = set()
        state = dict(rows=rows, cols=cols, i=i, m=m, deg=deg, outd=outd, ind=ind,
                     lo=lo, hi=hi, out_ball=out_ball, in_ball=in_ball,
                     out_ball2=out_ball2, in_ball2=in_ball2, forced_a=forced_a, forced_b=forced_b,
                     seen=seen, trivial=trivial_aut, last=last)
        self._choose(state, 0, 0, 0, 0, 0, 0, 0)

    def _choose(self, st, idx, amask, bmask, na, nb, ua, ub):
        i = st["i"]
        cnt = na + nb
        if idx == i:
            self._poll()
            if cnt >= st["lo"]:
                self._child(st, amask, bmask, cnt)
            return
        if cnt + (i - idx) < st["lo"]:
            return
        bit = 1 << idx
        # vertex idx unused
        if not (bit & (st["forced_a"] | st["forced_b"])):
            self._choose(st, idx + 1, amask, bmask, na, nb, ua, ub)
        if cnt >= st["hi"]:
            return
        # out-arc v -> idx
        if (na < self.dout and st["ind"][idx] < self.din and not (bit & st["forced_b"])
                and not (st["out_ball"][idx] & ua) and not (st["out_ball2"][idx] & bmask)):
            self._choose(st, idx + 1, amask | bit, bmask, na + 1, nb,
                         ua | st["out_ball"][idx], ub)
        # in-arc idx -> v
        if (nb < self.din and st["outd"][idx] < self.dout and not (bit & st["forced_a"])
                and not (st["in_ball"][idx] & ub) and not (st["in_ball2"][idx] & amask)):
            self._choose(st, idx + 1, amask, bmask | bit, na, nb + 1, ua,
                         ub | st["in_ball"][idx])

    def _child(self, st, amask, bmask, delta):
        i = st["i"]
        deg = st["deg"]
        touched = amask | bmask
        for w in range(i):
            if deg[w] + (touched >> w & 1) < delta:
                return
        rows = st["rows"] + [amask]
        cols = st["cols"] + [bmask]
        for w in _bits(bmask):
            rows[w] |= 1 << i
        for w in _bits(amask):
            cols[w] |= 1 << i
        n1 = i + 1
        if not geodetic_ok(rows, n1, self.k):
            return
        if self.nss and self.escape and not escape_ok(rows, cols, n1, self.n, self.k):
            return
        m1 = st["m"] + delta
        if st["last"]:
            if m1 < self.floor[n1]:
                return
            if self.strong and not is_strong(rows, cols, n1):
                return
            if self.nss and (0 in rows or 0 in cols):
                return
            self._tick()
            order, cert, _ = canonical_labeling(rows, n1)
            if cert not in self.final_seen:
                self.final_seen.add(cert)
                self.results.append(tuple(rows))
            return
        cdeg = [rows[w].bit_count() + cols[w].bit_count() for w in range(n1)]
        low = [w for w in range(n1) if cdeg[w] == delta]
        if len(low) > 1:
            keys = {w: _deletion_key(rows, cols, w, cdeg) for w in low}
            best = min(keys.values())
            if keys[i] != best:
                return
            low = [w for w in low if keys[w] == best]
        order, cert, orbits = canonical_labeling(rows, n1)
        if len(low) > 1:
            pos = {v: p for p, v in enumerate(order)}
            c = min(low, key=pos.__getitem__)
            if orbits[c] != orbits[i]:
                return
        if not st["trivial"]:
            if cert in st["seen"]:
                return
            st["seen"].add(cert)
        trivial = all(o == v for v, o in enumerate(orbits))
        self._dfs(rows, cols, n1, m1, trivial)


def search(root_rows, root_n, n, k, floor, dout, din, no_sources_sinks, strong,
           escape, max_nodes, deadline, stop_level):
    """Run one subtree; return ``(result_rows, nodes, status)``."""
    s = Searcher(n, k, floor, dout=dout, din=din, no_sources_sinks=no_sources_sinks,
                 strong=strong, escape=escape, max_nodes=max_nodes, deadline=deadline,
                 stop_level=stop_level)
    try:
        s.run(root_rows, root_n)
        status = "complete"
    except BudgetExceeded as exc:
        status = str(exc)
    return s.results, s.nodes, status
