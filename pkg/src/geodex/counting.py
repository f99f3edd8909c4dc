"""Directed cycle and path counts and the counting bounds they must obey.

All bound evaluators use exact integer arithmetic.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .digraph import Digraph, iter_bits

__all__ = [
    "CountReport",
    "count_directed_cycles",
    "count_directed_paths",
    "cycle_count_upper_bound",
    "iroot",
    "min_out_degree_bound_check",
    "triangle_upper_bound",
]


@dataclass(frozen=True)
class CountReport:
    pattern: str  # "cycle" or "path"
    length: int
    count: int
    per_arc_max: int

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "length": self.length, "count": self.count,
                "per_arc_max": self.per_arc_max}


def _arc_loads(walks) -> int:
    load = Counter()
    for arcs in walks:
        load.update(arcs)
    return max(load.values(), default=0)


def _cycles(g: Digraph, length: int):
    # each cycle is reported once, starting from its least vertex
    rows = g.rows
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        stack = [(s, [s], 1 << s)]
        while stack:
            v, path, used = stack.pop()
            if len(path) == length:
                if rows[v] >> s & 1:
                    yield path
                continue
            for w in iter_bits(rows[v] & above & ~used):
                stack.append((w, path + [w], used | 1 << w))


def _paths(g: Digraph, length: int):
    rows = g.rows
    for s in range(g.n):
        stack = [(s, [s], 1 << s)]
        while stack:
            v, path, used = stack.pop()
            if len(path) == length + 1:
                yield path
                continue
            for w in iter_bits(rows[v] & ~used):
                stack.append((w, path + [w], used | 1 << w))


def count_directed_cycles(g: Digraph, length: int) -> CountReport:
    """Directed cycles with ``length`` arcs, each counted once up to rotation."""
    if length < 2:
        raise ValueError(f"cycle length must be at least 2, got {length}")
    count = 0
    arcs_of = []
    for cyc in _cycles(g, length):
        count += 1
        arcs_of.append([(cyc[i], cyc[(i + 1) % length]) for i in range(length)])
    return CountReport("cycle", length, count, _arc_loads(arcs_of))


def count_directed_paths(g: Digraph, length: int) -> CountReport:
    """Directed paths with ``length`` arcs and ``length + 1`` distinct vertices."""
    if length < 1:
        raise ValueError(f"path length must be at least 1, got {length}")
    count = 0
    arcs_of = []
    for p in _paths(g, length):
        count += 1
        arcs_of.append(list(zip(p, p[1:])))
    return CountReport("path", length, count, _arc_loads(arcs_of))


def triangle_upper_bound(n: int) -> int:
    """floor((n/6) * (sqrt(4n-3) - 1)), exactly.

    floor((y - n)/6) = floor((floor(y) - n)/6) for real y and integer n, and
    floor(n*sqrt(4n-3)) = isqrt(n^2 (4n-3)).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (math.isqrt(n * n * (4 * n - 3)) - n) // 6


def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for integers x >= 0, k >= 1."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    y = 1 << -(-x.bit_length() // k)  # over-estimate
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y**k > x:
        y -= 1
    while (y + 1) ** k <= x:
        y += 1
    return y


def cycle_count_upper_bound(n: int, k: int) -> int:
    """ceil(sum_{i=1..n} i^(1/k)), certified by interval arithmetic on integers."""
    if n < 1 or k < 2:
        raise ValueError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    exact_part = 0
    inexact = []
    for i in range(1, n + 1):
        root = iroot(i, k)
        if root**k == i:
            exact_part += root
        else:
            inexact.append(i)
    if not inexact:
        return exact_part
    prec = 32
    while True:
        scale = 1 << prec
        lo = sum(iroot(i << (prec * k), k) for i in inexact)
        # each inexact term lies strictly between its floor and floor + 1 ulp
        hi = lo + len(inexact)
        base = exact_part * scale
        lo_ceil = -(-(base + lo) // scale)
        hi_floor = (base + hi) // scale
        # the sum lies in the open interval (base+lo, base+hi)/scale
        if (base + lo) % scale == 0:
            lo_ceil += 1
        if lo_ceil > hi_floor or (lo_ceil == hi_floor and (base + hi) % scale == 0):
            return lo_ceil
        prec *= 2


def min_out_degree_bound_check(g: Digraph, k: int) -> bool:
    """True iff min out-degree d satisfies d^k <= n."""
    if g.n == 0:
        return True
    d = min(row.bit_count() for row in g.rows)
    return d**k <= g.n
