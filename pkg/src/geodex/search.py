"""Exhaustive extremal search with isomorphism rejection.

The engine grows digraphs one vertex at a time (canonical augmentation):
the vertex removed to form the parent is always one of minimum total
degree, chosen canonically, so each isomorphism class is generated once.
Deleting a minimum-degree vertex from an order-i digraph with L arcs
leaves at least L - floor(2L/i) arcs, which gives a size floor for every
level once a target size is fixed.

``extremal_search`` tries target sizes from a proven ceiling downward.
The first target with a solution is the maximum, and that run yields
every extremal class.
"""

from __future__ import annotations

import json
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import _backend
from .canon import CanonicalForm, canonical_form
from .digraph import Digraph, is_strongly_connected, sources_and_sinks
from .geodecity import is_k_geodetic

__all__ = [
    "CHECKPOINT_VERSION",
    "CensusRecord",
    "SearchBudget",
    "SearchConstraints",
    "exclusion_bound",
    "extremal_search",
    "size_chain",
    "table",
    "verify_extremal_witness",
]

CHECKPOINT_MAGIC = b"GEODEXCK"
CHECKPOINT_VERSION = 1
# unconstrained ex(m;k) is computed to seed the exclusion ceiling only up to this order
EXCLUSION_SEED_MAX_ORDER = 9


@dataclass(frozen=True)
class SearchConstraints:
    n: int
    k: int
    require_strong: bool = False
    forbid_sources_sinks: bool = False
    min_size: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.min_size is not None and self.min_size < 0:
            raise ValueError("min_size must be non-negative")

    @property
    def source_sink_free(self) -> bool:
        # a strong digraph on two or more vertices has no sources or sinks
        return self.forbid_sources_sinks or (self.require_strong and self.n >= 2)


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**8
    max_seconds: float = 300.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budgets must be positive")


@dataclass
class CensusRecord:
    """Outcome of one search.

    ``max_size`` and the class list are only meaningful when
    ``status == "complete"``.  A partial record still carries
    ``upper_bound``: every size above it was proven impossible.
    """

    constraints: SearchConstraints
    status: str
    max_size: int | None
    class_count: int
    representatives: list[Digraph]
    nodes_explored: int
    wall_time: float
    ceiling: int
    ceiling_source: str
    upper_bound: int | None
    thresholds: list[dict] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def to_dict(self) -> dict:
        from .digraph6 import emit_digraph6

        return {
            "constraints": asdict(self.constraints),
            "status": self.status,
            "max_size": self.max_size,
            "class_count": self.class_count,
            "representatives": [emit_digraph6(g) for g in self.representatives],
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "ceiling": self.ceiling,
            "ceiling_source": self.ceiling_source,
            "upper_bound": self.upper_bound,
            "thresholds": self.thresholds,
        }


def size_chain(n: int, target: int) -> list[int]:
    """Least size of each order-i ancestor of an order-n digraph with >= target arcs."""
    floor = [0] * (n + 1)
    floor[n] = target
    for i in range(n, 1, -1):
        floor[i - 1] = max(0, floor[i] - (2 * floor[i]) // i)
    return floor


def exclusion_bound(n: int, m: int, known_ex_m: int) -> int:
    """floor(n(n-1) ex(m) / (m(m-1))): averaging over order-m induced subdigraphs."""
    if m < 2 or m > n:
        raise ValueError(f"need 2 <= m <= n, got n={n}, m={m}")
    return n * (n - 1) * known_ex_m // (m * (m - 1))


def degree_cap(n: int, k: int) -> int:
    """Max in/out-degree of a source- and sink-free k-geodetic digraph of order n.

    Out-neighbourhood layers 1..k are disjoint and each has at least d^+
    vertices, so 1 + k d^+ <= n.
    """
    return (n - 1) // k


_EX_CACHE: dict[tuple[int, int], int] = {}


def _unconstrained_ex(m: int, k: int, budget: SearchBudget) -> int | None:
    key = (m, k)
    if key not in _EX_CACHE:
        rec = extremal_search(SearchConstraints(m, k), budget=budget, threads=1)
        if not rec.complete or rec.max_size is None:
            return None
        _EX_CACHE[key] = rec.max_size
    return _EX_CACHE[key]


def _ceiling(c: SearchConstraints, prune_exclusion: bool, prune_degree: bool,
             budget: SearchBudget) -> tuple[int, str]:
    n, k = c.n, c.k
    best, source = n * (n - 1) // 2, "no 2-cycles"
    if c.source_sink_free and prune_degree:
        cap = min(n * degree_cap(n, k), -(-n * n // k) - 1)
        if cap < best:
            best, source = cap, "degree cap"
    if prune_exclusion and 3 <= n <= EXCLUSION_SEED_MAX_ORDER + 1:
        # ex(n-1;k) >= floor((n-1)^2/4); skip the seed search when it cannot help
        optimistic = exclusion_bound(n, n - 1, (n - 1) ** 2 // 4)
        if optimistic < best:
            ex_prev = _unconstrained_ex(n - 1, k, budget)
            if ex_prev is not None:
                bound = exclusion_bound(n, n - 1, ex_prev)
                if bound < best:
                    best, source = bound, f"exclusion from ex({n - 1};{k})={ex_prev}"
    return best, source


def _worker(args):
    # args[2] is the target order, which decides the backend
    return _backend.kernels_for(args[2]).search(*args)


def _run_threshold(c: SearchConstraints, target: int, prune_degree: bool, max_nodes: int,
                   deadline: float, threads: int, ckpt: _Checkpoint | None):
    n, k = c.n, c.k
    floor = size_chain(n, target)
    cap = degree_cap(n, k) if (c.source_sink_free and prune_degree) else 0
    common = (n, k, floor, cap, cap, c.forbid_sources_sinks, c.require_strong and n >= 2, prune_degree)
    kern = _backend.kernels_for(n)
    if threads <= 1 and ckpt is None:
        return kern.search([0], 1, *common, max_nodes, deadline, 0)

    split = min(n - 1, max(2, n // 2))
    frontier, nodes, status = kern.search([0], 1, *common, max_nodes, deadline, split)
    if status != "complete":
        return [], nodes, status
    # frontier roots are ticked again inside each subtree
    nodes -= len(frontier)
    done = ckpt.units(target) if ckpt else {}
    jobs = [(list(root), split) + common + (max(1, max_nodes - nodes), deadline, 0)
            for i, root in enumerate(frontier) if i not in done]
    index = [i for i in range(len(frontier)) if i not in done]
    results = {i: (rows, cnt) for i, (rows, cnt) in done.items()}
    status = "complete"
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outs = pool.map(_worker, jobs)
            for i, (rows, cnt, st) in zip(index, outs):
                if st != "complete":
                    status = st
                    continue
                results[i] = (rows, cnt)
                if ckpt:
                    ckpt.record(target, i, rows, cnt)
    else:
        for i, job in zip(index, jobs):
            rows, cnt, st = _worker(job)
            if st != "complete":
                status = st
                break
            results[i] = (rows, cnt)
            if ckpt:
                ckpt.record(target, i, rows, cnt)
    merged = []
    for i in sorted(results):
        rows, cnt = results[i]
        nodes += cnt
        merged.extend(rows)
    if max_nodes and nodes > max_nodes and status == "complete":
        status = "node budget exceeded"
    return merged, nodes, status


class _Checkpoint:
    """Resumable progress: finished thresholds and finished frontier subtrees."""

    def __init__(self, path: str, c: SearchConstraints, flags: dict):
        self.path = path
        self.key = {"constraints": asdict(c), "flags": flags}
        self.empty: list[int] = []
        self.done: dict[int, dict[int, tuple[list, int]]] = {}
        self.nodes_before = 0
        if os.path.exists(path):
            self._load()

    def _load(self) -> None:
        with open(self.path, "rb") as fh:
            blob = fh.read()
        head = len(CHECKPOINT_MAGIC)
        if blob[:head] != CHECKPOINT_MAGIC:
            raise ValueError(f"{self.path} is not a checkpoint file")
        version = int.from_bytes(blob[head:head + 2], "big")
        if version != CHECKPOINT_VERSION:
            raise ValueError(f"checkpoint version {version} unsupported (expected {CHECKPOINT_VERSION})")
        state = json.loads(zlib.decompress(blob[head + 2:]))
        if state["key"] != self.key:
            raise ValueError("checkpoint was written for a different search")
        self.empty = state["empty"]
        self.nodes_before = state["nodes"]
        self.done = {int(t): {int(i): (v[0], v[1]) for i, v in units.items()}
                     for t, units in state["done"].items()}

    def save(self) -> None:
        state = {"key": self.key, "empty": self.empty, "nodes": self.nodes_before,
                 "done": {str(t): {str(i): list(v) for i, v in u.items()} for t, u in self.done.items()}}
        blob = CHECKPOINT_MAGIC + CHECKPOINT_VERSION.to_bytes(2, "big") + zlib.compress(
            json.dumps(state, sort_keys=True).encode())
        tmp = self.path + ".tmp"
        with open(tmp, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, self.path)

    def units(self, target: int) -> dict:
        return self.done.get(target, {})

    def record(self, target: int, i: int, rows, cnt: int) -> None:
        self.done.setdefault(target, {})[i] = ([list(r) for r in rows], cnt)
        self.save()

    def finish_threshold(self, target: int, nodes: int) -> None:
        self.empty.append(target)
        self.nodes_before += nodes
        self.done.pop(target, None)
        self.save()


def _threads_from_env() -> int:
    raw = os.environ.get("GEODEX_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"GEODEX_THREADS must be an integer, got {raw!r}") from None




def extremal_search(c: SearchConstraints, budget: SearchBudget | None = None, *,
                    threads: int | None = None, prune_exclusion: bool = True,
                    prune_degree: bool = True, checkpoint: str | None = None) -> CensusRecord:
    """Maximum size under ``c`` and all extremal classes, in canonical order.

    Exceeding the budget returns a record with a non-"complete" status;
    the answer is never guessed.
    """
    budget = budget or SearchBudget()
    threads = _threads_from_env() if threads is None else max(1, threads)
    t0 = time.monotonic()
    deadline = t0 + budget.max_seconds

    if c.n == 1:
        g = Digraph(1, (0,))
        ok = not c.forbid_sources_sinks and (c.min_size or 0) <= 0
        reps = [g] if ok else []
        return CensusRecord(c, "complete", 0 if ok else None, len(reps), reps, 0,
                            time.monotonic() - t0, 0, "order 1", 0 if ok else None)

    ceiling, source = _ceiling(c, prune_exclusion, prune_degree, budget)
    lowest = c.min_size or 0
    flags = {"prune_exclusion": prune_exclusion, "prune_degree": prune_degree}
    ckpt = _Checkpoint(checkpoint, c, flags) if checkpoint else None

    total = ckpt.nodes_before if ckpt else 0
    log = [{"target": t, "found": 0, "status": "complete (checkpoint)"} for t in (ckpt.empty if ckpt else [])]
    upper = ceiling
    for target in range(ceiling, lowest - 1, -1):
        if ckpt and target in ckpt.empty:
            upper = target - 1
            continue
        remaining = budget.max_nodes - total
        if remaining <= 0:
            status = "node budget exceeded"
            break
        rows, nodes, status = _run_threshold(c, target, prune_degree, remaining, deadline, threads, ckpt)
        total += nodes
        log.append({"target": target, "found": len(rows), "status": status, "nodes": nodes})
        if status != "complete":
            break
        if rows:
            reps = _representatives(c.n, rows)
            sizes = {g.m for g in reps}
            if sizes != {target}:
                raise AssertionError(f"search returned sizes {sorted(sizes)} at target {target}")
            return CensusRecord(c, "complete", target, len(reps), reps, total, time.monotonic() - t0,
                                ceiling, source, target, log)
        if ckpt:
            ckpt.finish_threshold(target, nodes)
        upper = target - 1
    else:
        status = "complete"
    # either no digraph meets the constraints, or the budget ran out
    return CensusRecord(c, status, None, 0, [], total, time.monotonic() - t0, ceiling, source,
                        upper if upper >= lowest else None, log)


def _representatives(n: int, rows_list) -> list[Digraph]:
    forms: dict[CanonicalForm, None] = {}
    for rows in rows_list:
        forms[canonical_form(Digraph(n, tuple(rows)))] = None
    return [f.digraph() for f in sorted(forms)]


def verify_extremal_witness(g: Digraph, c: SearchConstraints, claimed_size: int) -> bool:
    """Independent check of a claimed witness; does not touch the search engine."""
    if g.n != c.n or g.m != claimed_size:
        return False
    if c.min_size is not None and g.m < c.min_size:
        return False
    if not is_k_geodetic(g, c.k).is_k_geodetic:
        return False
    if c.require_strong and not is_strongly_connected(g):
        return False
    if c.forbid_sources_sinks and any(sources_and_sinks(g)):
        return False
    return True


def table(ks: list[int], n_from: int, n_to: int, *, strong: bool = True,
          budget: SearchBudget | None = None, threads: int | None = None) -> list[CensusRecord]:
    """One record per (n, k) cell with n >= k + 1, in row-major order."""
    out = []
    for n in range(n_from, n_to + 1):
        for k in ks:
            if n < k + 1:
                continue
            out.append(extremal_search(SearchConstraints(n, k, require_strong=strong),
                                       budget=budget, threads=threads))
    return out

