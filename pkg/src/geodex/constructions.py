"""Named k-geodetic digraph families.

Every builder returns a :class:`LabeledDigraph`.  Orientation conventions
are fixed: bipartite bulk arcs run Y -> X, matched pairs run x_i -> y_i,
and the triangle of the odd-order families is x -> y -> z -> x.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .digraph import Digraph, DigraphError, converse

__all__ = [
    "ConstructionError",
    "ConstructionSpec",
    "Family",
    "LabeledDigraph",
    "build",
    "family_A",
    "family_B",
    "family_B_prime",
    "family_C",
    "family_D",
    "fixture",
    "g_construction",
    "moore_bound",
    "oriented_bipartite",
    "permutation_digraph",
    "triangle_expansion",
]


class ConstructionError(ValueError):
    """Parameters outside a family's valid range."""


class Family(str, Enum):
    PERMUTATION = "PermutationDigraph"
    ORIENTED_BIPARTITE = "OrientedBipartite"
    TRIANGLE_EXPANSION = "TriangleExpansion"
    FAMILY_A = "FamilyA"
    FAMILY_B = "FamilyB"
    FAMILY_B_PRIME = "FamilyBPrime"
    FAMILY_C = "FamilyC"
    FAMILY_D = "FamilyD"
    G_CONSTRUCTION = "GConstruction"
    FIXTURE = "Fixture"


@dataclass(frozen=True)
class LabeledDigraph:
    digraph: Digraph
    labels: tuple[str, ...]
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(self.labels) != self.digraph.n:
            raise ConstructionError("label map must cover every vertex")
        if len(set(self.labels)) != len(self.labels):
            raise ConstructionError("labels must be unique")

    def label_map(self) -> dict[int, str]:
        return dict(enumerate(self.labels))


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    params: dict = field(default_factory=dict)


class _Builder:
    """Collect labelled vertices and arcs, then freeze into a digraph."""

    def __init__(self) -> None:
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.arcs: list[tuple[int, int]] = []

    def vertex(self, label: str) -> int:
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def arc(self, a: str, b: str) -> None:
        self.arcs.append((self.index[a], self.index[b]))

    def done(self, warnings: tuple[str, ...] = ()) -> LabeledDigraph:
        g = Digraph.from_arcs(len(self.labels), self.arcs)
        if g.m != len(set(self.arcs)):
            raise AssertionError("duplicate arc in construction")
        return LabeledDigraph(g, tuple(self.labels), warnings)


def permutation_digraph(d: int, k: int) -> LabeledDigraph:
    """P(d, k): k-permutations of d+k symbols, arcs shift left and append."""
    if d < 2 or k < 2:
        raise ConstructionError(f"need d >= 2 and k >= 2, got d={d}, k={k}")
    symbols = range(d + k)
    words = list(itertools.permutations(symbols, k))
    index = {w: i for i, w in enumerate(words)}
    arcs = []
    for w in words:
        for x in symbols:
            if x not in w:
                arcs.append((index[w], index[w[1:] + (x,)]))
    sep = "" if d + k <= 10 else ","
    labels = tuple(sep.join(map(str, w)) for w in words)
    return LabeledDigraph(Digraph.from_arcs(len(words), arcs), labels)


def oriented_bipartite(a: int, b: int, t: int) -> LabeledDigraph:
    """K_{a,b} with bulk arcs y_j -> x_i and t matched arcs x_i -> y_i (i < t)."""
    if a < 1 or b < 1:
        raise ConstructionError(f"need a, b >= 1, got a={a}, b={b}")
    if not 0 <= t <= min(a, b):
        raise ConstructionError(f"matching size t={t} out of range 0..{min(a, b)}")
    bld = _Builder()
    for i in range(a):
        bld.vertex(f"x_{i}")
    for j in range(b):
        bld.vertex(f"y_{j}")
    for i in range(a):
        for j in range(b):
            if i == j and i < t:
                bld.arc(f"x_{i}", f"y_{j}")
            else:
                bld.arc(f"y_{j}", f"x_{i}")
    return bld.done()


def triangle_expansion(r: int) -> LabeledDigraph:
    """Order 2r+1, size r^2+2: the strong K_{r,r} plus a triangle on x_0 -> y_0.

    The new vertex w gets y_0 -> w -> x_0, so the matched arc x_0 -> y_0
    becomes one side of a directed triangle.
    """
    if r < 2:
        raise ConstructionError(f"need r >= 2, got {r}")
    base = oriented_bipartite(r, r, r)
    bld = _Builder()
    for lab in base.labels:
        bld.vertex(lab)
    bld.arcs.extend(base.digraph.arcs())
    bld.vertex("w")
    bld.arc("y_0", "w")
    bld.arc("w", "x_0")
    return bld.done()


def _triangle_core(r: int, s: int) -> _Builder:
    # triangle x -> y -> z -> x over K_{r-1,r-1}; x_i -> y_i for i <= r-1-s
    if r < 3:
        raise ConstructionError(f"need r >= 3, got {r}")
    bld = _Builder()
    for lab in ("x", "y", "z"):
        bld.vertex(lab)
    for i in range(1, r):
        bld.vertex(f"x_{i}")
    for i in range(1, r):
        bld.vertex(f"y_{i}")
    bld.arc("x", "y")
    bld.arc("y", "z")
    bld.arc("z", "x")
    for i in range(1, r):
        for j in range(1, r):
            if i == j and i <= r - 1 - s:
                bld.arc(f"x_{i}", f"y_{i}")
            else:
                bld.arc(f"y_{j}", f"x_{i}")
    return bld


def _small_r_warning(r: int) -> tuple[str, ...]:
    if r < 5:
        return (f"r={r} < 5: the classification of extremal digraphs does not cover this order",)
    return ()


def family_A(r: int) -> LabeledDigraph:
    bld = _triangle_core(r, 1)
    bld.arc(f"x_{r - 1}", "x")
    bld.arc("y", f"y_{r - 1}")
    for i in range(1, r - 1):
        bld.arc("x", f"x_{i}")
        bld.arc(f"y_{i}", "y")
    return bld.done(_small_r_warning(r))


def family_B(r: int, t: int) -> LabeledDigraph:
    """Perfect matching; x -> every x_i; y_i -> y for i <= t, else y_i -> z."""
    if not 0 <= t <= r - 1:
        raise ConstructionError(f"t={t} out of range 0..{r - 1}")
    bld = _triangle_core(r, 0)
    for i in range(1, r):
        bld.arc("x", f"x_{i}")
        bld.arc(f"y_{i}", "y" if i <= t else "z")
    return bld.done(_small_r_warning(r))


def family_B_prime(r: int, t: int) -> LabeledDigraph:
    b = family_B(r, t)
    return LabeledDigraph(converse(b.digraph), b.labels, b.warnings)


def family_C(r: int) -> LabeledDigraph:
    bld = _triangle_core(r, 1)
    bld.arc(f"x_{r - 1}", "z")
    bld.arc("z", f"y_{r - 1}")
    for i in range(1, r - 1):
        bld.arc("y", f"x_{i}")
        bld.arc(f"y_{i}", "x")
    return bld.done(_small_r_warning(r))


def family_D(r: int) -> LabeledDigraph:
    bld = _triangle_core(r, 0)
    bld.arc("z", "x_1")
    bld.arc("y_1", "z")
    for i in range(2, r):
        bld.arc("y", f"x_{i}")
        bld.arc(f"y_{i}", "x")
    return bld.done(_small_r_warning(r))


def g_construction(n: int, k: int, rule_iii_to_first: bool = False) -> LabeledDigraph:
    """Strongly connected k-geodetic digraph of order n = k*r + s, s <= r.

    Size is r^2 + (k-2)r + 2s.  With ``rule_iii_to_first`` the arcs from
    u_{i,k} to the first s chains land on u_{j,1} instead of u_{j,2}.
    When k divides n the simpler (isomorphic) description is used.
    """
    if k < 2:
        raise ConstructionError(f"need k >= 2, got {k}")
    if n < k + 1:
        raise ConstructionError(f"need n >= k+1, got n={n}, k={k}")
    r, s = divmod(n, k)
    if s > r:
        raise ConstructionError(f"remainder s={s} exceeds quotient r={r} for n={n}, k={k}")
    bld = _Builder()
    for i in range(1, r + 1):
        for j in range(1, k + 1):
            bld.vertex(f"u_{{{i},{j}}}")
    for t in range(1, s + 1):
        bld.vertex(f"v_{t}")

    def u(i: int, j: int) -> str:
        return f"u_{{{i},{j}}}"

    if s == 0:
        for i in range(1, r + 1):
            for j in range(2, k):
                bld.arc(u(i, j), u(i, j + 1))
            bld.arc(u(i, k), u(i, 1))
            for i2 in range(1, r + 1):
                if i2 != i:
                    bld.arc(u(i, 1), u(i2, 2))
        return bld.done()

    target = 1 if rule_iii_to_first else 2
    for i in range(1, r + 1):
        for j in range(1, k):
            bld.arc(u(i, j), u(i, j + 1))
    for i in range(1, s + 1):
        bld.arc(u(i, k), f"v_{i}")
    for i in range(s + 1, r + 1):
        for j in range(1, s + 1):
            bld.arc(u(i, k), u(j, target))
        for i2 in range(s + 1, r + 1):
            if i2 != i:
                bld.arc(u(i, k), u(i2, 1))
    for t in range(1, s + 1):
        for i in range(1, r + 1):
            bld.arc(f"v_{t}", u(i, 1))
    return bld.done()


_FIXTURES = {
    # two u->v walks of length 2
    "Hoof": (("u", "w", "x", "v"), (("u", "w"), ("u", "x"), ("w", "v"), ("x", "v"))),
    "C3": (("a", "b", "c"), (("a", "b"), ("b", "c"), ("c", "a"))),
    # two directed triangles sharing the arc x -> y
    "Diamond": (("x", "y", "z", "z'"), (("x", "y"), ("y", "z"), ("z", "x"), ("y", "z'"), ("z'", "x"))),
    "TwoTrianglesMatched6": (
        ("a_0", "a_1", "a_2", "b_0", "b_1", "b_2"),
        (("a_1", "a_0"), ("a_2", "a_1"), ("a_0", "a_2"),
         ("b_0", "b_1"), ("b_1", "b_2"), ("b_2", "b_0"),
         ("b_0", "a_0"), ("b_1", "a_1"), ("b_2", "a_2")),
    ),
}


def fixture(name: str) -> LabeledDigraph:
    try:
        labels, arcs = _FIXTURES[name]
    except KeyError:
        raise ConstructionError(f"unknown fixture {name!r}; choose from {sorted(_FIXTURES)}") from None
    bld = _Builder()
    for lab in labels:
        bld.vertex(lab)
    for a, b in arcs:
        bld.arc(a, b)
    return bld.done()


def moore_bound(d: int, k: int) -> int:
    if d < 1 or k < 0:
        raise ConstructionError(f"need d >= 1 and k >= 0, got d={d}, k={k}")
    return sum(d**t for t in range(k + 1))


_DISPATCH = {
    Family.PERMUTATION: (permutation_digraph, ("d", "k")),
    Family.ORIENTED_BIPARTITE: (oriented_bipartite, ("a", "b", "t")),
    Family.TRIANGLE_EXPANSION: (triangle_expansion, ("r",)),
    Family.FAMILY_A: (family_A, ("r",)),
    Family.FAMILY_B: (family_B, ("r", "t")),
    Family.FAMILY_B_PRIME: (family_B_prime, ("r", "t")),
    Family.FAMILY_C: (family_C, ("r",)),
    Family.FAMILY_D: (family_D, ("r",)),
    Family.G_CONSTRUCTION: (g_construction, ("n", "k")),
}


def build(spec: ConstructionSpec) -> LabeledDigraph:
    """Build the digraph described by ``spec``; missing parameters raise."""
    if spec.family is Family.FIXTURE:
        return fixture(spec.params["name"])
    fn, names = _DISPATCH[spec.family]
    missing = [p for p in names if p not in spec.params]
    if missing:
        raise ConstructionError(f"{spec.family.value} needs parameters {missing}")
    kwargs = {}
    if spec.family is Family.G_CONSTRUCTION and spec.params.get("rule_iii_to_first"):
        kwargs["rule_iii_to_first"] = True
    try:
        return fn(*(int(spec.params[p]) for p in names), **kwargs)
    except DigraphError as exc:
        raise ConstructionError(str(exc)) from exc
