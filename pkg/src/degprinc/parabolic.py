"""Standard parabolic subgroups and the stratum bounds derived from them.

For a subset ``I`` of simple nodes, ``W_I`` acts on the whole ambient space,
so its invariant ring always contains linear forms when ``I`` is not
everything; its top degree *on the space* is ``max(1, top(W_I))``.  A subset
certifies degree ``d`` when twice that top degree exceeds ``d``; the bound it
gives is the dimension of the fixed space of ``W_I`` minus one, which is
``|I| - 1`` for an essential group plus the dimension of the group's own fixed
space otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .coxeter import GroupDescriptor, GroupError, catalog, dynkin


class ParabolicError(ValueError):
    pass


@dataclass(frozen=True)
class SubdiagramDecomposition:
    """Irreducible components of the subdiagram on ``nodes``."""

    nodes: tuple
    components: tuple  # GroupDescriptor per component
    parts: tuple  # node lists, aligned with components

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def name(self) -> str:
        return type_name(self.components)


def _type_key(g: GroupDescriptor) -> tuple:
    return (g.family, g.param)


def normalize_type(g: GroupDescriptor) -> GroupDescriptor:
    """Identify coincident names: B1=A1, D3=A3, I2(3)=A2, I2(4)=B2."""
    if g.family == "B" and g.param == 1:
        return catalog("A", 1)
    if g.family == "D" and g.param == 3:
        return catalog("A", 3)
    if g.family == "I2" and g.param == 3:
        return catalog("A", 2)
    if g.family == "I2" and g.param == 4:
        return catalog("B", 2)
    return g


def type_name(components: Sequence[GroupDescriptor]) -> str:
    """Product name such as ``A1xA2``; the trivial group is ``A0``."""
    comps = []
    for c in components:
        if c.family == "D" and c.param == 2:
            comps += [catalog("A", 1)] * 2
        else:
            comps.append(normalize_type(c))
    if not comps:
        return "A0"
    comps.sort(key=lambda c: (c.family, c.param))
    return "x".join(c.label for c in comps)


def _classify_component(diagram, nodes: list[int]) -> GroupDescriptor:
    k = len(nodes)
    if k == 1:
        return catalog("A", 1)
    adj = {v: [w for w in diagram.neighbors(v) if w in nodes] for v in nodes}
    nedges = sum(len(a) for a in adj.values()) // 2
    if nedges != k - 1:
        raise ParabolicError("subdiagram contains a cycle")
    degree = {v: len(a) for v, a in adj.items()}
    branch = [v for v in nodes if degree[v] >= 3]
    if not branch:
        # a path: walk it from one end
        ends = [v for v in nodes if degree[v] == 1]
        order = [ends[0]]
        while len(order) < k:
            order.append(next(w for w in adj[order[-1]] if w not in order))
        labels = [diagram.label(order[i], order[i + 1]) for i in range(k - 1)]
        if k == 2:
            return normalize_type(catalog("I2", labels[0]) if labels[0] != 3 else catalog("A", 2))
        if all(m == 3 for m in labels):
            return catalog("A", k)
        if labels[-1] == 4 and all(m == 3 for m in labels[:-1]):
            return catalog("B", k)
        if labels[0] == 4 and all(m == 3 for m in labels[1:]):
            return catalog("B", k)
        if labels == [3, 4, 3]:
            return catalog("F4")
        if labels in ([5, 3], [3, 5]):
            return catalog("H3")
        if labels in ([5, 3, 3], [3, 3, 5]):
            return catalog("H4")
        raise ParabolicError(f"unclassifiable path with labels {labels}")
    if len(branch) != 1 or degree[branch[0]] != 3:
        raise ParabolicError("unclassifiable branching subdiagram")
    c = branch[0]
    if any(diagram.label(c, w) != 3 for w in adj[c]):
        raise ParabolicError("labeled edge at a branch node")
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            if any(diagram.label(cur, w) != 3 for w in adj[cur]):
                raise ParabolicError("labeled edge in a branched subdiagram")
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return catalog("D", k)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return catalog(f"E{arms[2] + 4}")
    raise ParabolicError(f"unclassifiable branching subdiagram with arms {arms}")


def classify_subdiagram(g: GroupDescriptor, subset: Sequence[int]) -> SubdiagramDecomposition:
    """Split the subdiagram on ``subset`` into classified irreducible pieces."""
    diagram = dynkin(g)
    subset = sorted(set(subset))
    if any(v not in diagram.nodes for v in subset):
        raise ParabolicError(f"nodes {subset} not in the diagram of {g.label}")
    parts = diagram.components(subset)
    comps = tuple(_classify_component(diagram, p) for p in parts)
    return SubdiagramDecomposition(tuple(subset), comps, tuple(tuple(p) for p in parts))


def top_degree(dec: SubdiagramDecomposition) -> int:
    """Largest degree among the components; 0 for the empty decomposition."""
    return max((c.top_degree for c in dec.components), default=0)


def _space_top(dec: SubdiagramDecomposition) -> int:
    return max(1, top_degree(dec))


@dataclass(frozen=True)
class ParNum:
    """``value`` with the certifying subset and its type."""

    d: int
    value: int
    subset: tuple
    decomposition: SubdiagramDecomposition

    @property
    def witness_type(self) -> str:
        return self.decomposition.name

    @property
    def witness_top(self) -> int:
        return _space_top(self.decomposition)


@lru_cache(maxsize=None)
def _subsets(g: GroupDescriptor):
    nodes = dynkin(g).nodes
    out = []
    for r in range(len(nodes) + 1):
        for sub in combinations(nodes, r):
            dec = classify_subdiagram(g, sub)
            out.append((sub, dec, _space_top(dec), len(sub) - 1 + g.fixed_dim))
    return out


def parnum_detail(g: GroupDescriptor, d: int) -> ParNum:
    """Exhaustive subset search for the bound at degree ``d`` with its witness.

    Among the subsets attaining the value the witness is the one with the
    largest top degree, ties broken by lexicographic node order.
    """
    if d < 0:
        raise ParabolicError("d must be nonnegative")
    qual = [s for s in _subsets(g) if 2 * s[2] > d]
    if not qual:
        raise ParabolicError(
            f"no parabolic certificate for {g.label} at d={d} (needs d < {2 * g.top_degree})")
    value = max(0, min(s[3] for s in qual))
    best = min((s for s in qual if s[3] <= value), key=lambda s: (-s[2], s[0]))
    return ParNum(d, value, best[0], best[1])


def parnum(g: GroupDescriptor, d: int) -> int:
    return parnum_detail(g, d).value


def ambient_degrees(g: GroupDescriptor) -> tuple:
    """Degrees on the ambient space: one degree-1 invariant per fixed dimension."""
    return (1,) * g.fixed_dim + tuple(g.degrees)


def secparnum(g: GroupDescriptor, k: int) -> int:
    """Bound at twice the ``k``-th ambient degree.

    When that degree is the top degree no proper subset certifies it and the
    whole space (dimension ``ambient``) is returned.
    """
    degs = ambient_degrees(g)
    if not 1 <= k <= len(degs):
        raise ParabolicError(f"k must be in 1..{len(degs)}")
    d = 2 * degs[k - 1]
    if d >= 2 * g.top_degree:
        return g.ambient
    return parnum(g, d)


@dataclass
class ParabolicBound:
    group: GroupDescriptor
    table: dict = field(default_factory=dict)  # d -> ParNum
    sec: dict = field(default_factory=dict)  # k -> int

    def rows(self) -> list[dict]:
        """Consecutive ``d`` with equal value and witness, merged into ranges."""
        out: list[dict] = []
        for d in sorted(self.table):
            r = self.table[d]
            key = (r.value, r.witness_type, r.witness_top)
            if out and out[-1]["key"] == key and out[-1]["d_to"] == d - 1:
                out[-1]["d_to"] = d
            else:
                out.append({"key": key, "d_from": d, "d_to": d})
        return [{"d_from": o["d_from"], "d_to": o["d_to"], "parnum": o["key"][0],
                 "W": o["key"][1], "top_W": o["key"][2]} for o in out]

    def to_json(self) -> dict:
        return {"group": self.group.label, "rows": self.rows(),
                "secparnum": [{"k": k, "value": v} for k, v in sorted(self.sec.items())]}

    def to_text(self) -> str:
        lines = [f"{self.group.label}", f"{'d':>9}  parNum  {'W':<8} d_n(W)"]
        for r in self.rows():
            span = f"{r['d_from']}-{r['d_to']}"
            lines.append(f"{span:>9}  {r['parnum']:>6}  {r['W']:<8} {r['top_W']:>6}")
        lines.append(f"{'k':>9}  SecParNum")
        for k, v in sorted(self.sec.items()):
            lines.append(f"{k:>9}  {v:>9}")
        return "\n".join(lines)


def table1(g: GroupDescriptor) -> ParabolicBound:
    """Bounds for every ``0 <= d < 2 d_n(G)`` and every ``k``."""
    b = ParabolicBound(g)
    for d in range(2 * g.top_degree):
        b.table[d] = parnum_detail(g, d)
    for k in range(1, len(ambient_degrees(g)) + 1):
        b.sec[k] = secparnum(g, k)
    return b


__all__ = [
    "GroupError", "ParabolicBound", "ParabolicError", "ParNum", "SubdiagramDecomposition",
    "ambient_degrees", "classify_subdiagram", "normalize_type", "parnum", "parnum_detail",
    "secparnum", "table1", "top_degree", "type_name",
]
