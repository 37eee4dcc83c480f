"""Side-information graphs on three receivers.

An arc ``(i, j)`` means receiver ``i`` already knows message ``M_j``. Receiver 1
is the strongest, so arcs split into a weak-to-strong part (``i > j``, the group
leader) and a strong-to-weak part (``i < j``, the subgraph).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

VERTICES = (1, 2, 3)
WEAK_TO_STRONG = ((2, 1), (3, 1), (3, 2))
STRONG_TO_WEAK = ((1, 2), (1, 3), (2, 3))

# Index tables kept as data so the numbering can be corrected without code changes.
# Leaders 1, 4 and 7 are fixed by the group definitions; 3 and 5 follow from the
# enhanced-channel relabelling (receivers 2 and 3 swapped once N3 -> N2); 2, 6, 8
# are provisional.
LEADERS: dict[int, frozenset] = {
    1: frozenset(),
    2: frozenset({(3, 2)}),
    3: frozenset({(2, 1)}),
    4: frozenset({(3, 1)}),
    5: frozenset({(2, 1), (3, 2)}),
    6: frozenset({(2, 1), (3, 1)}),
    7: frozenset({(3, 1), (3, 2)}),
    8: frozenset({(2, 1), (3, 1), (3, 2)}),
}
SUBGRAPHS: dict[int, frozenset] = {
    1: frozenset(),
    2: frozenset({(2, 3)}),
    3: frozenset({(1, 2)}),
    4: frozenset({(1, 3)}),
    5: frozenset({(1, 2), (2, 3)}),
    6: frozenset({(1, 2), (1, 3)}),
    7: frozenset({(1, 3), (2, 3)}),
    8: frozenset({(1, 2), (1, 3), (2, 3)}),
}
_LEADER_INDEX = {arcs: j for j, arcs in LEADERS.items()}
_SUBGRAPH_INDEX = {arcs: k for k, arcs in SUBGRAPHS.items()}


class GraphError(ValueError):
    pass


def _check_vertex(i) -> int:
    if isinstance(i, bool) or i not in VERTICES:
        raise GraphError(f"invalid vertex {i!r}; expected one of 1, 2, 3")
    return int(i)


@dataclass(frozen=True)
class SideInfoGraph:
    arcs: frozenset

    def __init__(self, arcs=()):
        cleaned = set()
        for arc in arcs:
            try:
                i, j = arc
            except (TypeError, ValueError):
                raise GraphError(f"arc {arc!r} is not a pair") from None
            i, j = _check_vertex(i), _check_vertex(j)
            if i == j:
                raise GraphError(f"self-loop {i}-{j} is not allowed")
            cleaned.add((i, j))
        object.__setattr__(self, "arcs", frozenset(cleaned))

    @classmethod
    def parse(cls, text: str) -> "SideInfoGraph":
        """Parse ``"3-1,2-3"`` style arc lists; the empty string is the empty graph."""
        arcs = []
        for tok in text.replace(" ", "").split(","):
            if not tok:
                continue
            parts = tok.split("-")
            if len(parts) != 2:
                raise GraphError(f"cannot parse arc {tok!r}; expected 'i-j'")
            try:
                arcs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise GraphError(f"cannot parse arc {tok!r}; expected integers") from None
        return cls(arcs)

    @classmethod
    def from_json(cls, obj) -> "SideInfoGraph":
        if not isinstance(obj, dict) or "arcs" not in obj:
            raise GraphError('graph JSON must look like {"arcs": [[3, 1], ...]}')
        return cls(tuple(a) if isinstance(a, list) else a for a in obj["arcs"])

    def to_json(self) -> dict:
        return {"arcs": [list(a) for a in sorted(self.arcs)]}

    def __str__(self):
        return ",".join(f"{i}-{j}" for i, j in sorted(self.arcs))

    def __or__(self, other: "SideInfoGraph") -> "SideInfoGraph":
        return SideInfoGraph(self.arcs | other.arcs)


def out_neighbors(g: SideInfoGraph, i: int) -> frozenset:
    i = _check_vertex(i)
    return frozenset(j for a, j in g.arcs if a == i)


@dataclass(frozen=True)
class GroupDecomposition:
    leader_index: int
    subgraph_index: int
    leader_arcs: frozenset
    subgraph_arcs: frozenset

    def to_json(self) -> dict:
        return {
            "group": self.leader_index,
            "k": self.subgraph_index,
            "leader_arcs": [list(a) for a in sorted(self.leader_arcs)],
            "subgraph_arcs": [list(a) for a in sorted(self.subgraph_arcs)],
        }


def decompose(g: SideInfoGraph) -> GroupDecomposition:
    leader = frozenset(a for a in g.arcs if a[0] > a[1])
    sub = frozenset(a for a in g.arcs if a[0] < a[1])
    return GroupDecomposition(_LEADER_INDEX[leader], _SUBGRAPH_INDEX[sub], leader, sub)


def member_graph(group: int, k: int) -> SideInfoGraph:
    """The graph G_{1j} union G_{2k}."""
    if group not in LEADERS or k not in SUBGRAPHS:
        raise GraphError(f"group and k must be in 1..8 (got {group}, {k})")
    return SideInfoGraph(LEADERS[group] | SUBGRAPHS[k])


def is_group4(g: SideInfoGraph) -> bool:
    return decompose(g).leader_arcs == LEADERS[4]


def is_group7(g: SideInfoGraph) -> bool:
    return decompose(g).leader_arcs == LEADERS[7]


def has_cycle(arcs, vertices) -> bool:
    """Directed cycle check on the subgraph induced by ``vertices`` (DFS colouring)."""
    vs = set(vertices)
    adj = {v: [j for i, j in arcs if i == v and j in vs] for v in vs}
    state = dict.fromkeys(vs, 0)

    def visit(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in sorted(vs))


def induced_acyclic_vertex_sets(g: SideInfoGraph) -> list[tuple[int, ...]]:
    """Nonempty vertex sets whose induced subgraph is acyclic, by size then lexicographic."""
    out = []
    for size in (1, 2, 3):
        for vs in itertools.combinations(VERTICES, size):
            if not has_cycle(g.arcs, vs):
                out.append(vs)
    return out


def all_graphs():
    """All 64 side-information graphs on three vertices."""
    arcs = WEAK_TO_STRONG + STRONG_TO_WEAK
    for bits in range(64):
        yield SideInfoGraph(a for n, a in enumerate(arcs) if bits >> n & 1)
