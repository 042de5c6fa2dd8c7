"""Graphs on submodule vertices, with adjacency given by essential sums.

Vertices are nontrivial submodules, addressed by their canonical lattice id.
Two distinct vertices are adjacent exactly when their sum is an essential
submodule. The full graph takes all nontrivial submodules; the proper variant
keeps only the non-essential ones.

Adjacency is stored both as a numpy bool matrix and as per-vertex bitmask
ints; traversals work on the ints (whole frontiers as single big integers).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CliqueSearchCapExceeded, HypothesisNotMet
from .lattice import SubmoduleLattice

INF = math.inf


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class EssGraph:
    def __init__(self, lattice: SubmoduleLattice, kind: str):
        if kind not in ("s", "n"):
            raise ValueError("kind must be 's' or 'n'")
        self.lattice = lattice
        self.kind = kind
        ids = lattice.nontrivial_ids()
        if kind == "n":
            ids = [i for i in ids if not lattice.is_essential(i)]
        self.vertex_ids = tuple(ids)
        self.n_vertices = len(ids)
        self.pos_of: dict[int, int] = {lid: p for p, lid in enumerate(ids)}

        if self.n_vertices:
            vid = np.array(ids, dtype=np.int32)
            joins = lattice.join_id[np.ix_(vid, vid)]
            adj = lattice.essential[joins]
            np.fill_diagonal(adj, False)
        else:
            adj = np.zeros((0, 0), dtype=bool)
        self.adj = adj
        self.rows: list[int] = []
        for p in range(self.n_vertices):
            bits = np.packbits(adj[p], bitorder="little")
            self.rows.append(int.from_bytes(bits.tobytes(), "little"))
        self.full_mask = (1 << self.n_vertices) - 1 if self.n_vertices else 0
        self._diameter: float | None = None
        self._girth: float | None = None

    # -- basics ---------------------------------------------------------------

    def has_vertex(self, lid: int) -> bool:
        return lid in self.pos_of

    def degree(self, lid: int) -> int:
        return self.rows[self.pos_of[lid]].bit_count()

    def degrees(self) -> dict[int, int]:
        return {lid: self.rows[p].bit_count() for p, lid in enumerate(self.vertex_ids)}

    def neighbors(self, lid: int) -> list[int]:
        p = self.pos_of[lid]
        return [self.vertex_ids[q] for q in _iter_bits(self.rows[p])]

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.adj[self.pos_of[a], self.pos_of[b]])

    def n_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for p in range(self.n_vertices):
            for q in _iter_bits(self.rows[p] >> (p + 1)):
                out.append((self.vertex_ids[p], self.vertex_ids[p + 1 + q]))
        return out

    # -- traversal metrics ------------------------------------------------------

    def _bfs_dist(self, start: int) -> list[int]:
        """Distances (positions) from position `start`; -1 if unreachable."""
        dist = [-1] * self.n_vertices
        dist[start] = 0
        frontier = 1 << start
        seen = frontier
        d = 0
        while frontier:
            nxt = 0
            for p in _iter_bits(frontier):
                nxt |= self.rows[p]
            nxt &= ~seen
            d += 1
            for p in _iter_bits(nxt):
                dist[p] = d
            seen |= nxt
            frontier = nxt
        return dist

    def component_count(self) -> int:
        seen = 0
        parts = 0
        for p in range(self.n_vertices):
            if seen >> p & 1:
                continue
            parts += 1
            frontier = 1 << p
            seen |= frontier
            while frontier:
                nxt = 0
                for q in _iter_bits(frontier):
                    nxt |= self.rows[q]
                nxt &= ~seen
                seen |= nxt
                frontier = nxt
        return parts

    def is_connected(self) -> bool:
        if self.n_vertices <= 1:
            return True
        return self.component_count() == 1

    def diameter(self) -> float:
        """Max eccentricity; inf when disconnected, 0 below two vertices."""
        if self._diameter is not None:
            return self._diameter
        if self.n_vertices <= 1:
            self._diameter = 0
            return 0
        worst = 0
        for p in range(self.n_vertices):
            dist = self._bfs_dist(p)
            if -1 in dist:
                worst = INF
                break
            worst = max(worst, max(dist))
        self._diameter = worst
        return worst

    def triangle(self) -> tuple[int, int, int] | None:
        """Some triangle as lattice ids, or None."""
        for p in range(self.n_vertices):
            rp = self.rows[p]
            for q in _iter_bits(rp >> (p + 1)):
                qq = p + 1 + q
                common = rp & self.rows[qq]
                if common:
                    r = next(_iter_bits(common))
                    return (
                        self.vertex_ids[p],
                        self.vertex_ids[qq],
                        self.vertex_ids[r],
                    )
        return None

    def triangle_free(self) -> bool:
        return self.triangle() is None

    def girth(self) -> float:
        """Length of a shortest cycle, inf for forests."""
        if self._girth is not None:
            return self._girth
        self._girth = self._compute_girth()
        return self._girth

    def _compute_girth(self) -> float:
        if self.triangle() is not None:
            return 3
        # no triangles: a 4-cycle exists iff some pair shares two neighbors
        for p in range(self.n_vertices):
            for q in range(p + 1, self.n_vertices):
                if (self.rows[p] & self.rows[q]).bit_count() >= 2:
                    return 4
        # sparse leftover: per-edge shortest alternative path
        best = INF
        for p in range(self.n_vertices):
            for q in _iter_bits(self.rows[p] >> (p + 1)):
                qq = p + 1 + q
                alt = self._dist_avoiding_edge(p, qq)
                if alt >= 0:
                    best = min(best, alt + 1)
        return best

    def _dist_avoiding_edge(self, a: int, b: int) -> int:
        frontier = 1 << a
        seen = frontier
        d = 0
        while frontier:
            nxt = 0
            for p in _iter_bits(frontier):
                r = self.rows[p]
                if p == a:
                    r &= ~(1 << b)
                nxt |= r
            nxt &= ~seen
            d += 1
            if nxt >> b & 1:
                return d
            seen |= nxt
            frontier = nxt
        return -1

    # -- shape predicates -------------------------------------------------------

    def is_complete(self) -> bool:
        n = self.n_vertices
        return all(r.bit_count() == n - 1 for r in self.rows) if n else True

    def k_regular(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        if not self.n_vertices:
            return 0
        degs = {r.bit_count() for r in self.rows}
        return degs.pop() if len(degs) == 1 else None

    def is_tree(self) -> bool:
        return (
            self.n_vertices >= 1
            and self.is_connected()
            and self.n_edges() == self.n_vertices - 1
        )

    def is_star(self) -> bool:
        """A tree with a center adjacent to everything else; K1 and K2 count."""
        if not self.is_tree():
            return False
        if self.n_vertices == 1:
            return True
        return any(r.bit_count() == self.n_vertices - 1 for r in self.rows)

    def star_centers(self) -> list[int]:
        if not self.is_star():
            return []
        if self.n_vertices == 1:
            return [self.vertex_ids[0]]
        return [
            self.vertex_ids[p]
            for p, r in enumerate(self.rows)
            if r.bit_count() == self.n_vertices - 1
        ]

    def star_center(self) -> int | None:
        """Canonically first center of a star graph, None for non-stars."""
        centers = self.star_centers()
        return centers[0] if centers else None

    def universal_vertices(self) -> list[int]:
        return [
            self.vertex_ids[p]
            for p, r in enumerate(self.rows)
            if r.bit_count() == self.n_vertices - 1
        ]

    def is_clique(self, lids: Iterable[int]) -> bool:
        ps = [self.pos_of[lid] for lid in lids]
        return all(
            self.adj[a, b] for i, a in enumerate(ps) for b in ps[i + 1 :]
        )

    def is_independent_set(self, lids: Iterable[int]) -> bool:
        ps = [self.pos_of[lid] for lid in lids]
        return not any(self.adj[a, b] for i, a in enumerate(ps) for b in ps[i + 1 :])

    def find_clique(self, size: int, max_nodes: int = 1_000_000) -> list[int] | None:
        """Search for a clique of the given size; None if there is none.

        Plain DFS over candidate sets kept as bitmasks. Raises
        CliqueSearchCapExceeded when the node budget runs out.
        """
        if size <= 0:
            return []
        nodes = 0

        def grow(chosen: list[int], cand: int) -> list[int] | None:
            nonlocal nodes
            if len(chosen) == size:
                return chosen
            if len(chosen) + cand.bit_count() < size:
                return None
            nodes += 1
            if nodes > max_nodes:
                raise CliqueSearchCapExceeded(
                    f"clique search exceeded {max_nodes} nodes"
                )
            m = cand
            for p in _iter_bits(m):
                got = grow(chosen + [p], cand & self.rows[p] & (self.full_mask << (p + 1)))
                if got is not None:
                    return got
            return None

        got = grow([], self.full_mask)
        if got is None:
            return None
        return [self.vertex_ids[p] for p in got]

    def complement_components(self) -> list[list[int]]:
        """Vertex classes of the complement graph, as lattice-id lists."""
        comp_rows = [
            (~r) & self.full_mask & ~(1 << p) for p, r in enumerate(self.rows)
        ]
        seen = 0
        out = []
        for p in range(self.n_vertices):
            if seen >> p & 1:
                continue
            group = 1 << p
            frontier = group
            seen |= group
            while frontier:
                nxt = 0
                for q in _iter_bits(frontier):
                    nxt |= comp_rows[q]
                nxt &= ~seen
                group |= nxt
                seen |= nxt
                frontier = nxt
            out.append([self.vertex_ids[q] for q in _iter_bits(group)])
        return out

    def complete_multipartite_parts(self) -> list[list[int]] | None:
        """Partition into independent classes with all cross edges, or None.

        Such a partition exists iff non-adjacency is transitive; the classes
        are then the complement's components.
        """
        parts = self.complement_components()
        pos_parts = [[self.pos_of[lid] for lid in part] for part in parts]
        part_of = {}
        for k, ps in enumerate(pos_parts):
            for p in ps:
                part_of[p] = k
        for p in range(self.n_vertices):
            r = self.rows[p]
            for q in _iter_bits(r):
                if part_of[p] == part_of[q]:
                    return None
            want = self.full_mask
            for s in pos_parts[part_of[p]]:
                want &= ~(1 << s)
            if r != want:
                return None
        return parts

    # -- reporting ---------------------------------------------------------------

    def label_of(self, lid: int) -> str:
        return self.lattice.subs[lid].label

    def report(self) -> "GraphReport":
        degs = self.degrees()
        hist: dict[int, int] = {}
        for d in degs.values():
            hist[d] = hist.get(d, 0) + 1
        return GraphReport(
            kind=self.kind,
            vertex_count=self.n_vertices,
            edge_count=self.n_edges(),
            degrees=degs,
            degree_histogram=dict(sorted(hist.items())),
            min_degree=min(degs.values()) if degs else 0,
            max_degree=max(degs.values()) if degs else 0,
            n_components=self.component_count(),
            is_connected=self.is_connected(),
            diameter=self.diameter(),
            girth=self.girth(),
            is_complete=self.is_complete(),
            k_regular=self.k_regular(),
            triangle_free=self.triangle_free(),
            is_tree=self.is_tree(),
            star_center=self.star_center(),
            universal_vertices=tuple(self.universal_vertices()),
        )

    def export_dot(self, name: str | None = None) -> str:
        gname = name or f"{self.kind}_graph"
        lines = [f"graph {json.dumps(gname)} {{"]
        for lid in self.vertex_ids:
            lines.append(f'  v{lid} [label={json.dumps(self.label_of(lid))}];')
        for a, b in self.edges():
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphReport:
    kind: str
    vertex_count: int
    edge_count: int
    degrees: dict[int, int]
    degree_histogram: dict[int, int]
    min_degree: int
    max_degree: int
    n_components: int
    is_connected: bool
    diameter: float
    girth: float
    is_complete: bool
    k_regular: int | None
    triangle_free: bool
    is_tree: bool
    star_center: int | None
    universal_vertices: tuple[int, ...]

    def as_dict(self) -> dict:
        """JSON-ready dict; field order is fixed, inf encodes as \"inf\"."""

        def enc(v):
            if isinstance(v, float) and math.isinf(v):
                return "inf"
            return v

        return {
            "kind": self.kind,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
            "degree_histogram": {str(k): v for k, v in self.degree_histogram.items()},
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "n_components": self.n_components,
            "is_connected": self.is_connected,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "is_complete": self.is_complete,
            "k_regular": self.k_regular,
            "triangle_free": self.triangle_free,
            "is_tree": self.is_tree,
            "star_center": self.star_center,
            "universal_vertices": list(self.universal_vertices),
        }


@dataclass(frozen=True)
class NPartiteWitness:
    """Either an n-part independent partition or an (n+1)-clique refuting it."""

    kind: str  # "partition" or "clique"
    parts: tuple[tuple[int, ...], ...] | None
    clique: tuple[int, ...] | None
    valid: bool
    detail: str


def n_partite_witness(lattice: SubmoduleLattice, s_graph: EssGraph) -> NPartiteWitness:
    """Constructive side of the n-partiteness dichotomy over the coatoms.

    Semisimple case: class vertex A into the part of the first coatom
    containing it; parts are checked nonempty and independent. Otherwise the
    radical is nonzero and {complement-of-radical, coatoms} is checked to be
    an (n+1)-clique, which rules any n-partition out. When the radical is
    essential it has no nonzero complement, but it is then itself adjacent
    to every coatom, so it serves as the extra clique vertex.
    """
    coatoms = lattice.coatoms
    n = len(coatoms)
    if n < 2:
        raise HypothesisNotMet(f"need at least 2 maximal submodules, have {n}")
    if lattice.radical_id == lattice.zero_id:
        parts: list[list[int]] = [[] for _ in range(n)]
        coatom_masks = [lattice.subs[c].mask for c in coatoms]
        for v in s_graph.vertex_ids:
            mv = lattice.subs[v].mask
            for k, cm in enumerate(coatom_masks):
                if mv & cm == mv:
                    parts[k].append(v)
                    break
            else:
                return NPartiteWitness(
                    "partition", None, None, False,
                    f"vertex {v} lies in no maximal submodule",
                )
        for k, part in enumerate(parts):
            if not part:
                return NPartiteWitness(
                    "partition", None, None, False, f"part {k} empty"
                )
            if not s_graph.is_independent_set(part):
                return NPartiteWitness(
                    "partition", None, None, False, f"part {k} has an internal edge"
                )
        return NPartiteWitness(
            "partition", tuple(tuple(p) for p in parts), None, True,
            f"{n} independent parts",
        )

    rad = lattice.radical_id
    if lattice.is_essential(rad):
        extra = rad
    else:
        extra = lattice.complements_of(rad)[0]
    members = (extra,) + tuple(coatoms)
    if len(set(members)) != len(members) or not all(
        s_graph.has_vertex(v) for v in members
    ):
        return NPartiteWitness("clique", None, members, False, "degenerate witness set")
    ok = s_graph.is_clique(members)
    return NPartiteWitness(
        "clique", None, members, ok,
        f"{n + 1}-clique over the maximal submodules" if ok else "witness set not a clique",
    )


def build_graph(lattice: SubmoduleLattice, kind: str) -> EssGraph:
    key = {"s": "s", "full": "s", "n": "n", "proper": "n"}.get(kind)
    if key is None:
        raise ValueError(f"unknown graph kind {kind!r}")
    return EssGraph(lattice, key)


def sum_essential_graph(lattice: SubmoduleLattice) -> EssGraph:
    return EssGraph(lattice, "s")


def proper_sum_essential_graph(lattice: SubmoduleLattice) -> EssGraph:
    return EssGraph(lattice, "n")


def export_dot(graph: EssGraph, name: str | None = None) -> str:
    return graph.export_dot(name)


def export_json(graph: EssGraph) -> str:
    return json.dumps(graph.report().as_dict(), indent=2) + "\n"
