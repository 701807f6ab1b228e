"""Finite multigraphs and the point-level surgery calculus.

Graphs may have loop edges and parallel edges. Every edge carries a fixed
reference orientation (the order of its endpoint pair at creation); interior
points of edges are addressed by exact rational positions in (0,1) measured
along that orientation.

The operations here are the building blocks for everything else in the
package: blow-up at a set of point loci, the inverse blow-down, connected
sums along divisor bijections, complement components, and 2-connectivity.
All operations are pure; all iteration orders are sorted so that outputs are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

import networkx as nx


class SurgeryError(ValueError):
    """Raised when a surgery operation's preconditions are violated."""


@dataclass(frozen=True, order=True)
class Vertex:
    """A point locus at a vertex."""

    vertex: str


@dataclass(frozen=True, order=True)
class Interior:
    """A point locus in the interior of an edge.

    position is measured along the edge's reference orientation and must lie
    strictly between 0 and 1.
    """

    edge: str
    position: Fraction

    def __post_init__(self):
        pos = Fraction(self.position)
        object.__setattr__(self, "position", pos)
        if not (0 < pos < 1):
            raise SurgeryError(f"interior position {pos} not in (0,1)")


PointLocus = Vertex | Interior


def _pos_token(p: Fraction) -> str:
    return f"{p.numerator}_{p.denominator}"


class Multigraph:
    """A finite multigraph with string ids.

    edges maps edge id -> (v, w); the tuple order is the edge's reference
    orientation (tail, head). Loops (v == w) are allowed.
    """

    __slots__ = ("_vertices", "_edges")

    def __init__(self, vertices: Iterable[str], edges: Mapping[str, tuple[str, str]]):
        self._vertices = frozenset(vertices)
        self._edges = dict(edges)
        for e, (v, w) in self._edges.items():
            if v not in self._vertices or w not in self._vertices:
                raise SurgeryError(f"edge {e!r} references missing vertex")

    @property
    def vertices(self) -> frozenset[str]:
        return self._vertices

    @property
    def edges(self) -> dict[str, tuple[str, str]]:
        return dict(self._edges)

    def vertex_ids(self) -> list[str]:
        return sorted(self._vertices)

    def edge_ids(self) -> list[str]:
        return sorted(self._edges)

    def ends(self, e: str) -> tuple[str, str]:
        return self._edges[e]

    def is_loop(self, e: str) -> bool:
        v, w = self._edges[e]
        return v == w

    def link(self, v: str) -> list[tuple[str, int]]:
        """Edge-ends at v, as (edge id, end index) pairs; a loop contributes both ends."""
        out = []
        for e in self.edge_ids():
            t, h = self._edges[e]
            if t == v:
                out.append((e, 0))
            if h == v:
                out.append((e, 1))
        return out

    def degree(self, v: str) -> int:
        return len(self.link(v))

    def relabel(self, prefix: str) -> "Multigraph":
        """A copy with every vertex and edge id prefixed."""
        return Multigraph(
            (prefix + v for v in self._vertices),
            {prefix + e: (prefix + v, prefix + w) for e, (v, w) in self._edges.items()},
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._edges.items()))))

    def __repr__(self):
        return f"Multigraph({len(self._vertices)} vertices, {len(self._edges)} edges)"

    def to_json_dict(self) -> dict:
        return {
            "schema": "tog/1",
            "vertices": self.vertex_ids(),
            "edges": [{"id": e, "ends": list(self._edges[e])} for e in self.edge_ids()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Multigraph":
        if data.get("schema") != "tog/1":
            raise SurgeryError("missing or unsupported schema tag (expected 'tog/1')")
        edges = {}
        for rec in data.get("edges", []):
            edges[rec["id"]] = (rec["ends"][0], rec["ends"][1])
        return cls(data.get("vertices", []), edges)

    def to_dot(self, name: str = "g", edge_labels: Optional[Mapping[str, str]] = None) -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertex_ids():
            lines.append(f'  "{v}";')
        for e in self.edge_ids():
            t, h = self._edges[e]
            label = e if edge_labels is None else f"{e}:{edge_labels.get(e, '')}"
            lines.append(f'  "{t}" -- "{h}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


@dataclass
class BlowUpResult:
    """Result of blowing up a graph at a set of point loci.

    divisors maps each locus to {divisor vertex id: end descriptor}, where the
    descriptor is ("end", edge, index) for vertex loci and ("side", "tail"|"head")
    for interior loci. arc_map records, for every edge of the result deriving
    from an input edge, the originating edge and the covered position interval.
    aux_midpoints lists auxiliary degree-2 vertices inserted on isolated open
    arcs so that every component has a vertex.
    """

    graph: Multigraph
    divisors: dict[PointLocus, dict[str, tuple]]
    arc_map: dict[str, tuple[str, tuple[Fraction, Fraction]]]
    aux_midpoints: frozenset[str]


def components(g: Multigraph) -> list[frozenset[str]]:
    """Connected components as a sorted list of vertex sets."""
    parent: dict[str, str] = {v: v for v in g.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edge_ids():
        v, w = g.ends(e)
        rv, rw = find(v), find(w)
        if rv != rw:
            parent[rv] = rw
    groups: dict[str, set[str]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=lambda s: min(s))


def blow_up(g: Multigraph, loci: Iterable[PointLocus]) -> BlowUpResult:
    """Replace each locus by its blow-up divisor.

    A vertex locus x becomes deg(x) divisor vertices, one per edge-end at x.
    An interior locus splits its edge into two arcs ending at two divisor
    vertices. Blow-ups at distinct loci commute; the result only depends on
    the locus set.
    """
    loci = list(loci)
    if len(set(loci)) != len(loci):
        raise SurgeryError("duplicate loci")
    vertex_loci: set[str] = set()
    interior: dict[str, list[Fraction]] = {}
    for x in loci:
        if isinstance(x, Vertex):
            if x.vertex not in g.vertices:
                raise SurgeryError(f"vertex {x.vertex!r} not in graph")
            vertex_loci.add(x.vertex)
        else:
            if x.edge not in g.edges:
                raise SurgeryError(f"edge {x.edge!r} not in graph")
            interior.setdefault(x.edge, []).append(x.position)

    new_vertices: set[str] = set(g.vertices) - vertex_loci
    new_edges: dict[str, tuple[str, str]] = {}
    divisors: dict[PointLocus, dict[str, tuple]] = {x: {} for x in loci}
    arc_map: dict[str, tuple[str, tuple[Fraction, Fraction]]] = {}
    aux: set[str] = set()
    divisor_ids: set[str] = set()

    def fresh(name: str) -> str:
        if name in new_vertices or name in divisor_ids:
            raise SurgeryError(f"id collision for divisor vertex {name!r}")
        divisor_ids.add(name)
        return name

    for e in g.edge_ids():
        t, h = g.ends(e)
        cuts = sorted(interior.get(e, []))
        # endpoint at position 0 (tail side)
        if t in vertex_loci:
            d = fresh(f"{t}@{e}.0")
            divisors[Vertex(t)][d] = ("end", e, 0)
            start = d
        else:
            start = t
        if h in vertex_loci:
            d = fresh(f"{h}@{e}.1")
            divisors[Vertex(h)][d] = ("end", e, 1)
            stop = d
        else:
            stop = h

        if not cuts and start == t and stop == h:
            new_edges[e] = (t, h)
            arc_map[e] = (e, (Fraction(0), Fraction(1)))
            continue

        bounds = [Fraction(0)] + cuts + [Fraction(1)]
        seg_vertices = [start]
        for p in cuts:
            dt = fresh(f"{e}@{_pos_token(p)}t")
            dh = fresh(f"{e}@{_pos_token(p)}h")
            divisors[Interior(e, p)][dt] = ("side", "tail")
            divisors[Interior(e, p)][dh] = ("side", "head")
            seg_vertices.append(dt)
            seg_vertices.append(dh)
        seg_vertices.append(stop)
        nseg = len(bounds) - 1
        for i in range(nseg):
            arc_id = e if nseg == 1 else f"{e}.a{i}"
            a, b = seg_vertices[2 * i], seg_vertices[2 * i + 1]
            lo, hi = bounds[i], bounds[i + 1]
            if a in divisor_ids and b in divisor_ids:
                # isolated open arc: insert an auxiliary midpoint vertex
                mid_v = f"{arc_id}.mid"
                aux.add(mid_v)
                new_vertices.add(mid_v)
                mid = (lo + hi) / 2
                new_edges[f"{arc_id}.m0"] = (a, mid_v)
                new_edges[f"{arc_id}.m1"] = (mid_v, b)
                arc_map[f"{arc_id}.m0"] = (e, (lo, mid))
                arc_map[f"{arc_id}.m1"] = (e, (mid, hi))
            else:
                new_edges[arc_id] = (a, b)
                arc_map[arc_id] = (e, (lo, hi))

    new_vertices |= divisor_ids
    graph = Multigraph(new_vertices, new_edges)
    return BlowUpResult(graph, divisors, arc_map, frozenset(aux))


def blow_down(r: BlowUpResult, keep: Iterable[PointLocus] = ()) -> Multigraph:
    """Collapse blow-up divisors back to points.

    With empty `keep` this reconstructs the original graph (identical ids).
    With a subset of the original loci kept, the result equals blow_up of the
    reconstruction at exactly the kept loci.
    """
    keep = list(keep)
    for x in keep:
        if x not in r.divisors:
            raise SurgeryError(f"locus {x} was not blown up in this result")

    divisor_vertices = {d for dd in r.divisors.values() for d in dd}
    plain = set(r.graph.vertices) - divisor_vertices - set(r.aux_midpoints)
    orig_vertices = plain | {x.vertex for x in r.divisors if isinstance(x, Vertex)}

    # reconstruct each original edge's endpoints from its position-0 / position-1 arcs
    by_edge: dict[str, list[tuple[Fraction, Fraction, str]]] = {}
    for arc, (orig, (lo, hi)) in r.arc_map.items():
        by_edge.setdefault(orig, []).append((lo, hi, arc))
    orig_edges: dict[str, tuple[str, str]] = {}
    vertex_of_divisor = {
        d: x.vertex
        for x, dd in r.divisors.items()
        if isinstance(x, Vertex)
        for d in dd
    }
    for orig, arcs in by_edge.items():
        arcs.sort()
        if arcs[0][0] != 0 or arcs[-1][1] != 1:
            raise SurgeryError(f"arc record of edge {orig!r} does not cover (0,1)")
        first = arcs[0][2]
        last = arcs[-1][2]
        t = r.graph.ends(first)[0]
        h = r.graph.ends(last)[1]
        t = vertex_of_divisor.get(t, t)
        h = vertex_of_divisor.get(h, h)
        if t not in orig_vertices or h not in orig_vertices:
            raise SurgeryError(f"divisor map inconsistent at edge {orig!r}")
        orig_edges[orig] = (t, h)

    g = Multigraph(orig_vertices, orig_edges)
    if not keep:
        return g
    return blow_up(g, keep).graph


def divisor_ends(g: Multigraph, x: PointLocus) -> dict[str, tuple]:
    """The blow-up divisor of a single locus: {divisor vertex: end descriptor}."""
    return blow_up(g, [x]).divisors[x]


@dataclass
class ConnectedSumResult:
    """A connected sum with projections back to the summands.

    projections[i] maps each cell (('vertex', id) or ('edge', id)) of the
    result to the corresponding cell or point locus of summand i.
    """

    graph: Multigraph
    seam: list[str]
    projections: tuple[dict, dict]


def connected_sum(
    g1: Multigraph,
    x1: PointLocus,
    g2: Multigraph,
    x2: PointLocus,
    ell: Mapping[str, str],
) -> ConnectedSumResult:
    """Glue blow-ups of g1 at x1 and g2 at x2 along the divisor bijection ell.

    ell maps divisor vertex ids of blow_up(g1, {x1}) to divisor vertex ids of
    blow_up(g2, {x2}). Identified divisor pairs become degree-2 vertices named
    s0, s1, ... in sorted order of the side-1 divisor.
    """
    r1 = blow_up(g1, [x1])
    r2 = blow_up(g2, [x2])
    d1 = r1.divisors[x1]
    d2 = r2.divisors[x2]
    if set(ell.keys()) != set(d1) or set(ell.values()) != set(d2) or len(ell) != len(d1):
        raise SurgeryError("ell is not a bijection between the two divisors")

    rename1: dict[str, str] = {v: "L:" + v for v in r1.graph.vertices}
    rename2: dict[str, str] = {v: "R:" + v for v in r2.graph.vertices}
    seam = []
    for i, p in enumerate(sorted(ell)):
        s = f"s{i}"
        seam.append(s)
        rename1[p] = s
        rename2[ell[p]] = s

    vertices = set(rename1.values()) | set(rename2.values())
    edges: dict[str, tuple[str, str]] = {}
    for e, (v, w) in r1.graph.edges.items():
        edges["L:" + e] = (rename1[v], rename1[w])
    for e, (v, w) in r2.graph.edges.items():
        edges["R:" + e] = (rename2[v], rename2[w])
    graph = Multigraph(vertices, edges)

    def build_projection(r: BlowUpResult, x: PointLocus, rename: dict, tag: str) -> dict:
        proj: dict = {}
        div = set(r.divisors[x])
        for v in r.graph.vertices:
            key = ("vertex", rename[v])
            if v in div:
                proj[key] = ("locus", x)
            elif v in r.aux_midpoints:
                orig, (lo, hi) = next(
                    r.arc_map[a] for a, (t, h) in r.graph.edges.items() if h == v
                )
                proj[key] = ("locus", Interior(orig, hi))
            else:
                proj[key] = ("vertex", v)
        for e in r.graph.edge_ids():
            orig, interval = r.arc_map[e]
            proj[("edge", tag + e)] = ("edge", orig, interval)
        return proj

    proj1 = build_projection(r1, x1, rename1, "L:")
    proj2 = build_projection(r2, x2, rename2, "R:")
    # cells of the other side project to the surgery locus
    for v in graph.vertices:
        if v.startswith("R:") or v in seam:
            proj1.setdefault(("vertex", v), ("locus", x1))
        if v.startswith("L:") or v in seam:
            proj2.setdefault(("vertex", v), ("locus", x2))
    for e in graph.edge_ids():
        if e.startswith("R:"):
            proj1.setdefault(("edge", e), ("locus", x1))
        if e.startswith("L:"):
            proj2.setdefault(("edge", e), ("locus", x2))

    return ConnectedSumResult(graph, seam, (proj1, proj2))


def complement_components(
    g: Multigraph, loci: Iterable[PointLocus]
) -> tuple[int, dict[str, int]]:
    """pi_0 of the complement of the loci, with the divisor-to-component map.

    Returns (component count, iota) where iota assigns each divisor vertex of
    the blow-up the index of its component (components sorted by least vertex).
    """
    r = blow_up(g, loci)
    comps = components(r.graph)
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    iota = {d: where[d] for dd in r.divisors.values() for d in dd}
    return len(comps), iota


def is_two_connected(g: Multigraph) -> bool:
    """True iff g is nonempty, connected, has >= 2 vertices and no cutpoint.

    No cutpoint means: the blow-up at every single vertex stays connected and
    no edge is a bridge (interior points of a bridge are cutpoints). Parallel
    edges are never bridges; loops force a cutpoint at their vertex.
    """
    if not g.vertices or len(g.vertices) < 2:
        return False
    if any(g.is_loop(e) for e in g.edge_ids()):
        return False  # the loop's vertex is a cutpoint
    import networkx as nx

    # subdividing every edge turns the multigraph into a simple graph whose
    # biconnectivity is equivalent: vertex cutpoints survive subdivision and
    # bridge midpoints become cutpoints
    G = nx.Graph()
    G.add_nodes_from(g.vertex_ids())
    for e in g.edge_ids():
        t, h = g.ends(e)
        mid = (e, "#mid")
        G.add_edge(t, mid)
        G.add_edge(mid, h)
    return nx.is_connected(G) and nx.is_biconnected(G)


def smoothed(g: Multigraph) -> Multigraph:
    """Remove degree-2 vertices by merging their incident edges.

    The result is homeomorphic to g. Circle components are left with a single
    vertex carrying a loop. Edge ids in the result are not meaningful.
    """
    vertices = set(g.vertices)
    edges = dict(g.edges)
    changed = True
    while changed:
        changed = False
        for v in sorted(vertices):
            incident = []
            for e, (t, h) in edges.items():
                if t == v:
                    incident.append((e, 0))
                if h == v:
                    incident.append((e, 1))
            if len(incident) != 2:
                continue
            (e1, i1), (e2, i2) = sorted(incident)
            if e1 == e2:
                continue  # loop at v: a circle component, keep one vertex
            a = edges[e1][1 - i1]
            b = edges[e2][1 - i2]
            del edges[e1]
            del edges[e2]
            edges[f"({e1}|{e2})"] = (a, b)
            vertices.remove(v)
            changed = True
            break
    return Multigraph(vertices, edges)


def to_networkx(
    g: Multigraph,
    edge_labels: Optional[Mapping[str, object]] = None,
    vertex_labels: Optional[Mapping[str, object]] = None,
) -> nx.MultiGraph:
    G = nx.MultiGraph()
    for v in g.vertex_ids():
        G.add_node(v, label=None if vertex_labels is None else vertex_labels.get(v))
    for e in g.edge_ids():
        v, w = g.ends(e)
        G.add_edge(v, w, key=e, label=None if edge_labels is None else edge_labels.get(e))
    return G


def is_isomorphic(
    g1: Multigraph,
    g2: Multigraph,
    edge_labels1: Optional[Mapping[str, object]] = None,
    edge_labels2: Optional[Mapping[str, object]] = None,
    vertex_labels1: Optional[Mapping[str, object]] = None,
    vertex_labels2: Optional[Mapping[str, object]] = None,
) -> bool:
    """Isomorphism of multigraphs, optionally respecting cell labels."""
    G1 = to_networkx(g1, edge_labels1, vertex_labels1)
    G2 = to_networkx(g2, edge_labels2, vertex_labels2)
    nm = nx.algorithms.isomorphism.categorical_node_match("label", None)
    em = nx.algorithms.isomorphism.categorical_multiedge_match("label", None)
    return nx.is_isomorphic(G1, G2, node_match=nm, edge_match=em)


def is_homeomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    """Isomorphism after smoothing away degree-2 vertices."""
    return is_isomorphic(smoothed(g1), smoothed(g2))


def theta_graph(k: int, prefix: str = "") -> Multigraph:
    """The theta graph with two vertices and k parallel edges."""
    if k < 2:
        raise SurgeryError("theta graph needs at least 2 edges")
    u, w = prefix + "u", prefix + "w"
    return Multigraph([u, w], {f"{prefix}e{i}": (u, w) for i in range(1, k + 1)})


def complete_graph(n: int, prefix: str = "") -> Multigraph:
    vs = [f"{prefix}v{i}" for i in range(1, n + 1)]
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            edges[f"{prefix}e{i + 1}{j + 1}"] = (vs[i], vs[j])
    return Multigraph(vs, edges)
