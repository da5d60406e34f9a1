"""Brauer graphs and their algebras.

A Brauer graph is a finite connected multigraph with a multiplicity at
each vertex and a cyclic order on the half-edges around each vertex.
Its algebra lives on the quiver whose vertices are the edges of the
graph: every non-truncated graph vertex contributes one arrow per
incident half-edge, pointing at the next edge around, and the relations
identify full turns around the two ends of an edge, cut off a turn past
a truncated end, and kill every composite that is not a consecutive
step of some turn.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BijectionFailure,
    BrauerValidationError,
    NotIncident,
    TruncatedVertex,
)
from .ideal import (
    AlgebraPresentation,
    algebra,
    linear_relation,
    zero_relation,
)
from .quiver import Path, quiver

_LABEL_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


@dataclass(frozen=True)
class Half:
    """One end of an edge; slot picks which of the two."""

    edge: str
    slot: int

    def token(self, loop: bool) -> str:
        if loop:
            return self.edge + ("^" if self.slot == 0 else "~")
        return self.edge


@dataclass(frozen=True)
class BrauerGraph:
    vertices: tuple[tuple[str, int], ...]  # (vertex id, multiplicity)
    edges: tuple[tuple[str, str, str], ...]  # (edge id, end 0, end 1)
    orders: tuple[tuple[str, tuple[Half, ...]], ...]

    def __post_init__(self):
        object.__setattr__(self, "_mult", dict(self.vertices))
        object.__setattr__(self, "_ends", {e: (a, b) for e, a, b in self.edges})
        object.__setattr__(self, "_order", dict(self.orders))

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _, _ in self.edges)

    def multiplicity(self, v: str) -> int:
        return self._mult[v]

    def ends(self, e: str) -> tuple[str, str]:
        return self._ends[e]

    def is_loop(self, e: str) -> bool:
        a, b = self._ends[e]
        return a == b

    def halves_at(self, v: str) -> tuple[Half, ...]:
        out = []
        for e, a, b in self.edges:
            if a == v:
                out.append(Half(e, 0))
            if b == v:
                out.append(Half(e, 1))
        return tuple(out)

    def valency(self, v: str) -> int:
        return len(self.halves_at(v))

    def is_truncated(self, v: str) -> bool:
        return self.valency(v) * self._mult[v] == 1

    def order(self, v: str) -> tuple[Half, ...]:
        return self._order[v]

    def successor(self, v: str, h: Half) -> Half:
        """Next half-edge around v; only meaningful where arrows exist."""
        if self.is_truncated(v):
            raise TruncatedVertex(f"vertex {v} is truncated")
        ring = self._order[v]
        if h not in ring:
            raise NotIncident(f"half-edge {h.edge}/{h.slot} is not incident to {v}")
        return ring[(ring.index(h) + 1) % len(ring)]


def _parse_token(g_edges: dict[str, tuple[str, str]], v: str, token: str) -> tuple[Half | None, str | None]:
    deco = token[-1] if token and token[-1] in "^~" else None
    eid = token[:-1] if deco else token
    if eid not in g_edges:
        return None, f"order at {v}: unknown edge {eid!r}"
    a, b = g_edges[eid]
    loop = a == b
    if loop and deco is None:
        return None, f"order at {v}: loop {eid} needs ^ or ~ to pick a half"
    if not loop and deco is not None:
        return None, f"order at {v}: {eid} is not a loop, bare id expected"
    if loop:
        return Half(eid, 0 if deco == "^" else 1), None
    if v == a:
        return Half(eid, 0), None
    if v == b:
        return Half(eid, 1), None
    return None, f"order at {v}: edge {eid} is not incident"


def brauer_graph(vertices, edges, orders=None) -> BrauerGraph:
    """Validating constructor.

    vertices: iterable of (id, multiplicity); edges: iterable of
    (id, end, end); orders: optional {vertex: [half tokens]} where a
    token is the edge id, with ^ / ~ picking a loop's halves. Omitted
    orders default to declaration order.  All problems are collected and
    raised together.
    """
    diags: list[str] = []
    vlist = [(str(v), int(m)) for v, m in vertices]
    elist = [(str(e), str(a), str(b)) for e, a, b in edges]

    vids = [v for v, _ in vlist]
    if len(set(vids)) != len(vids):
        diags.append("duplicate vertex ids")
    for v, m in vlist:
        if not v or not set(v) <= _LABEL_OK:
            diags.append(f"bad vertex id {v!r}")
        if m < 1:
            diags.append(f"vertex {v}: multiplicity must be at least 1, got {m}")
    eids = [e for e, _, _ in elist]
    if len(set(eids)) != len(eids):
        diags.append("duplicate edge ids")
    if set(eids) & set(vids):
        diags.append("edge and vertex ids must not overlap")
    known = set(vids)
    for e, a, b in elist:
        if not e or not set(e) <= _LABEL_OK:
            diags.append(f"bad edge id {e!r}")
        for end in (a, b):
            if end not in known:
                diags.append(f"edge {e}: undeclared endpoint {end!r}")
    if not elist:
        diags.append("graph has no edges")
    if diags:
        raise BrauerValidationError(diags)

    # connectivity over the multigraph
    adj: dict[str, set[str]] = {v: set() for v in vids}
    for _, a, b in elist:
        adj[a].add(b)
        adj[b].add(a)
    stack, seen = [vids[0]], {vids[0]}
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if seen != set(vids):
        diags.append("graph is not connected")

    ends = {e: (a, b) for e, a, b in elist}
    incident: dict[str, list[Half]] = {v: [] for v in vids}
    for e, a, b in elist:
        incident[a].append(Half(e, 0))
        incident[b].append(Half(e, 1))

    ring_map: dict[str, tuple[Half, ...]] = {}
    given = dict(orders or {})
    for stray in set(given) - set(vids):
        diags.append(f"order for undeclared vertex {stray!r}")
    for v in vids:
        if v not in given:
            ring_map[v] = tuple(incident[v])
            continue
        ring: list[Half] = []
        for token in given[v]:
            h, err = _parse_token(ends, v, str(token))
            if err:
                diags.append(err)
            elif h in ring:
                diags.append(f"order at {v}: half-edge {token} repeated")
            else:
                ring.append(h)
        if sorted(ring, key=lambda h: (h.edge, h.slot)) != sorted(
            incident[v], key=lambda h: (h.edge, h.slot)
        ):
            diags.append(f"order at {v} must list each incident half-edge once")
        ring_map[v] = tuple(ring)
    if diags:
        raise BrauerValidationError(diags)
    return BrauerGraph(
        tuple(vlist), tuple(elist), tuple((v, ring_map[v]) for v in vids)
    )


# -- the algebra ---------------------------------------------------------------


def _arrow_id(g: BrauerGraph, v: str, h: Half) -> str:
    if g.is_loop(h.edge):
        return f"{v}_{h.edge}" + ("h" if h.slot == 0 else "t")
    return f"{v}_{h.edge}"


@dataclass
class BrauerAlgebra:
    graph: BrauerGraph
    algebra: AlgebraPresentation
    arrow_half: dict[str, tuple[str, Half]]  # arrow id -> (vertex, half-edge)
    cycles: dict[tuple[str, Half], Path]  # full turn starting at that half


def brauer_algebra(g: BrauerGraph) -> BrauerAlgebra:
    """Quiver, relations, and bookkeeping for the algebra of a Brauer graph."""
    spinning = [v for v in g.vertex_ids if not g.is_truncated(v)]

    arrow_half: dict[str, tuple[str, Half]] = {}
    arrows = []
    for v in spinning:
        for h in g.order(v):
            aid = _arrow_id(g, v, h)
            if aid in arrow_half:
                raise BrauerValidationError(
                    [f"generated arrow id {aid} collides; rename vertices or edges"]
                )
            arrow_half[aid] = (v, h)
            arrows.append((aid, h.edge, g.successor(v, h).edge))
    if set(a for a, _, _ in arrows) & set(g.edge_ids):
        raise BrauerValidationError(
            ["a generated arrow id collides with an edge id; rename"]
        )
    q = quiver(g.edge_ids, arrows)

    cycles: dict[tuple[str, Half], Path] = {}
    for v in spinning:
        for h in g.order(v):
            cur, word = h, []
            for _ in range(g.valency(v)):
                word.append(_arrow_id(g, v, cur))
                cur = g.successor(v, cur)
            assert cur == h
            cycles[(v, h)] = q.path(word)

    zero = []
    linear = []
    for e, a, b in g.edges:
        ha = Half(e, 0)
        hb = Half(e, 1)
        spin_a = not g.is_truncated(a)
        spin_b = not g.is_truncated(b)
        if spin_a and spin_b:
            ca = cycles[(a, ha)].arrows * g.multiplicity(a)
            cb = cycles[(b, hb)].arrows * g.multiplicity(b)
            linear.append(linear_relation(q, [(1, q.path(ca)), (-1, q.path(cb))]))
        elif spin_a or spin_b:
            v, h = (a, ha) if spin_a else (b, hb)
            turn = cycles[(v, h)].arrows * g.multiplicity(v)
            zero.append(zero_relation(q, turn + (turn[0],)))
        # both ends truncated: the lone edge of a two-point graph, no arrows

    consecutive = set()
    for v in spinning:
        for h in g.order(v):
            consecutive.add((_arrow_id(g, v, h), _arrow_id(g, v, g.successor(v, h))))
    for x in q.arrows:
        for y in q.arrows_from(x.target):
            if (x.id, y.id) not in consecutive:
                zero.append(zero_relation(q, [x.id, y.id]))

    longest = max(
        (g.valency(v) * g.multiplicity(v) for v in spinning), default=1
    )
    alg = algebra(q, zero, linear, cap=max(2, longest + 1))
    return BrauerAlgebra(g, alg, arrow_half, cycles)


# -- classification and dimension ----------------------------------------------


@dataclass(frozen=True)
class BrauerShape:
    kind: str
    params: tuple[int, ...]
    is_ump: bool


def classify(g: BrauerGraph) -> BrauerShape:
    """Which of the unique-maximal-path shapes the graph produces.

    Exactly the one-edge graphs qualify: a bare edge, an edge with one
    spinning end (nilpotent loop), an edge with two (a pair of nilpotent
    loops with identified powers), or a loop (two alternating arrows)."""
    if len(g.edges) > 1:
        return BrauerShape("multiple-edges", (len(g.edges),), False)
    e, a, b = g.edges[0]
    if a == b:
        return BrauerShape("alternating-loop", (g.multiplicity(a),), True)
    spinning = [v for v in (a, b) if not g.is_truncated(v)]
    if not spinning:
        return BrauerShape("point", (), True)
    if len(spinning) == 1:
        return BrauerShape("nilpotent-loop", (g.multiplicity(spinning[0]),), True)
    m, n = sorted((g.multiplicity(a), g.multiplicity(b)), reverse=True)
    return BrauerShape("two-nilpotent-loops", (m, n), True)


def brauer_dimension(g: BrauerGraph) -> int:
    """Dimension of the algebra: one per edge, a full grid per spinning
    vertex, minus one per edge whose two full turns get identified."""
    spinning = [v for v in g.vertex_ids if not g.is_truncated(v)]
    both_spin = sum(
        1
        for e, a, b in g.edges
        if not g.is_truncated(a) and not g.is_truncated(b)
    )
    return (
        len(g.edges)
        + sum(g.valency(v) ** 2 * g.multiplicity(v) for v in spinning)
        - both_spin
    )


def component_vertex_bijection(ba: BrauerAlgebra) -> tuple[tuple[str, str], ...]:
    """Match ramification components of the algebra with spinning vertices
    of the graph by their arrow sets; any mismatch means a bug, reported
    as BijectionFailure."""
    from .analysis import components

    g = ba.graph
    comps = components(ba.algebra)
    spinning = [v for v in g.vertex_ids if not g.is_truncated(v)]
    arrows_at = {
        v: frozenset(_arrow_id(g, v, h) for h in g.order(v)) for v in spinning
    }
    pairs = []
    taken = set()
    for comp in comps:
        matches = [v for v in spinning if arrows_at[v] == comp.arrow_ids]
        if len(matches) != 1:
            raise BijectionFailure(
                f"component {comp.id} matches {len(matches)} vertices"
            )
        v = matches[0]
        if v in taken:
            raise BijectionFailure(f"vertex {v} claimed twice")
        taken.add(v)
        if comp.shape not in ("single", "cycle"):
            raise BijectionFailure(f"component {comp.id} has shape {comp.shape}")
        ring = ba.cycles[(v, g.order(v)[0])].arrows
        rotations = {ring[i:] + ring[:i] for i in range(len(ring))}
        if comp.omega.arrows not in rotations:
            raise BijectionFailure(
                f"component path of {comp.id} is not a turn around {v}"
            )
        pairs.append((comp.id, v))
    if taken != set(spinning):
        raise BijectionFailure("some spinning vertex has no component")
    return tuple(pairs)
