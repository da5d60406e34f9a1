"""Finite quivers and the path semigroup.

Paths compose left to right: in the path w = w0 w1 ... wl the arrow w0 is
applied first, so target(w0) = source(w1).  The length of a path is its
number of arrows; trivial paths have length 0 and sit at a single vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidPresentation, NonComposable, TrivialDivisor, UnknownLabel

_LABEL = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Vertex:
    id: str


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path, stored as its arrow id sequence plus both endpoints.

    Trivial paths have an empty arrow tuple and equal endpoints.  Equality
    is by value, which for non-trivial paths of one quiver reduces to the
    arrow sequence and for trivial paths to the base vertex.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e({self.source})"
        if all(len(a) == 1 for a in self.arrows):
            return "".join(self.arrows)
        return ".".join(self.arrows)


def _check_label(label: str, kind: str) -> None:
    if not _LABEL.match(label):
        raise InvalidPresentation(f"bad {kind} label {label!r}: use [A-Za-z0-9_]+")


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    _by_id: dict = field(init=False, repr=False, compare=False, default=None)
    _out: dict = field(init=False, repr=False, compare=False, default=None)
    _in: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        vids = set()
        for v in self.vertices:
            _check_label(v.id, "vertex")
            if v.id in vids:
                raise InvalidPresentation(f"duplicate vertex id {v.id!r}")
            vids.add(v.id)
        by_id: dict[str, Arrow] = {}
        out: dict[str, list[Arrow]] = {v.id: [] for v in self.vertices}
        inc: dict[str, list[Arrow]] = {v.id: [] for v in self.vertices}
        for a in self.arrows:
            _check_label(a.id, "arrow")
            if a.id in by_id:
                raise InvalidPresentation(f"duplicate arrow id {a.id!r}")
            if a.id in vids:
                raise InvalidPresentation(f"label {a.id!r} used for both a vertex and an arrow")
            if a.source not in vids or a.target not in vids:
                raise UnknownLabel(f"arrow {a.id!r} has undeclared endpoint")
            by_id[a.id] = a
            out[a.source].append(a)
            inc[a.target].append(a)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_out", {k: tuple(v) for k, v in out.items()})
        object.__setattr__(self, "_in", {k: tuple(v) for k, v in inc.items()})

    # -- lookups ---------------------------------------------------------

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def arrow_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    def arrow(self, aid: str) -> Arrow:
        try:
            return self._by_id[aid]
        except KeyError:
            raise UnknownLabel(f"unknown arrow {aid!r}") from None

    def has_vertex(self, vid: str) -> bool:
        return vid in self._out

    def arrows_from(self, vid: str) -> tuple[Arrow, ...]:
        if vid not in self._out:
            raise UnknownLabel(f"unknown vertex {vid!r}")
        return self._out[vid]

    def arrows_into(self, vid: str) -> tuple[Arrow, ...]:
        if vid not in self._in:
            raise UnknownLabel(f"unknown vertex {vid!r}")
        return self._in[vid]

    def out_degree(self, vid: str) -> int:
        return len(self.arrows_from(vid))

    def in_degree(self, vid: str) -> int:
        return len(self.arrows_into(vid))

    # -- path constructors -----------------------------------------------

    def trivial(self, vid: str) -> Path:
        if not self.has_vertex(vid):
            raise UnknownLabel(f"unknown vertex {vid!r}")
        return Path((), vid, vid)

    def path(self, arrow_ids: Iterable[str]) -> Path:
        ids = tuple(arrow_ids)
        if not ids:
            raise InvalidPresentation("path() needs at least one arrow; use trivial()")
        arrows = [self.arrow(a) for a in ids]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise NonComposable(f"{x.id} ends at {x.target}, {y.id} starts at {y.source}")
        return Path(ids, arrows[0].source, arrows[-1].target)

    # -- structural helpers ------------------------------------------------

    def prefixes(self, w: Path) -> frozenset[Path]:
        """All u with w = u.v, including the trivial path and w itself."""
        out = {self.trivial(w.source)}
        for k in range(1, len(w.arrows) + 1):
            out.add(self.path(w.arrows[:k]))
        return frozenset(out)

    def suffixes(self, w: Path) -> frozenset[Path]:
        out = {self.trivial(w.target)}
        for k in range(1, len(w.arrows) + 1):
            out.add(self.path(w.arrows[-k:]))
        return frozenset(out)

    def weak_components(self) -> tuple[frozenset[str], ...]:
        """Vertex sets of the underlying undirected graph's components."""
        adj: dict[str, set[str]] = {v.id: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v.id in seen:
                continue
            stack, comp = [v.id], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(sorted(comps, key=sorted))

    @property
    def is_connected(self) -> bool:
        return len(self.weak_components()) <= 1

    def weak_component_of(self, vid: str) -> frozenset[str]:
        for comp in self.weak_components():
            if vid in comp:
                return comp
        raise UnknownLabel(f"unknown vertex {vid!r}")

    def subquiver(self, arrow_ids: Iterable[str]) -> "Quiver":
        """The subquiver on the given arrows and their endpoints."""
        keep = set(arrow_ids)
        arrows = tuple(a for a in self.arrows if a.id in keep)
        missing = keep - {a.id for a in arrows}
        if missing:
            raise UnknownLabel(f"unknown arrows {sorted(missing)}")
        touched = {a.source for a in arrows} | {a.target for a in arrows}
        vertices = tuple(v for v in self.vertices if v.id in touched)
        return Quiver(vertices, arrows)


def quiver(vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]) -> Quiver:
    """Convenience builder: vertex ids plus (id, source, target) triples."""
    return Quiver(
        tuple(Vertex(v) for v in vertices),
        tuple(Arrow(a, s, t) for a, s, t in arrows),
    )


# -- path operations (quiver-independent thanks to stored endpoints) --------


def concat(p: Path, q: Path) -> Path:
    if p.is_trivial:
        if p.source != q.source:
            raise NonComposable(f"trivial at {p.source} cannot precede path at {q.source}")
        return q
    if q.is_trivial:
        if p.target != q.source:
            raise NonComposable(f"path ending at {p.target} cannot precede trivial at {q.source}")
        return p
    if p.target != q.source:
        raise NonComposable(f"target {p.target} != source {q.source}")
    return Path(p.arrows + q.arrows, p.source, q.target)


def concat_all(paths: Iterable[Path]) -> Path:
    items = list(paths)
    if not items:
        raise InvalidPresentation("concat_all() needs at least one path")
    out = items[0]
    for p in items[1:]:
        out = concat(out, p)
    return out


def divides(u: Path, v: Path) -> list[int]:
    """Occurrence positions of u as a factor of v (may overlap)."""
    if u.is_trivial:
        raise TrivialDivisor("trivial paths divide everything; occurrences undefined")
    n, k = len(v.arrows), len(u.arrows)
    return [i for i in range(n - k + 1) if v.arrows[i : i + k] == u.arrows]


def disjoint(u: Path, v: Path) -> bool:
    """No shared arrow.  Trivial paths are disjoint from everything."""
    return not (set(u.arrows) & set(v.arrows))


def is_repetition_free(p: Path) -> bool:
    return len(set(p.arrows)) == len(p.arrows)


def is_cyclic_quiver(q: Quiver) -> bool:
    """True iff Q is one oriented cycle (a single loop counts)."""
    if not q.arrows or not q.is_connected:
        return False
    return all(
        q.in_degree(v.id) == 1 and q.out_degree(v.id) == 1 for v in q.vertices
    )
