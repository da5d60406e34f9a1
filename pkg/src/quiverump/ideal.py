"""Admissible ideals of path algebras and exact membership.

An ideal is presented by zero relations (paths) and linear relations
(rational combinations of parallel paths, every term of length >= 2).
Admissibility gives a bound m with R^m contained in the ideal, so all
linear algebra happens in the finite-dimensional truncation spanned by
paths of length < m; arithmetic is exact over Fraction.

Membership is decided block-locally: starting from a path, repeatedly
replace an occurrence of one linear-relation term by a sibling term.
The paths reachable that way form the only coordinates its coset can
touch, so a small row reduction per block answers every query.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    InvalidPresentation,
    NotAdmissible,
    PathInIdeal,
    TrivialPath,
)
from .quiver import Path, Quiver


# -- relation types ----------------------------------------------------------


@dataclass(frozen=True)
class ZeroRelation:
    path: Path

    def __post_init__(self):
        if len(self.path) < 2:
            raise InvalidPresentation(f"zero relation {self.path} has length < 2")

    def __str__(self) -> str:
        return str(self.path)


@dataclass(frozen=True)
class LinearRelation:
    """Sum(coefficients[i] * paths[i]) = 0, normalized so the terms are
    sorted by arrow sequence and the first coefficient is 1."""

    coefficients: tuple[Fraction, ...]
    paths: tuple[Path, ...]

    def __post_init__(self):
        if len(self.paths) < 2:
            raise InvalidPresentation("linear relation needs at least two terms")
        if len(self.coefficients) != len(self.paths):
            raise InvalidPresentation("coefficient/term count mismatch")
        if any(c == 0 for c in self.coefficients):
            raise InvalidPresentation("zero coefficient in linear relation")
        if len(set(self.paths)) != len(self.paths):
            raise InvalidPresentation("repeated term in linear relation")
        src = {p.source for p in self.paths}
        tgt = {p.target for p in self.paths}
        if len(src) != 1 or len(tgt) != 1:
            raise InvalidPresentation("linear relation terms must be parallel")
        if any(len(p) < 2 for p in self.paths):
            raise InvalidPresentation("linear relation term of length < 2")

    def terms(self) -> tuple[tuple[Fraction, Path], ...]:
        return tuple(zip(self.coefficients, self.paths))

    def __str__(self) -> str:
        bits = []
        for c, p in self.terms():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            coef = "" if mag == 1 else f"{mag}*"
            bits.append(f"{sign} {coef}{p}")
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else out


def zero_relation(q: Quiver, arrow_ids: Iterable[str]) -> ZeroRelation:
    return ZeroRelation(q.path(arrow_ids))


def linear_relation(q: Quiver, terms: Sequence[tuple[Fraction | int, Iterable[str] | Path]]) -> LinearRelation:
    """Build a normalized linear relation from (coefficient, path) pairs."""
    built: list[tuple[Fraction, Path]] = []
    for coef, p in terms:
        path = p if isinstance(p, Path) else q.path(p)
        built.append((Fraction(coef), path))
    built.sort(key=lambda t: t[1].arrows)
    lead = built[0][0]
    coeffs = tuple(c / lead for c, _ in built)
    paths = tuple(p for _, p in built)
    return LinearRelation(coeffs, paths)


@dataclass(frozen=True)
class IdealPresentation:
    zero: tuple[ZeroRelation, ...]
    linear: tuple[LinearRelation, ...]
    bound: int

    @property
    def zero_paths(self) -> tuple[Path, ...]:
        return tuple(r.path for r in self.zero)

    @property
    def is_monomial(self) -> bool:
        return not self.linear


@dataclass(frozen=True)
class AlgebraPresentation:
    quiver: Quiver
    ideal: IdealPresentation

    @property
    def bound(self) -> int:
        return self.ideal.bound

    @property
    def is_monomial(self) -> bool:
        return self.ideal.is_monomial


# -- sparse exact row reduction ----------------------------------------------

_F0 = Fraction(0)


def _colkey(p: Path):
    return (len(p.arrows), p.arrows, p.source)


class RowBasis:
    """Fully reduced basis of sparse rational rows keyed by pivot column.

    Kept in reduced echelon form: no row's support contains another row's
    pivot, so a single pass gives canonical normal forms.
    """

    def __init__(self, key=None):
        self.key = key or _colkey
        self.rows: dict[Path, dict[Path, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[Path, Fraction]) -> dict[Path, Fraction]:
        out = {k: v for k, v in vec.items() if v}
        for piv in list(out):
            c = out.get(piv, _F0)
            if not c:
                continue
            row = self.rows.get(piv)
            if row is None:
                continue
            for k, v in row.items():
                nv = out.get(k, _F0) - c * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def add(self, vec: dict[Path, Fraction]) -> bool:
        """Insert a row; returns True if the rank grew."""
        red = self.reduce(vec)
        if not red:
            return False
        piv = min(red, key=self.key)
        lead = red[piv]
        row = {k: v / lead for k, v in red.items()}
        for opiv, other in list(self.rows.items()):
            c = other.get(piv, _F0)
            if not c:
                continue
            upd = dict(other)
            for k, v in row.items():
                nv = upd.get(k, _F0) - c * v
                if nv:
                    upd[k] = nv
                else:
                    upd.pop(k, None)
            self.rows[opiv] = upd
        self.rows[piv] = row
        return True

    def normal_key(self, vec: dict[Path, Fraction]):
        red = self.reduce(vec)
        return tuple(sorted(red.items(), key=lambda kv: self.key(kv[0])))


def _occurrences(term: tuple[str, ...], arrows: tuple[str, ...]) -> list[int]:
    k = len(term)
    return [i for i in range(len(arrows) - k + 1) if arrows[i : i + k] == term]


# -- the membership engine ---------------------------------------------------


@dataclass
class _Block:
    members: frozenset[Path]
    basis: RowBasis
    nf: dict[Path, tuple]


class _Engine:
    def __init__(self, q: Quiver, zero_paths: Sequence[Path],
                 linear: Sequence[LinearRelation], bound: int):
        self.q = q
        self.bound = bound
        self.zero_arrowseqs = tuple(p.arrows for p in zero_paths)
        self.linear = tuple(linear)
        self._zd_cache: dict[tuple[str, ...], bool] = {}
        self._blocks: dict[Path, _Block] = {}

    def zero_divisible(self, p: Path) -> bool:
        got = self._zd_cache.get(p.arrows)
        if got is None:
            got = any(_occurrences(z, p.arrows) for z in self.zero_arrowseqs)
            self._zd_cache[p.arrows] = got
        return got

    def dead(self, p: Path) -> bool:
        return len(p) >= self.bound or self.zero_divisible(p)

    def block(self, p: Path) -> _Block:
        cached = self._blocks.get(p)
        if cached is not None:
            return cached
        members = {p}
        frontier = [p]
        while frontier:
            cur = frontier.pop()
            for rel in self.linear:
                for term in rel.paths:
                    for pos in _occurrences(term.arrows, cur.arrows):
                        for other in rel.paths:
                            if other is term:
                                continue
                            arr = cur.arrows[:pos] + other.arrows + cur.arrows[pos + len(term.arrows):]
                            cand = Path(arr, cur.source, cur.target)
                            if cand in members or self.dead(cand):
                                continue
                            members.add(cand)
                            frontier.append(cand)
        basis = RowBasis()
        seen: set[tuple] = set()
        for memb in sorted(members, key=_colkey):
            for rel in self.linear:
                for term in rel.paths:
                    for pos in _occurrences(term.arrows, memb.arrows):
                        prefix = memb.arrows[:pos]
                        suffix = memb.arrows[pos + len(term.arrows):]
                        ekey = (rel, prefix, suffix)
                        if ekey in seen:
                            continue
                        seen.add(ekey)
                        vec: dict[Path, Fraction] = {}
                        for coef, tp in rel.terms():
                            cand = Path(prefix + tp.arrows + suffix, memb.source, memb.target)
                            if not self.dead(cand):
                                vec[cand] = vec.get(cand, _F0) + coef
                        basis.add(vec)
        nf = {memb: basis.normal_key({memb: Fraction(1)}) for memb in members}
        blk = _Block(frozenset(members), basis, nf)
        for memb in members:
            self._blocks[memb] = blk
        return blk

    def in_ideal(self, p: Path) -> bool:
        if p.is_trivial:
            raise TrivialPath("trivial paths are never in an admissible ideal")
        if self.dead(p):
            return True
        if not self.linear or len(p) == 1:
            return False
        return self.block(p).nf[p] == ()

    def coset(self, p: Path) -> frozenset[Path]:
        if self.in_ideal(p):
            raise PathInIdeal(f"{p} lies in the ideal")
        if not self.linear:
            return frozenset([p])
        blk = self.block(p)
        key = blk.nf[p]
        return frozenset(m for m in blk.members if blk.nf[m] == key)

    def combination_in_ideal(self, vec: dict[Path, Fraction]) -> bool:
        """Is a finite combination of paths in the ideal?"""
        live: dict[Path, Fraction] = {}
        for p, c in vec.items():
            if not c or self.dead(p):
                continue
            live[p] = live.get(p, _F0) + c
        live = {p: c for p, c in live.items() if c}
        if not live:
            return True
        if not self.linear:
            return False
        basis = RowBasis()
        done: set[Path] = set()
        for p in list(live):
            if p in done:
                continue
            blk = self.block(p)
            done |= blk.members
            for row in blk.basis.rows.values():
                basis.add(dict(row))
        return not basis.reduce(live)


@lru_cache(maxsize=64)
def _engine_for(alg: AlgebraPresentation) -> _Engine:
    return _Engine(alg.quiver, alg.ideal.zero_paths, alg.ideal.linear, alg.ideal.bound)


# -- admissibility -----------------------------------------------------------


def admissibility_bound(q: Quiver, zero: Sequence[ZeroRelation] = (),
                        linear: Sequence[LinearRelation] = (), cap: int = 64) -> int:
    """Least m >= 2 with every path of length m in the ideal, or NotAdmissible.

    Searches from below with a frontier of paths not yet certified; a path
    certified at stage L stays in the ideal after any extension, so only
    children of frontier paths need testing.  Sound and exact whenever the
    presented ideal is admissible at all.
    """
    zero_paths = tuple(r.path for r in zero)
    frontier: list[Path] = [Path((a.id,), a.source, a.target) for a in q.arrows]
    for stage in range(2, cap + 1):
        children: set[Path] = set()
        for p in frontier:
            for a in q.arrows_from(p.target):
                children.add(Path(p.arrows + (a.id,), p.source, a.target))
        engine = _Engine(q, zero_paths, linear, bound=stage + 1)
        frontier = [c for c in sorted(children, key=_colkey) if not engine.in_ideal(c)]
        if not frontier:
            return stage
    raise NotAdmissible(cap)


# -- public membership API ---------------------------------------------------


def path_in_ideal(alg: AlgebraPresentation, p: Path) -> bool:
    """Exact membership of a path in the ideal."""
    if p.is_trivial:
        raise TrivialPath("membership is undefined for trivial paths")
    return _engine_for(alg).in_ideal(p)


def coset_paths(alg: AlgebraPresentation, p: Path) -> frozenset[Path]:
    """All paths congruent to p modulo the ideal, p included."""
    return _engine_for(alg).coset(p)


def coset_key(alg: AlgebraPresentation, p: Path):
    """Hashable canonical tag of the coset p + I (for grouping)."""
    eng = _engine_for(alg)
    if not eng.linear:
        return ((p, Fraction(1)),)
    return eng.block(p).nf[p]


def combination_in_ideal(alg: AlgebraPresentation, vec: dict[Path, Fraction]) -> bool:
    return _engine_for(alg).combination_in_ideal(vec)


def live_paths(alg: AlgebraPresentation) -> tuple[Path, ...]:
    """All paths of length 1..bound-1 not divisible by a zero relation.

    These are the coordinates of the truncated quotient; paths in the
    ideal for linear reasons are still listed.
    """
    eng = _engine_for(alg)
    out: list[Path] = []
    frontier = [Path((a.id,), a.source, a.target) for a in alg.quiver.arrows]
    frontier = [p for p in frontier if not eng.dead(p)]
    while frontier:
        out.extend(frontier)
        nxt = []
        for p in frontier:
            for a in alg.quiver.arrows_from(p.target):
                cand = Path(p.arrows + (a.id,), p.source, a.target)
                if not eng.dead(cand):
                    nxt.append(cand)
        frontier = nxt
    return tuple(sorted(out, key=_colkey))


# -- minimal generating sets ---------------------------------------------------


def _relation_vec(rel) -> dict[Path, Fraction]:
    if isinstance(rel, ZeroRelation):
        return {rel.path: Fraction(1)}
    return {p: c for c, p in rel.terms()}


def _removable(q: Quiver, candidate, zero_others: list[ZeroRelation],
               linear_others: list[LinearRelation], bound: int) -> bool:
    """Whether candidate lies in <others> + R*I + I*R (so the set still
    generates without it).  Columns longer than the bound, columns divisible
    by another zero relation, and proper multiples of the candidate itself
    all lie in that target space and are projected away."""
    other_zero_seqs = [r.path.arrows for r in zero_others]
    cand_is_zero = isinstance(candidate, ZeroRelation)
    cand_seq = candidate.path.arrows if cand_is_zero else None

    def dead(p: Path) -> bool:
        if len(p) > bound:
            return True
        if any(_occurrences(z, p.arrows) for z in other_zero_seqs):
            return True
        if cand_is_zero and p.arrows != cand_seq and _occurrences(cand_seq, p.arrows):
            return True
        return False

    vec = {p: c for p, c in _relation_vec(candidate).items() if not dead(p)}
    if not vec:
        return True
    replacers: list[tuple[LinearRelation, bool]] = [(r, False) for r in linear_others]
    if not cand_is_zero:
        replacers.append((candidate, True))

    members = set(vec)
    frontier = list(vec)
    while frontier:
        cur = frontier.pop()
        for rel, proper_only in replacers:
            for term in rel.paths:
                for pos in _occurrences(term.arrows, cur.arrows):
                    if proper_only and pos == 0 and len(term.arrows) == len(cur.arrows):
                        continue
                    for other in rel.paths:
                        if other is term:
                            continue
                        arr = cur.arrows[:pos] + other.arrows + cur.arrows[pos + len(term.arrows):]
                        new = Path(arr, cur.source, cur.target)
                        if new not in members and not dead(new):
                            members.add(new)
                            frontier.append(new)

    basis = RowBasis()
    seen: set[tuple] = set()
    for memb in sorted(members, key=_colkey):
        for rel, proper_only in replacers:
            for term in rel.paths:
                for pos in _occurrences(term.arrows, memb.arrows):
                    prefix = memb.arrows[:pos]
                    suffix = memb.arrows[pos + len(term.arrows):]
                    if proper_only and not prefix and not suffix:
                        continue
                    ekey = (rel, proper_only, prefix, suffix)
                    if ekey in seen:
                        continue
                    seen.add(ekey)
                    row: dict[Path, Fraction] = {}
                    for coef, tp in rel.terms():
                        p2 = Path(prefix + tp.arrows + suffix, memb.source, memb.target)
                        if not dead(p2):
                            row[p2] = row.get(p2, _F0) + coef
                    basis.add(row)
    return not basis.reduce(vec)


def _candidate_key(rel):
    if isinstance(rel, ZeroRelation):
        return (-len(rel.path), 0, (rel.path.arrows,))
    return (-max(len(p) for p in rel.paths), 1, tuple(p.arrows for p in rel.paths))


def minimalize_relations(q: Quiver, zero: Sequence[ZeroRelation],
                         linear: Sequence[LinearRelation], bound: int):
    """Greedily drop generators already implied by the rest.

    Returns (zero, linear, removed).  Candidates are scanned longest first
    so redundant high powers go before the short relations that imply them;
    the scan order is deterministic, and the result is idempotent.
    """
    zs = list(zero)
    ls = list(linear)
    removed = []
    for cand in sorted(list(zs) + list(ls), key=_candidate_key):
        zo = [r for r in zs if r is not cand]
        lo = [r for r in ls if r is not cand]
        if _removable(q, cand, zo, lo, bound):
            removed.append(cand)
            zs, ls = zo, lo
    return tuple(zs), tuple(ls), tuple(removed)


# -- algebra construction ------------------------------------------------------


def algebra(q: Quiver, zero: Sequence[ZeroRelation] = (),
            linear: Sequence[LinearRelation] = (), cap: int = 64,
            minimize: bool = True) -> AlgebraPresentation:
    """Validate admissibility and build a presentation with minimal relations."""
    zero = tuple(zero)
    linear = tuple(linear)
    bound = admissibility_bound(q, zero, linear, cap=cap)
    if minimize:
        zero, linear, _ = minimalize_relations(q, zero, linear, bound)
    return AlgebraPresentation(q, IdealPresentation(zero, linear, bound))


# -- special multiserial predicate --------------------------------------------


@dataclass(frozen=True)
class SMWitness:
    arrow: str
    side: str  # "right": two nonzero successors; "left": two nonzero predecessors
    pair: tuple[str, str]

    def __str__(self) -> str:
        a, (b1, b2) = self.arrow, self.pair
        if self.side == "right":
            return f"{a} has nonzero compositions {a}{b1} and {a}{b2}"
        return f"{a} has nonzero compositions {b1}{a} and {b2}{a}"


@dataclass(frozen=True)
class SpecialMultiserialResult:
    ok: bool
    witness: SMWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_special_multiserial(alg: AlgebraPresentation) -> SpecialMultiserialResult:
    """Each arrow composes nonzero with at most one arrow on each side."""
    q = alg.quiver
    for a in q.arrows:
        good = [b.id for b in q.arrows_from(a.target)
                if not path_in_ideal(alg, q.path((a.id, b.id)))]
        if len(good) > 1:
            return SpecialMultiserialResult(False, SMWitness(a.id, "right", (good[0], good[1])))
    for a in q.arrows:
        good = [b.id for b in q.arrows_into(a.source)
                if not path_in_ideal(alg, q.path((b.id, a.id)))]
        if len(good) > 1:
            return SpecialMultiserialResult(False, SMWitness(a.id, "left", (good[0], good[1])))
    return SpecialMultiserialResult(True)
