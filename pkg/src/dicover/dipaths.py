"""Directed edge-paths, vertex reachability, and cellular approximation of PL dipaths."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import CertificateError, DomainError, PreconditionError
from .homology import Chain, HomologyResult, boundary1, homology
from .precubical import (
    CubeId,
    PrecubicalSet,
    RealizationPoint,
    corner,
    face_at,
    standard_cube,
    support,
)


@dataclass(frozen=True, eq=False)
class EdgePath:
    """A directed path in the 1-skeleton: a start vertex and composable edges."""

    base: PrecubicalSet
    start: int
    edges: tuple = ()

    def __post_init__(self):
        edges = tuple(int(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        X = self.base
        if not 0 <= self.start < X.count(0):
            raise DomainError(f"start vertex {self.start} out of range")
        at = self.start
        for pos, e in enumerate(edges):
            if not 0 <= e < X.count(1):
                raise DomainError(f"edge {e} out of range")
            if X.source(e) != at:
                raise DomainError(
                    f"edge {X.name(CubeId(1, e))} at step {pos + 1} does not start at "
                    f"{X.name(CubeId(0, at))}"
                )
            at = X.target(e)

    @property
    def end(self) -> int:
        return self.base.target(self.edges[-1]) if self.edges else self.start

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    def __len__(self):
        return len(self.edges)

    def __add__(self, other: "EdgePath") -> "EdgePath":
        if other.base is not self.base:
            raise DomainError("cannot concatenate paths over different bases")
        if other.start != self.end:
            raise DomainError("paths do not compose: end and start differ")
        return EdgePath(self.base, self.start, self.edges + other.edges)

    def __eq__(self, other):
        if not isinstance(other, EdgePath):
            return NotImplemented
        return self.base == other.base and (self.start, self.edges) == (other.start, other.edges)

    def __hash__(self):
        return hash((self.start, self.edges))

    def format(self) -> str:
        X = self.base
        words = ["path", X.name(CubeId(0, self.start))]
        words += [X.name(CubeId(1, e)) for e in self.edges]
        return " ".join(words)

    def __repr__(self):
        return f"EdgePath({self.format()!r})"


@dataclass(frozen=True)
class Segment:
    """A straight monotone piece of a PL dipath inside one carrier cube."""

    carrier: CubeId
    start: tuple
    stop: tuple

    def __post_init__(self):
        object.__setattr__(self, "carrier", CubeId(*self.carrier))
        object.__setattr__(self, "start", tuple(Fraction(c) for c in self.start))
        object.__setattr__(self, "stop", tuple(Fraction(c) for c in self.stop))
        n = self.carrier.dim
        if len(self.start) != n or len(self.stop) != n:
            raise DomainError(f"segment in a dim-{n} cube needs {n} coordinates per end")
        if any(not 0 <= c <= 1 for c in self.start + self.stop):
            raise DomainError("segment coordinates must lie in [0, 1]")
        if any(a > b for a, b in zip(self.start, self.stop)):
            raise DomainError("segment is not monotone: some coordinate decreases")

    @property
    def initial(self) -> RealizationPoint:
        return RealizationPoint(self.carrier, self.start)

    @property
    def final(self) -> RealizationPoint:
        return RealizationPoint(self.carrier, self.stop)


@dataclass(frozen=True, eq=False)
class PLDipath:
    """Glued monotone segments; consecutive segments meet at the same point."""

    base: PrecubicalSet
    segments: tuple

    def __post_init__(self):
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        if not segs:
            raise DomainError("a PL dipath needs at least one segment")
        for s in segs:
            if s.carrier not in self.base:
                raise DomainError(f"{s.carrier!r} is not a cube of the base")
        for i in range(len(segs) - 1):
            a = support(self.base, segs[i].final)
            b = support(self.base, segs[i + 1].initial)
            if a != b:
                raise PreconditionError(
                    f"segments {i + 1} and {i + 2} do not glue: "
                    f"{_fmt_point(self.base, a)} vs {_fmt_point(self.base, b)}"
                )

    @property
    def initial(self) -> RealizationPoint:
        return support(self.base, self.segments[0].initial)

    @property
    def final(self) -> RealizationPoint:
        return support(self.base, self.segments[-1].final)

    @property
    def is_loop(self) -> bool:
        return self.initial == self.final

    @property
    def is_constant(self) -> bool:
        return all(s.start == s.stop for s in self.segments) and self.initial == self.final


def _fmt_point(X: PrecubicalSet, x: RealizationPoint) -> str:
    coords = ",".join(str(c) for c in x.coords)
    return f"{X.name(x.carrier)}({coords})"


# -- reachability ------------------------------------------------------------------


@dataclass(frozen=True)
class VertexPreorder:
    size: int
    relation: frozenset

    def leq(self, u: int, v: int) -> bool:
        return (u, v) in self.relation

    def is_antisymmetric(self) -> bool:
        return all(u == v or (v, u) not in self.relation for u, v in self.relation)

    def up_set(self, u: int) -> set:
        return {v for (a, v) in self.relation if a == u}


def reachability(X: PrecubicalSet) -> VertexPreorder:
    """``(u, v)`` is related iff a directed edge-path runs from ``u`` to ``v``."""
    n = X.count(0)
    succ = [[] for _ in range(n)]
    for e in range(X.count(1)):
        succ[X.source(e)].append(X.target(e))
    pairs = set()
    for u in range(n):
        seen = {u}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            for x in succ[w]:
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        pairs.update((u, v) for v in seen)
    return VertexPreorder(n, frozenset(pairs))


# -- corner chains and cellular approximation -------------------------------------------


def _chain_patterns(eps: Sequence[int], eps2: Sequence[int]) -> list:
    """Edge patterns (one free axis each) flipping ``eps`` to ``eps2``, lowest axis first."""
    if len(eps) != len(eps2):
        raise DomainError("corner vectors differ in length")
    if any(a not in (0, 1) or b not in (0, 1) for a, b in zip(eps, eps2)):
        raise DomainError("corner vectors must be 0/1")
    if any(a > b for a, b in zip(eps, eps2)):
        raise DomainError(f"{list(eps)} is not below {list(eps2)} componentwise")
    current = list(eps)
    out = []
    for p in range(len(eps)):
        if current[p] != eps2[p]:
            pattern = list(current)
            pattern[p] = None
            out.append(pattern)
            current[p] = 1
    return out


@lru_cache(maxsize=None)
def _cube(n: int) -> PrecubicalSet:
    return standard_cube(n)


def corner_chain(n: int, eps: Sequence[int], eps2: Sequence[int]) -> EdgePath:
    """Edge path in the standard ``n``-cube from corner ``eps`` to corner ``eps2``."""
    Q = _cube(n)
    top = CubeId(n, 0)
    patterns = _chain_patterns(eps, eps2)
    start = corner(Q, top, list(eps)).index
    return EdgePath(Q, start, tuple(face_at(Q, top, p).index for p in patterns))


def _pushed_chain(X: PrecubicalSet, sigma: CubeId, eps, eps2) -> list:
    return [face_at(X, sigma, p).index for p in _chain_patterns(eps, eps2)]


def initial_corner(X: PrecubicalSet, x: RealizationPoint) -> int:
    """Index of the initial vertex of the cube supporting ``x``."""
    s = support(X, x)
    return corner(X, s.carrier, [0] * s.carrier.dim).index


def cellular_approximate(alpha: PLDipath) -> EdgePath:
    """A cellular edge-path homotopic to ``alpha``.

    Each segment endpoint is sent to the corner of its carrier whose
    coordinates are 1 exactly where the point's coordinates are 1; the two
    corners are joined by the lowest-axis-first corner chain inside the
    carrier.
    """
    X = alpha.base
    edges = []
    start = None
    for seg in alpha.segments:
        eps = [int(c == 1) for c in seg.start]
        eps2 = [int(c == 1) for c in seg.stop]
        if start is None:
            start = corner(X, seg.carrier, eps).index
        edges.extend(_pushed_chain(X, seg.carrier, eps, eps2))
    return EdgePath(X, start, tuple(edges))


# -- loops, cycles, essentiality ---------------------------------------------------------


def cycle_chain(gamma: EdgePath) -> Chain:
    """Traversal counts of each edge along the loop ``gamma``."""
    if not gamma.is_loop:
        raise PreconditionError(f"{gamma.format()} is not a loop")
    counts = {}
    for e in gamma.edges:
        counts[e] = counts.get(e, 0) + 1
    c = Chain(1, counts)
    if not boundary1(gamma.base, c).is_zero():
        raise CertificateError(f"traversal chain of {gamma.format()} is not a cycle")
    return c


@dataclass(frozen=True)
class Essentiality:
    loop: EdgePath
    essential: bool
    cycle: Chain
    nullhomologous: bool

    def describe(self) -> str:
        X = self.loop.base
        if not self.essential:
            return "constant loop"
        return f"c(gamma) = {self.cycle.format(X)} is not a boundary"


def is_essential(gamma: EdgePath, result: Optional[HomologyResult] = None) -> Essentiality:
    """Certify a directed loop as essential by its nonzero homology class.

    A nonempty directed loop is never nullhomotopic; the certificate is that
    its traversal cycle does not bound.  If it does bound, something upstream
    is broken and :class:`CertificateError` is raised.
    """
    c = cycle_chain(gamma)
    result = result or homology(gamma.base)
    null = result.is_nullhomologous(c)
    essential = len(gamma) > 0
    if essential and null:
        raise CertificateError(
            f"nonempty directed loop {gamma.format()} has a nullhomologous cycle"
        )
    return Essentiality(gamma, essential, c, null)


def is_circle(X: PrecubicalSet) -> bool:
    return X.counts == (1, 1)


def degree(gamma: EdgePath) -> int:
    """Number of turns of a loop on the one-vertex, one-edge directed circle."""
    if not is_circle(gamma.base):
        raise DomainError("degree is defined on the one-vertex, one-edge circle only")
    return len(gamma.edges)


def shortest_directed_cycle(X: PrecubicalSet) -> Optional[EdgePath]:
    """A shortest nonempty directed loop, ties broken by start vertex then edge order."""
    best = None
    for v in range(X.count(0)):
        # BFS over edges from v, looking for a return to v
        parent = {v: None}
        queue = deque([v])
        found = None
        while queue and found is None:
            w = queue.popleft()
            for e in X.out_edges(w):
                t = X.target(e)
                if t == v:
                    found = (w, e)
                    break
                if t not in parent:
                    parent[t] = (w, e)
                    queue.append(t)
        if found is None:
            continue
        w, last = found
        edges = [last]
        while parent[w] is not None:
            w, e = parent[w]
            edges.append(e)
        edges.reverse()
        if best is None or len(edges) < len(best.edges):
            best = EdgePath(X, v, tuple(edges))
    return best


def has_directed_cycle(X: PrecubicalSet) -> tuple:
    """``(True, witness)`` if some nonempty directed loop exists, else ``(False, None)``."""
    witness = shortest_directed_cycle(X)
    return witness is not None, witness


def directed_paths(X: PrecubicalSet, start: int, max_len: int):
    """All directed edge-paths from ``start`` of length at most ``max_len``, shortest first."""
    frontier = [EdgePath(X, start)]
    for _ in range(max_len + 1):
        yield from frontier
        frontier = [
            EdgePath(X, start, p.edges + (e,)) for p in frontier for e in X.out_edges(p.end)
        ]


def directed_loops(X: PrecubicalSet, max_len: int, at: Optional[int] = None) -> list:
    """Nonempty directed loops of length at most ``max_len``, at ``at`` or at every vertex."""
    starts = range(X.count(0)) if at is None else [at]
    return [p for v in starts for p in directed_paths(X, v, max_len) if p.edges and p.is_loop]
