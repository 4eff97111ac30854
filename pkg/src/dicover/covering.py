"""Finite windows of the universal cover and the antisymmetry check on them.

Walks in the 1-skeleton are tuples of ``(edge, direction)`` letters with
direction ``+1`` (along the edge) or ``-1`` (against it).  Two walks with the
same ends are identified when they differ by free reduction and by the
square relations, one per 2-cube: its two monotone boundary paths
``d_{-2} . d_{+1}`` and ``d_{-1} . d_{+2}`` are homotopic.

Normalization is a budgeted breadth-first saturation using only moves that
do not lengthen a walk (free cancellation, removing a whole relator,
replacing three letters of a relator by the inverse of the fourth, and
swapping one half of a relator for the other).  The canonical form is the
shortlex-least walk reached.  On nonpositively curved square complexes (the
circle, wedges, the torus, grids with holes, the square) every class
reaches its geodesics this way; elsewhere the procedure may split a class,
and it reports UNKNOWN when it runs out of budget.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .dipaths import EdgePath, is_essential
from .errors import DomainError, OutOfWindowError, UncertifiedError
from .graphs import connected_components, find_cycle
from .homology import HomologyResult, homology
from .precubical import CubeId, PrecubicalSet, corner

FWD = 1
BWD = -1


class _Unknown:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"


UNKNOWN = _Unknown()


def inverse(walk: tuple) -> tuple:
    return tuple((e, -d) for e, d in reversed(walk))


def walk_ends(X: PrecubicalSet, start: int, walk: tuple) -> int:
    """End vertex of ``walk`` from ``start``; raises DomainError if it does not compose."""
    at = start
    for pos, (e, d) in enumerate(walk):
        s, t = (X.source(e), X.target(e)) if d == FWD else (X.target(e), X.source(e))
        if s != at:
            raise DomainError(f"walk breaks at letter {pos + 1}")
        at = t
    return at


def _letter_key(letter) -> tuple:
    e, d = letter
    return (e, 0 if d == FWD else 1)


def shortlex_key(walk: tuple) -> tuple:
    return (len(walk), tuple(_letter_key(x) for x in walk))


@dataclass(frozen=True)
class SquareRelation:
    """The two monotone boundary paths of a square, as edge indices."""

    square: int
    left: tuple   # (d_{-2} theta, d_{+1} theta)
    right: tuple  # (d_{-1} theta, d_{+2} theta)
    source: int
    target: int

    def relator(self) -> tuple:
        """Closed walk ``left . right^-1``."""
        return ((self.left[0], FWD), (self.left[1], FWD),
                (self.right[1], BWD), (self.right[0], BWD))


def square_relations(X: PrecubicalSet) -> list:
    out = []
    for k in range(X.count(2)):
        theta = CubeId(2, k)
        left = (X.face(theta, -1, 2).index, X.face(theta, 1, 1).index)
        right = (X.face(theta, -1, 1).index, X.face(theta, 1, 2).index)
        lo = corner(X, theta, [0, 0]).index
        hi = corner(X, theta, [1, 1]).index
        for path in (left, right):
            EdgePath(X, lo, path)  # raises if the boundary path does not compose
            if X.target(path[1]) != hi:
                raise AssertionError(f"square {X.name(theta)}: boundary path misses the top corner")
        out.append(SquareRelation(k, left, right, lo, hi))
    return out


def _rewrite_rules(relations) -> dict:
    """Map each pattern to its non-lengthening replacements, by pattern length."""
    rules = {}
    for rel in relations:
        r = rel.relator()
        for word in (r, inverse(r)):
            for rot in range(4):
                cyc = word[rot:] + word[:rot]
                for k in (2, 3, 4):
                    pattern = cyc[:k]
                    replacement = inverse(cyc[k:])
                    rules.setdefault(k, {}).setdefault(pattern, set()).add(replacement)
    return rules


@dataclass(frozen=True)
class PathClass:
    """A path-homotopy class of walks from ``base``, held by its canonical walk."""

    base: int
    representative: tuple
    end: int


class Normalizer:
    """Canonical forms of walks modulo free reduction and square relations."""

    def __init__(self, X: PrecubicalSet, relations=None):
        self.X = X
        self.relations = square_relations(X) if relations is None else list(relations)
        self._rules = _rewrite_rules(self.relations)
        self.max_states = 0

    def _moves(self, w: tuple):
        for i in range(len(w) - 1):
            if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]:
                yield w[:i] + w[i + 2:]
        for k, table in self._rules.items():
            for i in range(len(w) - k + 1):
                for rep in table.get(w[i:i + k], ()):
                    yield w[:i] + rep + w[i + k:]

    def normalize(self, base: int, walk: tuple, budget: int):
        """Canonical :class:`PathClass` of ``walk`` from ``base``, or ``UNKNOWN``.

        ``budget`` bounds the number of rewrite applications.
        """
        if budget <= 0:
            raise DomainError("budget must be positive")
        walk = tuple((int(e), int(d)) for e, d in walk)
        end = walk_ends(self.X, base, walk)
        seen = {walk}
        queue = deque([walk])
        used = 0
        while queue:
            w = queue.popleft()
            for v in self._moves(w):
                used += 1
                if used > budget:
                    self.max_states = max(self.max_states, len(seen))
                    return UNKNOWN
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        self.max_states = max(self.max_states, len(seen))
        best = min(seen, key=shortlex_key)
        return PathClass(base, best, end)


def normalize(X: PrecubicalSet, base: int, walk, budget: int, relations=None):
    return Normalizer(X, relations).normalize(base, tuple(walk), budget)


# -- cover balls ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Dart:
    src: int
    edge: int
    dst: int


@dataclass
class CoverBall:
    base: PrecubicalSet
    basepoint: int
    radius: int
    budget: int
    nodes: list                      # PathClass per node, in discovery order
    layers: list                     # BFS distance per node
    darts: list
    unknown: list = field(default_factory=list)   # (node, letter) whose merge was abandoned
    normalize_calls: int = 0
    max_states: int = 0

    def __post_init__(self):
        self._out = {}
        self._in = {}
        for a in self.darts:
            prev = self._out.setdefault((a.src, a.edge), a.dst)
            if prev != a.dst:
                raise AssertionError(f"two lifts of edge {a.edge} leave node {a.src}")
            prev = self._in.setdefault((a.dst, a.edge), a.src)
            if prev != a.src:
                raise AssertionError(f"two lifts of edge {a.edge} enter node {a.dst}")

    @property
    def certified(self) -> bool:
        return not self.unknown

    @property
    def root(self) -> int:
        return 0

    def vertex(self, node: int) -> int:
        return self.nodes[node].end

    def frontier(self) -> list:
        return [i for i, d in enumerate(self.layers) if d == self.radius]

    def successor(self, node: int, edge: int) -> Optional[int]:
        return self._out.get((node, edge))

    def predecessor(self, node: int, edge: int) -> Optional[int]:
        return self._in.get((node, edge))

    def layer_counts(self) -> list:
        """``(nodes, darts)`` per layer; a dart counts in the layer of its nearer end."""
        nodes = [0] * (self.radius + 1)
        darts = [0] * (self.radius + 1)
        for d in self.layers:
            nodes[d] += 1
        for a in self.darts:
            darts[min(self.layers[a.src], self.layers[a.dst])] += 1
        return list(zip(nodes, darts))

    def check_local_bijection(self) -> list:
        """Interior nodes whose darts do not match the base edges at their vertex."""
        bad = []
        X = self.base
        for node, d in enumerate(self.layers):
            if d == self.radius:
                continue
            v = self.vertex(node)
            outs = sorted(e for (n, e) in self._out if n == node)
            ins = sorted(e for (n, e) in self._in if n == node)
            if outs != sorted(X.out_edges(v)) or ins != sorted(X.in_edges(v)):
                bad.append(node)
        return bad


def build_cover_ball(
    X: PrecubicalSet, basepoint: int = 0, radius: int = 3, budget: int = 1000
) -> CoverBall:
    """Breadth-first window of radius ``radius`` around ``(basepoint, [])``."""
    if radius < 0:
        raise DomainError("radius must be nonnegative")
    if not 0 <= basepoint < X.count(0):
        raise DomainError(f"basepoint {basepoint} out of range")
    comps = connected_components(X.count(0), ((X.source(e), X.target(e)) for e in range(X.count(1))))
    if len(set(comps)) != 1:
        raise DomainError("the 1-skeleton is disconnected")
    norm = Normalizer(X)
    root = PathClass(basepoint, (), basepoint)
    nodes = [root]
    layers = [0]
    index = {(): 0}
    darts = {}
    unknown = []
    calls = 0
    queue = deque([0])
    while queue:
        node = queue.popleft()
        if layers[node] >= radius:
            continue
        cls = nodes[node]
        v = cls.end
        steps = [((e, FWD), True) for e in X.out_edges(v)]
        steps += [((e, BWD), False) for e in X.in_edges(v)]
        for letter, forward in steps:
            calls += 1
            res = norm.normalize(basepoint, cls.representative + (letter,), budget)
            if res is UNKNOWN:
                unknown.append((node, letter))
                continue
            other = index.get(res.representative)
            if other is None:
                other = len(nodes)
                index[res.representative] = other
                nodes.append(res)
                layers.append(layers[node] + 1)
                queue.append(other)
            e = letter[0]
            dart = Dart(node, e, other) if forward else Dart(other, e, node)
            darts.setdefault((dart.src, dart.edge, dart.dst), dart)
    return CoverBall(
        base=X, basepoint=basepoint, radius=radius, budget=budget,
        nodes=nodes, layers=layers, darts=sorted(darts.values(), key=lambda a: (a.src, a.edge, a.dst)),
        unknown=unknown, normalize_calls=calls, max_states=norm.max_states,
    )


def lift_path(ball: CoverBall, gamma: EdgePath, start: int = 0) -> list:
    """Nodes visited by the unique lift of ``gamma`` from ``start``; the last is the endpoint."""
    if ball.vertex(start) != gamma.start:
        raise DomainError("the start node does not lie over the start of the path")
    nodes = [start]
    at = start
    for step, e in enumerate(gamma.edges, 1):
        nxt = ball.successor(at, e)
        if nxt is None:
            raise OutOfWindowError(
                f"lift leaves the ball at step {step} (edge {gamma.base.name(CubeId(1, e))})"
            )
        nodes.append(nxt)
        at = nxt
    return nodes


@dataclass
class AntisymmetryVerdict:
    passed: bool
    nodes: int
    darts: int
    cycle: Optional[list] = None          # darts of a directed cycle, on FAIL
    projection: Optional[EdgePath] = None
    essential: Optional[bool] = None


def check_antisymmetry(ball: CoverBall, result: Optional[HomologyResult] = None) -> AntisymmetryVerdict:
    """PASS iff the dart digraph of a certified ball has no directed cycle."""
    if not ball.certified:
        raise UncertifiedError(
            f"ball has {len(ball.unknown)} unresolved merges; raise the budget"
        )
    arcs = [(a.src, a.dst) for a in ball.darts]
    cyc = find_cycle(len(ball.nodes), arcs)
    if cyc is None:
        return AntisymmetryVerdict(True, len(ball.nodes), len(ball.darts))
    darts = [ball.darts[i] for i in cyc]
    X = ball.base
    gamma = EdgePath(X, ball.vertex(darts[0].src), tuple(a.edge for a in darts))
    cert = is_essential(gamma, result or homology(X))
    return AntisymmetryVerdict(False, len(ball.nodes), len(ball.darts), darts, gamma, cert.essential)
