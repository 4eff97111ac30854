"""Random monotone PL tracks and loops over small precubical sets."""
from __future__ import annotations

import random
from fractions import Fraction

from dicover.covering import square_relations
from dicover.dipaths import PLDipath, Segment, directed_loops
from dicover.precubical import CubeId, RealizationPoint, cofaces, embed_point, support

_STEPS = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)]


def _bump(rng: random.Random, c: Fraction) -> Fraction:
    roll = rng.random()
    if roll < 0.3 or c == 1:
        return c
    if roll < 0.6:
        return Fraction(1)
    bigger = [s for s in _STEPS if s > c]
    return rng.choice(bigger) if bigger else Fraction(1)


def random_point(X, rng) -> RealizationPoint:
    n = rng.randint(0, X.dim)
    k = rng.randrange(X.count(n))
    coords = [rng.choice([Fraction(0), Fraction(1)] + _STEPS) for _ in range(n)]
    return RealizationPoint(CubeId(n, k), coords)


def random_track(X, rng, max_segments=5) -> PLDipath:
    x = support(X, random_point(X, rng))
    segments = []
    for _ in range(rng.randint(1, max_segments)):
        sigma, pattern = rng.choice(cofaces(X, x.carrier))
        start = embed_point(pattern, x.coords)
        stop = tuple(_bump(rng, c) for c in start)
        segments.append(Segment(sigma, start, stop))
        x = support(X, RealizationPoint(sigma, stop))
    return PLDipath(X, tuple(segments))


def _edge_segments(X, rng, e):
    """Segments running along edge ``e`` from its source to its target."""
    choice = rng.random()
    if choice < 0.35:
        return [Segment(CubeId(1, e), [0], [1])]
    if choice < 0.7:
        t = rng.choice(_STEPS)
        return [Segment(CubeId(1, e), [0], [t]), Segment(CubeId(1, e), [t], [1])]
    # run along e inside a square having e as a face, if there is one
    lifts = [(s, p) for s, p in cofaces(X, CubeId(1, e)) if s.dim == 2]
    if not lifts:
        return [Segment(CubeId(1, e), [0], [1])]
    sigma, pattern = rng.choice(lifts)
    return [Segment(sigma, embed_point(pattern, [0]), embed_point(pattern, [1]))]


def random_loop(X, rng, max_len=3):
    """A nonconstant monotone PL loop following a random directed edge loop, or None."""
    loops = directed_loops(X, max_len)
    if not loops:
        return None
    edges = list(rng.choice(loops).edges)
    diagonals = {}
    for rel in square_relations(X):
        diagonals.setdefault(rel.left, rel.square)
        diagonals.setdefault(rel.right, rel.square)
    segments = []
    i = 0
    while i < len(edges):
        pair = tuple(edges[i:i + 2])
        if len(pair) == 2 and pair in diagonals and rng.random() < 0.5:
            segments.append(Segment(CubeId(2, diagonals[pair]), [0, 0], [1, 1]))
            i += 2
            continue
        segments.extend(_edge_segments(X, rng, edges[i]))
        i += 1
    first = segments[0]
    if first.carrier.dim == 1 and first.start == (0,) and first.stop == (1,) and rng.random() < 0.5:
        # start in the middle of the first edge and close up there
        t = rng.choice(_STEPS)
        head = Segment(first.carrier, [t], [1])
        tail = Segment(first.carrier, [0], [t])
        segments = [head] + segments[1:] + [tail]
    return PLDipath(X, tuple(segments))
