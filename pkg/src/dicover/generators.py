"""Named instance families and random square complexes."""
from __future__ import annotations

import random
from typing import Sequence

from .errors import DomainError
from .precubical import PrecubicalSet, check, standard_cube


def circle() -> PrecubicalSet:
    return wedge(1, names=("e",))


def wedge(k: int, names: Sequence[str] | None = None) -> PrecubicalSet:
    """One vertex with ``k`` loop edges."""
    if k < 1:
        raise DomainError("a wedge needs at least one loop")
    names = list(names) if names else [f"e{i + 1}" for i in range(k)]
    return PrecubicalSet([1, k], {1: [(0, 0)] * k}, {0: ["v"], 1: names})


def torus() -> PrecubicalSet:
    """One vertex, edges a and b, one square with both opposite pairs glued."""
    return PrecubicalSet(
        [1, 2, 1],
        {1: [(0, 0), (0, 0)], 2: [(0, 0, 1, 1)]},
        {0: ["v"], 1: ["a", "b"], 2: ["t"]},
    )


def cube(n: int) -> PrecubicalSet:
    return standard_cube(n)


def grid(m: int, n: int, forbid: Sequence[Sequence[int]] = ()) -> PrecubicalSet:
    """The ``m`` by ``n`` grid of unit squares, edges pointing toward larger coordinates.

    Each forbidden rectangle ``(x1, y1, x2, y2)`` removes the unit squares
    with lower-left corner ``(x, y)``, ``x1 <= x <= x2`` and ``y1 <= y <= y2``.
    Edges and vertices are always kept.
    """
    if m < 0 or n < 0:
        raise DomainError("grid sizes must be nonnegative")
    removed = set()
    for rect in forbid:
        x1, y1, x2, y2 = rect
        if not (0 <= x1 <= x2 < m and 0 <= y1 <= y2 < n):
            raise DomainError(f"forbidden rectangle {tuple(rect)} is outside the {m}x{n} grid")
        removed.update((x, y) for x in range(x1, x2 + 1) for y in range(y1, y2 + 1))

    vid = {}
    vnames = []
    for y in range(n + 1):
        for x in range(m + 1):
            vid[x, y] = len(vnames)
            vnames.append(f"v{x}_{y}")
    eid = {}
    enames = []
    erows = []
    for y in range(n + 1):
        for x in range(m):
            eid["h", x, y] = len(enames)
            enames.append(f"h{x}_{y}")
            erows.append((vid[x, y], vid[x + 1, y]))
    for y in range(n):
        for x in range(m + 1):
            eid["u", x, y] = len(enames)
            enames.append(f"u{x}_{y}")
            erows.append((vid[x, y], vid[x, y + 1]))
    snames = []
    srows = []
    for y in range(n):
        for x in range(m):
            if (x, y) in removed:
                continue
            snames.append(f"s{x}_{y}")
            srows.append((eid["u", x, y], eid["u", x + 1, y], eid["h", x, y], eid["h", x, y + 1]))
    counts = [len(vnames), len(enames), len(snames)]
    return PrecubicalSet(
        counts, {1: erows, 2: srows}, {0: vnames, 1: enames, 2: snames}
    )


def random_square_complex(rng: random.Random, n_squares: int, merges: int) -> PrecubicalSet:
    """Disjoint standard squares with random edge and vertex identifications.

    Gluing an edge to another identifies their sources and their targets, so
    the quotient is again a precubical set.
    """
    if n_squares < 1:
        raise DomainError("need at least one square")
    # per square: vertices 00,10,01,11 and edges 0*(a),1*(b),*0(c),*1(d)
    n_v, n_e = 4 * n_squares, 4 * n_squares
    esrc, etgt, srows = [], [], []
    for s in range(n_squares):
        v = lambda i: 4 * s + i  # noqa: E731
        e = lambda i: 4 * s + i  # noqa: E731
        # "0*": 00 -> 01, "1*": 10 -> 11, "*0": 00 -> 10, "*1": 01 -> 11
        esrc += [v(0), v(1), v(0), v(2)]
        etgt += [v(2), v(3), v(1), v(3)]
        srows.append((e(0), e(1), e(2), e(3)))
    vpar = list(range(n_v))
    epar = list(range(n_e))

    def find(par, x):
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    def union(par, a, b):
        a, b = find(par, a), find(par, b)
        if a != b:
            par[max(a, b)] = min(a, b)

    for _ in range(merges):
        if rng.random() < 0.5:
            a, b = rng.randrange(n_e), rng.randrange(n_e)
            union(epar, a, b)
            union(vpar, esrc[a], esrc[b])
            union(vpar, etgt[a], etgt[b])
        else:
            union(vpar, rng.randrange(n_v), rng.randrange(n_v))
    # identified edges must share endpoints classes; close under that
    changed = True
    while changed:
        changed = False
        for a in range(n_e):
            r = find(epar, a)
            for x, y in ((esrc[a], esrc[r]), (etgt[a], etgt[r])):
                if find(vpar, x) != find(vpar, y):
                    union(vpar, x, y)
                    changed = True
    vroots = sorted({find(vpar, x) for x in range(n_v)})
    vmap = {r: i for i, r in enumerate(vroots)}
    eroots = sorted({find(epar, x) for x in range(n_e)})
    emap = {r: i for i, r in enumerate(eroots)}
    erows = [(vmap[find(vpar, esrc[r])], vmap[find(vpar, etgt[r])]) for r in eroots]
    rows = [tuple(emap[find(epar, e)] for e in row) for row in srows]
    return check(PrecubicalSet([len(vroots), len(eroots), n_squares], {1: erows, 2: rows}))


GENERATORS = ("circle", "wedge", "torus", "grid", "cube")


def generate(name: str, params: Sequence[int] = (), forbid: Sequence[Sequence[int]] = ()) -> PrecubicalSet:
    """Build a named instance: ``circle``, ``wedge k``, ``torus``, ``grid m n``, ``cube n``."""
    arity = {"circle": 0, "torus": 0, "wedge": 1, "cube": 1, "grid": 2}
    if name not in arity:
        raise DomainError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")
    if len(params) != arity[name]:
        raise DomainError(f"{name} takes {arity[name]} integer parameter(s), got {len(params)}")
    if forbid and name != "grid":
        raise DomainError("--forbid applies to grid only")
    if name == "circle":
        X = circle()
    elif name == "torus":
        X = torus()
    elif name == "wedge":
        X = wedge(params[0])
    elif name == "cube":
        if params[0] < 0:
            raise DomainError("cube dimension must be nonnegative")
        X = cube(params[0])
    else:
        X = grid(params[0], params[1], forbid)
    return check(X)
