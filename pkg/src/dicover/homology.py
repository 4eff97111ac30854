"""Cellular chains in degrees 0-2, integer homology, and the nonnegative-cycle audit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError, PreconditionError, SearchLimitError
from .graphs import connected_components, strongly_connected_components
from .precubical import MINUS, PLUS, CubeId, PrecubicalSet
from .smith import SmithForm, smith_normal_form

# degree of the attaching map of a square on each face slot, keyed (sign, axis)
FACE_DEGREES = {(PLUS, 1): 1, (MINUS, 1): -1, (MINUS, 2): 1, (PLUS, 2): -1}


class Chain:
    """An integer combination of cubes of one dimension.

    Coefficients are keyed by the cube's index within its dimension; zero
    coefficients are dropped.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[int, int] | None = None):
        if degree not in (0, 1, 2):
            raise DomainError(f"chains are supported in degrees 0-2, got {degree}")
        self.degree = degree
        self._coeffs = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def of(cls, *terms) -> "Chain":
        """Build from ``(coefficient, CubeId)`` pairs, all of one dimension."""
        if not terms:
            raise DomainError("use Chain(degree) for the zero chain")
        degree = terms[0][1].dim
        out = {}
        for coeff, cube in terms:
            if cube.dim != degree:
                raise DomainError("all cubes of a chain must share one dimension")
            out[cube.index] = out.get(cube.index, 0) + coeff
        return cls(degree, out)

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __getitem__(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._coeffs.values())

    def to_vector(self, size: int) -> list:
        vec = [0] * size
        for k, v in self._coeffs.items():
            if k >= size:
                raise DomainError(f"chain refers to cube index {k} beyond {size}")
            vec[k] = v
        return vec

    def _check(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        if other.degree != self.degree:
            raise DomainError(f"cannot combine chains of degree {self.degree} and {other.degree}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return Chain(self.degree, out)

    def __neg__(self):
        return Chain(self.degree, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar: int):
        return Chain(self.degree, {k: scalar * v for k, v in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, tuple(self.items())))

    def __repr__(self):
        if not self._coeffs:
            return f"Chain({self.degree}, 0)"
        terms = " + ".join(f"{v}*[{k}]" for k, v in self.items())
        return f"Chain({self.degree}, {terms})"

    def format(self, X: PrecubicalSet) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in self.items():
            name = X.name(CubeId(self.degree, k))
            parts.append(name if v == 1 else f"{v}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def boundary1(X: PrecubicalSet, c: Chain) -> Chain:
    """``d(sigma) = d_{+1} sigma - d_{-1} sigma``, extended linearly."""
    if c.degree != 1:
        raise DomainError(f"boundary1 takes a degree-1 chain, got degree {c.degree}")
    out = {}
    for k, v in c.items():
        row = X.face_row(1, k)
        out[row[1]] = out.get(row[1], 0) + v
        out[row[0]] = out.get(row[0], 0) - v
    return Chain(0, out)


def boundary2(X: PrecubicalSet, c: Chain) -> Chain:
    """``d(theta) = d_{+1} + d_{-2} - d_{-1} - d_{+2}``, extended linearly.

    Coefficients accumulate when several face slots name the same edge.
    """
    if c.degree != 2:
        raise DomainError(f"boundary2 takes a degree-2 chain, got degree {c.degree}")
    out = {}
    for k, v in c.items():
        row = X.face_row(2, k)
        for (sign, axis), deg in FACE_DEGREES.items():
            e = row[2 * (axis - 1) + (0 if sign == MINUS else 1)]
            out[e] = out.get(e, 0) + deg * v
    return Chain(1, out)


def face_degree(X: PrecubicalSet, theta: CubeId, sigma: CubeId) -> int:
    """Sum of the slot degrees over the faces of ``theta`` equal to ``sigma``."""
    if theta.dim != 2 or sigma.dim != 1:
        raise DomainError("face_degree takes a 2-cube and a 1-cube")
    total = 0
    for (sign, axis), deg in FACE_DEGREES.items():
        if X.face(theta, sign, axis) == sigma:
            total += deg
    return total


def boundary_matrix(X: PrecubicalSet, n: int) -> list:
    """Matrix of ``d_n`` (rows: (n-1)-cubes, columns: n-cubes)."""
    if n not in (1, 2):
        raise DomainError("only d_1 and d_2 are implemented")
    rows, cols = X.count(n - 1), X.count(n)
    M = [[0] * cols for _ in range(rows)]
    bd = boundary1 if n == 1 else boundary2
    for k in range(cols):
        for r, v in bd(X, Chain(n, {k: 1})).items():
            M[r][k] = v
    return M


@dataclass
class HomologyResult:
    h0_rank: int
    h1_free_rank: int
    h1_torsion: list
    rank_d1: int
    rank_d2: int
    counts: tuple
    # Smith form of d_2; answers membership in im d_2
    d2_form: SmithForm = field(repr=False)

    def h1_string(self) -> str:
        r = self.h1_free_rank
        parts = [] if r == 0 else ["Z"] if r == 1 else [f"Z^{r}"]
        parts += [f"Z/{f}" for f in self.h1_torsion]
        return " + ".join(parts) if parts else "0"

    def bounding_chain(self, c: Chain) -> Chain | None:
        """A 2-chain ``x`` with ``d_2 x = c``, or None if ``c`` is not a boundary."""
        x = self.d2_form.solve(c.to_vector(self.d2_form.rows))
        if x is None:
            return None
        return Chain(2, dict(enumerate(x)))

    def is_nullhomologous(self, c: Chain) -> bool:
        return self.bounding_chain(c) is not None


def homology(X: PrecubicalSet) -> HomologyResult:
    """``H_0`` rank and ``H_1`` of the cellular chain complex, via Smith normal form."""
    n0, n1, n2 = X.count(0), X.count(1), X.count(2)
    f1 = smith_normal_form(boundary_matrix(X, 1), rows=n0, cols=n1)
    f2 = smith_normal_form(boundary_matrix(X, 2), rows=n1, cols=n2)
    components = connected_components(n0, ((X.source(e), X.target(e)) for e in range(n1)))
    h0 = len(set(components))
    if h0 != n0 - f1.rank:
        raise AssertionError("component count disagrees with rank of d_1")
    return HomologyResult(
        h0_rank=h0,
        h1_free_rank=(n1 - f1.rank) - f2.rank,
        h1_torsion=[d for d in f2.diag if d > 1],
        rank_d1=f1.rank,
        rank_d2=f2.rank,
        counts=(n0, n1, n2),
        d2_form=f2,
    )


def is_nullhomologous(c: Chain, X: PrecubicalSet, result: HomologyResult | None = None) -> bool:
    """Whether the 1-cycle ``c`` bounds an integer 2-chain."""
    if c.degree != 1:
        raise DomainError(f"expected a degree-1 chain, got degree {c.degree}")
    if not boundary1(X, c).is_zero():
        raise PreconditionError(f"{c.format(X)} is not a cycle")
    return (result or homology(X)).is_nullhomologous(c)


@dataclass
class AuditReport:
    bound: int
    cyclic_edges: list
    cycles_checked: int
    counterexamples: list

    @property
    def ok(self) -> bool:
        return not self.counterexamples


DEFAULT_AUDIT_CAP = 10**6


def _cyclic_edges(X: PrecubicalSet) -> list:
    # a nonnegative cycle is a sum of directed circuits, so it lives on edges inside one SCC
    arcs = [(X.source(e), X.target(e)) for e in range(X.count(1))]
    scc = strongly_connected_components(X.count(0), arcs)
    return [e for e, (u, v) in enumerate(arcs) if scc[u] == scc[v]]


def nonnegative_cycles(X: PrecubicalSet, bound: int, cap: int = DEFAULT_AUDIT_CAP):
    """Yield every 1-cycle with coefficients in ``[0, bound]`` (including 0)."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    edges = _cyclic_edges(X)
    space = (bound + 1) ** len(edges)
    if space > cap:
        raise SearchLimitError(
            f"search space (bound+1)^{len(edges)} = {space} exceeds cap {cap}"
        )
    n0 = X.count(0)
    balance = [0] * n0
    open_in = [0] * n0
    open_out = [0] * n0
    for e in edges:
        open_in[X.target(e)] += 1
        open_out[X.source(e)] += 1
    coeffs = [0] * len(edges)

    def feasible(v):
        return -bound * open_in[v] <= balance[v] <= bound * open_out[v]

    def rec(pos):
        if pos == len(edges):
            yield Chain(1, {edges[p]: c for p, c in enumerate(coeffs)})
            return
        e = edges[pos]
        s, t = X.source(e), X.target(e)
        open_out[s] -= 1
        open_in[t] -= 1
        for c in range(bound + 1):
            coeffs[pos] = c
            balance[t] += c
            balance[s] -= c
            if feasible(s) and feasible(t):
                yield from rec(pos + 1)
            balance[t] -= c
            balance[s] += c
        coeffs[pos] = 0
        open_out[s] += 1
        open_in[t] += 1

    yield from rec(0)


def nonnegative_cycle_audit(
    X: PrecubicalSet, coeff_bound: int, cap: int = DEFAULT_AUDIT_CAP,
    result: HomologyResult | None = None,
) -> AuditReport:
    """Search for a nonzero nonnegative 1-cycle that bounds; none should exist."""
    result = result or homology(X)
    checked = 0
    bad = []
    for c in nonnegative_cycles(X, coeff_bound, cap):
        if not boundary1(X, c).is_zero():
            raise AssertionError(f"enumerated chain {c!r} is not a cycle")
        checked += 1
        if not c.is_zero() and result.is_nullhomologous(c):
            bad.append(c)
    return AuditReport(coeff_bound, _cyclic_edges(X), checked, bad)


def euler_characteristic(X: PrecubicalSet) -> int:
    return sum((-1) ** n * c for n, c in enumerate(X.counts))
