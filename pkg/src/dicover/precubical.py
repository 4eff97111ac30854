"""Finite precubical sets.

A precubical set is stored as one roster of cubes per dimension together
with a face table.  The ``2n`` faces of an ``n``-cube are kept in a flat
tuple, slot ``2*(i-1)`` holding ``d_{-i}`` and slot ``2*(i-1)+1`` holding
``d_{+i}``.  Face identities are checked in the form

    d_{a,i} d_{b,j} = d_{b,j-1} d_{a,i}      (i < j)

with both sides read right-to-left as maps on cubes.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

from .errors import DomainError, StructureError, ValidationError

MINUS = -1
PLUS = 1
SIGNS = (MINUS, PLUS)

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class CubeId(NamedTuple):
    dim: int
    index: int

    def __repr__(self):
        return f"CubeId({self.dim}, {self.index})"


def _slot(sign: int, axis: int) -> int:
    if sign not in SIGNS:
        raise DomainError(f"sign must be -1 or +1, got {sign!r}")
    return 2 * (axis - 1) + (0 if sign == MINUS else 1)


def sign_symbol(sign: int) -> str:
    return "-" if sign == MINUS else "+"


class PrecubicalSet:
    """A finite precubical set.

    Parameters
    ----------
    counts : sequence of int
        ``counts[n]`` is the number of ``n``-cubes.
    faces : mapping
        ``faces[n][k]`` is a sequence of ``2n`` indices into the ``(n-1)``-cubes,
        ordered ``d_{-1}, d_{+1}, d_{-2}, d_{+2}, ...``.  Required for every
        ``n >= 1`` with ``counts[n] > 0``.
    names : mapping, optional
        ``names[n][k]`` is an identifier for cube ``(n, k)``.  Defaults to
        ``c<n>_<k>``.

    The constructor checks the face table is total and in range; the face
    identities are checked separately by :func:`validate`.
    """

    def __init__(
        self,
        counts: Sequence[int],
        faces: Optional[Mapping[int, Sequence[Sequence[int]]]] = None,
        names: Optional[Mapping[int, Sequence[str]]] = None,
    ):
        counts = list(counts)
        while counts and counts[-1] == 0:
            counts.pop()
        if any(c < 0 for c in counts):
            raise StructureError(f"negative cube count in {counts}")
        self._counts = tuple(counts)
        faces = faces or {}
        table = []
        for n, count in enumerate(self._counts):
            if n == 0:
                table.append(tuple(() for _ in range(count)))
                continue
            rows = faces.get(n)
            if rows is None or len(rows) != count:
                got = 0 if rows is None else len(rows)
                raise StructureError(f"expected face rows for {count} cubes of dim {n}, got {got}")
            below = self._counts[n - 1]
            dim_rows = []
            for k, row in enumerate(rows):
                row = tuple(int(t) for t in row)
                if len(row) != 2 * n:
                    raise StructureError(
                        f"cube ({n}, {k}) has {len(row)} face entries, expected {2 * n}"
                    )
                for s, t in enumerate(row):
                    if not 0 <= t < below:
                        sign = MINUS if s % 2 == 0 else PLUS
                        raise StructureError(
                            f"face d[{sign_symbol(sign)}{s // 2 + 1}] of cube ({n}, {k}) "
                            f"points to ({n - 1}, {t}), which is out of range"
                        )
                dim_rows.append(row)
            table.append(tuple(dim_rows))
        self._faces = tuple(table)

        if names is None:
            self._names = tuple(
                tuple(f"c{n}_{k}" for k in range(c)) for n, c in enumerate(self._counts)
            )
        else:
            rosters = []
            for n, c in enumerate(self._counts):
                roster = tuple(names[n]) if n in names else ()
                if len(roster) != c:
                    raise StructureError(f"expected {c} names in dim {n}, got {len(roster)}")
                rosters.append(roster)
            flat = [nm for r in rosters for nm in r]
            bad = [nm for nm in flat if not _NAME_RE.match(nm)]
            if bad:
                raise StructureError(f"cube names must be identifiers: {bad[0]!r}")
            if len(set(flat)) != len(flat):
                raise StructureError("cube names must be unique")
            self._names = tuple(rosters)
        self._by_name = {
            nm: CubeId(n, k) for n, roster in enumerate(self._names) for k, nm in enumerate(roster)
        }

    # -- basic accessors -------------------------------------------------

    @property
    def counts(self) -> tuple:
        return self._counts

    @property
    def dim(self) -> int:
        """Largest dimension carrying a cube; -1 for the empty set."""
        return len(self._counts) - 1

    def count(self, n: int) -> int:
        return self._counts[n] if 0 <= n < len(self._counts) else 0

    def cubes(self, n: int) -> list:
        return [CubeId(n, k) for k in range(self.count(n))]

    def __iter__(self) -> Iterator[CubeId]:
        for n in range(len(self._counts)):
            yield from self.cubes(n)

    def __len__(self):
        return sum(self._counts)

    def __contains__(self, c) -> bool:
        return isinstance(c, tuple) and len(c) == 2 and 0 <= c[1] < self.count(c[0])

    def face_row(self, n: int, k: int) -> tuple:
        return self._faces[n][k]

    def face(self, c: CubeId, sign: int, axis: int) -> CubeId:
        """Return ``d_{sign,axis}(c)``."""
        n, k = c
        if not 1 <= axis <= n:
            raise DomainError(f"axis {axis} out of range for a cube of dim {n}")
        if c not in self:
            raise DomainError(f"{c!r} is not a cube of this set")
        return CubeId(n - 1, self._faces[n][k][_slot(sign, axis)])

    def name(self, c: CubeId) -> str:
        return self._names[c[0]][c[1]]

    @property
    def names(self) -> tuple:
        return self._names

    def lookup(self, name: str) -> CubeId:
        try:
            return self._by_name[name]
        except KeyError:
            raise DomainError(f"no cube named {name!r}") from None

    # -- edges ---------------------------------------------------------------

    def source(self, edge: int) -> int:
        """Index of ``d_{-1}`` of the edge with index ``edge``."""
        return self._faces[1][edge][0]

    def target(self, edge: int) -> int:
        return self._faces[1][edge][1]

    def out_edges(self, vertex: int) -> list:
        return [e for e in range(self.count(1)) if self.source(e) == vertex]

    def in_edges(self, vertex: int) -> list:
        return [e for e in range(self.count(1)) if self.target(e) == vertex]

    # -- derived sets -------------------------------------------------------

    def relabel(self, perms: Mapping[int, Sequence[int]]) -> "PrecubicalSet":
        """Renumber the rosters; cube ``(n, k)`` becomes ``(n, perms[n][k])``.

        Dimensions missing from ``perms`` keep their numbering.
        """
        full = {}
        for n, c in enumerate(self._counts):
            p = list(perms.get(n, range(c)))
            if sorted(p) != list(range(c)):
                raise DomainError(f"perms[{n}] is not a permutation of range({c})")
            full[n] = p
        faces = {}
        names = {}
        for n, c in enumerate(self._counts):
            rows = [None] * c
            roster = [None] * c
            for k in range(c):
                row = self._faces[n][k]
                rows[full[n][k]] = tuple(full[n - 1][t] for t in row) if n else ()
                roster[full[n][k]] = self._names[n][k]
            faces[n] = rows
            names[n] = roster
        return PrecubicalSet(self._counts, faces, names)

    def __eq__(self, other):
        if not isinstance(other, PrecubicalSet):
            return NotImplemented
        return (
            self._counts == other._counts
            and self._faces == other._faces
            and self._names == other._names
        )

    def __hash__(self):
        return hash((self._counts, self._faces))

    def __repr__(self):
        return f"PrecubicalSet(counts={list(self._counts)})"


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    cube: CubeId
    a: int
    i: int
    b: int
    j: int
    left: CubeId
    right: CubeId
    cube_name: str = ""
    left_name: str = ""
    right_name: str = ""

    def __str__(self):
        sa, sb = sign_symbol(self.a), sign_symbol(self.b)
        label = self.cube_name or repr(self.cube)
        left = self.left_name or self.left.index
        right = self.right_name or self.right.index
        return (
            f"cube {label}: d[{sa}{self.i}] d[{sb}{self.j}] -> {left}, "
            f"d[{sb}{self.j - 1}] d[{sa}{self.i}] -> {right}"
        )


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def validate(X: PrecubicalSet) -> ValidationReport:
    """Check every face identity ``d_{a,i} d_{b,j} = d_{b,j-1} d_{a,i}`` (i < j).

    Out-of-range face entries cannot reach this point: the constructor of
    :class:`PrecubicalSet` already raises :class:`StructureError` on them.
    """
    found = []
    for n in range(2, X.dim + 1):
        for k in range(X.count(n)):
            row = X.face_row(n, k)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    for a in SIGNS:
                        for b in SIGNS:
                            lhs = X.face_row(n - 1, row[_slot(b, j)])[_slot(a, i)]
                            rhs = X.face_row(n - 1, row[_slot(a, i)])[_slot(b, j - 1)]
                            if lhs != rhs:
                                c, left, right = CubeId(n, k), CubeId(n - 2, lhs), CubeId(n - 2, rhs)
                                found.append(
                                    Violation(c, a, i, b, j, left, right,
                                              X.name(c), X.name(left), X.name(right))
                                )
    return ValidationReport(tuple(found))


def check(X: PrecubicalSet) -> PrecubicalSet:
    """Return ``X`` unchanged, raising :class:`ValidationError` if it is invalid."""
    report = validate(X)
    if not report.ok:
        raise ValidationError(report)
    return X


# -- standard cubes -------------------------------------------------------------


def standard_cube_words(n: int) -> list:
    """Words in ``{0,1,*}^n`` grouped by star count, in a fixed order."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    rosters = [[] for _ in range(n + 1)]
    for letters in itertools.product("01*", repeat=n):
        w = "".join(letters)
        rosters[w.count("*")].append(w)
    return rosters


def word_face(word: str, sign: int, axis: int) -> str:
    """Replace the ``axis``-th star of ``word`` by 0 (sign -1) or 1 (sign +1)."""
    stars = [p for p, ch in enumerate(word) if ch == "*"]
    if not 1 <= axis <= len(stars):
        raise DomainError(f"word {word!r} has no star number {axis}")
    p = stars[axis - 1]
    return word[:p] + ("0" if sign == MINUS else "1") + word[p + 1:]


def word_name(word: str) -> str:
    return "w" + word.replace("*", "x")


def standard_cube(n: int) -> PrecubicalSet:
    """The representable precubical set on ``[1]^n``, modelled by star words."""
    rosters = standard_cube_words(n)
    index = [{w: k for k, w in enumerate(r)} for r in rosters]
    counts = [len(r) for r in rosters]
    faces = {}
    for d in range(1, n + 1):
        faces[d] = [
            tuple(
                index[d - 1][word_face(w, s, ax)]
                for ax in range(1, d + 1)
                for s in SIGNS
            )
            for w in rosters[d]
        ]
    names = {d: [word_name(w) for w in r] for d, r in enumerate(rosters)}
    return PrecubicalSet(counts, faces, names)


# -- sub-precubical sets ----------------------------------------------------------


@dataclass(frozen=True)
class SubPrecubicalSet:
    parent: PrecubicalSet
    members: tuple  # members[n] is a frozenset of indices of n-cubes

    def __contains__(self, c) -> bool:
        n, k = c
        return 0 <= n < len(self.members) and k in self.members[n]

    @property
    def counts(self) -> tuple:
        counts = [len(m) for m in self.members]
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def cubes(self) -> list:
        return [CubeId(n, k) for n, m in enumerate(self.members) for k in sorted(m)]

    def is_closed(self) -> bool:
        for n in range(1, len(self.members)):
            for k in self.members[n]:
                if any(t not in self.members[n - 1] for t in self.parent.face_row(n, k)):
                    return False
        return True

    def to_precubical_set(self) -> PrecubicalSet:
        """Extract as a standalone set, keeping the parent's relative order and names."""
        order = [sorted(m) for m in self.members]
        while order and not order[-1]:
            order.pop()
        renum = [{k: r for r, k in enumerate(ks)} for ks in order]
        faces = {
            n: [tuple(renum[n - 1][t] for t in self.parent.face_row(n, k)) for k in ks]
            for n, ks in enumerate(order) if n
        }
        names = {n: [self.parent.name(CubeId(n, k)) for k in ks] for n, ks in enumerate(order)}
        return PrecubicalSet([len(ks) for ks in order], faces, names)


def skeleton(X: PrecubicalSet, n: int) -> SubPrecubicalSet:
    """All cubes of dimension at most ``n``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return SubPrecubicalSet(
        X, tuple(frozenset(range(X.count(d))) for d in range(min(n, X.dim) + 1))
    )


def generated(X: PrecubicalSet, sigma: CubeId) -> SubPrecubicalSet:
    """The smallest sub-precubical set containing ``sigma``."""
    if sigma not in X:
        raise DomainError(f"{sigma!r} is not a cube of this set")
    n = sigma.dim
    members = [set() for _ in range(n + 1)]
    members[n].add(sigma.index)
    for d in range(n, 0, -1):
        for k in members[d]:
            members[d - 1].update(X.face_row(d, k))
    return SubPrecubicalSet(X, tuple(frozenset(m) for m in members))


# -- faces by pattern, corners, supports --------------------------------------------


def face_at(X: PrecubicalSet, sigma: CubeId, pattern: Sequence[Optional[int]]) -> CubeId:
    """Face of ``sigma`` selected by ``pattern``.

    ``pattern[p]`` is 0 or 1 to pin coordinate ``p+1`` to that end, or None to
    leave it free.  Pinned coordinates are resolved highest axis first, so the
    lower axis numbers never shift.
    """
    if len(pattern) != sigma.dim:
        raise DomainError(f"pattern of length {len(pattern)} for a cube of dim {sigma.dim}")
    c = sigma
    for p in range(len(pattern) - 1, -1, -1):
        v = pattern[p]
        if v is None:
            continue
        if v not in (0, 1):
            raise DomainError(f"pattern entries must be 0, 1 or None, got {v!r}")
        c = X.face(c, PLUS if v else MINUS, p + 1)
    return c


def corner(X: PrecubicalSet, sigma: CubeId, eps: Sequence[int]) -> CubeId:
    """The vertex of ``sigma`` at corner ``eps`` in ``{0,1}^n``."""
    if len(eps) != sigma.dim:
        raise DomainError(f"corner vector has length {len(eps)}, cube has dim {sigma.dim}")
    if any(e not in (0, 1) for e in eps):
        raise DomainError(f"corner vector must be 0/1, got {list(eps)}")
    return face_at(X, sigma, list(eps))


def cofaces(X: PrecubicalSet, tau: CubeId) -> list:
    """All ``(sigma, pattern)`` with ``face_at(X, sigma, pattern) == tau``.

    Includes ``(tau, [None]*dim)``.  Enumerates ``3^n`` patterns per cube, so
    intended for small sets.
    """
    out = []
    for n in range(tau.dim, X.dim + 1):
        free = n - tau.dim
        for k in range(X.count(n)):
            sigma = CubeId(n, k)
            for positions in itertools.combinations(range(n), free):
                for values in itertools.product((0, 1), repeat=free):
                    pattern = [None] * n
                    for p, v in zip(positions, values):
                        pattern[p] = v
                    if face_at(X, sigma, pattern) == tau:
                        out.append((sigma, pattern))
    return out


@dataclass(frozen=True)
class RealizationPoint:
    """A point of the geometric realization: a carrier cube and coordinates in it."""

    carrier: CubeId
    coords: tuple = ()

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "carrier", CubeId(*self.carrier))
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.carrier.dim:
            raise DomainError(
                f"{len(coords)} coordinates for a carrier of dim {self.carrier.dim}"
            )

    @property
    def is_normal(self) -> bool:
        return all(0 < c < 1 for c in self.coords)


def support(X: PrecubicalSet, x: RealizationPoint, lowest_first: bool = False) -> RealizationPoint:
    """Normalize ``x`` onto the cube whose open cell contains it.

    Boundary coordinates are resolved one at a time, highest axis first by
    default; ``lowest_first=True`` resolves in the opposite order, which must
    give the same answer on a valid set.
    """
    if x.carrier not in X:
        raise DomainError(f"{x.carrier!r} is not a cube of this set")
    if any(not 0 <= c <= 1 for c in x.coords):
        raise DomainError(f"coordinates must lie in [0, 1], got {[str(c) for c in x.coords]}")
    carrier, coords = x.carrier, list(x.coords)
    while True:
        hits = [p for p, c in enumerate(coords) if c in (0, 1)]
        if not hits:
            return RealizationPoint(carrier, tuple(coords))
        p = hits[0] if lowest_first else hits[-1]
        carrier = X.face(carrier, PLUS if coords[p] == 1 else MINUS, p + 1)
        del coords[p]


def embed_point(pattern: Sequence[Optional[int]], coords: Iterable) -> tuple:
    """Coordinates in a coface: pinned entries from ``pattern``, free ones from ``coords``."""
    it = iter(coords)
    return tuple(Fraction(next(it)) if v is None else Fraction(v) for v in pattern)
