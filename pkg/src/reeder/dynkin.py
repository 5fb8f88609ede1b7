"""Dynkin diagrams, Cartan matrices and extended diagrams.

Vertices are numbered 1..n following the drawings used throughout this
package (A: path; B: n-1 => n with n short; C: n-1 <= n with n long;
D: branch at n-2; E_r: path 1..r-1 with r attached to 3, 4 or 5 for
r = 6, 7, 8; F4: 1-2 <= 3-4; G2: 1 <= 2 with 2 long).  The extended vertex
is 0.  ``cartan[i][k]`` is the pairing <alpha_i, alpha_k^vee> (0-based).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidTypeError, UnsupportedSubsetError

MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


@dataclass(frozen=True, order=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidTypeError(f"rank must be an int, got {self.rank!r}")
        s = self.series
        if s in MIN_RANK:
            if self.rank < MIN_RANK[s]:
                raise InvalidTypeError(f"{s}{self.rank}: rank must be >= {MIN_RANK[s]}")
        elif (s, self.rank) not in EXCEPTIONAL:
            raise InvalidTypeError(f"unknown Dynkin type {s}{self.rank}")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidTypeError(f"cannot parse Dynkin type {text!r}")
        return cls(text[0].upper(), int(text[1:]))


def _edges(t: DynkinType) -> list[tuple[int, int, int]]:
    """Edges as (long_end, short_end, multiplicity), 1-based."""
    s, n = t.series, t.rank
    if s == "A":
        return [(i, i + 1, 1) for i in range(1, n)]
    if s == "B":
        return [(i, i + 1, 1) for i in range(1, n - 1)] + [(n - 1, n, 2)]
    if s == "C":
        return [(i, i + 1, 1) for i in range(1, n - 1)] + [(n, n - 1, 2)]
    if s == "D":
        return [(i, i + 1, 1) for i in range(1, n - 2)] + [(n - 2, n - 1, 1), (n - 2, n, 1)]
    if s == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        return [(i, i + 1, 1) for i in range(1, n - 1)] + [(branch, n, 1)]
    if s == "F":
        return [(1, 2, 1), (3, 2, 2), (3, 4, 1)]
    return [(2, 1, 3)]


# Attachment of the extended vertex: (vertex, <alpha_0, alpha_k^vee>, <alpha_k, alpha_0^vee>).
def _vertex0(t: DynkinType) -> list[tuple[int, int, int]]:
    s, n = t.series, t.rank
    if s == "A":
        return [(1, -2, -2)] if n == 1 else [(1, -1, -1), (n, -1, -1)]
    if s == "B":
        return [(2, -2, -1)] if n == 2 else [(2, -1, -1)]
    if s == "C":
        return [(1, -2, -1)]
    if s == "D":
        return [(2, -1, -1)]
    if s == "E":
        return [({6: 6, 7: 6, 8: 1}[n], -1, -1)]
    if s == "F":
        return [(4, -1, -1)]
    return [(2, -1, -1)]


# Relabelling from the numbering used here to Bourbaki's.
def bourbaki_map(t: DynkinType) -> dict[int, int]:
    n = t.rank
    table = {
        ("E", 6): {1: 1, 2: 3, 3: 4, 4: 5, 5: 6, 6: 2},
        ("E", 7): {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 1, 7: 2},
        ("E", 8): {1: 8, 2: 7, 3: 6, 4: 5, 5: 4, 6: 3, 7: 1, 8: 2},
        ("F", 4): {1: 4, 2: 3, 3: 2, 4: 1},
    }
    return dict(table.get((t.series, n), {i: i for i in range(1, n + 1)}))


@dataclass(frozen=True)
class DynkinDiagram:
    dtype: DynkinType
    cartan: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.cartan)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def entry(self, i: int, k: int) -> int:
        return self.cartan[i - 1][k - 1]

    def neighbors(self, i: int) -> list[int]:
        return [k for k in self.vertices if k != i and self.entry(i, k) != 0]

    def is_short(self, i: int) -> bool:
        """True when some neighbour is strictly longer than vertex i."""
        return any(self.entry(k, i) < -1 for k in self.neighbors(i))

    def to_json(self) -> dict:
        return {
            "series": self.dtype.series,
            "rank": self.dtype.rank,
            "cartan": [list(r) for r in self.cartan],
        }


@lru_cache(maxsize=None)
def build_diagram(t: DynkinType) -> DynkinDiagram:
    n = t.rank
    c = [[2 if i == k else 0 for k in range(n)] for i in range(n)]
    for long_end, short_end, mult in _edges(t):
        c[long_end - 1][short_end - 1] = -mult
        c[short_end - 1][long_end - 1] = -1
    return DynkinDiagram(t, tuple(map(tuple, c)))


def diagram(series: str, rank: int) -> DynkinDiagram:
    return build_diagram(DynkinType(series, rank))


def _nullspace(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Basis of the right null space over Q."""
    m = [[Fraction(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def _primitive_positive(v: list[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise ValueError("null vector is not strictly positive")
    return tuple(ints)


@dataclass(frozen=True)
class ExtendedDiagram:
    """Extended diagram; index 0 of ``cartan`` and of the marks is alpha_0."""

    base: DynkinDiagram
    cartan: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    def entry(self, i: int, k: int) -> int:
        return self.cartan[i][k]

    def attached_to_zero(self) -> list[int]:
        return [k for k in range(1, self.n + 1) if self.cartan[0][k] != 0]

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "cartan": [list(r) for r in self.cartan],
            "marks": list(self.marks),
            "comarks": list(self.comarks),
        }


def extend(d: DynkinType | DynkinDiagram) -> ExtendedDiagram:
    return _extend(d.dtype if isinstance(d, DynkinDiagram) else d)


@lru_cache(maxsize=None)
def _extend(t: DynkinType) -> ExtendedDiagram:
    base = build_diagram(t)
    n = base.n
    c = [[0] * (n + 1) for _ in range(n + 1)]
    c[0][0] = 2
    for i in range(n):
        for k in range(n):
            c[i + 1][k + 1] = base.cartan[i][k]
    for k, row, col in _vertex0(t):
        c[0][k] = row
        c[k][0] = col
    transpose = [list(r) for r in zip(*c)]
    left = _nullspace(transpose)
    right = _nullspace(c)
    if len(left) != 1 or len(right) != 1:
        raise ValueError(f"extended {t} has a null space of the wrong dimension")
    marks = _primitive_positive(left[0])
    comarks = _primitive_positive(right[0])
    if marks[0] != 1 or comarks[0] != 1:
        raise ValueError(f"extended {t}: alpha_0 must carry mark 1")
    return ExtendedDiagram(base, tuple(map(tuple, c)), marks, comarks)


@dataclass(frozen=True)
class DiagramAutomorphism:
    perm: tuple[int, ...]  # perm[i-1] is the image of vertex i

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    @property
    def is_identity(self) -> bool:
        return all(p == i + 1 for i, p in enumerate(self.perm))

    def fixed_vertices(self) -> list[int]:
        return [i + 1 for i, p in enumerate(self.perm) if p == i + 1]

    def orbits(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, len(self.perm) + 1):
            if i not in seen:
                orb = tuple(sorted({i, self(i)}))
                seen.update(orb)
                out.append(orb)
        return out


def _isomorphisms(src: Sequence[Sequence[int]], dst: Sequence[Sequence[int]],
                  dst_order: Sequence[int] | None = None):
    """Yield maps phi (src index -> dst index) with src[a][b] == dst[phi a][phi b].

    Candidates are tried in ``dst_order`` so the first hit is the
    lexicographically smallest in that order.
    """
    k = len(src)
    if len(dst) != k:
        return
    order = list(dst_order) if dst_order is not None else list(range(k))
    phi = [-1] * k
    used = [False] * k

    def extend_at(a):
        if a == k:
            yield tuple(phi)
            return
        for d in order:
            if used[d]:
                continue
            if any(src[a][b] != dst[d][phi[b]] or src[b][a] != dst[phi[b]][d] for b in range(a)):
                continue
            phi[a] = d
            used[d] = True
            yield from extend_at(a + 1)
            used[d] = False
        phi[a] = -1

    yield from extend_at(0)


def automorphisms(d: DynkinDiagram) -> list[DiagramAutomorphism]:
    """Involutive Cartan-preserving permutations, identity first."""
    out = []
    for phi in _isomorphisms(d.cartan, d.cartan):
        if all(phi[phi[i]] == i for i in range(d.n)):
            out.append(DiagramAutomorphism(tuple(p + 1 for p in phi)))
    out.sort(key=lambda a: (not a.is_identity, a.perm))
    return out


def _candidate_types(k: int) -> Iterable[DynkinType]:
    for s in "ABCDEFG":
        try:
            yield DynkinType(s, k)
        except InvalidTypeError:
            continue


@dataclass(frozen=True)
class Component:
    dtype: DynkinType
    vertices: tuple[int, ...]  # vertices[j] is the ambient vertex playing canonical vertex j+1

    @property
    def diagram(self) -> DynkinDiagram:
        return build_diagram(self.dtype)


@dataclass(frozen=True)
class Subdiagram:
    ambient: DynkinType
    keep: tuple[int, ...]
    extended: bool
    components: tuple[Component, ...] = field(default_factory=tuple)

    @property
    def order(self) -> tuple[int, ...]:
        """Ambient vertices in subdiagram order (components concatenated)."""
        return tuple(v for c in self.components for v in c.vertices)

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "keep": list(self.keep),
            "extended": self.extended,
            "components": [{"type": str(c.dtype), "vertices": list(c.vertices)}
                           for c in self.components],
        }


def _connected_components(cartan, verts) -> list[list[int]]:
    remaining = set(verts)
    comps = []
    for v in sorted(verts):
        if v not in remaining:
            continue
        stack, comp = [v], []
        remaining.discard(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in list(remaining):
                if cartan[x][y] != 0:
                    remaining.discard(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def classify(cartan: Sequence[Sequence[int]], verts: Sequence[int]) -> Component:
    """Identify a connected finite-type block, mapping canonical vertices to ``verts``."""
    sub = [[cartan[a][b] for b in verts] for a in verts]
    for t in _candidate_types(len(verts)):
        phi = next(_isomorphisms(build_diagram(t).cartan, sub), None)
        if phi is not None:
            return Component(t, tuple(verts[p] for p in phi))
    names = ", ".join(map(str, verts))
    raise UnsupportedSubsetError(f"vertices {{{names}}} do not form a finite-type diagram")


def subdiagram(d: DynkinType | DynkinDiagram | ExtendedDiagram, keep: Iterable[int],
               extended: bool = False) -> Subdiagram:
    """Split the induced diagram on ``keep`` into classified components.

    Vertex 0 is allowed when ``extended`` is set or ``d`` is an extended diagram.
    """
    if isinstance(d, ExtendedDiagram):
        t, extended = d.base.dtype, True
    else:
        t = d.dtype if isinstance(d, DynkinDiagram) else d
    keep = tuple(sorted(set(keep)))
    if not keep:
        raise UnsupportedSubsetError("empty vertex subset")
    lo = 0 if extended else 1
    bad = [v for v in keep if not lo <= v <= t.rank]
    if bad:
        raise UnsupportedSubsetError(f"vertices {bad} not in the {'extended ' if extended else ''}diagram of {t}")
    cartan = extend(t).cartan if extended else ((0,) * (t.rank + 1),) + tuple((0,) + r for r in build_diagram(t).cartan)
    comps = tuple(classify(cartan, c) for c in _connected_components(cartan, keep))
    return Subdiagram(t, keep, extended, comps)


def dump(obj) -> str:
    """Deterministic JSON encoding (sorted keys)."""
    return json.dumps(obj.to_json() if hasattr(obj, "to_json") else obj, sort_keys=True, indent=2)
