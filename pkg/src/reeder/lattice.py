"""Coroot lattices of subsystems, Smith normal form and the mod-2 embedding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dynkin import DynkinType, Subdiagram, extend, subdiagram
from .errors import UnsupportedFormError, UnsupportedSubsetError
from .forms import RealFormSpec

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


@dataclass(frozen=True)
class SmithForm:
    """U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def invariant_factors(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]


def smith_decomposition(m: Sequence[Sequence[int]]) -> SmithForm:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, r)) for r in m]
    u, v = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):  # row dst += f * row src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    add_row(t, i, -q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                if q:
                    add_col(t, j, -q)
                if a[t][j]:
                    done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithForm(u, a, v)


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix."""
    return tuple(smith_decomposition(m).invariant_factors)


def coroot_matrix(t: DynkinType, order: Sequence[int]) -> Matrix:
    """Columns are the coroots of ``order`` in the simple-coroot basis.

    Vertex 0 contributes -(sum of comarks * simple coroots).
    """
    n = t.rank
    comarks = extend(t).comarks
    cols = []
    for v in order:
        if v == 0:
            cols.append([-comarks[k] for k in range(1, n + 1)])
        else:
            cols.append([int(k == v) for k in range(1, n + 1)])
    return [[c[r] for c in cols] for r in range(n)]


def torsion_order(matrix: Sequence[Sequence[int]]) -> int:
    """Product of the invariant factors; the columns must be independent."""
    factors = smith_normal_form(matrix)
    cols = len(matrix[0]) if matrix else 0
    if len(factors) < cols or any(f == 0 for f in factors):
        raise UnsupportedSubsetError("coroots of the subset are linearly dependent")
    order = 1
    for f in factors:
        order *= f
    return order


def rank_mod2(vectors: Sequence[int]) -> int:
    """GF(2) rank of bit-vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


@dataclass(frozen=True)
class EmbeddingMap:
    """Mod-2 map from subgroup labelings to ambient labelings."""

    n_sub: int
    n_ambient: int
    integer_matrix: tuple[tuple[int, ...], ...]
    pi1_order: int

    @property
    def matrix_mod2(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(x & 1 for x in r) for r in self.integer_matrix)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column j (sub vertex j+1) as an ambient labeling."""
        out = []
        for j in range(self.n_sub):
            a = 0
            for r in range(self.n_ambient):
                a = (a << 1) | (self.integer_matrix[r][j] & 1)
            out.append(a)
        return tuple(out)

    def __call__(self, x: int) -> int:
        out = 0
        for j, col in enumerate(self.columns):
            if (x >> (self.n_sub - 1 - j)) & 1:
                out ^= col
        return out

    def rank_mod2(self) -> int:
        return rank_mod2(self.columns)

    def to_json(self) -> dict:
        return {
            "matrix": [[str(x) for x in r] for r in self.integer_matrix],
            "pi1_order": self.pi1_order,
        }


@dataclass(frozen=True)
class SubgroupSpec:
    """Subgroup generated by the root subgroups of the kept vertices."""

    ambient: RealFormSpec
    keep: tuple[int, ...]
    use_extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "keep", tuple(sorted(set(self.keep))))
        if not self.keep:
            raise UnsupportedSubsetError("empty vertex subset")
        if 0 in self.keep and not self.use_extended:
            raise UnsupportedSubsetError("vertex 0 needs use_extended")

    @property
    def subdiagram(self) -> Subdiagram:
        return subdiagram(self.ambient.dtype, self.keep, self.use_extended)


def fundamental_group_order(spec: SubgroupSpec) -> int:
    """Order of pi_1 of the subgroup: torsion of the coroot cokernel."""
    sub = spec.subdiagram
    return torsion_order(coroot_matrix(sub.ambient, sub.order))


def embedding_for(sub: Subdiagram) -> EmbeddingMap:
    m = coroot_matrix(sub.ambient, sub.order)
    return EmbeddingMap(len(sub.order), sub.ambient.rank, tuple(map(tuple, m)), torsion_order(m))


def embedding_mod2(spec: SubgroupSpec) -> EmbeddingMap:
    return embedding_for(spec.subdiagram)


def coloring_on(t: DynkinType, coloring: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """Twist bits on ``order``; vertex 0 gets the mark-weighted sum mod 2."""
    marks = extend(t).marks
    t0 = sum(marks[k] * coloring[k - 1] for k in range(1, t.rank + 1)) % 2
    return tuple(t0 if v == 0 else coloring[v - 1] & 1 for v in order)


def induced_coloring(spec: SubgroupSpec) -> tuple[int, ...]:
    """Twist bits of the subgroup, in subdiagram order."""
    if not spec.ambient.is_inner:
        raise UnsupportedFormError("induced colorings need an inner ambient form")
    return coloring_on(spec.ambient.dtype, spec.ambient.coloring, spec.subdiagram.order)
