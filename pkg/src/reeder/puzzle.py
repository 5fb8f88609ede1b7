"""The labeling puzzle: moves, orbits and labeling helpers.

A labeling on ``n`` vertices is an int whose most significant of ``n`` bits is
vertex 1, so ``int("0101", 2)`` is the labeling 0101.  Vertices are numbered
1..n throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .dynkin import DynkinDiagram
from .errors import CapExceededError

DEFAULT_CAP = 24


def bit(n: int, i: int) -> int:
    """Mask of vertex i in an n-vertex labeling."""
    return 1 << (n - i)


def from_string(s: str) -> int:
    s = s.strip()
    if s and set(s) <= {"0", "1"}:
        return int(s, 2)
    if s == "":
        return 0
    raise ValueError(f"not a 0/1 labeling: {s!r}")


def to_string(a: int, n: int) -> str:
    return format(a, f"0{n}b") if n else ""


def to_bits(a: int, n: int) -> list[int]:
    return [(a >> (n - i)) & 1 for i in range(1, n + 1)]


def from_bits(bits: Sequence[int]) -> int:
    a = 0
    for b in bits:
        a = (a << 1) | (int(b) & 1)
    return a


@dataclass(frozen=True)
class PuzzleInstance:
    """A board: counted-neighbour masks, twist bits and plain adjacency."""

    n: int
    counted: tuple[int, ...]     # counted[i-1]: mask of vertices feeding move i
    twist: tuple[int, ...]       # 0/1 per vertex
    adjacency: tuple[int, ...]   # all diagram neighbours, for component counts
    names: tuple[str, ...] = ()

    @classmethod
    def from_cartan(cls, cartan: Sequence[Sequence[int]], coloring: Sequence[int] | None = None,
                    names: Sequence[str] | None = None) -> "PuzzleInstance":
        n = len(cartan)
        coloring = tuple(int(c) & 1 for c in coloring) if coloring is not None else (0,) * n
        if len(coloring) != n:
            raise ValueError(f"coloring has length {len(coloring)}, expected {n}")
        counted, adj = [], []
        for i in range(n):
            cm = am = 0
            for k in range(n):
                if k == i or cartan[i][k] == 0:
                    continue
                am |= 1 << (n - 1 - k)
                if cartan[i][k] % 2:
                    cm |= 1 << (n - 1 - k)
            counted.append(cm)
            adj.append(am)
        names = tuple(names) if names is not None else tuple(str(i) for i in range(1, n + 1))
        return cls(n, tuple(counted), coloring, tuple(adj), names)

    @classmethod
    def from_diagram(cls, d: DynkinDiagram, coloring: Sequence[int] | None = None) -> "PuzzleInstance":
        return cls.from_cartan(d.cartan, coloring)

    @property
    def black(self) -> list[int]:
        return [i + 1 for i, t in enumerate(self.twist) if t]


def counted_neighbors(d: DynkinDiagram, i: int) -> set[int]:
    """Vertices k != i with <alpha_i, alpha_k^vee> odd."""
    return {k for k in d.vertices if k != i and d.entry(i, k) % 2}


def apply_move(inst: PuzzleInstance, a: int, i: int) -> int:
    n = inst.n
    flip = (bin(a & inst.counted[i - 1]).count("1") + inst.twist[i - 1]) & 1
    return a ^ (flip << (n - i))


def is_fixed(inst: PuzzleInstance, a: int) -> bool:
    return all(apply_move(inst, a, i) == a for i in range(1, inst.n + 1))


def _check_cap(n: int, cap: int):
    if n > cap:
        raise CapExceededError(f"{n} vertices exceeds the enumeration cap of {cap}")


def orbit_of(inst: PuzzleInstance, a: int, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """Breadth-first closure of ``a`` under all moves."""
    _check_cap(inst.n, cap)
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for i in range(1, inst.n + 1):
            y = apply_move(inst, x, i)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def canonical_key(a: int, n: int) -> int:
    """Sort key of the canonical order: compare labelings from vertex n back to vertex 1.

    The least labeling of a class under this order is its representative, so
    A_4 untwisted gets 0000, 1000 and 1010.
    """
    return int(to_string(a, n)[::-1] or "0", 2)


@dataclass(frozen=True, eq=False)
class OrbitDecomposition:
    n: int
    class_of: np.ndarray          # class id for every labeling
    reps: tuple[int, ...]         # canonical (least) member, by class id
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)

    @property
    def zero_class(self) -> int:
        return int(self.class_of[0])

    def class_id(self, a: int) -> int:
        return int(self.class_of[a])

    def same_class(self, a: int, b: int) -> bool:
        return bool(self.class_of[a] == self.class_of[b])

    def members(self, cid: int) -> list[int]:
        return np.flatnonzero(self.class_of == cid).tolist()

    def rep_strings(self) -> list[str]:
        return [to_string(r, self.n) for r in self.reps]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": len(self),
            "representatives": self.rep_strings(),
            "sizes": list(self.sizes),
            "zero_class": self.zero_class,
        }


def _reversal(states: np.ndarray, n: int) -> np.ndarray:
    rev = np.zeros_like(states)
    for j in range(n):
        rev |= ((states >> j) & 1) << (n - 1 - j)
    return rev


def enumerate_orbits(inst: PuzzleInstance, cap: int = DEFAULT_CAP) -> OrbitDecomposition:
    """Partition all 2^n labelings into move classes.

    Every labeling carries the least key seen so far; keys are pushed along
    each move and shortcut by pointer jumping until nothing changes, which
    leaves each labeling holding the least key of its class.
    """
    n = inst.n
    _check_cap(n, cap)
    dt = np.int64 if n > 30 else np.int32
    states = np.arange(1 << n, dtype=dt)
    rev = _reversal(states, n)     # key <-> labeling, an involution
    key = rev.copy()
    moves = [(dt(inst.counted[i]), dt(inst.twist[i]), dt(1 << (n - 1 - i))) for i in range(n)]
    while True:
        before = key.copy()
        for mask, tw, b in moves:
            flip = (np.bitwise_count(states & mask).astype(dt) & 1) ^ tw
            np.minimum(key, key[states ^ (flip * b)], out=key)
        while True:
            jumped = key[rev[key]]
            if np.array_equal(jumped, key):
                break
            key = jumped
        if np.array_equal(key, before):
            break
    keys, class_of, sizes = np.unique(key, return_inverse=True, return_counts=True)
    return OrbitDecomposition(n, class_of.astype(np.int64), tuple(int(rev[k]) for k in keys),
                              tuple(int(s) for s in sizes))


def class_of_zero(inst: PuzzleInstance, cap: int = DEFAULT_CAP) -> frozenset[int]:
    return orbit_of(inst, 0, cap)


def product_decomposition(parts: Sequence[OrbitDecomposition]) -> OrbitDecomposition:
    """Decomposition of a disjoint union; earlier parts hold the leading vertices."""
    if not parts:
        return OrbitDecomposition(0, np.zeros(1, dtype=np.int64), (0,), (1,))
    n, class_of = parts[0].n, parts[0].class_of
    reps, sizes = list(parts[0].reps), list(parts[0].sizes)
    for p in parts[1:]:
        k = len(p)
        class_of = (class_of[:, None] * k + p.class_of[None, :]).ravel()
        reps = [(r << p.n) | s for r in reps for s in p.reps]
        sizes = [x * y for x in sizes for y in p.sizes]
        n += p.n
    order = sorted(range(len(reps)), key=lambda c: canonical_key(reps[c], n))
    renumber = np.empty(len(reps), dtype=np.int64)
    renumber[order] = np.arange(len(reps))
    return OrbitDecomposition(n, renumber[class_of], tuple(reps[c] for c in order),
                              tuple(sizes[c] for c in order))


def disjoint_union(parts: Sequence[PuzzleInstance]) -> PuzzleInstance:
    n = sum(p.n for p in parts)
    counted, twist, adj, names = [], [], [], []
    offset = 0
    for p in parts:
        shift = n - offset - p.n
        counted += [m << shift for m in p.counted]
        adj += [m << shift for m in p.adjacency]
        twist += list(p.twist)
        names += list(p.names)
        offset += p.n
    return PuzzleInstance(n, tuple(counted), tuple(twist), tuple(adj), tuple(names))


def component_count(inst: PuzzleInstance, a: int, box_at: int | Iterable[int] | None = None) -> int:
    """Connected components of the support of ``a``.

    ``box_at`` names vertices carrying a virtual always-1 neighbour (the boxed
    1 of a black vertex); those boxes join the count.
    """
    n = inst.n
    boxes = [] if box_at is None else [box_at] if isinstance(box_at, int) else list(box_at)
    support = [i for i in range(1, n + 1) if a & bit(n, i)]
    parent = {v: v for v in support}
    parent.update({("box", b): ("box", b) for b in boxes})

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for i in support:
        for k in support:
            if k > i and inst.adjacency[i - 1] & bit(n, k):
                union(i, k)
    for b in boxes:
        if a & bit(n, b):
            union(("box", b), b)
    return len({find(x) for x in parent})


def side_counts(a: int, n: int, m: int) -> tuple[int, int]:
    """(l, r): components of ``a`` on A_n strictly left and right of vertex m.

    A run touching m when a_m = 1 belongs to the boxed 1 and is not counted.
    """
    bits = to_bits(a, n)

    def runs(seq):
        return sum(1 for j, x in enumerate(seq) if x and (j == 0 or not seq[j - 1]))

    left, right = bits[: m - 1], bits[m:]
    l, r = runs(left), runs(right)
    if bits[m - 1]:
        l -= bool(left and left[-1])
        r -= bool(right and right[0])
    return l, r


def xi(length: int, r: int) -> int:
    """1010...10 with r ones then zeros, read from the left."""
    if not 0 <= r <= (length + 1) // 2:
        raise ValueError(f"xi_{r} does not fit in {length} vertices")
    bits = [1 if j % 2 == 0 and j // 2 < r else 0 for j in range(length)]
    return from_bits(bits)


def eta(length: int, r: int) -> int:
    """Mirror image of ``xi``: zeros, then r ones ending at the last vertex."""
    return from_bits(to_bits(xi(length, r), length)[::-1])


def pq(n: int, m: int, p: int, q: int) -> int:
    """The labeling (p|q) on A_n twisted at m: eta_p, then 0 at m, then xi_q."""
    left, right = m - 1, n - m
    return (eta(left, p) << (right + 1)) | xi(right, q)
