"""Connected components of real points of G/H for equal-rank subgroups H.

The subgroup's labelings are enumerated up to its own moves, pushed into
the ambient group mod 2, and those landing in the ambient zero class are
counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .dynkin import DynkinType, Subdiagram, build_diagram, extend
from .errors import UnsupportedFormError, UnsupportedIsogenyError
from .forms import RealFormSpec, inner_form
from .lattice import EmbeddingMap, SubgroupSpec, coloring_on, embedding_for
from .puzzle import (DEFAULT_CAP, OrbitDecomposition, PuzzleInstance, enumerate_orbits,
                     product_decomposition, to_string)


@dataclass(frozen=True)
class Pi0Result:
    count: int
    xi: tuple[str, ...]            # one representative per subgroup class
    xi0: tuple[str, ...]           # those landing in the ambient zero class
    pi1_order: int | None
    ambient_class_count: int
    subgroup_class_count: int
    components: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "pi1_order": self.pi1_order,
            "xi": list(self.xi),
            "xi0": list(self.xi0),
            "ambient_class_count": self.ambient_class_count,
            "subgroup_class_count": self.subgroup_class_count,
            "components": list(self.components),
        }


@dataclass(frozen=True)
class SubgroupPuzzle:
    sub: Subdiagram
    parts: tuple[PuzzleInstance, ...]
    embedding: EmbeddingMap

    def decompose(self, cap: int = DEFAULT_CAP) -> OrbitDecomposition:
        return product_decomposition([enumerate_orbits(p, cap) for p in self.parts])


def subgroup_puzzle(spec: SubgroupSpec) -> SubgroupPuzzle:
    ambient = spec.ambient
    if not ambient.is_inner:
        raise UnsupportedFormError("subgroup counts need an inner ambient form; "
                                   "use reduced_pi0 or pi0_with_custom_embedding")
    sub = spec.subdiagram
    emb = embedding_for(sub)
    if emb.pi1_order % 2 == 0:
        raise UnsupportedIsogenyError(
            f"fundamental group of order {emb.pi1_order} is even; the count is not determined by this method")
    cartan = extend(ambient.dtype).cartan
    parts = []
    for comp in sub.components:
        block = [[cartan[a][b] for b in comp.vertices] for a in comp.vertices]
        colors = coloring_on(ambient.dtype, ambient.coloring, comp.vertices)
        parts.append(PuzzleInstance.from_cartan(block, colors, [str(v) for v in comp.vertices]))
    return SubgroupPuzzle(sub, tuple(parts), emb)


def _count(dec: OrbitDecomposition, iota: Callable[[int], int], ambient_dec: OrbitDecomposition,
           pi1: int | None, components=()) -> Pi0Result:
    zero = ambient_dec.zero_class
    hits = [r for r in dec.reps if ambient_dec.class_id(iota(r)) == zero]
    return Pi0Result(len(hits), tuple(to_string(r, dec.n) for r in dec.reps),
                     tuple(to_string(r, dec.n) for r in hits), pi1, len(ambient_dec), len(dec),
                     tuple(components))


def pi0_count(ambient: RealFormSpec, keep: Iterable[int] | None = None, remove: Iterable[int] | None = None,
              extended: bool = False, cap: int = DEFAULT_CAP) -> Pi0Result:
    """Components of the real points of G/H, H given by kept (or removed) vertices."""
    if (keep is None) == (remove is None):
        raise ValueError("give exactly one of keep or remove")
    if keep is None:
        lo = 0 if extended else 1
        gone = set(remove)
        keep = [v for v in range(lo, ambient.dtype.rank + 1) if v not in gone]
    sp = subgroup_puzzle(SubgroupSpec(ambient, tuple(keep), extended))
    amb = enumerate_orbits(PuzzleInstance.from_diagram(build_diagram(ambient.dtype), ambient.coloring), cap)
    comps = tuple(f"{c.dtype}:{','.join(map(str, c.vertices))}" for c in sp.sub.components)
    return _count(sp.decompose(cap), sp.embedding, amb, sp.embedding.pi1_order, comps)


def pi0_with_custom_embedding(sub_parts: Sequence[PuzzleInstance] | PuzzleInstance,
                              iota: Callable[[int], int] | EmbeddingMap,
                              ambient: PuzzleInstance, cap: int = DEFAULT_CAP) -> Pi0Result:
    """Count with a caller-supplied mod-2 map; the caller vouches for odd pi_1."""
    if isinstance(sub_parts, PuzzleInstance):
        sub_parts = [sub_parts]
    dec = product_decomposition([enumerate_orbits(p, cap) for p in sub_parts])
    pi1 = None
    if isinstance(iota, EmbeddingMap):
        if (iota.n_sub, iota.n_ambient) != (dec.n, ambient.n):
            raise ValueError(f"embedding is {iota.n_ambient}x{iota.n_sub}, boards need {ambient.n}x{dec.n}")
        pi1 = iota.pi1_order
    return _count(dec, iota, enumerate_orbits(ambient, cap), pi1)


def _a_board(n: int, black: Sequence[int] = ()) -> PuzzleInstance:
    t = DynkinType("A", n)
    return PuzzleInstance.from_diagram(build_diagram(t), inner_form(t, tuple(black)).coloring)


def spin_odd_odd_pi0(m: int, n: int, k: int, cap: int = DEFAULT_CAP) -> Pi0Result:
    """Spin(2m+1, 2n+1) / Spin(2m+1, 2(n-k)+1) x Spin(2k), via the reduced boards.

    Ambient: A_{m+n-1} twisted at m.  Subgroup: A_{m+n-k-1} twisted at m on
    the leading vertices, then an untwisted A_{k-1} on the trailing ones;
    the map is coordinate inclusion with the vertex between them left at 0.
    """
    if not (m >= 1 and 2 <= k < n):
        raise ValueError("need m >= 1 and 2 <= k < n")
    left_n, right_n = m + n - k - 1, k - 1
    parts = [_a_board(left_n, (m,)), _a_board(right_n)]

    def iota(x: int) -> int:
        left = x >> right_n
        right = x & ((1 << right_n) - 1)
        return (left << (right_n + 1)) | right

    return pi0_with_custom_embedding(parts, iota, _a_board(m + n - 1, (m,)), cap)


RECIPES = {"spin(odd,odd)": spin_odd_odd_pi0}


def reduced_pi0(family: str, cap: int = DEFAULT_CAP, **params) -> Pi0Result:
    """Outer ambient forms with a built-in reduction recipe."""
    recipe = RECIPES.get(family.replace(" ", "").lower())
    if recipe is None:
        raise UnsupportedFormError(f"no reduction recipe for {family!r}; "
                                   "build the boards and use pi0_with_custom_embedding")
    return recipe(cap=cap, **params)
