"""Real forms: Kac diagrams, the name catalog, outer reduction and H^1 counts."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .dynkin import DynkinDiagram, DynkinType, automorphisms, build_diagram, extend
from .errors import (CatalogError, InvalidSpecError, InvalidTypeError, KacValidationError,
                     NotAvailableError)
from .puzzle import DEFAULT_CAP, PuzzleInstance, enumerate_orbits


def _ceil_half(x: int) -> int:
    return -(-x // 2)


@dataclass(frozen=True)
class KacDiagram:
    dtype: DynkinType
    nu: tuple[int, ...]  # nu[0] is the extended vertex

    @property
    def black(self) -> list[int]:
        return [j for j, v in enumerate(self.nu) if v]

    @property
    def kind(self) -> str:
        return "II" if self.nu[0] else "I"


@dataclass(frozen=True)
class KacCheck:
    """Outcome of ``validate_kac``; truthy when the diagram is valid."""

    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_kac(k: KacDiagram) -> KacCheck:
    marks = extend(k.dtype).marks
    if len(k.nu) != len(marks):
        return KacCheck(False, (f"{k.dtype}: expected {len(marks)} Kac labels, got {len(k.nu)}",))
    problems = []
    if any(v not in (0, 1) for v in k.nu):
        problems.append("Kac labels must be 0 or 1")
    total = sum(m * v for m, v in zip(marks, k.nu))
    if total != 2:
        problems.append(f"{k.dtype}: weighted sum of black vertices is {total}, not 2")
    black = k.black
    if not ((len(black) == 1 and black[0] != 0) or (len(black) == 2 and black[0] == 0)):
        problems.append(f"{k.dtype}: black vertices {black} fit neither Kac shape")
    return KacCheck(not problems, tuple(problems))


def kac_to_twisting(k: KacDiagram) -> tuple[DynkinDiagram, tuple[int, ...]]:
    """Drop vertex 0: the diagram and its coloring."""
    check = validate_kac(k)
    if not check:
        raise KacValidationError("; ".join(check.problems))
    return build_diagram(k.dtype), tuple(k.nu[1:])


def kac_for_vertex(t: DynkinType, i: int) -> KacDiagram:
    """The Kac diagram whose only black vertex off alpha_0 is i."""
    marks = extend(t).marks
    nu = [0] * (t.rank + 1)
    nu[i] = 1
    if marks[i] == 1:
        nu[0] = 1
    k = KacDiagram(t, tuple(nu))
    check = validate_kac(k)
    if not check:
        raise KacValidationError("; ".join(check.problems))
    return k


@dataclass(frozen=True)
class RealFormSpec:
    dtype: DynkinType
    coloring: tuple[int, ...]
    tau: tuple[int, ...] | None = None
    name: str | None = None
    kac: KacDiagram | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.dtype.rank
        if len(self.coloring) != n or any(c not in (0, 1) for c in self.coloring):
            raise InvalidSpecError(f"coloring must be {n} bits, got {self.coloring}")
        if self.tau is not None:
            if tuple(range(1, n + 1)) == self.tau:
                object.__setattr__(self, "tau", None)
            elif self.tau not in {a.perm for a in automorphisms(build_diagram(self.dtype))}:
                raise InvalidSpecError(f"{self.tau} is not an involutive diagram automorphism of {self.dtype}")
        fixed = set(self.fixed_vertices)
        stray = [i for i in range(1, n + 1) if self.coloring[i - 1] and i not in fixed]
        if stray:
            raise InvalidSpecError(f"coloring is nonzero off the tau-fixed vertices: {stray}")
        if self.kac is not None and kac_to_twisting(self.kac)[1] != self.coloring:
            raise InvalidSpecError("Kac diagram disagrees with the coloring")

    @property
    def is_inner(self) -> bool:
        return self.tau is None

    @property
    def fixed_vertices(self) -> list[int]:
        n = self.dtype.rank
        if self.tau is None:
            return list(range(1, n + 1))
        return [i for i in range(1, n + 1) if self.tau[i - 1] == i]

    @property
    def black(self) -> list[int]:
        return [i + 1 for i, c in enumerate(self.coloring) if c]

    @property
    def label(self) -> str:
        b = ",".join(map(str, self.black)) or "0"
        return f"{self.dtype}^({b})" if self.is_inner else f"{self.dtype}^(tau,{b})"

    def to_json(self) -> dict:
        return {
            "type": str(self.dtype),
            "name": self.name,
            "label": self.label,
            "coloring": list(self.coloring),
            "tau": list(self.tau) if self.tau else None,
            "kac": list(self.kac.nu) if self.kac else None,
        }


def inner_form(t: DynkinType, black: Sequence[int] = (), name: str | None = None) -> RealFormSpec:
    n = t.rank
    for i in black:
        if not 1 <= i <= n:
            raise CatalogError(f"vertex {i} is not in {t}")
    coloring = tuple(int(i in black) for i in range(1, n + 1))
    kac = None
    if len(black) == 1:
        try:
            kac = kac_for_vertex(t, black[0])
        except KacValidationError:
            kac = None
    return RealFormSpec(t, coloring, None, name, kac)


def standard_tau(t: DynkinType) -> tuple[int, ...]:
    n = t.rank
    if t.series == "A":
        return tuple(range(n, 0, -1))
    if t.series == "D":
        return tuple(range(1, n - 1)) + (n, n - 1)
    if (t.series, n) == ("E", 6):
        return (5, 4, 3, 2, 1, 6)
    raise CatalogError(f"{t} has no outer forms")


def outer_form(t: DynkinType, black: Sequence[int] = (), name: str | None = None) -> RealFormSpec:
    coloring = tuple(int(i in black) for i in range(1, t.rank + 1))
    return RealFormSpec(t, coloring, standard_tau(t), name)


EXCEPTIONAL_NAMES = {
    "EI": ("E6", "outer", (6,)),
    "EII": ("E6", "inner", (2,)),
    "EIII": ("E6", "inner", (1,)),
    "EIV": ("E6", "outer", ()),
    "EV": ("E7", "inner", (7,)),
    "EVI": ("E7", "inner", (2,)),
    "EVII": ("E7", "inner", (1,)),
    "EVIII": ("E8", "inner", (7,)),
    "EIX": ("E8", "inner", (1,)),
    "FI": ("F4", "inner", (4,)),
    "FII": ("F4", "inner", (1,)),
    "G2SPLIT": ("G2", "inner", (2,)),
    "G2COMPACT": ("G2", "inner", ()),
}

_INT = r"\s*(\d+)\s*"


def _type(series: str, rank: int) -> DynkinType:
    try:
        return DynkinType(series, rank)
    except InvalidTypeError as e:
        raise CatalogError(str(e)) from None


def _su(p: int, q: int, name: str) -> RealFormSpec:
    t = _type("A", p + q - 1)
    m = min(p, q)
    return inner_form(t, (m,) if m else (), name)


def _spin(p: int, q: int, name: str) -> RealFormSpec:
    total = p + q
    if total % 2:
        even = p if p % 2 == 0 else q
        n = (total - 1) // 2
        return inner_form(_type("B", n), (even // 2,) if even else (), name)
    n = total // 2
    t = _type("D", n)
    if p % 2 == 0:
        m = min(p, q) // 2
        return inner_form(t, (m,) if m else (), name)
    m = (min(p, q) - 1) // 2
    return outer_form(t, (m,) if m else (), name)


def _sp(p: int, q: int, name: str) -> RealFormSpec:
    m = min(p, q)
    return inner_form(_type("C", p + q), (m,) if m else (), name)


def _sl_real(n: int, name: str) -> RealFormSpec:
    if n == 2:
        return inner_form(_type("A", 1), (1,), name)
    t = _type("A", n - 1)
    return outer_form(t, (n // 2,) if (n - 1) % 2 else (), name)


def _sl_quat(n: int, name: str) -> RealFormSpec:
    if n == 1:
        return inner_form(_type("A", 1), (), name)
    return outer_form(_type("A", 2 * n - 1), (), name)


def _even(x: int) -> int:
    if x % 2:
        raise CatalogError(f"expected an even argument, got {x}")
    return x // 2


_GRAMMAR = [
    (rf"SU\({_INT}\)", lambda a, s: _su(a[0], 0, s)),
    (rf"SU\({_INT},{_INT}\)", lambda a, s: _su(a[0], a[1], s)),
    (rf"SL\({_INT},\s*R\s*\)", lambda a, s: _sl_real(a[0], s)),
    (rf"SL\({_INT},\s*H\s*\)", lambda a, s: _sl_quat(a[0], s)),
    (rf"SPIN\({_INT}\)", lambda a, s: _spin(a[0], 0, s)),
    (rf"SPIN\({_INT},{_INT}\)", lambda a, s: _spin(a[0], a[1], s)),
    (rf"(?:SPIN\*|SPINSTAR)\({_INT}\)",
     lambda a, s: inner_form(_type("D", _even(a[0])), (_even(a[0]),), s)),
    (rf"SP\({_INT}\)", lambda a, s: _sp(a[0], 0, s)),
    (rf"SP\({_INT},{_INT}\)", lambda a, s: _sp(a[0], a[1], s)),
    (rf"(?:SP\({_INT},\s*R\s*\)|SPR\({_INT}\))",
     lambda a, s: inner_form(_type("C", _even(a[0])), (_even(a[0]),), s)),
    (r"([A-G])(\d+)", lambda a, s: inner_form(_type(a[0], int(a[1])), (), s)),
    (r"([A-G])(\d+)\^\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)",
     lambda a, s: inner_form(_type(a[0], int(a[1])), tuple(int(x) for x in a[2].split(",") if int(x)), s)),
    (r"([A-G])(\d+)\^\(\s*TAU\s*,\s*(\d+)\s*\)",
     lambda a, s: outer_form(_type(a[0], int(a[1])), (int(a[2]),) if int(a[2]) else (), s)),
]


def named_form(name: str) -> RealFormSpec:
    """Parse a conventional name (``SU(2,3)``, ``Spin*(10)``, ``EVIII``, ``D5^(2)``...)."""
    key = re.sub(r"\s+", "", name).upper()
    if key == "G2":
        key = "G2COMPACT"
    if key in EXCEPTIONAL_NAMES:
        tname, kind, black = EXCEPTIONAL_NAMES[key]
        t = DynkinType.parse(tname)
        make = inner_form if kind == "inner" else outer_form
        return make(t, black, name.strip())
    for pattern, build in _GRAMMAR:
        m = re.fullmatch(pattern, key)
        if m:
            args = [int(g) if g.isdigit() else g for g in m.groups() if g is not None]
            if pattern.startswith("([A-G])"):
                args = list(m.groups())
            try:
                return build(args, name.strip())
            except InvalidSpecError as e:
                raise CatalogError(str(e)) from None
    raise CatalogError(f"unrecognized real form name {name!r}")


@dataclass(frozen=True)
class ReducedPuzzle:
    """The board on the tau-fixed vertices, with the lift back to the full diagram."""

    spec: RealFormSpec
    vertices: tuple[int, ...]
    instance: PuzzleInstance

    def lift(self, a: int) -> int:
        n, k = self.spec.dtype.rank, len(self.vertices)
        out = 0
        for j, v in enumerate(self.vertices):
            if (a >> (k - 1 - j)) & 1:
                out |= 1 << (n - v)
        return out

    def restrict(self, a: int) -> int:
        n = self.spec.dtype.rank
        out = 0
        for v in self.vertices:
            out = (out << 1) | ((a >> (n - v)) & 1)
        return out


def reduce_outer(spec: RealFormSpec) -> ReducedPuzzle:
    """Restrict to the tau-fixed vertices; inner forms come back unchanged."""
    d = build_diagram(spec.dtype)
    verts = tuple(spec.fixed_vertices)
    sub = [[d.entry(i, k) for k in verts] for i in verts]
    inst = PuzzleInstance.from_cartan(sub, [spec.coloring[v - 1] for v in verts], [str(v) for v in verts])
    return ReducedPuzzle(spec, verts, inst)


def h1_decomposition(spec: RealFormSpec, cap: int = DEFAULT_CAP):
    red = reduce_outer(spec)
    return red, enumerate_orbits(red.instance, cap)


def h1_cardinality(spec: RealFormSpec, cap: int = DEFAULT_CAP) -> int:
    return len(h1_decomposition(spec, cap)[1])


def h1_representatives(spec: RealFormSpec, cap: int = DEFAULT_CAP) -> list[int]:
    red, dec = h1_decomposition(spec, cap)
    return [red.lift(r) for r in dec.reps]


_EXCEPTIONAL_COUNTS = {
    ("E", 6): {(): 3, (2,): 3, (1,): 3},
    ("E", 7): {(): 4, (7,): 2, (2,): 4, (1,): 2},
    ("E", 8): {(): 3, (7,): 3, (1,): 3},
    ("F", 4): {(): 3, (4,): 3, (1,): 3},
    ("G", 2): {(): 2, (2,): 2},
}


def _a_count(n: int, m: int) -> int:
    if m == 0:
        return _ceil_half(n) + 1
    return _ceil_half(m - 1) + 1 + _ceil_half(n - m)


def closed_form_count(spec: RealFormSpec) -> int:
    """Number of H^1 classes from the known formulas, without enumeration."""
    s, n = spec.dtype.series, spec.dtype.rank
    black = tuple(spec.black)
    if len(black) > 1:
        raise NotAvailableError(f"no closed form for {spec.label}")
    m = black[0] if black else 0
    k = n // 2
    if not spec.is_inner:
        if s == "A":
            return 1 if n % 2 == 0 or m else 2
        if s == "D":
            return _a_count(n - 2, m)
        if black in ((), (6,)):
            return 2
        raise NotAvailableError(f"no closed form for {spec.label}")
    if s == "A":
        return _a_count(n, m)
    if s == "B":
        if m == 0:
            return k + 2
        if m == n:
            return k + 2 if n % 2 == 0 else k + 1
        if n % 2 == 0:
            return k if m % 2 else k + 2
        return k + 1 if m % 2 else k + 2
    if s == "C":
        return 1 if m == n else n + 1
    if s == "D":
        if m == 0:
            return k + 3 if n % 2 == 0 else k + 2
        if m >= n - 1:
            return 2
        if n % 2:
            return k + 2
        return k + 3 if m % 2 == 0 else k
    table = _EXCEPTIONAL_COUNTS[(s, n)]
    if black not in table:
        raise NotAvailableError(f"no closed form for {spec.label}")
    return table[black]


def catalog(max_rank: int = 8) -> Iterator[RealFormSpec]:
    """Every named form up to the given rank, compact forms included."""
    for n in range(1, max_rank + 1):
        yield named_form(f"SU({n + 1})")
        for p in range(1, (n + 1) // 2 + 1):
            yield named_form(f"SU({p},{n + 1 - p})")
        if n >= 2:
            yield named_form(f"SL({n + 1},R)")
        if n >= 3 and n % 2:
            yield named_form(f"SL({(n + 1) // 2},H)")
    for n in range(2, max_rank + 1):
        yield named_form(f"Spin({2 * n + 1})")
        for m in range(1, n + 1):
            yield named_form(f"Spin({2 * m},{2 * n + 1 - 2 * m})")
    for n in range(3, max_rank + 1):
        yield named_form(f"Sp({n})")
        for p in range(1, n // 2 + 1):
            yield named_form(f"Sp({p},{n - p})")
        yield named_form(f"Sp({2 * n},R)")
    for n in range(4, max_rank + 1):
        yield named_form(f"Spin({2 * n})")
        for m in range(1, n // 2 + 1):
            yield named_form(f"Spin({2 * m},{2 * n - 2 * m})")
        yield named_form(f"Spin*({2 * n})")
        for m in range((n - 1) // 2 + 1):
            yield named_form(f"Spin({2 * m + 1},{2 * n - 2 * m - 1})")
    for t in ("E6", "E7", "E8", "F4"):
        if int(t[1]) <= max_rank:
            yield named_form(t)
    for name in EXCEPTIONAL_NAMES:
        if int(EXCEPTIONAL_NAMES[name][0][1]) <= max_rank:
            yield named_form(name)
