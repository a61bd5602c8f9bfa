"""Path algebras of finite acyclic quivers and their indecomposable projectives.

Conventions: paths compose like functions, so an arrow ``a: 1 -> 2`` satisfies
``a = e_2 * a * e_1`` and a product ``p * q`` is nonzero only when ``q`` ends
where ``p`` starts. Modules are right modules; ``P_v = e_v A`` has as basis the
paths ending at ``v``, and ``Hom(P_i, P_j) = e_j A e_i`` acting by left
multiplication.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter

import numpy as np

from cotstruct.linalg import Matrix, default_field, make_field


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


class Quiver:
    """A finite acyclic quiver with uniquely labelled vertices and arrows."""

    def __init__(self, vertices, arrows=()):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(
            a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2])) for a in arrows
        )
        if not self.vertices:
            raise AlgebraError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("vertex labels must be unique")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise AlgebraError("arrow labels must be unique")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise AlgebraError(f"arrow {a.label} has an unknown endpoint")
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", a.label) or a.label.startswith("e_"):
                raise AlgebraError(f"arrow label {a.label!r} is not a plain identifier")
        graph = TopologicalSorter({v: set() for v in self.vertices})
        for a in self.arrows:
            graph.add(a.target, a.source)
        try:
            graph.prepare()
        except CycleError as exc:
            raise AlgebraError(f"quiver has a directed cycle through {exc.args[1]}") from None

    def outgoing(self, v: str) -> list[Arrow]:
        return sorted((a for a in self.arrows if a.source == v), key=lambda a: a.label)

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arrows = ", ".join(f"{a.label}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}, [{arrows}])"


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple[str, ...] = ()  # in travel order

    @property
    def name(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(reversed(self.arrows))

    def __len__(self):
        return len(self.arrows)


class PathAlgebra:
    """The path algebra kQ with its path basis and multiplication table."""

    def __init__(self, quiver: Quiver, field=None):
        self.quiver = quiver
        self.field = default_field() if field is None else make_field(field)
        paths: list[Path] = []
        for v in quiver.vertices:
            queue = [Path(v, v)]
            while queue:
                p = queue.pop(0)
                paths.append(p)
                for a in quiver.outgoing(p.target):
                    queue.append(Path(p.source, a.target, p.arrows + (a.label,)))
        self.paths = tuple(paths)
        self.dim = len(paths)
        self.index = {p.name: i for i, p in enumerate(paths)}
        self._by_arrows = {(p.source, p.arrows): i for i, p in enumerate(paths)}

        # table[i][j] = index of paths[i] * paths[j], or -1
        self.table = np.full((self.dim, self.dim), -1, dtype=np.int64)
        for i, p in enumerate(paths):
            for j, q in enumerate(paths):
                if q.target == p.source:
                    self.table[i, j] = self._by_arrows[(q.source, q.arrows + p.arrows)]
        structure = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for (i, j), k in np.ndenumerate(self.table):
            if k >= 0:
                structure[i, j, k] = 1
        self.structure = structure if self.field.dtype is np.int64 else self.field.array(structure)

        self.between = {
            (v, w): [i for i, p in enumerate(paths) if p.source == v and p.target == w]
            for v in quiver.vertices
            for w in quiver.vertices
        }
        self.module_basis = {
            v: [i for i, p in enumerate(paths) if p.target == v] for v in quiver.vertices
        }

    def __eq__(self, other):
        return isinstance(other, PathAlgebra) and self.quiver == other.quiver and self.field == other.field

    def __hash__(self):
        return hash((self.quiver, self.field))

    def __repr__(self):
        return f"PathAlgebra({self.quiver!r}, {self.field!r})"

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def path(self, name: str) -> "AlgebraElement":
        if name not in self.index:
            raise AlgebraError(f"unknown path {name!r}")
        return AlgebraElement(self, {self.index[name]: 1})

    def idempotent(self, v) -> "AlgebraElement":
        return self.path(f"e_{v}")

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {self.index[f"e_{v}"]: 1 for v in self.vertices})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def element(self, text: str) -> "AlgebraElement":
        return parse_element(self, text)


class AlgebraElement:
    """A linear combination of paths; zero coefficients are never stored."""

    __slots__ = ("algebra", "coefficients")

    def __init__(self, algebra: PathAlgebra, coefficients=None):
        f = algebra.field
        coeffs = {}
        for k, c in (coefficients or {}).items():
            c = f(c)
            if c != 0:
                coeffs[int(k)] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coefficients", dict(sorted(coeffs.items())))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def from_vector(cls, algebra: PathAlgebra, vec) -> "AlgebraElement":
        return cls(algebra, {i: v for i, v in enumerate(vec) if v != 0})

    def to_vector(self) -> np.ndarray:
        out = self.algebra.field.zeros((self.algebra.dim,))
        for k, c in self.coefficients.items():
            out[k] = c
        return out

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other):
        coeffs = dict(self.coefficients)
        for k, c in other.coefficients.items():
            coeffs[k] = coeffs.get(k, 0) + c
        return AlgebraElement(self.algebra, coeffs)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -c for k, c in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return AlgebraElement(self.algebra, {k: v * c for k, v in self.coefficients.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra == other.algebra
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __repr__(self):
        return f"AlgebraElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    alg = x.algebra
    out: dict[int, object] = {}
    for i, a in x.coefficients.items():
        for j, b in y.coefficients.items():
            k = alg.table[i, j]
            if k >= 0:
                out[int(k)] = out.get(int(k), 0) + a * b
    return AlgebraElement(alg, out)


def hom_projectives(algebra: PathAlgebra, i, j) -> list[AlgebraElement]:
    """Basis of e_j A e_i = Hom(P_i, P_j): the paths from i to j."""
    return [AlgebraElement(algebra, {k: 1}) for k in algebra.between[(str(i), str(j))]]


def element_to_matrix(x: AlgebraElement, i, j) -> Matrix:
    """Matrix of a -> x*a from the path basis of P_i to that of P_j."""
    alg = x.algebra
    i, j = str(i), str(j)
    allowed = set(alg.between[(i, j)])
    if any(k not in allowed for k in x.coefficients):
        raise AlgebraError(f"{format_element(x)} is not in e_{j} A e_{i}")
    src, tgt = alg.module_basis[i], alg.module_basis[j]
    pos = {k: r for r, k in enumerate(tgt)}
    out = alg.field.zeros((len(tgt), len(src)))
    for col, b in enumerate(src):
        for k, c in x.coefficients.items():
            t = alg.table[k, b]
            if t >= 0:
                out[pos[int(t)], col] += c
    return Matrix(alg.field, alg.field.reduce(out))


_TERM = re.compile(r"^(?:(?P<coef>-?\s*[0-9]+(?:/[0-9]+)?)\s*\*\s*)?(?P<path>[A-Za-z_][A-Za-z0-9_.]*)$")


def parse_element(algebra: PathAlgebra, text: str) -> AlgebraElement:
    """Parse a formal sum such as ``"2*b.a + e_1 - a"``; ``"0"`` is zero."""
    s = str(text).strip()
    if s in ("", "0"):
        return algebra.zero()
    s = s.replace("-", "+-")
    coeffs: dict[int, object] = {}
    for raw in s.split("+"):
        term = raw.strip()
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:].strip()
        m = _TERM.match(term)
        if m is None:
            raise AlgebraError(f"cannot parse term {raw.strip()!r}")
        name = m.group("path")
        if name not in algebra.index:
            raise AlgebraError(f"unknown path {name!r}")
        coef = Fraction(m.group("coef").replace(" ", "")) if m.group("coef") else Fraction(1)
        k = algebra.index[name]
        coeffs[k] = coeffs.get(k, 0) + sign * algebra.field(coef)
    return AlgebraElement(algebra, coeffs)


def format_element(x: AlgebraElement) -> str:
    if x.is_zero():
        return "0"
    f = x.algebra.field
    parts = []
    for k, c in x.coefficients.items():
        name = x.algebra.paths[k].name
        parts.append(name if c == 1 else f"{f.format(c)}*{name}")
    return " + ".join(parts)
