"""Bounded cochain complexes of projectives and their homotopy category.

A module map between finite direct sums of indecomposable projectives is
stored as an array of shape ``(rows, cols, dim A)``: entry ``[r, c]`` is the
algebra element (in the path basis) by which summand ``c`` of the source maps
to summand ``r`` of the target.

Sign conventions:

* ``(Σ^n X)^k = X^{k+n}`` with differential ``(-1)^n d_X``;
* a chain map ``f: X -> Σ^n Y`` has components ``f^k: X^k -> Y^{k+n}`` and
  satisfies ``(-1)^n d_Y f^k = f^{k+1} d_X``;
* ``Σ^m f`` has components ``(-1)^m f^{k+m}``;
* ``cone(f: U -> V)^n = V^n ⊕ U^{n+1}`` with differential
  ``[[d_V, f], [0, -d_U]]``.

With these choices ``cone(Σf) == Σ cone(f)`` holds on the nose.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from cotstruct.algebra import AlgebraElement, PathAlgebra, element_to_matrix, parse_element
from cotstruct.linalg import echelon, kernel_array, rank_array, solve_array


class ComplexError(ValueError):
    pass


# -- block arithmetic -----------------------------------------------------------

def _compose_blocks(alg: PathAlgebra, m: np.ndarray, n: np.ndarray) -> np.ndarray:
    """(m ∘ n)[r, c] = sum_s m[r, s] * n[s, c] in the algebra."""
    rows, cols = m.shape[0], n.shape[1]
    if m.shape[1] == 0 or rows == 0 or cols == 0:
        return alg.field.zeros((rows, cols, alg.dim))
    tmp = np.tensordot(m, alg.structure, axes=([2], [0]))  # r s q t
    out = np.einsum("rsqt,scq->rct", tmp, n)
    return alg.field.reduce(out)


def _identity_blocks(alg: PathAlgebra, summands) -> np.ndarray:
    out = alg.field.zeros((len(summands), len(summands), alg.dim))
    for i, v in enumerate(summands):
        out[i, i, alg.index[f"e_{v}"]] = 1
    return out


def _allowed_mask(alg: PathAlgebra, target, source) -> np.ndarray:
    """Boolean mask (rows, cols, dim) of the path coordinates e_w A e_v."""
    mask = np.zeros((len(target), len(source), alg.dim), dtype=bool)
    for r, w in enumerate(target):
        for c, v in enumerate(source):
            mask[r, c, alg.between[(v, w)]] = True
    return mask


# -- complexes --------------------------------------------------------------------

class Complex:
    """A bounded cochain complex of finitely generated projective right modules.

    ``terms`` maps a degree to the ordered list of vertices whose projectives
    form that term; ``differentials`` maps ``n`` to the block array of
    ``d^n: X^n -> X^{n+1}``. Missing differentials are zero.
    """

    def __init__(self, algebra: PathAlgebra, terms=None, differentials=None, check=True):
        self.algebra = algebra
        alg = algebra
        self.terms: dict[int, tuple[str, ...]] = {
            int(n): tuple(str(v) for v in vs) for n, vs in sorted((terms or {}).items()) if len(vs)
        }
        for n, vs in self.terms.items():
            for v in vs:
                if v not in alg.vertices:
                    raise ComplexError(f"degree {n}: unknown vertex {v!r}")
        self.diffs: dict[int, np.ndarray] = {}
        for n, d in sorted((differentials or {}).items()):
            n = int(n)
            src, tgt = self.term(n), self.term(n + 1)
            arr = self._coerce_blocks(d, tgt, src, f"d^{n}")
            if arr.size and np.any(arr != 0):
                self.diffs[n] = arr
        if check:
            self._validate()

    def _coerce_blocks(self, d, tgt, src, where) -> np.ndarray:
        alg = self.algebra
        shape = (len(tgt), len(src), alg.dim)
        if isinstance(d, np.ndarray) and d.ndim == 3:
            if d.shape != shape:
                raise ComplexError(f"{where}: block shape {d.shape[:2]} != {shape[:2]}")
            return alg.field.reduce(np.array(d, dtype=alg.field.dtype))
        arr = alg.field.zeros(shape)
        rows = list(d)
        if len(rows) != shape[0] and not (shape[0] == 0 or shape[1] == 0):
            raise ComplexError(f"{where}: expected {shape[0]} rows, got {len(rows)}")
        for r, row in enumerate(rows[: shape[0]]):
            row = list(row)
            if len(row) != shape[1]:
                raise ComplexError(f"{where}: row {r} has {len(row)} entries, expected {shape[1]}")
            for c, entry in enumerate(row):
                if isinstance(entry, AlgebraElement):
                    elt = entry
                else:
                    try:
                        elt = parse_element(alg, entry)
                    except ValueError as exc:
                        raise ComplexError(f"{where}: entry ({r}, {c}): {exc}") from None
                arr[r, c] = elt.to_vector()
        return arr

    def _validate(self):
        alg = self.algebra
        for n, d in self.diffs.items():
            mask = _allowed_mask(alg, self.term(n + 1), self.term(n))
            bad = np.argwhere((d != 0) & ~mask)
            if len(bad):
                r, c, _ = bad[0]
                raise ComplexError(
                    f"d^{n}: entry ({r}, {c}) is not a map P_{self.term(n)[c]} -> P_{self.term(n + 1)[r]}"
                )
        for n in self.diffs:
            if n + 1 in self.diffs:
                dd = _compose_blocks(alg, self.diffs[n + 1], self.diffs[n])
                if np.any(dd != 0):
                    r, c, _ = np.argwhere(dd != 0)[0]
                    raise ComplexError(f"d^{n + 1} d^{n} != 0 at entry ({r}, {c})")

    # basic accessors
    def term(self, n: int) -> tuple[str, ...]:
        return self.terms.get(n, ())

    def d(self, n: int) -> np.ndarray:
        if n in self.diffs:
            return self.diffs[n]
        return self.algebra.field.zeros((len(self.term(n + 1)), len(self.term(n)), self.algebra.dim))

    @property
    def lo(self) -> int | None:
        return min(self.terms) if self.terms else None

    @property
    def hi(self) -> int | None:
        return max(self.terms) if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return list(self.terms)

    def rank(self) -> int:
        return sum(len(v) for v in self.terms.values())

    @cached_property
    def key(self) -> bytes:
        h = hashlib.sha256()
        h.update(repr((self.algebra.quiver, self.algebra.field, sorted(self.terms.items()))).encode())
        for n, d in sorted(self.diffs.items()):
            h.update(str(n).encode())
            h.update(repr(d.tolist()).encode())
        return h.digest()

    def __eq__(self, other):
        return isinstance(other, Complex) and self.algebra == other.algebra and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.is_zero():
            return "Complex(0)"
        parts = [f"{n}:{'+'.join('P' + v for v in vs)}" for n, vs in self.terms.items()]
        return f"Complex({', '.join(parts)})"

    def entry(self, n: int, r: int, c: int) -> AlgebraElement:
        return AlgebraElement.from_vector(self.algebra, self.d(n)[r, c])

    @classmethod
    def stalk(cls, algebra: PathAlgebra, summands, degree: int = 0) -> "Complex":
        return cls(algebra, {degree: list(summands)})

    @classmethod
    def zero(cls, algebra: PathAlgebra) -> "Complex":
        return cls(algebra)

    @cached_property
    def _suspensions(self) -> dict:
        return {}


def algebra_stalk(algebra: PathAlgebra, degree: int = 0) -> Complex:
    """The free module A = ⊕ P_v concentrated in one degree."""
    return Complex.stalk(algebra, algebra.vertices, degree)


def suspend(X: Complex, n: int = 1) -> Complex:
    if n == 0:
        return X
    memo = X._suspensions
    if n not in memo:
        sign = -1 if n % 2 else 1
        terms = {k - n: vs for k, vs in X.terms.items()}
        diffs = {k - n: X.algebra.field.reduce(sign * d) for k, d in X.diffs.items()}
        memo[n] = Complex(X.algebra, terms, diffs, check=False)
    return memo[n]


# -- chain maps ---------------------------------------------------------------------

class ChainMap:
    """A chain map ``source -> Σ^shift target`` given degree-wise."""

    def __init__(self, source: Complex, target: Complex, shift: int = 0, components=None, check=True):
        if source.algebra != target.algebra:
            raise ComplexError("chain map between complexes over different algebras")
        self.source = source
        self.target = target
        self.shift = int(shift)
        alg = source.algebra
        self.components: dict[int, np.ndarray] = {}
        for k, comp in sorted((components or {}).items()):
            k = int(k)
            shape = (len(target.term(k + self.shift)), len(source.term(k)), alg.dim)
            arr = comp if isinstance(comp, np.ndarray) else source._coerce_blocks(
                comp, target.term(k + self.shift), source.term(k), f"f^{k}")
            if arr.shape != shape:
                raise ComplexError(f"f^{k}: block shape {arr.shape[:2]} != {shape[:2]}")
            arr = alg.field.reduce(np.array(arr, dtype=alg.field.dtype))
            if arr.size and np.any(arr != 0):
                self.components[k] = arr
        if check:
            self._validate()

    @property
    def algebra(self) -> PathAlgebra:
        return self.source.algebra

    @property
    def codomain(self) -> Complex:
        return suspend(self.target, self.shift)

    def component(self, k: int) -> np.ndarray:
        if k in self.components:
            return self.components[k]
        return self.algebra.field.zeros(
            (len(self.target.term(k + self.shift)), len(self.source.term(k)), self.algebra.dim)
        )

    def is_zero_data(self) -> bool:
        return not self.components

    def _validate(self):
        alg = self.algebra
        cod = self.codomain
        for k, comp in self.components.items():
            mask = _allowed_mask(alg, cod.term(k), self.source.term(k))
            if np.any((comp != 0) & ~mask):
                raise ComplexError(f"f^{k} has an entry outside the allowed path spaces")
        degrees = set(self.components) | {k - 1 for k in self.components}
        for k in sorted(degrees):
            lhs = _compose_blocks(alg, cod.d(k), self.component(k))
            rhs = _compose_blocks(alg, self.component(k + 1), self.source.d(k))
            if np.any(lhs != rhs):
                raise ComplexError(f"not a chain map: square at degree {k} does not commute")

    def __repr__(self):
        return f"ChainMap({self.source!r} -> Σ^{self.shift} {self.target!r})"

    def as_unshifted(self) -> "ChainMap":
        return ChainMap(self.source, self.codomain, 0, self.components, check=False)

    def scale(self, c) -> "ChainMap":
        f = self.algebra.field
        return ChainMap(self.source, self.target, self.shift,
                        {k: f.reduce(v * f(c)) for k, v in self.components.items()}, check=False)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        if (self.source, self.target, self.shift) != (other.source, other.target, other.shift):
            raise ComplexError("cannot add chain maps with different source, target or shift")
        f = self.algebra.field
        keys = set(self.components) | set(other.components)
        comps = {k: f.reduce(self.component(k) + other.component(k)) for k in keys}
        return ChainMap(self.source, self.target, self.shift, comps, check=False)

    def __neg__(self) -> "ChainMap":
        return self.scale(-1)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return self + (-other)


def identity(X: Complex) -> ChainMap:
    return ChainMap(X, X, 0, {k: _identity_blocks(X.algebra, vs) for k, vs in X.terms.items()}, check=False)


def zero_map(X: Complex, Y: Complex, shift: int = 0) -> ChainMap:
    return ChainMap(X, Y, shift, {}, check=False)


def suspend_map(f: ChainMap, n: int = 1) -> ChainMap:
    """Σ^n f: Σ^n X -> Σ^shift Σ^n Y."""
    if n == 0:
        return f
    sign = -1 if n % 2 else 1
    fld = f.algebra.field
    comps = {k - n: fld.reduce(sign * v) for k, v in f.components.items()}
    return ChainMap(suspend(f.source, n), suspend(f.target, n), f.shift, comps, check=False)


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g ∘ f for f: X -> Σ^a Y and g: Y -> Σ^b Z, giving X -> Σ^{a+b} Z."""
    if g.source != f.target:
        raise ComplexError("cannot compose: target of f is not the source of g")
    a = f.shift
    sg = suspend_map(g, a)
    comps = {}
    for k in f.components:
        comps[k] = _compose_blocks(f.algebra, sg.component(k), f.components[k])
    return ChainMap(f.source, g.target, a + g.shift, comps, check=False)


def block_map(source: Complex, target: Complex, blocks, shift: int = 0) -> ChainMap:
    """Assemble a map between direct sums from a grid of maps.

    ``blocks[i][j]`` maps the j-th summand of ``source`` to the i-th summand
    of ``target``; the summand decompositions are given by the ``parts``
    attribute that :func:`direct_sum` attaches.
    """
    src_parts = source.parts
    tgt_parts = target.parts
    alg = source.algebra
    comps = {}
    degrees = set(source.terms)
    for k in degrees:
        comp = alg.field.zeros((len(target.term(k + shift)), len(source.term(k)), alg.dim))
        for i, row in enumerate(blocks):
            for j, m in enumerate(row):
                if m is None:
                    continue
                r0, r1 = tgt_parts[i].get(k + shift, (0, 0))
                c0, c1 = src_parts[j].get(k, (0, 0))
                if r1 > r0 and c1 > c0:
                    comp[r0:r1, c0:c1] = m.component(k)
        comps[k] = comp
    return ChainMap(source, target, shift, comps, check=False)


# -- direct sums and cones ------------------------------------------------------------

def direct_sum(Xs, algebra: PathAlgebra | None = None):
    """Return ``(S, injections, projections)`` for the direct sum of ``Xs``.

    ``S.parts[j][n] = (start, stop)`` locates summand ``j`` inside ``S^n``.
    """
    Xs = list(Xs)
    if not Xs:
        if algebra is None:
            raise ComplexError("direct_sum of no complexes needs an algebra")
        Z = Complex(algebra)
        Z.parts = []
        return Z, [], []
    alg = Xs[0].algebra
    if any(X.algebra != alg for X in Xs):
        raise ComplexError("direct_sum over different algebras")
    degrees = sorted(set().union(*[X.terms for X in Xs]))
    terms, parts = {}, [dict() for _ in Xs]
    for n in degrees:
        pos = 0
        summands = []
        for j, X in enumerate(Xs):
            vs = X.term(n)
            parts[j][n] = (pos, pos + len(vs))
            summands.extend(vs)
            pos += len(vs)
        terms[n] = summands
    diffs = {}
    for n in degrees:
        if n + 1 not in terms:
            continue
        d = alg.field.zeros((len(terms[n + 1]), len(terms[n]), alg.dim))
        for j, X in enumerate(Xs):
            r0, r1 = parts[j][n + 1]
            c0, c1 = parts[j][n]
            if r1 > r0 and c1 > c0:
                d[r0:r1, c0:c1] = X.d(n)
        diffs[n] = d
    S = Complex(alg, terms, diffs, check=False)
    S.parts = parts
    inj, proj = [], []
    for j, X in enumerate(Xs):
        ic, pc = {}, {}
        for n, vs in X.terms.items():
            r0, r1 = parts[j][n]
            block = alg.field.zeros((len(terms[n]), len(vs), alg.dim))
            block[r0:r1] = _identity_blocks(alg, vs)
            ic[n] = block
            pc[n] = np.ascontiguousarray(block.transpose(1, 0, 2))
        inj.append(ChainMap(X, S, 0, ic, check=False))
        proj.append(ChainMap(S, X, 0, pc, check=False))
    return S, inj, proj


@dataclass
class Triangle:
    """A triangle U -u-> V -v-> W -w-> ΣU (w is stored with shift 1)."""

    U: Complex
    V: Complex
    W: Complex
    u: ChainMap
    v: ChainMap
    w: ChainMap

    def composites(self) -> dict[str, ChainMap]:
        return {
            "v.u": compose(self.v, self.u),
            "w.v": compose(self.w, self.v),
            "Su.w": compose(self.u, self.w),
        }

    def check(self) -> dict[str, bool]:
        """Null-homotopy verdict for each of the three consecutive composites."""
        return {name: is_null_homotopic(f) is not None for name, f in self.composites().items()}


def cone(f: ChainMap) -> Triangle:
    if f.shift != 0:
        raise ComplexError("cone needs a chain map of shift 0")
    U, V = f.source, f.target
    alg = U.algebra
    degrees = sorted(set(V.terms) | {k - 1 for k in U.terms})
    terms = {n: V.term(n) + U.term(n + 1) for n in degrees}
    diffs = {}
    for n in degrees:
        if n + 1 not in terms:
            continue
        v0, v1 = len(V.term(n)), len(V.term(n + 1))
        d = alg.field.zeros((len(terms[n + 1]), len(terms[n]), alg.dim))
        d[:v1, :v0] = V.d(n)
        d[:v1, v0:] = f.component(n + 1)
        d[v1:, v0:] = alg.field.reduce(-U.d(n + 1))
        diffs[n] = d
    W = Complex(alg, terms, diffs, check=False)
    vc, wc = {}, {}
    for n in degrees:
        nv, nu = len(V.term(n)), len(U.term(n + 1))
        if nv:
            blk = alg.field.zeros((nv + nu, nv, alg.dim))
            blk[:nv] = _identity_blocks(alg, V.term(n))
            vc[n] = blk
        if nu:
            blk = alg.field.zeros((nu, nv + nu, alg.dim))
            blk[:, nv:] = _identity_blocks(alg, U.term(n + 1))
            wc[n] = blk
    v = ChainMap(V, W, 0, vc, check=False)
    w = ChainMap(W, U, 1, wc, check=False)
    return Triangle(U, V, W, f, v, w)


# -- graded-map spaces and the Hom computation -----------------------------------------

class _MapSpace:
    """Coordinates for graded maps X -> Y of degree ``deg`` (Y already suspended)."""

    def __init__(self, X: Complex, Y: Complex, deg: int):
        self.X, self.Y, self.deg = X, Y, deg
        alg = X.algebra
        self.blocks = {}  # k -> (offset, selection, shape)
        offset = 0
        for k in X.degrees():
            tgt = Y.term(k + deg)
            if not tgt:
                continue
            mask = _allowed_mask(alg, tgt, X.term(k))
            sel = np.flatnonzero(mask.reshape(-1))
            if sel.size == 0:
                continue
            self.blocks[k] = (offset, sel, mask.shape)
            offset += sel.size
        self.size = offset

    def to_vector(self, comps: dict) -> np.ndarray:
        fld = self.X.algebra.field
        vec = fld.zeros((self.size,))
        for k, (off, sel, shape) in self.blocks.items():
            if k in comps:
                vec[off : off + sel.size] = comps[k].reshape(-1)[sel]
        return vec

    def from_vector(self, vec) -> dict:
        fld = self.X.algebra.field
        comps = {}
        for k, (off, sel, shape) in self.blocks.items():
            arr = fld.zeros(int(np.prod(shape)))
            arr[sel] = vec[off : off + sel.size]
            comps[k] = arr.reshape(shape)
        return comps


def _left_operator(alg: PathAlgebra, D: np.ndarray, ncols: int) -> np.ndarray:
    """Matrix of φ -> D ∘ φ on flattened (r, c, t) coordinates, φ with ``ncols`` columns."""
    G = np.tensordot(D, alg.structure, axes=([2], [0]))  # a b q t : D[a,b,p] T[p,q,t]
    G = G.transpose(0, 3, 1, 2)  # a t b q
    eye = np.eye(ncols, dtype=G.dtype)
    full = np.einsum("atbq,cd->actbdq", G, eye)
    R2, dim, R = G.shape[0], G.shape[1], G.shape[2]
    return full.reshape(R2 * ncols * dim, R * ncols * dim)


def _right_operator(alg: PathAlgebra, E: np.ndarray, nrows: int) -> np.ndarray:
    """Matrix of φ -> φ ∘ E on flattened coordinates, φ with ``nrows`` rows."""
    # (φE)[r,c,t] = sum φ[r,c',q] E[c',c,p] T[q,p,t]
    H = np.tensordot(E, alg.structure, axes=([2], [1]))  # c' c q t
    H = H.transpose(1, 3, 0, 2)  # c t c' q
    eye = np.eye(nrows, dtype=H.dtype)
    full = np.einsum("ab,ctdq->actbdq", eye, H)
    C, dim, C2 = H.shape[0], H.shape[1], H.shape[2]
    return full.reshape(nrows * C * dim, nrows * C2 * dim)


def _delta(src: _MapSpace, tgt: _MapSpace) -> np.ndarray:
    """Matrix of φ -> d_Y φ - (-1)^deg φ d_X from ``src`` (deg) to ``tgt`` (deg + 1)."""
    X, Y, deg = src.X, src.Y, src.deg
    alg = X.algebra
    fld = alg.field
    out = fld.zeros((tgt.size, src.size))
    if out.size == 0:
        return out
    sign = -1 if deg % 2 == 0 else 1
    for k, (toff, tsel, tshape) in tgt.blocks.items():
        # d_Y^{k+deg} ∘ φ^k
        if k in src.blocks and (k + deg) in Y.diffs:
            soff, ssel, sshape = src.blocks[k]
            op = _left_operator(alg, Y.diffs[k + deg], sshape[1])
            out[toff : toff + tsel.size, soff : soff + ssel.size] += op[np.ix_(tsel, ssel)]
        # φ^{k+1} ∘ d_X^k
        if (k + 1) in src.blocks and k in X.diffs:
            soff, ssel, sshape = src.blocks[k + 1]
            op = _right_operator(alg, X.diffs[k], sshape[0])
            out[toff : toff + tsel.size, soff : soff + ssel.size] += sign * op[np.ix_(tsel, ssel)]
    return fld.reduce(out)


class HomSpaceBasis:
    """Hom_K(X, Σ^shift Y): chain maps modulo null-homotopic maps.

    Dimensions are computed eagerly from two ranks; a basis of classes and the
    coordinate map are built on first use.
    """

    def __init__(self, X: Complex, Y: Complex, shift: int = 0):
        if X.algebra != Y.algebra:
            raise ComplexError("hom_space between complexes over different algebras")
        self.source, self.target, self.shift = X, Y, int(shift)
        self.field = X.algebra.field
        Ys = suspend(Y, self.shift)
        self._spaces = {deg: _MapSpace(X, Ys, deg) for deg in (-1, 0, 1)}
        self._cycle_op = _delta(self._spaces[0], self._spaces[1])
        self._boundary_op = _delta(self._spaces[-1], self._spaces[0])
        n0 = self._spaces[0].size
        self.ambient_dimension = n0 - rank_array(self.field, self._cycle_op)
        self.boundary_dimension = rank_array(self.field, self._boundary_op)

    @property
    def dimension(self) -> int:
        return self.ambient_dimension - self.boundary_dimension

    def __len__(self):
        return self.dimension

    def __repr__(self):
        return (f"HomSpaceBasis({self.source!r} -> Σ^{self.shift} {self.target!r}, "
                f"dim={self.dimension})")

    @cached_property
    def _boundary_basis(self) -> np.ndarray:
        _, piv = echelon(self.field, self._boundary_op, reduced=False)
        return self._boundary_op[:, piv]

    @cached_property
    def _rep_vectors(self) -> np.ndarray:
        if self.dimension == 0:
            return self.field.zeros((self._spaces[0].size, 0))
        cycles = kernel_array(self.field, self._cycle_op)
        bnd = self._boundary_basis
        both = np.concatenate([bnd, cycles], axis=1)
        _, piv = echelon(self.field, both, reduced=False)
        chosen = [j - bnd.shape[1] for j in piv if j >= bnd.shape[1]]
        return cycles[:, chosen]

    @cached_property
    def representatives(self) -> list[ChainMap]:
        space = self._spaces[0]
        return [
            ChainMap(self.source, self.target, self.shift, space.from_vector(self._rep_vectors[:, j]), check=False)
            for j in range(self._rep_vectors.shape[1])
        ]

    def vector(self, f: ChainMap) -> np.ndarray:
        if (f.source, f.target, f.shift) != (self.source, self.target, self.shift):
            raise ComplexError("chain map does not belong to this Hom space")
        return self._spaces[0].to_vector(f.components)

    def coordinates(self, f: ChainMap) -> np.ndarray:
        """Coordinates of the homotopy class of ``f`` in the representative basis."""
        vec = self.vector(f)
        if self.dimension == 0:
            return self.field.zeros((0,))
        bnd = self._boundary_basis
        system = np.concatenate([bnd, self._rep_vectors], axis=1)
        x = solve_array(self.field, system, vec)
        if x is None:
            raise ComplexError("not a chain map into this Hom space")
        return x[bnd.shape[1]:]


def hom_space(X: Complex, Y: Complex, shift: int = 0) -> HomSpaceBasis:
    return HomSpaceBasis(X, Y, shift)


def induced_matrix(maps: list[ChainMap], target: HomSpaceBasis) -> np.ndarray:
    """Columns = coordinates of each map's class in ``target``."""
    fld = target.field
    out = fld.zeros((target.dimension, len(maps)))
    for j, m in enumerate(maps):
        out[:, j] = target.coordinates(m)
    return out


def null_homotopy(f: ChainMap) -> dict[int, np.ndarray] | None:
    """Components h^k: X^k -> Y^{k+shift-1} with f = d h + h d, or None."""
    X = f.source
    Ys = f.codomain
    s_minus = _MapSpace(X, Ys, -1)
    s_zero = _MapSpace(X, Ys, 0)
    vec = s_zero.to_vector(f.components)
    if not np.any(vec != 0):
        return {}
    op = _delta(s_minus, s_zero)
    x = solve_array(X.algebra.field, op, vec)
    if x is None:
        return None
    h = s_minus.from_vector(x)
    if not _check_homotopy(f, h):
        raise ComplexError("internal error: homotopy witness does not re-verify")
    return h


def _check_homotopy(f: ChainMap, h: dict) -> bool:
    alg = f.algebra
    X, Ys = f.source, f.codomain
    fld = alg.field

    def hk(k):
        if k in h:
            return h[k]
        return fld.zeros((len(Ys.term(k - 1)), len(X.term(k)), alg.dim))

    for k in set(X.terms) | set(f.components):
        total = _compose_blocks(alg, Ys.d(k - 1), hk(k)) + _compose_blocks(alg, hk(k + 1), X.d(k))
        if np.any(fld.reduce(total - f.component(k)) != 0):
            return False
    return True


def is_null_homotopic(f: ChainMap) -> dict[int, np.ndarray] | None:
    """A homotopy witness when ``f`` is null-homotopic, else None."""
    return null_homotopy(f)


def homotopic(f: ChainMap, g: ChainMap) -> bool:
    return null_homotopy(f - g) is not None


def is_contractible(X: Complex) -> bool:
    return X.is_zero() or null_homotopy(identity(X)) is not None


# -- the cohomology oracle ---------------------------------------------------------------

def _expanded_basis(X: Complex, n: int, vertex: str | None):
    alg = X.algebra
    out = []
    for s, w in enumerate(X.term(n)):
        for b in alg.module_basis[w]:
            if vertex is None or alg.paths[b].source == vertex:
                out.append((s, b))
    return out


def expanded_differential(X: Complex, n: int, vertex: str | None = None) -> np.ndarray:
    """d^n as a field matrix on path bases, via left-multiplication matrices.

    With ``vertex`` given, restricted to the summand X·e_vertex.
    """
    alg = X.algebra
    src = _expanded_basis(X, n, vertex)
    tgt = _expanded_basis(X, n + 1, vertex)
    out = alg.field.zeros((len(tgt), len(src)))
    if not src or not tgt:
        return out
    full_rows, nrows = {}, 0
    for r, w in enumerate(X.term(n + 1)):
        full_rows[r] = nrows
        nrows += len(alg.module_basis[w])
    full_cols, ncols = {}, 0
    for c, v in enumerate(X.term(n)):
        full_cols[c] = ncols
        ncols += len(alg.module_basis[v])
    full = alg.field.zeros((nrows, ncols))
    for r, w in enumerate(X.term(n + 1)):
        for c, v in enumerate(X.term(n)):
            m = element_to_matrix(X.entry(n, r, c), v, w).data
            full[full_rows[r] : full_rows[r] + m.shape[0], full_cols[c] : full_cols[c] + m.shape[1]] = m
    row_idx = [full_rows[s] + alg.module_basis[X.term(n + 1)[s]].index(b) for s, b in tgt]
    col_idx = [full_cols[s] + alg.module_basis[X.term(n)[s]].index(b) for s, b in src]
    return full[np.ix_(row_idx, col_idx)]


def cohomology_dims(X: Complex, vertex=None) -> dict[int, int]:
    """Nonzero dimensions of H^n(X) (or of H^n(X e_v) when ``vertex`` is given).

    Computed on the underlying vector spaces, independently of the Hom machinery.
    """
    vertex = None if vertex is None else str(vertex)
    fld = X.algebra.field
    out = {}
    for n in X.degrees():
        dim = len(_expanded_basis(X, n, vertex))
        r_out = rank_array(fld, expanded_differential(X, n, vertex))
        r_in = rank_array(fld, expanded_differential(X, n - 1, vertex))
        h = dim - r_out - r_in
        if h:
            out[n] = h
    return out


# -- minimal models -----------------------------------------------------------------------

def _unit_entry(X: Complex):
    """First (n, r, c, coefficient) with d^n[r, c] a nonzero multiple of an idempotent."""
    alg = X.algebra
    for n, d in X.diffs.items():
        tgt, src = X.term(n + 1), X.term(n)
        for r, w in enumerate(tgt):
            for c, v in enumerate(src):
                if v == w:
                    coef = d[r, c, alg.index[f"e_{v}"]]
                    if coef != 0:
                        return n, r, c, coef
    return None


def minimal_model(X: Complex) -> Complex:
    """A homotopy-equivalent complex with no split-off pieces ``P --unit--> P``.

    Repeated Gaussian elimination: an isomorphism entry ``α`` of ``d^n``
    between copies of P_v is cancelled, replacing the remaining block ``δ`` by
    ``δ - γ α^{-1} β``. For path algebras of acyclic quivers the result has
    all differential entries in the radical, and it is zero exactly when X is
    contractible.
    """
    alg = X.algebra
    fld = alg.field
    cur = X
    while True:
        hit = _unit_entry(cur)
        if hit is None:
            return cur
        n, r, c, coef = hit
        d = cur.d(n)
        inv = pow(int(coef), -1, fld.p) if fld.characteristic else 1 / coef
        keep_r = [i for i in range(d.shape[0]) if i != r]
        keep_c = [j for j in range(d.shape[1]) if j != c]
        beta = d[r : r + 1][:, keep_c]
        gamma = d[keep_r][:, c : c + 1]
        delta = d[np.ix_(keep_r, keep_c)]
        correction = _compose_blocks(alg, gamma, beta)
        new_d = fld.reduce(delta - fld.reduce(correction * inv))
        terms = {k: list(vs) for k, vs in cur.terms.items()}
        diffs = {k: v for k, v in cur.diffs.items()}
        del terms[n][c]
        del terms[n + 1][r]
        diffs[n] = new_d
        if n - 1 in diffs:
            diffs[n - 1] = np.delete(diffs[n - 1], c, axis=0)
        if n + 1 in diffs:
            diffs[n + 1] = np.delete(diffs[n + 1], r, axis=1)
        terms = {k: vs for k, vs in terms.items() if vs}
        diffs = {k: v for k, v in diffs.items() if k in terms and k + 1 in terms}
        cur = Complex(alg, terms, diffs, check=False)
