"""Exact dense linear algebra over a prime field or the rationals.

Matrices over F_p are int64 numpy arrays with entries in [0, p); matrices over
Q are object arrays of :class:`fractions.Fraction`. No floating point is used
anywhere.
"""
from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

from cotstruct import _kernels

FIELD_ENV = "COTSTRUCT_FIELD"
DEFAULT_CHARACTERISTIC = 5


class LinAlgError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """The field F_p."""

    dtype = np.int64

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise LinAlgError(f"{p} is not prime")
        if p >= 2**31:
            raise LinAlgError("characteristic must be below 2**31")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    @property
    def name(self) -> str:
        return str(self.p)

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise LinAlgError(f"{value} has no image in F_{self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        out = np.zeros(arr.shape, dtype=np.int64)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return np.mod(arr, self.p)

    def neg(self, value) -> int:
        return (-value) % self.p

    def format(self, value) -> str:
        return str(int(value))


class RationalField:
    """The rationals, with exact Fraction arithmetic."""

    dtype = object
    characteristic = 0

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    @property
    def name(self) -> str:
        return "rational"

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = Fraction(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def neg(self, value) -> Fraction:
        return -value

    def format(self, value) -> str:
        return str(Fraction(value))


def make_field(spec) -> PrimeField | RationalField:
    if isinstance(spec, (PrimeField, RationalField)):
        return spec
    if isinstance(spec, str):
        if spec.strip().lower() in ("rational", "q", "0"):
            return RationalField()
        return PrimeField(int(spec))
    return PrimeField(int(spec))


def default_field() -> PrimeField | RationalField:
    """F_5 unless ``COTSTRUCT_FIELD`` names another prime or ``rational``."""
    return make_field(os.environ.get(FIELD_ENV, str(DEFAULT_CHARACTERISTIC)))


# -- array-level routines (used directly by the complexes layer) -------------

def echelon(field, arr: np.ndarray, reduced: bool = True) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a copy of ``arr``; returns the reduced array and pivot columns."""
    if isinstance(field, PrimeField):
        work = np.ascontiguousarray(arr, dtype=np.int64).copy()
        if work.size == 0:
            return work, []
        pivots = _kernels.echelon_modp(work, field.p, reduced)
    else:
        work = np.array(arr, dtype=object, copy=True)
        if work.size == 0:
            return work, []
        pivots = _kernels.echelon_object(work, reduced)
    return work, list(pivots)


def rank_array(field, arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return len(echelon(field, arr, reduced=False)[1])


def kernel_array(field, arr: np.ndarray) -> np.ndarray:
    """Columns spanning the null space, one per free column (standard basis)."""
    ncols = arr.shape[1]
    red, pivots = echelon(field, arr)
    free = [j for j in range(ncols) if j not in set(pivots)]
    out = field.zeros((ncols, len(free)))
    for k, j in enumerate(free):
        out[j, k] = 1
        for r, pc in enumerate(pivots):
            out[pc, k] = field.neg(red[r, j])
    return out


def solve_array(field, arr: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """A particular solution of ``arr @ x = b`` (free variables set to 0)."""
    nrows, ncols = arr.shape
    if b.shape[0] != nrows:
        raise LinAlgError(f"right-hand side has {b.shape[0]} entries, expected {nrows}")
    aug = field.zeros((nrows, ncols + 1))
    aug[:, :ncols] = arr
    aug[:, ncols] = b
    red, pivots = echelon(field, aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = field.zeros((ncols,))
    for r, pc in enumerate(pivots):
        x[pc] = red[r, ncols]
    return x


def matmul(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0:
        return field.zeros((a.shape[0], b.shape[1]))
    return field.reduce(a @ b)


# -- the public Matrix type ---------------------------------------------------

class Matrix:
    """Immutable dense matrix over a field."""

    __slots__ = ("field", "data")

    def __init__(self, field, data, rows: int | None = None, cols: int | None = None):
        field = make_field(field)
        if isinstance(data, np.ndarray) and data.dtype == np.dtype(field.dtype) and data.ndim == 2:
            arr = field.reduce(data.copy())
        else:
            arr = field.array(data)
            if arr.ndim != 2:
                if rows is None or cols is None or arr.size != rows * cols:
                    raise LinAlgError("matrix data must be two-dimensional")
                arr = arr.reshape(rows, cols)
        if rows is not None and cols is not None and arr.shape != (rows, cols):
            if arr.size == 0 and rows * cols == 0:
                arr = field.zeros((rows, cols))
            else:
                raise LinAlgError(f"entry count {arr.size} does not match {rows}x{cols}")
        arr.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        f = make_field(field)
        arr = f.zeros((n, n))
        for i in range(n):
            arr[i, i] = 1
        return cls(f, arr)

    @classmethod
    def zero(cls, field, rows: int, cols: int) -> "Matrix":
        f = make_field(field)
        return cls(f, f.zeros((rows, cols)))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def entries(self) -> list:
        return list(self.data.reshape(-1))

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.data.T.copy())

    def column(self, j: int) -> np.ndarray:
        return self.data[:, j].copy()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LinAlgError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Matrix(self.field, matmul(self.field, self.data, other.data))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.all(self.data == other.data))
        )

    def __hash__(self):
        return hash((self.field, self.data.shape, tuple(self.entries)))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.to_lists()!r})"

    def to_lists(self) -> list[list[str]]:
        return [[self.field.format(v) for v in row] for row in self.data]


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    red, pivots = echelon(m.field, m.data)
    return Matrix(m.field, red), len(pivots), pivots


def rank(m: Matrix) -> int:
    return rank_array(m.field, m.data)


def kernel_basis(m: Matrix) -> Matrix:
    return Matrix(m.field, kernel_array(m.field, m.data))


def solve(m: Matrix, b) -> np.ndarray | None:
    """Return x with m @ x = b, or None when the system is inconsistent."""
    vec = b.data.reshape(-1) if isinstance(b, Matrix) else m.field.array(list(b))
    if vec.shape[0] != m.rows:
        raise LinAlgError(f"right-hand side has {vec.shape[0]} entries, expected {m.rows}")
    return solve_array(m.field, m.data, vec)


def quotient_dimension(sub: Matrix, ambient: Matrix) -> int:
    """dim(colspace(ambient) / colspace(sub)); sub must lie inside ambient."""
    if sub.rows != ambient.rows and sub.cols and ambient.cols:
        raise LinAlgError("sub and ambient live in different spaces")
    r_amb = rank(ambient)
    if sub.cols == 0:
        return r_amb
    both = np.concatenate([ambient.data, sub.data], axis=1)
    if rank_array(ambient.field, both) != r_amb:
        raise LinAlgError("subspace not contained")
    return r_amb - rank(sub)
