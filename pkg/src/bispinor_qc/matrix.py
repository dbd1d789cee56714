"""Small dense matrices over Q(zeta_8), and helpers shared with the float backend.

Exact matrices are :class:`Mat` values; float matrices are plain complex
``numpy`` arrays.  Column vectors are ``(n, 1)`` matrices on the exact side
and 1-d arrays on the float side.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .scalar import ONE, ZERO, ExactScalar

__all__ = [
    "Mat",
    "BackendMismatchError",
    "backend",
    "dagger",
    "to_numpy",
    "kron",
    "identity",
    "column",
    "is_close",
    "max_abs_diff",
]

FLOAT_TOL = 1e-12


class BackendMismatchError(TypeError):
    """Raised when an exact matrix is combined with a float one."""


class Mat:
    """Immutable exact matrix.  ``A @ B`` is the matrix product, ``a * A`` scales."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(ExactScalar.coerce(x) for x in row) for row in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be non-empty and of equal length")
        self.rows = rows
        self.shape = (len(rows), len(rows[0]))

    @classmethod
    def _wrap(cls, rows) -> "Mat":
        obj = object.__new__(cls)
        obj.rows = rows
        obj.shape = (len(rows), len(rows[0]))
        return obj

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Mat":
        m = n if m is None else m
        return cls._wrap(tuple((ZERO,) * m for _ in range(n)))

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def entries(self) -> Iterable[ExactScalar]:
        for row in self.rows:
            yield from row

    # -- algebra -----------------------------------------------------------

    def __matmul__(self, other):
        if isinstance(other, np.ndarray):
            raise BackendMismatchError("cannot multiply exact and float matrices")
        if not isinstance(other, Mat):
            return NotImplemented
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a._n != (0, 0, 0, 0) and b._n != (0, 0, 0, 0):
                        acc = acc + a * b
                new_row.append(acc)
            out.append(tuple(new_row))
        return Mat._wrap(tuple(out))

    def _elementwise(self, other, op):
        if isinstance(other, np.ndarray):
            raise BackendMismatchError("cannot combine exact and float matrices")
        if not isinstance(other, Mat):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Mat._wrap(tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __add__(self, other):
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self):
        return Mat._wrap(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, k):
        if isinstance(k, (Mat, np.ndarray)):
            return NotImplemented
        try:
            k = ExactScalar.coerce(k)
        except TypeError:
            return NotImplemented
        return Mat._wrap(tuple(tuple(k * a for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = ExactScalar.coerce(k)
        return self * k.inverse()

    def conj(self) -> "Mat":
        return Mat._wrap(tuple(tuple(a.conj() for a in r) for r in self.rows))

    @property
    def T(self) -> "Mat":
        return Mat._wrap(tuple(zip(*self.rows)))

    def dag(self) -> "Mat":
        return self.conj().T

    def trace(self) -> ExactScalar:
        self._require_square()
        acc = ZERO
        for k in range(self.shape[0]):
            acc = acc + self.rows[k][k]
        return acc

    def det(self) -> ExactScalar:
        """Determinant by Gaussian elimination over the field."""
        self._require_square()
        n = self.shape[0]
        a = [list(r) for r in self.rows]
        det = ONE
        for c in range(n):
            pivot = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                det = -det
            p = a[c][c]
            det = det * p
            inv = p.inverse()
            for r in range(c + 1, n):
                if a[r][c].is_zero():
                    continue
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def _require_square(self):
        if self.shape[0] != self.shape[1]:
            raise ValueError(f"square matrix required, got {self.shape}")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries())

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(a) for a in r] for r in self.rows], dtype=complex)

    def __repr__(self):
        body = ",\n     ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows)
        return f"Mat([{body}])"


def backend(x) -> str:
    if isinstance(x, Mat):
        return "exact"
    if isinstance(x, np.ndarray):
        return "float"
    raise TypeError(f"not a matrix: {type(x).__name__}")


def same_backend(a, b) -> str:
    ba, bb = backend(a), backend(b)
    if ba != bb:
        raise BackendMismatchError(f"backend mismatch: {ba} vs {bb}")
    return ba


def dagger(x):
    if isinstance(x, Mat):
        return x.dag()
    x = np.asarray(x)
    return x.conj().T


def to_numpy(x) -> np.ndarray:
    if isinstance(x, Mat):
        arr = x.to_numpy()
        return arr[:, 0] if arr.shape[1] == 1 else arr
    return np.asarray(x, dtype=complex)


def identity(n: int) -> Mat:
    return Mat._wrap(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))


def column(*entries) -> Mat:
    return Mat([[e] for e in entries])


def kron(a, b):
    """Kronecker product with ``a`` on the most significant index."""
    if isinstance(a, Mat) and isinstance(b, Mat):
        rows = []
        for ra in a.rows:
            for rb in b.rows:
                rows.append(tuple(x * y for x in ra for y in rb))
        return Mat._wrap(tuple(rows))
    same_backend(a, b)
    return np.kron(a, b)


def max_abs_diff(a, b) -> float:
    return float(np.max(np.abs(to_numpy(a) - to_numpy(b)))) if np.size(to_numpy(a)) else 0.0


def is_close(a, b, tol: float = FLOAT_TOL) -> bool:
    """Exact equality for two exact operands, max-abs tolerance otherwise."""
    if isinstance(a, Mat) and isinstance(b, Mat):
        return a == b
    return max_abs_diff(a, b) <= tol


def vec_entries(v) -> Sequence:
    """Components of a column vector on either backend."""
    if isinstance(v, Mat):
        if v.shape[1] != 1:
            raise ValueError("expected a column vector")
        return [r[0] for r in v.rows]
    return list(np.asarray(v).reshape(-1))
