"""Dirac gamma matrices in the Weyl (chiral) representation, exactly."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .matrix import Mat, identity, same_backend
from .report import Check, Report
from .scalar import I, PiFraction, exact_cos_sin

__all__ = [
    "PAULI",
    "METRIC",
    "GeneratorNotInvolutoryError",
    "CliffordIndex",
    "pauli",
    "gamma",
    "gamma5",
    "sigma_big",
    "alpha",
    "charge_matrix",
    "clifford_check",
    "exp_generator",
    "trace_inner",
    "basis16",
]

METRIC = (1, -1, -1, -1)

_ID2 = identity(2)
_ZERO2 = Mat.zeros(2)

PAULI = (
    Mat([[0, 1], [1, 0]]),
    Mat([[0, -I], [I, 0]]),
    Mat([[1, 0], [0, -1]]),
)


class GeneratorNotInvolutoryError(ValueError):
    """The generator passed to :func:`exp_generator` squares to neither +1 nor -1."""


def pauli(i: int) -> Mat:
    if i not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {i!r}")
    return PAULI[i - 1]


def _blocks(a: Mat, b: Mat, c: Mat, d: Mat) -> Mat:
    top = [ra + rb for ra, rb in zip(a.rows, b.rows)]
    bottom = [rc + rd for rc, rd in zip(c.rows, d.rows)]
    return Mat(top + bottom)


@lru_cache(maxsize=None)
def gamma(mu: int) -> Mat:
    """gamma^mu with gamma^0 = [[0, 1], [1, 0]] and gamma^i = [[0, s_i], [-s_i, 0]]."""
    if mu == 0:
        return _blocks(_ZERO2, _ID2, _ID2, _ZERO2)
    if mu in (1, 2, 3):
        s = PAULI[mu - 1]
        return _blocks(_ZERO2, s, -s, _ZERO2)
    raise ValueError(f"gamma index must be in 0..3, got {mu!r}")


@lru_cache(maxsize=None)
def gamma5() -> Mat:
    return I * (gamma(0) @ gamma(1) @ gamma(2) @ gamma(3))


@lru_cache(maxsize=None)
def sigma_big(i: int) -> Mat:
    """Spin matrix Sigma^i = gamma5 gamma0 gamma^i = diag(s_i, s_i)."""
    if i not in (1, 2, 3):
        raise ValueError(f"spatial index must be 1, 2 or 3, got {i!r}")
    return gamma5() @ gamma(0) @ gamma(i)


@lru_cache(maxsize=None)
def alpha(i: int) -> Mat:
    if i not in (1, 2, 3):
        raise ValueError(f"spatial index must be 1, 2 or 3, got {i!r}")
    return gamma(0) @ gamma(i)


@lru_cache(maxsize=None)
def charge_matrix() -> Mat:
    """C = i gamma^2; charge conjugation is C followed by complex conjugation."""
    return I * gamma(2)


def clifford_check() -> Report:
    report = Report("gamma.clifford")
    one = identity(4)
    for mu in range(4):
        for nu in range(mu, 4):
            anti = gamma(mu) @ gamma(nu) + gamma(nu) @ gamma(mu)
            expected = 2 * METRIC[mu] if mu == nu else 0
            report.add(
                Check(
                    id=f"gamma.anticommutator.{mu}{nu}",
                    anchor="Clifford relation {g^mu, g^nu} = 2 g^{mu nu}",
                    backend="exact",
                    passed=anti == expected * one,
                    detail={"pair": [mu, nu], "expected": f"{expected}*1"},
                )
            )
    return report


def _square_sign(G, tol: float) -> int:
    if isinstance(G, Mat):
        n = G.shape[0]
        sq = G @ G
        one = identity(n)
        if sq == -one:
            return -1
        if sq == one:
            return 1
    else:
        n = G.shape[0]
        sq = G @ G
        one = np.eye(n)
        if np.max(np.abs(sq + one)) <= tol:
            return -1
        if np.max(np.abs(sq - one)) <= tol:
            return 1
    raise GeneratorNotInvolutoryError("generator must square to +1 or -1")


def exp_generator(G, angle, tol: float = 1e-12):
    """exp(angle * G) in closed form for a generator with G @ G = +-1.

    ``angle`` is either radians (float path) or a :class:`PiFraction`.  An
    exact ``G`` with an angle whose cosine and sine lie in Q(zeta_8) gives an
    exact result; anything else is evaluated in floating point.
    """
    sign = _square_sign(G, tol)
    if isinstance(G, Mat):
        if not isinstance(angle, PiFraction) and angle == 0:
            angle = PiFraction(0)
        if isinstance(angle, PiFraction):
            one = identity(G.shape[0])
            if angle.turns == 0:
                return one
            if sign < 0:
                cs = exact_cos_sin(angle)
                if cs is not None:
                    c, s = cs
                    return c * one + s * G
        G = G.to_numpy()
    a = float(angle)
    one = np.eye(G.shape[0], dtype=complex)
    if sign < 0:
        return math.cos(a) * one + math.sin(a) * G
    return math.cosh(a) * one + math.sinh(a) * G


def trace_inner(A, B):
    """Hilbert-Schmidt inner product Tr(A^dagger B)."""
    if same_backend(A, B) == "exact":
        return (A.dag() @ B).trace()
    return complex(np.trace(A.conj().T @ B))


@dataclass(frozen=True)
class CliffordIndex:
    """Label of a basis element, e.g. ``g0g2`` or ``g5g3``; ``1`` is the identity."""

    label: str
    factors: tuple[int, ...]  # gamma indices, 5 standing for gamma5

    def __str__(self):
        return self.label


def _product(factors: tuple[int, ...]) -> Mat:
    m = identity(4)
    for f in factors:
        m = m @ (gamma5() if f == 5 else gamma(f))
    return m


@lru_cache(maxsize=None)
def basis16() -> tuple[tuple[CliffordIndex, Mat], ...]:
    groups = [()]
    groups += [(mu,) for mu in range(4)]
    groups += [(mu, nu) for mu in range(4) for nu in range(mu + 1, 4)]
    groups += [(5, mu) for mu in range(4)]
    groups += [(5,)]
    out = []
    for factors in groups:
        label = "".join(f"g{f}" for f in factors) or "1"
        out.append((CliffordIndex(label, factors), _product(factors)))
    return tuple(out)
