"""Massless Weyl and Majorana bispinors, canonical frame and general momentum.

Canonical-frame objects (momentum along +z) are exact ``Mat`` columns; any
other direction goes through the float backend.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .gamma import alpha, charge_matrix, exp_generator, gamma, gamma5, pauli, sigma_big
from .matrix import Mat, identity, is_close, max_abs_diff, to_numpy
from .report import Check, Report
from .scalar import INV_SQRT2, QUARTER_PI, ExactScalar

__all__ = [
    "Direction",
    "CANONICAL",
    "Bispinor4",
    "PoleDirectionError",
    "WEYL_EIGENVALUES",
    "WEYL_TO_MAJORANA",
    "MAJORANA_SIGNS",
    "canonical_weyl",
    "general_weyl",
    "weyl",
    "helicity_spinor",
    "rotation_lambda",
    "alpha_dot",
    "sigma_dot",
    "measure_eigenvalues",
    "charge_conjugate",
    "majorana",
    "r3",
    "weyl_to_majorana_map",
    "energy_projectors",
    "spin_sum_projectors",
    "flip_identities_check",
]

TWO_PI = 2.0 * math.pi

# (energy sign, helicity, chirality) per solution index, canonical frame
WEYL_EIGENVALUES = {
    1: (+1, +1, +1),
    2: (+1, -1, -1),
    3: (-1, -1, +1),
    4: (-1, +1, -1),
}

# position of the single nonzero entry of u^(i)(p_z)
_CANONICAL_SLOT = {1: 2, 2: 1, 3: 3, 4: 0}

# (weyl index, majorana index, sign):  R3 u^(w) = sign * u_M^(m)
WEYL_TO_MAJORANA = ((1, 1, -1), (2, 2, +1), (3, 4, +1), (4, 3, -1))

# u_M^(i) = (u^(src) + sign * C u^(src)*) / sqrt2; sign is also the C eigenvalue
_MAJORANA_SOURCE = {1: (2, +1), 2: (1, -1), 3: (3, -1), 4: (4, +1)}
MAJORANA_SIGNS = {i: s for i, (_, s) in _MAJORANA_SOURCE.items()}


class PoleDirectionError(ValueError):
    """The azimuth is undefined at theta = 0 or pi."""


@dataclass(frozen=True)
class Direction:
    """Unit momentum direction in spherical polars."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < TWO_PI:
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi}")

    @property
    def is_canonical(self) -> bool:
        return self.theta == 0.0 and self.phi == 0.0

    @property
    def is_pole(self) -> bool:
        return self.theta in (0.0, math.pi)

    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def flipped(self) -> "Direction":
        """The direction of -p: (theta, phi) -> (pi - theta, phi + pi)."""
        return Direction(math.pi - self.theta, (self.phi + math.pi) % TWO_PI)

    @classmethod
    def random(cls, rng: np.random.Generator) -> "Direction":
        """Uniform on the sphere."""
        theta = math.acos(rng.uniform(-1.0, 1.0))
        phi = rng.uniform(0.0, TWO_PI) % TWO_PI
        return cls(theta, phi)


CANONICAL = Direction(0.0, 0.0)


def _is_canonical(d: Direction | None) -> bool:
    return d is None or d.is_canonical


@dataclass(frozen=True)
class Bispinor4:
    """A four-component solution together with its quantum numbers.

    Weyl solutions carry helicity and chirality; Majorana ones carry instead
    the eigenvalue of charge conjugation.
    """

    components: Mat | np.ndarray = field(repr=False)
    kind: str
    index: int
    energy: int
    helicity: int | None = None
    chirality: int | None = None
    majorana_sign: int | None = None
    direction: Direction = CANONICAL

    @property
    def backend(self) -> str:
        return "exact" if isinstance(self.components, Mat) else "float"

    def to_numpy(self) -> np.ndarray:
        return to_numpy(self.components)

    def scaled(self, energy: float) -> np.ndarray:
        """Components rescaled to the sqrt(2E) normalisation."""
        return math.sqrt(2.0 * energy) * self.to_numpy()


def _check_index(i: int):
    if i not in (1, 2, 3, 4):
        raise ValueError(f"solution index must be in 1..4, got {i!r}")


def canonical_weyl(i: int) -> Bispinor4:
    _check_index(i)
    entries = [0, 0, 0, 0]
    entries[_CANONICAL_SLOT[i]] = 1
    energy, helicity, chirality = WEYL_EIGENVALUES[i]
    return Bispinor4(Mat([[e] for e in entries]), "weyl", i, energy, helicity, chirality)


def helicity_spinor(sign: int, d: Direction) -> np.ndarray:
    """Two-component eigenspinor of sigma . p-hat with eigenvalue ``sign``."""
    c, s = math.cos(d.theta / 2), math.sin(d.theta / 2)
    if sign > 0:
        return np.array([c, cmath.exp(1j * d.phi) * s], dtype=complex)
    return np.array([-cmath.exp(-1j * d.phi) * s, c], dtype=complex)


def general_weyl(i: int, d: Direction) -> Bispinor4:
    _check_index(i)
    zero = np.zeros(2, dtype=complex)
    chi_plus, chi_minus = helicity_spinor(+1, d), helicity_spinor(-1, d)
    blocks = {
        1: (zero, chi_plus),
        2: (chi_minus, zero),
        3: (zero, chi_minus),
        4: (chi_plus, zero),
    }[i]
    energy, helicity, chirality = WEYL_EIGENVALUES[i]
    return Bispinor4(np.concatenate(blocks), "weyl", i, energy, helicity, chirality, direction=d)


def weyl(i: int, d: Direction | None = None) -> Bispinor4:
    return canonical_weyl(i) if _is_canonical(d) else general_weyl(i, d)


def _lambda_generator(d: Direction) -> np.ndarray:
    g1, g2, g3 = (gamma(k).to_numpy() for k in (1, 2, 3))
    return (math.cos(d.phi) * g1 + math.sin(d.phi) * g2) @ g3


def rotation_lambda(d: Direction) -> np.ndarray:
    """exp(-theta/2 (gamma1 cos phi + gamma2 sin phi) gamma3), rotating +z onto p-hat."""
    return exp_generator(_lambda_generator(d), -d.theta / 2)


def alpha_dot(d: Direction | None = None):
    if _is_canonical(d):
        return alpha(3)
    p = d.unit_vector()
    return sum(p[k] * alpha(k + 1).to_numpy() for k in range(3))


def sigma_dot(d: Direction | None = None):
    if _is_canonical(d):
        return sigma_big(3)
    p = d.unit_vector()
    return sum(p[k] * sigma_big(k + 1).to_numpy() for k in range(3))


def _vector(v):
    return v.components if isinstance(v, Bispinor4) else v


def _apply(M, v):
    if isinstance(M, Mat) and not isinstance(v, Mat):
        M = M.to_numpy()
    elif isinstance(v, Mat) and not isinstance(M, Mat):
        v = to_numpy(v)
    return M @ v


def _eigen_sign(M, v, tol: float) -> int | None:
    Mv = _apply(M, v)
    for s in (+1, -1):
        if is_close(Mv, s * v, tol):
            return s
    return None


def measure_eigenvalues(v, d: Direction | None = None, tol: float = 1e-12):
    """(energy, helicity, chirality) read off alpha.p, Sigma.p and gamma5.

    An entry is ``None`` when the vector is not an eigenvector of that operator.
    """
    v = _vector(v)
    if d is None and isinstance(v, np.ndarray):
        d = CANONICAL
    ops = (alpha_dot(d), sigma_dot(d), gamma5())
    return tuple(_eigen_sign(M, v, tol) for M in ops)


def charge_conjugate(v):
    """Charge conjugation i gamma^2 K (antilinear)."""
    v = _vector(v)
    C = charge_matrix()
    if isinstance(v, Mat):
        return C @ v.conj()
    return C.to_numpy() @ np.conj(v)


def majorana(i: int, d: Direction | None = None) -> Bispinor4:
    _check_index(i)
    src, sign = _MAJORANA_SOURCE[i]
    u = weyl(src, d).components
    cu = charge_conjugate(u)
    if isinstance(u, Mat):
        comps = INV_SQRT2 * (u + cu if sign > 0 else u - cu)
    else:
        comps = (u + sign * cu) / math.sqrt(2.0)
    energy = +1 if i in (1, 2) else -1
    return Bispinor4(comps, "majorana", i, energy, majorana_sign=sign, direction=d or CANONICAL)


def r3() -> Mat:
    """exp(pi/4 gamma0 gamma1 gamma3), exactly."""
    return exp_generator(gamma(0) @ gamma(1) @ gamma(3), QUARTER_PI)


def weyl_to_majorana_map(d: Direction | None = None):
    """R3 in the canonical frame, Lambda R3 Lambda^dagger otherwise."""
    if _is_canonical(d):
        return r3()
    lam = rotation_lambda(d)
    return lam @ r3().to_numpy() @ lam.conj().T


def energy_projectors(d: Direction | None = None):
    """(Lambda_+, Lambda_-) = (1 +- alpha.p)/2."""
    a = alpha_dot(d)
    if isinstance(a, Mat):
        half = ExactScalar(1, 0, 0, 0) / 2
        one = identity(4)
        return half * (one + a), half * (one - a)
    one = np.eye(4, dtype=complex)
    return (one + a) / 2, (one - a) / 2


def spin_sum_projectors(d: Direction | None = None):
    """The same projectors as sums of u u^dagger over each energy pair."""
    us = {i: weyl(i, d).components for i in (1, 2, 3, 4)}
    if _is_canonical(d):
        plus = us[1] @ us[1].dag() + us[2] @ us[2].dag()
        minus = us[3] @ us[3].dag() + us[4] @ us[4].dag()
        return plus, minus
    outer = lambda u: np.outer(u, u.conj())  # noqa: E731
    return outer(us[1]) + outer(us[2]), outer(us[3]) + outer(us[4])


def flip_identities_check(d: Direction, tol: float = 1e-12) -> Report:
    """Momentum flip, spin flip and their composition on the helicity spinors."""
    if d.is_pole:
        raise PoleDirectionError("flip identities need 0 < theta < pi")
    minus = d.flipped()
    spin_flip = -1j * pauli(2).to_numpy()
    e = lambda s: cmath.exp(1j * s * d.phi)  # noqa: E731
    chi = lambda s, dd=d: helicity_spinor(s, dd)  # noqa: E731
    cases = {
        "momentum_flip": [
            (chi(+1, minus), -e(+1) * chi(-1)),
            (chi(-1, minus), +e(-1) * chi(+1)),
        ],
        "spin_flip": [
            (spin_flip @ chi(+1).conj(), +chi(-1)),
            (spin_flip @ chi(-1).conj(), -chi(+1)),
        ],
        "combined_flip": [
            (spin_flip @ chi(+1, minus).conj(), e(-1) * chi(+1)),
            (spin_flip @ chi(-1, minus).conj(), e(+1) * chi(-1)),
        ],
    }
    anchors = {
        "momentum_flip": "chi_pm(-p) = -+ e^{+-i phi} chi_-+(p)",
        "spin_flip": "-i sigma2 chi_pm*(p) = +- chi_-+(p)",
        "combined_flip": "-i sigma2 chi_pm*(-p) = e^{-+i phi} chi_pm(p)",
    }
    report = Report("bispinor.flip")
    for name, pairs in cases.items():
        err = max(max_abs_diff(lhs, rhs) for lhs, rhs in pairs)
        report.add(Check(f"bispinor.{name}", anchors[name], "float", err <= tol, err))
    return report
