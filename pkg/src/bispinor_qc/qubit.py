"""Two-qubit states and entangling gates built from the gamma matrices."""

from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache

import numpy as np

from .bispinor import Direction, majorana, weyl
from .gamma import basis16, exp_generator, gamma, gamma5, trace_inner
from .matrix import Mat, column, identity, kron, vec_entries
from .report import Check, Report
from .scalar import I, INV_SQRT2, ONE, QUARTER_PI, ZERO, ExactScalar

__all__ = [
    "GateLabel",
    "KETS",
    "BELL_LABELS",
    "WEYL_OF_KET",
    "MAJORANA_AS_BELL",
    "NotNormalizedError",
    "computational_basis",
    "ket",
    "bell_state",
    "gate",
    "identify_bell",
    "gate_action_table",
    "eigenvalue_table",
    "promote_left",
    "promote_right",
    "yang_baxter_check",
    "clifford_gate_check",
    "completeness_search",
    "concurrence",
    "concurrence_squared",
]

KETS = ("00", "01", "10", "11")
# column order of the gate-action tables
TABLE_KETS = ("10", "01", "11", "00")
BELL_LABELS = ("Phi+", "Phi-", "Psi+", "Psi-")
_BELL_ALIASES = {"Φ+": "Phi+", "Φ-": "Phi-", "Ψ+": "Psi+", "Ψ-": "Psi-"}

# |ab> equals the canonical Weyl bispinor u^(i)(p_z)
WEYL_OF_KET = {"00": 4, "01": 2, "10": 1, "11": 3}

# u_M^(i) = sign * |Bell>
MAJORANA_AS_BELL = {1: ("Psi-", +1), 2: ("Psi+", +1), 3: ("Phi-", -1), 4: ("Phi+", +1)}


class NotNormalizedError(ValueError):
    pass


class GateLabel(str, Enum):
    H_I = "HxI"
    CNOT = "CNOT"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    RHAT1 = "Rhat1"
    RHAT2 = "Rhat2"
    RHAT3 = "Rhat3"
    RHAT4 = "Rhat4"


R_FAMILY = (GateLabel.R1, GateLabel.R2, GateLabel.R3, GateLabel.R4)
RHAT_FAMILY = (GateLabel.RHAT1, GateLabel.RHAT2, GateLabel.RHAT3, GateLabel.RHAT4)


def computational_basis(i: int) -> Mat:
    if i not in range(4):
        raise ValueError(f"basis index must be in 0..3, got {i!r}")
    return column(*(1 if k == i else 0 for k in range(4)))


def ket(label: str) -> Mat:
    if label not in KETS:
        raise ValueError(f"unknown ket {label!r}")
    return computational_basis(int(label, 2))


def _bell_label(label: str) -> str:
    label = _BELL_ALIASES.get(label, label)
    if label not in BELL_LABELS:
        raise ValueError(f"unknown Bell state {label!r}")
    return label


def bell_state(label: str, d: Direction | None = None):
    """Bell state; with a direction, built from the rotated Weyl bispinors."""
    label = _bell_label(label)
    # pairs of Weyl indices: (first, second, relative sign)
    first, second, sign = {
        "Phi+": (4, 3, +1),
        "Phi-": (4, 3, -1),
        "Psi+": (2, 1, +1),
        "Psi-": (2, 1, -1),
    }[label]
    a, b = weyl(first, d).components, weyl(second, d).components
    if isinstance(a, Mat):
        return INV_SQRT2 * (a + b if sign > 0 else a - b)
    return (a + sign * b) / math.sqrt(2.0)


@lru_cache(maxsize=None)
def _hadamard() -> Mat:
    return INV_SQRT2 * Mat([[1, 1], [1, -1]])


@lru_cache(maxsize=None)
def gate(label: GateLabel | str) -> Mat:
    label = GateLabel(label)
    g0, g1, g2, g3 = (gamma(k) for k in range(4))
    one = identity(4)
    if label is GateLabel.H_I:
        return kron(_hadamard(), identity(2))
    if label is GateLabel.CNOT:
        return Mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    if label in R_FAMILY:
        gen = g1 if label in (GateLabel.R1, GateLabel.R2) else g0 @ g1 @ g3
        angle = QUARTER_PI if label in (GateLabel.R1, GateLabel.R3) else -QUARTER_PI
        return exp_generator(gen, angle)
    c = I * INV_SQRT2
    return {
        GateLabel.RHAT1: c * (g3 @ (one + g1)),
        GateLabel.RHAT2: c * (g2 @ (one + g1)),
        GateLabel.RHAT3: INV_SQRT2 * (g0 @ (one + g1)),
        GateLabel.RHAT4: c * (g0 @ g2 @ g3 + I * gamma5()),
    }[label]


def identify_bell(v: Mat) -> tuple[ExactScalar, str] | None:
    """Write ``v`` as ``c |Bell>`` exactly, if possible."""
    for label in BELL_LABELS:
        b = bell_state(label)
        c = (b.dag() @ v)[0, 0]
        if not c.is_zero() and c * b == v:
            return c, label
    return None


def format_bell(coeff: ExactScalar, label: str) -> str:
    pretty = {ONE: "", -ONE: "-", I: "i", -I: "-i"}
    prefix = pretty.get(coeff, f"({coeff})")
    return f"{prefix}|{label}>"


def gate_action_table(family=R_FAMILY) -> dict[tuple[str, str], tuple[ExactScalar, str] | None]:
    """Action of each gate on the computational basis, as signed Bell states."""
    table = {}
    for g in family:
        G = gate(g)
        for k in TABLE_KETS:
            table[(GateLabel(g).value, k)] = identify_bell(G @ ket(k))
    return table


def eigenvalue_table() -> dict[int, tuple[int | None, int | None, int | None]]:
    """Measured (energy, helicity, chirality) of the canonical Weyl bispinors."""
    from .bispinor import measure_eigenvalues

    return {i: measure_eigenvalues(weyl(i)) for i in (1, 2, 3, 4)}


def promote_left(R):
    """R (x) 1_2 as an 8x8 matrix."""
    return kron(R, identity(2) if isinstance(R, Mat) else np.eye(2))


def promote_right(R):
    """1_2 (x) R as an 8x8 matrix."""
    return kron(identity(2) if isinstance(R, Mat) else np.eye(2), R)


def yang_baxter_holds(R: Mat) -> bool:
    A, B = promote_left(R), promote_right(R)
    return A @ B @ A == B @ A @ B


def yang_baxter_check(label: GateLabel | str) -> Check:
    label = GateLabel(label)
    return Check(
        id=f"qubit.yang_baxter.{label.value}",
        anchor="algebraic Yang-Baxter equation (R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R)",
        backend="exact",
        passed=yang_baxter_holds(gate(label)),
    )


def clifford_gate_check() -> Report:
    """Hermiticity, involution, anticommutation and trace orthogonality of the Rhat set."""
    report = Report("qubit.clifford_gates")
    rh = [gate(g) for g in RHAT_FAMILY]
    one = identity(4)
    for i, A in enumerate(rh, 1):
        report.add(Check(f"qubit.rhat{i}.hermitian", "Rhat_i = Rhat_i^dagger", "exact", A == A.dag()))
        report.add(Check(f"qubit.rhat{i}.involution", "Rhat_i^2 = 1", "exact", A @ A == one))
        for j, B in enumerate(rh, 1):
            anti = A @ B.dag() + B.dag() @ A
            expected = 2 * one if i == j else Mat.zeros(4)
            report.add(
                Check(f"qubit.rhat.anticommutator.{i}{j}", "{Rhat_i, Rhat_j^dagger} = 2 delta_ij", "exact", anti == expected)
            )
            if i < j:
                report.add(
                    Check(
                        f"qubit.rhat.orthogonal.{i}{j}",
                        "Tr(Rhat_i^dagger Rhat_j) = 0",
                        "exact",
                        trace_inner(A, B).is_zero(),
                    )
                )
    return report


PHASES = (("1", ONE), ("-1", -ONE), ("i", I), ("-i", -I))


def completeness_search() -> dict:
    """Look for a fifth Hermitian involution anticommuting with all four Rhat.

    Candidates are the 16 Clifford basis elements times a phase in
    {+-1, +-i}: 64 matrices in all.  Returns the candidates that would extend
    the set.
    """
    rh = [gate(g) for g in RHAT_FAMILY]
    one = identity(4)
    extensions = []
    tested = 0
    for idx, B in basis16():
        for name, phase in PHASES:
            tested += 1
            M = phase * B
            if M != M.dag() or M @ M != one:
                continue
            if all((M @ R + R @ M).is_zero() for R in rh):
                extensions.append(f"{name}*{idx.label}")
    return {
        "scope": "16 Clifford basis elements x phases {1,-1,i,-i}",
        "candidates_tested": tested,
        "extensions": extensions,
        "count": len(extensions),
    }


def _amplitudes(s):
    a = vec_entries(s)
    if len(a) != 4:
        raise ValueError("two-qubit state needs four amplitudes")
    return a


def concurrence_squared(s, tol: float = 1e-12):
    """4 |ad - bc|^2; exact for exact states."""
    a, b, c, d = _amplitudes(s)
    if isinstance(s, Mat):
        norm = sum((x.abs2() for x in (a, b, c, d)), ZERO)
        if norm != ONE:
            raise NotNormalizedError("state is not normalised")
        return 4 * (a * d - b * c).abs2()
    if abs(np.vdot(s, s) - 1.0) > tol:
        raise NotNormalizedError("state is not normalised")
    return 4.0 * abs(a * d - b * c) ** 2


def concurrence(s, tol: float = 1e-12) -> float:
    """Pure-state concurrence 2|ad - bc| for amplitudes ordered |00>,|01>,|10>,|11>."""
    sq = concurrence_squared(s, tol)
    if isinstance(sq, ExactScalar):
        if sq == ZERO:
            return 0.0
        if sq == ONE:
            return 1.0
        sq = complex(sq).real
    return min(1.0, math.sqrt(max(sq, 0.0)))


def majorana_as_bell_holds(i: int, d: Direction | None = None, tol: float = 1e-12) -> bool:
    label, sign = MAJORANA_AS_BELL[i]
    m = majorana(i, d).components
    b = bell_state(label, d)
    if isinstance(m, Mat):
        return m == sign * b
    return float(np.max(np.abs(m - sign * b))) <= tol
