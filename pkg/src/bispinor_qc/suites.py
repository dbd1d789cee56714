"""Verification suites run by ``bispinor-qc verify``."""

from __future__ import annotations

import math
from collections import defaultdict

import numpy as np

from . import bispinor as bs
from . import qubit as qb
from . import tqc
from .gamma import alpha, basis16, clifford_check, exp_generator, gamma, gamma5, pauli, sigma_big, trace_inner
from .matrix import Mat, identity, kron, max_abs_diff, to_numpy
from .report import Check, Report
from .scalar import I, ONE, QUARTER_PI

SUITES = ("gamma", "bispinor", "qubit", "tqc")
FLOAT_TOL = 1e-12

# reference gate actions on (|10>, |01>, |11>, |00>): (coefficient, Bell label)
REFERENCE_R_ACTIONS = {
    "R1": [("1", "Psi+"), ("1", "Psi-"), ("1", "Phi+"), ("1", "Phi-")],
    "R2": [("-1", "Psi-"), ("1", "Psi+"), ("-1", "Phi-"), ("1", "Phi+")],
    "R3": [("-1", "Psi-"), ("1", "Psi+"), ("1", "Phi+"), ("1", "Phi-")],
    "R4": [("1", "Psi+"), ("1", "Psi-"), ("-1", "Phi-"), ("1", "Phi+")],
}
REFERENCE_RHAT_ACTIONS = {
    "Rhat1": [("i", "Phi+"), ("-i", "Phi-"), ("-i", "Psi+"), ("i", "Psi-")],
    "Rhat2": [("-1", "Psi+"), ("1", "Psi-"), ("1", "Phi+"), ("-1", "Phi-")],
    "Rhat3": [("1", "Phi+"), ("-1", "Phi-"), ("1", "Psi+"), ("-1", "Psi-")],
    "Rhat4": [("1", "Psi-"), ("1", "Psi+"), ("1", "Phi-"), ("1", "Phi+")],
}
REFERENCE_EIGENVALUES = {1: (+1, +1, +1), 2: (+1, -1, -1), 3: (-1, -1, +1), 4: (-1, +1, -1)}
_COEFF = {"1": ONE, "-1": -ONE, "i": I, "-i": -I}


class _MaxError:
    """Running maximum of float residuals, one slot per check id."""

    def __init__(self):
        self.err = defaultdict(float)
        self.anchor = {}

    def record(self, check_id: str, anchor: str, a, b=None):
        e = max_abs_diff(a, b) if b is not None else float(np.max(np.abs(a)))
        self.anchor[check_id] = anchor
        if e > self.err[check_id] or math.isnan(e):
            self.err[check_id] = e

    def checks(self, tol: float = FLOAT_TOL, detail=None):
        for cid, err in self.err.items():
            yield Check(cid, self.anchor[cid], "float", err <= tol, err, detail)


def _directions(rng: np.random.Generator, samples: int) -> list[bs.Direction]:
    out = []
    while len(out) < samples:
        d = bs.Direction.random(rng)
        if not d.is_pole:
            out.append(d)
    return out


# -- gamma -----------------------------------------------------------------


def gamma_suite() -> Report:
    report = Report("gamma").extend(clifford_check())
    one = identity(4)
    report.add(
        Check("gamma.gamma5.product", "gamma5 = i g0 g1 g2 g3 = diag(-1,-1,1,1)", "exact",
              gamma5() == Mat([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])),
    )
    for i in (1, 2, 3):
        report.add(
            Check(f"gamma.sigma.{i}", "Sigma^i = gamma5 gamma0 gamma^i = diag(s_i, s_i)", "exact",
                  sigma_big(i) == kron(identity(2), pauli(i))),
            Check(f"gamma.alpha.{i}", "(alpha^i)^2 = 1", "exact", alpha(i) @ alpha(i) == one),
        )
    gens = {
        "g1": gamma(1),
        "g0g1g3": gamma(0) @ gamma(1) @ gamma(3),
    }
    for name, G in gens.items():
        U, V = exp_generator(G, QUARTER_PI), exp_generator(G, -QUARTER_PI)
        report.add(
            Check(f"gamma.exp.{name}.inverse", "exp(aG) exp(-aG) = 1", "exact", U @ V == one),
            Check(f"gamma.exp.{name}.unitary", "exp(aG) is unitary for anti-Hermitian G", "exact", U.dag() @ U == one),
            Check(f"gamma.exp.{name}.det", "rotations have unit determinant", "exact", U.det() == ONE),
            Check(f"gamma.exp.{name}.float_path", "exact and float exponentials agree", "float",
                  max_abs_diff(U, exp_generator(G.to_numpy(), math.pi / 4)) <= FLOAT_TOL,
                  max_abs_diff(U, exp_generator(G.to_numpy(), math.pi / 4))),
        )
    b = basis16()
    gram_ok = all(trace_inner(A, B) == (4 if i == j else 0) for i, (_, A) in enumerate(b) for j, (_, B) in enumerate(b))
    report.add(
        Check("gamma.basis16.gram", "16 basis elements, Tr(A^dagger B) = 4 delta", "exact",
              len(b) == 16 and gram_ok, detail={"count": len(b)}),
    )
    return report


# -- bispinor --------------------------------------------------------------


def bispinor_suite(rng: np.random.Generator, samples: int) -> Report:
    report = Report("bispinor")
    one = identity(4)
    for i in (1, 2, 3, 4):
        measured = bs.measure_eigenvalues(bs.canonical_weyl(i))
        report.add(
            Check(f"bispinor.eigenvalues.u{i}", "energy, helicity, chirality of canonical Weyl bispinors", "exact",
                  measured == REFERENCE_EIGENVALUES[i], detail={"measured": list(measured)})
        )
        m = bs.majorana(i)
        report.add(
            Check(f"bispinor.majorana_condition.canonical.{i}", "C u_M = +-u_M", "exact",
                  bs.charge_conjugate(m) == bs.MAJORANA_SIGNS[i] * m.components),
            Check(f"bispinor.majorana_energy.canonical.{i}", "alpha.p u_M = +-u_M", "exact",
                  bs.alpha_dot() @ m.components == m.energy * m.components),
        )
    R3 = bs.weyl_to_majorana_map()
    for w, mj, sign in bs.WEYL_TO_MAJORANA:
        report.add(
            Check(f"bispinor.r3.u{w}", "R3 u^(i)(p_z) = +-u_M^(j)(p_z)", "exact",
                  R3 @ bs.canonical_weyl(w).components == sign * bs.majorana(mj).components)
        )
    report.add(
        Check("bispinor.r3.unitary", "R3 is unitary", "exact", R3.dag() @ R3 == one),
        Check("bispinor.r3.det", "R3 has unit determinant", "exact", R3.det() == ONE),
    )
    Pp, Pm = bs.energy_projectors()
    Sp, Sm = bs.spin_sum_projectors()
    report.add(
        Check("bispinor.projectors.canonical", "projector algebra at theta = 0", "exact",
              Pp @ Pp == Pp and Pm @ Pm == Pm and (Pp @ Pm).is_zero() and (Pm @ Pp).is_zero() and Pp + Pm == one),
        Check("bispinor.projectors.spin_sum.canonical", "spin sums equal (1 +- alpha.p)/2", "exact",
              Pp == Sp and Pm == Sm),
    )

    acc = _MaxError()
    eye = np.eye(4)
    R3f = R3.to_numpy()
    for d in _directions(rng, samples):
        lam = bs.rotation_lambda(d)
        acc.record("bispinor.lambda.unitary", "Lambda is unitary", lam.conj().T @ lam, eye)
        acc.record("bispinor.lambda.det", "Lambda has unit determinant", np.linalg.det(lam), 1.0)
        us = {i: bs.general_weyl(i, d) for i in (1, 2, 3, 4)}
        ms = {i: bs.majorana(i, d) for i in (1, 2, 3, 4)}
        a_p, s_p = bs.alpha_dot(d), bs.sigma_dot(d)
        g5 = gamma5().to_numpy()
        gram = np.array([[np.vdot(us[i].components, us[j].components) for j in us] for i in us])
        acc.record("bispinor.orthonormal", "u^(i)dagger u^(j) = delta_ij", gram, eye)
        acc.record("bispinor.completeness", "sum_i u u^dagger = 1",
                   sum(np.outer(u.components, u.components.conj()) for u in us.values()), eye)
        for s in (+1, -1):
            chi = bs.helicity_spinor(s, d)
            sp = sum(p * pauli(k + 1).to_numpy() for k, p in enumerate(d.unit_vector()))
            acc.record("bispinor.helicity_spinor", "sigma.p chi_pm = +-chi_pm", sp @ chi, s * chi)
        for i in (1, 2, 3, 4):
            u, m = us[i].components, ms[i].components
            acc.record(f"bispinor.lambda.u{i}", "Lambda u^(i)(p_z) = u^(i)(p)",
                       lam @ to_numpy(bs.canonical_weyl(i).components), u)
            acc.record(f"bispinor.lambda.uM{i}", "Lambda u_M^(i)(p_z) = u_M^(i)(p)",
                       lam @ to_numpy(bs.majorana(i).components), m)
            acc.record(f"bispinor.hamiltonian.u{i}", "alpha.p u = +-u", a_p @ u, us[i].energy * u)
            acc.record(f"bispinor.chirality_helicity.u{i}", "Sigma.p u = +-gamma5 u", s_p @ u, us[i].energy * g5 @ u)
            acc.record(f"bispinor.helicity.u{i}", "helicity matches the canonical frame", s_p @ u, us[i].helicity * u)
            acc.record(f"bispinor.chirality.u{i}", "chirality matches the canonical frame", g5 @ u, us[i].chirality * u)
            acc.record(f"bispinor.majorana_energy.{i}", "alpha.p u_M = +-u_M", a_p @ m, ms[i].energy * m)
            acc.record(f"bispinor.majorana_condition.{i}", "C u_M = +-u_M", bs.charge_conjugate(m),
                       ms[i].majorana_sign * m)
        omega = bs.weyl_to_majorana_map(d)
        acc.record("bispinor.omega.definition", "Omega = Lambda R3 Lambda^dagger", omega, lam @ R3f @ lam.conj().T)
        acc.record("bispinor.omega.unitary", "Omega is unitary", omega.conj().T @ omega, eye)
        acc.record("bispinor.omega.det", "Omega has unit determinant", np.linalg.det(omega), 1.0)
        acc.record("bispinor.omega.commutes", "[Omega, alpha.p] = 0", omega @ a_p - a_p @ omega)
        for w, mj, sign in bs.WEYL_TO_MAJORANA:
            acc.record(f"bispinor.omega.u{w}", "Omega u^(i)(p) = +-u_M^(j)(p)", omega @ us[w].components,
                       sign * ms[mj].components)
        Pp, Pm = bs.energy_projectors(d)
        Sp, Sm = bs.spin_sum_projectors(d)
        acc.record("bispinor.projectors.idempotent", "Lambda_pm^2 = Lambda_pm",
                   np.concatenate([Pp @ Pp - Pp, Pm @ Pm - Pm]))
        acc.record("bispinor.projectors.orthogonal", "Lambda_+ Lambda_- = Lambda_- Lambda_+ = 0",
                   np.concatenate([Pp @ Pm, Pm @ Pp]))
        acc.record("bispinor.projectors.complete", "Lambda_+ + Lambda_- = 1", Pp + Pm, eye)
        acc.record("bispinor.projectors.spin_sum", "spin sums equal (1 +- alpha.p)/2",
                   np.concatenate([Pp - Sp, Pm - Sm]))
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        a = complex(rng.normal(), rng.normal())
        acc.record("bispinor.charge.antilinear", "C(a v) = a* C(v)", bs.charge_conjugate(a * v),
                   np.conj(a) * bs.charge_conjugate(v))
        acc.record("bispinor.charge.involution", "C C v = v", bs.charge_conjugate(bs.charge_conjugate(v)), v)
        for chk in bs.flip_identities_check(d).checks:
            acc.anchor[chk.id] = chk.anchor
            acc.err[chk.id] = max(acc.err[chk.id], chk.max_abs_error)
    report.add(*acc.checks(detail={"samples": samples}))
    return report


# -- qubit -----------------------------------------------------------------


def _action_checks(report: Report, reference: dict, family, name: str):
    computed = qb.gate_action_table(family)
    for g, row in reference.items():
        for k, (coeff, label) in zip(qb.TABLE_KETS, row):
            got = computed[(g, k)]
            report.add(
                Check(f"qubit.{name}.{g}.{k}", "action of the entangling gates on the computational basis", "exact",
                      got == (_COEFF[coeff], label),
                      detail={"expected": f"{coeff}|{label}>",
                              "computed": qb.format_bell(*got) if got else None})
            )


def qubit_suite(rng: np.random.Generator, samples: int) -> Report:
    report = Report("qubit")
    for k, w in qb.WEYL_OF_KET.items():
        report.add(Check(f"qubit.dictionary.ket{k}", "computational basis = canonical Weyl bispinors", "exact",
                         qb.ket(k) == bs.canonical_weyl(w).components))
    for i in (1, 2, 3, 4):
        report.add(Check(f"qubit.majorana_bell.canonical.{i}", "canonical Majorana bispinors are Bell states",
                         "exact", qb.majorana_as_bell_holds(i)))
    circuit = qb.gate("CNOT") @ qb.gate("HxI")
    report.add(Check("qubit.cnot_hadamard", "CNOT (H x 1)|00> = |Phi+>", "exact",
                     circuit @ qb.ket("00") == qb.bell_state("Phi+")))
    _action_checks(report, REFERENCE_R_ACTIONS, qb.R_FAMILY, "r_actions")
    _action_checks(report, REFERENCE_RHAT_ACTIONS, qb.RHAT_FAMILY, "rhat_actions")
    for g in qb.R_FAMILY:
        report.add(qb.yang_baxter_check(g))
    for g in qb.RHAT_FAMILY:
        report.add(Check(f"qubit.yang_baxter_violated.{g.value}", "Rhat gates do not solve Yang-Baxter", "exact",
                         not qb.yang_baxter_holds(qb.gate(g))))
    report.extend(qb.clifford_gate_check())
    search = qb.completeness_search()
    report.add(Check("qubit.completeness_search", "no fifth Clifford element extends the Rhat set", "exact",
                     search["count"] == 0, detail=search))
    one = identity(4)
    for g in qb.R_FAMILY + qb.RHAT_FAMILY:
        G = qb.gate(g)
        report.add(Check(f"qubit.rotation.{g.value}", "unitary with unit determinant", "exact",
                         G.dag() @ G == one and G.det() == ONE))
    report.add(Check("qubit.cnot.det", "det CNOT = -1", "exact", qb.gate("CNOT").det() == -ONE))
    entanglers = {g.value: qb.gate(g) for g in qb.R_FAMILY + qb.RHAT_FAMILY}
    entanglers["CNOT.HxI"] = circuit
    for name, G in entanglers.items():
        report.add(Check(f"qubit.entangling.{name}", "maps every basis state to concurrence 1", "exact",
                         all(qb.concurrence(G @ qb.ket(k)) == 1.0 for k in qb.KETS)))
    acc = _MaxError()
    for d in _directions(rng, samples):
        for i in (1, 2, 3, 4):
            label, sign = qb.MAJORANA_AS_BELL[i]
            acc.record(f"qubit.majorana_bell.{i}", "u_M^(i)(p) = +-|Bell(p)>", bs.majorana(i, d).components,
                       sign * qb.bell_state(label, d))
            acc.record(f"qubit.concurrence.weyl.{i}", "Weyl bispinors are product states",
                       qb.concurrence(bs.general_weyl(i, d).components), 0.0)
            acc.record(f"qubit.concurrence.majorana.{i}", "Majorana bispinors are maximally entangled",
                       qb.concurrence(bs.majorana(i, d).components), 1.0)
    report.add(*acc.checks(detail={"samples": samples}))
    return report


# -- tqc -------------------------------------------------------------------


def tqc_suite() -> Report:
    report = Report("tqc")
    for part in (
        tqc.fusion_rules_check,
        tqc.braid_algebra_check,
        tqc.conjugation_check,
        tqc.separability_check,
        tqc.charge_commutation_check,
        tqc.fusion_basis_check,
        tqc.braid_entanglement_check,
        tqc.parity_conservation_check,
        tqc.braided_majorana_check,
    ):
        report.extend(part())
    return report


def run(suite: str = "all", seed: int = 0, samples: int = 1000) -> Report:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = SUITES if suite == "all" else (suite,)
    report = Report(suite)
    for name in names:
        # independent stream per suite so that results do not depend on which suites run
        rng = np.random.default_rng([seed, SUITES.index(name)])
        if name == "gamma":
            report.extend(gamma_suite())
        elif name == "bispinor":
            report.extend(bispinor_suite(rng, samples))
        elif name == "qubit":
            report.extend(qubit_suite(rng, samples))
        else:
            report.extend(tqc_suite())
    return report
