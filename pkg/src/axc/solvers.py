"""Field-equation pipelines built on the homotopy decompositions.

Every solver returns a :class:`SolveReport` whose residuals are recomputed
from scratch through the operator kernel, so a report marked successful is
certified by exact arithmetic, not by trust in the solver's algebra.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .clifford import OperatorTag, apply_operator, laplace_beltrami
from .errors import (
    GradeMismatch,
    GradeOutOfRange,
    InconsistentSystem,
    NotASolution,
    NotConserved,
)
from .forms import Form
from .hodge import codifferential
from .homotopy import SpaceTag, cohomotopy_h, homotopy_H, membership
from .linsolve import solve_sparse
from .polyring import Poly

MAX_DEGREE_ENV = "AXC_MAX_DEGREE"


@dataclass
class SolveReport:
    outputs: dict[str, Form]
    residuals: dict[str, Form]
    gauge_notes: list[str] = field(default_factory=list)

    @property
    def failed(self) -> list[str]:
        return [name for name, form in self.residuals.items() if not form.is_zero]

    @property
    def success(self) -> bool:
        return not self.failed


def _monomials_up_to(n: int, degree: int):
    ranges = [range(degree + 1)] * n
    for exps in itertools.product(*ranges):
        if sum(exps) <= degree:
            yield exps


def _degree_bound(rhs: Form) -> int:
    # Laplace-Beltrami with a constant diagonal metric lowers coefficient
    # degree by exactly 2, so deg(rhs) + 2 spans a particular solution.
    bound = max(rhs.max_coeff_degree(), 0) + 2
    env = os.environ.get(MAX_DEGREE_ENV)
    if env:
        bound = max(bound, int(env))
    return bound


def laplace_solve(rhs: Form, k: int, side: tuple[str, ...] = (), max_degree: int | None = None) -> Form:
    """Particular polynomial solution of ``laplace(beta) = rhs`` at grade k.

    ``side`` may request the exact side conditions ``"d"`` (d beta = 0) and/or
    ``"delta"`` (delta beta = 0); the joint system is assembled over the
    monomial basis of coefficient degree <= deg(rhs) + 2 and eliminated
    exactly, free variables pinned to zero in lexicographic order.
    """
    ctx = rhs.ctx
    grade = rhs.homogeneous_grade()
    if k < 0 or k > ctx.n:
        if rhs.is_zero:
            return Form.zero(ctx)
        raise GradeOutOfRange(f"grade {k} outside 0..{ctx.n} with nonzero right-hand side")
    if grade not in (None, k):
        raise GradeMismatch(f"right-hand side grade {grade} != requested grade {k}")
    unknown = [s for s in side if s not in ("d", "delta")]
    if unknown:
        raise ValueError(f"unknown side conditions {unknown}")

    bound = max_degree if max_degree is not None else _degree_bound(rhs)
    basis = [
        (idx, exps)
        for idx in itertools.combinations(range(1, ctx.n + 1), k)
        for exps in _monomials_up_to(ctx.n, bound)
    ]

    rows: dict[tuple, dict[tuple, Fraction]] = {}

    def record(op_name: str, image: Form, var: tuple):
        for g, idx_map in image.components.items():
            for idx, poly in idx_map.items():
                for exps, coef in poly.terms.items():
                    rows.setdefault((op_name, g, idx, exps), {})[var] = coef

    for var in basis:
        idx, exps = var
        e = Form.basis(ctx, idx, Poly.monomial(ctx.n, exps))
        record("lap", laplace_beltrami(e), var)
        if "d" in side:
            record("d", e.d(), var)
        if "delta" in side:
            record("delta", codifferential(e), var)

    rhs_keys = set()
    rhs_values: dict[tuple, Fraction] = {}
    for g, idx_map in rhs.components.items():
        for idx, poly in idx_map.items():
            for exps, coef in poly.terms.items():
                key = ("lap", g, idx, exps)
                rhs_keys.add(key)
                rhs_values[key] = coef

    all_keys = sorted(set(rows) | rhs_keys)
    matrix = [rows.get(key, {}) for key in all_keys]
    vector = [rhs_values.get(key, Fraction(0)) for key in all_keys]
    try:
        solution = solve_sparse(matrix, vector)
    except InconsistentSystem:
        raise InconsistentSystem(
            f"no polynomial solution of the joint system within degree {bound}",
            degree_bound=bound,
        ) from None

    out = Form.zero(ctx)
    for (idx, exps), coef in solution.items():
        out = out + Form.basis(ctx, idx, Poly.monomial(ctx.n, exps, coef))
    return out


# -- Maxwell ---------------------------------------------------------------

def maxwell_solve(j: Form) -> SolveReport:
    """Electric Maxwell system dF = 0, delta F = j for a conserved current."""
    if j.homogeneous_grade() not in (None, 1):
        raise GradeMismatch("current must be a 1-form")
    if not codifferential(j).is_zero:
        raise NotConserved("delta j != 0")
    hj = cohomotopy_h(j)
    alpha = laplace_solve(hj.d(), 3, side=("d",))
    F = codifferential(alpha) + hj
    A = homotopy_H(F)
    return SolveReport(
        outputs={"F": F, "A": A, "alpha": alpha},
        residuals={"dF": F.d(), "deltaF_minus_j": codifferential(F) - j, "dA_minus_F": A.d() - F},
        gauge_notes=[
            "f = 0 chosen in A = df + H(delta alpha + h j)",
            "free coefficients of alpha set to zero (lexicographic)",
        ],
    )


def maxwell_solve_magnetic(j: Form) -> SolveReport:
    """Magnetic-monopole variant: dF = j, delta F = 0 for a closed 3-form j."""
    ctx = j.ctx
    if ctx.n < 3:
        raise GradeMismatch("magnetic current is a 3-form; need dimension >= 3")
    if j.homogeneous_grade() not in (None, 3):
        raise GradeMismatch("magnetic current must be a 3-form")
    if not j.d().is_zero:
        raise NotConserved("d j != 0")
    Hj = homotopy_H(j)
    alpha = laplace_solve(codifferential(Hj), 1, side=("delta",))
    F = alpha.d() + Hj
    A = cohomotopy_h(F)
    return SolveReport(
        outputs={"F": F, "A": A, "alpha": alpha},
        residuals={
            "deltaF": codifferential(F),
            "dF_minus_j": F.d() - j,
            "deltaA_minus_F": codifferential(A) - F,
        },
        gauge_notes=[
            "beta = 0 chosen in A = delta beta + h(d alpha + H j)",
            "free coefficients of alpha set to zero (lexicographic)",
        ],
    )


# -- Kalb-Ramond -----------------------------------------------------------

def kalb_ramond_solve(J: Form) -> SolveReport:
    """Kalb-Ramond system dK = 0, delta K = J for a conserved 2-form current."""
    if J.homogeneous_grade() not in (None, 2):
        raise GradeMismatch("Kalb-Ramond current must be a 2-form")
    if not codifferential(J).is_zero:
        raise NotConserved("delta J != 0")
    hJ = cohomotopy_h(J)
    beta = laplace_solve(hJ.d(), 4, side=("d",))
    K = codifferential(beta) + hJ
    B = homotopy_H(K)
    return SolveReport(
        outputs={"K": K, "B": B, "beta": beta},
        residuals={"dK": K.d(), "deltaK_minus_J": codifferential(K) - J, "dB_minus_K": B.d() - K},
        gauge_notes=["B = H K (the antiexact potential); free coefficients of beta zero"],
    )


def kr_maxwell_couple(B: Form, F: Form, j: Form, J: Form) -> SolveReport:
    """Verify the coupled Kalb-Ramond/Maxwell configuration R = B + F.

    Checks DR = K - j and DK = -J for K = dR, that delta B = 0, and that B
    is antiexact and coexact.  Raises NotASolution naming every failure.
    """
    B.ctx.require_same(F.ctx)
    R = B + F
    K = R.d()
    residuals = {
        "DR_minus_(K-j)": apply_operator(OperatorTag.DIRAC, R) - (K - j),
        "DK_plus_J": apply_operator(OperatorTag.DIRAC, K) + J,
        "deltaB": codifferential(B),
    }
    failed = [name for name, form in residuals.items() if not form.is_zero]
    if not B.is_zero:
        if not membership(B, SpaceTag.ANTIEXACT):
            failed.append("B_antiexact")
        if not membership(B, SpaceTag.COEXACT):
            failed.append("B_coexact")
    if failed:
        raise NotASolution(failed)
    return SolveReport(outputs={"R": R, "K": K}, residuals=residuals)


# -- Dirac family ----------------------------------------------------------

def dirac_source_solve(B: Form, approach: int = 1) -> SolveReport:
    """Massless Dirac equation with source: D(alpha + beta) = B.

    Approach 1 solves the wave equation for the upper-grade component beta
    and integrates alpha = H(delta beta + B); approach 2 is the coexact dual.
    Either way the lower-order gauge form (dv resp. delta w) is chosen as the
    minimal correction making the remaining constraint exact, zero whenever
    the canonical representative already satisfies it.
    """
    ctx = B.ctx
    k = B.homogeneous_grade()
    if approach not in (1, 2):
        raise ValueError("approach must be 1 or 2")
    if k is None:
        zero = Form.zero(ctx)
        return SolveReport(
            outputs={"alpha": zero, "beta": zero, "psi": zero},
            residuals={
                "delta_alpha": zero,
                "d_beta": zero,
                "d_alpha_minus_delta_beta_minus_B": zero,
            },
            gauge_notes=["zero source: canonical zero solution"],
        )
    if not 0 < k < ctx.n:
        raise GradeOutOfRange("source must be homogeneous of grade strictly between 0 and n")
    notes = []
    if approach == 1:
        beta = laplace_solve(B.d(), k + 1, side=("d",))
        alpha = homotopy_H(codifferential(beta) + B)
        slack = codifferential(alpha)
        if slack.is_zero:
            notes.append("v = 0 in alpha = H(delta beta + B) + dv")
        else:
            v = laplace_solve(slack, k - 2, side=("delta",))
            alpha = alpha + v.d()
            notes.append("v solved from {laplace v = delta H(delta beta + B), delta v = 0}")
    elif approach == 2:
        alpha = laplace_solve(-codifferential(B), k - 1, side=("delta",))
        beta = cohomotopy_h(alpha.d() - B)
        slack = beta.d()
        if slack.is_zero:
            notes.append("w = 0 in beta = h(d alpha - B) + delta w")
        else:
            w = laplace_solve(slack, k + 2, side=("d",))
            beta = beta + codifferential(w)
            notes.append("w solved from {laplace w = d h(d alpha - B), d w = 0}")
    else:
        raise ValueError("approach must be 1 or 2")
    return SolveReport(
        outputs={"alpha": alpha, "beta": beta, "psi": alpha + beta},
        residuals={
            "delta_alpha": codifferential(alpha),
            "d_beta": beta.d(),
            "d_alpha_minus_delta_beta_minus_B": alpha.d() - codifferential(beta) - B,
        },
        gauge_notes=notes,
    )


class VacuumDiracKind(enum.Enum):
    GAUGE_CASE = "gauge"
    NON_GAUGE_CASE = "non-gauge"
    NOT_A_SOLUTION = "not-a-solution"


@dataclass
class VacuumDiracClass:
    kind: VacuumDiracKind
    residuals: dict[str, Form]
    harmonic_checks: dict[str, bool]


def vacuum_dirac_classify(alpha: Form, beta: Form, k: int | None = None) -> VacuumDiracClass:
    """Classify a two-grade candidate psi = alpha + beta for D psi = 0.

    alpha has grade k-1 and beta grade k+1 for some 0 < k < n; either kind of
    solution is certified by recomputing the defining equations.
    """
    alpha.ctx.require_same(beta.ctx)
    ctx = alpha.ctx
    ga = alpha.homogeneous_grade()
    gb = beta.homogeneous_grade()
    if k is None:
        if ga is not None:
            k = ga + 1
        elif gb is not None:
            k = gb - 1
        else:
            k = 1
    if ga not in (None, k - 1) or gb not in (None, k + 1):
        raise GradeMismatch(f"expected grades {k - 1} and {k + 1}, got {ga} and {gb}")
    if not 0 < k < ctx.n:
        raise GradeMismatch(f"middle grade {k} must satisfy 0 < k < {ctx.n}")

    d_alpha = alpha.d()
    delta_beta = codifferential(beta)
    residuals = {
        "delta_alpha": codifferential(alpha),
        "d_alpha_minus_delta_beta": d_alpha - delta_beta,
        "d_beta": beta.d(),
    }
    if any(not r.is_zero for r in residuals.values()):
        return VacuumDiracClass(VacuumDiracKind.NOT_A_SOLUTION, residuals, {})
    if d_alpha.is_zero and delta_beta.is_zero:
        checks = {
            "alpha_harmonic": membership(alpha, SpaceTag.HODGE_HARMONIC),
            "beta_harmonic": membership(beta, SpaceTag.HODGE_HARMONIC),
        }
        return VacuumDiracClass(VacuumDiracKind.GAUGE_CASE, residuals, checks)
    checks = {
        "d_alpha_harmonic": membership(d_alpha, SpaceTag.HODGE_HARMONIC),
        "delta_beta_harmonic": membership(delta_beta, SpaceTag.HODGE_HARMONIC),
    }
    return VacuumDiracClass(VacuumDiracKind.NON_GAUGE_CASE, residuals, checks)


def massive_dirac_check(alpha: Form, beta: Form, v: Form, w: Form) -> SolveReport:
    """Residual verifier for the two-grade massive Dirac system.

    Over polynomial coefficients the eigen-equations force the zero solution,
    so this operation verifies rather than solves: it reports the four system
    equations, the two integral-form equations for the given v and w, and the
    two eigen-equations.
    """
    alpha.ctx.require_same(beta.ctx)
    ga = alpha.homogeneous_grade()
    gb = beta.homogeneous_grade()
    if ga is not None and gb is not None and gb != ga + 1:
        raise GradeMismatch(f"beta grade {gb} must be alpha grade {ga} + 1")
    if ga is not None and ga < 1:
        raise GradeMismatch("alpha grade must be at least 1")
    return SolveReport(
        outputs={"alpha": alpha, "beta": beta},
        residuals={
            "delta_alpha": codifferential(alpha),
            "delta_beta_minus_alpha": codifferential(beta) - alpha,
            "d_alpha_plus_beta": alpha.d() + beta,
            "d_beta": beta.d(),
            "alpha_plus_H_beta_minus_dv": alpha + homotopy_H(beta) - v.d(),
            "beta_minus_h_alpha_minus_delta_w": beta - cohomotopy_h(alpha) - codifferential(w),
            "laplace_alpha_minus_alpha": laplace_beltrami(alpha) - alpha,
            "laplace_beta_minus_beta": laplace_beltrami(beta) - beta,
        },
    )
