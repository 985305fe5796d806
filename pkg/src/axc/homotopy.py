"""Linear homotopy machinery on a star-shaped chart.

The homotopy operator H inverts d on closed forms; the cohomotopy operator
h = eta o star_inv o H o star inverts the codifferential on coclosed forms
below top grade.  Together they give two direct-sum decompositions of the
space of forms:

    exact (+) antiexact        via  dH + Hd = I - (center pullback)
    coexact (+) anticoexact    via  delta h + h delta = I - (top-grade
                                    center evaluation)

H has a closed monomial form: on a monomial coefficient of total degree m
sitting on a grade-k basis form, it contracts with the radial field and
divides by (m + k).  h is kept as the literal star-conjugated composite so
the star sign conventions can never drift apart.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import GradeOutOfRange, NoCopotential, NotClosed, NotCoclosed
from .forms import Form, VectorField, interior
from .hodge import codifferential, hodge_star, hodge_star_inv, musical_flat
from .polyring import Context, Poly


class SpaceTag(enum.Enum):
    EXACT = "E"
    ANTIEXACT = "A"
    COEXACT = "C"
    ANTICOEXACT = "Y"
    HODGE_HARMONIC = "harmonic"
    HODGE_ANTIHARMONIC = "antiharmonic"


class DecompositionMode(enum.Enum):
    EXACT_ANTIEXACT = "exact"
    COEXACT_ANTICOEXACT = "coexact"


@dataclass(frozen=True)
class Decomposition:
    """first + second = input exactly; first is the closed-side part."""

    first: Form
    second: Form
    mode: DecompositionMode


def k_field(ctx: Context) -> VectorField:
    """The radial field with components y_i; vanishes at the star center."""
    return VectorField(ctx, [Poly.variable(ctx.n, i) for i in range(1, ctx.n + 1)])


def homotopy_H(omega: Form) -> Form:
    ctx = omega.ctx
    kf = k_field(ctx)
    out = Form.zero(ctx)
    for k, idx_map in omega.components.items():
        if k == 0:
            continue
        for idx, poly in idx_map.items():
            contracted = interior(kf, Form.basis(ctx, idx))
            for exps, coef in poly.terms.items():
                weight = Fraction(coef, sum(exps) + k)
                out = out + contracted.mul_poly(Poly.monomial(ctx.n, exps, weight))
    return out


def cohomotopy_h(omega: Form) -> Form:
    return hodge_star_inv(homotopy_H(hodge_star(omega))).eta()


def center_pullback(omega: Form) -> Form:
    """s*_{x0}: kills positive grades, freezes the 0-form part at the center."""
    return omega.grade_select(0).at_center()


def center_top_eval(omega: Form) -> Form:
    """S_{x0}: nonzero only on the top grade, which it freezes at the center."""
    return omega.grade_select(omega.ctx.n).at_center()


def decompose(omega: Form, mode: DecompositionMode) -> Decomposition:
    if mode is DecompositionMode.EXACT_ANTIEXACT:
        closed = homotopy_H(omega).d() + center_pullback(omega)
        rest = homotopy_H(omega.d())
    else:
        closed = codifferential(cohomotopy_h(omega)) + center_top_eval(omega)
        rest = cohomotopy_h(codifferential(omega))
    return Decomposition(closed, rest, mode)


def membership(omega: Form, tag: SpaceTag) -> bool:
    if tag is SpaceTag.EXACT:
        return omega.d().is_zero
    if tag is SpaceTag.COEXACT:
        return codifferential(omega).is_zero
    if tag is SpaceTag.ANTIEXACT:
        return interior(k_field(omega.ctx), omega).is_zero and omega.at_center().is_zero
    if tag is SpaceTag.ANTICOEXACT:
        kflat = musical_flat(k_field(omega.ctx))
        return kflat.wedge(omega).is_zero and omega.at_center().is_zero
    if tag is SpaceTag.HODGE_HARMONIC:
        return membership(omega, SpaceTag.EXACT) and membership(omega, SpaceTag.COEXACT)
    if tag is SpaceTag.HODGE_ANTIHARMONIC:
        return membership(omega, SpaceTag.ANTIEXACT) and membership(omega, SpaceTag.ANTICOEXACT)
    raise ValueError(f"unknown space tag {tag!r}")


def potential(omega: Form) -> Form:
    """The canonical (antiexact) potential H(omega) of a closed form.

    Gauge freedom -- adding any closed form -- is the caller's concern.
    """
    grade = omega.homogeneous_grade()
    if grade is None:
        return Form.zero(omega.ctx)
    if grade == 0:
        raise GradeOutOfRange("closed 0-forms are constants; no 1-step potential")
    if not omega.d().is_zero:
        raise NotClosed("form is not closed")
    return homotopy_H(omega)


def copotential(omega: Form) -> Form:
    """The canonical copotential h(omega) of a coclosed form of grade < n."""
    grade = omega.homogeneous_grade()
    if grade is None:
        return Form.zero(omega.ctx)
    if grade == omega.ctx.n:
        raise NoCopotential("top-grade forms have no copotential")
    if not codifferential(omega).is_zero:
        raise NotCoclosed("form is not coclosed")
    return cohomotopy_h(omega)


def anticoexact_wedge_factor(omega: Form) -> Form:
    """For anticoexact omega, a form alpha with K^flat ^ alpha = omega.

    Constructive version of the structure result that anticoexact forms are
    K^flat-multiples.  Members satisfy omega = h(delta(omega)); replaying the
    h chain on star(delta(omega)) term by term shows each contraction
    i_K(... dx^I) turns into a wedge with K^flat, leaving the H-weighted
    coefficient as the factor: alpha = -star_inv of the weighted terms.
    """
    ctx = omega.ctx
    beta = hodge_star(codifferential(omega))
    out = Form.zero(ctx)
    for k, idx_map in beta.components.items():
        if k == 0:
            continue
        for idx, poly in idx_map.items():
            weighted = Poly.zero(ctx.n)
            for exps, coef in poly.terms.items():
                weighted = weighted + Poly.monomial(ctx.n, exps, Fraction(coef, sum(exps) + k))
            out = out - hodge_star_inv(Form.basis(ctx, idx, weighted))
    return out
