"""Randomized exact-identity suite for the operator kernel.

Every check below is an algebraic identity that must hold bit-exactly on
polynomial forms; a single failing sample falsifies the kernel.  The suite
doubles as the CLI `identities` subcommand and as the acceptance harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .forms import interior
from .hodge import codifferential, hodge_star, hodge_star_inv, musical_flat, musical_sharp
from .homotopy import (
    DecompositionMode,
    SpaceTag,
    center_pullback,
    center_top_eval,
    cohomotopy_h,
    decompose,
    homotopy_H,
    k_field,
    membership,
)
from .polyring import Context
from .randforms import random_form, random_homogeneous, sample_rng


def _dh(w):  # delta h
    return codifferential(cohomotopy_h(w))


def _hd(w):  # h delta
    return cohomotopy_h(codifferential(w))


def _check_d2(ctx, w, rng):
    return w.d().d().is_zero


def _check_delta2(ctx, w, rng):
    return codifferential(codifferential(w)).is_zero


def _check_H2(ctx, w, rng):
    return homotopy_H(homotopy_H(w)).is_zero


def _check_HdH(ctx, w, rng):
    return homotopy_H(homotopy_H(w).d()) == homotopy_H(w)


def _check_dHd(ctx, w, rng):
    return homotopy_H(w.d()).d() == w.d()


def _check_iK_H(ctx, w, rng):
    return interior(k_field(ctx), homotopy_H(w)).is_zero


def _check_H_iK(ctx, w, rng):
    return homotopy_H(interior(k_field(ctx), w)).is_zero


def _check_homotopy_invariance(ctx, w, rng):
    return homotopy_H(w).d() + homotopy_H(w.d()) == w - center_pullback(w)


def _check_h2(ctx, w, rng):
    return cohomotopy_h(cohomotopy_h(w)).is_zero


def _check_delta_h_delta(ctx, w, rng):
    return codifferential(cohomotopy_h(codifferential(w))) == codifferential(w)


def _check_h_delta_h(ctx, w, rng):
    return cohomotopy_h(codifferential(cohomotopy_h(w))) == cohomotopy_h(w)


def _check_cohomotopy_invariance(ctx, w, rng):
    return _dh(w) + _hd(w) == w - center_top_eval(w)


def _check_kwedge_h(ctx, w, rng):
    return musical_flat(k_field(ctx)).wedge(cohomotopy_h(w)).is_zero


def _check_h_kwedge(ctx, w, rng):
    return cohomotopy_h(musical_flat(k_field(ctx)).wedge(w)).is_zero


def _check_insertion_vs_star(ctx, w, rng):
    alpha = random_homogeneous(ctx, rng, 1)
    return interior(musical_sharp(alpha), hodge_star(w)) == hodge_star(w.wedge(alpha))


def _check_star_star(ctx, w, rng):
    for r in w.grades():
        part = w.grade_select(r)
        expected = part.scale(ctx.sig * (-1) ** (r * (ctx.n - r)))
        if hodge_star(hodge_star(part)) != expected:
            return False
    return True


def _check_star_inv(ctx, w, rng):
    return hodge_star_inv(hodge_star(w)) == w and hodge_star(hodge_star_inv(w)) == w


def _check_h_sign_form(ctx, w, rng):
    # h restricted to grade r equals (-1)^(r+1) star_inv H star
    for r in w.grades():
        part = w.grade_select(r)
        alt = hodge_star_inv(homotopy_H(hodge_star(part))).scale((-1) ** (r + 1))
        if cohomotopy_h(part) != alt:
            return False
    return True


def _check_projectors(ctx, w, rng):
    return _dh(_dh(w)) == _dh(w) and _hd(_hd(w)) == _hd(w)


def _check_decompose_exact(ctx, w, rng):
    dec = decompose(w, DecompositionMode.EXACT_ANTIEXACT)
    return (
        dec.first + dec.second == w
        and membership(dec.first, SpaceTag.EXACT)
        and membership(dec.second, SpaceTag.ANTIEXACT)
    )


def _check_decompose_coexact(ctx, w, rng):
    dec = decompose(w, DecompositionMode.COEXACT_ANTICOEXACT)
    return (
        dec.first + dec.second == w
        and membership(dec.first, SpaceTag.COEXACT)
        and membership(dec.second, SpaceTag.ANTICOEXACT)
    )


def _check_direct_sum_trivial(ctx, w, rng):
    # only the zero form sits in both halves of either decomposition
    in_E_and_A = membership(w, SpaceTag.EXACT) and membership(w, SpaceTag.ANTIEXACT)
    in_C_and_Y = membership(w, SpaceTag.COEXACT) and membership(w, SpaceTag.ANTICOEXACT)
    if w.is_zero:
        return in_E_and_A and in_C_and_Y
    return not in_E_and_A and not in_C_and_Y


def _check_duality(ctx, w, rng):
    # star maps closed to coclosed and antiexact to anticoexact
    closed = homotopy_H(w).d() + center_pullback(w)
    antiexact = homotopy_H(w.d())
    return membership(hodge_star(closed), SpaceTag.COEXACT) and membership(
        hodge_star(antiexact), SpaceTag.ANTICOEXACT
    )


CHECKS: dict[str, Callable] = {
    "d2_zero": _check_d2,
    "delta2_zero": _check_delta2,
    "H2_zero": _check_H2,
    "HdH_eq_H": _check_HdH,
    "dHd_eq_d": _check_dHd,
    "iK_after_H_zero": _check_iK_H,
    "H_after_iK_zero": _check_H_iK,
    "homotopy_invariance": _check_homotopy_invariance,
    "h2_zero": _check_h2,
    "delta_h_delta_eq_delta": _check_delta_h_delta,
    "h_delta_h_eq_h": _check_h_delta_h,
    "cohomotopy_invariance": _check_cohomotopy_invariance,
    "kwedge_after_h_zero": _check_kwedge_h,
    "h_after_kwedge_zero": _check_h_kwedge,
    "insertion_vs_star": _check_insertion_vs_star,
    "star_star_law": _check_star_star,
    "star_inverse_law": _check_star_inv,
    "h_sign_form": _check_h_sign_form,
    "projector_idempotence": _check_projectors,
    "decompose_exact_antiexact": _check_decompose_exact,
    "decompose_coexact_anticoexact": _check_decompose_coexact,
    "direct_sum_triviality": _check_direct_sum_trivial,
    "star_duality": _check_duality,
}


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    samples: int
    first_failure: int | None = None


def run_identities(ctx: Context, samples: int = 100, max_degree: int = 3,
                   seed: int = 0, names=None) -> list[IdentityResult]:
    chosen = list(CHECKS) if names is None else list(names)
    results = []
    for cidx, name in enumerate(chosen):
        check = CHECKS[name]
        failure = None
        for i in range(samples):
            rng = sample_rng(seed, cidx * samples + i)
            w = random_form(ctx, rng, max_degree)
            if not check(ctx, w, rng):
                failure = i
                break
        results.append(IdentityResult(name, failure is None, samples, failure))
    return results
