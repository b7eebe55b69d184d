"""Hochschild cochain calculus for the trivial bimodule given by the counit.

The coboundary of an n-cochain f is

    ∂f(a₁,…,aₙ₊₁) = δ(a₁)f(a₂,…,aₙ₊₁)
                    + Σᵢ (−1)ⁱ f(a₁,…,aᵢaᵢ₊₁,…,aₙ₊₁)
                    + (−1)ⁿ⁺¹ f(a₁,…,aₙ)δ(aₙ₊₁)

with the signs taken verbatim, no renormalization.  The predicates below
classify cochains as normalized (value 0 on the all-units tuple, checked
exactly), commuting (f ⋆ μ⁽ⁿ⁾ = μ⁽ⁿ⁾ ⋆ f, sampled), cocycle (∂f = 0,
sampled) and hermitian (f̃ = ±f with the ceil(n/2) parity sign, sampled).
Sampling never proves anything; it bounds residuals on a seeded set of
basis tuples at a configured tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import Element, antipode_key, star_key
from .convolution import (
    Cochain,
    functional_conv_map,
    map_conv_functional,
    mu_n_map,
    tuple_counit,
)
from .report import Report

DEFAULT_TOL = 1e-8
DEFAULT_SAMPLES = 200


def coboundary(f: Cochain, name=None) -> Cochain:
    """The Hochschild coboundary ∂f, evaluated lazily per basis tuple."""
    inst = f.instance
    n = f.arity

    def rule(keys):
        total = tuple_counit(inst, keys[:1]) * f.eval_mixed(keys[1:])
        sign = 1.0
        for i in range(1, n + 1):
            sign = -sign
            merged = Element(inst, dict(inst.mul_terms(keys[i - 1], keys[i])))
            args = keys[: i - 1] + (merged,) + keys[i + 1 :]
            total += sign * f.eval_mixed(args)
        total += -sign * f.eval_mixed(keys[:n]) * inst.counit_key(keys[n])
        return total

    return Cochain(inst, n + 1, rule, name or f"d({f.name})")


def hermitian_conjugate(f: Cochain, name=None) -> Cochain:
    """f̃(a₁⊗…⊗aₙ) = conj f(aₙ*⊗…⊗a₁*)."""
    inst = f.instance
    inst.require_star()

    def rule(keys):
        starred = tuple(star_key(inst, k) for k in reversed(keys))
        return f.eval_mixed(starred).conjugate()

    return Cochain(inst, f.arity, rule, name or f"~{f.name}")


def hermitian_sign(arity: int) -> int:
    """+1 when ceil(n/2) is odd (n = 1,2,5,6,…), −1 otherwise."""
    return 1 if math.ceil(arity / 2) % 2 == 1 else -1


def compose_antipode_flip(f: Cochain, name=None) -> Cochain:
    """f∘(S⊗S)∘τ on pairs: (a,b) ↦ f(S(b), S(a))."""
    inst = f.instance
    inst.require_antipode()
    if f.arity != 2:
        raise ValueError("compose_antipode_flip expects an arity-2 cochain")

    def rule(keys):
        return f.eval_mixed((antipode_key(inst, keys[1]), antipode_key(inst, keys[0])))

    return Cochain(inst, 2, rule, name or f"({f.name}∘(S(x)S)∘tau)")


# -- predicates ---------------------------------------------------------------


def is_normalized(f: Cochain) -> bool:
    return f.is_normalized


def commuting_residual(f: Cochain, sampler, samples: int = DEFAULT_SAMPLES) -> float:
    """max ‖(f⋆μ⁽ⁿ⁾ − μ⁽ⁿ⁾⋆f)(u)‖∞ over sampled basis tuples."""
    mu_n = mu_n_map(f.instance, f.arity)
    lhs = functional_conv_map(f, mu_n)
    rhs = map_conv_functional(mu_n, f)
    res = 0.0
    for _ in range(samples):
        keys = sampler.keys(f.arity)
        res = max(res, (lhs.value(keys) - rhs.value(keys)).norm_inf())
    return res


def is_commuting(f: Cochain, sampler, samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL) -> bool:
    return commuting_residual(f, sampler.spawn(11), samples) <= tol


def cocycle_residual(f: Cochain, sampler, samples: int = DEFAULT_SAMPLES) -> float:
    df = coboundary(f)
    res = 0.0
    for _ in range(samples):
        res = max(res, abs(df.value(sampler.keys(f.arity + 1))))
    return res


def is_cocycle(f: Cochain, sampler, samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL) -> bool:
    return cocycle_residual(f, sampler.spawn(13), samples) <= tol


def hermitian_residual(f: Cochain, sampler, samples: int = DEFAULT_SAMPLES) -> float:
    sign = hermitian_sign(f.arity)
    tilde = hermitian_conjugate(f)
    res = 0.0
    for _ in range(samples):
        keys = sampler.keys(f.arity)
        res = max(res, abs(tilde.value(keys) - sign * f.value(keys)))
    return res


def is_hermitian(f: Cochain, sampler, samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL) -> bool:
    return hermitian_residual(f, sampler.spawn(17), samples) <= tol


@dataclass
class CochainClassifier:
    """Outcome of the generator checks; flags are sampled, not proven."""

    normalized: bool
    commuting: bool
    cocycle: bool
    hermitian: bool | None = None
    coboundary_witness: Cochain | None = None
    witness_matches: bool | None = None
    residuals: dict = field(default_factory=dict)

    def is_generator(self, require_star: bool = False) -> bool:
        ok = self.normalized and self.commuting and self.cocycle
        if require_star:
            ok = ok and bool(self.hermitian)
        return ok

    def to_dict(self) -> dict:
        return {
            "normalized": self.normalized,
            "commuting": self.commuting,
            "cocycle": self.cocycle,
            "hermitian": self.hermitian,
            "has_witness": self.coboundary_witness is not None,
            "witness_matches": self.witness_matches,
            "residuals": dict(sorted(self.residuals.items())),
        }


class GeneratorValidationError(Exception):
    """A cochain offered as a deformation generator failed validation."""


def validate_generator(
    L: Cochain,
    sampler,
    require_star: bool = False,
    witness: Cochain | None = None,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> CochainClassifier:
    """Classify an arity-2 cochain as deformation generator.

    Never raises on failed checks; callers inspect the flags.  A witness
    ψ, when supplied, is accepted when ∂ψ matches L on the samples.
    """
    if L.arity != 2:
        raise ValueError("deformation generators have arity 2")
    if require_star:
        L.instance.require_star()

    residuals: dict = {}
    normalized = is_normalized(L)
    c_res = commuting_residual(L, sampler.spawn(11), samples)
    residuals["commuting"] = c_res
    z_res = cocycle_residual(L, sampler.spawn(13), samples)
    residuals["cocycle"] = z_res

    hermitian = None
    if L.instance.has_star:
        h_res = hermitian_residual(L, sampler.spawn(17), samples)
        residuals["hermitian"] = h_res
        hermitian = h_res <= tol

    witness_matches = None
    if witness is not None:
        dw = coboundary(witness)
        w_sampler = sampler.spawn(19)
        w_res = 0.0
        for _ in range(samples):
            keys = w_sampler.keys(2)
            w_res = max(w_res, abs(dw.value(keys) - L.value(keys)))
        residuals["witness"] = w_res
        witness_matches = w_res <= tol

    return CochainClassifier(
        normalized=normalized,
        commuting=c_res <= tol,
        cocycle=z_res <= tol,
        hermitian=hermitian,
        coboundary_witness=witness if witness_matches else None,
        witness_matches=witness_matches,
        residuals=residuals,
    )


def subcomplex_stability(
    f: Cochain,
    sampler,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> Report:
    """Check that ∂ preserves the normalized / commuting / hermitian classes.

    Each implication is reported: whenever f tests inside a class, ∂f must
    test inside the class of the next arity (with the parity sign flip for
    the hermitian one).
    """
    report = Report(name=f"subcomplex_stability:{f.name}")
    df = coboundary(f)

    if is_normalized(f):
        report.add(
            "normalized_stable",
            "f normalized ⇒ ∂f normalized (exact)",
            1,
            abs(df.value((f.instance.unit,) * df.arity)),
            0.0,
        )
    else:
        report.add_flag("normalized_stable", "f not normalized; nothing to check", True)

    c_res = commuting_residual(f, sampler.spawn(31), samples)
    if c_res <= tol:
        dc_res = commuting_residual(df, sampler.spawn(37), samples)
        report.add("commuting_stable", "f commuting ⇒ ∂f commuting", samples, dc_res, tol)
        report.extras["commuting_residual_f"] = c_res
        report.extras["commuting_residual_df"] = dc_res
    else:
        report.add_flag("commuting_stable", "f not commuting; nothing to check", True)

    if f.instance.has_star:
        h_res = hermitian_residual(f, sampler.spawn(41), samples)
        if h_res <= tol:
            dh_res = hermitian_residual(df, sampler.spawn(43), samples)
            report.add(
                "hermitian_stable",
                "f in the hermitian class ⇒ ∂f in the next one (sign rule by ceil(n/2) parity)",
                samples,
                dh_res,
                tol,
            )
        else:
            report.add_flag("hermitian_stable", "f not in the hermitian class; nothing to check", True)

    dd = coboundary(df)
    dd_sampler = sampler.spawn(47)
    dd_res = 0.0
    for _ in range(samples):
        dd_res = max(dd_res, abs(dd.value(dd_sampler.keys(f.arity + 2))))
    report.add("d_squared_zero", "∂∘∂ = 0", samples, dd_res, tol)

    return report
