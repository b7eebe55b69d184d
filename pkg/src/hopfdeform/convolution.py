"""Convolution calculus: functionals, the star product, and its exponentials.

For maps R, S from a coalgebra into an algebra the convolution is
``R ⋆ S = m∘(R⊗S)∘Δ``.  Scalar-valued functionals on the n-th tensor
power convolve through the tensor-power coproduct (for n = 2 this is the
coproduct Λ of the tensor-square bialgebra); the counit is the ⋆-unit.

Termination of the convolution exponential ``e_⋆^{tf}`` is certified per
instance kind rather than analytically.  This is the central engineering
decision of the whole package:

* ``GROUPLIKE_BASIS``: every basis tuple u is grouplike for the
  tensor-power coproduct, so ``f^{⋆k}(u) = f(u)^k`` and the exponential
  collapses to the scalar ``exp(t·f(u))``.
* ``GRADED_CONNECTED``: a normalized functional vanishes on the unique
  degree-0 basis tuple, so ``f^{⋆k}(u) = 0`` exactly for k above the
  total degree of u and the series is a finite sum (evaluated as a
  polynomial in t whose coefficients are cached per tuple).
* ``FINITE``: only the zero functional carries a certificate; its
  exponential is the counit.  Anything else is refused.

Both strategies are defined for every real t, so negative deformation
parameters need no special treatment anywhere downstream.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

from .core import (
    AlgebraError,
    BialgebraInstance,
    CapabilityMissingError,
    Element,
    InstanceMismatchError,
    Kind,
    TensorElement,
    _acc,
    _same_instance,
    mul,
)


class NormalizationError(AlgebraError):
    """A degree-truncated exponential needs a normalized functional."""


def tuple_comul_terms(instance: BialgebraInstance, keys: tuple):
    """Coproduct expansion of a basis tuple in the rank-n tensor power.

    Returns ``(left_tuple, right_tuple, coeff)`` triples; for n = 1 this
    is the plain coproduct, for n = 2 the Λ expansion.
    """
    cache = instance._tuple_comul_cache
    hit = cache.get(keys)
    if hit is not None:
        return hit
    parts = [instance.comul_terms(k) for k in keys]
    out = []
    for combo in itertools.product(*parts):
        left = tuple(t[0] for t in combo)
        right = tuple(t[1] for t in combo)
        coeff = 1.0 + 0j
        for t in combo:
            coeff *= t[2]
        out.append((left, right, coeff))
    out = tuple(out)
    cache[keys] = out
    return out


def tuple_counit(instance: BialgebraInstance, keys: tuple) -> complex:
    c = 1.0 + 0j
    for k in keys:
        c *= instance.counit_key(k)
    return c


def tuple_degree(instance: BialgebraInstance, keys: tuple) -> int:
    return sum(instance.degree_key(k) for k in keys)


class Cochain:
    """Scalar-valued multilinear functional given by a rule on basis tuples.

    Arity 0 is a single scalar (the empty tuple).  Values are memoized per
    basis tuple; rules must be pure.
    """

    __slots__ = ("instance", "arity", "name", "_rule", "_cache", "_pow_cache", "_exp_cache", "_finite_zero")

    def __init__(self, instance, arity: int, rule, name: str = "f"):
        if arity < 0:
            raise AlgebraError("cochain arity must be >= 0")
        self.instance = instance
        self.arity = arity
        self.name = name
        self._rule = rule
        self._cache: dict = {}
        self._pow_cache: dict = {}
        self._exp_cache: dict = {}
        self._finite_zero: bool | None = None

    def value(self, keys: tuple) -> complex:
        keys = tuple(keys)
        hit = self._cache.get(keys)
        if hit is None:
            hit = complex(self._rule(keys))
            self._cache[keys] = hit
        return hit

    def eval_mixed(self, args) -> complex:
        """Evaluate with each slot either a basis key or an :class:`Element`."""
        slots = []
        for a in args:
            if isinstance(a, Element):
                slots.append(tuple(a.terms.items()))
            else:
                slots.append(((a, 1.0 + 0j),))
        total = 0j
        for combo in itertools.product(*slots):
            keys = tuple(k for k, _ in combo)
            w = 1.0 + 0j
            for _, c in combo:
                w *= c
            if w == 0:
                continue
            total += w * self.value(keys)
        return total

    def on_tensor(self, u: TensorElement) -> complex:
        if u.rank != self.arity:
            raise InstanceMismatchError(f"cochain arity {self.arity} vs tensor rank {u.rank}")
        return sum((c * self.value(keys) for keys, c in u.terms.items()), 0j)

    def __call__(self, *args) -> complex:
        """Flexible evaluation: basis keys, Elements, or one TensorElement."""
        if len(args) == 1 and isinstance(args[0], TensorElement):
            return self.on_tensor(args[0])
        if len(args) != self.arity:
            raise AlgebraError(f"cochain of arity {self.arity} got {len(args)} arguments")
        return self.eval_mixed(args)

    @property
    def is_normalized(self) -> bool:
        return self.value((self.instance.unit,) * self.arity) == 0

    def __repr__(self):
        return f"Cochain({self.name!r}, arity={self.arity}, on {self.instance.name!r})"


def cochain_add(f: Cochain, g: Cochain, name=None) -> Cochain:
    _check_pair(f, g)
    return Cochain(f.instance, f.arity, lambda ks: f.value(ks) + g.value(ks),
                   name or f"({f.name}+{g.name})")


def cochain_sub(f: Cochain, g: Cochain, name=None) -> Cochain:
    _check_pair(f, g)
    return Cochain(f.instance, f.arity, lambda ks: f.value(ks) - g.value(ks),
                   name or f"({f.name}-{g.name})")


def cochain_scale(c, f: Cochain, name=None) -> Cochain:
    c = complex(c)
    return Cochain(f.instance, f.arity, lambda ks: c * f.value(ks), name or f"({c}*{f.name})")


def counit_cochain(instance: BialgebraInstance, arity: int) -> Cochain:
    return Cochain(instance, arity, lambda ks: tuple_counit(instance, ks), name="delta^" + str(arity))


def zero_cochain(instance: BialgebraInstance, arity: int) -> Cochain:
    return Cochain(instance, arity, lambda ks: 0j, name="0")


def tensor_cochain(f: Cochain, g: Cochain, name=None) -> Cochain:
    """(f⊗g)(a1..an, b1..bm) = f(a1..an)·g(b1..bm)."""
    _same_instance(f, g)
    n = f.arity
    return Cochain(
        f.instance,
        f.arity + g.arity,
        lambda ks: f.value(ks[:n]) * g.value(ks[n:]),
        name or f"({f.name}(x){g.name})",
    )


def compose_mul(f: Cochain, name=None) -> Cochain:
    """f∘μ as a functional on pairs (arity of f must be 1)."""
    if f.arity != 1:
        raise AlgebraError("compose_mul expects an arity-1 functional")
    inst = f.instance

    def rule(ks):
        total = 0j
        for k, w in inst.mul_terms(ks[0], ks[1]):
            total += w * f.value((k,))
        return total

    return Cochain(inst, 2, rule, name or f"({f.name}∘mul)")


def _check_pair(f: Cochain, g: Cochain) -> None:
    _same_instance(f, g)
    if f.arity != g.arity:
        raise InstanceMismatchError(f"mixed cochain arities {f.arity} and {g.arity}")


def convolve_functionals(f: Cochain, g: Cochain, name=None) -> Cochain:
    """(f ⋆ g)(u) = Σ f(u₍₁₎) g(u₍₂₎) over the tensor-power coproduct."""
    _check_pair(f, g)
    inst = f.instance

    def rule(keys):
        total = 0j
        for left, right, c in tuple_comul_terms(inst, keys):
            v = f.value(left)
            if v == 0:
                continue
            total += c * v * g.value(right)
        return total

    return Cochain(inst, f.arity, rule, name or f"({f.name}*{g.name})")


# -- convolution powers and exponentials --------------------------------------


@dataclass(frozen=True)
class ConvExpPlan:
    strategy: str  # closed_form_grouplike | degree_truncated | zero_functional


def plan_conv_exp(f: Cochain) -> ConvExpPlan:
    inst = f.instance
    if inst.kind is Kind.GROUPLIKE_BASIS:
        return ConvExpPlan("closed_form_grouplike")
    if inst.kind is Kind.GRADED_CONNECTED:
        if not f.is_normalized:
            raise NormalizationError(
                f"degree-truncated exponential needs a normalized functional, got {f.name!r}"
            )
        return ConvExpPlan("degree_truncated")
    if _finite_zero_certificate(f):
        return ConvExpPlan("zero_functional")
    raise CapabilityMissingError(
        f"no termination certificate for exp of {f.name!r} on finite instance {inst.name!r}"
    )


def _finite_zero_certificate(f: Cochain) -> bool:
    if f._finite_zero is None:
        keys = list(f.instance.basis_keys())
        f._finite_zero = all(
            f.value(tup) == 0 for tup in itertools.product(keys, repeat=f.arity)
        )
    return f._finite_zero


def conv_power(f: Cochain, k: int, keys: tuple) -> complex:
    """k-th convolution power f^{⋆k} on a basis tuple (f^{⋆0} is the counit)."""
    if k == 0:
        return tuple_counit(f.instance, keys)
    if k == 1:
        return f.value(keys)
    keys = tuple(keys)
    memo = f._pow_cache
    hit = memo.get((k, keys))
    if hit is not None:
        return hit
    total = 0j
    for left, right, c in tuple_comul_terms(f.instance, keys):
        v = f.value(left)
        if v == 0:
            continue
        total += c * v * conv_power(f, k - 1, right)
    memo[(k, keys)] = total
    return total


def conv_exp_coeffs(f: Cochain, keys: tuple) -> tuple:
    """Taylor coefficients in t of e_⋆^{tf}(u) for a graded connected instance.

    The list has length deg(u)+1; higher convolution powers vanish exactly.
    """
    keys = tuple(keys)
    hit = f._exp_cache.get(keys)
    if hit is not None:
        return hit
    d = tuple_degree(f.instance, keys)
    coeffs = tuple(conv_power(f, k, keys) / math.factorial(k) for k in range(d + 1))
    f._exp_cache[keys] = coeffs
    return coeffs


def conv_exp(f: Cochain, t: float, u, plan: ConvExpPlan | None = None) -> complex:
    """Evaluate ``e_⋆^{tf}`` at u (a basis tuple or a TensorElement)."""
    if isinstance(u, TensorElement):
        if u.rank != f.arity:
            raise InstanceMismatchError(f"cochain arity {f.arity} vs tensor rank {u.rank}")
        if plan is None:
            plan = plan_conv_exp(f)
        return sum((c * conv_exp(f, t, keys, plan) for keys, c in u.terms.items()), 0j)
    keys = tuple(u)
    if plan is None:
        plan = plan_conv_exp(f)
    if plan.strategy == "closed_form_grouplike":
        return cmath.exp(t * f.value(keys))
    if plan.strategy == "degree_truncated":
        total = 0j
        for c in reversed(conv_exp_coeffs(f, keys)):
            total = total * t + c
        return total
    return tuple_counit(f.instance, keys)


def conv_exp_functional(f: Cochain, t: float, name=None) -> Cochain:
    plan = plan_conv_exp(f)
    return Cochain(
        f.instance,
        f.arity,
        lambda ks: conv_exp(f, t, ks, plan),
        name or f"exp({t}*{f.name})",
    )


# -- linear maps into the algebra ---------------------------------------------


class LinMap:
    """Linear map from the rank-n tensor power into the algebra.

    Given by a rule on basis tuples returning an :class:`Element`, memoized
    and extended linearly.
    """

    __slots__ = ("instance", "rank", "name", "_rule", "_cache")

    def __init__(self, instance, rank: int, rule, name: str = "A"):
        if rank < 1:
            raise AlgebraError("LinMap rank must be >= 1")
        self.instance = instance
        self.rank = rank
        self.name = name
        self._rule = rule
        self._cache: dict = {}

    def value(self, keys: tuple) -> Element:
        keys = tuple(keys)
        hit = self._cache.get(keys)
        if hit is None:
            hit = self._rule(keys)
            self._cache[keys] = hit
        return hit

    def __call__(self, x) -> Element:
        if isinstance(x, Element):
            if self.rank != 1:
                raise InstanceMismatchError(f"rank-{self.rank} map applied to an element")
            terms = x.terms
            items = [((k,), c) for k, c in terms.items()]
        elif isinstance(x, TensorElement):
            if self.rank != x.rank:
                raise InstanceMismatchError(f"rank-{self.rank} map applied to rank-{x.rank} tensor")
            items = list(x.terms.items())
        else:
            raise AlgebraError(f"cannot apply map to {type(x).__name__}")
        acc: dict = {}
        for keys, c in items:
            for k, w in self.value(keys).terms.items():
                _acc(acc, k, c * w)
        return Element(self.instance, acc)

    def __repr__(self):
        return f"LinMap({self.name!r}, rank={self.rank}, on {self.instance.name!r})"


def identity_map(instance: BialgebraInstance) -> LinMap:
    return LinMap(instance, 1, lambda ks: Element(instance, {ks[0]: 1.0}), name="id")


def antipode_map(instance: BialgebraInstance) -> LinMap:
    instance.require_antipode()
    return LinMap(instance, 1, lambda ks: Element(instance, dict(instance.antipode_terms(ks[0]))), name="S")


def unit_counit_map(instance: BialgebraInstance, rank: int = 1) -> LinMap:
    """The map u ↦ δ(u)·1 (the ⋆-neutral element for maps)."""
    return LinMap(
        instance,
        rank,
        lambda ks: Element(instance, {instance.unit: tuple_counit(instance, ks)}),
        name="unit∘delta",
    )


def mu_n_map(instance: BialgebraInstance, n: int) -> LinMap:
    """Left-to-right product of n tensor slots."""

    def rule(keys):
        out = Element(instance, {keys[0]: 1.0})
        for k in keys[1:]:
            out = mul(out, Element(instance, {k: 1.0}, _clean=False))
        return out

    return LinMap(instance, n, rule, name=f"mul^{n}")


def convolve_maps(A: LinMap, B: LinMap, product=None, name=None) -> LinMap:
    """A ⋆ B = product∘(A⊗B)∘Δ, with the undeformed product by default."""
    _same_instance(A, B)
    if A.rank != B.rank:
        raise InstanceMismatchError(f"mixed map ranks {A.rank} and {B.rank}")
    prod = product or mul
    inst = A.instance

    def rule(keys):
        acc: dict = {}
        for left, right, c in tuple_comul_terms(inst, keys):
            e = prod(A.value(left), B.value(right))
            for k, w in e.terms.items():
                _acc(acc, k, c * w)
        return Element(inst, acc)

    return LinMap(inst, A.rank, rule, name or f"({A.name}*{B.name})")


def map_conv_functional(A: LinMap, f: Cochain, name=None) -> LinMap:
    """A ⋆ f for scalar f: u ↦ Σ A(u₍₁₎)·f(u₍₂₎)."""
    _same_instance(A, f)
    if A.rank != f.arity:
        raise InstanceMismatchError(f"map rank {A.rank} vs cochain arity {f.arity}")
    inst = A.instance

    def rule(keys):
        acc: dict = {}
        for left, right, c in tuple_comul_terms(inst, keys):
            v = f.value(right)
            if v == 0:
                continue
            for k, w in A.value(left).terms.items():
                _acc(acc, k, c * v * w)
        return Element(inst, acc)

    return LinMap(inst, A.rank, rule, name or f"({A.name}*{f.name})")


def functional_conv_map(f: Cochain, A: LinMap, name=None) -> LinMap:
    """f ⋆ A for scalar f: u ↦ Σ f(u₍₁₎)·A(u₍₂₎)."""
    _same_instance(A, f)
    if A.rank != f.arity:
        raise InstanceMismatchError(f"map rank {A.rank} vs cochain arity {f.arity}")
    inst = A.instance

    def rule(keys):
        acc: dict = {}
        for left, right, c in tuple_comul_terms(inst, keys):
            v = f.value(left)
            if v == 0:
                continue
            for k, w in A.value(right).terms.items():
                _acc(acc, k, c * v * w)
        return Element(inst, acc)

    return LinMap(inst, A.rank, rule, name or f"({f.name}*{A.name})")


def r_phi(phi: Cochain, name=None) -> LinMap:
    """R_φ = id ⋆ φ = (id⊗φ)∘Δ."""
    if phi.arity != 1:
        raise AlgebraError("r_phi expects an arity-1 functional")
    return map_conv_functional(identity_map(phi.instance), phi, name=name or f"R[{phi.name}]")


def r_phi_pair_value(F: Cochain, pair: tuple) -> TensorElement:
    """R_F on the tensor-square bialgebra, evaluated at a basis pair."""
    if F.arity != 2:
        raise AlgebraError("r_phi_pair_value expects an arity-2 functional")
    inst = F.instance
    acc: dict = {}
    for left, right, c in tuple_comul_terms(inst, tuple(pair)):
        v = F.value(right)
        if v == 0:
            continue
        _acc(acc, left, c * v)
    return TensorElement(inst, 2, acc)
