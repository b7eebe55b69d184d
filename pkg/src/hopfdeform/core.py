"""Sparse complex linear algebra over a bialgebra basis.

Elements are finite sparse combinations of opaque basis keys.  The
structure maps (product, coproduct, counit, antipode, involution) are
supplied per basis key by a :class:`BialgebraInstance` and extended
bilinearly / multilinearly here.  Elements and instances are immutable
after construction and every operation is a pure function, so values can
be shared freely across threads; the memo tables inside an instance only
ever grow and are safe under concurrent reads.

Coefficients are complex doubles.  Equality of scalars and elements is
tolerance based (``EPS_EQ``); coefficients with modulus below
``EPS_PRUNE`` are dropped on construction.  NaN or infinite coefficients
are rejected outright.
"""
from __future__ import annotations

import enum
import itertools
import math
from typing import Callable

from .report import Report

EPS_EQ = 1e-9
EPS_PRUNE = 1e-12


class AlgebraError(Exception):
    """Base class for structural errors raised by this package."""


class InstanceMismatchError(AlgebraError):
    """Operands belong to different bialgebra instances."""


class CapabilityMissingError(AlgebraError):
    """The instance does not provide the requested structure map."""


class Kind(enum.Enum):
    GROUPLIKE_BASIS = "grouplike_basis"
    GRADED_CONNECTED = "graded_connected"
    FINITE = "finite"


def approx_eq(a, b, tol: float = EPS_EQ) -> bool:
    return abs(complex(a) - complex(b)) <= tol


def format_scalar(z) -> str:
    """Canonical ``a+bi`` rendering with 12 significant digits."""
    z = complex(z)
    re = z.real + 0.0  # fold -0.0 into +0.0
    im = z.imag + 0.0
    return f"{re:.12g}{im:+.12g}i"


def _clean_terms(terms, prune: float):
    out = {}
    for key, raw in terms.items():
        z = complex(raw)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise AlgebraError(f"non-finite coefficient {raw!r} at basis key {key!r}")
        if abs(z) < prune:
            continue
        out[key] = z
    return out


def _acc(acc: dict, key, value) -> None:
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


class BialgebraInstance:
    """Descriptor of a concrete bialgebra / Hopf algebra on a chosen basis.

    The basis-level rules return iterables of ``(key, coeff)`` pairs
    (``(key1, key2, coeff)`` triples for the coproduct).  ``antipode`` and
    ``star`` are optional capabilities; ``degree`` is required for graded
    connected instances, where the unit must be the only degree-0 key.
    ``star`` is a basis rule; the antilinear part (conjugation of input
    coefficients) is applied by :func:`star`.
    """

    def __init__(
        self,
        name: str,
        kind: Kind,
        unit,
        mul_basis: Callable,
        comul_basis: Callable,
        counit_basis: Callable,
        antipode_basis: Callable | None = None,
        star_basis: Callable | None = None,
        degree: Callable | None = None,
        cocommutative: bool = False,
        key_check: Callable | None = None,
        key_str: Callable | None = None,
        key_sort: Callable | None = None,
        basis_iter: Callable | None = None,
        eq_eps: float = EPS_EQ,
        prune_eps: float = EPS_PRUNE,
    ):
        if kind is Kind.GRADED_CONNECTED and degree is None:
            raise AlgebraError("graded connected instances need a degree map")
        self.name = name
        self.kind = kind
        self.unit = unit
        self.cocommutative = cocommutative
        self.eq_eps = eq_eps
        self.prune_eps = prune_eps
        self._mul = mul_basis
        self._comul = comul_basis
        self._counit = counit_basis
        self._antipode = antipode_basis
        self._star = star_basis
        self._degree = degree
        self._key_check = key_check
        self._key_str = key_str or repr
        self._key_sort = key_sort or (lambda k: k)
        self._basis_iter = basis_iter
        self._mul_cache: dict = {}
        self._comul_cache: dict = {}
        self._antipode_cache: dict = {}
        self._star_cache: dict = {}
        self._tuple_comul_cache: dict = {}
        self._iter_comul_cache: dict = {}

    # -- capabilities ------------------------------------------------------

    @property
    def has_antipode(self) -> bool:
        return self._antipode is not None

    @property
    def has_star(self) -> bool:
        return self._star is not None

    def require_antipode(self) -> None:
        if not self.has_antipode:
            raise CapabilityMissingError(f"instance {self.name!r} has no antipode")

    def require_star(self) -> None:
        if not self.has_star:
            raise CapabilityMissingError(f"instance {self.name!r} has no involution")

    # -- basis-level rules (memoized) --------------------------------------

    def mul_terms(self, k1, k2):
        hit = self._mul_cache.get((k1, k2))
        if hit is None:
            hit = tuple((k, complex(c)) for k, c in self._mul(k1, k2))
            self._mul_cache[(k1, k2)] = hit
        return hit

    def comul_terms(self, k):
        hit = self._comul_cache.get(k)
        if hit is None:
            hit = tuple((a, b, complex(c)) for a, b, c in self._comul(k))
            self._comul_cache[k] = hit
        return hit

    def counit_key(self, k) -> complex:
        return complex(self._counit(k))

    def antipode_terms(self, k):
        self.require_antipode()
        hit = self._antipode_cache.get(k)
        if hit is None:
            hit = tuple((kk, complex(c)) for kk, c in self._antipode(k))
            self._antipode_cache[k] = hit
        return hit

    def star_terms(self, k):
        self.require_star()
        hit = self._star_cache.get(k)
        if hit is None:
            hit = tuple((kk, complex(c)) for kk, c in self._star(k))
            self._star_cache[k] = hit
        return hit

    def degree_key(self, k) -> int:
        if self._degree is None:
            raise CapabilityMissingError(f"instance {self.name!r} has no grading")
        return int(self._degree(k))

    def check_key(self, k) -> None:
        if self._key_check is not None and not self._key_check(k):
            raise AlgebraError(f"basis key {k!r} is not valid for instance {self.name!r}")

    def key_str(self, k) -> str:
        return self._key_str(k)

    def sort_key(self, k):
        return self._key_sort(k)

    def basis_keys(self):
        """Every basis key, for finite instances only."""
        if self._basis_iter is None:
            raise CapabilityMissingError(f"instance {self.name!r} has no finite basis enumeration")
        return self._basis_iter()

    # -- element constructors ----------------------------------------------

    def basis_element(self, key, coeff=1.0) -> "Element":
        self.check_key(key)
        return Element(self, {key: coeff})

    def element(self, terms) -> "Element":
        for key in terms:
            self.check_key(key)
        return Element(self, dict(terms))

    def unit_element(self) -> "Element":
        return Element(self, {self.unit: 1.0})

    def zero_element(self) -> "Element":
        return Element(self, {})

    def __repr__(self):
        return f"BialgebraInstance({self.name!r}, {self.kind.value})"


class Element:
    """Finite sparse linear combination of basis keys of one instance."""

    __slots__ = ("instance", "terms")

    def __init__(self, instance: BialgebraInstance, terms, _clean: bool = True):
        self.instance = instance
        self.terms = _clean_terms(terms, instance.prune_eps) if _clean else terms

    def coeff(self, key) -> complex:
        return self.terms.get(key, 0j)

    def support(self):
        return sorted(self.terms, key=self.instance.sort_key)

    def norm_inf(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1.0, other))

    def __neg__(self):
        return scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __eq__(self, other):
        if not isinstance(other, Element) or other.instance is not self.instance:
            return NotImplemented
        return (self - other).norm_inf() <= self.instance.eq_eps

    __hash__ = None

    def __repr__(self):
        return f"<{format_element(self)}>"


class TensorElement:
    """Finite sparse element of the rank-n tensor power of an instance."""

    __slots__ = ("instance", "rank", "terms")

    def __init__(self, instance: BialgebraInstance, rank: int, terms, _clean: bool = True):
        if rank < 1:
            raise AlgebraError("tensor rank must be >= 1")
        self.instance = instance
        self.rank = rank
        self.terms = _clean_terms(terms, instance.prune_eps) if _clean else terms

    def coeff(self, keys) -> complex:
        return self.terms.get(tuple(keys), 0j)

    def norm_inf(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        _same_tensor(self, other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _acc(acc, k, c)
        return TensorElement(self.instance, self.rank, acc)

    def __sub__(self, other):
        _same_tensor(self, other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _acc(acc, k, -c)
        return TensorElement(self.instance, self.rank, acc)

    def __rmul__(self, c):
        return TensorElement(
            self.instance, self.rank, {k: c * v for k, v in self.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.instance is not self.instance or other.rank != self.rank:
            return NotImplemented
        return (self - other).norm_inf() <= self.instance.eq_eps

    __hash__ = None

    def __repr__(self):
        return f"<{format_tensor(self)}>"


def _same_instance(a, b) -> None:
    if a.instance is not b.instance:
        raise InstanceMismatchError(
            f"mixed instances {a.instance.name!r} and {b.instance.name!r}"
        )


def _same_tensor(u, v) -> None:
    _same_instance(u, v)
    if u.rank != v.rank:
        raise InstanceMismatchError(f"mixed tensor ranks {u.rank} and {v.rank}")


# -- linear operations ------------------------------------------------------


def add(a: Element, b: Element) -> Element:
    _same_instance(a, b)
    acc = dict(a.terms)
    for k, c in b.terms.items():
        _acc(acc, k, c)
    return Element(a.instance, acc)


def scale(c, a: Element) -> Element:
    c = complex(c)
    return Element(a.instance, {k: c * v for k, v in a.terms.items()})


def mul(a: Element, b: Element) -> Element:
    """Bilinear extension of the basis product."""
    _same_instance(a, b)
    inst = a.instance
    acc: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            c = ca * cb
            for k, w in inst.mul_terms(ka, kb):
                _acc(acc, k, c * w)
    return Element(inst, acc)


def comul(a: Element) -> TensorElement:
    inst = a.instance
    acc: dict = {}
    for k, c in a.terms.items():
        for k1, k2, w in inst.comul_terms(k):
            _acc(acc, (k1, k2), c * w)
    return TensorElement(inst, 2, acc)


def counit(a: Element) -> complex:
    inst = a.instance
    return sum((c * inst.counit_key(k) for k, c in a.terms.items()), 0j)


def antipode(a: Element) -> Element:
    inst = a.instance
    acc: dict = {}
    for k, c in a.terms.items():
        for kk, w in inst.antipode_terms(k):
            _acc(acc, kk, c * w)
    return Element(inst, acc)


def star(a: Element) -> Element:
    """Antilinear involution: input coefficients are conjugated."""
    inst = a.instance
    acc: dict = {}
    for k, c in a.terms.items():
        cc = c.conjugate()
        for kk, w in inst.star_terms(k):
            _acc(acc, kk, cc * w)
    return Element(inst, acc)


def antipode_key(instance: BialgebraInstance, k) -> Element:
    return Element(instance, dict(instance.antipode_terms(k)))


def star_key(instance: BialgebraInstance, k) -> Element:
    return Element(instance, dict(instance.star_terms(k)))


def iterated_comul_terms(instance: BialgebraInstance, key, n: int):
    """Expansion of the n-fold coproduct of a basis key as ``(keys, coeff)``.

    Uses the recursion that peels one tensor factor from the left; by
    coassociativity any other bracketing gives the same expansion.
    """
    if n == 1:
        return (((key,), 1.0 + 0j),)
    cache = instance._iter_comul_cache
    hit = cache.get((key, n))
    if hit is not None:
        return hit
    acc: dict = {}
    for k1, k2, w in instance.comul_terms(key):
        for rest, c in iterated_comul_terms(instance, k2, n - 1):
            _acc(acc, (k1,) + rest, w * c)
    out = tuple(acc.items())
    cache[(key, n)] = out
    return out


def iterated_comul(a: Element, n: int):
    """n-fold coproduct; n=0 gives the counit scalar, n=1 the identity."""
    if n < 0:
        raise AlgebraError("iterated coproduct needs n >= 0")
    if n == 0:
        return counit(a)
    inst = a.instance
    acc: dict = {}
    for k, c in a.terms.items():
        for keys, w in iterated_comul_terms(inst, k, n):
            _acc(acc, keys, c * w)
    return TensorElement(inst, n, acc)


# -- tensor utilities --------------------------------------------------------


def tensor_of(*elements: Element) -> TensorElement:
    if not elements:
        raise AlgebraError("tensor_of needs at least one factor")
    inst = elements[0].instance
    for e in elements[1:]:
        _same_instance(elements[0], e)
    acc: dict = {}
    for combo in itertools.product(*(e.terms.items() for e in elements)):
        keys = tuple(k for k, _ in combo)
        c = 1.0 + 0j
        for _, w in combo:
            c *= w
        _acc(acc, keys, c)
    return TensorElement(inst, len(elements), acc)


def tensor_mul(u: TensorElement, v: TensorElement) -> TensorElement:
    """Componentwise product in the tensor-power algebra."""
    _same_tensor(u, v)
    inst = u.instance
    acc: dict = {}
    for ku, cu in u.terms.items():
        for kv, cv in v.terms.items():
            parts = [inst.mul_terms(a, b) for a, b in zip(ku, kv)]
            for combo in itertools.product(*parts):
                keys = tuple(k for k, _ in combo)
                c = cu * cv
                for _, w in combo:
                    c *= w
                _acc(acc, keys, c)
    return TensorElement(inst, u.rank, acc)


def tensor_flip(u: TensorElement) -> TensorElement:
    if u.rank != 2:
        raise AlgebraError("flip is defined on rank-2 tensors")
    return TensorElement(u.instance, 2, {(b, a): c for (a, b), c in u.terms.items()})


def tensor_counit(u: TensorElement) -> complex:
    inst = u.instance
    total = 0j
    for keys, c in u.terms.items():
        w = c
        for k in keys:
            w *= inst.counit_key(k)
        total += w
    return total


def tensor_apply(u: TensorElement, slot_maps) -> TensorElement:
    """Apply per-slot linear basis maps; ``None`` leaves a slot unchanged.

    Each map takes a basis key and returns ``(key, coeff)`` pairs.
    """
    inst = u.instance
    acc: dict = {}
    for keys, c in u.terms.items():
        expansions = []
        for k, fn in zip(keys, slot_maps):
            expansions.append(((k, 1.0 + 0j),) if fn is None else tuple(fn(k)))
        for combo in itertools.product(*expansions):
            new_keys = tuple(k for k, _ in combo)
            w = c
            for _, v in combo:
                w *= v
            _acc(acc, new_keys, w)
    return TensorElement(inst, u.rank, acc)


def tensor_expand_slot(u: TensorElement, slot: int) -> TensorElement:
    """Replace one slot by its coproduct, raising the rank by one."""
    inst = u.instance
    acc: dict = {}
    for keys, c in u.terms.items():
        for k1, k2, w in inst.comul_terms(keys[slot]):
            new_keys = keys[:slot] + (k1, k2) + keys[slot + 1 :]
            _acc(acc, new_keys, c * w)
    return TensorElement(inst, u.rank + 1, acc)


def tensor_contract_slot(u: TensorElement, slot: int) -> TensorElement | Element:
    """Apply the counit to one slot, lowering the rank by one."""
    inst = u.instance
    acc: dict = {}
    for keys, c in u.terms.items():
        w = c * inst.counit_key(keys[slot])
        new_keys = keys[:slot] + keys[slot + 1 :]
        _acc(acc, new_keys, w)
    if u.rank == 2:
        return Element(inst, {k[0]: c for k, c in acc.items()})
    return TensorElement(inst, u.rank - 1, acc)


def tensor_mul_all(u: TensorElement) -> Element:
    """Multiply the slots together left to right."""
    inst = u.instance
    acc: dict = {}
    for keys, c in u.terms.items():
        prod = Element(inst, {keys[0]: 1.0})
        for k in keys[1:]:
            prod = mul(prod, Element(inst, {k: 1.0}, _clean=False))
        for k, w in prod.terms.items():
            _acc(acc, k, c * w)
    return Element(inst, acc)


# -- canonical rendering -----------------------------------------------------


def format_element(e: Element) -> str:
    if not e.terms:
        return "0"
    inst = e.instance
    parts = [
        f"({format_scalar(e.terms[k])})*{inst.key_str(k)}"
        for k in sorted(e.terms, key=inst.sort_key)
    ]
    return " + ".join(parts)


def format_tensor(u: TensorElement) -> str:
    if not u.terms:
        return "0"
    inst = u.instance
    keys = sorted(u.terms, key=lambda ks: tuple(inst.sort_key(k) for k in ks))
    parts = []
    for ks in keys:
        label = " (x) ".join(inst.key_str(k) for k in ks)
        parts.append(f"({format_scalar(u.terms[ks])})*[{label}]")
    return " + ".join(parts)


# -- structural self-check ----------------------------------------------------


def check_structure(instance: BialgebraInstance, sampler, tol: float = 1e-8) -> Report:
    """Sampled verification of the bialgebra / Hopf / star axioms.

    Failures never raise; they are recorded in the returned report.
    """
    report = Report(name=f"structure:{instance.name}")
    triples = [(sampler.element(), sampler.element(), sampler.element()) for _ in range(sampler.budget)]

    res = 0.0
    for a, b, c in triples:
        res = max(res, (mul(mul(a, b), c) - mul(a, mul(b, c))).norm_inf())
    report.add("associativity", "(a*b)*c = a*(b*c)", len(triples), res, tol)

    one = instance.unit_element()
    res = 0.0
    for a, _, _ in triples:
        res = max(res, (mul(one, a) - a).norm_inf(), (mul(a, one) - a).norm_inf())
    report.add("unit", "1*a = a = a*1", len(triples), res, 1e-12)

    res = 0.0
    for a, _, _ in triples:
        u = comul(a)
        res = max(res, (tensor_expand_slot(u, 0) - tensor_expand_slot(u, 1)).norm_inf())
    report.add("coassociativity", "(Delta(x)id)Delta = (id(x)Delta)Delta", len(triples), res, tol)

    res = 0.0
    for a, _, _ in triples:
        u = comul(a)
        left = tensor_contract_slot(u, 0)
        right = tensor_contract_slot(u, 1)
        res = max(res, (left - a).norm_inf(), (right - a).norm_inf())
    report.add("counit", "(delta(x)id)Delta = id = (id(x)delta)Delta", len(triples), res, 1e-12)

    res = 0.0
    for a, b, _ in triples:
        res = max(res, (comul(mul(a, b)) - tensor_mul(comul(a), comul(b))).norm_inf())
    report.add("comul_homomorphism", "Delta(ab) = Delta(a)Delta(b)", len(triples), res, tol)

    res = 0.0
    for a, b, _ in triples:
        res = max(res, abs(counit(mul(a, b)) - counit(a) * counit(b)))
    report.add("counit_homomorphism", "delta(ab) = delta(a)delta(b)", len(triples), res, tol)

    if instance.kind is Kind.GROUPLIKE_BASIS:
        res = 0.0
        for _ in range(sampler.budget):
            k = sampler.key()
            terms = instance.comul_terms(k)
            exact = len(terms) == 1 and terms[0] == (k, k, 1.0 + 0j)
            res = max(res, 0.0 if exact else 1.0, abs(instance.counit_key(k) - 1.0))
        report.add("grouplike_basis", "Delta(b) = b(x)b and delta(b) = 1 on basis keys", sampler.budget, res, 0.0)

    if instance.kind is Kind.GRADED_CONNECTED:
        res = 0.0 if instance.degree_key(instance.unit) == 0 else 1.0
        for _ in range(sampler.budget):
            k1, k2 = sampler.key(), sampler.key()
            d1, d2 = instance.degree_key(k1), instance.degree_key(k2)
            for k, _ in instance.mul_terms(k1, k2):
                if instance.degree_key(k) != d1 + d2:
                    res = 1.0
            for a, b, _ in instance.comul_terms(k1):
                if instance.degree_key(a) + instance.degree_key(b) != d1:
                    res = 1.0
        report.add(
            "grading",
            "deg(1) = 0; the product adds degrees; the coproduct preserves them",
            sampler.budget,
            res,
            0.0,
        )

    if instance.cocommutative:
        res = 0.0
        for a, _, _ in triples:
            u = comul(a)
            res = max(res, (tensor_flip(u) - u).norm_inf())
        report.add("cocommutativity", "tau∘Delta = Delta", len(triples), res, 1e-12)

    if instance.has_antipode:
        res = 0.0
        for a, _, _ in triples:
            u = comul(a)
            lhs = tensor_mul_all(tensor_apply(u, (instance.antipode_terms, None)))
            rhs = tensor_mul_all(tensor_apply(u, (None, instance.antipode_terms)))
            target = scale(counit(a), one)
            res = max(res, (lhs - target).norm_inf(), (rhs - target).norm_inf())
        report.add("antipode", "mul(S(x)id)Delta = delta*1 = mul(id(x)S)Delta", len(triples), res, tol)
        report.add(
            "antipode_unit", "S(1) = 1", 1, (antipode(one) - one).norm_inf(), 1e-12
        )

    if instance.has_star:
        res = 0.0
        for a, _, _ in triples:
            res = max(res, (star(star(a)) - a).norm_inf())
        report.add("star_involutive", "(a*)* = a", len(triples), res, 1e-12)

        res = 0.0
        for a, b, _ in triples:
            res = max(res, (star(mul(a, b)) - mul(star(b), star(a))).norm_inf())
        report.add("star_antihomomorphism", "(ab)* = b* a*", len(triples), res, tol)

    return report
