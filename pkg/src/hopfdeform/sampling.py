"""Seeded random basis keys and elements for sampled law checking.

All sampling is driven by ``random.Random`` so a (seed, budget) pair
reproduces the exact same sample stream on any platform.  Child samplers
for independent checks are derived with :meth:`ElementSampler.spawn`.
"""
from __future__ import annotations

import random

from .core import BialgebraInstance, Element, Kind

_MASK = (1 << 63) - 1


def derive_seed(seed: int, salt: int) -> int:
    return (seed * 1_000_003 + salt * 97 + 17) & _MASK


class ElementSampler:
    """Random elements with bounded support, coordinates and degree.

    ``coord_bound`` caps each integer coordinate on grouplike bases,
    ``max_degree`` caps the total degree of monomial keys, ``max_support``
    caps the number of basis keys per element.  Coefficients are complex
    with |re|, |im| <= coeff_bound.
    """

    def __init__(
        self,
        instance: BialgebraInstance,
        seed: int,
        budget: int = 200,
        coord_bound: int = 5,
        max_degree: int = 4,
        max_support: int = 3,
        coeff_bound: float = 1.0,
    ):
        self.instance = instance
        self.seed = int(seed)
        self.budget = int(budget)
        self.coord_bound = int(coord_bound)
        self.max_degree = int(max_degree)
        self.max_support = int(max_support)
        self.coeff_bound = float(coeff_bound)
        self.rng = random.Random(self.seed)
        self._finite_keys = None
        if instance.kind is Kind.FINITE:
            self._finite_keys = sorted(instance.basis_keys(), key=instance.sort_key)

    def spawn(self, salt: int, budget: int | None = None) -> "ElementSampler":
        return ElementSampler(
            self.instance,
            derive_seed(self.seed, salt),
            budget=self.budget if budget is None else budget,
            coord_bound=self.coord_bound,
            max_degree=self.max_degree,
            max_support=self.max_support,
            coeff_bound=self.coeff_bound,
        )

    def key(self):
        inst = self.instance
        if inst.kind is Kind.GROUPLIKE_BASIS:
            d = len(inst.unit)
            return tuple(self.rng.randint(-self.coord_bound, self.coord_bound) for _ in range(d))
        if inst.kind is Kind.GRADED_CONNECTED:
            n = len(inst.unit)
            exponents = [0] * n
            for _ in range(self.rng.randint(0, self.max_degree)):
                exponents[self.rng.randrange(n)] += 1
            return tuple(exponents)
        return self.rng.choice(self._finite_keys)

    def keys(self, n: int) -> tuple:
        return tuple(self.key() for _ in range(n))

    def coeff(self) -> complex:
        b = self.coeff_bound
        return complex(self.rng.uniform(-b, b), self.rng.uniform(-b, b))

    def element(self) -> Element:
        support = self.rng.randint(1, self.max_support)
        terms: dict = {}
        for _ in range(support):
            k = self.key()
            terms[k] = terms.get(k, 0j) + self.coeff()
        return Element(self.instance, terms)

    def elements(self, n: int) -> list[Element]:
        return [self.element() for _ in range(n)]
