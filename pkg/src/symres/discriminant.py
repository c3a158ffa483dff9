"""Discriminants of symmetric forms through their partial derivatives.

A homogeneous symmetric polynomial of degree d in n variables is a
Z-linear combination of products e_lambda of elementary symmetric
polynomials, one for each partition lambda of d with parts at most n.
Its partial derivatives form an equivariant system of degree d - 1,
so the partitionwise resultant decomposition applies to them; the
discriminant is the resultant of the partials stripped of the exact
normalizing power d^{a(n,d)} with a(n,d) = ((d-1)^n - (-1)^n)/d.

For d <= n the constant top divided difference of the partials is
(-1)^{d-1} c_(d), which turns the decomposition prefactor into a pure
power of c_(d) carrying a global sign: minus exactly when d = 2 and n
is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

from symres.combinatorics import (
    Partition,
    m_lambda,
    m_zero_discriminant,
    partitions,
)
from symres.divdiff import DividedDifferenceTable, EquivariantSystem
from symres.equivariant import (
    FactoredResultant,
    _chain_resultants,
    elementary_symmetric,
    specialize_chain,
)
from symres.resultant import macaulay_resultant
from symres.ring import Coefficient, ParameterRing, Polynomial


def coefficient_name(lam: Partition) -> str:
    """c3, c21, c111, ...; parts of ten or more are underscore-separated."""
    if lam[0] >= 10:
        return "c_" + "_".join(str(p) for p in lam)
    return "c" + "".join(str(p) for p in lam)


def basis_partitions(n: int, d: int) -> List[Partition]:
    """Partitions of d with parts at most n, indexing the e_lambda basis."""
    return [lam for lam in partitions(d) if lam[0] <= n]


def expand_elementary(lam, n: int,
                      ring: Optional[ParameterRing] = None) -> Polynomial:
    """The expanded product e_{lam_1} e_{lam_2} ... in n variables.

    Zero (of the right nominal degree) whenever some part exceeds n.
    """
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if ring is None:
        ring = ParameterRing(())
    out = Polynomial.constant(ring, n, 1)
    for part in lam:
        out = out * elementary_symmetric(ring, n, part)
    return out


@dataclass(frozen=True)
class SymmetricPoly:
    """A symmetric form sum of c_lambda e_lambda of degree d in n variables.

    Coefficients may be plain integers (an empty parameter ring is
    created for them) or Coefficient values over a shared ring.
    """

    n: int
    d: int
    coeffs: Dict[Partition, Coefficient]

    def __post_init__(self):
        if self.n < 2 or self.d < 2:
            raise ValueError("need n >= 2 and d >= 2")
        if not self.coeffs:
            raise ValueError("no coefficients given")
        values = list(self.coeffs.values())
        if all(isinstance(v, int) for v in values):
            ring = ParameterRing(())
        else:
            ring = next(v.ring for v in values if isinstance(v, Coefficient))
        coeffs = {}
        for key, value in self.coeffs.items():
            lam = key if isinstance(key, Partition) else Partition(tuple(key))
            if lam.n != self.d:
                raise ValueError(f"{lam} is not a partition of {self.d}")
            if lam[0] > self.n:
                raise ValueError(
                    f"part {lam[0]} exceeds the {self.n} variables")
            if isinstance(value, int):
                value = ring.constant(value)
            elif value.ring != ring:
                raise ValueError("coefficients from mixed parameter rings")
            coeffs[lam] = value
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def generic(cls, n: int, d: int) -> "SymmetricPoly":
        """The universal form over Z[c_lambda], one parameter per basis
        partition in enumeration order (c3, c21, c111 for d = 3)."""
        lams = basis_partitions(n, d)
        ring = ParameterRing(tuple(coefficient_name(lam) for lam in lams))
        return cls(n, d, {lam: ring.parameter(coefficient_name(lam))
                          for lam in lams})

    @property
    def ring(self) -> ParameterRing:
        return next(iter(self.coeffs.values())).ring

    def coefficient(self, lam) -> Coefficient:
        lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
        return self.coeffs.get(lam, self.ring.zero())

    def expand(self) -> Polynomial:
        total = Polynomial.zero(self.ring, self.n, self.d)
        for lam, c in self.coeffs.items():
            total = total + expand_elementary(lam, self.n, self.ring) * c
        return total


def partial_derivatives(F: SymmetricPoly) -> EquivariantSystem:
    """The n partials of the expanded form, packaged as an equivariant
    system of degree d - 1 (the constructor checks equivariance)."""
    expanded = F.expand()
    return EquivariantSystem([expanded.derivative(i) for i in range(F.n)])


def a_exponent(n: int, d: int) -> int:
    """((d-1)^n - (-1)^n) / d; the division is exact for all n, d >= 2."""
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    q, r = divmod((d - 1) ** n - (-1) ** n, d)
    assert r == 0
    return q


@dataclass(frozen=True)
class DiscriminantResult:
    """Factored form of d^{a(n,d)} Disc(F).

    ``normalized`` is (-1)^sign times the expanded product; for d <= n
    the prefactor of ``factored`` is the pure power c_(d)^{m_0} and the
    sign is n - 1 mod 2 when d = 2, zero otherwise.
    """

    a: int
    sign: int
    factored: FactoredResultant

    def normalized(self) -> Coefficient:
        value = self.factored.expand()
        return -value if self.sign else value


def discriminant_decomposition(F: SymmetricPoly,
                               jobs: int = 1) -> DiscriminantResult:
    """Factor d^{a(n,d)} Disc(F) over partitions of n.

    The partials have degree d - 1, so for d > n every partition of n
    contributes a specialized chain resultant, while for d <= n only
    partitions shorter than d contribute and the rest is absorbed by
    c_(d)^{m_0} with m_0 = m_zero_discriminant(n, d).
    """
    n, d = F.n, F.d
    system = partial_derivatives(F)
    table = DividedDifferenceTable(system).freeze()
    if d > n:
        lams = list(partitions(n))
        prefactor = F.ring.one()
        sign = 0
    else:
        lams = list(partitions(n, max_length=d - 1))
        prefactor = F.coefficient((d,)) ** m_zero_discriminant(n, d)
        sign = (n - 1) % 2 if d == 2 else 0
    chains = [specialize_chain(table, lam) for lam in lams]
    values = _chain_resultants(chains, jobs)
    factors = tuple((value, m_lambda(lam))
                    for lam, value in zip(lams, values))
    return DiscriminantResult(a_exponent(n, d), sign,
                              FactoredResultant(prefactor, factors))


def discriminant_value(F: SymmetricPoly) -> int:
    """Disc(F) for integer coefficients, by the direct resultant route.

    Computes the Macaulay resultant of the partials without any
    decomposition and strips the factor d^{a(n,d)}.  That division is
    exact by the definition of the discriminant, so a nonzero
    remainder can only mean a bug upstream.
    """
    if any(not c.is_constant() for c in F.coeffs.values()):
        raise ValueError("integer coefficients required")
    res = macaulay_resultant(partial_derivatives(F).polys)
    scale = F.d ** a_exponent(F.n, F.d)
    q, r = divmod(res.constant_value(), scale)
    if r:
        raise ArithmeticError(
            f"resultant of the partials is not divisible by {F.d}^"
            f"{a_exponent(F.n, F.d)}")
    return q
