"""Resultant decomposition of equivariant systems.

For an equivariant system F^{1}, ..., F^{n} of degree d the resultant
factors over the partitions of n.  Each partition contributes the
resultant of a small specialized chain: collapse the variables into
l(lambda) blocks via rho_lambda and take divided differences along the
block-leading indices, giving l polynomials of degrees d, d-1, ...,
d-l+1 in l variables.  The factor appears with multiplicity m_lambda;
when d < n the partitions longer than d drop out and their share is
carried by a power of the constant top divided difference.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from symres.combinatorics import (
    Partition,
    falling_quotient,
    m_lambda,
    m_zero_resultant,
    partitions,
)
from symres.divdiff import DividedDifferenceTable, EquivariantSystem
from symres.resultant import macaulay_resultant
from symres.ring import Coefficient, NotDivisibleError, ParameterRing, Polynomial


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def elementary_symmetric(ring: ParameterRing, ambient: int,
                         p: int) -> Polynomial:
    """The elementary symmetric polynomial e_p; zero when p > ambient."""
    if p < 0:
        raise ValueError("negative order")
    if p == 0:
        return Polynomial.constant(ring, ambient, 1)
    terms = {}
    for chosen in combinations(range(ambient), p):
        exp = tuple(1 if i in chosen else 0 for i in range(ambient))
        terms[exp] = ring.one()
    return Polynomial(ring, ambient, p, terms)


def block_leads(lam: Partition) -> Tuple[int, ...]:
    """0-based index of the first variable of each block."""
    leads = []
    pos = 0
    for part in lam:
        leads.append(pos)
        pos += part
    return tuple(leads)


def rho_lambda(p: Polynomial, lam) -> Polynomial:
    """Collapse the variables blockwise: x-block j maps to y_j."""
    lam = _as_partition(lam)
    if p.ambient != lam.n:
        raise ValueError(
            f"ambient {p.ambient} does not match partition of {lam.n}")
    owner = []
    for b, part in enumerate(lam):
        owner.extend([b] * part)
    images = {i: Polynomial.variable(p.ring, lam.length, owner[i])
              for i in range(p.ambient)}
    return p.substitute(images)


@dataclass(frozen=True)
class SpecializedSystem:
    """The chain of blockwise specializations attached to one partition."""

    lam: Partition
    polys: Tuple[Polynomial, ...]

    def __post_init__(self):
        l = self.lam.length
        if len(self.polys) != l:
            raise ValueError("one polynomial per block expected")
        d = self.polys[0].degree
        for k, p in enumerate(self.polys):
            if p.ambient != l or (not p.is_zero() and p.degree != d - k):
                raise ValueError("chain degrees must step down by one")


def specialize_chain(table: DividedDifferenceTable,
                     lam) -> SpecializedSystem:
    """rho_lambda of the divided differences along the block leads.

    The k-th chain entry is rho_lambda(F^{I_k}) with I_k the leading
    indices of the first k blocks; the blockwise collapse is injective
    on I_k, so this equals the k-th divided difference of the
    specialized system itself.
    """
    lam = _as_partition(lam)
    sys = table.system
    if lam.n != sys.n:
        raise ValueError(f"partition of {lam.n} against a system of {sys.n}")
    if lam.length > sys.d:
        raise ValueError(
            f"chain length {lam.length} exceeds degree {sys.d}")
    leads = block_leads(lam)
    polys = tuple(rho_lambda(table.divided_difference(leads[:k]), lam)
                  for k in range(1, lam.length + 1))
    return SpecializedSystem(lam, polys)


@dataclass(frozen=True)
class FactoredResultant:
    """A resultant as prefactor times a product of factor powers."""

    prefactor: Coefficient
    factors: Tuple[Tuple[Coefficient, int], ...]

    def __post_init__(self):
        if any(mult < 1 for _, mult in self.factors):
            raise ValueError("multiplicities must be positive")

    def expand(self) -> Coefficient:
        out = self.prefactor
        for value, mult in self.factors:
            out = out * value ** mult
        return out


def _chain_resultants(chains: Sequence[SpecializedSystem],
                      jobs: int) -> List[Coefficient]:
    if jobs > 1 and len(chains) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(
                lambda chain: macaulay_resultant(chain.polys), chains))
    return [macaulay_resultant(chain.polys) for chain in chains]


def decompose_resultant(system: EquivariantSystem,
                        jobs: int = 1) -> FactoredResultant:
    """Factor the resultant of an equivariant system partitionwise.

    For d >= n every partition of n contributes and the prefactor is 1;
    for d < n only partitions of length at most d contribute and the
    top divided-difference constant enters with exponent
    m_zero_resultant(n, d).  Factors are listed in the enumeration
    order of the partitions.
    """
    n, d = system.n, system.d
    table = DividedDifferenceTable(system).freeze()
    if d >= n:
        lams = list(partitions(n))
        prefactor = system.ring.one()
    else:
        lams = list(partitions(n, max_length=d))
        prefactor = table.top_constant() ** m_zero_resultant(n, d)
    chains = [specialize_chain(table, lam) for lam in lams]
    values = _chain_resultants(chains, jobs)
    factors = tuple((value, m_lambda(lam))
                    for lam, value in zip(lams, values))
    return FactoredResultant(prefactor, factors)


@dataclass(frozen=True)
class VerificationReport:
    equal: bool
    factored: FactoredResultant
    expanded: Coefficient
    direct: Coefficient


def verify_decomposition(system: EquivariantSystem,
                         jobs: int = 1) -> VerificationReport:
    """Expand the decomposition and compare with the direct resultant."""
    factored = decompose_resultant(system, jobs=jobs)
    expanded = factored.expand()
    direct = macaulay_resultant(system.polys)
    return VerificationReport(expanded == direct, factored, expanded, direct)


@dataclass(frozen=True)
class AveragingReport:
    """Outcome of the summed-chain identity for one partition.

    ``summed`` is the resultant of the order-k sums of specialized
    divided differences (the last slot keeps the single top entry);
    it equals ``constant * chain``.  ``averaged`` is the resultant of
    the sums divided by their binomial counts, present only when those
    divisions are exact over the integers.
    """

    lam: Partition
    summed: Coefficient
    constant: int
    chain: Coefficient
    averaged: Optional[Coefficient]


def _scalar_quotient(p: Polynomial, k: int) -> Polynomial:
    divisor = p.ring.constant(k)
    return Polynomial(p.ring, p.ambient, p.degree,
                      {exp: c.exact_div(divisor)
                       for exp, c in p.terms.items()})


def averaged_chain_resultant(system: EquivariantSystem,
                             lam) -> AveragingReport:
    """Resultant of the symmetrized specialized system for one partition.

    Summing the specialized divided differences of each order k < l
    multiplies the chain resultant by prod binom(l,k)^e_k with
    e_k = d(d-1)...(d-l+1)/(d-k+1); the equality is recomputed here and
    a mismatch raises ArithmeticError.  Each F_lambda^J is obtained as
    rho_lambda(F^{I_J}) for I_J the block leads selected by J, which
    sidesteps divided differences of the (generally non-equivariant)
    specialized system.
    """
    lam = _as_partition(lam)
    n, d = system.n, system.d
    if lam.n != n:
        raise ValueError(f"partition of {lam.n} against a system of {n}")
    l = lam.length
    if l > min(d, n):
        raise ValueError(f"need l(lam) <= min(d, n) = {min(d, n)}")
    table = DividedDifferenceTable(system)
    leads = block_leads(lam)
    summed_polys = []
    for k in range(1, l + 1):
        total = Polynomial.zero(system.ring, l, d - k + 1)
        for J in combinations(range(l), k):
            subset = tuple(leads[j] for j in J)
            total = total + rho_lambda(table.divided_difference(subset), lam)
        summed_polys.append(total)
    summed = macaulay_resultant(summed_polys)
    chain = macaulay_resultant(specialize_chain(table, lam).polys)
    constant = 1
    for k in range(1, l):
        constant *= comb(l, k) ** falling_quotient(d, l, k)
    if summed != chain * constant:
        raise ArithmeticError(
            f"summed-chain identity failed for {lam}: "
            f"constant {constant} does not relate the two resultants")
    averaged = None
    try:
        scaled = [_scalar_quotient(p, comb(l, k))
                  for k, p in enumerate(summed_polys, start=1)]
    except NotDivisibleError:
        pass
    else:
        averaged = macaulay_resultant(scaled)
    return AveragingReport(lam, summed, constant, chain, averaged)


_PARAM_LETTERS = "abcdfghijklmpqrstuvw"


def _generic_layout(n: int, d: int):
    """(power of x_i, partition or None, parameter position) triples.

    The symmetric cofactor of x_i^k runs over the e-basis partitions of
    d - k with parts at most n, innermost-first so that d = 2 reads
    a x^2 + b x e1 + c e1^2 + d e2.
    """
    layout = []
    pos = 0
    for k in range(d, -1, -1):
        j = d - k
        if j == 0:
            layout.append((k, None, pos))
            pos += 1
            continue
        mus = [mu for mu in partitions(j) if mu[0] <= n]
        for mu in reversed(mus):
            layout.append((k, mu, pos))
            pos += 1
    return layout


def generic_equivariant_system(n: int, d: int) -> EquivariantSystem:
    """The universal equivariant system with one symbol per basis term.

    F^{i} = sum over k of x_i^k * S_{d-k} with each symmetric cofactor
    S_j written in the e-basis with fresh parameters.
    """
    layout = _generic_layout(n, d)
    if len(layout) > len(_PARAM_LETTERS):
        names = tuple(f"c{pos}" for _, _, pos in layout)
    else:
        names = tuple(_PARAM_LETTERS[pos] for _, _, pos in layout)
    ring = ParameterRing(names)
    polys = []
    for i in range(n):
        total = Polynomial.zero(ring, n, d)
        for k, mu, pos in layout:
            part = Polynomial.monomial(
                ring, n, tuple(k if v == i else 0 for v in range(n)),
                ring.parameter(names[pos]))
            for p in (mu or ()):
                part = part * elementary_symmetric(ring, n, p)
            total = total + part
        polys.append(total)
    return EquivariantSystem(polys)


def random_integer_equivariant_system(rng, n: int, d: int,
                                      bound: int = 3) -> EquivariantSystem:
    """Random integer specialization of the generic equivariant shape.

    The leading coefficient (on x_i^d) is kept nonzero so the systems
    stay generically nondegenerate.
    """
    ring = ParameterRing()
    layout = _generic_layout(n, d)
    values = [rng.randint(-bound, bound) for _ in layout]
    while values[0] == 0:
        values[0] = rng.randint(-bound, bound)
    polys = []
    for i in range(n):
        total = Polynomial.zero(ring, n, d)
        for (k, mu, pos), v in zip(layout, values):
            if v == 0:
                continue
            part = Polynomial.monomial(
                ring, n, tuple(k if w == i else 0 for w in range(n)), v)
            for p in (mu or ()):
                part = part * elementary_symmetric(ring, n, p)
            total = total + part
        polys.append(total)
    return EquivariantSystem(polys)
