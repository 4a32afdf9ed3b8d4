"""Residue systems a_i + n_i Z and their covering behaviour.

The covering function w(x) counts the classes containing x; it is
periodic with period lcm(n_1, ..., n_k), so every global statement about
the system is decided by one scan over a full period.  Scans are exact
integer counting (numpy int64 vectors), never floating point.

A full per-residue vector is kept for periods up to 10**6; above that the
scan streams in chunks and only min/max/sum/covered survive.  Periods
beyond the period budget (default 10**7) are refused.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .arith import divisor_list, euler_phi, factorize, least_prime
from .errors import PeriodBudgetError

FULL_VECTOR_MAX = 10**6
DEFAULT_PERIOD_BUDGET = 10**7
_CHUNK = 10**6
_SUBSET_LIMIT = 20  # inclusion-exclusion is 2**k terms


@dataclass(frozen=True)
class ResidueClass:
    """The arithmetic progression residue + modulus * Z, 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not in [0, {self.modulus})")

    def contains(self, x: int) -> bool:
        return x % self.modulus == self.residue

    def __str__(self):
        return f"{self.residue}/{self.modulus}"


@dataclass(frozen=True)
class ResidueSystem:
    """A finite nonempty list of residue classes, input order preserved."""

    classes: tuple[ResidueClass, ...]

    def __post_init__(self):
        if not self.classes:
            raise ValueError("a residue system needs at least one class")
        object.__setattr__(self, "classes", tuple(self.classes))

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, int]]) -> "ResidueSystem":
        return ResidueSystem(tuple(ResidueClass(a, n) for a, n in pairs))

    def moduli(self) -> tuple[int, ...]:
        return tuple(c.modulus for c in self.classes)

    def period(self) -> int:
        return math.lcm(*self.moduli())

    def canonical(self) -> tuple[ResidueClass, ...]:
        """Classes sorted by (modulus, residue); reporting order, not storage order."""
        return tuple(sorted(self.classes, key=lambda c: (c.modulus, c.residue)))

    def zeroed(self) -> "ResidueSystem":
        """Same moduli, all residues replaced by 0."""
        return ResidueSystem(tuple(ResidueClass(0, c.modulus) for c in self.classes))

    def __len__(self):
        return len(self.classes)

    def __str__(self):
        return " ".join(str(c) for c in self.classes)


@dataclass(frozen=True)
class MultiplicityProfile:
    """Exact summary of w(x) over one period.

    counts is the full per-residue vector (length = period) when the
    period fits FULL_VECTOR_MAX, None when the scan streamed.  sum_w
    always equals sum over classes of period // modulus (double count).
    """

    period: int
    min_w: int
    max_w: int
    sum_w: int
    covered: int
    counts: Optional[np.ndarray]


def _iter_chunks(period: int):
    lo = 0
    while lo < period:
        hi = min(lo + _CHUNK, period)
        yield lo, hi
        lo = hi


def multiplicity_profile(
    system: ResidueSystem, period_budget: Optional[int] = None
) -> MultiplicityProfile:
    """Scan one full period of the covering function."""
    budget = DEFAULT_PERIOD_BUDGET if period_budget is None else period_budget
    period = system.period()
    if period > budget:
        raise PeriodBudgetError(f"period {period} exceeds budget {budget}")
    if period <= FULL_VECTOR_MAX:
        counts = np.zeros(period, dtype=np.int64)
        for c in system.classes:
            counts[c.residue :: c.modulus] += 1
        return MultiplicityProfile(
            period=period,
            min_w=int(counts.min()),
            max_w=int(counts.max()),
            sum_w=int(counts.sum()),
            covered=int(np.count_nonzero(counts)),
            counts=counts,
        )
    min_w = None
    max_w = 0
    sum_w = 0
    covered = 0
    for lo, hi in _iter_chunks(period):
        block = np.zeros(hi - lo, dtype=np.int64)
        for c in system.classes:
            start = lo + (c.residue - lo) % c.modulus
            if start < hi:
                block[start - lo :: c.modulus] += 1
        min_w = int(block.min()) if min_w is None else min(min_w, int(block.min()))
        max_w = max(max_w, int(block.max()))
        sum_w += int(block.sum())
        covered += int(np.count_nonzero(block))
    return MultiplicityProfile(period, min_w, max_w, sum_w, covered, None)


@dataclass(frozen=True)
class CoverClassification:
    k: int
    period: int
    min_w: int
    max_w: int
    is_cover: bool
    is_exact: bool
    uniform_m: Optional[int]
    is_trivial: bool


def classify(
    system: ResidueSystem, period_budget: Optional[int] = None
) -> CoverClassification:
    """Cover / exact cover / uniform m-cover flags from one period scan.

    The system is trivial exactly when every modulus is 1.
    """
    prof = multiplicity_profile(system, period_budget)
    uniform = prof.min_w == prof.max_w
    return CoverClassification(
        k=len(system),
        period=prof.period,
        min_w=prof.min_w,
        max_w=prof.max_w,
        is_cover=prof.min_w >= 1,
        is_exact=prof.min_w == 1 and prof.max_w == 1,
        uniform_m=prof.min_w if uniform else None,
        is_trivial=all(n == 1 for n in system.moduli()),
    )


def density_union(
    system: ResidueSystem, period_budget: Optional[int] = None
) -> Fraction:
    """Natural density of the union of the classes, exact."""
    prof = multiplicity_profile(system, period_budget)
    return Fraction(prof.covered, prof.period)


def mu_of_divisor_closure(values: Iterable[int]) -> int:
    """mu(D(R)): totient mass of the divisor closure of a finite set.

    D(R) is the set of divisors of elements of R and mu assigns each m
    the weight phi(m), so mu(D({m})) = sum_{d | m} phi(d) = m.
    """
    closure: set[int] = set()
    for v in values:
        if v < 1:
            raise ValueError(f"divisor closure needs positive integers, got {v}")
        closure.update(divisor_list(v))
    return sum(euler_phi(d) for d in closure)


@dataclass(frozen=True)
class DualCheck:
    """Two independent computations of one quantity, kept for reporting."""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _inclusion_exclusion_density(moduli: Sequence[int]) -> Fraction:
    # sum over nonempty subsets I of (-1)**(|I|+1) / lcm(I), by depth-first
    # walk keeping the running lcm
    total = Fraction(0)
    k = len(moduli)

    def walk(i: int, current_lcm: int, size: int):
        nonlocal total
        if i == k:
            if size:
                total += Fraction((-1) ** (size + 1), current_lcm)
            return
        walk(i + 1, current_lcm, size)
        walk(i + 1, math.lcm(current_lcm, moduli[i]), size + 1)

    walk(0, 1, 0)
    return total


def check_density_identity(
    moduli: Sequence[int], period_budget: Optional[int] = None
) -> DualCheck:
    """Density of union of n_i Z, scanned vs inclusion-exclusion.

    The closed density identity for union of n_i Z reduces, after the
    Euler-factor cancellation recorded in the package docs, to
    sum_{I != empty} (-1)**(|I|+1) / lcm(n_i : i in I); the scan side is
    computed independently over one period.
    """
    if not moduli:
        raise ValueError("need at least one modulus")
    if len(moduli) > _SUBSET_LIMIT:
        raise ValueError(f"inclusion-exclusion limited to {_SUBSET_LIMIT} moduli")
    system = ResidueSystem.from_pairs([(0, n) for n in moduli])
    lhs = density_union(system, period_budget)
    rhs = _inclusion_exclusion_density(list(moduli))
    return DualCheck(lhs=lhs, rhs=rhs)


@dataclass(frozen=True)
class RogersReport:
    period: int
    shifted_covered: int
    zeroed_covered: int

    @property
    def holds(self) -> bool:
        return self.shifted_covered >= self.zeroed_covered


def check_rogers(
    system: ResidueSystem, period_budget: Optional[int] = None
) -> RogersReport:
    """Covered count of the system vs the same moduli with residues zeroed."""
    prof = multiplicity_profile(system, period_budget)
    zero = multiplicity_profile(system.zeroed(), period_budget)
    return RogersReport(prof.period, prof.covered, zero.covered)


def _require_nontrivial_uniform(system: ResidueSystem, period_budget) -> CoverClassification:
    cls = classify(system, period_budget)
    if cls.uniform_m is None:
        raise ValueError("system is not a uniform cover")
    if cls.is_trivial:
        raise ValueError("system is trivial (all moduli 1)")
    return cls


@dataclass(frozen=True)
class LevelGapReport:
    """Cyclic-case index bound at one designated prime and level alpha.

    lam is the set of p-adic orders of the moduli at the designated
    prime; beta is the largest member of lam union {0} below alpha.  The
    inequality compares p**(alpha-beta) against epsilon * M * prod p_t/(p_t-1)
    over all primes of the period.  top_multiplicity is the bound at the
    full exponent: the count of the busiest modulus of maximal p-order.
    """

    period: int
    prime: int
    alpha: int
    alpha_top: int
    lam: tuple[int, ...]
    beta: int
    epsilon: Fraction
    m_value: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    top_multiplicity: int
    mult_bound: Fraction
    mult_bound_weak: Fraction
    mult_holds: bool


def check_level_gap(
    system: ResidueSystem,
    alpha: int,
    prime: Optional[int] = None,
    period_budget: Optional[int] = None,
) -> LevelGapReport:
    """Evaluate the index bound for uniform covers of Z at one (prime, alpha)."""
    _require_nontrivial_uniform(system, period_budget)
    moduli = system.moduli()
    period = system.period()
    fact = factorize(period)
    if not fact.pairs:
        raise ValueError("trivial period, no primes to designate")
    p = fact.pairs[-1][0] if prime is None else prime
    alpha_top = fact.ord_of(p)
    if alpha_top == 0:
        raise ValueError(f"{p} does not divide the period {period}")
    orders = [factorize(n).ord_of(p) if n % p == 0 else 0 for n in moduli]
    lam = tuple(sorted(set(orders)))
    if alpha < 1 or alpha not in lam:
        raise ValueError(f"alpha must be a positive member of {lam}, got {alpha}")
    beta = max(v for v in set(lam) | {0} if v < alpha)
    epsilon = Fraction(1)
    for q, e in fact.pairs:
        if q != p:
            epsilon *= 1 - Fraction(1, q ** (e + 1))
    epsilon *= 1 - Fraction(1, p ** (alpha_top - alpha + 1))
    mult = Counter(moduli)
    p_alpha = p**alpha
    m_value = max(mult[n] for n in mult if n % p_alpha == 0)
    mertens = Fraction(1)
    for q, _ in fact.pairs:
        mertens *= Fraction(q, q - 1)
    lhs = Fraction(p ** (alpha - beta))
    rhs = epsilon * m_value * mertens
    top_mult = max(
        mult[n] for n, o in zip(moduli, orders) if o == alpha_top
    )
    others = Fraction(1)
    for q, _ in fact.pairs:
        if q != p:
            others *= Fraction(q - 1, q)
    mult_bound = p * others
    r = len(fact.pairs)
    mult_bound_weak = Fraction(p, r)
    return LevelGapReport(
        period=period,
        prime=p,
        alpha=alpha,
        alpha_top=alpha_top,
        lam=lam,
        beta=beta,
        epsilon=epsilon,
        m_value=m_value,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        top_multiplicity=top_mult,
        mult_bound=mult_bound,
        mult_bound_weak=mult_bound_weak,
        mult_holds=top_mult >= mult_bound,
    )


@dataclass(frozen=True)
class SimpsonReport:
    period: int
    largest_prime: int
    max_multiplicity: int
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.largest_prime <= self.rhs


def check_simpson(
    system: ResidueSystem, period_budget: Optional[int] = None
) -> SimpsonReport:
    """Largest prime of the period vs M * prod p/(p-1) for exact covers, k > 1."""
    cls = classify(system, period_budget)
    if not cls.is_exact:
        raise ValueError("system is not an exact cover")
    if cls.k < 2:
        raise ValueError("need at least two classes")
    period = system.period()
    fact = factorize(period)
    mult = Counter(system.moduli())
    m = max(mult.values())
    rhs = Fraction(m)
    for q, _ in fact.pairs:
        rhs *= Fraction(q, q - 1)
    return SimpsonReport(
        period=period,
        largest_prime=fact.pairs[-1][0],
        max_multiplicity=m,
        rhs=rhs,
    )


def largest_modulus_multiplicity(system: ResidueSystem) -> tuple[int, int, int]:
    """(n_max, multiplicity of n_max, least prime of n_max) for moduli > 1."""
    moduli = system.moduli()
    n_max = max(moduli)
    if n_max < 2:
        raise ValueError("all moduli are 1")
    mult = Counter(moduli)[n_max]
    return n_max, mult, least_prime(n_max)


def generate_exact_cover(script: Sequence[tuple[int, int]]) -> ResidueSystem:
    """Build an exact cover by repeatedly splitting one class into d parts.

    Start from {0 mod 1}.  A step (i, d) removes class number i (current
    order) with residue a and modulus n and inserts the d classes
    a + j*n mod d*n for j = 0..d-1 at the same position.  Every system
    reachable this way partitions Z.
    """
    classes = [ResidueClass(0, 1)]
    for step, (i, d) in enumerate(script):
        if not 0 <= i < len(classes):
            raise ValueError(f"step {step}: class index {i} out of range")
        if d < 2:
            raise ValueError(f"step {step}: split factor must be >= 2, got {d}")
        a, n = classes[i].residue, classes[i].modulus
        classes[i : i + 1] = [ResidueClass(a + j * n, d * n) for j in range(d)]
    return ResidueSystem(tuple(classes))
