"""The prime-product threshold c(M) and quantities derived from it.

c(M) is the smallest positive integer x with prod_{p <= x} p/(p-1) <= x/M.
The scan is exact: the product is carried as an integer pair and every
comparison is a cross multiplication.  Since (1/x) prod_{p <= x} p/(p-1)
never increases (equality at primes, strict decrease at composites), the
first x satisfying the inequality is the threshold, the inequality fails
at every smaller x, and c(M) can never be prime.

alpha(M) = 2 + floor(log2(zeta(2) c(M))) is floored in binary64; when the
value sits within 1e-9 of an integer the floor is re-derived in 256-bit
interval arithmetic before being trusted.  zeta(2) is always pi**2/6 at
working precision, never a truncated series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import mertens_product, prime_counts, primes_upto

ZETA2 = math.pi**2 / 6
EULER_GAMMA = 0.5772156649015329

ASYMPTOTIC_NOTE = (
    "asymptotic diagnostics (e**gamma * M * ln M scale) are heuristic "
    "scale checks, not verified bounds"
)

_ALPHA_GUARD = 1e-9


def _scan_bound(m_hi: int) -> int:
    return 64 + int(3.0 * m_hi * max(1.0, math.log(m_hi + 2)))


def c_range(m_lo: int, m_hi: int) -> dict[int, int]:
    """c(M) for every M in [m_lo, m_hi] from one ascending scan."""
    if m_lo < 2:
        raise ValueError(f"c(M) is defined here for M >= 2, got {m_lo}")
    if m_hi < m_lo:
        raise ValueError("empty range")
    bound = _scan_bound(m_hi)
    while True:
        out = _try_c_range(m_lo, m_hi, bound)
        if out is not None:
            return out
        bound *= 2


def _try_c_range(m_lo: int, m_hi: int, bound: int) -> dict[int, int] | None:
    primes = primes_upto(bound)
    out: dict[int, int] = {}
    m = m_lo
    num = den = 1
    # x = 1 carries the empty product; M >= 2 never satisfies M*1 <= 1*1,
    # so segments start at the first prime
    for idx, p in enumerate(primes):
        num *= p
        den *= p - 1
        seg_lo = p
        seg_hi = primes[idx + 1] - 1 if idx + 1 < len(primes) else bound
        while m <= m_hi:
            t = -(-(m * num) // den)  # ceil(m * num / den)
            if t > seg_hi:
                break
            out[m] = max(t, seg_lo)
            m += 1
        if m > m_hi:
            return out
    return None


@lru_cache(maxsize=None)
def c_of(M: int) -> int:
    """Smallest x with prod_{p <= x} p/(p-1) <= x/M, exact scan."""
    return c_range(M, M)[M]


def mertens_holds_at(x: int, M: int) -> bool:
    """Exact check of the defining inequality prod_{p <= x} p/(p-1) <= x/M."""
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    return mertens_product(x) <= Fraction(x, M)


def _alpha_escalate(c: int) -> int:
    # 256-bit interval re-derivation of floor(log2(zeta(2) * c))
    from mpmath import iv, mp, mpf

    old = iv.prec
    try:
        iv.prec = 256
        z2c = iv.pi**2 / 6 * c
        v = iv.log(z2c) / iv.log(2)
        lo = int(math.floor(mpf(v.a)))
        hi = int(math.floor(mpf(v.b)))
        if lo != hi:
            raise ArithmeticError(
                f"floor(log2(zeta(2)*{c})) unresolved at 256-bit precision"
            )
        return lo
    finally:
        iv.prec = old


def alpha_floor(c: int) -> tuple[int, bool]:
    """(floor(log2(zeta(2) c)), escalated?) with the near-integer guard."""
    v = math.log2(ZETA2 * c)
    if abs(v - round(v)) < _ALPHA_GUARD:
        return _alpha_escalate(c), True
    return math.floor(v), False


@dataclass(frozen=True)
class BoundReport:
    """Derived quantities at one multiplicity bound M.

    l_value is (2 + log2(zeta(2) c)) * pi(c) * log c in binary64;
    egamma_scale is e**gamma * M * ln M, a diagnostic only (see notes).
    """

    m: int
    c: int
    pi_c: int
    theta_c: float
    alpha: int
    alpha_escalated: bool
    l_value: float
    egamma_scale: float
    notes: tuple[str, ...]


def bound_report(M: int) -> BoundReport:
    if M < 2:
        raise ValueError(f"need M >= 2, got {M}")
    c = c_of(M)
    pi_c, theta_c = prime_counts(c)
    floor_part, escalated = alpha_floor(c)
    alpha = 2 + floor_part
    l_value = (2 + math.log2(ZETA2 * c)) * pi_c * math.log(c)
    egamma_scale = math.exp(EULER_GAMMA) * M * math.log(M) if M > 1 else 0.0
    return BoundReport(
        m=M,
        c=c,
        pi_c=pi_c,
        theta_c=theta_c,
        alpha=alpha,
        alpha_escalated=escalated,
        l_value=l_value,
        egamma_scale=egamma_scale,
        notes=(ASYMPTOTIC_NOTE,),
    )


@dataclass(frozen=True)
class QBoundReport:
    """q < M prod_{p <= q} p/(p-1) forces q < c(M)."""

    q: int
    m: int
    premise: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return (not self.premise) or self.conclusion


def check_q_bound(q: int, M: int) -> QBoundReport:
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    if M < 2:
        raise ValueError(f"need M >= 2, got {M}")
    premise = Fraction(q) < M * mertens_product(q)
    conclusion = q < c_of(M)
    return QBoundReport(q=q, m=M, premise=premise, conclusion=conclusion)
