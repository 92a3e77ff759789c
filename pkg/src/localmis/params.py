"""Constant schedules shared by the algorithm catalog.

Two schedules live here.  ``ParamProfile`` carries the weighted-procedure
constants (tau, ell, beta, k, the a-sequence, and the phase length T), in a
"paper" instantiation that applies the literal formulas and a "desk"
instantiation that keeps the recurrences but takes the base constants as
inputs.  ``intervals_regular`` builds the separate rank-interval schedule
used by the two-round procedure on regular graphs.

Iterated logarithms are base 2 throughout; the choice is internal and only
consistency matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import (
    DegenerateK,
    DegenerateProfile,
    DeltaTooSmall,
    InvalidConstants,
)

__all__ = [
    "ParamProfile",
    "default_desk_profile",
    "intervals_regular",
    "log_star",
    "profile_desk",
    "profile_paper",
]


def log_star(x: float) -> int:
    """Number of iterated base-2 logarithms needed to bring x to <= 1."""
    if x <= 0:
        raise ValueError("log_star requires x > 0")
    count = 0
    while x > 1:
        x = math.log2(x)
        count += 1
    return count


def _a_sequence(beta: float, ell: float, k: int) -> tuple[float, ...]:
    """a_1 = 10*beta, a_{i+1} = e^(ell*a_i) / (16*ell); k+1 entries."""
    a = [10.0 * beta]
    for _ in range(k):
        nxt = math.exp(min(ell * a[-1], 700.0)) / (16.0 * ell)
        a.append(nxt)
    return tuple(a)


@dataclass(frozen=True)
class ParamProfile:
    """Weight cap and interval constants for the weighted procedures.

    ``a_seq`` holds a_1..a_{k+1}.  ``T`` is the pre-shattering iteration
    count; None when the literal formula degenerates (ell = 1) and no desk
    override was supplied.  ``feasible`` records whether ell*a_k*sqrt(tau)
    <= 1/2, the condition the interval-branch inclusion bound needs; profiles
    failing it still run, they just do not support that bound check.
    """

    delta: int
    tau: float
    ell: float
    beta: float
    k: int
    a_seq: tuple[float, ...]
    T: int | None
    mode: str  # "paper" | "desk"
    degenerate_k: bool = False
    truncated_from: int | None = None
    feasible: bool = True

    def __post_init__(self):
        if not (0 < self.tau <= 1):
            raise InvalidConstants(f"tau must be in (0, 1], got {self.tau}")
        if self.ell < 1:
            raise InvalidConstants(f"ell must be >= 1, got {self.ell}")
        if self.beta <= 0:
            raise InvalidConstants(f"beta must be positive, got {self.beta}")
        if len(self.a_seq) != self.k + 1:
            raise InvalidConstants("a_seq must carry k+1 entries")
        if self.k >= 1 and any(
            self.a_seq[i + 1] <= self.a_seq[i] for i in range(self.k)
        ):
            raise InvalidConstants(
                f"a-sequence is not strictly increasing: {self.a_seq}"
            )

    @property
    def sqrt_tau(self) -> float:
        return math.sqrt(self.tau)

    @property
    def log_ell_delta(self) -> float:
        """ln(Delta)/ln(ell); +inf when ell = 1 (the bound term degenerates)."""
        if self.delta <= 1:
            return 0.0
        if self.ell <= 1:
            return math.inf
        return math.log(self.delta) / math.log(self.ell)

    def with_T(self, T: int) -> "ParamProfile":
        return replace(self, T=int(T))

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "tau": self.tau,
            "ell": self.ell,
            "beta": self.beta,
            "k": self.k,
            "T": self.T,
            "mode": self.mode,
        }


def profile_paper(delta: int) -> ParamProfile:
    """The literal constant formulas at maximum degree ``delta``.

    tau = 1/(lg lg lg Delta), ell = (log*(1/tau))^(1/100),
    beta = log*(1/tau)/ell, k = floor(log*(1/tau)/100),
    T = ceil(10^6 * log(Delta)/log(ell)).

    At any desk-reachable Delta, k evaluates to 0; the profile records this
    (``degenerate_k``) and is rejected by algorithms that need k >= 1.  When
    ell = 1 the T formula is undefined and T is None.
    """
    if delta <= 16:
        # lg lg lg delta <= 1 here, so tau = 1/(lg lg lg delta) >= 1
        raise DegenerateProfile(
            f"tau = 1/(lg lg lg {delta}) is not below 1; need delta > 16"
        )
    lll = math.log2(math.log2(math.log2(delta)))
    tau = 1.0 / lll
    ls = log_star(1.0 / tau)
    ell = ls ** (1.0 / 100.0)
    beta = ls / ell
    k = ls // 100
    a_seq = _a_sequence(beta, ell, k)
    if ell > 1:
        T = math.ceil(1e6 * math.log(delta) / math.log(ell))
    else:
        T = None
    feasible = k >= 1 and ell * a_seq[k - 1] * math.sqrt(tau) <= 0.5
    return ParamProfile(
        delta=int(delta),
        tau=tau,
        ell=ell,
        beta=beta,
        k=int(k),
        a_seq=a_seq,
        T=T,
        mode="paper",
        degenerate_k=(k == 0),
        feasible=feasible,
    )


def profile_desk(
    delta: int,
    tau: float,
    ell: float,
    beta: float,
    k: int,
    T: int | None = None,
) -> ParamProfile:
    """Desk-scale profile: supplied base constants, same recurrences.

    The requested k is truncated down to the largest value keeping
    ell*a_k*sqrt(tau) <= 1/2 (the interval-branch feasibility condition) but
    never below 1; when even k = 1 fails the condition the profile is
    returned with ``feasible = False``.
    """
    if k < 1:
        raise InvalidConstants("desk profiles require k >= 1")
    if beta * math.sqrt(tau) > 0.99:
        raise InvalidConstants(
            f"beta*sqrt(tau) = {beta * math.sqrt(tau):.4f} > 99/100; the "
            "low-desire candidacy bound loses positivity"
        )
    if T is not None and T < 1:
        raise InvalidConstants("T must be a positive iteration count")

    full_a = _a_sequence(beta, ell, k)
    k_eff = 0
    for i in range(1, k + 1):
        if ell * full_a[i - 1] * math.sqrt(tau) <= 0.5:
            k_eff = i
    feasible = k_eff >= 1
    if k_eff == 0:
        k_eff = 1
    a_seq = full_a[: k_eff + 1]
    return ParamProfile(
        delta=int(delta),
        tau=float(tau),
        ell=float(ell),
        beta=float(beta),
        k=int(k_eff),
        a_seq=a_seq,
        T=None if T is None else int(T),
        mode="desk",
        truncated_from=k if k_eff != k else None,
        feasible=feasible,
    )


def default_desk_profile(delta: int, T: int = 20) -> ParamProfile:
    """Convenience profile with visible desk-scale dynamics."""
    return profile_desk(delta=delta, tau=0.1, ell=2.0, beta=1.0, k=1, T=T)


# -- rank-interval schedule for the regular two-round procedure ----------------

_REGULAR_A1 = 5.0


def _regular_a_sequence(k: int) -> list[float]:
    """a_1 = 5, a_{i+1} = e^(a_i - 3); k+1 entries."""
    a = [_REGULAR_A1]
    for _ in range(k):
        a.append(math.exp(min(a[-1] - 3.0, 700.0)))
    return a


def intervals_regular(
    delta: int,
    k_override: int | None = None,
    *,
    paper_domain: bool = True,
) -> list[tuple[float, float]]:
    """Rank intervals (b_i, b_{i+1}] with b_i = a_i/delta for the regular rule.

    Without an override, k = floor(log*(delta)/10), which is 0 at every desk
    scale (DegenerateK).  An override replaces that count but never bypasses
    the safeguard b_i <= 1/100 for i <= k.  ``paper_domain=False`` relaxes
    both the delta >= 1000 gate and the 1/100 safeguard; the bound-checking
    harness uses it to probe small-delta instances where the quantitative
    guarantees are verified empirically instead of by the derivation's
    sufficient conditions.
    """
    if paper_domain and delta < 1000:
        raise DeltaTooSmall(
            f"the regular interval schedule assumes delta > 1000, got {delta}"
        )
    if delta < 1:
        raise DeltaTooSmall("delta must be positive")
    if k_override is not None:
        if k_override < 1:
            raise DegenerateK("k_override must be >= 1")
        k_req = k_override
    else:
        k_req = log_star(delta) // 10
        if k_req == 0:
            raise DegenerateK(
                f"floor(log*({delta})/10) = 0; pass k_override for desk runs"
            )
    a = _regular_a_sequence(k_req)
    k_eff = k_req
    if paper_domain:
        k_eff = 0
        for i in range(1, k_req + 1):
            if a[i - 1] / delta <= 0.01:
                k_eff = i
        if k_eff == 0:
            raise DegenerateK(
                f"b_1 = {a[0] / delta:.4f} > 1/100 at delta = {delta}"
            )
    return [
        (a[i] / delta, min(a[i + 1] / delta, 1.0)) for i in range(k_eff)
    ]
