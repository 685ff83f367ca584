"""Intuitionistic fuzzy values and their two linear orders.

An IFV is a pair <mu, nu> with mu, nu in [0, 1] and mu + nu <= 1.  Two linear
orders are provided:

* ``OrderKind.XY`` ranks by the score mu - nu, breaking ties by the accuracy
  mu + nu.
* ``OrderKind.ZX`` ranks by the similarity functional
  L = (1 - nu) / ((1 - mu) + (1 - nu)), breaking ties by the accuracy.

All equality decisions in comparators are taken within an explicit tolerance
carried by a :class:`NumericPolicy`; exact-real branch conditions become
tolerance bands in floating point, and the policy makes that band configurable
instead of implicit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import BadParameter, DomainViolation

__all__ = [
    "Ifv",
    "NumericPolicy",
    "OrderKind",
    "Ordering",
    "DEFAULT_POLICY",
    "BOTTOM",
    "TOP",
    "make_ifv",
    "score",
    "accuracy",
    "indeterminacy",
    "similarity_l",
    "cmp",
    "sort_key",
]


@dataclass(frozen=True)
class NumericPolicy:
    """Tolerance configuration for comparisons and domain validation.

    ``eps_order`` governs equality of scores/accuracies/similarity keys in
    comparators and branch selection; ``eps_domain`` governs how far outside
    [0, 1] (or past mu + nu = 1) a constructed value may stray before it is
    rejected rather than clamped.
    """

    eps_order: float = 1e-9
    eps_domain: float = 1e-12

    def __post_init__(self) -> None:
        if not (0.0 < self.eps_domain <= self.eps_order < 1e-3):
            raise BadParameter(
                f"require 0 < eps_domain <= eps_order < 1e-3, "
                f"got eps_domain={self.eps_domain}, eps_order={self.eps_order}"
            )

    def close(self, x: float, y: float) -> bool:
        """Equality of order keys within eps_order."""
        return abs(x - y) <= self.eps_order


DEFAULT_POLICY = NumericPolicy()


class OrderKind(enum.Enum):
    """Which linear order a comparison uses."""

    XY = "xy"  # score first, then accuracy
    ZX = "zx"  # similarity L first, then accuracy


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def reversed(self) -> "Ordering":
        return Ordering(-self.value)


@dataclass(frozen=True)
class Ifv:
    """An intuitionistic fuzzy value <mu, nu>.

    Instances are immutable; construct through :func:`make_ifv`, which
    validates and clamps.  The constructor itself does not re-validate so that
    internal formulas can assemble values they have already proven admissible.
    """

    mu: float
    nu: float

    def __str__(self) -> str:
        return f"⟨{self.mu!r}, {self.nu!r}⟩"

    def to_json(self) -> dict:
        return {"mu": self.mu, "nu": self.nu}

    @staticmethod
    def from_json(obj: dict, policy: NumericPolicy = DEFAULT_POLICY) -> "Ifv":
        return make_ifv(float(obj["mu"]), float(obj["nu"]), policy)


BOTTOM = Ifv(0.0, 1.0)
TOP = Ifv(1.0, 0.0)


def _clamp_component(x: float, eps: float, what: str) -> float:
    if not math.isfinite(x):
        raise DomainViolation(f"{what} must be finite, got {x!r}")
    if x < -eps or x > 1.0 + eps:
        raise DomainViolation(f"{what}={x!r} outside [0, 1] beyond tolerance {eps}")
    return min(1.0, max(0.0, x))


def make_ifv(mu: float, nu: float, policy: NumericPolicy = DEFAULT_POLICY) -> Ifv:
    """Validate and build an IFV, clamping representational noise.

    Values within ``eps_domain`` outside the bounds are snapped to the
    boundary so that round-trips through the order isomorphisms never fail on
    last-ulp noise.  Genuine violations raise :class:`DomainViolation`.
    """
    eps = policy.eps_domain
    mu = _clamp_component(float(mu), eps, "mu")
    nu = _clamp_component(float(nu), eps, "nu")
    if mu + nu > 1.0 + eps:
        raise DomainViolation(f"mu + nu = {mu + nu!r} exceeds 1 beyond tolerance {eps}")
    if mu + nu > 1.0:
        # Snap onto the simplex edge, shrinking the larger component.
        if mu >= nu:
            mu = 1.0 - nu
        else:
            nu = 1.0 - mu
    return Ifv(mu, nu)


def score(a: Ifv) -> float:
    """mu - nu, in [-1, 1]."""
    return a.mu - a.nu


def accuracy(a: Ifv) -> float:
    """mu + nu, in [0, 1]."""
    return a.mu + a.nu


def indeterminacy(a: Ifv) -> float:
    """1 - mu - nu, the hesitation margin."""
    return 1.0 - a.mu - a.nu


def similarity_l(a: Ifv) -> float:
    """L(a) = (1 - nu) / ((1 - mu) + (1 - nu)), in [0, 1].

    The denominator is 2 - (mu + nu) >= 1 for every admissible IFV, so no
    guard is needed.
    """
    return (1.0 - a.nu) / (2.0 - a.mu - a.nu)


def _keys(a: Ifv, ord: OrderKind) -> tuple[float, float]:
    if ord is OrderKind.XY:
        return score(a), accuracy(a)
    return similarity_l(a), accuracy(a)


def cmp(
    a: Ifv, b: Ifv, ord: OrderKind = OrderKind.XY, policy: NumericPolicy = DEFAULT_POLICY
) -> Ordering:
    """Three-valued comparison under the chosen linear order.

    Primary keys (score for XY, L for ZX) are compared first; ties within
    ``eps_order`` fall through to the accuracy.  EQUAL is returned only when
    both keys agree within ``eps_order``.
    """
    pa, sa = _keys(a, ord)
    pb, sb = _keys(b, ord)
    if not policy.close(pa, pb):
        return Ordering.LESS if pa < pb else Ordering.GREATER
    if not policy.close(sa, sb):
        return Ordering.LESS if sa < sb else Ordering.GREATER
    return Ordering.EQUAL


def sort_key(ord: OrderKind = OrderKind.XY):
    """Key function for ``sorted``: ascending in the chosen linear order.

    Uses raw (tolerance-free) keys; adequate whenever the data is not
    adversarially close to ties.
    """

    def key(a: Ifv) -> tuple[float, float]:
        return _keys(a, ord)

    return key
