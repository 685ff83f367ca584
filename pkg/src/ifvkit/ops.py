"""Operational laws on IFVs and the weighted aggregators built from them.

The binary laws come in dual pairs: ``add`` (probabilistic sum on membership,
product on non-membership) and ``mul`` (its mirror image), ``intersect`` and
``union_`` (componentwise min/max).  ``ifwa``/``ifwg`` are the weighted
averaging/geometric folds of ``add``/``scalar_mul`` resp. ``mul``/``power``.
"""

from __future__ import annotations

import math
from typing import Sequence

from .core import DEFAULT_POLICY, Ifv, NumericPolicy, make_ifv
from .errors import BadParameter, LengthMismatch

__all__ = [
    "complement_bar",
    "intersect",
    "union_",
    "add",
    "mul",
    "scalar_mul",
    "power",
    "ifwa",
    "ifwg",
]

# Above this many factors, weighted products switch to log-space to limit
# underflow; below it, direct products are faster and bit-identical to the
# naive formula.
_LOG_SPACE_THRESHOLD = 64


def complement_bar(a: Ifv) -> Ifv:
    """Component swap <mu, nu> -> <nu, mu>.

    This is the classical set complement; it is *not* an order negation for
    either linear order (every mu = nu value is a fixed point).
    """
    return Ifv(a.nu, a.mu)


def intersect(a: Ifv, b: Ifv) -> Ifv:
    """<min(mu), max(nu)>."""
    return Ifv(min(a.mu, b.mu), max(a.nu, b.nu))


def union_(a: Ifv, b: Ifv) -> Ifv:
    """<max(mu), min(nu)>."""
    return Ifv(max(a.mu, b.mu), min(a.nu, b.nu))


def add(a: Ifv, b: Ifv) -> Ifv:
    """<mu_a + mu_b - mu_a*mu_b, nu_a*nu_b>.

    Evaluated as mu_a + mu_b*(1 - mu_a), which is exact at both absorbing
    ends (top in the first slot, bottom in the second); clamped through
    make_ifv against ulp overshoot elsewhere.
    """
    return make_ifv(a.mu + b.mu * (1.0 - a.mu), a.nu * b.nu)


def mul(a: Ifv, b: Ifv) -> Ifv:
    """<mu_a*mu_b, nu_a + nu_b - nu_a*nu_b>, the dual of :func:`add`."""
    return make_ifv(a.mu * b.mu, a.nu + b.nu * (1.0 - a.nu))


def _require_positive(lam: float) -> None:
    if not (lam > 0.0):
        raise BadParameter(f"exponent must be > 0, got {lam!r}")


def scalar_mul(lam: float, a: Ifv, policy: NumericPolicy = DEFAULT_POLICY) -> Ifv:
    """<1 - (1 - mu)^lam, nu^lam> for lam > 0."""
    _require_positive(lam)
    return make_ifv(1.0 - (1.0 - a.mu) ** lam, a.nu**lam, policy)


def power(a: Ifv, lam: float, policy: NumericPolicy = DEFAULT_POLICY) -> Ifv:
    """<mu^lam, 1 - (1 - nu)^lam> for lam > 0."""
    _require_positive(lam)
    return make_ifv(a.mu**lam, 1.0 - (1.0 - a.nu) ** lam, policy)


def _weighted_product(factors: Sequence[float], weights: Sequence[float]) -> float:
    """prod(f_i^w_i), with zero factors short-circuiting to 0."""
    if any(f == 0.0 for f in factors):
        return 0.0
    if len(factors) > _LOG_SPACE_THRESHOLD:
        return math.exp(sum(w * math.log(f) for f, w in zip(factors, weights)))
    out = 1.0
    for f, w in zip(factors, weights):
        out *= f**w
    return out


def _check_lengths(values: Sequence[Ifv], weights: Sequence[float]) -> None:
    if len(values) != len(weights):
        raise LengthMismatch(f"{len(values)} values vs {len(weights)} weights")
    if not values:
        raise LengthMismatch("need at least one value")


def ifwa(
    values: Sequence[Ifv],
    weights: Sequence[float],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Ifv:
    """Weighted averaging fold: <1 - prod(1-mu_i)^w_i, prod(nu_i)^w_i>."""
    _check_lengths(values, weights)
    mu = 1.0 - _weighted_product([1.0 - v.mu for v in values], weights)
    nu = _weighted_product([v.nu for v in values], weights)
    return make_ifv(mu, nu, policy)


def ifwg(
    values: Sequence[Ifv],
    weights: Sequence[float],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Ifv:
    """Weighted geometric fold: <prod(mu_i)^w_i, 1 - prod(1-nu_i)^w_i>."""
    _check_lengths(values, weights)
    mu = _weighted_product([v.mu for v in values], weights)
    nu = 1.0 - _weighted_product([1.0 - v.nu for v in values], weights)
    return make_ifv(mu, nu, policy)
