"""q-rung orthopair fuzzy numbers and their transport to IFVs.

A Qrofn is a pair <mu, nu> with mu^q + nu^q <= 1, carrying its rung q >= 1.
Raising components to the q-th power identifies the rung-q space with the IFV
space, and that bijection transports everything built for IFVs back to any
rung: the three linear orders, the strong negations, and arbitrary n-ary
operators via :func:`lift`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .core import DEFAULT_POLICY, Ifv, NumericPolicy, Ordering, make_ifv
from .errors import BadParameter, DomainViolation, LengthMismatch, RungMismatch
from .isomorphism import xy_to_zx, zx_to_xy
from .negation import negate_xy
from .ops import ifwa, ifwg

__all__ = [
    "Qrofn",
    "QOrderKind",
    "QrofnScores",
    "make_qrofn",
    "scores",
    "qcmp",
    "to_ifv",
    "from_ifv",
    "lift",
    "negate_lw",
    "negate_wu",
    "qrofwa",
    "qrofwg",
]


class QOrderKind(enum.Enum):
    """Which linear order a q-ROFN comparison uses."""

    LW = "lw"  # powered score, then powered accuracy
    X = "x"  # rooted (modified) score, then rooted accuracy
    WU = "wu"  # rooted similarity, then rooted accuracy


@dataclass(frozen=True)
class Qrofn:
    """A q-rung orthopair fuzzy value <mu, nu> at rung q."""

    mu: float
    nu: float
    q: float

    def __str__(self) -> str:
        return f"⟨{self.mu!r}, {self.nu!r}⟩_q={self.q!r}"

    def to_json(self) -> dict:
        return {"mu": self.mu, "nu": self.nu, "q": self.q}

    @staticmethod
    def from_json(obj: dict, policy: NumericPolicy = DEFAULT_POLICY) -> "Qrofn":
        return make_qrofn(float(obj["mu"]), float(obj["nu"]), float(obj["q"]), policy)


class QrofnScores(NamedTuple):
    """The five ranking functionals of a q-ROFN."""

    s_lw: float  # mu^q - nu^q
    h_lw: float  # mu^q + nu^q
    s_x: float  # signed q-th root of |mu^q - nu^q|
    h_x: float  # q-th root of mu^q + nu^q
    l_wu: float  # q-th root of (1 - nu^q) / (1 + pi^q)


def _check_rung(q: float) -> float:
    q = float(q)
    if not (math.isfinite(q) and q >= 1.0):
        raise BadParameter(f"rung must be a finite real >= 1, got {q!r}")
    return q


def make_qrofn(
    mu: float, nu: float, q: float, policy: NumericPolicy = DEFAULT_POLICY
) -> Qrofn:
    """Validate and build a q-ROFN, clamping representational noise."""
    q = _check_rung(q)
    eps = policy.eps_domain
    for name, x in (("mu", mu), ("nu", nu)):
        if not math.isfinite(float(x)):
            raise DomainViolation(f"{name} must be finite, got {x!r}")
        if x < -eps or x > 1.0 + eps:
            raise DomainViolation(f"{name}={x!r} outside [0, 1] beyond tolerance {eps}")
    mu = min(1.0, max(0.0, float(mu)))
    nu = min(1.0, max(0.0, float(nu)))
    total = mu**q + nu**q
    if total > 1.0 + eps:
        raise DomainViolation(
            f"mu^q + nu^q = {total!r} exceeds 1 beyond tolerance {eps} (q={q})"
        )
    if total > 1.0:
        # Snap onto the boundary by shrinking the larger component.
        if mu >= nu:
            mu = (1.0 - nu**q) ** (1.0 / q)
        else:
            nu = (1.0 - mu**q) ** (1.0 / q)
    return Qrofn(mu, nu, q)


def scores(a: Qrofn) -> QrofnScores:
    """All five ranking functionals of ``a``.

    The rooted score carries the sign of mu - nu: it is the q-th root of
    |mu^q - nu^q|, negated when mu < nu.
    """
    q = a.q
    mq, nq = a.mu**q, a.nu**q
    s_lw = mq - nq
    h_lw = mq + nq
    s_x = math.copysign(abs(s_lw) ** (1.0 / q), s_lw)
    h_x = h_lw ** (1.0 / q)
    l_wu = ((1.0 - nq) / (2.0 - mq - nq)) ** (1.0 / q)
    return QrofnScores(s_lw, h_lw, s_x, h_x, l_wu)


def _same_rung(values: Sequence[Qrofn]) -> float:
    q = values[0].q
    for v in values[1:]:
        if v.q != q:
            raise RungMismatch(f"mixed rungs {q} and {v.q}")
    return q


def qcmp(
    a: Qrofn,
    b: Qrofn,
    ord: QOrderKind = QOrderKind.LW,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Ordering:
    """Three-valued comparison of same-rung q-ROFNs under the chosen order."""
    _same_rung([a, b])
    sa, sb = scores(a), scores(b)
    if ord is QOrderKind.LW:
        ka, kb = (sa.s_lw, sa.h_lw), (sb.s_lw, sb.h_lw)
    elif ord is QOrderKind.X:
        ka, kb = (sa.s_x, sa.h_x), (sb.s_x, sb.h_x)
    else:
        ka, kb = (sa.l_wu, sa.h_x), (sb.l_wu, sb.h_x)
    if not policy.close(ka[0], kb[0]):
        return Ordering.LESS if ka[0] < kb[0] else Ordering.GREATER
    if not policy.close(ka[1], kb[1]):
        return Ordering.LESS if ka[1] < kb[1] else Ordering.GREATER
    return Ordering.EQUAL


def to_ifv(a: Qrofn, policy: NumericPolicy = DEFAULT_POLICY) -> Ifv:
    """Rung transport: <mu, nu> -> <mu^q, nu^q>."""
    return make_ifv(a.mu**a.q, a.nu**a.q, policy)


def from_ifv(a: Ifv, q: float, policy: NumericPolicy = DEFAULT_POLICY) -> Qrofn:
    """Inverse rung transport: <mu, nu> -> <mu^(1/q), nu^(1/q)> at rung q."""
    q = _check_rung(q)
    return make_qrofn(a.mu ** (1.0 / q), a.nu ** (1.0 / q), q, policy)


def lift(
    f: Callable[..., Ifv],
    args: Sequence[Qrofn],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Qrofn:
    """Transport an n-ary IFV operator to q-ROFNs by conjugation.

    Maps each argument to its IFV image, applies ``f``, and maps the result
    back at the shared rung.  All arguments must carry the same rung.
    """
    if not args:
        raise LengthMismatch("lift needs at least one argument")
    q = _same_rung(args)
    return from_ifv(f(*(to_ifv(a, policy) for a in args)), q, policy)


def negate_lw(a: Qrofn, policy: NumericPolicy = DEFAULT_POLICY) -> Qrofn:
    """Strong negation for the LW order, in closed form.

    Equals the lifted XY negation; the closed form avoids the transport
    round-trip.  Branch selection on mu vs nu uses ``eps_order``.
    """
    q = a.q
    mq, nq = a.mu**q, a.nu**q
    root = lambda x: max(0.0, x) ** (1.0 / q)  # noqa: E731
    if policy.close(a.mu, a.nu):
        return make_qrofn(root(0.5 - mq), root(0.5 - nq), q, policy)
    if a.mu > a.nu:
        return make_qrofn(
            root((1.0 - mq - nq) / 2.0), root((1.0 + mq - 3.0 * nq) / 2.0), q, policy
        )
    return make_qrofn(
        root((1.0 + nq - 3.0 * mq) / 2.0), root((1.0 - mq - nq) / 2.0), q, policy
    )


def negate_wu(a: Qrofn, policy: NumericPolicy = DEFAULT_POLICY) -> Qrofn:
    """Strong negation for the Wu order: conjugate the XY negation by both
    the rung transport and the order isomorphism."""
    img = zx_to_xy(to_ifv(a, policy), policy)
    neg = negate_xy(img, policy)
    return from_ifv(xy_to_zx(neg, policy), a.q, policy)


def qrofwa(
    values: Sequence[Qrofn],
    weights: Sequence[float],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Qrofn:
    """Weighted averaging aggregator at any rung (lifted from IFVs)."""
    if len(values) != len(weights):
        raise LengthMismatch(f"{len(values)} values vs {len(weights)} weights")
    return lift(lambda *ifvs: ifwa(ifvs, weights, policy), values, policy)


def qrofwg(
    values: Sequence[Qrofn],
    weights: Sequence[float],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Qrofn:
    """Weighted geometric aggregator at any rung (lifted from IFVs)."""
    if len(values) != len(weights):
        raise LengthMismatch(f"{len(values)} values vs {len(weights)} weights")
    return lift(lambda *ifvs: ifwg(ifvs, weights, policy), values, policy)
