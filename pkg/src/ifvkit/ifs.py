"""Finite-universe intuitionistic fuzzy sets.

An Ifs assigns an IFV to every element of an ordered universe of labels.
Beyond the container this module provides the pointwise XY order, level sets,
a finite restatement of the decomposition identity, and the extension of a
crisp map between universes by fiberwise suprema.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .core import DEFAULT_POLICY, BOTTOM, Ifv, NumericPolicy, OrderKind, Ordering, cmp
from .errors import EmptySamples, NonTotalMap, UniverseMismatch
from .lattice import sup_finite

__all__ = ["Ifs", "pointwise_leq", "level_set", "decompose_check", "zadeh_extend"]


@dataclass(frozen=True)
class Ifs:
    """Map from an ordered universe of labels to IFVs, total on the universe."""

    universe: tuple[str, ...]
    values: Mapping[str, Ifv]

    def __post_init__(self) -> None:
        if set(self.values) != set(self.universe):
            missing = set(self.universe) - set(self.values)
            extra = set(self.values) - set(self.universe)
            raise UniverseMismatch(
                f"values must cover the universe exactly "
                f"(missing={sorted(missing)}, extra={sorted(extra)})"
            )

    def __getitem__(self, label: str) -> Ifv:
        return self.values[label]

    def ordered_values(self) -> list[Ifv]:
        return [self.values[x] for x in self.universe]

    def to_json(self) -> dict:
        return {
            "universe": list(self.universe),
            "values": {x: self.values[x].to_json() for x in self.universe},
        }

    @staticmethod
    def from_json(obj: dict, policy: NumericPolicy = DEFAULT_POLICY) -> "Ifs":
        universe = tuple(obj["universe"])
        values = {x: Ifv.from_json(obj["values"][x], policy) for x in universe}
        return Ifs(universe, values)

    @staticmethod
    def from_pairs(
        universe: Sequence[str],
        pairs: Iterable[tuple[float, float]],
        policy: NumericPolicy = DEFAULT_POLICY,
    ) -> "Ifs":
        from .core import make_ifv

        values = {x: make_ifv(mu, nu, policy) for x, (mu, nu) in zip(universe, pairs)}
        if len(values) != len(universe):
            raise UniverseMismatch("one (mu, nu) pair per universe element required")
        return Ifs(tuple(universe), values)


def _require_same_universe(i1: Ifs, i2: Ifs) -> None:
    if i1.universe != i2.universe:
        raise UniverseMismatch(f"universes differ: {i1.universe} vs {i2.universe}")


def pointwise_leq(i1: Ifs, i2: Ifs, policy: NumericPolicy = DEFAULT_POLICY) -> bool:
    """True iff i1(x) <= i2(x) under the XY order for every x."""
    _require_same_universe(i1, i2)
    return all(
        cmp(i1[x], i2[x], OrderKind.XY, policy) is not Ordering.GREATER
        for x in i1.universe
    )


def level_set(i: Ifs, alpha: Ifv, policy: NumericPolicy = DEFAULT_POLICY) -> set[str]:
    """Labels whose value is >= alpha under the XY order."""
    return {
        x
        for x in i.universe
        if cmp(i[x], alpha, OrderKind.XY, policy) is not Ordering.LESS
    }


def decompose_check(
    i: Ifs, samples: Sequence[Ifv], policy: NumericPolicy = DEFAULT_POLICY
) -> bool:
    """Finite restatement of the decomposition identity.

    For each x, the supremum of the sampled values whose level set contains x
    must reproduce i(x).  Holds whenever ``samples`` contains every value
    attained by ``i``.
    """
    if not samples:
        raise EmptySamples("decomposition check needs at least one sample value")
    for x in i.universe:
        witnesses = [
            alpha
            for alpha in samples
            if cmp(i[x], alpha, OrderKind.XY, policy) is not Ordering.LESS
        ]
        if not witnesses:
            return False
        rebuilt = sup_finite(witnesses, OrderKind.XY, policy)
        if cmp(rebuilt, i[x], OrderKind.XY, policy) is not Ordering.EQUAL:
            return False
    return True


def zadeh_extend(
    i: Ifs,
    f: Callable[[str], str] | Mapping[str, str],
    target: Sequence[str],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Ifs:
    """Push ``i`` forward along a crisp map by fiberwise XY suprema.

    Elements of ``target`` with an empty preimage get <0, 1>.  ``f`` must be
    defined on every universe element and land inside ``target``.
    """
    if isinstance(f, Mapping):
        mapping = f
        missing = [x for x in i.universe if x not in mapping]
        if missing:
            raise NonTotalMap(f"map undefined on {missing}")
    else:
        try:
            mapping = {x: f(x) for x in i.universe}
        except KeyError as exc:
            raise NonTotalMap(f"map undefined on {exc.args[0]!r}") from exc
    target_set = set(target)
    for x, y in mapping.items():
        if y not in target_set:
            raise NonTotalMap(f"image {y!r} of {x!r} not in target universe")
    fibers: dict[str, list[Ifv]] = {y: [] for y in target}
    for x in i.universe:
        fibers[mapping[x]].append(i[x])
    values = {
        y: sup_finite(vals, OrderKind.XY, policy) if vals else BOTTOM
        for y, vals in fibers.items()
    }
    return Ifs(tuple(target), values)
