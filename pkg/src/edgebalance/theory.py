"""Closed-form bounds and parity predicates on edge-balanced index sets."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import floor
from typing import Optional

from .graph import Graph


@dataclass(frozen=True)
class RegularBound:
    order: int
    regularity: int
    bound: Fraction

    @property
    def floor(self) -> int:
        return floor(self.bound)

    def to_dict(self) -> dict:
        return {"order": self.order, "regularity": self.regularity,
                "bound": str(self.bound), "floor": self.floor}


def lemma3_bound(order: int, r: int) -> Optional[RegularBound]:
    """Upper bound on the largest index of an r-regular graph of the given order.

    Only odd regularity is covered; for even r the result is None. An odd r
    with odd order cannot occur (the degree sum would be odd).
    """
    if order < 1 or r < 1:
        raise ValueError("order and regularity must be positive")
    if r % 2 == 0:
        return None
    if order % 2:
        raise ValueError(f"no {r}-regular graph has odd order {order}")
    if order % 4 == 0:
        bound = Fraction((r - 1) * order, r + 1)
    else:
        bound = Fraction((r - 1) * order + 4, r + 1)
    return RegularBound(order, r, bound)


def all_degrees_odd(g: Graph) -> bool:
    return all(d % 2 for d in g.degrees)


@dataclass(frozen=True)
class Theorem3Conditions:
    """Parity conditions on (p(G), q(G), p(H), q(H)).

    At least one must hold whenever G □ H or G[H] is strongly edge-balanced.
    """
    orders_even: bool
    sizes_even: bool
    g_order_size_even: bool
    h_order_size_even: bool
    all_odd: bool

    @property
    def any_holds(self) -> bool:
        return (self.orders_even or self.sizes_even or self.g_order_size_even
                or self.h_order_size_even or self.all_odd)

    def to_dict(self) -> dict:
        return {**asdict(self), "any_holds": self.any_holds}


def theorem3_conditions(g: Graph, h: Graph) -> Theorem3Conditions:
    pg, qg, ph, qh = g.p % 2, g.q % 2, h.p % 2, h.q % 2
    return Theorem3Conditions(
        orders_even=pg == 0 and ph == 0,
        sizes_even=qg == 0 and qh == 0,
        g_order_size_even=pg == 0 and qg == 0,
        h_order_size_even=ph == 0 and qh == 0,
        all_odd=pg == qg == ph == qh == 1,
    )
