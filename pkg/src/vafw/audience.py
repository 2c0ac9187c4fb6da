"""Audience analysis: acceptance across every possible value ranking.

An argument is Objective when every audience (total value order) accepts it,
Indefensible when none does, Subjective otherwise.  Acceptance under one
audience means membership of the unique preferred extension when the fast
path applies; frameworks with monochromatic cycles fall back to sceptical
acceptance over the oracle's preferred extensions, and the report says so.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Mapping

from .core import (DEFAULT_LIMIT, PartialValueOrder, TotalValueOrder, Vaf,
                   has_monochromatic_cycle, induced_defeat_graph)
from .errors import VafError
from .semantics import extend_algorithm, preferred_extensions

DEFAULT_MAX_VALUES = 8


class Status(enum.Enum):
    OBJECTIVE = "Objective"
    SUBJECTIVE = "Subjective"
    INDEFENSIBLE = "Indefensible"

    def __str__(self) -> str:
        return self.value


def enumerate_total_orders(values, max_values: int = DEFAULT_MAX_VALUES) -> tuple:
    """All total orders over ``values``, rankings in lexicographic order."""
    values = sorted(values)
    if len(values) > max_values:
        raise VafError("TooManyValues",
                       f"{len(values)} values would need {len(values)}! audiences; "
                       f"the limit is {max_values}")
    return tuple(TotalValueOrder(p) for p in permutations(values))


def accepted_under(vaf: Vaf, order: TotalValueOrder, limit=DEFAULT_LIMIT) -> frozenset:
    """The set of arguments this audience accepts."""
    members, _ = _accepted_under(vaf, order, limit)
    return members


def _accepted_under(vaf: Vaf, order: TotalValueOrder, limit):
    if not has_monochromatic_cycle(vaf):
        return extend_algorithm(vaf, order), False
    preferred = preferred_extensions(induced_defeat_graph(vaf, order), limit)
    sceptical = frozenset.intersection(*preferred) if preferred else frozenset()
    return sceptical, True


@dataclass(frozen=True)
class StatusReport:
    statuses: Mapping[str, Status]
    accepted: Mapping[tuple, frozenset]   # ranking -> accepted arguments
    order_count: int
    used_sceptical_fallback: bool

    def accepting_orders(self, argument: str) -> tuple:
        return tuple(r for r, members in self.accepted.items() if argument in members)


def status_map(vaf: Vaf, max_values: int = DEFAULT_MAX_VALUES,
               limit=DEFAULT_LIMIT) -> StatusReport:
    """Classify every argument across all audiences."""
    orders = enumerate_total_orders(vaf.values, max_values)
    accepted = {}
    fallback = False
    for order in orders:
        members, used_fallback = _accepted_under(vaf, order, limit)
        accepted[order.ranking] = members
        fallback = fallback or used_fallback
    statuses = {}
    for a in vaf.arguments:
        hits = sum(1 for members in accepted.values() if a in members)
        if hits == len(orders):
            statuses[a] = Status.OBJECTIVE
        elif hits == 0:
            statuses[a] = Status.INDEFENSIBLE
        else:
            statuses[a] = Status.SUBJECTIVE
    return StatusReport(statuses=statuses, accepted=accepted,
                        order_count=len(orders), used_sceptical_fallback=fallback)


def status_of(vaf: Vaf, argument: str, max_values: int = DEFAULT_MAX_VALUES,
              limit=DEFAULT_LIMIT) -> Status:
    vaf._require_argument(argument)
    return status_map(vaf, max_values, limit).statuses[argument]


def linear_extensions(values, partial: PartialValueOrder,
                      max_values: int = DEFAULT_MAX_VALUES) -> tuple:
    """Every total order refining ``partial``, lexicographically.

    Backtracks over the preference DAG, always taking the smallest value whose
    required predecessors are already placed.
    """
    values = sorted(values)
    if len(values) > max_values:
        raise VafError("TooManyValues",
                       f"{len(values)} values exceed the enumeration limit of {max_values}")
    extra = set(partial.domain) - set(values)
    if extra:
        raise VafError("UnknownValue",
                       f"preference pairs mention undeclared values {sorted(extra)}")
    out = []

    def place(prefix, remaining):
        if not remaining:
            out.append(TotalValueOrder(tuple(prefix)))
            return
        for v in sorted(remaining):
            # v may come next only if nothing still unplaced outranks it
            if any(partial.prefers(w, v) for w in remaining if w != v):
                continue
            prefix.append(v)
            remaining.remove(v)
            place(prefix, remaining)
            remaining.add(v)
            prefix.pop()

    place([], set(values))
    return tuple(sorted(out, key=lambda o: o.ranking))


def accepted_under_partial(vaf: Vaf, partial: PartialValueOrder, argument: str,
                           max_values: int = DEFAULT_MAX_VALUES,
                           limit=DEFAULT_LIMIT) -> bool:
    """Accepted by every audience compatible with the stated preferences."""
    vaf._require_argument(argument)
    for order in linear_extensions(vaf.values, partial, max_values):
        members, _ = _accepted_under(vaf, order, limit)
        if argument not in members:
            return False
    return True
