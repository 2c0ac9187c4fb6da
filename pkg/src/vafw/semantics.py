"""Extension semantics over defeat graphs.

Two deliberately independent routes are kept side by side:

* a brute-force oracle (`preferred_extensions`, `stable_extensions`) that
  enumerates candidate sets directly from the definitions and serves as the
  ground truth in tests and cross-checks, and
* `extend_algorithm`, the fast path that repeatedly harvests undefeated
  arguments and discards everything they defeat.  It requires the framework
  to be free of monochromatic cycles, in which case the induced defeat graph
  is acyclic under any total order and the harvest provably reconstructs the
  unique preferred extension.

Do not fold one into the other; their agreement is the central cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (DEFAULT_LIMIT, DefeatGraph, TotalValueOrder, Vaf,
                   has_monochromatic_cycle, induced_defeat_graph)
from .errors import VafError


def _check_size(graph: DefeatGraph, limit):
    if limit is not None and len(graph.arguments) > limit:
        raise VafError("InstanceTooLarge",
                       f"{len(graph.arguments)} arguments exceed the oracle limit of "
                       f"{limit}; pass a higher limit (or None) to override")


def _graph_conflict_free(graph: DefeatGraph, members) -> bool:
    return not any((a, b) in graph.defeats for a in members for b in members)


def _graph_defended(graph: DefeatGraph, members) -> bool:
    for a in members:
        for defeater in graph.defeaters_of(a):
            if not any((m, defeater) in graph.defeats for m in members):
                return False
    return True


def _conflict_free_sets(graph: DefeatGraph, limit):
    """Depth-first walk over include/exclude decisions, pruning conflicts."""
    _check_size(graph, limit)
    args = sorted(graph.arguments)
    results = []

    def walk(i, chosen):
        if i == len(args):
            results.append(frozenset(chosen))
            return
        a = args[i]
        walk(i + 1, chosen)
        if (a, a) not in graph.defeats and all(
                (a, b) not in graph.defeats and (b, a) not in graph.defeats
                for b in chosen):
            chosen.append(a)
            walk(i + 1, chosen)
            chosen.pop()

    walk(0, [])
    return results


def admissible_sets(graph: DefeatGraph, limit=DEFAULT_LIMIT) -> tuple:
    """Every conflict-free set that defends all of its members."""
    candidates = _conflict_free_sets(graph, limit)
    admissible = [s for s in candidates if _graph_defended(graph, s)]
    return tuple(sorted(admissible, key=lambda s: tuple(sorted(s))))


def preferred_extensions(graph: DefeatGraph, limit=DEFAULT_LIMIT) -> tuple:
    """Maximal admissible sets, sorted for deterministic output.

    Never empty as a collection: the empty set is always admissible, so at
    worst the result is ``(frozenset(),)``.
    """
    admissible = admissible_sets(graph, limit)
    maximal = [s for s in admissible if not any(s < t for t in admissible)]
    return tuple(sorted(maximal, key=lambda s: tuple(sorted(s))))


def stable_extensions(graph: DefeatGraph, limit=DEFAULT_LIMIT) -> tuple:
    """Conflict-free sets defeating every outside argument (possibly none)."""
    out = []
    for s in _conflict_free_sets(graph, limit):
        outside = graph.arguments - s
        if all(any((m, b) in graph.defeats for m in s) for b in outside):
            out.append(s)
    return tuple(sorted(out, key=lambda s: tuple(sorted(s))))


@dataclass(frozen=True)
class SemanticsResult:
    preferred: tuple
    stable: tuple

    @property
    def unique_preferred(self) -> bool:
        return len(self.preferred) == 1


def solve(graph: DefeatGraph, limit=DEFAULT_LIMIT) -> SemanticsResult:
    return SemanticsResult(preferred=preferred_extensions(graph, limit),
                           stable=stable_extensions(graph, limit))


@dataclass(frozen=True)
class AcceptanceStatus:
    credulous: bool
    sceptical: bool


def acceptance(graph: DefeatGraph, argument: str, limit=DEFAULT_LIMIT) -> AcceptanceStatus:
    """Membership of ``argument`` across the preferred extensions."""
    graph._require_argument(argument)
    preferred = preferred_extensions(graph, limit)
    inside = [argument in s for s in preferred]
    return AcceptanceStatus(credulous=any(inside), sceptical=all(inside))


def extend_algorithm(vaf: Vaf, order: TotalValueOrder) -> frozenset:
    """Harvest the unique preferred extension of a monochromatic-cycle-free
    framework under a total value order.

    Worklist formulation of the recursive original: collect the currently
    undefeated arguments, drop everything they defeat together with all
    incident defeats, and repeat on the residue until it is empty.
    """
    if not isinstance(order, TotalValueOrder):
        raise VafError("NotATotalOrder", "the fast path needs a total value order")
    if has_monochromatic_cycle(vaf):
        raise VafError("MonochromaticCyclePresent",
                       "the framework contains a same-value attack cycle; "
                       "use the brute-force semantics instead")
    graph = induced_defeat_graph(vaf, order)
    alive = set(graph.arguments)
    pending = {a: len(graph.defeaters_of(a)) for a in alive}
    accepted = set()
    while alive:
        undefeated = {a for a in alive if pending[a] == 0}
        if not undefeated:
            # Unreachable once the precondition holds; kept as a hard stop so a
            # partial harvest can never masquerade as an extension.
            raise VafError("MonochromaticCyclePresent",
                           "no undefeated argument in a non-empty residue")
        accepted |= undefeated
        removed = set(undefeated)
        for a in undefeated:
            for t in graph.targets_of(a):
                if t in alive:
                    removed.add(t)
        alive -= removed
        for r in removed:
            for t in graph.targets_of(r):
                if t in alive:
                    pending[t] -= 1
    return frozenset(accepted)


def is_resolvable(vaf: Vaf, order, limit=DEFAULT_LIMIT) -> bool:
    """Does the audience leave exactly one preferred extension?

    Total orders on monochromatic-cycle-free frameworks resolve by
    construction; anything else is settled by the oracle.
    """
    if isinstance(order, TotalValueOrder) and not has_monochromatic_cycle(vaf):
        return True
    graph = induced_defeat_graph(vaf, order)
    return len(preferred_extensions(graph, limit)) == 1
