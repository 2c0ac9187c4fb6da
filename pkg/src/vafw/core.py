"""Core model: value-based argumentation frameworks and the defeat relation.

A framework is a directed attack graph whose arguments each promote one value
from a declared, non-empty value set.  An audience ranks the values; an attack
*defeats* its target exactly when the target's value is not strictly preferred
to the attacker's.  Attacks between arguments promoting the same value always
defeat, and so do attacks between incomparable values.  Everything downstream
(semantics, audience analysis, chain bookkeeping) is phrased over the defeat
graph induced here.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DuplicateAttackWarning, ValidationError, VafError

# Soft guard for the exponential helpers (cycle enumeration, brute-force
# semantics).  Callers can pass limit=None to lift it deliberately.
DEFAULT_LIMIT = 25


def _token_issues(token, kind: str, allow_space: bool = False):
    issues = []
    if not isinstance(token, str) or not token:
        issues.append(("InvalidIdentifier", f"{kind} must be a non-empty string, got {token!r}"))
    elif not allow_space and any(ch.isspace() for ch in token):
        issues.append(("InvalidIdentifier", f"{kind} {token!r} contains whitespace"))
    return issues


def _framework_issues(values, argument_values, attacks, labels):
    issues = []
    if not values:
        issues.append(("EmptyValueSet", "the value set must not be empty"))
    for v in sorted(values):
        issues.extend(_token_issues(v, "value id", allow_space=True))
    for a in sorted(argument_values):
        issues.extend(_token_issues(a, "argument id"))
    for a, v in sorted(argument_values.items()):
        if v not in values:
            issues.append(("UnmappedArgumentValue",
                           f"argument {a!r} promotes undeclared value {v!r}"))
    for attacker, attacked in sorted(attacks):
        for end in (attacker, attacked):
            if end not in argument_values:
                issues.append(("UnknownArgumentInAttack",
                               f"attack ({attacker!r}, {attacked!r}) references unknown argument {end!r}"))
    for a in sorted(labels):
        if a not in argument_values:
            issues.append(("UnknownArgument", f"label attached to unknown argument {a!r}"))
    return issues


@dataclass(frozen=True)
class Vaf:
    """Immutable value-based argumentation framework.

    ``argument_values`` maps every argument id to the value it promotes;
    ``attacks`` holds (attacker, attacked) pairs.  Construction validates all
    structural invariants at once and raises :class:`ValidationError` naming
    each violation.  Iteration order of every accessor is deterministic
    (lexicographic), regardless of input order.
    """

    values: frozenset
    argument_values: Mapping[str, str]
    attacks: frozenset
    labels: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", frozenset(self.values))
        object.__setattr__(self, "argument_values",
                           MappingProxyType(dict(self.argument_values)))
        object.__setattr__(self, "attacks",
                           frozenset((a, b) for a, b in self.attacks))
        object.__setattr__(self, "labels", MappingProxyType(dict(self.labels)))
        issues = _framework_issues(self.values, self.argument_values, self.attacks, self.labels)
        if issues:
            raise ValidationError(issues)
        attackers = {a: [] for a in self.argument_values}
        targets = {a: [] for a in self.argument_values}
        for attacker, attacked in sorted(self.attacks):
            attackers[attacked].append(attacker)
            targets[attacker].append(attacked)
        object.__setattr__(self, "_attackers",
                           {a: tuple(xs) for a, xs in attackers.items()})
        object.__setattr__(self, "_targets",
                           {a: tuple(xs) for a, xs in targets.items()})

    @property
    def arguments(self) -> tuple:
        """All argument ids, lexicographically sorted."""
        return tuple(sorted(self.argument_values))

    @property
    def sorted_attacks(self) -> tuple:
        return tuple(sorted(self.attacks))

    @property
    def used_values(self) -> tuple:
        """Values actually promoted by at least one argument, sorted."""
        return tuple(sorted(set(self.argument_values.values())))

    def has_argument(self, arg: str) -> bool:
        return arg in self.argument_values

    def value_of(self, arg: str) -> str:
        self._require_argument(arg)
        return self.argument_values[arg]

    def attackers_of(self, arg: str) -> tuple:
        self._require_argument(arg)
        return self._attackers[arg]

    def targets_of(self, arg: str) -> tuple:
        self._require_argument(arg)
        return self._targets[arg]

    def _require_argument(self, arg: str):
        if arg not in self.argument_values:
            raise VafError("UnknownArgument", f"no argument {arg!r} in the framework")


def validate(raw: Mapping) -> Vaf:
    """Build a :class:`Vaf` from a raw description, or raise naming every problem.

    ``raw`` carries ``values`` (list), ``arguments`` (list of ``{"id", "value",
    "label"?}`` mappings or ``(id, value)`` pairs) and ``attacks`` (list of
    pairs).  Duplicate argument ids are an error; duplicate attack pairs are
    dropped with a :class:`DuplicateAttackWarning`.
    """
    issues = []
    values = list(raw.get("values", ()))
    argument_values = {}
    labels = {}
    for entry in raw.get("arguments", ()):
        if isinstance(entry, Mapping):
            arg, value = entry.get("id"), entry.get("value")
            label = entry.get("label")
        else:
            arg, value = entry[0], entry[1]
            label = None
        if arg in argument_values:
            issues.append(("DuplicateArgumentId", f"argument {arg!r} declared twice"))
            continue
        argument_values[arg] = value
        if label is not None:
            labels[arg] = label
    attacks = []
    seen = set()
    for pair in raw.get("attacks", ()):
        attacker, attacked = pair[0], pair[1]
        if (attacker, attacked) in seen:
            warnings.warn(f"duplicate attack ({attacker!r}, {attacked!r}) dropped",
                          DuplicateAttackWarning, stacklevel=2)
            continue
        seen.add((attacker, attacked))
        attacks.append((attacker, attacked))
    issues.extend(_framework_issues(set(values), argument_values, attacks, labels))
    if issues:
        raise ValidationError(issues)
    return Vaf(values=frozenset(values), argument_values=argument_values,
               attacks=frozenset(attacks), labels=labels)


@dataclass(frozen=True)
class TotalValueOrder:
    """A strict total preference over values, most preferred first."""

    ranking: tuple

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        issues = []
        for v in ranking:
            issues.extend(_token_issues(v, "value id", allow_space=True))
        if len(set(ranking)) != len(ranking):
            issues.append(("DuplicateValue", f"ranking {ranking!r} repeats a value"))
        if issues:
            raise ValidationError(issues)
        object.__setattr__(self, "_rank", MappingProxyType(
            {v: i for i, v in enumerate(ranking)}))

    def prefers(self, v: str, w: str) -> bool:
        for value in (v, w):
            if value not in self._rank:
                raise VafError("UnknownValue", f"value {value!r} is not ranked")
        return self._rank[v] < self._rank[w]


@dataclass(frozen=True)
class PartialValueOrder:
    """A strict partial preference: the transitive closure of ``prefers`` pairs.

    Unmentioned value pairs are simply unordered, so ``prefers`` answers False
    for them; a cycle among the stated pairs is rejected at construction.
    """

    pairs: frozenset

    def __post_init__(self):
        pairs = frozenset((v, w) for v, w in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        domain = sorted({v for p in pairs for v in p})
        closure = set(pairs)
        for mid in domain:
            for v in domain:
                for w in domain:
                    if (v, mid) in closure and (mid, w) in closure:
                        closure.add((v, w))
        for v in domain:
            if (v, v) in closure:
                raise VafError("CyclicPreference",
                               f"preference pairs order value {v!r} above itself")
        object.__setattr__(self, "_closure", frozenset(closure))
        object.__setattr__(self, "domain", tuple(domain))

    def prefers(self, v: str, w: str) -> bool:
        return (v, w) in self._closure


def value_pref(order, v: str, w: str) -> bool:
    """True when ``v`` is strictly preferred to ``w`` under ``order``."""
    return order.prefers(v, w)


def _require_order_covers(vaf: Vaf, order):
    if isinstance(order, TotalValueOrder):
        if set(order.ranking) != set(vaf.values):
            raise VafError("UnknownValue",
                           "ranking must be a permutation of the framework's values; "
                           f"got {sorted(order.ranking)} for {sorted(vaf.values)}")
    elif isinstance(order, PartialValueOrder):
        extra = set(order.domain) - set(vaf.values)
        if extra:
            raise VafError("UnknownValue",
                           f"preference pairs mention undeclared values {sorted(extra)}")
    else:
        raise VafError("UnknownValue", f"not a value order: {order!r}")


def defeats(vaf: Vaf, order, attacker: str, attacked: str) -> bool:
    """True when the attack succeeds: the target's value is not preferred.

    Same-value attacks always defeat, and so do attacks across values the
    order leaves incomparable.
    """
    _require_order_covers(vaf, order)
    if (attacker, attacked) not in vaf.attacks:
        vaf._require_argument(attacker)
        vaf._require_argument(attacked)
        return False
    return not value_pref(order, vaf.value_of(attacked), vaf.value_of(attacker))


@dataclass(frozen=True)
class DefeatGraph:
    """A plain directed graph of successful attacks under some audience."""

    arguments: frozenset
    defeats: frozenset

    def __post_init__(self):
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "defeats", frozenset((a, b) for a, b in self.defeats))
        for a, b in self.defeats:
            for end in (a, b):
                if end not in self.arguments:
                    raise VafError("UnknownArgumentInAttack",
                                   f"defeat ({a!r}, {b!r}) references unknown argument {end!r}")
        defeaters = {a: [] for a in self.arguments}
        targets = {a: [] for a in self.arguments}
        for x, y in sorted(self.defeats):
            defeaters[y].append(x)
            targets[x].append(y)
        object.__setattr__(self, "_defeaters", {a: tuple(v) for a, v in defeaters.items()})
        object.__setattr__(self, "_targets", {a: tuple(v) for a, v in targets.items()})

    def defeaters_of(self, arg: str) -> tuple:
        self._require_argument(arg)
        return self._defeaters[arg]

    def targets_of(self, arg: str) -> tuple:
        self._require_argument(arg)
        return self._targets[arg]

    def _require_argument(self, arg: str):
        if arg not in self.arguments:
            raise VafError("UnknownArgument", f"no argument {arg!r} in the graph")


def induced_defeat_graph(vaf: Vaf, order) -> DefeatGraph:
    """Project the framework onto the defeats that succeed under ``order``."""
    _require_order_covers(vaf, order)
    edges = {(a, b) for a, b in vaf.attacks
             if not value_pref(order, vaf.value_of(b), vaf.value_of(a))}
    return DefeatGraph(arguments=frozenset(vaf.argument_values), defeats=frozenset(edges))


def is_conflict_free(vaf: Vaf, order, subset: Iterable) -> bool:
    """No member defeats another; value-blocked internal attacks are fine."""
    members = _known_subset(vaf, subset)
    _require_order_covers(vaf, order)
    for attacker, attacked in vaf.attacks:
        if attacker in members and attacked in members:
            if not value_pref(order, vaf.value_of(attacked), vaf.value_of(attacker)):
                return False
    return True


def is_acceptable(vaf: Vaf, order, argument: str, subset: Iterable) -> bool:
    """Every defeater of ``argument`` is itself defeated by some member."""
    vaf._require_argument(argument)
    members = _known_subset(vaf, subset)
    graph = induced_defeat_graph(vaf, order)
    for defeater in graph.defeaters_of(argument):
        if not any((m, defeater) in graph.defeats for m in members):
            return False
    return True


def is_admissible(vaf: Vaf, order, subset: Iterable) -> bool:
    members = _known_subset(vaf, subset)
    if not is_conflict_free(vaf, order, members):
        return False
    return all(is_acceptable(vaf, order, a, members) for a in members)


def _known_subset(vaf: Vaf, subset) -> frozenset:
    members = frozenset(subset)
    for a in members:
        vaf._require_argument(a)
    return members


def monochromatic_cycles(vaf: Vaf, limit=DEFAULT_LIMIT) -> tuple:
    """All simple attack cycles whose members promote a single value.

    Each cycle is rotated so its lexicographically smallest member comes
    first, and the cycles themselves are sorted; self-attacks count as
    one-cycles.  Raises InstanceTooLarge past the soft ``limit`` (pass
    ``limit=None`` to lift it).
    """
    if limit is not None and len(vaf.argument_values) > limit:
        raise VafError("InstanceTooLarge",
                       f"{len(vaf.argument_values)} arguments exceed the cycle "
                       f"enumeration limit of {limit}; pass a higher limit to override")
    found = []
    for value in vaf.used_values:
        members = {a for a, v in vaf.argument_values.items() if v == value}
        adjacency = {a: tuple(t for t in vaf.targets_of(a) if t in members)
                     for a in members}
        found.extend(_simple_cycles(members, adjacency))
    return tuple(sorted(found))


def has_monochromatic_cycle(vaf: Vaf) -> bool:
    """Cheap existence test (no enumeration): any single-value attack cycle?"""
    for value in vaf.used_values:
        members = {a for a, v in vaf.argument_values.items() if v == value}
        adjacency = {a: [t for t in vaf.targets_of(a) if t in members] for a in members}
        state = {a: 0 for a in members}  # 0 unseen, 1 on stack, 2 done
        for start in members:
            if state[start]:
                continue
            stack = [(start, iter(adjacency[start]))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                for nxt in it:
                    if state[nxt] == 1:
                        return True
                    if state[nxt] == 0:
                        state[nxt] = 1
                        stack.append((nxt, iter(adjacency[nxt])))
                        break
                else:
                    state[node] = 2
                    stack.pop()
    return False


def _simple_cycles(nodes, adjacency) -> list:
    """Deterministic simple-cycle enumeration for small graphs.

    DFS from each start node visiting only ids >= start, so every cycle is
    reported exactly once, rooted at its smallest member.
    """
    cycles = []
    for start in sorted(nodes):
        stack = [(start, iter(adjacency.get(start, ())))]
        path = [start]
        on_path = {start}
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt == start:
                    cycles.append(tuple(path))
                    continue
                if nxt < start or nxt in on_path:
                    continue
                stack.append((nxt, iter(adjacency.get(nxt, ()))))
                path.append(nxt)
                on_path.add(nxt)
                advanced = True
                break
            if not advanced:
                stack.pop()
                path.pop()
                on_path.discard(node)
    return cycles
