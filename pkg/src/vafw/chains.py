"""Chain analysis: same-value attack chains and parity-based status prediction.

A chain is a same-value sequence in which each member after the first has its
predecessor as sole attacker.  Decomposition rules:

* an argument with a single same-value attacker that is itself attacked at
  most once continues that attacker's chain;
* an argument with several attackers terminates the chain of each same-value
  non-terminal attacker (appearing as that chain's last member) and, if it is
  also attacked from a different value or has no such attacker to terminate,
  forms a singleton chain of its own;
* everything else (unattacked arguments, arguments attacked once from a
  different value, successors of terminated arguments) heads a new chain.

On top of the decomposition sit three predictors: a parity classifier for
frameworks using at most two values, and exact extension/objective-set
formulas for frameworks that are one simple attack cycle.  The classifier is
a predictor validated argument-by-argument against the audience oracle on the
bundled fixtures; the cycle formulas are exact on their domain and are
exhaustively cross-checked against the oracle in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .audience import Status
from .core import TotalValueOrder, Vaf, _require_order_covers, value_pref
from .errors import VafError

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class Chain:
    members: tuple
    value: str

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def head(self) -> str:
        return self.members[0]

    @property
    def last(self) -> str:
        return self.members[-1]

    @property
    def parity(self) -> str:
        return EVEN if len(self.members) % 2 == 0 else ODD


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple
    positions: Mapping[str, tuple]      # argument -> ((chain index, 1-based pos), ...)
    precedes: frozenset                 # (i, j): chain i's last member attacks chain j's head
    effective_parity: Mapping[str, str]  # chain-terminating argument -> even/odd

    def chains_of(self, argument: str) -> tuple:
        return tuple(i for i, _ in self.positions.get(argument, ()))

    def member_parity(self, argument: str) -> str:
        """Even when the argument sits at an even position in any chain."""
        positions = self.positions.get(argument, ())
        return EVEN if any(pos % 2 == 0 for _, pos in positions) else ODD


def decompose_chains(vaf: Vaf) -> ChainDecomposition:
    """Split the framework into chains; every argument lands in at least one.

    A cycle of same-value sole attackers cannot satisfy the chain shape (its
    head would be attacked from inside), so such cycles are broken at their
    smallest member; the wrap shows up as a chain preceding itself.
    """
    args = vaf.arguments
    multi = {a: len(vaf.attackers_of(a)) > 1 for a in args}

    parent = {}
    for a in args:
        attackers = vaf.attackers_of(a)
        if len(attackers) == 1:
            y = attackers[0]
            if vaf.value_of(y) == vaf.value_of(a) and not multi[y]:
                parent[a] = y

    # Break parent cycles (monochromatic sole-attacker loops) deterministically.
    state = {}
    for a in args:
        if a in state:
            continue
        trail = []
        node = a
        while node in parent and state.get(node) is None and node not in trail:
            trail.append(node)
            node = parent[node]
        if node in trail:  # fresh cycle: cut at its smallest member
            cycle = trail[trail.index(node):]
            del parent[min(cycle)]
        for seen in trail:
            state[seen] = True
        state[a] = True

    children = {a: [] for a in args}
    for a, y in parent.items():
        children[y].append(a)
    for y in children:
        children[y].sort()

    # Terminal extensions: a multi-attacked argument closes the chain running
    # up to each of its same-value attackers that still sits inside the forest.
    extension_of = {a: [] for a in args}   # forest node -> multi-attacked closers
    singleton = []
    for a in args:
        if not multi[a]:
            continue
        closers = [y for y in vaf.attackers_of(a)
                   if vaf.value_of(y) == vaf.value_of(a) and not multi[y]]
        for y in closers:
            extension_of[y].append(a)
        cross = any(vaf.value_of(y) != vaf.value_of(a) for y in vaf.attackers_of(a))
        if cross or not closers:
            singleton.append(a)

    def path_to(node):
        path = [node]
        while path[-1] in parent:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    raw = []
    roots = [a for a in args if not multi[a] and a not in parent]
    for root in roots:
        stack = [root]
        while stack:
            node = stack.pop()
            for closer in extension_of[node]:
                raw.append(path_to(node) + [closer])
            kids = children[node]
            if kids:
                stack.extend(reversed(kids))
            elif not extension_of[node]:
                raw.append(path_to(node))
    for a in sorted(singleton):
        raw.append([a])

    chains = tuple(sorted((Chain(tuple(m), vaf.value_of(m[0])) for m in raw),
                          key=lambda c: c.members))

    positions = {}
    for i, chain in enumerate(chains):
        for pos, member in enumerate(chain.members, start=1):
            positions.setdefault(member, []).append((i, pos))
    positions = {a: tuple(ps) for a, ps in positions.items()}

    heads = {}
    for i, chain in enumerate(chains):
        heads.setdefault(chain.head, []).append(i)
    precedes = set()
    for i, chain in enumerate(chains):
        for target in vaf.targets_of(chain.last):
            for j in heads.get(target, ()):
                precedes.add((i, j))

    # Shared terminus rule: even wins over odd across all chains ending there.
    effective = {}
    for chain in chains:
        prior = effective.get(chain.last)
        effective[chain.last] = EVEN if EVEN in (prior, chain.parity) else ODD
    return ChainDecomposition(chains=chains, positions=positions,
                              precedes=frozenset(precedes),
                              effective_parity=effective)


@dataclass(frozen=True)
class DichromaticClassification:
    statuses: Mapping[str, Status]
    rules: Mapping[str, str]            # argument -> which clause fired
    decomposition: ChainDecomposition


def classify_dichromatic(vaf: Vaf) -> DichromaticClassification:
    """Predict audience statuses from chain parities (at most two values used).

    An attacker of a chain head counts as an even predecessor when it occupies
    an even position in any of its chains (for chain-ending arguments this is
    exactly the shared-terminus rule: even wins).  Unattacked heads get a
    virtual even predecessor of length zero.  Clause order: an argument is
    Indefensible when it is an even member of a chain preceded only by even
    chains, or an even member of a chain with an odd predecessor that is also
    cross-attacked by an odd-positioned argument; Objective when it is odd in
    all of its chains and all of them are preceded only by even chains;
    Subjective otherwise.
    """
    used = vaf.used_values
    if len(used) > 2:
        raise VafError("NotDichromatic",
                       f"chain classification needs at most 2 values in use, got {len(used)}")
    deco = decompose_chains(vaf)

    def attacker_parity(attacker: str) -> str:
        return deco.member_parity(attacker)

    chain_pred_parities = []
    for chain in deco.chains:
        attackers = vaf.attackers_of(chain.head)
        if attackers:
            chain_pred_parities.append({attacker_parity(t) for t in attackers})
        else:
            chain_pred_parities.append({EVEN})

    statuses = {}
    rules = {}
    for a in vaf.arguments:
        positions = deco.positions[a]
        in_chain_predecessors = {deco.chains[i].members[pos - 2]
                                 for i, pos in positions if pos >= 2}
        even_chains = [i for i, pos in positions if pos % 2 == 0]
        all_odd = all(pos % 2 == 1 for _, pos in positions)

        if any(chain_pred_parities[i] == {EVEN} for i in even_chains):
            statuses[a], rules[a] = Status.INDEFENSIBLE, "even-in-even-preceded-chain"
            continue
        cross_odd = any(attacker_parity(t) == ODD
                        for t in vaf.attackers_of(a) if t not in in_chain_predecessors)
        if cross_odd and any(ODD in chain_pred_parities[i] for i in even_chains):
            statuses[a], rules[a] = Status.INDEFENSIBLE, "even-with-odd-cross-attacker"
            continue
        if all_odd and all(chain_pred_parities[i] == {EVEN} for i, _ in positions):
            statuses[a], rules[a] = Status.OBJECTIVE, "odd-with-even-attackers-only"
            continue
        statuses[a], rules[a] = Status.SUBJECTIVE, "mixed-parity"
    return DichromaticClassification(statuses=statuses, rules=rules, decomposition=deco)


def _cycle_order(vaf: Vaf) -> list:
    """The arguments of a single simple attack cycle, in attack order."""
    args = vaf.arguments
    if not args:
        raise VafError("NotASimpleCycle", "the framework is empty")
    for a in args:
        if len(vaf.targets_of(a)) != 1 or len(vaf.attackers_of(a)) != 1:
            raise VafError("NotASimpleCycle",
                           f"argument {a!r} does not have exactly one attacker "
                           "and one target")
    start = args[0]
    walk = [start]
    node = vaf.targets_of(start)[0]
    while node != start:
        walk.append(node)
        node = vaf.targets_of(node)[0]
    if len(walk) != len(args):
        raise VafError("NotASimpleCycle", "the attack graph is not one single cycle")
    if len(walk) < 2:
        raise VafError("NotASimpleCycle", "a one-argument loop is not a usable cycle")
    return walk


def _cycle_arcs(vaf: Vaf) -> list:
    """Maximal same-value runs around the cycle, each starting where the
    value changes; consecutive runs always differ in value."""
    walk = _cycle_order(vaf)
    if len(set(vaf.value_of(a) for a in walk)) != 2:
        raise VafError("NotDichromatic",
                       "the cycle formulas need exactly 2 values in use, got "
                       f"{len(set(vaf.value_of(a) for a in walk))}")
    n = len(walk)
    starts = [i for i in range(n)
              if vaf.value_of(walk[i]) != vaf.value_of(walk[i - 1])]
    arcs = []
    for k, s in enumerate(starts):
        end = starts[(k + 1) % len(starts)]
        length = (end - s) % n or n
        arcs.append([walk[(s + t) % n] for t in range(length)])
    return arcs


def dichromatic_cycle_extension(vaf: Vaf, order: TotalValueOrder) -> frozenset:
    """Exact preferred extension of a two-value simple cycle, by parity.

    Chains preceded by an even chain contribute their odd members; of the
    rest, chains carrying the preferred value contribute odd members and
    chains carrying the other value contribute even members.
    """
    _require_order_covers(vaf, order)
    arcs = _cycle_arcs(vaf)
    first, second = vaf.used_values
    preferred = first if value_pref(order, first, second) else second
    members = set()
    for k, arc in enumerate(arcs):
        before = arcs[k - 1]
        if len(before) % 2 == 0:
            members.update(arc[0::2])
        elif vaf.value_of(arc[0]) == preferred:
            members.update(arc[0::2])
        else:
            members.update(arc[1::2])
    return frozenset(members)


def objective_by_chain_theory(vaf: Vaf) -> frozenset:
    """Arguments of a two-value simple cycle accepted by every audience:
    the odd members of chains that follow an even chain."""
    arcs = _cycle_arcs(vaf)
    members = set()
    for k, arc in enumerate(arcs):
        if len(arcs[k - 1]) % 2 == 0:
            members.update(arc[0::2])
    return frozenset(members)
