"""Move heuristics: single added argument, single attack, desired status.

Candidate moves come from a parity-based template catalogue keyed by the
target's current and desired status; every candidate is then replayed against
the audience analysis and only moves that actually achieve the desired status
are suggested.  The catalogue is a heuristic (it intentionally over-generates
where its phrasing is ambiguous); verification is what makes suggestions
sound.  An exhaustive mode tries every (existing argument, value) pair
instead, for coverage diagnostics at desk scale.
"""
from __future__ import annotations

from dataclasses import dataclass

from .audience import DEFAULT_MAX_VALUES, Status, status_of
from .chains import decompose_chains
from .core import DEFAULT_LIMIT, Vaf
from .errors import VafError


@dataclass(frozen=True)
class Move:
    new_argument: str
    new_value: str
    attack_target: str
    template: str = "manual"


def fresh_argument_id(vaf: Vaf) -> str:
    k = 1
    while vaf.has_argument(f"n{k}"):
        k += 1
    return f"n{k}"


def apply_move(vaf: Vaf, move: Move) -> Vaf:
    """A new framework with the move's argument and its one attack added."""
    if vaf.has_argument(move.new_argument):
        raise VafError("DuplicateArgumentId",
                       f"argument {move.new_argument!r} already exists")
    vaf._require_argument(move.attack_target)
    if move.new_value not in vaf.values:
        raise VafError("UnknownValue",
                       f"value {move.new_value!r} is not declared by the framework")
    argument_values = dict(vaf.argument_values)
    argument_values[move.new_argument] = move.new_value
    return Vaf(values=vaf.values, argument_values=argument_values,
               attacks=vaf.attacks | {(move.new_argument, move.attack_target)},
               labels=vaf.labels)


def _member_sets(vaf: Vaf, target: str):
    """Chain-relative member sets the templates draw their targets from."""
    deco = decompose_chains(vaf)
    own_chains = [deco.chains[i] for i in deco.chains_of(target)]
    odd_pred, even_pred, own_odd, heads = set(), set(), set(), set()
    for i, pos in deco.positions[target]:
        chain = deco.chains[i]
        heads.add(chain.head)
        for p, member in enumerate(chain.members, start=1):
            if p % 2 == 1:
                own_odd.add(member)
            if p < pos:
                (odd_pred if p % 2 == 1 else even_pred).add(member)
    attacking_odd = set()
    for chain in own_chains:
        for attacker in vaf.attackers_of(chain.head):
            for i, _ in deco.positions[attacker]:
                for p, member in enumerate(deco.chains[i].members, start=1):
                    if p % 2 == 1:
                        attacking_odd.add(member)
    return {"self": {target}, "odd-predecessor": odd_pred,
            "even-predecessor": even_pred, "own-chain-odd-member": own_odd,
            "attacking-chain-odd-member": attacking_odd, "own-chain-head": heads}


# (current, desired) -> ordered (member set, colour rule) pairs.
_CATALOGUE = {
    (Status.OBJECTIVE, Status.INDEFENSIBLE): (
        ("self", "same"), ("odd-predecessor", "same")),
    (Status.OBJECTIVE, Status.SUBJECTIVE): (
        ("attacking-chain-odd-member", "either"), ("own-chain-head", "different")),
    (Status.INDEFENSIBLE, Status.OBJECTIVE): (
        ("odd-predecessor", "same"),),
    (Status.INDEFENSIBLE, Status.SUBJECTIVE): (
        ("attacking-chain-odd-member", "either"), ("own-chain-odd-member", "either"),
        ("own-chain-head", "different")),
    (Status.SUBJECTIVE, Status.OBJECTIVE): (
        ("odd-predecessor", "same"), ("attacking-chain-odd-member", "either")),
    (Status.SUBJECTIVE, Status.INDEFENSIBLE): (
        ("attacking-chain-odd-member", "either"), ("self", "either"),
        ("even-predecessor", "either"), ("odd-predecessor", "same")),
}


def _colours(vaf: Vaf, attacked: str, rule: str):
    same = vaf.value_of(attacked)
    different = [v for v in sorted(vaf.values) if v != same]
    if rule == "same":
        return [same]
    if rule == "different":
        return different
    return [same] + different


def _require_dichromatic(vaf: Vaf):
    if len(vaf.used_values) > 2:
        raise VafError("NotDichromatic",
                       "move templates are colour-based and need at most 2 values in use")


def candidate_moves(vaf: Vaf, target: str, desired: Status,
                    max_values: int = DEFAULT_MAX_VALUES,
                    limit=DEFAULT_LIMIT) -> tuple:
    """Template expansion only; no verification.  Deterministic order."""
    vaf._require_argument(target)
    _require_dichromatic(vaf)
    current = status_of(vaf, target, max_values, limit)
    if current == desired:
        raise VafError("StatusAlreadyDesired",
                       f"{target!r} is already {desired.value}")
    members = _member_sets(vaf, target)
    fresh = fresh_argument_id(vaf)
    moves, seen = [], set()
    for member_kind, colour_rule in _CATALOGUE[(current, desired)]:
        template = f"attack-{member_kind}-{colour_rule}-colour"
        for attacked in sorted(members[member_kind]):
            for value in _colours(vaf, attacked, colour_rule):
                if (attacked, value) in seen:
                    continue
                seen.add((attacked, value))
                moves.append(Move(new_argument=fresh, new_value=value,
                                  attack_target=attacked, template=template))
    return tuple(moves)


def _exhaustive_moves(vaf: Vaf) -> tuple:
    fresh = fresh_argument_id(vaf)
    return tuple(Move(new_argument=fresh, new_value=value, attack_target=attacked,
                      template="exhaustive")
                 for attacked in vaf.arguments for value in sorted(vaf.values))


def suggest_moves(vaf: Vaf, target: str, desired: Status, exhaustive: bool = False,
                  max_values: int = DEFAULT_MAX_VALUES, limit=DEFAULT_LIMIT) -> tuple:
    """Moves verified to give ``target`` the desired status when replayed."""
    if exhaustive:
        vaf._require_argument(target)
        current = status_of(vaf, target, max_values, limit)
        if current == desired:
            raise VafError("StatusAlreadyDesired",
                           f"{target!r} is already {desired.value}")
        pool = _exhaustive_moves(vaf)
    else:
        pool = candidate_moves(vaf, target, desired, max_values, limit)
    verified = []
    for move in pool:
        changed = apply_move(vaf, move)
        if status_of(changed, target, max_values, limit) == desired:
            verified.append(move)
    return tuple(verified)


@dataclass(frozen=True)
class CoverageReport:
    """Diagnostic: does the template catalogue reach what brute force reaches?"""

    template_moves: tuple
    exhaustive_moves: tuple

    @property
    def missed(self) -> tuple:
        covered = {(m.attack_target, m.new_value) for m in self.template_moves}
        return tuple(m for m in self.exhaustive_moves
                     if (m.attack_target, m.new_value) not in covered)


def template_coverage_report(vaf: Vaf, target: str, desired: Status,
                             max_values: int = DEFAULT_MAX_VALUES,
                             limit=DEFAULT_LIMIT) -> CoverageReport:
    return CoverageReport(
        template_moves=suggest_moves(vaf, target, desired, False, max_values, limit),
        exhaustive_moves=suggest_moves(vaf, target, desired, True, max_values, limit))
