"""Budgeted composition-error injection.

An error plan touches each size group at most once, so the group distance of
the corrupted multiset from the original equals the plan length exactly
(multiple edits inside one group would merge into a single error).  A mass
moved across sizes is therefore modeled as delete + insert: two plan entries,
two changed groups.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .compositions import CompositionMultiset, Pair, distance

SUBSTITUTE = "substitute"
INSERT = "insert"
DELETE = "delete"
REPLACE = "replace"


class PlanError(ValueError):
    """Malformed error plan: duplicate size, no-op action, or bad pair."""


@dataclass(frozen=True)
class ErrorEvent:
    size: int
    action: str
    args: tuple

    def to_line(self) -> str:
        if self.action == SUBSTITUTE:
            old, new = self.args
            return f"{self.size} substitute {old} {new}"
        if self.action == INSERT:
            (a, b), = self.args
            return f"{self.size} insert {a},{b}"
        if self.action == DELETE:
            (mass,) = self.args
            return f"{self.size} delete {mass}"
        pairs = " ".join(f"{a},{b}" for a, b in self.args[0])
        return f"{self.size} replace {pairs}".rstrip()


@dataclass(frozen=True)
class ErrorPlan:
    events: tuple[ErrorEvent, ...]

    def __post_init__(self) -> None:
        sizes = [e.size for e in self.events]
        if len(set(sizes)) != len(sizes):
            raise PlanError("plan touches one size group twice")

    def __len__(self) -> int:
        return len(self.events)

    def to_text(self) -> str:
        return "".join(e.to_line() + "\n" for e in self.events)

    @classmethod
    def from_text(cls, text: str) -> "ErrorPlan":
        events = []
        for ln in text.splitlines():
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            toks = ln.split()
            size, action = int(toks[0]), toks[1]
            if action == SUBSTITUTE:
                events.append(ErrorEvent(size, SUBSTITUTE, (int(toks[2]), int(toks[3]))))
            elif action == INSERT:
                a, _, b = toks[2].partition(",")
                events.append(ErrorEvent(size, INSERT, ((int(a), int(b)),)))
            elif action == DELETE:
                events.append(ErrorEvent(size, DELETE, (int(toks[2]),)))
            elif action == REPLACE:
                pairs = []
                for tok in toks[2:]:
                    a, _, b = tok.partition(",")
                    pairs.append((int(a), int(b)))
                events.append(ErrorEvent(size, REPLACE, (tuple(pairs),)))
            else:
                raise PlanError(f"unknown action {action!r}")
        return cls(tuple(events))


def substitute(size: int, old_mass: int, new_mass: int) -> ErrorEvent:
    return ErrorEvent(size, SUBSTITUTE, (old_mass, new_mass))


def insert(size: int, pair: Pair) -> ErrorEvent:
    return ErrorEvent(size, INSERT, (pair,))


def delete(size: int, mass: int) -> ErrorEvent:
    return ErrorEvent(size, DELETE, (mass,))


def replace_group(size: int, pairs: tuple[Pair, ...]) -> ErrorEvent:
    return ErrorEvent(size, REPLACE, (tuple(pairs),))


def _check_pair(pair: Pair, size: int, n: int) -> None:
    a, b = pair
    if a < 0 or b < 0 or a + b != size or not 1 <= size <= n:
        raise PlanError(f"pair ({a},{b}) malformed for size {size} with n={n}")


def _apply(event: ErrorEvent, x: CompositionMultiset) -> list[Pair]:
    j = event.size
    if not 1 <= j <= x.n:
        raise PlanError(f"size {j} outside [1, {x.n}]")
    pairs = list(x.group(j))
    if event.action == SUBSTITUTE:
        old, new = event.args
        if old == new:
            raise PlanError(f"no-op substitution at size {j}")
        _check_pair((j - new, new), j, x.n)
        try:
            pairs.remove((j - old, old))
        except ValueError:
            raise PlanError(f"mass {old} not present at size {j}") from None
        pairs.append((j - new, new))
    elif event.action == INSERT:
        (pair,) = event.args
        _check_pair(pair, j, x.n)
        pairs.append(pair)
    elif event.action == DELETE:
        (mass,) = event.args
        try:
            pairs.remove((j - mass, mass))
        except ValueError:
            raise PlanError(f"mass {mass} not present at size {j}") from None
    elif event.action == REPLACE:
        (new_pairs,) = event.args
        for pair in new_pairs:
            _check_pair(pair, j, x.n)
        if sorted(new_pairs, key=lambda p: p[1]) == pairs:
            raise PlanError(f"replacement leaves group {j} unchanged")
        pairs = list(new_pairs)
    else:
        raise PlanError(f"unknown action {event.action!r}")
    return pairs


def corrupt(x: CompositionMultiset, plan: ErrorPlan) -> CompositionMultiset:
    """Apply a plan; the result is at group distance exactly len(plan) from x."""
    y = x
    for event in plan.events:
        y = y.copy_with(event.size, _apply(event, x))
    assert distance(x, y) == len(plan)
    return y


def random_plan(x: CompositionMultiset, t: int, seed: int) -> ErrorPlan:
    """Deterministic plan of exactly t events on distinct sizes.

    Action kinds are drawn uniformly among substitute/insert/delete (falling
    back to insert when the group is empty), and every drawn action changes
    its group by construction.
    """
    if t > x.n:
        raise PlanError(f"budget {t} exceeds the number of size groups {x.n}")
    rng = random.Random(seed)
    events = []
    for j in sorted(rng.sample(range(1, x.n + 1), t)):
        pairs = x.group(j)
        kind = rng.choice((SUBSTITUTE, INSERT, DELETE)) if pairs else INSERT
        if kind == SUBSTITUTE:
            old = rng.choice(pairs)[1]
            new = rng.choice([m for m in range(j + 1) if m != old])
            events.append(substitute(j, old, new))
        elif kind == DELETE:
            events.append(delete(j, rng.choice(pairs)[1]))
        else:
            mass = rng.randint(0, j)
            events.append(insert(j, (j - mass, mass)))
    return ErrorPlan(tuple(events))
