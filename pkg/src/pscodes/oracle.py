"""Independent brute-force references and channel sweep harnesses.

Everything here is deliberately dumb: nearest-codeword search by full
enumeration, composition inversion by trying every string tuple, and sweeps
that push entire error-plan families through encode -> compose -> corrupt ->
decode.  The efficient decoders are validated against these references; a
sweep counts loud outcomes separately from silent wrong answers, and the
latter must never occur within the error budget.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .bch import BchCode, bch_encode
from .channel import ErrorEvent, ErrorPlan, corrupt, delete, insert, random_plan, substitute
from .compositions import CompositionMultiset, distance
from .errors import DecodeFailure
from .grs import GrsParams, grs_encode
from .results import Verdict

MAX_CODEBOOK = 1 << 20
MAX_TUPLE_SPACE = 1 << 22


@dataclass(frozen=True)
class NearestCodeword:
    word: object
    distance: int
    ties: int


def hamming(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


def brute_nearest_codeword(y, codebook) -> NearestCodeword:
    """Minimum-Hamming-distance codeword; lexicographically first on ties."""
    best = None
    best_d = None
    ties = 0
    count = 0
    for word in codebook:
        count += 1
        if count > MAX_CODEBOOK:
            raise ValueError(f"codebook larger than {MAX_CODEBOOK}")
        d = hamming(word, y)
        if best_d is None or d < best_d:
            best, best_d, ties = word, d, 1
        elif d == best_d:
            ties += 1
            if word < best:
                best = word
    if best is None:
        raise ValueError("empty codebook")
    return NearestCodeword(best, best_d, ties)


def grs_codebook(params: GrsParams):
    if params.field.p ** params.k > MAX_CODEBOOK:
        raise ValueError("GRS codebook too large to enumerate")
    for msg in itertools.product(range(params.field.p), repeat=params.k):
        yield grs_encode(msg, params)


def bch_codebook(code: BchCode):
    if 1 << code.dimension > MAX_CODEBOOK:
        raise ValueError("BCH codebook too large to enumerate")
    for v in range(1 << code.dimension):
        yield bch_encode(format(v, f"0{code.dimension}b"), code)


def brute_inverse_compositions(
    y: CompositionMultiset, n: int, h: int, t: int
) -> list[tuple[str, ...]]:
    """All string tuples whose multiset union lies within distance t of y."""
    if (1 << (h * n)) > MAX_TUPLE_SPACE:
        raise ValueError(f"search space 2^{h * n} exceeds 2^22")
    out = []
    strings = [format(v, f"0{n}b") for v in range(1 << n)]
    for combo in itertools.product(strings, repeat=h):
        if distance(CompositionMultiset.of_strings(list(combo)), y) <= t:
            out.append(combo)
    return out


# --------------------------------------------------------------------------
# Sweep machinery.

@dataclass(frozen=True)
class Exhaustive:
    """All messages (or a seeded sample of them) x all bounded error plans
    with one event per chosen size, over size subsets of cardinality <= budget."""

    budget: int | None = None
    message_sample: tuple[int, int] | None = None  # (count, seed)
    case_cap: int = 5_000_000


@dataclass(frozen=True)
class Randomized:
    """Seeded sample: ``messages`` random messages x ``plans_per_message``
    random plans of cardinality drawn uniformly from 0..budget."""

    seed: int
    messages: int
    plans_per_message: int = 1
    budget: int | None = None


@dataclass
class SweepReport:
    scheme: str
    params_text: str
    mode_text: str
    total: int = 0
    recovered: int = 0
    typed_failures: int = 0
    mismatches: int = 0
    max_bit_errors: int = 0
    seeds: tuple[int, ...] = ()

    @property
    def all_recovered(self) -> bool:
        return self.total > 0 and self.recovered == self.total

    def to_text(self) -> str:
        lines = [
            f"scheme={self.scheme}",
            f"params={self.params_text}",
            f"mode={self.mode_text}",
            f"total={self.total}",
            f"recovered={self.recovered}",
            f"typed_failures={self.typed_failures}",
            f"mismatches={self.mismatches}",
            f"max_bit_errors={self.max_bit_errors}",
        ]
        if self.seeds:
            lines.append("seeds=" + ",".join(str(s) for s in self.seeds))
        return "\n".join(lines) + "\n"


def group_actions(x: CompositionMultiset, j: int):
    """Bounded action alphabet for one size group: every substitution of a
    present mass, every deletion of a present mass, every single insertion."""
    masses = sorted({b for _, b in x.group(j)})
    actions: list[ErrorEvent] = []
    for old in masses:
        for new in range(j + 1):
            if new != old:
                actions.append(substitute(j, old, new))
    for old in masses:
        actions.append(delete(j, old))
    for mass in range(j + 1):
        actions.append(insert(j, (j - mass, mass)))
    return actions


def exhaustive_plans(x: CompositionMultiset, budget: int):
    """Every plan with one event per chosen size, |sizes| <= budget."""
    per_size = {j: group_actions(x, j) for j in range(1, x.n + 1)}
    yield ErrorPlan(())
    for cardinality in range(1, budget + 1):
        for sizes in itertools.combinations(range(1, x.n + 1), cardinality):
            for events in itertools.product(*(per_size[j] for j in sizes)):
                yield ErrorPlan(tuple(events))


def count_exhaustive_plans(x: CompositionMultiset, budget: int) -> int:
    counts = [len(group_actions(x, j)) for j in range(1, x.n + 1)]
    total = 1
    for cardinality in range(1, budget + 1):
        for sizes in itertools.combinations(range(len(counts)), cardinality):
            prod = 1
            for s in sizes:
                prod *= counts[s]
            total += prod
    return total


def sweep(scheme: str, params, mode, adapters=None) -> SweepReport:
    """Run encode -> compose -> corrupt -> decode over a case family."""
    from .schemes import ADAPTERS

    adapter = (adapters or ADAPTERS)[scheme]
    budget = mode.budget if mode.budget is not None else adapter.budget(params)
    report = SweepReport(scheme, adapter.describe(params), _mode_text(mode, budget))

    def run_case(truth_strings, truth_message, x, plan):
        y = corrupt(x, plan)
        report.total += 1
        be = adapter.bit_errors(params, truth_strings, y)
        report.max_bit_errors = max(report.max_bit_errors, be)
        try:
            verdict, strings, message = adapter.decode(params, y)
        except DecodeFailure:
            report.typed_failures += 1
            return
        if verdict is not Verdict.RECOVERED:
            report.typed_failures += 1
        elif strings == truth_strings and message == truth_message:
            report.recovered += 1
        else:
            report.mismatches += 1

    if isinstance(mode, Exhaustive):
        if mode.message_sample is None:
            messages = list(adapter.messages(params))
        else:
            count, seed = mode.message_sample
            rng = random.Random(seed)
            messages = [adapter.random_message(params, rng) for _ in range(count)]
            report.seeds = (seed,)
        for msg in messages:
            strings = adapter.encode(params, msg)
            x = CompositionMultiset.of_strings(list(strings))
            if len(messages) * count_exhaustive_plans(x, budget) > mode.case_cap:
                raise ValueError("exhaustive enumeration exceeds the case cap")
            for plan in exhaustive_plans(x, budget):
                run_case(strings, msg, x, plan)
    else:
        rng = random.Random(mode.seed)
        report.seeds = (mode.seed,)
        for _ in range(mode.messages):
            msg = adapter.random_message(params, rng)
            strings = adapter.encode(params, msg)
            x = CompositionMultiset.of_strings(list(strings))
            for _ in range(mode.plans_per_message):
                t_case = rng.randint(0, budget)
                plan = random_plan(x, t_case, seed=rng.getrandbits(32))
                run_case(strings, msg, x, plan)
    return report


def _mode_text(mode, budget: int) -> str:
    if isinstance(mode, Exhaustive):
        base = f"exhaustive(budget={budget})"
        if mode.message_sample:
            base += f" messages~sample{mode.message_sample}"
        return base
    return (f"randomized(seed={mode.seed}, messages={mode.messages}, "
            f"plans_per_message={mode.plans_per_message}, budget={budget})")
