"""Success probabilities of experiments, computed two independent ways.

Exact mode enumerates every tape over the declared draw domains and counts
successes as a rational number; it needs the toy backend. Estimate mode
runs seeded Monte-Carlo trials on any backend and reports an exact
(Clopper-Pearson) 99% confidence interval. On top of these sit the two
checks the games are built for: equal exhaustive counts between the real
and message-independent hiding games, and per-tape outcome equality
between the binding game and the discrete log game played by the
reduction adversary.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from scipy.stats import beta, chi2

from .adversaries import dlog_attacker
from .experiments import Binding, DiscreteLog, DomainUndeclaredError
from .groups import BackendTooLargeError, Group
from .pedersen import Pedersen
from .tape import RandomTape, SeededSource, exhaustive_tapes, seeded_tapes

MAX_ENUMERATION_ATOMS = 1 << 26


@dataclass(frozen=True)
class ExactProbability:
    """Success count over a full enumeration; total = product of domain sizes."""

    successes: int
    total: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.successes, self.total)

    def __str__(self) -> str:
        return f"{self.successes}/{self.total} = {self.fraction}"


def _enumeration_domains(experiment, adversary) -> tuple[tuple[int, ...], int]:
    if experiment.group.backend != "toy":
        raise BackendTooLargeError(
            f"exact enumeration needs the toy backend, not {experiment.group.backend!r};"
            " use estimate(...) with a seed instead"
        )
    domains = experiment.domains(adversary)
    total = prod(domains)
    if total > MAX_ENUMERATION_ATOMS:
        raise BackendTooLargeError(
            f"enumeration space has {total} atoms, above the {MAX_ENUMERATION_ATOMS} bound;"
            " use estimate(...) with a seed instead"
        )
    return domains, total


def _run_consuming(experiment, adversary, tape: RandomTape):
    outcome = experiment.run(adversary, tape)
    if tape.remaining():
        raise DomainUndeclaredError(
            f"{experiment.name}: {tape.remaining()} declared draws left unconsumed"
        )
    return outcome


def enumerate_exact(experiment, adversary=None) -> ExactProbability:
    """Run the experiment once per tape atom and count successes exactly."""
    domains, total = _enumeration_domains(experiment, adversary)
    successes = 0
    for tape in exhaustive_tapes(domains):
        successes += _run_consuming(experiment, adversary, tape).success
    return ExactProbability(successes, total)


@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of comparing exhaustive success counts of two experiments.

    On inequality, ``witness_a`` is a tape where only the first experiment
    succeeds and ``witness_b`` one where only the second does (either may
    be None if that direction has no witness).
    """

    equal: bool
    count_a: int
    count_b: int
    total: int
    witness_a: tuple[int, ...] | None = None
    witness_b: tuple[int, ...] | None = None


def check_equality(exp_a, exp_b, adversary, adversary_b=None) -> EqualityVerdict:
    """Compare exact success counts of two experiments over shared tapes.

    Both experiments must declare identical draw domains so each tape is
    meaningful on both sides. ``adversary_b`` defaults to the same
    adversary playing both games.
    """
    if adversary_b is None:
        adversary_b = adversary
    domains_a, total = _enumeration_domains(exp_a, adversary)
    domains_b, _ = _enumeration_domains(exp_b, adversary_b)
    if domains_a != domains_b:
        raise DomainUndeclaredError(
            f"draw domains differ: {exp_a.name} has {domains_a}, {exp_b.name} has {domains_b}"
        )
    count_a = 0
    count_b = 0
    witness_a = None
    witness_b = None
    for tape in exhaustive_tapes(domains_a):
        draws = tape.draws
        ok_a = _run_consuming(exp_a, adversary, RandomTape(draws)).success
        ok_b = _run_consuming(exp_b, adversary_b, RandomTape(draws)).success
        count_a += ok_a
        count_b += ok_b
        if ok_a and not ok_b and witness_a is None:
            witness_a = draws
        if ok_b and not ok_a and witness_b is None:
            witness_b = draws
    if count_a == count_b:
        return EqualityVerdict(True, count_a, count_b, total)
    return EqualityVerdict(False, count_a, count_b, total, witness_a, witness_b)


@dataclass(frozen=True)
class CouplingVerdict:
    """Per-tape agreement between the binding game and the reduction's
    discrete log game; ``witness`` is the first disagreeing tape."""

    coupled: bool
    tapes_checked: int
    witness: tuple[int, ...] | None = None


def coupling_domains(group: Group, binder) -> tuple[int, ...]:
    """Shared draw domains of the binding and reduction experiments."""
    return (group.q,) + tuple(binder.bind_domains(group))


def check_coupling(group: Group, binder, tapes) -> CouplingVerdict:
    """Replay each tape through both games and demand equal outcomes.

    The discrete log side plays ``dlog_attacker(binder)``, whose draws are
    exactly the binder's, so one tape drives both games draw for draw.
    ``tapes`` may yield RandomTape objects or plain draw sequences.
    """
    binding = Binding(group)
    dlog = DiscreteLog(group)
    attacker = dlog_attacker(binder)
    checked = 0
    for tape in tapes:
        draws = tape.draws if isinstance(tape, RandomTape) else tuple(tape)
        bind_out = _run_consuming(binding, binder, RandomTape(draws))
        dlog_out = _run_consuming(dlog, attacker, RandomTape(draws))
        checked += 1
        if bind_out.success != dlog_out.success:
            return CouplingVerdict(False, checked, draws)
    return CouplingVerdict(True, checked)


@dataclass(frozen=True)
class Estimate:
    """Seeded Monte-Carlo success estimate with a 99% Clopper-Pearson interval."""

    trials: int
    successes: int
    estimate: float
    ci_low: float
    ci_high: float
    seed: int


def clopper_pearson(successes: int, trials: int, confidence: float = 0.99) -> tuple[float, float]:
    """Exact two-sided binomial confidence interval for a success count."""
    if not 0 <= successes <= trials or trials < 1:
        raise ValueError(f"bad counts: {successes}/{trials}")
    alpha = 1.0 - confidence
    if successes == 0:
        low = 0.0
    else:
        low = float(beta.ppf(alpha / 2, successes, trials - successes + 1))
    if successes == trials:
        high = 1.0
    else:
        high = float(beta.ppf(1 - alpha / 2, successes + 1, trials - successes))
    return low, high


def estimate(experiment, adversary, trials: int, seed: int) -> Estimate:
    """Estimate the success probability over ``trials`` seeded tapes."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    domains = experiment.domains(adversary)
    successes = 0
    for tape in seeded_tapes(domains, trials, seed):
        successes += _run_consuming(experiment, adversary, tape).success
    low, high = clopper_pearson(successes, trials)
    return Estimate(trials, successes, successes / trials, low, high, seed)


# --- commitment distribution checks ---


def commitment_image(group: Group, h: int, m: int) -> list[int]:
    """Commitments to m under h for every decommitment key. Toy-scale only."""
    if group.q > MAX_ENUMERATION_ATOMS:
        raise BackendTooLargeError("image listing needs an enumerable key space")
    scheme = Pedersen(group)
    return [scheme.commit(h, m, RandomTape([d]))[0] for d in range(group.q)]


def chi_square_statistic(counts, expected: float) -> float:
    """Pearson statistic against a flat expectation."""
    return sum((n - expected) ** 2 / expected for n in counts)


@dataclass(frozen=True)
class UniformityCheck:
    """Chi-square test of bucketed commitments against uniform."""

    samples: int
    buckets: int
    statistic: float
    threshold: float
    significance: float
    passed: bool


def commitment_uniformity(
    group: Group,
    h: int,
    m: int,
    samples: int,
    seed: int,
    buckets: int = 256,
    significance: float = 1e-3,
) -> UniformityCheck:
    """Sample commitments to m, bucket by sha256 of the wire encoding, and
    chi-square the bucket counts against uniform at the given significance."""
    scheme = Pedersen(group)
    source = SeededSource(seed)
    counts = [0] * buckets
    for _ in range(samples):
        c, _ = scheme.commit(h, m, source)
        digest = hashlib.sha256(group.encode_element(c)).digest()
        counts[int.from_bytes(digest, "big") % buckets] += 1
    statistic = chi_square_statistic(counts, samples / buckets)
    threshold = float(chi2.ppf(1.0 - significance, df=buckets - 1))
    return UniformityCheck(
        samples=samples,
        buckets=buckets,
        statistic=statistic,
        threshold=threshold,
        significance=significance,
        passed=statistic <= threshold,
    )


# --- report formatting ---


@dataclass(frozen=True)
class ReportRow:
    """One experiment result in the fixed reporting field order."""

    experiment: str
    adversary: str
    successes: int
    total: int
    estimate: float
    ci_low: float
    ci_high: float
    seed: str


def row_from_exact(experiment_name: str, adversary_name: str, result: ExactProbability) -> ReportRow:
    ratio = result.successes / result.total
    return ReportRow(
        experiment=experiment_name,
        adversary=adversary_name,
        successes=result.successes,
        total=result.total,
        estimate=ratio,
        ci_low=ratio,
        ci_high=ratio,
        seed="-",
    )


def row_from_estimate(experiment_name: str, adversary_name: str, result: Estimate) -> ReportRow:
    return ReportRow(
        experiment=experiment_name,
        adversary=adversary_name,
        successes=result.successes,
        total=result.trials,
        estimate=result.estimate,
        ci_low=result.ci_low,
        ci_high=result.ci_high,
        seed=str(result.seed),
    )


def _row_fields(row: ReportRow) -> list[str]:
    return [
        row.experiment,
        row.adversary,
        str(row.successes),
        str(row.total),
        format(row.estimate, ".12g"),
        format(row.ci_low, ".12g"),
        format(row.ci_high, ".12g"),
        row.seed,
    ]


def format_lines(rows) -> str:
    """Machine-readable report: space-separated fields, fixed order."""
    return "\n".join(" ".join(_row_fields(row)) for row in rows)


def format_table(rows) -> str:
    """Human-readable report with aligned columns."""
    header = ["experiment", "adversary", "successes", "total", "estimate", "ci_low", "ci_high", "seed"]
    body = [_row_fields(row) for row in rows]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    out = []
    for line in [header] + body:
        out.append("  ".join(field.ljust(width) for field, width in zip(line, widths)).rstrip())
    return "\n".join(out)
