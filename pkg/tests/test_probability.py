"""Probability engine: exact counts, equality/coupling checks, estimation.

Clopper-Pearson bounds are cross-checked against binomial tail sums (an
independent identity, not the beta quantile used by the implementation).
"""

import random
from fractions import Fraction

import pytest
from scipy.stats import binom

from pedersen_games.adversaries import (
    ConstantDLogAdversary,
    ConstantUnhider,
    NullBinder,
    TapeRandomUnhider,
    binder_zoo,
    unhider_zoo,
)
from pedersen_games.experiments import (
    Binding,
    Correctness,
    DiscreteLog,
    DomainUndeclaredError,
    Hiding,
    InterimHiding,
)
from pedersen_games.groups import BackendTooLargeError, Group, large_group, toy_group, validate_group
from pedersen_games.probability import (
    MAX_ENUMERATION_ATOMS,
    ExactProbability,
    check_coupling,
    check_equality,
    chi_square_statistic,
    clopper_pearson,
    commitment_image,
    commitment_uniformity,
    coupling_domains,
    enumerate_exact,
    estimate,
    format_lines,
    format_table,
    row_from_estimate,
    row_from_exact,
)
from pedersen_games.tape import RandomTape, exhaustive_tapes, seeded_tapes


# --- enumerate_exact ---


def test_exact_probability_reduces():
    p = ExactProbability(121, 242)
    assert p.fraction == Fraction(1, 2)
    assert str(p) == "121/242 = 1/2"


def test_enumerate_hexp_const0():
    result = enumerate_exact(Hiding(toy_group()), ConstantUnhider(0))
    assert (result.successes, result.total) == (121, 242)


def test_enumerate_hinterm_const0():
    result = enumerate_exact(InterimHiding(toy_group()), ConstantUnhider(0))
    assert result.fraction == Fraction(1, 2)


def test_enumerate_correctness_is_one():
    result = enumerate_exact(Correctness(toy_group(), 7))
    assert (result.successes, result.total) == (121, 121)


def test_enumerate_total_is_domain_product():
    toy = toy_group()
    unhider = TapeRandomUnhider()
    result = enumerate_exact(Hiding(toy), unhider)
    domains = Hiding(toy).domains(unhider)
    expected = 1
    for n in domains:
        expected *= n
    assert result.total == expected == 484


def test_enumeration_order_invariance():
    # Same count when tapes are visited in a shuffled order.
    toy = toy_group()
    exp = Hiding(toy)
    unhider = ConstantUnhider(1)
    tapes = [t.draws for t in exhaustive_tapes(exp.domains(unhider))]
    random.Random(4).shuffle(tapes)
    count = sum(exp.run(unhider, RandomTape(t)).success for t in tapes)
    assert count == enumerate_exact(exp, unhider).successes


def test_enumerate_refuses_large_backend():
    with pytest.raises(BackendTooLargeError, match="estimate"):
        enumerate_exact(Hiding(large_group()), ConstantUnhider(0))


def test_enumerate_refuses_oversized_atom_count():
    # A valid toy-backend group whose hiding space for a key-guessing
    # unhider exceeds the atom bound: 1019 * 2 * 1019 * 1019 > 2^26.
    group = Group(p=2039, q=1019, g=4, backend="toy")
    validate_group(group)
    from pedersen_games.adversaries import DistinctMessageUnhider

    exp = Hiding(group)
    assert 1019 * 2 * 1019 * 1019 > MAX_ENUMERATION_ATOMS
    with pytest.raises(BackendTooLargeError, match="atoms"):
        enumerate_exact(exp, DistinctMessageUnhider())


def test_enumerate_detects_unconsumed_draws():
    class LazyGuesser(ConstantUnhider):
        def guess_domains(self, group):
            return (2,)  # declared but never drawn

    with pytest.raises(DomainUndeclaredError, match="unconsumed"):
        enumerate_exact(Hiding(toy_group()), LazyGuesser(0))


# --- check_equality ---


def test_equality_hexp_hinterm_for_zoo():
    toy = toy_group()
    for unhider in unhider_zoo().values():
        verdict = check_equality(Hiding(toy), InterimHiding(toy), unhider)
        assert verdict.equal
        assert verdict.count_a == verdict.count_b == verdict.total // 2


def test_equality_unequal_case_with_witnesses():
    # Binding with the null binder never wins; the constant-0 discrete log
    # adversary wins exactly on the x = 0 tape. Same draw domains: (11,).
    toy = toy_group()
    verdict = check_equality(
        Binding(toy),
        DiscreteLog(toy),
        NullBinder(),
        adversary_b=ConstantDLogAdversary(0),
    )
    assert not verdict.equal
    assert (verdict.count_a, verdict.count_b, verdict.total) == (0, 1, 11)
    assert verdict.witness_a is None
    assert verdict.witness_b == (0,)


def test_equality_rejects_mismatched_domains():
    toy = toy_group()
    with pytest.raises(DomainUndeclaredError, match="differ"):
        check_equality(
            Hiding(toy), Binding(toy), ConstantUnhider(0), adversary_b=NullBinder()
        )


# --- check_coupling ---


def test_coupling_zoo_binders_toy_exhaustive():
    toy = toy_group()
    for binder in binder_zoo(trapdoor_x=3).values():
        domains = coupling_domains(toy, binder)
        assert domains == (11,)
        verdict = check_coupling(toy, binder, exhaustive_tapes(domains))
        assert verdict.coupled
        assert verdict.tapes_checked == 11


def test_coupling_accepts_raw_draw_sequences():
    toy = toy_group()
    verdict = check_coupling(toy, NullBinder(), [[x] for x in range(11)])
    assert verdict.coupled and verdict.tapes_checked == 11


def test_coupling_reports_witness_for_contract_breaking_binder():
    # A stateful binder that answers differently on the replay violates the
    # "deterministic given the tape" contract; the checker must say where.
    toy = toy_group()

    class TwoFaced:
        def __init__(self):
            self.calls = 0

        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            self.calls += 1
            if self.calls % 2:  # binding run: honest equivocation via search
                from pedersen_games.adversaries import BruteForceBinder

                return BruteForceBinder().bind(group, h, source)
            return 1, 0, 0, 0, 0  # replay run: never wins

    verdict = check_coupling(toy, TwoFaced(), exhaustive_tapes((11,)))
    assert not verdict.coupled
    assert verdict.tapes_checked == 1
    assert verdict.witness == (0,)


# --- estimate ---


def test_estimate_reproducible():
    toy = toy_group()
    a = estimate(Hiding(toy), ConstantUnhider(0), trials=500, seed=21)
    b = estimate(Hiding(toy), ConstantUnhider(0), trials=500, seed=21)
    assert a == b
    assert a.seed == 21


def test_estimate_interval_contains_point():
    toy = toy_group()
    e = estimate(Hiding(toy), ConstantUnhider(0), trials=300, seed=5)
    assert e.ci_low <= e.estimate <= e.ci_high


def test_estimate_correctness_is_exactly_one():
    e = estimate(Correctness(toy_group(), 3), None, trials=200, seed=1)
    assert e.estimate == 1.0 and e.successes == 200


def test_estimate_null_binder_is_exactly_zero():
    e = estimate(Binding(toy_group()), NullBinder(), trials=200, seed=1)
    assert e.estimate == 0.0


def test_estimate_rejects_zero_trials():
    with pytest.raises(ValueError):
        estimate(Correctness(toy_group(), 3), None, trials=0, seed=1)


# --- Clopper-Pearson ---


def test_clopper_pearson_edges():
    low, high = clopper_pearson(0, 100)
    assert low == 0.0 and 0 < high < 0.1
    low, high = clopper_pearson(100, 100)
    assert 0.9 < low < 1 and high == 1.0


def test_clopper_pearson_against_binomial_tails():
    # Defining property: at the bounds the binomial tails equal alpha/2.
    for k, n in ((5, 40), (25, 60), (499, 1000), (1, 10)):
        low, high = clopper_pearson(k, n, confidence=0.99)
        assert binom.sf(k - 1, n, low) == pytest.approx(0.005, rel=1e-6)
        assert binom.cdf(k, n, high) == pytest.approx(0.005, rel=1e-6)


def test_clopper_pearson_rejects_bad_counts():
    with pytest.raises(ValueError):
        clopper_pearson(5, 4)
    with pytest.raises(ValueError):
        clopper_pearson(-1, 4)


# --- distribution checks ---


def test_commitment_image_is_subgroup_permutation():
    toy = toy_group()
    subgroup = sorted(toy.subgroup_elements())
    for h in subgroup:
        assert sorted(commitment_image(toy, h, 4)) == subgroup


def test_commitment_image_refuses_large():
    with pytest.raises(BackendTooLargeError):
        commitment_image(large_group(), large_group().g, 0)


def test_chi_square_statistic_oracle():
    # Hand computation: counts (3,5,4), expected 4 -> (1 + 1 + 0)/4 = 0.5.
    assert chi_square_statistic([3, 5, 4], 4.0) == pytest.approx(0.5)


def test_commitment_uniformity_passes_on_large_sample():
    lg = large_group()
    h = lg.exp(lg.g, 87_654_321)
    check = commitment_uniformity(lg, h, m=5, samples=4096, seed=2, buckets=64)
    assert check.passed
    assert check.statistic <= check.threshold
    assert check.samples == 4096 and check.buckets == 64


def test_uniformity_check_fails_on_skewed_source():
    # Negative control for the decision rule: a source stuck on one draw
    # repeats one commitment, piling every sample into a single bucket.
    class StuckSource:
        def draw(self, domain):
            return 7

    lg = large_group()
    from pedersen_games.pedersen import Pedersen
    import hashlib

    scheme = Pedersen(lg)
    counts = [0] * 64
    source = StuckSource()
    for _ in range(512):
        c, _ = scheme.commit(lg.g, 5, source)
        counts[int.from_bytes(hashlib.sha256(lg.encode_element(c)).digest(), "big") % 64] += 1
    from scipy.stats import chi2

    statistic = chi_square_statistic(counts, 512 / 64)
    assert statistic > float(chi2.ppf(1 - 1e-3, df=63))


# --- reporting ---


def test_report_rows_and_formats():
    exact_row = row_from_exact("hexp", "const0", ExactProbability(121, 242))
    est = estimate(Binding(toy_group()), NullBinder(), trials=50, seed=9)
    est_row = row_from_estimate("bexp", "nullbinder", est)

    lines = format_lines([exact_row, est_row])
    first, second = lines.splitlines()
    assert first == "hexp const0 121 242 0.5 0.5 0.5 -"
    assert second.startswith("bexp nullbinder 0 50 0 ")
    assert second.endswith(" 9")

    table = format_table([exact_row])
    assert table.splitlines()[0].split() == [
        "experiment", "adversary", "successes", "total",
        "estimate", "ci_low", "ci_high", "seed",
    ]
    assert "121" in table
