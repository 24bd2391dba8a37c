"""Experiment semantics: traces, draw orders, harness checks, determinism.

The exhaustive counts are cross-checked against minimal re-implementations
of each game written directly with builtin pow(), so the experiment code
never validates itself.
"""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pedersen_games.adversaries import (
    AbstainAdversary,
    BruteForceBinder,
    BruteForceDLogSolver,
    ConstantDLogAdversary,
    ConstantUnhider,
    NullBinder,
    dlog_attacker,
)
from pedersen_games.experiments import (
    AdversaryRangeError,
    Binding,
    Correctness,
    DiscreteLog,
    DomainUndeclaredError,
    Hiding,
    InterimHiding,
    format_transcript,
    run_bexp,
    run_correctness,
    run_dlog,
    run_hexp,
    run_hinterm,
)
from pedersen_games.groups import toy_group
from pedersen_games.pedersen import Pedersen
from pedersen_games.tape import RandomTape, TapeExhausted


@pytest.fixture(scope="module")
def toy():
    return toy_group()


@pytest.fixture(scope="module")
def scheme(toy):
    return Pedersen(toy)


# --- correctness ---


def test_correctness_worked_trace(scheme):
    out = run_correctness(scheme, 2, RandomTape([3, 4]))
    assert out.success
    assert dict(out.transcript) == {"h": 8, "m": 2, "d": 4, "c": 12}


def test_correctness_zero_tape(scheme):
    assert run_correctness(scheme, 0, RandomTape([0, 0])).success


def test_correctness_exhaustive_m7_all_true(toy, scheme):
    count = 0
    for x in range(toy.q):
        for d in range(toy.q):
            count += run_correctness(scheme, 7, RandomTape([x, d])).success
    assert count == 121


def test_correctness_domains(toy):
    assert Correctness(toy, 3).domains() == (11, 11)


# --- hiding ---


def oracle_hexp_success(group, tape, choose, guess):
    """The guessing game, straight from its definition with builtin pow."""
    tape = list(tape)
    x = tape.pop(0)
    h = pow(group.g, x, group.p)
    m0, m1 = choose(h)
    b = tape.pop(0)
    d = tape.pop(0)
    c = pow(group.g, d, group.p) * pow(h, m1 if b else m0, group.p) % group.p
    return guess(c, tape) == b


def test_hexp_worked_traces(scheme):
    unhider = ConstantUnhider(0)
    assert run_hexp(scheme, unhider, RandomTape([3, 0, 4])).success
    assert not run_hexp(scheme, unhider, RandomTape([3, 1, 4])).success


def test_hexp_uses_b_to_select_message(scheme, toy):
    unhider = ConstantUnhider(0)
    out0 = run_hexp(scheme, unhider, RandomTape([3, 0, 4]))
    out1 = run_hexp(scheme, unhider, RandomTape([3, 1, 4]))
    # b=0 commits to m0=0: c = g^4; b=1 commits to m1=1: c = g^4 * h.
    assert dict(out0.transcript)["c"] == pow(2, 4, 23)
    assert dict(out1.transcript)["c"] == pow(2, 4, 23) * 8 % 23


def test_hexp_exhaustive_matches_oracle(toy, scheme):
    for bit in (0, 1):
        unhider = ConstantUnhider(bit)
        mine = sum(
            run_hexp(scheme, unhider, RandomTape([x, b, d])).success
            for x, b, d in itertools.product(range(11), range(2), range(11))
        )
        oracle = sum(
            oracle_hexp_success(toy, [x, b, d], lambda h: (0, 1), lambda c, t: bit)
            for x, b, d in itertools.product(range(11), range(2), range(11))
        )
        assert mine == oracle == 121


def test_hexp_domains_include_adversary_segments(toy):
    exp = Hiding(toy)
    assert exp.domains(ConstantUnhider(0)) == (11, 2, 11)


def test_hexp_rejects_out_of_range_messages(scheme):
    class BadChooser(ConstantUnhider):
        def choose(self, group, h, source):
            return 0, group.q

    with pytest.raises(AdversaryRangeError):
        run_hexp(scheme, BadChooser(0), RandomTape([3, 0, 4]))


def test_hexp_rejects_non_bit_guess(scheme):
    class BadGuesser(ConstantUnhider):
        def guess(self, group, c, source):
            return 2

    with pytest.raises(AdversaryRangeError):
        run_hexp(scheme, BadGuesser(0), RandomTape([3, 0, 4]))


def test_hexp_rejects_bool_message(scheme):
    class BoolChooser(ConstantUnhider):
        def choose(self, group, h, source):
            return False, 1

    with pytest.raises(AdversaryRangeError):
        run_hexp(scheme, BoolChooser(0), RandomTape([3, 0, 4]))


def test_undeclared_domains_raise(toy):
    class NoDecl:
        def choose(self, group, h, source):
            return 0, 1

        def guess(self, group, c, source):
            return 0

    with pytest.raises(DomainUndeclaredError):
        Hiding(toy).domains(NoDecl())


# --- interim hiding ---


def test_hinterm_commitment_ignores_messages(toy):
    out = run_hinterm(toy, ConstantUnhider(0), RandomTape([3, 0, 4]))
    assert dict(out.transcript)["c"] == 16  # g^4, no h factor
    out1 = run_hinterm(toy, ConstantUnhider(0), RandomTape([3, 1, 4]))
    assert dict(out1.transcript)["c"] == 16  # same c whatever b is


def test_hinterm_same_arity_as_hexp(toy):
    unhider = ConstantUnhider(1)
    assert Hiding(toy).domains(unhider) == InterimHiding(toy).domains(unhider)


def test_hinterm_success_is_coin_match_for_blind_guessers(toy):
    # Any guess that ignores c wins exactly when it equals the tape's b.
    for bit in (0, 1):
        unhider = ConstantUnhider(bit)
        for x, b, d in itertools.product(range(11), range(2), range(11)):
            out = run_hinterm(toy, unhider, RandomTape([x, b, d]))
            assert out.success == (bit == b)


# --- binding ---


def oracle_bexp_success(group, x, bind_output):
    h = pow(group.g, x, group.p)
    c, m, d, m2, d2 = bind_output
    v1 = c == pow(group.g, d, group.p) * pow(h, m, group.p) % group.p
    v2 = c == pow(group.g, d2, group.p) * pow(h, m2, group.p) % group.p
    return v1 and v2 and m != m2


def test_bexp_brute_force_binder_trace(scheme):
    out = run_bexp(scheme, BruteForceBinder(), RandomTape([3]))
    assert out.success
    trace = dict(out.transcript)
    assert (trace["c"], trace["m"], trace["d"], trace["m2"], trace["d2"]) == (2, 0, 1, 1, 9)


def test_bexp_matches_oracle_for_zoo_binders(toy, scheme):
    from pedersen_games.adversaries import TrapdoorBinder

    for binder in (NullBinder(), BruteForceBinder(), TrapdoorBinder(5)):
        for x in range(toy.q):
            out = run_bexp(scheme, binder, RandomTape([x]))
            replay = binder.bind(toy, pow(toy.g, x, toy.p), RandomTape([]))
            assert out.success == oracle_bexp_success(toy, x, replay)


def test_bexp_null_binder_always_false(scheme):
    for x in range(11):
        out = run_bexp(scheme, NullBinder(), RandomTape([x]))
        assert not out.success
        trace = dict(out.transcript)
        assert trace["v1"] == 1 and trace["v2"] == 1  # fails only on m != m2


def test_bexp_non_verifying_output_is_false_not_error(scheme):
    class WrongOpening:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 4, 1, 1, 2, 2  # c in subgroup but neither opening verifies

    out = run_bexp(scheme, WrongOpening(), RandomTape([3]))
    assert not out.success


def test_bexp_rejects_non_subgroup_commitment(scheme):
    class OutsideC:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 5, 0, 0, 1, 0

    with pytest.raises(AdversaryRangeError):
        run_bexp(scheme, OutsideC(), RandomTape([3]))


def test_bexp_rejects_out_of_range_opening(scheme):
    class BigD:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 1, 0, group.q, 1, 0

    with pytest.raises(AdversaryRangeError):
        run_bexp(scheme, BigD(), RandomTape([3]))


# --- discrete log ---


def test_dlog_solver_always_wins(toy):
    for x in range(toy.q):
        out = run_dlog(toy, BruteForceDLogSolver(), RandomTape([x]))
        assert out.success
        assert dict(out.transcript)["answer"] == x


def test_dlog_abstain_always_loses(toy):
    for x in range(toy.q):
        out = run_dlog(toy, AbstainAdversary(), RandomTape([x]))
        assert not out.success
        assert dict(out.transcript)["answer"] is None


def test_dlog_constant_adversary_wins_once(toy):
    wins = sum(
        run_dlog(toy, ConstantDLogAdversary(0), RandomTape([x])).success
        for x in range(toy.q)
    )
    assert wins == 1


def test_dlog_rejects_out_of_range_answer(toy):
    with pytest.raises(AdversaryRangeError):
        run_dlog(toy, ConstantDLogAdversary(11), RandomTape([3]))


def test_dlog_attacker_worked_example(toy):
    class Fixed:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 12, 2, 4, 5, 6

    attacker = dlog_attacker(Fixed())
    # h = 8 = g^3; (d - d2) * inv(m2 - m) = (4-6) * inv(3) = 9 * 4 = 3 mod 11.
    assert attacker.guess(toy, 8, RandomTape([])) == 3


def test_dlog_attacker_guards(toy):
    class EqualMessages:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 1, 0, 0, 0, 0

    class NonVerifying:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 4, 1, 1, 2, 2

    class Garbage:
        def bind_domains(self, group):
            return ()

        def bind(self, group, h, source):
            return 1, 0, 0, 1, group.q  # d2 out of range

    for binder in (EqualMessages(), NonVerifying(), Garbage()):
        assert dlog_attacker(binder).guess(toy, 8, RandomTape([])) is None


# --- cross-cutting ---


def test_outcomes_deterministic(toy, scheme):
    a = run_hexp(scheme, ConstantUnhider(0), RandomTape([3, 1, 4]))
    b = run_hexp(scheme, ConstantUnhider(0), RandomTape([3, 1, 4]))
    assert a == b


def test_short_tape_raises(scheme):
    with pytest.raises(TapeExhausted):
        run_correctness(scheme, 2, RandomTape([3]))


def test_experiments_consume_exactly_declared_draws(toy, scheme):
    from pedersen_games.adversaries import unhider_zoo

    for unhider in unhider_zoo().values():
        for exp in (Hiding(toy), InterimHiding(toy)):
            domains = exp.domains(unhider)
            tape = RandomTape([0] * len(domains))
            exp.run(unhider, tape)
            assert tape.remaining() == 0


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_transcript_formatting(x, d):
    scheme = Pedersen(toy_group())
    out = run_correctness(scheme, 2, RandomTape([x, d]))
    text = format_transcript(out)
    assert f"d = {hex(d)}" in text
    assert text.endswith("success = true")


def test_transcript_formats_absent_answer(toy):
    out = run_dlog(toy, AbstainAdversary(), RandomTape([3]))
    assert "answer = none" in format_transcript(out)
    assert format_transcript(out).endswith("success = false")
