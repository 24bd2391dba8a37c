"""
Breaking binding means computing discrete logs
==============================================

A binder wins the binding game by opening one commitment to two
different messages.  The reduction wraps any binder into a discrete-log
solver: two valid openings (m, d) and (m2, d2) of the same c satisfy
d + x*m = d2 + x*m2, so x = (d - d2) / (m2 - m).  On the toy group the
wrapped brute-force binder recovers x on every single tape.
"""

from pedersen_games import (
    Binding,
    BruteForceBinder,
    DiscreteLog,
    NullBinder,
    RandomTape,
    binder_zoo,
    brute_force_dlog,
    check_coupling,
    coupling_domains,
    dlog_attacker,
    enumerate_exact,
    exhaustive_tapes,
    format_transcript,
    run_bexp,
    run_dlog,
    toy_group,
)
from pedersen_games.pedersen import Pedersen

group = toy_group()

# One binding playthrough.  The brute-force binder solves for x by linear
# search, then equivocates: c = g opens as (0, 1) and as (1, 1 - x).
binder = BruteForceBinder()
outcome = run_bexp(Pedersen(group), binder, RandomTape([3]))
print("bexp with the brute-force binder, tape [3]:")
print("  " + format_transcript(outcome).replace("\n", "\n  "))

# It wins always; the reduction therefore solves dlog always.
print(f"\nexact bexp win probability:  {enumerate_exact(Binding(group), binder)}")
attacker = dlog_attacker(binder)
print(f"exact dlog win probability:  {enumerate_exact(DiscreteLog(group), attacker)}")

# Per-tape agreement is stronger than equal probabilities: on each tape
# the attacker recovers exactly the exponent the game drew.
print("\nrecovered exponents, tape by tape:")
for x in range(group.q):
    result = run_dlog(group, attacker, RandomTape([x]))
    answer = dict(result.transcript)["answer"]
    check = brute_force_dlog(group, group.exp(group.g, x))
    print(f"  x={x:>2}  answer={answer:>2}  search oracle={check:>2}  "
          f"win={result.success}")

# The coupling check replays every tape through both games and demands
# the success bits match.  It holds for winning and losing binders alike.
print("\nper-tape coupling across the binder zoo:")
for name, candidate in binder_zoo(trapdoor_x=3).items():
    tapes = exhaustive_tapes(coupling_domains(group, candidate))
    verdict = check_coupling(group, candidate, tapes)
    print(f"  {name:<11} coupled={verdict.coupled} over {verdict.tapes_checked} tapes")

# A binder that reuses the same message twice gives the attacker nothing
# to divide by; the guard answers bottom instead of faulting.
null_attacker = dlog_attacker(NullBinder())
h = group.exp(group.g, 7)
print(f"\nequal-message binder: attacker answers "
      f"{null_attacker.guess(group, h, RandomTape([]))!r} (no division error)")
