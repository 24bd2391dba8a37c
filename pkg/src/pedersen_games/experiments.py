"""Security experiments for the commitment scheme, as replayable procedures.

Each experiment is a deterministic function of (group, adversary, tape).
Randomness comes only from the tape/source argument, one draw per sampled
value in program order, so outcomes can be enumerated exhaustively or
replayed from a seed. Every experiment declares its draw order:

    correctness   [x, d]
    hiding        [x, choose-draws..., b, d, guess-draws...]
    interim       [x, choose-draws..., b, d, guess-draws...]  (same arity)
    binding       [x, bind-draws...]
    discrete-log  [x, guess-draws...]

The hiding and interim-hiding experiments consume identical tape prefixes
by construction; the binding and discrete-log experiments share a tape
once the discrete-log adversary is ``dlog_attacker(binder)``, which makes
per-tape outcome comparison meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group
from .pedersen import Pedersen


class AdversaryRangeError(Exception):
    """An adversary returned a value outside its declared type."""


class DomainUndeclaredError(Exception):
    """An adversary does not declare tape domains for a procedure."""


@dataclass(frozen=True)
class ExperimentOutcome:
    """Success flag plus an ordered transcript of every sampled or returned value."""

    success: bool
    transcript: tuple[tuple[str, int | None], ...]


def format_transcript(outcome: ExperimentOutcome) -> str:
    """One `name = hex` line per transcript entry; absent values print as none."""
    lines = []
    for name, value in outcome.transcript:
        rendered = "none" if value is None else hex(value)
        lines.append(f"{name} = {rendered}")
    lines.append(f"success = {'true' if outcome.success else 'false'}")
    return "\n".join(lines)


def _declared(adversary, method_name: str, group: Group) -> tuple[int, ...]:
    decl = getattr(adversary, method_name, None)
    if decl is None:
        raise DomainUndeclaredError(
            f"{type(adversary).__name__} does not declare {method_name}"
        )
    domains = tuple(decl(group))
    if any(d < 1 for d in domains):
        raise DomainUndeclaredError(
            f"{type(adversary).__name__}.{method_name} declared empty domain"
        )
    return domains


def _check_scalar(group: Group, name: str, value) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < group.q:
        raise AdversaryRangeError(f"{name} = {value!r} is not a scalar in [0, {group.q})")
    return value


def _check_bit(name: str, value) -> int:
    if value not in (0, 1):
        raise AdversaryRangeError(f"{name} = {value!r} is not a bit")
    return int(value)


def _check_element(group: Group, name: str, value) -> int:
    if not isinstance(value, int) or not group.is_element(value):
        raise AdversaryRangeError(f"{name} = {value!r} is not a subgroup element")
    return value


class Correctness:
    """Honest run: h from gen, commit to a fixed m, then verify.

    Draw order [x, d]. The adversary slot is unused; it exists so all
    experiments share the (adversary, source) calling shape.
    """

    name = "corr"

    def __init__(self, group: Group, m: int):
        self.group = group
        self.scheme = Pedersen(group)
        self.m = group.scalar(m)

    def domains(self, adversary=None) -> tuple[int, ...]:
        return self.scheme.gen_domains() + self.scheme.commit_domains()

    def run(self, adversary, source) -> ExperimentOutcome:
        h = self.scheme.gen(source)
        c, d = self.scheme.commit(h, self.m, source)
        ok = self.scheme.verify(h, c, self.m, d)
        return ExperimentOutcome(
            success=ok,
            transcript=(("h", h), ("m", self.m), ("d", d), ("c", c)),
        )


class Hiding:
    """The guessing game against the real scheme.

    h from gen; the unhider picks (m0, m1); a secret bit b selects which
    message gets committed; the unhider sees c and guesses b. Success is
    guessing right. Draw order [x, choose-draws..., b, d, guess-draws...].
    """

    name = "hexp"

    def __init__(self, group: Group):
        self.group = group
        self.scheme = Pedersen(group)

    def domains(self, unhider) -> tuple[int, ...]:
        return (
            self.scheme.gen_domains()
            + _declared(unhider, "choose_domains", self.group)
            + (2,)
            + self.scheme.commit_domains()
            + _declared(unhider, "guess_domains", self.group)
        )

    def run(self, unhider, source) -> ExperimentOutcome:
        group = self.group
        h = self.scheme.gen(source)
        m0, m1 = unhider.choose(group, h, source)
        m0 = _check_scalar(group, "m0", m0)
        m1 = _check_scalar(group, "m1", m1)
        b = source.draw(2)
        c, d = self.scheme.commit(h, m1 if b else m0, source)
        guess = _check_bit("guess", unhider.guess(group, c, source))
        return ExperimentOutcome(
            success=guess == b,
            transcript=(
                ("h", h), ("m0", m0), ("m1", m1), ("b", b),
                ("d", d), ("c", c), ("guess", guess),
            ),
        )


class InterimHiding:
    """The guessing game with the commitment replaced by c = g^d.

    Identical to the hiding experiment in every draw (same positions, same
    domains); only the commitment computation changes, and it ignores both
    messages. The message-independence makes the 1/2 bound transparent,
    and the shared tape shape lets exhaustive counts be compared one tape
    at a time against the real game.
    """

    name = "hinterm"

    def __init__(self, group: Group):
        self.group = group
        self.scheme = Pedersen(group)

    def domains(self, unhider) -> tuple[int, ...]:
        return (
            self.scheme.gen_domains()
            + _declared(unhider, "choose_domains", self.group)
            + (2,)
            + self.scheme.commit_domains()
            + _declared(unhider, "guess_domains", self.group)
        )

    def run(self, unhider, source) -> ExperimentOutcome:
        group = self.group
        h = self.scheme.gen(source)
        m0, m1 = unhider.choose(group, h, source)
        m0 = _check_scalar(group, "m0", m0)
        m1 = _check_scalar(group, "m1", m1)
        b = source.draw(2)
        d = group.sample_scalar(source)
        c = group.exp(group.g, d)
        guess = _check_bit("guess", unhider.guess(group, c, source))
        return ExperimentOutcome(
            success=guess == b,
            transcript=(
                ("h", h), ("m0", m0), ("m1", m1), ("b", b),
                ("d", d), ("c", c), ("guess", guess),
            ),
        )


class Binding:
    """The equivocation game: the binder must open one c two ways.

    h from gen; the binder outputs (c, m, d, m2, d2); success requires both
    openings to verify and the messages to differ. Draw order
    [x, bind-draws...].
    """

    name = "bexp"

    def __init__(self, group: Group):
        self.group = group
        self.scheme = Pedersen(group)

    def domains(self, binder) -> tuple[int, ...]:
        return self.scheme.gen_domains() + _declared(binder, "bind_domains", self.group)

    def run(self, binder, source) -> ExperimentOutcome:
        group = self.group
        h = self.scheme.gen(source)
        c, m, d, m2, d2 = binder.bind(group, h, source)
        c = _check_element(group, "c", c)
        m = _check_scalar(group, "m", m)
        d = _check_scalar(group, "d", d)
        m2 = _check_scalar(group, "m2", m2)
        d2 = _check_scalar(group, "d2", d2)
        v1 = self.scheme.verify(h, c, m, d)
        v2 = self.scheme.verify(h, c, m2, d2)
        return ExperimentOutcome(
            success=v1 and v2 and m != m2,
            transcript=(
                ("h", h), ("c", c), ("m", m), ("d", d),
                ("m2", m2), ("d2", d2), ("v1", int(v1)), ("v2", int(v2)),
            ),
        )


class DiscreteLog:
    """Recover x from h = g^x. Success requires a present, correct answer.

    Draw order [x, guess-draws...]. An absent answer (None) models the
    adversary giving up and always loses.
    """

    name = "dlog"

    def __init__(self, group: Group):
        self.group = group

    def domains(self, adversary) -> tuple[int, ...]:
        return (self.group.q,) + _declared(adversary, "guess_domains", self.group)

    def run(self, adversary, source) -> ExperimentOutcome:
        group = self.group
        x = group.sample_scalar(source)
        h = group.exp(group.g, x)
        answer = adversary.guess(group, h, source)
        if answer is not None:
            answer = _check_scalar(group, "answer", answer)
        return ExperimentOutcome(
            success=answer is not None and answer == x,
            transcript=(("x", x), ("h", h), ("answer", answer)),
        )


def run_correctness(scheme: Pedersen, m: int, source) -> ExperimentOutcome:
    return Correctness(scheme.group, m).run(None, source)


def run_hexp(scheme: Pedersen, unhider, source) -> ExperimentOutcome:
    return Hiding(scheme.group).run(unhider, source)


def run_hinterm(group: Group, unhider, source) -> ExperimentOutcome:
    return InterimHiding(group).run(unhider, source)


def run_bexp(scheme: Pedersen, binder, source) -> ExperimentOutcome:
    return Binding(scheme.group).run(binder, source)


def run_dlog(group: Group, adversary, source) -> ExperimentOutcome:
    return DiscreteLog(group).run(adversary, source)
