"""Built-in adversaries for the security experiments.

Three kinds, matched to the experiment interfaces:

* unhiders play the hiding games: ``choose(group, h, source) -> (m0, m1)``
  and ``guess(group, c, source) -> bit``;
* binders play the binding game: ``bind(group, h, source) ->
  (c, m, d, m2, d2)``;
* discrete-log adversaries: ``guess(group, h, source) -> scalar or None``.

Every adversary declares how many tape draws each procedure makes
(``*_domains`` methods) so experiments can enumerate or replay them. All
procedures are total: they always return, never loop.
"""

from __future__ import annotations

from .groups import Group, brute_force_dlog
from .pedersen import Pedersen


class ConstantUnhider:
    """Picks messages 0 and 1, always guesses the same fixed bit."""

    def __init__(self, bit: int):
        if bit not in (0, 1):
            raise ValueError("bit must be 0 or 1")
        self.bit = bit

    def choose_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def choose(self, group: Group, h: int, source) -> tuple[int, int]:
        return 0, 1

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def guess(self, group: Group, c: int, source) -> int:
        return self.bit


class TapeRandomUnhider:
    """Picks messages 0 and 1, guesses a fresh coin from its own tape."""

    def choose_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def choose(self, group: Group, h: int, source) -> tuple[int, int]:
        return 0, 1

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return (2,)

    def guess(self, group: Group, c: int, source) -> int:
        return source.draw(2)


class DistinctMessageUnhider:
    """Tries to open the commitment by guessing the decommitment key.

    Chooses messages 1 and 2, then draws a candidate key dh and answers 1
    if c = g^dh * h^m1, 0 if c = g^dh * h^m0, and 0 otherwise. The check
    is genuine, but with the key unknown it lands on the committed message
    no more than chance: exactly half over all tapes.
    """

    def __init__(self):
        self._h = None

    def choose_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def choose(self, group: Group, h: int, source) -> tuple[int, int]:
        self._h = h
        return 1, 2

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return (group.q,)

    def guess(self, group: Group, c: int, source) -> int:
        if self._h is None:
            raise RuntimeError("guess called before choose")
        dh = source.draw(group.q)
        scheme = Pedersen(group)
        if scheme.verify(self._h, c, 2, dh):
            return 1
        if scheme.verify(self._h, c, 1, dh):
            return 0
        return 0


class NullBinder:
    """Opens c = 1 as message 0 twice. Both openings verify, but the
    messages are equal, so it never wins the binding game."""

    def bind_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def bind(self, group: Group, h: int, source) -> tuple[int, int, int, int, int]:
        return 1, 0, 0, 0, 0


class BruteForceBinder:
    """Solves for the key's discrete log by search, then equivocates.

    Given h = g^x it recovers x exhaustively and outputs c = g with the two
    openings (m=0, d=1) and (m2=1, d2=1-x): both satisfy c = g^d * h^m.
    Only viable where the search space is enumerable; on a large group the
    underlying search refuses to run.
    """

    def bind_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def bind(self, group: Group, h: int, source) -> tuple[int, int, int, int, int]:
        x = brute_force_dlog(group, h)
        return group.g % group.p, 0, 1, 1, group.scalar_sub(1, x)


class TrapdoorBinder:
    """Equivocates using a known key trapdoor instead of search.

    Models a party who kept x from key generation (the test-only gen hook,
    or a dishonest receiver). Outputs the same opening pair as the search
    binder; the openings only verify when the game's key actually is g^x
    for the stored x, so against fresh keys it almost never wins, but it
    wins with certainty against its own key on any backend.
    """

    def __init__(self, x: int):
        self.x = x

    def bind_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def bind(self, group: Group, h: int, source) -> tuple[int, int, int, int, int]:
        return group.g % group.p, 0, 1, 1, group.scalar_sub(1, self.x)


class BruteForceDLogSolver:
    """Answers discrete-log challenges by exhaustive search (toy-scale)."""

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def guess(self, group: Group, h: int, source) -> int | None:
        return brute_force_dlog(group, h)


class AbstainAdversary:
    """Always gives up: returns no answer."""

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def guess(self, group: Group, h: int, source) -> int | None:
        return None


class ConstantDLogAdversary:
    """Always answers the same scalar, ignoring the challenge."""

    def __init__(self, value: int = 0):
        self.value = value

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return ()

    def guess(self, group: Group, h: int, source) -> int | None:
        return self.value


class DLogAttacker:
    """The reduction: turns a binder into a discrete-log adversary.

    Runs the binder on the challenge key and, when both returned openings
    verify with distinct messages, solves g^d * h^m = g^d2 * h^m2 for the
    exponent: x = (d - d2) / (m2 - m) mod q. The distinctness condition is
    checked before inverting, so the division is always defined; any
    malformed or non-verifying binder output yields None instead.
    """

    def __init__(self, binder):
        self.binder = binder

    def guess_domains(self, group: Group) -> tuple[int, ...]:
        return tuple(self.binder.bind_domains(group))

    def guess(self, group: Group, h: int, source) -> int | None:
        out = self.binder.bind(group, h, source)
        if len(out) != 5 or not all(isinstance(v, int) for v in out):
            return None
        c, m, d, m2, d2 = out
        if not 1 <= c < group.p:
            return None
        if not all(0 <= v < group.q for v in (m, d, m2, d2)):
            return None
        scheme = Pedersen(group)
        if scheme.verify(h, c, m, d) and scheme.verify(h, c, m2, d2) and m != m2:
            return group.scalar_mul(
                group.scalar_sub(d, d2),
                group.scalar_inv(group.scalar_sub(m2, m)),
            )
        return None


def dlog_attacker(binder) -> DLogAttacker:
    """Wrap a binder as the discrete-log adversary of the binding reduction."""
    return DLogAttacker(binder)


def unhider_zoo() -> dict[str, object]:
    """Catalog of built-in hiding-game adversaries, keyed by CLI name."""
    return {
        "const0": ConstantUnhider(0),
        "const1": ConstantUnhider(1),
        "taperandom": TapeRandomUnhider(),
        "distinct": DistinctMessageUnhider(),
    }


def binder_zoo(trapdoor_x: int = 1) -> dict[str, object]:
    """Catalog of built-in binding-game adversaries.

    The trapdoor binder needs a key exponent to target; the default x=1 is
    valid in any group. Pass the real trapdoor to make it win.
    """
    return {
        "nullbinder": NullBinder(),
        "bruteforce": BruteForceBinder(),
        "trapdoor": TrapdoorBinder(trapdoor_x),
    }


def dlog_zoo() -> dict[str, object]:
    """Catalog of built-in discrete-log adversaries."""
    return {
        "solver": BruteForceDLogSolver(),
        "abstain": AbstainAdversary(),
        "zero": ConstantDLogAdversary(0),
    }


def adversary_zoo() -> dict[str, dict[str, object]]:
    """All built-in adversaries, grouped by the experiment kind they play."""
    return {
        "unhiders": unhider_zoo(),
        "binders": binder_zoo(),
        "dlog": dlog_zoo(),
    }
