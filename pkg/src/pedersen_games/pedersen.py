"""Pedersen commitments over a prime-order group.

Key generation samples x uniform in Z_q and publishes h = g^x; committing
to a message m in Z_q samples decommitment d uniform in Z_q and outputs
c = g^d * h^m. Verification recomputes the product. The commitment is
perfectly hiding (c is uniform on the subgroup whatever m is) and binding
as long as nobody can compute log_g(h).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group


@dataclass(frozen=True)
class Pedersen:
    """The scheme, parameterized by its group.

    Randomized methods draw from an explicit source (a replayable tape or
    a seeded stream) so experiments can enumerate or replay every choice.
    ``gen_domains``/``commit_domains`` declare how many draws each method
    makes and from which ranges.
    """

    group: Group

    def gen_domains(self) -> tuple[int, ...]:
        return (self.group.q,)

    def gen(self, source) -> int:
        """Public key h = g^x for x uniform in Z_q; x is discarded."""
        x = self.group.sample_scalar(source)
        return self.group.exp(self.group.g, x)

    def gen_with_trapdoor(self, source) -> tuple[int, int]:
        """Like ``gen`` but keeps x. Test and demo hook, not part of the scheme."""
        x = self.group.sample_scalar(source)
        return self.group.exp(self.group.g, x), x

    def commit_domains(self) -> tuple[int, ...]:
        return (self.group.q,)

    def commit(self, h: int, m: int, source) -> tuple[int, int]:
        """Commit to m under key h: d uniform in Z_q, c = g^d * h^m."""
        d = self.group.sample_scalar(source)
        c = self.group.mul(self.group.exp(self.group.g, d), self.group.exp(h, m))
        return c, d

    def verify(self, h: int, c: int, m: int, d: int) -> bool:
        """Accept iff c = g^d * h^m."""
        return c == self.group.mul(self.group.exp(self.group.g, d), self.group.exp(h, m))
