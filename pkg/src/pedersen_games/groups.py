"""Prime-order subgroups of Z_p^* and their scalar field Z_q.

Two backends share one code path: a brute-forceable toy group (p=23, q=11,
g=2) for exhaustive verification and a 256-bit safe-prime group for
realistic runs. Scalars and group elements are plain Python ints; range and
subgroup membership are enforced at the checked entry points (``scalar``,
``element``, decode, ``validate_group``) so the arithmetic loops stay
branch-light.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import gmpy2

TOY_ORDER_BOUND = 1 << 20

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)


class GroupError(Exception):
    """Base class for group parameter and arithmetic errors."""


class NotPrimeError(GroupError):
    def __init__(self, name: str, value: int):
        super().__init__(f"{name} = {value} is not prime")
        self.name = name
        self.value = value


class OrderMismatchError(GroupError):
    pass


class BadGeneratorError(GroupError):
    pass


class ZeroInverseError(GroupError):
    pass


class NotInSubgroupError(GroupError):
    pass


class BackendTooLargeError(GroupError):
    pass


class DecodeOutOfRangeError(GroupError):
    pass


class DecodeNotInSubgroupError(GroupError):
    pass


@dataclass(frozen=True)
class Group:
    """The tuple (p, q, g): modulus, prime subgroup order, generator.

    Scalars live in Z_q, group elements in the order-q subgroup of Z_p^*.
    Construct through ``toy_group``/``large_group``/``parse_group_file`` to
    get validated parameters; ``validate_group`` checks the invariants.
    """

    p: int
    q: int
    g: int
    backend: str

    @property
    def element_width(self) -> int:
        """Fixed encoding width for group elements, in bytes."""
        return (self.p.bit_length() + 7) // 8

    @property
    def scalar_width(self) -> int:
        """Fixed encoding width for scalars, in bytes."""
        return (self.q.bit_length() + 7) // 8

    # --- scalar field Z_q ---

    def scalar(self, value: int) -> int:
        """Checked scalar constructor."""
        if not 0 <= value < self.q:
            raise DecodeOutOfRangeError(f"scalar {value} outside [0, {self.q})")
        return value

    def scalar_add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def scalar_sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def scalar_mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def scalar_neg(self, a: int) -> int:
        return -a % self.q

    def scalar_inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroInverseError("0 has no multiplicative inverse")
        return pow(a, -1, self.q)

    def sample_scalar(self, source) -> int:
        """Uniform scalar from a tape or seeded source (one draw)."""
        return source.draw(self.q)

    # --- group operations mod p ---

    def is_element(self, value: int) -> bool:
        """Membership in the order-q subgroup (one exponentiation)."""
        return 1 <= value < self.p and gmpy2.powmod(value, self.q, self.p) == 1

    def element(self, value: int) -> int:
        """Checked element constructor."""
        if not 1 <= value < self.p:
            raise DecodeOutOfRangeError(f"element {value} outside [1, {self.p})")
        if not self.is_element(value):
            raise DecodeNotInSubgroupError(f"{value} is not in the order-{self.q} subgroup")
        return value

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def exp(self, base: int, e: int) -> int:
        """base**e mod p by square-and-multiply.

        The ladder always walks q.bit_length() bits, so the loop structure
        is independent of the exponent value. Exponents act mod q because
        subgroup elements have order dividing q.
        """
        p = gmpy2.mpz(self.p)
        b = gmpy2.mpz(base)
        e = gmpy2.mpz(e % self.q)
        acc = gmpy2.mpz(1)
        for i in range(self.q.bit_length() - 1, -1, -1):
            acc = acc * acc % p
            if e.bit_test(i):
                acc = acc * b % p
        return int(acc)

    def subgroup_elements(self) -> list[int]:
        """All q subgroup elements, as successive powers of g. Toy-scale only."""
        if self.q > TOY_ORDER_BOUND:
            raise BackendTooLargeError(f"subgroup listing needs q <= {TOY_ORDER_BOUND}")
        out = []
        acc = 1
        for _ in range(self.q):
            out.append(acc)
            acc = acc * self.g % self.p
        return out

    # --- fixed-width big-endian encodings ---

    def encode_element(self, value: int) -> bytes:
        return value.to_bytes(self.element_width, "big")

    def decode_element(self, raw: bytes) -> int:
        if len(raw) != self.element_width:
            raise DecodeOutOfRangeError(
                f"element encoding must be {self.element_width} bytes, got {len(raw)}"
            )
        return self.element(int.from_bytes(raw, "big"))

    def encode_scalar(self, value: int) -> bytes:
        return value.to_bytes(self.scalar_width, "big")

    def decode_scalar(self, raw: bytes) -> int:
        if len(raw) != self.scalar_width:
            raise DecodeOutOfRangeError(
                f"scalar encoding must be {self.scalar_width} bytes, got {len(raw)}"
            )
        value = int.from_bytes(raw, "big")
        if value >= self.q:
            raise DecodeOutOfRangeError(f"scalar {value} outside [0, {self.q})")
        return value


def trial_division_is_prime(n: int) -> bool:
    """Exact primality by trial division; for toy-scale values."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def miller_rabin_is_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin with ``rounds`` bases drawn deterministically from n."""
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_prime(n: int, backend: str) -> bool:
    if backend == "toy":
        return trial_division_is_prime(n)
    return miller_rabin_is_prime(n)


def validate_group(group: Group) -> None:
    """Raise unless (p, q, g) describe a prime-order subgroup of Z_p^*.

    Checks: p and q prime (trial division on the toy backend, 40-round
    Miller-Rabin on the large one), q | p-1, and g a non-identity element
    with g^q = 1.
    """
    if group.backend not in ("toy", "large"):
        raise GroupError(f"unknown backend tag {group.backend!r}")
    if group.backend == "toy" and group.q > TOY_ORDER_BOUND:
        raise BackendTooLargeError(
            f"toy backend requires q <= {TOY_ORDER_BOUND}, got {group.q}"
        )
    if group.p % 2 == 0 or not _is_prime(group.p, group.backend):
        raise NotPrimeError("p", group.p)
    if not _is_prime(group.q, group.backend):
        raise NotPrimeError("q", group.q)
    if (group.p - 1) % group.q != 0:
        raise OrderMismatchError(f"q = {group.q} does not divide p - 1 = {group.p - 1}")
    if not 1 < group.g < group.p:
        raise BadGeneratorError(f"generator {group.g} outside (1, p)")
    if pow(group.g, group.q, group.p) != 1:
        raise BadGeneratorError(f"generator {group.g} does not have order {group.q}")


def brute_force_dlog(group: Group, h: int) -> int:
    """Exhaustive search for x with g^x = h. Toy-scale oracle only."""
    if group.q > TOY_ORDER_BOUND:
        raise BackendTooLargeError(
            f"brute-force discrete log needs q <= {TOY_ORDER_BOUND}, got {group.q}"
        )
    acc = 1
    for x in range(group.q):
        if acc == h:
            return x
        acc = acc * group.g % group.p
    raise NotInSubgroupError(f"{h} is not a power of {group.g} mod {group.p}")


# --- parameter files: one "key = value" per line, decimal numbers ---

_GROUP_KEYS = ("p", "q", "g", "backend")


def format_group_file(group: Group) -> str:
    return (
        f"p = {group.p}\n"
        f"q = {group.q}\n"
        f"g = {group.g}\n"
        f"backend = {group.backend}\n"
    )


def parse_group_file(text: str) -> Group:
    """Parse and validate a group parameter file. '#' starts a comment."""
    fields: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise GroupError(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _GROUP_KEYS:
            raise GroupError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise GroupError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()
    missing = [k for k in _GROUP_KEYS if k not in fields]
    if missing:
        raise GroupError(f"missing keys: {', '.join(missing)}")
    try:
        group = Group(
            p=int(fields["p"]),
            q=int(fields["q"]),
            g=int(fields["g"]),
            backend=fields["backend"],
        )
    except ValueError as exc:
        raise GroupError(f"non-integer parameter: {exc}") from exc
    validate_group(group)
    return group


def load_group_file(path) -> Group:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_file(fh.read())


def save_group_file(group: Group, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_group_file(group))


def _load_builtin(name: str) -> Group:
    text = (resources.files(__package__) / "params" / f"{name}.params").read_text()
    return parse_group_file(text)


@lru_cache(maxsize=None)
def toy_group() -> Group:
    """p=23, q=11, g=2: small enough to enumerate everything."""
    return _load_builtin("toy")


@lru_cache(maxsize=None)
def large_group() -> Group:
    """The checked-in 256-bit safe-prime group."""
    return _load_builtin("large")


def builtin_group(name: str) -> Group:
    if name == "toy":
        return toy_group()
    if name == "large":
        return large_group()
    raise GroupError(f"unknown builtin group {name!r} (have: toy, large)")
