"""Pedersen commitments with executable security games.

The package centers on three layers: group arithmetic with explicit
parameter validation (``groups``), the commitment scheme itself
(``pedersen``), and the security experiments plus adversaries and
probability machinery that make the scheme's hiding/binding claims
checkable by enumeration, replay, and estimation (``experiments``,
``adversaries``, ``probability``). A framed two-party protocol
(``protocol``) and a CLI (``cli``) sit on top.
"""

from .adversaries import (
    AbstainAdversary,
    BruteForceBinder,
    BruteForceDLogSolver,
    ConstantDLogAdversary,
    ConstantUnhider,
    DistinctMessageUnhider,
    DLogAttacker,
    NullBinder,
    TapeRandomUnhider,
    TrapdoorBinder,
    adversary_zoo,
    binder_zoo,
    dlog_attacker,
    dlog_zoo,
    unhider_zoo,
)
from .experiments import (
    AdversaryRangeError,
    Binding,
    Correctness,
    DiscreteLog,
    DomainUndeclaredError,
    ExperimentOutcome,
    Hiding,
    InterimHiding,
    format_transcript,
    run_bexp,
    run_correctness,
    run_dlog,
    run_hexp,
    run_hinterm,
)
from .groups import (
    BackendTooLargeError,
    BadGeneratorError,
    DecodeNotInSubgroupError,
    DecodeOutOfRangeError,
    Group,
    GroupError,
    NotInSubgroupError,
    NotPrimeError,
    OrderMismatchError,
    ZeroInverseError,
    brute_force_dlog,
    builtin_group,
    large_group,
    load_group_file,
    parse_group_file,
    save_group_file,
    toy_group,
    validate_group,
)
from .pedersen import Pedersen
from .protocol import (
    TAG_COMMIT,
    TAG_OPEN,
    TAG_RESULT,
    TAG_SETUP,
    BadLengthError,
    BadTagError,
    Commit,
    Committer,
    ConnectionClosedError,
    MemoryChannel,
    Open,
    ProtocolError,
    Receiver,
    Result,
    SessionOutcome,
    Setup,
    SocketChannel,
    WrongStateError,
    connect_committer,
    decode_frame,
    decode_payload,
    encode_message,
    memory_channel_pair,
    read_message,
    run_committer,
    run_receiver,
    serve_receiver_once,
)
from .probability import (
    CouplingVerdict,
    EqualityVerdict,
    Estimate,
    ExactProbability,
    UniformityCheck,
    check_coupling,
    check_equality,
    clopper_pearson,
    commitment_image,
    commitment_uniformity,
    coupling_domains,
    enumerate_exact,
    estimate,
)
from .tape import (
    RandomTape,
    SeededSource,
    TapeExhausted,
    exhaustive_tapes,
    random_tape,
    seeded_tapes,
    uniform_draw,
)

__version__ = "0.1.0"

__all__ = [
    "AbstainAdversary",
    "AdversaryRangeError",
    "BackendTooLargeError",
    "BadGeneratorError",
    "BadLengthError",
    "BadTagError",
    "Binding",
    "BruteForceBinder",
    "BruteForceDLogSolver",
    "Commit",
    "Committer",
    "ConnectionClosedError",
    "ConstantDLogAdversary",
    "ConstantUnhider",
    "Correctness",
    "CouplingVerdict",
    "DLogAttacker",
    "DecodeNotInSubgroupError",
    "DecodeOutOfRangeError",
    "DiscreteLog",
    "DistinctMessageUnhider",
    "DomainUndeclaredError",
    "EqualityVerdict",
    "Estimate",
    "ExactProbability",
    "ExperimentOutcome",
    "Group",
    "GroupError",
    "Hiding",
    "InterimHiding",
    "MemoryChannel",
    "NotInSubgroupError",
    "NotPrimeError",
    "NullBinder",
    "Open",
    "OrderMismatchError",
    "Pedersen",
    "ProtocolError",
    "RandomTape",
    "Receiver",
    "Result",
    "SeededSource",
    "SessionOutcome",
    "Setup",
    "SocketChannel",
    "TAG_COMMIT",
    "TAG_OPEN",
    "TAG_RESULT",
    "TAG_SETUP",
    "TapeExhausted",
    "TapeRandomUnhider",
    "TrapdoorBinder",
    "UniformityCheck",
    "WrongStateError",
    "ZeroInverseError",
    "adversary_zoo",
    "binder_zoo",
    "brute_force_dlog",
    "builtin_group",
    "check_coupling",
    "check_equality",
    "clopper_pearson",
    "commitment_image",
    "commitment_uniformity",
    "connect_committer",
    "coupling_domains",
    "decode_frame",
    "decode_payload",
    "dlog_attacker",
    "dlog_zoo",
    "encode_message",
    "enumerate_exact",
    "estimate",
    "exhaustive_tapes",
    "format_transcript",
    "large_group",
    "load_group_file",
    "memory_channel_pair",
    "parse_group_file",
    "random_tape",
    "read_message",
    "run_bexp",
    "run_committer",
    "run_correctness",
    "run_dlog",
    "run_hexp",
    "run_hinterm",
    "run_receiver",
    "save_group_file",
    "seeded_tapes",
    "serve_receiver_once",
    "toy_group",
    "unhider_zoo",
    "uniform_draw",
    "validate_group",
]
