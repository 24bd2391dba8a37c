"""Two-party commit/open protocol over a byte stream.

Message flow, one session per connection:

    receiver  -> committer   SETUP(h)     receiver samples the key
    committer -> receiver    COMMIT(c)    commitment to m
    committer -> receiver    OPEN(m, d)   reveal message and key
    receiver  -> committer   RESULT(a)    accept iff c = g^d * h^m

Frames are tag byte, 4-byte big-endian payload length, payload. Payload
fields use the group's fixed-width big-endian encodings, so frame sizes
are fully determined by the group parameters; both parties must load the
same parameter file beforehand. The state machines are pure (bytes in,
bytes out); transports are an in-memory duplex pair and a TCP stream.
"""

from __future__ import annotations

import socket
import threading
from dataclasses import dataclass

from .groups import DecodeOutOfRangeError, Group
from .pedersen import Pedersen

TAG_SETUP = 0x01
TAG_COMMIT = 0x02
TAG_OPEN = 0x03
TAG_RESULT = 0x04

_HEADER_LEN = 5


class ProtocolError(Exception):
    """Base class for protocol violations."""


class BadTagError(ProtocolError):
    pass


class BadLengthError(ProtocolError):
    pass


class WrongStateError(ProtocolError):
    pass


class ConnectionClosedError(ProtocolError):
    pass


@dataclass(frozen=True)
class Setup:
    h: int


@dataclass(frozen=True)
class Commit:
    c: int


@dataclass(frozen=True)
class Open:
    m: int
    d: int


@dataclass(frozen=True)
class Result:
    accept: bool


def _payload_length(group: Group, tag: int) -> int:
    if tag in (TAG_SETUP, TAG_COMMIT):
        return group.element_width
    if tag == TAG_OPEN:
        return 2 * group.scalar_width
    if tag == TAG_RESULT:
        return 1
    raise BadTagError(f"unknown tag 0x{tag:02x}")


def encode_message(group: Group, message) -> bytes:
    """Serialize one message as a complete frame."""
    if isinstance(message, Setup):
        tag, payload = TAG_SETUP, group.encode_element(message.h)
    elif isinstance(message, Commit):
        tag, payload = TAG_COMMIT, group.encode_element(message.c)
    elif isinstance(message, Open):
        tag, payload = TAG_OPEN, group.encode_scalar(message.m) + group.encode_scalar(message.d)
    elif isinstance(message, Result):
        tag, payload = TAG_RESULT, bytes([1 if message.accept else 0])
    else:
        raise TypeError(f"not a protocol message: {message!r}")
    return bytes([tag]) + len(payload).to_bytes(4, "big") + payload


def decode_payload(group: Group, tag: int, payload: bytes):
    """Decode and range-check one payload; the frame length must already match."""
    expected = _payload_length(group, tag)
    if len(payload) != expected:
        raise BadLengthError(
            f"tag 0x{tag:02x} payload must be {expected} bytes, got {len(payload)}"
        )
    if tag == TAG_SETUP:
        return Setup(group.decode_element(payload))
    if tag == TAG_COMMIT:
        return Commit(group.decode_element(payload))
    if tag == TAG_OPEN:
        w = group.scalar_width
        return Open(group.decode_scalar(payload[:w]), group.decode_scalar(payload[w:]))
    accept = payload[0]
    if accept not in (0, 1):
        raise DecodeOutOfRangeError(f"result byte must be 0 or 1, got {accept}")
    return Result(bool(accept))


def decode_frame(group: Group, frame: bytes):
    """Decode one complete frame held in memory."""
    if len(frame) < _HEADER_LEN:
        raise BadLengthError(f"frame header needs {_HEADER_LEN} bytes, got {len(frame)}")
    tag = frame[0]
    declared = int.from_bytes(frame[1:5], "big")
    payload = frame[5:]
    if declared != len(payload):
        raise BadLengthError(f"header declares {declared} payload bytes, frame has {len(payload)}")
    if declared != _payload_length(group, tag):
        raise BadLengthError(
            f"tag 0x{tag:02x} payload must be {_payload_length(group, tag)} bytes, got {declared}"
        )
    return decode_payload(group, tag, payload)


def _recv_exact(channel, n: int, mid_frame: bool) -> bytes:
    chunks = bytearray()
    while len(chunks) < n:
        data = channel.recv(n - len(chunks))
        if not data:
            if chunks or mid_frame:
                raise BadLengthError(f"stream ended {len(chunks)} bytes into a {n}-byte read")
            raise ConnectionClosedError("stream closed between frames")
        chunks.extend(data)
    return bytes(chunks)


def read_message(group: Group, channel):
    """Read one frame from a channel and decode it."""
    header = _recv_exact(channel, _HEADER_LEN, mid_frame=False)
    tag = header[0]
    declared = int.from_bytes(header[1:5], "big")
    expected = _payload_length(group, tag)
    if declared != expected:
        raise BadLengthError(
            f"tag 0x{tag:02x} payload must be {expected} bytes, got {declared}"
        )
    payload = _recv_exact(channel, declared, mid_frame=True)
    return decode_payload(group, tag, payload)


class Committer:
    """Committer state machine: init -> committed -> opened -> done.

    ``open_m`` substitutes a different message at the reveal step: the
    dishonest-opening knob used to show the receiver rejecting.
    """

    def __init__(self, group: Group, m: int, open_m: int | None = None):
        self.group = group
        self.scheme = Pedersen(group)
        self.m = group.scalar(m)
        self.open_m = None if open_m is None else group.scalar(open_m)
        self.phase = "init"
        self.h = None
        self.c = None
        self.d = None

    def _expect(self, phase: str) -> None:
        if self.phase != phase:
            raise WrongStateError(f"committer is {self.phase}, not {phase}")

    def on_setup(self, message: Setup, source) -> Commit:
        self._expect("init")
        self.h = self.group.element(message.h)
        self.c, self.d = self.scheme.commit(self.h, self.m, source)
        self.phase = "committed"
        return Commit(self.c)

    def open_message(self) -> Open:
        self._expect("committed")
        self.phase = "opened"
        return Open(self.m if self.open_m is None else self.open_m, self.d)

    def on_result(self, message: Result) -> bool:
        self._expect("opened")
        self.phase = "done"
        return message.accept


class Receiver:
    """Receiver state machine: init -> setup -> got_commit -> verified.

    The key exponent x is discarded at setup unless ``keep_trapdoor`` is
    set (a test/demo knob showing what a dishonest receiver could do).
    """

    def __init__(self, group: Group, keep_trapdoor: bool = False):
        self.group = group
        self.scheme = Pedersen(group)
        self.keep_trapdoor = keep_trapdoor
        self.phase = "init"
        self.h = None
        self.c = None
        self.accept = None
        self.trapdoor_x = None

    def _expect(self, phase: str) -> None:
        if self.phase != phase:
            raise WrongStateError(f"receiver is {self.phase}, not {phase}")

    def setup(self, source) -> Setup:
        self._expect("init")
        if self.keep_trapdoor:
            self.h, self.trapdoor_x = self.scheme.gen_with_trapdoor(source)
        else:
            self.h = self.scheme.gen(source)
        self.phase = "setup"
        return Setup(self.h)

    def on_commit(self, message: Commit) -> None:
        self._expect("setup")
        self.c = self.group.element(message.c)
        self.phase = "got_commit"

    def on_open(self, message: Open) -> Result:
        self._expect("got_commit")
        m = self.group.scalar(message.m)
        d = self.group.scalar(message.d)
        self.accept = self.scheme.verify(self.h, self.c, m, d)
        self.phase = "verified"
        return Result(self.accept)


# --- transports ---


class _Pipe:
    """One direction of an in-memory byte stream."""

    def __init__(self):
        self._buf = bytearray()
        self._closed = False
        self._cond = threading.Condition()

    def write(self, data: bytes) -> None:
        with self._cond:
            if self._closed:
                raise ConnectionClosedError("write to closed channel")
            self._buf.extend(data)
            self._cond.notify_all()

    def read(self, n: int) -> bytes:
        with self._cond:
            while not self._buf and not self._closed:
                self._cond.wait()
            data = bytes(self._buf[:n])
            del self._buf[:n]
            return data

    def close(self) -> None:
        with self._cond:
            self._closed = True
            self._cond.notify_all()


class MemoryChannel:
    """One endpoint of an in-memory duplex byte stream."""

    def __init__(self, outgoing: _Pipe, incoming: _Pipe):
        self._out = outgoing
        self._in = incoming

    def send(self, data: bytes) -> None:
        self._out.write(data)

    def recv(self, n: int) -> bytes:
        return self._in.read(n)

    def close(self) -> None:
        self._out.close()


def memory_channel_pair() -> tuple[MemoryChannel, MemoryChannel]:
    a_to_b = _Pipe()
    b_to_a = _Pipe()
    return MemoryChannel(a_to_b, b_to_a), MemoryChannel(b_to_a, a_to_b)


class SocketChannel:
    """Channel over a connected stream socket."""

    def __init__(self, sock: socket.socket):
        self._sock = sock

    def send(self, data: bytes) -> None:
        try:
            self._sock.sendall(data)
        except OSError as exc:
            raise ConnectionClosedError(f"send failed: {exc}") from exc

    def recv(self, n: int) -> bytes:
        try:
            return self._sock.recv(n)
        except OSError as exc:
            raise ConnectionClosedError(f"recv failed: {exc}") from exc

    def close(self) -> None:
        try:
            self._sock.shutdown(socket.SHUT_WR)
        except OSError:
            pass


# --- session drivers ---


@dataclass(frozen=True)
class SessionOutcome:
    """What one party saw: the verdict and the raw frames both ways."""

    role: str
    accept: bool
    frames_sent: tuple[bytes, ...]
    frames_received: tuple[bytes, ...]
    trapdoor_x: int | None = None


class _FrameLog:
    def __init__(self, group: Group, channel):
        self.group = group
        self.channel = channel
        self.sent: list[bytes] = []
        self.received: list[bytes] = []

    def send(self, message) -> None:
        frame = encode_message(self.group, message)
        self.channel.send(frame)
        self.sent.append(frame)

    def receive(self, expected_type):
        message = read_message(self.group, self.channel)
        self.received.append(encode_message(self.group, message))
        if not isinstance(message, expected_type):
            raise WrongStateError(
                f"expected {expected_type.__name__}, got {type(message).__name__}"
            )
        return message


def run_committer(group: Group, channel, m: int, source, open_m: int | None = None) -> SessionOutcome:
    """Drive one committer session to completion over an open channel."""
    machine = Committer(group, m, open_m=open_m)
    log = _FrameLog(group, channel)
    setup = log.receive(Setup)
    log.send(machine.on_setup(setup, source))
    log.send(machine.open_message())
    accept = machine.on_result(log.receive(Result))
    return SessionOutcome("committer", accept, tuple(log.sent), tuple(log.received))


def run_receiver(group: Group, channel, source, keep_trapdoor: bool = False) -> SessionOutcome:
    """Drive one receiver session to completion over an open channel."""
    machine = Receiver(group, keep_trapdoor=keep_trapdoor)
    log = _FrameLog(group, channel)
    log.send(machine.setup(source))
    machine.on_commit(log.receive(Commit))
    result = machine.on_open(log.receive(Open))
    log.send(result)
    return SessionOutcome(
        "receiver", result.accept, tuple(log.sent), tuple(log.received),
        trapdoor_x=machine.trapdoor_x,
    )


def serve_receiver_once(
    group: Group,
    host: str,
    port: int,
    source,
    ready: threading.Event | None = None,
    bound: list | None = None,
) -> SessionOutcome:
    """Accept one TCP connection and run one receiver session.

    ``ready``/``bound`` let a caller in another thread learn the bound
    port (pass port 0) before connecting.
    """
    with socket.create_server((host, port)) as server:
        if bound is not None:
            bound.append(server.getsockname()[1])
        if ready is not None:
            ready.set()
        conn, _ = server.accept()
        with conn:
            channel = SocketChannel(conn)
            try:
                return run_receiver(group, channel, source)
            finally:
                channel.close()


def connect_committer(
    group: Group, host: str, port: int, m: int, source, open_m: int | None = None
) -> SessionOutcome:
    """Connect to a receiver over TCP and run one committer session."""
    with socket.create_connection((host, port)) as sock:
        channel = SocketChannel(sock)
        try:
            return run_committer(group, channel, m, source, open_m=open_m)
        finally:
            channel.close()
