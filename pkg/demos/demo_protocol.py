"""
Two parties, four frames
========================

The commit/open protocol moves exactly four framed messages: SETUP
carries the key, COMMIT the sealed value, OPEN the claimed message and
decommitment key, RESULT the receiver's verdict.  Frames are
tag || length || payload with fixed-width big-endian fields, so the
same session runs over an in-memory pipe or a TCP socket byte for byte.
"""

import threading

from pedersen_games import (
    Pedersen,
    RandomTape,
    SeededSource,
    TrapdoorBinder,
    connect_committer,
    large_group,
    memory_channel_pair,
    run_committer,
    run_receiver,
    serve_receiver_once,
    toy_group,
)

group = toy_group()

# Honest session over an in-memory channel.  The receiver runs in a
# thread; both parties log every frame they send and receive.
left, right = memory_channel_pair()
box = {}
thread = threading.Thread(
    target=lambda: box.setdefault("r", run_receiver(group, left, SeededSource(7)))
)
thread.start()
committer = run_committer(group, right, 5, SeededSource(8))
thread.join()
receiver = box["r"]

print("frames on the wire (committer's view):")
labels = ("COMMIT", "OPEN")
for label, frame in zip(labels, committer.frames_sent):
    print(f"  sent {label:<6} {frame.hex()}")
for label, frame in zip(("SETUP", "RESULT"), committer.frames_received):
    print(f"  got  {label:<6} {frame.hex()}")
print(f"verdicts: receiver={receiver.accept}, committer={committer.accept}")

# A dishonest opening swaps the message after committing.  The receiver
# recomputes g^d * h^m and rejects.
left, right = memory_channel_pair()
thread = threading.Thread(
    target=lambda: box.setdefault("cheat", run_receiver(group, left, SeededSource(7)))
)
thread.start()
cheater = run_committer(group, right, 5, SeededSource(8), open_m=6)
thread.join()
print(f"\ndishonest open (committed 5, opened 6): receiver says {box['cheat'].accept}")

# The same machines over TCP on the 256-bit group.  serve_receiver_once
# binds an ephemeral port and reports it through the bound list.
big = large_group()
ready = threading.Event()
bound = []
thread = threading.Thread(
    target=lambda: box.setdefault(
        "tcp", serve_receiver_once(big, "127.0.0.1", 0, SeededSource(7), ready=ready, bound=bound)
    )
)
thread.start()
ready.wait()
tcp_committer = connect_committer(big, "127.0.0.1", bound[0], 123456789, SeededSource(8))
thread.join()
print(f"\nTCP on 127.0.0.1:{bound[0]}, 256-bit group: "
      f"receiver={box['tcp'].accept}, committer={tcp_committer.accept}")
print(f"OPEN frame was {len(tcp_committer.frames_sent[1])} bytes "
      f"(5 header + {2 * big.scalar_width} payload)")

# Binding leans on the receiver forgetting x.  A receiver that keeps it
# can equivocate: with c = g, the openings (0, 1) and (1, 1 - x) both
# verify, so trapdoored keys must never leave the setup phase.
left, right = memory_channel_pair()
thread = threading.Thread(
    target=lambda: box.setdefault(
        "trap", run_receiver(group, left, SeededSource(7), keep_trapdoor=True)
    )
)
thread.start()
run_committer(group, right, 5, SeededSource(8))
thread.join()
x = box["trap"].trapdoor_x
h = group.exp(group.g, x)
scheme = Pedersen(group)
c, m, d, m2, d2 = TrapdoorBinder(x).bind(group, h, RandomTape([]))
print(f"\ntrapdoor x={x} kept by the receiver equivocates c={c}:")
print(f"  open as (m={m}, d={d}):  verify={scheme.verify(h, c, m, d)}")
print(f"  open as (m={m2}, d={d2}): verify={scheme.verify(h, c, m2, d2)}")
