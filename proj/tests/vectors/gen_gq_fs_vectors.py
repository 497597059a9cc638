# Copyright 2026 The OFS Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference Fiat-Shamir signatures over the N = 77 toy GQ statement.

Recomputes the hash input, oracle split, commitment, challenge and response
with hashlib and plain integers, then prints C++ initialisers for
tests/unit/test_fs.cpp.
"""
import hashlib
import math
import struct

N, E, Y, W, D = 77, 7, 51, 2, 43
TAG = 0x02
CHALLENGE_BITS = E.bit_length() - 1
RND_BYTES = (N.bit_length() + 64 + 7) // 8
SEED_BYTES = (CHALLENGE_BITS + 7) // 8


def bigint(v):
    raw = v.to_bytes((v.bit_length() + 7) // 8, "big") if v else b""
    return struct.pack(">H", len(raw)) + raw


def prefixed(b):
    return struct.pack("<I", len(b)) + b


def statement():
    return bigint(E) + bigint(N) + bigint(Y)


def unit(v):
    return 0 < v < N and math.gcd(v, N) == 1


def commitment(rho):
    r = int.from_bytes(rho, "big") % N
    ctr = 0
    while not unit(r):
        r = int.from_bytes(
            hashlib.shake_256(b"ofs/gq/com" + rho + struct.pack("<I", ctr)).digest(len(rho)), "big") % N
        ctr += 1
    return r


def sign(msg, r):
    h = bytes([TAG]) + prefixed(statement()) + prefixed(msg) + prefixed(r)
    out = hashlib.shake_256(h).digest(RND_BYTES + SEED_BYTES)
    com = commitment(out[:RND_BYTES])
    ch = int.from_bytes(out[RND_BYTES:], "little") & ((1 << CHALLENGE_BITS) - 1)
    u = pow(com, D, N)
    z = u * pow(W, ch, N) % N
    assert pow(z, E, N) == com * pow(Y, ch, N) % N
    compact = bytes([0x01, TAG]) + r + prefixed(bigint(z))
    full = bytes([0x02, TAG]) + r + prefixed(bigint(com)) + prefixed(bigint(ch)) + prefixed(bigint(z))
    return com, ch, z, compact.hex(), full.hex()


CASES = [(b"", b"\x00\x00"), (b"abc", b"\x5a\x03"), (b"message 2", b"\xff\xff"), (b"\x00" * 40, b"\x10\x20")]

for msg, r in CASES:
    com, ch, z, compact, full = sign(msg, r)
    print(f'    {{"{msg.hex()}", "{r.hex()}", {com}, {ch}, {z}, "{compact}", "{full}"}},')
