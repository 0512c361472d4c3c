#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 wxkit contributors
"""Cross-checks `wxkit frame build/parse` against LoRaWAN 1.0.x uplink
framing computed here with the `cryptography` package."""

import random
import struct
import subprocess
import sys

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
from cryptography.hazmat.primitives.cmac import CMAC


def aes_ecb(key, block):
    enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    return enc.update(block) + enc.finalize()


def cmac(key, data):
    c = CMAC(algorithms.AES(key))
    c.update(data)
    return c.finalize()


def keystream_xor(key, dev_addr, fcnt, data):
    out = bytearray()
    for i in range(0, len(data), 16):
        a = bytes([1, 0, 0, 0, 0, 0]) + struct.pack("<II", dev_addr, fcnt) + bytes([0, i // 16 + 1])
        s = aes_ecb(key, a)
        out += bytes(x ^ y for x, y in zip(data[i:i + 16], s))
    return bytes(out)


def build(dev_addr, nwk, app, fcnt, fport, payload):
    body = bytes([0x40]) + struct.pack("<IBH", dev_addr, 0, fcnt & 0xFFFF)
    if payload:
        body += bytes([fport]) + keystream_xor(app, dev_addr, fcnt, payload)
    b0 = bytes([0x49, 0, 0, 0, 0, 0]) + struct.pack("<II", dev_addr, fcnt) + bytes([0, len(body)])
    return body + cmac(nwk, b0 + body)[:4]


def run(binary, args, stdin):
    p = subprocess.run([binary] + args, input=stdin, capture_output=True, text=True, check=False)
    if p.returncode != 0:
        raise RuntimeError(f"{args[:2]} exited {p.returncode}: {p.stderr.strip()}")
    return p.stdout


def main():
    binary = sys.argv[1]
    rng = random.Random(1729)
    failures = 0
    for i in range(100):
        dev_addr = rng.getrandbits(32)
        nwk = rng.randbytes(16)
        app = rng.randbytes(16)
        fcnt = rng.randrange(0, 100000)
        fport = rng.randrange(1, 224)
        payload = rng.randbytes(rng.choice([29, 27, rng.randrange(1, 223)]))
        keys = ["--devaddr", f"{dev_addr:08x}", "--nwkskey", nwk.hex(), "--appskey", app.hex(),
                "--fcnt", str(fcnt)]
        want = build(dev_addr, nwk, app, fcnt, fport, payload).hex()
        got = run(binary, ["frame", "build", "--fport", str(fport)] + keys, payload.hex() + "\n").strip()
        if got != want:
            failures += 1
            print(f"case {i}: build mismatch\n  wxkit  {got}\n  oracle {want}")
            continue
        parsed = run(binary, ["frame", "parse"] + keys, want + "\n")
        if f'"payload":"{payload.hex()}"' not in parsed or f'"fcnt":{fcnt}' not in parsed:
            failures += 1
            print(f"case {i}: parse mismatch: {parsed.strip()}")
        if len(payload) == 29 and len(want) != 84:
            failures += 1
            print(f"case {i}: 29-byte payload frame is {len(want) // 2} bytes")
    print(f"{100 - failures}/100 frames agree")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
