#!/usr/bin/env python3
"""Regenerates tests/golden/sample_generic.txt from a standalone MT19937-64."""
import sys

MASK = (1 << 64) - 1
P = (1 << 61) - 1


class MT64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK
        self.idx = 312

    def _twist(self):
        upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF
        for i in range(312):
            x = (self.mt[i] & upper) | (self.mt[(i + 1) % 312] & lower)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.idx = 0

    def next(self):
        if self.idx >= 312:
            self._twist()
        y = self.mt[self.idx]
        self.idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


def fp_samples(n, seed):
    g, out = MT64(seed), []
    while len(out) < n:
        x = g.next() >> 3
        if x < P:
            out.append(x)
    return out


def rational_samples(n, seed):
    g, out = MT64(seed), []
    for _ in range(n):
        num = g.next() % 65 - 32
        den = g.next() % 8 + 1
        out.append((num, den))
    return out


def main():
    lines = ["# seed n values (prime field)"]
    for seed in (0, 1, 7, 20240601):
        lines.append("fp %d 3 %s" % (seed, " ".join(map(str, fp_samples(3, seed)))))
    lines.append("# seed n num/den (rational mode, unreduced)")
    for seed in (0, 7):
        lines.append("q %d 4 %s" % (seed, " ".join("%d/%d" % q for q in rational_samples(4, seed))))
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
