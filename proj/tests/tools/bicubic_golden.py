#!/usr/bin/env python3
# Copyright 2026 The semcn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference bicubic resampling of the 8x8 test ramp.

Exact rational arithmetic and a direct 4x4 (non-separable) sum per output
pixel. Writes tests/data/bicubic_ramp8.txt.
"""

from fractions import Fraction
import math
import pathlib

A = Fraction(-1, 2)


def kernel(x):
    x = abs(x)
    if x <= 1:
        return (A + 2) * x**3 - (A + 3) * x**2 + 1
    if x < 2:
        return A * x**3 - 5 * A * x**2 + 8 * A * x - 4 * A
    return Fraction(0)


def resample(img, out_h, out_w, scale):
    h, w = len(img), len(img[0])

    def taps(o, n):
        src = (Fraction(o) + Fraction(1, 2)) * scale - Fraction(1, 2)
        base = math.floor(src)
        return [(min(max(base - 1 + k, 0), n - 1), kernel(src - (base - 1 + k))) for k in range(4)]

    out = []
    for y in range(out_h):
        ty = taps(y, h)
        row = []
        for x in range(out_w):
            tx = taps(x, w)
            acc = sum(wy * wx * img[iy][ix] for iy, wy in ty for ix, wx in tx)
            row.append(min(max(math.floor(acc + Fraction(1, 2)), 0), 255))
        out.append(row)
    return out


def main():
    ramp = [[20 * x + 2 * y * y for x in range(8)] for y in range(8)]
    cases = [
        ("down2", resample(ramp, 4, 4, Fraction(2))),
        ("down4", resample(ramp, 2, 2, Fraction(4))),
        ("up4", resample(ramp, 32, 32, Fraction(1, 4))),
    ]
    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "bicubic_ramp8.txt"
    with open(path, "w") as f:
        f.write("# input: ramp[y][x] = 20*x + 2*y*y, 8x8\n")
        for name, img in cases:
            f.write(f"{name} {len(img)} {len(img[0])}\n")
            for row in img:
                f.write(" ".join(str(v) for v in row) + "\n")


if __name__ == "__main__":
    main()
