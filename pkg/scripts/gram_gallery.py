#!/usr/bin/env python3
"""Survey seeded random integer Gram matrices.

Tabulates how often a random polarization is irreducible, the spread of
theta constants, and re-checks unimodularity of every affine piece on the
irreducible draws.  Useful as a quick robustness experiment beyond the
fixed matrices in the test suite.

Usage: python scripts/gram_gallery.py [count] [seed]
"""

import sys
from collections import Counter

from tropical_kummer import (
    SurfaceClass,
    affine_pieces,
    classify,
    theta_constants,
)
from tropical_kummer.sampling import random_surface, rng_for


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0

    classes = Counter()
    constants = Counter()
    checked = 0
    for k in range(count):
        surface = random_surface(rng_for(seed, "gallery", k))
        kind = classify(surface)
        classes[kind.value] += 1
        if kind is SurfaceClass.IRREDUCIBLE:
            constants[theta_constants(surface)] += 1
            if checked < 25:  # keep the expensive re-check bounded
                assert all(p.unimodular for p in affine_pieces(surface))
                checked += 1

    total = sum(classes.values())
    print(f"{total} matrices, seed {seed}")
    for kind, n in sorted(classes.items()):
        print(f"  {kind:13s} {n:5d}  ({100 * n / total:.1f}%)")
    print(f"affine pieces re-verified unimodular on {checked} irreducible draws")
    print("most common theta constants among irreducible draws:")
    for triple, n in constants.most_common(8):
        pretty = ", ".join(str(t) for t in triple)
        print(f"  ({pretty})  x{n}")


if __name__ == "__main__":
    main()
