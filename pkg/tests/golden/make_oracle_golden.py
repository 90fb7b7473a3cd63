"""Regenerate the oracle golden table by naive full-box enumeration.

This script shares no code with the package: fibers are found by scanning
every exponent vector in a crude box with numpy and keeping exact solutions.
Only valid for weight matrices with nonnegative entries.

    python tests/golden/make_oracle_golden.py > tests/golden/oracle_3-2_2-1_N12.json
"""

import itertools
import json
import sys

import numpy as np

WEIGHTS = np.array([[4, 1], [2, 1], [1, 2], [1, 3]])  # one row per variable
U, V, N = (3, 2), (2, 1), 12


def box_fiber(target):
    target = np.asarray(target)
    bounds = []
    for w in WEIGHTS:
        bounds.append(min(int(t) // int(x) for t, x in zip(target, w) if x > 0))
    axes = [np.arange(b + 1) for b in bounds]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(bounds))
    hit = np.all(grid @ WEIGHTS == target, axis=1)
    return {tuple(int(x) for x in row) for row in grid[hit]}


def scan():
    rows = []
    surjective = []
    for n in range(1, N + 1):
        a = box_fiber([n * x for x in U])
        b = box_fiber([n * x for x in V])
        target = box_fiber([n * (x + y) for x, y in zip(U, V)])
        sums = {tuple(p + q for p, q in zip(s, t)) for s, t in itertools.product(a, b)}
        missing = sorted(target - sums)
        rows.append({
            "n": n,
            "fiber_u": len(a),
            "fiber_v": len(b),
            "sumset": len(sums),
            "target": len(target),
            "surjective": not missing,
            "witness": list(missing[0]) if missing else None,
        })
        if not missing:
            surjective.append(n)
    pattern = [m for m in range(1, N + 1)
               if all(rows[k * m - 1]["surjective"] for k in range(1, N // m + 1))]
    return {
        "u": list(U),
        "v": list(V),
        "bound": N,
        "degrees": rows,
        "surjective_degrees": surjective,
        "generating_pattern_m": pattern[0] if pattern else None,
        "annotation": ("evidence: generating pattern" if pattern
                       else "evidence: not generating up to bound"),
    }


if __name__ == "__main__":
    json.dump(scan(), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
