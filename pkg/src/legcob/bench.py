"""Benchmark the bracket kernels (numba vs pure numpy).

Builds torus-braid style fronts of growing crossing count and times the
full bracket state sum under both backends.  The numba path includes a
warm-up call so JIT compilation is not billed to the measurement.
"""

from __future__ import annotations

import time

from ._kernels import HAVE_NUMBA
from .front import FrontDiagram, L, R, X
from .smooth import front_to_smooth, kauffman_bracket


def braid_front(crossings: int) -> FrontDiagram:
    """2-strand twist region closed into a front (crossing count as given)."""
    events = [L(1), L(3)] + [X(2)] * crossings + [R(2), R(1)]
    return FrontDiagram.from_events(events)


def run(sizes=(8, 10, 12, 14, 16), repeats: int = 3) -> list[dict]:
    rows = []
    for c in sizes:
        d = front_to_smooth(braid_front(c))
        backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
        row = {"crossings": c, "states": 2 ** c}
        for backend in backends:
            kauffman_bracket(d, cap=32, backend=backend)  # warm-up / JIT
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                kauffman_bracket(d, cap=32, backend=backend)
                best = min(best, time.perf_counter() - t0)
            row[backend] = best
        rows.append(row)
    return rows


def main(argv=None) -> int:
    rows = run()
    cols = ["crossings", "states", "numpy"] + (["numba"] if HAVE_NUMBA else [])
    print("  ".join(f"{c:>10}" for c in cols))
    for row in rows:
        cells = []
        for c in cols:
            v = row.get(c)
            cells.append(f"{v:>10}" if isinstance(v, int) else f"{v:>10.4f}")
        print("  ".join(cells))
    if HAVE_NUMBA:
        last = rows[-1]
        print(f"\nspeedup at {last['crossings']} crossings: "
              f"{last['numpy'] / last['numba']:.1f}x")
    else:
        print("\nnumba unavailable; numpy fallback only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
