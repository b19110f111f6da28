"""State-sum kernels for the Kauffman bracket.

The bracket enumerates all 2^c smoothings of a c-crossing diagram and counts
closed loops for each.  That inner loop dominates oracle runtime, so it comes
in two interchangeable implementations:

* a numba ``@njit`` kernel (per-state union-find), used when numba imports
  and ``LEGCOB_BRACKET_BACKEND`` is ``auto`` or ``numba``;
* a vectorized pure-numpy fallback (batched pointer-doubling cycle count),
  selected with ``LEGCOB_BRACKET_BACKEND=numpy`` or when numba is absent.

Both return the same ``(c+1) x (max_loops+1)`` table ``counts`` where
``counts[na, nl]`` is the number of states with ``na`` A-smoothings and
``nl`` closed loops, plus the number of states processed (always ``2^c``).

Diagram encoding: each crossing owns four ports, numbered ``4*c + t`` with
``t`` in NW=0, SW=1, NE=2, SE=3 (the over-strand runs NW-SE).  ``match``
is the arc involution pairing ports along the diagram.  The A-smoothing
joins NW-SW and NE-SE; the B-smoothing joins NW-NE and SW-SE.
"""

from __future__ import annotations

import os

import numpy as np

# A-smoothing opens the channel swept by rotating the over-strand (NW-SE)
# counterclockwise: it joins NW-NE and SW-SE.  B joins NW-SW and NE-SE.
_A_PARTNER = np.array([2, 3, 0, 1], dtype=np.int64)
_B_PARTNER = np.array([1, 0, 3, 2], dtype=np.int64)


def _counts_shape(c: int) -> tuple[int, int]:
    return c + 1, 2 * c + 2


def bracket_counts_numpy(match: np.ndarray, c: int) -> tuple[np.ndarray, int]:
    """Vectorized state enumeration; loops counted by pointer doubling."""
    nports = 4 * c
    counts = np.zeros(_counts_shape(c), dtype=np.int64)
    if c == 0:
        counts[0, 0] = 1
        return counts, 1
    nstates = 1 << c
    batch = min(nstates, 1 << 13)
    ports = np.arange(nports, dtype=np.int64)
    crossing_of_port = ports // 4
    t_of_port = ports % 4
    base_a = 4 * crossing_of_port + _A_PARTNER[t_of_port]
    base_b = 4 * crossing_of_port + _B_PARTNER[t_of_port]
    for start in range(0, nstates, batch):
        states = np.arange(start, min(start + batch, nstates), dtype=np.int64)
        port_bits = (states[:, None] >> crossing_of_port[None, :]) & 1  # (S, P)
        smooth = np.where(port_bits == 1, base_a[None, :], base_b[None, :])
        pi = match[smooth]  # successor permutation per state
        labels = np.broadcast_to(ports, pi.shape).copy()
        hop = pi.copy()
        steps = max(1, int(np.ceil(np.log2(nports))) + 1)
        for _ in range(steps):
            labels = np.minimum(labels, np.take_along_axis(labels, hop, axis=1))
            hop = np.take_along_axis(hop, hop, axis=1)
        orbits = (labels == ports[None, :]).sum(axis=1)
        loops = orbits // 2
        na = ((states[:, None] >> np.arange(c, dtype=np.int64)[None, :]) & 1).sum(axis=1)
        np.add.at(counts, (na, loops), 1)
    return counts, nstates


try:  # pragma: no cover - import guard
    from numba import njit

    @njit(cache=True)
    def _bracket_counts_njit(match, c, counts):  # pragma: no cover - jitted
        nports = 4 * c
        nstates = 1 << c
        parent = np.empty(nports, dtype=np.int64)
        for state in range(nstates):
            for p in range(nports):
                parent[p] = p
            na = 0
            for j in range(c):
                bit = (state >> j) & 1
                if bit == 1:
                    na += 1
                    pairs = ((4 * j + 0, 4 * j + 2), (4 * j + 1, 4 * j + 3))
                else:
                    pairs = ((4 * j + 0, 4 * j + 1), (4 * j + 2, 4 * j + 3))
                for a, b in pairs:
                    # union the two smoothing ends
                    ra = a
                    while parent[ra] != ra:
                        parent[ra] = parent[parent[ra]]
                        ra = parent[ra]
                    rb = b
                    while parent[rb] != rb:
                        parent[rb] = parent[parent[rb]]
                        rb = parent[rb]
                    if ra != rb:
                        parent[rb] = ra
            for p in range(nports):
                a, b = p, match[p]
                ra = a
                while parent[ra] != ra:
                    parent[ra] = parent[parent[ra]]
                    ra = parent[ra]
                rb = b
                while parent[rb] != rb:
                    parent[rb] = parent[parent[rb]]
                    rb = parent[rb]
                if ra != rb:
                    parent[rb] = ra
            loops = 0
            for p in range(nports):
                if parent[p] == p:
                    loops += 1
            counts[na, loops] += 1
        return nstates

    def bracket_counts_numba(match: np.ndarray, c: int) -> tuple[np.ndarray, int]:
        counts = np.zeros(_counts_shape(c), dtype=np.int64)
        if c == 0:
            counts[0, 0] = 1
            return counts, 1
        n = _bracket_counts_njit(match, c, counts)
        return counts, int(n)

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False
    bracket_counts_numba = None


def backend_name() -> str:
    """Active backend after the env override and availability check."""
    want = os.environ.get("LEGCOB_BRACKET_BACKEND", "auto").lower()
    if want not in ("auto", "numba", "numpy"):
        raise ValueError(f"LEGCOB_BRACKET_BACKEND={want!r} (use auto|numba|numpy)")
    if want == "numpy":
        return "numpy"
    if want == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("LEGCOB_BRACKET_BACKEND=numba but numba is not importable")
        return "numba"
    return "numba" if HAVE_NUMBA else "numpy"


def bracket_counts(match: np.ndarray, c: int, backend: str | None = None):
    """Dispatch to the selected kernel; returns (counts table, states seen)."""
    name = backend or backend_name()
    if name == "numba":
        return bracket_counts_numba(match, c)
    return bracket_counts_numpy(match, c)
