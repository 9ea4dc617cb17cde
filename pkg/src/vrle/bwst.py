"""Bijective Burrows-Wheeler-Scott transform.

The input is split into its Lyndon factors (Duval's algorithm). Every
rotation of every factor is ranked by omega-order, i.e. by comparing the
infinite repetitions of the rotations, and the last character of each sorted
rotation is emitted. No index and no sentinel are stored: the inverse
recovers the factors from the cycles of the standard LF permutation.

Ranking uses prefix doubling on the "cyclic successor" graph in which the
last position of each factor points back to the factor's first position.
Rank ``k`` of a position is then the rank of the first ``k`` characters of
its infinite periodic expansion.
"""
from __future__ import annotations

import numpy as np


def lyndon_factor_ends(data: bytes) -> list[int]:
    """End offsets (exclusive) of the Lyndon factors of ``data``."""
    s = data
    n = len(s)
    ends = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        period = j - k
        while i <= k:
            i += period
            ends.append(i)
    return ends


def lyndon_factorize(data: bytes) -> list[bytes]:
    """Split ``data`` into non-increasing Lyndon words (Chen-Fox-Lyndon)."""
    data = bytes(data)
    out, start = [], 0
    for end in lyndon_factor_ends(data):
        out.append(data[start:end])
        start = end
    return out


def _cyclic_links(ends: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    starts = np.empty_like(ends)
    starts[0] = 0
    starts[1:] = ends[:-1]
    nxt = np.arange(1, n + 1, dtype=np.int64)
    nxt[ends - 1] = starts
    prev = np.arange(-1, n - 1, dtype=np.int64)
    prev[starts] = ends - 1
    return nxt, prev


def omega_ranks(data: bytes) -> tuple[np.ndarray, np.ndarray]:
    """Omega-order rank of the rotation starting at each position.

    Returns ``(rank, prev)`` where equal ranks mean identical rotations and
    ``prev[p]`` is the cyclic predecessor of ``p`` within its factor.
    """
    n = len(data)
    ends = np.asarray(lyndon_factor_ends(data), dtype=np.int64)
    nxt, prev = _cyclic_links(ends, n)
    uniq, rank = np.unique(np.frombuffer(data, dtype=np.uint8), return_inverse=True)
    rank = rank.astype(np.int64).ravel()
    classes = len(uniq)
    # Two periodic expansions that agree on |u| + |v| characters are equal,
    # so 2n characters always suffice; a stable partition ends earlier.
    span = 1
    while classes < n and span < 2 * n:
        key = rank * (classes + 1) + rank[nxt]
        uniq, rank = np.unique(key, return_inverse=True)
        rank = rank.astype(np.int64).ravel()
        if len(uniq) == classes:
            break
        classes = len(uniq)
        nxt = nxt[nxt]
        span *= 2
    return rank, prev


def bwst_forward(data: bytes) -> bytes:
    data = bytes(data)
    if len(data) <= 1:
        return data
    rank, prev = omega_ranks(data)
    order = np.argsort(rank, kind="stable")
    text = np.frombuffer(data, dtype=np.uint8)
    return text[prev[order]].tobytes()


def bwst_inverse(transformed: bytes) -> bytes:
    last = np.frombuffer(bytes(transformed), dtype=np.uint8)
    n = last.size
    if n <= 1:
        return bytes(transformed)
    lf = np.argsort(last, kind="stable")
    first = last[lf]
    succ = lf.tolist()
    seen = bytearray(n)
    cycles = []
    # The smallest unseen row always starts a cycle at its Lyndon word;
    # cycles come out in increasing order, so the text is their reversal.
    for row in range(n):
        if seen[row]:
            continue
        cycle = []
        j = row
        while not seen[j]:
            seen[j] = 1
            cycle.append(j)
            j = succ[j]
        cycles.append(cycle)
    rows = [j for cycle in reversed(cycles) for j in cycle]
    return first[np.asarray(rows, dtype=np.int64)].tobytes()
