"""Dense GF(2) rank computation by Gaussian elimination.

Matrices are numpy uint8 arrays with entries in {0, 1}; row operations
are XORs.  Sizes here are small (hundreds of rows at most), so a dense
sweep with a fixed elimination order keeps everything deterministic.
"""

from __future__ import annotations

import numpy as np


def gf2_rank(matrix) -> int:
    """Rank over GF(2) of a 0/1 matrix (any array-like, may be empty)."""
    M = np.array(matrix, dtype=np.uint8, ndmin=2) % 2
    if M.size == 0:
        return 0
    rows, cols = M.shape
    rank = 0
    for col in range(cols):
        pivot = -1
        for row in range(rank, rows):
            if M[row, col]:
                pivot = row
                break
        if pivot < 0:
            continue
        if pivot != rank:
            M[[rank, pivot]] = M[[pivot, rank]]
        for row in range(rank + 1, rows):
            if M[row, col]:
                M[row] ^= M[rank]
        rank += 1
        if rank == rows:
            break
    return rank
