"""NumPy fallback for the sign-vector enumeration kernel.

Selected at import time when the compiled extension is unavailable.  Instead
of the sequential Gray-code walk of the compiled kernel, this version splits
the free sign coordinates into a low and a high half and evaluates whole
blocks of candidates with vectorized arithmetic, which is the fastest way to
run an exhaustive enumeration from pure Python.

Both backends implement the same contract: given the matrix columns as rows
of ``cols`` (shape m-by-n), maximize ``|| sum_j z_j * cols[j] ||_1`` over all
sign vectors z in {-1, +1}^m, returning the best value seen and one argmax z.
Because negating z does not change the objective, z[m-1] is pinned to -1 and
only 2^(m-1) candidates are visited.
"""

from __future__ import annotations

import numpy as np

_BLOCK_BITS = 12


def _sign_sums(rows: np.ndarray) -> np.ndarray:
    """All 2^k signed sums of the k rows; bit j of the index gives row j's sign."""
    out = np.zeros((1, rows.shape[1]))
    for j in range(rows.shape[0]):
        out = np.concatenate([out - rows[j], out + rows[j]])
    return out


def _signs_from_bits(index: int, nbits: int) -> np.ndarray:
    return np.array([1.0 if (index >> j) & 1 else -1.0 for j in range(nbits)])


def signed_l1_enum(cols: np.ndarray) -> tuple[float, np.ndarray]:
    cols = np.ascontiguousarray(cols, dtype=float)
    m, _ = cols.shape
    if m == 1:
        return float(np.abs(cols[0]).sum()), np.array([-1.0])

    free = m - 1
    lo_bits = min(free, _BLOCK_BITS)
    lo = _sign_sums(cols[:lo_bits])
    hi = _sign_sums(cols[lo_bits:free])
    base = -cols[free]

    best = -1.0
    best_lo = best_hi = 0
    for h in range(hi.shape[0]):
        vals = np.abs(lo + (hi[h] + base)).sum(axis=1)
        i = int(np.argmax(vals))
        if vals[i] > best:
            best = float(vals[i])
            best_lo, best_hi = i, h

    z = np.concatenate(
        [
            _signs_from_bits(best_lo, lo_bits),
            _signs_from_bits(best_hi, free - lo_bits),
            [-1.0],
        ]
    )
    return best, z
