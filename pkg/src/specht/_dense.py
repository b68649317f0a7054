"""Vectorised LLT correction pass on dense ``int64`` arrays.

The ladder approximation arrives as a sparse dict and is spread into a
``(partitions, exponents)`` array; each correction subtracts shifted copies
of an earlier column. A running bound on coefficient size guards against
``int64`` overflow; when it would be exceeded the caller falls back to the
exact dictionary engine.
"""

import numpy as np

from specht.errors import LLTInvariantError
from specht.fock import _first_approximation_raw
from specht.partitions import format_partition

LIMIT = 1 << 60


class DenseRangeError(ArithmeticError):
    """Coefficients may no longer fit in ``int64``."""


def partial_sums(partitions, n):
    """``(len(partitions), n)`` array of partial sums of parts."""
    out = np.zeros((len(partitions), max(n, 1)), dtype=np.int64)
    for r, la in enumerate(partitions):
        if la:
            out[r, : len(la)] = np.cumsum(la)
            out[r, len(la):] = n
    return out


def compute_columns_dense(members, regular, e, n):
    """LLT columns for ``regular`` (ascending) inside the block ``members``.

    Returns ``{mu: {la: {exp: coeff}}}``. Each column is checked for a unit
    diagonal, coefficients in ``vN[v]`` and support below ``mu`` before it
    is used in later corrections.
    """
    index = {la: r for r, la in enumerate(members)}
    sums = partial_sums(members, n)
    stored = {}  # mu -> (rows, coeffs with column k = exponent k, max abs)
    columns = {}
    for mu in regular:
        approx = _first_approximation_raw(mu, e)
        lo = min(min(p) for p in approx.values())
        hi = max(max(p) for p in approx.values())
        neg = max(0, -lo)
        lower = [nu for nu in stored if nu < mu]
        gmax = max((stored[nu][1].shape[1] - 1 for nu in lower), default=0)
        lo = min(lo, 1 - neg)
        hi = max(hi, neg + gmax)
        width = hi - lo + 1
        dense = np.zeros((len(members), width), dtype=np.int64)
        bound = 0
        for la, poly in approx.items():
            r = index[la]
            for k, c in poly.items():
                dense[r, k - lo] = c
                bound = max(bound, abs(c))
        if bound >= LIMIT:
            raise DenseRangeError("ladder coefficients too large")
        nonpos = slice(0, 1 - lo)  # exponents lo..0
        for nu in sorted(lower, reverse=True):
            c_row = dense[index[nu], nonpos]
            if not c_row.any():
                continue
            alpha = {}
            for off in np.flatnonzero(c_row):
                k = int(off) + lo
                x = int(c_row[off])
                if k == 0:
                    alpha[0] = x
                else:
                    alpha[k] = x
                    alpha[-k] = x
            rows, coeffs, gabs = stored[nu]
            bound += sum(abs(x) for x in alpha.values()) * gabs
            if bound >= LIMIT:
                raise DenseRangeError("correction coefficients too large")
            span = coeffs.shape[1]
            for k, x in alpha.items():
                start = k - lo
                dense[rows, start:start + span] -= x * coeffs
        live = np.flatnonzero(dense.any(axis=1))
        block = dense[live]
        exps = np.arange(lo, hi + 1)
        mu_row = index[mu]
        diag = dense[mu_row]
        name = format_partition(mu)
        if diag[-lo] != 1 or np.count_nonzero(diag) != 1:
            raise LLTInvariantError(f"G({name}) at e={e}: diagonal coefficient is not 1 (convention error)")
        off_rows = live[live != mu_row]
        off = dense[off_rows]
        if off.size and ((off[:, exps <= 0] != 0).any() or (off < 0).any()):
            raise LLTInvariantError(f"G({name}) at e={e}: off-diagonal coefficient not in vN[v] (positivity failure)")
        if off_rows.size and (sums[off_rows] > sums[mu_row]).any():
            raise LLTInvariantError(f"G({name}) at e={e}: support not dominated by {name}")
        first = max(0, -lo)  # keep exponents >= 0 only
        kept = block[:, first:]
        last = np.flatnonzero(kept.any(axis=0))
        kept = kept[:, : (last[-1] + 1 if last.size else 1)]
        stored[mu] = (live, kept, int(kept.max()) if kept.size else 0)
        col = {}
        for r, row in zip(live.tolist(), kept.tolist()):
            col[members[r]] = {k: c for k, c in enumerate(row) if c}
        columns[mu] = col
    return columns
