"""Numba kernels for the enumeration hot loops.

Rows of A are passed as an ``(n, W)`` uint64 array: word ``w`` of row ``i``
holds coordinates ``64*w .. 64*w + 63`` of the A half of generator row ``i``.
"""

from __future__ import annotations

import numpy as np
from llvmlite import ir
from numba import config, njit, prange, types
from numba.extending import intrinsic

from .gf2_core import GeneratorVector, rotate_right

WORD = 64

# the bundled TBB is too old and only produces a warning; try OpenMP first
config.THREADING_LAYER_PRIORITY = ["omp", "tbb", "workqueue"]


@intrinsic
def _popcount(typingctx, x):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@intrinsic
def _trailing_zeros(typingctx, x):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.cttz(args[0], ir.Constant(ir.IntType(1), 0))

    return sig, codegen


def pack_rows(alpha: GeneratorVector) -> np.ndarray:
    n = alpha.n
    words = (n + WORD - 1) // WORD
    rows = np.zeros((n, words), dtype=np.uint64)
    base = alpha.mask
    low = (1 << WORD) - 1
    for i in range(n):
        r = rotate_right(base, i, n)
        for w in range(words):
            rows[i, w] = (r >> (WORD * w)) & low
    return rows


@njit(cache=True)
def _weight(acc):
    t = 0
    for w in range(acc.shape[0]):
        t += _popcount(acc[w])
    return t


@njit(cache=True)
def scan_message_weight(rows, k, stop_weight):
    """Enumerate weight-k messages whose support contains row 0, in lex order.

    Returns ``(first, stopped)`` where ``first[t]`` is the lexicographically
    first row set whose A half has weight ``t`` (``-1`` filled if none).  When
    a codeword of weight ``< stop_weight`` appears the scan stops early with
    ``stopped`` set; pass 0 to disable.
    """
    n, words = rows.shape
    first = np.full((n + 1, k), -1, np.int64)
    idx = np.empty(k, np.int64)
    acc = np.zeros((k, words), np.uint64)
    idx[0] = 0
    for w in range(words):
        acc[0, w] = rows[0, w]
    for i in range(1, k):
        idx[i] = i
        for w in range(words):
            acc[i, w] = acc[i - 1, w] ^ rows[i, w]
    last = k - 1
    while True:
        t = _weight(acc[last])
        if first[t, 0] < 0:
            for i in range(k):
                first[t, i] = idx[i]
            if k + t < stop_weight:
                return first, True
        # advance to the next combination, keeping idx[0] == 0
        i = last
        while i >= 1 and idx[i] == n - k + i:
            i -= 1
        if i < 1:
            break
        idx[i] += 1
        for w in range(words):
            acc[i, w] = acc[i - 1, w] ^ rows[idx[i], w]
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1
            for w in range(words):
                acc[j, w] = acc[j - 1, w] ^ rows[idx[j], w]
    return first, False


@njit(cache=True)
def _sweep_range(rows, start, stop, counts):
    n, words = rows.shape
    acc = np.zeros(words, np.uint64)
    gray = start ^ (start >> 1)
    msg_weight = 0
    for i in range(n):
        if (gray >> i) & 1:
            msg_weight += 1
            for w in range(words):
                acc[w] ^= rows[i, w]
    counts[msg_weight + _weight(acc)] += 1
    for step in range(start + 1, stop):
        bit = np.int64(_trailing_zeros(np.uint64(step)))
        gray ^= np.int64(1) << bit
        if (gray >> bit) & 1:
            msg_weight += 1
        else:
            msg_weight -= 1
        for w in range(words):
            acc[w] ^= rows[bit, w]
        counts[msg_weight + _weight(acc)] += 1


@njit(cache=True, parallel=True)
def gray_sweep(rows, chunks):
    """Weight counts of all 2^n codewords, Gray-code order split into ``chunks`` ranges."""
    n = rows.shape[0]
    total = np.int64(1) << n
    per = (total + chunks - 1) // chunks
    partial = np.zeros((chunks, 2 * n + 1), np.int64)
    for c in prange(chunks):
        start = c * per
        stop = min(total, start + per)
        if start < stop:
            _sweep_range(rows, start, stop, partial[c])
    return partial.sum(axis=0)
