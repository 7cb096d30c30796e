"""Minimum distance and weight distribution of (I | A) circulant codes."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Optional

import numba

from . import _kernels
from .gf2_core import CirculantCode, Codeword, GeneratorVector, min_degree_bound

DEFAULT_ENUMERATION_CAP = 32


@dataclass(frozen=True)
class WeightDistribution:
    code_length: int
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.code_length + 1:
            raise ValueError(
                f"expected {self.code_length + 1} counts (A_0..A_{self.code_length}), "
                f"got {len(counts)}"
            )
        if any(c < 0 for c in counts):
            raise ValueError("weight counts must be non-negative")
        if counts[0] != 1:
            raise ValueError(f"A_0 must be 1, got {counts[0]}")

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i <= self.code_length else 0

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_weight(self) -> Optional[int]:
        """Smallest nonzero weight present, or None for the zero code."""
        for i, c in enumerate(self.counts[1:], start=1):
            if c:
                return i
        return None

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.counts) if c]

    def to_csv(self) -> str:
        lines = ["weight,count"]
        lines += [f"{i},{c}" for i, c in enumerate(self.counts)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WeightClassRow:
    """One line of the per-message-weight table.

    ``a_weight`` is the least weight of ``m A`` over weight-``k`` messages and
    ``rows`` the lexicographically first row set attaining it (1-based).
    """

    k: int
    a_weight: int
    rows: tuple[int, ...]

    @property
    def weight(self) -> int:
        return self.k + self.a_weight


@dataclass(frozen=True)
class DistanceResult:
    d: int
    witness: Codeword
    witness_rows: tuple[int, ...]
    per_weight_minima: tuple[tuple[int, int], ...]
    exact: bool = True


def scan_weight_class(
    alpha: GeneratorVector, k: int, stop_weight: int = 0, rows=None
) -> tuple[dict[int, tuple[int, ...]], bool]:
    """First row set (lex order, containing row 1) for each A-half weight at message weight k.

    Cyclic shifts of a message rotate both halves of its codeword, so the
    row sets containing row 1 already realise every (k, weight) pair, and the
    lexicographically first overall set always contains row 1.
    """
    if not 1 <= k <= alpha.n:
        raise ValueError(f"message weight {k} outside 1..{alpha.n}")
    if rows is None:
        rows = _kernels.pack_rows(alpha)
    first, stopped = _kernels.scan_message_weight(rows, k, stop_weight)
    found = {
        t: tuple(int(j) + 1 for j in first[t])
        for t in range(first.shape[0])
        if first[t, 0] >= 0
    }
    return found, bool(stopped)


def weight_table(alpha: GeneratorVector, max_k: int) -> list[WeightClassRow]:
    """Per-message-weight minima for k = 1..max_k (the two-column search table)."""
    rows = _kernels.pack_rows(alpha)
    table = []
    for k in range(1, min(max_k, alpha.n) + 1):
        found, _ = scan_weight_class(alpha, k, rows=rows)
        t = min(found)
        table.append(WeightClassRow(k, t, found[t]))
    return table


def min_distance(alpha: GeneratorVector, stop_below: Optional[int] = None) -> DistanceResult:
    """Exact minimum distance of (I | A(alpha)) by bounded message-weight enumeration.

    Message weights are scanned upward from 1 while ``k`` is below the best
    weight found so far (initially ``wt(alpha) + 1``); no heavier message can
    do better.  Ties for the witness go to the smallest message weight, then
    the lexicographically first row set.

    With ``stop_below`` the scan returns as soon as a codeword lighter than
    it shows up; ``d`` is then only an upper bound and ``exact`` is False.
    """
    code = CirculantCode(alpha)
    rows = _kernels.pack_rows(alpha)
    best = min_degree_bound(alpha)
    best_rows: tuple[int, ...] = (1,)
    minima = []
    stop = stop_below if stop_below is not None else 0
    k = 1
    while k < best:
        found, stopped = scan_weight_class(alpha, k, stop, rows)
        if stopped:
            t = min(found)
            minima.append((k, t))
            return DistanceResult(
                k + t, code.combine(found[t]), found[t], tuple(minima), exact=False
            )
        t = min(found)
        minima.append((k, t))
        if k + t < best:
            best, best_rows = k + t, found[t]
        k += 1
    witness = code.combine(best_rows)
    assert witness.weight == best
    return DistanceResult(best, witness, best_rows, tuple(minima))


def weight_distribution(
    alpha: GeneratorVector,
    cap: int = DEFAULT_ENUMERATION_CAP,
    threads: Optional[int] = None,
) -> WeightDistribution:
    """Exact weight distribution by a Gray-code sweep over all 2^n messages.

    The sweep is split into contiguous Gray-code ranges merged by addition,
    so the result does not depend on ``threads``.
    """
    n = alpha.n
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap} (2^{n} codewords)")
    if n > 62:
        raise ValueError("full enumeration needs n <= 62")
    if threads is not None:
        numba.set_num_threads(threads)
    workers = numba.get_num_threads()
    chunks = max(1, min(1 << n, 8 * workers))
    counts = _kernels.gray_sweep(_kernels.pack_rows(alpha), chunks)
    dist = WeightDistribution(2 * n, tuple(int(c) for c in counts))
    if dist.total != 1 << n:
        raise AssertionError(f"weight counts sum to {dist.total}, expected 2^{n}")
    return dist


def enumerator_string(w: WeightDistribution) -> str:
    """Render as ``1+133z^8+2052z^10+...`` with ascending exponents."""
    terms = []
    for i, c in w.nonzero_terms():
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("z" if c == 1 else f"{c}z")
        else:
            terms.append(f"z^{i}" if c == 1 else f"{c}z^{i}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(\d*)(?:(z)(?:\^(\d+))?)?$")


def parse_enumerator(text: str, code_length: int) -> tuple[int, ...]:
    """Coefficients A_0..A_length of a polynomial written like ``1+133z^8+z^38``.

    Returns the raw tuple rather than a WeightDistribution so that printed
    polynomials with errata can still be inspected.
    """
    counts = [0] * (code_length + 1)
    for raw in re.sub(r"\s+", "", text).split("+"):
        if not raw:
            continue
        m = _TERM.match(raw)
        if m is None:
            raise ValueError(f"malformed enumerator term {raw!r}")
        coeff, z, exp = m.groups()
        power = 0 if not z else int(exp) if exp else 1
        if power > code_length:
            raise ValueError(f"term {raw!r} exceeds code length {code_length}")
        counts[power] += int(coeff) if coeff else 1
    return tuple(counts)


def krawtchouk(j: int, i: int, n_len: int) -> int:
    return sum((-1) ** t * comb(i, t) * comb(n_len - i, j - t) for t in range(j + 1))


def macwilliams_dual(w: WeightDistribution, n_len: int, k_dim: int) -> WeightDistribution:
    """Weight distribution of the dual code, in exact integer arithmetic."""
    if w.code_length != n_len:
        raise ValueError(f"distribution has length {w.code_length}, expected {n_len}")
    if w.total != 1 << k_dim:
        raise ValueError(f"counts sum to {w.total}, not 2^{k_dim}")
    size = 1 << k_dim
    dual = []
    for j in range(n_len + 1):
        s = sum(a * krawtchouk(j, i, n_len) for i, a in enumerate(w.counts) if a)
        b, rem = divmod(s, size)
        if rem or b < 0:
            raise ValueError(f"dual count B_{j} = {s}/{size} is not a non-negative integer")
        dual.append(b)
    return WeightDistribution(n_len, tuple(dual))
