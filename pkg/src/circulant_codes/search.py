"""Bad-codeword / bad-element local search over generator vectors."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import _kernels
from .bounds import BoundsTable
from .distance import min_distance, scan_weight_class
from .gf2_core import CirculantCode, Codeword, GeneratorVector, entry, format_vector


@dataclass(frozen=True)
class BadCodewordCertificate:
    weight: int
    rows: tuple[int, ...]
    codeword: Codeword


@dataclass(frozen=True)
class ElementScore:
    position: int
    c_values: tuple[tuple[int, ...], ...]
    zeros: int
    ones: int

    @property
    def is_bad(self) -> bool:
        return self.zeros > self.ones


class Outcome(enum.Enum):
    REACHED = "Reached"
    STALLED = "Stalled"
    ITERATION_CAP = "IterationCap"


@dataclass(frozen=True)
class SearchStep:
    """One pass of the loop: the vector examined, its exact distance and the flip made.

    ``flipped`` is None on the final step of a stalled search.
    """

    alpha: GeneratorVector
    d: int
    flipped: Optional[int]
    certificates: tuple[BadCodewordCertificate, ...]


@dataclass(frozen=True)
class SearchTrace:
    start: GeneratorVector
    target: int
    steps: tuple[SearchStep, ...]
    outcome: Outcome
    final: GeneratorVector
    final_d: int

    def log_lines(self) -> list[str]:
        lines = ["iter,flipped_pos,d,alpha"]
        for i, step in enumerate(self.steps, start=1):
            pos = "" if step.flipped is None else str(step.flipped)
            lines.append(f'{i},{pos},{step.d},"{format_vector(step.alpha.bits)}"')
        return lines

    def summary(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "target": self.target,
            "iterations": len(self.steps),
            "flips": [s.flipped for s in self.steps if s.flipped is not None],
            "start": format_vector(self.start.bits),
            "final": format_vector(self.final.bits),
            "final_d": self.final_d,
        }

    def export(self) -> str:
        return "\n".join(self.log_lines() + [json.dumps(self.summary(), sort_keys=True)]) + "\n"


class Classification(enum.Enum):
    OPTIMUM = "Optimum"
    PROPOSED_OPTIMUM = "ProposedOptimum"
    SUBOPTIMAL = "Suboptimal"


def find_bad_codewords(alpha: GeneratorVector, target: int) -> list[BadCodewordCertificate]:
    """One certificate for every weight ``d .. target-1`` that some codeword has.

    For each weight the certificate comes from the smallest message weight
    that reaches it, using the lexicographically first row set there.
    """
    d = min_distance(alpha, stop_below=target)
    if d.d >= target:
        raise ValueError(f"code already has d = {d.d} >= target {target}")
    code = CirculantCode(alpha)
    rows = _kernels.pack_rows(alpha)
    chosen: dict[int, tuple[int, ...]] = {}
    # a weight-k message gives a codeword of weight >= k
    for k in range(1, min(target - 1, alpha.n) + 1):
        found, _ = scan_weight_class(alpha, k, rows=rows)
        for t, support in found.items():
            w = k + t
            if w < target and w not in chosen:
                chosen[w] = support
    certs = []
    for w in sorted(chosen):
        cw = code.combine(chosen[w])
        assert cw.weight == w
        certs.append(BadCodewordCertificate(w, chosen[w], cw))
    return certs


def score_element(
    alpha: GeneratorVector, p: int, certs: Sequence[BadCodewordCertificate]
) -> ElementScore:
    """Pooled c-values for position ``p``: c_i = sum_l a[j_l, j_i + p - 1] over GF(2)."""
    if p == 1:
        raise ValueError("position 1 is the diagonal and is never scored")
    if alpha[p] != 1:
        raise ValueError(f"b_{p} = 0, only 1-entries are scored")
    shift = p - 1
    pooled = []
    for cert in certs:
        # circulant structure gives a[j, j + p - 1] = b_p for every row j
        if any(entry(alpha, j, j + shift) != 1 for j in cert.rows):
            continue
        c = tuple(
            sum(entry(alpha, jl, ji + shift) for jl in cert.rows) % 2 for ji in cert.rows
        )
        pooled.append(c)
    flat = [v for c in pooled for v in c]
    return ElementScore(p, tuple(pooled), flat.count(0), flat.count(1))


def flip(alpha: GeneratorVector, p: int) -> GeneratorVector:
    if alpha[p] != 1:
        raise ValueError(f"b_{p} is already 0")
    bits = list(alpha.bits)
    bits[p - 1] = 0
    return GeneratorVector(alpha.n, tuple(bits))


def improve(alpha: GeneratorVector, target: int, max_iters: int = 10) -> SearchTrace:
    """Flip bad elements one at a time until the code reaches ``target``.

    Each pass screens the current vector against ``target``; if it falls
    short, certificates are collected and positions 2..n are scanned in
    order, flipping the first bad element before re-testing.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    current = alpha
    steps: list[SearchStep] = []
    outcome = Outcome.ITERATION_CAP
    final_d = None
    for _ in range(max_iters + 1):
        screen = min_distance(current, stop_below=target)
        if screen.exact and screen.d >= target:
            outcome, final_d = Outcome.REACHED, screen.d
            break
        if len(steps) == max_iters:
            final_d = min_distance(current).d
            break
        certs = find_bad_codewords(current, target)
        d = certs[0].weight
        bad = next(
            (
                p
                for p in range(2, current.n + 1)
                if current[p] == 1 and score_element(current, p, certs).is_bad
            ),
            None,
        )
        steps.append(SearchStep(current, d, bad, tuple(certs)))
        if bad is None:
            outcome, final_d = Outcome.STALLED, d
            break
        current = flip(current, bad)
    return SearchTrace(alpha, target, tuple(steps), outcome, current, final_d)


def classify(alpha: GeneratorVector, bounds: BoundsTable, d: Optional[int] = None) -> Classification:
    entry_ = bounds.lookup(2 * alpha.n, alpha.n)
    if d is None:
        d = min_distance(alpha).d
    if d >= entry_.upper and d >= entry_.lower:
        return Classification.OPTIMUM
    if d >= entry_.lower:
        return Classification.PROPOSED_OPTIMUM
    return Classification.SUBOPTIMAL
