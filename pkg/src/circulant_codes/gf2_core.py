"""Bit-packed GF(2) vectors, circulant rows and the (I | A) code construction.

Vectors are packed into Python ints: bit ``i`` holds coordinate ``i + 1``
(coordinates are 1-based in every user-facing place, 0-based internally).
A codeword of the [2n, n] code is packed the same way, message half in
bits ``0..n-1`` and the A half in bits ``n..2n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sympy import isprime


def _pack(bits: Iterable[int]) -> int:
    value = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"binary digit expected at position {i + 1}, got {b!r}")
        if b:
            value |= 1 << i
    return value


def _unpack(value: int, n: int) -> tuple[int, ...]:
    return tuple((value >> i) & 1 for i in range(n))


def rotate_right(value: int, shift: int, n: int) -> int:
    """Cyclically shift an n-bit packed vector ``shift`` coordinates to the right."""
    shift %= n
    if shift == 0:
        return value
    mask = (1 << n) - 1
    return ((value << shift) | (value >> (n - shift))) & mask


@dataclass(frozen=True)
class GeneratorVector:
    """First row ``(b_1, ..., b_n)`` of a circulant matrix, with ``b_1 = 0``."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if self.n < 1:
            raise ValueError(f"vector length must be positive, got {self.n}")
        if len(bits) != self.n:
            raise ValueError(f"expected {self.n} bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("generator vector entries must be 0 or 1")
        if bits[0] != 0:
            raise ValueError("b_1 must be 0 (the adjacency diagonal is zero)")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "GeneratorVector":
        return cls(len(bits), tuple(bits))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "GeneratorVector":
        return cls(n, _unpack(mask, n))

    @property
    def mask(self) -> int:
        return _pack(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __getitem__(self, p: int) -> int:
        """1-based access: ``alpha[p]`` is ``b_p``."""
        if not 1 <= p <= self.n:
            raise IndexError(f"position {p} outside 1..{self.n}")
        return self.bits[p - 1]

    def ones(self) -> list[int]:
        """1-based positions holding a 1."""
        return [i + 1 for i, b in enumerate(self.bits) if b]

    def __str__(self) -> str:
        return format_vector(self.bits)


@dataclass(frozen=True)
class ConnectionSet:
    """Offsets ``0 < a_1 < ... < a_k < (n+1)/2`` of a circulant graph C(n, S)."""

    n: int
    offsets: tuple[int, ...]

    def __post_init__(self):
        offsets = tuple(sorted(set(int(a) for a in self.offsets)))
        if len(offsets) != len(self.offsets):
            raise ValueError("connection set offsets must be pairwise distinct")
        if self.n < 1:
            raise ValueError(f"graph order must be positive, got {self.n}")
        for a in offsets:
            # 0 < a < (n+1)/2, kept in integers
            if not (0 < a and 2 * a < self.n + 1):
                raise ValueError(
                    f"offset {a} outside the canonical range (0, {(self.n + 1) / 2})"
                )
        object.__setattr__(self, "offsets", offsets)


@dataclass(frozen=True)
class Codeword:
    """A codeword of a [2n, n] code, packed into ``value``."""

    length: int
    value: int
    weight: int = field(init=False)

    def __post_init__(self):
        if self.value >> self.length:
            raise ValueError("codeword has bits beyond its length")
        object.__setattr__(self, "weight", self.value.bit_count())

    @property
    def bits(self) -> tuple[int, ...]:
        return _unpack(self.value, self.length)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.length) if (self.value >> i) & 1)

    def __xor__(self, other: "Codeword") -> "Codeword":
        if other.length != self.length:
            raise ValueError("codeword lengths differ")
        return Codeword(self.length, self.value ^ other.value)

    def __str__(self) -> str:
        half = self.length // 2
        bits = self.bits
        return f"{format_vector(bits[:half])} | {format_vector(bits[half:])}"


@dataclass(frozen=True)
class CirculantCode:
    """The binary code with generator matrix ``(I | A(alpha))``."""

    alpha: GeneratorVector

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def length(self) -> int:
        return 2 * self.alpha.n

    @property
    def dimension(self) -> int:
        # the identity block forces full rank
        return self.alpha.n

    def row_mask(self, i: int) -> int:
        """Packed A-half of generator row ``i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"row {i} outside 1..{self.n}")
        return rotate_right(self.alpha.mask, i - 1, self.n)

    def generator_row(self, i: int) -> Codeword:
        return Codeword(self.length, (1 << (i - 1)) | (self.row_mask(i) << self.n))

    def combine(self, rows: Iterable[int]) -> Codeword:
        """XOR of the generator rows with 1-based indices ``rows``."""
        message = 0
        for j in rows:
            if not 1 <= j <= self.n:
                raise IndexError(f"row {j} outside 1..{self.n}")
            message ^= 1 << (j - 1)
        return self.encode_mask(message)

    def encode_mask(self, message: int) -> Codeword:
        n = self.n
        a_half = 0
        base = self.alpha.mask
        m = message
        while m:
            low = m & -m
            a_half ^= rotate_right(base, low.bit_length() - 1, n)
            m ^= low
        return Codeword(2 * n, message | (a_half << n))

    def encode(self, message: Sequence[int]) -> Codeword:
        if len(message) != self.n:
            raise ValueError(f"message length {len(message)} != dimension {self.n}")
        return self.encode_mask(_pack(message))


def vector_from_connection_set(s: ConnectionSet) -> GeneratorVector:
    bits = [0] * s.n
    for a in s.offsets:
        bits[a] = 1
        bits[(s.n - a) % s.n] = 1
    return GeneratorVector(s.n, tuple(bits))


def quadratic_residues(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def paley_vector(p: int) -> GeneratorVector:
    """Generator vector of the Paley (quadratic-residue) graph on Z_p."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4, so the residue set is not symmetric")
    residues = quadratic_residues(p)
    return GeneratorVector(p, tuple(int(k in residues) for k in range(p)))


def circulant_row(alpha: GeneratorVector, i: int) -> tuple[int, ...]:
    """Row ``i`` (1-based) of A(alpha); entry j is ``b_{((j - i) mod n) + 1}``."""
    if not 1 <= i <= alpha.n:
        raise IndexError(f"row {i} outside 1..{alpha.n}")
    return _unpack(rotate_right(alpha.mask, i - 1, alpha.n), alpha.n)


def entry(alpha: GeneratorVector, i: int, j: int) -> int:
    """Matrix entry ``a_{i,j}`` of A(alpha); both indices 1-based and taken mod n."""
    n = alpha.n
    return alpha.bits[(j - i) % n]


def encode(code: CirculantCode, message: Sequence[int]) -> Codeword:
    return code.encode(message)


def is_graph_vector(alpha: GeneratorVector) -> bool:
    """True when A(alpha) is symmetric, i.e. alpha is an undirected graph's first row."""
    n = alpha.n
    b = alpha.bits
    return all(b[k] == b[(n - k) % n] for k in range(1, n))


def min_degree_bound(alpha: GeneratorVector) -> int:
    return alpha.weight + 1


def parse_vector(text: str) -> GeneratorVector:
    """Parse ``0,1,1,0,...`` (whitespace tolerated)."""
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    if not parts or parts == [""]:
        raise ValueError("empty vector")
    try:
        bits = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed vector text: {text!r}") from None
    return GeneratorVector(len(bits), bits)


def format_vector(bits: Iterable[int]) -> str:
    return ",".join(str(int(b)) for b in bits)


def parse_connection_set(text: str) -> ConnectionSet:
    """Parse ``n:a1,a2,...`` such as ``17:1,2,4,8``; ``5:`` is the empty set."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"connection set must look like 'n:a1,a2,...', got {text!r}")
    try:
        n = int(head)
        offsets = tuple(int(a) for a in tail.split(",") if a.strip())
    except ValueError:
        raise ValueError(f"malformed connection set: {text!r}") from None
    return ConnectionSet(n, offsets)
