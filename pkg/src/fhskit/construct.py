"""The two construction families for optimal sequences with controlled gaps.

Unit-step family: concatenate two or three decimations s^d of (0, 1, ..., l-1)
with steps taken from a difference unit set of Z_l.  Block-recursive family:
when gcd(l, d1) = gcd(l, d2) = gcd(l, d2 - d1) = m >= 2, concatenate the 2m
rows of two m x (l/m) matrices in the order given by a permutation of
{0, ..., 2m-1}; the result's correlation equals that of the permutation's
mod-m reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import ParameterError
from .sequence import Fhs


def ds_sequence(l: int, d: int, offset: int = 0, length: int | None = None) -> Fhs:
    """The decimated sequence s_i = (i*d + offset) mod l for 0 <= i < length."""
    if l < 1:
        raise ParameterError(f"need l >= 1, got {l}")
    if not 0 <= offset < l:
        raise ParameterError(f"offset {offset} out of range [0, {l})")
    if length is None:
        length = l
    if length < 1:
        raise ParameterError(f"need length >= 1, got {length}")
    return Fhs(l, tuple((i * d + offset) % l for i in range(length)))


def unit_step_min_gap(l: int, steps) -> int:
    """min over the steps d of {d - 1, l - d - 1}: the gap of a zero-offset concatenation."""
    return min(min(d - 1, l - d - 1) for d in steps)


def _require_du_admissible(l: int, steps) -> None:
    steps = list(steps)
    if len(set(steps)) != len(steps):
        raise ParameterError("steps must be pairwise distinct")
    for d in steps:
        if not 1 <= d <= l - 1:
            raise ParameterError(f"step {d} out of range [1, {l - 1}]")
        if math.gcd(d, l) != 1:
            raise ParameterError(f"step {d} is not a unit modulo {l}")
    for i, a in enumerate(steps):
        for b in steps[i + 1:]:
            if math.gcd(abs(b - a), l) != 1:
                raise ParameterError(f"step difference {abs(b - a)} is not a unit modulo {l}")


@dataclass(frozen=True)
class PairParams:
    """Two distinct difference-unit steps plus optional per-block offsets."""

    l: int
    d1: int
    d2: int
    i1: int = 0
    i2: int = 0

    def __post_init__(self) -> None:
        if self.l < 3:
            raise ParameterError(f"need l >= 3, got {self.l}")
        _require_du_admissible(self.l, (self.d1, self.d2))
        for name, off in (("i1", self.i1), ("i2", self.i2)):
            if not 0 <= off < self.l:
                raise ParameterError(f"offset {name}={off} out of range [0, {self.l})")

    @property
    def guaranteed_gap(self) -> int | None:
        """The gap promise, available only for zero offsets."""
        if (self.i1, self.i2) == (0, 0):
            return unit_step_min_gap(self.l, (self.d1, self.d2))
        return None


@dataclass(frozen=True)
class TripleParams:
    """Three distinct difference-unit steps (offsets are handled at build time)."""

    l: int
    d1: int
    d2: int
    d3: int

    def __post_init__(self) -> None:
        if self.l < 3:
            raise ParameterError(f"need l >= 3, got {self.l}")
        _require_du_admissible(self.l, (self.d1, self.d2, self.d3))

    @property
    def guaranteed_gap(self) -> int:
        return unit_step_min_gap(self.l, (self.d1, self.d2, self.d3))


def construct_pair(params: PairParams) -> Fhs:
    """s^{d1,i1} || s^{d2,i2}: an optimal (2l, l, 2) sequence for any offsets."""
    l = params.l
    first = ds_sequence(l, params.d1, params.i1, l)
    second = ds_sequence(l, params.d2, params.i2, l)
    return Fhs(l, first.symbols + second.symbols)


def construct_triple(params: TripleParams, offsets=(0, 0, 0), unchecked: bool = False) -> Fhs:
    """s^{d1} || s^{d2} || s^{d3}: an optimal (3l, l, 3) sequence at zero offsets.

    Nonzero offsets can break optimality, so they are refused unless
    unchecked=True, which builds the sequence without any correlation promise.
    """
    offsets = tuple(offsets)
    if len(offsets) != 3:
        raise ParameterError("need exactly three offsets")
    for off in offsets:
        if not 0 <= off < params.l:
            raise ParameterError(f"offset {off} out of range [0, {params.l})")
    if offsets != (0, 0, 0) and not unchecked:
        raise ParameterError(
            "nonzero offsets void the optimality guarantee; pass unchecked=True to build anyway"
        )
    l = params.l
    symbols: tuple[int, ...] = ()
    for d, off in zip((params.d1, params.d2, params.d3), offsets):
        symbols += ds_sequence(l, d, off, l).symbols
    return Fhs(l, symbols)


# ---------------------------------------------------------------------------
# Block-recursive construction


def _common_gcd(l: int, d1: int, d2: int, m: int | None = None) -> int:
    if not 2 <= d1 < d2 < l:
        raise ParameterError(f"need 2 <= d1 < d2 < l, got d1={d1}, d2={d2}, l={l}")
    g = math.gcd(l, d1)
    if math.gcd(l, d2) != g or math.gcd(l, d2 - d1) != g:
        raise ParameterError(
            f"gcd(l,d1), gcd(l,d2), gcd(l,d2-d1) must coincide; got "
            f"{math.gcd(l, d1)}, {math.gcd(l, d2)}, {math.gcd(l, d2 - d1)}"
        )
    if g < 2:
        raise ParameterError("common gcd m must be >= 2; m = 1 is the plain pair construction")
    if m is not None and m != g:
        raise ParameterError(f"declared m={m} but the common gcd is {g}")
    l1 = l // g
    # implied by the shared gcd; derived coprimality is asserted, not re-validated
    assert math.gcd(l1, d1 // g) == 1 and math.gcd(l1, d2 // g) == 1
    assert math.gcd(l1, (d2 - d1) // g) == 1
    return g


@dataclass(frozen=True)
class OrderSeq:
    """A length-2m sequence over Z_m in which every residue appears exactly twice."""

    m: int
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ParameterError(f"need m >= 1, got {self.m}")
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) != 2 * self.m:
            raise ParameterError(f"order sequence must have length {2 * self.m}")
        for j in range(self.m):
            if sum(1 for v in symbols if v == j) != 2:
                raise ParameterError(f"residue {j} must appear exactly twice")

    def as_fhs(self) -> Fhs:
        return Fhs(self.m, self.symbols)


def pi_m(pi, m: int) -> OrderSeq:
    """Reduce a permutation of {0, ..., 2m-1} entrywise modulo m."""
    pi = tuple(pi)
    if m < 1:
        raise ParameterError(f"need m >= 1, got {m}")
    if sorted(pi) != list(range(2 * m)):
        raise ParameterError("pi must be a permutation of {0, ..., 2m-1}")
    return OrderSeq(m, tuple(v % m for v in pi))


@dataclass(frozen=True)
class RecursiveParams:
    """Inputs of the block-recursive construction."""

    l: int
    d1: int
    d2: int
    pi: tuple[int, ...]
    m: int | None = None

    def __post_init__(self) -> None:
        g = _common_gcd(self.l, self.d1, self.d2, self.m)
        object.__setattr__(self, "m", g)
        object.__setattr__(self, "pi", tuple(self.pi))
        if sorted(self.pi) != list(range(2 * g)):
            raise ParameterError(f"pi must be a permutation of {{0, ..., {2 * g - 1}}}")

    @property
    def order_seq(self) -> OrderSeq:
        return pi_m(self.pi, self.m)


def recursive_rows(l: int, d1: int, d2: int, m: int | None = None):
    """Rows s^0..s^{m-1} and t^0..t^{m-1}: s^j_i = i*d1 + j, t^k_i = i*d2 + k (mod l)."""
    g = _common_gcd(l, d1, d2, m)
    l1 = l // g
    s_rows = [tuple((i * d1 + j) % l for i in range(l1)) for j in range(g)]
    t_rows = [tuple((i * d2 + k) % l for i in range(l1)) for k in range(g)]
    return s_rows, t_rows


def gap_condition(l: int, d1: int, d2: int, m: int | None = None) -> bool:
    """True iff d1 + d2 < l - m + 2, under which the built gap equals d1 - 1."""
    g = _common_gcd(l, d1, d2, m)
    return d1 + d2 < l - g + 2


def _concatenate_blocks(l: int, blocks, pi) -> Fhs:
    seq: list[int] = []
    for idx in pi:
        seq.extend(blocks[idx])
    return Fhs(l, tuple(seq))


def construct_recursive(params: RecursiveParams) -> Fhs:
    """Concatenate the 2m rows in pi order into a length-2l sequence.

    The output's maximum autocorrelation equals that of the mod-m reduction of
    pi viewed as a length-2m sequence; when d1 + d2 < l - m + 2 its minimum gap
    is d1 - 1.
    """
    s_rows, t_rows = recursive_rows(params.l, params.d1, params.d2, params.m)
    return _concatenate_blocks(params.l, s_rows + t_rows, params.pi)


def construct_recursive_shifted(params: RecursiveParams, k: int) -> Fhs:
    """Same construction from the shifted base matrix: every row entry moved by +k mod l."""
    if not 0 <= k < params.l:
        raise ParameterError(f"shift {k} out of range [0, {params.l})")
    s_rows, t_rows = recursive_rows(params.l, params.d1, params.d2, params.m)
    shifted = [tuple((v + k) % params.l for v in row) for row in s_rows + t_rows]
    return _concatenate_blocks(params.l, shifted, params.pi)


def _lift_one(order: OrderSeq, bits) -> tuple[int, ...]:
    positions: dict[int, list[int]] = {j: [] for j in range(order.m)}
    for idx, v in enumerate(order.symbols):
        positions[v].append(idx)
    pi = [0] * (2 * order.m)
    for j in range(order.m):
        a, b = positions[j]
        if bits[j] == 0:
            pi[a], pi[b] = j, j + order.m
        else:
            pi[a], pi[b] = j + order.m, j
    return tuple(pi)


def lift_at_index(order: OrderSeq, index: int) -> tuple[int, ...]:
    """The index-th lifting of the order sequence, 0 <= index < 2^m.

    The index reads as a binary choice word, most significant bit first: bit j
    = 0 means the earlier position of residue j receives value j (and the
    later one j + m).
    """
    if not 0 <= index < (1 << order.m):
        raise ParameterError(f"lift index {index} out of range [0, 2^{order.m})")
    bits = tuple((index >> (order.m - 1 - j)) & 1 for j in range(order.m))
    return _lift_one(order, bits)


def lift_order_seq(order: OrderSeq) -> list[tuple[int, ...]]:
    """All 2^m permutations whose mod-m reduction is the given order sequence.

    Output follows the lexicographic order of the binary choice word (see
    lift_at_index).
    """
    return [_lift_one(order, bits) for bits in product((0, 1), repeat=order.m)]
