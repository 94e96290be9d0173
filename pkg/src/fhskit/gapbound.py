"""Tight upper bounds on the minimum gap of uniform sequences, with builders.

The bound has two branches: l/2 - 1 when l does not divide n and both n and l
are even, floor((l-1)/2) - 1 otherwise.  For every branch there is an explicit
extremal construction; each builder verifies its output (uniform, gap equal to
the bound) and raises UnsupportedCaseError instead of returning anything
weaker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError, UnsupportedCaseError
from .sequence import Fhs, is_uniform, min_gap

CASE_ODD_L = "odd_l"
CASE_EVEN_L_DIVIDES = "even_l_divides"
CASE_EVEN_EVEN_NONDIV = "even_even_nondiv"
CASE_EVEN_L_ODD_N = "even_l_odd_n"


@dataclass(frozen=True)
class GapBoundCase:
    n: int
    l: int
    case: str
    bound: int


def gap_upper_bound(n: int, l: int) -> GapBoundCase:
    """Classify (n, l) and return the two-branch gap upper bound."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    if l < 3:
        raise ParameterError(f"need l >= 3, got {l}")
    if l % 2 == 1:
        return GapBoundCase(n, l, CASE_ODD_L, (l - 1) // 2 - 1)
    if n % l == 0:
        return GapBoundCase(n, l, CASE_EVEN_L_DIVIDES, (l - 1) // 2 - 1)
    if n % 2 == 0:
        return GapBoundCase(n, l, CASE_EVEN_EVEN_NONDIV, l // 2 - 1)
    return GapBoundCase(n, l, CASE_EVEN_L_ODD_N, (l - 1) // 2 - 1)


def _alternating(first: int, second: int, length: int) -> tuple[int, ...]:
    return tuple(first if i % 2 == 0 else second for i in range(length))


def _case1_order(r: int, d: int) -> list[tuple[str, int]]:
    """Block concatenation order for the even-n/even-l builder.

    u blocks start and end low, v blocks start and end high, w blocks alternate
    high-low; the order interleaves them so every junction spans at least d.
    """
    w_tail = [("w", t) for t in range(r - 1, d - 1)]
    if r == 2:
        return [("u", 0)] + w_tail + [("v", d - 1)]
    if r == 4:
        return [("u", 0), ("v", 2), ("u", 1)] + w_tail + [("v", d - 1)]
    order = [("u", 0), ("v", r - 2)]
    for e in range(r - 4, 1, -2):
        order += [("u", e), ("v", e + 1)]
    return order + [("u", 1)] + w_tail + [("v", d - 1)]


def _case1_blocks(l: int, r: int, uv_len: int, w_len: int) -> list[tuple[int, ...]]:
    d = l // 2
    blocks = []
    for kind, idx in _case1_order(r, d):
        if kind == "u":
            blocks.append(_alternating(idx, d + idx, uv_len))
        elif kind == "v":
            blocks.append(_alternating(d + idx, idx, uv_len))
        else:
            blocks.append(_alternating(d + idx, idx, w_len))
    return blocks


def case1_blocks(l: int, q: int, r: int) -> list[tuple[int, ...]]:
    """The u/v/w blocks for n = q*l + r, in concatenation order.

    u and v blocks have length 2q + 1 and w blocks 2q; empty index ranges
    simply contribute no blocks.
    """
    if l < 4 or l % 2 != 0:
        raise ParameterError(f"need even l >= 4, got {l}")
    if q < 1:
        raise ParameterError(f"need q >= 1, got {q}")
    if r % 2 != 0 or not 2 <= r <= l // 2:
        raise ParameterError(f"need even r with 2 <= r <= l/2, got {r}")
    return _case1_blocks(l, r, 2 * q + 1, 2 * q)


def _case1_sequence(n: int, l: int) -> tuple[int, ...]:
    """Extremal sequence for even n, even l, l not dividing n.

    n = q*l + r uses u/v blocks of length 2q + 1; n = q*l - r uses the same
    layout with u/v blocks shortened to 2q - 1, which drops one occurrence of
    each high-u / low-v value and keeps the count spread at one.
    """
    eps = n % l
    d = l // 2
    if eps <= d:
        q, r = n // l, eps
        uv_len, w_len = 2 * q + 1, 2 * q
    else:
        q, r = n // l + 1, l - eps
        uv_len, w_len = 2 * q - 1, 2 * q
    seq: list[int] = []
    for block in _case1_blocks(l, r, uv_len, w_len):
        seq.extend(block)
    return tuple(seq)


def _odd_l_sequence(n: int, l: int) -> tuple[int, ...]:
    d = (l - 1) // 2
    return tuple(i * d % l for i in range(n))


def _even_divides_sequence(n: int, l: int) -> tuple[int, ...]:
    d = l // 2 - 1
    m = math.gcd(l, d)
    n1 = n // m
    seq: list[int] = []
    for j in range(m):
        seq.extend((i * d + j) % l for i in range(n1))
    return tuple(seq)


def extremal_sequence(n: int, l: int) -> Fhs:
    """A uniform sequence whose minimum gap attains gap_upper_bound(n, l) exactly.

    Dispatches on the bound's case; the output is re-verified and parameter
    combinations the four builders cannot realize raise UnsupportedCaseError.
    """
    target = gap_upper_bound(n, l)
    if target.case == CASE_ODD_L:
        seq = _odd_l_sequence(n, l)
    elif target.case == CASE_EVEN_L_DIVIDES:
        seq = _even_divides_sequence(n, l)
    elif target.case == CASE_EVEN_EVEN_NONDIV:
        seq = _case1_sequence(n, l)
    else:
        if (n - 1) % l == 0:
            raise UnsupportedCaseError(
                f"odd n = {n} with l | n - 1 has no even-length base sequence to extend"
            )
        base = _case1_sequence(n - 1, l)
        insert = l // 2 if base[0] < l // 2 else l // 2 - 1
        seq = (insert,) + base
    fhs = Fhs(l, seq)
    if not is_uniform(fhs) or min_gap(fhs) != target.bound:
        raise UnsupportedCaseError(
            f"no supported extremal construction for n={n}, l={l} (case {target.case})"
        )
    return fhs
