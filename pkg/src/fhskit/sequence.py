"""Frequency-hopping sequences and their Hamming-correlation metrics.

A sequence lives over the alphabet Z_l = {0, ..., l-1}; the symbol at index i
is the frequency used in time slot i.  Everything here is a pure function on
immutable values.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class Fhs:
    """A frequency-hopping sequence: symbols over Z_alphabet_size, length >= 1."""

    alphabet_size: int
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.alphabet_size, int) or self.alphabet_size < 1:
            raise ParameterError(f"alphabet size must be a positive integer, got {self.alphabet_size!r}")
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) < 1:
            raise ParameterError("sequence must contain at least one symbol")
        for i, v in enumerate(symbols):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParameterError(f"symbol at index {i} is not an integer: {v!r}")
            if not 0 <= v < self.alphabet_size:
                raise ParameterError(f"symbol {v} at index {i} out of range [0, {self.alphabet_size})")

    @property
    def n(self) -> int:
        """Sequence length."""
        return len(self.symbols)

    def shifted(self, tau: int) -> "Fhs":
        """Left cyclic shift by tau positions."""
        tau %= self.n
        return Fhs(self.alphabet_size, self.symbols[tau:] + self.symbols[:tau])

    def relabeled(self, perm) -> "Fhs":
        """Apply an alphabet permutation: symbol f becomes perm[f]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.alphabet_size)):
            raise ParameterError("perm must be a permutation of the full alphabet")
        return Fhs(self.alphabet_size, tuple(perm[v] for v in self.symbols))

    def to_json_dict(self) -> dict:
        return {"l": self.alphabet_size, "seq": list(self.symbols)}

    @classmethod
    def from_json_dict(cls, obj) -> "Fhs":
        if not isinstance(obj, dict):
            raise ParameterError("expected a JSON object with integer field 'l' and array 'seq'")
        if "l" not in obj or "seq" not in obj:
            raise ParameterError("sequence JSON must carry fields 'l' and 'seq'")
        l = obj["l"]
        seq = obj["seq"]
        if not isinstance(l, int) or isinstance(l, bool):
            raise ParameterError(f"field 'l' must be an integer, got {l!r}")
        if not isinstance(seq, list):
            raise ParameterError("field 'seq' must be an array of integers")
        return cls(l, tuple(seq))


@dataclass(frozen=True)
class CorrelationProfile:
    """The full map tau -> H(tau) for one sequence (auto) or a pair (cross)."""

    kind: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("auto", "cross"):
            raise ParameterError(f"kind must be 'auto' or 'cross', got {self.kind!r}")
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n < 1:
            raise ParameterError("profile must cover at least one shift")
        if any(not 0 <= v <= n for v in values):
            raise ParameterError("profile values must lie in [0, n]")
        if self.kind == "auto":
            if values[0] != n:
                raise ParameterError("auto profile must have H(0) = n")
            for tau in range(1, n):
                if values[tau] != values[n - tau]:
                    raise ParameterError("auto profile must satisfy H(tau) = H(n - tau)")

    @property
    def length(self) -> int:
        return len(self.values)


def _check_same_shape(s: Fhs, t: Fhs) -> None:
    if s.alphabet_size != t.alphabet_size:
        raise ParameterError(f"alphabet mismatch: {s.alphabet_size} vs {t.alphabet_size}")
    if s.n != t.n:
        raise ParameterError(f"length mismatch: {s.n} vs {t.n}")


def hamming_cross(s: Fhs, t: Fhs, tau: int) -> int:
    """Periodic Hamming cross-correlation of s and t at shift tau."""
    _check_same_shape(s, t)
    n = s.n
    if not 0 <= tau < n:
        raise ParameterError(f"shift {tau} out of range [0, {n})")
    a, b = s.symbols, t.symbols
    return sum(1 for i in range(n) if a[i] == b[(i + tau) % n])


def cross_profile(s: Fhs, t: Fhs) -> CorrelationProfile:
    """All-shift cross-correlation, computed by binning matching position pairs.

    Costs O(n + #matches) rather than O(n^2), which matters for the large
    randomized verification sweeps.
    """
    _check_same_shape(s, t)
    n = s.n
    positions = defaultdict(list)
    for j, v in enumerate(t.symbols):
        positions[v].append(j)
    values = [0] * n
    for i, v in enumerate(s.symbols):
        for j in positions.get(v, ()):
            values[(j - i) % n] += 1
    kind = "auto" if s.symbols == t.symbols else "cross"
    return CorrelationProfile(kind, tuple(values))


def auto_profile(s: Fhs) -> CorrelationProfile:
    """All-shift autocorrelation of s."""
    return cross_profile(s, s)


def max_auto(s: Fhs) -> int:
    """Maximum autocorrelation over the nontrivial shifts 0 < tau < n."""
    if s.n < 2:
        raise ParameterError("autocorrelation maximum is undefined for length-1 sequences")
    return max(auto_profile(s).values[1:])


def max_cross(s: Fhs, t: Fhs) -> int:
    """Maximum cross-correlation over all shifts 0 <= tau < n."""
    return max(cross_profile(s, t).values)


def min_gap(s: Fhs) -> int:
    """Minimum gap: one less than the smallest |s_{i+1} - s_i|, wrap pair included.

    Differences are literal integer distances, not modular ones, so the gap
    can be -1 when two cyclically adjacent entries coincide.
    """
    if s.n < 2:
        raise ParameterError("minimum gap is undefined for length-1 sequences")
    sym = s.symbols
    n = s.n
    smallest = abs(sym[n - 1] - sym[0])
    for i in range(n - 1):
        d = abs(sym[i + 1] - sym[i])
        if d < smallest:
            smallest = d
    return smallest - 1


def frequency_counts(s: Fhs) -> dict[int, int]:
    """Occurrence count of every alphabet symbol; absent symbols count 0."""
    counts = dict.fromkeys(range(s.alphabet_size), 0)
    for v in s.symbols:
        counts[v] += 1
    return counts


def is_uniform(s: Fhs) -> bool:
    """True iff symbol counts spread exactly 0 (when l | n) or 1 (otherwise)."""
    counts = frequency_counts(s)
    spread = max(counts.values()) - min(counts.values())
    return spread == (0 if s.n % s.alphabet_size == 0 else 1)


def lg_bound(n: int, l: int) -> int:
    """Lempel-Greenberger lower bound on the maximum nontrivial autocorrelation.

    Equals ceil((n - eps)(n + eps - l) / (l (n - 1))) with eps = n mod l, which
    simplifies to n // l for n > l and to 0 for n <= l.  Defined as 0 for n = 1,
    where no nontrivial shift exists.
    """
    if n < 1 or l < 1:
        raise ParameterError("need n >= 1 and l >= 1")
    if n == 1:
        return 0
    eps = n % l
    num = (n - eps) * (n + eps - l)
    den = l * (n - 1)
    return -(-num // den)


def wg_lg_bound(n: int, l: int) -> int:
    """Wide-gap variant of the correlation lower bound: denominator l (n - 3)."""
    if l < 1:
        raise ParameterError("need l >= 1")
    if n <= 3:
        raise ParameterError("wide-gap bound needs n >= 4")
    eps = n % l
    num = (n - eps) * (n + eps - l)
    den = l * (n - 3)
    return -(-num // den)


def is_lg_optimal(s: Fhs) -> bool:
    """True iff the sequence meets the Lempel-Greenberger bound exactly."""
    return max_auto(s) == lg_bound(s.n, s.alphabet_size)


def sorted_alphabet_gap_bound(s: Fhs, frequencies) -> int | float:
    """Gap lower bound after relabeling onto a sorted physical frequency list.

    frequencies must be strictly increasing with one entry per alphabet symbol.
    The minimum adjacent spacing f' includes the wrap pair (last, first), with
    subscripts taken cyclically; the mapped sequence has gap >= (g+1)*f' - 1.
    """
    freqs = list(frequencies)
    if len(freqs) != s.alphabet_size:
        raise ParameterError(f"need exactly {s.alphabet_size} frequencies, got {len(freqs)}")
    if any(b <= a for a, b in zip(freqs, freqs[1:])):
        raise ParameterError("frequency list must be strictly increasing")
    l = len(freqs)
    f_prime = min(abs(freqs[(i + 1) % l] - freqs[i]) for i in range(l))
    return (min_gap(s) + 1) * f_prime - 1
