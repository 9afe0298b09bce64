"""Exhaustive quadratic-coset analytics.

The workhorse is a mask-indexed table of nl(f + q) over every homogeneous
quadratic form q on n variables.  Coefficient layout: bit k of a form mask
is the coefficient of x_i*x_j where (i, j) is the k-th pair of 1 <= i < j <= n
in lexicographic order, so for n=6 bit 0 is (1,2) and bit 14 is (5,6).

All kernels enumerate the form span in vectorized blocks (one batched
Walsh transform per block); reductions are associative, so results are
bit-identical for any worker partition.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .core import TruthTable, nonlinearity

S16_NONLINEARITY = 16

# hi/lo generator split for the n=7 scan: 2^11 blocks of 2^10 rows
_N7_LO_BITS = 10


def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def _num_forms(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


class QuadraticForm:
    """Coefficient bitset of a homogeneous degree-2 form on n variables."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int):
        if not 3 <= n <= 7:
            raise ValueError(f"variable count must be in 3..7, got {n}")
        if not 0 <= mask < _num_forms(n):
            raise ValueError(f"form mask {mask:#x} out of range for n={n}")
        self.n = n
        self.mask = int(mask)

    @classmethod
    def parse(cls, text: str, n: int) -> "QuadraticForm":
        """Parse the pair-list form ``12+35+46`` (or ``0x..`` hex mask, or ``0``)."""
        text = text.strip()
        if text == "0":
            return cls(n, 0)
        if text.lower().startswith("0x"):
            return cls(n, int(text, 16))
        pair_index = {p: k for k, p in enumerate(_pairs(n))}
        mask = 0
        for pos, tok in enumerate(text.split("+")):
            tok = tok.strip()
            if len(tok) != 2 or not tok.isdigit():
                raise ValueError(f"bad pair {tok!r} at position {pos}")
            i, j = int(tok[0]), int(tok[1])
            if (i, j) not in pair_index:
                raise ValueError(f"pair {tok!r} at position {pos} is not i<j within 1..{n}")
            bit = 1 << pair_index[(i, j)]
            if mask & bit:
                raise ValueError(f"duplicate pair {tok!r} at position {pos}")
            mask |= bit
        return cls(n, mask)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        all_pairs = _pairs(self.n)
        return tuple(all_pairs[k] for k in range(len(all_pairs)) if (self.mask >> k) & 1)

    def format(self) -> str:
        if self.mask == 0:
            return "0"
        return "+".join(f"{i}{j}" for i, j in self.pairs())

    def to_hex(self) -> str:
        return format(self.mask, "#x")

    def __xor__(self, other: "QuadraticForm") -> "QuadraticForm":
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        return QuadraticForm(self.n, self.mask ^ other.mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"QuadraticForm(n={self.n}, {self.format()!r})"


@dataclass(frozen=True)
class NFhSpectrum:
    """Histogram r -> #{quadratic forms g with nl(f+g) = r}."""

    n: int
    counts: dict

    def __getitem__(self, r: int) -> int:
        return int(self.counts.get(int(r), 0))

    def mass(self) -> int:
        return int(sum(self.counts.values()))

    def tail(self, r0: int) -> int:
        """Total count at nonlinearity r0 and above."""
        return int(sum(c for r, c in self.counts.items() if r >= r0))

    def support_min(self) -> int:
        return min(self.counts)

    def support_max(self) -> int:
        return max(self.counts)

    def as_dict(self) -> dict:
        return {int(r): int(c) for r, c in sorted(self.counts.items())}


@dataclass(frozen=True)
class FhSet:
    """The quadratic forms g with nl(base + g) = r, in ascending mask order."""

    base: TruthTable
    r: int
    members: tuple

    def __len__(self) -> int:
        return len(self.members)

    def mask_array(self) -> np.ndarray:
        return np.fromiter((g.mask for g in self.members), dtype=np.int64, count=len(self.members))


# ---------------------------------------------------------------------------
# enumeration and tables
# ---------------------------------------------------------------------------


def enumerate_quadratics(n: int) -> Iterator[QuadraticForm]:
    """All 2^(n(n-1)/2) forms once, Gray-coded: each step flips one coefficient."""
    for i in range(_num_forms(n)):
        yield QuadraticForm(n, i ^ (i >> 1))


@lru_cache(maxsize=None)
def _monomial_tables(n: int) -> np.ndarray:
    """Truth tables of the pair monomials x_i*x_j, shape (n(n-1)/2, 2^n)."""
    idx = np.arange(1 << n)
    rows = [
        (((idx >> (i - 1)) & 1) & ((idx >> (j - 1)) & 1)).astype(np.uint8)
        for i, j in _pairs(n)
    ]
    out = np.array(rows, dtype=np.uint8)
    out.setflags(write=False)
    return out


def _span_tables(gens: np.ndarray) -> np.ndarray:
    """All XOR combinations of the generator rows; row index = inclusion mask."""
    out = np.zeros((1, gens.shape[1]), dtype=np.uint8)
    for g in gens:
        out = np.concatenate([out, out ^ g[None, :]])
    return out


@lru_cache(maxsize=None)
def _form_tables6() -> np.ndarray:
    out = _span_tables(_monomial_tables(6))
    out.setflags(write=False)
    return out


def quad_table(q: QuadraticForm) -> TruthTable:
    """Truth table of a form; degree is 2, or 0 for the zero form."""
    bits = np.zeros(1 << q.n, dtype=np.uint8)
    mono = _monomial_tables(q.n)
    for k in range(mono.shape[0]):
        if (q.mask >> k) & 1:
            bits ^= mono[k]
    return TruthTable(q.n, bits)


def _batch_fwht(signs: np.ndarray) -> np.ndarray:
    """In-place Walsh butterfly along axis 1 of a +-1 int16 block."""
    size = signs.shape[1]
    h = 1
    while h < size:
        v = signs.reshape(signs.shape[0], size // (2 * h), 2, h)
        top = v[:, :, 0, :].copy()
        v[:, :, 0, :] += v[:, :, 1, :]
        v[:, :, 1, :] = top - v[:, :, 1, :]
        h *= 2
    return signs


def _block_nl(form_bits: np.ndarray, f_bits: np.ndarray) -> np.ndarray:
    """nl(f + q) for each form row; |W| <= 2^n so int16 never overflows."""
    signs = 1 - 2 * (form_bits ^ f_bits[None, :]).astype(np.int16)
    _batch_fwht(signs)
    mx = np.abs(signs).max(axis=1)
    half = form_bits.shape[1] >> 1
    return (half - (mx >> 1)).astype(np.int16)


def _chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = (total + parts - 1) // parts
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def coset_nl_table(f: TruthTable, threads: int = 1) -> np.ndarray:
    """nl(f + q) for every quadratic form q, indexed by coefficient mask (n <= 6)."""
    if f.n > 6:
        raise ValueError("mask-indexed coset tables are materialized for n <= 6 only")
    forms = _form_tables6() if f.n == 6 else _span_tables(_monomial_tables(f.n))
    if threads <= 1:
        return _block_nl(forms, f.bits)
    ranges = _chunk_ranges(forms.shape[0], threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda r: _block_nl(forms[r[0]:r[1]], f.bits), ranges))
    return np.concatenate(parts)


def _scan7(f: TruthTable, threads: int = 1, fresh: bool = False,
           want_hist: bool = False) -> tuple[int, np.ndarray | None]:
    """Full 2^21-coset scan at n=7: minimum nl and optionally the histogram.

    ``fresh`` rebuilds the generator spans locally instead of touching the
    process caches (used by certification paths that must not share state).
    """
    mono = [
        ((np.arange(128) >> (i - 1)) & 1) & ((np.arange(128) >> (j - 1)) & 1)
        for i, j in _pairs(7)
    ] if fresh else list(_monomial_tables(7))
    mono = [m.astype(np.uint8) for m in mono]
    lo = _span_tables(np.array(mono[:_N7_LO_BITS]))
    hi = _span_tables(np.array(mono[_N7_LO_BITS:]))
    lo_signs = 1 - 2 * lo.astype(np.int16)

    def scan(rows: tuple[int, int]) -> tuple[int, np.ndarray]:
        buf = np.empty_like(lo_signs)
        best = 1 << 6
        hist = np.zeros(65, dtype=np.int64)
        for r in range(rows[0], rows[1]):
            s_hi = 1 - 2 * (hi[r] ^ f.bits).astype(np.int16)
            np.multiply(lo_signs, s_hi[None, :], out=buf)
            _batch_fwht(buf)
            mx = np.abs(buf).max(axis=1)
            nls = 64 - (mx >> 1)
            m = int(nls.min())
            if m < best:
                best = m
            if want_hist:
                hist += np.bincount(nls, minlength=65)
            elif best == 0:
                break
        return best, hist

    ranges = _chunk_ranges(hi.shape[0], threads)
    if len(ranges) == 1:
        results = [scan(ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            results = list(pool.map(scan, ranges))
    best = min(r[0] for r in results)
    hist = sum(r[1] for r in results) if want_hist else None
    return best, hist


def nl2(f: TruthTable, threads: int = 1, fresh: bool = False) -> int:
    """Exact second-order nonlinearity by exhaustive coset enumeration.

    Minimizing nl(f+q) over homogeneous quadratics q is exact because nl
    already minimizes over the affine part of each degree-<=2 coset.
    """
    if f.n == 7:
        return _scan7(f, threads=threads, fresh=fresh)[0]
    return int(coset_nl_table(f, threads=threads).min())


def nfh_spectrum(f: TruthTable, threads: int = 1) -> NFhSpectrum:
    """counts[r] = number of quadratic forms g with nl(f+g) = r."""
    if f.n == 7:
        _, hist = _scan7(f, threads=threads, want_hist=True)
        counts = {int(r): int(c) for r, c in enumerate(hist) if c}
    else:
        table = coset_nl_table(f, threads=threads)
        hist = np.bincount(table)
        counts = {int(r): int(c) for r, c in enumerate(hist) if c}
    return NFhSpectrum(f.n, counts)


def fh_set(f: TruthTable, r: int, threads: int = 1) -> FhSet:
    """Explicit member list of Fh_f(r); n <= 6 only (n=7 sets are never built)."""
    if f.n > 6:
        raise ValueError("Fh member lists are materialized for n <= 6 only")
    table = coset_nl_table(f, threads=threads)
    masks = np.nonzero(table == r)[0]
    return FhSet(base=f, r=int(r), members=tuple(QuadraticForm(f.n, int(m)) for m in masks))


# ---------------------------------------------------------------------------
# S16 statistics and pair profiles (n = 6)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def quadratic_nl_table() -> np.ndarray:
    """nl of every 6-variable form itself; values lie in {0, 16, 24, 28}."""
    out = coset_nl_table(TruthTable.zeros(6))
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _s16_mask() -> np.ndarray:
    out = quadratic_nl_table() == S16_NONLINEARITY
    out.setflags(write=False)
    return out


def s16_count(s: FhSet) -> int:
    """Members of s whose own nonlinearity is exactly 16."""
    if s.base.n != 6:
        raise ValueError("S16 statistics are defined for n = 6")
    if not s.members:
        return 0
    return int(_s16_mask()[s.mask_array()].sum())


def shifted_s16_count(g: QuadraticForm, s: FhSet) -> int:
    """|(g + members) intersect S16|, sums taken coefficient-wise."""
    if g.n != 6 or s.base.n != 6:
        raise ValueError("S16 statistics are defined for n = 6")
    if not s.members:
        return 0
    return int(_s16_mask()[g.mask ^ s.mask_array()].sum())


def _profile_hits(masks: np.ndarray) -> np.ndarray:
    """For each element, how many pairwise XORs with the set land in S16."""
    if masks.size == 0:
        return np.zeros(0, dtype=np.int64)
    return _s16_mask()[masks[:, None] ^ masks[None, :]].sum(axis=1)


def _pair_profile_masks(masks: np.ndarray, t: int) -> int:
    return int((_profile_hits(masks) >= t).sum())


def _as_masks(h_set: Sequence[QuadraticForm]) -> np.ndarray:
    masks = np.fromiter((g.mask for g in h_set), dtype=np.int64, count=len(h_set))
    if any(g.n != 6 for g in h_set):
        raise ValueError("pair profiles are defined for n = 6")
    return masks

def pair_profile(h_set: Sequence[QuadraticForm], t: int) -> int:
    """#{h in h_set : #{h' in h_set with nl(h+h') = 16} >= t}.

    The h'=h self-pair contributes the zero form (nl 0) and never counts.
    """
    return _pair_profile_masks(_as_masks(h_set), t)


def shifted_pair_profile(g: QuadraticForm, k_set: Sequence[QuadraticForm], t: int) -> int:
    """pair_profile of the S16-filtered shifted set {g+k}; the shift cancels in pairs."""
    if g.n != 6:
        raise ValueError("pair profiles are defined for n = 6")
    masks = _as_masks(k_set)
    filtered = masks[_s16_mask()[g.mask ^ masks]]
    return _pair_profile_masks(filtered, t)


def concat_nl2_upper_bound(f1: TruthTable, f2: TruthTable, threads: int = 1) -> int:
    """min over forms q of nl(f1+q) + nl(f2+q); always >= nl2(f1||f2).

    A degree-<=2 function on n+1 variables splits as c || (c + affine), so a
    shared q serves both halves and the minimum bounds the concatenation.
    """
    if f1.n != f2.n:
        raise ValueError(f"variable count mismatch: {f1.n} vs {f2.n}")
    a1 = coset_nl_table(f1, threads=threads).astype(np.int32)
    a2 = coset_nl_table(f2, threads=threads).astype(np.int32)
    return int((a1 + a2).min())
