"""Exact arithmetic on small Boolean functions.

Everything here works on functions f: GF(2)^n -> GF(2) for 3 <= n <= 7,
stored as explicit truth tables.  Point encoding: the table index i
carries the input vector via  i = sum_j x_j * 2^(j-1),  so x_1 is the
least-significant index bit.  This makes Walsh/Moebius butterflies and
the concatenation operator (a split on the top index bit) index-free.

Variable numbering is 1-based in ANF text I/O and 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MIN_VARS = 3
MAX_VARS = 7


def _check_n(n: int) -> int:
    if not MIN_VARS <= n <= MAX_VARS:
        raise ValueError(f"variable count must be in {MIN_VARS}..{MAX_VARS}, got {n}")
    return n


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class TruthTable:
    """Immutable 2^n-bit output column of an n-variable Boolean function."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: np.ndarray | Iterable[int]):
        _check_n(n)
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise ValueError(f"truth table for n={n} needs {1 << n} bits, got shape {arr.shape}")
        if arr.max(initial=0) > 1:
            raise ValueError("truth table entries must be 0 or 1")
        self.n = n
        self.bits = _frozen(arr.copy())

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "TruthTable":
        return cls(n, np.zeros(1 << n, dtype=np.uint8))

    @classmethod
    def ones(cls, n: int) -> "TruthTable":
        return cls(n, np.ones(1 << n, dtype=np.uint8))

    @classmethod
    def from_int(cls, n: int, value: int) -> "TruthTable":
        """Bit i of ``value`` becomes f at the point encoded by i."""
        _check_n(n)
        size = 1 << n
        if not 0 <= value < (1 << size):
            raise ValueError(f"value out of range for a {size}-bit table")
        idx = np.arange(size, dtype=np.uint64)
        big = int(value)
        bits = np.fromiter(((big >> int(i)) & 1 for i in idx), count=size, dtype=np.uint8)
        return cls(n, bits)

    @classmethod
    def from_hex(cls, n: int, text: str) -> "TruthTable":
        """Parse the 2^n/4-digit hex form (most-significant digit = top indices)."""
        _check_n(n)
        want = (1 << n) // 4
        if len(text) != want:
            raise ValueError(f"hex table for n={n} needs exactly {want} digits, got {len(text)}")
        try:
            value = int(text, 16)
        except ValueError as exc:
            raise ValueError(f"invalid hex table {text!r}") from exc
        return cls.from_int(n, value)

    # -- views ---------------------------------------------------------------

    def weight(self) -> int:
        return int(self.bits.sum())

    def to_int(self) -> int:
        value = 0
        for i in np.nonzero(self.bits)[0]:
            value |= 1 << int(i)
        return value

    def to_hex(self) -> str:
        return format(self.to_int(), f"0{(1 << self.n) // 4}x")

    def restrict_top(self, bit: int) -> "TruthTable":
        """Fix x_n to ``bit`` and drop it, leaving an (n-1)-variable function."""
        if bit not in (0, 1):
            raise ValueError("bit must be 0 or 1")
        half = 1 << (self.n - 1)
        lo, hi = self.bits[:half], self.bits[half:]
        return TruthTable(self.n - 1, hi if bit else lo)

    # -- algebra -------------------------------------------------------------

    def __xor__(self, other: "TruthTable") -> "TruthTable":
        if not isinstance(other, TruthTable):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        return TruthTable(self.n, self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, hex={self.to_hex()!r})"


class AnfTermSet:
    """Algebraic normal form as a set of monomials over variables 1..n.

    Each term is a frozenset of variable indices; the empty frozenset is
    the constant-1 term.  An empty term *set* is the zero function.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[Iterable[int]]):
        _check_n(n)
        canon = set()
        for term in terms:
            t = frozenset(int(v) for v in term)
            for v in t:
                if not 1 <= v <= n:
                    raise ValueError(f"variable index {v} out of range 1..{n}")
            if t in canon:
                raise ValueError(f"duplicate term {sorted(t)}")
            canon.add(t)
        self.n = n
        self.terms = frozenset(canon)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "AnfTermSet":
        """Parse the ``126+135+234`` form; ``0`` is zero, ``c`` a constant term.

        When ``n`` is omitted it is inferred as the largest variable index
        (valid only when that is at least 3; pass ``n`` otherwise).
        """
        text = text.strip()
        if text == "":
            raise ValueError("empty function spec")
        terms: list[frozenset[int]] = []
        if text != "0":
            for pos, tok in enumerate(text.split("+")):
                tok = tok.strip()
                if tok == "c":
                    terms.append(frozenset())
                    continue
                if not tok or not tok.isdigit() or "0" in tok:
                    raise ValueError(f"bad term {tok!r} at position {pos}")
                idxs = [int(ch) for ch in tok]
                if len(set(idxs)) != len(idxs):
                    raise ValueError(f"repeated variable in term {tok!r} at position {pos}")
                terms.append(frozenset(idxs))
        if n is None:
            top = max((max(t) for t in terms if t), default=0)
            if top < MIN_VARS:
                raise ValueError(
                    f"cannot infer variable count from {text!r}; pass n explicitly"
                )
            n = top
        return cls(n, terms)

    def format(self) -> str:
        """Canonical text form: degree-descending, then lexicographic."""
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (-len(t), sorted(t)))
        return "+".join("c" if not t else "".join(str(v) for v in sorted(t)) for t in ordered)

    @property
    def degree(self) -> int:
        return max((len(t) for t in self.terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnfTermSet):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"AnfTermSet(n={self.n}, {self.format()!r})"


# ---------------------------------------------------------------------------
# GF(2) linear algebra helpers
# ---------------------------------------------------------------------------


def gf2_rank(mat: np.ndarray) -> int:
    m = (np.asarray(mat, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        pivots = np.nonzero(m[rank:, c])[0]
        if pivots.size == 0:
            continue
        p = rank + int(pivots[0])
        m[[rank, p]] = m[[p, rank]]
        elim = np.nonzero(m[:, c])[0]
        for r in elim:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def gf2_inverse(mat: np.ndarray) -> np.ndarray:
    a = (np.asarray(mat, dtype=np.uint8) & 1).copy()
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    aug = np.concatenate([a, np.eye(n, dtype=np.uint8)], axis=1)
    for c in range(n):
        pivots = np.nonzero(aug[c:, c])[0]
        if pivots.size == 0:
            raise ValueError("matrix is singular over GF(2)")
        p = c + int(pivots[0])
        aug[[c, p]] = aug[[p, c]]
        for r in np.nonzero(aug[:, c])[0]:
            if r != c:
                aug[r] ^= aug[c]
    return aug[:, n:].copy()


@dataclass(frozen=True)
class AffineMap:
    """x -> Ax + b with A invertible over GF(2)."""

    n: int
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        a = (np.asarray(self.a, dtype=np.uint8) & 1).copy()
        b = (np.asarray(self.b, dtype=np.uint8) & 1).copy()
        if a.shape != (self.n, self.n):
            raise ValueError(f"A must be {self.n}x{self.n}")
        if b.shape != (self.n,):
            raise ValueError(f"b must have length {self.n}")
        if gf2_rank(a) != self.n:
            raise ValueError("A is not invertible over GF(2)")
        object.__setattr__(self, "a", _frozen(a))
        object.__setattr__(self, "b", _frozen(b))

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(n, np.eye(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    def inverse(self) -> "AffineMap":
        """Map m' with apply_affine(apply_affine(f, m), m') == f."""
        inv = gf2_inverse(self.a)
        return AffineMap(self.n, inv, (inv @ self.b) % 2)

    def point_permutation(self) -> np.ndarray:
        """Index permutation p with p[i] = encode(A * decode(i) + b)."""
        n = self.n
        idx = np.arange(1 << n, dtype=np.int64)
        x = ((idx[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)
        y = (x @ self.a.T.astype(np.int64) + self.b.astype(np.int64)) % 2
        return y @ (1 << np.arange(n, dtype=np.int64))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineMap):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.a, other.a)
            and np.array_equal(self.b, other.b)
        )


@dataclass(frozen=True)
class WalshSpectrum:
    """The 2^n signed Walsh coefficients of a function, indexed by mask."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int32).copy()
        if vals.shape != (1 << self.n,):
            raise ValueError("spectrum length mismatch")
        object.__setattr__(self, "values", _frozen(vals))

    def max_abs(self) -> int:
        return int(np.abs(self.values).max())


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def from_anf(anf: AnfTermSet) -> TruthTable:
    """Evaluate an ANF at every point of GF(2)^n."""
    n = anf.n
    idx = np.arange(1 << n, dtype=np.int64)
    bits = np.zeros(1 << n, dtype=np.uint8)
    for term in anf.terms:
        if not term:
            bits ^= 1
            continue
        mask = 0
        for v in term:
            mask |= 1 << (v - 1)
        bits ^= ((idx & mask) == mask).astype(np.uint8)
    return TruthTable(n, bits)


def _moebius(bits: np.ndarray) -> np.ndarray:
    """Binary Moebius transform (an involution), XOR butterfly in place."""
    a = bits.copy()
    size = a.size
    h = 1
    while h < size:
        v = a.reshape(size // (2 * h), 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h *= 2
    return a


def to_anf(f: TruthTable) -> AnfTermSet:
    coeffs = _moebius(f.bits)
    terms = []
    for mask in np.nonzero(coeffs)[0]:
        m = int(mask)
        terms.append([j + 1 for j in range(f.n) if (m >> j) & 1])
    return AnfTermSet(f.n, terms)


def degree(f: TruthTable) -> int:
    """Algebraic degree; 0 for the two constant functions."""
    coeffs = _moebius(f.bits)
    masks = np.nonzero(coeffs)[0]
    if masks.size == 0:
        return 0
    return int(np.bitwise_count(masks.astype(np.uint64)).max())


def distance(f: TruthTable, g: TruthTable) -> int:
    if f.n != g.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {g.n}")
    return int((f.bits ^ g.bits).sum())


def fwht(f: TruthTable) -> WalshSpectrum:
    """values[a] = sum_x (-1)^(f(x) + a.x), by the in-place butterfly."""
    w = 1 - 2 * f.bits.astype(np.int32)
    size = w.size
    h = 1
    while h < size:
        v = w.reshape(size // (2 * h), 2, h)
        top = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        v[:, 1, :] = top - v[:, 1, :]
        h *= 2
    return WalshSpectrum(f.n, w)


def nonlinearity(f: TruthTable) -> int:
    """Distance to the nearest affine function: 2^(n-1) - max|W|/2."""
    return (1 << (f.n - 1)) - fwht(f).max_abs() // 2


def concat(f1: TruthTable, f2: TruthTable) -> TruthTable:
    """(n+1)-variable function equal to f1 on x_{n+1}=0 and f2 on x_{n+1}=1."""
    if f1.n != f2.n:
        raise ValueError(f"variable count mismatch: {f1.n} vs {f2.n}")
    return TruthTable(f1.n + 1, np.concatenate([f1.bits, f2.bits]))


def apply_affine(f: TruthTable, m: AffineMap) -> TruthTable:
    """Substitution result(x) = f(Ax + b)."""
    if f.n != m.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {m.n}")
    return TruthTable(f.n, f.bits[m.point_permutation()])


def random_affine(n: int, seed: int) -> AffineMap:
    """Uniform invertible A (rejection sampling) and uniform b, seed-deterministic."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    while True:
        a = rng.integers(0, 2, size=(n, n), dtype=np.uint8)
        if gf2_rank(a) == n:
            break
    b = rng.integers(0, 2, size=n, dtype=np.uint8)
    return AffineMap(n, a, b)
