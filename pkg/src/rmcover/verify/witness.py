"""Search for a 7-variable function attaining second-order nonlinearity 40.

Any f in B7 splits as f1 || f2, and nl2(f1 || (f2+q0)) is bounded above by
floor(q0) = min over forms q of nl(f1+q) + nl(f2+q^q0).  The whole family
of quadratic shifts q0 is triaged at once: with per-level indicators
I_v[q] = [nl(f_i+q) = v], the number of q with nl(f1+q) = u and
nl(f2+q^q0) = v is an XOR convolution, diagonalized by the Walsh
transform, so every floor comes out of a handful of length-32768
transforms.  Shifts whose floor reaches 40 become candidates and are
certified by a fresh full 2^21-coset enumeration; the certificate never
trusts the triage.

Structured candidates come first: concatenations of the fixture
representatives with quadratic offsets, then affine twists of g0, then
random cubic halves.  The candidate stream is deterministic for a fixed
seed, so "first witness" is well defined regardless of internal
parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np

from ..core import (
    AnfTermSet,
    TruthTable,
    apply_affine,
    concat,
    from_anf,
    random_affine,
    to_anf,
)
from .. import secondorder as so
from .fixtures import FUN_NAMES, fixture_table

TARGET = 40
_MAX_TOTAL = 57  # sentinel above any reachable pair sum (28 + 28)


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    table: TruthTable | None
    anf_text: str | None
    value: int | None
    best_value: int
    max_value_seen: int
    candidates_tried: int
    evaluations: int
    source: str


def _fwht_i64(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.int64, copy=True)
    size = a.size
    h = 1
    while h < size:
        v = a.reshape(size // (2 * h), 2, h)
        top = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        v[:, 1, :] = top - v[:, 1, :]
        h *= 2
    return a


def _shift_floors(a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """floor[q0] = min over q of a1[q] + a2[q ^ q0], for every shift q0."""
    size = a1.size
    t1 = {int(v): _fwht_i64(a1 == v) for v in np.unique(a1)}
    t2 = {int(v): _fwht_i64(a2 == v) for v in np.unique(a2)}
    floors = np.full(size, _MAX_TOTAL, dtype=np.int64)
    for s in sorted({u + v for u in t1 for v in t2}):
        acc = np.zeros(size, dtype=np.int64)
        for u, tu in t1.items():
            if s - u in t2:
                acc += tu * t2[s - u]
        present = (_fwht_i64(acc) // size) > 0
        floors = np.where(present & (floors > s), s, floors)
    return floors


def _iter_families(seed: int, stage_iterations: int, families: tuple):
    """Deterministic family stream: (label, f1_table, f2_base_table)."""
    if "fixtures" in families:
        names = ("g0",) + FUN_NAMES
        for a, b in combinations_with_replacement(names, 2):
            yield f"fixtures:{a}||{b}+q", fixture_table(a), fixture_table(b)
    if "affine" in families:
        g0 = fixture_table("g0")
        for t in range(stage_iterations):
            m = random_affine(6, seed * 1000003 + t)
            yield f"affine:g0||g0.A+q[{t}]", g0, apply_affine(g0, m)
    if "cubic" in families:
        rng = np.random.default_rng(seed)
        terms_pool = list(combinations(range(1, 7), 3))
        for t in range(stage_iterations):
            picks = rng.random(len(terms_pool)) < 0.5
            f1 = from_anf(AnfTermSet(6, [tm for tm, p in zip(terms_pool, picks) if p]))
            yield f"cubic:random[{t}]||same+q", f1, f1


def search_witness(
    budget: int = 16,
    seed: int = 1,
    threads: int = 1,
    stage_iterations: int = 24,
    families: tuple = ("fixtures", "affine", "cubic"),
) -> WitnessResult:
    """Find f in B7 with nl2(f) = 40, certified by fresh full enumeration.

    ``budget`` caps the number of full 2^21-coset certifications.  If it
    runs out, or the candidate stream ends, without a certified 40, the
    best-certified function found so far is returned with ``found=False``
    (never an exception).
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")

    evaluations = 0
    candidates = 0
    max_seen = 0
    best: tuple[int, TruthTable, str] | None = None
    fallback: tuple[int, int, TruthTable, str] | None = None  # (floor, q0, table, label)
    table_cache: dict[str, np.ndarray] = {}

    def coset_table(f: TruthTable) -> np.ndarray:
        key = f.to_hex()
        if key not in table_cache:
            table_cache[key] = so.coset_nl_table(f, threads=threads)
        return table_cache[key]

    def certify(f: TruthTable) -> int:
        nonlocal evaluations, max_seen
        evaluations += 1
        value = so.nl2(f, threads=threads, fresh=True)
        max_seen = max(max_seen, value)
        return value

    def shifted(f2_base: TruthTable, q0: int) -> TruthTable:
        return TruthTable(6, f2_base.bits ^ so.quad_table(so.QuadraticForm(6, q0)).bits)

    for label, f1, f2_base in _iter_families(seed, stage_iterations, families):
        floors = _shift_floors(coset_table(f1), coset_table(f2_base))
        hits = np.nonzero(floors >= TARGET)[0]
        if hits.size == 0:
            q0 = int(np.argmax(floors))
            peak = int(floors[q0])
            if fallback is None or peak > fallback[0]:
                fallback = (peak, q0, concat(f1, shifted(f2_base, q0)), label)
            continue
        for q0 in hits:
            if evaluations >= budget:
                break
            candidates += 1
            f = concat(f1, shifted(f2_base, int(q0)))
            value = certify(f)
            if value == TARGET:
                return WitnessResult(
                    found=True,
                    table=f,
                    anf_text=to_anf(f).format(),
                    value=value,
                    best_value=value,
                    max_value_seen=max_seen,
                    candidates_tried=candidates,
                    evaluations=evaluations,
                    source=label,
                )
            if best is None or value > best[0]:
                best = (value, f, label)
        if evaluations >= budget:
            break

    if best is None and fallback is not None and evaluations < budget:
        candidates += 1
        value = certify(fallback[2])
        best = (value, fallback[2], fallback[3])

    return WitnessResult(
        found=False,
        table=best[1] if best else None,
        anf_text=to_anf(best[1]).format() if best else None,
        value=best[0] if best else None,
        best_value=best[0] if best else 0,
        max_value_seen=max_seen,
        candidates_tried=candidates,
        evaluations=evaluations,
        source=best[2] if best else "none",
    )
