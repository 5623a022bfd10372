"""Difference distribution tables, Walsh spectra, and classification flags.

All sweeps operate on a :class:`FunctionTable` (a full lookup table of a map
GF(2^n) -> GF(2^n)) and are exact: counts and transform coefficients are
integers, never floats.  The Walsh sweep runs one fast Walsh-Hadamard
transform per component b, which brings the total cost to about n * 2^(2n)
bit operations instead of the 2^(3n) of the naive triple sum.

Sweeps accept a ``threads`` argument.  Work is split into fixed chunks that
are merged in chunk order, so results are bit-identical for any thread
count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .field import FieldSpec, _mul, trace_abs

__all__ = [
    "FunctionTable",
    "DifferenceRow",
    "WalshSpectrum",
    "SpectrumSummary",
    "build_lut",
    "lut_from_values",
    "differential_uniformity",
    "ddt_rows",
    "walsh_spectrum",
    "walsh_row",
    "nonlinearity",
    "classify",
    "sampled_delta_lower_bound",
]

# Above this degree a full sweep must be requested explicitly.
DEEP_DEGREE = 18
# Full DDT / Walsh tables are materialized in memory only up to this degree.
TABLE_DEGREE = 12


@dataclass(frozen=True, eq=False)
class FunctionTable:
    """A function GF(2^n) -> GF(2^n) as an exhaustive lookup table.

    ``lut[i]`` is the image of the element with integer encoding i; the
    array has length 2^n and dtype int64.
    """

    spec: FieldSpec
    lut: np.ndarray


@dataclass(frozen=True, eq=False)
class DifferenceRow:
    """One row of the difference distribution table.

    ``counts[b]`` is the number of x with f(x + a) + f(x) = b for the fixed
    nonzero difference a.  Every count is even (solutions come in pairs
    {x, x + a}) and the row sums to 2^n.
    """

    a: int
    counts: np.ndarray


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """Result of a full Walsh sweep.

    Attributes
    ----------
    max_abs : int
        max |f^(a,b)| over all a and all b != 0.
    histogram : Counter
        Multiplicity of each coefficient value over all a and b != 0; the
        multiplicities sum to 2^n * (2^n - 1).
    table : numpy.ndarray or None
        Full coefficient table with table[b-1, a] = f^(a,b), kept only when
        the field is small enough (or explicitly requested).
    """

    max_abs: int
    histogram: Counter
    table: np.ndarray | None


@dataclass(frozen=True, eq=False)
class SpectrumSummary:
    """Aggregate analysis results for one function.

    ``is_ab`` is None for even n: the almost-bent property is defined only
    on odd-degree fields.
    """

    delta: int
    nl: int
    walsh_max: int
    lam: Counter
    is_permutation: bool
    is_apn: bool
    is_ab: bool | None


# ---------------------------------------------------------------------------
# lookup-table construction (vectorized square-and-multiply)
# ---------------------------------------------------------------------------

def _vec_mulmod(a: np.ndarray, b: np.ndarray, n: int, poly: int) -> np.ndarray:
    """Elementwise carry-less product reduced modulo poly.

    Operands are int64 arrays of n-bit values; the unreduced product has at
    most 2n - 1 <= 47 bits, which fits comfortably in int64.
    """
    acc = np.zeros_like(a)
    for i in range(n):
        acc ^= (a << i) * ((b >> i) & 1)
    for j in range(2 * n - 2, n - 1, -1):
        acc ^= (poly << (j - n)) * ((acc >> j) & 1)
    return acc


def build_lut(s: FieldSpec, d: int) -> FunctionTable:
    """Materialize the power map x -> x^d as a FunctionTable.

    With the 0^0 = 1 convention, d = 0 yields the constant-1 table; any
    d > 0 maps 0 to 0.
    """
    if d < 0:
        raise ValueError("exponent must be non-negative")
    x = np.arange(s.size, dtype=np.int64)
    acc = np.ones(s.size, dtype=np.int64)
    for bit in range(d.bit_length() - 1, -1, -1):
        acc = _vec_mulmod(acc, acc, s.n, s.poly)
        if (d >> bit) & 1:
            acc = _vec_mulmod(acc, x, s.n, s.poly)
    return FunctionTable(s, acc)


def lut_from_values(s: FieldSpec, values) -> FunctionTable:
    """Wrap an explicit value sequence as a FunctionTable, validating it."""
    lut = np.asarray(values, dtype=np.int64)
    if lut.shape != (s.size,):
        raise ValueError(f"lookup table must have exactly {s.size} entries, got {lut.size}")
    if lut.size and (lut.min() < 0 or lut.max() >= s.size):
        raise ValueError("lookup table entry out of range")
    return FunctionTable(s, lut)


# ---------------------------------------------------------------------------
# difference distribution
# ---------------------------------------------------------------------------

def _chunk_ranges(lo: int, hi: int, parts: int) -> list[range]:
    parts = max(1, min(parts, hi - lo))
    step = (hi - lo + parts - 1) // parts
    return [range(i, min(i + step, hi)) for i in range(lo, hi, step)]


def _require_desk_scale(s: FieldSpec, deep: bool) -> None:
    if s.n >= DEEP_DEGREE and not deep:
        raise ValueError(
            f"full sweep over GF(2^{s.n}) refused without deep=True; "
            "use the sampled lower-bound helpers instead")


def ddt_rows(f: FunctionTable) -> Iterator[DifferenceRow]:
    """Stream the difference distribution table one row (one a != 0) at a time."""
    lut = f.lut
    idx = np.arange(f.spec.size)
    for a in range(1, f.spec.size):
        diff = lut ^ lut[idx ^ a]
        yield DifferenceRow(a, np.bincount(diff, minlength=f.spec.size))


def differential_uniformity(
    f: FunctionTable,
    *,
    threads: int = 1,
    want_table: bool | None = None,
    deep: bool = False,
) -> tuple[int, np.ndarray | None]:
    """Differential uniformity and (optionally) the full DDT.

    Returns
    -------
    (delta, table)
        delta is max over a != 0 and all b of |{x : f(x+a)+f(x) = b}|.
        table[a-1, b] holds the counts when materialized (by default only
        for n <= 12), else None.

    The sweep is one pass per difference a, accumulating the counts of
    f(x) + f(x+a) with a single bincount.
    """
    s = f.spec
    _require_desk_scale(s, deep)
    if want_table is None:
        want_table = s.n <= TABLE_DEGREE
    lut = f.lut
    size = s.size
    idx = np.arange(size)

    row_dtype = np.uint16 if s.n <= TABLE_DEGREE else np.uint32

    def one_chunk(rng: range) -> tuple[int, np.ndarray | None]:
        best = 0
        rows = np.empty((len(rng), size), dtype=row_dtype) if want_table else None
        for i, a in enumerate(rng):
            counts = np.bincount(lut ^ lut[idx ^ a], minlength=size)
            best = max(best, int(counts.max()))
            if rows is not None:
                rows[i] = counts
        return best, rows

    chunks = _chunk_ranges(1, size, max(1, threads) * 4)
    if threads <= 1:
        parts = [one_chunk(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(one_chunk, chunks))
    delta = max(p[0] for p in parts)
    table = np.concatenate([p[1] for p in parts]) if want_table else None
    return delta, table


def sampled_delta_lower_bound(
    f: FunctionTable, samples: int, seed: int = 0
) -> tuple[int, int]:
    """Lower bound on delta from a uniform sample of differences a.

    Returns (bound, samples_used).  The value is only a lower bound: a full
    sweep may find a larger count on an unsampled a.
    """
    rng = np.random.default_rng(seed)
    size = f.spec.size
    lut = f.lut
    idx = np.arange(size)
    best = 0
    picks = rng.integers(1, size, size=samples)
    for a in picks:
        best = max(best, int(np.bincount(lut ^ lut[idx ^ int(a)], minlength=size).max()))
    return best, samples


# ---------------------------------------------------------------------------
# Walsh spectrum
# ---------------------------------------------------------------------------

def _trace_masks(s: FieldSpec) -> np.ndarray:
    """masks[a] = bitmask m with parity(m & y) = Tr(a*y) for all y.

    Built from the trace bilinear form: bit j of masks[2^i] is
    Tr(x^(i+j)), and masks is completed by linearity over the bits of a.
    """
    n = s.n
    # Tr(x^m) for m = 0 .. 2n-2
    tr_of_xm = []
    xm = 1
    for _ in range(2 * n - 1):
        tr_of_xm.append(trace_abs(s, xm))
        xm = _mul(n, s.poly, xm, 0b10)
    basis = np.zeros(n, dtype=np.int64)
    for i in range(n):
        m = 0
        for j in range(n):
            m |= tr_of_xm[i + j] << j
        basis[i] = m
    masks = np.zeros(s.size, dtype=np.int64)
    for i in range(n):
        step = 1 << i
        masks[step : 2 * step] = masks[:step] ^ basis[i]
    return masks


def _fwht_rows(mat: np.ndarray) -> np.ndarray:
    """In-place-style fast Walsh-Hadamard transform along the last axis."""
    rows, size = mat.shape
    h = 1
    while h < size:
        m = mat.reshape(rows, size // (2 * h), 2, h)
        top = m[:, :, 0, :] + m[:, :, 1, :]
        bot = m[:, :, 0, :] - m[:, :, 1, :]
        mat = np.stack((top, bot), axis=2).reshape(rows, size)
        h *= 2
    return mat


def _walsh_block(f: FunctionTable, masks: np.ndarray, bs: np.ndarray) -> np.ndarray:
    """Rows f^(., b) for the given array of b values (all coefficients per row)."""
    # sign table: (-1)^Tr(b * f(x)) via the mask parity trick
    prods = masks[bs][:, None] & f.lut[None, :]
    bits = (np.bitwise_count(prods.astype(np.uint64)) & 1).astype(np.int32)
    signs = 1 - 2 * bits
    transformed = _fwht_rows(signs)
    # transform index u corresponds to the linear form parity(u & x);
    # Tr(a*x) sits at index masks[a], so reindex columns to be addressed by a
    return transformed[:, masks]


def walsh_spectrum(
    f: FunctionTable,
    *,
    threads: int = 1,
    keep_table: bool | None = None,
    deep: bool = False,
) -> WalshSpectrum:
    """Full Walsh sweep: every coefficient f^(a,b) for all a and b != 0.

    One transform of size 2^n per b; b values are processed in fixed-size
    blocks merged in order, so the histogram and maximum do not depend on
    the thread count.
    """
    s = f.spec
    _require_desk_scale(s, deep)
    if keep_table is None:
        keep_table = s.n <= TABLE_DEGREE
    masks = _trace_masks(s)
    size = s.size
    all_b = np.arange(1, size)
    block = max(1, min(4096, (1 << 22) // size))
    blocks = [all_b[i : i + block] for i in range(0, size - 1, block)]

    def one_block(bs: np.ndarray):
        rows = _walsh_block(f, masks, bs)
        vals, cnt = np.unique(rows, return_counts=True)
        return rows if keep_table else None, vals, cnt

    if threads <= 1:
        parts = [one_block(bs) for bs in blocks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(one_block, blocks))
    hist: Counter = Counter()
    for _, vals, cnt in parts:
        for v, c in zip(vals.tolist(), cnt.tolist()):
            hist[v] += c
    max_abs = max(max(v, -v) for v in hist)
    table = np.concatenate([p[0] for p in parts]) if keep_table else None
    return WalshSpectrum(max_abs, hist, table)


def walsh_row(f: FunctionTable, b: int) -> np.ndarray:
    """All coefficients f^(a, b) for one fixed b (row indexed by a)."""
    if not 0 < b < f.spec.size:
        raise ValueError("b must be a nonzero field element")
    masks = _trace_masks(f.spec)
    return _walsh_block(f, masks, np.array([b]))[0]


def walsh_coefficient_direct(f: FunctionTable, a: int, b: int) -> int:
    """Direct-definition sum over all x of (-1)^(Tr(ax) + Tr(b f(x))).

    Quadratic cost; used to cross-check the transform.
    """
    s = f.spec
    total = 0
    for x in range(s.size):
        e = trace_abs(s, _mul(s.n, s.poly, a, x)) ^ trace_abs(
            s, _mul(s.n, s.poly, b, int(f.lut[x])))
        total += 1 - 2 * e
    return total


def nonlinearity(f: FunctionTable, *, threads: int = 1, deep: bool = False) -> int:
    """2^(n-1) - max|f^|/2: distance of all components to affine functions."""
    spec = walsh_spectrum(f, threads=threads, keep_table=False, deep=deep)
    return (1 << (f.spec.n - 1)) - spec.max_abs // 2


def classify(
    f: FunctionTable, *, threads: int = 1, deep: bool = False
) -> SpectrumSummary:
    """Aggregate delta, nonlinearity, Walsh extremum, and the flag set."""
    s = f.spec
    delta, _ = differential_uniformity(f, threads=threads, want_table=False, deep=deep)
    ws = walsh_spectrum(f, threads=threads, keep_table=False, deep=deep)
    nl = (1 << (s.n - 1)) - ws.max_abs // 2
    is_perm = bool(np.bincount(f.lut, minlength=s.size).all())
    if s.n % 2 == 1:
        v = 1 << ((s.n + 1) // 2)
        is_ab = set(ws.histogram) == {0, v, -v}
    else:
        is_ab = None
    return SpectrumSummary(
        delta=delta,
        nl=nl,
        walsh_max=ws.max_abs,
        lam=ws.histogram,
        is_permutation=is_perm,
        is_apn=delta == 2,
        is_ab=is_ab,
    )
