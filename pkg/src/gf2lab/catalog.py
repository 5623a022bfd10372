"""Known power-map families with differential uniformity four.

Four families are cataloged: Gold (2^s + 1), Kasami (2^(2s) - 2^s + 1), the
field inverse (2^n - 2, with 0 mapped to 0), and the degree-4k family
2^(2k) + 2^k + 1.  Each entry carries its applicability conditions and, when
measured, the exact spectrum summary computed by :mod:`gf2lab.spectra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .field import FieldSpec, field_make
from .spectra import FunctionTable, SpectrumSummary, build_lut, classify

__all__ = [
    "FamilySpec",
    "CatalogEntry",
    "PermutationCheck",
    "family_exponent",
    "permutation_check",
    "inverse_map",
    "catalog_table",
]

FAMILIES = ("gold", "kasami", "inverse", "dobbertin")


@dataclass(frozen=True)
class FamilySpec:
    """One instantiated family member: tag, field degree, exponent, parameter."""

    family: str
    n: int
    d: int
    param: int | None = None


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    """A catalog row: family instance, side conditions, prediction, measurement."""

    family: FamilySpec
    conditions_met: bool
    expected_delta: int | None
    expected_permutation: bool | None
    summary: SpectrumSummary


class PermutationCheck(NamedTuple):
    gcd: int
    is_permutation: bool


def family_exponent(family: str, *, n: int | None = None,
                    s: int | None = None, k: int | None = None) -> FamilySpec:
    """Build a FamilySpec from a family tag and its parameters.

    gold / kasami need n and s; inverse needs n; dobbertin needs k (n = 4k).
    Raises ValueError on missing or inconsistent parameters.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == "gold":
        if n is None or s is None or s < 1:
            raise ValueError("gold requires degree n and parameter s >= 1")
        return FamilySpec("gold", n, (1 << s) + 1, s)
    if family == "kasami":
        if n is None or s is None or s < 1:
            raise ValueError("kasami requires degree n and parameter s >= 1")
        return FamilySpec("kasami", n, (1 << (2 * s)) - (1 << s) + 1, s)
    if family == "inverse":
        if n is None or n < 2:
            raise ValueError("inverse requires degree n >= 2")
        return FamilySpec("inverse", n, (1 << n) - 2, None)
    # dobbertin
    if k is None or k < 1:
        raise ValueError("dobbertin requires parameter k >= 1")
    if n is not None and n != 4 * k:
        raise ValueError(f"dobbertin with k={k} lives on degree {4 * k}, not {n}")
    return FamilySpec("dobbertin", 4 * k, (1 << (2 * k)) + (1 << k) + 1, k)


def conditions_met(fs: FamilySpec) -> bool:
    """Side conditions under which the family is predicted delta-4 and bijective.

    gold / kasami: n = 2m with m odd and gcd(n, s) = 2; inverse: n even;
    dobbertin: k odd.
    """
    if fs.family in ("gold", "kasami"):
        return fs.n % 2 == 0 and (fs.n // 2) % 2 == 1 and gcd(fs.n, fs.param) == 2
    if fs.family == "inverse":
        return fs.n % 2 == 0
    return fs.param % 2 == 1


def permutation_check(n: int, d: int) -> PermutationCheck:
    """Whether x^d permutes GF(2^n): gcd(d, 2^n - 1) = 1, with the gcd witness."""
    if d < 1:
        raise ValueError("exponent must be >= 1")
    g = gcd(d, (1 << n) - 1)
    return PermutationCheck(g, g == 1)


def inverse_map(s: FieldSpec) -> FunctionTable:
    """The inversion table with the 0 -> 0 convention; equals x^(2^n - 2)."""
    return build_lut(s, s.size - 2)


def _desk_rows(max_n: int, deep: bool) -> list[FamilySpec]:
    rows: list[FamilySpec] = []
    if max_n >= 6:
        rows.append(family_exponent("gold", n=6, s=2))
        rows.append(family_exponent("kasami", n=6, s=2))
    if deep and max_n >= 10:
        rows.append(family_exponent("gold", n=10, s=4))
        rows.append(family_exponent("kasami", n=10, s=4))
    for n in (4, 6, 8, 10, 12):
        if n <= max_n:
            rows.append(family_exponent("inverse", n=n))
    for k in (1, 2, 3):
        if 4 * k <= max_n:
            rows.append(family_exponent("dobbertin", k=k))
    return rows


def catalog_table(max_n: int = 12, *, deep: bool = False,
                  threads: int = 1) -> list[CatalogEntry]:
    """Instantiate and measure every catalog row realizable at degree <= max_n.

    Every row gets a full exact spectrum sweep; conditioned rows also carry
    the predicted (delta=4, permutation) pair for comparison.
    """
    if max_n > 16:
        raise ValueError("catalog_table is limited to max_n <= 16")
    entries = []
    for fs in _desk_rows(max_n, deep):
        spec = field_make(fs.n)
        table = build_lut(spec, fs.d)
        summary = classify(table, threads=threads)
        ok = conditions_met(fs)
        entries.append(CatalogEntry(
            family=fs,
            conditions_met=ok,
            expected_delta=4 if ok else None,
            expected_permutation=True if ok else None,
            summary=summary,
        ))
    return entries
