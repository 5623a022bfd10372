"""Field arithmetic: construction, axioms, traces, linearized solver."""

import random

import pytest

from gf2lab import (
    FieldConstructionError,
    FieldSpec,
    SubfieldTower,
    default_poly,
    f_add,
    f_inv,
    f_mul,
    f_pow,
    field_make,
    frobenius,
    solve_linearized,
    trace_abs,
    trace_rel,
)

# Lexicographically least irreducible polynomial per degree, frozen from an
# independent sieve over all odd encodings.
LEAST_IRREDUCIBLE = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B,
}


def test_default_poly_table():
    for n, poly in LEAST_IRREDUCIBLE.items():
        assert default_poly(n) == poly
        spec = field_make(n)
        assert spec.poly == poly
        assert spec.n == n
        assert spec.size == 1 << n
        assert spec.order == (1 << n) - 1


def test_field_make_rejects_degree_out_of_range():
    with pytest.raises(ValueError):
        field_make(1)
    with pytest.raises(ValueError):
        field_make(25)


def test_field_make_rejects_wrong_poly_degree():
    with pytest.raises(FieldConstructionError):
        field_make(4, 0xB)  # degree 3
    with pytest.raises(FieldConstructionError):
        field_make(4, 0x25)  # degree 5


def test_field_make_rejects_even_constant_term():
    with pytest.raises(FieldConstructionError, match="constant term"):
        field_make(4, 0x12)  # x^4 + x


def test_field_make_rejects_reducible_naming_factor_degree():
    # x^4 + 1 = (x + 1)^4: smallest factor has degree 1
    with pytest.raises(FieldConstructionError, match="degree 1"):
        field_make(4, 0x11)
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2: smallest factor has degree 2
    with pytest.raises(FieldConstructionError, match="degree 2"):
        field_make(4, 0x15)


def test_field_make_accepts_alternate_modulus():
    # x^8 + x^4 + x^3 + x^2 + 1 is irreducible but not the default
    spec = field_make(8, 0x11D)
    assert spec.poly == 0x11D


def test_element_range_checks():
    s = field_make(4)
    with pytest.raises(ValueError):
        f_add(s, 16, 0)
    with pytest.raises(ValueError):
        f_mul(s, 0, -1)
    with pytest.raises(ValueError):
        trace_abs(s, 100)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_field_axioms_exhaustive(n):
    s = field_make(n)
    size = s.size
    for a in range(size):
        assert f_add(s, a, 0) == a
        assert f_mul(s, a, 1) == a
        assert f_mul(s, a, 0) == 0
        assert f_add(s, a, a) == 0  # characteristic 2
        for b in range(size):
            assert f_add(s, a, b) == f_add(s, b, a)
            assert f_mul(s, a, b) == f_mul(s, b, a)
            for c in range(size):
                assert f_mul(s, a, f_mul(s, b, c)) == f_mul(s, f_mul(s, a, b), c)
                assert (f_mul(s, a, f_add(s, b, c))
                        == f_add(s, f_mul(s, a, b), f_mul(s, a, c)))


def test_field_axioms_random_large():
    rng = random.Random(2024)
    for n in range(5, 17):
        s = field_make(n)
        for _ in range(900):
            a, b, c = (rng.randrange(s.size) for _ in range(3))
            assert f_mul(s, a, f_mul(s, b, c)) == f_mul(s, f_mul(s, a, b), c)
            assert f_mul(s, a, b) == f_mul(s, b, a)
            assert (f_mul(s, a, f_add(s, b, c))
                    == f_add(s, f_mul(s, a, b), f_mul(s, a, c)))


def test_pow_conventions():
    s = field_make(6)
    assert f_pow(s, 0, 0) == 1
    assert f_pow(s, 0, 5) == 0
    assert f_pow(s, 13, 0) == 1
    for a in range(1, s.size):
        assert f_pow(s, a, s.order) == 1  # Lagrange
        assert f_pow(s, a, s.size) == a   # x^(2^n) = x
    with pytest.raises(ValueError):
        f_pow(s, 3, -1)


def test_pow_matches_repeated_multiplication():
    s = field_make(5)
    for a in range(s.size):
        acc = 1
        for d in range(10):
            assert f_pow(s, a, d) == acc
            acc = f_mul(s, acc, a)


def test_inverse():
    s = field_make(6)
    for a in range(1, s.size):
        inv = f_inv(s, a)
        assert f_mul(s, a, inv) == 1
    with pytest.raises(ValueError):
        f_inv(s, 0)


def test_frobenius_is_field_automorphism():
    s = field_make(7)
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.randrange(s.size), rng.randrange(s.size)
        # additive and multiplicative over a random power
        e = rng.randrange(0, 15)
        assert frobenius(s, a ^ b, e) == frobenius(s, a, e) ^ frobenius(s, b, e)
        assert (frobenius(s, f_mul(s, a, b), e)
                == f_mul(s, frobenius(s, a, e), frobenius(s, b, e)))
        assert frobenius(s, a, e) == f_pow(s, a, 1 << e)
    # period n, and exponents reduce mod n
    for a in range(s.size):
        assert frobenius(s, a, s.n) == a
        assert frobenius(s, a, s.n + 3) == frobenius(s, a, 3)
    with pytest.raises(ValueError):
        frobenius(s, 1, -2)


@pytest.mark.parametrize("n", range(2, 11))
def test_trace_properties(n):
    s = field_make(n)
    ones = 0
    for a in range(s.size):
        t = trace_abs(s, a)
        assert t in (0, 1)
        ones += t
        assert trace_abs(s, f_mul(s, a, a)) == t  # Frobenius invariance
    assert ones == s.size // 2  # the trace is balanced
    rng = random.Random(n)
    for _ in range(100):
        a, b = rng.randrange(s.size), rng.randrange(s.size)
        assert trace_abs(s, a ^ b) == trace_abs(s, a) ^ trace_abs(s, b)


def _subfield_trace(s, y, k):
    """Absolute trace of the GF(2^k) subfield, for y already lying in it."""
    acc = 0
    for i in range(k):
        acc ^= frobenius(s, y, i)
    return acc


@pytest.mark.parametrize("n,k", [(6, 1), (6, 2), (6, 3), (12, 2), (12, 3),
                                 (12, 4), (12, 6), (8, 2), (8, 4)])
def test_trace_rel_transitivity(n, k):
    s = field_make(n)
    tower = SubfieldTower(k, n // k)
    rng = random.Random(n * 100 + k)
    for a in [rng.randrange(s.size) for _ in range(80)] + [0, 1, s.size - 1]:
        y = trace_rel(s, tower, a)
        # lands in the subfield: fixed by the k-fold Frobenius
        assert frobenius(s, y, k) == y
        # composing with the subfield's own trace gives the absolute trace
        assert _subfield_trace(s, y, k) == trace_abs(s, a)


def test_trace_rel_tower_mismatch():
    s = field_make(6)
    with pytest.raises(ValueError):
        trace_rel(s, SubfieldTower(4, 2), 1)
    with pytest.raises(ValueError):
        trace_rel(s, SubfieldTower(0, 6), 1)


def test_trace_rel_full_tower_is_identity():
    s = field_make(6)
    for a in range(s.size):
        assert trace_rel(s, SubfieldTower(6, 1), a) == a
        assert trace_rel(s, SubfieldTower(1, 6), a) == trace_abs(s, a)


def test_solve_linearized_artin_schreier():
    # x^2 + x = c is solvable exactly when Tr(c) = 0, with two roots
    for n in (3, 4, 5, 6):
        s = field_make(n)
        for c in range(s.size):
            sols = solve_linearized(s, [(1, 1), (1, 0)], c)
            if trace_abs(s, c) == 0:
                assert len(sols) == 2
                x = min(sols)
                assert sols == {x, x ^ 1}
            else:
                assert sols == set()


@pytest.mark.parametrize("n", [4, 5, 6])
def test_solve_linearized_against_brute_force(n):
    s = field_make(n)
    rng = random.Random(31 * n)
    for _ in range(25):
        nterms = rng.randrange(1, 4)
        coeffs = [(rng.randrange(s.size), rng.randrange(s.n)) for _ in range(nterms)]
        rhs = rng.randrange(s.size)

        def image(x):
            acc = 0
            for c, e in coeffs:
                acc ^= f_mul(s, c, frobenius(s, x, e))
            return acc

        expected = {x for x in range(s.size) if image(x) == rhs}
        got = solve_linearized(s, coeffs, rhs)
        assert got == expected
        # solution sets of affine linear systems are empty or cosets
        assert len(got) == 0 or (len(got) & (len(got) - 1)) == 0


def test_solve_linearized_substitution_large():
    s = field_make(10)
    rng = random.Random(99)
    nonempty = 0
    for _ in range(40):
        coeffs = [(rng.randrange(1, s.size), rng.randrange(s.n)) for _ in range(3)]
        rhs = rng.randrange(s.size)
        sols = solve_linearized(s, coeffs, rhs)
        nonempty += bool(sols)
        for x in sols:
            acc = 0
            for c, e in coeffs:
                acc ^= f_mul(s, c, frobenius(s, x, e))
            assert acc == rhs
    assert nonempty > 0  # the sweep actually exercised the substitution


def test_solve_linearized_validates_inputs():
    s = field_make(4)
    with pytest.raises(ValueError):
        solve_linearized(s, [(1, 1)], 16)
    with pytest.raises(ValueError):
        solve_linearized(s, [(99, 0)], 1)


def test_spec_is_hashable_value_type():
    assert field_make(4) == FieldSpec(4, 0x13)
    assert len({field_make(4), FieldSpec(4, 0x13), field_make(5)}) == 2
