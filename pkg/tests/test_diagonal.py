"""Diagonal construction: sizes, Sidonness, integer export."""

import random

import pytest

from sidonlab.diagonal import (
    build_diagonal,
    enumerate_product_group,
    proof_identity_check,
    to_cyclic_integers,
)
from sidonlab.errors import ExtensionFieldUnsupportedError
from sidonlab.field import FiniteField
from sidonlab.groups import check_group_laws, group_structure, zn_group
from sidonlab.sidon import brute_force_sidon, verify_sidon


def prime_powers_up_to(limit):
    out = []
    for p in range(2, limit + 1):
        if all(p % d for d in range(2, p)):
            q = p
            m = 1
            while q <= limit:
                out.append((p, m, q))
                q *= p
                m += 1
    return sorted(out, key=lambda t: t[2])


def test_sizes_and_sidon_all_prime_powers_up_to_121():
    for p, m, q in prime_powers_up_to(121):
        fld = FiniteField(p, m)
        group, S = build_diagonal(fld)
        assert len(S) == q - 1
        rep = verify_sidon(S, group)
        assert rep.is_sidon, f"diagonal set not Sidon for q={q}"


def test_group_order_and_laws():
    rng = random.Random(8)
    for p, m in [(5, 1), (2, 2), (3, 2), (7, 1)]:
        fld = FiniteField(p, m)
        group, _ = build_diagonal(fld)
        els = enumerate_product_group(fld)
        assert len(els) == fld.q * (fld.q - 1)
        assert len({group.encode(e) for e in els}) == len(els)
        assert check_group_laws(group, els, rng)


def test_ambient_group_cyclic_for_prime_fields():
    for p in (3, 5, 7):
        fld = FiniteField(p)
        group, _ = build_diagonal(fld)
        els = enumerate_product_group(fld)
        factors, cyclic = group_structure(els, group)
        assert cyclic and factors == (p * (p - 1),)
    # extension field: additive part is (Z_p)^m, never cyclic for m > 1
    fld = FiniteField(2, 2)
    group, _ = build_diagonal(fld)
    els = enumerate_product_group(fld)
    factors, cyclic = group_structure(els, group)
    assert not cyclic
    prod = 1
    for d in factors:
        prod *= d
    assert prod == 12


def test_proof_identity_exhaustive_small():
    for p, m in [(5, 1), (7, 1), (3, 2), (13, 1)]:
        fld = FiniteField(p, m)
        nonzero = [x for x in fld.elements() if not x.is_zero()]
        for x1 in nonzero:
            for x2 in nonzero:
                for x3 in nonzero:
                    for x4 in nonzero:
                        assert proof_identity_check(fld, x1, x2, x3, x4)


def test_integer_export_q5_frozen():
    fld = FiniteField(5)
    _, S = build_diagonal(fld)
    # oracle: dlogs of 1,2,3,4 base 2 are 0,1,3,2; CRT by hand gives
    # (0 mod 4, 1 mod 5) -> 16, (1,2) -> 17, (3,3) -> 3, (2,4) -> 14
    assert to_cyclic_integers(fld, S) == [3, 14, 16, 17]


def test_integer_export_crt_consistency():
    for p in (3, 5, 7, 11, 13):
        fld = FiniteField(p)
        _, S = build_diagonal(fld)
        g = fld.primitive_root().coeffs[0]
        residues = to_cyclic_integers(fld, S)
        assert len(residues) == p - 1
        n_mod = p * (p - 1)
        for n in residues:
            x = n % p
            assert x != 0
            assert pow(g, n % (p - 1), p) == x
            assert 0 <= n < n_mod


def test_integer_export_is_sidon_in_zn():
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
        fld = FiniteField(p)
        _, S = build_diagonal(fld)
        n = p * (p - 1)
        rep = brute_force_sidon(to_cyclic_integers(fld, S), zn_group(n))
        assert rep.is_sidon, f"integer image not Sidon for q={p}"


def test_integer_export_rejects_extension_fields():
    fld = FiniteField(2, 2)
    _, S = build_diagonal(fld)
    with pytest.raises(ExtensionFieldUnsupportedError):
        to_cyclic_integers(fld, S)
