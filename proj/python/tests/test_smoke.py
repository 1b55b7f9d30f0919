from fractions import Fraction
from math import gcd

import pytest

import arithid


def test_reference_functions():
    assert arithid.phi(12) == 4
    assert arithid.tau(12) == 6
    assert arithid.mu(30) == -1
    assert arithid.pillai(12) == 40
    assert arithid.jordan(2, 6) == 24
    assert arithid.mertens(10) == -1
    assert arithid.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert arithid.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert arithid.gcd(1071, 462) == 21


def test_formulas():
    assert arithid.phi_formula(5, "res1") == 4
    assert arithid.phi_formula(6, "res3") == 2
    approx = arithid.phi_formula(6, "fourier")
    assert approx.nearest == 2 and approx.residual < 1e-9
    assert int(arithid.tau_formula(12, "toto")) == 6
    assert arithid.pillai_formula(12, "padic_product") == Fraction(40)
    assert arithid.menon_sum(12) == 24
    assert arithid.mobius_sum(5, "floor_sum") == 1
    assert arithid.lemma(6, "phi_mult", 4) == (8, 8)


def test_gcd_via_floor_against_math_gcd():
    for n in range(1, 40):
        for k in range(1, 3 * n + 1):
            assert arithid.gcd_via_floor(k, n) == gcd(k, n)


def test_errors():
    with pytest.raises(arithid.DegenerateDomain):
        arithid.phi_formula(2, "res1")
    with pytest.raises(arithid.ArithError):
        arithid.phi_formula(3, "res3")
    with pytest.raises(arithid.OverflowError):
        arithid.jordan(5, 10**6)
    with pytest.raises(arithid.UnknownIdentity):
        arithid.verify(["I99"], max_n=5)


def test_verify_report():
    identities = arithid.list_identities()
    assert len(identities) == 26
    assert identities[10]["domain"] == "n >= 4"

    report = arithid.verify(max_n=30, max_pair=10)
    assert report["verdict"] == "pass"
    assert [r["id"] for r in report["identities"]] == [f"I{i}" for i in range(1, 27)]
    i3 = next(r for r in report["identities"] if r["id"] == "I3")
    assert (i3["checked"], i3["skipped"]) == (28, 2)


def test_bench():
    records = arithid.bench(["I3"], [20, 40], reps=3)
    assert [r["n"] for r in records] == [20, 40]
    assert records[0]["checksum"] == arithid.phi(20)
