"""Regime budget derivation: exact dyadic arithmetic and condition verdicts."""

import pytest

from tokengames.decl import Variant
from tokengames.regimes import Regime, audit_parameters


def test_independent_large_scale_exact_arithmetic():
    audit = audit_parameters(Regime.INDEPENDENT, 35, 0, 10, 10)
    assert audit.s == 10 and audit.p == 2 ** 10
    assert audit.r == 2 ** 35 and audit.f == 1
    assert audit.radical_sq == 2 ** 65          # (2^(n-2.5))^2 with n = 35
    assert audit.radical_sq_alt is None
    assert audit.variant is Variant.UP_RIGHT
    assert audit.bob_budget_1 == 2 ** 34 - 2 ** 24
    assert audit.a_up == 2 ** 25 + 2 ** 25


def test_tight_padding_fails():
    audit = audit_parameters(Regime.INDEPENDENT, 8, 1, 1, 1)
    assert not audit.holds  # adversary budget overwhelms the useful budget


def test_generous_padding_holds_and_minimal_de_found():
    audit = audit_parameters(Regime.INDEPENDENT, 8, 1, 8, 5)
    assert audit.holds
    assert audit.minimal_de is not None
    d, e = audit.minimal_de
    assert audit_parameters(Regime.INDEPENDENT, 8, 1, d, e).holds
    # Nothing lexicographically smaller by (d+e, d) works.
    for total in range(2, d + e + 1):
        for d2 in range(1, total):
            e2 = total - d2
            if (total, d2) >= (d + e, d):
                continue
            if d2 > 8 or not 1 <= e2 <= 7:
                continue
            assert not audit_parameters(Regime.INDEPENDENT, 8, 1, d2, e2).holds


def test_coupled_regime_uses_diagonal_variant():
    audit = audit_parameters(Regime.COUPLED, 10, 0, 10, 5)
    assert audit.variant is Variant.DIAGONAL
    assert audit.f == 2 and audit.s == 1
    assert audit.radical_sq == 2 ** 12           # exact r p^3 / f = 2^(2n-8)
    assert audit.radical_sq_alt == 2 ** 13       # half-power-rounded alternative
    assert audit.holds


def test_coupled_radical_identity_across_offsets():
    for n in (10, 13):
        for c in (0, 1, 2):
            audit = audit_parameters(Regime.COUPLED, n, c, n, n - 1)
            assert audit.radical_sq == 2 ** (2 * n - 8)


def test_mixed_regime_branches_on_offset():
    at_zero = audit_parameters(Regime.MIXED, 10, 0, 6, 5)
    assert at_zero.variant is Variant.DIAGONAL and at_zero.f == 2
    above = audit_parameters(Regime.MIXED, 10, 2, 6, 5)
    assert above.variant is Variant.UP_RIGHT and above.f == 4
    assert at_zero.s == above.s == 1


def test_words_alias_matches_independent():
    one = audit_parameters(Regime.INDEPENDENT, 11, 1, 6, 5)
    two = audit_parameters(Regime.INDEPENDENT_WORDS, 11, 1, 6, 5)
    assert one.summary() | {"regime": "x"} == two.summary() | {"regime": "x"}


def test_budget_formulas_are_exact_dyadics():
    audit = audit_parameters(Regime.INDEPENDENT, 9, 2, 4, 3)
    assert audit.bob_budget_1 == 2 ** 8 - 2 ** 5
    assert audit.bob_budget_2 == 2 ** 10 - 2 ** 7
    assert audit.a_up == 2 ** 5 + 2 ** 6
    assert audit.a_right == 2 ** 7 + 2 ** 8
    assert audit.a_right_mixed == 2 ** 5 + 2 ** 8


def test_validation_errors():
    with pytest.raises(ValueError):
        audit_parameters(Regime.INDEPENDENT, 8, 0, 3, 8)   # e > n-1
    with pytest.raises(ValueError):
        audit_parameters(Regime.INDEPENDENT, 8, 0, 0, 3)   # d < 1
    with pytest.raises(ValueError):
        audit_parameters(Regime.INDEPENDENT, 4, 0, 2, 2)   # s < 0
    with pytest.raises(ValueError):
        audit_parameters(Regime.COUPLED, 6, 0, 2, 2)       # s < 0


def test_to_decl_config_round_trip():
    audit = audit_parameters(Regime.COUPLED, 10, 0, 10, 5)
    config = audit.to_decl_config()
    assert config.variant is Variant.DIAGONAL
    assert (config.a_up, config.a_right) == (audit.a_up, audit.a_right)
    assert (config.bob_budget_1, config.bob_budget_2) == (496, 496)
    assert (config.r, config.p, config.f) == (audit.r, audit.p, audit.f)


def test_summary_is_json_ready():
    import json
    audit = audit_parameters(Regime.MIXED, 10, 1, 5, 5)
    parsed = json.loads(json.dumps(audit.summary(), sort_keys=True))
    assert parsed["regime"] == "mixed"
    assert parsed["holds"] == audit.holds
