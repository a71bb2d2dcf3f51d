"""Budget regimes: deriving declaration-game configs at the (n, c) scale.

A regime fixes how the two tracked counters at sizes n and n+c interact and
hence which game variant the responder plays and with which parameters:

* ``INDEPENDENT`` — the counters advance independently; up+right variant,
  p = 2^s with s = floor((n-5)/3), step length f = 2^c.
* ``INDEPENDENT_WORDS`` — the same game read over word declarations; the
  derivation is identical to INDEPENDENT.
* ``COUPLED`` — advancing the vertical counter necessarily advances the
  horizontal one, so the responder shifts diagonally; diagonal variant,
  s = floor((n-7)/3), f = 2^(c+1).
* ``MIXED`` — coupled only when the sizes coincide (c = 0): diagonal
  variant with f = 2 there, up+right with f = 2^c otherwise; s =
  floor((n-7)/3) in both branches.

Budgets are exact dyadic integers: the responder gets
2^(n-1) - 2^(n-1-e) vertical and 2^(n+c-1) - 2^(n+c-1-e) right shifts (the
fraction of words not reserved by the e-zero prefix); the adversary gets
2^(n-d) + 2^(n-e) vertical and 2^(n+c-d) + 2^(n+c-e) right shifts (spill
from nearby sizes plus reserved-prefix enumeration).  A tighter mixed
adversary bound 2^(n-d) + 2^(n+c-e) is reported alongside, but verdicts use
the main bounds.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .decl import DeclGameConfig, Variant
from .staircase import ConditionReport, delta_parameter, staircase_condition


class Regime(Enum):
    INDEPENDENT = "independent"
    INDEPENDENT_WORDS = "independent-words"
    COUPLED = "coupled"
    MIXED = "mixed"


def _derive(regime: Regime, n: int, c: int) -> tuple[Variant, int, int]:
    """(variant, s, f) for the regime at sizes (n, n+c)."""
    if regime in (Regime.INDEPENDENT, Regime.INDEPENDENT_WORDS):
        return Variant.UP_RIGHT, (n - 5) // 3, 2 ** c
    if regime is Regime.COUPLED:
        return Variant.DIAGONAL, (n - 7) // 3, 2 ** (c + 1)
    if c == 0:
        return Variant.DIAGONAL, (n - 7) // 3, 2
    return Variant.UP_RIGHT, (n - 7) // 3, 2 ** c


@dataclass(frozen=True)
class RegimeAudit:
    """Exact derived budgets and the strategy condition verdict."""

    regime: Regime
    n: int
    c: int
    d: int
    e: int
    variant: Variant
    s: int
    p: int
    r: int
    f: int
    a_up: int
    a_right: int
    a_right_mixed: int          # tighter alternative adversary bound (reported only)
    bob_budget_1: int           # vertical-kind budget (up or diagonal)
    bob_budget_2: int           # right budget
    delta: int
    radical_sq: int             # exact r * p^3 / f
    radical_sq_alt: int | None  # half-power-rounded figure, diagonal regimes only
    condition: ConditionReport
    holds: bool
    minimal_de: tuple[int, int] | None

    def to_decl_config(self) -> DeclGameConfig:
        return DeclGameConfig(
            variant=self.variant,
            a_up=self.a_up,
            a_right=self.a_right,
            bob_budget_1=self.bob_budget_1,
            bob_budget_2=self.bob_budget_2,
            r=self.r,
            p=self.p,
            f=self.f,
        )

    def summary(self) -> dict:
        return {
            "regime": self.regime.value,
            "n": self.n, "c": self.c, "d": self.d, "e": self.e,
            "variant": self.variant.value,
            "s": self.s, "p": self.p, "r": self.r, "f": self.f,
            "a_up": self.a_up, "a_right": self.a_right,
            "a_right_mixed": self.a_right_mixed,
            "bob_budget_1": self.bob_budget_1, "bob_budget_2": self.bob_budget_2,
            "delta": self.delta,
            "radical_sq": self.radical_sq,
            "radical_sq_alt": self.radical_sq_alt,
            "holds": self.holds,
            "inequalities": [
                {"name": iq.name, "lhs": str(iq.lhs), "rhs_sq": str(iq.rhs_squared),
                 "holds": iq.holds}
                for iq in self.condition.inequalities
            ],
            "minimal_de": list(self.minimal_de) if self.minimal_de else None,
        }


def _budgets(n: int, c: int, d: int, e: int) -> tuple[int, int, int, int, int]:
    if not 1 <= e <= n - 1:
        raise ValueError(f"need 1 <= e <= n-1 for exact dyadic budgets, got e={e}")
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}")
    bob_vertical = 2 ** (n - 1) - 2 ** (n - 1 - e)
    bob_right = 2 ** (n + c - 1) - 2 ** (n + c - 1 - e)
    a_up = 2 ** (n - d) + 2 ** (n - e)
    a_right = 2 ** (n + c - d) + 2 ** (n + c - e)
    a_right_mixed = 2 ** (n - d) + 2 ** (n + c - e)
    return bob_vertical, bob_right, a_up, a_right, a_right_mixed


def _evaluate(regime: Regime, n: int, c: int, d: int, e: int):
    variant, s, f = _derive(regime, n, c)
    if s < 0:
        raise ValueError(f"n={n} too small for regime {regime.value}")
    p = 2 ** s
    r = 2 ** (n + c)
    bob_1, bob_2, a_up, a_right, a_right_mixed = _budgets(n, c, d, e)
    config = DeclGameConfig(variant=variant, a_up=a_up, a_right=a_right,
                            bob_budget_1=bob_1, bob_budget_2=bob_2, r=r, p=p, f=f)
    condition = staircase_condition(config)
    return variant, s, f, p, r, bob_1, bob_2, a_up, a_right, a_right_mixed, condition


def audit_parameters(regime: Regime, n: int, c: int, d: int, e: int) -> RegimeAudit:
    """Derive the regime's game budgets exactly and evaluate the staircase
    condition; also scan for the smallest (d, e) making it hold."""
    (variant, s, f, p, r, bob_1, bob_2, a_up, a_right,
     a_right_mixed, condition) = _evaluate(regime, n, c, d, e)
    radical_sq_num = r * p ** 3
    if radical_sq_num % f:
        raise AssertionError("r p^3 not divisible by f; regime derivation broken")
    radical_sq = radical_sq_num // f
    radical_sq_alt = 2 * radical_sq if variant is Variant.DIAGONAL else None

    minimal_de = None
    for total in range(2, 2 * n):
        for d2 in range(max(1, total - (n - 1)), min(n, total - 1) + 1):
            e2 = total - d2
            if not 1 <= e2 <= n - 1:
                continue
            if _evaluate(regime, n, c, d2, e2)[-1].holds:
                minimal_de = (d2, e2)
                break
        if minimal_de:
            break

    return RegimeAudit(
        regime=regime, n=n, c=c, d=d, e=e, variant=variant,
        s=s, p=p, r=r, f=f,
        a_up=a_up, a_right=a_right, a_right_mixed=a_right_mixed,
        bob_budget_1=bob_1, bob_budget_2=bob_2,
        delta=delta_parameter(r, p, f),
        radical_sq=radical_sq,
        radical_sq_alt=radical_sq_alt,
        condition=condition,
        holds=condition.holds,
        minimal_de=minimal_de,
    )
