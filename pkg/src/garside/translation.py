"""Word length over the simple elements and exact translation numbers.

For a stable super summit element ``h`` every power is super summit, so
``inf(h^n)`` and ``sup(h^n)`` are the summit invariants of ``h^n``.  The
limits ``t_inf = lim inf(h^n)/n`` and ``t_sup = lim sup(h^n)/n`` then satisfy

    inf(h^n)/n  <= t_inf <= (inf(h^n)+1)/n
    (sup(h^n)-1)/n <= t_sup <= sup(h^n)/n

and both are rationals with denominator at most ``L_Δ^2``.  Doubling ``n``
until each window holds exactly one such rational pins them exactly; the
window is narrower than the gap between two candidates once ``n > L_Δ^4``,
so the loop always ends.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import Element
from .errors import Budget, BudgetExceeded, MathDomainError, as_budget


def word_length(g: Element) -> int:
    """Shortest length of ``g`` as a word in simples and their inverses."""
    return max(g.sup, 0) - min(g.inf, 0)


def bounded_rationals(lo: Fraction, hi: Fraction, max_den: int) -> list[Fraction]:
    """All rationals in ``[lo, hi]`` with denominator at most ``max_den``, sorted."""
    found = set()
    for q in range(1, max_den + 1):
        for p in range(math.ceil(lo * q), math.floor(hi * q) + 1):
            found.add(Fraction(p, q))
    return sorted(found)


def _pin_slopes(h: Element, budget: Budget) -> tuple[Fraction, Fraction]:
    S = h.structure
    q = S.max_word_length ** 2
    hard_stop = 2 * q * q
    n = 1
    power = h
    while True:
        budget.tick(power.canonical_length + 1, what="translation number")
        lo_i, hi_i = Fraction(power.inf, n), Fraction(power.inf + 1, n)
        lo_s, hi_s = Fraction(power.sup - 1, n), Fraction(power.sup, n)
        ci = bounded_rationals(lo_i, hi_i, q)
        cs = bounded_rationals(lo_s, hi_s, q)
        if not ci or not cs:
            raise MathDomainError(f"no rational with denominator <= {q} in the slope window at n={n}")
        if len(ci) == 1 and len(cs) == 1:
            return ci[0], cs[0]
        if n > hard_stop:
            raise BudgetExceeded("slope windows failed to isolate a rational")
        power = power * power
        n *= 2


def summit_slopes(g: Element, budget: Budget | int | None = None) -> tuple[Fraction, Fraction]:
    """``(t_inf, t_sup)``: the limits of ``inf_s(g^n)/n`` and ``sup_s(g^n)/n``."""
    from .simultaneous import stable_representative

    budget = as_budget(budget)
    h, _ = stable_representative(g, budget)
    return _pin_slopes(h, budget)


def translation_number(g: Element, budget: Budget | int | None = None) -> Fraction:
    """Translation number of ``g`` with respect to the simple elements."""
    if g.is_identity():
        return Fraction(0)
    t_inf, t_sup = summit_slopes(g, budget)
    return max(t_sup, Fraction(0)) - min(t_inf, Fraction(0))
