"""Simultaneous conjugacy of commuting tuples and stable super summit sets."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

from .conjugacy import (
    SummitSet,
    cycling,
    cycling_conjugator,
    decycling,
    decycling_conjugator,
    is_stable,
    on_cycling_orbit,
    summit_invariants,
    summit_set,
)
from .core import Element
from .errors import Budget, BudgetExceeded, InputError, MathDomainError, as_budget

__all__ = [
    "CommutingTuple",
    "tuple_to_uss",
    "subgroup_to_uss",
    "is_simultaneously_conjugate",
    "is_stable",
    "stable_representative",
    "stable_sss",
]


class CommutingTuple(tuple):
    """A tuple of pairwise commuting elements of one structure."""

    def __new__(cls, elements: Iterable[Element]):
        elements = tuple(elements)
        if elements:
            S = elements[0].structure
            for e in elements:
                if e.structure != S:
                    raise InputError("tuple mixes structures")
        for i, a in enumerate(elements):
            for b in elements[i + 1:]:
                if not a.commutes_with(b):
                    raise MathDomainError(f"{a} and {b} do not commute")
        return super().__new__(cls, elements)

    def conjugate(self, x: Element) -> CommutingTuple:
        return tuple.__new__(CommutingTuple, (e.conjugate(x) for e in self))


def _step_all(t: list[Element], x: Element) -> list[Element]:
    return [e.conjugate(x) for e in t]


def tuple_to_uss(t: Sequence[Element], budget: Budget | int | None = None) -> tuple[CommutingTuple, Element]:
    """Conjugate a commuting tuple so every coordinate is ultra summit.

    Coordinates are treated in order.  Each is driven into its ultra summit
    set by its own cyclings and decyclings; conjugating the whole tuple by
    those steps keeps the coordinates already handled ultra summit.
    Returns ``(t', x)`` with ``t'_i = x^-1 t_i x``.
    """
    budget = as_budget(budget)
    t = t if isinstance(t, CommutingTuple) else CommutingTuple(t)
    if not t:
        raise InputError("empty tuple")
    cur = list(t)
    x = Element.identity(cur[0].structure)
    for i in range(len(cur)):
        for step, conj, improves in (
            (cycling, cycling_conjugator, lambda a, b: b.inf > a.inf),
            (decycling, decycling_conjugator, lambda a, b: b.sup < a.sup),
        ):
            seen = {cur[i]}
            while True:
                budget.tick(what="tuple_to_uss")
                c = conj(cur[i])
                nxt = step(cur[i])
                better = improves(cur[i], nxt)
                cur = _step_all(cur, c)
                x = x * c
                assert cur[i] == nxt
                if better:
                    seen = {nxt}
                elif nxt in seen:
                    break
                else:
                    seen.add(nxt)
        seen = {cur[i]}
        while True:
            budget.tick(what="tuple_to_uss")
            c = cycling_conjugator(cur[i])
            cur = _step_all(cur, c)
            x = x * c
            if cur[i] in seen:
                break
            seen.add(cur[i])
    if cur == list(t):
        x = Element.identity(x.structure)
    return tuple.__new__(CommutingTuple, cur), x


def subgroup_to_uss(
    gens: Sequence[Element], word_length: int = 3, budget: Budget | int | None = None
) -> tuple[CommutingTuple, Element]:
    """Conjugate commuting generators so all short products are ultra summit.

    Every product ``h_1^a_1 ... h_n^a_n`` with ``sum |a_i| <= word_length`` is
    appended to the tuple before driving it into ultra summit sets, so the
    returned generators ``x^-1 h_i x`` make all those products ultra summit.
    """
    budget = as_budget(budget)
    gens = CommutingTuple(gens)
    n = len(gens)
    extra = []
    for a in itertools.product(range(-word_length, word_length + 1), repeat=n):
        if 1 < sum(map(abs, a)) <= word_length:
            e = Element.identity(gens[0].structure)
            for g, k in zip(gens, a):
                e = e * g ** k
            extra.append(e)
    t, x = tuple_to_uss(tuple.__new__(CommutingTuple, list(gens) + extra), budget)
    return tuple.__new__(CommutingTuple, t[:n]), x


def _tuple_uss_closure(
    seed: list[Element],
    invariants: list[tuple[int, int]],
    target: tuple[Element, ...] | None,
    budget: Budget,
    max_size: int,
) -> tuple[dict[tuple[Element, ...], Element], tuple[Element, ...] | None]:
    S = seed[0].structure
    simples = [Element.from_simple(S, s) for s in S.simples() if s != S.identity]
    start = tuple(seed)
    witnesses = {start: Element.identity(S)}
    queue = deque([start])
    if target is not None and start == target:
        return witnesses, start
    while queue:
        cur = queue.popleft()
        for s in simples:
            budget.tick(what="simultaneous conjugacy")
            nxt = []
            for e, inv in zip(cur, invariants):
                h = e.conjugate(s)
                if (h.inf, h.sup) != inv or not on_cycling_orbit(h, budget):
                    break
                nxt.append(h)
            else:
                key = tuple(nxt)
                if key in witnesses:
                    continue
                if len(witnesses) >= max_size:
                    raise BudgetExceeded(f"tuple ultra summit set exceeds {max_size} elements")
                witnesses[key] = witnesses[cur] * s
                if key == target:
                    return witnesses, key
                queue.append(key)
    return witnesses, None


def is_simultaneously_conjugate(
    t1: Sequence[Element],
    t2: Sequence[Element],
    budget: Budget | int | None = None,
    max_size: int = 20_000,
) -> Element | None:
    """A simultaneous conjugator ``w`` with ``w^-1 t1[i] w = t2[i]`` for all i, or None."""
    budget = as_budget(budget)
    t1 = t1 if isinstance(t1, CommutingTuple) else CommutingTuple(t1)
    t2 = t2 if isinstance(t2, CommutingTuple) else CommutingTuple(t2)
    if len(t1) != len(t2):
        raise InputError(f"tuple lengths differ: {len(t1)} vs {len(t2)}")
    if not t1:
        raise InputError("empty tuples")
    if tuple(t1) == tuple(t2):
        return Element.identity(t1[0].structure)
    u1, x1 = tuple_to_uss(t1, budget)
    u2, x2 = tuple_to_uss(t2, budget)
    invariants = [(e.inf, e.sup) for e in u1]
    if invariants != [(e.inf, e.sup) for e in u2]:
        return None
    witnesses, hit = _tuple_uss_closure(list(u1), invariants, tuple(u2), budget, max_size)
    if hit is None:
        return None
    # x1^-1 t1 x1 = u1,  w^-1 u1 w = u2 = x2^-1 t2 x2
    return x1 * witnesses[hit] * x2.inverse()


def stable_representative(g: Element, budget: Budget | int | None = None) -> tuple[Element, Element]:
    """A stable super summit conjugate ``h = x^-1 g x``; returns ``(h, x)``.

    Obtained by driving ``(g, g^2, ..., g^L)`` into ultra summit sets
    simultaneously.
    """
    budget = as_budget(budget)
    powers = [g]
    for _ in range(g.structure.max_word_length - 1):
        powers.append(powers[-1] * g)
    t, x = tuple_to_uss(CommutingTuple(powers), budget)
    return t[0], x


def stable_sss(
    g: Element, budget: Budget | int | None = None, max_size: int = 20_000, edges: bool = False
) -> SummitSet:
    """The stable super summit set of ``g``."""
    return summit_set(g, "stable", budget, max_size, edges=edges)
