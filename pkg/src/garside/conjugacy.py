"""Cycling, decycling and summit sets of single elements.

Summit sets are computed by breadth-first closure from one member under
*minimal* simple conjugators: for a member ``h`` and an atom ``a``, the
smallest simple ``c >=_L a`` whose conjugate ``c^-1 h c`` stays in the set.
Closure of the conjugator sets under ``∧_L`` makes that element unique, and
connectivity of summit sets under simple conjugations makes the closure
complete.

Three kinds are supported:

``super``   inf and sup both extremal in the conjugacy class.
``ultra``   super summit elements lying on a closed cycling orbit.
``stable``  elements all of whose powers are super summit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Literal

from .core import Element, exponent_vector, left_join, left_meet
from .errors import Budget, BudgetExceeded, as_budget

Kind = Literal["super", "ultra", "stable"]
KINDS = ("super", "ultra", "stable")

DEFAULT_MAX_SET = 20_000


def cycling_conjugator(x: Element) -> Element:
    """The simple ``τ^-r(s_1)`` with ``c(x) = s^-1 x s``; identity when len is 0."""
    S = x.structure
    if not x.factors:
        return Element.identity(S)
    return Element.from_simple(S, S.tau(x.factors[0], -x.delta))


def decycling_conjugator(x: Element) -> Element:
    """``s_k^-1``, so that ``d(x) = s_k x s_k^-1``; identity when len is 0."""
    S = x.structure
    if not x.factors:
        return Element.identity(S)
    return Element.from_simple(S, x.factors[-1]).inverse()


def cycling(x: Element) -> Element:
    """``Δ^r s_2 ... s_k τ^-r(s_1)``, normalized.  Fixes elements of length 0."""
    S = x.structure
    if not x.factors:
        return x
    rest = Element(S, x.delta, x.factors[1:])
    return rest * Element.from_simple(S, S.tau(x.factors[0], -x.delta))


def decycling(x: Element) -> Element:
    """``Δ^r τ^r(s_k) s_1 ... s_(k-1)``, normalized.  Fixes elements of length 0."""
    S = x.structure
    if not x.factors:
        return x
    head = Element(S, x.delta, (S.tau(x.factors[-1], x.delta),))
    return head * Element(S, 0, x.factors[:-1])


def summit_seek(g: Element, budget: Budget | int | None = None) -> tuple[Element, Element]:
    """Reach the ultra summit set by cycling and decycling.

    Returns ``(h, x)`` with ``x^-1 g x = h``.  Every step is a cycling or a
    decycling, so the conjugator is a product of simples and their inverses.
    """
    budget = as_budget(budget)
    h = g
    x = Element.identity(g.structure)

    # raise inf: a cycling orbit that closes up without improvement has inf = inf_s
    seen = {h}
    while True:
        budget.tick(what="summit_seek")
        c = cycling_conjugator(h)
        nxt = cycling(h)
        x = x * c
        if nxt.inf > h.inf:
            seen = {nxt}
        elif nxt in seen:
            h = nxt
            break
        else:
            seen.add(nxt)
        h = nxt

    # lower sup by decycling; inf cannot drop
    seen = {h}
    while True:
        budget.tick(what="summit_seek")
        c = decycling_conjugator(h)
        nxt = decycling(h)
        x = x * c
        if nxt.sup < h.sup:
            seen = {nxt}
        elif nxt in seen:
            h = nxt
            break
        else:
            seen.add(nxt)
        h = nxt

    # cycle inside the super summit set until the orbit closes
    seen = {h}
    while True:
        budget.tick(what="summit_seek")
        c = cycling_conjugator(h)
        h = cycling(h)
        x = x * c
        if h in seen:
            if h == g:
                x = Element.identity(g.structure)
            return h, x
        seen.add(h)


def summit_invariants(g: Element, budget: Budget | int | None = None) -> tuple[int, int]:
    """``(inf_s, sup_s)`` of the conjugacy class of ``g``."""
    h, _ = summit_seek(g, budget)
    return h.inf, h.sup


def on_cycling_orbit(h: Element, budget: Budget | int | None = None) -> bool:
    """Whether ``c^k(h) = h`` for some ``k >= 1``."""
    budget = as_budget(budget)
    seen = {h}
    cur = h
    while True:
        budget.tick(what="cycling orbit")
        cur = cycling(cur)
        if cur == h:
            return True
        if cur in seen:
            return False
        seen.add(cur)


def is_super_summit(h: Element, budget: Budget | int | None = None) -> bool:
    return (h.inf, h.sup) == summit_invariants(h, budget)


def is_ultra_summit(h: Element, budget: Budget | int | None = None) -> bool:
    return is_super_summit(h, budget) and on_cycling_orbit(h, budget)


def _powers(h: Element, count: int) -> list[Element]:
    out = [h]
    for _ in range(count - 1):
        out.append(out[-1] * h)
    return out


def is_stable(h: Element, budget: Budget | int | None = None) -> bool:
    """Whether ``h^n`` is super summit for ``n = 1 .. L_Δ``."""
    budget = as_budget(budget)
    return all(is_super_summit(p, budget) for p in _powers(h, h.structure.max_word_length))


@dataclass
class SummitSet:
    """A summit set with conjugators from the input element and labelled edges.

    ``witnesses[h]`` is an ``x`` with ``x^-1 g x = h``.  Each edge
    ``(h, s, h2)`` has ``s`` a simple element and ``s^-1 h s = h2``.
    """

    kind: str
    source: Element
    members: list[Element]
    witnesses: dict[Element, Element]
    edges: list[tuple[Element, Element, Element]] = field(default_factory=list)
    inf_s: int = 0
    sup_s: int = 0

    def __contains__(self, h: Element) -> bool:
        return h in self.witnesses

    def __len__(self) -> int:
        return len(self.members)


class _Membership:
    """Membership test and minimal conjugators for one summit set."""

    def __init__(self, seed: Element, kind: str, budget: Budget):
        self.kind = kind
        self.budget = budget
        self.structure = seed.structure
        if kind == "stable":
            self.npowers = self.structure.max_word_length
        else:
            self.npowers = 1
        self.targets = [(p.inf, p.sup) for p in _powers(seed, self.npowers)]

    def contains(self, h: Element) -> bool:
        if (h.inf, h.sup) != self.targets[0]:
            return False
        if self.kind == "ultra":
            return on_cycling_orbit(h, self.budget)
        if self.kind == "stable":
            return all((p.inf, p.sup) == t for p, t in zip(_powers(h, self.npowers), self.targets))
        return True

    def min_conjugator(self, h: Element, a: int) -> Element:
        S = self.structure
        c = Element.from_simple(S, S.atom(a))
        hs = _powers(h, self.npowers)
        # Any conjugator y >= c keeping h^n super summit also lies above
        # h^-n c Δ^p (inf condition) and h^n c Δ^-q (sup condition), with
        # (p, q) = (inf, sup) of h^n.  Iterate to the least fixed point.
        lowers = [(p.inverse(), Element.delta_power(S, p.inf), p, Element.delta_power(S, -p.sup)) for p in hs]
        while True:
            self.budget.tick(what="minimal conjugator")
            nxt = c
            for pinv, dp, p, dq in lowers:
                nxt = left_join(nxt, pinv * c * dp)
                nxt = left_join(nxt, p * c * dq)
            if nxt == c:
                break
            c = nxt
        if self.kind == "ultra" and not on_cycling_orbit(h.conjugate(c), self.budget):
            c = self._min_ultra_above(h, c)
        return c

    def _min_ultra_above(self, h: Element, c: Element) -> Element:
        # Ultra summit conjugators are closed under ∧_L, so the minimal one
        # above c is the meet of all simple ones above c.
        S = self.structure
        base = c.as_simple()
        best = None
        for t in S.left_divisors(S.complement(base)):
            self.budget.tick(what="ultra conjugator")
            y = Element.from_simple(S, S.mul(base, t))
            if on_cycling_orbit(h.conjugate(y), self.budget):
                best = y if best is None else left_meet(best, y)
        assert best is not None  # Δ always qualifies
        return best


def _seed(g: Element, kind: str, budget: Budget) -> tuple[Element, Element]:
    if kind == "stable":
        from .simultaneous import stable_representative

        return stable_representative(g, budget)
    return summit_seek(g, budget)


def min_conjugator(h: Element, a: int, kind: Kind = "super", budget: Budget | int | None = None) -> Element:
    """Minimal simple ``c`` with ``a <=_L c`` and ``c^-1 h c`` in the summit set of ``h``.

    ``h`` must itself belong to its summit set of the given kind.
    """
    h.structure.check_atom(a)
    return _Membership(h, kind, as_budget(budget)).min_conjugator(h, a)


def _minimal_labels(conjugators: list[Element]) -> list[Element]:
    uniq = sorted(set(conjugators))
    out = []
    for c in uniq:
        if not any(d != c and left_meet(d, c) == d for d in uniq):
            out.append(c)
    return out


def summit_set(
    g: Element,
    kind: Kind = "super",
    budget: Budget | int | None = None,
    max_size: int = DEFAULT_MAX_SET,
    edges: bool = False,
) -> SummitSet:
    """The full summit set of ``g`` with witnesses.

    With ``edges=True`` the result also carries the minimal conjugacy graph:
    from each member, one edge per ``≤_L``-minimal element among its minimal
    conjugators.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown summit set kind {kind!r}")
    budget = as_budget(budget)
    S = g.structure
    seed, x0 = _seed(g, kind, budget)
    member = _Membership(seed, kind, budget)

    witnesses = {seed: x0}
    queue = deque([seed])
    edge_list = []
    while queue:
        h = queue.popleft()
        conj = []
        for a in range(1, S.atom_count + 1):
            c = member.min_conjugator(h, a)
            conj.append(c)
            h2 = h.conjugate(c)
            if h2 not in witnesses:
                if len(witnesses) >= max_size:
                    raise BudgetExceeded(f"{kind} summit set exceeds {max_size} elements")
                witnesses[h2] = witnesses[h] * c
                queue.append(h2)
        if edges:
            for c in _minimal_labels(conj):
                edge_list.append((h, c, h.conjugate(c)))

    members = sorted(witnesses)
    edge_list.sort(key=lambda e: (e[0].sort_key(), e[1].sort_key(), e[2].sort_key()))
    return SummitSet(
        kind=kind,
        source=g,
        members=members,
        witnesses={h: witnesses[h] for h in members},
        edges=edge_list,
        inf_s=seed.inf,
        sup_s=seed.sup,
    )


def conjugacy_graph(
    g: Element, kind: Kind = "super", budget: Budget | int | None = None, max_size: int = DEFAULT_MAX_SET
) -> SummitSet:
    return summit_set(g, kind, budget, max_size, edges=True)


def is_conjugate(
    x: Element, y: Element, budget: Budget | int | None = None, max_size: int = DEFAULT_MAX_SET
) -> Element | None:
    """A conjugator ``w`` with ``w^-1 x w = y``, or None if there is none."""
    x._check(y)
    budget = as_budget(budget)
    if x == y:
        return Element.identity(x.structure)
    hy, wy = summit_seek(y, budget)
    hx, wx = summit_seek(x, budget)
    if (hx.inf, hx.sup) != (hy.inf, hy.sup):
        return None
    if exponent_vector(x) != exponent_vector(y):
        return None
    uss = summit_set(x, "ultra", budget, max_size)
    if hy not in uss:
        return None
    # wx^-1 x wx = hy = wy^-1 y wy
    return uss.witnesses[hy] * wy.inverse()
