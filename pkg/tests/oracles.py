"""Brute-force reference implementations used by the tests.

None of these reuse the library's lattice or normal-form code:

* positive braid words of simples are generated by braid-move closure from
  a word for Δ, and divisibility is read off word prefixes;
* group equality is checked with a Burau matrix representation at t = 2
  (a homomorphism, so equal elements give equal matrices);
* word length and conjugacy come from breadth-first search.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache

from garside.core import Element


# ------------------------------------------------------------ braid words


def _moves(word: tuple[int, ...]):
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if abs(a - b) >= 2:
            yield word[:i] + (b, a) + word[i + 2:]
    for i in range(len(word) - 2):
        a, b, c = word[i:i + 3]
        if a == c and abs(a - b) == 1:
            yield word[:i] + (b, a, b) + word[i + 3:]


def _closure(word: tuple[int, ...]) -> frozenset:
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for v in _moves(w):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


@lru_cache(maxsize=None)
def simple_classes(n: int) -> dict[tuple[int, ...], frozenset]:
    """Map every positive word of a simple braid in B_n to its class of words."""
    delta = tuple(a for k in range(n - 1, 0, -1) for a in range(1, k + 1))
    words_of_delta = _closure(delta)
    prefixes = {w[:i] for w in words_of_delta for i in range(len(w) + 1)}
    out: dict[tuple[int, ...], frozenset] = {}
    for p in prefixes:
        if p not in out:
            cls = _closure(p)
            for w in cls:
                out[w] = cls
    return out


def all_simple_classes(n: int) -> list[frozenset]:
    return sorted(set(simple_classes(n).values()), key=lambda c: (len(next(iter(c))), min(c)))


def oracle_left_divides(p: frozenset, q: frozenset) -> bool:
    k = len(next(iter(p)))
    return any(w[:k] in p for w in q)


def oracle_meet(n: int, p: frozenset, q: frozenset) -> frozenset:
    common = [c for c in all_simple_classes(n) if oracle_left_divides(c, p) and oracle_left_divides(c, q)]
    return max(common, key=lambda c: len(next(iter(c))))


def oracle_join(n: int, p: frozenset, q: frozenset) -> frozenset:
    common = [c for c in all_simple_classes(n) if oracle_left_divides(p, c) and oracle_left_divides(q, c)]
    return min(common, key=lambda c: len(next(iter(c))))


# ------------------------------------------------------------ Burau


def _burau_gen(n: int, i: int, inverse: bool) -> list[list[Fraction]]:
    t = Fraction(2)
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    k = i - 1
    if inverse:
        m[k][k], m[k][k + 1], m[k + 1][k], m[k + 1][k + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
    else:
        m[k][k], m[k][k + 1], m[k + 1][k], m[k + 1][k + 1] = 1 - t, t, Fraction(1), Fraction(0)
    return m


def _mul(a, b):
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def burau(word, n: int) -> tuple:
    """Burau matrix (t = 2) of a signed atom word in B_n."""
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for a in word:
        m = _mul(m, _burau_gen(n, abs(a), a < 0))
    return tuple(tuple(r) for r in m)


# ------------------------------------------------------------ searches


def simple_generators(S) -> list[Element]:
    """All non-identity simples and their inverses."""
    simples = [Element.from_simple(S, s) for s in S.simples() if s != S.identity]
    return simples + [s.inverse() for s in simples]


def ball(S, radius: int) -> dict[Element, int]:
    """Distance from the identity in the Cayley graph over simples and inverses."""
    gens = simple_generators(S)
    one = Element.identity(S)
    dist = {one: 0}
    frontier = [one]
    for r in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in dist:
                    dist[h] = r
                    nxt.append(h)
        frontier = nxt
    return dist


def conjugates_within(x: Element, conjugators) -> set[Element]:
    return {x.conjugate(w) for w in conjugators}


def brute_summit_set(g: Element, ball_elements, kind: str = "super") -> set[Element]:
    """Summit set from scratch.

    Extremal (inf, sup) are read off all conjugates by a ball of conjugators,
    then the level set is closed under conjugation by *every* simple.
    """
    S = g.structure
    conj = conjugates_within(g, ball_elements)
    inf_s = max(h.inf for h in conj)
    sup_s = min(h.sup for h in conj)
    level = {h for h in conj if (h.inf, h.sup) == (inf_s, sup_s)}
    simples = [Element.from_simple(S, s) for s in S.simples()]
    queue = deque(level)
    while queue:
        h = queue.popleft()
        for s in simples:
            k = h.conjugate(s)
            if (k.inf, k.sup) == (inf_s, sup_s) and k not in level:
                level.add(k)
                queue.append(k)
    if kind == "ultra":
        level = {h for h in level if _cycles_back(h)}
    return level


def _cycles_back(h: Element) -> bool:
    from garside.conjugacy import cycling

    cur, seen = h, set()
    while cur not in seen:
        seen.add(cur)
        cur = cycling(cur)
        if cur == h:
            return True
    return False
