"""The bundled Garside structures.

``BraidStructure(n)``
    The positive braid monoid B_n^+.  Simples are permutation braids, stored
    as the permutation in one-line notation: ``p[j]`` is the strand that ends
    at position ``j`` (0-based).  Reading a positive word left to right and
    swapping positions ``i-1, i`` for each atom ``σ_i`` gives its permutation,
    so the product of simples is composition ``(u·v)[j] = u[v[j]]``.  Δ is the
    half twist, the order-reversing permutation.

``FreeAbelianStructure(n)``
    The free abelian monoid on n atoms with Δ the product of all atoms.
    Simples are subsets of atoms, stored as bitmasks.  Conjugacy is trivial,
    which makes it a handy oracle for the generic machinery.
"""

from __future__ import annotations

import functools
from collections import defaultdict
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import GarsideStructure
from .errors import InputError

Perm = tuple[int, ...]

MAX_STRANDS = 16


_MEMO_LIMIT = 1 << 16


def _memo(fn):
    """Per-instance memo keyed by arguments; cheaper than hashing ``self`` each call."""
    name = fn.__name__

    @functools.wraps(fn)
    def wrapper(self, *args):
        cache = self._memo[name]
        try:
            return cache[args]
        except KeyError:
            if len(cache) >= _MEMO_LIMIT:
                cache.clear()
            r = cache[args] = fn(self, *args)
            return r

    return wrapper


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[j] for j in v)


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@dataclass(frozen=True)
class BraidStructure(GarsideStructure):
    n: int
    name: str = field(init=False, compare=False)
    atom_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 2 <= self.n <= MAX_STRANDS:
            raise InputError(f"braid structure needs 2 <= n <= {MAX_STRANDS}, got {self.n}")
        object.__setattr__(self, "name", f"braid:{self.n}")
        object.__setattr__(self, "atom_count", self.n - 1)
        object.__setattr__(self, "_memo", defaultdict(dict))

    @functools.cached_property
    def identity(self) -> Perm:
        return tuple(range(self.n))

    @functools.cached_property
    def delta(self) -> Perm:
        return tuple(range(self.n - 1, -1, -1))

    @property
    def max_word_length(self) -> int:
        return self.n * (self.n - 1) // 2

    def atom(self, i: int) -> Perm:
        p = list(range(self.n))
        p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)

    @_memo
    def mul(self, a: Perm, b: Perm) -> Perm:
        return _compose(a, b)

    @_memo
    def ldiv(self, a: Perm, b: Perm) -> Perm:
        return _compose(_inverse(a), b)

    @_memo
    def meet(self, a: Perm, b: Perm) -> Perm:
        # Greedy: grow a common prefix one atom at a time.  An atom extends the
        # current prefix m inside both a and b iff it is a left descent of both
        # quotients m^-1 a and m^-1 b.
        if a == b:
            return a
        qa, qb = list(a), list(b)
        ia, ib = list(_inverse(a)), list(_inverse(b))
        m = list(range(self.n))
        found = True
        while found:
            found = False
            for i in range(1, self.n):
                if ia[i] < ia[i - 1] and ib[i] < ib[i - 1]:
                    # left-multiply the quotients by s_i: swap values i-1, i
                    for q, iq in ((qa, ia), (qb, ib)):
                        x, y = iq[i - 1], iq[i]
                        q[x], q[y] = i, i - 1
                        iq[i - 1], iq[i] = y, x
                    m[i - 1], m[i] = m[i], m[i - 1]
                    found = True
                    break
        return tuple(m)

    @_memo
    def complement(self, s: Perm) -> Perm:
        return _compose(_inverse(s), self.delta)

    @_memo
    def tau(self, s: Perm, k: int = 1) -> Perm:
        if k % 2 == 0:
            return s
        n1 = self.n - 1
        return tuple(n1 - s[n1 - j] for j in range(self.n))

    def rev(self, s: Perm) -> Perm:
        return _inverse(s)

    @_memo
    def word(self, s: Perm) -> tuple[int, ...]:
        out = []
        inv = list(_inverse(s))
        remaining = inversions(s)
        while remaining:
            for i in range(1, self.n):
                if inv[i] < inv[i - 1]:
                    inv[i - 1], inv[i] = inv[i], inv[i - 1]
                    out.append(i)
                    remaining -= 1
                    break
        return tuple(out)

    def length(self, s: Perm) -> int:
        return inversions(s)

    def has_left_descent(self, s: Perm, i: int) -> bool:
        inv = _inverse(s)
        return inv[i] < inv[i - 1]

    def from_positive_word(self, word: Sequence[int]) -> Perm | None:
        p = list(range(self.n))
        for i in word:
            self.check_atom(i)
            if i < 0:
                raise InputError("positive word expected")
            if p[i - 1] > p[i]:
                return None  # strands i-1, i would cross a second time
            p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)

    def simples(self) -> Iterator[Perm]:
        return iter(itertools.permutations(range(self.n)))

    def abelianize(self, s: Perm) -> tuple[int, ...]:
        return (inversions(s),)

    def permutation_of_simple(self, s: Perm) -> tuple[int, ...]:
        """1-based one-line notation of the permutation underlying ``s``."""
        return tuple(v + 1 for v in s)

    def simple_of_permutation(self, perm: Sequence[int]) -> Perm:
        if len(perm) != self.n or sorted(perm) != list(range(1, self.n + 1)):
            raise InputError(f"not a permutation of 1..{self.n}: {list(perm)}")
        return tuple(v - 1 for v in perm)


@dataclass(frozen=True)
class FreeAbelianStructure(GarsideStructure):
    n: int
    name: str = field(init=False, compare=False)
    atom_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"free abelian structure needs n >= 1, got {self.n}")
        object.__setattr__(self, "name", f"zn:{self.n}")
        object.__setattr__(self, "atom_count", self.n)

    @property
    def identity(self) -> int:
        return 0

    @property
    def delta(self) -> int:
        return (1 << self.n) - 1

    @property
    def max_word_length(self) -> int:
        return self.n

    def atom(self, i: int) -> int:
        return 1 << (i - 1)

    def mul(self, a: int, b: int) -> int:
        return a | b

    def ldiv(self, a: int, b: int) -> int:
        return b & ~a

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return a | b

    def complement(self, s: int) -> int:
        return self.delta ^ s

    def tau(self, s: int, k: int = 1) -> int:
        return s

    def rev(self, s: int) -> int:
        return s

    def word(self, s: int) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if s >> i & 1)

    def length(self, s: int) -> int:
        return bin(s).count("1")

    def has_left_descent(self, s: int, i: int) -> bool:
        return bool(s >> (i - 1) & 1)

    def from_positive_word(self, word: Sequence[int]) -> int | None:
        s = 0
        for i in word:
            self.check_atom(i)
            if i < 0:
                raise InputError("positive word expected")
            bit = 1 << (i - 1)
            if s & bit:
                return None
            s |= bit
        return s

    def simples(self) -> Iterator[int]:
        return iter(range(1 << self.n))

    def abelianize(self, s: int) -> tuple[int, ...]:
        return tuple(s >> i & 1 for i in range(self.n))


def is_simple(word: Sequence[int], S: GarsideStructure) -> bool:
    """Whether a positive word spells a left divisor of Δ."""
    return S.from_positive_word(word) is not None


def simple_meet(a, b, S: GarsideStructure):
    return S.meet(a, b)


def right_complement(s, S: GarsideStructure):
    return S.complement(s)


_SELECTOR = re.compile(r"^(braid|zn):(\d+)$")


def structure_from_selector(text: str) -> GarsideStructure:
    """Parse ``braid:<n>`` or ``zn:<n>``."""
    m = _SELECTOR.match(text.strip())
    if not m:
        raise InputError(f"unknown structure selector {text!r}; expected braid:<n> or zn:<n>")
    kind, n = m.group(1), int(m.group(2))
    return BraidStructure(n) if kind == "braid" else FreeAbelianStructure(n)
