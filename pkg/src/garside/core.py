"""Garside structures and group elements in left normal form.

A :class:`GarsideStructure` describes the finite lattice of simple elements
(the left divisors of the Garside element Δ) through a handful of primitive
operations on hashable *payloads*.  Everything else -- normal forms, products,
inverses, lattice operations on the whole group -- is generic and lives here.

An :class:`Element` stores the left normal form ``Δ^r s_1 ... s_k``: the
integer ``delta`` and the tuple ``factors`` of simples, none equal to 1 or Δ,
with every adjacent pair left-weighted.  Because normal forms are unique,
element equality is plain field equality.

Words are sequences of nonzero integers: ``+i`` is the i-th atom and ``-i``
its inverse (atoms are numbered from 1).
"""

from __future__ import annotations

import abc
import functools
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .errors import InputError

Simple = Hashable
Word = Sequence[int]


class GarsideStructure(abc.ABC):
    """Abstract Garside monoid, described by its lattice of simple elements.

    Subclasses implement the primitive operations below.  Arguments are always
    simple payloads; the preconditions noted on each method are not checked.
    """

    name: str
    atom_count: int

    @property
    @abc.abstractmethod
    def identity(self) -> Simple: ...

    @property
    @abc.abstractmethod
    def delta(self) -> Simple: ...

    @property
    @abc.abstractmethod
    def max_word_length(self) -> int:
        """L_Δ, the maximal atom length of Δ."""

    @abc.abstractmethod
    def atom(self, i: int) -> Simple:
        """The simple for atom ``i`` (1-based)."""

    @abc.abstractmethod
    def mul(self, a: Simple, b: Simple) -> Simple:
        """Product ``a b``; requires ``b <= complement(a)``."""

    @abc.abstractmethod
    def ldiv(self, a: Simple, b: Simple) -> Simple:
        """Left quotient ``a^-1 b``; requires ``a <=_L b``."""

    @abc.abstractmethod
    def meet(self, a: Simple, b: Simple) -> Simple:
        """Greatest common left divisor."""

    @abc.abstractmethod
    def complement(self, s: Simple) -> Simple:
        """Right complement: the simple ``c`` with ``s c = Δ``."""

    @abc.abstractmethod
    def tau(self, s: Simple, k: int = 1) -> Simple:
        """``Δ^-k s Δ^k``."""

    @abc.abstractmethod
    def rev(self, s: Simple) -> Simple:
        """Image under the word-reversing anti-automorphism."""

    @abc.abstractmethod
    def word(self, s: Simple) -> tuple[int, ...]:
        """A canonical positive atom word spelling ``s``."""

    @abc.abstractmethod
    def length(self, s: Simple) -> int:
        """Atom length of ``s``."""

    @abc.abstractmethod
    def has_left_descent(self, s: Simple, i: int) -> bool:
        """Whether atom ``i`` left-divides ``s``."""

    @abc.abstractmethod
    def from_positive_word(self, word: Sequence[int]) -> Simple | None:
        """The simple spelled by a positive word, or None if it is not simple."""

    @abc.abstractmethod
    def simples(self) -> Iterator[Simple]:
        """Enumerate all simple elements."""

    @abc.abstractmethod
    def abelianize(self, s: Simple) -> tuple[int, ...]:
        """Image in the abelianization, as an integer vector."""

    def sort_key(self, s: Simple) -> Any:
        return self.word(s)

    # -- derived simple-level operations ---------------------------------

    @property
    def delta_word(self) -> tuple[int, ...]:
        return self.word(self.delta)

    def left_complement(self, s: Simple) -> Simple:
        """The simple ``c`` with ``c s = Δ``."""
        return self.tau(self.complement(s), -1)

    def left_divides(self, a: Simple, b: Simple) -> bool:
        return self.meet(a, b) == a

    def right_meet(self, a: Simple, b: Simple) -> Simple:
        return self.rev(self.meet(self.rev(a), self.rev(b)))

    def join(self, a: Simple, b: Simple) -> Simple:
        """Least common right multiple of two simples."""
        # x >=_L a  iff  complement(x) <=_R complement(a)
        m = self.right_meet(self.complement(a), self.complement(b))
        return self.left_complement(m)

    def left_divisors(self, s: Simple) -> list[Simple]:
        """All simples ``d`` with ``d <=_L s``, in breadth-first order."""
        seen = {self.identity}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for d in frontier:
                rest = self.ldiv(d, s)
                for i in range(1, self.atom_count + 1):
                    if self.has_left_descent(rest, i):
                        e = self.mul(d, self.atom(i))
                        if e not in seen:
                            seen.add(e)
                            order.append(e)
                            nxt.append(e)
            frontier = nxt
        return order

    def check_atom(self, i: int) -> None:
        if not 1 <= abs(i) <= self.atom_count:
            raise InputError(f"atom {i} out of range for {self.name} (1..{self.atom_count})")


# -- normal-form maintenance ----------------------------------------------


def _left_weighted(S: GarsideStructure, a: Simple, b: Simple) -> bool:
    return S.meet(S.complement(a), b) == S.identity


def _append(S: GarsideStructure, factors: list, s: Simple) -> int:
    """Append simple ``s`` to a normal factor list in place.

    Slides right to left; returns how many Δ's were pushed out at the front
    (they are removed from the list).
    """
    one, delta = S.identity, S.delta
    if s == one:
        return 0
    factors.append(s)
    i = len(factors) - 2
    while i >= 0:
        a, b = factors[i], factors[i + 1]
        t = S.meet(S.complement(a), b)
        if t == one:
            break
        factors[i] = S.mul(a, t)
        factors[i + 1] = S.ldiv(t, b)
        i -= 1
    gained = 0
    while factors and factors[0] == delta:
        factors.pop(0)
        gained += 1
    while factors and factors[-1] == one:
        factors.pop()
    return gained


def _prepend(S: GarsideStructure, s: Simple, factors: Sequence) -> tuple[int, list]:
    """Normal form of ``s * factors`` for a normal factor list; left to right."""
    one, delta = S.identity, S.delta
    out: list = []
    carry = s
    i = 0
    while i < len(factors) and carry != one:
        b = factors[i]
        t = S.meet(S.complement(carry), b)
        out.append(S.mul(carry, t))
        carry = S.ldiv(t, b)
        i += 1
    if i < len(factors):
        out.extend(factors[i:])
    elif carry != one:
        out.append(carry)
    gained = 0
    while out and out[0] == delta:
        out.pop(0)
        gained += 1
    return gained, out


@dataclass(frozen=True)
class Element:
    """A group element ``Δ^delta · factors[0] ⋯ factors[-1]`` in left normal form."""

    structure: GarsideStructure
    delta: int
    factors: tuple

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, S: GarsideStructure) -> Element:
        return cls(S, 0, ())

    @classmethod
    def delta_power(cls, S: GarsideStructure, k: int = 1) -> Element:
        return cls(S, k, ())

    @classmethod
    def from_simple(cls, S: GarsideStructure, s: Simple) -> Element:
        if s == S.identity:
            return cls(S, 0, ())
        if s == S.delta:
            return cls(S, 1, ())
        return cls(S, 0, (s,))

    @classmethod
    def from_simples(cls, S: GarsideStructure, simples: Iterable[Simple], delta: int = 0) -> Element:
        """Normalize ``Δ^delta`` followed by an arbitrary sequence of simples."""
        factors: list = []
        for s in simples:
            delta += _append(S, factors, s)
        return cls(S, delta, tuple(factors))

    # -- invariants ----------------------------------------------------------

    @property
    def inf(self) -> int:
        return self.delta

    @property
    def sup(self) -> int:
        return self.delta + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.delta == 0 and not self.factors

    def is_positive(self) -> bool:
        return self.delta >= 0

    def is_simple(self) -> bool:
        return (self.delta == 0 and len(self.factors) <= 1) or (self.delta == 1 and not self.factors)

    def head(self) -> Simple:
        """``self ∧_L Δ`` for a positive element."""
        S = self.structure
        if self.delta > 0:
            return S.delta
        if self.delta < 0:
            raise ValueError("head() needs a positive element")
        return self.factors[0] if self.factors else S.identity

    def as_simple(self) -> Simple:
        S = self.structure
        if not self.is_simple():
            raise ValueError(f"{self} is not a simple element")
        if self.delta == 1:
            return S.delta
        return self.factors[0] if self.factors else S.identity

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: Element) -> None:
        if self.structure != other.structure:
            raise InputError(f"structure mismatch: {self.structure.name} vs {other.structure.name}")

    def __mul__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        S = self.structure
        t = other.delta
        factors = [S.tau(a, t) for a in self.factors] if t % _tau_order(S) else list(self.factors)
        delta = self.delta + t
        for b in other.factors:
            delta += _append(S, factors, b)
        return Element(S, delta, tuple(factors))

    def inverse(self) -> Element:
        S = self.structure
        r, k = self.delta, len(self.factors)
        # (Δ^r s_1..s_k)^-1 = Δ^(-r-k) τ^(-r-k)(∂s_k) ... τ^(-r-1)(∂s_1)
        seq = [S.tau(S.complement(self.factors[i - 1]), -r - i) for i in range(k, 0, -1)]
        return Element.from_simples(S, seq, -r - k)

    def __invert__(self) -> Element:
        return self.inverse()

    def __pow__(self, n: int) -> Element:
        if n < 0:
            return self.inverse() ** (-n)
        result = Element.identity(self.structure)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self, x: Element) -> Element:
        """``x^-1 · self · x``."""
        return x.inverse() * self * x

    def commutes_with(self, other: Element) -> bool:
        return self * other == other * self

    def tau(self, k: int = 1) -> Element:
        S = self.structure
        if k % _tau_order(S) == 0:
            return self
        return Element(S, self.delta, tuple(S.tau(s, k) for s in self.factors))

    def rev(self) -> Element:
        """Image under the anti-automorphism reversing words (fixes Δ)."""
        S = self.structure
        r = self.delta
        # rev(Δ^r s_1..s_k) = rev(s_k)..rev(s_1) Δ^r = Δ^r τ^r(rev s_k)..τ^r(rev s_1)
        seq = [S.tau(S.rev(s), r) for s in reversed(self.factors)]
        return Element.from_simples(S, seq, r)

    def left_divide_simple(self, s: Simple) -> Element:
        """``s^-1 · self``."""
        S = self.structure
        if s == S.identity:
            return self
        # s^-1 = Δ^-1 · left_complement(s)
        inv = Element.delta_power(S, -1) * Element.from_simple(S, S.left_complement(s))
        return inv * self

    # -- presentation ----------------------------------------------------------

    def word(self) -> list[int]:
        """A signed atom word spelling this element."""
        S = self.structure
        dw = list(S.delta_word)
        out: list[int] = []
        if self.delta >= 0:
            out.extend(dw * self.delta)
        else:
            out.extend([-a for a in reversed(dw)] * (-self.delta))
        for s in self.factors:
            out.extend(S.word(s))
        return out

    def factor_words(self) -> list[list[int]]:
        return [list(self.structure.word(s)) for s in self.factors]

    def sort_key(self) -> tuple:
        S = self.structure
        return (self.delta, len(self.factors), tuple(S.sort_key(s) for s in self.factors))

    def __lt__(self, other: Element) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        parts = []
        if self.delta == 1:
            parts.append("D")
        elif self.delta != 0:
            parts.append(f"D^{self.delta}")
        for s in self.factors:
            parts.extend(f"s{a}" for a in self.structure.word(s))
        return " ".join(parts) if parts else "D^0"

    def __repr__(self) -> str:
        return f"Element({self.structure.name}, {self})"


@functools.lru_cache(maxsize=None)
def _tau_order_cached(S: GarsideStructure) -> int:
    a = [S.atom(i) for i in range(1, S.atom_count + 1)]
    k = 1
    while [S.tau(x, k) for x in a] != a:
        k += 1
    return k


def _tau_order(S: GarsideStructure) -> int:
    return _tau_order_cached(S)


# -- operations on elements ------------------------------------------------


def normalize(word: Word, S: GarsideStructure) -> Element:
    """Left normal form of a signed atom word."""
    delta = 0
    factors: list = []
    for letter in word:
        S.check_atom(letter)
        if letter > 0:
            delta += _append(S, factors, S.atom(letter))
        else:
            # a^-1 = Δ^-1 · left_complement(a);  F Δ^-1 = Δ^-1 τ^-1(F)
            factors = [S.tau(f, -1) for f in factors]
            delta -= 1
            delta += _append(S, factors, S.left_complement(S.atom(-letter)))
    return Element(S, delta, tuple(factors))


def multiply(x: Element, y: Element) -> Element:
    return x * y


def inverse(x: Element) -> Element:
    return x.inverse()


def equals(x: Element, y: Element) -> bool:
    x._check(y)
    return x == y


def tau(x: Element, power: int = 1) -> Element:
    return x.tau(power)


def canonical_invariants(x: Element) -> tuple[int, int, int]:
    return x.inf, x.sup, x.canonical_length


def is_left_weighted(x: Element) -> bool:
    """Check the left-greedy condition on every adjacent pair of factors."""
    S = x.structure
    if any(s in (S.identity, S.delta) for s in x.factors):
        return False
    return all(_left_weighted(S, a, b) for a, b in zip(x.factors, x.factors[1:]))


def exponent_vector(x: Element) -> tuple[int, ...]:
    """Image of ``x`` in the abelianization of the group."""
    S = x.structure
    vec = [x.delta * v for v in S.abelianize(S.delta)]
    for s in x.factors:
        for i, v in enumerate(S.abelianize(s)):
            vec[i] += v
    return tuple(vec)


def left_divides(x: Element, y: Element) -> bool:
    """``x <=_L y``, i.e. ``x^-1 y`` is positive."""
    return (x.inverse() * y).is_positive()


def _positive_meet(p: Element, q: Element) -> Element:
    S = p.structure
    result: list = []
    delta = 0
    while True:
        s = S.meet(p.head(), q.head())
        if s == S.identity:
            break
        delta += _append(S, result, s)
        p = p.left_divide_simple(s)
        q = q.left_divide_simple(s)
    return Element(S, delta, tuple(result))


def left_meet(x: Element, y: Element) -> Element:
    """Greatest common left divisor in the group."""
    x._check(y)
    u = -min(x.inf, y.inf)
    du = Element.delta_power(x.structure, u)
    # (x Δ^u) ∧ (y Δ^u) = (x ∧ y) Δ^u
    m = _positive_meet(x * du, y * du)
    return m * Element.delta_power(x.structure, -u)


def right_meet(x: Element, y: Element) -> Element:
    return left_meet(x.rev(), y.rev()).rev()


def left_join(x: Element, y: Element) -> Element:
    """Least common right multiple in the group: ``(x^-1 ∧_R y^-1)^-1``."""
    x._check(y)
    return right_meet(x.inverse(), y.inverse()).inverse()
