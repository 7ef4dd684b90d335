"""A cheap multiplicative shadow of braid elements used to prune searches.

The Burau representation, evaluated at an integer ``t`` and reduced modulo a
large prime, is a homomorphism into 4x4 (n x n) matrices over a finite
field.  Equal elements have equal matrices and conjugate elements have
matrices with equal power traces, so a mismatch rules a candidate out
without computing any normal form.  Matches are always re-checked exactly.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Element
from .structures import BraidStructure

PRIME = (1 << 61) - 1
T = 3

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % PRIME for col in cols) for row in a)


@lru_cache(maxsize=None)
def _generator(n: int, i: int) -> Matrix:
    m = [list(r) for r in identity(n)]
    k = i - 1
    if i > 0:
        m[k][k], m[k][k + 1], m[k + 1][k], m[k + 1][k + 1] = (1 - T) % PRIME, T, 1, 0
    else:
        k = -i - 1
        tinv = pow(T, PRIME - 2, PRIME)
        m[k][k], m[k][k + 1], m[k + 1][k], m[k + 1][k + 1] = 0, 1, tinv, (1 - tinv) % PRIME
    return tuple(tuple(r) for r in m)


def burau(x: Element) -> Matrix | None:
    """Burau matrix of ``x`` modulo the prime, or None for non-braid structures."""
    S = x.structure
    if not isinstance(S, BraidStructure):
        return None
    m = identity(S.n)
    for a in x.word():
        m = mul(m, _generator(S.n, a))
    return m


def power_traces(m: Matrix) -> tuple[int, int]:
    """``(tr m, tr m^2)``: a conjugacy invariant that avoids a full product."""
    n = len(m)
    t1 = sum(m[i][i] for i in range(n)) % PRIME
    t2 = sum(m[i][j] * m[j][i] for i in range(n) for j in range(n)) % PRIME
    return t1, t2


class PowerTable:
    """Cached matrix powers ``M^k`` for one element and its inverse."""

    def __init__(self, x: Element):
        self.pos = burau(x)
        self.neg = burau(x.inverse()) if self.pos is not None else None
        self.cache: dict[int, Matrix] = {}

    def __call__(self, k: int) -> Matrix:
        if k not in self.cache:
            base = self.pos if k >= 0 else self.neg
            prev = k - 1 if k > 0 else k + 1
            if prev in self.cache:
                # shells grow one step at a time, so this is the common case
                self.cache[k] = mul(self.cache[prev], base)
                return self.cache[k]
            e = abs(k)
            r = identity(len(base))
            while e:
                if e & 1:
                    r = mul(r, base)
                e >>= 1
                if e:
                    base = mul(base, base)
            self.cache[k] = r
        return self.cache[k]
