"""Algorithms for finitely generated abelian subgroups.

Everything rests on two facts about a basis ``h_1 .. h_n`` of an abelian
subgroup with ``K = max t(h_i)``: the map ``a -> t(h_1^a_1 ... h_n^a_n)`` is
squeezed between ``||a||/D1`` and ``D2 ||a||`` (sup norm), and translation
numbers are conjugacy invariant.  So every search below is a finite scan of
integer vectors in increasing sup-norm shells.

Shell scans are pruned by abelianization: ``h^a`` can only equal (or be
conjugate to) ``g`` when the abelianized exponents agree, which is a linear
condition on ``a``.  One coordinate is then solved for rather than looped
over.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .conjugacy import is_conjugate
from .core import Element, exponent_vector
from .errors import Budget, InputError, MathDomainError, as_budget
from .hnf import determinant, hermite_normal_form
from .linear import PowerTable, identity as _mat_identity, mul as _mat_mul, burau, power_traces
from .simultaneous import CommutingTuple, is_simultaneously_conjugate
from .translation import translation_number

IntVector = tuple[int, ...]

__all__ = [
    "AbelianPresentation",
    "dirichlet_approx",
    "norm_constants",
    "presentation",
    "integer_relation",
    "hnf_complement",
    "abelian_basis",
    "member",
    "conj_member",
    "subgroups_equal",
    "subgroups_conjugate",
]


# ---------------------------------------------------------------- numerics


def dirichlet_approx(x: Sequence, M: int) -> tuple[int, IntVector]:
    """Simultaneous approximation by pigeonhole on fractional parts.

    Returns ``(k, a)`` with ``1 <= k <= M**n`` and ``|k*x_i - a_i| < 1/M``.
    Entries of ``x`` may be ints, Fractions or anything ``Fraction`` accepts.
    """
    if M < 1:
        raise InputError("M must be a positive integer")
    xs = [Fraction(v) for v in x]
    boxes: dict[tuple[int, ...], tuple[int, IntVector]] = {}
    for k in range(M ** len(xs) + 1):
        floors = tuple(math.floor(k * v) for v in xs)
        box = tuple(math.floor((k * v - f) * M) for v, f in zip(xs, floors))
        if box in boxes:
            k0, f0 = boxes[box]
            return k - k0, tuple(a - b for a, b in zip(floors, f0))
        boxes[box] = (k, floors)
    raise AssertionError("pigeonhole failed")  # unreachable


def norm_constants(n: int, K: Fraction | int, L: int) -> tuple[Fraction, Fraction]:
    """``(D1, D2) = ((2L)^(n+1) (nK)^n, nK)`` evaluated exactly."""
    K = Fraction(K)
    if n < 1 or L < 1:
        raise InputError("n and L must be positive")
    if K <= 0:
        raise InputError("K must be positive")
    return Fraction(2 * L) ** (n + 1) * (n * K) ** n, n * K


# ------------------------------------------------------------ presentation


@dataclass(frozen=True)
class AbelianPresentation:
    """Commuting generators with their translation numbers.

    ``coordinates[j]`` expresses ``generators[j]`` as an exponent vector over
    the generators the presentation was derived from (identity rows when it
    was built directly).
    """

    generators: CommutingTuple
    translation: tuple[Fraction, ...]
    is_basis: bool = False
    coordinates: tuple[IntVector, ...] = field(default=())

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def K(self) -> Fraction:
        return max(self.translation, default=Fraction(0))

    def constants(self) -> tuple[Fraction, Fraction]:
        S = self.generators[0].structure
        return norm_constants(self.rank, self.K, S.max_word_length)

    def evaluate(self, a: Sequence[int]) -> Element:
        return _Evaluator(self.generators)(a)


def presentation(gens: Iterable[Element] | AbelianPresentation, budget: Budget | int | None = None) -> AbelianPresentation:
    if isinstance(gens, AbelianPresentation):
        return gens
    budget = as_budget(budget)
    t = CommutingTuple(gens)
    n = len(t)
    return AbelianPresentation(
        generators=t,
        translation=tuple(translation_number(g, budget) for g in t),
        coordinates=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)),
    )


class _Evaluator:
    """``a -> h_1^a_1 ... h_n^a_n`` with cached powers.

    ``shadow(a)`` gives the image of the same product under a cheap linear
    representation (None when the structure has none), used to discard
    candidates before the exact product is formed.
    """

    def __init__(self, gens: Sequence[Element]):
        self.gens = list(gens)
        self.cache: list[dict[int, Element]] = []
        for g in self.gens:
            one = Element.identity(g.structure)
            self.cache.append({0: one, 1: g, -1: g.inverse()})
        tables = [PowerTable(g) for g in self.gens]
        self.tables = tables if tables and tables[0].pos is not None else None

    def shadow(self, a: Sequence[int]):
        if self.tables is None:
            return None
        m = _mat_identity(len(self.tables[0].pos))
        for table, k in zip(self.tables, a):
            if k:
                m = _mat_mul(m, table(k))
        return m

    def power(self, i: int, k: int) -> Element:
        c = self.cache[i]
        if k not in c:
            step = 1 if k > 0 else -1
            c[k] = self.power(i, k - step) * c[step] if abs(k) < 64 else c[step] ** abs(k)
        return c[k]

    def __call__(self, a: Sequence[int]) -> Element:
        out = Element.identity(self.gens[0].structure)
        for i, k in enumerate(a):
            if k:
                out = out * self.power(i, k)
        return out


# ------------------------------------------------------------ shell scans


def _shell(n: int, m: int, rows: Sequence[tuple[Sequence[int], int]]) -> list[IntVector]:
    """Vectors with sup norm exactly ``m`` satisfying ``row . a = rhs`` for every row.

    Sorted lexicographically.  The first coordinate attaining ``|a_j| = m``
    is fixed, and when some row has a usable coefficient one other
    coordinate is solved for instead of enumerated.
    """
    if m == 0:
        zero = (0,) * n
        return [zero] if all(rhs == 0 for _, rhs in rows) else []
    out = []
    for j in range(n):
        solve = None
        for coeffs, rhs in rows:
            for i in reversed(range(n)):
                if i != j and coeffs[i]:
                    solve = (i, coeffs, rhs)
                    break
            if solve:
                break
        free = [i for i in range(n) if i != j and (solve is None or i != solve[0])]
        ranges = [range(-m + 1, m) if i < j else range(-m, m + 1) for i in free]
        for sign in (1, -1):
            for vals in itertools.product(*ranges):
                a = [0] * n
                a[j] = sign * m
                for i, v in zip(free, vals):
                    a[i] = v
                if solve is not None:
                    i, coeffs, rhs = solve
                    r = rhs - sum(c * v for c, v in zip(coeffs, a))
                    if r % coeffs[i]:
                        continue
                    v = r // coeffs[i]
                    if abs(v) > (m - 1 if i < j else m):
                        continue
                    a[i] = v
                if all(sum(c * v for c, v in zip(coeffs, a)) == rhs for coeffs, rhs in rows):
                    out.append(tuple(a))
    out.sort()
    return out


def _abelian_rows(gens: Sequence[Element], target: Sequence[int]) -> list[tuple[list[int], int]]:
    """Linear conditions ``sum_i a_i e(h_i) = e(g)`` coordinatewise."""
    vecs = [exponent_vector(g) for g in gens]
    return [([v[c] for v in vecs], target[c]) for c in range(len(target))]


def _first_positive(a: Sequence[int]) -> bool:
    return next((v for v in a if v), 0) > 0


def _primitive(a: Sequence[int]) -> IntVector:
    g = math.gcd(*a)
    a = tuple(v // g for v in a)
    return a if _first_positive(a) else tuple(-v for v in a)


# ------------------------------------------------------------ relations


def integer_relation(gens: Iterable[Element] | AbelianPresentation, budget: Budget | int | None = None) -> IntVector | None:
    """A primitive nonzero ``a`` with ``prod h_i^a_i = 1``, or None if independent.

    Scans shells ``1 <= ||a|| <= (2 n K L)^n``; the first hit in
    lexicographic order (sign normalized so the first nonzero entry is
    positive) is returned.
    """
    budget = as_budget(budget)
    pres = presentation(gens, budget)
    gs = list(pres.generators)
    n = len(gs)
    if n == 0:
        return None
    for i, g in enumerate(gs):
        if g.is_identity():
            return tuple(int(j == i) for j in range(n))
    S = gs[0].structure
    bound = math.floor((2 * n * pres.K * S.max_word_length) ** n)
    rows = _abelian_rows(gs, (0,) * len(exponent_vector(gs[0])))
    phi = _Evaluator(gs)
    one = Element.identity(S)
    target = burau(one)
    for m in range(1, bound + 1):
        for a in _shell(n, m, rows):
            budget.tick(what="integer relation")
            if not _first_positive(a):
                continue
            if target is not None and phi.shadow(a) != target:
                continue
            if phi(a).is_identity():
                return _primitive(a)
    return None


def hnf_complement(a: Sequence[int]) -> list[list[int]]:
    """A unimodular integer matrix whose first row is ``a``.

    Rows after the first are normalized so their first nonzero entry is
    positive.
    """
    a = [int(v) for v in a]
    if not a or not any(a):
        raise InputError("vector must be nonzero")
    if math.gcd(*a) != 1:
        raise InputError(f"vector {tuple(a)} is not primitive")
    _, _, u_inv = hermite_normal_form([[v] for v in a])
    # U a^T = e_1, so a^T is the first column of U^-1
    rows = [list(col) for col in zip(*u_inv)]
    assert rows[0] == a
    for r in rows[1:]:
        if not _first_positive(r):
            r[:] = [-v for v in r]
    return rows


# ------------------------------------------------------------ bases


def _orient(g: Element) -> Element:
    inv = g.inverse()

    def key(x):
        return (sum(exponent_vector(x)), x.inf + x.sup, x.sort_key())

    return g if key(g) >= key(inv) else inv


def abelian_basis(gens: Iterable[Element] | AbelianPresentation, budget: Budget | int | None = None) -> AbelianPresentation:
    """A basis of the subgroup generated by ``gens``.

    While a relation ``a`` exists, complete it to a unimodular matrix and
    replace the generators by the images of the remaining rows; the
    subgroup is unchanged and the generator count drops by one.
    """
    budget = as_budget(budget)
    pres = presentation(gens, budget)
    if pres.is_basis:
        return pres
    base_n = len(pres.generators)
    cur = list(pres.generators)
    coords = [list(c) for c in pres.coordinates]
    while cur:
        rel = integer_relation(cur, budget)
        if rel is None:
            break
        comp = hnf_complement(rel)[1:]
        phi = _Evaluator(cur)
        new, new_coords = [], []
        for row in comp:
            new.append(phi(row))
            new_coords.append([sum(r * c[k] for r, c in zip(row, coords)) for k in range(base_n)])
        keep = [i for i, g in enumerate(new) if not g.is_identity()]
        cur = [new[i] for i in keep]
        coords = [new_coords[i] for i in keep]
    out = []
    for g, c in zip(cur, coords):
        o = _orient(g)
        out.append((o, tuple(c) if o == g else tuple(-v for v in c)))
    out.sort(key=lambda p: p[0].sort_key())
    gens_out = tuple.__new__(CommutingTuple, (g for g, _ in out))
    return AbelianPresentation(
        generators=gens_out,
        translation=tuple(translation_number(g, budget) for g in gens_out),
        is_basis=True,
        coordinates=tuple(c for _, c in out),
    )


def _basis_and_source(gens, budget) -> tuple[AbelianPresentation, AbelianPresentation]:
    src = presentation(gens, budget)
    return abelian_basis(src, budget), src


def _to_source(a: Sequence[int], basis: AbelianPresentation, src_n: int) -> IntVector:
    return tuple(sum(v * c[k] for v, c in zip(a, basis.coordinates)) for k in range(src_n))


def _search_shells(g: Element, basis: AbelianPresentation, budget: Budget, what: str, conjugate: bool = False):
    """Yield ``(a, h^a)`` over the shells allowed for ``g``; the caller tests them.

    Candidates whose linear shadow cannot match ``g`` (equal matrices, or
    equal power traces when ``conjugate``) are skipped without evaluation.
    """
    gs = list(basis.generators)
    n = len(gs)
    t = translation_number(g, budget)
    D1, D2 = basis.constants()
    lo = max(1, math.ceil(t / D2))
    hi = math.floor(D1 * t)
    rows = _abelian_rows(gs, exponent_vector(g))
    phi = _Evaluator(gs)
    target = burau(g)
    if target is not None and conjugate:
        target = power_traces(target)
    for m in range(lo, hi + 1):
        for a in _shell(n, m, rows):
            budget.tick(what=what)
            if target is not None:
                sh = phi.shadow(a)
                if (power_traces(sh) if conjugate else sh) != target:
                    continue
            yield a, phi(a)


def member(
    g: Element, gens: Iterable[Element] | AbelianPresentation, budget: Budget | int | None = None
) -> IntVector | None:
    """Exponents ``a`` over ``gens`` with ``prod gens_i^a_i = g``, or None.

    The search runs on a basis, between the norm bounds ``t(g)/D2`` and
    ``D1 t(g)``; the basis witness is translated back to the given generators.
    """
    budget = as_budget(budget)
    basis, src = _basis_and_source(gens, budget)
    if src.rank and src.generators[0].structure != g.structure:
        raise InputError("element and generators live in different structures")
    if g.is_identity():
        return (0,) * src.rank
    if basis.rank == 0:
        return None
    for a, h in _search_shells(g, basis, budget, "membership"):
        if h == g:
            return _to_source(a, basis, src.rank)
    return None


def conj_member(
    g: Element, gens: Iterable[Element] | AbelianPresentation, budget: Budget | int | None = None
) -> tuple[IntVector, Element] | None:
    """``(a, w)`` with ``w^-1 (prod gens_i^a_i) w = g``, or None."""
    budget = as_budget(budget)
    basis, src = _basis_and_source(gens, budget)
    if g.is_identity():
        return (0,) * src.rank, Element.identity(g.structure)
    if basis.rank == 0:
        return None
    for a, h in _search_shells(g, basis, budget, "conjugacy membership", conjugate=True):
        w = is_conjugate(h, g, budget)
        if w is not None:
            return _to_source(a, basis, src.rank), w
    return None


def subgroups_equal(
    gens1: Iterable[Element] | AbelianPresentation,
    gens2: Iterable[Element] | AbelianPresentation,
    budget: Budget | int | None = None,
) -> bool:
    """Whether both generator sets generate the same subgroup."""
    budget = as_budget(budget)
    p1, p2 = presentation(gens1, budget), presentation(gens2, budget)
    b1, b2 = abelian_basis(p1, budget), abelian_basis(p2, budget)
    if b1.rank != b2.rank:
        return False
    return all(member(h, b2, budget) is not None for h in p1.generators) and all(
        member(h, b1, budget) is not None for h in p2.generators
    )


def subgroups_conjugate(
    gens1: Iterable[Element] | AbelianPresentation,
    gens2: Iterable[Element] | AbelianPresentation,
    budget: Budget | int | None = None,
) -> Element | None:
    """A ``w`` with ``w^-1 <gens1> w = <gens2>``, or None.

    With bases ``h`` of the first and ``h'`` of the second subgroup, look for
    vectors ``k_1 .. k_n`` such that the ``h^k_i`` are simultaneously
    conjugate to the ``h'_i`` and themselves form a basis of ``<h>``.  As
    ``h`` is a basis, the latter means the matrix of the ``k_i`` has
    determinant ``±1``.  Each ``k_i`` has norm between ``t(h'_i)/D2`` and
    ``D1 t(h'_i)``.
    """
    budget = as_budget(budget)
    b1 = abelian_basis(gens1, budget)
    b2 = abelian_basis(gens2, budget)
    if b1.rank != b2.rank:
        return None
    if b1.rank == 0:
        src = presentation(gens1, budget)
        if not src.generators:
            raise MathDomainError("cannot infer a structure from two empty generator sets")
        return Element.identity(src.generators[0].structure)
    if b1.generators[0].structure != b2.generators[0].structure:
        raise InputError("subgroups live in different structures")

    candidates: list[list[tuple[IntVector, Element]]] = []
    for target in b2.generators:
        found = []
        for a, h in _search_shells(target, b1, budget, "subgroup conjugacy", conjugate=True):
            if is_conjugate(h, target, budget) is not None:
                found.append((a, h))
        if not found:
            return None
        candidates.append(found)

    for combo in itertools.product(*candidates):
        budget.tick(what="subgroup conjugacy")
        if abs(determinant([list(a) for a, _ in combo])) != 1:
            continue
        try:
            tup = CommutingTuple(h for _, h in combo)
        except MathDomainError:  # pragma: no cover - images of a basis commute
            continue
        w = is_simultaneously_conjugate(tup, b2.generators, budget)
        if w is not None:
            return w
    return None


def iter_shell(n: int, m: int) -> Iterator[IntVector]:
    """All integer vectors of length ``n`` with sup norm ``m``, lexicographically."""
    return iter(_shell(n, m, []))
