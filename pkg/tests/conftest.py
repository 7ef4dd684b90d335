from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from garside import BraidStructure, Element, FreeAbelianStructure, normalize  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

B3 = BraidStructure(3)
B4 = BraidStructure(4)
Z2 = FreeAbelianStructure(2)


def w(text: str | list[int], S=B4) -> Element:
    """Element from ``"s1 s2 -s3"``-style text or a signed atom list."""
    if isinstance(text, str):
        word = [int(t.replace("s", "")) for t in text.split()]
    else:
        word = text
    return normalize(word, S)


G1 = w("s1 s2 s3")
G2 = w("s3 s2 s1")
G3 = w("s1 s3 s2")
G4 = w("s2 s1 s3")
DELTA = Element.delta_power(B4, 1)


def words(S, max_len: int = 8, min_len: int = 0):
    n = S.atom_count
    letters = st.integers(1, n).flatmap(lambda a: st.sampled_from([a, -a]))
    return st.lists(letters, min_size=min_len, max_size=max_len)


def elements(S=B4, max_len: int = 8, min_len: int = 0):
    return words(S, max_len, min_len).map(lambda ws: normalize(ws, S))


def short_elements(S=B4, max_canonical_length: int = 3):
    """Elements Δ^r s_1..s_k with small r and k <= max_canonical_length."""
    simples = sorted(S.simples(), key=S.sort_key)
    return st.builds(
        lambda r, ss: Element.from_simples(S, ss, r),
        st.integers(-2, 2),
        st.lists(st.sampled_from(simples), max_size=max_canonical_length),
    ).filter(lambda e: e.canonical_length <= max_canonical_length)


@pytest.fixture
def b4():
    return B4


@pytest.fixture
def b3():
    return B3


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
