import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmacolor import _kernels_py, kernels

BACKENDS = [_kernels_py]
try:
    BACKENDS.append(importlib.import_module("sigmacolor._kernels"))
except ImportError:  # extension not built; the fallback is still covered
    pass


@st.composite
def ranked(draw):
    n = draw(st.integers(0, 30))
    lo, hi = [], []
    for _ in range(n):
        a = draw(st.integers(0, 40))
        lo.append(a)
        hi.append(a + draw(st.integers(1, 10)))
    return lo, hi


def naive_overlap(lo, hi):
    return max((sum(1 for a, b in zip(lo, hi) if a <= x <= b) for x in lo), default=0)


def naive_conflict(lo, hi, colors):
    n = len(lo)
    for i in range(n):
        for j in range(i + 1, n):
            if colors[i] == colors[j] and lo[i] <= hi[j] and lo[j] <= hi[i]:
                return (i, j)
    return None


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__)
class TestBackend:
    @settings(max_examples=150)
    @given(ranked())
    def test_max_overlap(self, mod, case):
        assert mod.max_overlap(*case) == naive_overlap(*case)

    @settings(max_examples=150)
    @given(ranked(), st.data())
    def test_first_conflict(self, mod, case, data):
        lo, hi = case
        colors = data.draw(st.lists(st.integers(0, 4), min_size=len(lo), max_size=len(lo)))
        found = mod.first_conflict(lo, hi, colors)
        assert (None if found is None else tuple(found)) == naive_conflict(lo, hi, colors)

    @settings(max_examples=150)
    @given(ranked())
    def test_greedy_is_optimal(self, mod, case):
        lo, hi = case
        colors = list(mod.greedy_by_left(lo, hi))
        assert naive_conflict(lo, hi, colors) is None
        assert len(set(colors)) == naive_overlap(lo, hi)

    @settings(max_examples=150)
    @given(ranked())
    def test_first_fit_replay(self, mod, case):
        lo, hi = case
        expected = []
        for k in range(len(lo)):
            used = {expected[i] for i in range(k) if lo[i] <= hi[k] and lo[k] <= hi[i]}
            c = 0
            while c in used:
                c += 1
            expected.append(c)
        assert list(mod.first_fit_replay(lo, hi)) == expected

    def test_empty(self, mod):
        assert mod.max_overlap([], []) == 0
        assert mod.first_conflict([], [], []) is None
        assert list(mod.greedy_by_left([], [])) == []


@settings(max_examples=100)
@given(ranked(), st.data())
def test_backends_agree(case, data):
    lo, hi = case
    colors = data.draw(st.lists(st.integers(0, 3), min_size=len(lo), max_size=len(lo)))
    results = [
        (m.max_overlap(lo, hi), m.first_conflict(lo, hi, colors), list(m.greedy_by_left(lo, hi)), list(m.first_fit_replay(lo, hi)))
        for m in BACKENDS
    ]
    results = [(a, None if b is None else tuple(b), c, d) for a, b, c, d in results]
    assert all(r == results[0] for r in results)


def test_env_var_forces_fallback():
    code = "from sigmacolor import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SIGMACOLOR_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
