import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmpal import _backend
from sturmpal.engine import locate_occurrences
from sturmpal.words import ParameterPair, expand, fibonacci_prefix

pairs = st.integers(1, 5).flatmap(
    lambda p: st.sampled_from([q for q in (p - 1, p + 1) if q >= 1]).map(lambda q: ParameterPair(p, q))
)

needs_ext = pytest.mark.skipif("cython" not in _backend.BACKENDS, reason="compiled kernels not built")


def test_python_backend_always_available():
    assert _backend.get("python").NAME == "python"
    with pytest.raises(ValueError):
        _backend.get("fortran")


@needs_ext
@pytest.mark.skipif(os.environ.get("STURMPAL_BACKEND") == "python", reason="fallback forced")
def test_default_is_compiled():
    assert _backend.get().NAME == "cython"


def test_env_var_forces_fallback():
    code = "from sturmpal import _backend; print(_backend.get().NAME)"
    env = dict(os.environ, STURMPAL_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def _columns(table):
    return (table.positions, table.kinds, table.lengths, table.origin_levels, table.forms, table.flagged)


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.lists(pairs, min_size=1, max_size=4), st.text(alphabet="ab", min_size=1, max_size=25))
def test_backends_agree(pis, seed):
    lw = expand(pis, seed)
    py = locate_occurrences(lw, "python")
    cy = locate_occurrences(lw, "cython")
    for a, b in zip(_columns(py), _columns(cy)):
        assert a.dtype == b.dtype
        assert np.array_equal(a, b)
    assert np.array_equal(py.seed_forms, cy.seed_forms)


@needs_ext
def test_backends_agree_on_long_seed():
    lw = expand("2,1;1,2", seed=fibonacci_prefix(20000))
    py = locate_occurrences(lw, "python")
    cy = locate_occurrences(lw, "cython")
    assert all(np.array_equal(a, b) for a, b in zip(_columns(py), _columns(cy)))


@pytest.mark.parametrize("name", sorted(_backend.BACKENDS))
def test_seed_radii(name):
    k = _backend.get(name)
    x = np.frombuffer(b"\x00\x01\x00\x00\x01\x00\x01\x00", dtype=np.uint8).copy()  # abaababa
    llen, plen = k.seed_radii(x)
    assert llen.tolist() == [1, 3, 1, 1, 3, 5, 3, 1]
    assert plen.tolist() == [0, 0, 6, 0, 0, 0, 0, 0]
    llen, plen = k.seed_radii(np.zeros(0, dtype=np.uint8))
    assert len(llen) == len(plen) == 0
