"""Compiled kernels and their pure-Python originals must agree."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings

from nglab import kernels, oracles
from nglab._accel import JIT_ENABLED
from nglab.generators import complete_multipartite, cycle, petersen
from nglab.graph import Graph

from test_graph import graphs


def both(name):
    fn = getattr(kernels, name)
    return fn, fn.py_func


def test_fallback_flag_is_consistent():
    if JIT_ENABLED:
        assert kernels.chromatic_kernel is not kernels.chromatic_kernel.py_func
    else:
        assert kernels.chromatic_kernel is kernels.chromatic_kernel.py_func


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_chromatic_parity(g):
    fast, slow = both("chromatic_kernel")
    c1, col1 = fast(g.array)
    c2, col2 = slow(g.array)
    assert c1 == c2
    assert np.array_equal(col1, col2)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_automorphism_parity(g):
    fast, slow = both("automorphism_kernel")
    assert np.array_equal(fast(g.array, np.int64(0)), slow(g.array, np.int64(0)))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_canonical_parity(g):
    fast, slow = both("canonical_kernel")
    k1, p1 = fast(g.array)
    k2, p2 = slow(g.array)
    assert k1 == k2 and np.array_equal(p1, p2)


@pytest.mark.parametrize("g", [cycle(5), complete_multipartite((3, 2)), Graph.complete(4)])
@pytest.mark.parametrize("proper", [False, True])
def test_distinguishing_parity(g, proper):
    perms = oracles.automorphisms(g).non_identity()
    fast, slow = both("min_distinguishing_colors")
    r1, c1 = fast(g.array, perms, 1, proper)
    r2, c2 = slow(g.array, perms, 1, proper)
    assert r1 == r2 and np.array_equal(c1, c2)


def test_key_helpers():
    g = petersen()
    assert kernels.key_from_adj(g.array) == g.key()
    assert np.array_equal(kernels.adj_from_key(g.key(), g.n), g.array)
    assert np.array_equal(kernels.complement_adj.py_func(g.array), kernels.complement_adj(g.array))


def test_extension_parity():
    reps = np.array([Graph.complete(3).key(), Graph.empty(3).key()], np.int64)
    fast, slow = both("extension_keys")
    assert np.array_equal(fast(reps, 3), slow(reps, 3))


def test_pure_python_fallback_end_to_end():
    code = (
        "from nglab import _accel, kernels\n"
        "from nglab.cli import analyze_graph, table2_rows\n"
        "from nglab.generators import cycle\n"
        "assert not _accel.JIT_ENABLED and kernels.canonical_kernel.py_func is kernels.canonical_kernel\n"
        "r = analyze_graph(cycle(5))\n"
        "assert r['is_ng'] and r['is_ngd'] is False and r['oracle_agrees']\n"
        "assert all(row['match'] for row in table2_rows())\n"
    )
    env = dict(os.environ, NGLAB_DISABLE_JIT="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
