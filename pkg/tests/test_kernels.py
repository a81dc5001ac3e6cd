import os
import random
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import graphs
from degseq import _kernels, _pykernels
from degseq.transform import fixture, sample_member

ck = pytest.importorskip("degseq._ckernels")


def _args(g):
    return list(g.masks), g.order


@given(graphs(max_order=10))
def test_backends_agree(g):
    masks, n = _args(g)
    assert _pykernels.canonical_labeling(masks, n)[1] == ck.canonical_labeling(masks, n)[1]
    assert (_pykernels.hamiltonian_cycle(masks, n) is None) == (ck.hamiltonian_cycle(masks, n) is None)
    assert (_pykernels.hamiltonian_path(masks, n) is None) == (ck.hamiltonian_path(masks, n) is None)
    assert bin(_pykernels.max_independent_set(masks, n)).count("1") == bin(
        ck.max_independent_set(masks, n)).count("1")
    for k in range(3, n + 1):
        assert (_pykernels.cycle_of_length(masks, n, k) is None) == (ck.cycle_of_length(masks, n, k) is None)


def test_backends_agree_on_dense_symmetric_graphs():
    for g in (fixture("icosahedron"), fixture("complete", 12), fixture("complete_bipartite", 6, 6),
              fixture("petersen"), fixture("clique_union", (4, 4, 4))):
        masks, n = _args(g)
        assert _pykernels.canonical_labeling(masks, n)[1] == ck.canonical_labeling(masks, n)[1]


def test_backends_agree_on_samples():
    rng = random.Random(2)
    for _ in range(20):
        g = sample_member((6, 7), 100, rng.getrandbits(32))
        masks, n = _args(g)
        assert _pykernels.canonical_labeling(masks, n)[1] == ck.canonical_labeling(masks, n)[1]
        assert (_pykernels.hamiltonian_cycle(masks, n) is None) == (ck.hamiltonian_cycle(masks, n) is None)


def test_default_backend_is_compiled():
    assert _kernels.BACKEND_NAME == "compiled"


def test_fallback_selected_by_env():
    env = dict(os.environ, DEGSEQ_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import degseq; print(degseq.BACKEND_NAME)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout.strip()
    assert out == "python"
