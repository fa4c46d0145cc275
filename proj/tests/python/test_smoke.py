"""Python smoke tests for the _core extension."""

import os
import sys

try:
    from skeinalg import _core as core
except ImportError:
    core_dir = os.environ.get("SKEIN_CORE_DIR")
    if core_dir:
        sys.path.insert(0, core_dir)
    import _core as core


def test_normal_form():
    assert core.nf("ba") == "(q^2)*ab"
    terms = core.nf_terms("ad")
    words = {(t["family"], t["i"], t["j"], t["k"]) for t in terms}
    assert ("A", 0, 0, 0) in words  # the unit
    assert ("A", 0, 1, 1) in words  # bc


def test_quantum_int():
    assert core.quantum_int(1) == "1"
    assert "q" in core.quantum_int(2)


def test_catalan():
    assert [core.catalan_dim(n) for n in range(1, 6)] == [1, 2, 5, 14, 42]


def test_jones_wenzl():
    assert core.jones_wenzl_idempotent(3)
    assert core.closure_is_chebyshev(4)


def test_uv_lemma():
    assert core.check_uvkm(1, 0)
    assert core.check_uvkm_stated(1, 1)


def test_coproduct():
    d = core.coproduct("a")
    pairs = {(t["left"], t["right"]) for t in d}
    assert pairs == {("a", "a"), ("b", "c")}
    assert core.counit("ad") == "1"


def test_hh0_torsion():
    pair = core.tau_torsion_pair(2)
    assert pair["q2_minus_1_ab"]["verdict"] == "zero"
    assert pair["ab"]["verdict"] == "nonzero"


def test_core_loop():
    r = core.core_loop()
    assert r["bigon_value"] == "(2)"
    assert r["certificate"]["verdict"] == "nonzero"


def test_sphere_slide():
    rep = core.sphere_slide(16)
    assert rep["N"] == 2
    assert rep["left_vanishes"] and rep["right_nonzero"]


def test_verify_subset():
    results = core.verify(["tl-dimensions", "frobenius"], [16], 5, 2)
    assert all(r["passed"] for r in results)
