import os

import pytest

import _sewnet as sn


def fixture(name):
    return os.path.join(os.environ["SEWNET_FIXTURES"], name)


def test_category_loads_and_verifies():
    C = sn.load_category(fixture("fibonacci.cat"))
    assert C.num_labels == 2
    assert C.names == ["1", "tau"]
    phi = (1 + 5 ** 0.5) / 2
    assert abs(C.qdim(1) - phi) < 1e-12
    assert abs(C.global_dim2 - (phi + 2)) < 1e-12
    checks = sn.check_category(C)
    assert checks
    assert all(c["pass"] for c in checks)


def test_builtin_matches_file():
    A = sn.make_ising()
    B = sn.load_category(fixture("ising.cat"))
    assert A.num_labels == B.num_labels == 3
    assert abs(A.global_dim2 - 4.0) < 1e-12
    assert abs(A.qdim(1) - B.qdim(1)) < 1e-15
    assert A.nfus(1, 1, 2) == 1


def test_missing_file_raises():
    with pytest.raises(RuntimeError):
        sn.load_category(fixture("no_such_file.cat"))


def test_cardy_and_sewing():
    C = sn.make_fibonacci()
    cardy = sn.canonical_cardy(C)
    rep = sn.verify_cardy(cardy)
    assert rep["pass"]
    names = [c["name"] for c in rep["checks"]]
    assert "condition IV (cardy)" in names
    S = sn.canonical_correlators(cardy)
    res = sn.check_sewing(S)
    assert len(res) == 32
    assert all(r["pass"] for r in res)
    assert sn.relation_encoding(1)


def test_extraction_round_trip():
    C = sn.make_fibonacci()
    cardy = sn.canonical_cardy(C)
    S = sn.canonical_correlators(cardy)
    X = sn.extract_cardy(S)
    assert sn.is_cardy_isomorphic(X, cardy)


def test_stringnet_dims():
    fib = sn.make_fibonacci()
    assert sn.stringnet_dim(fib, 0, []) == 1
    assert sn.stringnet_dim(fib, 1, []) == 4
    assert sn.stringnet_dim(fib, 1, [(0, 0)]) == 4
    vect = sn.make_vect()
    assert sn.stringnet_dim(vect, 2, []) == 1
