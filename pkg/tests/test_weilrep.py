import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from unfoldkit import weilrep as wr
from unfoldkit.weilrep import FiniteWeilContext, Heis, PartialFourier, weil_apply

CTX = FiniteWeilContext(5, 2)


def close(a, b):
    return np.max(np.abs(np.asarray(a) - np.asarray(b))) < 1e-8


def test_context_guards():
    with pytest.raises(wr.WeilError):
        FiniteWeilContext(2, 3)
    with pytest.raises(wr.WeilError):
        FiniteWeilContext(9, 2)
    with pytest.raises(wr.WeilError):
        FiniteWeilContext(5, 11)  # 5^11 points


def test_central_character():
    phi = CTX.random_function(1)
    assert close(weil_apply(CTX, Heis((0, 0), (0, 0), 3), phi), CTX.psi(3) * phi)


def test_translation():
    phi = CTX.random_function(2)
    out = weil_apply(CTX, Heis((1, 3), (0, 0), 0), phi)
    for xi in [(0, 0), (2, 4), (4, 1)]:
        shifted = ((xi[0] + 1) % 5, (xi[1] + 3) % 5)
        assert abs(out[CTX.point_index(xi)] - phi[CTX.point_index(shifted)]) < 1e-12


def test_identity_levi():
    phi = CTX.random_function(3)
    assert close(weil_apply(CTX, wr.levi(np.eye(2, dtype=np.int64), 5), phi), phi)


def test_gamma():
    assert abs(CTX.gamma(1) - 1) < 1e-12
    assert all(abs(abs(CTX.gamma(a)) - 1) < 1e-12 for a in range(1, 5))
    with pytest.raises(wr.WeilError):
        CTX.gamma(0)


def test_fourier_is_unitary_of_order_four():
    phi = CTX.random_function(4)
    f = PartialFourier(2)
    assert abs(np.linalg.norm(weil_apply(CTX, f, phi)) - np.linalg.norm(phi)) < 1e-8
    assert close(weil_apply(CTX, [f, f, f, f], phi), phi)


def test_non_siegel_rejected():
    m = np.zeros((4, 4), dtype=np.int64)
    m[2:, :2] = np.eye(2)
    m[:2, 2:] = -np.eye(2)
    with pytest.raises(wr.WeilError):
        weil_apply(CTX, wr.Sp.of(m, 5), CTX.random_function(0))


def test_partial_theta_full_sum():
    phi = CTX.random_function(5)
    assert abs(wr.partial_theta(CTX, 2, phi) - phi.sum()) < 1e-9


@pytest.mark.parametrize("fn", [wr.check_unitarity, wr.check_heisenberg_law, wr.check_gamma, wr.check_covariance])
def test_generic_checks(fn):
    for p, n in ((3, 3), (5, 2)):
        assert all(rec.ok for rec in fn(FiniteWeilContext(p, n)))


def test_partial_theta_equivariance():
    assert all(r.ok for r in wr.check_partial_theta(FiniteWeilContext(3, 4), 2))


def test_rank2_trace():
    assert all(r.ok for r in wr.check_rank2_trace(samples=10))


@pytest.fixture(scope="module")
def ctx7():
    return FiniteWeilContext(3, 7)


@pytest.mark.parametrize("fn", [wr.check_pqr, wr.check_adjugate, wr.check_xi_covariance, wr.check_invariance_vector])
def test_identity_checks_p3(ctx7, fn):
    recs = fn(ctx7, samples=2 if fn is not wr.check_xi_covariance else 5)
    assert recs and all(r.ok for r in recs)


def test_n1_records(ctx7):
    recs = wr.check_n1(ctx7, samples=1)
    main = [r for r in recs if not r.supplementary]
    assert main and all(r.ok for r in main)
    by = {r.identity: r.ok for r in recs if r.supplementary}
    assert by["n1'-a derived"] and by["n1''-a derived"]
    assert not by["n1'-a printed"] and not by["n1''-a printed"]


def test_report_ignores_supplementary():
    rep = wr.SuiteReport(3, 7)
    rep.records.append(wr.IdentityRecord("x", {}, 0.0, True))
    rep.records.append(wr.IdentityRecord("y", {}, 1.0, False, supplementary=True))
    assert rep.ok
    assert rep.by_identity() == {"x": True, "y": False}


# properties over F_5^2

coords = st.tuples(st.integers(0, 4), st.integers(0, 4))
heis_el = st.builds(Heis, coords, coords, st.integers(0, 4))


@given(heis_el, heis_el)
def test_heisenberg_law(a, b):
    phi = CTX.random_function(7)
    lhs = weil_apply(CTX, [a, b], phi)
    rhs = weil_apply(CTX, wr.heis_mul(a, b, 5), phi)
    assert close(lhs, rhs)


@given(heis_el, st.integers(0, 10 ** 6))
def test_unitarity(h, seed):
    rng = random.Random(seed)
    g = wr.random_siegel(rng, 2, 5)
    phi = CTX.random_function(seed)
    for el in (h, g):
        assert abs(np.linalg.norm(weil_apply(CTX, el, phi)) - np.linalg.norm(phi)) < 1e-8


@given(st.integers(1, 4), st.integers(1, 4))
def test_gamma_square_class(a, s):
    assert abs(CTX.gamma(a * s * s) - CTX.gamma(a)) < 1e-12


@given(heis_el, st.integers(0, 10 ** 6))
def test_covariance(h, seed):
    g = wr.random_siegel(random.Random(seed), 2, 5)
    phi = CTX.random_function(seed % 97)
    lhs = weil_apply(CTX, [g, h], phi)
    rhs = weil_apply(CTX, [wr.heis_act(h, g, 5), g], phi)
    assert close(lhs, rhs)
