import pytest

import qfano

ALL_METHODS = ["recursive", "closed-a", "closed-b", "inversion", "first-positive", "recurrence"]


def test_h_poly_values():
    assert qfano.h_poly(3, 2) == "1 + q^2 + 2q^4 + q^6"
    assert qfano.h_poly(5, 0) == "1"
    assert qfano.h_poly(2, 1, "recurrence") == "1 + q^2"


def test_h_methods_agree():
    for n in range(1, 7):
        for m in range(n):
            reference = qfano.h_poly(n, m)
            for method in ALL_METHODS:
                assert qfano.h_poly(n, m, method) == reference


def test_h_poly_terms():
    assert qfano.h_poly_terms(3, 2) == [(0, 1), (2, 1), (4, 2), (6, 1)]


def test_qseries():
    assert qfano.q_binomial(3, 1, 2) == "1 + q^2 + q^4"
    assert qfano.grassmann_poincare(1, 3) == "1 + q^2 + q^4"
    assert qfano.ogr_poincare(2, 3) == "1 + 2q^2 + 3q^4 + 3q^6 + 2q^8 + q^10"
    assert qfano.p_poly(3, 1) == "1 + q^2 + q^4 + q^6"


def test_betti_vectors():
    assert qfano.betti(3, 1) == [1, 0, 1, 6, 2, 6, 16, 6, 2, 6, 1, 0, 1]
    assert qfano.betti(1, 0) == [1, 2, 1]
    assert qfano.cohomology_betti(3, 2) == qfano.betti(3, 1)
    assert qfano.example_f1_betti(4) == qfano.betti(3, 1)


def test_multiplicities_and_stalks():
    assert qfano.s_number(2, 1, 0, 1) == 1
    assert qfano.s_number(2, 1, 0, 0) == 0
    assert qfano.stalk_dims(3, 2, 0) == {-8: 1, -6: 1, -4: 2, -2: 1}
    assert qfano.n_generating_poly(2, 2) == "q^-3 + q^-1 + q + q^3"
    assert (0, 1, 1) in qfano.decomp_entries(3, 2)


def test_verification_suites():
    reports = qfano.verify_inductive(6)
    assert len(reports) == 21
    assert all(r["pass"] for r in reports)
    assert all(r["pass"] for r in qfano.verify_bailey(3, 5))
    assert all(r["pass"] for r in qfano.verify_matrix_inversion(3, 12, -2, 5))
    assert all(r["pass"] for r in qfano.verify_quad_transform(4, -6, -16, -2))


def test_range_errors_become_value_errors():
    with pytest.raises(ValueError):
        qfano.h_poly(3, 3)
    with pytest.raises(ValueError):
        qfano.betti(2, 2)
    with pytest.raises(ValueError):
        qfano.stalk_dims(3, 1, 2)
