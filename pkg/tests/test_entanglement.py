import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equibasis import entanglement, graph_basis


def test_schmidt_spectrum_product_state():
    omega = np.zeros((4, 4))
    omega[0, 0] = 1.0
    assert np.allclose(entanglement.schmidt_spectrum(omega), [1, 0, 0, 0])


def test_schmidt_spectrum_maximally_entangled():
    D = 6
    omega = np.eye(D) / math.sqrt(D)
    assert np.allclose(entanglement.schmidt_spectrum(omega), np.full(D, 1 / D))


def test_schmidt_spectrum_graph_qubit():
    omega = graph_basis.graph_family_state(2, 1.0, 0, 0).omega
    # Omega Omega^dag = I/2 by hand
    assert np.allclose(entanglement.schmidt_spectrum(omega), [0.5, 0.5])


def test_schmidt_spectrum_norm_contract():
    with pytest.raises(ValueError):
        entanglement.schmidt_spectrum(np.eye(3))
    lam = entanglement.schmidt_spectrum(np.eye(3) / math.sqrt(3))
    assert lam.sum() == pytest.approx(1.0, abs=1e-15)
    assert np.all(np.diff(lam) <= 0.0)


def test_entropy_cases():
    assert entanglement.entropy_of_entanglement([1.0, 0.0, 0.0]) == 0.0
    for D in (2, 5, 100):
        assert entanglement.entropy_of_entanglement(np.full(D, 1 / D)) == pytest.approx(
            1.0, abs=1e-12
        )
    # log_4(2) = 1/2 by hand
    assert entanglement.entropy_of_entanglement([0.5, 0.5, 0.0, 0.0]) == pytest.approx(0.5)
    assert entanglement.entropy_of_entanglement([1.0]) == 0.0


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 30), st.integers(0, 2**32 - 1))
def test_entropy_stays_in_unit_interval(D, seed):
    rng = np.random.default_rng(seed)
    lam = rng.random(D)
    lam /= lam.sum()
    value = entanglement.entropy_of_entanglement(lam)
    assert 0.0 <= value <= 1.0


def test_g_concurrence_numeric_cases():
    product = np.zeros((3, 3))
    product[0, 0] = 1.0
    assert entanglement.g_concurrence_numeric(product) == 0.0
    D = 5
    assert entanglement.g_concurrence_numeric(np.eye(D) / math.sqrt(D)) == pytest.approx(
        1.0
    )
    omega = graph_basis.graph_family_state(2, 0.5, 0, 0).omega
    # |det| = sin(pi/4)/2 by direct 2x2 computation
    assert entanglement.g_concurrence_numeric(omega) == pytest.approx(
        math.sqrt(2) / 2, abs=1e-12
    )


def test_g_concurrence_closed_form_cases():
    assert entanglement.g_concurrence_closed_form(7, 0.0) == 0.0
    # single-factor product at D=2
    assert entanglement.g_concurrence_closed_form(2, 0.5) == pytest.approx(
        math.sin(math.pi / 4)
    )
    for D in (2, 3, 10, 50, 100):
        assert entanglement.g_concurrence_closed_form(D, 1.0) == pytest.approx(
            1.0, abs=1e-12
        )


def test_g_concurrence_closed_form_matches_numeric():
    for D in range(2, 13):
        for t in np.linspace(0.0, 1.0, 21):
            omega = graph_basis.graph_family_state(D, float(t), 0, 0).omega
            closed = entanglement.g_concurrence_closed_form(D, float(t))
            numeric = entanglement.g_concurrence_numeric(omega)
            assert abs(closed - numeric) < 1e-10


def test_g_concurrence_reference_route():
    # agrees with the plain double route where that route is well conditioned
    for D, t in [(2, 0.5), (5, 0.8), (9, 1.0)]:
        omega = graph_basis.graph_family_state(D, t, 0, 0).omega
        assert entanglement.g_concurrence_reference(D, t) == pytest.approx(
            entanglement.g_concurrence_numeric(omega), abs=1e-12
        )
    assert entanglement.g_concurrence_reference(6, 0.0) == 0.0
    # ill-conditioned point where double LU is off by ~1e-8
    assert entanglement.g_concurrence_reference(30, 0.45) == pytest.approx(
        entanglement.g_concurrence_closed_form(30, 0.45), abs=1e-11
    )


def test_log_derivative_zero_at_one():
    # D=3 by hand: 2 cot(pi/3) + 2 cot(2*pi/3) = 0
    assert entanglement.log_g_concurrence_derivative(3, 1.0) == pytest.approx(0.0, abs=1e-14)
    for D in (2, 17, 64, 121):
        assert abs(entanglement.log_g_concurrence_derivative(D, 1.0)) < 1e-12


def test_log_derivative_pole_and_domain():
    with pytest.raises(ValueError):
        entanglement.log_g_concurrence_derivative(4, 0.0)
    with pytest.raises(ValueError):
        entanglement.log_g_concurrence_derivative(4, 1.2)


def test_log_derivative_matches_finite_difference():
    h = 3e-6
    for D in (2, 5, 11):
        for t in np.linspace(0.15, 0.95, 9):
            analytic = entanglement.log_g_concurrence_derivative(D, float(t))
            fd = (
                math.log(entanglement.g_concurrence_closed_form(D, float(t) + h))
                - math.log(entanglement.g_concurrence_closed_form(D, float(t) - h))
            ) / (2 * h)
            assert analytic == pytest.approx(fd, abs=1e-6)


def test_log_g_concurrence_is_concave():
    # second finite difference of log CG stays negative away from the pole
    h = 1e-4
    for D in (2, 7, 15):
        for t in np.linspace(0.05, 0.95, 10):
            fd2 = (
                math.log(entanglement.g_concurrence_closed_form(D, float(t) + h))
                - 2 * math.log(entanglement.g_concurrence_closed_form(D, float(t)))
                + math.log(entanglement.g_concurrence_closed_form(D, float(t) - h))
            ) / (h * h)
            assert fd2 < 0.0


def test_curve_graph_g_concurrence_increasing():
    grid = np.linspace(0.0, 1.0, 41)
    values = entanglement.curve("graph", 7, "g_concurrence", grid).values
    assert np.all(np.diff(values) > 0.0)


def test_curve_gauss_entropy_monotonicity_split():
    grid = np.linspace(0.0, 1.0, 201)
    diffs2 = np.diff(entanglement.curve("gauss", 2, "entropy", grid).values)
    assert np.all(diffs2 > 0.0)
    diffs5 = np.diff(entanglement.curve("gauss", 5, "entropy", grid).values)
    signs = np.sign(diffs5[diffs5 != 0.0])
    assert np.any(np.diff(signs) != 0.0)  # interior extremum exists


def test_curve_schmidt_coefficient_measure():
    grid = np.linspace(0.0, 1.0, 5)
    result = entanglement.curve("graph", 3, "schmidt_coefficient", grid, k=0)
    assert result.measure == "schmidt_coefficient(0)"
    assert result.values[0] == pytest.approx(1.0)  # product state at t=0
    assert result.values[-1] == pytest.approx(1 / 3, abs=1e-12)


def test_curve_validation():
    grid = np.linspace(0.0, 1.0, 5)
    with pytest.raises(ValueError):
        entanglement.curve("other", 3, "entropy", grid)
    with pytest.raises(ValueError):
        entanglement.curve("graph", 3, "volume", grid)
    with pytest.raises(ValueError):
        entanglement.curve("graph", 3, "schmidt_coefficient", grid)
    with pytest.raises(ValueError):
        entanglement.curve("graph", 3, "entropy", [0.5, 0.5])
    with pytest.raises(ValueError):
        entanglement.curve("graph", 3, "entropy", [0.8, 0.2])


def test_spectra_spread_family_members():
    states = [
        graph_basis.graph_family_state(4, 0.6, m, n).omega
        for m in range(4)
        for n in range(4)
    ]
    assert entanglement.spectra_spread(states) < 1e-12


def test_representative_state_constructions():
    gauss = entanglement.representative_state("gauss", 4, 0.0)
    assert gauss[0, 0] == pytest.approx(1.0, abs=1e-14)
    graph = entanglement.representative_state("graph", 4, 0.0)
    assert np.allclose(np.abs(graph), 0.25)
    with pytest.raises(ValueError):
        entanglement.representative_state("other", 4, 0.0)


def test_bipartition_spectrum_ghz_hand_case():
    # (|000> + |111>)/sqrt(2): every single-site cut has spectrum (1/2, 1/2)
    psi = np.zeros((2, 2, 2), dtype=complex)
    psi[0, 0, 0] = psi[1, 1, 1] = 1 / math.sqrt(2)
    for site in range(3):
        assert np.allclose(entanglement.bipartition_spectrum(psi, (site,)), [0.5, 0.5])
    two_site = entanglement.bipartition_spectrum(psi, (0, 1))
    assert np.allclose(two_site[:2], [0.5, 0.5])
    assert np.allclose(two_site[2:], 0.0)


def test_bipartition_site_validation():
    psi = graph_basis.ghz_graph_state(3, 2, 0.5)
    with pytest.raises(ValueError):
        entanglement.bipartition_spectrum(psi, ())
    with pytest.raises(ValueError):
        entanglement.bipartition_spectrum(psi, (0, 1, 2))
    with pytest.raises(ValueError):
        entanglement.bipartition_spectrum(psi, (3,))


def test_single_site_density_properties():
    psi = graph_basis.ghz_graph_state(3, 3, 0.7)
    rho = entanglement.single_site_density(psi, 1)
    assert rho.shape == (3, 3)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(rho - rho.conj().T)) < 1e-14
