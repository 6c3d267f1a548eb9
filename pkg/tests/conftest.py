import pytest

from orbitcompat import (
    DiagSpec,
    IdealPresentation,
    fibre_ideal,
    homogenise_naive,
    orbit_ideal_charvalues,
    potential,
)


@pytest.fixture(scope="session")
def fibration_110():
    """The 4-critical-value fibration data: orbit of diag(1,0,-1), potential
    from H = diag(1,-1,0), fibre over 0 presented two ways."""
    spec = DiagSpec([1, 0, -1])
    orbit = orbit_ideal_charvalues(spec, [0, -1])
    p, q = orbit.presentation.generators
    h = DiagSpec([1, -1, 0])
    f = potential(h, 2).poly
    I = fibre_ideal(orbit, h, 0)
    J = IdealPresentation(I.ctx, [p, p - q, f])
    return {
        "orbit": orbit,
        "p": p,
        "q": q,
        "f": f,
        "I": I,
        "J": J,
        "I_hom": homogenise_naive(I, "t"),
        "J_hom": homogenise_naive(J, "t"),
    }


@pytest.fixture(scope="session")
def fibration_321():
    """The 6-critical-value sibling: orbit of diag(3,-1,-2), same potential."""
    spec = DiagSpec([3, -1, -2])
    orbit = orbit_ideal_charvalues(spec, [1, 2])
    p, q = orbit.presentation.generators
    h = DiagSpec([1, -1, 0])
    f = potential(h, 2).poly
    I = fibre_ideal(orbit, h, 0)
    J = IdealPresentation(I.ctx, [p, p - q, f])
    return {
        "orbit": orbit,
        "p": p,
        "q": q,
        "f": f,
        "I": I,
        "J": J,
        "I_hom": homogenise_naive(I, "t"),
        "J_hom": homogenise_naive(J, "t"),
    }
