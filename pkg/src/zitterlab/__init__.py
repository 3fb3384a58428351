"""Homogeneous canonical formalism for second-order Lagrangians, on the Bopp spinning particle."""

from .dynamics import (
    FreeMultipliers,
    HelixSolution,
    Trajectory,
    UnitVelocity,
    canonical_rhs,
    eom_residual,
    gauge_mu,
    helix,
    integrate,
    make_initial_state,
    poisson_evolution_residual,
    reduced_field,
    reduced_rhs,
    riewe_form_check,
)
from .hamiltonian import ContactState, contact_H, homogeneous_H
from .jetcalc import ContactJet, JetFunction, JetPoint, grad_jet, project_contact, total_derivative_tau
from .lagrangians import BoppParams, bopp, bopp_lagrangian, contact_density
from .legendre import CanonicalState, ContactMomenta, contact_momenta, momenta_ad, momenta_explicit
from .minkowski import FourVector, ThreeVector, curvature, dot3, dot4

__version__ = "0.1.0"

__all__ = [
    "BoppParams",
    "CanonicalState",
    "ContactJet",
    "ContactMomenta",
    "ContactState",
    "FourVector",
    "FreeMultipliers",
    "HelixSolution",
    "JetFunction",
    "JetPoint",
    "ThreeVector",
    "Trajectory",
    "UnitVelocity",
    "bopp",
    "bopp_lagrangian",
    "canonical_rhs",
    "contact_H",
    "contact_density",
    "contact_momenta",
    "curvature",
    "dot3",
    "dot4",
    "eom_residual",
    "gauge_mu",
    "grad_jet",
    "helix",
    "homogeneous_H",
    "integrate",
    "make_initial_state",
    "momenta_ad",
    "momenta_explicit",
    "poisson_evolution_residual",
    "project_contact",
    "reduced_field",
    "reduced_rhs",
    "riewe_form_check",
    "total_derivative_tau",
]
